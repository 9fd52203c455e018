#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "pvdel/errors.hpp"
#include "pvdel/io.hpp"

using namespace pvdel;
namespace fs = std::filesystem;

TEST_CASE("hex helpers") {
    const Bytes data = {0x00, 0xAB, 0xFF};
    CHECK(bytes_to_hex(data) == "00abff");
    CHECK(hex_to_bytes("00abff") == data);
    CHECK(hex_to_bytes("00ABFF") == data);
    CHECK_THROWS_AS(hex_to_bytes("abc"), FormatError);
    CHECK_THROWS_AS(hex_to_bytes("zz"), FormatError);
}

TEST_CASE("atomic file round trip") {
    const fs::path dir = fs::temp_directory_path() / "pvdel_io_test";
    fs::create_directories(dir);
    const fs::path path = dir / "blob.bin";
    const Bytes data = {1, 2, 3, 4, 5};
    write_file_atomic(path, data);
    CHECK(read_file(path) == data);
    CHECK(!fs::exists(path.string() + ".tmp"));
    write_text_atomic(path, "hello");
    CHECK(read_text(path) == "hello");
    fs::remove_all(dir);
}

TEST_CASE("key files round trip, vk files omit the signing key") {
    Rng rng(Rng::Seed{});
    const SigParams params = SigParams::make(4, "sha256", 32);
    const SigKeyPair keys = sig_gen(params, rng);

    const std::string full = key_file_json(keys.vk, &keys.sigk);
    const auto [vk1, sigk1] = parse_key_file(full);
    CHECK(vk1.to_bits() == keys.vk.to_bits());
    REQUIRE(sigk1.has_value());
    CHECK(sigk1->to_bits() == keys.sigk.to_bits());

    const std::string pub = key_file_json(keys.vk, nullptr);
    const auto [vk2, sigk2] = parse_key_file(pub);
    CHECK(vk2.to_bits() == keys.vk.to_bits());
    CHECK(!sigk2.has_value());
    CHECK(pub.find("sigk") == std::string::npos);

    CHECK_THROWS_AS(parse_key_file("{}"), FormatError);
    CHECK_THROWS_AS(parse_key_file("not json"), FormatError);
}

TEST_CASE("base key files") {
    const Bytes material = {9, 9, 9};
    const std::string text = base_key_json("ske-hash", material);
    const auto [tag, back] = parse_base_key(text);
    CHECK(tag == "ske-hash");
    CHECK(back == material);
}

TEST_CASE("certificate files round trip") {
    Rng rng(Rng::Seed{});
    const PvdParams params = PvdParams::make(6, "sha256", 32);
    const auto base = make_base_scheme(params.base);
    const auto [pk, sk] = base->gen(params.lambda, rng);
    auto [vks, cts] = pvd_enc_str(params, pk, BitString::from_string("101"), rng);
    const auto certs = pvd_del_str(params, std::move(cts), rng);

    const std::string text = cert_file_text(certs);
    const auto parsed = parse_cert_file(params.sig, text);
    REQUIRE(parsed.size() == certs.size());
    for (std::size_t i = 0; i < certs.size(); ++i) {
        CHECK(parsed[i].x_prime == certs[i].x_prime);
        CHECK(parsed[i].sigma_prime == certs[i].sigma_prime);
        CHECK(pvd_vrfy(vks[i], parsed[i]));
    }

    CHECK_THROWS_AS(parse_cert_file(params.sig, "abcd\n"), FormatError);
    CHECK_THROWS_AS(parse_cert_file(params.sig, ""), FormatError);
}

TEST_CASE("ciphertext container round trip") {
    Rng rng(Rng::Seed{});
    const PvdParams params = PvdParams::make(5, "sha256", 16);
    const auto base = make_base_scheme(params.base);
    const auto [pk, sk] = base->gen(params.lambda, rng);
    auto [vks, cts] = pvd_enc_str(params, pk, BitString::from_string("01"), rng);

    const Bytes blob = ciphertext_container(params, cts);
    const auto [params2, cts2] = parse_ciphertext_container(blob);
    CHECK(params2.lambda == params.lambda);
    CHECK(params2.sig == params.sig);
    CHECK(params2.base == params.base);
    REQUIRE(cts2.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(cts2[i].psi.to_json() == cts[i].psi.to_json());
        CHECK(cts2[i].base_ct == cts[i].base_ct);
    }

    // Same bytes on re-serialization.
    CHECK(ciphertext_container(params2, cts2) == blob);

    // Bad magic and truncation.
    Bytes bad = blob;
    bad[0] = 'X';
    CHECK_THROWS_AS(parse_ciphertext_container(bad), FormatError);
    Bytes cut(blob.begin(), blob.begin() + blob.size() / 2);
    CHECK_THROWS_AS(parse_ciphertext_container(cut), FormatError);
    Bytes extra = blob;
    extra.push_back(0);
    CHECK_THROWS_AS(parse_ciphertext_container(extra), FormatError);
}

TEST_CASE("base ciphertext files carry magic and scheme tag") {
    const Bytes ct = {5, 6, 7};
    const Bytes blob = base_ct_file(0x01, ct);
    CHECK(blob.size() == ct.size() + 5);
    const auto [tag, body] = parse_base_ct_file(blob);
    CHECK(tag == 0x01);
    CHECK(body == ct);
    Bytes bad = blob;
    bad[1] = 'x';
    CHECK_THROWS_AS(parse_base_ct_file(bad), FormatError);
}
