#include "pvdel/layout.hpp"

#include <numeric>
#include <stdexcept>

namespace pvdel {

RegisterLayout::RegisterLayout(std::vector<std::pair<std::string, std::size_t>> regs) {
    std::size_t offset = 0;
    for (auto& [name, width] : regs) {
        if (name.empty()) throw std::invalid_argument("register name must be non-empty");
        if (has(name)) throw std::invalid_argument("duplicate register name: " + name);
        regs_.push_back({std::move(name), offset, width});
        offset += width;
    }
    width_ = offset;
}

bool RegisterLayout::has(std::string_view name) const {
    for (const auto& r : regs_) {
        if (r.name == name) return true;
    }
    return false;
}

const Register& RegisterLayout::at(std::string_view name) const {
    for (const auto& r : regs_) {
        if (r.name == name) return r;
    }
    throw std::invalid_argument("no such register: " + std::string(name));
}

std::vector<std::size_t> RegisterLayout::qubits(std::string_view name) const {
    const Register& r = at(name);
    std::vector<std::size_t> idx(r.width);
    std::iota(idx.begin(), idx.end(), r.offset);
    return idx;
}

std::vector<std::size_t> RegisterLayout::all_qubits() const {
    std::vector<std::size_t> idx(width_);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
    if (regs_.size() != other.regs_.size()) return false;
    for (std::size_t i = 0; i < regs_.size(); ++i) {
        if (regs_[i].name != other.regs_[i].name || regs_[i].offset != other.regs_[i].offset ||
            regs_[i].width != other.regs_[i].width) {
            return false;
        }
    }
    return true;
}

} // namespace pvdel
