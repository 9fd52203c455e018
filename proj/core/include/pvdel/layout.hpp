#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pvdel {

struct Register {
    std::string name;
    std::size_t offset = 0;
    std::size_t width = 0;
};

/// Named, contiguous, disjoint qubit registers covering the full state width.
class RegisterLayout {
public:
    RegisterLayout() = default;
    /// Registers laid out left to right in the given order.
    explicit RegisterLayout(std::vector<std::pair<std::string, std::size_t>> regs);

    std::size_t width() const { return width_; }
    bool has(std::string_view name) const;
    const Register& at(std::string_view name) const;
    const std::vector<Register>& registers() const { return regs_; }
    /// Qubit indices of a register, in order.
    std::vector<std::size_t> qubits(std::string_view name) const;
    /// All qubit indices 0..width-1.
    std::vector<std::size_t> all_qubits() const;

    bool operator==(const RegisterLayout& other) const;

private:
    std::vector<Register> regs_;
    std::size_t width_ = 0;
};

} // namespace pvdel
