#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvdel/state.hpp"

namespace pvdel {

/// Dense Hermitian density matrix over n <= density cap qubits, row-major.
/// Basis index packs the kept qubits MSB-first in their listed order.
class DensityMatrix {
public:
    DensityMatrix(std::size_t qubits, std::vector<std::complex<double>> row_major);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::complex<double>>& data() const { return data_; }
    std::complex<double> at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    double trace_real() const;
    bool is_hermitian(double tol = kNormTol) const;
    double min_eigenvalue() const;
    /// Hermitian within tol, unit trace within tol, eigenvalues >= -tol.
    void validate(double tol = kNormTol) const;

private:
    std::size_t qubits_;
    std::size_t dim_;
    std::vector<std::complex<double>> data_;
};

/// Incrementally accumulates sum_k w_k Tr_discard |psi_k><psi_k| without
/// materializing the ensemble. Used by the exact security oracles.
class DensityAccumulator {
public:
    explicit DensityAccumulator(std::size_t qubits, const Limits& limits = {});

    /// Adds weight * Tr_discard |pure><pure| keeping the listed qubits.
    void add(double weight, const SparseState& pure, std::span<const std::size_t> keep_qubits);
    /// Convenience: keep every qubit of the state.
    void add(double weight, const SparseState& pure);

    double mass() const { return mass_; }
    /// Accumulated matrix scaled to unit trace; throws if no mass was added.
    DensityMatrix normalized() const;
    DensityMatrix raw() const;

private:
    std::size_t qubits_;
    std::size_t dim_;
    double mass_ = 0.0;
    std::vector<std::complex<double>> data_;
};

/// rho = sum_k p_k Tr_discard |psi_k><psi_k|; probabilities must sum to 1
/// within tolerance and the kept width must fit the density cap.
DensityMatrix to_density_matrix(const std::vector<std::pair<double, SparseState>>& ensemble,
                                const std::vector<std::string>& keep_registers,
                                const Limits& limits = {});
DensityMatrix to_density_matrix(const std::vector<std::pair<double, SparseState>>& ensemble,
                                std::span<const std::size_t> keep_qubits,
                                const Limits& limits = {});

/// (1/2) sum |eig(rho0 - rho1)| via Hermitian eigendecomposition.
double trace_distance(const DensityMatrix& rho0, const DensityMatrix& rho1);

} // namespace pvdel
