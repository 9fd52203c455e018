#include "pvdel/density.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

#include "pvdel/errors.hpp"

namespace pvdel {

namespace {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                    Eigen::RowMajor>;

Eigen::Map<const ComplexMatrix> as_eigen(const std::vector<std::complex<double>>& data,
                                         std::size_t dim) {
    return Eigen::Map<const ComplexMatrix>(data.data(), static_cast<Eigen::Index>(dim),
                                           static_cast<Eigen::Index>(dim));
}

} // namespace

DensityMatrix::DensityMatrix(std::size_t qubits, std::vector<std::complex<double>> row_major)
    : qubits_(qubits), dim_(std::size_t{1} << qubits), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("density matrix data size does not match dimension");
    }
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i).real();
    return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
        }
    }
    return true;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(as_eigen(data_, dim_),
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double tol) const {
    if (!is_hermitian(tol)) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(trace_real() - 1.0) > tol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (min_eigenvalue() < -tol) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

DensityAccumulator::DensityAccumulator(std::size_t qubits, const Limits& limits)
    : qubits_(qubits), dim_(std::size_t{1} << qubits), data_(dim_ * dim_, {0.0, 0.0}) {
    if (qubits > limits.density_cap_qubits) {
        throw CapExceeded("density matrix cap exceeded: " + std::to_string(qubits) + " qubits");
    }
}

void DensityAccumulator::add(double weight, const SparseState& pure,
                             std::span<const std::size_t> keep_qubits) {
    if (keep_qubits.size() != qubits_) {
        throw std::invalid_argument("kept qubit count does not match accumulator");
    }
    for (std::size_t q : keep_qubits) {
        if (q >= pure.layout().width()) throw std::invalid_argument("kept qubit out of range");
    }

    // Group support labels by the value of the discarded qubits; within a
    // group accumulate the outer product of kept-index amplitudes.
    std::vector<bool> kept(pure.layout().width(), false);
    for (std::size_t q : keep_qubits) kept[q] = true;
    std::vector<std::size_t> discard;
    for (std::size_t q = 0; q < pure.layout().width(); ++q) {
        if (!kept[q]) discard.push_back(q);
    }

    std::map<BitString, std::vector<std::pair<std::size_t, std::complex<double>>>> groups;
    for (const auto& [label, amp] : pure.amplitudes()) {
        BitString rest(discard.size());
        for (std::size_t k = 0; k < discard.size(); ++k) rest.set_bit(k, label.bit(discard[k]));
        std::size_t idx = 0;
        for (std::size_t k = 0; k < keep_qubits.size(); ++k) {
            idx = (idx << 1) | (label.bit(keep_qubits[k]) ? 1u : 0u);
        }
        groups[std::move(rest)].emplace_back(idx, amp);
    }

    for (const auto& [rest, entries] : groups) {
        for (const auto& [ri, ai] : entries) {
            for (const auto& [rj, aj] : entries) {
                data_[ri * dim_ + rj] += weight * ai * std::conj(aj);
            }
        }
    }
    mass_ += weight;
}

void DensityAccumulator::add(double weight, const SparseState& pure) {
    const auto all = pure.layout().all_qubits();
    add(weight, pure, all);
}

DensityMatrix DensityAccumulator::normalized() const {
    if (mass_ <= 0.0) throw std::invalid_argument("no mass accumulated");
    std::vector<std::complex<double>> scaled(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) scaled[i] = data_[i] / mass_;
    return DensityMatrix(qubits_, std::move(scaled));
}

DensityMatrix DensityAccumulator::raw() const {
    return DensityMatrix(qubits_, data_);
}

DensityMatrix to_density_matrix(const std::vector<std::pair<double, SparseState>>& ensemble,
                                std::span<const std::size_t> keep_qubits, const Limits& limits) {
    if (ensemble.empty()) throw std::invalid_argument("empty ensemble");
    double total = 0.0;
    for (const auto& [p, state] : ensemble) total += p;
    if (std::abs(total - 1.0) > kNormTol) {
        throw std::invalid_argument("ensemble probabilities do not sum to 1");
    }
    DensityAccumulator acc(keep_qubits.size(), limits);
    for (const auto& [p, state] : ensemble) acc.add(p, state, keep_qubits);
    return acc.raw();
}

DensityMatrix to_density_matrix(const std::vector<std::pair<double, SparseState>>& ensemble,
                                const std::vector<std::string>& keep_registers,
                                const Limits& limits) {
    if (ensemble.empty()) throw std::invalid_argument("empty ensemble");
    std::vector<std::size_t> qubits;
    for (const auto& name : keep_registers) {
        for (std::size_t q : ensemble.front().second.layout().qubits(name)) qubits.push_back(q);
    }
    return to_density_matrix(ensemble, std::span<const std::size_t>(qubits), limits);
}

double trace_distance(const DensityMatrix& rho0, const DensityMatrix& rho1) {
    if (rho0.dim() != rho1.dim()) throw std::invalid_argument("dimension mismatch");
    if (!rho0.is_hermitian() || !rho1.is_hermitian()) {
        throw std::invalid_argument("trace_distance requires Hermitian inputs");
    }
    std::vector<std::complex<double>> diff(rho0.data().size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = rho0.data()[i] - rho1.data()[i];

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(as_eigen(diff, rho0.dim()),
                                                        Eigen::EigenvaluesOnly);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        sum += std::abs(solver.eigenvalues()[i]);
    }
    return 0.5 * sum;
}

} // namespace pvdel
