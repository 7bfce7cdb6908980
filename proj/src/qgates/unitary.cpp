#include "spiderweb/qgates/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "spiderweb/qgates/kernels.hpp"

namespace spiderweb::qgates {

Unitary::Unitary(int qubits, std::vector<Complex> entries) : qubits_(qubits), entries_(std::move(entries)) {
    if (qubits < 0 || qubits > kMaxQubits)
        throw std::invalid_argument(fmt::format("operators span 0..{} qubits (got {})", kMaxQubits, qubits));
    if (entries_.size() != dim() * dim())
        throw std::invalid_argument(fmt::format("{} entries for a {}x{} operator", entries_.size(), dim(), dim()));
}

Unitary Unitary::zero(int qubits) {
    if (qubits < 0 || qubits > kMaxQubits)
        throw std::invalid_argument(fmt::format("operators span 0..{} qubits (got {})", kMaxQubits, qubits));
    const std::size_t d = std::size_t{1} << qubits;
    return Unitary(qubits, std::vector<Complex>(d * d));
}

Unitary Unitary::identity(int qubits) {
    Unitary u = zero(qubits);
    for (std::size_t i = 0; i < u.dim(); ++i) u(i, i) = 1.0;
    return u;
}

Unitary Unitary::from_rows(int qubits, std::vector<Complex> entries) { return Unitary(qubits, std::move(entries)); }

Unitary Unitary::adjoint() const {
    Unitary out = zero(qubits_);
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Unitary Unitary::kron(const Unitary& rhs) const {
    Unitary out = zero(qubits_ + rhs.qubits_);
    const std::size_t rd = rhs.dim();
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            for (std::size_t rr = 0; rr < rd; ++rr)
                for (std::size_t rc = 0; rc < rd; ++rc) out(r * rd + rr, c * rd + rc) = (*this)(r, c) * rhs(rr, rc);
    return out;
}

Unitary operator*(const Unitary& a, const Unitary& b) {
    if (a.qubits_ != b.qubits_)
        throw std::invalid_argument(fmt::format("cannot multiply {}-qubit and {}-qubit operators", a.qubits_, b.qubits_));
    Unitary out = Unitary::zero(a.qubits_);
    kernels::matmul(a.entries_.data(), b.entries_.data(), out.entries_.data(), a.dim());
    return out;
}

Unitary operator*(Complex s, const Unitary& u) {
    Unitary out = u;
    for (auto& e : out.entries_) e *= s;
    return out;
}

double Unitary::max_abs_diff(const Unitary& other) const {
    if (other.qubits_ != qubits_) throw std::invalid_argument("operator dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

double Unitary::unitarity_residual() const { return (adjoint() * *this).max_abs_diff(identity(qubits_)); }

bool Unitary::is_diagonal(double tol) const {
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            if (r != c && std::abs((*this)(r, c)) > tol) return false;
    return true;
}

std::vector<Complex> Unitary::apply(const std::vector<Complex>& state) const {
    if (state.size() != dim()) throw std::invalid_argument("state dimension differs from operator");
    std::vector<Complex> out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) out[r] += (*this)(r, c) * state[c];
    return out;
}

}  // namespace spiderweb::qgates
