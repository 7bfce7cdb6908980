#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spiderweb::qgates {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 5;

/// Dense row-major operator on n <= 5 qubits. Qubit 0 is the leftmost tensor
/// factor, i.e. the most significant bit of a basis index.
class Unitary {
public:
    static Unitary identity(int qubits);
    static Unitary zero(int qubits);
    static Unitary from_rows(int qubits, std::vector<Complex> entries);

    int qubits() const { return qubits_; }
    std::size_t dim() const { return std::size_t{1} << qubits_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim() + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim() + col]; }
    const std::vector<Complex>& entries() const { return entries_; }

    Unitary adjoint() const;
    Unitary kron(const Unitary& rhs) const;

    friend Unitary operator*(const Unitary& a, const Unitary& b);
    friend Unitary operator*(Complex s, const Unitary& u);

    /// max |a_ij - b_ij|
    double max_abs_diff(const Unitary& other) const;
    /// max |(U†U - I)_ij|
    double unitarity_residual() const;
    bool is_diagonal(double tol = 0.0) const;

    std::vector<Complex> apply(const std::vector<Complex>& state) const;

private:
    Unitary(int qubits, std::vector<Complex> entries);

    int qubits_ = 0;
    std::vector<Complex> entries_;
};

}  // namespace spiderweb::qgates
