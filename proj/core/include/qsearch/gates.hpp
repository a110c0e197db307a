#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace qsearch {

using Complex = std::complex<double>;

/// Dense square complex matrix whose dimension is a power of two
/// (2 for single-qubit gates, 4 for two-qubit, 8 for three-qubit).
class GateMatrix {
  public:
    explicit GateMatrix(std::size_t dim);
    GateMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static GateMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex &at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    GateMatrix adjoint() const;
    GateMatrix multiply(const GateMatrix &rhs) const;

    /// Largest entry-wise deviation from `other`.
    double max_abs_diff(const GateMatrix &other) const;
    bool approx_equal(const GateMatrix &other, double tol) const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

enum class Gate { H, X, Z, RX, RY, RZ, CNOT, CRX, CRY, CRZ, RXX, RYY, RZZ, CSWAP };

/// Generalized single-qubit rotation R(theta, phi); R(theta, 0) is an X
/// rotation and R(theta, pi/2) a Y rotation.
GateMatrix single_rotation(double theta, double phi);

/// Catalog lookup. `theta` must be supplied exactly for the parameterized
/// kinds (RX, RY, RZ, CRX, CRY, CRZ, RXX, RYY, RZZ) and omitted otherwise.
GateMatrix named_gate(Gate kind, std::optional<double> theta = std::nullopt);

bool gate_is_parameterized(Gate kind);

/// True iff the max-entry deviation of g†g from the identity is <= tol.
bool is_unitary(const GateMatrix &g, double tol);

} // namespace qsearch
