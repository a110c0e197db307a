#include "qsearch/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qsearch {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

GateMatrix::GateMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (!is_power_of_two(dim)) {
        throw std::invalid_argument("gate dimension must be a power of two");
    }
}

GateMatrix::GateMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : GateMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("gate matrix must be square");
        }
        std::size_t c = 0;
        for (const auto &entry : row) {
            at(r, c++) = entry;
        }
        ++r;
    }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
    GateMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

GateMatrix GateMatrix::adjoint() const {
    GateMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

GateMatrix GateMatrix::multiply(const GateMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("gate dimension mismatch in multiply");
    }
    GateMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex v = at(r, k);
            if (v == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

double GateMatrix::max_abs_diff(const GateMatrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("gate dimension mismatch in comparison");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

bool GateMatrix::approx_equal(const GateMatrix &other, double tol) const {
    return max_abs_diff(other) <= tol;
}

GateMatrix single_rotation(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("rotation angles must be finite");
    }
    // Putting exp(-i phi) in both off-diagonal entries is only unitary at
    // phi = 0 or pi; the lower-left phase must be conjugated. This form
    // satisfies R(theta, 0) = RX and R(theta, pi/2) = RY.
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return GateMatrix{{c, -kI * std::exp(-kI * phi) * s},
                      {-kI * std::exp(kI * phi) * s, c}};
}

bool gate_is_parameterized(Gate kind) {
    switch (kind) {
    case Gate::RX:
    case Gate::RY:
    case Gate::RZ:
    case Gate::CRX:
    case Gate::CRY:
    case Gate::CRZ:
    case Gate::RXX:
    case Gate::RYY:
    case Gate::RZZ:
        return true;
    default:
        return false;
    }
}

GateMatrix named_gate(Gate kind, std::optional<double> theta) {
    if (gate_is_parameterized(kind)) {
        if (!theta) {
            throw std::invalid_argument("gate requires a rotation angle");
        }
        if (!std::isfinite(*theta)) {
            throw std::invalid_argument("rotation angle must be finite");
        }
    } else if (theta) {
        throw std::invalid_argument("gate takes no rotation angle");
    }

    const double t = theta.value_or(0.0);
    const double c = std::cos(t / 2.0);
    const double s = std::sin(t / 2.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    switch (kind) {
    case Gate::H:
        return GateMatrix{{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
    case Gate::X:
        return GateMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Gate::Z:
        return GateMatrix{{1.0, 0.0}, {0.0, -1.0}};
    case Gate::RX:
        return GateMatrix{{c, -kI * s}, {-kI * s, c}};
    case Gate::RY:
        return GateMatrix{{c, -s}, {s, c}};
    case Gate::RZ:
        // Both diagonal entries carry exp(-i t/2): a global phase times the
        // identity.
        return GateMatrix{{std::exp(-kI * (t / 2.0)), 0.0}, {0.0, std::exp(-kI * (t / 2.0))}};
    case Gate::CNOT:
        return GateMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
    case Gate::CRX:
        // -i sin off-diagonals in the controlled block; plain -sin in both
        // entries would not be unitary.
        return GateMatrix{
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, -kI * s}, {0, 0, -kI * s, c}};
    case Gate::CRY:
        return GateMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, -s}, {0, 0, s, c}};
    case Gate::CRZ: {
        const Complex p = std::exp(kI * (t / 2.0));
        return GateMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, p, 0}, {0, 0, 0, p}};
    }
    case Gate::RXX:
        return GateMatrix{{c, 0, 0, -kI * s},
                          {0, c, -kI * s, 0},
                          {0, -kI * s, c, 0},
                          {-kI * s, 0, 0, c}};
    case Gate::RYY:
        return GateMatrix{{c, 0, 0, kI * s},
                          {0, c, -kI * s, 0},
                          {0, -kI * s, c, 0},
                          {kI * s, 0, 0, c}};
    case Gate::RZZ: {
        const Complex p = std::exp(-kI * (t / 2.0));
        GateMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i) {
            m.at(i, i) = p;
        }
        return m;
    }
    case Gate::CSWAP: {
        // Permutation exchanging basis states 3 and 5.
        GateMatrix m = GateMatrix::identity(8);
        m.at(3, 3) = 0.0;
        m.at(5, 5) = 0.0;
        m.at(3, 5) = 1.0;
        m.at(5, 3) = 1.0;
        return m;
    }
    }
    throw std::invalid_argument("unknown gate kind");
}

bool is_unitary(const GateMatrix &g, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    return g.adjoint().multiply(g).approx_equal(GateMatrix::identity(g.dim()), tol);
}

} // namespace qsearch
