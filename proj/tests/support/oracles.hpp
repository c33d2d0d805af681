#pragma once

#include <vector>

#include "ddeq/zpoly.hpp"

// Independent oracles kept apart from the implementation paths they check.
namespace ddeq::testoracle {

/// Exact Gaussian elimination over the Scalar field. Pivots must be
/// invertible (single-term) constants; rows are swapped to find one.
inline std::vector<Scalar> solve_linear_system(
    std::vector<std::vector<Scalar>> m, std::vector<Scalar> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        bool found = false;
        for (std::size_t row = col; row < n; ++row) {
            if (m[row][col].is_single_term()) {
                pivot = row;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("no invertible pivot");
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);

        Scalar inv = m[col][col].inverse();
        for (std::size_t k = col; k < n; ++k) m[col][k] *= inv;
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].structurally_zero()) continue;
            Scalar factor = m[row][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

/// Polynomial solution of 2 f' - a f = H by undetermined coefficients: the
/// column for z^k is the ODE applied to the basis monomial z^k, and the
/// resulting square system is solved by exact elimination. Fully independent
/// of the closed recursion in the solver.
inline ZPoly ode_undetermined_coefficients(const Scalar& a, const ZPoly& h) {
    const std::size_t n = std::size_t(h.degree()) + 1;
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (std::size_t k = 0; k < n; ++k) {
        ZPoly basis = ZPoly::monomial(Scalar::one(), k);
        ZPoly image = basis.derivative() * Scalar::from_int(2) - basis * a;
        for (std::size_t row = 0; row < n; ++row) m[row][k] = image.coeff(row);
    }
    std::vector<Scalar> rhs(n);
    for (std::size_t row = 0; row < n; ++row) rhs[row] = h.coeff(row);
    return ZPoly(solve_linear_system(std::move(m), std::move(rhs)));
}

} // namespace ddeq::testoracle
