#pragma once

#include <array>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Dense 2x2 complex matrix, row-major. Small enough that everything is
/// by value.
struct Mat2 {
    cplx m00{}, m01{}, m10{}, m11{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx trace() const { return m00 + m11; }
    cplx det() const { return m00 * m11 - m01 * m10; }

    Mat2 adjoint() const;
    bool is_hermitian(double tol = 1e-10) const;

    /// Matrix applied to the amplitude pair (a0, a1).
    std::array<cplx, 2> apply(cplx a0, cplx a1) const;

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator*(cplx k) const;

    /// Frobenius norm.
    double norm() const;
};

/// Closed-form eigendecomposition of a Hermitian 2x2 matrix.
/// Eigenvector phases are canonicalized so the first component of
/// significant magnitude is real positive; max_vector and min_vector are
/// exactly orthogonal by construction.
struct HermitianEigen {
    double min_value = 0.0;
    double max_value = 0.0;
    CoinState min_vector;
    CoinState max_vector;
};

HermitianEigen eigen_hermitian(const Mat2& m);

/// |c><s| + |c_perp><s_perp| written in the computational basis.
Mat2 basis_change(const CoinState& c, const CoinState& s);

/// The 2x2 matrix of a CoinDensity in the computational basis.
Mat2 density_matrix(const CoinDensity& rho);

/// Phase-normalize so the first component with |.| > 1e-12 is real
/// positive.
CoinState canonical_phase(const CoinState& s);

}  // namespace qwalk
