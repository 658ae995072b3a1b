#include "qwalk/mat2.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

Mat2 Mat2::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

bool Mat2::is_hermitian(double tol) const {
    return std::abs(m00.imag()) <= tol && std::abs(m11.imag()) <= tol &&
           std::abs(m01 - std::conj(m10)) <= tol;
}

std::array<cplx, 2> Mat2::apply(cplx a0, cplx a1) const {
    return {m00 * a0 + m01 * a1, m10 * a0 + m11 * a1};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Mat2 Mat2::operator-(const Mat2& o) const {
    return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
}

Mat2 Mat2::operator*(cplx k) const { return {m00 * k, m01 * k, m10 * k, m11 * k}; }

double Mat2::norm() const {
    return std::sqrt(std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11));
}

CoinState canonical_phase(const CoinState& s) {
    cplx lead = s.a0();
    if (std::abs(lead) <= 1e-12) lead = s.a1();
    const cplx phase = lead / std::abs(lead);
    return CoinState(s.a0() / phase, s.a1() / phase);
}

HermitianEigen eigen_hermitian(const Mat2& m) {
    if (!m.is_hermitian(1e-9)) {
        throw std::invalid_argument("eigen_hermitian: matrix is not Hermitian");
    }
    const double a = m.m00.real();
    const double b = m.m11.real();
    const cplx c = 0.5 * (m.m01 + std::conj(m.m10));
    const double mean = 0.5 * (a + b);
    const double half = 0.5 * (a - b);
    const double disc = std::sqrt(half * half + std::norm(c));

    HermitianEigen out;
    out.max_value = mean + disc;
    out.min_value = mean - disc;

    if (disc <= 1e-300) {
        out.max_vector = CoinState(1.0, 0.0);
        out.min_vector = CoinState(0.0, 1.0);
        return out;
    }

    // Two algebraically equivalent eigenvector forms; pick the one whose
    // pivot entry is larger to avoid cancellation.
    cplx v0, v1;
    if (std::abs(out.max_value - b) >= std::abs(out.max_value - a)) {
        v0 = out.max_value - b;
        v1 = std::conj(c);
    } else {
        v0 = c;
        v1 = out.max_value - a;
    }
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    out.max_vector = canonical_phase(CoinState(v0 / n, v1 / n));
    out.min_vector = canonical_phase(perp(out.max_vector));
    return out;
}

Mat2 basis_change(const CoinState& c, const CoinState& s) {
    const CoinState cp = perp(c);
    const CoinState sp = perp(s);
    return {c.a0() * std::conj(s.a0()) + cp.a0() * std::conj(sp.a0()),
            c.a0() * std::conj(s.a1()) + cp.a0() * std::conj(sp.a1()),
            c.a1() * std::conj(s.a0()) + cp.a1() * std::conj(sp.a0()),
            c.a1() * std::conj(s.a1()) + cp.a1() * std::conj(sp.a1())};
}

Mat2 density_matrix(const CoinDensity& rho) {
    const CoinState& s = rho.basis();
    const CoinState sp = perp(s);
    const double r = rho.r();
    const double q = 1.0 - r;
    return {r * std::norm(s.a0()) + q * std::norm(sp.a0()),
            r * s.a0() * std::conj(s.a1()) + q * sp.a0() * std::conj(sp.a1()),
            r * s.a1() * std::conj(s.a0()) + q * sp.a1() * std::conj(sp.a0()),
            r * std::norm(s.a1()) + q * std::norm(sp.a1())};
}

}  // namespace qwalk
