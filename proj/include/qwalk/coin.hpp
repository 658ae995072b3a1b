#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace qwalk {

using cplx = std::complex<double>;

/// Normalized pure state of the two-dimensional coin space.
///
/// Amplitudes are stored with their global phase; equality of states is
/// usually wanted only up to that phase, see same_up_to_phase().
class CoinState {
public:
    CoinState() : a0_(1.0, 0.0), a1_(0.0, 0.0) {}

    /// Construct from amplitudes on |0> and |1>. Inputs whose norm deviates
    /// from one by less than 1e-3 (text-entered decimals) are renormalized;
    /// anything worse is rejected.
    CoinState(cplx a0, cplx a1);

    cplx a0() const { return a0_; }
    cplx a1() const { return a1_; }

private:
    cplx a0_, a1_;
};

/// Spherical coordinates of a pure coin state. theta in [0, pi],
/// phi in [0, 2*pi); phi is canonicalized to 0 at the poles.
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// (sigma_x, sigma_y, sigma_z) expectation triplet of a coin density.
/// Unit length for pure states, shorter for mixed ones.
struct QubitVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const QubitVector& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

/// Rank-structured mixed coin state r|s><s| + (1-r)|s_perp><s_perp|.
class CoinDensity {
public:
    CoinDensity() : r_(1.0) {}
    CoinDensity(double r, CoinState basis);

    static CoinDensity pure(CoinState s) { return CoinDensity(1.0, s); }

    double r() const { return r_; }
    const CoinState& basis() const { return basis_; }

private:
    double r_;
    CoinState basis_;
};

/// The orthogonal companion state (-conj(a1), conj(a0)).
CoinState perp(const CoinState& s);

/// <a|b> with the conjugate on the left argument.
cplx inner(const CoinState& a, const CoinState& b);

/// True when |<a|b>| = 1 within tol, i.e. the states differ only by a
/// global phase.
bool same_up_to_phase(const CoinState& a, const CoinState& b, double tol = 1e-9);

QubitVector qubit_vector(const CoinState& s);
QubitVector qubit_vector(const CoinDensity& rho);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. Out-of-range angles are
/// rejected.
CoinState from_bloch(const BlochAngles& angles);

/// Inverse of from_bloch up to global phase.
BlochAngles to_bloch(const CoinState& s);

/// Reference states addressable by token: 0, 1, h, v, d, a, f.
CoinState named_state(std::string_view name);

/// Parse the textual state forms accepted in configs and on the command
/// line: a named token, "bloch:theta,phi" (radians), or four decimals
/// "re0,im0,re1,im1".
CoinState parse_state(std::string_view text);

/// Parse a home density: either a plain state (r = 1) or "mix:r,<state>".
CoinDensity parse_density(std::string_view text);

/// Canonical (r, basis) form of the two-state mixture
/// w1|s1><s1| + w2|s2><s2| with w1 + w2 = 1.
CoinDensity mix(double w1, const CoinState& s1, double w2, const CoinState& s2);

std::string format_state(const CoinState& s);

}  // namespace qwalk
