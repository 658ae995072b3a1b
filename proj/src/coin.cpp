#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

namespace {

constexpr double kRenormWindow = 1e-3;

double norm2(cplx a0, cplx a1) { return std::norm(a0) + std::norm(a1); }

}  // namespace

CoinState::CoinState(cplx a0, cplx a1) : a0_(a0), a1_(a1) {
    const double n = std::sqrt(norm2(a0, a1));
    if (std::abs(n - 1.0) >= kRenormWindow) {
        throw std::invalid_argument("coin state is not normalized: |amplitudes| = " +
                                    std::to_string(n));
    }
    a0_ /= n;
    a1_ /= n;
}

double QubitVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

CoinDensity::CoinDensity(double r, CoinState basis) : r_(r), basis_(basis) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("mixing fraction r must lie in [0,1]");
    }
}

CoinState perp(const CoinState& s) {
    return CoinState(-std::conj(s.a1()), std::conj(s.a0()));
}

cplx inner(const CoinState& a, const CoinState& b) {
    return std::conj(a.a0()) * b.a0() + std::conj(a.a1()) * b.a1();
}

bool same_up_to_phase(const CoinState& a, const CoinState& b, double tol) {
    return std::abs(std::abs(inner(a, b)) - 1.0) <= tol;
}

QubitVector qubit_vector(const CoinState& s) {
    const cplx cross = std::conj(s.a0()) * s.a1();
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(s.a0()) - std::norm(s.a1())};
}

QubitVector qubit_vector(const CoinDensity& rho) {
    const QubitVector v = qubit_vector(rho.basis());
    const double scale = 2.0 * rho.r() - 1.0;
    return {scale * v.x, scale * v.y, scale * v.z};
}

CoinState from_bloch(const BlochAngles& angles) {
    const double pi = std::numbers::pi;
    if (!(angles.theta >= 0.0 && angles.theta <= pi)) {
        throw std::invalid_argument("theta must lie in [0, pi]");
    }
    if (!(angles.phi >= 0.0 && angles.phi < 2.0 * pi)) {
        throw std::invalid_argument("phi must lie in [0, 2*pi)");
    }
    if (angles.theta < 1e-15) return CoinState(1.0, 0.0);
    if (pi - angles.theta < 1e-15) return CoinState(0.0, 1.0);
    return CoinState(std::cos(angles.theta / 2.0),
                     std::polar(std::sin(angles.theta / 2.0), angles.phi));
}

BlochAngles to_bloch(const CoinState& s) {
    const QubitVector v = qubit_vector(s);
    const double theta = std::acos(std::clamp(v.z, -1.0, 1.0));
    double phi = 0.0;
    if (theta > 1e-12 && std::numbers::pi - theta > 1e-12) {
        phi = std::atan2(v.y, v.x);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    }
    return {theta, phi};
}

CoinState named_state(std::string_view name) {
    const double rt = 1.0 / std::sqrt(2.0);
    const double pi = std::numbers::pi;
    if (name == "0") return CoinState(1.0, 0.0);
    if (name == "1") return CoinState(0.0, 1.0);
    if (name == "h") return CoinState(rt, rt);
    if (name == "v") return CoinState(-rt, rt);
    if (name == "d") return CoinState(rt, cplx(0.0, rt));
    if (name == "a") return CoinState(cplx(0.0, rt), rt);
    if (name == "f") return CoinState(std::cos(pi / 8.0), std::sin(pi / 8.0));
    throw std::invalid_argument("unknown state token '" + std::string(name) +
                                "' (expected one of 0,1,h,v,d,a,f)");
}

namespace {

std::vector<double> parse_decimals(std::string_view text, size_t expect,
                                   const char* what) {
    std::vector<double> out;
    std::string buf(text);
    size_t pos = 0;
    while (pos < buf.size()) {
        size_t next = buf.find(',', pos);
        if (next == std::string::npos) next = buf.size();
        try {
            size_t used = 0;
            const std::string field = buf.substr(pos, next - pos);
            out.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad number in ") + what + ": '" +
                                        buf.substr(pos, next - pos) + "'");
        }
        pos = next + 1;
    }
    if (out.size() != expect) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expect) + " comma-separated values");
    }
    return out;
}

}  // namespace

CoinState parse_state(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty state text");
    if (text.rfind("bloch:", 0) == 0) {
        const auto vals = parse_decimals(text.substr(6), 2, "bloch angles");
        return from_bloch({vals[0], vals[1]});
    }
    if (text.find(',') != std::string_view::npos) {
        const auto vals = parse_decimals(text, 4, "state amplitudes");
        return CoinState(cplx(vals[0], vals[1]), cplx(vals[2], vals[3]));
    }
    return named_state(text);
}

CoinDensity parse_density(std::string_view text) {
    if (text.rfind("mix:", 0) == 0) {
        const auto rest = text.substr(4);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("mix form is mix:r,<state>");
        }
        const auto rvals = parse_decimals(rest.substr(0, comma), 1, "mixing fraction");
        return CoinDensity(rvals[0], parse_state(rest.substr(comma + 1)));
    }
    return CoinDensity::pure(parse_state(text));
}

CoinDensity mix(double w1, const CoinState& s1, double w2, const CoinState& s2) {
    if (std::abs(w1 + w2 - 1.0) > 1e-10 || w1 < -1e-12 || w2 < -1e-12) {
        throw std::invalid_argument("mixture weights must be nonnegative and sum to 1");
    }
    Mat2 rho{w1 * std::norm(s1.a0()) + w2 * std::norm(s2.a0()),
             w1 * s1.a0() * std::conj(s1.a1()) + w2 * s2.a0() * std::conj(s2.a1()),
             w1 * s1.a1() * std::conj(s1.a0()) + w2 * s2.a1() * std::conj(s2.a0()),
             w1 * std::norm(s1.a1()) + w2 * std::norm(s2.a1())};
    const HermitianEigen eig = eigen_hermitian(rho);
    return CoinDensity(std::clamp(eig.max_value, 0.0, 1.0), eig.max_vector);
}

std::string format_state(const CoinState& s) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g", s.a0().real(),
                  s.a0().imag(), s.a1().real(), s.a1().imag());
    return buf;
}

}  // namespace qwalk
