#pragma once
// Relativistic single-particle machinery: rapidities, the Wigner rotation
// angle for a boost perpendicular to the particle momentum, rotated spin
// amplitudes, Bloch vectors, and the momentum-averaged polarization of an
// isotropic Gaussian wavepacket.
//
// The angle model is deliberately isotropic: the Wigner angle is taken to
// depend on momentum only through |p| (via cosh(delta) = p0/m), suppressing
// the direction dependence of the full little-group rotation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>

#include "relqi/matrix.hpp"
#include "relqi/quadrature.hpp"

namespace relqi {

struct BoostRapidity {
    double xi = 0.0;
    double beta = 0.0;  // boost speed in units of c; cosh(xi) = (1 - beta^2)^(-1/2)
};

inline BoostRapidity rapidity_from_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0))
        throw std::domain_error("rapidity_from_beta: beta must lie in [0, 1)");
    return {std::atanh(beta), beta};
}

inline BoostRapidity rapidity_from_xi(double xi) {
    if (!(xi >= 0.0)) throw std::domain_error("rapidity_from_xi: xi must be >= 0");
    return {xi, std::tanh(xi)};
}

struct ParticleRapidity {
    double delta = 0.0;  // cosh(delta) = p0/m
};

inline ParticleRapidity particle_rapidity_from_momentum(double p_over_m) {
    if (!(p_over_m >= 0.0))
        throw std::domain_error("particle_rapidity_from_momentum: |p|/m must be >= 0");
    return {std::asinh(p_over_m)};  // cosh(delta) = sqrt(1 + (p/m)^2) = p0/m
}

struct WignerAngle {
    double theta = 0.0;  // radians, in [0, pi/2) for finite rapidities
};

// tan(theta) = sinh(xi) sinh(delta) / (cosh(xi) + cosh(delta)). The
// denominator never vanishes, so atan2 stays stable into the
// ultra-relativistic limit where theta approaches pi/2.
inline WignerAngle wigner_angle(const BoostRapidity& xi, const ParticleRapidity& delta) {
    return {std::atan2(std::sinh(xi.xi) * std::sinh(delta.delta),
                       std::cosh(xi.xi) + std::cosh(delta.delta))};
}

struct SpinAmplitudePair {
    Complex a1;
    Complex a2;
};

inline double norm_squared(const SpinAmplitudePair& s) {
    return std::norm(s.a1) + std::norm(s.a2);
}

// Validating constructor for the unit-norm invariant.
inline SpinAmplitudePair spin_amplitudes(Complex a1, Complex a2) {
    SpinAmplitudePair s{a1, a2};
    if (std::abs(norm_squared(s) - 1.0) > 1e-12)
        throw std::invalid_argument("spin_amplitudes: amplitudes must have unit norm");
    return s;
}

inline SpinAmplitudePair normalized_spin_amplitudes(Complex a1, Complex a2) {
    const double n = std::sqrt(std::norm(a1) + std::norm(a2));
    if (n == 0.0) throw std::invalid_argument("normalized_spin_amplitudes: zero amplitudes");
    return {a1 / n, a2 / n};
}

// The spin-1/2 rotation picked up under the boost: basis state 1 maps to
// (cos(theta/2), sin(theta/2)) and basis state 2 to (-sin(theta/2),
// cos(theta/2)); a general pair is carried by the same rotation.
inline SpinAmplitudePair wigner_rotate_spinor(const SpinAmplitudePair& s, const WignerAngle& w) {
    const double c = std::cos(0.5 * w.theta);
    const double sn = std::sin(0.5 * w.theta);
    return {c * s.a1 - sn * s.a2, sn * s.a1 + c * s.a2};
}

inline SpinAmplitudePair boosted_basis_spinor(int which, const WignerAngle& w) {
    if (which == 1) return wigner_rotate_spinor({1.0, 0.0}, w);
    if (which == 2) return wigner_rotate_spinor({0.0, 1.0}, w);
    throw std::invalid_argument("boosted_basis_spinor: basis index must be 1 or 2");
}

struct BlochVector {
    double nx = 0.0;
    double ny = 0.0;
    double nz = 0.0;
};

struct WeightedSpinSample {
    SpinAmplitudePair state;
    double weight = 0.0;
};

// Discrete stand-in for the momentum average of the single-particle spin
// density matrix. The accumulator sum(w * a1 * conj(a2)) is the (0,1) entry
// of sigma = (1 + n.sigma)/2, hence equals (nx - i ny)/2.
inline BlochVector bloch_from_amplitudes(std::span<const WeightedSpinSample> samples) {
    double wsum = 0.0;
    double nz = 0.0;
    Complex off = 0.0;
    for (const WeightedSpinSample& s : samples) {
        if (s.weight < 0.0)
            throw std::invalid_argument("bloch_from_amplitudes: negative weight");
        wsum += s.weight;
        nz += s.weight * (std::norm(s.state.a1) - std::norm(s.state.a2));
        off += s.weight * s.state.a1 * std::conj(s.state.a2);
    }
    if (std::abs(wsum - 1.0) > 1e-10)
        throw std::invalid_argument("bloch_from_amplitudes: weights must sum to 1");
    return {2.0 * off.real(), -2.0 * off.imag(), nz};
}

struct WavePacket {
    double w = 0.0;  // momentum width, same units as m
    double m = 0.0;  // mass
    double ratio() const { return w / m; }
};

inline WavePacket wave_packet(double w, double m) {
    if (!(w > 0.0)) throw std::domain_error("wave_packet: width must be > 0");
    if (!(m > 0.0)) throw std::domain_error("wave_packet: mass must be > 0");
    return {w, m};
}

struct Polarization {
    double n = 1.0;  // 1 in the rest frame, -> 0 in the ultra-relativistic limit
};

inline Polarization polarization(double n) {
    if (!(n >= 0.0 && n <= 1.0))
        throw std::domain_error("polarization: n must lie in [0, 1]");
    return {n};
}

// Leading-order degradation n = 1 - ((w/2m) tanh(xi/2))^2, clamped to [0, 1]
// since the formula dips below zero outside its w/m << 1 validity regime.
inline Polarization polarization_leading_order(const WavePacket& wp, const BoostRapidity& xi) {
    if (!(wp.ratio() < 1.0))
        throw std::domain_error("polarization_leading_order: requires w/m < 1");
    const double d = 0.5 * wp.ratio() * std::tanh(0.5 * xi.xi);
    return polarization(std::clamp(1.0 - d * d, 0.0, 1.0));
}

namespace detail {

// n = integral of |g(p)|^2 cos(theta_{|p|}) d^3p for the isotropic Gaussian
// g(p) = pi^(-3/4) w^(-3/2) exp(-|p|^2 / 2w^2). After u = |p|/w the radial
// integral becomes (4/sqrt(pi)) int_0^inf u^2 e^(-u^2) cos(theta(u w)) du;
// the tail beyond u = 8 weighs less than 1e-27.
inline double polarization_integral(double ratio, double xi, std::size_t n) {
    const GaussLegendreRule rule(n, 0.0, 8.0);
    const double sh_xi = std::sinh(xi);
    const double ch_xi = std::cosh(xi);
    const double acc = integrate(rule, [&](double u) {
        const double sh_d = u * ratio;  // sinh(delta) = |p|/m
        const double ch_d = std::sqrt(1.0 + sh_d * sh_d);
        const double num = sh_xi * sh_d;
        const double den = ch_xi + ch_d;
        const double cos_theta = den / std::hypot(num, den);
        return u * u * std::exp(-u * u) * cos_theta;
    });
    return acc * 4.0 / std::sqrt(std::numbers::pi);
}

}  // namespace detail

// Quadrature model of the momentum-averaged polarization, independent of the
// leading-order formula. Nodes are doubled until two successive evaluations
// agree to 1e-10; the cap is 2^14 nodes.
inline Polarization polarization_quadrature(const WavePacket& wp, const BoostRapidity& xi,
                                            std::size_t nodes = 64) {
    if (nodes < 32)
        throw std::invalid_argument("polarization_quadrature: need at least 32 nodes");
    double prev = detail::polarization_integral(wp.ratio(), xi.xi, nodes);
    for (std::size_t k = 2 * nodes; k <= 16384; k *= 2) {
        const double cur = detail::polarization_integral(wp.ratio(), xi.xi, k);
        if (std::abs(cur - prev) < 1e-10)
            return polarization(std::clamp(cur, 0.0, 1.0));
        prev = cur;
    }
    throw std::runtime_error("polarization_quadrature: node doubling did not converge");
}

// integral of |g(p)|^2 d^3p by radial quadrature, evaluated with the literal
// normalization constant so the wavepacket invariant is actually exercised.
inline double wavepacket_norm_quadrature(const WavePacket& wp, std::size_t nodes = 128) {
    const GaussLegendreRule rule(nodes, 0.0, 8.0 * wp.w);
    const double c = std::pow(std::numbers::pi, -1.5) / (wp.w * wp.w * wp.w);
    return integrate(rule, [&](double p) {
        return 4.0 * std::numbers::pi * p * p * c * std::exp(-p * p / (wp.w * wp.w));
    });
}

}  // namespace relqi
