#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specwn/errors.hpp"
#include "specwn/quadrature.hpp"
#include "specwn/rng.hpp"

namespace specwn {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

enum class SymbolKind {
    SecondOrder,          ///< -a(t)|xi|^2 with a closed-form coefficient tag
    FractionalLaplacian,  ///< -|xi|^alpha, alpha complex
    LogLaplacian,         ///< log|xi|^2
    SignChangingSinusoid, ///< scale * sin(2 pi freq t) |xi|^power
    RandomScaled,         ///< X(omega) * base(t, xi), X uniform on [lo, hi]
    Tabulated,            ///< piecewise-constant in t: c_i |xi|^power on a mesh
    AbsEnvelope,          ///< coeff * (|Re base| + i |Im base|), base deterministic
    SampledEnvelope,      ///< pointwise max of |Re|/|Im| over fixed sample seeds
};

/// Closed-form time tags for the SecondOrder coefficient a(t).
enum class CoeffTag { Constant, Sinusoid, DegenerateHalfWave };

/// A (seed, t, xi) -> complex rule for the operator symbol psi.
///
/// Evaluation is pure and repeatable; deterministic specs ignore the seed.
struct SymbolSpec {
    SymbolKind kind = SymbolKind::FractionalLaplacian;

    cplx alpha{2.0, 0.0};       // FractionalLaplacian exponent
    double coefficient = 1.0;   // SecondOrder magnitude / AbsEnvelope scale
    CoeffTag tag = CoeffTag::Constant;
    double frequency = 1.0;     // cycles per unit time for sinusoidal tags
    double power = 2.0;         // |xi|^power factor for sinusoid/tabulated
    cplx scale{1.0, 0.0};       // SignChangingSinusoid complex amplitude

    double coeff_lo = 0.5;      // RandomScaled: X ~ U[coeff_lo, coeff_hi]
    double coeff_hi = 1.0;
    double declared_bound = 1.0; // RandomScaled: esssup_omega |X|

    std::vector<double> mesh;   // Tabulated: breakpoints, size m+1
    std::vector<cplx> values;   // Tabulated: panel values, size m

    bool deterministic = true;
    bool certified = true;      // false for sampled (under-approximating) envelopes

    std::shared_ptr<const SymbolSpec> base;      // inner spec for scaled/envelope kinds
    std::shared_ptr<const SymbolSpec> envelope;  // analytic envelope, if declared
    std::vector<std::uint64_t> sample_seeds;     // SampledEnvelope seed set
};

namespace detail {

inline double norm2(std::span<const double> xi) {
    double s = 0.0;
    for (double c : xi) s += c * c;
    return s;
}

inline double second_order_coeff(const SymbolSpec& s, double t) {
    switch (s.tag) {
        case CoeffTag::Constant: return s.coefficient;
        case CoeffTag::Sinusoid: return s.coefficient * std::sin(two_pi * s.frequency * t);
        case CoeffTag::DegenerateHalfWave:
            return s.coefficient * std::max(0.0, std::sin(two_pi * s.frequency * t));
    }
    return s.coefficient;
}

inline double random_coefficient(const SymbolSpec& s, std::uint64_t seed) {
    return s.coeff_lo + (s.coeff_hi - s.coeff_lo) * rng::uniform_at(seed, rng::stream_symbol, 0, 0);
}

} // namespace detail

/// psi(seed, t, xi). DomainError at |xi| = 0 for symbols singular there.
inline cplx eval_symbol(const SymbolSpec& spec, std::uint64_t seed, double t, std::span<const double> xi) {
    const double r2 = detail::norm2(xi);
    const double r = std::sqrt(r2);
    switch (spec.kind) {
        case SymbolKind::SecondOrder:
            return cplx(-detail::second_order_coeff(spec, t) * r2, 0.0);
        case SymbolKind::FractionalLaplacian: {
            if (r == 0.0) {
                if (spec.alpha == cplx(0.0, 0.0)) return cplx(-1.0, 0.0);
                if (spec.alpha.real() > 0.0) return cplx(0.0, 0.0);
                throw domain_error("fractional symbol with Re(alpha) <= 0 undefined at xi = 0");
            }
            const double lr = std::log(r);
            const double mag = std::exp(spec.alpha.real() * lr);
            const double arg = spec.alpha.imag() * lr;
            return cplx(-mag * std::cos(arg), -mag * std::sin(arg));
        }
        case SymbolKind::LogLaplacian:
            if (r == 0.0) throw domain_error("log symbol undefined at xi = 0");
            return cplx(2.0 * std::log(r), 0.0);
        case SymbolKind::SignChangingSinusoid:
            return spec.scale * (std::sin(two_pi * spec.frequency * t) * std::pow(r, spec.power));
        case SymbolKind::RandomScaled:
            return detail::random_coefficient(spec, seed) * eval_symbol(*spec.base, seed, t, xi);
        case SymbolKind::Tabulated: {
            if (spec.mesh.size() < 2 || spec.values.size() + 1 != spec.mesh.size())
                throw validation_error("tabulated symbol needs mesh of size m+1 and m values");
            auto it = std::upper_bound(spec.mesh.begin(), spec.mesh.end(), t);
            std::size_t i = (it == spec.mesh.begin()) ? 0 : static_cast<std::size_t>(it - spec.mesh.begin()) - 1;
            i = std::min(i, spec.values.size() - 1);
            return spec.values[i] * std::pow(r, spec.power);
        }
        case SymbolKind::AbsEnvelope: {
            const cplx v = eval_symbol(*spec.base, seed, t, xi);
            return spec.coefficient * cplx(std::abs(v.real()), std::abs(v.imag()));
        }
        case SymbolKind::SampledEnvelope: {
            double re = 0.0, im = 0.0;
            for (std::uint64_t s : spec.sample_seeds) {
                const cplx v = eval_symbol(*spec.base, s, t, xi);
                re = std::max(re, std::abs(v.real()));
                im = std::max(im, std::abs(v.imag()));
            }
            return cplx(re, im);
        }
    }
    throw unknown_kind_error("unregistered symbol kind");
}

/// True iff psi(t, xi) does not depend on t.
inline bool time_independent(const SymbolSpec& spec) {
    switch (spec.kind) {
        case SymbolKind::FractionalLaplacian:
        case SymbolKind::LogLaplacian: return true;
        case SymbolKind::SecondOrder: return spec.tag == CoeffTag::Constant;
        case SymbolKind::SignChangingSinusoid: return false;
        case SymbolKind::RandomScaled:
        case SymbolKind::AbsEnvelope:
        case SymbolKind::SampledEnvelope: return spec.base && time_independent(*spec.base);
        case SymbolKind::Tabulated: return spec.values.size() == 1;
    }
    return false;
}

/// A(s, t, xi) = int_s^t psi(r, xi) dr; closed form when available, else
/// adaptive Gauss-Legendre. A(t, t, xi) = 0 exactly.
inline cplx integrate_symbol(const SymbolSpec& spec, std::uint64_t seed, double s, double t,
                             std::span<const double> xi, const QuadSetting& quad = {}) {
    if (s == t) return 0.0;
    if (t < s) throw validation_error("integrate_symbol requires s <= t");
    switch (spec.kind) {
        case SymbolKind::SecondOrder: {
            const double r2 = detail::norm2(xi);
            if (spec.tag == CoeffTag::Constant) return cplx(-spec.coefficient * (t - s) * r2, 0.0);
            if (spec.tag == CoeffTag::Sinusoid) {
                const double w = two_pi * spec.frequency;
                return cplx(-spec.coefficient * r2 * (std::cos(w * s) - std::cos(w * t)) / w, 0.0);
            }
            break; // DegenerateHalfWave: quadrature
        }
        case SymbolKind::FractionalLaplacian:
        case SymbolKind::LogLaplacian:
            return (t - s) * eval_symbol(spec, seed, s, xi);
        case SymbolKind::SignChangingSinusoid: {
            const double w = two_pi * spec.frequency;
            const double r = std::sqrt(detail::norm2(xi));
            return spec.scale * (std::pow(r, spec.power) * (std::cos(w * s) - std::cos(w * t)) / w);
        }
        case SymbolKind::RandomScaled:
            return detail::random_coefficient(spec, seed) * integrate_symbol(*spec.base, seed, s, t, xi, quad);
        case SymbolKind::Tabulated: {
            const double r = std::sqrt(detail::norm2(xi));
            cplx acc = 0.0;
            for (std::size_t i = 0; i + 1 < spec.mesh.size(); ++i) {
                const double lo = std::max(s, spec.mesh[i]);
                const double hi = std::min(t, spec.mesh[i + 1]);
                if (hi > lo) acc += spec.values[i] * (hi - lo);
            }
            // extend the last panel beyond the mesh, first panel before it
            if (t > spec.mesh.back()) acc += spec.values.back() * (t - std::max(s, spec.mesh.back()));
            if (s < spec.mesh.front()) acc += spec.values.front() * (std::min(t, spec.mesh.front()) - s);
            return acc * std::pow(r, spec.power);
        }
        default:
            if (time_independent(spec)) return (t - s) * eval_symbol(spec, seed, s, xi);
            break;
    }
    return integrate_adaptive([&](double r) { return eval_symbol(spec, seed, r, xi); }, s, t, quad);
}

/// Deterministic majorant psi~ = esssup|Re psi| + i esssup|Im psi|.
///
/// Declared envelopes win; deterministic specs get their own |Re| + i|Im|;
/// otherwise a pointwise max over `fallback_samples` seeds is returned and
/// marked non-certified (an under-approximation).
inline SymbolSpec envelope_symbol(const SymbolSpec& spec, int fallback_samples = 0) {
    if (spec.envelope) return *spec.envelope;
    SymbolSpec env;
    env.base = std::make_shared<SymbolSpec>(spec);
    if (spec.deterministic) {
        env.kind = SymbolKind::AbsEnvelope;
        env.coefficient = 1.0;
        return env;
    }
    if (fallback_samples < 1)
        throw missing_envelope_error("random symbol carries no analytic envelope and fallback_samples < 1");
    env.kind = SymbolKind::SampledEnvelope;
    env.certified = false;
    env.sample_seeds.reserve(static_cast<std::size_t>(fallback_samples));
    for (int i = 0; i < fallback_samples; ++i)
        env.sample_seeds.push_back(rng::mix(0xE27D5ULL, static_cast<std::uint64_t>(i)));
    return env;
}

/// Analytic bound for esssup |psi| on Omega x (0,T) x B_R, when the kind
/// supports one. Tier Strong requires this to exist.
inline std::optional<double> declared_sup_bound(const SymbolSpec& spec, double R, double T) {
    switch (spec.kind) {
        case SymbolKind::SecondOrder: return std::abs(spec.coefficient) * R * R;
        case SymbolKind::FractionalLaplacian:
            if (spec.alpha.real() < 0.0) return std::nullopt;
            return std::pow(R, spec.alpha.real());
        case SymbolKind::LogLaplacian: return std::nullopt;
        case SymbolKind::SignChangingSinusoid: return std::abs(spec.scale) * std::pow(R, spec.power);
        case SymbolKind::RandomScaled: {
            auto b = declared_sup_bound(*spec.base, R, T);
            if (!b) return std::nullopt;
            return std::max(std::abs(spec.coeff_lo), std::abs(spec.coeff_hi)) * *b;
        }
        case SymbolKind::Tabulated: {
            double m = 0.0;
            for (const cplx& v : spec.values) m = std::max(m, std::abs(v));
            return m * std::pow(R, spec.power);
        }
        case SymbolKind::AbsEnvelope: {
            auto b = declared_sup_bound(*spec.base, R, T);
            if (!b) return std::nullopt;
            return spec.coefficient * *b;
        }
        case SymbolKind::SampledEnvelope: {
            auto b = declared_sup_bound(*spec.base, R, T);
            if (!b) return std::nullopt;
            return std::sqrt(2.0) * *b;
        }
    }
    return std::nullopt;
}

/// True when the symbol is singular at xi = 0 (grids must exclude the origin).
inline bool singular_at_origin(const SymbolSpec& spec) {
    switch (spec.kind) {
        case SymbolKind::LogLaplacian: return true;
        case SymbolKind::FractionalLaplacian: return spec.alpha.real() <= 0.0 && spec.alpha != cplx(0.0, 0.0);
        case SymbolKind::RandomScaled:
        case SymbolKind::AbsEnvelope:
        case SymbolKind::SampledEnvelope: return spec.base && singular_at_origin(*spec.base);
        default: return false;
    }
}

/// Mark a deterministic spec as random without changing its values; the
/// envelope is the spec itself, so the two-stage construction reduces to
/// the direct one algebraically.
inline SymbolSpec wrap_trivially_random(const SymbolSpec& spec) {
    SymbolSpec wrapped = spec;
    wrapped.deterministic = false;
    wrapped.envelope = std::make_shared<SymbolSpec>(spec);
    return wrapped;
}

/// Built-in registry of the paper-backed example symbols.
namespace symbols {

inline SymbolSpec fractional(cplx alpha) {
    SymbolSpec s;
    s.kind = SymbolKind::FractionalLaplacian;
    s.alpha = alpha;
    return s;
}

/// Heat symbol -|xi|^2.
inline SymbolSpec heat() { return fractional(cplx(2.0, 0.0)); }

inline SymbolSpec log_laplacian() {
    SymbolSpec s;
    s.kind = SymbolKind::LogLaplacian;
    return s;
}

/// scale * sin(2 pi freq t) |xi|^power; sign-changing, non-elliptic.
inline SymbolSpec sinusoid(double freq = 1.0, double power = 2.0, cplx scale = {1.0, 0.0}) {
    SymbolSpec s;
    s.kind = SymbolKind::SignChangingSinusoid;
    s.frequency = freq;
    s.power = power;
    s.scale = scale;
    return s;
}

inline SymbolSpec second_order(CoeffTag tag, double coefficient = 1.0, double freq = 1.0) {
    SymbolSpec s;
    s.kind = SymbolKind::SecondOrder;
    s.tag = tag;
    s.coefficient = coefficient;
    s.frequency = freq;
    return s;
}

/// -X(omega) |xi|^2 style random symbol with a declared analytic envelope.
inline SymbolSpec random_scaled(double lo, double hi, double declared_bound,
                                SymbolSpec base = heat()) {
    SymbolSpec s;
    s.kind = SymbolKind::RandomScaled;
    s.coeff_lo = lo;
    s.coeff_hi = hi;
    s.declared_bound = declared_bound;
    s.deterministic = false;
    s.base = std::make_shared<SymbolSpec>(std::move(base));

    SymbolSpec env;
    env.kind = SymbolKind::AbsEnvelope;
    env.coefficient = declared_bound;
    env.base = s.base;
    s.envelope = std::make_shared<SymbolSpec>(std::move(env));
    return s;
}

inline SymbolSpec tabulated(std::vector<double> mesh, std::vector<cplx> values, double power = 2.0) {
    SymbolSpec s;
    s.kind = SymbolKind::Tabulated;
    s.mesh = std::move(mesh);
    s.values = std::move(values);
    s.power = power;
    return s;
}

} // namespace symbols
} // namespace specwn
