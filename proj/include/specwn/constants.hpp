#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "specwn/symbol.hpp"

namespace specwn {

enum class AssumptionTier { Strong, Main, WeakDeterministicOnly, Fails };

inline const char* tier_name(AssumptionTier t) {
    switch (t) {
        case AssumptionTier::Strong: return "Strong";
        case AssumptionTier::Main: return "Main";
        case AssumptionTier::WeakDeterministicOnly: return "WeakDeterministicOnly";
        case AssumptionTier::Fails: return "Fails";
    }
    return "?";
}

/// One named constant traced through grid refinement.
struct ConstantEstimate {
    double value = 0.0;
    bool converged = false;
    bool divergent = false;  // grows without bound under refinement
};

/// The six assumption constants of the symbol at a given (R, T) plus a tier.
///
/// Exponential and sup constants are running maxima over the union of all
/// refinement grids, so refining never decreases them. For random symbols
/// everything is evaluated on the envelope.
struct AssumptionConstants {
    double R = 0.0;
    double T = 0.0;
    ConstantEstimate c_e_int_re;          // C^{e int Re psi}
    ConstantEstimate c_e_abs_int_re;      // C^{e |int Re psi|}
    ConstantEstimate c_e_int_sup_abs_re;  // C^{e int sup |Re psi|}
    ConstantEstimate c_abs_psi;           // C^{|psi|}
    ConstantEstimate c_sup_psi;           // C^{sup |psi|}
    ConstantEstimate psi_inf;             // ||psi||_{L_inf(Omega x (0,T) x B_R)}
    bool declared_bound = false;          // psi_inf backed by an analytic bound
    bool symbol_deterministic = true;
    bool certified = true;                // false when built on a sampled envelope
    AssumptionTier tier = AssumptionTier::Fails;
};

/// Nested-grid resolution settings for constant computation.
struct GridSetting {
    int radial_nodes = 64;   // level-0 radial nodes (doubles per level)
    int time_panels = 64;    // level-0 time panels (doubles per level)
    int max_levels = 5;
    double rel_tol = 1e-3;
    double divergence_factor = 1.5;  // level-over-level growth flagging divergence
};

namespace detail {

struct LevelValues {
    double e_int_re = 1.0;
    double e_abs_int_re = 1.0;
    double e_int_sup_abs_re = 1.0;
    double abs_psi = 0.0;
    double sup_psi = 0.0;
    double psi_inf = 0.0;
};

inline LevelValues constants_level(const SymbolSpec& psi, double R, double T, int Nr, int Nt) {
    LevelValues out;
    const double dt = T / Nt;
    std::vector<double> I(Nt + 1), Ia(Nt + 1), absv(Nt + 1);

    std::vector<double> radii(static_cast<std::size_t>(Nr) + 1);
    const double h = R / Nr;
    for (int i = 0; i < Nr; ++i) radii[static_cast<std::size_t>(i)] = (i + 0.5) * h;
    radii.back() = R;  // esssup over B_R extends continuously to the closure

    for (double r : radii) {
        const std::array<double, 1> xi = {r};
        I[0] = Ia[0] = 0.0;
        absv[0] = std::abs(eval_symbol(psi, 0, 0.0, xi));
        for (int j = 0; j < Nt; ++j) {
            const double a = j * dt, b = (j + 1) * dt;
            I[j + 1] = I[j] + integrate_symbol(psi, 0, a, b, xi).real();
            Ia[j + 1] = Ia[j] + detail::gl4_panel(
                                    [&](double t) {
                                        return cplx(std::abs(eval_symbol(psi, 0, t, xi).real()), 0.0);
                                    },
                                    a, b)
                                    .real();
            absv[j + 1] = std::abs(eval_symbol(psi, 0, b, xi)));
        }

        double minpref = 0.0, maxpref = 0.0;
        double e_signed = 1.0, e_abs = 1.0;
        double q_signed = 0.0, q_abs = 0.0;  // trapezoids of |psi| e^{...}
        double prev_g1 = absv[0], prev_g2 = absv[0];
        double vmax = absv[0];
        for (int j = 1; j <= Nt; ++j) {
            minpref = std::min(minpref, I[j - 1]);
            maxpref = std::max(maxpref, I[j - 1]);
            const double up = I[j] - std::min(minpref, I[j]);
            const double down = std::max(maxpref, I[j]) - I[j];
            e_signed = std::max(e_signed, std::exp(up));
            e_abs = std::max(e_abs, std::exp(std::max(up, down)));
            const double g1 = absv[j] * std::exp(I[j] - std::min(minpref, I[j]));
            const double g2 = absv[j] * std::exp(Ia[j]);
            q_signed += 0.5 * dt * (prev_g1 + g1);
            q_abs += 0.5 * dt * (prev_g2 + g2);
            prev_g1 = g1;
            prev_g2 = g2;
            vmax = std::max(vmax, absv[j]);
        }
        out.e_int_re = std::max(out.e_int_re, e_signed);
        out.e_abs_int_re = std::max(out.e_abs_int_re, e_abs);
        out.e_int_sup_abs_re = std::max(out.e_int_sup_abs_re, std::exp(Ia[Nt]));
        out.abs_psi = std::max(out.abs_psi, q_signed);
        out.sup_psi = std::max(out.sup_psi, q_abs);
        out.psi_inf = std::max(out.psi_inf, vmax);
    }
    return out;
}

inline void track(ConstantEstimate& est, double level_value, bool running_max, double prev,
                  const GridSetting& res) {
    double v = running_max ? std::max(est.value, level_value) : level_value;
    if (!std::isfinite(v) || v > 1e200) {
        est.value = std::numeric_limits<double>::infinity();
        est.divergent = true;
        est.converged = false;
        return;
    }
    est.value = v;
    if (std::isfinite(prev)) {
        const double change = std::abs(v - prev) / std::max(1.0, std::abs(v));
        est.converged = change < res.rel_tol;
        est.divergent = prev > 0.0 && v > res.divergence_factor * prev;
    }
}

} // namespace detail

/// Assign the assumption tier from the per-constant divergence flags.
inline AssumptionTier classify_assumptions(const AssumptionConstants& c) {
    const bool main_ok = !c.c_e_int_sup_abs_re.divergent && !c.c_sup_psi.divergent;
    const bool weak_ok = !c.c_e_int_re.divergent && !c.c_abs_psi.divergent;
    if (c.declared_bound && !c.psi_inf.divergent && main_ok) return AssumptionTier::Strong;
    if (main_ok && weak_ok) return AssumptionTier::Main;
    if (weak_ok) return AssumptionTier::WeakDeterministicOnly;
    return AssumptionTier::Fails;
}

/// Evaluate all six constants on nested (t, |xi|) grids, refining until the
/// relative change drops below res.rel_tol or a constant is flagged divergent.
inline AssumptionConstants compute_constants(const SymbolSpec& spec, double R, double T,
                                             const GridSetting& res = {}) {
    if (R <= 0.0 || T <= 0.0) throw validation_error("compute_constants requires R > 0, T > 0");

    const SymbolSpec* psi = &spec;
    SymbolSpec env_holder;
    AssumptionConstants out;
    out.R = R;
    out.T = T;
    out.symbol_deterministic = spec.deterministic;
    if (!spec.deterministic) {
        if (!spec.envelope)
            throw missing_envelope_error("random symbols need an envelope for constant computation");
        env_holder = *spec.envelope;
        psi = &env_holder;
        out.certified = env_holder.certified;
    }

    const auto bound = declared_sup_bound(*psi, R, T);
    out.declared_bound = bound.has_value();

    std::array<double, 6> prev;
    prev.fill(std::numeric_limits<double>::quiet_NaN());
    for (int level = 0; level < res.max_levels; ++level) {
        const int Nr = res.radial_nodes << level;
        const int Nt = res.time_panels << level;
        const auto lv = detail::constants_level(*psi, R, T, Nr, Nt);

        detail::track(out.c_e_int_re, lv.e_int_re, true, prev[0], res);
        detail::track(out.c_e_abs_int_re, lv.e_abs_int_re, true, prev[1], res);
        detail::track(out.c_e_int_sup_abs_re, lv.e_int_sup_abs_re, true, prev[2], res);
        detail::track(out.c_abs_psi, lv.abs_psi, false, prev[3], res);
        detail::track(out.c_sup_psi, lv.sup_psi, false, prev[4], res);
        detail::track(out.psi_inf, lv.psi_inf, true, prev[5], res);
        prev = {out.c_e_int_re.value,  out.c_e_abs_int_re.value, out.c_e_int_sup_abs_re.value,
                out.c_abs_psi.value,   out.c_sup_psi.value,      out.psi_inf.value};

        const bool all_done = out.c_e_int_re.converged && out.c_e_abs_int_re.converged &&
                              out.c_e_int_sup_abs_re.converged && out.c_abs_psi.converged &&
                              out.c_sup_psi.converged && out.psi_inf.converged;
        if (all_done && level >= 1) break;
    }

    if (bound) {
        out.psi_inf.value = *bound;
        out.psi_inf.converged = true;
        out.psi_inf.divergent = false;
    }
    out.tier = classify_assumptions(out);
    return out;
}

} // namespace specwn
