// Certified enclosures of the extreme adjacency eigenvalues.
//
// eigenvalue_count_below is the exact oracle (Sturm chain of the integer
// characteristic polynomial by default, exact symmetric elimination as the
// cross-checking backend).  SpectralEngine wraps one graph and produces
// enclosures by bracketing bisection on certified counts, seeding brackets
// from floating-point approximations and certifying every probe through a
// cascade: double-interval LDL^T, MPFR-interval LDL^T, then exact arithmetic.

#pragma once

#include "eigengap/approx.hpp"
#include "eigengap/charpoly.hpp"
#include "eigengap/graph.hpp"
#include "eigengap/inertia.hpp"
#include "eigengap/interval.hpp"
#include "eigengap/polynomial.hpp"

#include <memory>
#include <optional>

namespace eigengap {

enum class CountBackend { sturm, ldl_exact, bareiss };

inline long eigenvalue_count_below(const Graph& g, const Dyadic& t,
                                   CountBackend backend = CountBackend::sturm) {
    switch (backend) {
        case CountBackend::sturm:
            return RootCounter(adjacency_charpoly(g)).count_strictly_below(t);
        case CountBackend::ldl_exact:
            return inertia_ldl_exact(g, t.to_mpq()).neg;
        case CountBackend::bareiss: {
            auto r = inertia_bareiss(g, t);
            if (r) return r->neg;
            return inertia_ldl_exact(g, t.to_mpq()).neg;  // rare 2x2 case
        }
    }
    throw Error("unknown count backend");
}

enum class Method { sturm_exact, interval_ldl };

struct SpectralSummary {
    Interval mu;
    Interval mu_min;
    unsigned precision_bits = 0;
    Method method = Method::sturm_exact;
    bool width_met = true;  // false: precision cap reached, widest achieved enclosure returned
};

struct SpectralOptions {
    unsigned max_precision_bits = 8192;
    bool exact_only = false;     // skip interval stages entirely
    bool interval_only = false;  // never consult exact backends (may fail to meet width)
};

class SpectralEngine {
public:
    explicit SpectralEngine(Graph g, SpectralOptions opts = {})
        : g_(std::move(g)), opts_(opts), n_(g_.order()) {
        max_degree_ = 0;
        for (int v = 0; v < n_; ++v) max_degree_ = std::max(max_degree_, g_.degree(v));
    }

    const Graph& graph() const { return g_; }
    int max_degree() const { return max_degree_; }
    const SpectralOptions& options() const { return opts_; }

    const ApproxSpectrum& approx_values() {
        if (!approx_) approx_ = approx_spectrum(g_, false);
        return *approx_;
    }

    // Certified eigenvalue count strictly below t, via the cascade.  nullopt
    // only in interval_only mode when no interval stage is conclusive.
    std::optional<long> count_below_certified(const Dyadic& t) {
        if (!opts_.exact_only) {
            if (auto c = count_below_interval_double(g_, t)) {
                note_precision(53);
                return *c;
            }
            if (n_ > 32 || opts_.interval_only) {
                for (mpfr_prec_t prec : {96, 192, 384}) {
                    if (static_cast<unsigned>(prec) > opts_.max_precision_bits) break;
                    note_precision(static_cast<unsigned>(prec));
                    if (auto c = count_below_interval_mpfr(g_, t, prec)) return *c;
                }
            }
        }
        if (opts_.interval_only) return std::nullopt;
        used_exact_ = true;
        note_precision(probe_bits(t));
        return exact_counter().count_strictly_below(t);
    }

    // Enclosure of the largest eigenvalue with width <= tol (subject to the
    // precision cap; check width_met on the summary).
    Interval mu(double tol) {
        refine_top(tol);
        return Interval::of_dyadics(top_lo_, top_hi_);
    }

    Interval mu_min(double tol) {
        refine_bottom(tol);
        return Interval::of_dyadics(bot_lo_, bot_hi_);
    }

    SpectralSummary extremes(double tol) {
        SpectralSummary s;
        s.mu = mu(tol);
        s.mu_min = mu_min(tol);
        s.precision_bits = max_precision_bits_used_;
        s.method = used_exact_ ? Method::sturm_exact : Method::interval_ldl;
        Dyadic tol_d = Dyadic::from_double(tol);
        s.width_met = !((top_hi_ - top_lo_).cmp(tol_d) > 0 || (bot_hi_ - bot_lo_).cmp(tol_d) > 0);
        return s;
    }

    unsigned precision_bits_used() const { return max_precision_bits_used_; }
    bool used_exact_backend() const { return used_exact_; }

    const RootCounter& exact_counter() {
        if (!counter_) {
            if (static_cast<unsigned long>(n_) > 200)
                throw Error("exact Sturm backend capped at n <= 200");
            counter_ = std::make_unique<RootCounter>(adjacency_charpoly(g_));
        }
        return *counter_;
    }

private:
    static unsigned probe_bits(const Dyadic& t) {
        if (t.is_zero()) return 1;
        return static_cast<unsigned>(mpz_sizeinbase(t.num().get_mpz_t(), 2)) +
               static_cast<unsigned>(t.exp2() < 0 ? -t.exp2() : t.exp2());
    }

    void note_precision(unsigned bits) {
        max_precision_bits_used_ = std::max(max_precision_bits_used_, bits);
    }

    // Bracket invariants.  Top: count(lo) < n (mu >= lo) and count(hi) = n
    // (mu < hi).  Bottom: count(lo) = 0 (mu_min >= lo) and count(hi) >= 1
    // (mu_min < hi).
    void refine_top(double tol) {
        Dyadic tol_d = Dyadic::from_double(tol);
        if (!have_top_) {
            init_bracket(true);
            have_top_ = true;
        }
        bisect(true, top_lo_, top_hi_, tol_d);
        clamp_top();
    }

    void refine_bottom(double tol) {
        Dyadic tol_d = Dyadic::from_double(tol);
        if (!have_bot_) {
            init_bracket(false);
            have_bot_ = true;
        }
        bisect(false, bot_lo_, bot_hi_, tol_d);
        clamp_bottom();
    }

    void init_bracket(bool top) {
        Dyadic lo(-static_cast<long>(max_degree_) - 1);
        Dyadic hi(static_cast<long>(max_degree_) + 1);
        if (top) {
            top_lo_ = lo;
            top_hi_ = hi;
        } else {
            bot_lo_ = lo;
            bot_hi_ = hi;
        }
    }

    bool top_probe_moves_hi(long c) const { return c == n_; }    // mu < t
    bool bottom_probe_moves_lo(long c) const { return c == 0; }  // mu_min >= t

    void bisect(bool top, Dyadic& lo, Dyadic& hi, const Dyadic& tol_d) {
        // Try to jump straight to a seeded bracket when far from target width.
        attempt_seed(top, lo, hi, tol_d);
        while (Dyadic(hi - lo).cmp(tol_d) > 0) {
            Dyadic mid = Dyadic::midpoint(lo, hi);
            if (probe_bits(mid) > opts_.max_precision_bits) {
                cap_hit_ = true;
                return;
            }
            auto c = count_below_certified(mid);
            if (!c) {
                cap_hit_ = true;
                return;
            }
            if (top) {
                if (top_probe_moves_hi(*c))
                    hi = mid;
                else
                    lo = mid;
            } else {
                if (bottom_probe_moves_lo(*c))
                    lo = mid;
                else
                    hi = mid;
            }
        }
    }

    void attempt_seed(bool top, Dyadic& lo, Dyadic& hi, const Dyadic& tol_d) {
        Dyadic width = hi - lo;
        Dyadic eight_tol(tol_d.num() << 3, tol_d.exp2());
        if (!(width.cmp(eight_tol) > 0)) return;  // plain halving is already cheap
        const auto& vals = approx_values().values;
        double x = top ? vals.back() : vals.front();
        double half = std::max(tol_d.to_double() * 0.45, 1e-12 * std::max(1.0, std::abs(x)));
        for (int attempt = 0; attempt < 3; ++attempt, half *= 8.0) {
            Dyadic cand_lo = Dyadic::from_double(x - half);
            Dyadic cand_hi = Dyadic::from_double(x + half);
            if (!(lo.cmp(cand_lo) < 0 && cand_hi.cmp(hi) < 0)) return;
            auto c_hi = count_below_certified(cand_hi);
            if (!c_hi) return;
            bool hi_ok = top ? (*c_hi == n_) : (*c_hi >= 1);
            if (!hi_ok) continue;  // grow the candidate
            auto c_lo = count_below_certified(cand_lo);
            if (!c_lo) return;
            bool lo_ok = top ? (*c_lo < n_) : (*c_lo == 0);
            if (!lo_ok) continue;
            lo = cand_lo;
            hi = cand_hi;
            return;
        }
    }

    // |eigenvalues| <= max degree, and mu <= n-1, mu_min >= -(n-1).
    void clamp_top() {
        Dyadic bound(std::min<long>(max_degree_, n_ - 1));
        if (bound.cmp(top_hi_) < 0) top_hi_ = bound;
        if (top_lo_.cmp(top_hi_) > 0) top_lo_ = top_hi_;
    }
    void clamp_bottom() {
        Dyadic bound(-std::min<long>(max_degree_, n_ - 1));
        if (bot_lo_.cmp(bound) < 0) bot_lo_ = bound;
        if (bot_hi_.cmp(bot_lo_) < 0) bot_hi_ = bot_lo_;
    }

    Graph g_;
    SpectralOptions opts_;
    int n_;
    int max_degree_ = 0;

    std::optional<ApproxSpectrum> approx_;
    std::unique_ptr<RootCounter> counter_;

    bool have_top_ = false, have_bot_ = false;
    Dyadic top_lo_, top_hi_, bot_lo_, bot_hi_;

    unsigned max_precision_bits_used_ = 0;
    bool used_exact_ = false;
    bool cap_hit_ = false;
};

inline SpectralSummary extreme_eigenvalues(const Graph& g, double tol, SpectralOptions opts = {}) {
    if (tol <= 0) throw Error("extreme_eigenvalues: tol must be positive");
    SpectralEngine eng(g, opts);
    return eng.extremes(tol);
}

// Enclosure of (x^T A x) / (x^T x); x given as exact doubles.
inline Interval rayleigh_quotient(const Graph& g, const std::vector<double>& x,
                                  mpfr_prec_t prec = 128) {
    if (static_cast<int>(x.size()) != g.order()) throw Error("rayleigh_quotient: dimension mismatch");
    bool all_zero = true;
    for (double v : x)
        if (v != 0.0) all_zero = false;
    if (all_zero) throw Error("rayleigh_quotient: zero vector");

    Interval num = Interval::of_long(0), den = Interval::of_long(0);
    for (int u = 0; u < g.order(); ++u) {
        Interval xu = Interval::of_double(x[static_cast<size_t>(u)]);
        den = iadd(den, imul(xu, xu, prec), prec);
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) {
                Interval p = imul(xu, Interval::of_double(x[static_cast<size_t>(v)]), prec);
                num = iadd(num, p, prec);
            }
    }
    num = imul(num, Interval::of_long(2), prec);
    return idiv(num, den, prec);
}

}  // namespace eigengap
