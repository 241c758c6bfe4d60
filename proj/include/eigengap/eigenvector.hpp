// Approximate extreme eigenvectors with a certified uniform entrywise error.
//
// The estimate itself is floating point; the bound delta is rigorous: with
// the residual r = A*x - theta*x and a certified gap from theta to every
// eigenvalue outside the target cluster, sin-theta gives
// ||x - x*||_2 <= sqrt(2) * ||r|| / gap for the normalized projection x* of x
// onto the cluster's eigenspace.  The cluster is certified to consist of a
// single distinct eigenvalue (exact multiplicity via the Sturm machinery), so
// x* is a genuine eigenvector and |x_i - x*_i| <= delta entrywise.

#pragma once

#include "eigengap/approx.hpp"
#include "eigengap/spectral.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace eigengap {

struct EigenvectorEstimate {
    std::vector<double> entries;  // approximately unit 2-norm, first nonzero entry positive
    double norm = 0.0;
    Interval eigenvalue;      // enclosure of the eigenvalue the bound is certified for
    double delta = 0.0;       // certified uniform entrywise error bound
    bool certified = false;   // delta is rigorous
    bool meets_tol = false;   // delta <= requested tolerance
    int multiplicity = 1;     // exact multiplicity of the certified eigenvalue
    unsigned precision_bits = 0;
    std::string diagnostics;

    // Perron positivity may be asserted only when certified.
    bool entries_certified_positive() const {
        if (!certified) return false;
        for (double v : entries)
            if (!(v - delta > 0.0)) return false;
        return true;
    }
};

namespace detail {

inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

// Rigorous upper bound on ||A*x - theta*x||_2 for exact double entries.
inline double residual_norm_upper(const Graph& g, const std::vector<double>& x, const DInterval& theta) {
    DInterval sum = di_point(0.0);
    for (int i = 0; i < g.order(); ++i) {
        DInterval ri = di_point(0.0);
        const std::uint64_t* row = g.row(i);
        for (int w = 0; w < g.word_count(); ++w) {
            std::uint64_t bitsw = row[w];
            while (bitsw) {
                int j = w * 64 + __builtin_ctzll(bitsw);
                bitsw &= bitsw - 1;
                ri = di_add(ri, di_point(x[static_cast<size_t>(j)]));
            }
        }
        ri = di_sub(ri, di_mul(theta, di_point(x[static_cast<size_t>(i)])));
        sum = di_add(sum, di_mul(ri, ri));
    }
    if (!di_finite(sum)) return std::numeric_limits<double>::infinity();
    return up(std::sqrt(up(sum.hi)));
}

}  // namespace detail

// largest = true certifies against mu, false against mu_min.
inline EigenvectorEstimate extreme_eigenvector(SpectralEngine& eng, bool largest, double tol) {
    if (tol <= 0) throw Error("extreme_eigenvector: tol must be positive");
    const Graph& g = eng.graph();
    const int n = g.order();

    EigenvectorEstimate est;
    if (n == 1) {
        est.entries = {1.0};
        est.norm = 1.0;
        est.eigenvalue = Interval::of_long(0);
        est.delta = 0.0;
        est.certified = true;
        est.meets_tol = true;
        return est;
    }

    double tol0 = std::min(1e-12, tol);
    Interval lam = largest ? eng.mu(tol0) : eng.mu_min(tol0);
    est.eigenvalue = lam;

    ApproxSpectrum sp = approx_spectrum(g, true);
    int col = largest ? n - 1 : 0;
    est.entries.assign(n, 0.0);
    double nrm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        est.entries[static_cast<size_t>(i)] = sp.vectors[static_cast<size_t>(i) + static_cast<size_t>(n) * col];
        nrm2 += est.entries[static_cast<size_t>(i)] * est.entries[static_cast<size_t>(i)];
    }
    double nrm = std::sqrt(nrm2);
    for (auto& v : est.entries) v /= nrm;
    for (double v : est.entries) {
        if (v != 0.0) {
            if (v < 0.0)
                for (auto& w : est.entries) w = -w;
            break;
        }
    }
    est.norm = 0.0;
    for (double v : est.entries) est.norm += v * v;
    est.norm = std::sqrt(est.norm);

    // Cluster certification: m = n - count(lo) eigenvalues lie in the
    // enclosure [lo, hi] (top case; mirrored below), and a separator c with
    // the same count certifies every other eigenvalue beyond c.
    Dyadic enc_lo = Dyadic::from_bigfloat(lam.lo());
    Dyadic enc_hi = Dyadic::from_bigfloat(lam.hi());
    Dyadic inner = largest ? enc_lo : enc_hi;
    auto inner_count = eng.count_below_certified(inner);
    if (!inner_count) {
        est.diagnostics = "cluster count inconclusive at precision cap";
        return est;
    }
    long m = largest ? (n - *inner_count) : *inner_count;
    if (m < 1) {
        est.diagnostics = "empty cluster (internal)";
        return est;
    }
    est.multiplicity = static_cast<int>(m);

    // Candidate separators, best (widest gap) first.
    const auto& vals = eng.approx_values().values;
    double lam_hat = largest ? vals.back() : vals.front();
    double next_hat = 0.0;
    bool have_next = false;
    long idx_next = largest ? n - 1 - m : m;
    if (idx_next >= 0 && idx_next < n) {
        next_hat = vals[static_cast<size_t>(idx_next)];
        have_next = true;
    }

    std::vector<double> offsets;
    if (have_next) {
        double gap_hat = std::abs(lam_hat - next_hat);
        for (double f : {0.5, 0.25, 0.08}) offsets.push_back(std::max(gap_hat * f, 4.0 * tol0));
    }
    for (double a : {1e-2, 1e-4, 1e-6}) offsets.push_back(a);

    Dyadic sep;
    bool have_sep = false;
    if (!have_next || m == n) {
        // whole spectrum is the cluster; any far probe works
        sep = largest ? Dyadic(-eng.max_degree() - 1) : Dyadic(eng.max_degree() + 1);
        auto c = eng.count_below_certified(sep);
        if (c && *c == (largest ? 0 : n)) have_sep = true;
    } else {
        for (double off : offsets) {
            Dyadic cand = Dyadic::from_double(largest ? lam_hat - off : lam_hat + off);
            bool inside = largest ? cand.cmp(inner) < 0 : inner.cmp(cand) < 0;
            if (!inside) continue;
            auto c = eng.count_below_certified(cand);
            if (!c) continue;
            long want = largest ? n - m : m;
            if (*c == want) {
                sep = cand;
                have_sep = true;
                break;
            }
        }
    }
    if (!have_sep) {
        est.diagnostics = "no certified separator: eigenvalue too close to the rest of the spectrum";
        return est;
    }

    // The cluster must be one distinct eigenvalue for x* to be an eigenvector.
    if (m > 1) {
        Dyadic left = largest ? sep : enc_lo - Dyadic(1);
        Dyadic right = largest ? enc_hi : sep;
        long distinct = eng.exact_counter().distinct_roots_in(left, right);
        if (distinct != 1) {
            est.diagnostics = "cluster spans more than one distinct eigenvalue";
            return est;
        }
    }

    Interval theta_iv = rayleigh_quotient(g, est.entries, 128);
    DInterval theta{theta_iv.lo().to_double(MPFR_RNDD), theta_iv.hi().to_double(MPFR_RNDU)};
    double R = detail::residual_norm_upper(g, est.entries, theta);

    double gap_lo;
    if (largest)
        gap_lo = detail::down(theta.lo - detail::up(sep.to_double()));
    else
        gap_lo = detail::down(detail::down(sep.to_double()) - theta.hi);
    if (!(gap_lo > 0.0) || !std::isfinite(R)) {
        est.diagnostics = "nonpositive certified gap";
        return est;
    }

    double delta = detail::up(detail::up(std::sqrt(2.0) * R) / gap_lo);
    if (!(delta < 1.0)) {
        est.diagnostics = "residual too large relative to gap";
        return est;
    }
    est.delta = delta;
    est.certified = true;
    est.meets_tol = (delta <= tol);
    est.precision_bits = eng.precision_bits_used();
    if (!est.meets_tol)
        est.diagnostics = "achieved delta " + std::to_string(delta) + " above requested tolerance";
    return est;
}

// Perron vector of a connected graph (mu is simple by Perron-Frobenius).
inline EigenvectorEstimate perron_vector_estimate(SpectralEngine& eng, double tol) {
    if (!is_connected(eng.graph()))
        throw Error("perron_vector_estimate: graph must be connected");
    return extreme_eigenvector(eng, true, tol);
}

inline EigenvectorEstimate perron_vector_estimate(const Graph& g, double tol) {
    SpectralEngine eng(g);
    return perron_vector_estimate(eng, tol);
}

}  // namespace eigengap
