// Inertia of A - t*I by symmetric elimination, four ways:
//
//   count_below_interval_double  one-ulp-outward double LDL^T; fast, may be
//                                inconclusive when a pivot interval hits 0
//   count_below_interval_mpfr    the same at a chosen MPFR precision
//   inertia_bareiss              exact fraction-free integer elimination on
//                                2^e*A - a*I (pivots are leading principal
//                                minors; Jacobi sign rule); inconclusive only
//                                when a 2x2 pivot would be required
//   inertia_ldl_exact            exact mpq LDL^T with 1x1/2x2 pivots; always
//                                conclusive
//
// When a pivot interval excludes zero the exact elimination provably shares
// its sign, so interval-certified counts equal the exact ones.

#pragma once

#include "eigengap/graph.hpp"
#include "eigengap/interval.hpp"

#include <optional>
#include <vector>

namespace eigengap {

struct Inertia {
    int neg = 0, zero = 0, pos = 0;
};

inline std::optional<int> count_below_interval_double(const Graph& g, const Dyadic& t) {
    if (!t.fits_double()) return std::nullopt;
    const int n = g.order();
    const double td = t.to_double();

    thread_local std::vector<double> lo_buf, hi_buf;
    lo_buf.assign(static_cast<size_t>(n) * n, 0.0);
    hi_buf.assign(static_cast<size_t>(n) * n, 0.0);
    auto L = [&](int i, int j) -> double& { return lo_buf[static_cast<size_t>(i) * n + j]; };
    auto H = [&](int i, int j) -> double& { return hi_buf[static_cast<size_t>(i) * n + j]; };

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v = (i == j) ? -td : (g.has_edge(i, j) ? 1.0 : 0.0);
            L(i, j) = v;
            H(i, j) = v;
        }
    }

    int neg = 0;
    for (int k = 0; k < n; ++k) {
        DInterval pivot{L(k, k), H(k, k)};
        if (!di_finite(pivot)) return std::nullopt;
        if (pivot.hi < 0.0)
            ++neg;
        else if (!(pivot.lo > 0.0))
            return std::nullopt;
        for (int i = k + 1; i < n; ++i) {
            DInterval wki{L(k, i), H(k, i)};
            if (wki.lo == 0.0 && wki.hi == 0.0) continue;
            DInterval f = di_div(wki, pivot);
            for (int j = i; j < n; ++j) {
                DInterval upd = di_sub(DInterval{L(i, j), H(i, j)}, di_mul(f, DInterval{L(k, j), H(k, j)}));
                if (!di_finite(upd)) return std::nullopt;
                L(i, j) = upd.lo;
                H(i, j) = upd.hi;
            }
        }
    }
    return neg;
}

inline std::optional<int> count_below_interval_mpfr(const Graph& g, const Dyadic& t, mpfr_prec_t prec) {
    const int n = g.order();
    Interval tI = Interval::point_dyadic(t);
    std::vector<Interval> w(static_cast<size_t>(n) * n);
    auto W = [&](int i, int j) -> Interval& { return w[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            W(i, j) = (i == j) ? ineg(tI) : Interval::of_long(g.has_edge(i, j) ? 1 : 0);

    int neg = 0;
    for (int k = 0; k < n; ++k) {
        const Interval& pivot = W(k, k);
        if (pivot.is_negative())
            ++neg;
        else if (!pivot.is_positive())
            return std::nullopt;
        for (int i = k + 1; i < n; ++i) {
            if (W(k, i).lo().sign() == 0 && W(k, i).hi().sign() == 0) continue;
            Interval f = idiv(W(k, i), pivot, prec);
            for (int j = i; j < n; ++j)
                W(i, j) = isub(W(i, j), imul(f, W(k, j), prec), prec);
        }
    }
    return neg;
}

// Exact fraction-free symmetric elimination on M = 2^e*A - a*I.  Pivots are
// the leading principal minors of the (symmetrically permuted) M; the number
// of eigenvalues of A below t equals the sign changes in (1, d_1, ..., d_n).
// A trailing all-zero Schur complement contributes only zero eigenvalues
// (values equal to t) and terminates conclusively.
inline std::optional<Inertia> inertia_bareiss(const Graph& g, const Dyadic& t) {
    const int n = g.order();
    mpz_class a;
    unsigned long e;
    t.as_scaled_int(a, e);
    mpz_class one_shift = 1;
    one_shift <<= e;

    std::vector<mpz_class> m(static_cast<size_t>(n) * n, mpz_class(0));
    auto M = [&](int i, int j) -> mpz_class& { return m[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) M(i, j) = one_shift;
        M(i, i) = -a;
    }

    Inertia in;
    mpz_class prev = 1;
    int prev_sign = 1;
    mpz_class tmp;
    for (int k = 0; k < n; ++k) {
        if (M(k, k) == 0) {
            int swap_j = -1;
            for (int j = k + 1; j < n; ++j)
                if (M(j, j) != 0) {
                    swap_j = j;
                    break;
                }
            if (swap_j < 0) {
                bool all_zero = true;
                for (int i = k; i < n && all_zero; ++i)
                    for (int j = k; j < n && all_zero; ++j)
                        if (M(i, j) != 0) all_zero = false;
                if (all_zero) {
                    in.zero += n - k;
                    return in;
                }
                return std::nullopt;  // would need a 2x2 pivot
            }
            for (int c = 0; c < n; ++c) std::swap(M(k, c), M(swap_j, c));
            for (int r = 0; r < n; ++r) std::swap(M(r, k), M(r, swap_j));
        }
        const mpz_class d = M(k, k);
        int cur_sign = sgn(d);
        if (cur_sign != prev_sign)
            ++in.neg;
        else
            ++in.pos;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= i; ++j) {
                tmp = M(i, j) * d;
                tmp -= M(i, k) * M(j, k);
                mpz_divexact(M(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                if (j != i) M(j, i) = M(i, j);
            }
        }
        prev = d;
        prev_sign = cur_sign;
    }
    return in;
}

// Exact rational LDL^T with 1x1 and 2x2 pivots; always conclusive.  2x2
// pivots arise only when every remaining diagonal entry is zero, so the
// block is [[0,b],[b,0]] and contributes one positive and one negative
// eigenvalue.
inline Inertia inertia_ldl_exact(const Graph& g, const mpq_class& t) {
    const int n = g.order();
    std::vector<mpq_class> w(static_cast<size_t>(n) * n, mpq_class(0));
    auto W = [&](int i, int j) -> mpq_class& { return w[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) W(i, j) = 1;
        W(i, i) = -t;
    }
    auto sym_swap = [&](int x, int y) {
        if (x == y) return;
        for (int c = 0; c < n; ++c) std::swap(W(x, c), W(y, c));
        for (int r = 0; r < n; ++r) std::swap(W(r, x), W(r, y));
    };

    Inertia in;
    int k = 0;
    mpq_class f, corr;
    while (k < n) {
        if (W(k, k) == 0) {
            int diag_j = -1;
            for (int j = k + 1; j < n; ++j)
                if (W(j, j) != 0) {
                    diag_j = j;
                    break;
                }
            if (diag_j >= 0) {
                sym_swap(k, diag_j);
            } else {
                int off_j = -1;
                for (int j = k + 1; j < n; ++j)
                    if (W(k, j) != 0) {
                        off_j = j;
                        break;
                    }
                if (off_j < 0) {  // whole active column zero: eigenvalue equal to t
                    ++in.zero;
                    ++k;
                    continue;
                }
                sym_swap(k + 1, off_j);
                const mpq_class b = W(k, k + 1);
                ++in.neg;
                ++in.pos;
                for (int i = k + 2; i < n; ++i) {
                    for (int j = k + 2; j <= i; ++j) {
                        // Schur update for pivot [[0,b],[b,0]]
                        corr = (W(k, i) * W(k + 1, j) + W(k + 1, i) * W(k, j)) / b;
                        W(i, j) -= corr;
                        if (j != i) W(j, i) = W(i, j);
                    }
                }
                k += 2;
                continue;
            }
        }
        const mpq_class d = W(k, k);
        if (sgn(d) < 0)
            ++in.neg;
        else
            ++in.pos;
        for (int i = k + 1; i < n; ++i) {
            if (W(k, i) == 0) continue;
            f = W(k, i) / d;
            for (int j = i; j < n; ++j) {
                if (W(k, j) == 0) continue;
                W(i, j) -= f * W(k, j);
                if (j != i) W(j, i) = W(i, j);
            }
        }
        ++k;
    }
    return in;
}

}  // namespace eigengap
