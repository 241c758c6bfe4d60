// Integer polynomials and Sturm chains over GMP.
//
// Chains are built with the subresultant PRS (Brown's divisors, tracked by
// absolute value) but each element is kept a *positive* rational multiple of
// the classical Sturm remainder, so sign-variation counts are the classical
// ones.  Root counting is strict-below and multiplicity-aware: the squarefree
// part of p counts distinct roots, and the gcd(p, p') factor is recursed to
// add multiplicities.

#pragma once

#include "eigengap/bigfloat.hpp"

#include <vector>

namespace eigengap {

// Coefficients lowest-degree first; empty vector is the zero polynomial.
using Poly = std::vector<mpz_class>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline const mpz_class& poly_lc(const Poly& p) { return p.back(); }

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    poly_trim(d);
    return d;
}

inline mpz_class poly_content(const Poly& p) {
    mpz_class c = 0;
    for (const auto& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    return c;  // zero for the zero polynomial
}

// Divides by the (positive) content.
inline Poly poly_primitive(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    mpz_class c = poly_content(p);
    if (c > 1)
        for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    return p;
}

inline Poly poly_div_exact_scalar(Poly p, const mpz_class& d) {
    for (auto& a : p) {
        if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
            throw Error("polynomial scalar division not exact");
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    }
    return p;
}

// Exact division of integer polynomials (throws if the division leaves a
// remainder); used for squarefree splits where divisibility is guaranteed.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    poly_trim(num);
    if (poly_is_zero(den)) throw Error("polynomial division by zero");
    if (poly_is_zero(num)) return num;
    int dn = poly_degree(num), dd = poly_degree(den);
    if (dn < dd) throw Error("polynomial division not exact (degree)");
    Poly q(static_cast<size_t>(dn - dd + 1), mpz_class(0));
    mpz_class tmp;
    for (int k = dn - dd; k >= 0; --k) {
        const mpz_class& lead = num[static_cast<size_t>(k + dd)];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), poly_lc(den).get_mpz_t()))
            throw Error("polynomial division not exact");
        mpz_divexact(q[static_cast<size_t>(k)].get_mpz_t(), lead.get_mpz_t(), poly_lc(den).get_mpz_t());
        for (int j = 0; j <= dd; ++j) {
            tmp = q[static_cast<size_t>(k)] * den[static_cast<size_t>(j)];
            num[static_cast<size_t>(k + j)] -= tmp;
        }
    }
    poly_trim(num);
    if (!poly_is_zero(num)) throw Error("polynomial division not exact (remainder)");
    poly_trim(q);
    return q;
}

// Pseudo-remainder: returns R with lc(b)^(deg a - deg b + 1) * a = Q*b + R.
inline Poly poly_pseudo_rem(Poly a, const Poly& b) {
    int db = poly_degree(b);
    int e = poly_degree(a) - db + 1;
    mpz_class tmp;
    while (!poly_is_zero(a) && poly_degree(a) >= db) {
        int k = poly_degree(a) - db;
        mpz_class c = poly_lc(a);
        for (auto& coef : a) coef *= poly_lc(b);
        for (int j = 0; j <= db; ++j) {
            tmp = c * b[static_cast<size_t>(j)];
            a[static_cast<size_t>(k + j)] -= tmp;
        }
        poly_trim(a);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), poly_lc(b).get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& coef : a) coef *= f;
    }
    return a;
}

// Sign of p(a / 2^e), exact.  Evaluates 2^(e*deg) * p(a/2^e) by Horner.
inline int poly_sign_at_dyadic(const Poly& p, const mpz_class& a, unsigned long e) {
    if (poly_is_zero(p)) return 0;
    int d = poly_degree(p);
    mpz_class acc = p[static_cast<size_t>(d)];
    mpz_class term;
    for (int k = d - 1; k >= 0; --k) {
        acc *= a;
        term = p[static_cast<size_t>(k)] << (e * static_cast<unsigned long>(d - k));
        acc += term;
    }
    return sgn(acc);
}

inline int poly_sign_at(const Poly& p, const Dyadic& t) {
    mpz_class a;
    unsigned long e;
    t.as_scaled_int(a, e);
    return poly_sign_at_dyadic(p, a, e);
}

inline int poly_sign_at_neg_inf(const Poly& p) {
    if (poly_is_zero(p)) return 0;
    int s = sgn(poly_lc(p));
    return (poly_degree(p) % 2 == 0) ? s : -s;
}

// Sturm chain: elems[0] = p (primitive), elems[1] ~ p', and each later
// element is a positive multiple of the negated Euclidean remainder.
struct SturmChain {
    std::vector<Poly> elems;

    int variations_at_neg_inf() const {
        int var = 0, prev = 0;
        for (const auto& q : elems) {
            int s = poly_sign_at_neg_inf(q);
            if (s != 0) {
                if (prev != 0 && s != prev) ++var;
                prev = s;
            }
        }
        return var;
    }

    // Sign variations at t, zeros skipped; also reports sign of elems[0](t).
    int variations_at(const Dyadic& t, int* sign_p_at_t = nullptr) const {
        mpz_class a;
        unsigned long e;
        t.as_scaled_int(a, e);
        int var = 0, prev = 0;
        bool first = true;
        for (const auto& q : elems) {
            int s = poly_sign_at_dyadic(q, a, e);
            if (first) {
                if (sign_p_at_t) *sign_p_at_t = s;
                first = false;
            }
            if (s != 0) {
                if (prev != 0 && s != prev) ++var;
                prev = s;
            }
        }
        return var;
    }

    const Poly& last() const { return elems.back(); }
};

inline SturmChain build_sturm_chain(const Poly& p_in) {
    SturmChain chain;
    Poly p = poly_primitive(p_in);
    if (poly_degree(p) < 1) {
        chain.elems.push_back(p);
        return chain;
    }
    chain.elems.push_back(p);
    chain.elems.push_back(poly_derivative(p));

    mpz_class g = 1, h = 1;  // Brown's subresultant divisors, absolute values
    while (true) {
        const Poly& a = chain.elems[chain.elems.size() - 2];
        const Poly& b = chain.elems.back();
        if (poly_is_zero(b) || poly_degree(b) == 0) break;
        int delta = poly_degree(a) - poly_degree(b);
        Poly r = poly_pseudo_rem(a, b);
        if (poly_is_zero(r)) break;
        // effective pseudo-multiplier lc(b)^(delta+1) must act positive
        if (sgn(poly_lc(b)) < 0 && (delta + 1) % 2 == 1)
            for (auto& c : r) c = -c;
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class divisor = g * hp;
        Poly next = poly_div_exact_scalar(std::move(r), divisor);
        for (auto& c : next) c = -c;
        // Brown's updates on absolute values
        g = abs(poly_lc(b));
        if (delta >= 1) {
            mpz_class gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                mpz_class hm;
                mpz_pow_ui(hm.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hm.get_mpz_t());
            }
        }
        chain.elems.push_back(std::move(next));
    }
    return chain;
}

// gcd(p, p') up to a positive constant: the last chain element, primitive and
// with positive leading coefficient.
inline Poly sturm_chain_gcd(const SturmChain& chain) {
    Poly g = poly_primitive(chain.last());
    if (!poly_is_zero(g) && sgn(poly_lc(g)) < 0)
        for (auto& c : g) c = -c;
    return g;
}

// Exact count of real roots of p strictly below t, with multiplicity.
class RootCounter {
public:
    explicit RootCounter(Poly p) {
        Poly cur = poly_primitive(std::move(p));
        while (poly_degree(cur) >= 1) {
            SturmChain full = build_sturm_chain(cur);
            Poly g = sturm_chain_gcd(full);
            if (poly_degree(g) < 1) {
                levels_.push_back(std::move(full));  // cur squarefree already
                break;
            }
            Poly sf = poly_div_exact(cur, g);
            levels_.push_back(build_sturm_chain(sf));
            cur = std::move(g);
        }
    }

    long count_strictly_below(const Dyadic& t) const {
        long total = 0;
        for (const auto& chain : levels_) {
            int sign_at_t = 0;
            int v_t = chain.variations_at(t, &sign_at_t);
            int v_lo = chain.variations_at_neg_inf();
            long roots_le = v_lo - v_t;  // distinct roots in (-inf, t]
            if (sign_at_t == 0) --roots_le;
            total += roots_le;
        }
        return total;
    }

    // Distinct roots of p in the half-open interval (a, b].
    long distinct_roots_in(const Dyadic& a, const Dyadic& b) const {
        if (levels_.empty()) return 0;
        const SturmChain& sf = levels_.front();
        return sf.variations_at(a) - sf.variations_at(b);
    }

    size_t level_count() const { return levels_.size(); }

private:
    std::vector<SturmChain> levels_;
};

}  // namespace eigengap
