#include "eigengap/charpoly.hpp"
#include "eigengap/eigenvector.hpp"
#include "eigengap/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace eigengap;

namespace {

// Independent oracle for n <= 4: refine the extreme characteristic-polynomial
// root by MPFR Newton iteration from the double seed, then solve
// (A - mu I) x = 0 by Gaussian elimination at 256 bits.
struct OracleVector {
    std::vector<double> entries;  // unit, sign-aligned to first nonzero positive
    double mu;
};

OracleVector exact_extreme_vector(const Graph& g, bool largest) {
    const int n = g.order();
    Poly p = adjacency_charpoly(g);
    const mpfr_prec_t prec = 256;

    ApproxSpectrum sp = approx_spectrum(g, false);
    BigFloat mu(prec);
    mpfr_set_d(mu.raw(), largest ? sp.values.back() : sp.values.front(), MPFR_RNDN);

    BigFloat val(prec), der(prec), tmp(prec);
    for (int it = 0; it < 80; ++it) {
        // Horner for p(mu) and p'(mu)
        mpfr_set_si(val.raw(), 0, MPFR_RNDN);
        mpfr_set_si(der.raw(), 0, MPFR_RNDN);
        for (int k = poly_degree(p); k >= 0; --k) {
            mpfr_mul(der.raw(), der.raw(), mu.raw(), MPFR_RNDN);
            mpfr_add(der.raw(), der.raw(), val.raw(), MPFR_RNDN);
            mpfr_mul(val.raw(), val.raw(), mu.raw(), MPFR_RNDN);
            mpfr_set_z(tmp.raw(), p[static_cast<size_t>(k)].get_mpz_t(), MPFR_RNDN);
            mpfr_add(val.raw(), val.raw(), tmp.raw(), MPFR_RNDN);
        }
        mpfr_div(tmp.raw(), val.raw(), der.raw(), MPFR_RNDN);
        mpfr_sub(mu.raw(), mu.raw(), tmp.raw(), MPFR_RNDN);
    }

    // Solve (A - mu I) x = 0: fix the entry of largest approximate magnitude
    // to 1 and eliminate the rest.
    ApproxSpectrum spv = approx_spectrum(g, true);
    int col = largest ? n - 1 : 0;
    int pin = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(spv.vectors[static_cast<size_t>(i) + static_cast<size_t>(n) * col]) >
            std::abs(spv.vectors[static_cast<size_t>(pin) + static_cast<size_t>(n) * col]))
            pin = i;

    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
        if (j != pin) cols.push_back(j);
    // rows: all but one (the system is rank n-1); drop row pin
    std::vector<int> rows = cols;
    auto a_entry = [&](int i, int j, BigFloat& out) {
        if (i == j) {
            mpfr_neg(out.raw(), mu.raw(), MPFR_RNDN);
        } else {
            mpfr_set_si(out.raw(), g.has_edge(i, j) ? 1 : 0, MPFR_RNDN);
        }
    };
    const int k = n - 1;
    std::vector<BigFloat> M(static_cast<size_t>(k) * k, BigFloat(prec));
    std::vector<BigFloat> b(static_cast<size_t>(k), BigFloat(prec));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) a_entry(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)], M[static_cast<size_t>(r) * k + c]);
        BigFloat av(prec);
        a_entry(rows[static_cast<size_t>(r)], pin, av);
        mpfr_neg(b[static_cast<size_t>(r)].raw(), av.raw(), MPFR_RNDN);
    }
    // Gaussian elimination with partial pivoting
    for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
            if (mpfr_cmpabs(M[static_cast<size_t>(r) * k + c].raw(), M[static_cast<size_t>(piv) * k + c].raw()) > 0) piv = r;
        for (int j = 0; j < k; ++j) std::swap(M[static_cast<size_t>(c) * k + j], M[static_cast<size_t>(piv) * k + j]);
        std::swap(b[static_cast<size_t>(c)], b[static_cast<size_t>(piv)]);
        for (int r = c + 1; r < k; ++r) {
            BigFloat f(prec);
            mpfr_div(f.raw(), M[static_cast<size_t>(r) * k + c].raw(), M[static_cast<size_t>(c) * k + c].raw(), MPFR_RNDN);
            for (int j = c; j < k; ++j) {
                BigFloat t(prec);
                mpfr_mul(t.raw(), f.raw(), M[static_cast<size_t>(c) * k + j].raw(), MPFR_RNDN);
                mpfr_sub(M[static_cast<size_t>(r) * k + j].raw(), M[static_cast<size_t>(r) * k + j].raw(), t.raw(), MPFR_RNDN);
            }
            BigFloat t(prec);
            mpfr_mul(t.raw(), f.raw(), b[static_cast<size_t>(c)].raw(), MPFR_RNDN);
            mpfr_sub(b[static_cast<size_t>(r)].raw(), b[static_cast<size_t>(r)].raw(), t.raw(), MPFR_RNDN);
        }
    }
    std::vector<BigFloat> x(static_cast<size_t>(k), BigFloat(prec));
    for (int r = k - 1; r >= 0; --r) {
        BigFloat acc = b[static_cast<size_t>(r)];
        for (int j = r + 1; j < k; ++j) {
            BigFloat t(prec);
            mpfr_mul(t.raw(), M[static_cast<size_t>(r) * k + j].raw(), x[static_cast<size_t>(j)].raw(), MPFR_RNDN);
            mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
        }
        mpfr_div(x[static_cast<size_t>(r)].raw(), acc.raw(), M[static_cast<size_t>(r) * k + r].raw(), MPFR_RNDN);
    }
    std::vector<double> full(static_cast<size_t>(n), 0.0);
    full[static_cast<size_t>(pin)] = 1.0;
    for (int c = 0; c < k; ++c) full[static_cast<size_t>(cols[static_cast<size_t>(c)])] = x[static_cast<size_t>(c)].to_double();
    double nrm = 0;
    for (double v : full) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (auto& v : full) v /= nrm;
    for (double v : full)
        if (v != 0.0) {
            if (v < 0.0)
                for (auto& w : full) w = -w;
            break;
        }
    OracleVector out;
    out.entries = full;
    out.mu = mu.to_double();
    return out;
}

}  // namespace

TEST_CASE("perron estimates on closed-form graphs", "[eigenvector]") {
    // P3: entries proportional to (1, sqrt2, 1)
    SpectralEngine p3(path_graph(3));
    EigenvectorEstimate e = perron_vector_estimate(p3, 1e-9);
    REQUIRE(e.certified);
    REQUIRE(e.meets_tol);
    REQUIRE(e.delta < 1e-11);
    double r = e.entries[0] / e.entries[1];
    REQUIRE_THAT(r, Catch::Matchers::WithinAbs(1.0 / std::sqrt(2.0), 1e-12));
    REQUIRE(e.entries_certified_positive());
    REQUIRE(e.multiplicity == 1);

    // star K_{1,3}: leaf/center = 1/sqrt(3), leaf/leaf = 1
    SpectralEngine star(star_graph(4));
    EigenvectorEstimate es = perron_vector_estimate(star, 1e-9);
    REQUIRE(es.certified);
    REQUIRE_THAT(es.entries[1] / es.entries[0], Catch::Matchers::WithinAbs(1.0 / std::sqrt(3.0), 1e-12));
    REQUIRE_THAT(es.entries[2] / es.entries[3], Catch::Matchers::WithinAbs(1.0, 1e-12));

    // C5 regular: constant Perron vector 1/sqrt(5)
    SpectralEngine c5(cycle_graph(5));
    EigenvectorEstimate ec = perron_vector_estimate(c5, 1e-9);
    REQUIRE(ec.certified);
    for (double v : ec.entries)
        REQUIRE_THAT(v, Catch::Matchers::WithinAbs(1.0 / std::sqrt(5.0), ec.delta + 1e-13));
}

TEST_CASE("delta certificate validated against the exact oracle for n <= 4", "[eigenvector]") {
    for (int n = 2; n <= 4; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            SpectralEngine eng(g);
            EigenvectorEstimate est = extreme_eigenvector(eng, true, 1e-8);
            REQUIRE(est.certified);
            OracleVector oracle = exact_extreme_vector(g, true);
            for (int i = 0; i < n; ++i) {
                REQUIRE(std::abs(est.entries[static_cast<size_t>(i)] -
                                 oracle.entries[static_cast<size_t>(i)]) <= est.delta + 1e-15);
            }
        });
    }
}

TEST_CASE("bottom eigenvector certification handles multiplicity", "[eigenvector]") {
    // K3: mu_min = -1 with multiplicity 2
    SpectralEngine k3(complete_graph(3));
    EigenvectorEstimate e = extreme_eigenvector(k3, false, 1e-8);
    REQUIRE(e.certified);
    REQUIRE(e.multiplicity == 2);
    REQUIRE(e.delta < 1e-10);
    // the certified eigenvalue encloses -1
    REQUIRE(e.eigenvalue.lo().cmp_si(-1) <= 0);
    REQUIRE(e.eigenvalue.hi().cmp_si(-1) >= 0);

    // C5: mu_min = 2cos(4pi/5), multiplicity 2
    SpectralEngine c5(cycle_graph(5));
    EigenvectorEstimate ec = extreme_eigenvector(c5, false, 1e-8);
    REQUIRE(ec.certified);
    REQUIRE(ec.multiplicity == 2);

    // P4: mu_min simple
    SpectralEngine p4(path_graph(4));
    EigenvectorEstimate ep = extreme_eigenvector(p4, false, 1e-8);
    REQUIRE(ep.certified);
    REQUIRE(ep.multiplicity == 1);
}

TEST_CASE("estimate fields and errors", "[eigenvector]") {
    REQUIRE_THROWS_AS(perron_vector_estimate(Graph(3), 1e-9), Error);  // disconnected
    REQUIRE_THROWS_AS(perron_vector_estimate(path_graph(3), 0.0), Error);

    SpectralEngine eng(complete_graph(4));
    EigenvectorEstimate e = extreme_eigenvector(eng, true, 1e-9);
    REQUIRE_THAT(e.norm, Catch::Matchers::WithinAbs(1.0, 1e-12));
    // sign normalization: first nonzero entry positive
    REQUIRE(e.entries[0] > 0.0);

    // single vertex
    SpectralEngine one(Graph(1));
    EigenvectorEstimate e1 = extreme_eigenvector(one, true, 1e-9);
    REQUIRE(e1.certified);
    REQUIRE(e1.entries == std::vector<double>{1.0});
}
