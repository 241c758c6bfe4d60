#include "eigengap/checks.hpp"
#include "eigengap/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace eigengap;

namespace {

Graph paw() { return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    Graph g(10);
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

void require_encloses(const Interval& iv, double v, double slack = 1e-12) {
    REQUIRE(iv.lo().to_double(MPFR_RNDD) <= v + slack);
    REQUIRE(iv.hi().to_double(MPFR_RNDU) >= v - slack);
}

const BoundVerdict& find_check(const std::vector<BoundVerdict>& vs, const std::string& id) {
    for (const auto& v : vs)
        if (v.check_id == id) return v;
    throw std::runtime_error("check id missing: " + id);
}

}  // namespace

TEST_CASE("T1 on K3 with H = P3", "[checks]") {
    auto vs = check_subgraph_gap(complete_graph(3), build_graph(3, {{0, 1}, {1, 2}}));
    const BoundVerdict& t1 = find_check(vs, "T1");
    REQUIRE(t1.verdict == Verdict::holds);
    require_encloses(t1.lhs, 2.0 - std::sqrt(2.0));  // 0.5857864...
    require_encloses(t1.rhs, 1.0 / 12.0);
    const BoundVerdict& strong = find_check(vs, "T1a_strong");
    REQUIRE(strong.verdict == Verdict::holds);
    require_encloses(strong.rhs, 1.0 / 6.0);
}

TEST_CASE("T1 on C5 with H = P5", "[checks]") {
    Graph c5 = cycle_graph(5);
    auto vs = check_subgraph_gap(c5, delete_edge_copy(c5, 0, 4));
    const BoundVerdict& t1 = find_check(vs, "T1");
    REQUIRE(t1.verdict == Verdict::holds);
    require_encloses(t1.lhs, 2.0 - std::sqrt(3.0));  // 0.2679...
    require_encloses(t1.rhs, 0.0125);
}

TEST_CASE("strong-case RHS is exactly twice the general RHS", "[checks]") {
    Graph c6 = cycle_graph(6);
    auto vs = check_subgraph_gap(c6, delete_edge_copy(c6, 0, 5));
    const BoundVerdict& t1 = find_check(vs, "T1");
    const BoundVerdict& strong = find_check(vs, "T1a_strong");
    BigFloat doubled_lo(t1.rhs.lo().prec());
    mpfr_mul_ui(doubled_lo.raw(), t1.rhs.lo().raw(), 2, MPFR_RNDN);  // exact scaling
    BigFloat doubled_hi(t1.rhs.hi().prec());
    mpfr_mul_ui(doubled_hi.raw(), t1.rhs.hi().raw(), 2, MPFR_RNDN);
    REQUIRE(strong.rhs.lo() == doubled_lo);
    REQUIRE(strong.rhs.hi() == doubled_hi);
}

TEST_CASE("verdicts are stable under a tighter policy rerun", "[checks]") {
    TolerancePolicy tight;
    tight.rhs_fraction = 1.0 / 1024;
    tight.retry_fraction = 1.0 / 8192;
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 10; ++iter) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng() % 5), 0.45, rng);
        SpectralEngine a(g), b(g);
        BoundVerdict va = check_nonbipartite_gap(a);
        BoundVerdict vb = check_nonbipartite_gap(b, tight);
        REQUIRE(va.verdict == vb.verdict);
        auto pa = check_diameter_power(a);
        auto pb = check_diameter_power(b, tight);
        for (size_t i = 0; i < pa.size(); ++i) REQUIRE(pa[i].verdict == pb[i].verdict);
    }
}

TEST_CASE("T1 hypothesis failures", "[checks]") {
    Graph k3 = complete_graph(3);
    auto same = check_subgraph_gap(k3, k3);
    REQUIRE(same.size() == 1);
    REQUIRE(same[0].verdict == Verdict::skipped);
    REQUIRE_FALSE(same[0].all_hypotheses_hold());

    Graph disconnected(3);
    disconnected.add_edge(0, 1);
    auto dis = check_subgraph_gap(disconnected, Graph(3));
    REQUIRE(dis[0].verdict == Verdict::skipped);

    REQUIRE_THROWS_AS(check_subgraph_gap(k3, complete_graph(4)), Error);
}

TEST_CASE("T2 on C5 and bipartite rejection", "[checks]") {
    SpectralEngine c5(cycle_graph(5));
    BoundVerdict v = check_nonbipartite_gap(c5);
    REQUIRE(v.verdict == Verdict::holds);
    require_encloses(v.lhs, (3.0 - std::sqrt(5.0)) / 2.0);  // 0.381966...
    require_encloses(v.rhs, 0.025);

    SpectralEngine k33(complete_bipartite_graph(3, 3));
    BoundVerdict b = check_nonbipartite_gap(k33);
    REQUIRE(b.verdict == Verdict::skipped);
}

TEST_CASE("regular variants T11 and T21", "[checks]") {
    // C5 vs P5: lhs ~ 0.268 > 1/(5*3)
    SpectralEngine c5(cycle_graph(5));
    Graph p5 = delete_edge_copy(cycle_graph(5), 0, 4);
    auto vs = check_regular_variants(c5, &p5);
    const BoundVerdict& t11 = find_check(vs, "T11");
    REQUIRE(t11.verdict == Verdict::holds);
    require_encloses(t11.rhs, 1.0 / 15.0);

    // K4 vs K4 - e: lhs = 3 - (1+sqrt17)/2 > 1/(4*2)
    SpectralEngine k4(complete_graph(4));
    Graph k4e = delete_edge_copy(complete_graph(4), 0, 1);
    auto vs4 = check_regular_variants(k4, &k4e);
    const BoundVerdict& t11b = find_check(vs4, "T11");
    REQUIRE(t11b.verdict == Verdict::holds);
    require_encloses(t11b.lhs, 3.0 - (1.0 + std::sqrt(17.0)) / 2.0);
    require_encloses(t11b.rhs, 0.125);

    // Petersen T21: lhs = 1 > 2/(10*5)
    SpectralEngine pet(petersen());
    auto vsp = check_regular_variants(pet, nullptr);
    const BoundVerdict& t21 = find_check(vsp, "T21");
    REQUIRE(t21.verdict == Verdict::holds);
    require_encloses(t21.lhs, 1.0);
    require_encloses(t21.rhs, 0.04);

    // nonregular input: skipped
    SpectralEngine pw(paw());
    auto vn = check_regular_variants(pw, nullptr);
    REQUIRE(vn.size() == 1);
    REQUIRE(vn[0].verdict == Verdict::skipped);
}

TEST_CASE("theorem 4 and the CGN bound", "[checks]") {
    SpectralEngine pw(paw());
    auto vs = check_theorem4(pw);
    REQUIRE(find_check(vs, "T4").verdict == Verdict::holds);
    REQUIRE(find_check(vs, "CGN").verdict == Verdict::holds);
    // paw: mu ~ 2.17008649, mu_min ~ -1.4811943 -> lhs = 3 + mu_min
    require_encloses(find_check(vs, "T4").lhs, 3.0 - 1.4811943);

    // K4 - e (diamond): spectrum {(1±sqrt17)/2, 0, -1}
    SpectralEngine dia(delete_edge_copy(complete_graph(4), 0, 1));
    auto vd = check_theorem4(dia);
    REQUIRE(find_check(vd, "T4").verdict == Verdict::holds);
    require_encloses(find_check(vd, "T4").lhs, 3.0 + (1.0 - std::sqrt(17.0)) / 2.0);

    // star: T4 skipped (bipartite), CGN holds with rhs = 6/52
    SpectralEngine star(star_graph(4));
    auto vst = check_theorem4(star);
    REQUIRE(find_check(vst, "T4").verdict == Verdict::skipped);
    const BoundVerdict& cgn = find_check(vst, "CGN");
    REQUIRE(cgn.verdict == Verdict::holds);
    require_encloses(cgn.lhs, 3.0 - std::sqrt(3.0));
    require_encloses(cgn.rhs, 6.0 / 52.0);

    // regular input: both skipped
    SpectralEngine c5(cycle_graph(5));
    for (const auto& v : check_theorem4(c5)) REQUIRE(v.verdict == Verdict::skipped);
}

TEST_CASE("eigenvector ratio check", "[checks]") {
    // tight case: P3 has x1/x2 = mu^{-1} exactly; fail-safe must not flag
    SpectralEngine p3(path_graph(3));
    BoundVerdict v = check_eigenvector_ratio(p3);
    REQUIRE(v.verdict == Verdict::holds);

    SpectralEngine star(star_graph(4));
    REQUIRE(check_eigenvector_ratio(star).verdict == Verdict::holds);

    SpectralEngine dis(Graph(3));
    REQUIRE(check_eigenvector_ratio(dis).verdict == Verdict::skipped);

    // property sweep: random connected graphs, no certified violations
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng() % 13), 0.3, rng);
        SpectralEngine eng(g);
        REQUIRE(check_eigenvector_ratio(eng).verdict == Verdict::holds);
    }
}

TEST_CASE("diameter power checks", "[checks]") {
    SpectralEngine p3(path_graph(3));
    auto vs = check_diameter_power(p3);
    REQUIRE(vs.size() == 3);
    // mu^2 = 2 > 3/sqrt3 = sqrt3
    REQUIRE(vs[0].verdict == Verdict::holds);
    require_encloses(vs[0].lhs, 2.0);
    require_encloses(vs[0].rhs, std::sqrt(3.0));
    // w2 + w3 = 4 + 6 = 10 >= 9
    REQUIRE(vs[1].check_id == "WALK");
    REQUIRE(vs[1].verdict == Verdict::holds);
    require_encloses(vs[1].lhs, 10.0);
    require_encloses(vs[1].rhs, 9.0);
    // sqrt2 + 2 >= 3
    REQUIRE(vs[2].verdict == Verdict::holds);

    SpectralEngine c5(cycle_graph(5));
    auto v5 = check_diameter_power(c5);
    REQUIRE(v5[0].verdict == Verdict::holds);
    require_encloses(v5[0].lhs, 4.0);

    SpectralEngine star(star_graph(4));
    auto vst = check_diameter_power(star);
    REQUIRE(vst[0].verdict == Verdict::holds);
    require_encloses(vst[0].lhs, 3.0);

    // complete graphs hit mu^{D-1} + mu^D = n with equality: needs the exact
    // integer probe, never Undecided
    for (int s = 3; s <= 7; ++s) {
        SpectralEngine ks(complete_graph(s));
        auto vk = check_diameter_power(ks);
        REQUIRE(vk[2].verdict == Verdict::holds);
    }

    SpectralEngine p2(path_graph(2));
    auto vp2 = check_diameter_power(p2);
    REQUIRE(vp2[0].verdict == Verdict::skipped);
}

TEST_CASE("edge deletion distance lemma", "[checks]") {
    BoundVerdict k3 = edge_deletion_distance_lemma(complete_graph(3), 0, 1);
    REQUIRE(k3.verdict == Verdict::holds);
    require_encloses(k3.lhs, 2.0);  // equality case 1+1 = 2D
    require_encloses(k3.rhs, 2.0);

    BoundVerdict c5 = edge_deletion_distance_lemma(cycle_graph(5), 0, 4);
    REQUIRE(c5.verdict == Verdict::holds);
    require_encloses(c5.lhs, 4.0);  // middle vertex of P5: 2+2 = 2D
    require_encloses(c5.rhs, 4.0);

    // disconnecting edge: hypothesis failure
    BoundVerdict pend = edge_deletion_distance_lemma(paw(), 2, 3);
    REQUIRE(pend.verdict == Verdict::skipped);

    // exhaustive n <= 5: zero violations
    for (int n = 2; n <= 5; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            for (auto [u, v] : g.edges()) {
                BoundVerdict bv = edge_deletion_distance_lemma(g, u, v);
                REQUIRE(bv.verdict != Verdict::fails);
            }
        });
    }
}

TEST_CASE("sign cut subgraph", "[checks]") {
    // C5 -> 4-edge spanning path
    SpectralEngine c5(cycle_graph(5));
    SignCutResult r5 = sign_cut_subgraph(c5);
    REQUIRE(r5.record.verdict == Verdict::holds);
    REQUIRE(r5.h.edge_count() == 4);
    REQUIRE(r5.spanning);
    REQUIRE(r5.bipartite);
    REQUIRE(r5.proper);
    REQUIRE(r5.connected);

    // K3 -> 2 crossing edges, one vertex alone on the negative side
    SpectralEngine k3(complete_graph(3));
    SignCutResult r3 = sign_cut_subgraph(k3);
    REQUIRE(r3.record.verdict == Verdict::holds);
    REQUIRE(r3.h.edge_count() == 2);
    REQUIRE(r3.connected);

    // Petersen: spanning bipartite proper; connectivity reported
    SpectralEngine pet(petersen());
    SignCutResult rp = sign_cut_subgraph(pet);
    REQUIRE(rp.record.verdict == Verdict::holds);
    REQUIRE(rp.bipartite);
    REQUIRE(rp.proper);
    REQUIRE(rp.h.edge_count() < 15);

    // bipartite input: skipped
    SpectralEngine k33(complete_bipartite_graph(3, 3));
    REQUIRE(sign_cut_subgraph(k33).record.verdict == Verdict::skipped);
}
