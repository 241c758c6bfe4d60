#include "eigengap/charpoly.hpp"
#include "eigengap/enumerate.hpp"
#include "eigengap/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace eigengap;

namespace {
Graph petersen() {
    // Kneser graph K(5,2): vertices = 2-subsets of {0..4}, edges between disjoint pairs
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
}  // namespace

TEST_CASE("characteristic polynomials of known graphs", "[polynomial]") {
    // K3: x^3 - 3x - 2
    Poly k3 = adjacency_charpoly(complete_graph(3));
    REQUIRE(k3 == Poly{mpz_class(-2), mpz_class(-3), mpz_class(0), mpz_class(1)});
    // P3: x^3 - 2x
    Poly p3 = adjacency_charpoly(path_graph(3));
    REQUIRE(p3 == Poly{mpz_class(0), mpz_class(-2), mpz_class(0), mpz_class(1)});
    // empty graph on 4 vertices: x^4
    Poly e4 = adjacency_charpoly(Graph(4));
    REQUIRE(e4 == Poly{mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(1)});
    // K4: (x-3)(x+1)^3 = x^4 - 6x^2 - 8x - 3
    Poly k4 = adjacency_charpoly(complete_graph(4));
    REQUIRE(k4 == Poly{mpz_class(-3), mpz_class(-8), mpz_class(-6), mpz_class(0), mpz_class(1)});
}

TEST_CASE("root counting on known spectra", "[polynomial]") {
    auto count = [](const Graph& g, double t) {
        return RootCounter(adjacency_charpoly(g)).count_strictly_below(Dyadic::from_double(t));
    };
    // K3 spectrum {2, -1, -1}
    REQUIRE(count(complete_graph(3), 0.0) == 2);
    REQUIRE(count(complete_graph(3), -1.0) == 0);   // strict
    REQUIRE(count(complete_graph(3), -0.5) == 2);
    REQUIRE(count(complete_graph(3), 2.0) == 2);
    REQUIRE(count(complete_graph(3), 2.5) == 3);
    // P3 spectrum {sqrt2, 0, -sqrt2}
    REQUIRE(count(path_graph(3), 0.0) == 1);
    // C5: mu = 2 simple
    REQUIRE(count(cycle_graph(5), 2.0) == 4);
    // empty graph: x^3, root 0 with multiplicity 3
    REQUIRE(count(Graph(3), 0.0) == 0);
    REQUIRE(count(Graph(3), 0.5) == 3);
    // Petersen {3, 1 (x5), -2 (x4)}
    Graph pet = petersen();
    REQUIRE(count(pet, -2.0) == 0);
    REQUIRE(count(pet, 0.0) == 4);
    REQUIRE(count(pet, 1.0) == 4);
    REQUIRE(count(pet, 1.5) == 9);
    REQUIRE(count(pet, 3.0) == 9);
    REQUIRE(count(pet, 3.5) == 10);
}

TEST_CASE("root counter handles repeated factors via squarefree levels", "[polynomial]") {
    Graph pet = petersen();
    RootCounter rc(adjacency_charpoly(pet));
    REQUIRE(rc.level_count() >= 2);  // spectrum has multiplicities 1, 5, 4

    // counting is monotone in t and hits 0 / n at the ends
    Poly p = adjacency_charpoly(pet);
    long prev = -1;
    for (double t = -4.0; t <= 4.0; t += 0.25) {
        long c = RootCounter(p).count_strictly_below(Dyadic::from_double(t));
        REQUIRE(c >= prev);
        prev = c;
    }
    REQUIRE(RootCounter(p).count_strictly_below(Dyadic(-4)) == 0);
    REQUIRE(RootCounter(p).count_strictly_below(Dyadic(4)) == 10);
}

TEST_CASE("sturm chain counts agree with numeric roots on random graphs", "[polynomial]") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
        Poly p = adjacency_charpoly(g);
        RootCounter rc(p);
        // total number of real roots (with multiplicity) must be n
        REQUIRE(rc.count_strictly_below(Dyadic(g.order() + 1)) == g.order());
        REQUIRE(rc.count_strictly_below(Dyadic(-g.order() - 1)) == 0);
    }
}

TEST_CASE("polynomial helpers", "[polynomial]") {
    // (x^2 - 1)(x - 2) = x^3 - 2x^2 - x + 2, derivative 3x^2 - 4x - 1
    Poly p{mpz_class(2), mpz_class(-1), mpz_class(-2), mpz_class(1)};
    Poly d = poly_derivative(p);
    REQUIRE(d == Poly{mpz_class(-1), mpz_class(-4), mpz_class(3)});

    Poly q = poly_div_exact(p, Poly{mpz_class(-2), mpz_class(1)});  // divide by (x-2)
    REQUIRE(q == Poly{mpz_class(-1), mpz_class(0), mpz_class(1)});
    REQUIRE_THROWS_AS(poly_div_exact(p, Poly{mpz_class(3), mpz_class(1)}), Error);

    REQUIRE(poly_sign_at(p, Dyadic::from_double(0.0)) == 1);
    REQUIRE(poly_sign_at(p, Dyadic::from_double(1.5)) == -1);
    REQUIRE(poly_sign_at(p, Dyadic::from_double(1.0)) == 0);
    REQUIRE(poly_sign_at_neg_inf(p) == -1);
}
