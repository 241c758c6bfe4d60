// Exact integer characteristic polynomial of the adjacency matrix via
// Faddeev-LeVerrier.  The multiply A*M reduces to row additions because A is
// 0/1, so one step is O(n^2 * avg_degree) bigint additions.

#pragma once

#include "eigengap/graph.hpp"
#include "eigengap/polynomial.hpp"

#include <vector>

namespace eigengap {

// Returns the monic characteristic polynomial of A(G), lowest degree first:
// p(x) = x^n + c_1 x^(n-1) + ... + c_n.
inline Poly adjacency_charpoly(const Graph& g) {
    const int n = g.order();
    std::vector<mpz_class> M(static_cast<size_t>(n) * n, mpz_class(0));
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;  // M_1 = I
    std::vector<mpz_class> N(static_cast<size_t>(n) * n, mpz_class(0));

    Poly p(static_cast<size_t>(n) + 1, mpz_class(0));
    p[static_cast<size_t>(n)] = 1;

    mpz_class ck, tr;
    for (int k = 1; k <= n; ++k) {
        // N = A * M: row u is the sum of M's rows over the neighbors of u.
        for (int u = 0; u < n; ++u) {
            mpz_class* out = N.data() + static_cast<size_t>(u) * n;
            for (int j = 0; j < n; ++j) out[j] = 0;
            const std::uint64_t* row = g.row(u);
            for (int w = 0; w < g.word_count(); ++w) {
                std::uint64_t bitsw = row[w];
                while (bitsw) {
                    int x = w * 64 + __builtin_ctzll(bitsw);
                    bitsw &= bitsw - 1;
                    const mpz_class* src = M.data() + static_cast<size_t>(x) * n;
                    for (int j = 0; j < n; ++j) out[j] += src[j];
                }
            }
        }
        tr = 0;
        for (int i = 0; i < n; ++i) tr += N[static_cast<size_t>(i) * n + i];
        ck = -tr;
        if (!mpz_divisible_ui_p(ck.get_mpz_t(), static_cast<unsigned long>(k)))
            throw Error("Faddeev-LeVerrier trace not divisible (internal)");
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        p[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            M.swap(N);
            for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += ck;
        }
    }
    return p;
}

}  // namespace eigengap
