// Floating-point eigen approximations used only to seed certified bisection
// and as eigenvector starting points.  Nothing here is trusted; every claim
// that leaves the library is re-certified by exact or interval arithmetic.
//
// Small orders use a hand-rolled cyclic Jacobi (no allocation in the sweep
// hot path); larger ones go through Eigen's SelfAdjointEigenSolver.

#pragma once

#include "eigengap/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace eigengap {

struct ApproxSpectrum {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column-major, vectors[i + n*k] = entry i of k-th vector
};

namespace detail {

constexpr int kJacobiMax = 16;

inline void jacobi_small(const Graph& g, bool want_vectors, ApproxSpectrum& out) {
    const int n = g.order();
    std::array<double, kJacobiMax * kJacobiMax> a{};
    std::array<double, kJacobiMax * kJacobiMax> v{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = g.has_edge(i, j) ? 1.0 : 0.0;
    if (want_vectors)
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    for (int sweep = 0; sweep < 40; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (off < 1e-28) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (apq == 0.0) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double tt = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(tt * tt + 1.0);
                double s = tt * c;
                for (int k = 0; k < n; ++k) {
                    double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = V(k, p), vkq = V(k, q);
                        V(k, p) = c * vkp - s * vkq;
                        V(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::array<int, kJacobiMax> order{};
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.begin() + n,
              [&](int x, int y) { return A(x, x) < A(y, y); });

    out.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = A(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]);
    if (want_vectors) {
        out.vectors.resize(static_cast<size_t>(n) * n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                out.vectors[static_cast<size_t>(i) + static_cast<size_t>(n) * k] = V(i, order[static_cast<size_t>(k)]);
    } else {
        out.vectors.clear();
    }
}

}  // namespace detail

inline ApproxSpectrum approx_spectrum(const Graph& g, bool want_vectors = false) {
    ApproxSpectrum out;
    const int n = g.order();
    if (n <= detail::kJacobiMax) {
        detail::jacobi_small(g, want_vectors, out);
        return out;
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) a(i, j) = a(j, i) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, want_vectors ? Eigen::ComputeEigenvectors
                                                                      : Eigen::EigenvaluesOnly);
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    if (want_vectors) {
        out.vectors.resize(static_cast<size_t>(n) * n);
        Eigen::Map<Eigen::MatrixXd>(out.vectors.data(), n, n) = es.eigenvectors();
    }
    return out;
}

}  // namespace eigengap
