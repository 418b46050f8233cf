#pragma once

// Test-only utilities. The determinant here is an independent oracle: plain
// fraction-free (Bareiss) elimination, sharing no code with the Smith engine.

#include <random>
#include <vector>

#include "fitails/injections.hpp"
#include "fitails/integer_linalg.hpp"

namespace testutil {

using fitails::Injection;
using fitails::Int;
using fitails::IntMatrix;

inline Int bareiss_determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

inline Injection random_injection(std::mt19937& rng, int k, int n) {
    std::vector<std::int32_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(k));
    return Injection(n, std::move(pool));
}

}  // namespace testutil
