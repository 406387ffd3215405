#pragma once

#include "mtk/catalog.hpp"
#include "mtk/matroid.hpp"
#include "mtk/multicriteria.hpp"
#include "mtk/oracles.hpp"

#include <random>
#include <string>

namespace mtk::gen {

inline Matroid random_uniform(std::mt19937_64& rng, int max_n) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    return Matroid::uniform(n, r);
}

// Small integer matrix of full row rank r; columns may repeat or vanish.
inline Matroid random_vector_matroid(std::mt19937_64& rng, int r, int n, int spread = 2) {
    std::uniform_int_distribution<int> entry(-spread, spread);
    while (true) {
        QMatrix rows(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        Matroid m = Matroid::from_rows(rows);
        if (m.rank() == r) return m;
    }
}

inline Matroid random_graph(std::mt19937_64& rng, int min_v, int max_v, double extra = 0.3) {
    int v = std::uniform_int_distribution<int>(min_v, max_v)(rng);
    return random_connected_graph(v, extra, rng());
}

// One of the three backends at random.
inline Matroid random_matroid(std::mt19937_64& rng, int max_n) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return random_uniform(rng, max_n);
        case 1: {
            int n = std::uniform_int_distribution<int>(2, max_n)(rng);
            int r = std::uniform_int_distribution<int>(1, std::min(3, n))(rng);
            return random_vector_matroid(rng, r, n);
        }
        default: return random_graph(rng, 3, std::max(3, std::min(6, max_n / 2 + 1)));
    }
}

inline WeightMatrix random_weights(std::mt19937_64& rng, int d, int n, int lo = 0, int hi = 20) {
    std::uniform_int_distribution<int> entry(lo, hi);
    std::vector<IntVec> rows(static_cast<std::size_t>(d), IntVec(static_cast<std::size_t>(n)));
    for (auto& row : rows)
        for (auto& x : row) x = entry(rng);
    return WeightMatrix(rows);
}


}  // namespace mtk::gen
