#pragma once

#include "mtk/linalg.hpp"
#include "mtk/matroid.hpp"

#include <utility>
#include <vector>

namespace mtk {

struct ExchangeGraphs {
    std::vector<std::pair<int, int>> row_edges;     // G(X): rows differing by e_s - e_t
    std::vector<std::pair<int, int>> column_edges;  // g(X): the pairs (s, t) realized
    std::vector<std::vector<int>> row_components;   // ordered by least member
    std::vector<std::vector<int>> column_components;
};

ExchangeGraphs exchange_graphs(const IntMatrix& x);

struct ReducedDeterminant {
    BigMatrix matrix;  // representative rows x column components
    BigInt abs_det;
};
// Throws PreconditionError when the rows are dependent.
ReducedDeterminant reduced_determinant(const IntMatrix& x);

bool is_unimodular_simplex(const IntMatrix& x, const Matroid& m);

struct RankComponents {
    std::size_t rank;
    std::size_t column_components;
};
// Requires G(X) connected.
RankComponents rank_component_relation(const IntMatrix& x);

enum class TwoFace { square, not_a_face };
TwoFace classify_square_2face(const Matroid& m, const IntVec& w1, const IntVec& w2, const IntVec& w3, const IntVec& w4);

// dim P_M = n - 1, from the rank of the differences e_B - e_{B0}.
bool is_connected_matroid(const Matroid& m);

}  // namespace mtk
