#pragma once

#include "mtk/matroid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mtk {

Matroid complete_graph(int v);
Matroid cycle_graph(int v);
Matroid complete_bipartite(int a, int b);
Matroid cube_graph();
Matroid octahedron_graph();

// Rank-3 vector matroids on six elements.
Matroid whirl_like_w3();  // e1, e2, e3, e1+e2, e2+e3, e1+2e3
Matroid k4_vectors();     // M(K4) realized by vectors
Matroid p6();             // one 3-point line
Matroid q6();             // two 3-point lines sharing a point
Matroid r6();             // two disjoint 3-point lines
Matroid non_fano();       // seven points of the Fano plane realized over Q

// Spanning path with random attachments plus each remaining pair with probability extra.
Matroid random_connected_graph(int vertices, double extra, std::uint64_t seed);

struct CatalogEntry {
    std::string name;
    Matroid matroid;
};

// Connected matroids on at most max_n elements (uniform, small 2-connected graphs, rank-3 vector examples).
std::vector<CatalogEntry> connected_catalog(int max_n);

}  // namespace mtk
