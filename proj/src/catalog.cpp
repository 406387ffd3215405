#include "mtk/catalog.hpp"

#include <random>

namespace mtk {

namespace {

Matroid from_columns(const std::vector<IntVec>& cols) {
    QMatrix rows(cols[0].size(), std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
    return Matroid::from_rows(rows);
}

Matroid graph_from_edges(int v, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = 1;
    return Matroid::from_adjacency(adj);
}

}  // namespace

Matroid complete_graph(int v) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) e.emplace_back(i, j);
    return graph_from_edges(v, e);
}

Matroid cycle_graph(int v) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < v; ++i) e.emplace_back(i, (i + 1) % v);
    return graph_from_edges(v, e);
}

Matroid complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return graph_from_edges(a + b, e);
}

Matroid cube_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i)
        for (int bit = 1; bit < 8; bit <<= 1)
            if (!(i & bit)) e.emplace_back(i, i | bit);
    return graph_from_edges(8, e);
}

Matroid octahedron_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != i + 3) e.emplace_back(i, j);
    return graph_from_edges(6, e);
}

Matroid whirl_like_w3() { return from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 2}}); }
Matroid k4_vectors() { return from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, -1}}); }
Matroid p6() { return from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 2, 3}, {2, 5, 7}}); }
Matroid q6() { return from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {2, 3, 5}}); }
Matroid r6() { return from_columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 3, 1}, {2, 6, 1}}); }

Matroid non_fano() {
    return from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

Matroid random_connected_graph(int vertices, double extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices),
                                      std::vector<int>(static_cast<std::size_t>(vertices), 0));
    for (int v = 1; v < vertices; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        adj[u][v] = adj[v][u] = 1;
    }
    std::bernoulli_distribution coin(extra);
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            if (!adj[i][j] && coin(rng)) adj[i][j] = adj[j][i] = 1;
    return Matroid::from_adjacency(adj);
}

std::vector<CatalogEntry> connected_catalog(int max_n) {
    std::vector<CatalogEntry> out;
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r < n; ++r) out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), Matroid::uniform(n, r)});
    auto add = [&](std::string name, Matroid m) {
        if (m.size() <= max_n) out.push_back({std::move(name), std::move(m)});
    };
    add("K4", complete_graph(4));
    add("K4-e", graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
    add("K2,3", complete_bipartite(2, 3));
    add("theta(2,2,2)", graph_from_edges(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
    add("theta(1,2,3)", graph_from_edges(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}}));
    add("W3", whirl_like_w3());
    add("P6", p6());
    add("Q6", q6());
    add("R6", r6());
    add("F7-", non_fano());
    add("K4 subdivided", graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 3}, {2, 3}}));
    add("wheel W4 minus spoke", graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}}));
    return out;
}

}  // namespace mtk
