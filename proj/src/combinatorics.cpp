#include "mtk/combinatorics.hpp"

#include "mtk/errors.hpp"
#include "mtk/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace mtk {

namespace {

std::vector<std::vector<int>> components_of(int count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> idx(static_cast<std::size_t>(count), -1);
    for (int v = 0; v < count; ++v) {
        int r = find(v);
        if (idx[r] < 0) {
            idx[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[idx[r]].push_back(v);
    }
    return comps;
}

void validate(const IntMatrix& x) {
    if (x.empty()) throw PreconditionError("empty incidence collection");
    const std::size_t n = x[0].size();
    for (const auto& row : x) {
        if (row.size() != n) throw DimensionError("incidence rows differ in length");
        for (long long v : row)
            if (v != 0 && v != 1) throw PreconditionError("incidence entries must be 0 or 1");
    }
    IntMatrix sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("incidence collection has identical rows");
}

}  // namespace

ExchangeGraphs exchange_graphs(const IntMatrix& x) {
    validate(x);
    ExchangeGraphs g;
    const int rows = static_cast<int>(x.size());
    const int cols = static_cast<int>(x[0].size());
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j) {
            int plus = -1, minus = -1;
            bool single = true;
            for (int c = 0; c < cols && single; ++c) {
                long long d = x[i][c] - x[j][c];
                if (d == 1) {
                    single = plus < 0;
                    plus = c;
                } else if (d == -1) {
                    single = minus < 0;
                    minus = c;
                }
            }
            if (!single || plus < 0 || minus < 0) continue;
            g.row_edges.emplace_back(i, j);
            g.column_edges.emplace_back(std::min(plus, minus), std::max(plus, minus));
        }
    std::sort(g.column_edges.begin(), g.column_edges.end());
    g.column_edges.erase(std::unique(g.column_edges.begin(), g.column_edges.end()), g.column_edges.end());
    g.row_components = components_of(rows, g.row_edges);
    g.column_components = components_of(cols, g.column_edges);
    return g;
}

ReducedDeterminant reduced_determinant(const IntMatrix& x) {
    validate(x);
    if (x.size() != x[0].size()) throw DimensionError("reduced determinant needs a square collection");
    BigInt full = determinant(x);
    if (full == 0) throw PreconditionError("incidence rows are linearly dependent");
    ExchangeGraphs g = exchange_graphs(x);
    if (g.row_components.size() != g.column_components.size())
        throw InconsistencyError("G(X) and g(X) have different component counts");
    ReducedDeterminant r;
    for (const auto& rc : g.row_components) {
        const auto& row = x[static_cast<std::size_t>(rc.front())];
        std::vector<BigInt> out;
        for (const auto& cc : g.column_components) {
            BigInt s = 0;
            for (int c : cc) s += row[static_cast<std::size_t>(c)];
            out.push_back(s);
        }
        r.matrix.push_back(std::move(out));
    }
    r.abs_det = abs(determinant(r.matrix));
    if (r.abs_det != abs(full)) throw InconsistencyError("reduced determinant differs from the full determinant");
    return r;
}

bool is_unimodular_simplex(const IntMatrix& x, const Matroid& m) {
    if (static_cast<int>(x.size()) != m.size()) throw DimensionError("a simplex of P_M needs n vertices");
    for (const auto& row : x)
        if (static_cast<int>(row.size()) != m.size()) throw DimensionError("incidence row length differs from n");
    return abs(determinant(x)) == m.rank();
}

RankComponents rank_component_relation(const IntMatrix& x) {
    ExchangeGraphs g = exchange_graphs(x);
    if (g.row_components.size() != 1) throw PreconditionError("G(X) is not connected");
    return {rank(x), g.column_components.size()};
}

TwoFace classify_square_2face(const Matroid& m, const IntVec& w1, const IntVec& w2, const IntVec& w3, const IntVec& w4) {
    const std::size_t n = static_cast<std::size_t>(m.size());
    for (const auto* w : {&w1, &w2, &w3, &w4})
        if (w->size() != n) throw DimensionError("vertex length differs from n");
    auto single_exchange = [&](const IntVec& from, const IntVec& to, int& plus, int& minus) {
        plus = minus = -1;
        for (std::size_t i = 0; i < n; ++i) {
            long long d = to[i] - from[i];
            if (d == 1 && plus < 0) plus = static_cast<int>(i);
            else if (d == -1 && minus < 0) minus = static_cast<int>(i);
            else if (d != 0) return false;
        }
        return plus >= 0 && minus >= 0;
    };
    int s, t, mm, l;
    if (!single_exchange(w1, w2, s, t) || !single_exchange(w1, w3, mm, l))
        throw PreconditionError("quadruple is not of the form w1, w1+e_s-e_t, w1+e_m-e_l");
    if (s == mm || t == l || s == t || mm == l) throw PreconditionError("quadruple indices must satisfy s!=m, t!=l");
    for (std::size_t i = 0; i < n; ++i)
        if (w4[i] != w1[i] + (w2[i] - w1[i]) + (w3[i] - w1[i]))
            throw PreconditionError("w4 is not w1 + (e_s - e_t) + (e_m - e_l)");
    auto is_vertex = [&](const IntVec& w) {
        Subset supp;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] != 0 && w[i] != 1) return false;
            if (w[i]) supp.push_back(static_cast<int>(i));
        }
        return m.is_basis(supp);
    };
    for (const auto* w : {&w1, &w2, &w3, &w4})
        if (!is_vertex(*w)) throw PreconditionError("quadruple contains a point that is not a vertex of P_M");
    IntVec w5 = w1, w6 = w1;
    w5[s] += 1;
    w5[l] -= 1;
    w6[mm] += 1;
    w6[t] -= 1;
    return (!is_vertex(w5) || !is_vertex(w6)) ? TwoFace::square : TwoFace::not_a_face;
}

bool is_connected_matroid(const Matroid& m) {
    auto bases = enumerate_bases(m);
    IntMatrix diffs;
    IntVec base = incidence(bases[0], m.size());
    for (std::size_t i = 1; i < bases.size(); ++i) {
        IntVec d = incidence(bases[i], m.size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= base[j];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(diffs)) == m.size() - 1;
}

}  // namespace mtk
