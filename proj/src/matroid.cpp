#include "mtk/matroid.hpp"

#include "mtk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mtk {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

Subset mask_to_subset(std::uint64_t mask) {
    Subset s;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) s.push_back(i);
    return s;
}

}  // namespace

Matroid Matroid::uniform(int n, int r) {
    if (n < 1) throw PreconditionError("uniform matroid needs n >= 1");
    if (r < 0 || r > n) throw PreconditionError("uniform matroid needs 0 <= r <= n");
    Matroid m;
    m.backend_ = Backend::uniform;
    m.n_ = n;
    m.uniform_rank_ = r;
    m.rank_ = r;
    return m;
}

Matroid Matroid::graphical(int vertices, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) throw PreconditionError("graphical matroid needs at least one edge");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loops are not supported");
    }
    Matroid m;
    m.backend_ = Backend::graphical;
    m.n_ = static_cast<int>(edges.size());
    m.vertices_ = vertices;
    m.edges_ = std::move(edges);
    Subset all(static_cast<std::size_t>(m.n_));
    std::iota(all.begin(), all.end(), 0);
    m.rank_ = m.graph_rank(all);
    return m;
}

Matroid Matroid::from_adjacency(const std::vector<std::vector<int>>& adj) {
    const int v = static_cast<int>(adj.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v; ++i) {
        if (static_cast<int>(adj[i].size()) != v) throw DimensionError("adjacency matrix is not square");
        if (adj[i][i] != 0) throw PreconditionError("self-loops are not supported");
    }
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            if (adj[i][j] != adj[j][i]) throw PreconditionError("adjacency matrix is not symmetric");
            if (adj[i][j] != 0 && adj[i][j] != 1) throw PreconditionError("adjacency entries must be 0 or 1");
            if (adj[i][j]) edges.emplace_back(i, j);
        }
    return graphical(v, std::move(edges));
}

Matroid Matroid::from_rows(const QMatrix& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionError("vector matroid needs a non-empty matrix");
    const std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionError("ragged matrix rows");
    Matroid m;
    m.backend_ = Backend::vector;
    m.n_ = static_cast<int>(n);
    m.rows_ = rows;
    m.columns_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt l = 1;
        for (const auto& r : rows) l = boost::multiprecision::lcm(l, denominator_of(r[j]));
        for (const auto& r : rows) m.columns_[j].push_back(numerator_of(r[j] * Rational(l)));
    }
    Subset all(n);
    std::iota(all.begin(), all.end(), 0);
    m.rank_ = m.vector_rank(all);
    return m;
}

void Matroid::check_subset(const Subset& a) const {
    for (int x : a)
        if (x < 0 || x >= n_) throw PreconditionError("element index out of range");
}

int Matroid::graph_rank(const Subset& a) const {
    UnionFind uf(vertices_);
    int r = 0;
    for (int e : a)
        if (uf.unite(edges_[e].first, edges_[e].second)) ++r;
    return r;
}

int Matroid::vector_rank(const Subset& a) const {
    if (a.empty()) return 0;
    BigMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = columns_[a[i]];
    return static_cast<int>(mtk::rank(m));
}

int Matroid::rank_of(const Subset& a) const {
    check_subset(a);
    switch (backend_) {
        case Backend::uniform: {
            Subset s = a;
            std::sort(s.begin(), s.end());
            int distinct = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
            return std::min(distinct, uniform_rank_);
        }
        case Backend::graphical: return graph_rank(a);
        case Backend::vector: return vector_rank(a);
    }
    return 0;
}

int Matroid::rank_of_mask(std::uint64_t mask) const { return rank_of(mask_to_subset(mask)); }

bool Matroid::is_independent(const Subset& a) const {
    Subset s = a;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    return rank_of(s) == static_cast<int>(s.size());
}

bool Matroid::is_basis(const Subset& a) const {
    return static_cast<int>(a.size()) == rank_ && is_independent(a);
}

std::string Matroid::describe() const {
    std::ostringstream os;
    switch (backend_) {
        case Backend::uniform: os << "uniform n=" << n_ << " r=" << uniform_rank_; break;
        case Backend::graphical: os << "graph vertices=" << vertices_ << " edges=" << n_ << " rank=" << rank_; break;
        case Backend::vector: os << "vector " << rows_.size() << "x" << n_ << " rank=" << rank_; break;
    }
    return os.str();
}

std::vector<Basis> adjacent_bases(const Matroid& m, const Basis& b) {
    if (!m.is_basis(b)) throw PreconditionError("not a basis: " + format_subset(b));
    const int n = m.size();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int x : b) in[x] = 1;
    std::vector<Basis> out;
    Basis cand;
    for (std::size_t pos = 0; pos < b.size(); ++pos) {
        for (int j = 0; j < n; ++j) {
            if (in[j]) continue;
            cand = b;
            cand[pos] = j;
            std::sort(cand.begin(), cand.end());
            if (m.rank_of(cand) == m.rank()) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class W>
GreedyResult greedy_impl(const Matroid& m, const std::vector<W>& w) {
    const int n = m.size();
    if (static_cast<int>(w.size()) != n) throw DimensionError("weight vector length differs from ground set size");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    Basis chosen;
    Rational total = 0;
    for (int e : order) {
        if (static_cast<int>(chosen.size()) == m.rank()) break;
        chosen.push_back(e);
        if (m.rank_of(chosen) == static_cast<int>(chosen.size())) {
            total += Rational(w[e]);
        } else {
            chosen.pop_back();
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return {chosen, total};
}

}  // namespace

GreedyResult greedy_max_basis(const Matroid& m, const std::vector<Rational>& w) { return greedy_impl(m, w); }
GreedyResult greedy_max_basis(const Matroid& m, const std::vector<long long>& w) { return greedy_impl(m, w); }

Basis random_basis(const Matroid& m, std::mt19937_64& rng) {
    const int n = m.size();
    const int r = m.rank();
    constexpr long long cap = 10'000'000;
    Basis s;
    for (long long attempt = 0; attempt < cap; ++attempt) {
        // Floyd's algorithm for a uniform r-subset.
        s.clear();
        for (int j = n - r; j < n; ++j) {
            std::uniform_int_distribution<int> pick(0, j);
            int t = pick(rng);
            if (std::find(s.begin(), s.end(), t) == s.end()) s.push_back(t);
            else s.push_back(j);
        }
        std::sort(s.begin(), s.end());
        if (m.rank_of(s) == r) return s;
    }
    throw CapError("random_basis: no basis found within 10^7 draws");
}

Basis random_basis(const Matroid& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_basis(m, rng);
}

std::vector<std::vector<int>> components(const Matroid& m) {
    const int n = m.size();
    UnionFind uf(n);
    Basis b = greedy_max_basis(m, std::vector<long long>(static_cast<std::size_t>(n), 0)).basis;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int x : b) in[x] = 1;
    // Fundamental circuits of a fixed basis connect exactly the matroid components.
    for (int e = 0; e < n; ++e) {
        if (in[e]) continue;
        for (std::size_t pos = 0; pos < b.size(); ++pos) {
            Basis c = b;
            c[pos] = e;
            if (m.rank_of(c) == m.rank()) uf.unite(e, b[pos]);
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        int root = uf.find(e);
        if (index[root] < 0) {
            index[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index[root]].push_back(e);
    }
    return comps;
}

int polytope_dimension(const Matroid& m) { return m.size() - static_cast<int>(components(m).size()); }

IntVec incidence(const Basis& b, int n) {
    IntVec x(static_cast<std::size_t>(n), 0);
    for (int e : b) x[e] = 1;
    return x;
}

std::string format_subset(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

std::uint64_t subset_cap() { return env_cap("MTK_SUBSET_CAP", 16); }

std::vector<int> rank_table(const Matroid& m) {
    const int n = m.size();
    if (static_cast<std::uint64_t>(n) > subset_cap() || n > 30)
        throw CapError("subset table needs n <= " + std::to_string(subset_cap()) + ", got " + std::to_string(n));
    std::vector<int> table(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = m.rank_of_mask(mask);
    return table;
}

PolytopeDescription polytope_constraints(const Matroid& m) {
    const int n = m.size();
    auto ranks = rank_table(m);
    PolytopeDescription d;
    d.n = n;
    d.rank = m.rank();
    Subset all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    d.constraints.push_back({all, Relation::equal, m.rank()});
    for (int i = 0; i < n; ++i) d.constraints.push_back({{i}, Relation::greater_equal, 0});
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask)
        d.constraints.push_back({mask_to_subset(mask), Relation::less_equal, ranks[mask]});
    return d;
}

bool polytope_contains(const Matroid& m, const IntVec& x, long long k) {
    const int n = m.size();
    if (static_cast<int>(x.size()) != n) throw DimensionError("point length differs from ground set size");
    long long total = 0;
    for (long long v : x) {
        if (v < 0) return false;
        total += v;
    }
    if (total != k * m.rank()) return false;
    auto ranks = rank_table(m);
    for (std::uint64_t mask = 1; mask < ranks.size(); ++mask) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s += x[i];
        if (s > k * ranks[mask]) return false;
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mtk
