#include "mtk/oracles.hpp"

#include "mtk/errors.hpp"
#include "mtk/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace mtk {

std::uint64_t basis_cap() { return env_cap("MTK_BASIS_CAP", 10'000'000); }

std::vector<Basis> enumerate_bases(const Matroid& m, std::uint64_t cap) {
    const int n = m.size();
    const int r = m.rank();
    BigInt total = binomial(n, r);
    if (total > BigInt(cap))
        throw CapError("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + total.str() + " exceeds basis cap " +
                       std::to_string(cap));
    std::vector<Basis> out;
    Basis s(static_cast<std::size_t>(r));
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        if (m.rank_of(s) == r) out.push_back(s);
        int i = r - 1;
        while (i >= 0 && s[i] == n - r + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

namespace {

class TreeSearch {
public:
    explicit TreeSearch(const Matroid& g) : g_(g), n_(g.size()), v_(g.vertex_count()) {
        root_ = greedy_max_basis(g, std::vector<long long>(static_cast<std::size_t>(n_), 0)).basis;
        in_root_.assign(static_cast<std::size_t>(n_), 0);
        for (int e : root_) in_root_[e] = 1;
    }

    const Basis& root() const { return root_; }

    // parent(T) = T + e - f, e the least root edge missing from T,
    // f the least non-root edge on the cycle closed by e.
    Basis parent(const Basis& t) const {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (int x : t) in[x] = 1;
        int e = -1;
        for (int x : root_)
            if (!in[x]) {
                e = x;
                break;
            }
        auto path = tree_path(t, g_.edges()[e].first, g_.edges()[e].second);
        int f = -1;
        for (int x : path)
            if (!in_root_[x] && (f < 0 || x < f)) f = x;
        if (f < 0) throw InconsistencyError("reverse search: fundamental cycle inside the root tree");
        Basis p = t;
        *std::find(p.begin(), p.end(), f) = e;
        std::sort(p.begin(), p.end());
        return p;
    }

    std::vector<Basis> children(const Basis& t) const {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (int x : t) in[x] = 1;
        std::vector<Basis> out;
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
            int e = t[pos];
            if (!in_root_[e]) continue;
            for (int f = 0; f < n_; ++f) {
                if (in[f] || in_root_[f]) continue;
                Basis c = t;
                c[pos] = f;
                std::sort(c.begin(), c.end());
                if (g_.rank_of(c) != g_.rank()) continue;
                if (parent(c) == t) out.push_back(std::move(c));
            }
        }
        return out;
    }

private:
    // Edge indices on the unique tree path between a and b.
    std::vector<int> tree_path(const Basis& t, int a, int b) const {
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(v_));
        for (int x : t) {
            auto [u, w] = g_.edges()[x];
            adj[u].emplace_back(w, x);
            adj[w].emplace_back(u, x);
        }
        std::vector<int> via(static_cast<std::size_t>(v_), -1), prev(static_cast<std::size_t>(v_), -1);
        std::deque<int> q{a};
        prev[a] = a;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (u == b) break;
            for (auto [w, x] : adj[u])
                if (prev[w] < 0) {
                    prev[w] = u;
                    via[w] = x;
                    q.push_back(w);
                }
        }
        std::vector<int> path;
        for (int u = b; u != a; u = prev[u]) path.push_back(via[u]);
        return path;
    }

    const Matroid& g_;
    int n_;
    int v_;
    Basis root_;
    std::vector<char> in_root_;
};

}  // namespace

std::uint64_t matsui_spanning_trees(const Matroid& g, const std::function<void(const Basis&)>& emit) {
    if (g.backend() != Backend::graphical) throw PreconditionError("spanning tree enumeration needs a graph");
    if (g.rank() != g.vertex_count() - 1) throw PreconditionError("spanning tree enumeration needs a connected graph");
    TreeSearch search(g);
    std::uint64_t count = 0;
    std::vector<std::vector<Basis>> stack;
    emit(search.root());
    ++count;
    stack.push_back(search.children(search.root()));
    while (!stack.empty()) {
        if (stack.back().empty()) {
            stack.pop_back();
            continue;
        }
        Basis t = std::move(stack.back().back());
        stack.back().pop_back();
        emit(t);
        ++count;
        stack.push_back(search.children(t));
    }
    return count;
}

BigInt laplacian_tree_count(const Matroid& g) {
    if (g.backend() != Backend::graphical) throw PreconditionError("Laplacian count needs a graph");
    const int v = g.vertex_count();
    if (v == 1) return 1;
    BigMatrix lap(static_cast<std::size_t>(v), std::vector<BigInt>(static_cast<std::size_t>(v), 0));
    for (auto [a, b] : g.edges()) {
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    BigMatrix minor(static_cast<std::size_t>(v - 1));
    for (int i = 1; i < v; ++i) minor[i - 1].assign(lap[i].begin() + 1, lap[i].end());
    return determinant(std::move(minor));
}

std::map<Point, std::uint64_t> exact_projected_set(const Matroid& m, const WeightMatrix& w) {
    w.check_matches(m);
    std::map<Point, std::uint64_t> out;
    for (const auto& b : enumerate_bases(m)) ++out[w.project(b)];
    return out;
}

std::vector<Point> planar_convex_hull(std::vector<Point> pts) {
    for (const auto& p : pts)
        if (p.size() != 2) throw DimensionError("planar hull needs 2-dimensional points");
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    // Monotone chain sorted by (y, x) so the chain starts at the lowest-leftmost point.
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return __int128(a[0] - o[0]) * (b[1] - o[1]) - __int128(a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

struct Sweep {
    int n;
    long long k;
    long long total;
    // constraints[i]: (mask, bound) whose highest element is i
    std::vector<std::vector<std::pair<std::uint64_t, long long>>> constraints;

    std::uint64_t count_from(std::vector<long long>& x, int i, long long used) const {
        if (i == n) return used == total ? 1 : 0;
        std::uint64_t c = 0;
        long long remaining_cap = k * (n - i - 1);
        long long lo = std::max(0LL, total - used - remaining_cap);
        long long hi = std::min(k, total - used);
        for (long long v = lo; v <= hi; ++v) {
            x[i] = v;
            bool ok = true;
            for (auto [mask, bound] : constraints[i]) {
                long long s = 0;
                for (std::uint64_t bits = mask; bits; bits &= bits - 1) s += x[std::countr_zero(bits)];
                if (s > bound) {
                    ok = false;
                    break;
                }
            }
            if (ok) c += count_from(x, i + 1, used + v);
        }
        return c;
    }
};

Sweep make_sweep(const Matroid& m, long long k) {
    const int n = m.size();
    auto ranks = rank_table(m);
    Sweep s{n, k, k * m.rank(), {}};
    s.constraints.resize(static_cast<std::size_t>(n));
    // Subsets of full rank |A| or rank(M) are implied by the box and the total.
    for (std::uint64_t mask = 1; mask < ranks.size(); ++mask) {
        int size = std::popcount(mask);
        if (ranks[mask] < std::min(size, m.rank())) {
            int top = 63 - std::countl_zero(mask);
            s.constraints[top].emplace_back(mask, k * ranks[mask]);
        }
    }
    return s;
}

}  // namespace

std::uint64_t dilation_lattice_count(const Matroid& m, long long k, Exec exec) {
    if (k < 0) throw PreconditionError("dilation factor must be non-negative");
    if (k == 0) return 1;
    Sweep s = make_sweep(m, k);
    if (exec == Exec::serial) {
        std::vector<long long> x(static_cast<std::size_t>(m.size()));
        return s.count_from(x, 0, 0);
    }
    // Split on the first two coordinates.
    const long long side = k + 1;
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long long idx = 0; idx < side * side; ++idx) {
        std::vector<long long> x(static_cast<std::size_t>(s.n));
        long long a = idx / side, b = idx % side;
        if (s.n == 1) {
            if (b == 0 && a == s.total) total += 1;
            continue;
        }
        x[0] = a;
        x[1] = b;
        long long used = a + b;
        if (used > s.total || s.total - used > k * (s.n - 2)) continue;
        bool ok = true;
        for (int i = 0; i < 2 && ok; ++i)
            for (auto [mask, bound] : s.constraints[i]) {
                long long sum = 0;
                for (std::uint64_t bits = mask; bits; bits &= bits - 1) sum += x[std::countr_zero(bits)];
                if (sum > bound) ok = false;
            }
        if (ok) total += s.count_from(x, 2, used);
    }
    return total;
}

LatticeCountTable dilation_counts(const Matroid& m, long long max_k, Exec exec) {
    LatticeCountTable t;
    t.counts.resize(static_cast<std::size_t>(max_k + 1));
    if (exec == Exec::serial) {
        for (long long k = 0; k <= max_k; ++k) t.counts[k] = dilation_lattice_count(m, k, Exec::serial);
        return t;
    }
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k <= max_k; ++k) t.counts[k] = dilation_lattice_count(m, k, Exec::serial);
    return t;
}

Polynomial interpolate_ehrhart(const LatticeCountTable& table, int dim) {
    if (dim < 0) throw PreconditionError("dimension must be non-negative");
    if (table.counts.size() < static_cast<std::size_t>(dim + 1))
        throw PreconditionError("interpolation needs at least dim+1 counts");
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= dim; ++k) {
        xs.emplace_back(k);
        ys.emplace_back(BigInt(table.counts[k]));
    }
    Polynomial p = interpolate(xs, ys);
    for (std::size_t k = static_cast<std::size_t>(dim + 1); k < table.counts.size(); ++k)
        if (p(Rational(static_cast<long long>(k))) != Rational(BigInt(table.counts[k])))
            throw InconsistencyError("dilation count at k=" + std::to_string(k) +
                                     " disagrees with the degree-" + std::to_string(dim) + " interpolant");
    p.coeffs.resize(static_cast<std::size_t>(dim + 1));
    return p;
}

}  // namespace mtk
