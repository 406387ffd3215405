// Acceptance run: one PASS/FAIL line per criterion, each timed against its limit.

#include "mtk/catalog.hpp"
#include "mtk/combinatorics.hpp"
#include "mtk/ehrhart_uniform.hpp"
#include "mtk/errors.hpp"
#include "mtk/genfun.hpp"
#include "mtk/heuristics.hpp"
#include "mtk/oracles.hpp"
#include "mtk/triangulation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using namespace mtk;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> body;
};

std::vector<std::string> strings(std::initializer_list<const char*> v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

Outcome basis_counts() {
    Outcome o;
    o.check(enumerate_bases(Matroid::uniform(4, 2)).size() == 6, "U^{2,4} basis count");
    o.check(enumerate_bases(complete_graph(4)).size() == 16, "M(K4) basis count");
    o.check(enumerate_bases(k4_vectors()).size() == 16, "M(K4) vector basis count");
    o.detail = o.ok ? "U24=6 K4=16" : o.detail;
    return o;
}

Outcome spanning_trees() {
    Outcome o;
    std::ostringstream d;
    for (auto [name, g, expect] : std::vector<std::tuple<const char*, Matroid, std::uint64_t>>{
             {"tetrahedron", complete_graph(4), 16}, {"cube", cube_graph(), 384}, {"octahedron", octahedron_graph(), 384}}) {
        std::set<Basis> seen;
        std::uint64_t count = matsui_spanning_trees(g, [&](const Basis& b) { seen.insert(b); });
        BigInt lap = laplacian_tree_count(g);
        o.check(count == expect && seen.size() == expect, std::string(name) + " reverse-search count");
        o.check(lap == expect, std::string(name) + " Laplacian count");
        d << name << '=' << count << ' ';
    }
    if (o.ok) o.detail = d.str();
    return o;
}

Outcome ehrhart_k4() {
    Outcome o;
    Matroid m = complete_graph(4);
    Polynomial p = ehrhart_polynomial(m);
    o.check(p.to_strings() == strings({"1", "107/30", "21/4", "49/12", "7/4", "7/20"}), "coefficients " + join(p.to_strings()));
    o.check(hstar_from_polynomial(p, 5) == std::vector<BigInt>{1, 10, 20, 10, 1}, "h*-vector");
    Polynomial q = interpolate_ehrhart(dilation_counts(m, 5), 5);
    o.check(p == q, "interpolation of k=0..5 counts differs");
    if (o.ok) o.detail = "coefficients " + join(p.to_strings()) + " h*=1,10,20,10,1";
    return o;
}

Outcome uniform_machinery() {
    Outcome o;
    LatticeCountTable t24 = dilation_counts(Matroid::uniform(4, 2), 5);
    o.check(hstar_uniform(4, 2) == std::vector<BigInt>{1, 2, 1}, "hstar_uniform(4,2)");
    o.check(hstar_from_counts(t24, 3) == hstar_uniform(4, 2), "hstar_from_counts on U^{2,4}");
    int pairs = 0;
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r < n; ++r) {
            const int dim = n - 1;
            LatticeCountTable t = dilation_counts(Matroid::uniform(n, r), dim + 2, Exec::parallel);
            Polynomial p = ehrhart_uniform(n, r);
            for (std::size_t k = 0; k < t.counts.size(); ++k)
                o.check(p(Rational(k)) == t.counts[k],
                        "ehrhart_uniform(" + std::to_string(n) + "," + std::to_string(r) + ") at k=" + std::to_string(k));
            ++pairs;
        }
    if (o.ok) o.detail = std::to_string(pairs) + " (n,r) pairs, k=0..dim+2";
    return o;
}

Outcome katzman_properties() {
    Outcome o;
    for (int n = 1; n <= 40; ++n)
        for (int r = 1; r <= 6; ++r) {
            auto a = katzman(n, r);
            o.check(std::equal(a.begin(), a.end(), a.rbegin()), "symmetry n=" + std::to_string(n));
            o.check(is_unimodal(a), "unimodality n=" + std::to_string(n));
        }
    for (int n = 0; n <= 12; ++n)
        for (int r = 2; r <= 5; ++r) {
            auto a = katzman(n, r);
            for (int i = 0; i < static_cast<int>(a.size()); ++i) {
                BigInt s = 0;
                for (int k = 0; k <= n && k <= i; ++k) {
                    auto b = katzman(k, r - 1);
                    if (i - k < static_cast<int>(b.size())) s += binomial(n, k) * b[static_cast<std::size_t>(i - k)];
                }
                o.check(a[static_cast<std::size_t>(i)] == s, "rank relation n=" + std::to_string(n));
            }
        }
    if (o.ok) o.detail = "symmetric+unimodal n<=40 r<=6; rank relation n<=12 r<=5";
    return o;
}

Outcome unimodality_positivity() {
    Outcome o;
    std::vector<char> unimodal(41 * 41, 1);
#pragma omp parallel for schedule(dynamic)
    for (int n = 2; n <= 40; ++n)
        for (int r = 1; r < n; ++r) unimodal[static_cast<std::size_t>(n * 41 + r)] = is_unimodal(hstar_uniform(n, r));
    for (int n = 2; n <= 40; ++n)
        for (int r = 1; r < n; ++r)
            o.check(unimodal[static_cast<std::size_t>(n * 41 + r)],
                    "h* not unimodal for U^{" + std::to_string(r) + "," + std::to_string(n) + "}");
    for (int n = 3; n <= 40; ++n) {
        Polynomial p = ehrhart_uniform(n, 2);
        for (const auto& c : p.coeffs) o.check(c > 0, "nonpositive coefficient for U^{2," + std::to_string(n) + "}");
    }
    if (o.ok) o.detail = "h* unimodal for all U^{r,n}, n<=40; U^{2,n} coefficients positive, n<=40";
    return o;
}

Outcome unimodular_triangulations() {
    Outcome o;
    std::size_t matroids = 0, placing_cells = 0, cone_cells = 0;
    for (auto& e : connected_catalog(7)) {
        const Matroid& m = e.matroid;
        auto bases = enumerate_bases(m);
        if (m.size() <= 6) {
            std::vector<IntVec> pts;
            for (const auto& b : bases) pts.push_back(incidence(b, m.size()));
            Triangulation t = placing_triangulation(pts, {}, Exec::parallel);
            for (const auto& c : t.cells) {
                IntMatrix x;
                for (int i : c) x.push_back(pts[static_cast<std::size_t>(i)]);
                o.check(static_cast<int>(x.size()) == m.size() && abs(determinant(x)) == m.rank(),
                        e.name + ": placing cell with |det| != rank");
            }
            placing_cells += t.cells.size();
            ++matroids;
        }
        for (const auto& b : bases) {
            try {
                ConeTriangulation ct = cone_triangulation(tangent_cone(m, b));
                for (const auto& cell : ct.cells) {
                    IntMatrix g;
                    for (int j : cell) g.push_back(ct.projected[static_cast<std::size_t>(j)]);
                    o.check(abs(determinant(g)) == 1, e.name + ": tangent-cone cell with |det| != 1");
                }
                cone_cells += ct.cells.size();
            } catch (const InconsistencyError& err) {
                o.check(false, e.name + ": " + err.what());
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(matroids) + " matroids, " + std::to_string(placing_cells) + " placing cells, " +
                   std::to_string(cone_cells) + " tangent-cone cells";
    return o;
}

// Independent route for td_m: truncated product of the Taylor series of x/(1-e^{-x}).
Rational todd_taylor(int m, const std::vector<Rational>& xi) {
    const std::size_t len = static_cast<std::size_t>(m) + 1;
    std::vector<Rational> d(len), f(len, 0), prod(len, 0);
    for (std::size_t k = 0; k < len; ++k) d[k] = Rational((k % 2) ? -1 : 1) / Rational(factorial(static_cast<unsigned>(k + 1)));
    f[0] = 1;
    for (std::size_t n = 1; n < len; ++n)
        for (std::size_t k = 1; k <= n; ++k) f[n] -= d[k] * f[n - k];
    prod[0] = 1;
    for (const auto& x : xi) {
        std::vector<Rational> next(len, 0);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) next[i + j] += prod[i] * f[j] * power(x, static_cast<unsigned>(j));
        prod = next;
    }
    return prod[static_cast<std::size_t>(m)];
}

Outcome todd_specialization() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> e(-7, 7);
    for (int s = 1; s <= 6; ++s)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> xi(static_cast<std::size_t>(s));
            for (auto& x : xi) x = Rational(e(rng), std::uniform_int_distribution<int>(1, 4)(rng));
            auto td = todd_polynomials(xi, 10);
            for (int m = 0; m <= 10; ++m) o.check(td[static_cast<std::size_t>(m)] == todd_taylor(m, xi), "td mismatch");
        }
    for (int trial = 0; trial < 20; ++trial) {
        const int d = std::uniform_int_distribution<int>(1, 4)(rng);
        IntVec a(static_cast<std::size_t>(d));
        BigInt expect = 1;
        for (auto& x : a) {
            x = std::uniform_int_distribution<int>(0, 9)(rng);
            expect *= x + 1;
        }
        std::vector<GenFunTerm> terms;
        for (std::uint64_t corner = 0; corner < (1ull << d); ++corner) {
            GenFunTerm t;
            t.a = IntVec(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                const bool high = corner >> i & 1;
                t.a[static_cast<std::size_t>(i)] = high ? a[static_cast<std::size_t>(i)] : 0;
                IntVec g(static_cast<std::size_t>(d), 0);
                g[static_cast<std::size_t>(i)] = high ? -1 : 1;
                t.b.push_back(g);
            }
            t.v = t.a;
            terms.push_back(t);
        }
        BigInt c1 = specialize_count(terms, generic_lambda(terms));
        BigInt c2 = specialize_count(terms, moment_curve(977 + trial, static_cast<std::size_t>(d)));
        o.check(c1 == expect, "box count");
        o.check(c1 == c2, "two generic lambdas disagree on a box");
    }
    auto terms = brion_genfun(complete_graph(4));
    o.check(specialize_count(terms, generic_lambda(terms)) == specialize_count(terms, moment_curve(1009, 6)),
            "two generic lambdas disagree on M(K4)");
    if (o.ok) o.detail = "td_m m<=10 s<=6; 20 boxes d<=4; M(K4) with two lambdas";
    return o;
}

struct Instance {
    Matroid m;
    WeightMatrix w;
    std::size_t bases;
};

// Sparse connected graphs on at most nine nodes, at most 3000 spanning trees.
std::vector<Instance> heuristic_instances() {
    std::vector<Instance> out;
    std::mt19937_64 rng(9);
    while (out.size() < 50) {
        const int v = std::uniform_int_distribution<int>(4, 9)(rng);
        const double extra = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
        Matroid g = random_connected_graph(v, extra, rng());
        BigInt trees = laplacian_tree_count(g);
        if (trees > 3000 || g.size() == g.rank()) continue;
        std::uniform_int_distribution<int> entry(0, 20);
        std::vector<IntVec> rows(2, IntVec(static_cast<std::size_t>(g.size())));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        out.push_back({g, WeightMatrix(rows), static_cast<std::size_t>(trees)});
    }
    return out;
}

Outcome heuristic_properties() {
    Outcome o;
    int exhaustive = 0;
    auto instances = heuristic_instances();
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const Instance& in = instances[idx];
        const std::string tag = "instance " + std::to_string(idx) + ": ";
        std::set<Point> exact;
        for (const auto& [p, c] : exact_projected_set(in.m, in.w)) exact.insert(p);
        auto subset = [&](const SearchReport& r, const char* who) {
            for (std::size_t i = 0; i < r.points.size(); ++i) {
                o.check(exact.count(r.points[i]) > 0, tag + who + " left the projected set");
                o.check(in.w.project(r.bases[i]) == r.points[i], tag + who + " witness mismatch");
            }
        };
        SearchParams params;
        params.seed = 1000 + idx;
        std::mt19937_64 rng(params.seed);

        // (b) boundary superset of hull vertices
        Basis start = random_boundary_basis(in.m, in.w, rng);
        SearchReport pb = projected_boundary(in.m, in.w, start);
        subset(pb, "PB");
        std::set<Point> pbs(pb.points.begin(), pb.points.end());
        for (const auto& v : planar_convex_hull({exact.begin(), exact.end()}))
            o.check(pbs.count(v) > 0, tag + "PB missed a hull vertex");

        // (c) BTRPT equals the Pareto set
        SearchReport bt = btrpt(in.m, in.w, params);
        subset(bt, "BTRPT");
        o.check(bt.points == pareto_filter({exact.begin(), exact.end()}), tag + "BTRPT differs from the Pareto set");

        // (d) linear local search is optimal
        std::vector<Rational> c{std::uniform_int_distribution<int>(-10, 10)(rng), std::uniform_int_distribution<int>(-10, 10)(rng)};
        Objective f = Objective::linear(c);
        SearchReport ls = local_search(in.m, in.w, f, random_basis(in.m, rng));
        subset(ls, "LS");
        Rational best = f(*exact.begin());
        for (const auto& p : exact) best = std::min(best, f(p));
        o.check(f(ls.points[0]) == best, tag + "linear LS not optimal");

        // tabu and pivot test stay inside the projected set
        subset(tabu_search(in.m, in.w, Objective::minmax(), random_basis(in.m, rng), params.tabu_limit), "TS");
        std::vector<Point> targets(exact.begin(), exact.end());
        targets.push_back({-1, -1});
        SearchReport pt = pivot_test(in.m, in.w, targets, params);
        subset(pt, "PT");

        // (e) exhaustive DFBFS driver
        SearchParams deep = params;
        deep.bfs_depth = static_cast<int>(in.bases);
        deep.num_searches = static_cast<int>(in.bases);
        deep.boundary_retry_limit = 200;
        deep.random_retry_limit = 20000;
        SearchReport df = dfbfs_driver(in.m, in.w, deep);
        subset(df, "DFBFS");
        if (in.bases <= 200) {
            o.check(std::set<Point>(df.points.begin(), df.points.end()) == exact, tag + "DFBFS not exhaustive");
            ++exhaustive;
        }
    }
    if (o.ok)
        o.detail = "50 graphs (a)-(d); (e) on " + std::to_string(exhaustive) + " instances with <= 200 bases";
    return o;
}

// n independent basis vectors of m in random order, or nothing after a few shuffles.
std::optional<IntMatrix> random_collection(const std::vector<Basis>& bases, int n, std::mt19937_64& rng) {
    std::vector<Basis> order = bases;
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        IntMatrix x;
        for (const auto& b : order) {
            x.push_back(incidence(b, n));
            if (rank(x) < x.size()) x.pop_back();
            if (static_cast<int>(x.size()) == n) return x;
        }
    }
    return std::nullopt;
}

Outcome determinant_theory() {
    Outcome o;
    std::vector<std::pair<Matroid, std::vector<Basis>>> pool;
    for (auto& e : connected_catalog(7))
        if (e.matroid.rank() > 1 && e.matroid.rank() < e.matroid.size() - 1)
            pool.emplace_back(e.matroid, enumerate_bases(e.matroid));
    std::mt19937_64 rng(10);
    int collections = 0;
    while (collections < 200) {
        const auto& [m, bases] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        auto x = random_collection(bases, m.size(), rng);
        if (!x) continue;
        ExchangeGraphs g = exchange_graphs(*x);
        o.check(g.row_components.size() == g.column_components.size(), "component counts differ");
        try {
            ReducedDeterminant r = reduced_determinant(*x);
            o.check(r.abs_det == abs(determinant(*x)), "reduced determinant identity");
        } catch (const InconsistencyError& err) {
            o.check(false, err.what());
        }
        ++collections;
    }
    IntMatrix six{{1, 1, 0, 0, 1, 0}, {1, 1, 0, 0, 0, 1}, {1, 0, 1, 1, 0, 0},
                  {0, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 1, 1}};
    ReducedDeterminant r = reduced_determinant(six);
    o.check(r.matrix == BigMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}, "6x6 example reduced matrix");
    o.check(r.abs_det == 9, "6x6 example |det|");
    if (o.ok) o.detail = "200 collections; 6x6 example reduces to [[2,0,1],[1,2,0],[0,1,2]], |det|=9";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "basis counts", 1, basis_counts},
        {2, "spanning-tree enumeration", 5, spanning_trees},
        {3, "Ehrhart of M(K4), general pipeline", 120, ehrhart_k4},
        {4, "uniform machinery", 60, uniform_machinery},
        {5, "Katzman properties", 60, katzman_properties},
        {6, "h* unimodality, U^{2,n} positivity", 60, unimodality_positivity},
        {7, "unimodular triangulations", 300, unimodular_triangulations},
        {8, "Todd and specialization", 30, todd_specialization},
        {9, "heuristic oracle properties", 300, heuristic_properties},
        {10, "determinant theory", 30, determinant_theory},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        if (!in_time && o.ok) o.detail = "over time limit; " + o.detail;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s %2d %-36s %8.2fs / %5.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
