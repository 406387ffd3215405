#include "mtk/heuristics.hpp"

#include "mtk/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace mtk {

void SearchParams::validate() const {
    if (tabu_limit < 1 || tries < 1 || num_searches < 1 || boundary_retry_limit < 1 || random_retry_limit < 1)
        throw PreconditionError("search limits must be >= 1");
    if (bfs_depth < 0) throw PreconditionError("bfs depth must be >= 0");
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::local_optimum: return "local_optimum";
        case Termination::tabu_limit: return "tabu_limit";
        case Termination::no_unvisited_neighbor: return "no_unvisited_neighbor";
        case Termination::target_reached: return "target_reached";
        case Termination::exhausted: return "exhausted";
        case Termination::limits_reached: return "limits_reached";
    }
    return "";
}

SearchReport local_search(const Matroid& m, const WeightMatrix& w, const Objective& f, const Basis& start,
                          const Transcript& log) {
    w.check_matches(m);
    if (!m.is_basis(start)) throw PreconditionError("start is not a basis: " + format_subset(start));
    Basis cur = start;
    Point p = w.project(cur);
    Rational val = f(p);
    std::size_t pivots = 0;
    if (log) log({0, cur, p, val});
    while (true) {
        const Basis* best = nullptr;
        Rational best_val;
        Point best_p;
        auto nbrs = adjacent_bases(m, cur);
        for (const auto& nb : nbrs) {
            Point q = w.project(nb);
            Rational v = f(q);
            if (!best || v < best_val) {
                best = &nb;
                best_val = v;
                best_p = std::move(q);
            }
        }
        if (!best || !(best_val < val)) break;
        cur = *best;
        p = std::move(best_p);
        val = best_val;
        ++pivots;
        if (log) log({pivots, cur, p, val});
    }
    return {{cur}, {p}, pivots, Termination::local_optimum};
}

SearchReport tabu_search(const Matroid& m, const WeightMatrix& w, const Objective& f, const Basis& start, int limit,
                         const Transcript& log, std::optional<Rational> stop_at) {
    w.check_matches(m);
    if (limit < 1) throw PreconditionError("tabu limit must be >= 1");
    if (!m.is_basis(start)) throw PreconditionError("start is not a basis: " + format_subset(start));
    std::set<Basis> visited{start};
    Basis cur = start;
    Point cur_p = w.project(cur);
    Rational cur_min = f(cur_p);
    Basis best = cur;
    Point best_p = cur_p;
    std::size_t pivots = 0;
    int stale = 0;
    if (log) log({0, cur, cur_p, cur_min});
    Termination reason = Termination::tabu_limit;
    while (true) {
        if (stop_at && cur_min <= *stop_at) {
            reason = Termination::target_reached;
            break;
        }
        const Basis* next = nullptr;
        Rational next_val;
        Point next_p;
        auto nbrs = adjacent_bases(m, cur);
        for (const auto& nb : nbrs) {
            if (visited.count(nb)) continue;
            Point q = w.project(nb);
            Rational v = f(q);
            if (!next || v < next_val) {
                next = &nb;
                next_val = v;
                next_p = std::move(q);
            }
        }
        if (!next) {
            reason = Termination::no_unvisited_neighbor;
            break;
        }
        cur = *next;
        visited.insert(cur);
        ++pivots;
        if (log) log({pivots, cur, next_p, next_val});
        if (next_val < cur_min) {
            cur_min = next_val;
            best = cur;
            best_p = next_p;
            stale = 0;
        } else if (++stale >= limit) {
            reason = Termination::tabu_limit;
            break;
        }
    }
    return {{best}, {best_p}, pivots, reason};
}

namespace {

std::uint64_t target_seed(std::uint64_t seed, const Point& x, int attempt) {
    std::uint64_t h = mix_seed(seed, 0x5054);
    for (long long c : x) h = mix_seed(h, static_cast<std::uint64_t>(c));
    return mix_seed(h, static_cast<std::uint64_t>(attempt));
}

}  // namespace

SearchReport pivot_test(const Matroid& m, const WeightMatrix& w, const std::vector<Point>& targets,
                        const SearchParams& params, Exec exec, int workers) {
    w.check_matches(m);
    params.validate();
    for (const auto& x : targets)
        if (static_cast<int>(x.size()) != w.criteria()) throw DimensionError("target dimension differs from d");
    std::vector<std::optional<Basis>> found(targets.size());
    std::vector<std::size_t> pivots(targets.size(), 0);
    auto run = [&](std::size_t i) {
        const Point& x = targets[i];
        std::vector<Rational> t(x.begin(), x.end());
        Objective f = Objective::squared_distance(t);
        for (int attempt = 0; attempt < params.tries; ++attempt) {
            Basis start = random_basis(m, target_seed(params.seed, x, attempt));
            SearchReport r = params.searcher == Searcher::local
                                 ? local_search(m, w, f, start)
                                 : tabu_search(m, w, f, start, params.tabu_limit, {}, Rational(0));
            pivots[i] += r.pivots;
            if (r.points[0] == x) {
                found[i] = r.bases[0];
                break;
            }
        }
    };
    if (exec == Exec::parallel) {
        const int threads = workers > 0 ? workers : omp_get_max_threads();
        std::string error;
        bool failed = false;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::size_t i = 0; i < targets.size(); ++i) {
            try {
                run(i);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    if (!failed) error = e.what();
                    failed = true;
                }
            }
        }
        if (failed) throw InconsistencyError("pivot test worker failed: " + error);
    } else {
        for (std::size_t i = 0; i < targets.size(); ++i) run(i);
    }
    SearchReport rep;
    rep.reason = Termination::exhausted;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        rep.pivots += pivots[i];
        if (found[i]) {
            rep.bases.push_back(*found[i]);
            rep.points.push_back(targets[i]);
        }
    }
    return rep;
}

namespace {

using Ray = std::pair<long long, long long>;

int half(const Ray& r) { return (r.second < 0 || (r.second == 0 && r.first < 0)) ? 1 : 0; }

__int128 cross(const Ray& a, const Ray& b) { return __int128(a.first) * b.second - __int128(a.second) * b.first; }
__int128 dotp(const Ray& a, const Ray& b) { return __int128(a.first) * b.first + __int128(a.second) * b.second; }

// Rays fail to positively span the plane iff some angular gap is at least pi.
bool has_wide_gap(std::vector<Ray> rays) {
    for (auto& r : rays) {
        long long g = std::gcd(r.first < 0 ? -r.first : r.first, r.second < 0 ? -r.second : r.second);
        r.first /= g;
        r.second /= g;
    }
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross(a, b) > 0;
    });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.size() <= 1) return true;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Ray& u = rays[i];
        const Ray& v = rays[(i + 1) % rays.size()];
        __int128 c = cross(u, v);
        if (c < 0 || (c == 0 && dotp(u, v) < 0)) return true;
    }
    return false;
}

}  // namespace

bool on_projected_boundary(const Matroid& m, const WeightMatrix& w, const Basis& b) {
    if (w.criteria() != 2) throw DimensionError("projected boundary is implemented for d = 2 only");
    Point p = w.project(b);
    std::vector<Ray> rays;
    for (const auto& nb : adjacent_bases(m, b)) {
        Point q = w.project(nb);
        if (q == p) continue;
        rays.emplace_back(q[0] - p[0], q[1] - p[1]);
    }
    return has_wide_gap(std::move(rays));
}

SearchReport projected_boundary(const Matroid& m, const WeightMatrix& w, const Basis& start) {
    w.check_matches(m);
    if (w.criteria() != 2) throw DimensionError("projected boundary is implemented for d = 2 only");
    if (!m.is_basis(start)) throw PreconditionError("start is not a basis: " + format_subset(start));
    if (!on_projected_boundary(m, w, start)) throw PreconditionError("start basis does not project to the boundary");
    SearchReport rep;
    std::set<Point> seen{w.project(start)};
    rep.bases.push_back(start);
    rep.points.push_back(w.project(start));
    for (std::size_t next = 0; next < rep.bases.size(); ++next) {
        const Basis cur = rep.bases[next];
        for (const auto& nb : adjacent_bases(m, cur)) {
            Point q = w.project(nb);
            if (seen.count(q)) continue;
            if (!on_projected_boundary(m, w, nb)) continue;
            seen.insert(q);
            rep.bases.push_back(nb);
            rep.points.push_back(q);
        }
        ++rep.pivots;
    }
    rep.reason = Termination::exhausted;
    return rep;
}

IntVec random_direction(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> entry(-1000, 1000);
    IntVec c(d);
    do {
        for (auto& x : c) x = entry(rng);
    } while (std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; }));
    return c;
}

Basis random_boundary_basis(const Matroid& m, const WeightMatrix& w, std::mt19937_64& rng) {
    IntVec c = random_direction(static_cast<std::size_t>(w.criteria()), rng);
    Basis start = random_basis(m, rng);
    std::vector<Rational> cq(c.begin(), c.end());
    return local_search(m, w, Objective::linear(cq), start).bases[0];
}

SearchReport btrpt(const Matroid& m, const WeightMatrix& w, const SearchParams& params) {
    w.check_matches(m);
    if (w.criteria() != 2) throw DimensionError("BTRPT is implemented for d = 2 only");
    params.validate();
    std::mt19937_64 rng(mix_seed(params.seed, 0x4254));
    Basis start = random_boundary_basis(m, w, rng);
    SearchReport boundary = projected_boundary(m, w, start);

    std::map<Point, Basis> known;
    for (std::size_t i = 0; i < boundary.bases.size(); ++i) known.emplace(boundary.points[i], boundary.bases[i]);
    std::vector<Point> front;
    for (const auto& [p, b] : known) front.push_back(p);
    front = pareto_filter(front);  // sorted by first coordinate

    std::set<Point> region;
    for (std::size_t i = 0; i + 1 < front.size(); ++i) {
        const Point& p = front[i];
        const Point& q = front[i + 1];
        for (long long x = p[0]; x <= q[0]; ++x)
            for (long long y = q[1]; y <= p[1]; ++y) {
                Point c{x, y};
                if (!known.count(c)) region.insert(c);
            }
    }
    std::vector<Point> targets(region.begin(), region.end());
    SearchReport pt = pivot_test(m, w, targets, params);
    for (std::size_t i = 0; i < pt.bases.size(); ++i) known.emplace(pt.points[i], pt.bases[i]);

    std::vector<Point> all;
    for (const auto& [p, b] : known) all.push_back(p);
    SearchReport rep;
    for (const auto& p : pareto_filter(all)) {
        rep.points.push_back(p);
        rep.bases.push_back(known.at(p));
    }
    rep.pivots = boundary.pivots + pt.pivots;
    rep.reason = Termination::exhausted;
    return rep;
}

void dfbfs(const Matroid& m, const WeightMatrix& w, const Basis& b, int depth, int level, SeenMap& seen) {
    if (level >= depth) return;
    Point p = w.project(b);
    seen.emplace(p, b);
    std::vector<Basis> fresh;
    for (const auto& nb : adjacent_bases(m, b)) {
        Point q = w.project(nb);
        if (q == p || seen.count(q)) continue;
        seen.emplace(q, nb);
        fresh.push_back(nb);
    }
    for (const auto& nb : fresh) dfbfs(m, w, nb, depth, level + 1, seen);
}

SearchReport dfbfs(const Matroid& m, const WeightMatrix& w, const Basis& start, int depth) {
    w.check_matches(m);
    if (depth < 0) throw PreconditionError("depth must be >= 0");
    if (!m.is_basis(start)) throw PreconditionError("start is not a basis: " + format_subset(start));
    SeenMap seen;
    dfbfs(m, w, start, depth, 0, seen);
    SearchReport rep;
    for (const auto& [p, b] : seen) {
        rep.points.push_back(p);
        rep.bases.push_back(b);
    }
    rep.reason = Termination::exhausted;
    return rep;
}

SearchReport dfbfs_driver(const Matroid& m, const WeightMatrix& w, const SearchParams& params) {
    w.check_matches(m);
    params.validate();
    // Each phase owns its random stream and seen set, so raising any limit only extends a run.
    SeenMap boundary_seen, random_seen;
    {
        std::mt19937_64 rng(mix_seed(params.seed, 0xA));
        int fresh = 0, failures = 0;
        while (fresh < params.num_searches && failures < params.boundary_retry_limit) {
            Basis b = random_boundary_basis(m, w, rng);
            if (boundary_seen.count(w.project(b))) {
                ++failures;
                continue;
            }
            ++fresh;
            dfbfs(m, w, b, params.bfs_depth, 0, boundary_seen);
        }
    }
    {
        std::mt19937_64 rng(mix_seed(params.seed, 0xB));
        int fresh = 0, failures = 0;
        while (fresh < params.num_searches && failures < params.random_retry_limit) {
            Basis b = random_basis(m, rng);
            if (random_seen.count(w.project(b))) {
                ++failures;
                continue;
            }
            ++fresh;
            dfbfs(m, w, b, params.bfs_depth, 0, random_seen);
        }
    }
    SeenMap all = boundary_seen;
    for (const auto& [p, b] : random_seen) all.emplace(p, b);
    SearchReport rep;
    for (const auto& [p, b] : all) {
        rep.points.push_back(p);
        rep.bases.push_back(b);
    }
    rep.reason = Termination::limits_reached;
    return rep;
}

}  // namespace mtk
