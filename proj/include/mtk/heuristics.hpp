#pragma once

#include "mtk/exec.hpp"
#include "mtk/matroid.hpp"
#include "mtk/multicriteria.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtk {

enum class Searcher { local, tabu };

struct SearchParams {
    int tabu_limit = 20;
    int tries = 10;
    int bfs_depth = 3;
    int num_searches = 10;
    int boundary_retry_limit = 10;
    int random_retry_limit = 10;
    std::uint64_t seed = 0;
    Searcher searcher = Searcher::tabu;

    void validate() const;
};

enum class Termination {
    local_optimum,
    tabu_limit,
    no_unvisited_neighbor,
    target_reached,
    exhausted,
    limits_reached,
};
std::string to_string(Termination t);

struct SearchReport {
    std::vector<Basis> bases;
    std::vector<Point> points;  // points[i] = W e_{bases[i]}
    std::size_t pivots = 0;
    Termination reason = Termination::exhausted;
};

struct PivotRecord {
    std::size_t pivot;
    Basis basis;
    Point point;
    Rational objective;
};
using Transcript = std::function<void(const PivotRecord&)>;

// Moves to the least-valued neighbor while that strictly improves; ties by least basis.
SearchReport local_search(const Matroid& m, const WeightMatrix& w, const Objective& f, const Basis& start,
                          const Transcript& log = {});

// Best unvisited neighbor each pivot; stops after `limit` pivots without a new minimum,
// when no unvisited neighbor remains, or when the minimum reaches stop_at.
SearchReport tabu_search(const Matroid& m, const WeightMatrix& w, const Objective& f, const Basis& start, int limit,
                         const Transcript& log = {}, std::optional<Rational> stop_at = std::nullopt);

// One basis per target reached; restart seeds depend only on (seed, target, try).
SearchReport pivot_test(const Matroid& m, const WeightMatrix& w, const std::vector<Point>& targets,
                        const SearchParams& params, Exec exec = Exec::serial, int workers = 0);

// True iff p = W e_B is on the boundary of conv(WP_M), from the projected edge rays at B. d = 2.
bool on_projected_boundary(const Matroid& m, const WeightMatrix& w, const Basis& b);

SearchReport projected_boundary(const Matroid& m, const WeightMatrix& w, const Basis& start);

// Boundary start: local search on a random integer direction from a random basis.
Basis random_boundary_basis(const Matroid& m, const WeightMatrix& w, std::mt19937_64& rng);
IntVec random_direction(std::size_t d, std::mt19937_64& rng);

SearchReport btrpt(const Matroid& m, const WeightMatrix& w, const SearchParams& params);

// Seen projections with their first witness basis.
using SeenMap = std::map<Point, Basis>;
void dfbfs(const Matroid& m, const WeightMatrix& w, const Basis& b, int depth, int level, SeenMap& seen);
SearchReport dfbfs(const Matroid& m, const WeightMatrix& w, const Basis& start, int depth);
SearchReport dfbfs_driver(const Matroid& m, const WeightMatrix& w, const SearchParams& params);

}  // namespace mtk
