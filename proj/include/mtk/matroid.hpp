#pragma once

#include "mtk/linalg.hpp"
#include "mtk/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mtk {

// Strictly increasing 0-based element indices.
using Basis = std::vector<int>;
using Subset = std::vector<int>;

enum class Backend { uniform, graphical, vector };

class Matroid {
public:
    static Matroid uniform(int n, int r);
    // Edge list over vertices 0..vertices-1; edge i is element i.
    static Matroid graphical(int vertices, std::vector<std::pair<int, int>> edges);
    // Symmetric 0/1 adjacency; edges labeled row-major over the upper triangle.
    static Matroid from_adjacency(const std::vector<std::vector<int>>& adjacency);
    // m x n matrix; the elements are its columns.
    static Matroid from_rows(const QMatrix& rows);

    int size() const { return n_; }
    int rank() const { return rank_; }
    Backend backend() const { return backend_; }

    int rank_of(const Subset& a) const;
    int rank_of_mask(std::uint64_t mask) const;
    bool is_independent(const Subset& a) const;
    bool is_basis(const Subset& a) const;

    int vertex_count() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const QMatrix& rows() const { return rows_; }
    std::string describe() const;

private:
    Matroid() = default;
    void check_subset(const Subset& a) const;
    int graph_rank(const Subset& a) const;
    int vector_rank(const Subset& a) const;

    Backend backend_ = Backend::uniform;
    int n_ = 0;
    int rank_ = 0;
    int uniform_rank_ = 0;
    int vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    QMatrix rows_;
    std::vector<std::vector<BigInt>> columns_;  // integer-scaled columns
};

std::vector<Basis> adjacent_bases(const Matroid& m, const Basis& b);

struct GreedyResult {
    Basis basis;
    Rational weight;
};
GreedyResult greedy_max_basis(const Matroid& m, const std::vector<Rational>& w);
GreedyResult greedy_max_basis(const Matroid& m, const std::vector<long long>& w);

// Rejection sampling over rank-sized subsets, capped at 10^7 draws.
Basis random_basis(const Matroid& m, std::mt19937_64& rng);
Basis random_basis(const Matroid& m, std::uint64_t seed);

// Connected components of the matroid, each sorted, ordered by least element.
std::vector<std::vector<int>> components(const Matroid& m);
int polytope_dimension(const Matroid& m);

IntVec incidence(const Basis& b, int n);
std::string format_subset(const Subset& s);  // 1-based "{1,2,3}"

enum class Relation { equal, less_equal, greater_equal };
struct LinearConstraint {
    Subset support;
    Relation relation;
    long long rhs;
};
struct PolytopeDescription {
    int n = 0;
    int rank = 0;
    std::vector<LinearConstraint> constraints;
};

// Sum x = r, x >= 0, and sum_{A} x <= rank(A) for nonempty proper A.
PolytopeDescription polytope_constraints(const Matroid& m);
bool polytope_contains(const Matroid& m, const IntVec& x, long long k = 1);

// Rank of every subset, indexed by bitmask. n is capped (MTK_SUBSET_CAP, default 16).
std::vector<int> rank_table(const Matroid& m);
std::uint64_t subset_cap();

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace mtk
