#pragma once

#include "mtk/exec.hpp"
#include "mtk/matroid.hpp"
#include "mtk/multicriteria.hpp"
#include "mtk/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace mtk {

std::uint64_t basis_cap();  // MTK_BASIS_CAP, default 10^7

// All bases in lexicographic order. Throws CapError when C(n, r) exceeds cap.
std::vector<Basis> enumerate_bases(const Matroid& m, std::uint64_t cap = basis_cap());

// Reverse search over single-edge exchanges rooted at the lexicographically least tree.
// Returns the number of trees emitted. Requires a connected graphical matroid.
std::uint64_t matsui_spanning_trees(const Matroid& graph, const std::function<void(const Basis&)>& emit);

// Any cofactor of the graph Laplacian.
BigInt laplacian_tree_count(const Matroid& graph);

// Projected point -> number of bases mapping to it.
std::map<Point, std::uint64_t> exact_projected_set(const Matroid& m, const WeightMatrix& w);

// Counter-clockwise hull vertices starting at the lowest-leftmost point; collinear points dropped.
std::vector<Point> planar_convex_hull(std::vector<Point> points);

// #(kP_M ∩ Z^n) by a bounded composition sweep.
std::uint64_t dilation_lattice_count(const Matroid& m, long long k, Exec exec = Exec::serial);

struct LatticeCountTable {
    std::vector<std::uint64_t> counts;  // counts[k] for k = 0..K
};
LatticeCountTable dilation_counts(const Matroid& m, long long max_k, Exec exec = Exec::serial);

// Degree-dim interpolant; extra table points must agree (InconsistencyError otherwise).
Polynomial interpolate_ehrhart(const LatticeCountTable& table, int dim);

}  // namespace mtk
