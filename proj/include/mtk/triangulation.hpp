#pragma once

#include "mtk/exec.hpp"
#include "mtk/linalg.hpp"

#include <vector>

namespace mtk {

// Sorted indices into a point list.
using Cell = std::vector<int>;

// True iff no point of conv(hull) lies strictly between the facet centroid and v.
// Decided by an exact LP maximizing the step toward v. Throws on a degenerate facet.
bool visible(const std::vector<IntVec>& facet, const std::vector<IntVec>& hull, const IntVec& v);

struct Triangulation {
    std::vector<int> order;   // insertion order used
    std::vector<Cell> cells;  // maximal cells, indices into the input points
};

// Placing triangulation. An empty order means 0..t-1.
Triangulation placing_triangulation(const std::vector<IntVec>& points, std::vector<int> order = {},
                                    Exec exec = Exec::serial);

// Coordinates whose restriction maps the span of gens injectively (greedy row choice).
std::vector<int> lattice_rows(const std::vector<IntVec>& gens);
IntVec restrict_to(const IntVec& x, const std::vector<int>& rows);

struct Cone {
    IntVec apex;
    std::vector<IntVec> generators;
};

struct ConeTriangulation {
    std::vector<int> rows;               // lattice projection
    std::vector<IntVec> projected;       // generators in Z^D
    std::vector<std::vector<int>> cells; // generator indices, D per cell
    int dimension = 0;
};

// Each generator must be e_i - e_j, e_i or -e_j.
bool is_elementary(const IntVec& g);

// Placing triangulation of conv{0, generators}, then cones over its boundary facets avoiding 0.
ConeTriangulation cone_triangulation(const Cone& c, Exec exec = Exec::serial);

}  // namespace mtk
