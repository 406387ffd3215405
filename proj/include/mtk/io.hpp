#pragma once

#include "mtk/linalg.hpp"
#include "mtk/matroid.hpp"

#include <istream>
#include <string>
#include <vector>

namespace mtk {

class WeightMatrix;

// "graph n" / "vector m n" / "uniform n r" formats. Throws ParseError.
Matroid parse_matroid(std::istream& in);
Matroid load_matroid(const std::string& path);

// "weights d n" followed by d rows of n integers.
WeightMatrix parse_weights(std::istream& in);
WeightMatrix load_weights(const std::string& path);

// "vector m n" with 0/1 entries, used for incidence collections.
IntMatrix parse_incidence(std::istream& in);
IntMatrix load_incidence(const std::string& path);

// One point per line, whitespace separated integers.
std::vector<IntVec> parse_points(std::istream& in);

// "1,2,3" (1-based) -> sorted 0-based subset.
Subset parse_subset(const std::string& text, int n);

}  // namespace mtk
