#pragma once

#include "mtk/linalg.hpp"
#include "mtk/rational.hpp"

#include <vector>

namespace mtk {

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational value;
    std::vector<Rational> x;
};

// maximize c.x subject to a x = b, x >= 0. Two-phase simplex, Bland's rule, exact.
LpResult lp_maximize(const QMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace mtk
