#pragma once

#include "mtk/matroid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mtk {

using Point = IntVec;

class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(std::vector<IntVec> rows);

    int criteria() const { return static_cast<int>(rows_.size()); }
    int size() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    const IntVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<IntVec>& rows() const { return rows_; }

    Point project(const Basis& b) const;
    void check_matches(const Matroid& m) const;

private:
    std::vector<IntVec> rows_;
};

class Objective {
public:
    enum class Kind { linear, squared_distance, quartic_distance, minmax, custom };

    static Objective linear(std::vector<Rational> c);
    static Objective squared_distance(std::vector<Rational> target);
    static Objective quartic_distance(std::vector<Rational> target);
    static Objective minmax();
    // The callable must induce a total order through its values.
    static Objective custom(std::function<Rational(const Point&)> f, std::string name);

    Rational operator()(const Point& p) const;
    Kind kind() const { return kind_; }
    const std::vector<Rational>& params() const { return params_; }
    std::string describe() const;

private:
    Kind kind_ = Kind::minmax;
    std::vector<Rational> params_;
    std::vector<long long> int_params_;
    bool integral_ = false;
    std::function<Rational(const Point&)> custom_;
    std::string name_;
    void prepare();
};

// p dominates q iff p <= q componentwise and p != q (minimization).
bool dominates(const Point& p, const Point& q);
// Distinct non-dominated points, sorted lexicographically.
std::vector<Point> pareto_filter(std::vector<Point> points);

struct BoundingBox {
    IntVec lo;
    IntVec hi;
    bool contains(const Point& p) const;
    // Product of side lengths + 1, saturating.
    unsigned long long lattice_size() const;
};

BoundingBox bounding_box(const Matroid& m, const WeightMatrix& w);
long long minmax_value(const Point& p);

std::string format_point(const Point& p);  // "(1,2)"

}  // namespace mtk
