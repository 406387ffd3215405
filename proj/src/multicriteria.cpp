#include "mtk/multicriteria.hpp"

#include "mtk/errors.hpp"

#include <algorithm>
#include <limits>

namespace mtk {

WeightMatrix::WeightMatrix(std::vector<IntVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("weight matrix needs d >= 1");
    for (const auto& r : rows_)
        if (r.size() != rows_[0].size()) throw DimensionError("weight matrix rows differ in length");
    if (rows_[0].empty()) throw DimensionError("weight matrix needs n >= 1");
}

Point WeightMatrix::project(const Basis& b) const {
    Point p(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int e : b) {
            if (e < 0 || e >= size()) throw DimensionError("basis element outside the weight matrix");
            p[i] += rows_[i][static_cast<std::size_t>(e)];
        }
    return p;
}

void WeightMatrix::check_matches(const Matroid& m) const {
    if (size() != m.size())
        throw DimensionError("weight matrix has " + std::to_string(size()) + " columns, matroid has " +
                             std::to_string(m.size()) + " elements");
}

Objective Objective::linear(std::vector<Rational> c) {
    Objective o;
    o.kind_ = Kind::linear;
    o.params_ = std::move(c);
    o.prepare();
    return o;
}

Objective Objective::squared_distance(std::vector<Rational> target) {
    Objective o;
    o.kind_ = Kind::squared_distance;
    o.params_ = std::move(target);
    o.prepare();
    return o;
}

Objective Objective::quartic_distance(std::vector<Rational> target) {
    Objective o;
    o.kind_ = Kind::quartic_distance;
    o.params_ = std::move(target);
    o.prepare();
    return o;
}

Objective Objective::minmax() {
    Objective o;
    o.kind_ = Kind::minmax;
    return o;
}

Objective Objective::custom(std::function<Rational(const Point&)> f, std::string name) {
    Objective o;
    o.kind_ = Kind::custom;
    o.custom_ = std::move(f);
    o.name_ = std::move(name);
    return o;
}

void Objective::prepare() {
    integral_ = true;
    int_params_.clear();
    for (const auto& q : params_) {
        if (!is_integer(q) || abs(q) > 1'000'000) {
            integral_ = false;
            break;
        }
        int_params_.push_back(numerator_of(q).convert_to<long long>());
    }
}

Rational Objective::operator()(const Point& p) const {
    if ((kind_ == Kind::linear || kind_ == Kind::squared_distance || kind_ == Kind::quartic_distance) &&
        p.size() != params_.size())
        throw DimensionError("objective dimension differs from point dimension");
    switch (kind_) {
        case Kind::minmax: return Rational(minmax_value(p));
        case Kind::custom: return custom_(p);
        default: break;
    }
    if (integral_) {
        bool small = true;
        for (long long x : p)
            if (x > 1'000'000 || x < -1'000'000) small = false;
        if (small) {
            // |terms| stay far below 2^63 for these bounds when d is modest.
            __int128 s = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                __int128 t = kind_ == Kind::linear ? __int128(int_params_[i]) * p[i] : __int128(p[i] - int_params_[i]);
                if (kind_ == Kind::squared_distance) t = t * t;
                if (kind_ == Kind::quartic_distance) t = t * t * t * t;
                s += t;
            }
            if (s < __int128(std::numeric_limits<long long>::max()) && s > __int128(std::numeric_limits<long long>::min()))
                return Rational(static_cast<long long>(s));
        }
    }
    Rational s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (kind_ == Kind::linear) {
            s += params_[i] * p[i];
        } else {
            Rational t = Rational(p[i]) - params_[i];
            Rational t2 = t * t;
            s += kind_ == Kind::squared_distance ? t2 : Rational(t2 * t2);
        }
    }
    return s;
}

std::string Objective::describe() const {
    auto join = [&]() {
        std::string s;
        for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + to_string(params_[i]);
        return s;
    };
    switch (kind_) {
        case Kind::linear: return "linear:" + join();
        case Kind::squared_distance: return "squared:" + join();
        case Kind::quartic_distance: return "quartic:" + join();
        case Kind::minmax: return "minmax";
        case Kind::custom: return "custom:" + name_;
    }
    return "";
}

bool dominates(const Point& p, const Point& q) {
    if (p.size() != q.size()) throw DimensionError("comparing points of different dimension");
    bool strict = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > q[i]) return false;
        if (p[i] < q[i]) strict = true;
    }
    return strict;
}

std::vector<Point> pareto_filter(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Point> out;
    for (const auto& q : points) {
        bool dominated = false;
        for (const auto& p : points)
            if (dominates(p, q)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(q);
    }
    return out;
}

bool BoundingBox::contains(const Point& p) const {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
}

unsigned long long BoundingBox::lattice_size() const {
    unsigned long long s = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        unsigned long long side = static_cast<unsigned long long>(hi[i] - lo[i] + 1);
        if (side != 0 && s > std::numeric_limits<unsigned long long>::max() / side) return std::numeric_limits<unsigned long long>::max();
        s *= side;
    }
    return s;
}

BoundingBox bounding_box(const Matroid& m, const WeightMatrix& w) {
    w.check_matches(m);
    BoundingBox box;
    for (int i = 0; i < w.criteria(); ++i) {
        IntVec neg = w.row(i);
        for (auto& x : neg) x = -x;
        box.hi.push_back(w.project(greedy_max_basis(m, w.row(i)).basis)[i]);
        box.lo.push_back(w.project(greedy_max_basis(m, neg).basis)[i]);
    }
    return box;
}

long long minmax_value(const Point& p) {
    if (p.empty()) throw DimensionError("minmax of an empty point");
    return *std::max_element(p.begin(), p.end());
}

std::string format_point(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace mtk
