#include "mtk/triangulation.hpp"

#include "mtk/errors.hpp"
#include "mtk/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtk {

namespace {

std::size_t affine_rank(const std::vector<IntVec>& pts) {
    if (pts.size() <= 1) return 0;
    IntMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(diffs);
}

}  // namespace

bool visible(const std::vector<IntVec>& facet, const std::vector<IntVec>& hull, const IntVec& v) {
    if (facet.empty()) throw PreconditionError("visible: empty facet");
    const std::size_t d = v.size();
    for (const auto& p : facet)
        if (p.size() != d) throw DimensionError("visible: facet point dimension mismatch");
    for (const auto& p : hull)
        if (p.size() != d) throw DimensionError("visible: hull point dimension mismatch");
    if (affine_rank(facet) + 1 != facet.size()) throw PreconditionError("visible: degenerate facet");

    std::vector<Rational> z(d, 0);
    for (const auto& p : facet)
        for (std::size_t j = 0; j < d; ++j) z[j] += p[j];
    for (auto& x : z) x /= static_cast<long long>(facet.size());

    // Variables: y_1..y_h >= 0, lambda, slack. Maximize lambda.
    const std::size_t h = hull.size();
    const std::size_t nv = h + 2;
    QMatrix a;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(nv, 0);
        for (std::size_t i = 0; i < h; ++i) row[i] = hull[i][j];
        row[h] = z[j] - Rational(v[j]);
        a.push_back(std::move(row));
        b.push_back(z[j]);
    }
    std::vector<Rational> sum(nv, 0);
    for (std::size_t i = 0; i < h; ++i) sum[i] = 1;
    a.push_back(std::move(sum));
    b.emplace_back(1);
    std::vector<Rational> cap(nv, 0);
    cap[h] = 1;
    cap[h + 1] = 1;
    a.push_back(std::move(cap));
    b.emplace_back(1);
    std::vector<Rational> c(nv, 0);
    c[h] = 1;
    LpResult r = lp_maximize(a, b, c);
    if (r.status != LpResult::Status::optimal)
        throw InconsistencyError("visibility program has no optimum; facet is not part of the hull points");
    return r.value == 0;
}

Triangulation placing_triangulation(const std::vector<IntVec>& points, std::vector<int> order, Exec exec) {
    if (points.empty()) throw PreconditionError("placing triangulation needs at least one point");
    const int t = static_cast<int>(points.size());
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(t));
        std::iota(order.begin(), order.end(), 0);
    }
    {
        std::vector<int> check = order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < t; ++i)
            if (static_cast<int>(check.size()) != t || check[i] != i)
                throw PreconditionError("insertion order must be a permutation of the points");
    }
    Triangulation tri;
    tri.order = order;
    tri.cells = {{order[0]}};
    std::vector<IntVec> placed{points[order[0]]};
    std::size_t arank = 0;

    for (int idx = 1; idx < t; ++idx) {
        const int p = order[idx];
        std::vector<IntVec> with = placed;
        with.push_back(points[p]);
        std::size_t r = affine_rank(with);
        if (r > arank) {
            for (auto& c : tri.cells) {
                c.push_back(p);
                std::sort(c.begin(), c.end());
            }
            arank = r;
        } else if (tri.cells[0].size() > 1) {
            std::map<Cell, int> facet_count;
            for (const auto& c : tri.cells)
                for (std::size_t drop = 0; drop < c.size(); ++drop) {
                    Cell f;
                    for (std::size_t j = 0; j < c.size(); ++j)
                        if (j != drop) f.push_back(c[j]);
                    ++facet_count[f];
                }
            std::vector<Cell> boundary;
            for (const auto& [f, cnt] : facet_count)
                if (cnt == 1) boundary.push_back(f);
            std::vector<char> vis(boundary.size(), 0);
            auto test = [&](std::size_t i) {
                std::vector<IntVec> fp;
                for (int q : boundary[i]) fp.push_back(points[q]);
                vis[i] = visible(fp, placed, points[p]) ? 1 : 0;
            };
            if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
                for (std::size_t i = 0; i < boundary.size(); ++i) test(i);
            } else {
                for (std::size_t i = 0; i < boundary.size(); ++i) test(i);
            }
            for (std::size_t i = 0; i < boundary.size(); ++i)
                if (vis[i]) {
                    Cell c = boundary[i];
                    c.push_back(p);
                    std::sort(c.begin(), c.end());
                    tri.cells.push_back(std::move(c));
                }
        }
        placed.push_back(points[p]);
    }
    return tri;
}

std::vector<int> lattice_rows(const std::vector<IntVec>& gens) {
    if (gens.empty()) return {};
    const std::size_t n = gens[0].size();
    const std::size_t target = rank(gens);
    std::vector<int> rows;
    IntMatrix selected;  // selected coordinate rows of the generator matrix
    std::size_t current = 0;
    for (std::size_t i = 0; i < n && current < target; ++i) {
        IntVec row;
        for (const auto& g : gens) row.push_back(g[i]);
        selected.push_back(row);
        std::size_t r = rank(selected);
        if (r > current) {
            rows.push_back(static_cast<int>(i));
            current = r;
        } else {
            selected.pop_back();
        }
    }
    return rows;
}

IntVec restrict_to(const IntVec& x, const std::vector<int>& rows) {
    IntVec y;
    y.reserve(rows.size());
    for (int r : rows) y.push_back(x[static_cast<std::size_t>(r)]);
    return y;
}

bool is_elementary(const IntVec& g) {
    int plus = 0, minus = 0;
    for (long long x : g) {
        if (x == 1) ++plus;
        else if (x == -1) ++minus;
        else if (x != 0) return false;
    }
    return plus <= 1 && minus <= 1 && plus + minus >= 1;
}

ConeTriangulation cone_triangulation(const Cone& c, Exec exec) {
    for (const auto& g : c.generators) {
        if (g.size() != c.apex.size()) throw DimensionError("cone generator dimension mismatch");
        if (!is_elementary(g)) throw PreconditionError("cone generator is not elementary");
    }
    ConeTriangulation out;
    if (c.generators.empty()) {
        out.cells = {{}};
        return out;
    }
    out.rows = lattice_rows(c.generators);
    out.dimension = static_cast<int>(out.rows.size());
    for (const auto& g : c.generators) out.projected.push_back(restrict_to(g, out.rows));

    std::vector<IntVec> pts{IntVec(out.rows.size(), 0)};
    for (const auto& g : out.projected) pts.push_back(g);
    Triangulation tri = placing_triangulation(pts, {}, exec);

    std::map<Cell, int> facet_count;
    for (const auto& cell : tri.cells)
        for (std::size_t drop = 0; drop < cell.size(); ++drop) {
            Cell f;
            for (std::size_t j = 0; j < cell.size(); ++j)
                if (j != drop) f.push_back(cell[j]);
            ++facet_count[f];
        }
    for (const auto& [f, cnt] : facet_count) {
        if (cnt != 1 || f.front() == 0) continue;
        IntMatrix m;
        for (int q : f) m.push_back(out.projected[static_cast<std::size_t>(q - 1)]);
        BigInt det = determinant(transpose(m));
        if (det == 0) continue;  // lies in a boundary face through the apex
        if (abs(det) != 1) throw InconsistencyError("tangent cone cell with |det| = " + BigInt(abs(det)).str());
        std::vector<int> cell;
        for (int q : f) cell.push_back(q - 1);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

}  // namespace mtk
