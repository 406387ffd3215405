#include "mtk/lp.hpp"

#include "mtk/errors.hpp"

namespace mtk {

namespace {

struct Tableau {
    std::size_t rows;
    std::size_t cols;  // structural + artificial columns; rhs stored separately
    QMatrix t;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rational p = t[r][c];
        for (auto& v : t[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Maximize obj over columns [0, allowed). Returns false when unbounded.
    bool optimize(const std::vector<Rational>& obj, std::size_t allowed) {
        while (true) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < allowed; ++j) {
                Rational reduced = obj[j];
                for (std::size_t i = 0; i < rows; ++i)
                    if (t[i][j] != 0) reduced -= obj[basis[i]] * t[i][j];
                if (reduced > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return true;
            std::size_t leave = rows;
            Rational best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / t[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize(const QMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw DimensionError("lp: right-hand side length mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw DimensionError("lp: constraint row length mismatch");

    Tableau tab{m, n + m, QMatrix(m, std::vector<Rational>(n + m)), b, std::vector<std::size_t>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? -a[i][j] : a[i][j];
        if (neg) tab.rhs[i] = -b[i];
        tab.t[i][n + i] = 1;
        tab.basis[i] = n + i;
    }

    std::vector<Rational> phase1(n + m, 0);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.optimize(phase1, n + m);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= n) infeas += tab.rhs[i];
    LpResult res;
    if (infeas != 0) {
        res.status = LpResult::Status::infeasible;
        return res;
    }
    // Drive zero-valued artificials out; drop rows that are redundant.
    for (std::size_t i = 0; i < tab.rows;) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t j = 0;
        while (j < n && tab.t[i][j] == 0) ++j;
        if (j < n) {
            tab.pivot(i, j);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + static_cast<long>(i));
            tab.rhs.erase(tab.rhs.begin() + static_cast<long>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
            --tab.rows;
        }
    }

    std::vector<Rational> obj(n + m, 0);
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    if (!tab.optimize(obj, n)) {
        res.status = LpResult::Status::unbounded;
        return res;
    }
    res.status = LpResult::Status::optimal;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < tab.rows; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs[i];
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace mtk
