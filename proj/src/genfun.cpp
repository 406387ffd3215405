#include "mtk/genfun.hpp"

#include "mtk/errors.hpp"
#include "mtk/oracles.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace mtk {

Cone tangent_cone(const Matroid& m, const Basis& b) {
    Cone c;
    c.apex = incidence(b, m.size());
    for (const auto& nb : adjacent_bases(m, b)) {
        IntVec g = incidence(nb, m.size());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= c.apex[i];
        c.generators.push_back(std::move(g));
    }
    return c;
}

namespace {

struct CellNormals {
    BigMatrix adj;  // rows are facet normals up to the sign of det
    BigInt det;
};

std::vector<CellNormals> cell_normals(const ConeTriangulation& tri) {
    std::vector<CellNormals> out;
    for (const auto& cell : tri.cells) {
        IntMatrix cols;
        for (int g : cell) cols.push_back(tri.projected[static_cast<std::size_t>(g)]);
        CellNormals cn;
        cn.adj = adjugate(transpose(cols), &cn.det);
        out.push_back(std::move(cn));
    }
    return out;
}

BigInt row_dot(const std::vector<BigInt>& row, const std::vector<BigInt>& y) {
    BigInt s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * y[i];
    return s;
}

HalfOpenDecomposition build(const Cone& c, const ConeTriangulation& tri, const std::vector<CellNormals>& normals,
                            const std::vector<BigInt>& y) {
    HalfOpenDecomposition out;
    out.y = y;
    for (std::size_t ci = 0; ci < tri.cells.size(); ++ci) {
        HalfOpenCone h;
        h.apex = c.apex;
        for (int g : tri.cells[ci]) h.generators.push_back(c.generators[static_cast<std::size_t>(g)]);
        for (std::size_t j = 0; j < tri.cells[ci].size(); ++j) {
            BigInt s = row_dot(normals[ci].adj[j], y);
            if (s == 0) throw PreconditionError("half-open decomposition: y is orthogonal to a facet normal");
            // lambda_j(y) = s / det; the facet is open iff lambda_j(y) < 0
            h.strict.push_back((s > 0) != (normals[ci].det > 0));
        }
        out.cells.push_back(std::move(h));
    }
    return out;
}

}  // namespace

std::vector<BigInt> moment_curve(long long xi, std::size_t n) {
    std::vector<BigInt> v(n);
    BigInt p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = p;
        p *= xi;
    }
    return v;
}

HalfOpenDecomposition half_open_decompose(const Cone& c, const ConeTriangulation& tri, const std::vector<BigInt>& y) {
    if (tri.dimension == 0) {
        HalfOpenDecomposition out;
        out.cells.push_back({c.apex, {}, {}});
        return out;
    }
    if (y.size() != static_cast<std::size_t>(tri.dimension)) throw DimensionError("y has the wrong dimension");
    return build(c, tri, cell_normals(tri), y);
}

HalfOpenDecomposition half_open_decompose(const Cone& c, const ConeTriangulation& tri) {
    if (tri.dimension == 0) return half_open_decompose(c, tri, {});
    const auto normals = cell_normals(tri);
    const std::size_t d = static_cast<std::size_t>(tri.dimension);
    std::vector<BigInt> interior(d, 0);
    for (int g : tri.cells[0])
        for (std::size_t i = 0; i < d; ++i) interior[i] += tri.projected[static_cast<std::size_t>(g)][i];
    const long long xi_max = static_cast<long long>((d - 1) * tri.cells.size() * d + 1);
    for (BigInt k = 1;; k *= 2) {
        for (long long xi = 0; xi <= xi_max; ++xi) {
            auto y = moment_curve(xi, d);
            for (std::size_t i = 0; i < d; ++i) y[i] += k * interior[i];
            bool ok = true;
            // y must lie in the interior of the first cell, hence of the cone.
            for (std::size_t j = 0; j < d && ok; ++j) {
                BigInt s = row_dot(normals[0].adj[j], y);
                ok = s != 0 && (s > 0) == (normals[0].det > 0);
            }
            for (std::size_t ci = 1; ci < normals.size() && ok; ++ci)
                for (std::size_t j = 0; j < d && ok; ++j) ok = row_dot(normals[ci].adj[j], y) != 0;
            if (ok) return build(c, tri, normals, y);
        }
        if (k > BigInt(1) << 64) throw InconsistencyError("no generic interior vector found");
    }
}

bool half_open_contains(const HalfOpenCone& c, const IntVec& x) {
    const std::size_t n = x.size();
    if (c.generators.empty()) return x == c.apex;
    auto rows = lattice_rows(c.generators);
    if (rows.size() != c.generators.size()) throw PreconditionError("half-open cone generators are dependent");
    const std::size_t d = rows.size();
    QMatrix a(d, std::vector<Rational>(d));
    std::vector<Rational> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = c.generators[j][rows[i]];
        rhs[i] = x[rows[i]] - c.apex[rows[i]];
    }
    auto lam = solve(a, rhs);
    if (!lam) return false;
    for (std::size_t r = 0; r < n; ++r) {
        Rational s = c.apex[r];
        for (std::size_t j = 0; j < d; ++j) s += (*lam)[j] * c.generators[j][r];
        if (s != x[r]) return false;
    }
    for (std::size_t j = 0; j < d; ++j) {
        if ((*lam)[j] < 0) return false;
        if (c.strict[j] && (*lam)[j] == 0) return false;
    }
    return true;
}

bool is_unimodular_cone(const std::vector<IntVec>& gens) {
    if (gens.empty()) return true;
    const std::size_t n = gens[0].size();
    const std::size_t d = gens.size();
    if (rank(gens) != d) return false;
    BigInt g = 0;
    std::vector<int> rows(d);
    std::iota(rows.begin(), rows.end(), 0);
    while (true) {
        IntMatrix m(d, IntVec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m[i][j] = gens[j][static_cast<std::size_t>(rows[i])];
        g = boost::multiprecision::gcd(g, abs(determinant(m)));
        if (g == 1) return true;
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && rows[i] == static_cast<int>(n - d) + i) --i;
        if (i < 0) break;
        ++rows[i];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < d; ++j) rows[j] = rows[j - 1] + 1;
    }
    return false;
}

GenFunTerm genfun_of_halfopen(const HalfOpenCone& c) {
    if (!is_unimodular_cone(c.generators)) throw PreconditionError("genfun_of_halfopen: cell is not unimodular");
    GenFunTerm t;
    t.sign = 1;
    t.v = c.apex;
    t.a = c.apex;
    for (std::size_t j = 0; j < c.generators.size(); ++j) {
        if (!c.strict[j]) continue;
        for (std::size_t i = 0; i < t.a.size(); ++i) t.a[i] += c.generators[j][i];
    }
    t.b = c.generators;
    return t;
}

namespace {

std::vector<GenFunTerm> vertex_terms(const Matroid& m, const Basis& b) {
    Cone cone = tangent_cone(m, b);
    ConeTriangulation tri = cone_triangulation(cone);
    HalfOpenDecomposition dec = half_open_decompose(cone, tri);
    std::vector<GenFunTerm> out;
    for (const auto& cell : dec.cells) out.push_back(genfun_of_halfopen(cell));
    return out;
}

}  // namespace

std::vector<GenFunTerm> brion_genfun(const Matroid& m, Exec exec) {
    const auto bases = enumerate_bases(m);
    std::vector<std::vector<GenFunTerm>> per(bases.size());
    if (exec == Exec::parallel) {
        std::string error;
        bool failed = false;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < bases.size(); ++i) {
            try {
                per[i] = vertex_terms(m, bases[i]);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    if (!failed) error = e.what();
                    failed = true;
                }
            }
        }
        if (failed) throw InconsistencyError("brion assembly failed: " + error);
    } else {
        for (std::size_t i = 0; i < bases.size(); ++i) per[i] = vertex_terms(m, bases[i]);
    }
    std::vector<GenFunTerm> out;
    for (auto& v : per)
        for (auto& t : v) out.push_back(std::move(t));
    return out;
}

std::vector<BigInt> todd_c(int m) {
    std::vector<BigInt> c(static_cast<std::size_t>(m + 1));
    c[0] = 1;
    for (int n = 1; n <= m; ++n) {
        BigInt s = 0;
        for (int j = 1; j <= n; ++j) {
            BigInt term = binomial(n + 1, j + 1) * (factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - j + 1))) * c[n - j];
            s += (j % 2 == 1) ? term : BigInt(-term);
        }
        c[n] = s;
    }
    return c;
}

std::vector<Rational> todd_b(int m) {
    auto c = todd_c(m);
    std::vector<Rational> b(static_cast<std::size_t>(m + 1));
    for (int n = 0; n <= m; ++n)
        b[n] = Rational(c[n]) / Rational(factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n + 1)));
    return b;
}

namespace {

std::vector<Rational> todd_series(const std::vector<Rational>& xi, int m, const std::vector<Rational>& b) {
    std::vector<Rational> h(static_cast<std::size_t>(m + 1), 0);
    h[0] = 1;
    for (const auto& x : xi) {
        std::vector<Rational> beta(static_cast<std::size_t>(m + 1));
        Rational p = 1;
        for (int n = 0; n <= m; ++n) {
            beta[n] = p * b[n];
            p *= x;
        }
        std::vector<Rational> next(static_cast<std::size_t>(m + 1), 0);
        for (int i = 0; i <= m; ++i) {
            if (h[i] == 0) continue;
            for (int j = 0; i + j <= m; ++j) next[i + j] += h[i] * beta[j];
        }
        h = std::move(next);
    }
    return h;
}

}  // namespace

std::vector<Rational> todd_polynomials(const std::vector<Rational>& xi, int m) {
    if (m < 0) throw PreconditionError("todd order must be non-negative");
    return todd_series(xi, m, todd_b(m));
}

Rational todd_eval(int m, const std::vector<Rational>& xi) {
    if (xi.empty()) throw PreconditionError("todd_eval needs s >= 1");
    return todd_polynomials(xi, m)[static_cast<std::size_t>(m)];
}

namespace {

BigInt big_dot(const std::vector<BigInt>& l, const IntVec& x) {
    BigInt s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s += l[i] * x[i];
    return s;
}

// Weights w_l, l = 0..s, and <lambda, a>, <lambda, v> of one term.
struct TermWeights {
    std::vector<Rational> w;
    BigInt la;
    BigInt lv;
};

TermWeights term_weights(const GenFunTerm& t, const std::vector<BigInt>& lambda, const std::vector<Rational>& b) {
    const int s = static_cast<int>(t.b.size());
    std::vector<Rational> neg;
    BigInt prod = 1;
    for (const auto& bj : t.b) {
        BigInt d = big_dot(lambda, bj);
        if (d == 0) throw PreconditionError("lambda is orthogonal to a denominator exponent");
        prod *= d;
        neg.emplace_back(-d);
    }
    auto td = todd_series(neg, s, b);
    TermWeights tw;
    tw.w.resize(static_cast<std::size_t>(s + 1));
    for (int l = 0; l <= s; ++l) {
        Rational w = td[static_cast<std::size_t>(s - l)] / (Rational(factorial(static_cast<unsigned>(l))) * Rational(prod));
        tw.w[l] = s % 2 ? Rational(-w) : w;
    }
    tw.la = big_dot(lambda, t.a);
    tw.lv = big_dot(lambda, t.v);
    return tw;
}

std::size_t max_denominators(const std::vector<GenFunTerm>& terms) {
    std::size_t s = 0;
    for (const auto& t : terms) s = std::max(s, t.b.size());
    return s;
}

}  // namespace

std::vector<BigInt> generic_lambda(const std::vector<GenFunTerm>& terms) {
    if (terms.empty()) throw PreconditionError("generic_lambda needs at least one term");
    const std::size_t n = terms[0].a.size();
    for (const auto& t : terms)
        for (const auto& b : t.b) {
            if (b.size() != n) throw DimensionError("denominator exponent dimension mismatch");
            if (std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; }))
                throw PreconditionError("zero denominator exponent");
        }
    const long long bound = static_cast<long long>((n - 1) * max_denominators(terms) * terms.size() + 1);
    for (long long xi = 0; xi <= bound; ++xi) {
        auto l = moment_curve(xi, n);
        bool ok = true;
        for (const auto& t : terms) {
            for (const auto& b : t.b)
                if (big_dot(l, b) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return l;
    }
    throw InconsistencyError("no generic vector on the moment curve within the degree bound");
}

BigInt specialize_count(const std::vector<GenFunTerm>& terms, const std::vector<BigInt>& lambda, Exec exec) {
    const auto b = todd_b(static_cast<int>(max_denominators(terms)));
    std::vector<Rational> part(terms.size());
    auto one = [&](std::size_t i) {
        TermWeights tw = term_weights(terms[i], lambda, b);
        Rational s = 0;
        Rational p = 1;
        for (const auto& w : tw.w) {
            s += w * p;
            p *= Rational(tw.la);
        }
        part[i] = terms[i].sign * s;
    };
    if (exec == Exec::parallel) {
        std::string error;
        bool failed = false;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < terms.size(); ++i) {
            try {
                one(i);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    if (!failed) error = e.what();
                    failed = true;
                }
            }
        }
        if (failed) throw PreconditionError(error);
    } else {
        for (std::size_t i = 0; i < terms.size(); ++i) one(i);
    }
    Rational total = 0;
    for (const auto& p : part) total += p;
    if (!is_integer(total)) throw InconsistencyError("specialized count is not an integer: " + to_string(total));
    return numerator_of(total);
}

Polynomial ehrhart_from_terms(const std::vector<GenFunTerm>& terms, const std::vector<BigInt>& lambda, int dim,
                              Exec exec) {
    const int smax = static_cast<int>(max_denominators(terms));
    const auto b = todd_b(smax);
    std::vector<std::vector<Rational>> part(terms.size());
    auto one = [&](std::size_t i) {
        const auto& t = terms[i];
        TermWeights tw = term_weights(t, lambda, b);
        const int s = static_cast<int>(t.b.size());
        const Rational shift(tw.la - tw.lv);
        std::vector<Rational> coef(static_cast<std::size_t>(smax + 1), 0);
        Rational lvm = 1;
        for (int m = 0; m <= s; ++m) {
            Rational inner = 0;
            Rational sp = 1;
            for (int l = m; l <= s; ++l) {
                inner += Rational(binomial(l, m)) * tw.w[l] * sp;
                sp *= shift;
            }
            coef[m] = t.sign * lvm * inner;
            lvm *= Rational(tw.lv);
        }
        part[i] = std::move(coef);
    };
    if (exec == Exec::parallel) {
        std::string error;
        bool failed = false;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < terms.size(); ++i) {
            try {
                one(i);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    if (!failed) error = e.what();
                    failed = true;
                }
            }
        }
        if (failed) throw PreconditionError(error);
    } else {
        for (std::size_t i = 0; i < terms.size(); ++i) one(i);
    }
    std::vector<Rational> total(static_cast<std::size_t>(std::max(smax, dim) + 1), 0);
    for (const auto& p : part)
        for (std::size_t m = 0; m < p.size(); ++m) total[m] += p[m];
    for (std::size_t m = static_cast<std::size_t>(dim + 1); m < total.size(); ++m)
        if (total[m] != 0)
            throw InconsistencyError("coefficient of k^" + std::to_string(m) + " does not vanish above the dimension");
    total.resize(static_cast<std::size_t>(dim + 1));
    return Polynomial{total};
}

Polynomial ehrhart_polynomial(const Matroid& m, Exec exec) {
    auto terms = brion_genfun(m, exec);
    auto lambda = generic_lambda(terms);
    return ehrhart_from_terms(terms, lambda, polytope_dimension(m), exec);
}

}  // namespace mtk
