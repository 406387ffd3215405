#include "mtk/ehrhart_uniform.hpp"

#include "mtk/errors.hpp"

#include <functional>

namespace mtk {

namespace {

void trim_zeros(std::vector<BigInt>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
}

// Window recurrence A^{m,r}_i = sum_{k=i-r+1}^{i} A^{m-1,r}_k; rows m = 0..n.
std::vector<std::vector<BigInt>> katzman_rows(int n, int r) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n + 1));
    rows[0] = {BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        const auto& prev = rows[m - 1];
        std::vector<BigInt> prefix(prev.size() + 1, 0);
        for (std::size_t i = 0; i < prev.size(); ++i) prefix[i + 1] = prefix[i] + prev[i];
        const std::size_t len = static_cast<std::size_t>(m) * static_cast<std::size_t>(r - 1) + 1;
        auto& cur = rows[m];
        cur.resize(len);
        for (std::size_t i = 0; i < len; ++i) {
            long long hi = std::min<long long>(static_cast<long long>(i), static_cast<long long>(prev.size()) - 1);
            long long lo = std::max<long long>(0, static_cast<long long>(i) - r + 1);
            cur[i] = hi < lo ? BigInt(0) : prefix[hi + 1] - prefix[lo];
        }
    }
    return rows;
}

}  // namespace

std::vector<BigInt> katzman(int n, int r) {
    if (n < 0 || r < 1) throw PreconditionError("katzman needs n >= 0 and r >= 1");
    return katzman_rows(n, r)[n];
}

std::vector<BigInt> katzman_multinomial(int n, int r) {
    if (n < 0 || r < 1) throw PreconditionError("katzman needs n >= 0 and r >= 1");
    // Count compositions: the coefficient of T^i is the number of ways to write i
    // as a sum of n parts in [0, r-1], grouped by multiplicities via multinomials.
    const int len = n * (r - 1) + 1;
    std::vector<BigInt> out(static_cast<std::size_t>(len), 0);
    std::vector<int> mult(static_cast<std::size_t>(r), 0);
    BigInt nfact = factorial(static_cast<unsigned>(n));
    // enumerate multiplicity vectors (m_0..m_{r-1}) summing to n
    std::function<void(int, int)> rec = [&](int part, int left) {
        if (part == r - 1) {
            mult[part] = left;
            BigInt coef = nfact;
            int deg = 0;
            for (int p = 0; p < r; ++p) {
                coef /= factorial(static_cast<unsigned>(mult[p]));
                deg += p * mult[p];
            }
            out[deg] += coef;
            return;
        }
        for (int c = 0; c <= left; ++c) {
            mult[part] = c;
            rec(part + 1, left - c);
        }
    };
    rec(0, n);
    return out;
}

std::vector<BigInt> hstar_uniform(int n, int r) {
    if (r < 1 || r > n - 1) throw PreconditionError("hstar_uniform needs 1 <= r <= n-1");
    std::vector<std::vector<std::vector<BigInt>>> tables(static_cast<std::size_t>(r + 1));
    for (int q = 1; q <= r; ++q) tables[q] = katzman_rows(n, q);
    auto A = [&](int m, int q, long long idx) -> BigInt {
        const auto& row = tables[q][m];
        if (idx < 0 || idx >= static_cast<long long>(row.size())) return 0;
        return row[static_cast<std::size_t>(idx)];
    };
    std::vector<BigInt> h(static_cast<std::size_t>(n), 0);
    for (int s = 0; s <= r - 1; ++s) {
        BigInt cs = binomial(n, s);
        for (int j = 0; j <= s; ++j) {
            BigInt csj = cs * binomial(s, j);
            for (int k = 0; k <= j; ++k) {
                BigInt c = csj * binomial(j, k);
                if ((s + j + k) % 2) c = -c;
                for (int l = k; l < n; ++l) h[l] += c * A(n - j, r - s, static_cast<long long>(l - k) * (r - s));
            }
        }
    }
    trim_zeros(h);
    return h;
}

Polynomial ehrhart_uniform(int n, int r) {
    if (r < 1 || r > n - 1) throw PreconditionError("ehrhart_uniform needs 1 <= r <= n-1");
    Polynomial total;
    const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(n - 1)));
    for (int s = 0; s <= r - 1; ++s) {
        // C(X, n-1) with X = (r-s)k + n-1-s, as a falling-factorial product in k.
        Polynomial prod{{Rational(1)}};
        for (int i = 0; i <= n - 2; ++i) prod = prod * Polynomial{{Rational(n - 1 - s - i), Rational(r - s)}};
        Rational c = Rational(binomial(n, s)) * inv;
        if (s % 2) c = -c;
        total = total + c * prod;
    }
    total.coeffs.resize(static_cast<std::size_t>(n));
    return total;
}

bool is_unimodal(const std::vector<BigInt>& v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return i + 1 >= v.size();
}

std::vector<BigInt> hstar_from_counts(const LatticeCountTable& table, int dim) {
    if (dim < 0) throw PreconditionError("dimension must be non-negative");
    const std::size_t len = table.counts.size();
    if (len < static_cast<std::size_t>(dim + 1)) throw PreconditionError("h* needs at least dim+1 counts");
    std::vector<BigInt> h(len, 0);
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t i = 0; i <= j && i <= static_cast<std::size_t>(dim + 1); ++i) {
            BigInt term = binomial(dim + 1, static_cast<long long>(i)) * BigInt(table.counts[j - i]);
            h[j] += i % 2 ? -term : term;
        }
    for (std::size_t j = static_cast<std::size_t>(dim + 1); j < len; ++j)
        if (h[j] != 0) throw InconsistencyError("h* series does not terminate at the stated dimension");
    h.resize(static_cast<std::size_t>(dim + 1));
    for (const auto& x : h)
        if (x < 0) throw InconsistencyError("negative h* entry: counts or dimension are wrong");
    trim_zeros(h);
    return h;
}

std::vector<BigInt> hstar_from_polynomial(const Polynomial& ehrhart, int dim) {
    LatticeCountTable t;
    for (int k = 0; k <= dim + 1; ++k) {
        Rational v = ehrhart(Rational(k));
        if (!is_integer(v) || v < 0) throw InconsistencyError("Ehrhart polynomial is not integral at k=" + std::to_string(k));
        t.counts.push_back(numerator_of(v).convert_to<std::uint64_t>());
    }
    return hstar_from_counts(t, dim);
}

}  // namespace mtk
