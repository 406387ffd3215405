#include "mtk/io.hpp"

#include "mtk/errors.hpp"
#include "mtk/multicriteria.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace mtk {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

// Non-empty, non-comment lines split into tokens with positions.
std::vector<std::vector<Token>> tokenize(std::istream& in) {
    std::vector<std::vector<Token>> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size() || line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            toks.push_back({line.substr(start, i - start), lineno, start + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

long long to_ll(const Token& t) {
    try {
        BigInt z = parse_bigint(t.text);
        if (z > BigInt(std::numeric_limits<long long>::max() / 4) || z < BigInt(std::numeric_limits<long long>::min() / 4))
            throw ParseError("integer out of range: '" + t.text + "'", t.line, t.column);
        return z.convert_to<long long>();
    } catch (const ParseError& e) {
        if (e.line()) throw;
        throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
    }
}

Rational to_q(const Token& t) {
    try {
        return parse_rational(t.text);
    } catch (const ParseError&) {
        throw ParseError("expected a rational, got '" + t.text + "'", t.line, t.column);
    }
}

int positive_count(const Token& t, const char* what) {
    long long v = to_ll(t);
    if (v < 1 || v > 1'000'000) throw ParseError(std::string(what) + " must be a positive count", t.line, t.column);
    return static_cast<int>(v);
}

void expect_width(const std::vector<Token>& row, std::size_t width) {
    if (row.size() != width) {
        const Token& t = row.size() > width ? row[width] : row.back();
        throw ParseError("expected " + std::to_string(width) + " entries, found " + std::to_string(row.size()), t.line,
                         t.column);
    }
}

void expect_rows(const std::vector<std::vector<Token>>& lines, std::size_t rows) {
    if (lines.size() - 1 < rows) {
        const Token& t = lines.back().back();
        throw ParseError("expected " + std::to_string(rows) + " data rows, found " + std::to_string(lines.size() - 1),
                         t.line, t.column);
    }
    if (lines.size() - 1 > rows) {
        const Token& t = lines[rows + 1][0];
        throw ParseError("unexpected trailing data", t.line, t.column);
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file '" + path + "'");
    return f;
}

}  // namespace

Matroid parse_matroid(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("empty matroid file");
    const auto& head = lines[0];
    const std::string& kind = head[0].text;
    if (kind == "uniform") {
        expect_width(head, 3);
        int n = positive_count(head[1], "n");
        long long r = to_ll(head[2]);
        if (r < 0 || r > n) throw ParseError("rank must lie in [0, n]", head[2].line, head[2].column);
        expect_rows(lines, 0);
        return Matroid::uniform(n, static_cast<int>(r));
    }
    if (kind == "graph") {
        expect_width(head, 2);
        int n = positive_count(head[1], "vertex count");
        expect_rows(lines, static_cast<std::size_t>(n));
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& row = lines[i + 1];
            expect_width(row, static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                long long v = to_ll(row[j]);
                if (v != 0 && v != 1) throw ParseError("adjacency entries must be 0 or 1", row[j].line, row[j].column);
                if (i == j && v) throw ParseError("self-loops are not supported", row[j].line, row[j].column);
                adj[i].push_back(static_cast<int>(v));
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (adj[i][j] != adj[j][i]) {
                    const Token& t = lines[i + 1][j];
                    throw ParseError("adjacency matrix is not symmetric", t.line, t.column);
                }
        bool any = false;
        for (auto& r : adj)
            for (int v : r) any = any || v;
        if (!any) throw ParseError("graph has no edges", head[0].line, head[0].column);
        return Matroid::from_adjacency(adj);
    }
    if (kind == "vector") {
        expect_width(head, 3);
        int m = positive_count(head[1], "row count");
        int n = positive_count(head[2], "column count");
        expect_rows(lines, static_cast<std::size_t>(m));
        QMatrix rows(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const auto& row = lines[i + 1];
            expect_width(row, static_cast<std::size_t>(n));
            for (const auto& t : row) rows[i].push_back(to_q(t));
        }
        return Matroid::from_rows(rows);
    }
    throw ParseError("unknown matroid kind '" + kind + "' (expected graph, vector or uniform)", head[0].line,
                     head[0].column);
}

Matroid load_matroid(const std::string& path) {
    auto f = open(path);
    return parse_matroid(f);
}

WeightMatrix parse_weights(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("empty weights file");
    const auto& head = lines[0];
    if (head[0].text != "weights") throw ParseError("expected 'weights d n'", head[0].line, head[0].column);
    expect_width(head, 3);
    int d = positive_count(head[1], "d");
    int n = positive_count(head[2], "n");
    expect_rows(lines, static_cast<std::size_t>(d));
    std::vector<IntVec> rows(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto& row = lines[i + 1];
        expect_width(row, static_cast<std::size_t>(n));
        for (const auto& t : row) rows[i].push_back(to_ll(t));
    }
    return WeightMatrix(std::move(rows));
}

WeightMatrix load_weights(const std::string& path) {
    auto f = open(path);
    return parse_weights(f);
}

IntMatrix parse_incidence(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("empty incidence file");
    const auto& head = lines[0];
    if (head[0].text != "vector") throw ParseError("expected 'vector m n'", head[0].line, head[0].column);
    expect_width(head, 3);
    int m = positive_count(head[1], "row count");
    int n = positive_count(head[2], "column count");
    expect_rows(lines, static_cast<std::size_t>(m));
    IntMatrix x(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto& row = lines[i + 1];
        expect_width(row, static_cast<std::size_t>(n));
        for (const auto& t : row) {
            long long v = to_ll(t);
            if (v != 0 && v != 1) throw ParseError("incidence entries must be 0 or 1", t.line, t.column);
            x[i].push_back(v);
        }
    }
    return x;
}

IntMatrix load_incidence(const std::string& path) {
    auto f = open(path);
    return parse_incidence(f);
}

std::vector<IntVec> parse_points(std::istream& in) {
    auto lines = tokenize(in);
    std::vector<IntVec> pts;
    for (const auto& row : lines) {
        IntVec p;
        for (const auto& t : row) p.push_back(to_ll(t));
        if (!pts.empty() && p.size() != pts[0].size())
            throw ParseError("points differ in dimension", row[0].line, row[0].column);
        pts.push_back(std::move(p));
    }
    return pts;
}

Subset parse_subset(const std::string& text, int n) {
    Subset s;
    std::stringstream ss(text);
    std::string item;
    std::size_t col = 1;
    while (std::getline(ss, item, ',')) {
        Token t{item, 1, col};
        col += item.size() + 1;
        long long v = to_ll(t);
        if (v < 1 || v > n) throw ParseError("element " + item + " outside 1.." + std::to_string(n), 1, t.column);
        s.push_back(static_cast<int>(v - 1));
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError("repeated element in '" + text + "'");
    return s;
}

}  // namespace mtk
