#include "mtk/serialize.hpp"

#include "mtk/errors.hpp"

#include <sstream>

namespace mtk {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what, 0, 0); }

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    return j;
}

std::vector<IntVec> vecs_from_json(const Json& j) {
    std::vector<IntVec> out;
    for (const auto& e : require_array(j, "vector list")) out.push_back(point_from_json(e));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json basis_json(const Basis& b) {
    Json a = Json::array();
    for (int i : b) a.push_back(i + 1);
    return a;
}

Json point_json(const Point& p) {
    Json a = Json::array();
    for (long long x : p) a.push_back(x);
    return a;
}

Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& s : p.to_strings()) a.push_back(s);
    return a;
}

Json to_json(const GenFunTerm& t) {
    Json b = Json::array();
    for (const auto& g : t.b) b.push_back(point_json(g));
    return Json{{"sign", t.sign}, {"a", point_json(t.a)}, {"v", point_json(t.v)}, {"b", b}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) bad("rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Basis basis_from_json(const Json& j, int n) {
    Basis b;
    for (const auto& e : require_array(j, "basis")) {
        if (!e.is_number_integer()) bad("basis entries must be integers");
        int i = e.get<int>();
        if (i < 1 || i > n) bad("basis entry out of range");
        b.push_back(i - 1);
    }
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
        bad("basis entries must be strictly increasing");
    return b;
}

Point point_from_json(const Json& j) {
    Point p;
    for (const auto& e : require_array(j, "point")) {
        if (!e.is_number_integer()) bad("point entries must be integers");
        p.push_back(e.get<long long>());
    }
    return p;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p;
    for (const auto& e : require_array(j, "polynomial")) p.coeffs.push_back(rational_from_json(e));
    return p;
}

GenFunTerm term_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("sign") || !j.contains("a") || !j.contains("v") || !j.contains("b"))
        bad("term needs sign, a, v, b");
    GenFunTerm t;
    t.sign = j.at("sign").get<int>();
    if (t.sign != 1 && t.sign != -1) bad("term sign must be +-1");
    t.a = point_from_json(j.at("a"));
    t.v = point_from_json(j.at("v"));
    t.b = vecs_from_json(j.at("b"));
    return t;
}

std::vector<BigInt> bigints_from_json(const Json& j) {
    std::vector<BigInt> v;
    for (const auto& e : require_array(j, "integer list")) {
        if (!e.is_string()) bad("big integers travel as strings");
        v.push_back(parse_bigint(e.get<std::string>()));
    }
    return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string counts_csv(const LatticeCountTable& t) {
    std::ostringstream out;
    out << "k,count\n";
    for (std::size_t k = 0; k < t.counts.size(); ++k) out << k << ',' << t.counts[k] << '\n';
    return out.str();
}

std::string points_text(const std::vector<Point>& pts) {
    std::ostringstream out;
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace mtk
