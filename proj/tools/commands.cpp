#include "commands.hpp"

#include "mtk/catalog.hpp"
#include "mtk/combinatorics.hpp"
#include "mtk/ehrhart_uniform.hpp"
#include "mtk/errors.hpp"
#include "mtk/genfun.hpp"
#include "mtk/heuristics.hpp"
#include "mtk/io.hpp"
#include "mtk/oracles.hpp"
#include "mtk/serialize.hpp"
#include "mtk/triangulation.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace mtk::cli {

namespace {

struct Options {
    std::string matroid;
    std::string weights;
    std::string output;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    SearchParams params;
    std::string searcher = "tabu";
    std::string start;
    std::string basis;
    std::string costs;
    std::string objective = "linear";
    std::string objective_params;
    std::string targets;
    std::string transcript;
    std::string points;
    std::string simplex;
    std::string quad;
    int workers = 1;
    long long k = 0;
    int n = 0;
    int r = 0;
    bool up_to = false;
    bool emit_terms = false;
    bool verify = false;
    bool list = false;
};

struct Result {
    Json json = Json::object();
    std::optional<std::vector<Point>> points;
    std::optional<std::string> csv;
    bool stochastic = false;
};

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty rational list", 1, 1);
    return out;
}

std::vector<Point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    return parse_points(in);
}

Json params_json(const Options& o) {
    const SearchParams& p = o.params;
    return Json{{"searcher", o.searcher},
                {"tabu_limit", p.tabu_limit},
                {"tries", p.tries},
                {"bfs_depth", p.bfs_depth},
                {"num_searches", p.num_searches},
                {"boundary_retry_limit", p.boundary_retry_limit},
                {"random_retry_limit", p.random_retry_limit}};
}

std::uint64_t require_seed(const Options& o, const std::string& command) {
    if (!o.seed) throw PreconditionError(command + " is stochastic and needs --seed");
    return *o.seed;
}

Matroid need_matroid(const Options& o) {
    if (o.matroid.empty()) throw PreconditionError("--matroid is required");
    return load_matroid(o.matroid);
}

WeightMatrix need_weights(const Options& o, const Matroid& m) {
    if (o.weights.empty()) throw PreconditionError("--weights is required");
    WeightMatrix w = load_weights(o.weights);
    w.check_matches(m);
    return w;
}

Objective make_objective(const Options& o, const WeightMatrix& w) {
    if (o.objective == "minmax") return Objective::minmax();
    std::vector<Rational> p = parse_rationals(o.objective_params);
    if (static_cast<int>(p.size()) != w.criteria())
        throw DimensionError("objective parameters have length " + std::to_string(p.size()) + ", expected " +
                             std::to_string(w.criteria()));
    if (o.objective == "linear") return Objective::linear(p);
    if (o.objective == "sqdist") return Objective::squared_distance(p);
    return Objective::quartic_distance(p);
}

Json witness_list(const SearchReport& r) {
    Json a = Json::array();
    for (std::size_t i = 0; i < r.bases.size(); ++i)
        a.push_back(Json{{"point", point_json(r.points[i])}, {"basis", basis_json(r.bases[i])}});
    return a;
}

Json bases_json(const std::vector<Basis>& bs) {
    Json a = Json::array();
    for (const auto& b : bs) a.push_back(basis_json(b));
    return a;
}

Result cmd_bases(const Options& o) {
    Matroid m = need_matroid(o);
    auto bs = enumerate_bases(m);
    Result res;
    res.json = Json{{"n", m.size()}, {"rank", m.rank()}, {"count", bs.size()}, {"bases", bases_json(bs)}};
    if (!o.weights.empty()) {
        WeightMatrix w = need_weights(o, m);
        std::vector<Point> pts;
        for (const auto& b : bs) pts.push_back(w.project(b));
        res.points = pts;
    }
    return res;
}

Result cmd_adjacency(const Options& o) {
    Matroid m = need_matroid(o);
    Basis b = parse_subset(o.basis, m.size());
    Result res;
    res.json = Json{{"basis", basis_json(b)}, {"adjacent", bases_json(adjacent_bases(m, b))}};
    return res;
}

Result cmd_greedy(const Options& o) {
    Matroid m = need_matroid(o);
    auto c = parse_rationals(o.costs);
    if (static_cast<int>(c.size()) != m.size()) throw DimensionError("cost vector length differs from n");
    GreedyResult g = greedy_max_basis(m, c);
    Result res;
    res.json = Json{{"basis", basis_json(g.basis)}, {"weight", to_json(g.weight)}};
    return res;
}

Basis start_basis(const Options& o, const Matroid& m, Result& res, const std::string& command) {
    if (!o.start.empty()) return parse_subset(o.start, m.size());
    res.stochastic = true;
    return random_basis(m, mix_seed(require_seed(o, command), 1));
}

Result cmd_search(const Options& o, bool tabu) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    Objective f = make_objective(o, w);
    Result res;
    Basis start = start_basis(o, m, res, tabu ? "ts" : "ls");
    std::ofstream trace;
    Transcript log;
    if (!o.transcript.empty()) {
        trace.open(o.transcript);
        if (!trace) throw PreconditionError("cannot open " + o.transcript);
        log = [&trace](const PivotRecord& r) {
            trace << Json{{"pivot", r.pivot},
                          {"basis", basis_json(r.basis)},
                          {"point", point_json(r.point)},
                          {"objective", to_json(r.objective)}}
                         .dump()
                  << '\n';
        };
    }
    SearchReport r = tabu ? tabu_search(m, w, f, start, o.params.tabu_limit, log) : local_search(m, w, f, start, log);
    res.json = Json{{"start", basis_json(start)},
                    {"objective", f.describe()},
                    {"basis", basis_json(r.bases[0])},
                    {"point", point_json(r.points[0])},
                    {"value", to_json(f(r.points[0]))},
                    {"pivots", r.pivots},
                    {"termination", to_string(r.reason)}};
    res.points = r.points;
    return res;
}

Result cmd_pt(const Options& o) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    require_seed(o, "pt");
    if (o.targets.empty()) throw PreconditionError("--targets is required");
    auto targets = load_points(o.targets);
    if (o.workers < 1) throw PreconditionError("--workers must be >= 1");
    SearchReport r = pivot_test(m, w, targets, o.params, o.workers > 1 ? Exec::parallel : Exec::serial, o.workers);
    Result res;
    res.stochastic = true;
    res.json = Json{{"targets", targets.size()}, {"found", witness_list(r)}, {"pivots", r.pivots}};
    res.points = r.points;
    return res;
}

Result cmd_pb(const Options& o) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    Result res;
    Basis start;
    if (!o.start.empty()) {
        start = parse_subset(o.start, m.size());
    } else {
        res.stochastic = true;
        std::mt19937_64 rng(mix_seed(require_seed(o, "pb"), 2));
        start = random_boundary_basis(m, w, rng);
    }
    SearchReport r = projected_boundary(m, w, start);
    res.json = Json{{"start", basis_json(start)}, {"boundary", witness_list(r)}};
    res.points = r.points;
    return res;
}

Result cmd_btrpt(const Options& o) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    require_seed(o, "btrpt");
    SearchReport r = btrpt(m, w, o.params);
    Result res;
    res.stochastic = true;
    res.json = Json{{"pareto", witness_list(r)}, {"pivots", r.pivots}};
    res.points = r.points;
    return res;
}

Result cmd_dfbfs(const Options& o) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    Result res;
    SearchReport r;
    if (!o.start.empty()) {
        Basis b = parse_subset(o.start, m.size());
        r = dfbfs(m, w, b, o.params.bfs_depth);
        res.json["start"] = basis_json(b);
        res.json["depth"] = o.params.bfs_depth;
    } else {
        require_seed(o, "dfbfs");
        res.stochastic = true;
        r = dfbfs_driver(m, w, o.params);
    }
    res.json["found"] = witness_list(r);
    res.points = r.points;
    return res;
}

Result cmd_trees(const Options& o) {
    Matroid m = need_matroid(o);
    if (m.backend() != Backend::graphical) throw PreconditionError("enumerate-trees needs a graph file");
    std::vector<Basis> trees;
    std::uint64_t count = matsui_spanning_trees(m, [&](const Basis& b) {
        if (o.list) trees.push_back(b);
    });
    BigInt check = laplacian_tree_count(m);
    if (check != count)
        throw InconsistencyError("reverse search found " + std::to_string(count) + " trees, Laplacian gives " +
                                 check.str());
    Result res;
    res.json = Json{{"count", count}, {"laplacian", check.str()}};
    if (o.list) {
        std::sort(trees.begin(), trees.end());
        res.json["trees"] = bases_json(trees);
    }
    return res;
}

Result cmd_projected(const Options& o) {
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    auto set = exact_projected_set(m, w);
    Result res;
    Json a = Json::array();
    std::vector<Point> pts;
    for (const auto& [p, c] : set) {
        a.push_back(Json{{"point", point_json(p)}, {"multiplicity", c}});
        pts.push_back(p);
    }
    res.json = Json{{"count", set.size()}, {"points", a}};
    res.points = pts;
    return res;
}

Result cmd_pareto(const Options& o) {
    Result res;
    if (!o.points.empty()) {
        auto front = pareto_filter(load_points(o.points));
        Json a = Json::array();
        for (const auto& p : front) a.push_back(point_json(p));
        res.json = Json{{"pareto", a}};
        res.points = front;
        return res;
    }
    Matroid m = need_matroid(o);
    WeightMatrix w = need_weights(o, m);
    std::map<Point, Basis> witness;
    for (const auto& b : enumerate_bases(m)) witness.emplace(w.project(b), b);
    std::vector<Point> all;
    for (const auto& [p, b] : witness) all.push_back(p);
    SearchReport r;
    for (const auto& p : pareto_filter(all)) {
        r.points.push_back(p);
        r.bases.push_back(witness.at(p));
    }
    res.json = Json{{"pareto", witness_list(r)}};
    res.points = r.points;
    return res;
}

Result cmd_ehrhart(const Options& o) {
    Matroid m = need_matroid(o);
    const int dim = polytope_dimension(m);
    auto terms = brion_genfun(m);
    auto lambda = generic_lambda(terms);
    Polynomial p = ehrhart_from_terms(terms, lambda, dim);
    if (o.verify) {
        Polynomial q = interpolate_ehrhart(dilation_counts(m, dim + 1), dim);
        if (!(p == q)) throw InconsistencyError("generating-function route disagrees with lattice-count interpolation");
    }
    Result res;
    res.json = Json{{"n", m.size()},
                    {"rank", m.rank()},
                    {"dimension", dim},
                    {"coefficients", to_json(p)},
                    {"hstar", to_json(hstar_from_polynomial(p, dim))}};
    if (o.verify) res.json["verified"] = true;
    if (o.emit_terms) {
        Json t = Json::array();
        for (const auto& term : terms) t.push_back(to_json(term));
        res.json["lambda"] = to_json(lambda);
        res.json["terms"] = t;
    }
    return res;
}

Result cmd_ehrhart_uniform(const Options& o) {
    Result res;
    res.json = Json{{"n", o.n},
                    {"rank", o.r},
                    {"coefficients", to_json(ehrhart_uniform(o.n, o.r))},
                    {"hstar", to_json(hstar_uniform(o.n, o.r))}};
    return res;
}

Result cmd_hstar_uniform(const Options& o) {
    Result res;
    res.json = Json{{"n", o.n}, {"rank", o.r}, {"hstar", to_json(hstar_uniform(o.n, o.r))}};
    return res;
}

Result cmd_lattice_count(const Options& o) {
    Matroid m = need_matroid(o);
    if (o.k < 0) throw PreconditionError("--k must be >= 0");
    Result res;
    LatticeCountTable t;
    if (o.up_to) {
        t = dilation_counts(m, o.k);
        Json a = Json::array();
        for (auto c : t.counts) a.push_back(c);
        res.json = Json{{"k", o.k}, {"counts", a}};
    } else {
        std::uint64_t c = dilation_lattice_count(m, o.k);
        res.json = Json{{"k", o.k}, {"count", c}};
        std::ostringstream csv;
        csv << "k,count\n" << o.k << ',' << c << '\n';
        res.csv = csv.str();
        return res;
    }
    res.csv = counts_csv(t);
    return res;
}

Result cmd_check_unimodular(const Options& o) {
    Result res;
    if (!o.simplex.empty()) {
        IntMatrix x = load_incidence(o.simplex);
        BigInt det = determinant(x);
        res.json = Json{{"abs_det", BigInt(abs(det)).str()}};
        if (!o.matroid.empty()) res.json["unimodular"] = is_unimodular_simplex(x, need_matroid(o));
        ExchangeGraphs g = exchange_graphs(x);
        res.json["row_components"] = g.row_components.size();
        res.json["column_components"] = g.column_components.size();
        if (det != 0) {
            ReducedDeterminant rd = reduced_determinant(x);
            Json rows = Json::array();
            for (const auto& row : rd.matrix) rows.push_back(to_json(row));
            res.json["reduced_matrix"] = rows;
            res.json["reduced_abs_det"] = rd.abs_det.str();
        }
        return res;
    }
    Matroid m = need_matroid(o);
    if (!is_connected_matroid(m)) throw PreconditionError("check-unimodular needs a connected matroid");
    auto bases = enumerate_bases(m);
    std::vector<IntVec> pts;
    for (const auto& b : bases) pts.push_back(incidence(b, m.size()));
    Triangulation t = placing_triangulation(pts);
    Json bad = Json::array();
    for (const auto& c : t.cells) {
        IntMatrix x;
        for (int i : c) x.push_back(pts[static_cast<std::size_t>(i)]);
        if (!is_unimodular_simplex(x, m)) {
            Json cell = Json::array();
            for (int i : c) cell.push_back(basis_json(bases[static_cast<std::size_t>(i)]));
            bad.push_back(cell);
        }
    }
    std::size_t cone_cells = 0;
    for (const auto& b : bases) cone_cells += cone_triangulation(tangent_cone(m, b)).cells.size();
    res.json = Json{{"placing", Json{{"cells", t.cells.size()}, {"unimodular", bad.empty()}, {"bad_cells", bad}}},
                    {"tangent_cones", Json{{"cones", bases.size()}, {"cells", cone_cells}, {"unimodular", true}}}};
    return res;
}

Result cmd_classify(const Options& o) {
    Matroid m = need_matroid(o);
    if (o.quad.empty()) throw PreconditionError("--quad is required");
    IntMatrix q = load_incidence(o.quad);
    if (q.size() != 4) throw DimensionError("--quad needs exactly four rows");
    TwoFace f = classify_square_2face(m, q[0], q[1], q[2], q[3]);
    Result res;
    res.json = Json{{"classification", f == TwoFace::square ? "square" : "not_a_face"}};
    return res;
}

std::string header_line(const Options& o) {
    std::ostringstream h;
    h << "# seed=" << *o.seed;
    const Json params = params_json(o);
    for (const auto& [k, v] : params.items()) h << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    h << '\n';
    return h.str();
}

std::string render(const std::string& command, Result& res, const Options& o) {
    if (o.format == "json") {
        Json out = Json{{"command", command}};
        if (res.stochastic) {
            out["seed"] = *o.seed;
            out["params"] = params_json(o);
        }
        for (auto& [k, v] : res.json.items()) out[k] = v;
        return dump(out);
    }
    std::string head = res.stochastic ? header_line(o) : "";
    if (o.format == "points") {
        if (!res.points) throw PreconditionError(command + " has no points output");
        return head + points_text(*res.points);
    }
    if (!res.csv) throw PreconditionError(command + " has no csv output");
    return head + *res.csv;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matroid polytope toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_matroid = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("-m,--matroid", o.matroid, "matroid file (graph, vector or uniform)");
        if (required) opt->required();
    };
    auto add_weights = [&](CLI::App* s) { s->add_option("-w,--weights", o.weights, "criteria matrix file")->required(); };
    auto add_search = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "random seed");
        s->add_option("--tabu-limit", o.params.tabu_limit, "pivots without improvement before TS stops");
        s->add_option("--tries", o.params.tries, "restarts per target");
        s->add_option("--depth", o.params.bfs_depth, "DFBFS depth");
        s->add_option("--num-searches", o.params.num_searches, "DFBFS seeds per phase");
        s->add_option("--boundary-retries", o.params.boundary_retry_limit, "failed boundary seeds allowed");
        s->add_option("--random-retries", o.params.random_retry_limit, "failed random seeds allowed");
        s->add_option("--searcher", o.searcher, "ls or ts")->check(CLI::IsMember({"ls", "ts", "tabu", "local"}));
    };

    std::map<std::string, std::function<Result()>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, std::function<Result()> h) {
        handlers[name] = std::move(h);
        return app.add_subcommand(name, help);
    };

    auto* s = sub("bases", "list all bases", [&] { return cmd_bases(o); });
    add_matroid(s, true);
    s->add_option("-w,--weights", o.weights, "project bases for --format points");

    s = sub("adjacency", "bases adjacent to a basis", [&] { return cmd_adjacency(o); });
    add_matroid(s, true);
    s->add_option("--basis", o.basis, "1-based basis, e.g. 1,2,4")->required();

    s = sub("greedy", "maximum-weight basis", [&] { return cmd_greedy(o); });
    add_matroid(s, true);
    s->add_option("--costs", o.costs, "comma-separated rationals, one per element")->required();

    for (const char* name : {"ls", "ts"}) {
        const bool tabu = std::string(name) == "ts";
        s = sub(name, tabu ? "tabu search" : "local search", [&, tabu] { return cmd_search(o, tabu); });
        add_matroid(s, true);
        add_weights(s);
        s->add_option("--objective", o.objective, "linear, sqdist, quartic or minmax")
            ->check(CLI::IsMember({"linear", "sqdist", "quartic", "minmax"}));
        s->add_option("--params", o.objective_params, "objective vector or target, comma separated");
        s->add_option("--start", o.start, "1-based start basis; random with --seed when omitted");
        s->add_option("--seed", o.seed, "random seed");
        s->add_option("--transcript", o.transcript, "write one JSON record per pivot");
        if (tabu) s->add_option("--tabu-limit", o.params.tabu_limit, "pivots without improvement");
    }

    s = sub("pt", "pivot test over target points", [&] { return cmd_pt(o); });
    add_matroid(s, true);
    add_weights(s);
    add_search(s);
    s->add_option("--targets", o.targets, "points file")->required();
    s->add_option("--workers", o.workers, "parallel workers");

    s = sub("pb", "projected boundary search", [&] { return cmd_pb(o); });
    add_matroid(s, true);
    add_weights(s);
    s->add_option("--start", o.start, "1-based boundary basis");
    s->add_option("--seed", o.seed, "random seed");

    s = sub("btrpt", "boundary, triangulate, pivot test", [&] { return cmd_btrpt(o); });
    add_matroid(s, true);
    add_weights(s);
    add_search(s);

    s = sub("dfbfs", "depth-first breadth-first search", [&] { return cmd_dfbfs(o); });
    add_matroid(s, true);
    add_weights(s);
    add_search(s);
    s->add_option("--start", o.start, "single search from this basis");

    s = sub("enumerate-trees", "spanning trees by reverse search", [&] { return cmd_trees(o); });
    add_matroid(s, true);
    s->add_flag("--list", o.list, "include the trees");

    s = sub("projected-set", "exact projected bases", [&] { return cmd_projected(o); });
    add_matroid(s, true);
    add_weights(s);

    s = sub("pareto", "exact Pareto optima", [&] { return cmd_pareto(o); });
    add_matroid(s, false);
    s->add_option("-w,--weights", o.weights, "criteria matrix file");
    s->add_option("--points", o.points, "filter a points file instead");

    s = sub("ehrhart", "Ehrhart polynomial of P_M", [&] { return cmd_ehrhart(o); });
    add_matroid(s, true);
    s->add_flag("--emit-terms", o.emit_terms, "include generating-function terms");
    s->add_flag("--verify", o.verify, "cross-check against dilation counts");

    for (const char* name : {"ehrhart-uniform", "hstar-uniform"}) {
        const bool full = std::string(name) == "ehrhart-uniform";
        s = sub(name, full ? "closed-form Ehrhart polynomial of U^{r,n}" : "h*-vector of U^{r,n}",
                [&, full] { return full ? cmd_ehrhart_uniform(o) : cmd_hstar_uniform(o); });
        s->add_option("--n", o.n, "ground set size")->required();
        s->add_option("--r", o.r, "rank")->required();
    }

    s = sub("lattice-count", "lattice points of k P_M", [&] { return cmd_lattice_count(o); });
    add_matroid(s, true);
    s->add_option("--k", o.k, "dilation")->required();
    s->add_flag("--up-to", o.up_to, "all dilations 0..k");

    s = sub("check-unimodular", "triangulation determinants", [&] { return cmd_check_unimodular(o); });
    add_matroid(s, false);
    s->add_option("--simplex", o.simplex, "0/1 vertex rows to check instead");

    s = sub("classify-2face", "square 2-face test", [&] { return cmd_classify(o); });
    add_matroid(s, true);
    s->add_option("--quad", o.quad, "four 0/1 rows w1..w4")->required();

    app.add_option("-o,--output", o.output, "output file")->capture_default_str();
    app.add_option("-f,--format", o.format, "json, csv or points")->check(CLI::IsMember({"json", "csv", "points"}));
    app.fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }
    if (o.searcher == "ls" || o.searcher == "local") o.params.searcher = Searcher::local;
    if (o.seed) o.params.seed = *o.seed;

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        o.params.validate();
        Result res = handlers.at(command)();
        const std::string text = render(command, res, o);
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream file(o.output, std::ios::binary);
            if (!file) throw PreconditionError("cannot open " + o.output);
            file << text;
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::inconsistency);
    }
}

}  // namespace mtk::cli
