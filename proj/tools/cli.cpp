#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "upcolor/exact.hpp"
#include "upcolor/families.hpp"
#include "upcolor/io.hpp"
#include "upcolor/random.hpp"
#include "upcolor/reductions.hpp"
#include "upcolor/tree.hpp"

namespace upcolor::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Infeasible: return kExitInfeasible;
        case ErrorCode::TooLarge: return kExitTooLarge;
        case ErrorCode::InternalVerificationFailed: return kExitVerification;
        default: return kExitParse;
    }
}

namespace {

struct Globals {
    bool json = false;
    bool timings = false;
    std::uint64_t seed = 0;
    std::size_t limit = SearchLimits{}.search_limit;
    std::size_t coloring_limit = SearchLimits{}.coloring_limit;
    std::string out_path;

    SearchLimits limits() const { return {limit, coloring_limit}; }
};

/// Report under construction plus the plain-text artifact some commands
/// print instead of a key listing (graph files, DOT).
struct Output {
    json report = json::object();
    std::string artifact;
    json timings = json::object();
    int status = kExitOk;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json members(const VertexSet& set) { return set.members(); }

json domination_json(const DominationResult& r) {
    json j;
    j["feasible"] = r.feasible;
    if (r.feasible) {
        j["size"] = r.size;
        j["weight"] = r.weight;
        j["members"] = members(r.witness);
    }
    return j;
}

std::string input_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

GraphDocument load_graph(const std::string& path) { return parse_graph_text(input_text(path), path); }

ColoredGraph colored(const GraphDocument& doc) {
    if (!doc.coloring) throw Error(ErrorCode::BadParameters, "the input graph carries no colouring");
    return orient(doc.graph, *doc.coloring);
}

/// Infeasible fixed colourings are reported, then turned into exit status 3.
void require_feasible(Output& o, const DominationResult& r) {
    if (!r.feasible) {
        o.report["error"] = {{"code", "Infeasible"}, {"message", "a colour-0 vertex has no higher-coloured neighbour"}};
        o.report["exit_code"] = kExitInfeasible;
        o.status = kExitInfeasible;
    }
}

void cmd_param(const Globals& g, const std::string& path, Output& o) {
    const auto doc = load_graph(path);
    const auto limits = g.limits();
    o.report["input"] = path;
    o.report["order"] = doc.graph.order();
    o.report["edges"] = doc.graph.edge_count();
    o.report["connected"] = is_connected(doc.graph);
    o.report["tree"] = is_tree(doc.graph);
    Stopwatch sw;
    const auto inv = classic_invariants(doc.graph, limits);
    o.timings["classic"] = sw.ms();
    o.report["gamma"] = inv.gamma;
    o.report["i"] = inv.i;
    o.report["alpha"] = inv.alpha;
    o.report["chi"] = inv.chi;
    o.report["theta"] = inv.theta;
    o.report["gamma_r"] = inv.gamma_r;
    if (!doc.coloring) return;
    const auto cg = orient(doc.graph, *doc.coloring);
    o.report["max_color"] = doc.coloring->max_color();
    o.report["local_maxima"] = members(local_maxima(cg));
    o.report["feasible"] = up_color_feasible(cg);
    Stopwatch sw2;
    const auto gamma = gamma_uc_exact(cg, limits);
    const auto omega = omega_uc_exact(cg, limits);
    o.timings["fixed_coloring"] = sw2.ms();
    o.report["gamma_uc"] = domination_json(gamma);
    o.report["omega_uc"] = domination_json(omega);
    require_feasible(o, gamma);
}

void cmd_oracle(const Globals& g, const std::string& which, const std::string& path, bool exhaustive, Output& o) {
    const auto doc = load_graph(path);
    const auto limits = g.limits();
    o.report["input"] = path;
    o.report["parameter"] = which;
    Stopwatch sw;
    if (which == "gamma-uc" || which == "omega-uc") {
        const auto cg = colored(doc);
        const auto r = which == "gamma-uc" ? gamma_uc_exact(cg, limits) : omega_uc_exact(cg, limits);
        o.report["result"] = domination_json(r);
        if (r.feasible) o.report["value"] = which == "gamma-uc" ? static_cast<Weight>(r.size) : r.weight;
        require_feasible(o, r);
    } else if (which == "Omega-uc" || which == "Gamma-uc") {
        const auto r = which == "Omega-uc"
                           ? Omega_uc_exact(doc.graph, limits)
                           : Gamma_uc_exact(doc.graph, exhaustive ? GammaMode::Exhaustive : GammaMode::Constructive,
                                            limits);
        o.report["value"] = r.value;
        o.report["coloring"] = r.best_coloring.values();
        o.report["result"] = domination_json(r.witness);
        if (which == "Gamma-uc") o.report["mode"] = exhaustive ? "exhaustive" : "constructive";
    } else {
        const auto r = chi_uc_exact(doc.graph, limits);
        o.report["value"] = r.colors;
        o.report["coloring"] = r.witness.values();
        o.report["chi"] = chromatic_number(doc.graph, limits).chi;
    }
    o.timings["search"] = sw.ms();
}

void cmd_tree(const std::string& which, const std::string& path, const std::string& reading, bool trace,
              Output& o) {
    const auto doc = load_graph(path);
    const auto cg = colored(doc);
    o.report["input"] = path;
    o.report["parameter"] = which;
    Stopwatch sw;
    if (which == "gamma-uc") {
        TreeGammaStats stats;
        const auto r = tree_gamma_uc(cg, &stats);
        o.report["result"] = domination_json(r);
        o.report["value"] = r.size;
        o.report["stats"] = {{"rule_a", stats.rule_a},         {"rule_b", stats.rule_b},
                             {"rule_c", stats.rule_c},         {"pruned_edges", stats.pruned_edges},
                             {"queue_pops", stats.queue_pops}, {"steps", stats.steps()}};
    } else {
        TreeOmegaOptions options;
        options.reading = reading == "literal" ? OpReading::Literal : OpReading::Child;
        const auto rep = tree_omega_uc_report(cg, options);
        o.report["result"] = domination_json(rep.result);
        o.report["value"] = rep.result.weight;
        o.report["reading"] = reading;
        o.report["pipeline_weight"] = rep.pipeline.weight;
        o.report["pipeline_dominating"] = rep.pipeline.dominating;
        o.report["optimum"] = rep.optimum;
        o.report["errata"] = json::array();
        if (rep.corrected) o.report["errata"].push_back("record pipeline was not optimal; exact tree DP used");
        if (trace) {
            json records = json::array();
            for (Vertex v = 0; v < rep.pipeline.records.size(); ++v) {
                const auto& rec = rep.pipeline.records[v];
                records.push_back({{"vertex", v},
                                   {"w0", rec.w0 >= kNoSet ? json(nullptr) : json(rec.w0)},
                                   {"w1", rec.w1 >= kNoSet ? json(nullptr) : json(rec.w1)},
                                   {"op", rec.op}});
            }
            o.report["trace"] = {{"records", records},
                                 {"precedence", rep.pipeline.precedence.order},
                                 {"assembled", members(rep.pipeline.assembled)},
                                 {"flipped", rep.pipeline.flipped}};
        }
    }
    o.timings["tree"] = sw.ms();
}

/// Graph text with the report summary as leading comment lines.
std::string annotated_graph(const json& report, const GraphDocument& doc) {
    std::ostringstream ss;
    for (const auto& [key, value] : report.items()) {
        if (key == "graph") continue;
        ss << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    ss << serialize_graph(doc);
    return ss.str();
}

void cmd_reduce(const Globals& g, const std::string& which, const std::string& path, bool dummy, long long target,
                bool verify, Output& o) {
    const auto text = input_text(path);
    o.report["input"] = path;
    o.report["reduction"] = which;
    ReductionOutput out;
    Stopwatch sw;
    if (which == "min-cover") {
        const auto inst = parse_min_cover(text);
        out = reduce_min_cover(inst, dummy);
        o.report["t"] = inst.t;
        if (verify) {
            const auto best = solve_min_cover(inst);
            if (!best) throw Error(ErrorCode::Infeasible, "the subsets do not cover the universe");
            const auto r = gamma_uc_exact(orient(out.graph, *out.coloring), g.limits());
            o.report["t_star"] = best->size;
            o.report["gamma_uc"] = r.size;
            o.report["equivalence"] = r.size == best->size + 1;
        }
    } else if (which == "3sat") {
        const auto inst = parse_dimacs_cnf(text);
        out = reduce_3sat_chromatic(inst);
        if (verify) {
            const bool sat = solve_3sat(inst).has_value();
            const bool colorable = find_k_coloring(out.graph, 3, g.limits()).has_value();
            o.report["satisfiable"] = sat;
            o.report["three_colorable"] = colorable;
            o.report["equivalence"] = sat == colorable;
        }
    } else {
        const auto cnf = parse_dimacs_cnf(text);
        BalancedE2SatInstance inst;
        inst.variables = cnf.variables;
        for (const auto& clause : cnf.clauses) {
            if (clause.size() != 2) throw Error(ErrorCode::BadParameters, "exact 2-SAT clauses need two literals");
            inst.clauses.push_back({clause[0], clause[1]});
        }
        const auto best = solve_max_e2sat(inst);
        inst.target = target >= 0 ? static_cast<std::size_t>(target) : best.satisfied;
        out = reduce_balanced_e2sat(inst);
        const auto audit = audit_reduction_structure(out);
        o.report["target"] = inst.target;
        o.report["audit"] = {{"ok", audit.ok},
                             {"violations", audit.violations},
                             {"vertices", audit.vertices},
                             {"expected_vertices", audit.expected_vertices},
                             {"phi_total", audit.phi_total}};
        if (verify) {
            const auto w = build_weight_witness(out, best.assignment);
            const std::size_t r = inst.variables, s = inst.clauses.size();
            const auto bound = static_cast<Weight>(6 * r * s + 3 * s + 2 * (s - best.satisfied));
            const bool valid = is_up_color_dominating(orient(out.graph, w.coloring), w.dominating).dominating;
            o.report["q_star"] = best.satisfied;
            o.report["witness_weight"] = w.weight;
            o.report["weight_bound"] = bound;
            o.report["witness_valid"] = valid;
            if (!valid || w.weight > bound) {
                throw Error(ErrorCode::InternalVerificationFailed, "forward witness violates the weight bound");
            }
        }
    }
    o.timings["reduce"] = sw.ms();
    o.report["vertices"] = out.graph.order();
    o.report["edges"] = out.graph.edge_count();
    o.report["k"] = out.k;
    GraphDocument doc{out.graph, out.coloring, {}, {}};
    o.report["graph"] = serialize_graph(doc);
    o.artifact = annotated_graph(o.report, doc);
}

struct GenOptions {
    std::size_t n = 0, r = 0, s = 0, l = 0, k = 4;
    double p = 0.4;
    std::string base;
    bool shared = false;
};

void cmd_gen(const Globals& g, const std::string& family, const GenOptions& opt, Output& o) {
    GraphDocument doc;
    o.report["family"] = family;
    if (family == "random-tree") {
        doc = random_tree(opt.n, g.seed, opt.k);
        o.report["seed"] = g.seed;
    } else if (family == "random-graph") {
        Rng rng(g.seed);
        doc.graph = random_connected_graph(opt.n, opt.p, rng);
        doc.coloring = random_proper_coloring(doc.graph, rng, opt.k);
        o.report["seed"] = g.seed;
    } else {
        const auto kind = family_from_string(family);
        if (!kind) throw Error(ErrorCode::UnsupportedFamily, "unknown family " + family);
        FamilySpec spec;
        spec.kind = *kind;
        spec.n = opt.n;
        spec.r = opt.r;
        spec.s = opt.s;
        spec.l = opt.l;
        spec.shared_attachment = opt.shared;
        if (!opt.base.empty()) spec.base = load_graph(opt.base).graph;
        auto fg = generate(spec);
        doc.graph = std::move(fg.graph);
        doc.coloring = std::move(fg.coloring);
    }
    o.report["vertices"] = doc.graph.order();
    o.report["edges"] = doc.graph.edge_count();
    o.report["graph"] = serialize_graph(doc);
    o.artifact = annotated_graph(o.report, doc);
}

json audit_json(const BoundReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"left", c.left.str()},
                          {"right", c.right.str()},
                          {"relation", c.relation == Relation::Iff ? "iff" : "<="},
                          {"holds", c.holds},
                          {"detail", c.detail}});
    }
    return {{"checks", checks}, {"violations", rep.violations()}, {"omega_audited", rep.omega_audited}};
}

struct BatchOptions {
    std::size_t count = 0;
    std::size_t n_min = 5, n_max = 8;
    double p = 0.4;
    std::size_t jobs = 1;
};

void cmd_audit(const Globals& g, const std::vector<std::string>& paths, const BatchOptions& batch, Output& o) {
    AuditOptions options;
    options.limits = g.limits();
    json instances = json::array();
    std::size_t violations = 0;
    Stopwatch sw;
    for (const auto& path : paths) {
        const auto doc = load_graph(path);
        const auto rep = audit_bounds(colored(doc), options);
        auto j = audit_json(rep);
        j["input"] = path;
        violations += rep.violations();
        instances.push_back(std::move(j));
    }
    if (batch.count > 0) {
        if (batch.n_min < 1 || batch.n_min > batch.n_max) throw Error(ErrorCode::BadParameters, "bad --n-min/--n-max");
        // Instances are drawn up front from one stream so results do not
        // depend on --jobs; evaluation then runs in parallel, reported by index.
        Rng rng(g.seed);
        std::vector<GraphDocument> docs(batch.count);
        for (auto& doc : docs) {
            const std::size_t n = batch.n_min + rng.below(batch.n_max - batch.n_min + 1);
            doc.graph = random_connected_graph(n, batch.p, rng);
            doc.coloring = random_proper_coloring(doc.graph, rng);
        }
        std::vector<BoundReport> reports(docs.size());
        const std::size_t jobs = std::max<std::size_t>(1, batch.jobs);
        for (std::size_t start = 0; start < docs.size(); start += jobs) {
            std::vector<std::future<BoundReport>> running;
            for (std::size_t i = start; i < std::min(docs.size(), start + jobs); ++i) {
                running.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                             [&, i] { return audit_bounds(colored(docs[i]), options); }));
            }
            for (std::size_t i = 0; i < running.size(); ++i) reports[start + i] = running[i].get();
        }
        for (std::size_t i = 0; i < docs.size(); ++i) {
            auto j = audit_json(reports[i]);
            j["index"] = i;
            j["graph"] = serialize_graph(docs[i]);
            violations += reports[i].violations();
            instances.push_back(std::move(j));
        }
        o.report["seed"] = g.seed;
    }
    o.timings["audit"] = sw.ms();
    o.report["instances"] = instances;
    o.report["violations"] = violations;
}

void cmd_dot(const Globals& g, const std::string& path, const std::string& highlight, const std::string& set,
             Output& o) {
    const auto doc = load_graph(path);
    VertexSet marked(doc.graph.order());
    if (!set.empty()) {
        std::stringstream ss(set);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::size_t v = 0;
            try {
                v = std::stoul(item);
            } catch (const std::exception&) {
                throw Error(ErrorCode::SyntaxError, "bad vertex '" + item + "' in --set");
            }
            if (v >= doc.graph.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + item + " out of range");
            marked.insert(static_cast<Vertex>(v));
        }
    } else if (highlight != "none") {
        const auto cg = colored(doc);
        if (highlight == "local-maxima") {
            marked = local_maxima(cg);
        } else {
            const auto r = highlight == "gamma-uc" ? gamma_uc_exact(cg, g.limits()) : omega_uc_exact(cg, g.limits());
            require_feasible(o, r);
            if (r.feasible) marked = r.witness;
        }
    }
    o.report["input"] = path;
    o.report["highlight"] = members(marked);
    o.report["dot"] = emit_dot(doc, marked);
    o.artifact = o.report["dot"].get<std::string>();
}

std::string render_text(const json& report) {
    std::ostringstream ss;
    for (const auto& [key, value] : report.items()) {
        ss << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return ss.str();
}

void emit(const Globals& g, const Output& o, std::ostream& out) {
    std::string text;
    if (g.json) {
        json report = o.report;
        if (g.timings) report["timings_ms"] = o.timings;
        text = report.dump(2) + "\n";
    } else if (!o.artifact.empty() && o.status == kExitOk) {
        text = o.artifact;
    } else {
        text = render_text(o.report);
        if (g.timings) text += "timings_ms: " + o.timings.dump() + "\n";
    }
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::BadParameters, "cannot write " + g.out_path);
    file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Up-color domination toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Emit a JSON report");
    app.add_flag("--timings", g.timings, "Include wall-clock timings in the report");
    app.add_option("--seed", g.seed, "Seed for random generators");
    app.add_option("--limit", g.limit, "Largest vertex count for fixed-colouring searches")->check(CLI::Range(1, 64));
    app.add_option("--coloring-limit", g.coloring_limit, "Largest vertex count for searches over colourings")
        ->check(CLI::Range(1, 64));
    app.add_option("--out", g.out_path, "Write the output to this file");
    app.fallthrough();

    std::string path, which, reading = "child", highlight = "none", set;
    bool exhaustive = false, trace = false, dummy = false, verify = false;
    long long target = -1;
    std::vector<std::string> paths;
    GenOptions gen;
    BatchOptions batch;

    auto* param = app.add_subcommand("param", "Classic invariants and fixed-colouring parameters");
    param->add_option("graph", path, "Graph file ('-' for stdin)")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact parameter by exhaustive search");
    oracle->add_option("parameter", which)
        ->required()
        ->check(CLI::IsMember({"gamma-uc", "omega-uc", "Omega-uc", "Gamma-uc", "chi-uc"}));
    oracle->add_option("graph", path, "Graph file ('-' for stdin)")->required();
    oracle->add_flag("--exhaustive", exhaustive, "Gamma-uc: search every normalised colouring");

    auto* tree = app.add_subcommand("tree", "Tree algorithms");
    tree->add_option("parameter", which)->required()->check(CLI::IsMember({"gamma-uc", "omega-uc"}));
    tree->add_option("graph", path, "Graph file ('-' for stdin)")->required();
    tree->add_option("--reading", reading, "omega-uc child record reading")
        ->check(CLI::IsMember({"child", "literal"}));
    tree->add_flag("--trace", trace, "omega-uc: include the record pipeline");

    auto* reduce = app.add_subcommand("reduce", "Build a hardness reduction instance");
    reduce->add_option("problem", which)->required()->check(CLI::IsMember({"min-cover", "3sat", "max-e2sat"}));
    reduce->add_option("instance", path, "Instance file ('-' for stdin)")->required();
    reduce->add_flag("--dummy-triangle", dummy, "min-cover: add the disjoint triangle");
    reduce->add_option("--target", target, "max-e2sat: clauses to satisfy (default: the optimum)");
    reduce->add_flag("--verify", verify, "Check the reduction against brute force");

    auto* gencmd = app.add_subcommand("gen", "Generate a family member or a random instance");
    gencmd->add_option("family", which, "path, cycle, complete, complete_bipartite, star, hairy, cone, "
                                        "clique_flower, house, random-tree, random-graph")
        ->required();
    gencmd->add_option("--n", gen.n, "Order (or leaves for star)");
    gencmd->add_option("--r", gen.r);
    gencmd->add_option("--s", gen.s);
    gencmd->add_option("--l", gen.l, "Hairs per vertex");
    gencmd->add_option("--k", gen.k, "Colours for random colourings");
    gencmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gencmd->add_option("--base", gen.base, "Base graph file for hairy and cone");
    gencmd->add_flag("--shared", gen.shared, "clique_flower: petals share a vertex with the centre");

    auto* audit = app.add_subcommand("audit-bounds", "Check the general inequalities");
    audit->add_option("graphs", paths, "Coloured graph files");
    audit->add_option("--batch", batch.count, "Also audit this many seeded random connected graphs");
    audit->add_option("--n-min", batch.n_min);
    audit->add_option("--n-max", batch.n_max);
    audit->add_option("--p", batch.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    audit->add_option("--jobs", batch.jobs, "Instances evaluated concurrently");

    auto* dot = app.add_subcommand("dot", "Graphviz output");
    dot->add_option("graph", path, "Graph file ('-' for stdin)")->required();
    dot->add_option("--highlight", highlight, "Vertex set to mark")
        ->check(CLI::IsMember({"none", "gamma-uc", "omega-uc", "local-maxima"}));
    dot->add_option("--set", set, "Explicit comma-separated vertices to mark");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    const auto* sub = app.get_subcommands().front();
    Output o;
    o.report["command"] = sub->get_name() + (which.empty() ? "" : " " + which);
    try {
        if (sub == param) {
            cmd_param(g, path, o);
        } else if (sub == oracle) {
            cmd_oracle(g, which, path, exhaustive, o);
        } else if (sub == tree) {
            cmd_tree(which, path, reading, trace, o);
        } else if (sub == reduce) {
            cmd_reduce(g, which, path, dummy, target, verify, o);
        } else if (sub == gencmd) {
            cmd_gen(g, which, gen, o);
        } else if (sub == audit) {
            if (paths.empty() && batch.count == 0) throw Error(ErrorCode::BadParameters, "no graphs to audit");
            cmd_audit(g, paths, batch, o);
        } else {
            cmd_dot(g, path, highlight, set, o);
        }
        emit(g, o, out);
        return o.status;
    } catch (const Error& e) {
        const int status = exit_code_for(e.code());
        Output failure;
        failure.report["command"] = o.report["command"];
        failure.report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        failure.report["exit_code"] = status;
        failure.status = status;
        if (g.json) {
            out << failure.report.dump(2) << '\n';
        } else {
            err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        }
        return status;
    }
}

}  // namespace upcolor::cli
