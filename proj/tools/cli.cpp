#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kindep/algorithms.hpp"
#include "kindep/bound_report.hpp"
#include "kindep/bounds.hpp"
#include "kindep/family_spec.hpp"
#include "kindep/graph_io.hpp"
#include "kindep/oracle.hpp"
#include "kindep/table.hpp"

namespace kindep::cli {

namespace {

using json = nlohmann::ordered_json;

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string file;
    std::string family;
    std::size_t k = 0;
    std::string algo = "alg2";
    std::size_t limit = default_alpha_limit;
    std::uint64_t seed = 0;
    std::size_t reps = 1;
    std::string format = "text";
    std::string out;
    std::string trace;
    std::string set;
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t d = 0;
    std::string graph_format = "edgelist";
    bool chi = false;

    bool has_seed = false;
    bool has_p = false;
    bool has_q = false;
    bool has_d = false;
};

// Flat key/value output shared by run, exact and verify.
using Record = std::vector<std::pair<std::string, json>>;

std::string scalar_text(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_null()) return "";
    return value.dump();
}

void emit(std::ostream& out, const Record& record, const std::string& format) {
    if (format == "json") {
        json j = json::object();
        for (const auto& [key, value] : record) j[key] = value;
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < record.size(); ++i) out << (i ? "," : "") << record[i].first;
        out << '\n';
        for (std::size_t i = 0; i < record.size(); ++i) {
            std::string text = scalar_text(record[i].second);
            if (text.find_first_of(", \"") != std::string::npos) text = "\"" + text + "\"";
            out << (i ? "," : "") << text;
        }
        out << '\n';
    } else {
        for (const auto& [key, value] : record) out << key << '=' << scalar_text(value) << '\n';
    }
}

std::string join(const VertexSet& vertices) {
    std::string text;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) text += ' ';
        text += std::to_string(vertices[i]);
    }
    return text;
}

bool has_source(const Options& o) { return !o.file.empty() || !o.family.empty(); }

Graph load_graph(const Options& o) {
    if (o.file.empty() == o.family.empty()) throw ConfigError("exactly one of --file and --family is required");
    if (!o.file.empty()) {
        if (o.has_seed) throw ConfigError("--seed applies to --family sources only");
        return read_graph_file(o.file);
    }
    GraphSpec spec = parse_graph_spec(o.family);
    if (o.has_seed) spec = with_seed(std::move(spec), o.seed);
    return instantiate(spec);
}

// Writes to --out when given, otherwise to the command's output stream.
template <class Writer>
void write_output(const Options& o, std::ostream& out, Writer&& writer) {
    if (o.out.empty()) {
        writer(out);
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw ConfigError("cannot open " + o.out + " for writing");
    writer(file);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw ConfigError("cannot open " + path + " for writing");
    file << text;
}

std::string integer_bound(const Rational& guarantee, bool strict) {
    return (strict ? guarantee.floor() + 1 : guarantee.ceil()).str();
}

int cmd_gen(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    write_output(o, out, [&](std::ostream& s) {
        if (o.graph_format == "dimacs") {
            write_dimacs(s, g);
        } else {
            write_edge_list(s, g);
        }
    });
    return exit_ok;
}

int cmd_bound(const Options& o, std::ostream& out) {
    BoundReport report;
    if (o.has_d) {
        if (has_source(o)) throw ConfigError("--d reports bounds on f(k,d) and takes no graph source");
        report = f_upper_catalog(o.k, o.d);
    } else {
        const Graph g = load_graph(o);
        if (g.order() == 0) throw ConfigError("bound needs a graph with at least one vertex");
        report = graph_lower_bounds(g, o.k);
    }
    if (o.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << to_csv(report);
    } else {
        out << to_text(report);
    }
    return exit_ok;
}

AlgorithmRun run_lovasz(const Graph& g, std::size_t k) {
    AlgorithmRun run;
    run.witness.k = k;
    if (g.order() == 0) {
        run.k_independent = run.guarantee_met = true;
        return run;
    }
    LovaszResult result = lovasz_equal(g, k);
    const auto& classes = result.partition.classes;
    run.witness.vertices = classes[result.partition.largest_class()];
    run.guarantee = hopkins_staton(g, k);
    run.witness.bound = run.guarantee;
    run.trace = std::move(result.trace);
    run.k_independent = true;
    for (const auto& cls : classes) run.k_independent = run.k_independent && verify_k_independent(g, cls, k);
    run.guarantee_met = Rational(static_cast<std::int64_t>(run.witness.size())) >= run.guarantee;
    return run;
}

int cmd_run(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    AlgorithmRun run;
    if (o.algo == "greedy") {
        run = caro_tuza_greedy(g, o.k);
    } else if (o.algo == "alg1") {
        run = algorithm1(g, o.k);
    } else if (o.algo == "alg2") {
        run = algorithm2(g, o.k);
    } else if (o.algo == "alg2-direct") {
        run = algorithm2_direct(g, o.k);
    } else if (o.algo == "lovasz") {
        run = run_lovasz(g, o.k);
    } else {
        throw ConfigError("unknown algorithm '" + o.algo + "'");
    }
    if (!o.trace.empty()) write_text_file(o.trace, run.trace.to_log());
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) throw ConfigError("cannot open " + o.out + " for writing");
        write_vertex_set(file, run.witness.vertices);
    }

    Record record{
        {"algo", o.algo},
        {"k", o.k},
        {"n", g.order()},
        {"size", run.witness.size()},
        {"guarantee", o.format == "text" ? run.guarantee.str() : run.guarantee.fraction()},
        {"strict", run.strict},
        {"integer_bound", integer_bound(run.guarantee, run.strict)},
        {"deletions", run.trace.count_deletions()},
        {"moves", run.trace.count_moves()},
        {"verify", run.k_independent ? "PASS" : "FAIL"},
        {"certificate", run.ok() ? "PASS" : "FAIL"},
        {"set", join(run.witness.vertices)},
    };
    if (o.format == "json") record.back().second = run.witness.vertices;
    emit(out, record, o.format);
    return run.ok() ? exit_ok : exit_violation;
}

int cmd_exact(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    Record record{{"n", g.order()}};
    if (o.has_p || o.has_q) {
        if (!(o.has_p && o.has_q)) throw ConfigError("--p and --q go together");
        if (o.p > o.q) throw ConfigError("--p must not exceed --q");
        const std::size_t ap = alpha_k_exact(g, o.p, o.limit).alpha;
        const std::size_t aq = alpha_k_exact(g, o.q, o.limit).alpha;
        const std::size_t factor = (o.q + 1 + o.p) / (o.p + 1);
        const bool holds = aq <= factor * ap;
        record.insert(record.end(), {{"p", o.p}, {"q", o.q}, {"alpha_p", ap}, {"alpha_q", aq},
                                     {"factor", factor}, {"holds", holds}});
        emit(out, record, o.format);
        return holds ? exit_ok : exit_violation;
    }
    record.emplace_back("k", o.k);
    if (o.chi) {
        record.emplace_back("chi_k", chi_k_exact(g, o.k, o.limit));
        emit(out, record, o.format);
        return exit_ok;
    }
    const ExactAlpha exact = alpha_k_exact(g, o.k, o.limit);
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) throw ConfigError("cannot open " + o.out + " for writing");
        write_vertex_set(file, exact.witness.vertices);
    }
    record.emplace_back("alpha_k", exact.alpha);
    if (o.format == "json") {
        record.emplace_back("set", exact.witness.vertices);
    } else {
        record.emplace_back("set", join(exact.witness.vertices));
    }
    emit(out, record, o.format);
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    if (o.set.empty()) throw ConfigError("verify needs --set");
    std::ifstream file(o.set);
    if (!file) throw ConfigError("cannot open " + o.set);
    const VertexSet vertices = read_vertex_set(file);
    for (Vertex v : vertices) {
        if (v >= g.order()) throw ConfigError("vertex " + std::to_string(v) + " is out of range");
    }
    const bool ok = verify_k_independent(g, vertices, o.k);
    emit(out, Record{{"k", o.k}, {"size", vertices.size()}, {"k_independent", ok}}, o.format);
    return ok ? exit_ok : exit_violation;
}

int cmd_table(const Options& o, std::ostream& out) {
    const auto rows = table_f2(o.limit);
    if (o.format == "json") {
        out << table_to_json(rows).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << table_to_csv(rows);
    } else {
        out << table_to_text(rows);
    }
    return exit_ok;
}

struct BenchRow {
    std::size_t instance;
    std::uint64_t seed;
    std::size_t n, m;
    Rational caro_tuza, first_approach, main;
    std::size_t alg2_size;
    std::optional<std::size_t> alpha;
};

int cmd_bench(const Options& o, std::ostream& out) {
    if (!o.file.empty()) throw ConfigError("bench takes a --family template");
    if (o.family.empty()) throw ConfigError("bench needs --family");
    if (o.reps == 0) throw ConfigError("--reps must be at least 1");
    const GraphSpec base = parse_graph_spec(o.family);
    const std::uint64_t seed0 = o.has_seed ? o.seed : first_seed(base).value_or(0);

    std::vector<BenchRow> rows;
    bool violated = false;
    Rational sum_main, sum_alg2, sum_caro;
    std::size_t with_alpha = 0;
    for (std::size_t i = 0; i < o.reps; ++i) {
        const std::uint64_t seed = seed0 + i;
        const Graph g = instantiate(with_seed(base, seed));
        if (g.order() == 0) throw ConfigError("bench instances need at least one vertex");
        BenchRow row{i, seed, g.order(), g.edge_count(), caro_tuza_sum(g, o.k), thm_first_approach_bound(g, o.k),
                     main_bound(g, o.k), 0, std::nullopt};
        const AlgorithmRun run = algorithm2(g, o.k);
        violated = violated || !run.ok();
        row.alg2_size = run.witness.size();
        bool fits = true;
        for (const auto& comp : connected_components(g)) fits = fits && comp.size() <= o.limit;
        if (fits) {
            row.alpha = alpha_k_by_components(g, o.k, o.limit).alpha;
            const Rational a(static_cast<std::int64_t>(*row.alpha));
            sum_main += row.main / a;
            sum_caro += row.caro_tuza / a;
            sum_alg2 += Rational(static_cast<std::int64_t>(row.alg2_size)) / a;
            ++with_alpha;
        }
        rows.push_back(std::move(row));
    }
    auto mean = [&](const Rational& sum) -> std::optional<Rational> {
        if (with_alpha == 0) return std::nullopt;
        return sum / Rational(static_cast<std::int64_t>(with_alpha));
    };

    if (o.format == "json") {
        json j;
        j["template"] = to_string(base);
        j["k"] = o.k;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"instance", r.instance},
                                 {"seed", r.seed},
                                 {"n", r.n},
                                 {"m", r.m},
                                 {"k", o.k},
                                 {"caro_tuza_sum", r.caro_tuza.fraction()},
                                 {"first_approach_bound", r.first_approach.fraction()},
                                 {"main_bound", r.main.fraction()},
                                 {"alg2_size", r.alg2_size},
                                 {"alpha_k", r.alpha ? json(*r.alpha) : json(nullptr)}});
        }
        auto frac = [](const std::optional<Rational>& r) { return r ? json(r->fraction()) : json(nullptr); };
        j["summary"] = {{"instances", rows.size()},
                        {"with_alpha", with_alpha},
                        {"mean_caro_tuza_over_alpha", frac(mean(sum_caro))},
                        {"mean_main_bound_over_alpha", frac(mean(sum_main))},
                        {"mean_alg2_over_alpha", frac(mean(sum_alg2))}};
        out << j.dump(2) << '\n';
    } else {
        out << "instance,seed,n,m,k,caro_tuza_sum,first_approach_bound,main_bound,alg2_size,alpha_k\n";
        for (const auto& r : rows) {
            out << r.instance << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << o.k << ','
                << r.caro_tuza.fraction() << ',' << r.first_approach.fraction() << ',' << r.main.fraction() << ','
                << r.alg2_size << ',' << (r.alpha ? std::to_string(*r.alpha) : "") << '\n';
        }
        auto frac = [](const std::optional<Rational>& r) { return r ? r->fraction() : std::string("-"); };
        out << "# instances=" << rows.size() << " with_alpha=" << with_alpha << '\n';
        out << "# mean_caro_tuza_over_alpha=" << frac(mean(sum_caro)) << '\n';
        out << "# mean_main_bound_over_alpha=" << frac(mean(sum_main)) << '\n';
        out << "# mean_alg2_over_alpha=" << frac(mean(sum_alg2)) << '\n';
    }
    return violated ? exit_violation : exit_ok;
}

void add_source(CLI::App* cmd, Options& o) {
    cmd->add_option("--file", o.file, "Graph file (edge list or DIMACS)");
    cmd->add_option("--family", o.family, "Generated graph, e.g. j:6 or gnm:n=30,m=60,seed=7");
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> formats = {"text", "json", "csv"}) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"k-independent sets: bounds, algorithms and exact values", "kindep"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    add_source(gen, o);
    auto* gen_seed = gen->add_option("--seed", o.seed, "Seed for random_gnm atoms");
    gen->add_option("--out", o.out, "Output file (default stdout)");
    gen->add_option("--graph-format", o.graph_format, "Graph file format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* bound = app.add_subcommand("bound", "Lower bounds on alpha_k(G), or bounds on f(k,d) with --d");
    add_source(bound, o);
    auto* bound_seed = bound->add_option("--seed", o.seed, "Seed for random_gnm atoms");
    bound->add_option("--k", o.k, "k")->required();
    auto* bound_d = bound->add_option("--d", o.d, "Report the f(k,d) catalog for this d");
    add_format(bound, o);

    auto* run = app.add_subcommand("run", "Run an algorithm and certify its output");
    add_source(run, o);
    auto* run_seed = run->add_option("--seed", o.seed, "Seed for random_gnm atoms");
    run->add_option("--k", o.k, "k")->required();
    run->add_option("--algo", o.algo, "greedy | alg1 | alg2 | alg2-direct | lovasz");
    run->add_option("--trace", o.trace, "Write the step trace to this file");
    run->add_option("--out", o.out, "Write the vertex set to this file");
    add_format(run, o);

    auto* exact = app.add_subcommand("exact", "Exact alpha_k (or chi_k, or the alpha_p/alpha_q inequality)");
    add_source(exact, o);
    auto* exact_seed = exact->add_option("--seed", o.seed, "Seed for random_gnm atoms");
    exact->add_option("--k", o.k, "k");
    auto* exact_p = exact->add_option("--p", o.p, "Check alpha_q <= ceil((q+1)/(p+1)) alpha_p");
    auto* exact_q = exact->add_option("--q", o.q, "See --p");
    exact->add_flag("--chi", o.chi, "Compute chi_k instead of alpha_k");
    exact->add_option("--limit", o.limit, "Oracle vertex limit");
    exact->add_option("--out", o.out, "Write a maximum k-independent set to this file");
    add_format(exact, o);

    auto* verify = app.add_subcommand("verify", "Check that a vertex set is k-independent");
    add_source(verify, o);
    auto* verify_seed = verify->add_option("--seed", o.seed, "Seed for random_gnm atoms");
    verify->add_option("--k", o.k, "k")->required();
    verify->add_option("--set", o.set, "Vertex set file")->required();
    add_format(verify, o);

    auto* table = app.add_subcommand("table", "Bounds on f(2,d) for d = 0..10");
    table->add_option("--limit", o.limit, "Oracle vertex limit");
    add_format(table, o);

    auto* bench = app.add_subcommand("bench", "Bound and algorithm sweep over seeded instances");
    bench->add_option("--family", o.family, "Template, e.g. gnm:n=20,m=40")->required();
    auto* bench_seed = bench->add_option("--seed", o.seed, "Seed of instance 0; instance i uses seed+i");
    bench->add_option("--k", o.k, "k")->required();
    bench->add_option("--reps", o.reps, "Number of instances");
    bench->add_option("--limit", o.limit, "Oracle limit per connected component");
    add_format(bench, o, {"csv", "json"});
    o.format = "text";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (auto* opt : {gen_seed, bound_seed, run_seed, exact_seed, verify_seed, bench_seed}) {
        o.has_seed = o.has_seed || opt->count() > 0;
    }
    o.has_d = bound_d->count() > 0;
    o.has_p = exact_p->count() > 0;
    o.has_q = exact_q->count() > 0;
    if (bench->parsed() && o.format == "text") o.format = "csv";

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (run->parsed()) return cmd_run(o, out);
        if (exact->parsed()) return cmd_exact(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << " (limit " << e.limit() << ")\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace kindep::cli
