#include "kindep/bound_report.hpp"

#include <algorithm>
#include <sstream>

#include "kindep/bounds.hpp"

namespace kindep {

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

BoundRow lower_row(std::string name, Rational value, std::string note, bool strict = false) {
    BoundRow row;
    row.name = std::move(name);
    row.kind = BoundKind::lower;
    row.integer_bound = strict ? value.floor() + 1 : value.ceil();
    row.value = std::move(value);
    row.note = std::move(note);
    return row;
}

BoundRow upper_row(std::string name, std::optional<Rational> value, bool applicable, std::string note) {
    BoundRow row;
    row.name = std::move(name);
    row.kind = BoundKind::upper;
    row.value = std::move(value);
    row.applicable = applicable;
    row.note = std::move(note);
    return row;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string kind_name(BoundKind kind) { return kind == BoundKind::lower ? "lower" : "upper"; }

const BoundRow* BoundReport::find(const std::string& name) const {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const BoundRow& r) { return r.name == name; });
    return it == rows.end() ? nullptr : &*it;
}

BoundReport graph_lower_bounds(const Graph& g, std::size_t k) {
    BoundReport report;
    report.k = k;
    report.graph = GraphInputs{g.order(), g.edge_count(), g.max_degree(), g.avg_degree()};
    const Rational n(as_int(g.order()));
    const std::size_t ceil_d = static_cast<std::size_t>(g.avg_degree().ceil_int());

    report.rows.push_back(lower_row("caro_tuza_sum", caro_tuza_sum(g, k), "sum of f_k(deg v)"));
    report.rows.push_back(lower_row("corollary_avg", corollary_avg(g, k), "f_k(d(G)) n"));
    if (auto half = corollary_halfbound(g, k)) {
        report.rows.push_back(lower_row("corollary_halfbound", *half, "(k+2) n / (2(d(G)+1))"));
    } else {
        BoundRow row;
        row.name = "corollary_halfbound";
        row.applicable = false;
        row.note = "requires d(G) >= k+1";
        report.rows.push_back(std::move(row));
    }
    report.rows.push_back(lower_row("hopkins_staton", hopkins_staton(g, k), "n / ceil((Delta+1)/(k+1))"));
    report.rows.push_back(
        lower_row("first_approach", thm_first_approach_bound(g, k), "strict: (k+1) n / (d(G)+2k+2)", true));
    report.rows.push_back(lower_row("main_bound", main_bound(g, k), "(k+1) n / (ceil(d(G))+k+1)"));
    report.rows.push_back(lower_row("f_lower_times_n", f_lower(k, ceil_d) * n, "f_lower(k, ceil(d(G))) n"));
    report.rows.push_back(upper_row("order", n, true, "alpha_k <= n"));
    return report;
}

BoundReport f_upper_catalog(std::size_t k, std::size_t d) {
    BoundReport report;
    report.k = k;
    report.d = d;
    const auto K = as_int(k);
    const auto D = as_int(d);

    {
        BoundRow row = lower_row("f_lower", f_lower(k, d), "t = " + std::to_string(residue_t(k, d).t));
        row.integer_bound.reset();
        report.rows.push_back(std::move(row));
    }

    report.rows.push_back(upper_row("complete_graph", Rational(K + 1, D + 1), d >= k,
                                    "d >= k; witness complete:n=" + std::to_string(d + 1)));

    report.rows.push_back(upper_row("complete_minus_matching", Rational(K + 1, D + 2),
                                    d > k && d % 2 == 0 && k % 2 == 1,
                                    "d > k, d even, k odd; witness j_n:n=" + std::to_string(d + 2)));

    report.rows.push_back(upper_row("complete_minus_cycle", Rational(K + 2, D + 3), d > k,
                                    "d > k; witness complete_minus_cycle:n=" + std::to_string(d + 3)));

    {
        bool applicable = false;
        std::string note = "k >= 3, d >= 2h(k)-k-1, d+k+1 even; existential high-girth k-regular witness";
        if (k >= 3) {
            const BigInt threshold = 2 * h_function(k) - (K + 1);
            applicable = BigInt(D) >= threshold && (d + k + 1) % 2 == 0;
            note += "; 2h(k)-k-1 = " + threshold.str();
        }
        report.rows.push_back(upper_row("high_girth_k_regular", Rational(K + 2, D + K + 1), applicable, note));
    }

    {
        std::optional<Rational> value;
        bool applicable = k == 2 && d >= 2;
        std::string note = "k = 2, 2 <= d <= 4+6q; best q is the smallest admissible";
        if (applicable) {
            const std::int64_t q = d <= 4 ? 0 : ceil_div(D - 4, 6);
            value = Rational(3 * (q + 1), (q + 1) * D + q + 2);
            note += "; q = " + std::to_string(q) + "; witness thm14_5:d=" + std::to_string(d) +
                    ",q=" + std::to_string(q);
        } else {
            value = std::nullopt;
        }
        report.rows.push_back(upper_row("triangle_deleted_cliques", value, applicable, note));
    }

    report.rows.push_back(upper_row("stars_and_clique", Rational((K + 1) * (K + 1), K * K + 3 * K + 3),
                                    k >= 2 && d == 2,
                                    k >= 2 ? "k >= 2, d = 2; witness thm14_6:k=" + std::to_string(k) : std::string("k >= 2, d = 2")));

    report.rows.push_back(upper_row("high_girth_asymptotic", std::nullopt, k >= 3,
                                    "k >= 3; (k+2)/(d + c (d/2)^(1/(k+2)) + 1) for an existential "
                                    "constant c > 0; no value reported"));
    return report;
}

std::string to_text(const BoundReport& report) {
    std::ostringstream out;
    if (report.graph) {
        out << "n=" << report.graph->n << " e=" << report.graph->e << " Delta=" << report.graph->max_degree
            << " d=" << report.graph->avg_degree << " k=" << report.k << '\n';
    } else {
        out << "k=" << report.k;
        if (report.d) out << " d=" << *report.d;
        out << '\n';
    }
    std::size_t width = 4;
    for (const auto& row : report.rows) width = std::max(width, row.name.size());
    for (const auto& row : report.rows) {
        out << row.name << std::string(width - row.name.size() + 2, ' ') << kind_name(row.kind) << "  ";
        std::string value = row.value ? row.value->str() : "-";
        out << value << std::string(value.size() < 12 ? 12 - value.size() : 1, ' ');
        std::string status;
        if (!row.applicable) {
            status = "n/a";
        } else if (row.integer_bound) {
            status = ">= " + row.integer_bound->str();
        }
        out << status << std::string(status.size() < 8 ? 8 - status.size() : 1, ' ') << row.note << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    if (report.graph) {
        j["inputs"] = {{"n", report.graph->n},
                       {"e", report.graph->e},
                       {"max_degree", report.graph->max_degree},
                       {"avg_degree", report.graph->avg_degree.fraction()},
                       {"k", report.k}};
    } else {
        j["inputs"] = {{"k", report.k}};
        if (report.d) j["inputs"]["d"] = *report.d;
    }
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["name"] = row.name;
        r["kind"] = kind_name(row.kind);
        r["value"] = row.value ? nlohmann::ordered_json(row.value->fraction()) : nlohmann::ordered_json(nullptr);
        r["applicable"] = row.applicable;
        r["integer_bound"] =
            row.integer_bound ? nlohmann::ordered_json(row.integer_bound->str()) : nlohmann::ordered_json(nullptr);
        r["note"] = row.note;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

std::string to_csv(const BoundReport& report) {
    std::ostringstream out;
    out << "name,kind,value,applicable,integer_bound,note\n";
    for (const auto& row : report.rows) {
        out << row.name << ',' << kind_name(row.kind) << ',' << (row.value ? row.value->fraction() : "") << ','
            << (row.applicable ? "true" : "false") << ',' << (row.integer_bound ? row.integer_bound->str() : "")
            << ',' << csv_field(row.note) << '\n';
    }
    return out.str();
}

}  // namespace kindep
