#include "kindep/table.hpp"

#include <sstream>
#include <stdexcept>

#include "kindep/bounds.hpp"

namespace kindep {

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

struct Reference {
    std::int64_t lower_num, lower_den, upper_num, upper_den;
};

// d = 0..10, fractions as printed.
constexpr Reference reference_table[] = {
    {1, 1, 1, 1},   {5, 6, 5, 6},   {2, 3, 9, 13},  {1, 2, 3, 5},   {4, 9, 1, 2},   {7, 18, 6, 13},
    {1, 3, 2, 5},   {11, 36, 6, 17}, {5, 13, 6, 19}, {1, 4, 2, 7},  {7, 30, 6, 23},
};

GraphSpec table_witness(std::size_t d) {
    std::string text;
    if (d == 0) {
        text = "complete:1";
    } else if (d == 1) {
        text = "thm12_2:2";
    } else if (d == 2) {
        text = "thm14_6:2";
    } else if (d <= 4) {
        text = "thm14_5:d=" + std::to_string(d) + ",q=0";
    } else {
        text = "thm14_5:d=" + std::to_string(d) + ",q=1";
    }
    return parse_graph_spec(text);
}

bool components_fit(const Graph& g, std::size_t limit) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() > limit) return false;
    }
    return true;
}

}  // namespace

WitnessRatio witness_ratio(const Graph& g, std::size_t k, std::size_t d, std::optional<std::size_t> alpha,
                           std::size_t limit) {
    if (g.order() == 0) throw std::invalid_argument("witness_ratio: graph has no vertices");
    WitnessRatio out;
    out.n = g.order();
    out.max_degree = g.max_degree();
    out.avg_degree = g.avg_degree();
    if (out.avg_degree > Rational(as_int(d))) {
        throw std::invalid_argument("witness_ratio: average degree " + out.avg_degree.str() + " exceeds d = " +
                                    std::to_string(d));
    }
    if (components_fit(g, limit)) {
        const std::size_t exact = alpha_k_by_components(g, k, limit).alpha;
        if (alpha && *alpha != exact) {
            throw std::invalid_argument("witness_ratio: supplied alpha " + std::to_string(*alpha) +
                                        " but the oracle gives " + std::to_string(exact));
        }
        out.alpha = exact;
        out.oracle_verified = true;
    } else if (alpha) {
        out.alpha = *alpha;
    } else {
        throw std::invalid_argument("witness_ratio: no alpha supplied and the graph exceeds the oracle limit");
    }
    out.ratio = Rational(as_int(out.alpha), as_int(out.n));
    return out;
}

WitnessRatio high_girth_complement_witness(const Graph& h, std::size_t k, std::size_t limit) {
    if (h.order() == 0 || !h.is_regular()) {
        throw std::invalid_argument("high_girth_complement_witness: H must be regular with n >= 1");
    }
    const auto g = girth(h);
    if (g && *g < k + 4) {
        throw std::invalid_argument("high_girth_complement_witness: girth " + std::to_string(*g) +
                                    " is below k+4 = " + std::to_string(k + 4));
    }
    const Graph comp = complement(h);
    const std::size_t d = h.order() - 1 - h.max_degree();
    return witness_ratio(comp, k, d, k + 2, limit);
}

std::vector<TableRow> table_f2(std::size_t limit) {
    constexpr std::size_t k = 2;
    std::vector<TableRow> rows;
    for (std::size_t d = 0; d <= 10; ++d) {
        TableRow row;
        row.d = d;
        row.lower = f_lower(k, d);
        row.witness = table_witness(d);
        const WitnessRatio w = witness_ratio(instantiate(row.witness), k, d, std::nullopt, limit);
        row.upper = w.ratio;
        row.witness_alpha = w.alpha;
        row.witness_n = w.n;
        const Reference& ref = reference_table[d];
        row.reference_lower = Rational(ref.lower_num, ref.lower_den);
        row.reference_upper = Rational(ref.upper_num, ref.upper_den);
        std::string note;
        if (row.lower != row.reference_lower) {
            note = "recomputed lower " + row.lower.str() + "; reference table lists " + row.reference_lower.str();
        }
        if (row.upper != row.reference_upper) {
            if (!note.empty()) note += "; ";
            note += "recomputed upper " + row.upper.str() + "; reference table lists " + row.reference_upper.str();
        }
        if (!note.empty()) row.discrepancy = note;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "d   lower    upper    alpha_2/n  witness\n";
    for (const auto& row : rows) {
        std::string d = std::to_string(row.d);
        std::string lower = row.lower.str();
        std::string upper = row.upper.str();
        std::string ratio = std::to_string(row.witness_alpha) + "/" + std::to_string(row.witness_n);
        out << d << std::string(4 - d.size(), ' ') << lower << std::string(9 - lower.size(), ' ') << upper
            << std::string(9 - upper.size(), ' ') << ratio << std::string(11 - ratio.size(), ' ')
            << to_string(row.witness);
        if (row.discrepancy) out << "  [" << *row.discrepancy << "]";
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json table_to_json(const std::vector<TableRow>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["d"] = row.d;
        j["lower"] = row.lower.fraction();
        j["upper"] = row.upper.fraction();
        j["witness"] = to_string(row.witness);
        j["witness_alpha"] = row.witness_alpha;
        j["witness_n"] = row.witness_n;
        j["reference_lower"] = row.reference_lower.fraction();
        j["reference_upper"] = row.reference_upper.fraction();
        j["discrepancy"] = row.discrepancy ? nlohmann::ordered_json(*row.discrepancy) : nlohmann::ordered_json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "d,lower,upper,witness,witness_alpha,witness_n,reference_lower,reference_upper,discrepancy\n";
    for (const auto& row : rows) {
        out << row.d << ',' << row.lower.fraction() << ',' << row.upper.fraction() << ",\""
            << to_string(row.witness) << "\"," << row.witness_alpha << ',' << row.witness_n << ','
            << row.reference_lower.fraction() << ',' << row.reference_upper.fraction() << ','
            << (row.discrepancy ? "\"" + *row.discrepancy + "\"" : "") << '\n';
    }
    return out.str();
}

}  // namespace kindep
