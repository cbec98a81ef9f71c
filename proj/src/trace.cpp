#include "kindep/trace.hpp"

#include <algorithm>

namespace kindep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string format_step(const TraceStep& step) {
    return std::visit(
        overloaded{
            [](const Deletion& s) {
                std::string line = "DEL " + std::to_string(s.vertex) + " deg=" + std::to_string(s.degree);
                if (s.group != 0 || s.copies != 1) {
                    line += " group=" + std::to_string(s.group) + " copies=" + s.copies.str();
                }
                return line;
            },
            [](const Move& s) {
                return "MOVE " + std::to_string(s.vertex) + " " + std::to_string(s.from) + "->" +
                       std::to_string(s.to) + " phi=" + s.phi.fraction();
            },
            [](const Restart& s) {
                std::string line =
                    "RESTART d=" + std::to_string(s.d) + " t=" + std::to_string(s.t) + " q=" + s.q.str();
                if (s.copies != 1) line += " copies=" + std::to_string(s.copies);
                return line;
            },
            [](const PartitionStep& s) { return "PARTITION t=" + std::to_string(s.classes); },
        },
        step);
}

std::vector<std::string> RunTrace::lines() const {
    std::vector<std::string> out;
    out.reserve(steps.size());
    for (const auto& step : steps) out.push_back(format_step(step));
    return out;
}

std::string RunTrace::to_log() const {
    std::string out;
    for (const auto& line : lines()) {
        out += line;
        out += '\n';
    }
    return out;
}

std::size_t RunTrace::count_deletions() const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) {
        return std::holds_alternative<Deletion>(s);
    }));
}

std::size_t RunTrace::count_moves() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) { return std::holds_alternative<Move>(s); }));
}

}  // namespace kindep
