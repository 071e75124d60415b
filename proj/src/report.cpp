#include "dihomol/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dihomol {

using nlohmann::ordered_json;

std::string degree_label(int k) { return std::to_string(k) + " (H^" + std::to_string(-k) + ")"; }

namespace {

std::string title(const BettiTable& t) {
    const Window r = t.reliable();
    return theory_label(t.theory) + " over " + t.field.name() + ", degrees " + std::to_string(r.hi) + ".." +
           std::to_string(r.lo) + " (edges " + std::to_string(t.window.hi) + " and " + std::to_string(t.window.lo) +
           " excluded)";
}

ordered_json window_json(Window w) { return {{"lo", w.lo}, {"hi", w.hi}}; }

}  // namespace

std::string render_table(const BettiTable& t) {
    std::size_t width = std::string("degree").size();
    for (const auto& [k, b] : t.betti) width = std::max(width, degree_label(k).size());
    std::ostringstream os;
    os << title(t) << "\n";
    os << std::left << std::setw(static_cast<int>(width)) << "degree" << "  dimension\n";
    for (auto it = t.betti.rbegin(); it != t.betti.rend(); ++it) {
        os << std::left << std::setw(static_cast<int>(width)) << degree_label(it->first) << "  " << it->second
           << "\n";
    }
    return os.str();
}

std::string render_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "degree,dimension\n";
    for (auto it = t.betti.rbegin(); it != t.betti.rend(); ++it) os << it->first << "," << it->second << "\n";
    return os.str();
}

std::string render_json(const BettiTable& t) {
    ordered_json j;
    j["schema"] = kSchema;
    j["theory"] = theory_label(t.theory);
    j["field"] = t.field.name();
    j["window"] = window_json(t.window);
    j["reliable"] = window_json(t.reliable());
    j["excluded_edges"] = t.excluded_edges();
    j["betti"] = ordered_json::array();
    for (auto it = t.betti.rbegin(); it != t.betti.rend(); ++it) {
        j["betti"].push_back(
            {{"degree", it->first}, {"cohomological_degree", -it->first}, {"dimension", it->second}});
    }
    return j.dump(2) + "\n";
}

std::string dump_complex_json(const ComplexWindow& c) {
    ordered_json j;
    j["schema"] = kSchema;
    j["theory"] = theory_label(c.theory());
    j["field"] = c.field().name();
    j["window"] = window_json(c.window());
    j["degrees"] = ordered_json::array();
    for (int k = c.window().hi; k >= c.window().lo; --k) j["degrees"].push_back({{"degree", k}, {"basis", c.basis(k)}});
    j["differentials"] = ordered_json::array();
    for (int k = c.window().hi; k > c.window().lo; --k) {
        const ExactMatrix& d = c.differential(k);
        ordered_json entries = ordered_json::array();
        for (const auto& t : d.triplets()) entries.push_back({t.row, t.col, t.value.to_string()});
        j["differentials"].push_back(
            {{"degree", k}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", std::move(entries)}});
    }
    return j.dump(2) + "\n";
}

std::string render_page_grid(const PageReport& p) {
    int q_max = 0;
    int j_min = 0;
    for (const auto& [bd, n] : p.dims) {
        q_max = std::max(q_max, bd.first);
        j_min = std::min(j_min, bd.second);
    }
    std::ostringstream os;
    os << "E" << p.page << " over " << p.field.name() << " (rows: u-power q, columns: HH degree j)\n";
    os << std::setw(5) << "q\\j";
    for (int j = 0; j >= j_min; --j) os << std::setw(5) << j;
    os << "\n";
    for (int q = 0; q <= q_max; ++q) {
        os << std::setw(5) << q;
        for (int j = 0; j >= j_min; --j) {
            auto it = p.dims.find({q, j});
            if (it == p.dims.end()) {
                os << std::setw(5) << " ";
            } else if (it->second == 0) {
                os << std::setw(5) << ".";
            } else {
                os << std::setw(5) << it->second;
            }
        }
        os << "\n";
    }
    os << "totals vs HC-:";
    for (auto it = p.totals.rbegin(); it != p.totals.rend(); ++it) {
        auto lim = p.limit.find(it->first);
        os << " " << it->first << ":" << it->second << "/" << (lim == p.limit.end() ? 0 : lim->second);
    }
    os << "\ncollapse: " << (p.collapse ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_page_json(const PageReport& p) {
    ordered_json j;
    j["schema"] = kSchema;
    j["page"] = p.page;
    j["field"] = p.field.name();
    j["window"] = window_json(p.window);
    j["entries"] = ordered_json::array();
    for (const auto& [bd, n] : p.dims) {
        if (n == 0) continue;
        j["entries"].push_back({{"q", bd.first},
                                {"j", bd.second},
                                {"total_degree", bd.second - 2 * bd.first},
                                {"dimension", n},
                                {"generators", p.generators.at(bd)}});
    }
    j["totals"] = ordered_json::array();
    for (auto it = p.totals.rbegin(); it != p.totals.rend(); ++it) {
        auto lim = p.limit.find(it->first);
        j["totals"].push_back({{"degree", it->first},
                               {"dimension", it->second},
                               {"limit", lim == p.limit.end() ? 0 : lim->second}});
    }
    j["collapse"] = p.collapse;
    j["d1_squares_to_zero"] = p.d1_squares_to_zero;
    j["d1_well_defined"] = p.d1_well_defined;
    return j.dump(2) + "\n";
}

}  // namespace dihomol
