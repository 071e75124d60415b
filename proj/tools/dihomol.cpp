#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihomol/cyclic_bar.hpp"
#include "dihomol/dga.hpp"
#include "dihomol/equivariant.hpp"
#include "dihomol/report.hpp"
#include "dihomol/spectral.hpp"

using namespace dihomol;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsage = 2;

/// An input problem the user can fix; reported on one line with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string preset;
    std::string algebra_path;
    std::string field = "Q";
    std::vector<int> range;
    std::string format = "table";
    std::string dump_path;
    int max_bar_length = -1;
    int weight_cap = -1;
    int n_max = 4;
    std::size_t trials = 2000;
    std::uint64_t seed = 1;
    int page = 2;
    std::string theory;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read algebra file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

InvolutiveDGA with_bar_length(const InvolutiveDGA& a, int n) {
    std::vector<SparseVector> products;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) products.push_back(a.product(i, j));
    }
    return InvolutiveDGA(a.field(), a.basis(), a.unit(), std::move(products), a.differential_map(),
                         a.involution_map(), n);
}

InvolutiveDGA load_algebra(const Config& cfg, bool field_given) {
    if (cfg.preset.empty() == cfg.algebra_path.empty()) {
        throw UsageError("give exactly one of --preset NAME or --algebra FILE");
    }
    Field field;
    try {
        field = Field::parse(cfg.field);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!cfg.preset.empty()) {
        InvolutiveDGA a = [&] {
            try {
                return presets::from_token(cfg.preset, field);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        return cfg.max_bar_length >= 0 ? with_bar_length(a, cfg.max_bar_length) : a;
    }
    std::string text = read_file(cfg.algebra_path);
    if (cfg.max_bar_length >= 0) {
        // The override has to be in place before validation runs.
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_object()) {
            doc["max_bar_length"] = cfg.max_bar_length;
            text = doc.dump();
        }
    }
    InvolutiveDGA a = parse_algebra(text);
    if (field_given && !(a.field() == field)) {
        throw UsageError("--field " + field.name() + " contradicts the algebra file, which is over " +
                         a.field().name());
    }
    return a;
}

Window user_window(const Config& cfg, Window fallback) {
    if (cfg.range.empty()) return fallback.padded(1);
    if (cfg.range[0] > cfg.range[1]) throw UsageError("--range needs LO <= HI");
    return Window{cfg.range[0], cfg.range[1]}.padded(1);
}

Theory theory_of(const std::string& name) {
    static const std::map<std::string, Theory> names = {{"hh", Theory::HH},       {"hc", Theory::HC},
                                                        {"hcneg", Theory::HCneg}, {"hd", Theory::HD},
                                                        {"hdneg", Theory::HDneg}, {"hrneg", Theory::HRneg}};
    auto it = names.find(name);
    if (it == names.end()) throw UsageError("unknown theory '" + name + "' (hh, hc, hcneg, hd, hdneg, hrneg)");
    return it->second;
}

Window default_range(Theory t) {
    return (t == Theory::HC || t == Theory::HD) ? Window{0, 10} : Window{-10, 0};
}

std::optional<int> cap_of(const Config& cfg) {
    if (cfg.weight_cap < 0) return std::nullopt;
    return cfg.weight_cap;
}

void write_dump(const Config& cfg, const ComplexWindow& c) {
    if (cfg.dump_path.empty()) return;
    std::ofstream out(cfg.dump_path);
    if (!out) throw UsageError("cannot write dump file '" + cfg.dump_path + "'");
    out << dump_complex_json(c);
}

/// Orbit windows are cut at a bar weight. Where raising the cut changes a
/// reported value the homology is not finite there, so say so.
void warn_if_cap_sensitive(Theory t, const InvolutiveDGA& a, Window w, std::optional<int> cap, const BettiTable& table) {
    const int raised = cap.value_or(default_weight_cap(w)) + 4;
    const BettiTable check = homology(theory_window(t, a, w, raised));
    std::string degrees;
    for (const auto& [k, b] : table.betti) {
        if (check.betti.at(k) != b) degrees += (degrees.empty() ? "" : ", ") + std::to_string(k);
    }
    if (!degrees.empty()) {
        std::cerr << "warning: degrees " << degrees << " change when the weight cap rises to " << raised
                  << "; these values describe the truncation only\n";
    }
}

int run_theory(const Config& cfg, Theory t, bool field_given) {
    const InvolutiveDGA a = load_algebra(cfg, field_given);
    const Window w = user_window(cfg, default_range(t));
    const ComplexWindow c = theory_window(t, a, w, cap_of(cfg));
    write_dump(cfg, c);
    const BettiTable table = homology(c);
    if (t == Theory::HC || t == Theory::HD) warn_if_cap_sensitive(t, a, w, cap_of(cfg), table);
    if (cfg.format == "csv") {
        std::cout << render_csv(table);
    } else if (cfg.format == "json") {
        std::cout << render_json(table);
    } else {
        std::cout << render_table(table);
        if (t == Theory::HC || t == Theory::HD) {
            std::cout << "orbit complex cut at bar weight " << cap_of(cfg).value_or(default_weight_cap(w)) << "\n";
        }
        if (t == Theory::HH && a.max_bar_length()) {
            std::cout << "bar length truncated at " << *a.max_bar_length() << "; values describe the truncation\n";
        }
    }
    return kOk;
}

int run_dump(const Config& cfg, bool field_given) {
    const Theory t = theory_of(cfg.theory);
    const InvolutiveDGA a = load_algebra(cfg, field_given);
    const ComplexWindow c = theory_window(t, a, user_window(cfg, default_range(t)), cap_of(cfg));
    if (cfg.dump_path.empty()) {
        std::cout << dump_complex_json(c);
    } else {
        write_dump(cfg, c);
    }
    return kOk;
}

int run_spectral(const Config& cfg, bool field_given) {
    const InvolutiveDGA a = load_algebra(cfg, field_given);
    if (cfg.page != 1 && cfg.page != 2) throw UsageError("--page must be 1 or 2");
    const Window w = user_window(cfg, {-10, 0});
    const PageReport p = cfg.page == 1 ? e1_page(a, w) : e2_page(a, w);
    std::cout << (cfg.format == "json" ? render_page_json(p) : render_page_grid(p));
    return kOk;
}

int run_check(const Config& cfg, bool field_given) {
    try {
        const InvolutiveDGA a = load_algebra(cfg, field_given);
        const ValidationReport report = validate(a);
        std::cout << report.to_string() << "\n";
        return report.ok() ? kOk : kValidationFailure;
    } catch (const ValidationError& e) {
        std::cout << e.report().to_string() << "\n";
        return kValidationFailure;
    }
}

int run_identities(const Config& cfg, bool field_given) {
    const InvolutiveDGA a = load_algebra(cfg, field_given);
    if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
    const IdentityReport r = identity_suite(a, cfg.n_max, cfg.trials, kReversalSign, cfg.seed);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = kSchema;
        j["field"] = a.field().name();
        j["n_max"] = cfg.n_max;
        j["words"] = r.words;
        j["exhaustive"] = r.exhaustive;
        j["checks"] = r.checks;
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) j["failures"].push_back({{"identity", f.identity}, {"witness", f.witness}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.to_string() << "\n";
    }
    return r.ok() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild, cyclic, dihedral and reflexive homology of finite involutive DGAs"};
    app.require_subcommand(1);
    Config cfg;

    const auto add_common = [&](CLI::App* sub, bool with_range) {
        auto* preset = sub->add_option("--preset", cfg.preset,
                                       "point, sphere2, sphere_even(N), truncated_poly(D,T), noncommutative_odd");
        auto* file = sub->add_option("--algebra", cfg.algebra_path, "JSON algebra file");
        preset->excludes(file);
        sub->add_option("--field", cfg.field, "Q or F<p>");
        sub->add_option("--max-bar-length", cfg.max_bar_length, "truncate bar words (HH only)");
        if (with_range) {
            sub->add_option("--range", cfg.range, "homological degrees LO HI to report")->expected(2);
            sub->add_option("--format", cfg.format, "table, csv or json")
                ->check(CLI::IsMember({"table", "csv", "json"}));
        }
    };

    std::map<CLI::App*, Theory> theory_commands;
    const std::vector<std::tuple<std::string, Theory, std::string>> theories = {
        {"hh", Theory::HH, "Hochschild homology"},
        {"hc", Theory::HC, "cyclic homology (circle orbits)"},
        {"hcneg", Theory::HCneg, "negative cyclic homology (circle fixed points)"},
        {"hd", Theory::HD, "dihedral homology (O(2) orbits)"},
        {"hdneg", Theory::HDneg, "negative dihedral homology (O(2) fixed points)"},
        {"hrneg", Theory::HRneg, "negative reflexive homology (C2 fixed points)"},
    };
    for (const auto& [name, t, help] : theories) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, true);
        sub->add_option("--dump", cfg.dump_path, "also write the complex as JSON to PATH");
        if (t == Theory::HC || t == Theory::HD) sub->add_option("--weight-cap", cfg.weight_cap, "bar weight cap");
        theory_commands[sub] = t;
    }

    CLI::App* ss = app.add_subcommand("ss", "E1/E2 pages of the u-filtration on HC-");
    add_common(ss, true);
    ss->add_option("--page", cfg.page, "1 or 2");

    CLI::App* check = app.add_subcommand("check", "validate the algebra axioms");
    add_common(check, false);

    CLI::App* ids = app.add_subcommand("identities", "check the dihedral operator identities");
    add_common(ids, false);
    ids->add_option("--n-max", cfg.n_max, "largest simplicial degree");
    ids->add_option("--trials", cfg.trials, "random words per length when a length has more");
    ids->add_option("--seed", cfg.seed, "sampling seed");
    ids->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));

    CLI::App* dump = app.add_subcommand("dump-complex", "write a complex window as JSON");
    add_common(dump, true);
    dump->add_option("--theory", cfg.theory, "hh, hc, hcneg, hd, hdneg or hrneg")->required();
    dump->add_option("--dump", cfg.dump_path, "write to PATH instead of stdout");
    dump->add_option("--weight-cap", cfg.weight_cap, "bar weight cap for orbit theories");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        for (CLI::App* sub : app.get_subcommands()) {
            const bool field_given = sub->count("--field") > 0;
            if (auto it = theory_commands.find(sub); it != theory_commands.end()) {
                return run_theory(cfg, it->second, field_given);
            }
            if (sub == ss) return run_spectral(cfg, field_given);
            if (sub == check) return run_check(cfg, field_given);
            if (sub == ids) return run_identities(cfg, field_given);
            if (sub == dump) return run_dump(cfg, field_given);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: algebra fails validation\n" << e.report().to_string() << "\n";
        return kValidationFailure;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AlgebraParseError& e) {
        std::cerr << "error: algebra file, " << e.what() << "\n";
        return kUsage;
    } catch (const FinitenessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
