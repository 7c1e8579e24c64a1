#include "hopfren/cli.hpp"

#include "hopfren/checks.hpp"
#include "hopfren/forest.hpp"
#include "hopfren/hopf.hpp"
#include "hopfren/io.hpp"
#include "hopfren/quadrature.hpp"
#include "hopfren/toymodel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hopfren::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    throw UsageError("unknown output format '" + s + "' (expected text or json)");
}

// Applies the keys of a JSON config file; flags given on the command line are applied afterwards.
void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    try {
        if (j.contains("alphabet")) cfg.alphabet = Alphabet::parse(j["alphabet"].get<std::string>());
        if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
        if (j.contains("order")) cfg.order = j["order"].get<int>();
        if (j.contains("c")) cfg.c = j["c"].get<double>();
        if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
        if (j.contains("max_len")) cfg.max_len = j["max_len"].get<std::size_t>();
        if (j.contains("max_len_cap")) cfg.max_len_cap = j["max_len_cap"].get<std::size_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.max_len < 1) throw UsageError("--max-len must be at least 1");
    if (cfg.max_len > cfg.max_len_cap)
        throw UsageError("--max-len " + std::to_string(cfg.max_len) + " exceeds the safety cap " +
                         std::to_string(cfg.max_len_cap));
    if (cfg.order < 0) throw UsageError("--order must be nonnegative");
    if (cfg.c && !(*cfg.c >= 1.0)) throw UsageError("--c must be >= 1");
    if (cfg.eps && !(*cfg.eps > 0.0)) throw UsageError("--eps must be positive");
}

Word word_arg(const RunConfig& cfg) { return parse(cfg.word, cfg.alphabet); }

// ---------------------------------------------------------------------------
// Commands. Each returns an exit code and writes to `out`.

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    if (cfg.format == OutputFormat::Json) {
        out << json{{"word", w.text()}, {"length", w.length()}, {"irreducible", is_irreducible(w)}}.dump(2) << '\n';
    } else {
        out << w.text() << "\nlength: " << w.length() << "\nirreducible: " << (is_irreducible(w) ? "yes" : "no")
            << '\n';
    }
    return kExitOk;
}

int cmd_coproduct(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    HopfContext hopf;
    const Tensor2 delta = hopf.coproduct(w);
    if (cfg.format == OutputFormat::Json)
        out << json{{"command", "coproduct"}, {"word", w.text()}, {"terms", to_json(delta)}}.dump(2) << '\n';
    else
        out << to_text(delta);
    return kExitOk;
}

int cmd_antipode(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    HopfContext hopf;
    const LinComb s = hopf.antipode_left(w);
    if (cfg.format == OutputFormat::Json)
        out << json{{"command", "antipode"}, {"word", w.text()}, {"terms", to_json(s)}}.dump(2) << '\n';
    else
        out << to_text(s) << '\n';
    return kExitOk;
}

void emit_value(const RunConfig& cfg, std::ostream& out, const std::string& command, const std::string& label,
                const Word& w, const RegValue& value, json extra = json::object()) {
    const LaurentSeries series = expand(value, cfg.order);
    if (cfg.format == OutputFormat::Json) {
        json j{{"command", command}, {"word", w.text()}, {"value", to_json(value)},
               {"laurent", to_json(series)}, {"order", cfg.order}};
        j.update(extra);
        out << j.dump(2) << '\n';
    } else {
        out << label << '[' << w.text() << "] = " << to_string(value) << '\n';
        out << "Laurent: " << to_string(series) << '\n';
    }
}

int cmd_counterterm(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    ToyModel model;
    emit_value(cfg, out, "counterterm", "S_R", w, model.counterterm(w));
    return kExitOk;
}

int cmd_renormalize(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    ToyModel model;
    const RegValue value = model.renormalize(w);
    const LaurentSeries series = expand(value, std::max(cfg.order, 0));
    if (!series.pole_free()) {
        emit_value(cfg, out, "renormalize", "renormalized", w, value);
        return kExitFailure;
    }
    const LogPolynomial limit = series.coeff(0);

    json extra{{"limit", to_json(limit)}, {"pole_free", true}};
    if (cfg.c) {
        extra["c"] = *cfg.c;
        extra["numeric"] = limit.evaluate(std::log(*cfg.c));
    }
    emit_value(cfg, out, "renormalize", "renormalized", w, value, extra);
    if (cfg.format == OutputFormat::Text) {
        out << "limit ε→0: " << to_string(limit) << "   (L = ln c)\n";
        if (cfg.c) out << "value at c=" << format_double(*cfg.c) << ": " << format_double(limit.evaluate(std::log(*cfg.c))) << '\n';
    }
    return kExitOk;
}

int cmd_forest(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    const RegValue z = forest_formula(w);
    ToyModel model;
    const bool agrees = z == model.counterterm(w);
    emit_value(cfg, out, "forest", "Z", w, z, json{{"agrees_with_counterterm", agrees}});
    if (cfg.format == OutputFormat::Text) out << "agrees with S_R: " << (agrees ? "yes" : "no") << '\n';
    return agrees ? kExitOk : kExitFailure;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const Word w = word_arg(cfg);
    const double c = cfg.c.value_or(2.0);
    const double eps = cfg.eps.value_or(0.1);
    const double exact = phi(w).evaluate(c, eps);
    const double numeric = quadrature_oracle(w, c, eps);
    const double rel = exact == 0.0 ? std::abs(numeric) : std::abs(numeric - exact) / std::abs(exact);
    if (cfg.format == OutputFormat::Json) {
        out << json{{"command", "oracle"}, {"word", w.text()}, {"c", c}, {"eps", eps},
                    {"exact", exact}, {"quadrature", numeric}, {"relative_difference", rel}}.dump(2)
            << '\n';
    } else {
        out << "phi[" << w.text() << "] at c=" << format_double(c) << ", eps=" << format_double(eps) << '\n'
            << "exact:      " << format_double(exact) << '\n'
            << "quadrature: " << format_double(numeric) << '\n'
            << "rel. diff:  " << std::setprecision(3) << std::scientific << rel << '\n';
    }
    return rel <= 1e-6 ? kExitOk : kExitFailure;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    CheckOptions opts;
    opts.max_len = cfg.max_len;
    const std::size_t words = enumerate_words(cfg.alphabet, cfg.max_len).size();
    const std::vector<SuiteResult> results = run_checks(cfg.alphabet, opts);
    const bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });

    if (cfg.format == OutputFormat::Json) {
        json suites = json::array();
        for (const auto& r : results)
            suites.push_back({{"suite", r.name}, {"checked", r.checked}, {"failed", r.failed},
                              {"first_failure", r.first_failure}});
        out << json{{"command", "check"}, {"max_len", cfg.max_len}, {"words", words},
                    {"suites", suites}, {"passed", all}}.dump(2)
            << '\n';
    } else {
        out << "words: " << words << " (length <= " << cfg.max_len << ")\n";
        for (const auto& r : results) {
            out << std::left << std::setw(26) << r.name << " checked " << std::right << std::setw(5) << r.checked
                << "  failed " << r.failed;
            if (!r.passed()) out << "  first: " << r.first_failure;
            out << '\n';
        }
        out << (all ? "all suites pass" : "SUITE FAILURES") << '\n';
    }
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hopf algebra of renormalization on parenthesized words", "hopfren"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string alphabet_spec, format_name, config_path;
    int order = 4;
    double c = 0.0, eps = 0.0;
    std::size_t max_len = 4;
    std::uint64_t seed = 0;
    auto* alphabet_opt = app.add_option("--alphabet", alphabet_spec, "letters, e.g. x1,x2 or a:1,b:2");
    auto* format_opt = app.add_option("--format", format_name, "text | json");
    auto* order_opt = app.add_option("--order", order, "highest power of ε kept in Laurent expansions");
    auto* c_opt = app.add_option("--c", c, "scale c for numeric evaluation");
    auto* eps_opt = app.add_option("--eps", eps, "regulator value for the quadrature oracle");
    auto* max_len_opt = app.add_option("--max-len", max_len, "longest word enumerated by check");
    auto* seed_opt = app.add_option("--seed", seed, "reserved");
    app.add_option("--config", config_path, std::string("JSON config file (default: $") + kConfigEnv + ")");

    std::string word;
    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"parse", "canonicalize a word"},
        {"coproduct", "coproduct Δ of a word"},
        {"antipode", "antipode S of a word"},
        {"counterterm", "counter term S_R in the toy model"},
        {"renormalize", "renormalized toy value m(S_R⊗φ)Δ"},
        {"forest", "counter term from the forest formula"},
        {"oracle", "compare φ with nested quadrature"},
    };
    for (const auto& [name, help] : verbs) app.add_subcommand(name, help)->add_option("word", word, "word")->required();
    app.add_subcommand("check", "run the property suites over enumerated words");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    RunConfig cfg;
    try {
        if (config_path.empty()) {
            if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') config_path = env;
        }
        if (!config_path.empty()) apply_config_file(config_path, cfg);
        if (alphabet_opt->count() > 0) cfg.alphabet = Alphabet::parse(alphabet_spec);
        if (format_opt->count() > 0) cfg.format = parse_format(format_name);
        if (order_opt->count() > 0) cfg.order = order;
        if (c_opt->count() > 0) cfg.c = c;
        if (eps_opt->count() > 0) cfg.eps = eps;
        if (max_len_opt->count() > 0) cfg.max_len = max_len;
        if (seed_opt->count() > 0) cfg.seed = seed;
        validate(cfg);
    } catch (const UsageError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.word = word;

    try {
        if (cfg.command == "parse") return cmd_parse(cfg, out);
        if (cfg.command == "coproduct") return cmd_coproduct(cfg, out);
        if (cfg.command == "antipode") return cmd_antipode(cfg, out);
        if (cfg.command == "counterterm") return cmd_counterterm(cfg, out);
        if (cfg.command == "renormalize") return cmd_renormalize(cfg, out);
        if (cfg.command == "forest") return cmd_forest(cfg, out);
        if (cfg.command == "oracle") return cmd_oracle(cfg, out);
        if (cfg.command == "check") return cmd_check(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n' << "  " << cfg.word << '\n'
            << "  " << std::string(e.position(), ' ') << "^\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
}

}  // namespace hopfren::cli
