// entcat command-line tool. Talks to the library exclusively through the C
// API in entcat/entcat.h.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (not
// majorized, no catalyst, gate-pruned), 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entcat/entcat.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(entcat_status s, const std::string& context) {
    if (s != ENTCAT_OK) {
        throw InputError(context + ": " + entcat_status_name(s) + ": " + entcat_last_error());
    }
}

struct SpectrumDeleter {
    void operator()(entcat_spectrum* s) const { entcat_spectrum_destroy(s); }
};
struct SearchDeleter {
    void operator()(entcat_search_result* r) const { entcat_search_result_destroy(r); }
};
struct EcpDeleter {
    void operator()(entcat_ecp* d) const { entcat_ecp_destroy(d); }
};
struct LandscapeDeleter {
    void operator()(entcat_landscape* l) const { entcat_landscape_destroy(l); }
};

using SpectrumPtr = std::unique_ptr<entcat_spectrum, SpectrumDeleter>;
using SearchPtr = std::unique_ptr<entcat_search_result, SearchDeleter>;
using EcpPtr = std::unique_ptr<entcat_ecp, EcpDeleter>;
using LandscapePtr = std::unique_ptr<entcat_landscape, LandscapeDeleter>;

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// Stored as the double nearest the 9-significant-digit text, so the JSON
// dump prints exactly those digits.
double g9(double v) { return std::strtod(format_g9(v).c_str(), nullptr); }

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpectrumPtr load_spectrum(const std::string& path, bool normalize) {
    const std::string text = read_input(path);
    entcat_spectrum* raw = nullptr;
    check(entcat_spectrum_parse_json(text.c_str(), normalize ? 1 : 0, &raw), path);
    return SpectrumPtr(raw);
}

std::vector<std::string> load_literals(const std::string& path) {
    const std::string text = read_input(path);
    std::size_t needed = 0;
    entcat_json_literals(text.c_str(), nullptr, 0, &needed);
    std::string buf(needed, '\0');
    check(entcat_json_literals(text.c_str(), buf.data(), buf.size(), &needed), path);
    buf.resize(needed - 1);
    std::vector<std::string> out;
    std::istringstream lines(buf);
    for (std::string line; std::getline(lines, line);) out.push_back(line);
    return out;
}

std::vector<double> coefficients(const entcat_spectrum* s) {
    std::vector<double> v(entcat_spectrum_size(s));
    check(entcat_spectrum_coefficients(s, v.data(), v.size()), "coefficients");
    return v;
}

Json spectrum_json(const entcat_spectrum* s) {
    Json arr = Json::array();
    for (double v : coefficients(s)) arr.push_back(g9(v));
    return arr;
}

SpectrumPtr tensor(const entcat_spectrum* a, const entcat_spectrum* b) {
    entcat_spectrum* raw = nullptr;
    check(entcat_tensor_sorted(a, b, &raw), "tensor product");
    return SpectrumPtr(raw);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

struct Options {
    std::string source, target, state, catalyst, out = "-";
    std::string format = "json";
    std::size_t dim = 2;
    std::optional<double> grid_step;
    std::size_t steps = 100;
    bool refine = false;
    bool normalize = false;
    bool exact = false;
    bool parallel = false;
    bool no_gates = false;
    bool collect = false;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw InputError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const Options& o, const Json& doc, const std::string& plain) {
    Output out(o.out);
    if (o.format == "plain") {
        out.stream() << plain << '\n';
    } else {
        out.stream() << doc.dump() << '\n';
    }
}

int run_check(const Options& o) {
    bool majorized = false;
    Json doc{{"command", "check"}};
    if (o.exact) {
        const auto x = load_literals(o.source), y = load_literals(o.target);
        const auto xc = c_strings(x), yc = c_strings(y);
        int m = 0;
        check(entcat_exact_check_majorization(xc.data(), xc.size(), yc.data(), yc.size(), &m), "check");
        majorized = m != 0;
        doc["mode"] = "exact";
    } else {
        const auto x = load_spectrum(o.source, o.normalize), y = load_spectrum(o.target, o.normalize);
        int m = 0;
        check(entcat_check_majorization(x.get(), y.get(), &m), "check");
        majorized = m != 0;
        doc["mode"] = "float";
    }
    doc["majorized"] = majorized;
    emit(o, doc, majorized ? "majorized" : "not majorized");
    return majorized ? kExitOk : kExitNegative;
}

int run_pmax(const Options& o) {
    Json doc{{"command", "pmax"}};
    if (o.exact) {
        if (!o.catalyst.empty()) throw InputError("--exact does not combine with --catalyst");
        const auto x = load_literals(o.source), y = load_literals(o.target);
        const auto xc = c_strings(x), yc = c_strings(y);
        char buf[4096];
        check(entcat_exact_p_max(xc.data(), xc.size(), yc.data(), yc.size(), buf, sizeof buf), "pmax");
        doc["mode"] = "exact";
        doc["p_max_exact"] = buf;
        emit(o, doc, buf);
        return kExitOk;
    }
    auto x = load_spectrum(o.source, o.normalize);
    auto y = load_spectrum(o.target, o.normalize);
    if (!o.catalyst.empty()) {
        const auto c = load_spectrum(o.catalyst, o.normalize);
        x = tensor(x.get(), c.get());
        y = tensor(y.get(), c.get());
    }
    double p = 0.0;
    check(entcat_p_max(x.get(), y.get(), &p), "pmax");
    doc["mode"] = "float";
    doc["p_max"] = g9(p);
    emit(o, doc, format_g9(p));
    return kExitOk;
}

Json violation(std::size_t v) { return v == 0 ? Json(nullptr) : Json(v); }

int run_classify(const Options& o) {
    entcat_classification c{};
    if (o.exact) {
        const auto x = load_literals(o.source), y = load_literals(o.target);
        const auto xc = c_strings(x), yc = c_strings(y);
        check(entcat_exact_classify_pair(xc.data(), xc.size(), yc.data(), yc.size(), &c), "classify");
    } else {
        const auto x = load_spectrum(o.source, o.normalize), y = load_spectrum(o.target, o.normalize);
        check(entcat_classify_pair(x.get(), y.get(), &c), "classify");
    }
    Json doc{{"command", "classify"},
             {"verdict", entcat_verdict_name(c.verdict)},
             {"forward_violation", violation(c.forward_violation)},
             {"backward_violation", violation(c.backward_violation)}};
    emit(o, doc, entcat_verdict_name(c.verdict));
    return kExitOk;
}

int run_search(const Options& o, bool boost) {
    const auto x = load_spectrum(o.source, o.normalize);
    const auto y = load_spectrum(o.target, o.normalize);
    entcat_search_options opts;
    entcat_search_options_default(&opts);
    opts.dim = o.dim;
    opts.grid_step = o.grid_step.value_or(o.dim == 2 ? 1e-3 : o.dim == 3 ? 5e-3 : 1e-2);
    opts.refine = o.refine ? 1 : 0;
    opts.apply_gates = o.no_gates ? 0 : 1;
    opts.collect_feasible = o.collect ? 1 : 0;
    opts.parallel = o.parallel ? 1 : 0;

    entcat_search_result* raw = nullptr;
    check(boost ? entcat_find_boost_catalyst(x.get(), y.get(), &opts, &raw)
                : entcat_find_deterministic_catalyst(x.get(), y.get(), &opts, &raw),
          boost ? "boost" : "find-catalyst");
    const SearchPtr r(raw);

    Json gates = Json::array();
    for (std::size_t i = 0; i < entcat_search_gate_count(r.get()); ++i) {
        gates.push_back(entcat_search_gate(r.get(), i));
    }
    const bool found = entcat_search_found(r.get()) != 0;
    const bool pruned = entcat_search_pruned(r.get()) != 0;

    Json doc{{"command", boost ? "boost" : "find-catalyst"},
             {"found", found},
             {"pruned", pruned},
             {"gate", pruned ? gates.front() : Json(nullptr)},
             {"gate_report", gates}};
    entcat_spectrum* cat = nullptr;
    if (entcat_search_catalyst(r.get(), &cat) == ENTCAT_OK) {
        const SpectrumPtr c(cat);
        doc["catalyst"] = spectrum_json(c.get());
    } else {
        doc["catalyst"] = nullptr;
    }
    doc["achieved_probability"] = g9(entcat_search_achieved(r.get()));
    doc["baseline_probability"] = g9(entcat_search_baseline(r.get()));
    doc["evaluations"] = entcat_search_evaluations(r.get());
    doc["effective_step"] = g9(entcat_search_effective_step(r.get()));
    if (o.collect) {
        Json feasible = Json::array();
        for (std::size_t i = 0; i < entcat_search_feasible_count(r.get()); ++i) {
            entcat_spectrum* f = nullptr;
            check(entcat_search_feasible(r.get(), i, &f), "feasible");
            const SpectrumPtr fp(f);
            feasible.push_back(spectrum_json(fp.get()));
        }
        doc["feasible"] = feasible;
    }

    std::string plain = found ? "found" : (pruned ? "pruned " + gates.front().get<std::string>()
                                                  : "not found");
    plain += " achieved=" + format_g9(entcat_search_achieved(r.get()));
    emit(o, doc, plain);

    if (!found || pruned) return kExitNegative;
    return kExitOk;
}

int run_ecp(const Options& o) {
    const auto x = load_spectrum(o.state, o.normalize);
    entcat_ecp* raw = nullptr;
    if (o.catalyst.empty()) {
        check(entcat_optimal_uncatalysed(x.get(), &raw), "ecp");
    } else {
        const auto c = load_spectrum(o.catalyst, o.normalize);
        check(entcat_optimal_catalysed(x.get(), c.get(), &raw), "ecp");
    }
    const EcpPtr d(raw);
    std::vector<double> p(entcat_ecp_size(d.get()));
    check(entcat_ecp_probabilities(d.get(), p.data(), p.size()), "ecp");
    Json probs = Json::array();
    std::string plain;
    for (double v : p) {
        probs.push_back(g9(v));
        plain += (plain.empty() ? "" : " ") + format_g9(v);
    }
    Json doc{{"command", "ecp"},
             {"probabilities", probs},
             {"E_nats", g9(entcat_ecp_nats(d.get()))},
             {"E_ebits", g9(entcat_ecp_ebits(d.get()))}};
    emit(o, doc, plain + "\nE_nats=" + format_g9(entcat_ecp_nats(d.get())));
    return kExitOk;
}

int run_bounds(const Options& o) {
    const auto x = load_spectrum(o.state, o.normalize);
    entcat_bounds b{};
    check(entcat_concentration_bounds(x.get(), &b), "bounds");
    const char* binding = b.binding == ENTCAT_BINDING_B ? "B" : "entropy";
    Json doc{{"command", "bounds"},
             {"B_nats", g9(b.bound_b_nats)},
             {"entropy_nats", g9(b.entropy_nats)},
             {"binding", binding}};
    emit(o, doc,
         "B_nats=" + format_g9(b.bound_b_nats) + " entropy_nats=" + format_g9(b.entropy_nats) +
             " binding=" + binding);
    return kExitOk;
}

int run_landscape(const Options& o) {
    const auto x = load_spectrum(o.state, o.normalize);
    entcat_landscape* raw = nullptr;
    check(entcat_landscape_compute(x.get(), o.steps, o.parallel ? 1 : 0, &raw), "landscape");
    const LandscapePtr l(raw);
    Output out(o.out);
    if (o.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < entcat_landscape_size(l.get()); ++i) {
            entcat_landscape_row r{};
            check(entcat_landscape_row_at(l.get(), i, &r), "landscape");
            rows.push_back(Json{{"beta1", g9(r.beta1)},
                                {"beta2", g9(r.beta2)},
                                {"E_nats", g9(r.nats)},
                                {"E_ebits", g9(r.ebits)}});
        }
        out.stream() << Json{{"command", "landscape"}, {"rows", rows}}.dump() << '\n';
        return kExitOk;
    }
    std::size_t needed = 0;
    entcat_landscape_csv(l.get(), nullptr, 0, &needed);
    std::string csv(needed, '\0');
    check(entcat_landscape_csv(l.get(), csv.data(), csv.size(), &needed), "landscape");
    csv.resize(needed - 1);
    out.stream() << csv;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorization, catalysis and entanglement concentration for pure bipartite states"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "plain", "csv"}));
        sub->add_option("--out", o.out, "Output file, '-' for standard output");
        sub->add_flag("--normalize", o.normalize, "Rescale input coefficients to sum to 1");
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--source", o.source, "Source spectrum JSON ('-' for stdin)")->required();
        sub->add_option("--target", o.target, "Target spectrum JSON ('-' for stdin)")->required();
        add_common(sub);
    };
    auto add_search = [&](CLI::App* sub) {
        add_pair(sub);
        sub->add_option("--dim", o.dim, "Catalyst Schmidt rank")->check(CLI::Range(2, 5));
        sub->add_option("--grid-step", o.grid_step, "Simplex grid pitch")
            ->check(CLI::Range(1e-9, 0.01));
        sub->add_flag("--no-gates", o.no_gates, "Skip the necessary-condition gates");
        sub->add_flag("--parallel", o.parallel, "Evaluate candidates on all cores");
    };

    auto* check_cmd = app.add_subcommand("check", "Deterministic convertibility (majorization)");
    add_pair(check_cmd);
    check_cmd->add_flag("--exact", o.exact, "Exact rational arithmetic");

    auto* pmax_cmd = app.add_subcommand("pmax", "Optimal conversion probability");
    add_pair(pmax_cmd);
    pmax_cmd->add_option("--catalyst", o.catalyst, "Catalyst spectrum JSON");
    pmax_cmd->add_flag("--exact", o.exact, "Exact rational arithmetic");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a source/target pair");
    add_pair(classify_cmd);
    classify_cmd->add_flag("--exact", o.exact, "Exact rational arithmetic");

    auto* find_cmd = app.add_subcommand("find-catalyst", "Search for a deterministic catalyst");
    add_search(find_cmd);
    find_cmd->add_flag("--collect", o.collect, "Report every feasible grid catalyst");

    auto* boost_cmd = app.add_subcommand("boost", "Search for a probability-boosting catalyst");
    add_search(boost_cmd);
    boost_cmd->add_flag("--refine", o.refine, "Refine the best grid point by pattern search");

    auto* ecp_cmd = app.add_subcommand("ecp", "Optimal entanglement concentration");
    ecp_cmd->add_option("--state", o.state, "State spectrum JSON")->required();
    ecp_cmd->add_option("--catalyst", o.catalyst, "Catalyst spectrum JSON");
    add_common(ecp_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Upper bounds on concentrated entanglement");
    bounds_cmd->add_option("--state", o.state, "State spectrum JSON")->required();
    add_common(bounds_cmd);

    auto* land_cmd = app.add_subcommand("landscape", "Catalysed yield over two-level catalysts");
    land_cmd->add_option("--state", o.state, "State spectrum JSON")->required();
    land_cmd->add_option("--steps", o.steps, "Number of beta_1 intervals")->check(CLI::PositiveNumber);
    land_cmd->add_flag("--parallel", o.parallel, "Solve grid points on all cores");
    add_common(land_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*land_cmd) {
            if (land_cmd->count("--format") == 0 || o.format == "plain") o.format = "csv";
            return run_landscape(o);
        }
        if (o.format == "csv") throw InputError("csv output is only available for landscape");
        if (*check_cmd) return run_check(o);
        if (*pmax_cmd) return run_pmax(o);
        if (*classify_cmd) return run_classify(o);
        if (*find_cmd) return run_search(o, false);
        if (*boost_cmd) return run_search(o, true);
        if (*ecp_cmd) return run_ecp(o);
        if (*bounds_cmd) return run_bounds(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
