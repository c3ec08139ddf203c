#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "reflexa/reflexa.hpp"

using namespace reflexa;

namespace {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("REFLEXA_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw InputError("REFLEXA_BUDGET must be a positive integer");
    }
    return kDefaultBudget;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError("malformed " + what + " JSON: " + e.what());
    }
}

/// A ring argument is a corpus id, inline JSON, or a path to a JSON file.
RingSpec load_ring(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return RingSpec::from_json(parse_json(arg, "ring spec"));
    try {
        return corpus_ring_spec(arg);
    } catch (const InputError&) {
        return RingSpec::from_json(parse_json(read_file(arg), "ring spec"));
    }
}

/// A module argument is a builder name, inline JSON, or a JSON file path.
ModuleSpec load_module(const std::string& arg) {
    if (arg == "k" || arg == "m" || arg == "R" || arg == "omega") return ModuleSpec::named(arg);
    if (!arg.empty() && arg[0] == '{') return ModuleSpec::from_json(parse_json(arg, "module spec"));
    return ModuleSpec::from_json(parse_json(read_file(arg), "module spec"));
}

void emit(const Json& j, bool text, const std::vector<std::string>& text_lines) {
    if (text) {
        for (const auto& l : text_lines) std::cout << l << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

struct CmdOptions {
    std::string ring, module_arg;
    std::uint32_t bound = 6, steps = 8, depth = 8;
    std::uint64_t budget = 0, seed = kDefaultSeed;
    std::string filter = "*";
    bool text = false, json = false;
};

template <class K>
int cmd_ring(const RingSpec& spec, const CmdOptions& o) {
    auto A = build_algebra<K>(spec);
    Json rep;
    rep["input"] = spec.to_json();
    rep["input_hash"] = spec_hash(spec.to_json());
    Json rj = algebra_json(A);
    rj["classify"] = ring_report_json(classify_ring(A, o.bound));
    rep["ring"] = rj;
    emit(rep, o.text,
         {"length " + std::to_string(A->length()) + ", type " + std::to_string(A->type()) +
              ", mu(m) " + std::to_string(A->mu_m()) + ", loewy " + std::to_string(A->loewy()),
          std::string("gorenstein: ") + (A->gorenstein() ? "yes" : "no"),
          "betti growth certificate: " + A->bnsi_certificate().status_str() +
              (A->bnsi_certificate().rule.empty() ? "" : " (rule " + A->bnsi_certificate().rule + ")")});
    return 0;
}

template <class K>
int cmd_classify(const RingSpec& spec, const ModuleSpec& mspec, const CmdOptions& o) {
    auto A = build_algebra<K>(spec);
    auto M = build_module(A, mspec, o.budget);
    auto rep = classify(M, o.bound, o.budget);
    Json j;
    j["input"] = Json{{"ring", spec.to_json()}, {"module", mspec.to_json()}};
    j["input_hash"] = spec_hash(j["input"]);
    j["budget"] = o.budget;
    j["classify"] = class_report_json(rep);
    emit(j, o.text,
         {"l(M) = " + std::to_string(rep.length) + ", mu(M) = " + std::to_string(rep.mu),
          "free: " + rep.free.status_str(), "torsionless: " + rep.torsionless.status_str(),
          "weakly_reflexive: " + rep.weakly_reflexive.status_str(),
          "reflexive: " + rep.reflexive.status_str(),
          "totally_reflexive: " + rep.totally_reflexive.status_str(),
          "weakly_gorenstein: " + rep.weakly_gorenstein.status_str(),
          "skew_gorenstein: " + rep.skew_gorenstein.status_str()});
    return 0;
}

template <class K>
int cmd_resolve(const RingSpec& spec, const ModuleSpec& mspec, const CmdOptions& o) {
    auto A = build_algebra<K>(spec);
    auto M = build_module(A, mspec, o.budget);
    Resolution<K> res = min_resolution(M, o.steps, o.budget);
    ExtLengths<K> ext = ext_lengths(M, o.steps >= 2 ? o.steps - 1 : 1, o.budget);
    Json j;
    j["input"] = Json{{"ring", spec.to_json()}, {"module", mspec.to_json()}};
    j["input_hash"] = spec_hash(j["input"]);
    j["budget"] = o.budget;
    j["resolution"] = resolution_json(res, A);
    Json ej;
    ej["lengths"] = ext.lengths;
    ej["achieved"] = ext.achieved;
    ej["truncated"] = ext.truncated;
    j["ext"] = ej;
    j["betti_bounds"] = betti_bounds_json(betti_bound_checks(M, o.steps, o.budget));
    j["ext_closed_form"] = ext_closed_form_json(ext_closed_form_comparison(
        M, std::max<std::uint32_t>(o.steps >= 2 ? o.steps - 1 : 1, 2), o.budget));
    std::string betti_line = "betti:";
    for (auto b : res.betti) betti_line += " " + std::to_string(b);
    std::string ext_line = "ext lengths:";
    for (auto e : ext.lengths) ext_line += " " + std::to_string(e);
    emit(j, o.text, {betti_line, ext_line});
    return (res.truncated || ext.truncated) ? 3 : 0;
}

template <class K>
int cmd_tower(const RingSpec& spec, const ModuleSpec& mspec, const CmdOptions& o) {
    auto A = build_algebra<K>(spec);
    auto M = build_module(A, mspec, o.budget);
    TowerResult t = dual_tower(M, o.depth, o.budget);
    Json j;
    j["input"] = Json{{"ring", spec.to_json()}, {"module", mspec.to_json()}};
    j["input_hash"] = spec_hash(j["input"]);
    j["budget"] = o.budget;
    j["tower"] = tower_json(t);
    std::string lens = "lengths:";
    for (auto l : t.lengths) lens += " " + std::to_string(l);
    std::string rats = "ratios:";
    for (const auto& r : t.ratios) rats += " " + r.str();
    emit(j, o.text, {lens, rats, "trend: " + t.ratio_trend});
    return t.truncated ? 3 : 0;
}

int cmd_verify(const CmdOptions& o) {
    VerifyOptions vo;
    vo.filter = o.filter;
    vo.budget = o.budget;
    vo.seed = o.seed;
    VerifySummary sum = verify_paper(vo);
    if (o.json) {
        std::cout << sum.report.dump(2) << "\n";
    } else {
        for (const auto& out : sum.outcomes) {
            std::cout << (out.pass ? "PASS " : "FAIL ") << out.id;
            if (!out.pass) {
                if (!out.error.empty()) {
                    std::cout << " — error: " << out.error;
                } else if (out.report.contains("checks")) {
                    for (const auto& c : out.report["checks"])
                        if (!c["pass"].get<bool>())
                            std::cout << " — " << c["path"].dump() << " expected "
                                      << c["expected"].dump() << " got " << c["got"].dump();
                }
            }
            std::cout << "\n";
        }
        std::cout << (sum.all_pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return sum.all_pass ? 0 : 1;
}

template <class K>
int dispatch(const std::string& cmd, const CmdOptions& o) {
    RingSpec spec = load_ring(o.ring);
    if (cmd == "ring") return cmd_ring<K>(spec, o);
    ModuleSpec mspec = load_module(o.module_arg);
    if (cmd == "classify") return cmd_classify<K>(spec, mspec, o);
    if (cmd == "resolve") return cmd_resolve<K>(spec, mspec, o);
    if (cmd == "tower") return cmd_tower<K>(spec, mspec, o);
    throw InputError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact reflexivity/duality computations for modules over artinian local algebras"};
    app.require_subcommand(1);

    CmdOptions o;
    auto add_common = [&](CLI::App* c, bool needs_module) {
        c->add_option("--ring", o.ring,
                      needs_module ? "ring: corpus id, inline JSON, or JSON file"
                                   : "ring: corpus id, inline JSON, or JSON file")
            ->required();
        if (needs_module)
            c->add_option("--module", o.module_arg, "module: k|m|R|omega, inline JSON, or JSON file")
                ->required();
        c->add_option("--budget", o.budget, "dimension budget (default 10000 or REFLEXA_BUDGET)");
        c->add_flag("--text", o.text, "human-readable output");
        c->add_flag("--json", o.json, "JSON output (default)");
    };

    auto* ring = app.add_subcommand("ring", "invariants and certificates of a quotient algebra");
    add_common(ring, false);
    ring->add_option("--bound", o.bound, "Ext scan bound (default 6)");

    auto* classify_cmd = app.add_subcommand("classify", "tri-state reflexivity classification");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--bound", o.bound, "Ext scan bound (default 6)");

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution, Betti and Ext data");
    add_common(resolve, true);
    resolve->add_option("--steps", o.steps, "resolution steps (default 8)");

    auto* tower = app.add_subcommand("tower", "iterated dual lengths with exact ratios");
    add_common(tower, true);
    tower->add_option("--depth", o.depth, "tower depth (default 8)");

    auto* verify = app.add_subcommand("verify-paper", "run the built-in verification corpus");
    verify->add_option("--filter", o.filter, "glob over entry ids (default *)");
    verify->add_option("--budget", o.budget, "dimension budget (default 10000 or REFLEXA_BUDGET)");
    verify->add_option("--seed", o.seed, "seed for the randomized property entries");
    verify->add_flag("--text", o.text, "per-entry pass/fail lines (default)");
    verify->add_flag("--json", o.json, "full JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (o.budget == 0) o.budget = default_budget();
        if (verify->parsed()) return cmd_verify(o);
        std::string cmd = app.get_subcommands().front()->get_name();
        RingSpec spec = load_ring(o.ring);
        if (spec.rational_field) return dispatch<Rat>(cmd, o);
        return dispatch<Fp>(cmd, o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotFiniteDimensional& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
