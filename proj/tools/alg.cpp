#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ualg/corpus.hpp"
#include "ualg/decompose.hpp"
#include "ualg/errors.hpp"
#include "ualg/hom.hpp"
#include "ualg/json_io.hpp"
#include "ualg/varieties.hpp"

using namespace ualg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::vector<std::string> algebra_paths;
    std::string context_path;
    std::string hom_path;
    bool json = false;
    int max_size = default_max_size();
    std::string out_path;
    bool serial = false;
};

void add_common(CLI::App* cmd, Options& o, bool with_hom = false) {
    cmd->add_option("--algebra", o.algebra_paths,
                    "algebra JSON file or corpus:KEY (repeatable)");
    cmd->add_option("--context", o.context_path, "context JSON file or corpus:KEY");
    if (with_hom) cmd->add_option("--hom", o.hom_path, "homomorphism JSON file or corpus:KEY");
    cmd->add_flag("--json", o.json, "emit JSON instead of a table");
    cmd->add_option("--max-size", o.max_size,
                    "size bound for congruence-lattice enumeration (env ALG_MAX_SIZE)");
    cmd->add_option("--out", o.out_path, "write the report to a file instead of stdout");
    cmd->add_flag("--serial", o.serial, "disable the OpenMP kernels");
}

void apply_common(const Options& o) {
    if (o.serial) set_default_exec(Exec::serial);
    if (o.max_size > default_max_size())
        std::cerr << "warning: size bound raised to " << o.max_size
                  << "; congruence enumeration cost grows steeply with it\n";
}

bool is_corpus_ref(const std::string& path, std::string& key) {
    if (path.rfind("corpus:", 0) != 0) return false;
    key = path.substr(7);
    return true;
}

FiniteAlgebra load_algebra(const std::string& path) {
    std::string key;
    if (is_corpus_ref(path, key)) {
        auto a = corpus::find_algebra(key);
        if (!a) throw Error("unknown corpus algebra: " + key);
        return *a;
    }
    return algebra_from_json(load_json_file(path));
}

corpus::ContextSpec load_context_spec(const std::string& path) {
    if (path.empty()) throw Error("--context is required for this command");
    std::string key;
    if (is_corpus_ref(path, key)) {
        auto c = corpus::find_context(key);
        if (!c) throw Error("unknown corpus context: " + key);
        return *c;
    }
    return context_spec_from_json(load_json_file(path));
}

Homomorphism load_hom(const std::string& path, const std::vector<FiniteAlgebra>& loaded) {
    if (path.empty()) throw Error("--hom is required for this command");
    std::string key;
    if (is_corpus_ref(path, key)) {
        auto h = corpus::find_hom(key);
        if (!h) throw Error("unknown corpus homomorphism: " + key);
        return *h;
    }
    AlgebraResolver resolve = [&](const std::string& name) -> std::optional<FiniteAlgebra> {
        for (const auto& a : loaded)
            if (a.name == name) return a;
        return corpus::find_algebra(name);
    };
    return hom_from_json(load_json_file(path), resolve);
}

std::vector<FiniteAlgebra> load_algebras(const Options& o, std::size_t at_least = 1) {
    std::vector<FiniteAlgebra> out;
    for (const auto& p : o.algebra_paths) out.push_back(load_algebra(p));
    if (out.size() < at_least)
        throw Error("this command needs at least " + std::to_string(at_least) +
                    " --algebra argument(s)");
    return out;
}

void emit(const Options& o, const Json& j, const std::string& human) {
    const std::string text = o.json ? j.dump(2) + "\n" : human;
    if (o.out_path.empty())
        std::cout << text;
    else
        write_text_file(o.out_path, text);
}

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string blocks_str(const Partition& p) {
    std::string s;
    for (const auto& b : p.blocks()) {
        s += "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(b[i]);
        }
        s += "}";
    }
    return s;
}

std::string env_str(const Environment& env) {
    std::string s;
    for (const auto& [k, v] : env) {
        if (!s.empty()) s += ", ";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

std::string verdict_str(const Verdict& v) {
    std::string s = v.holds ? "HOLDS" : "FAILS";
    s += "  [" + v.scope + "]\n";
    if (v.counterexample)
        s += "  counterexample on " + v.counterexample->algebra + ": " +
             env_str(v.counterexample->env) + "  (" + v.counterexample->note + ")\n";
    return s;
}

int run_verdict(const Options& o, const Verdict& v, const std::string& title) {
    emit(o, to_json(v), title + ": " + verdict_str(v));
    return v.holds ? kExitPass : kExitCheckFailed;
}

PierceContext context_for(const Options& o, const Signature& sig) {
    return corpus::materialize(load_context_spec(o.context_path), sig);
}

int cmd_show(const Options& o) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    std::string s = a.name + ": " + std::to_string(a.size) + " elements\n";
    for (const auto& t : a.ops) {
        s += "  " + t.symbol + "/" + std::to_string(t.arity) + ":";
        for (int v : t.table) s += " " + std::to_string(v);
        s += "\n";
    }
    emit(o, to_json(a), s);
    return kExitPass;
}

int cmd_congruences(const Options& o) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    auto cons = all_congruences(a, o.max_size);
    Json j{{"algebra", a.name}, {"count", cons.size()}};
    Json arr = Json::array();
    std::string s = a.name + ": " + std::to_string(cons.size()) + " congruences\n";
    for (const auto& c : cons) {
        arr.push_back(c.blocks());
        s += "  " + blocks_str(c) + "\n";
    }
    j["congruences"] = std::move(arr);
    emit(o, j, s);
    return kExitPass;
}

int cmd_central(const Options& o) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    PierceContext ctx = context_for(o, a.sig);
    CentralReport r = central_elements(a, ctx, o.max_size);
    std::string s = "Z(" + a.name + "): " + std::to_string(r.elements.size()) + " elements\n";
    for (const auto& p : r.pairs) s += "  " + tuple_str(p.e) + " <> " + tuple_str(p.f) + "\n";
    s += "atoms:";
    for (int i : r.atoms) s += " " + tuple_str(r.elements[static_cast<std::size_t>(i)]);
    s += "\n";
    emit(o, to_json(r), s);
    return kExitPass;
}

int cmd_decompose(const Options& o) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    DecompositionCertificate cert = decompose(a, o.max_size);
    std::string s = a.name + " = product of " + std::to_string(cert.factors.size()) +
                    " directly indecomposable factor(s)\n";
    for (const auto& f : cert.factors)
        s += "  " + f.name + ": " + std::to_string(f.size) + " elements\n";
    emit(o, to_json(cert), s);
    return kExitPass;
}

int cmd_stalks(const Options& o) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    auto stalks = pierce_stalks(a, o.max_size);
    Json arr = Json::array();
    std::string s = a.name + ": " + std::to_string(stalks.size()) + " Pierce stalk(s)\n";
    for (const auto& f : stalks) {
        arr.push_back(to_json(f));
        s += "  " + f.name + ": " + std::to_string(f.size) + " elements\n";
    }
    emit(o, arr, s);
    return kExitPass;
}

int cmd_check_pierce(const Options& o) {
    auto algs = load_algebras(o);
    PierceContext ctx = context_for(o, algs[0].sig);
    GeneratorSet gens{"cli", algs};
    return run_verdict(o, verify_pierce(gens, ctx), "pierce identities");
}

int cmd_check_short(const Options& o) {
    auto algs = load_algebras(o);
    PierceContext ctx = context_for(o, algs[0].sig);
    GeneratorSet gens{"cli", algs};
    return run_verdict(o, verify_short(gens, ctx), "short decomposition identities");
}

int cmd_check_shell(const Options& o, const std::string& shell_path) {
    auto algs = load_algebras(o);
    PierceContext ctx = context_for(o, algs[0].sig);
    Json j = load_json_file(shell_path);
    ShellTerms st;
    for (const auto& s : j.at("f_terms").get<std::vector<std::string>>())
        st.f_terms.push_back(parse_term(s, algs[0].sig));
    for (const auto& s : j.at("g_terms").get<std::vector<std::string>>())
        st.g_terms.push_back(parse_term(s, algs[0].sig));
    GeneratorSet gens{"cli", algs};
    return run_verdict(o, verify_shell(gens, ctx.base, st), "shell identities");
}

int cmd_check_discriminator(const Options& o, const std::string& term_text) {
    FiniteAlgebra a = load_algebra(o.algebra_paths.at(0));
    Term t = parse_term(term_text, a.sig);
    return run_verdict(o, verify_discriminator(a, t), "discriminator law");
}

int cmd_check_hom(const Options& o, const std::string& mode) {
    auto loaded = std::vector<FiniteAlgebra>{};
    for (const auto& p : o.algebra_paths) loaded.push_back(load_algebra(p));
    Homomorphism h = load_hom(o.hom_path, loaded);
    PierceContext ctx = context_for(o, h.source.sig);
    PreservationReport r = mode == "central"
                               ? hom_preserves_central(h, ctx, o.max_size)
                               : hom_preserves_complementary(h, ctx, o.max_size);
    std::string s = h.name + " preserves " + mode + " central elements: " +
                    (r.preserved ? "yes" : "no") + "\n";
    for (const auto& e : r.central_witnesses) s += "  witness " + tuple_str(e) + "\n";
    for (const auto& p : r.pair_witnesses)
        s += "  witness pair " + tuple_str(p.e) + " <> " + tuple_str(p.f) + "\n";
    emit(o, to_json(r), s);
    return r.preserved ? kExitPass : kExitCheckFailed;
}

int cmd_check_fhp(const Options& o) {
    auto algs = load_algebras(o, 2);
    if (algs.size() != 2) throw Error("check-fhp needs exactly two --algebra arguments");
    auto bad = check_fhp_pair(algs[0], algs[1], o.max_size);
    Json j{{"a", algs[0].name}, {"b", algs[1].name}, {"fhp", !bad.has_value()}};
    j["failure"] = bad ? Json(bad->blocks()) : Json(nullptr);
    std::string s = algs[0].name + " x " + algs[1].name + ": ";
    s += bad ? "congruence is not a product congruence: " + blocks_str(*bad) + "\n"
             : "every product congruence factors\n";
    emit(o, j, s);
    return bad ? kExitCheckFailed : kExitPass;
}

int cmd_report(const Options& o, const std::string& suite, bool enumerate_homs) {
    GeneratorSet gens;
    std::vector<Homomorphism> homs;
    corpus::ContextSpec spec;

    if (!suite.empty()) {
        if (suite == "l01") {
            gens = {"l01", {*corpus::find_algebra("chain2"), *corpus::find_algebra("lat2x2"),
                            *corpus::find_algebra("lat2x2x2"), *corpus::find_algebra("chain3")}};
            spec = corpus::l01_context();
            enumerate_homs = true;
        } else if (suite == "semilattice") {
            gens = {"semilattice",
                    {*corpus::find_algebra("slcube1"), *corpus::find_algebra("slcube2"),
                     *corpus::find_algebra("slcube3")}};
            spec = corpus::semilattice_context();
            homs.push_back(corpus::alpha_hom());
        } else if (suite == "bounded-lattice") {
            gens = {"bounded-lattice",
                    {*corpus::find_algebra("lat2x2"), *corpus::find_algebra("m3")}};
            spec = corpus::l01_context();
            homs.push_back(corpus::inclusion_c_into_d());
        } else {
            throw Error("unknown suite: " + suite +
                        " (expected l01, semilattice or bounded-lattice)");
        }
    } else {
        gens = {"cli", load_algebras(o)};
        spec = load_context_spec(o.context_path);
        if (!o.hom_path.empty()) homs.push_back(load_hom(o.hom_path, gens.algebras));
    }

    if (enumerate_homs)
        for (const auto& a : gens.algebras)
            for (const auto& b : gens.algebras) {
                if (a.size > 8 || b.size > 8) continue;
                for (auto& h : enumerate_homomorphisms(a, b)) {
                    h.name = a.name + "->" + b.name + "#" + h.name;
                    homs.push_back(std::move(h));
                }
            }

    PierceContext ctx = corpus::materialize(spec, gens.algebras.at(0).sig);
    EvidenceReport r = coextensivity_report(gens, ctx, homs, o.max_size);

    std::string s = "coextensivity evidence for " + r.suite + "\n";
    s += "  pierce identities: ";
    s += !r.pierce_applicable ? "skipped (no decomposition term)\n"
                              : (r.pierce_identities.holds ? "pass\n" : "FAIL\n");
    auto section = [&](const char* label, bool ok, const std::vector<AlgebraCheck>& cs) {
        s += std::string("  ") + label + ": " + (ok ? "pass" : "FAIL") + "\n";
        for (const auto& c : cs)
            s += "    " + c.algebra + ": " + (c.ok ? "ok" : "FAIL") + " (" + c.detail + ")\n";
    };
    section("stalks directly indecomposable", r.stalks_ok, r.stalks_di);
    section("subalgebras of DI members", r.subalgebras_ok, r.subalgebras_di);
    s += "  stability (" + std::to_string(r.stability.size()) +
         " homomorphism(s)): " + (r.stability_ok ? "pass" : "FAIL") + "\n";
    for (const auto& a : r.stability) {
        if (a.central_ok && a.complementary_ok) continue;
        s += "    " + a.name + ": central " + (a.central_ok ? "ok" : "FAIL") +
             ", complementary " + (a.complementary_ok ? "ok" : "FAIL");
        if (!a.central_witnesses.empty())
            s += ", witness " + tuple_str(a.central_witnesses.front());
        if (!a.pair_witnesses.empty())
            s += ", witness pair " + tuple_str(a.pair_witnesses.front().e) + " <> " +
                 tuple_str(a.pair_witnesses.front().f);
        s += "\n";
    }
    s += "  permutability (informational):";
    for (const auto& c : r.permutability) s += " " + c.algebra + "=" + (c.ok ? "yes" : "no");
    s += "\n  fhp samples (informational):";
    for (const auto& f : r.fhp_samples)
        s += " " + f.a + "x" + f.b + "=" + (f.product_ok ? "ok" : "FAIL");
    s += "\n  required checks: ";
    s += r.required_pass() ? "ALL PASS\n" : "FAILURES PRESENT\n";
    emit(o, to_json(r), s);
    return r.required_pass() ? kExitPass : kExitCheckFailed;
}

int cmd_corpus(const Options& o, const std::string& action, const std::string& key) {
    if (action == "list") {
        std::string s;
        Json arr = Json::array();
        for (const auto& e : corpus::list_entries()) {
            arr.push_back({{"key", e.key}, {"kind", e.kind}, {"summary", e.summary}});
            s += e.key + "  [" + e.kind + "]  " + e.summary + "\n";
        }
        emit(o, arr, s);
        return kExitPass;
    }
    if (action == "emit") {
        if (auto a = corpus::find_algebra(key)) {
            emit(o, to_json(*a), to_json(*a).dump(2) + "\n");
            return kExitPass;
        }
        if (auto h = corpus::find_hom(key)) {
            emit(o, to_json(*h), to_json(*h).dump(2) + "\n");
            return kExitPass;
        }
        if (auto c = corpus::find_context(key)) {
            emit(o, to_json(*c), to_json(*c).dump(2) + "\n");
            return kExitPass;
        }
        throw Error("unknown corpus key: " + key);
    }
    throw Error("corpus action must be list or emit");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite universal-algebra engine: central elements, factor congruences, "
                 "direct decompositions"};
    app.require_subcommand(1);
    Options o;

    auto* show = app.add_subcommand("show", "print an algebra");
    add_common(show, o);
    auto* congruences = app.add_subcommand("congruences", "enumerate the congruence lattice");
    add_common(congruences, o);
    auto* central = app.add_subcommand("central", "central elements and Boolean structure");
    add_common(central, o);
    auto* decomp = app.add_subcommand("decompose", "direct-product decomposition certificate");
    add_common(decomp, o);
    auto* stalks = app.add_subcommand("stalks", "Pierce stalks");
    add_common(stalks, o);
    auto* pierce = app.add_subcommand("check-pierce", "verify the decomposition-term identities");
    add_common(pierce, o);
    auto* shortc = app.add_subcommand("check-short", "verify the short decomposition identities");
    add_common(shortc, o);

    std::string shell_path;
    auto* shell = app.add_subcommand("check-shell", "verify the shell identities");
    add_common(shell, o);
    shell->add_option("--shell", shell_path, "JSON file with f_terms and g_terms")->required();

    std::string term_text;
    auto* disc = app.add_subcommand("check-discriminator", "verify the discriminator law");
    add_common(disc, o);
    disc->add_option("--term", term_text, "ternary term over x,y,z")->required();

    std::string mode = "complementary";
    auto* hom = app.add_subcommand("check-hom", "audit central-element preservation");
    add_common(hom, o, true);
    hom->add_option("--mode", mode, "central | complementary")
        ->check(CLI::IsMember({"central", "complementary"}));

    auto* fhp = app.add_subcommand("check-fhp", "product-congruence check on A x B");
    add_common(fhp, o);

    std::string suite;
    bool enumerate_homs = false;
    auto* report = app.add_subcommand("report", "aggregate coextensivity evidence");
    add_common(report, o, true);
    report->add_option("--suite", suite, "l01 | semilattice | bounded-lattice");
    report->add_flag("--enumerate-homs", enumerate_homs,
                     "audit every homomorphism between the generators (size <= 8)");

    std::string corpus_action, corpus_key;
    auto* corp = app.add_subcommand("corpus", "list or emit built-in artifacts");
    add_common(corp, o);
    corp->add_option("action", corpus_action, "list | emit")->required();
    corp->add_option("key", corpus_key, "artifact key for emit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        apply_common(o);
        if (show->parsed()) return cmd_show(o);
        if (congruences->parsed()) return cmd_congruences(o);
        if (central->parsed()) return cmd_central(o);
        if (decomp->parsed()) return cmd_decompose(o);
        if (stalks->parsed()) return cmd_stalks(o);
        if (pierce->parsed()) return cmd_check_pierce(o);
        if (shortc->parsed()) return cmd_check_short(o);
        if (shell->parsed()) return cmd_check_shell(o, shell_path);
        if (disc->parsed()) return cmd_check_discriminator(o, term_text);
        if (hom->parsed()) return cmd_check_hom(o, mode);
        if (fhp->parsed()) return cmd_check_fhp(o);
        if (report->parsed()) return cmd_report(o, suite, enumerate_homs);
        if (corp->parsed()) return cmd_corpus(o, corpus_action, corpus_key);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
