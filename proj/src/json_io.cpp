#include "ualg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ualg/errors.hpp"

namespace ualg {

Json to_json(const FiniteAlgebra& a) {
    Json ops = Json::array();
    for (const OpTable& t : a.ops)
        ops.push_back({{"symbol", t.symbol}, {"arity", t.arity}, {"table", t.table}});
    return {{"name", a.name}, {"size", a.size}, {"operations", std::move(ops)}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
    FiniteAlgebra a;
    a.name = j.at("name").get<std::string>();
    a.size = j.at("size").get<int>();
    for (const Json& o : j.at("operations")) {
        OpTable t;
        t.symbol = o.at("symbol").get<std::string>();
        t.arity = o.at("arity").get<int>();
        t.table = o.at("table").get<std::vector<int>>();
        a.sig.symbols.push_back({t.symbol, t.arity});
        a.ops.push_back(std::move(t));
    }
    validate(a);
    return a;
}

Json to_json(const Homomorphism& h) {
    return {{"source", h.source.name}, {"target", h.target.name}, {"map", h.map}};
}

Homomorphism hom_from_json(const Json& j, const AlgebraResolver& resolve) {
    Homomorphism h;
    const std::string src = j.at("source").get<std::string>();
    const std::string tgt = j.at("target").get<std::string>();
    auto s = resolve(src);
    if (!s) throw Error("cannot resolve source algebra '" + src + "'");
    auto t = resolve(tgt);
    if (!t) throw Error("cannot resolve target algebra '" + tgt + "'");
    h.source = std::move(*s);
    h.target = std::move(*t);
    h.map = j.at("map").get<std::vector<int>>();
    h.name = j.value("name", src + "->" + tgt);
    if (static_cast<int>(h.map.size()) != h.source.size)
        throw Error("homomorphism map length disagrees with source size");
    for (int v : h.map)
        if (v < 0 || v >= h.target.size) throw Error("homomorphism map entry out of range");
    return h;
}

Json to_json(const Partition& p) {
    return {{"blocks", p.blocks()}};
}

Partition partition_from_json(const Json& j, int n) {
    return Partition::from_blocks(n, j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json to_json(const corpus::ContextSpec& c) {
    Json j;
    j["n_witnesses"] = c.n_witnesses;
    j["zeros"] = c.zeros;
    j["ones"] = c.ones;
    j["decomposition_term"] = c.decomposition_term ? Json(*c.decomposition_term) : Json(nullptr);
    j["short_term"] = c.short_term ? Json(*c.short_term) : Json(nullptr);
    j["trusted_pierce"] = c.trusted_pierce;
    return j;
}

corpus::ContextSpec context_spec_from_json(const Json& j) {
    corpus::ContextSpec c;
    c.n_witnesses = j.at("n_witnesses").get<int>();
    c.zeros = j.at("zeros").get<std::vector<std::string>>();
    c.ones = j.at("ones").get<std::vector<std::string>>();
    if (j.contains("decomposition_term") && !j.at("decomposition_term").is_null())
        c.decomposition_term = j.at("decomposition_term").get<std::string>();
    if (j.contains("short_term") && !j.at("short_term").is_null())
        c.short_term = j.at("short_term").get<std::string>();
    c.trusted_pierce = j.value("trusted_pierce", false);
    return c;
}

Json to_json(const CentralReport& r) {
    Json pairs = Json::array();
    for (const CentralPair& p : r.pairs) pairs.push_back({{"e", p.e}, {"f", p.f}});
    Json atoms = Json::array();
    for (int i : r.atoms) atoms.push_back(r.elements[static_cast<std::size_t>(i)]);
    return {{"algebra", r.algebra},
            {"n_witnesses", r.n_witnesses},
            {"elements", r.elements},
            {"pairs", std::move(pairs)},
            {"bottom", r.bottom},
            {"top", r.top},
            {"meet", r.meet},
            {"join", r.join},
            {"complement", r.complement},
            {"atoms", std::move(atoms)}};
}

Json to_json(const DecompositionCertificate& c) {
    Json factors = Json::array();
    for (const FiniteAlgebra& f : c.factors) factors.push_back(to_json(f));
    Json congruences = Json::array();
    for (const Partition& p : c.factor_congruences) congruences.push_back(p.blocks());
    return {{"factors", std::move(factors)},
            {"factor_congruences", std::move(congruences)},
            {"natural_map", c.natural_map}};
}

Json to_json(const PreservationReport& r) {
    Json pw = Json::array();
    for (const CentralPair& p : r.pair_witnesses) pw.push_back({{"e", p.e}, {"f", p.f}});
    return {{"preserved", r.preserved},
            {"central_witnesses", r.central_witnesses},
            {"pair_witnesses", std::move(pw)}};
}

Json to_json(const Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["scope"] = v.scope;
    if (v.counterexample) {
        Json env = Json::object();
        for (const auto& [k, val] : v.counterexample->env) env[k] = val;
        j["counterexample"] = {{"algebra", v.counterexample->algebra},
                               {"environment", std::move(env)},
                               {"note", v.counterexample->note}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json to_json(const EvidenceReport& r) {
    auto checks = [](const std::vector<AlgebraCheck>& cs) {
        Json out = Json::array();
        for (const AlgebraCheck& c : cs)
            out.push_back({{"algebra", c.algebra}, {"ok", c.ok}, {"detail", c.detail}});
        return out;
    };

    Json j;
    j["suite"] = r.suite;
    j["generators"] = r.generators;
    j["scope_note"] = r.scope_note;
    j["pierce_identities"] =
        r.pierce_applicable ? to_json(r.pierce_identities)
                            : Json{{"holds", nullptr}, {"scope", "skipped: no decomposition term"}};
    j["stalks_di"] = {{"ok", r.stalks_ok}, {"checks", checks(r.stalks_di)}};
    j["subalgebras_di"] = {{"ok", r.subalgebras_ok}, {"checks", checks(r.subalgebras_di)}};

    Json audits = Json::array();
    for (const HomAudit& a : r.stability) {
        Json pw = Json::array();
        for (const CentralPair& p : a.pair_witnesses) pw.push_back({{"e", p.e}, {"f", p.f}});
        audits.push_back({{"hom", a.name},
                          {"central_ok", a.central_ok},
                          {"complementary_ok", a.complementary_ok},
                          {"central_witnesses", a.central_witnesses},
                          {"pair_witnesses", std::move(pw)}});
    }
    j["stability_on_corpus"] = {{"ok", r.stability_ok}, {"audits", std::move(audits)}};
    j["permutability"] = {{"informational", true}, {"checks", checks(r.permutability)}};

    Json samples = Json::array();
    for (const FhpSample& s : r.fhp_samples) {
        Json e = {{"a", s.a}, {"b", s.b}, {"product_congruence", s.product_ok}};
        e["failure"] = s.failure ? Json(s.failure->blocks()) : Json(nullptr);
        samples.push_back(std::move(e));
    }
    j["fhp_samples"] = {{"informational", true}, {"samples", std::move(samples)}};
    j["required_pass"] = r.required_pass();
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << text;
}

} // namespace ualg
