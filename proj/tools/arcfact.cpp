#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcfact/digraph.hpp"
#include "arcfact/factor.hpp"
#include "arcfact/groups.hpp"
#include "arcfact/numtheory.hpp"
#include "arcfact/repro.hpp"

using nlohmann::ordered_json;
using namespace arcfact;

namespace {

// exit codes: 0 pass, 1 fail, 2 resource limit, 3 usage
enum ExitCode { kPass = 0, kFail = 1, kLimit = 2, kUsage = 3 };

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json orders_json(const FactorizationCertificate& c) {
    ordered_json j;
    j["order_g"] = c.order_g.get_str();
    j["order_h"] = c.order_h.get_str();
    j["order_k"] = c.order_k.get_str();
    j["intersection"] = c.order_intersection.get_str();
    j["verdict"] = c.verdict;
    j["criteria_checked"] = c.criteria_checked;
    return j;
}

ordered_json homfact_json(const HomFactReport& rep) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : rep.pairs) {
        ordered_json pj;
        pj["factor_order"] = p.factor_order.get_str();
        pj["intersection_order"] = p.intersection_order.get_str();
        pj["index"] = p.index.get_str();
        pj["a_gens"] = p.a_gens;
        pj["b_gens"] = p.b_gens;
        if (p.witness) pj["witness"] = *p.witness;
        pairs.push_back(pj);
    }
    ordered_json j;
    j["mode"] = rep.mode == HomFactMode::Conjugate ? "conj" : "iso";
    j["min_index"] = rep.min_index;
    j["group_order"] = rep.group_order.get_str();
    j["pairs"] = pairs;
    j["empty"] = rep.pairs.empty();
    j["classes_total"] = rep.classes_total;
    j["classes_candidate"] = rep.classes_candidate;
    j["pairs_checked"] = rep.pairs_checked;
    j["ambient_scanned"] = rep.ambient_scanned;
    j["certified_isomorphism"] = rep.certified_isomorphism;
    return j;
}

int cmd_ppd(const std::string& a_str, unsigned m) {
    PpdResult r = ppd(mpz_class(a_str), m);
    ordered_json j;
    j["a"] = r.a.get_str();
    j["m"] = r.m;
    ordered_json primes = ordered_json::array();
    for (const auto& p : r.primes) primes.push_back(p.get_str());
    j["primes"] = primes;
    j["exceptional"] = r.exceptional;
    emit(j);
    return kPass;
}

int cmd_ppart(const std::string& n_str, const std::string& p_str) {
    mpz_class n(n_str), p(p_str);
    ordered_json j;
    j["n"] = n.get_str();
    j["p"] = p.get_str();
    j["p_part"] = p_part(n, p).get_str();
    emit(j);
    return kPass;
}

int cmd_group(const std::string& spec) {
    PermGroup G = build_named(spec);
    ordered_json j;
    j["spec"] = to_string(parse_group_spec(spec));
    j["degree"] = G.degree();
    j["order"] = G.order().get_str();
    ordered_json gens = ordered_json::array();
    for (const Permutation& g : G.generators()) gens.push_back(g.cycle_string());
    j["generators"] = gens;
    ordered_json orbs = ordered_json::array();
    for (const auto& o : orbits_of(G)) orbs.push_back(o.size());
    j["orbit_sizes"] = orbs;
    bool transitive = is_transitive(G);
    j["transitive"] = transitive;
    if (transitive) {
        PrimitivityResult pr = is_primitive(G);
        j["primitive"] = pr.primitive;
        if (!pr.primitive) j["block"] = pr.block;
    }
    emit(j);
    return kPass;
}

int cmd_fact(const std::string& gspec, const std::string& hspec, const std::string& kspec,
             bool cross) {
    PermGroup G = build_named(gspec);
    Subgroup H = resolve_subgroup(G, hspec);
    Subgroup K = resolve_subgroup(G, kspec);
    FactorizationCertificate cert = is_factorization(G, H, K, cross);
    emit(orders_json(cert));
    return kPass;
}

int cmd_homfact(const std::string& gv, const std::string& ambient, const std::string& mode,
                std::uint64_t min_index) {
    HomFactMode m;
    if (mode == "conj")
        m = HomFactMode::Conjugate;
    else if (mode == "iso")
        m = HomFactMode::Isomorphic;
    else
        throw CLI::ValidationError("--mode must be conj or iso");
    HomFactReport rep;
    if (!ambient.empty()) {
        PermGroup A = build_named(ambient);
        Subgroup Gv = resolve_subgroup(A, gv);
        rep = homogeneous_search(Gv.group, A, m, min_index);
    } else {
        if (m == HomFactMode::Conjugate)
            throw CLI::ValidationError("conjugate mode needs --ambient");
        rep = homogeneous_search(build_named(gv), std::nullopt, m, min_index);
    }
    emit(homfact_json(rep));
    return kPass;
}

int cmd_digraph(const std::string& gspec, const std::string& hspec, const std::string& gperm,
                unsigned s, const std::string& method) {
    PermGroup G = build_named(gspec);
    Subgroup H = resolve_subgroup(G, hspec);
    Permutation g = Permutation::parse_cycles(gperm, G.degree());
    ordered_json j;
    j["group"] = gspec;
    j["h_order"] = H.group.order().get_str();
    j["g"] = g.cycle_string();
    try {
        CosetDigraph gamma = CosetDigraph::build(G, H, g);
        j["antisymmetric"] = true;
        j["vertices"] = gamma.vertex_count();
        j["valency"] = gamma.valency();
        j["connected"] = gamma.connected();
        j["primitive"] = vertex_primitivity(gamma).primitive;
        ordered_json results = ordered_json::array();
        for (unsigned si = 2; si <= s; ++si) {
            if (method == "direct" || method == "both") {
                SArcCount d = s_arcs_direct(gamma, si);
                ordered_json r;
                r["s"] = si;
                r["method"] = "direct";
                r["count"] = d.count;
                r["transitive"] = d.transitive;
                results.push_back(r);
            }
            if (method == "criterion" || method == "both") {
                SArcCriterion c = s_arc_criterion(gamma, si);
                ordered_json r;
                r["s"] = si;
                r["method"] = "criterion";
                r["transitive"] = c.transitive;
                ordered_json certs = ordered_json::array();
                for (const auto& lc : c.levels) certs.push_back(orders_json(lc));
                r["certificates"] = certs;
                results.push_back(r);
            }
        }
        j["s_results"] = results;
        StabNormalAudit audit = vertex_stabilizer_normal_audit(gamma);
        j["stabilizer_normal_audit"] = audit.ok;
        emit(j);
        return kPass;
    } catch (const not_antisymmetric_error& e) {
        j["antisymmetric"] = false;
        j["witness_h"] = e.witness_h;
        j["witness_h2"] = e.witness_h2;
        emit(j);
        return kFail;
    }
}

int cmd_repro(const std::string& filter, bool json_out) {
    repro::SuiteResult suite = repro::run_suite(filter);
    for (const auto& c : suite.cases) {
        std::string status = c.pass ? "PASS" : (c.resource_limited ? "LIMIT" : "FAIL");
        std::cout << "[" << status << "] " << c.id << " (" << c.ms << " ms)";
        if (!c.error.empty()) std::cout << " - " << c.error;
        std::cout << "\n";
    }
    if (json_out) emit(repro::to_json(suite));
    if (!suite.all_pass) return suite.any_limit ? kLimit : kFail;
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for group factorizations and coset digraphs"};
    app.require_subcommand(1);

    bool json_flag = false;
    bool serial = false;
    std::uint64_t seed = settings().seed;
    std::uint64_t b_elements = settings().bounds.elements;
    std::uint64_t b_subgroups = settings().bounds.subgroups;
    std::uint64_t b_points = settings().bounds.points;
    app.add_flag("--json", json_flag, "emit JSON output");
    app.add_flag("--serial", serial, "run the serial reference kernels");
    app.add_option("--seed", seed, "stabilizer-chain construction seed (results are seed-independent)");
    app.add_option("--bound-elements", b_elements, "element-enumeration bound");
    app.add_option("--bound-subgroups", b_subgroups, "subgroup-lattice order bound");
    app.add_option("--bound-points", b_points, "coset-action index bound");

    auto* ppd_cmd = app.add_subcommand("ppd", "primitive prime divisors of (a, m)");
    std::string ppd_a;
    unsigned ppd_m = 0;
    ppd_cmd->add_option("a", ppd_a)->required();
    ppd_cmd->add_option("m", ppd_m)->required();

    auto* ppart_cmd = app.add_subcommand("ppart", "p-part of n");
    std::string ppart_n, ppart_p;
    ppart_cmd->add_option("n", ppart_n)->required();
    ppart_cmd->add_option("p", ppart_p)->required();

    auto* group_cmd = app.add_subcommand("group", "build a named group and report its shape");
    std::string group_spec;
    group_cmd->add_option("spec", group_spec)->required();

    auto* fact_cmd = app.add_subcommand("fact", "factorization certificate for G = HK");
    std::string f_group, f_h, f_k;
    bool f_cross = false;
    fact_cmd->add_option("--group", f_group)->required();
    fact_cmd->add_option("--h", f_h)->required();
    fact_cmd->add_option("--k", f_k)->required();
    fact_cmd->add_flag("--cross-check", f_cross);

    auto* hf_cmd = app.add_subcommand("homfact", "homogeneous-factorization search");
    std::string hf_gv, hf_ambient, hf_mode = "iso";
    std::uint64_t hf_min_index = 2;
    hf_cmd->add_option("--gv", hf_gv, "vertex group (spec, or subgroup handle with --ambient)")
        ->required();
    hf_cmd->add_option("--ambient", hf_ambient);
    hf_cmd->add_option("--mode", hf_mode, "conj or iso");
    hf_cmd->add_option("--min-index", hf_min_index);

    auto* dg_cmd = app.add_subcommand("digraph", "coset digraph construction and s-arc checks");
    std::string dg_group, dg_h, dg_g, dg_method = "both";
    unsigned dg_s = 2;
    dg_cmd->add_option("--group", dg_group)->required();
    dg_cmd->add_option("--h", dg_h)->required();
    dg_cmd->add_option("--g", dg_g)->required();
    dg_cmd->add_option("--check", dg_s, "largest s to check (s=2..)");
    dg_cmd->add_option("--method", dg_method, "direct, criterion or both");

    auto* repro_cmd = app.add_subcommand("repro", "run the built-in reproduction suite");
    std::string repro_filter;
    repro_cmd->add_option("--filter", repro_filter, "case id or prefix pattern ending in *");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    settings().seed = seed;
    settings().parallel = !serial;
    settings().bounds.elements = b_elements;
    settings().bounds.subgroups = b_subgroups;
    settings().bounds.points = b_points;
    if (const char* profile = std::getenv("ARCFACT_BOUNDS_PROFILE")) {
        if (std::string(profile) == "extended")
            settings().bounds = extended_bounds();
        else if (std::string(profile) == "desk")
            settings().bounds = desk_bounds();
    }

    try {
        if (*ppd_cmd) return cmd_ppd(ppd_a, ppd_m);
        if (*ppart_cmd) return cmd_ppart(ppart_n, ppart_p);
        if (*group_cmd) return cmd_group(group_spec);
        if (*fact_cmd) return cmd_fact(f_group, f_h, f_k, f_cross);
        if (*hf_cmd) return cmd_homfact(hf_gv, hf_ambient, hf_mode, hf_min_index);
        if (*dg_cmd) return cmd_digraph(dg_group, dg_h, dg_g, dg_s, dg_method);
        if (*repro_cmd) return cmd_repro(repro_filter, json_flag);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kLimit;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
