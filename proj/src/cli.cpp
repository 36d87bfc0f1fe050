#include "ivorder/cli.hpp"

#include "ivorder/audit.hpp"
#include "ivorder/biorder.hpp"
#include "ivorder/io.hpp"
#include "ivorder/lex_demo.hpp"
#include "ivorder/representation.hpp"
#include "ivorder/scale.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>

namespace ivorder::cli {

namespace {

using nlohmann::json;

struct Report {
    json doc = {{"command", ""},       {"inputs", json::object()},       {"result", json::object()},
                {"witnesses", json::object()}, {"certificates", json::object()}, {"counts", json::object()}};
    int status = holds;
};

json labels_of(const std::vector<std::string>& labels, const Subset& s)
{
    json out = json::array();
    for (auto i : members(s))
        out.push_back(labels[i]);
    return out;
}

json table_json(const std::vector<std::string>& labels, const ValueTable& t)
{
    json out = json::object();
    for (std::size_t i = 0; i < labels.size(); ++i)
        out[labels[i]] = to_string(t[i]);
    return out;
}

json pair_json(const std::vector<std::string>& labels, const FunctionPair& p)
{
    return {{"u", table_json(labels, p.u)}, {"v", table_json(labels, p.v)}};
}

json relation_json(const FiniteRelation& r)
{
    json rows = json::array();
    for (std::size_t i = 0; i < r.size(); ++i)
        rows.push_back(to_membership_string(r.row(i)));
    return {{"labels", r.labels()}, {"rows", rows}};
}

json partition_json(const std::vector<std::string>& labels, const Partition& p)
{
    json out = json::array();
    for (const auto& block : p) {
        json b = json::array();
        for (auto i : block)
            b.push_back(labels[i]);
        out.push_back(b);
    }
    return out;
}

json cycle_json(const ConstraintSystem& sys, const NegativeCycle& cycle)
{
    json steps = json::array();
    for (auto e : cycle.constraints) {
        const auto& c = sys.constraints()[e];
        steps.push_back({{"constraint", sys.variable_name(c.lhs) + " - " + sys.variable_name(c.rhs) +
                                            " <= " + std::to_string(c.bound)},
                         {"reason", c.note}});
    }
    return {{"cycle", steps}, {"weight", cycle.weight}};
}

json ferrers_json(const FiniteRelation& r, const FerrersWitness& w)
{
    return {{"quadruple", {r.label(w.x), r.label(w.z), r.label(w.y), r.label(w.w)}},
            {"explanation", describe(r, w)}};
}

json violations_json(const std::vector<AuditViolation>& vs)
{
    json out = json::array();
    for (const auto& v : vs)
        out.push_back({{"check", v.check}, {"instance", v.instance}, {"detail", v.detail}});
    return out;
}

std::string pair_key(const std::vector<std::string>& a, const std::vector<std::string>& x,
                     std::size_t i, std::size_t j, const char* sep = "<")
{
    return a[i] + sep + x[j];
}

// ---- verbs -----------------------------------------------------------------

void cmd_check(const std::string& path, Report& rep)
{
    const FiniteRelation r = io::load_relation(path);
    rep.doc["inputs"]["relation"] = path;
    const AxiomReport ax = check_axioms(r);
    rep.doc["result"] = {{"reflexive", ax.reflexive},     {"total", ax.total},
                         {"transitive", ax.transitive},   {"ferrers", ax.ferrers},
                         {"interval_order", ax.interval_order}, {"total_preorder", ax.total_preorder}};
    if (ax.ferrers_witness)
        rep.doc["witnesses"]["ferrers"] = ferrers_json(r, *ax.ferrers_witness);
    rep.doc["counts"]["elements"] = r.size();
    rep.status = ax.interval_order ? holds : negative;
}

void cmd_traces(const std::string& path, Report& rep)
{
    const FiniteRelation r = io::load_relation(path);
    rep.doc["inputs"]["relation"] = path;
    const Traces tr = traces(r);
    const bool lower_ok = is_total_preorder(tr.lower);
    const bool upper_ok = is_total_preorder(tr.upper);
    json result = {{"lower", relation_json(tr.lower)},
                   {"upper", relation_json(tr.upper)},
                   {"lower_total_preorder", lower_ok},
                   {"upper_total_preorder", upper_ok}};
    if (lower_ok)
        result["lower_classes"] = partition_json(r.labels(), equivalence_classes(tr.lower));
    if (upper_ok)
        result["upper_classes"] = partition_json(r.labels(), equivalence_classes(tr.upper));
    rep.doc["result"] = result;
    rep.status = lower_ok && upper_ok ? holds : negative;
}

void cmd_represent(const std::string& path, const std::string& out_path, Report& rep)
{
    const FiniteRelation r = io::load_relation(path);
    rep.doc["inputs"]["relation"] = path;
    try {
        const FunctionPair p = construct_representation(r);
        rep.doc["result"] = {{"interval_order", true}, {"pair", pair_json(r.labels(), p)}};
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out)
                throw io::ParseError(out_path, 0, "cannot write file");
            io::write_pair(out, r.labels(), p);
            rep.doc["inputs"]["out"] = out_path;
        }
    } catch (const NotIntervalOrder& e) {
        rep.doc["result"] = {{"interval_order", false}, {"reason", e.what()}};
        if (e.witness())
            rep.doc["witnesses"]["ferrers"] = ferrers_json(r, *e.witness());
        rep.status = negative;
    }
}

void cmd_verify(const std::string& rel_path, const std::string& pair_path, bool almost, Report& rep)
{
    const FiniteRelation r = io::load_relation(rel_path);
    const FunctionPair p = io::load_pair(pair_path, r.labels());
    rep.doc["inputs"] = {{"relation", rel_path}, {"pair", pair_path}};
    const PairCheck c = almost ? verify_almost_representation(r, p) : verify_representation(r, p);
    rep.doc["result"] = {{"kind", almost ? "almost_representation" : "representation"},
                         {"holds", c.holds}};
    if (c.counterexample) {
        const auto [x, y] = *c.counterexample;
        rep.doc["witnesses"]["counterexample"] = {r.label(x), r.label(y)};
    }
    rep.status = c.holds ? holds : negative;
}

void cmd_weakcont(const std::string& rel_path, const std::string& top_path, Report& rep)
{
    const FiniteRelation r = io::load_relation(rel_path);
    const FiniteTopology t = io::load_topology(top_path);
    rep.doc["inputs"] = {{"relation", rel_path}, {"topology", top_path}};
    if (r.labels() != t.points())
        throw io::ParseError(top_path, 0, "topology labels differ from relation labels");
    try {
        const WeakContinuity wc = is_weakly_continuous(r, t);
        const ContinuousRepresentation cr = decide_continuous_representation(r, t);
        json witnesses = json::object();
        for (const auto& [pair, w] : wc.witnesses)
            witnesses[pair_key(r.labels(), r.labels(), pair.first, pair.second)] =
                pair_json(r.labels(), w);
        rep.doc["result"] = {{"weakly_continuous", wc.holds},
                             {"continuously_representable", cr.feasible}};
        if (cr.pair)
            rep.doc["result"]["representation"] = pair_json(r.labels(), *cr.pair);
        rep.doc["witnesses"]["separating_pairs"] = witnesses;
        if (wc.failing_pair) {
            rep.doc["result"]["failing_pair"] = {r.label(wc.failing_pair->first),
                                                 r.label(wc.failing_pair->second)};
            rep.doc["certificates"]["weak_continuity"] = cycle_json(wc.system, *wc.certificate);
        }
        if (cr.certificate)
            rep.doc["certificates"]["representation"] = cycle_json(cr.system, *cr.certificate);
        rep.doc["counts"] = {{"strict_pairs", strict_part(r).pair_count()},
                             {"components", components(t).size()},
                             {"separated_pairs", wc.witnesses.size()}};
        rep.status = wc.holds ? holds : negative;
    } catch (const NotIntervalOrder& e) {
        rep.doc["result"] = {{"interval_order", false}, {"reason", e.what()}};
        if (e.witness())
            rep.doc["witnesses"]["ferrers"] = ferrers_json(r, *e.witness());
        rep.status = negative;
    }
}

void cmd_separable(const std::string& rel_path, const std::string& dense_path, Report& rep)
{
    const FiniteRelation r = io::load_relation(rel_path);
    rep.doc["inputs"]["relation"] = rel_path;
    Subset dense = full_subset(r.size());
    if (!dense_path.empty()) {
        dense = io::load_subset(dense_path, r.labels());
        rep.doc["inputs"]["dense"] = dense_path;
    }
    try {
        const Separability s = check_io_separability(r, dense);
        rep.doc["result"] = {{"holds", s.holds},
                             {"dense", labels_of(r.labels(), dense)},
                             {"minimal_dense", labels_of(r.labels(), s.minimal_dense)}};
        if (s.failing_strict_pair)
            rep.doc["witnesses"]["unrouted_pair"] = {r.label(s.failing_strict_pair->first),
                                                     r.label(s.failing_strict_pair->second)};
        rep.doc["counts"]["minimal_dense_size"] = s.minimal_dense.count();
        rep.status = s.holds ? holds : negative;
    } catch (const NotIntervalOrder& e) {
        rep.doc["result"] = {{"interval_order", false}, {"reason", e.what()}};
        rep.status = negative;
    }
}

json biorder_pair_json(const FiniteBiorder& b, const BiorderPair& p)
{
    return {{"v", table_json(b.a_labels(), p.v)}, {"u", table_json(b.x_labels(), p.u)}};
}

void cmd_biorder(const std::string& path, const std::string& mode_name, const std::string& top_a,
                 const std::string& top_x, Report& rep)
{
    const FiniteBiorder b = io::load_biorder(path);
    rep.doc["inputs"]["biorder"] = path;
    const BiorderMode mode = mode_name == "weak" ? BiorderMode::weak : BiorderMode::strict;
    const FerrersCheck f = check_ferrers_biorder(b);
    rep.doc["result"] = {{"ferrers", f.holds}, {"mode", mode_name}};
    if (!f.holds) {
        const auto& w = *f.witness;
        rep.doc["witnesses"]["ferrers"] = {
            {"quadruple", {b.a_labels()[w.a], b.a_labels()[w.b], b.x_labels()[w.x], b.x_labels()[w.y]}}};
        rep.status = negative;
    } else {
        rep.doc["result"]["representation"] =
            biorder_pair_json(b, construct_biorder_representation(b, mode));
    }
    const BiorderTraces tr = biorder_traces(b);
    rep.doc["result"]["traces"] = {{"lower", relation_json(tr.lower)}, {"upper", relation_json(tr.upper)}};

    if (top_a.empty() != top_x.empty())
        throw io::ParseError(top_a.empty() ? top_x : top_a, 0, "--top-a and --top-x go together");
    if (!top_a.empty()) {
        const FiniteTopology ta = io::load_topology(top_a);
        const FiniteTopology tx = io::load_topology(top_x);
        if (ta.points() != b.a_labels())
            throw io::ParseError(top_a, 0, "topology labels differ from the biorder's A labels");
        if (tx.points() != b.x_labels())
            throw io::ParseError(top_x, 0, "topology labels differ from the biorder's X labels");
        rep.doc["inputs"]["top_a"] = top_a;
        rep.doc["inputs"]["top_x"] = top_x;
        const auto wc = biorder_weakly_continuous(b, ta, tx);
        const auto cr = decide_continuous_biorder_representation(b, ta, tx);
        const auto jd = check_jointly_dense(b, full_subset(b.a_size()), full_subset(b.x_size()));
        rep.doc["result"]["weakly_continuous"] = wc.holds;
        rep.doc["result"]["jointly_dense"] = jd.holds;
        rep.doc["result"]["continuously_representable"] = cr.feasible;
        if (cr.pair)
            rep.doc["result"]["continuous_representation"] = biorder_pair_json(b, *cr.pair);
        json witnesses = json::object();
        for (const auto& [pair, w] : wc.witnesses)
            witnesses[pair_key(b.a_labels(), b.x_labels(), pair.first, pair.second)] =
                biorder_pair_json(b, w);
        rep.doc["witnesses"]["separating_pairs"] = witnesses;
        if (wc.certificate)
            rep.doc["certificates"]["weak_continuity"] = cycle_json(wc.system, *wc.certificate);
        if (cr.certificate)
            rep.doc["certificates"]["representation"] = cycle_json(cr.system, *cr.certificate);
        if (!wc.holds)
            rep.status = negative;
    }
}

void cmd_scale(const std::string& top_path, const std::string& scale_path, bool to_function,
               Report& rep)
{
    const FiniteTopology t = io::load_topology(top_path);
    const DyadicScale sc = io::load_scale(scale_path, t.size());
    rep.doc["inputs"] = {{"topology", top_path}, {"scale", scale_path}};
    const ScaleValidity v = validate_scale(t, sc);
    rep.doc["result"] = {{"valid", v.valid}};
    if (!v.valid) {
        rep.doc["witnesses"]["violation"] = v.violation;
        if (v.offending)
            rep.doc["witnesses"]["offending_pair"] = {to_string(v.offending->first),
                                                      to_string(v.offending->second)};
        rep.status = negative;
    } else if (to_function) {
        const ValueTable f = scale_to_function(sc);
        rep.doc["result"]["function"] = table_json(t.points(), f);
        rep.doc["result"]["continuous"] = is_continuous(t, f);
        rep.doc["result"]["sublevel_sets_open"] = sublevel_sets_open(t, f);
    }
    rep.doc["counts"]["grid_size"] = sc.grid.size();
}

void cmd_audit(std::size_t n, bool biorder, std::size_t size, bool all_topologies, Report& rep)
{
    const Theorem1Report t1 = audit_theorem1(n);
    json counts = {{"n_max", t1.n_max},
                   {"relations_enumerated", t1.relations_enumerated},
                   {"interval_orders", t1.interval_orders},
                   {"topologies", t1.topologies},
                   {"instances", t1.instances},
                   {"representable", t1.representable},
                   {"weakly_continuous", t1.weakly_continuous},
                   {"equivalence_agreements", t1.equivalence_agreements},
                   {"separable_with_full_set", t1.separable_with_full_set},
                   {"relation_continuous", t1.relation_continuous},
                   {"upper_trace_almost_usc_own", t1.upper_trace_almost_usc_own},
                   {"upper_trace_almost_usc_literal", t1.upper_trace_almost_usc_literal},
                   {"lower_trace_almost_lsc_own", t1.lower_trace_almost_lsc_own},
                   {"lower_trace_almost_lsc_literal", t1.lower_trace_almost_lsc_literal},
                   {"reading_separations", t1.reading_separations},
                   {"total_preorder_instances", t1.total_preorder_instances},
                   {"total_preorder_agreements", t1.total_preorder_agreements},
                   {"dyadic_verified", t1.dyadic_verified},
                   {"strict_pairs_scaled", t1.strict_pairs_scaled},
                   {"scale_round_trips", t1.scale_round_trips},
                   {"violations", t1.violations.size()}};
    rep.doc["inputs"]["n"] = n;
    rep.doc["counts"]["interval_orders"] = counts;
    rep.doc["result"]["interval_orders_passed"] = t1.passed();
    rep.doc["witnesses"]["interval_order_violations"] = violations_json(t1.violations);
    rep.doc["witnesses"]["reading_separations"] = t1.reading_separation_log;
    bool ok = t1.passed();
    if (biorder) {
        const auto scope = all_topologies ? TopologyScope::all : TopologyScope::discrete_indiscrete;
        const Theorem3Report t3 = audit_theorem3(size, scope);
        rep.doc["inputs"]["size"] = size;
        rep.doc["inputs"]["topologies"] = all_topologies ? "all" : "discrete_indiscrete";
        rep.doc["counts"]["biorders"] = {{"size_max", t3.size_max},
                                         {"tables", t3.tables},
                                         {"ferrers_tables", t3.ferrers_tables},
                                         {"construction_agreements", t3.construction_agreements},
                                         {"staircase_sweeps_passed", t3.staircase_sweeps_passed},
                                         {"discrete_agreements", t3.discrete_agreements},
                                         {"instances", t3.instances},
                                         {"representable", t3.representable},
                                         {"weakly_continuous", t3.weakly_continuous},
                                         {"jointly_dense", t3.jointly_dense},
                                         {"equivalence_agreements", t3.equivalence_agreements},
                                         {"dyadic_verified", t3.dyadic_verified},
                                         {"violations", t3.violations.size()}};
        rep.doc["result"]["biorders_passed"] = t3.passed();
        rep.doc["witnesses"]["biorder_violations"] = violations_json(t3.violations);
        ok = ok && t3.passed();
    }
    rep.status = ok ? holds : negative;
}

void cmd_demo_lex(unsigned denom, Report& rep)
{
    const LexDemoReport d = demo_lex(denom);
    rep.doc["inputs"]["denom"] = denom;
    const LexPoint p{Rational(1, 4), Rational(3, 4)}, q{Rational(1, 2), Rational(3, 4)};
    rep.doc["result"] = {
        {"passed", d.passed()},
        {"samples",
         {{"u_1/2((1/4,3/4))", to_string(lex_section_function(Rational(1, 2), p))},
          {"u_1/2((1/2,3/4))", to_string(lex_section_function(Rational(1, 2), q))},
          {"pi((1/4,3/4))", to_string(lex_projection(p))}}},
        {"not_machine_checked",
         {"continuity of pi and u_r in the lexicographic order topology",
          "non-existence of a utility representation of the lexicographic order"}}};
    rep.doc["counts"] = {{"grid_values", d.grid_values},
                         {"points", d.points},
                         {"functions", d.functions},
                         {"ordered_pairs_per_function", d.ordered_pairs},
                         {"weak_violations", d.weak_violations},
                         {"strict_violations", d.strict_violations},
                         {"strict_pairs", d.strict_pairs},
                         {"separated_by_projection", d.separated_by_projection},
                         {"separated_by_section", d.separated_by_section},
                         {"unseparated", d.unseparated}};
    rep.status = d.passed() ? holds : negative;
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interval orders, biorders and their continuous representations"};
    app.require_subcommand(1);
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field from the report");

    std::string rel, pair, top, bio, scale_file, dense, out_file, top_a, top_x, mode = "strict";
    bool almost = false, to_function = false, biorder_audit = false, all_topologies = false;
    std::size_t n = 3, size = 3;
    unsigned denom = 16;

    auto* check = app.add_subcommand("check", "Report the axioms a relation satisfies");
    check->add_option("relation", rel)->required()->check(CLI::ExistingFile);

    auto* tr = app.add_subcommand("traces", "Compute both traces and their classes");
    tr->add_option("relation", rel)->required()->check(CLI::ExistingFile);

    auto* represent = app.add_subcommand("represent", "Build the staircase representation");
    represent->add_option("relation", rel)->required()->check(CLI::ExistingFile);
    represent->add_option("--out", out_file, "Write the function table here");

    auto* verify = app.add_subcommand("verify", "Check a function pair against a relation");
    verify->add_option("relation", rel)->required()->check(CLI::ExistingFile);
    verify->add_option("pair", pair)->required()->check(CLI::ExistingFile);
    verify->add_flag("--almost", almost, "Check almost representation instead");

    auto* weakcont = app.add_subcommand("weakcont", "Decide weak continuity and continuous representability");
    weakcont->add_option("relation", rel)->required()->check(CLI::ExistingFile);
    weakcont->add_option("topology", top)->required()->check(CLI::ExistingFile);

    auto* separable = app.add_subcommand("separable", "Check i.o. separability");
    separable->add_option("relation", rel)->required()->check(CLI::ExistingFile);
    separable->add_option("--dense", dense, "File listing the candidate dense labels")
        ->check(CLI::ExistingFile);

    auto* biorder = app.add_subcommand("biorder", "Ferrers check, staircase and weak continuity of a biorder");
    biorder->add_option("biorder", bio)->required()->check(CLI::ExistingFile);
    biorder->add_option("--mode", mode)->check(CLI::IsMember({"strict", "weak"}));
    biorder->add_option("--top-a", top_a)->check(CLI::ExistingFile);
    biorder->add_option("--top-x", top_x)->check(CLI::ExistingFile);

    auto* scale = app.add_subcommand("scale", "Validate a dyadic scale");
    scale->add_option("topology", top)->required()->check(CLI::ExistingFile);
    scale->add_option("scale", scale_file)->required()->check(CLI::ExistingFile);
    scale->add_flag("--to-function", to_function, "Evaluate the inf-formula function");

    auto* audit = app.add_subcommand("audit", "Exhaustive sweep of the representation theorems");
    audit->add_option("--n", n, "Largest interval-order size")->check(CLI::Range(1, 4));
    audit->add_flag("--biorder", biorder_audit, "Also sweep biorders");
    audit->add_option("--size", size, "Largest biorder side")->check(CLI::Range(1, 3));
    audit->add_flag("--all-topologies", all_topologies,
                    "Biorder sweep over every topology pair instead of discrete/indiscrete");

    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    auto* lex = demo->add_subcommand("lex", "Lexicographic square on a rational grid");
    lex->add_option("--denom", denom, "Denominator bound")->check(CLI::Range(2, 64));

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();
    lex->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? holds : bad_input;
    }

    Report rep;
    try {
        if (*check) {
            rep.doc["command"] = "check";
            cmd_check(rel, rep);
        } else if (*tr) {
            rep.doc["command"] = "traces";
            cmd_traces(rel, rep);
        } else if (*represent) {
            rep.doc["command"] = "represent";
            cmd_represent(rel, out_file, rep);
        } else if (*verify) {
            rep.doc["command"] = "verify";
            cmd_verify(rel, pair, almost, rep);
        } else if (*weakcont) {
            rep.doc["command"] = "weakcont";
            cmd_weakcont(rel, top, rep);
        } else if (*separable) {
            rep.doc["command"] = "separable";
            cmd_separable(rel, dense, rep);
        } else if (*biorder) {
            rep.doc["command"] = "biorder";
            cmd_biorder(bio, mode, top_a, top_x, rep);
        } else if (*scale) {
            rep.doc["command"] = "scale";
            cmd_scale(top, scale_file, to_function, rep);
        } else if (*audit) {
            rep.doc["command"] = "audit";
            cmd_audit(n, biorder_audit, size, all_topologies, rep);
        } else if (*lex) {
            rep.doc["command"] = "demo lex";
            cmd_demo_lex(denom, rep);
        }
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    if (!no_timestamp)
        rep.doc["timestamp"] = utc_timestamp();
    rep.doc["status"] = rep.status;
    out << rep.doc.dump(2) << '\n';
    return rep.status;
}

} // namespace ivorder::cli
