#include "ivorder/audit.hpp"

#include "ivorder/enumerate.hpp"
#include "ivorder/representation.hpp"
#include "ivorder/scale.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

namespace ivorder {

namespace {

std::string pair_name(const std::vector<std::string>& a, const std::vector<std::string>& x,
                      std::size_t i, std::size_t j)
{
    return a[i] + "<" + x[j];
}

// Runs tasks on a few worker threads; results come back in task order.
template <class Report>
Report run_parallel(std::size_t task_count, const std::function<void(std::size_t, Report&)>& task)
{
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<std::vector<Report>>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<Report> local;
            for (std::size_t i = w; i < task_count; i += workers) {
                local.emplace_back();
                task(i, local.back());
            }
            return local;
        }));
    }
    std::vector<std::vector<Report>> parts;
    for (auto& f : futures)
        parts.push_back(f.get());
    Report total;
    for (std::size_t i = 0; i < task_count; ++i)
        total.merge(parts[i % workers][i / workers]);
    return total;
}

} // namespace

void Theorem1Report::merge(const Theorem1Report& o)
{
    relations_enumerated += o.relations_enumerated;
    interval_orders += o.interval_orders;
    instances += o.instances;
    representable += o.representable;
    weakly_continuous += o.weakly_continuous;
    equivalence_agreements += o.equivalence_agreements;
    separable_with_full_set += o.separable_with_full_set;
    relation_continuous += o.relation_continuous;
    upper_trace_almost_usc_own += o.upper_trace_almost_usc_own;
    upper_trace_almost_usc_literal += o.upper_trace_almost_usc_literal;
    lower_trace_almost_lsc_own += o.lower_trace_almost_lsc_own;
    lower_trace_almost_lsc_literal += o.lower_trace_almost_lsc_literal;
    reading_separations += o.reading_separations;
    reading_separation_log.insert(reading_separation_log.end(), o.reading_separation_log.begin(),
                                  o.reading_separation_log.end());
    total_preorder_instances += o.total_preorder_instances;
    total_preorder_agreements += o.total_preorder_agreements;
    dyadic_verified += o.dyadic_verified;
    strict_pairs_scaled += o.strict_pairs_scaled;
    scale_round_trips += o.scale_round_trips;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

void Theorem3Report::merge(const Theorem3Report& o)
{
    tables += o.tables;
    ferrers_tables += o.ferrers_tables;
    construction_agreements += o.construction_agreements;
    staircase_sweeps_passed += o.staircase_sweeps_passed;
    discrete_agreements += o.discrete_agreements;
    instances += o.instances;
    representable += o.representable;
    weakly_continuous += o.weakly_continuous;
    jointly_dense += o.jointly_dense;
    equivalence_agreements += o.equivalence_agreements;
    dyadic_verified += o.dyadic_verified;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

void audit_theorem1_instance(const FiniteRelation& r, const FiniteTopology& t,
                             const std::string& id, Theorem1Report& rep, unsigned scale_depth)
{
    auto violate = [&](std::string check, std::string detail) {
        rep.violations.push_back({std::move(check), id, std::move(detail)});
    };
    ++rep.instances;

    const ContinuousRepresentation rep_dec = decide_continuous_representation(r, t);
    const WeakContinuity wc = is_weakly_continuous(r, t);
    if (rep_dec.feasible)
        ++rep.representable;
    if (wc.holds)
        ++rep.weakly_continuous;

    const Separability sep = check_io_separability(r, full_subset(r.size()));
    if (sep.holds)
        ++rep.separable_with_full_set;
    else
        violate("io-separability", "D = X does not route every strict pair");

    if (rep_dec.feasible == (wc.holds && sep.holds))
        ++rep.equivalence_agreements;
    else
        violate("equivalence", std::string("representable=") +
                                            (rep_dec.feasible ? "true" : "false") +
                                            " weakly_continuous=" + (wc.holds ? "true" : "false"));

    if (rep_dec.feasible) {
        const FunctionPair& p = *rep_dec.pair;
        if (!verify_representation(r, p).holds || !is_continuous(t, p.u) ||
            !is_continuous(t, p.v))
            violate("representation-output", "solver pair is not a continuous representation");
    } else if (!rep_dec.system.certifies(*rep_dec.certificate)) {
        violate("representation-certificate", "negative cycle does not certify");
    }
    if (!wc.holds && !wc.system.certifies(*wc.certificate))
        violate("weak-continuity-certificate", "negative cycle does not certify");

    const Semicontinuity semi = relation_semicontinuity(t, r);
    if (is_total_preorder(r)) {
        ++rep.total_preorder_instances;
        if (wc.holds == semi.continuous)
            ++rep.total_preorder_agreements;
        else
            violate("preorder-continuity", std::string("weakly_continuous=") +
                                        (wc.holds ? "true" : "false") +
                                        " continuous=" + (semi.continuous ? "true" : "false"));
    }

    if (!wc.holds)
        return;

    if (semi.continuous)
        ++rep.relation_continuous;
    else
        violate("consequence-continuity", "weakly continuous relation is not continuous");

    const Traces tr = traces(r);
    const FiniteRelation strict = strict_part(r);
    const FiniteRelation strict_lower = strict_part(tr.lower);
    const FiniteRelation strict_upper = strict_part(tr.upper);
    const bool usc_own = check_almost_semicontinuity(t, tr.upper, Side::upper, strict_upper).holds;
    const bool usc_lit = check_almost_semicontinuity(t, tr.upper, Side::upper, strict).holds;
    const bool lsc_own = check_almost_semicontinuity(t, tr.lower, Side::lower, strict_lower).holds;
    const bool lsc_lit = check_almost_semicontinuity(t, tr.lower, Side::lower, strict_upper).holds;
    rep.upper_trace_almost_usc_own += usc_own;
    rep.upper_trace_almost_usc_literal += usc_lit;
    rep.lower_trace_almost_lsc_own += lsc_own;
    rep.lower_trace_almost_lsc_literal += lsc_lit;
    if (!usc_own && !usc_lit)
        violate("consequence-upper-trace", "upper trace is not almost upper semicontinuous");
    if (!lsc_own && !lsc_lit)
        violate("consequence-lower-trace", "lower trace is not almost lower semicontinuous");
    if (usc_own != usc_lit || lsc_own != lsc_lit) {
        ++rep.reading_separations;
        rep.reading_separation_log.push_back(
            id + ": upper own=" + std::to_string(usc_own) + " literal=" + std::to_string(usc_lit) +
            "; lower own=" + std::to_string(lsc_own) + " literal=" + std::to_string(lsc_lit));
    }

    // Separating family -> dyadic sum. With no strict pairs the family is a
    // single constant almost representation.
    std::vector<FunctionPair> family;
    for (const auto& [pair, witness] : wc.witnesses)
        family.push_back(witness);
    if (family.empty())
        family.push_back(FunctionPair{ValueTable(r.size(), Rational(1, 2)),
                                      ValueTable(r.size(), Rational(1, 2))});
    const FunctionPair combined = dyadic_combine(family);
    if (verify_representation(r, combined).holds && is_continuous(t, combined.u) &&
        is_continuous(t, combined.v))
        ++rep.dyadic_verified;
    else
        violate("dyadic-sum", "combined witnesses do not form a continuous representation");

    for (const auto& [pair, witness] : wc.witnesses) {
        const auto [x, y] = pair;
        ++rep.strict_pairs_scaled;
        const std::string where = r.label(x) + "<" + r.label(y);
        const ScalePair sc = scales_from_pair(r, t, witness, x, y, scale_depth);
        const ScaleValidity lv = validate_scale(t, sc.lower);
        const ScaleValidity uv = validate_scale(t, sc.upper);
        const PropweakConditions cond = check_propweak_conditions(r, sc.lower, sc.upper, x, y);
        const bool functions_ok = is_continuous(t, scale_to_function(sc.lower)) &&
                                  is_continuous(t, scale_to_function(sc.upper));
        if (lv.valid && uv.valid && cond.all() && functions_ok)
            ++rep.scale_round_trips;
        else
            violate("scale-round-trip",
                    where + ": " +
                        (!lv.valid ? lv.violation
                                   : !uv.valid ? uv.violation
                                               : !cond.all() ? cond.violation
                                                             : "scale function not continuous"));
    }
}

Theorem1Report audit_theorem1(std::size_t n_max, unsigned scale_depth)
{
    if (n_max > 4)
        throw std::invalid_argument("audit_theorem1: n_max must be at most 4");

    struct Task {
        std::size_t n;
        const FiniteRelation* relation;
        std::size_t index;
    };
    std::vector<std::vector<FiniteRelation>> relations(n_max + 1);
    std::vector<std::vector<FiniteTopology>> topologies(n_max + 1);
    Theorem1Report header;
    header.n_max = n_max;
    std::vector<Task> tasks;
    for (std::size_t n = 1; n <= n_max; ++n) {
        relations[n] = all_reflexive_relations(n);
        topologies[n] = all_topologies(n);
        header.relations_enumerated += relations[n].size();
        header.topologies += topologies[n].size();
        for (std::size_t i = 0; i < relations[n].size(); ++i)
            if (is_interval_order(relations[n][i]))
                tasks.push_back({n, &relations[n][i], i});
    }

    Theorem1Report body = run_parallel<Theorem1Report>(tasks.size(), [&](std::size_t k, Theorem1Report& out) {
        const Task& task = tasks[k];
        ++out.interval_orders;
        for (std::size_t ti = 0; ti < topologies[task.n].size(); ++ti) {
            const std::string id = "n=" + std::to_string(task.n) + " relation#" +
                                   std::to_string(task.index) + " topology#" + std::to_string(ti);
            audit_theorem1_instance(*task.relation, topologies[task.n][ti], id, out, scale_depth);
        }
    });
    body.n_max = header.n_max;
    body.relations_enumerated = header.relations_enumerated;
    body.topologies = header.topologies;
    return body;
}

namespace {

void audit_table(const FiniteBiorder& b, const std::vector<FiniteTopology>& tas,
                 const std::vector<FiniteTopology>& txs, const std::string& id,
                 Theorem3Report& rep)
{
    auto violate = [&](const std::string& inst, std::string check, std::string detail) {
        rep.violations.push_back({std::move(check), inst, std::move(detail)});
    };
    ++rep.tables;
    const bool ferrers = check_ferrers_biorder(b).holds;
    const bool nested = lower_sections_nested(b);
    bool built = true;
    BiorderPair weak, strict;
    try {
        weak = construct_biorder_representation(b, BiorderMode::weak);
        strict = construct_biorder_representation(b, BiorderMode::strict);
    } catch (const NotFerrers&) {
        built = false;
    }
    rep.ferrers_tables += ferrers;
    if (ferrers == nested && ferrers == built)
        ++rep.construction_agreements;
    else
        violate(id, "ferrers-agreement", "Ferrers, nested sections and staircase disagree");
    if (built) {
        if (verify_biorder_representation(b, weak, BiorderMode::weak).holds &&
            verify_biorder_representation(b, strict, BiorderMode::strict).holds)
            ++rep.staircase_sweeps_passed;
        else
            violate(id, "staircase-sweep", "constructed tables fail their biconditional");
    }

    const auto discrete_a = FiniteTopology::discrete(b.a_labels());
    const auto discrete_x = FiniteTopology::discrete(b.x_labels());
    if (decide_continuous_biorder_representation(b, discrete_a, discrete_x).feasible == ferrers)
        ++rep.discrete_agreements;
    else
        violate(id, "discrete-representability", "Ferrers does not match representability");

    const JointDensity dense = check_jointly_dense(b, full_subset(b.a_size()), full_subset(b.x_size()));
    for (std::size_t i = 0; i < tas.size(); ++i) {
        for (std::size_t j = 0; j < txs.size(); ++j) {
            const std::string inst = id + " topologies#" + std::to_string(i) + "," + std::to_string(j);
            ++rep.instances;
            rep.jointly_dense += dense.holds;
            const auto dec = decide_continuous_biorder_representation(b, tas[i], txs[j]);
            const auto wc = biorder_weakly_continuous(b, tas[i], txs[j]);
            rep.representable += dec.feasible;
            rep.weakly_continuous += wc.holds;
            if (dec.feasible == (dense.holds && wc.holds))
                ++rep.equivalence_agreements;
            else
                violate(inst, "biorder-equivalence",
                        std::string("representable=") + (dec.feasible ? "true" : "false") +
                            " weakly_continuous=" + (wc.holds ? "true" : "false"));
            if (dec.feasible) {
                const BiorderPair& p = *dec.pair;
                if (!verify_biorder_representation(b, p, BiorderMode::strict).holds ||
                    !is_continuous(tas[i], p.v) || !is_continuous(txs[j], p.u))
                    violate(inst, "representation-output", "solver pair fails verification");
            } else if (!dec.system.certifies(*dec.certificate)) {
                violate(inst, "representation-certificate", "negative cycle does not certify");
            }
            if (!wc.holds)
                continue;
            std::vector<BiorderPair> family;
            for (const auto& [pair, witness] : wc.witnesses) {
                if (!verify_biorder_almost_representation(b, witness).holds ||
                    !(witness.v[pair.first] < witness.u[pair.second]))
                    violate(inst, "witness", pair_name(b.a_labels(), b.x_labels(), pair.first,
                                                       pair.second) +
                                                 " witness fails");
                family.push_back(witness);
            }
            if (family.empty())
                family.push_back(BiorderPair{ValueTable(b.a_size(), Rational(1, 2)),
                                             ValueTable(b.x_size(), Rational(1, 2))});
            const BiorderPair combined = dyadic_combine(family);
            if (verify_biorder_representation(b, combined, BiorderMode::strict).holds &&
                is_continuous(tas[i], combined.v) && is_continuous(txs[j], combined.u))
                ++rep.dyadic_verified;
            else
                violate(inst, "dyadic-sum", "combined witnesses are not a continuous representation");
        }
    }
}

std::vector<FiniteTopology> scoped_topologies(const std::vector<std::string>& labels,
                                              TopologyScope scope)
{
    if (scope == TopologyScope::discrete_indiscrete) {
        std::vector<FiniteTopology> out{FiniteTopology::discrete(labels)};
        if (labels.size() > 1)
            out.push_back(FiniteTopology::indiscrete(labels));
        return out;
    }
    std::vector<FiniteTopology> out;
    for (const auto& t : all_topologies(labels.size())) {
        // relabel onto the biorder's labels
        out.emplace_back(labels, t.opens());
    }
    return out;
}

} // namespace

Theorem3Report audit_theorem3(std::size_t size_max, TopologyScope scope)
{
    if (size_max > 3)
        throw std::invalid_argument("audit_theorem3: size_max must be at most 3");
    struct Shape {
        std::size_t m, k;
        std::vector<FiniteBiorder> tables;
        std::vector<FiniteTopology> tas, txs;
    };
    std::vector<Shape> shapes;
    for (std::size_t m = 1; m <= size_max; ++m) {
        for (std::size_t k = 1; k <= size_max; ++k) {
            Shape s{m, k, all_biorders(m, k), {}, {}};
            s.tas = scoped_topologies(s.tables.front().a_labels(), scope);
            s.txs = scoped_topologies(s.tables.front().x_labels(), scope);
            shapes.push_back(std::move(s));
        }
    }
    struct Task {
        const Shape* shape;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (const auto& s : shapes)
        for (std::size_t i = 0; i < s.tables.size(); ++i)
            tasks.push_back({&s, i});

    Theorem3Report rep = run_parallel<Theorem3Report>(tasks.size(), [&](std::size_t k, Theorem3Report& out) {
        const Task& t = tasks[k];
        const std::string id = std::to_string(t.shape->m) + "x" + std::to_string(t.shape->k) +
                               " table#" + std::to_string(t.index);
        audit_table(t.shape->tables[t.index], t.shape->tas, t.shape->txs, id, out);
    });
    rep.size_max = size_max;
    rep.scope = scope;
    return rep;
}

} // namespace ivorder
