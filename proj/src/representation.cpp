#include "ivorder/representation.hpp"

#include "rescale.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivorder {

namespace {

// One u and one v unknown per component; elements of a component share them.
struct RoleVariables {
    ConstraintSystem system;
    std::vector<std::size_t> u;
    std::vector<std::size_t> v;
};

RoleVariables declare_roles(const std::vector<std::string>& labels, const FiniteTopology& t)
{
    const Partition blocks = components(t);
    RoleVariables rv;
    rv.u.resize(labels.size());
    rv.v.resize(labels.size());
    for (const auto& block : blocks) {
        std::string name = "{";
        for (std::size_t k = 0; k < block.size(); ++k)
            name += (k ? "," : "") + labels[block[k]];
        name += "}";
        const std::size_t uv = rv.system.add_variable("u" + name);
        const std::size_t vv = rv.system.add_variable("v" + name);
        for (std::size_t x : block) {
            rv.u[x] = uv;
            rv.v[x] = vv;
        }
    }
    return rv;
}

FunctionPair pair_from_potentials(const RoleVariables& rv, const Potentials& pot)
{
    FunctionPair p;
    for (std::size_t x = 0; x < rv.u.size(); ++x) {
        p.u.emplace_back(pot.values[rv.u[x]]);
        p.v.emplace_back(pot.values[rv.v[x]]);
    }
    return p;
}

void require_same_elements(const FiniteRelation& r, const FiniteTopology& t)
{
    if (r.labels() != t.points())
        throw std::invalid_argument("relation and topology are over different element lists");
}

void require_tables(const FiniteRelation& r, const FunctionPair& p)
{
    if (p.u.size() != r.size() || p.v.size() != r.size())
        throw std::invalid_argument("function tables do not match the element count");
}

} // namespace

PairCheck verify_representation(const FiniteRelation& r, const FunctionPair& p)
{
    require_tables(r, p);
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (r(x, y) != (p.u[x] <= p.v[y]))
                return {false, ElementPair{x, y}};
    return {true, std::nullopt};
}

PairCheck verify_almost_representation(const FiniteRelation& r, const FunctionPair& p)
{
    require_tables(r, p);
    for (std::size_t z = 0; z < r.size(); ++z) {
        for (std::size_t w = 0; w < r.size(); ++w) {
            if (r(z, w) && !(p.u[z] <= p.v[w]))
                return {false, ElementPair{z, w}};
            if (r(z, w) && !r(w, z) && !(p.v[z] <= p.u[w]))
                return {false, ElementPair{z, w}};
        }
    }
    return {true, std::nullopt};
}

FunctionPair construct_representation(const FiniteRelation& r)
{
    require_interval_order(r);
    const std::size_t n = r.size();
    const FiniteRelation strict = strict_part(r);

    std::vector<Subset> chain;
    chain.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
        chain.push_back(strict.column(x));
    std::sort(chain.begin(), chain.end(),
              [](const Subset& a, const Subset& b) { return a.count() < b.count(); });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

    FunctionPair p;
    for (std::size_t x = 0; x < n; ++x) {
        const Subset lower = strict.column(x);
        const auto at = std::find(chain.begin(), chain.end(), lower);
        p.u.emplace_back(static_cast<long long>(at - chain.begin()));
        std::size_t first = chain.size();
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].test(x)) {
                first = i;
                break;
            }
        }
        p.v.emplace_back(static_cast<long long>(first) - 1);
    }
    if (!verify_representation(r, p).holds)
        throw std::logic_error("staircase construction produced a non-representation");
    return p;
}

FunctionPair rescale_to_unit(const FunctionPair& p)
{
    FunctionPair out = p;
    detail::rescale_jointly(out.u, out.v);
    return out;
}

ContinuousRepresentation decide_continuous_representation(const FiniteRelation& r,
                                                          const FiniteTopology& t)
{
    require_same_elements(r, t);
    RoleVariables rv = declare_roles(r.labels(), t);
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = 0; y < r.size(); ++y) {
            if (r(x, y))
                rv.system.add(rv.u[x], rv.v[y], 0, r.label(x) + "<=" + r.label(y));
            else
                rv.system.add(rv.v[y], rv.u[x], -1, "not " + r.label(x) + "<=" + r.label(y));
        }
    }

    ContinuousRepresentation out;
    SolveResult res = rv.system.solve();
    if (auto* pot = std::get_if<Potentials>(&res)) {
        out.feasible = true;
        out.pair = rescale_to_unit(pair_from_potentials(rv, *pot));
    } else {
        out.certificate = std::get<NegativeCycle>(std::move(res));
    }
    out.system = std::move(rv.system);
    return out;
}

WeakContinuity is_weakly_continuous(const FiniteRelation& r, const FiniteTopology& t)
{
    require_interval_order(r);
    require_same_elements(r, t);
    const FiniteRelation strict = strict_part(r);
    RoleVariables rv = declare_roles(r.labels(), t);
    for (std::size_t z = 0; z < r.size(); ++z) {
        for (std::size_t w = 0; w < r.size(); ++w) {
            if (r(z, w))
                rv.system.add(rv.u[z], rv.v[w], 0, r.label(z) + "<=" + r.label(w));
            if (strict(z, w))
                rv.system.add(rv.v[z], rv.u[w], 0, r.label(z) + "<" + r.label(w));
        }
    }

    WeakContinuity out;
    out.holds = true;
    for (std::size_t x = 0; x < r.size() && out.holds; ++x) {
        const Subset& above = strict.row(x);
        for (auto y = above.find_first(); y != Subset::npos; y = above.find_next(y)) {
            rv.system.add(rv.v[x], rv.u[y], -1, "separate " + r.label(x) + "<" + r.label(y));
            SolveResult res = rv.system.solve();
            if (auto* pot = std::get_if<Potentials>(&res)) {
                out.witnesses.emplace(ElementPair{x, y},
                                      rescale_to_unit(pair_from_potentials(rv, *pot)));
                rv.system.pop_back();
            } else {
                out.holds = false;
                out.failing_pair = ElementPair{x, y};
                out.certificate = std::get<NegativeCycle>(std::move(res));
                break;
            }
        }
    }
    out.system = std::move(rv.system);
    return out;
}

FunctionPair dyadic_combine(const std::vector<FunctionPair>& pairs)
{
    if (pairs.empty())
        throw std::invalid_argument("dyadic_combine needs at least one pair");
    const std::size_t n = pairs.front().u.size();
    FunctionPair sum{ValueTable(n, Rational(0)), ValueTable(n, Rational(0))};
    Rational weight(1, 2);
    for (const auto& raw : pairs) {
        if (raw.u.size() != n || raw.v.size() != n)
            throw std::invalid_argument("dyadic_combine: pairs have different element counts");
        const FunctionPair p = detail::within_unit(raw.u, raw.v) ? raw : rescale_to_unit(raw);
        for (std::size_t x = 0; x < n; ++x) {
            sum.u[x] += weight * p.u[x];
            sum.v[x] += weight * p.v[x];
        }
        weight /= 2;
    }
    return sum;
}

namespace {

struct DensityContext {
    Traces tr;
    FiniteRelation strict;
};

std::optional<ElementPair> first_unrouted(const FiniteRelation& r, const DensityContext& ctx,
                                          const Subset& dense)
{
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        const Subset& above = ctx.strict.row(x);
        for (auto y = above.find_first(); y != Subset::npos; y = above.find_next(y)) {
            // candidates d with x <=* d, and d' with d' <=** y
            const Subset from = ctx.tr.lower.row(x) & dense;
            const Subset to = ctx.tr.upper.column(y) & dense;
            bool routed = false;
            for (auto d = from.find_first(); d != Subset::npos && !routed; d = from.find_next(d))
                routed = ctx.strict.row(d).intersects(to);
            if (!routed)
                return ElementPair{x, y};
        }
    }
    return std::nullopt;
}

} // namespace

Separability check_io_separability(const FiniteRelation& r, const Subset& dense)
{
    require_interval_order(r);
    if (dense.size() != r.size())
        throw std::invalid_argument("dense subset has wrong length");
    const DensityContext ctx{traces(r), strict_part(r)};

    Separability out;
    out.failing_strict_pair = first_unrouted(r, ctx, dense);
    out.holds = !out.failing_strict_pair;

    Subset kept = full_subset(r.size());
    for (std::size_t d = 0; d < r.size(); ++d) {
        kept.reset(d);
        if (first_unrouted(r, ctx, kept))
            kept.set(d);
    }
    out.minimal_dense = kept;
    return out;
}

} // namespace ivorder
