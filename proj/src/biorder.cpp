#include "ivorder/biorder.hpp"

#include "rescale.hpp"

#include <algorithm>
#include <set>

namespace ivorder {

namespace {

void require_distinct(const std::vector<std::string>& labels, const char* which)
{
    std::set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw std::invalid_argument(std::string("duplicate ") + which + " label '" + l + "'");
}

std::string describe(const FiniteBiorder& b, const BiorderWitness& w)
{
    const auto& A = b.a_labels();
    const auto& X = b.x_labels();
    return A[w.a] + "<" + X[w.x] + " and " + A[w.b] + "<" + X[w.y] + " but neither " + A[w.a] +
           "<" + X[w.y] + " nor " + A[w.b] + "<" + X[w.x];
}

std::optional<BiorderWitness> scan_quadruples(const FiniteBiorder& b)
{
    for (std::size_t a = 0; a < b.a_size(); ++a)
        for (std::size_t c = 0; c < b.a_size(); ++c)
            for (std::size_t x = 0; x < b.x_size(); ++x)
                for (std::size_t y = 0; y < b.x_size(); ++y)
                    if (b.below(a, x) && b.below(c, y) && !b.below(a, y) && !b.below(c, x))
                        return BiorderWitness{a, c, x, y};
    return std::nullopt;
}

struct BiorderRoles {
    ConstraintSystem system;
    std::vector<std::size_t> v; // per a
    std::vector<std::size_t> u; // per x
};

std::vector<std::size_t> declare(ConstraintSystem& sys, const FiniteTopology& t,
                                 const std::vector<std::string>& labels, const std::string& role)
{
    std::vector<std::size_t> var(labels.size());
    for (const auto& block : components(t)) {
        std::string name = role + "{";
        for (std::size_t k = 0; k < block.size(); ++k)
            name += (k ? "," : "") + labels[block[k]];
        const std::size_t id = sys.add_variable(name + "}");
        for (std::size_t i : block)
            var[i] = id;
    }
    return var;
}

BiorderRoles declare_roles(const FiniteBiorder& b, const FiniteTopology& ta,
                           const FiniteTopology& tx)
{
    if (ta.points() != b.a_labels())
        throw std::invalid_argument("topology on A does not match the biorder's A labels");
    if (tx.points() != b.x_labels())
        throw std::invalid_argument("topology on X does not match the biorder's X labels");
    BiorderRoles r;
    r.v = declare(r.system, ta, b.a_labels(), "v");
    r.u = declare(r.system, tx, b.x_labels(), "u");
    return r;
}

BiorderPair pair_from_potentials(const BiorderRoles& r, const Potentials& pot)
{
    BiorderPair p;
    for (std::size_t id : r.v)
        p.v.emplace_back(pot.values[id]);
    for (std::size_t id : r.u)
        p.u.emplace_back(pot.values[id]);
    return p;
}

void require_tables(const FiniteBiorder& b, const BiorderPair& p)
{
    if (p.v.size() != b.a_size() || p.u.size() != b.x_size())
        throw std::invalid_argument("biorder value tables do not match the label counts");
}

} // namespace

FiniteBiorder::FiniteBiorder(std::vector<std::string> a_labels, std::vector<std::string> x_labels,
                             std::vector<Subset> rows)
    : a_labels_(std::move(a_labels)), x_labels_(std::move(x_labels)), rows_(std::move(rows))
{
    require_distinct(a_labels_, "A");
    require_distinct(x_labels_, "X");
    if (rows_.size() != a_labels_.size())
        throw std::invalid_argument("biorder needs one row per element of A");
    for (const auto& row : rows_)
        if (row.size() != x_labels_.size())
            throw std::invalid_argument("biorder row has wrong length");
}

FiniteBiorder FiniteBiorder::from_strict_part(const FiniteRelation& r)
{
    const FiniteRelation s = strict_part(r);
    std::vector<Subset> rows;
    for (std::size_t i = 0; i < s.size(); ++i)
        rows.push_back(s.row(i));
    return FiniteBiorder(r.labels(), r.labels(), std::move(rows));
}

Subset FiniteBiorder::lower_section(std::size_t x) const
{
    Subset s(a_size());
    for (std::size_t a = 0; a < a_size(); ++a)
        if (rows_[a].test(x))
            s.set(a);
    return s;
}

bool lower_sections_nested(const FiniteBiorder& b)
{
    for (std::size_t x = 0; x < b.x_size(); ++x) {
        const Subset lx = b.lower_section(x);
        for (std::size_t y = x + 1; y < b.x_size(); ++y) {
            const Subset ly = b.lower_section(y);
            if (!lx.is_subset_of(ly) && !ly.is_subset_of(lx))
                return false;
        }
    }
    return true;
}

FerrersCheck check_ferrers_biorder(const FiniteBiorder& b)
{
    FerrersCheck out;
    out.witness = scan_quadruples(b);
    out.holds = !out.witness;
    if (out.holds != lower_sections_nested(b))
        throw std::logic_error("Ferrers quadruple scan disagrees with the nested-section test");
    return out;
}

// Both compositions run through relations::compose on the disjoint union
// A + X, with labels tagged so shared A/X labels stay distinct.
BiorderTraces biorder_traces(const FiniteBiorder& b)
{
    const std::size_t m = b.a_size();
    std::vector<std::string> labels;
    for (const auto& a : b.a_labels())
        labels.push_back("A:" + a);
    for (const auto& x : b.x_labels())
        labels.push_back("X:" + x);

    const FiniteRelation below = FiniteRelation::from_predicate(labels, [&](std::size_t i, std::size_t j) {
        return i < m && j >= m && b.below(i, j - m);
    });
    const FiniteRelation weak = FiniteRelation::from_predicate(labels, [&](std::size_t i, std::size_t j) {
        return i >= m && j < m && !b.below(j, i - m);
    });
    const FiniteRelation on_a = compose(below, weak);
    const FiniteRelation on_x = compose(weak, below);

    const FiniteRelation strict_lower = FiniteRelation::from_predicate(
        b.a_labels(), [&](std::size_t i, std::size_t j) { return on_a(i, j); });
    const FiniteRelation strict_upper = FiniteRelation::from_predicate(
        b.x_labels(), [&](std::size_t i, std::size_t j) { return on_x(m + i, m + j); });
    return BiorderTraces{strict_lower, strict_upper, strict_lower.transpose().complement(),
                         strict_upper.transpose().complement()};
}

BiorderCheck verify_biorder_representation(const FiniteBiorder& b, const BiorderPair& p,
                                           BiorderMode mode)
{
    require_tables(b, p);
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            const bool numeric = mode == BiorderMode::strict ? p.v[a] < p.u[x] : p.v[a] <= p.u[x];
            if (numeric != b.below(a, x))
                return {false, std::pair{a, x}};
        }
    }
    return {true, std::nullopt};
}

BiorderCheck verify_biorder_almost_representation(const FiniteBiorder& b, const BiorderPair& p)
{
    require_tables(b, p);
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            const bool ok = b.below(a, x) ? p.v[a] <= p.u[x] : p.u[x] <= p.v[a];
            if (!ok)
                return {false, std::pair{a, x}};
        }
    }
    return {true, std::nullopt};
}

BiorderPair construct_biorder_representation(const FiniteBiorder& b, BiorderMode mode)
{
    const FerrersCheck ferrers = check_ferrers_biorder(b);
    if (!ferrers.holds)
        throw NotFerrers("not a Ferrers relation: " + describe(b, *ferrers.witness),
                         *ferrers.witness);

    std::vector<Subset> chain{Subset(b.a_size())};
    for (std::size_t x = 0; x < b.x_size(); ++x)
        chain.push_back(b.lower_section(x));
    std::sort(chain.begin(), chain.end(),
              [](const Subset& s, const Subset& t) { return s.count() < t.count(); });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

    BiorderPair p;
    for (std::size_t x = 0; x < b.x_size(); ++x) {
        const auto at = std::find(chain.begin(), chain.end(), b.lower_section(x));
        p.u.emplace_back(static_cast<long long>(at - chain.begin()));
    }
    const Rational shift = mode == BiorderMode::strict ? Rational(1, 2) : Rational(0);
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        std::size_t first = chain.size();
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].test(a)) {
                first = i;
                break;
            }
        }
        p.v.push_back(Rational(static_cast<long long>(first)) - shift);
    }
    if (!verify_biorder_representation(b, p, mode).holds)
        throw std::logic_error("biorder staircase failed its own biconditional sweep");
    return p;
}

FiniteRelation interval_order_from_biorder_pair(const FiniteBiorder& b, const BiorderPair& p)
{
    if (b.a_labels() != b.x_labels())
        throw std::invalid_argument("interval order bridge needs a biorder from X to X");
    require_tables(b, p);
    return FiniteRelation::from_predicate(b.x_labels(), [&](std::size_t x, std::size_t y) {
        return !(p.v[y] < p.u[x]);
    });
}

JointDensity check_jointly_dense(const FiniteBiorder& b, const Subset& dense_a,
                                 const Subset& dense_x)
{
    if (dense_a.size() != b.a_size() || dense_x.size() != b.x_size())
        throw std::invalid_argument("dense subsets have wrong length");
    const BiorderTraces tr = biorder_traces(b);
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            if (!b.below(a, x))
                continue;
            const Subset from = tr.lower.row(a) & dense_a;
            const Subset to = tr.upper.column(x) & dense_x;
            bool routed = false;
            for (auto c = from.find_first(); c != Subset::npos && !routed; c = from.find_next(c))
                routed = b.row(c).intersects(to);
            if (!routed)
                return {false, std::pair{a, x}};
        }
    }
    return {true, std::nullopt};
}

BiorderWeakContinuity biorder_weakly_continuous(const FiniteBiorder& b, const FiniteTopology& ta,
                                                const FiniteTopology& tx)
{
    BiorderRoles roles = declare_roles(b, ta, tx);
    const auto& A = b.a_labels();
    const auto& X = b.x_labels();
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            if (b.below(a, x))
                roles.system.add(roles.v[a], roles.u[x], 0, A[a] + "<" + X[x]);
            else
                roles.system.add(roles.u[x], roles.v[a], 0, X[x] + "<=" + A[a]);
        }
    }

    BiorderWeakContinuity out;
    out.holds = true;
    for (std::size_t a = 0; a < b.a_size() && out.holds; ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            if (!b.below(a, x))
                continue;
            roles.system.add(roles.v[a], roles.u[x], -1, "separate " + A[a] + "<" + X[x]);
            SolveResult res = roles.system.solve();
            if (auto* pot = std::get_if<Potentials>(&res)) {
                out.witnesses.emplace(std::pair{a, x},
                                      rescale_to_unit(pair_from_potentials(roles, *pot)));
                roles.system.pop_back();
            } else {
                out.holds = false;
                out.failing_pair = std::pair{a, x};
                out.certificate = std::get<NegativeCycle>(std::move(res));
                break;
            }
        }
    }
    out.system = std::move(roles.system);
    return out;
}

ContinuousBiorderRepresentation decide_continuous_biorder_representation(
    const FiniteBiorder& b, const FiniteTopology& ta, const FiniteTopology& tx)
{
    BiorderRoles roles = declare_roles(b, ta, tx);
    const auto& A = b.a_labels();
    const auto& X = b.x_labels();
    for (std::size_t a = 0; a < b.a_size(); ++a) {
        for (std::size_t x = 0; x < b.x_size(); ++x) {
            if (b.below(a, x))
                roles.system.add(roles.v[a], roles.u[x], -1, A[a] + "<" + X[x]);
            else
                roles.system.add(roles.u[x], roles.v[a], 0, X[x] + "<=" + A[a]);
        }
    }
    ContinuousBiorderRepresentation out;
    SolveResult res = roles.system.solve();
    if (auto* pot = std::get_if<Potentials>(&res)) {
        out.feasible = true;
        out.pair = rescale_to_unit(pair_from_potentials(roles, *pot));
    } else {
        out.certificate = std::get<NegativeCycle>(std::move(res));
    }
    out.system = std::move(roles.system);
    return out;
}

BiorderPair rescale_to_unit(const BiorderPair& p)
{
    BiorderPair out = p;
    detail::rescale_jointly(out.v, out.u);
    return out;
}

BiorderPair dyadic_combine(const std::vector<BiorderPair>& pairs)
{
    if (pairs.empty())
        throw std::invalid_argument("dyadic_combine needs at least one pair");
    const std::size_t m = pairs.front().v.size(), k = pairs.front().u.size();
    BiorderPair sum{ValueTable(m, Rational(0)), ValueTable(k, Rational(0))};
    Rational weight(1, 2);
    for (const auto& raw : pairs) {
        if (raw.v.size() != m || raw.u.size() != k)
            throw std::invalid_argument("dyadic_combine: pairs have different shapes");
        const BiorderPair p = detail::within_unit(raw.v, raw.u) ? raw : rescale_to_unit(raw);
        for (std::size_t a = 0; a < m; ++a)
            sum.v[a] += weight * p.v[a];
        for (std::size_t x = 0; x < k; ++x)
            sum.u[x] += weight * p.u[x];
        weight /= 2;
    }
    return sum;
}

} // namespace ivorder
