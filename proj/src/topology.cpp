#include "ivorder/topology.hpp"

#include <algorithm>
#include <numeric>

namespace ivorder {

namespace {

bool open_order(const Subset& a, const Subset& b)
{
    if (a.count() != b.count())
        return a.count() < b.count();
    return to_membership_string(a) > to_membership_string(b);
}

} // namespace

std::optional<std::string> FiniteTopology::validation_error(std::size_t n,
                                                            const std::vector<Subset>& opens)
{
    std::set<Subset> seen;
    for (const auto& o : opens) {
        if (o.size() != n)
            return "open set " + to_membership_string(o) + " has wrong length";
        if (!seen.insert(o).second)
            return "duplicate open set " + to_membership_string(o);
    }
    if (!seen.count(Subset(n)))
        return std::string("missing ∅ ∈ opens");
    if (!seen.count(full_subset(n)))
        return std::string("missing X ∈ opens");
    for (auto a = seen.begin(); a != seen.end(); ++a) {
        for (auto b = std::next(a); b != seen.end(); ++b) {
            const Subset u = *a | *b;
            if (!seen.count(u))
                return "missing union " + to_membership_string(*a) + " ∪ " +
                       to_membership_string(*b) + " = " + to_membership_string(u);
            const Subset i = *a & *b;
            if (!seen.count(i))
                return "missing intersection " + to_membership_string(*a) + " ∩ " +
                       to_membership_string(*b) + " = " + to_membership_string(i);
        }
    }
    return std::nullopt;
}

FiniteTopology::FiniteTopology(std::vector<std::string> points, std::vector<Subset> opens)
    : points_(std::move(points)), opens_(std::move(opens))
{
    const std::size_t n = points_.size();
    std::set<std::string_view> labels;
    for (const auto& p : points_)
        if (!labels.insert(p).second)
            throw TopologyError("duplicate point label '" + p + "'");
    if (auto err = validation_error(n, opens_))
        throw TopologyError(*err);
    std::sort(opens_.begin(), opens_.end(), open_order);
    lookup_.insert(opens_.begin(), opens_.end());
    minimal_.assign(n, full_subset(n));
    for (const auto& o : opens_)
        for (auto x = o.find_first(); x != Subset::npos; x = o.find_next(x))
            minimal_[x] &= o;
}

FiniteTopology FiniteTopology::discrete(std::vector<std::string> points)
{
    const std::size_t n = points.size();
    std::vector<Subset> opens;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask)
        opens.emplace_back(n, mask);
    return FiniteTopology(std::move(points), std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::vector<std::string> points)
{
    const std::size_t n = points.size();
    std::vector<Subset> opens{Subset(n)};
    if (n > 0)
        opens.push_back(full_subset(n));
    return FiniteTopology(std::move(points), std::move(opens));
}

FiniteTopology FiniteTopology::from_specialization(const FiniteRelation& preorder)
{
    const std::size_t n = preorder.size();
    std::vector<Subset> opens;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        Subset s(n, mask);
        bool up_closed = true;
        for (auto x = s.find_first(); x != Subset::npos && up_closed; x = s.find_next(x))
            up_closed = preorder.row(x).is_subset_of(s);
        if (up_closed)
            opens.push_back(std::move(s));
    }
    return FiniteTopology(preorder.labels(), std::move(opens));
}

Subset interior(const FiniteTopology& t, const Subset& s)
{
    Subset out(t.size());
    for (const auto& o : t.opens())
        if (o.is_subset_of(s))
            out |= o;
    return out;
}

Subset closure(const FiniteTopology& t, const Subset& s)
{
    return ~interior(t, ~s);
}

FiniteRelation specialization(const FiniteTopology& t)
{
    std::vector<Subset> rows;
    rows.reserve(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        rows.push_back(t.minimal_neighbourhood(x));
    return FiniteRelation(t.points(), std::move(rows));
}

std::vector<std::size_t> component_index(const FiniteTopology& t)
{
    const std::size_t n = t.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t x = 0; x < n; ++x) {
        const Subset& nb = t.minimal_neighbourhood(x);
        for (auto y = nb.find_first(); y != Subset::npos; y = nb.find_next(y))
            parent[find(x)] = find(y);
    }
    std::vector<std::size_t> index(n, n), root_index(n, n);
    std::size_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t r = find(x);
        if (root_index[r] == n)
            root_index[r] = next++;
        index[x] = root_index[r];
    }
    return index;
}

Partition components(const FiniteTopology& t)
{
    const auto index = component_index(t);
    Partition blocks;
    for (std::size_t x = 0; x < index.size(); ++x) {
        if (index[x] == blocks.size())
            blocks.emplace_back();
        blocks[index[x]].push_back(x);
    }
    return blocks;
}

bool is_continuous(const FiniteTopology& t, const ValueTable& f)
{
    if (f.size() != t.size())
        throw std::invalid_argument("is_continuous: value table size differs from point count");
    std::vector<Rational> values(f.begin(), f.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const Rational c = (values[k] + values[k + 1]) / 2;
        Subset below(t.size()), above(t.size());
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (f[x] < c)
                below.set(x);
            else if (f[x] > c)
                above.set(x);
        }
        if (!t.is_open(below) || !t.is_open(above))
            return false;
    }
    return true;
}

Semicontinuity relation_semicontinuity(const FiniteTopology& t, const FiniteRelation& r)
{
    if (t.points() != r.labels())
        throw std::invalid_argument("relation and topology are over different element lists");
    const FiniteRelation strict = strict_part(r);
    Semicontinuity s;
    s.upper = true;
    s.lower = true;
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (s.upper && !t.is_open(strict.column(x)))
            s.upper = false;
        if (s.lower && !t.is_open(strict.row(x)))
            s.lower = false;
    }
    s.continuous = s.upper && s.lower;
    return s;
}

bool is_monotone_set(const Subset& s, const FiniteRelation& strict, Direction dir)
{
    for (auto w = s.find_first(); w != Subset::npos; w = s.find_next(w)) {
        const Subset reach = dir == Direction::decreasing ? strict.column(w) : strict.row(w);
        if (!reach.is_subset_of(s))
            return false;
    }
    return true;
}

AlmostSemicontinuity check_almost_semicontinuity(const FiniteTopology& t,
                                                 const FiniteRelation& r, Side side,
                                                 const FiniteRelation& monotone_wrt)
{
    if (!is_total_preorder(r))
        throw std::invalid_argument("almost semicontinuity is defined for total preorders");
    if (t.points() != r.labels() || monotone_wrt.labels() != r.labels())
        throw std::invalid_argument("relation and topology are over different element lists");
    const FiniteRelation strict = strict_part(r);
    const Direction dir = side == Side::upper ? Direction::decreasing : Direction::increasing;

    std::vector<const Subset*> monotone_opens;
    for (const auto& o : t.opens())
        if (is_monotone_set(o, monotone_wrt, dir))
            monotone_opens.push_back(&o);

    AlmostSemicontinuity out;
    out.holds = true;
    out.witness.resize(r.size());
    for (std::size_t x = 0; x < r.size(); ++x) {
        const Subset section = side == Side::upper ? strict.column(x) : strict.row(x);
        std::optional<Subset> acc;
        for (const Subset* o : monotone_opens) {
            if (o->test(x) || !section.is_subset_of(*o))
                continue;
            acc = acc ? (*acc | *o) : *o;
        }
        if (!acc && out.holds) {
            out.holds = false;
            out.failing_point = x;
        }
        out.witness[x] = std::move(acc);
    }
    return out;
}

} // namespace ivorder
