#include "ivorder/relation.hpp"

#include <algorithm>
#include <set>

namespace ivorder {

FiniteRelation::FiniteRelation(std::vector<std::string> labels, std::vector<Subset> rows)
    : labels_(std::move(labels)), rows_(std::move(rows))
{
    const std::size_t n = labels_.size();
    if (rows_.size() != n)
        throw std::invalid_argument("relation needs one row per element");
    std::set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate label '" + l + "'");
    for (const auto& row : rows_)
        if (row.size() != n)
            throw std::invalid_argument("relation row has wrong length");
}

FiniteRelation FiniteRelation::empty(std::vector<std::string> labels)
{
    const std::size_t n = labels.size();
    return FiniteRelation(std::move(labels), std::vector<Subset>(n, Subset(n)));
}

FiniteRelation FiniteRelation::identity(std::vector<std::string> labels)
{
    return from_predicate(std::move(labels), [](std::size_t i, std::size_t j) { return i == j; });
}

FiniteRelation FiniteRelation::full(std::vector<std::string> labels)
{
    const std::size_t n = labels.size();
    return FiniteRelation(std::move(labels), std::vector<Subset>(n, full_subset(n)));
}

std::optional<std::size_t> FiniteRelation::find(std::string_view label) const
{
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteRelation::index_of(std::string_view label) const
{
    if (auto i = find(label))
        return *i;
    throw std::invalid_argument("unknown label '" + std::string(label) + "'");
}

Subset FiniteRelation::column(std::size_t j) const
{
    Subset col(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (rows_[i].test(j))
            col.set(i);
    return col;
}

FiniteRelation FiniteRelation::transpose() const
{
    std::vector<Subset> rows;
    rows.reserve(size());
    for (std::size_t j = 0; j < size(); ++j)
        rows.push_back(column(j));
    return FiniteRelation(labels_, std::move(rows));
}

FiniteRelation FiniteRelation::complement() const
{
    std::vector<Subset> rows;
    rows.reserve(size());
    for (const auto& row : rows_)
        rows.push_back(~row);
    return FiniteRelation(labels_, std::move(rows));
}

std::size_t FiniteRelation::pair_count() const
{
    std::size_t c = 0;
    for (const auto& row : rows_)
        c += row.count();
    return c;
}

bool is_reflexive(const FiniteRelation& r)
{
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r(i, i))
            return false;
    return true;
}

bool is_total(const FiniteRelation& r)
{
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i; j < r.size(); ++j)
            if (!r(i, j) && !r(j, i))
                return false;
    return true;
}

bool is_transitive(const FiniteRelation& r)
{
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Subset& up = r.row(i);
        for (auto j = up.find_first(); j != Subset::npos; j = up.find_next(j))
            if (!r.row(j).is_subset_of(up))
                return false;
    }
    return true;
}

// Ferrers fails at (x,z,y,w) exactly when U(x)\U(y) and U(y)\U(x) are both
// nonempty, so the upper sections must form a chain.
std::optional<FerrersWitness> find_ferrers_violation(const FiniteRelation& r)
{
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const Subset only_x = r.row(x) - r.row(y);
            if (only_x.none())
                continue;
            const Subset only_y = r.row(y) - r.row(x);
            if (only_y.none())
                continue;
            // prefer partners other than the rows' own elements: (x,x,y,y) is a
            // valid witness but reads badly
            auto pick = [](const Subset& s, std::size_t self) {
                for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
                    if (i != self)
                        return i;
                return s.find_first();
            };
            return FerrersWitness{x, pick(only_x, x), y, pick(only_y, y)};
        }
    }
    return std::nullopt;
}

bool is_interval_order(const FiniteRelation& r)
{
    return is_reflexive(r) && !find_ferrers_violation(r);
}

bool is_total_preorder(const FiniteRelation& r)
{
    return is_reflexive(r) && is_total(r) && is_transitive(r);
}

AxiomReport check_axioms(const FiniteRelation& r)
{
    AxiomReport rep;
    rep.reflexive = is_reflexive(r);
    rep.total = is_total(r);
    rep.transitive = is_transitive(r);
    rep.ferrers_witness = find_ferrers_violation(r);
    rep.ferrers = !rep.ferrers_witness.has_value();
    rep.interval_order = rep.reflexive && rep.ferrers;
    rep.total_preorder = rep.reflexive && rep.transitive && rep.total;
    return rep;
}

std::string describe(const FiniteRelation& r, const FerrersWitness& w)
{
    return r.label(w.x) + "<=" + r.label(w.z) + " and " + r.label(w.y) + "<=" + r.label(w.w) +
           " but neither " + r.label(w.x) + "<=" + r.label(w.w) + " nor " + r.label(w.y) +
           "<=" + r.label(w.z);
}

void require_interval_order(const FiniteRelation& r)
{
    if (!is_reflexive(r))
        throw NotIntervalOrder("relation is not reflexive", std::nullopt);
    if (auto w = find_ferrers_violation(r))
        throw NotIntervalOrder("Ferrers condition fails: " + describe(r, *w), w);
}

FiniteRelation strict_part(const FiniteRelation& r)
{
    const FiniteRelation t = r.transpose();
    std::vector<Subset> rows;
    rows.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        rows.push_back(r.row(i) - t.row(i));
    return FiniteRelation(r.labels(), std::move(rows));
}

FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s)
{
    if (!r.same_elements(s))
        throw std::invalid_argument("compose: relations are over different element lists");
    const std::size_t n = r.size();
    std::vector<Subset> rows(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Subset& mid = r.row(i);
        for (auto k = mid.find_first(); k != Subset::npos; k = mid.find_next(k))
            rows[i] |= s.row(k);
    }
    return FiniteRelation(r.labels(), std::move(rows));
}

Traces traces(const FiniteRelation& r)
{
    const std::size_t n = r.size();
    const FiniteRelation t = r.transpose();
    std::vector<Subset> lower(n, Subset(n)), upper(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (t.row(i).is_subset_of(t.row(j)))
                lower[i].set(j);
            if (r.row(j).is_subset_of(r.row(i)))
                upper[i].set(j);
        }
    }
    return Traces{FiniteRelation(r.labels(), std::move(lower)),
                  FiniteRelation(r.labels(), std::move(upper))};
}

Sections sections(const FiniteRelation& r, std::size_t x)
{
    if (x >= r.size())
        throw std::invalid_argument("sections: element index out of range");
    return Sections{r.column(x), r.row(x)};
}

Sections sections(const FiniteRelation& r, std::string_view label)
{
    return sections(r, r.index_of(label));
}

Partition equivalence_classes(const FiniteRelation& r)
{
    if (!is_total_preorder(r))
        throw std::invalid_argument("equivalence_classes: relation is not a total preorder");
    const std::size_t n = r.size();
    Partition classes;
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (placed[i])
            continue;
        std::vector<std::size_t> block;
        for (std::size_t j = i; j < n; ++j) {
            if (!placed[j] && r(i, j) && r(j, i)) {
                placed[j] = true;
                block.push_back(j);
            }
        }
        classes.push_back(std::move(block));
    }
    return classes;
}

Partition trace_classes(const FiniteRelation& r, TraceKind which)
{
    Traces t = traces(r);
    return equivalence_classes(which == TraceKind::lower ? t.lower : t.upper);
}

} // namespace ivorder
