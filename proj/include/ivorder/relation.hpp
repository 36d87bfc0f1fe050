#ifndef IVORDER_RELATION_HPP
#define IVORDER_RELATION_HPP

#include "ivorder/subset.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivorder {

/**
 * A binary relation on n labeled elements, stored as packed incidence rows.
 *
 * Row i holds the upper section {j : i R j}. No axiom is assumed by the type:
 * reflexivity, totality, transitivity and the Ferrers condition are queried
 * through check_axioms(). Values are immutable after construction.
 */
class FiniteRelation {
  public:
    FiniteRelation() = default;

    /// Throws std::invalid_argument on duplicate labels or a row whose
    /// length differs from the label count.
    FiniteRelation(std::vector<std::string> labels, std::vector<Subset> rows);

    static FiniteRelation empty(std::vector<std::string> labels);
    static FiniteRelation identity(std::vector<std::string> labels);
    static FiniteRelation full(std::vector<std::string> labels);

    template <class Pred>
    static FiniteRelation from_predicate(std::vector<std::string> labels, Pred related)
    {
        const std::size_t n = labels.size();
        std::vector<Subset> rows(n, Subset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (related(i, j))
                    rows[i].set(j);
        return FiniteRelation(std::move(labels), std::move(rows));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws std::invalid_argument for an unknown label.
    std::size_t index_of(std::string_view label) const;

    bool related(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    bool operator()(std::size_t i, std::size_t j) const { return related(i, j); }

    /// {j : i R j}
    const Subset& row(std::size_t i) const { return rows_[i]; }
    /// {i : i R j}
    Subset column(std::size_t j) const;

    FiniteRelation transpose() const;
    FiniteRelation complement() const;
    std::size_t pair_count() const;

    bool same_elements(const FiniteRelation& other) const { return labels_ == other.labels_; }

    friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

  private:
    std::vector<std::string> labels_;
    std::vector<Subset> rows_;
};

/// Indices (x, z, y, w) with x R z, y R w, not x R w, not y R z.
struct FerrersWitness {
    std::size_t x = 0, z = 0, y = 0, w = 0;
};

struct AxiomReport {
    bool reflexive = false;
    bool total = false;
    bool transitive = false;
    bool ferrers = false;
    bool interval_order = false;
    bool total_preorder = false;
    std::optional<FerrersWitness> ferrers_witness;
};

/// Thrown by operations that require an interval order.
class NotIntervalOrder : public std::invalid_argument {
  public:
    NotIntervalOrder(const std::string& what, std::optional<FerrersWitness> witness)
        : std::invalid_argument(what), witness_(witness)
    {}
    const std::optional<FerrersWitness>& witness() const { return witness_; }

  private:
    std::optional<FerrersWitness> witness_;
};

AxiomReport check_axioms(const FiniteRelation& r);

bool is_reflexive(const FiniteRelation& r);
bool is_total(const FiniteRelation& r);
bool is_transitive(const FiniteRelation& r);
/// First violating quadruple in row-major order of (x, y), or nullopt.
std::optional<FerrersWitness> find_ferrers_violation(const FiniteRelation& r);
bool is_interval_order(const FiniteRelation& r);
bool is_total_preorder(const FiniteRelation& r);

/// Throws NotIntervalOrder (with the Ferrers witness when there is one).
void require_interval_order(const FiniteRelation& r);

/// i R j and not j R i; irreflexive by construction.
FiniteRelation strict_part(const FiniteRelation& r);

/// (i, j) related iff some k has R(i,k) and S(k,j). Throws
/// std::invalid_argument when the element lists differ.
FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s);

/// The two inclusion orders of a relation. `lower` relates i to j iff the
/// lower section of i is contained in that of j; `upper` relates i to j iff
/// the upper section of j is contained in that of i. For an interval order
/// these are the traces and both are total preorders.
struct Traces {
    FiniteRelation lower;
    FiniteRelation upper;
};

Traces traces(const FiniteRelation& r);

struct Sections {
    Subset lower;
    Subset upper;
};

Sections sections(const FiniteRelation& r, std::size_t x);
Sections sections(const FiniteRelation& r, std::string_view label);

/// Classes of the symmetric part of a total preorder. Throws
/// std::invalid_argument when r is not a total preorder.
Partition equivalence_classes(const FiniteRelation& r);

enum class TraceKind { lower, upper };

/// Equivalence classes of the named trace of r.
Partition trace_classes(const FiniteRelation& r, TraceKind which);

std::string describe(const FiniteRelation& r, const FerrersWitness& w);

} // namespace ivorder

#endif
