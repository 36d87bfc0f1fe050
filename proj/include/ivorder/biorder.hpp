#ifndef IVORDER_BIORDER_HPP
#define IVORDER_BIORDER_HPP

#include "ivorder/constraints.hpp"
#include "ivorder/rational.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/topology.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivorder {

/**
 * A relation from a labeled set A to a labeled set X, entry (a, x) set iff
 * a is strictly below x. The weak counterpart is x <= a iff not a < x.
 *
 * A and X may share labels; that is how the strict part of an interval order
 * on X is viewed as a relation from X to X.
 */
class FiniteBiorder {
  public:
    FiniteBiorder() = default;
    /// rows[a] is the set of x with a < x. Throws std::invalid_argument on
    /// duplicate labels within A or X, or on a ragged table.
    FiniteBiorder(std::vector<std::string> a_labels, std::vector<std::string> x_labels,
                  std::vector<Subset> rows);

    /// The strict part of r as a relation from r's elements to themselves.
    static FiniteBiorder from_strict_part(const FiniteRelation& r);

    std::size_t a_size() const { return a_labels_.size(); }
    std::size_t x_size() const { return x_labels_.size(); }
    const std::vector<std::string>& a_labels() const { return a_labels_; }
    const std::vector<std::string>& x_labels() const { return x_labels_; }

    bool below(std::size_t a, std::size_t x) const { return rows_[a].test(x); }
    const Subset& row(std::size_t a) const { return rows_[a]; }
    /// {a : a < x}
    Subset lower_section(std::size_t x) const;

    friend bool operator==(const FiniteBiorder&, const FiniteBiorder&) = default;

  private:
    std::vector<std::string> a_labels_;
    std::vector<std::string> x_labels_;
    std::vector<Subset> rows_;
};

/// a < x and b < y, but neither a < y nor b < x.
struct BiorderWitness {
    std::size_t a = 0, b = 0, x = 0, y = 0;
};

struct FerrersCheck {
    bool holds = false;
    std::optional<BiorderWitness> witness;
};

class NotFerrers : public std::invalid_argument {
  public:
    NotFerrers(const std::string& what, BiorderWitness w) : std::invalid_argument(what), witness_(w)
    {}
    const BiorderWitness& witness() const { return witness_; }

  private:
    BiorderWitness witness_;
};

/// Scans all quadruples and cross-checks against nestedness of the lower
/// sections {a : a < x}; a disagreement is a std::logic_error.
FerrersCheck check_ferrers_biorder(const FiniteBiorder& b);

/// True iff the sets {a : a < x} form a chain under inclusion.
bool lower_sections_nested(const FiniteBiorder& b);

/**
 * Traces of a biorder. The strict traces are the compositions
 * strict_lower = (<) then (<=) on A, and strict_upper = (<=) then (<) on X.
 * The weak traces are their complemented transposes:
 * a <=* b iff not b <* a, and x <=** y iff not y <** x.
 */
struct BiorderTraces {
    FiniteRelation strict_lower;
    FiniteRelation strict_upper;
    FiniteRelation lower;
    FiniteRelation upper;
};

BiorderTraces biorder_traces(const FiniteBiorder& b);

enum class BiorderMode { strict, weak };

/// v on A, u on X.
struct BiorderPair {
    ValueTable v;
    ValueTable u;

    friend bool operator==(const BiorderPair&, const BiorderPair&) = default;
};

struct BiorderCheck {
    bool holds = false;
    /// (a, x) of the first violation.
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// strict: a < x iff v(a) < u(x). weak: a < x iff v(a) <= u(x).
BiorderCheck verify_biorder_representation(const FiniteBiorder& b, const BiorderPair& p,
                                           BiorderMode mode);

/// (x <= a implies u(x) <= v(a)) and (a < x implies v(a) <= u(x)).
BiorderCheck verify_biorder_almost_representation(const FiniteBiorder& b, const BiorderPair& p);

/**
 * Staircase construction. The distinct sections {a : a < x}, together with
 * the empty set, are sorted into a chain; u(x) is the chain index of x's
 * section and v(a) is the first index whose set contains a (the chain
 * length when none does). Weak mode returns those integers; strict mode
 * shifts v down by 1/2. Throws NotFerrers.
 */
BiorderPair construct_biorder_representation(const FiniteBiorder& b, BiorderMode mode);

/// x <= y iff not v(y) < u(x); the inverse of viewing an interval order's
/// strict part as a biorder. Requires a square biorder.
FiniteRelation interval_order_from_biorder_pair(const FiniteBiorder& b, const BiorderPair& p);

struct JointDensity {
    bool holds = false;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Every a < x must route as a <=* b < y <=** x with b in dense_a, y in dense_x.
JointDensity check_jointly_dense(const FiniteBiorder& b, const Subset& dense_a,
                                 const Subset& dense_x);

struct BiorderWeakContinuity {
    bool holds = false;
    std::map<std::pair<std::size_t, std::size_t>, BiorderPair> witnesses;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::optional<NegativeCycle> certificate;
    ConstraintSystem system;
};

/// Per strict pair (a, x): a continuous almost representation with
/// v(a) < u(x), v constant on components of ta and u on components of tx.
BiorderWeakContinuity biorder_weakly_continuous(const FiniteBiorder& b, const FiniteTopology& ta,
                                                const FiniteTopology& tx);

struct ContinuousBiorderRepresentation {
    bool feasible = false;
    std::optional<BiorderPair> pair;
    std::optional<NegativeCycle> certificate;
    ConstraintSystem system;
};

/// Existence of a strict-mode representation continuous on ta and tx.
ContinuousBiorderRepresentation decide_continuous_biorder_representation(
    const FiniteBiorder& b, const FiniteTopology& ta, const FiniteTopology& tx);

/// Joint affine rescale of both tables onto [0,1]; a constant pair maps to 1/2.
BiorderPair rescale_to_unit(const BiorderPair& p);

/// v = sum v_n / 2^n, u = sum u_n / 2^n; out-of-range pairs are rescaled first.
BiorderPair dyadic_combine(const std::vector<BiorderPair>& pairs);

} // namespace ivorder

#endif
