#ifndef IVORDER_TOPOLOGY_HPP
#define IVORDER_TOPOLOGY_HPP

#include "ivorder/rational.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/subset.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ivorder {

/// Raised when a family of subsets is not a topology.
class TopologyError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A topology on a finite labeled point set, stored extensionally as its
 * family of open sets.
 *
 * The constructor validates: the empty set and the full set are open, the
 * family is closed under pairwise union and intersection, and no subset is
 * listed twice. On a finite set that is the whole topology axiom system.
 */
class FiniteTopology {
  public:
    FiniteTopology() = default;
    FiniteTopology(std::vector<std::string> points, std::vector<Subset> opens);

    static FiniteTopology discrete(std::vector<std::string> points);
    static FiniteTopology indiscrete(std::vector<std::string> points);
    /// Opens are the up-sets of `preorder`: x in O and x <= y imply y in O.
    static FiniteTopology from_specialization(const FiniteRelation& preorder);

    /// nullopt when `opens` is a valid topology on n points, otherwise the
    /// first problem found.
    static std::optional<std::string> validation_error(std::size_t n,
                                                       const std::vector<Subset>& opens);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(std::size_t i) const { return points_.at(i); }
    /// Sorted by cardinality, then by membership string.
    const std::vector<Subset>& opens() const { return opens_; }

    bool is_open(const Subset& s) const { return lookup_.count(s) != 0; }
    bool is_closed(const Subset& s) const { return is_open(~s); }

    /// Intersection of all opens containing x.
    const Subset& minimal_neighbourhood(std::size_t x) const { return minimal_[x]; }

  private:
    std::vector<std::string> points_;
    std::vector<Subset> opens_;
    std::set<Subset> lookup_;
    std::vector<Subset> minimal_;
};

/// Smallest closed set containing s.
Subset closure(const FiniteTopology& t, const Subset& s);
/// Largest open set contained in s.
Subset interior(const FiniteTopology& t, const Subset& s);

/// x related to y iff every open containing x contains y.
FiniteRelation specialization(const FiniteTopology& t);

/// Connected components of the comparability graph of the specialization
/// preorder. A real function is continuous iff it is constant on each block.
Partition components(const FiniteTopology& t);

/// Component number of each point, numbered in order of first appearance.
std::vector<std::size_t> component_index(const FiniteTopology& t);

/// Checks every threshold strictly between consecutive distinct values of f:
/// both {f < c} and {f > c} must be open.
bool is_continuous(const FiniteTopology& t, const ValueTable& f);

struct Semicontinuity {
    bool upper = false;
    bool lower = false;
    bool continuous = false;
};

/// upper: every strict lower section is open; lower: every strict upper
/// section is open. Throws std::invalid_argument on mismatched elements.
Semicontinuity relation_semicontinuity(const FiniteTopology& t, const FiniteRelation& r);

enum class Direction { decreasing, increasing };

/// decreasing: w in s and z < w imply z in s. increasing is the dual.
bool is_monotone_set(const Subset& s, const FiniteRelation& strict, Direction dir);

enum class Side { upper, lower };

struct AlmostSemicontinuity {
    bool holds = false;
    /// Per point, the union of all qualifying opens, or nullopt if none qualifies.
    std::vector<std::optional<Subset>> witness;
    std::optional<std::size_t> failing_point;
};

/**
 * Almost upper (lower) semicontinuity of a total preorder.
 *
 * For side == upper, point x is fine when some open O has x not in O,
 * O containing the strict lower section of x, and O decreasing with respect
 * to `monotone_wrt` (read as a strict relation). side == lower uses strict
 * upper sections and increasing sets. The union of all qualifying opens
 * qualifies whenever any does, so it is reported as the witness.
 *
 * Throws std::invalid_argument when r is not a total preorder.
 */
AlmostSemicontinuity check_almost_semicontinuity(const FiniteTopology& t,
                                                 const FiniteRelation& r, Side side,
                                                 const FiniteRelation& monotone_wrt);

} // namespace ivorder

#endif
