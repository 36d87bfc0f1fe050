#ifndef IVORDER_REPRESENTATION_HPP
#define IVORDER_REPRESENTATION_HPP

#include "ivorder/constraints.hpp"
#include "ivorder/rational.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/topology.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ivorder {

/// Two exact value tables over the same elements, read as x <= y iff u(x) <= v(y).
struct FunctionPair {
    ValueTable u;
    ValueTable v;

    friend bool operator==(const FunctionPair&, const FunctionPair&) = default;
};

using ElementPair = std::pair<std::size_t, std::size_t>;

struct PairCheck {
    bool holds = false;
    /// First violating ordered pair, row-major.
    std::optional<ElementPair> counterexample;
};

/// x R y iff u(x) <= v(y), at every ordered pair.
PairCheck verify_representation(const FiniteRelation& r, const FunctionPair& p);

/// (z R w implies u(z) <= v(w)) and (z strictly below w implies v(z) <= u(w)).
PairCheck verify_almost_representation(const FiniteRelation& r, const FunctionPair& p);

/**
 * Staircase representation of an interval order.
 *
 * The distinct strict lower sections are nested; sorted into a chain
 * L_0 < ... < L_k, u(x) is the index of L(x) and v(x) is one less than the
 * first index whose set contains x (k + 1 when none does). Throws
 * NotIntervalOrder.
 */
FunctionPair construct_representation(const FiniteRelation& r);

/// Affine map of both tables, jointly, onto [0,1]; a constant pair maps to 1/2.
FunctionPair rescale_to_unit(const FunctionPair& p);

struct ContinuousRepresentation {
    bool feasible = false;
    std::optional<FunctionPair> pair;
    std::optional<NegativeCycle> certificate;
    ConstraintSystem system;
};

/**
 * Decides whether a representation exists whose tables are both continuous
 * on t. One u and one v unknown per component of t; x <= y contributes
 * u - v <= 0 and its failure contributes v - u <= -1. A feasible solution is
 * rescaled into [0,1]. Throws std::invalid_argument on mismatched elements.
 */
ContinuousRepresentation decide_continuous_representation(const FiniteRelation& r,
                                                          const FiniteTopology& t);

struct WeakContinuity {
    bool holds = false;
    /// One continuous almost representation per strict pair (x, y), with v(x) < u(y).
    std::map<ElementPair, FunctionPair> witnesses;
    std::optional<ElementPair> failing_pair;
    std::optional<NegativeCycle> certificate;
    /// The almost-representation system; when a pair fails, it also carries
    /// that pair's separation constraint as its last entry.
    ConstraintSystem system;
};

/// Throws NotIntervalOrder when r is not an interval order.
WeakContinuity is_weakly_continuous(const FiniteRelation& r, const FiniteTopology& t);

/// u = sum p_n.u / 2^n, v = sum p_n.v / 2^n (n from 1). A pair with any
/// value outside [0,1] is first passed through rescale_to_unit. Throws
/// std::invalid_argument on an empty list or ragged tables.
FunctionPair dyadic_combine(const std::vector<FunctionPair>& pairs);

struct Separability {
    bool holds = false;
    std::optional<ElementPair> failing_strict_pair;
    Subset minimal_dense;
};

/// x strictly below y must route as x <=* d <  d' <=** y with d, d' in `dense`.
/// minimal_dense greedily shrinks the full set. Throws NotIntervalOrder.
Separability check_io_separability(const FiniteRelation& r, const Subset& dense);

} // namespace ivorder

#endif
