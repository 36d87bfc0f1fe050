#ifndef IVORDER_SCALE_HPP
#define IVORDER_SCALE_HPP

#include "ivorder/rational.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/representation.hpp"
#include "ivorder/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ivorder {

/// A finite family of open sets indexed by dyadic rationals in [0,1].
/// grid is ascending and ends with 1; sets[i] belongs to grid[i].
struct DyadicScale {
    std::vector<Rational> grid;
    std::vector<Subset> sets;

    friend bool operator==(const DyadicScale&, const DyadicScale&) = default;
};

struct ScaleValidity {
    bool valid = false;
    std::string violation;
    /// Offending index pair (r1, r2) for a nesting failure.
    std::optional<std::pair<Rational, Rational>> offending;
};

/// Checks the grid (ascending, dyadic, inside [0,1], ending at 1), that the
/// set at 1 is the whole space, that every set is open, and that
/// closure(G(r1)) is inside G(r2) whenever r1 < r2.
ScaleValidity validate_scale(const FiniteTopology& t, const DyadicScale& sc);

/// f(z) = min{r : z in G(r)}. Throws std::invalid_argument if some point is
/// in no set.
ValueTable scale_to_function(const DyadicScale& sc);

/// The dyadic grid {k / 2^depth : 1 <= k <= 2^depth}.
std::vector<Rational> dyadic_grid(unsigned depth);

/// Largest gap between consecutive members of grid + {0}.
Rational mesh(const std::vector<Rational>& grid);

/// The scale restricted to the indices in `grid`, which must be a subset
/// of sc.grid containing 1.
DyadicScale restrict_scale(const DyadicScale& sc, const std::vector<Rational>& grid);

/// {f < c} is open for every threshold c.
bool sublevel_sets_open(const FiniteTopology& t, const ValueTable& f);

struct ScalePair {
    DyadicScale lower; ///< G*: sublevel sets of v
    DyadicScale upper; ///< G**: sublevel sets of u
};

/**
 * Builds the two scales of a separated strict pair x < y from a continuous
 * almost representation p with v(x) < u(y).
 *
 * With a strictly increasing alpha on the dyadic grid of the given depth,
 * alpha(r) in (v(x), u(y)] for r < 1 and avoiding every table value, and
 * alpha(1) above every value, G*(r) = {z : v(z) < alpha(r)} and
 * G**(r) = {z : u(z) < alpha(r)}. Throws std::invalid_argument when the
 * preconditions fail.
 */
ScalePair scales_from_pair(const FiniteRelation& r, const FiniteTopology& t,
                           const FunctionPair& p, std::size_t x, std::size_t y,
                           unsigned depth = 4);

struct PropweakConditions {
    bool a_holds = false;
    bool b_holds = false;
    bool c_holds = false;
    std::string violation;

    bool all() const { return a_holds && b_holds && c_holds; }
};

/**
 * (a) z <= w and w in G*(r) imply z in G**(r);
 * (b) z < w and w in G**(r) imply z in G*(r);
 * (c) x in G*(r) and y not in G**(r) for every r except 1.
 * Throws std::invalid_argument when the two scales use different grids.
 */
PropweakConditions check_propweak_conditions(const FiniteRelation& r, const DyadicScale& lower,
                                             const DyadicScale& upper, std::size_t x,
                                             std::size_t y);

} // namespace ivorder

#endif
