#ifndef IVORDER_LEX_DEMO_HPP
#define IVORDER_LEX_DEMO_HPP

#include "ivorder/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ivorder {

/// A point of the open unit square under the lexicographic order.
struct LexPoint {
    Rational x;
    Rational y;
};

/// (a,b) strictly below (x,y) iff a < x, or a = x and b < y.
bool lex_below(const LexPoint& p, const LexPoint& q);

/// Projection on the first coordinate.
Rational lex_projection(const LexPoint& p);

/// 0 left of the vertical line x = r, y on it, 1 right of it.
Rational lex_section_function(const Rational& r, const LexPoint& p);

/// The distinct rationals p/q in (0,1) with 2 <= q <= bound, ascending.
std::vector<Rational> lex_grid_values(unsigned bound);

struct LexDemoReport {
    unsigned bound = 0;
    std::size_t grid_values = 0;
    std::size_t points = 0;
    std::size_t functions = 0;       ///< the projection plus one section function per grid value
    std::size_t ordered_pairs = 0;   ///< ordered point pairs p <= q, per function
    std::size_t weak_violations = 0;   ///< p <= q but f(p) > f(q)
    std::size_t strict_violations = 0; ///< p <  q but f(p) > f(q)
    std::size_t strict_pairs = 0;
    std::size_t separated_by_projection = 0;
    std::size_t separated_by_section = 0;
    std::size_t unseparated = 0;

    bool passed() const
    {
        return weak_violations == 0 && strict_violations == 0 && unseparated == 0;
    }
};

/**
 * Checks, on the grid of points with coordinates from lex_grid_values(bound),
 * that the projection and every section function are almost representations
 * of the lexicographic order (f(p) <= f(q) whenever p <= q), and that every
 * strict pair (a,b) < (x,y) is strictly separated by the projection when
 * a < x and by the section function at a when a = x.
 *
 * Only these order inequalities are checked. Continuity in the order
 * topology and the absence of a utility representation are not.
 * Throws std::invalid_argument when bound < 2.
 */
LexDemoReport demo_lex(unsigned bound);

} // namespace ivorder

#endif
