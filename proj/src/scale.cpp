#include "ivorder/scale.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivorder {

ScaleValidity validate_scale(const FiniteTopology& t, const DyadicScale& sc)
{
    auto fail = [](std::string why) { return ScaleValidity{false, std::move(why), std::nullopt}; };
    if (sc.grid.empty())
        return fail("empty index set");
    if (sc.grid.size() != sc.sets.size())
        return fail("index set and family have different sizes");
    for (std::size_t i = 0; i < sc.grid.size(); ++i) {
        const Rational& r = sc.grid[i];
        if (r < 0 || r > 1)
            return fail("index " + to_string(r) + " outside [0,1]");
        if (!is_dyadic(r))
            return fail("index " + to_string(r) + " is not dyadic");
        if (i > 0 && !(sc.grid[i - 1] < r))
            return fail("indices not strictly ascending at " + to_string(r));
        if (sc.sets[i].size() != t.size())
            return fail("set at " + to_string(r) + " has wrong length");
    }
    if (sc.grid.back() != 1)
        return fail("1 is not in the index set");
    if (!sc.sets.back().all())
        return fail("G(1) is not the whole space");
    for (std::size_t i = 0; i < sc.grid.size(); ++i)
        if (!t.is_open(sc.sets[i]))
            return fail("G(" + to_string(sc.grid[i]) + ") is not open");
    for (std::size_t i = 0; i < sc.grid.size(); ++i) {
        const Subset cl = closure(t, sc.sets[i]);
        for (std::size_t j = i + 1; j < sc.grid.size(); ++j) {
            if (!cl.is_subset_of(sc.sets[j])) {
                ScaleValidity v{false,
                                "closure of G(" + to_string(sc.grid[i]) + ") is not inside G(" +
                                    to_string(sc.grid[j]) + ")",
                                std::pair{sc.grid[i], sc.grid[j]}};
                return v;
            }
        }
    }
    return ScaleValidity{true, {}, std::nullopt};
}

ValueTable scale_to_function(const DyadicScale& sc)
{
    if (sc.sets.empty())
        throw std::invalid_argument("scale_to_function: empty scale");
    const std::size_t n = sc.sets.front().size();
    ValueTable f;
    f.reserve(n);
    for (std::size_t z = 0; z < n; ++z) {
        std::optional<Rational> best;
        for (std::size_t i = 0; i < sc.grid.size(); ++i)
            if (sc.sets[i].test(z) && (!best || sc.grid[i] < *best))
                best = sc.grid[i];
        if (!best)
            throw std::invalid_argument("scale_to_function: a point lies in no set of the scale");
        f.push_back(*best);
    }
    return f;
}

std::vector<Rational> dyadic_grid(unsigned depth)
{
    if (depth > 30)
        throw std::invalid_argument("dyadic grid depth too large");
    const long long steps = 1LL << depth;
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (long long k = 1; k <= steps; ++k)
        grid.emplace_back(k, steps);
    return grid;
}

Rational mesh(const std::vector<Rational>& grid)
{
    Rational prev = 0, widest = 0;
    for (const auto& r : grid) {
        widest = std::max<Rational>(widest, r - prev);
        prev = r;
    }
    return widest;
}

DyadicScale restrict_scale(const DyadicScale& sc, const std::vector<Rational>& grid)
{
    DyadicScale out;
    for (const auto& r : grid) {
        const auto it = std::find(sc.grid.begin(), sc.grid.end(), r);
        if (it == sc.grid.end())
            throw std::invalid_argument("restrict_scale: " + to_string(r) + " is not an index");
        out.grid.push_back(r);
        out.sets.push_back(sc.sets[static_cast<std::size_t>(it - sc.grid.begin())]);
    }
    if (out.grid.empty() || out.grid.back() != 1)
        throw std::invalid_argument("restrict_scale: 1 must remain an index");
    return out;
}

// Sublevel sets only change at attained values, so testing each value and
// one threshold above the maximum covers every c.
bool sublevel_sets_open(const FiniteTopology& t, const ValueTable& f)
{
    std::vector<Rational> cuts(f.begin(), f.end());
    if (!cuts.empty())
        cuts.push_back(*std::max_element(f.begin(), f.end()) + 1);
    for (const auto& c : cuts) {
        Subset below(t.size());
        for (std::size_t z = 0; z < f.size(); ++z)
            if (f[z] < c)
                below.set(z);
        if (!t.is_open(below))
            return false;
    }
    return t.is_open(Subset(t.size()));
}

namespace {

std::vector<Rational> choose_levels(const FunctionPair& p, const Rational& lo, const Rational& hi,
                                    unsigned depth)
{
    std::vector<Rational> values(p.u.begin(), p.u.end());
    values.insert(values.end(), p.v.begin(), p.v.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const std::vector<Rational> grid = dyadic_grid(depth);
    std::vector<Rational> raw;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        raw.push_back(lo + (hi - lo) * grid[k]);

    std::vector<Rational> marks = values;
    marks.insert(marks.end(), raw.begin(), raw.end());
    marks.push_back(lo);
    marks.push_back(hi);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    Rational gap = hi - lo;
    for (std::size_t i = 0; i + 1 < marks.size(); ++i)
        gap = std::min<Rational>(gap, marks[i + 1] - marks[i]);
    const Rational nudge = gap / 4;

    std::vector<Rational> levels;
    for (const auto& level : raw)
        levels.push_back(std::binary_search(values.begin(), values.end(), level) ? Rational(level - nudge)
                                                                                 : level);
    levels.push_back(values.back() + 1);
    return levels;
}

} // namespace

ScalePair scales_from_pair(const FiniteRelation& r, const FiniteTopology& t,
                           const FunctionPair& p, std::size_t x, std::size_t y, unsigned depth)
{
    if (r.labels() != t.points())
        throw std::invalid_argument("relation and topology are over different element lists");
    if (x >= r.size() || y >= r.size() || !r(x, y) || r(y, x))
        throw std::invalid_argument("scales_from_pair: x is not strictly below y");
    if (!verify_almost_representation(r, p).holds)
        throw std::invalid_argument("scales_from_pair: pair is not an almost representation");
    if (!(p.v[x] < p.u[y]))
        throw std::invalid_argument("scales_from_pair: pair does not separate x from y");
    if (!is_continuous(t, p.u) || !is_continuous(t, p.v))
        throw std::invalid_argument("scales_from_pair: pair is not continuous");
    if (depth == 0)
        throw std::invalid_argument("scales_from_pair: depth must be positive");

    const std::vector<Rational> levels = choose_levels(p, p.v[x], p.u[y], depth);
    const std::vector<Rational> grid = dyadic_grid(depth);
    ScalePair out;
    out.lower.grid = grid;
    out.upper.grid = grid;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        Subset lower(r.size()), upper(r.size());
        for (std::size_t z = 0; z < r.size(); ++z) {
            if (p.v[z] < levels[k])
                lower.set(z);
            if (p.u[z] < levels[k])
                upper.set(z);
        }
        out.lower.sets.push_back(std::move(lower));
        out.upper.sets.push_back(std::move(upper));
    }
    return out;
}

PropweakConditions check_propweak_conditions(const FiniteRelation& r, const DyadicScale& lower,
                                             const DyadicScale& upper, std::size_t x,
                                             std::size_t y)
{
    if (lower.grid != upper.grid || lower.sets.size() != lower.grid.size() ||
        upper.sets.size() != upper.grid.size())
        throw std::invalid_argument("check_propweak_conditions: scales use different index sets");
    PropweakConditions out{true, true, true, {}};
    auto note = [&](std::string why) {
        if (out.violation.empty())
            out.violation = std::move(why);
    };
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < lower.grid.size(); ++k) {
        const std::string at = " at r=" + to_string(lower.grid[k]);
        const Subset& gs = lower.sets[k];
        const Subset& gss = upper.sets[k];
        for (std::size_t z = 0; z < n; ++z) {
            for (std::size_t w = 0; w < n; ++w) {
                if (r(z, w) && gs.test(w) && !gss.test(z)) {
                    out.a_holds = false;
                    note("(a) fails for " + r.label(z) + "<=" + r.label(w) + at);
                }
                if (r(z, w) && !r(w, z) && gss.test(w) && !gs.test(z)) {
                    out.b_holds = false;
                    note("(b) fails for " + r.label(z) + "<" + r.label(w) + at);
                }
            }
        }
        if (lower.grid[k] != 1 && (!gs.test(x) || gss.test(y))) {
            out.c_holds = false;
            note("(c) fails" + at);
        }
    }
    return out;
}

} // namespace ivorder
