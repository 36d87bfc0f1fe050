#include "support.hpp"

#include "ivorder/enumerate.hpp"

#include <doctest.h>

using namespace support;

TEST_CASE("check_axioms on the small named relations")
{
    SUBCASE("reflexive singleton")
    {
        const auto r = rel("a", {"1"});
        const auto ax = check_axioms(r);
        CHECK(ax.interval_order);
        CHECK(ax.total_preorder);
    }
    SUBCASE("two disjoint pairs violate Ferrers")
    {
        // reflexive pairs plus x<=z and y<=w
        const auto r = rel("xyzw", {"1010", "0101", "0010", "0001"});
        const auto ax = check_axioms(r);
        CHECK_FALSE(ax.ferrers);
        CHECK_FALSE(ax.interval_order);
        REQUIRE(ax.ferrers_witness);
        const auto w = *ax.ferrers_witness;
        CHECK(r(w.x, w.z));
        CHECK(r(w.y, w.w));
        CHECK_FALSE(r(w.x, w.w));
        CHECK_FALSE(r(w.y, w.z));
        CHECK(w.x == 0);
        CHECK(w.z == 2);
        CHECK(w.y == 1);
        CHECK(w.w == 3);
    }
    SUBCASE("chain on three elements")
    {
        const auto ax = check_axioms(chain(3));
        CHECK(ax.interval_order);
        CHECK(ax.total_preorder);
        CHECK(ax.transitive);
    }
    SUBCASE("intervals example is an interval order but not transitive")
    {
        const auto ax = check_axioms(intervals_example());
        CHECK(ax.interval_order);
        CHECK_FALSE(ax.transitive);
    }
}

TEST_CASE("check_axioms agrees with quadruple oracles on every relation with 3 elements")
{
    // all 512 relations, reflexive or not
    for (unsigned mask = 0; mask < 512; ++mask) {
        const auto r = FiniteRelation::from_predicate(
            labels("abc"), [&](std::size_t i, std::size_t j) { return mask >> (3 * i + j) & 1u; });
        const auto ax = check_axioms(r);
        CHECK(ax.reflexive == oracle_reflexive(r));
        CHECK(ax.total == oracle_total(r));
        CHECK(ax.transitive == oracle_transitive(r));
        CHECK(ax.ferrers == oracle_ferrers(r));
        CHECK(ax.interval_order == (oracle_reflexive(r) && oracle_ferrers(r)));
        CHECK(ax.total_preorder == oracle_total_preorder(r));
        CHECK(ax.ferrers_witness.has_value() == !ax.ferrers);
    }
}

TEST_CASE("strict_part")
{
    CHECK(strict_part(FiniteRelation::full(labels("abc"))).pair_count() == 0);

    const auto s = strict_part(chain(3));
    CHECK(s == rel("abc", {"011", "001", "000"}));

    // oracle: evaluate u(i) <= v(j) on the three intervals, then apply the definition
    const ValueTable lo{q(0), q(1, 2), q(3, 2)}, hi{q(1), q(2), q(3)};
    const auto ex = intervals_example();
    const auto sx = strict_part(ex);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(sx(i, j) == (lo[i] <= hi[j] && !(lo[j] <= hi[i])));
    CHECK(sx.pair_count() == 1);
    CHECK(sx(0, 2));
}

TEST_CASE("strict_part is irreflexive and asymmetric for every relation with 3 elements")
{
    for (unsigned mask = 0; mask < 512; ++mask) {
        const auto r = FiniteRelation::from_predicate(
            labels("abc"), [&](std::size_t i, std::size_t j) { return mask >> (3 * i + j) & 1u; });
        const auto s = strict_part(r);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK_FALSE((s(i, j) && s(j, i)));
                CHECK(s(i, j) == oracle_strict(r, i, j));
            }
    }
}

TEST_CASE("compose")
{
    const auto c = chain(3);
    CHECK(compose(FiniteRelation::identity(labels("abc")), c) == c);
    CHECK(compose(FiniteRelation::empty(labels("abc")), c).pair_count() == 0);

    const auto s = strict_part(c);
    const auto ss = compose(s, s);
    // middle element enumeration: a<b<c is the only path of length two
    CHECK(ss.pair_count() == 1);
    CHECK(ss(0, 2));

    CHECK_THROWS_AS(compose(c, FiniteRelation::identity(labels("xyz"))), std::invalid_argument);
}

TEST_CASE("traces")
{
    SUBCASE("total preorder is its own traces")
    {
        for (const auto& r : all_total_preorders(3)) {
            const auto tr = traces(r);
            CHECK(tr.lower == r);
            CHECK(tr.upper == r);
        }
    }
    SUBCASE("intervals example")
    {
        const auto tr = traces(intervals_example());
        const auto& s = tr.lower;
        const auto& ss = tr.upper;
        // x <* y and y ~* z
        CHECK(s(0, 1));
        CHECK_FALSE(s(1, 0));
        CHECK(s(1, 2));
        CHECK(s(2, 1));
        // x ~** y and y <** z
        CHECK(ss(0, 1));
        CHECK(ss(1, 0));
        CHECK(ss(1, 2));
        CHECK_FALSE(ss(2, 1));
    }
    SUBCASE("all-related relation")
    {
        const auto tr = traces(FiniteRelation::full(labels("abc")));
        CHECK(tr.lower.pair_count() == 9);
        CHECK(tr.upper.pair_count() == 9);
    }
}

TEST_CASE("traces agree with the quantified definitions and are preorders")
{
    for (const auto& r : all_reflexive_relations(3)) {
        const auto tr = traces(r);
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y) {
                CHECK(tr.lower(x, y) == oracle_lower_trace(r, x, y));
                CHECK(tr.upper(x, y) == oracle_upper_trace(r, x, y));
            }
        CHECK(oracle_reflexive(tr.lower));
        CHECK(oracle_transitive(tr.lower));
        CHECK(oracle_reflexive(tr.upper));
        CHECK(oracle_transitive(tr.upper));
    }
}

TEST_CASE("interval orders have total-preorder traces and are total, n <= 4")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& r : all_reflexive_relations(n)) {
            if (!check_axioms(r).interval_order)
                continue;
            const auto tr = traces(r);
            CHECK(oracle_total_preorder(tr.lower));
            CHECK(oracle_total_preorder(tr.upper));
            CHECK(oracle_total(r));
        }
}

TEST_CASE("sections")
{
    const auto id = FiniteRelation::identity(labels("abc"));
    for (std::size_t x = 0; x < 3; ++x) {
        const auto s = sections(id, x);
        CHECK(s.lower == make_subset(3, {x}));
        CHECK(s.upper == make_subset(3, {x}));
    }
    const auto c = sections(chain(3), "b");
    CHECK(c.lower == bits("110"));
    CHECK(c.upper == bits("011"));

    const auto s = sections(strict_part(chain(3)), "b");
    CHECK(s.lower == bits("100"));
    CHECK(s.upper == bits("001"));

    CHECK_THROWS_AS(sections(chain(3), "q"), std::invalid_argument);
}

TEST_CASE("equivalence_classes")
{
    CHECK(equivalence_classes(FiniteRelation::full(labels("abc"))).size() == 1);
    CHECK(equivalence_classes(chain(3)).size() == 3);

    const auto classes = trace_classes(intervals_example(), TraceKind::lower);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<std::size_t>{0});
    CHECK(classes[1] == std::vector<std::size_t>{1, 2});

    CHECK_THROWS_AS(equivalence_classes(intervals_example()), std::invalid_argument);
}

TEST_CASE("enumeration counts")
{
    CHECK(all_reflexive_relations(4).size() == 4096);
    // labeled interval orders and weak orders on small sets
    CHECK(all_interval_orders(3).size() == 19);
    CHECK(all_total_preorders(3).size() == 13);
    CHECK(all_total_preorders(4).size() == 75);
}
