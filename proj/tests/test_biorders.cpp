#include "support.hpp"

#include "ivorder/audit.hpp"
#include "ivorder/enumerate.hpp"

#include <doctest.h>

using namespace support;

namespace {

bool oracle_biorder_ferrers(const FiniteBiorder& b)
{
    for (std::size_t a = 0; a < b.a_size(); ++a)
        for (std::size_t c = 0; c < b.a_size(); ++c)
            for (std::size_t x = 0; x < b.x_size(); ++x)
                for (std::size_t y = 0; y < b.x_size(); ++y)
                    if (b.below(a, x) && b.below(c, y) && !(b.below(a, y) || b.below(c, x)))
                        return false;
    return true;
}

// Strict traces expanded by hand: a <* b when a < x and x <= b for some x,
// where x <= b means not b < x.
bool oracle_strict_lower(const FiniteBiorder& b, std::size_t a, std::size_t c)
{
    for (std::size_t x = 0; x < b.x_size(); ++x)
        if (b.below(a, x) && !b.below(c, x))
            return true;
    return false;
}

// x <** y when x <= a and a < y for some a
bool oracle_strict_upper(const FiniteBiorder& b, std::size_t x, std::size_t y)
{
    for (std::size_t a = 0; a < b.a_size(); ++a)
        if (!b.below(a, x) && b.below(a, y))
            return true;
    return false;
}

} // namespace

TEST_CASE("check_ferrers_biorder")
{
    CHECK(check_ferrers_biorder(bio("ab", "xy", {"11", "11"})).holds);

    const auto bad = check_ferrers_biorder(bio("ab", "xy", {"10", "01"}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    const auto w = *bad.witness;
    const auto b = bio("ab", "xy", {"10", "01"});
    CHECK(b.below(w.a, w.x));
    CHECK(b.below(w.b, w.y));
    CHECK_FALSE(b.below(w.a, w.y));
    CHECK_FALSE(b.below(w.b, w.x));

    // L(x) = {a}, L(y) = {a, b}
    CHECK(check_ferrers_biorder(bio("ab", "xy", {"11", "01"})).holds);
}

TEST_CASE("Ferrers, nesting and construction agree on every 3x3 table")
{
    std::size_t ferrers = 0;
    for (const auto& b : all_biorders(3, 3)) {
        const bool f = oracle_biorder_ferrers(b);
        ferrers += f;
        CHECK(check_ferrers_biorder(b).holds == f);
        CHECK(lower_sections_nested(b) == f);
        if (f) {
            for (auto mode : {BiorderMode::strict, BiorderMode::weak}) {
                const auto p = construct_biorder_representation(b, mode);
                for (std::size_t a = 0; a < 3; ++a)
                    for (std::size_t x = 0; x < 3; ++x)
                        CHECK(b.below(a, x) == (mode == BiorderMode::weak ? p.v[a] <= p.u[x] : p.v[a] < p.u[x]));
            }
        } else {
            CHECK_THROWS_AS(construct_biorder_representation(b, BiorderMode::weak), NotFerrers);
        }
    }
    CHECK(all_biorders(3, 3).size() == 512);
    CHECK(ferrers > 0);
}

TEST_CASE("biorder_traces")
{
    SUBCASE("empty strict table gives all-related traces")
    {
        const auto tr = biorder_traces(bio("ab", "xyz", {"000", "000"}));
        CHECK(tr.lower.pair_count() == 4);
        CHECK(tr.upper.pair_count() == 9);
    }
    SUBCASE("definition-level expansion on every 3x3 table")
    {
        for (const auto& b : all_biorders(3, 3)) {
            const auto tr = biorder_traces(b);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    CHECK(tr.strict_lower(i, j) == oracle_strict_lower(b, i, j));
                    CHECK(tr.strict_upper(i, j) == oracle_strict_upper(b, i, j));
                    CHECK(tr.lower(i, j) == !oracle_strict_lower(b, j, i));
                    CHECK(tr.upper(i, j) == !oracle_strict_upper(b, j, i));
                }
        }
    }
    SUBCASE("singleton")
    {
        const auto tr = biorder_traces(bio("a", "x", {"1"}));
        CHECK(tr.lower.size() == 1);
        CHECK(tr.upper.size() == 1);
        CHECK(tr.lower(0, 0));
        CHECK(tr.upper(0, 0));
    }
}

TEST_CASE("construct_biorder_representation examples")
{
    // a < x, a < y, b < y
    const auto b = bio("ab", "xy", {"11", "01"});
    const auto weak = construct_biorder_representation(b, BiorderMode::weak);
    CHECK(weak.u == table({q(1), q(2)}));
    CHECK(weak.v == table({q(1), q(2)}));
    const auto strict = construct_biorder_representation(b, BiorderMode::strict);
    CHECK(strict.v == table({q(1, 2), q(3, 2)}));
    CHECK(strict.u == table({q(1), q(2)}));
    CHECK(verify_biorder_representation(b, strict, BiorderMode::strict).holds);
    CHECK(verify_biorder_representation(b, weak, BiorderMode::weak).holds);

    const auto e = construct_biorder_representation(bio("ab", "xy", {"00", "00"}), BiorderMode::weak);
    CHECK(e.u == table({q(0), q(0)}));
    CHECK(e.v == table({q(1), q(1)}));
}

TEST_CASE("strict output shifted back satisfies the weak biconditional")
{
    for (const auto& b : all_biorders(3, 3)) {
        if (!check_ferrers_biorder(b).holds)
            continue;
        auto s = construct_biorder_representation(b, BiorderMode::strict);
        const auto w = construct_biorder_representation(b, BiorderMode::weak);
        for (auto& x : s.v)
            x += q(1, 2);
        CHECK(verify_biorder_representation(b, s, BiorderMode::weak).holds);
        CHECK(s == w);
        CHECK(verify_biorder_almost_representation(b, construct_biorder_representation(b, BiorderMode::strict)).holds);
    }
}

TEST_CASE("verify_biorder_almost_representation")
{
    const auto b = bio("a", "x", {"1"});
    CHECK(verify_biorder_almost_representation(b, {table({q(3)}), table({q(3)})}).holds);
    const auto bad = verify_biorder_almost_representation(b, {table({q(1)}), table({q(0)})});
    CHECK_FALSE(bad.holds);
}

TEST_CASE("interval order bridge reproduces every interval order on 4 points")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& r : all_interval_orders(n)) {
            const auto b = FiniteBiorder::from_strict_part(r);
            const auto p = construct_biorder_representation(b, BiorderMode::strict);
            CHECK(interval_order_from_biorder_pair(b, p) == r);
            // order-isomorphic to the staircase of the relation itself
            const auto s = construct_representation(r);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK((p.u[i] < p.u[j]) == (s.u[i] < s.u[j]));
                }
        }
}

TEST_CASE("check_jointly_dense")
{
    const auto b = bio("ab", "xy", {"11", "01"});
    CHECK(check_jointly_dense(b, full_subset(2), full_subset(2)).holds);
    CHECK_FALSE(check_jointly_dense(b, Subset(2), full_subset(2)).holds);

    // expansion for D_A = {a}, D_X = {y}
    const auto tr = biorder_traces(b);
    bool expected = true;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t x = 0; x < 2; ++x)
            if (b.below(a, x))
                expected = expected && tr.lower(a, 0) && b.below(0, 1) && tr.upper(1, x);
    CHECK(check_jointly_dense(b, bits("10"), bits("01")).holds == expected);
}

TEST_CASE("biorder_weakly_continuous")
{
    const auto b = bio("ab", "xy", {"11", "01"});
    CHECK(biorder_weakly_continuous(b, FiniteTopology::discrete(labels("ab")), FiniteTopology::discrete(labels("xy"))).holds);

    const auto bad = biorder_weakly_continuous(b, FiniteTopology::indiscrete(labels("ab")),
                                               FiniteTopology::indiscrete(labels("xy")));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.certificate);
    CHECK(bad.system.certifies(*bad.certificate));

    CHECK(biorder_weakly_continuous(bio("ab", "xy", {"00", "00"}), FiniteTopology::indiscrete(labels("ab")),
                                    FiniteTopology::indiscrete(labels("xy")))
              .holds);
}

TEST_CASE("audit_theorem3 small sizes")
{
    const auto one = audit_theorem3(1);
    CHECK(one.passed());
    const auto two = audit_theorem3(2);
    CHECK(two.passed());
    CHECK(two.violations.empty());
}
