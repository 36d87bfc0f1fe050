#include "support.hpp"

#include "ivorder/audit.hpp"
#include "ivorder/enumerate.hpp"

#include <doctest.h>

using namespace support;

TEST_CASE("verify_representation")
{
    const auto c = chain(3);
    CHECK(verify_representation(c, {table({q(0), q(1), q(2)}), table({q(0), q(1), q(2)})}).holds);

    const auto bad = verify_representation(c, {table({q(0), q(1), q(2)}), table({q(2), q(2), q(2)})});
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.counterexample);
    // every reported pair must actually break the biconditional
    const auto [x, y] = *bad.counterexample;
    CHECK(c(x, y) != (q(x) <= q(2)));
    CHECK_FALSE(c(2, 0));

    CHECK(verify_representation(rel("a", {"1"}), {table({q(0)}), table({q(0)})}).holds);
}

TEST_CASE("verify_almost_representation")
{
    const auto c2 = rel("ab", {"11", "01"});
    for (const auto& r : all_interval_orders(3))
        CHECK(verify_almost_representation(r, {ValueTable(3, q(7)), ValueTable(3, q(7))}).holds);

    const auto bad = verify_almost_representation(c2, {table({q(2), q(1)}), table({q(0), q(0)})});
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.counterexample);
    CHECK(*bad.counterexample == ElementPair{0, 0});
}

TEST_CASE("verifiers agree with the oracles on random tables")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 3);
    for (const auto& r : all_reflexive_relations(3))
        for (int k = 0; k < 8; ++k) {
            ValueTable u(3), v(3);
            for (std::size_t i = 0; i < 3; ++i) {
                u[i] = d(rng);
                v[i] = d(rng);
            }
            const bool rep = verify_representation(r, {u, v}).holds;
            CHECK(rep == oracle_represents(r, u, v));
            CHECK(verify_almost_representation(r, {u, v}).holds == oracle_almost(r, u, v));
            if (rep)
                CHECK(oracle_almost(r, u, v));
        }
}

TEST_CASE("construct_representation examples")
{
    const auto p = construct_representation(chain(3));
    CHECK(p.u == table({q(0), q(1), q(2)}));
    CHECK(p.v == table({q(0), q(1), q(2)}));

    const auto e = construct_representation(intervals_example());
    CHECK(e.u == table({q(0), q(0), q(1)}));
    CHECK(e.v == table({q(0), q(1), q(1)}));

    const auto s = construct_representation(rel("a", {"1"}));
    CHECK(s.u == table({q(0)}));
    CHECK(s.v == table({q(0)}));

    const auto two_two = rel("xyzw", {"1010", "0101", "0010", "0001"});
    try {
        construct_representation(two_two);
        FAIL("expected rejection");
    } catch (const NotIntervalOrder& err) {
        REQUIRE(err.witness());
        const auto w = *err.witness();
        CHECK(two_two(w.x, w.z));
        CHECK(two_two(w.y, w.w));
        CHECK_FALSE(two_two(w.x, w.w));
        CHECK_FALSE(two_two(w.y, w.z));
    }
}

TEST_CASE("staircase output represents and has u <= v, n <= 4")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& r : all_interval_orders(n)) {
            const auto p = construct_representation(r);
            CHECK(oracle_represents(r, p.u, p.v));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(p.u[i] <= p.v[i]);
        }
}

TEST_CASE("decide_continuous_representation")
{
    const auto full = FiniteRelation::full(labels("ab"));
    const auto ind = FiniteTopology::indiscrete(labels("ab"));
    const auto dis = FiniteTopology::discrete(labels("ab"));

    const auto a = decide_continuous_representation(full, ind);
    REQUIRE(a.feasible);
    CHECK(a.pair->u[0] == a.pair->u[1]);
    CHECK(a.pair->v[0] == a.pair->v[1]);

    const auto c2 = rel("ab", {"11", "01"});
    const auto b = decide_continuous_representation(c2, ind);
    CHECK_FALSE(b.feasible);
    REQUIRE(b.certificate);
    CHECK(b.certificate->weight < 0);
    CHECK(b.system.certifies(*b.certificate));

    const auto c = decide_continuous_representation(c2, dis);
    REQUIRE(c.feasible);
    CHECK(oracle_represents(c2, c.pair->u, c.pair->v));
    CHECK(oracle_continuous(dis, c.pair->u));
    for (const auto& x : c.pair->u)
        CHECK((x >= 0 && x <= 1));
}

TEST_CASE("decide_continuous_representation outputs and certificates check out, n <= 3")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto tops = all_topologies(n);
        for (const auto& r : all_interval_orders(n))
            for (const auto& t : tops) {
                const auto res = decide_continuous_representation(r, t);
                if (res.feasible) {
                    CHECK(oracle_represents(r, res.pair->u, res.pair->v));
                    CHECK(oracle_continuous(t, res.pair->u));
                    CHECK(oracle_continuous(t, res.pair->v));
                } else {
                    REQUIRE(res.certificate);
                    CHECK(res.system.certifies(*res.certificate));
                    std::int64_t sum = 0;
                    for (auto e : res.certificate->constraints)
                        sum += res.system.constraints()[e].bound;
                    CHECK(sum < 0);
                }
            }
    }
}

TEST_CASE("is_weakly_continuous")
{
    const auto c2 = rel("ab", {"11", "01"});
    const auto ind = FiniteTopology::indiscrete(labels("ab"));
    const auto w = is_weakly_continuous(c2, ind);
    CHECK_FALSE(w.holds);
    REQUIRE(w.failing_pair);
    CHECK(*w.failing_pair == ElementPair{0, 1});
    REQUIRE(w.certificate);
    CHECK(w.system.certifies(*w.certificate));

    CHECK(is_weakly_continuous(FiniteRelation::full(labels("abc")), FiniteTopology::indiscrete(labels("abc"))).holds);

    // continuous total preorders are weakly continuous
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& r : all_total_preorders(n))
            for (const auto& t : all_topologies(n))
                if (relation_semicontinuity(t, r).continuous)
                    CHECK(is_weakly_continuous(r, t).holds);

    CHECK_THROWS_AS(is_weakly_continuous(rel("xyzw", {"1010", "0101", "0010", "0001"}),
                                         FiniteTopology::discrete(labels("xyzw"))),
                    NotIntervalOrder);
}

TEST_CASE("weak continuity witnesses separate their pair and are continuous almost representations")
{
    for (const auto& r : all_interval_orders(3))
        for (const auto& t : all_topologies(3)) {
            const auto w = is_weakly_continuous(r, t);
            for (const auto& [pair, p] : w.witnesses) {
                CHECK(oracle_strict(r, pair.first, pair.second));
                CHECK(oracle_almost(r, p.u, p.v));
                CHECK(oracle_continuous(t, p.u));
                CHECK(oracle_continuous(t, p.v));
                CHECK(p.v[pair.first] < p.u[pair.second]);
            }
            if (w.holds)
                CHECK(w.witnesses.size() == strict_part(r).pair_count());
        }
}

TEST_CASE("dyadic_combine")
{
    const FunctionPair p{table({q(0), q(1, 2), q(1)}), table({q(1, 4), q(1), q(1)})};
    const auto one = dyadic_combine({p});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(one.u[i] == p.u[i] / 2);
        CHECK(one.v[i] == p.v[i] / 2);
    }
    const auto two = dyadic_combine({p, p});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(two.u[i] == p.u[i] * q(3, 4));
        CHECK(two.v[i] == p.v[i] * q(3, 4));
    }
    CHECK_THROWS_AS(dyadic_combine(std::vector<FunctionPair>{}), std::invalid_argument);

    // tables outside [0,1] are rescaled jointly before summing
    const FunctionPair wide{table({q(0), q(4)}), table({q(2), q(8)})};
    const auto r = dyadic_combine({wide});
    CHECK(r.u == table({q(0), q(1, 4)}));
    CHECK(r.v == table({q(1, 8), q(1, 2)}));
}

TEST_CASE("dyadic_combine of witness families represents, n <= 3")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& r : all_interval_orders(n))
            for (const auto& t : all_topologies(n)) {
                const auto w = is_weakly_continuous(r, t);
                if (!w.holds)
                    continue;
                std::vector<FunctionPair> family;
                for (const auto& [pair, p] : w.witnesses)
                    family.push_back(p);
                if (family.empty())
                    family.push_back({ValueTable(n, q(1, 2)), ValueTable(n, q(1, 2))});
                const auto sum = dyadic_combine(family);
                CHECK(oracle_represents(r, sum.u, sum.v));
                CHECK(oracle_continuous(t, sum.u));
                CHECK(oracle_continuous(t, sum.v));
            }
}

TEST_CASE("dyadic_combine of copies preserves almost representation")
{
    for (const auto& r : all_interval_orders(3)) {
        const auto p = rescale_to_unit(construct_representation(r));
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto sum = dyadic_combine(std::vector<FunctionPair>(k, p));
            CHECK(oracle_almost(r, sum.u, sum.v));
        }
    }
}

TEST_CASE("check_io_separability")
{
    for (const auto& r : all_interval_orders(3))
        CHECK(check_io_separability(r, full_subset(3)).holds);

    const auto c = chain(3);
    const auto none = check_io_separability(c, Subset(3));
    CHECK_FALSE(none.holds);
    CHECK(none.failing_strict_pair);

    const auto s = check_io_separability(c, full_subset(3));
    CHECK(s.minimal_dense.count() <= 3);
    CHECK(check_io_separability(c, s.minimal_dense).holds);
    // removing any further element loses density
    for (auto i : members(s.minimal_dense)) {
        Subset smaller = s.minimal_dense;
        smaller.reset(i);
        CHECK_FALSE(check_io_separability(c, smaller).holds);
    }
}

TEST_CASE("separability agrees with a quantifier expansion for every dense subset, n <= 3")
{
    for (const auto& r : all_interval_orders(3)) {
        const auto tr = traces(r);
        for (unsigned mask = 0; mask < 8; ++mask) {
            const Subset d(3, mask);
            bool expected = true;
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y) {
                    if (!oracle_strict(r, x, y))
                        continue;
                    bool routed = false;
                    for (std::size_t m = 0; m < 3; ++m)
                        for (std::size_t k = 0; k < 3; ++k)
                            routed = routed || (d[m] && d[k] && tr.lower(x, m) && oracle_strict(r, m, k) &&
                                                tr.upper(k, y));
                    expected = expected && routed;
                }
            CHECK(check_io_separability(r, d).holds == expected);
        }
    }
}

TEST_CASE("constraint solver")
{
    ConstraintSystem sys;
    const auto a = sys.add_variable("a");
    const auto b = sys.add_variable("b");
    sys.add(a, b, 0);
    sys.add(b, a, -1);
    const auto res = sys.solve();
    REQUIRE(std::holds_alternative<NegativeCycle>(res));
    CHECK(sys.certifies(std::get<NegativeCycle>(res)));
    sys.pop_back();
    const auto ok = sys.solve();
    REQUIRE(std::holds_alternative<Potentials>(ok));
    CHECK(sys.satisfied_by(std::get<Potentials>(ok).values));
    CHECK_THROWS_AS(sys.add(a, b, 3), std::invalid_argument);
}

TEST_CASE("audit_theorem1 small sizes")
{
    const auto one = audit_theorem1(1);
    CHECK(one.passed());
    CHECK(one.relations_enumerated == 1);
    CHECK(one.topologies == 1);
    CHECK(one.instances == 1);

    // counts accumulate over n = 1 and n = 2
    const auto two = audit_theorem1(2);
    CHECK(two.passed());
    CHECK(two.relations_enumerated == 1 + 4);
    CHECK(two.topologies == 1 + 4);
    CHECK(two.instances == 1 + 3 * 4);

    CHECK_THROWS_AS(audit_theorem1(5), std::invalid_argument);
}
