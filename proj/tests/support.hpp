#ifndef IVORDER_TEST_SUPPORT_HPP
#define IVORDER_TEST_SUPPORT_HPP

#include "ivorder/biorder.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/representation.hpp"
#include "ivorder/topology.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using namespace ivorder;

inline Subset bits(const std::string& s)
{
    Subset out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1')
            out.set(i);
    return out;
}

inline std::vector<std::string> labels(const std::string& letters)
{
    std::vector<std::string> out;
    for (char c : letters)
        out.emplace_back(1, c);
    return out;
}

// rel("abc", {"111", "011", "001"})
inline FiniteRelation rel(const std::string& letters, const std::vector<std::string>& rows)
{
    std::vector<Subset> r;
    for (const auto& row : rows)
        r.push_back(bits(row));
    return FiniteRelation(labels(letters), r);
}

inline FiniteTopology top(const std::string& letters, const std::vector<std::string>& opens)
{
    std::vector<Subset> o;
    for (const auto& s : opens)
        o.push_back(bits(s));
    return FiniteTopology(labels(letters), o);
}

inline FiniteBiorder bio(const std::string& a, const std::string& x,
                         const std::vector<std::string>& rows)
{
    std::vector<Subset> r;
    for (const auto& row : rows)
        r.push_back(bits(row));
    return FiniteBiorder(labels(a), labels(x), r);
}

inline ValueTable table(std::initializer_list<Rational> values) { return ValueTable(values); }

inline Rational q(long p, long d = 1) { return Rational(p, d); }

// x=[0,1], y=[1/2,2], z=[3/2,3] under u(x) <= v(y)
inline FiniteRelation intervals_example()
{
    const ValueTable lo{q(0), q(1, 2), q(3, 2)}, hi{q(1), q(2), q(3)};
    return FiniteRelation::from_predicate(labels("xyz"),
                                          [&](std::size_t i, std::size_t j) { return lo[i] <= hi[j]; });
}

inline FiniteRelation chain(std::size_t n)
{
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.emplace_back(1, char('a' + i));
    return FiniteRelation::from_predicate(l, [](std::size_t i, std::size_t j) { return i <= j; });
}

// ---- oracles written straight from the quantified definitions ----

inline bool oracle_ferrers(const FiniteRelation& r)
{
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t w = 0; w < n; ++w)
                    if (r(x, z) && r(y, w) && !(r(x, w) || r(y, z)))
                        return false;
    return true;
}

inline bool oracle_transitive(const FiniteRelation& r)
{
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (r(x, y) && r(y, z) && !r(x, z))
                    return false;
    return true;
}

inline bool oracle_total(const FiniteRelation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (!r(x, y) && !r(y, x))
                return false;
    return true;
}

inline bool oracle_reflexive(const FiniteRelation& r)
{
    for (std::size_t x = 0; x < r.size(); ++x)
        if (!r(x, x))
            return false;
    return true;
}

inline bool oracle_total_preorder(const FiniteRelation& r)
{
    return oracle_reflexive(r) && oracle_transitive(r) && oracle_total(r);
}

// x <=* y  iff  for all z: z <= x implies z <= y
inline bool oracle_lower_trace(const FiniteRelation& r, std::size_t x, std::size_t y)
{
    for (std::size_t z = 0; z < r.size(); ++z)
        if (r(z, x) && !r(z, y))
            return false;
    return true;
}

// x <=** y  iff  for all z: y <= z implies x <= z
inline bool oracle_upper_trace(const FiniteRelation& r, std::size_t x, std::size_t y)
{
    for (std::size_t z = 0; z < r.size(); ++z)
        if (r(y, z) && !r(x, z))
            return false;
    return true;
}

inline bool oracle_strict(const FiniteRelation& r, std::size_t x, std::size_t y)
{
    return r(x, y) && !r(y, x);
}

inline bool oracle_represents(const FiniteRelation& r, const ValueTable& u, const ValueTable& v)
{
    for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y)
            if (r(x, y) != (u[x] <= v[y]))
                return false;
    return true;
}

inline bool oracle_almost(const FiniteRelation& r, const ValueTable& u, const ValueTable& v)
{
    for (std::size_t z = 0; z < r.size(); ++z)
        for (std::size_t w = 0; w < r.size(); ++w) {
            if (r(z, w) && !(u[z] <= v[w]))
                return false;
            if (oracle_strict(r, z, w) && !(v[z] <= u[w]))
                return false;
        }
    return true;
}

// Topology closure axioms checked pairwise with no shortcuts.
inline bool oracle_is_topology(std::size_t n, const std::vector<Subset>& family)
{
    auto has = [&](const Subset& s) {
        for (const auto& f : family)
            if (f == s)
                return true;
        return false;
    };
    Subset all(n);
    all.set();
    if (!has(Subset(n)) || !has(all))
        return false;
    for (const auto& a : family)
        for (const auto& b : family)
            if (!has(a | b) || !has(a & b))
                return false;
    return true;
}

// Every topology on n points by brute force over families of subsets.
inline std::vector<std::vector<Subset>> oracle_topologies(std::size_t n)
{
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::vector<Subset>> out;
    const std::uint64_t families = std::uint64_t{1} << subsets;
    Subset empty(n), all(n);
    all.set();
    const std::size_t full_index = subsets - 1;
    for (std::uint64_t mask = 0; mask < families; ++mask) {
        if (!(mask & 1u) || !(mask >> full_index & 1u))
            continue;
        std::vector<Subset> fam;
        for (std::size_t s = 0; s < subsets; ++s)
            if (mask >> s & 1u)
                fam.push_back(Subset(n, s));
        if (oracle_is_topology(n, fam))
            out.push_back(fam);
    }
    return out;
}

// Ray-preimage continuity, checked at every rational threshold that could matter:
// every table value and every midpoint.
inline bool oracle_continuous(const FiniteTopology& t, const ValueTable& f)
{
    std::vector<Rational> cuts(f.begin(), f.end());
    for (const auto& a : f)
        for (const auto& b : f)
            cuts.push_back((a + b) / 2);
    for (const auto& c : cuts) {
        Subset below(f.size()), above(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            below[i] = f[i] < c;
            above[i] = f[i] > c;
        }
        if (!t.is_open(below) || !t.is_open(above))
            return false;
    }
    return true;
}

inline Subset oracle_closure(const FiniteTopology& t, const Subset& s)
{
    Subset out(s.size());
    out.set();
    for (const auto& o : t.opens()) {
        Subset closed = ~o;
        if (s.is_subset_of(closed))
            out &= closed;
    }
    return out;
}

// Representability by integer tables in {0..k}: an independent decision for tiny n.
inline bool oracle_representable(const FiniteRelation& r, int k = 3)
{
    const std::size_t n = r.size();
    std::vector<int> digits(2 * n, 0);
    for (;;) {
        ValueTable u(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = digits[i];
            v[i] = digits[n + i];
        }
        if (oracle_represents(r, u, v))
            return true;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] > k)
            digits[pos++] = 0;
        if (pos == digits.size())
            return false;
    }
}

inline FiniteRelation random_reflexive(std::size_t n, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.emplace_back(1, char('a' + i));
    return FiniteRelation::from_predicate(l, [&](std::size_t i, std::size_t j) { return i == j || coin(rng); });
}

} // namespace support

#endif
