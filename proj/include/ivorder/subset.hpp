#ifndef IVORDER_SUBSET_HPP
#define IVORDER_SUBSET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ivorder {

/// A subset of an indexed finite set; bit i set iff element i is a member.
using Subset = boost::dynamic_bitset<>;

inline Subset make_subset(std::size_t n, std::initializer_list<std::size_t> members)
{
    Subset s(n);
    for (auto m : members)
        s.set(m);
    return s;
}

inline Subset full_subset(std::size_t n)
{
    Subset s(n);
    s.set();
    return s;
}

inline std::vector<std::size_t> members(const Subset& s)
{
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
        out.push_back(i);
    return out;
}

/// Renders a subset as a 0/1 membership string, element 0 first.
inline std::string to_membership_string(const Subset& s)
{
    std::string out(s.size(), '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.test(i))
            out[i] = '1';
    return out;
}

/// A partition of element indices; blocks are sorted and listed by first member.
using Partition = std::vector<std::vector<std::size_t>>;

} // namespace ivorder

#endif
