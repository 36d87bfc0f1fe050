#ifndef IVORDER_SRC_RESCALE_HPP
#define IVORDER_SRC_RESCALE_HPP

#include "ivorder/rational.hpp"

#include <algorithm>

namespace ivorder::detail {

// Affine map of both tables onto [0,1] over their joint range; constant -> 1/2.
inline void rescale_jointly(ValueTable& first, ValueTable& second)
{
    if (first.empty() && second.empty())
        return;
    const Rational* lo = nullptr;
    const Rational* hi = nullptr;
    for (const auto* table : {&first, &second}) {
        for (const auto& q : *table) {
            if (!lo || q < *lo)
                lo = &q;
            if (!hi || q > *hi)
                hi = &q;
        }
    }
    const Rational low = *lo, span = *hi - *lo;
    for (auto* table : {&first, &second})
        for (auto& q : *table)
            q = span == 0 ? Rational(1, 2) : Rational((q - low) / span);
}

inline bool within_unit(const ValueTable& first, const ValueTable& second)
{
    auto inside = [](const Rational& q) { return q >= 0 && q <= 1; };
    return std::all_of(first.begin(), first.end(), inside) &&
           std::all_of(second.begin(), second.end(), inside);
}

} // namespace ivorder::detail

#endif
