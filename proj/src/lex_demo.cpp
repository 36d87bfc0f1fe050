#include "ivorder/lex_demo.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>

namespace ivorder {

bool lex_below(const LexPoint& p, const LexPoint& q)
{
    return p.x < q.x || (p.x == q.x && p.y < q.y);
}

Rational lex_projection(const LexPoint& p)
{
    return p.x;
}

Rational lex_section_function(const Rational& r, const LexPoint& p)
{
    if (p.x < r)
        return 0;
    if (p.x == r)
        return p.y;
    return 1;
}

std::vector<Rational> lex_grid_values(unsigned bound)
{
    std::vector<Rational> values;
    for (unsigned q = 2; q <= bound; ++q)
        for (unsigned p = 1; p < q; ++p)
            values.emplace_back(p, q);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

namespace {

// Rank encodings. Every function value is 0, 1 or a grid value in (0,1), so
// mapping 0 -> -1, the k-th grid value -> k, 1 -> m preserves all comparisons.
using Code = std::int32_t;

struct Counts {
    std::size_t weak = 0;
    std::size_t strict = 0;
};

Counts sweep(const std::vector<Code>& code)
{
    Counts c;
    const std::size_t n = code.size();
    for (std::size_t p = 0; p < n; ++p) {
        const Code here = code[p];
        std::size_t bad = 0;
        for (std::size_t q = p + 1; q < n; ++q)
            bad += code[q] < here;
        c.strict += bad;
        c.weak += bad; // p = q never violates
    }
    return c;
}

} // namespace

LexDemoReport demo_lex(unsigned bound)
{
    if (bound < 2)
        throw std::invalid_argument("demo_lex: denominator bound must be at least 2");
    const std::vector<Rational> values = lex_grid_values(bound);
    const std::size_t m = values.size();
    const std::size_t n = m * m; // point (i, j) at index i*m + j, already in lex order

    LexDemoReport rep;
    rep.bound = bound;
    rep.grid_values = m;
    rep.points = n;
    rep.functions = m + 1;
    rep.ordered_pairs = n * (n + 1) / 2;

    // function 0 is the projection, function k+1 the section at values[k]
    auto encode = [&](std::size_t f) {
        std::vector<Code> code(n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                Code c;
                if (f == 0) {
                    c = static_cast<Code>(i);
                } else {
                    const std::size_t k = f - 1;
                    c = i < k ? Code{-1} : i == k ? static_cast<Code>(j) : static_cast<Code>(m);
                }
                code[i * m + j] = c;
            }
        }
        return code;
    };

    std::vector<std::vector<Code>> codes;
    codes.reserve(rep.functions);
    for (std::size_t f = 0; f < rep.functions; ++f)
        codes.push_back(encode(f));

    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<Counts>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            Counts total;
            for (std::size_t f = w; f < rep.functions; f += workers) {
                const Counts c = sweep(codes[f]);
                total.weak += c.weak;
                total.strict += c.strict;
            }
            return total;
        }));
    }
    for (auto& fut : futures) {
        const Counts c = fut.get();
        rep.weak_violations += c.weak;
        rep.strict_violations += c.strict;
    }

    // Separation recipe: projection when first coordinates differ, otherwise
    // the section function at the shared first coordinate.
    const std::vector<Code>& projection = codes[0];
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t a = p / m;
        for (std::size_t q = p + 1; q < n; ++q) {
            const std::size_t x = q / m;
            ++rep.strict_pairs;
            if (a < x) {
                if (projection[p] < projection[q])
                    ++rep.separated_by_projection;
                else
                    ++rep.unseparated;
            } else {
                const std::vector<Code>& section = codes[a + 1];
                if (section[p] < section[q])
                    ++rep.separated_by_section;
                else
                    ++rep.unseparated;
            }
        }
    }
    return rep;
}

} // namespace ivorder
