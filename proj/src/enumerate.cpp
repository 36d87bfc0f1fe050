#include "ivorder/enumerate.hpp"

#include <stdexcept>

namespace ivorder {

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(prefix + (n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                           : "e" + std::to_string(i)));
    return labels;
}

std::vector<FiniteRelation> all_reflexive_relations(std::size_t n)
{
    if (n > 5)
        throw std::invalid_argument("all_reflexive_relations: n too large to enumerate");
    const std::size_t free_cells = n * (n - (n ? 1 : 0));
    const auto labels = default_labels(n);
    std::vector<FiniteRelation> out;
    out.reserve(std::size_t{1} << free_cells);
    for (unsigned long mask = 0; mask < (1UL << free_cells); ++mask) {
        std::size_t bit = 0;
        std::vector<Subset> rows(n, Subset(n));
        for (std::size_t i = 0; i < n; ++i) {
            rows[i].set(i);
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && ((mask >> bit++) & 1UL))
                    rows[i].set(j);
        }
        out.emplace_back(labels, std::move(rows));
    }
    return out;
}

std::vector<FiniteRelation> all_interval_orders(std::size_t n)
{
    std::vector<FiniteRelation> out;
    for (auto& r : all_reflexive_relations(n))
        if (is_interval_order(r))
            out.push_back(std::move(r));
    return out;
}

std::vector<FiniteRelation> all_total_preorders(std::size_t n)
{
    std::vector<FiniteRelation> out;
    for (auto& r : all_reflexive_relations(n))
        if (is_total_preorder(r))
            out.push_back(std::move(r));
    return out;
}

std::vector<FiniteTopology> all_topologies(std::size_t n)
{
    std::vector<FiniteTopology> out;
    for (const auto& r : all_reflexive_relations(n))
        if (is_transitive(r))
            out.push_back(FiniteTopology::from_specialization(r));
    return out;
}

std::vector<FiniteBiorder> all_biorders(std::size_t m, std::size_t k)
{
    if (m * k > 20)
        throw std::invalid_argument("all_biorders: table too large to enumerate");
    std::vector<std::string> a_labels, x_labels;
    for (std::size_t a = 0; a < m; ++a)
        a_labels.push_back("a" + std::to_string(a + 1));
    for (std::size_t x = 0; x < k; ++x)
        x_labels.push_back("x" + std::to_string(x + 1));
    std::vector<FiniteBiorder> out;
    for (unsigned long mask = 0; mask < (1UL << (m * k)); ++mask) {
        std::vector<Subset> rows(m, Subset(k));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t x = 0; x < k; ++x)
                if ((mask >> (a * k + x)) & 1UL)
                    rows[a].set(x);
        out.emplace_back(a_labels, x_labels, std::move(rows));
    }
    return out;
}

} // namespace ivorder
