#ifndef IVORDER_ENUMERATE_HPP
#define IVORDER_ENUMERATE_HPP

#include "ivorder/biorder.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/topology.hpp"

#include <string>
#include <vector>

namespace ivorder {

/// "a", "b", ... for n <= 26, then "e0", "e1", ...
std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "");

/// All 2^(n(n-1)) reflexive relations on n points, in mask order.
std::vector<FiniteRelation> all_reflexive_relations(std::size_t n);

std::vector<FiniteRelation> all_interval_orders(std::size_t n);
std::vector<FiniteRelation> all_total_preorders(std::size_t n);

/// Every topology on n points (1, 1, 4, 29, 355, 6942 for n = 0..5), built
/// from the reflexive transitive relations as their specialization orders.
std::vector<FiniteTopology> all_topologies(std::size_t n);

/// Every relation from an m-element A to a k-element X.
std::vector<FiniteBiorder> all_biorders(std::size_t m, std::size_t k);

} // namespace ivorder

#endif
