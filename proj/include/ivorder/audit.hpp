#ifndef IVORDER_AUDIT_HPP
#define IVORDER_AUDIT_HPP

#include "ivorder/biorder.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/topology.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ivorder {

struct AuditViolation {
    std::string check;
    std::string instance;
    std::string detail;
};

/// Counters of the interval-order sweep. Every counter counts instances
/// (relation, topology) unless its name says otherwise.
struct Theorem1Report {
    std::size_t n_max = 0;
    std::size_t relations_enumerated = 0;
    std::size_t interval_orders = 0;
    std::size_t topologies = 0;
    std::size_t instances = 0;

    std::size_t representable = 0;      ///< continuous representation exists
    std::size_t weakly_continuous = 0;
    std::size_t equivalence_agreements = 0;
    std::size_t separable_with_full_set = 0;

    std::size_t relation_continuous = 0; ///< among weakly continuous instances
    /// Almost semicontinuity of the traces. "own" reads the monotonicity
    /// requirement against the strict part of the trace under test;
    /// "literal" reads it against the interval order's strict part (upper)
    /// and the strict part of its upper trace (lower).
    std::size_t upper_trace_almost_usc_own = 0;
    std::size_t upper_trace_almost_usc_literal = 0;
    std::size_t lower_trace_almost_lsc_own = 0;
    std::size_t lower_trace_almost_lsc_literal = 0;
    std::size_t reading_separations = 0;
    std::vector<std::string> reading_separation_log;

    std::size_t total_preorder_instances = 0;
    std::size_t total_preorder_agreements = 0;

    std::size_t dyadic_verified = 0;
    std::size_t strict_pairs_scaled = 0;
    std::size_t scale_round_trips = 0;

    std::vector<AuditViolation> violations;

    bool passed() const { return violations.empty(); }
    void merge(const Theorem1Report& other);
};

/// Runs every check on one instance and accumulates into `report`.
/// `r` must be an interval order over t's points.
void audit_theorem1_instance(const FiniteRelation& r, const FiniteTopology& t,
                             const std::string& id, Theorem1Report& report,
                             unsigned scale_depth = 4);

/// Every interval order on n <= n_max points against every topology on the
/// same points. Throws std::invalid_argument when n_max > 4.
Theorem1Report audit_theorem1(std::size_t n_max, unsigned scale_depth = 4);

enum class TopologyScope { discrete_indiscrete, all };

struct Theorem3Report {
    std::size_t size_max = 0;
    TopologyScope scope = TopologyScope::discrete_indiscrete;
    std::size_t tables = 0;
    std::size_t ferrers_tables = 0;
    std::size_t construction_agreements = 0; ///< Ferrers iff nested iff staircase succeeds
    std::size_t staircase_sweeps_passed = 0; ///< both modes, Ferrers tables only
    std::size_t discrete_agreements = 0;     ///< Ferrers iff representable on discrete spaces
    std::size_t instances = 0;
    std::size_t representable = 0;
    std::size_t weakly_continuous = 0;
    std::size_t jointly_dense = 0;
    std::size_t equivalence_agreements = 0;
    std::size_t dyadic_verified = 0;
    std::vector<AuditViolation> violations;

    bool passed() const { return violations.empty(); }
    void merge(const Theorem3Report& other);
};

/// All tables with 1 <= |A|, |X| <= size_max against topology pairs from
/// `scope`. Throws std::invalid_argument when size_max > 3.
Theorem3Report audit_theorem3(std::size_t size_max,
                              TopologyScope scope = TopologyScope::discrete_indiscrete);

} // namespace ivorder

#endif
