#ifndef IVORDER_CONSTRAINTS_HPP
#define IVORDER_CONSTRAINTS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ivorder {

/// lhs - rhs <= bound. Bounds are 0 or -1; -1 encodes a strict inequality
/// between integer-valued unknowns.
struct DifferenceConstraint {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::int64_t bound = 0;
    std::string note;
};

/// A certificate of infeasibility: constraint indices around a cycle of the
/// constraint graph whose bounds sum to a negative number.
struct NegativeCycle {
    std::vector<std::size_t> constraints;
    std::int64_t weight = 0;
};

/// One integer value per variable satisfying every constraint.
struct Potentials {
    std::vector<std::int64_t> values;
};

using SolveResult = std::variant<Potentials, NegativeCycle>;

/**
 * A system of difference constraints, decided by Bellman-Ford shortest paths
 * from a virtual source joined to every variable with weight 0.
 */
class ConstraintSystem {
  public:
    std::size_t add_variable(std::string name);
    /// Throws std::invalid_argument for unknown variables or a bound outside {0, -1}.
    std::size_t add(std::size_t lhs, std::size_t rhs, std::int64_t bound, std::string note = {});
    void pop_back() { constraints_.pop_back(); }

    std::size_t variable_count() const { return names_.size(); }
    const std::string& variable_name(std::size_t v) const { return names_.at(v); }
    const std::vector<DifferenceConstraint>& constraints() const { return constraints_; }

    SolveResult solve() const;

    /// True iff every constraint holds under `values`.
    bool satisfied_by(const std::vector<std::int64_t>& values) const;
    /// True iff `cycle` is a closed walk through this system with negative total bound.
    bool certifies(const NegativeCycle& cycle) const;

    std::string describe(const NegativeCycle& cycle) const;

  private:
    std::vector<std::string> names_;
    std::vector<DifferenceConstraint> constraints_;
};

} // namespace ivorder

#endif
