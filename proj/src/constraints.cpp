#include "ivorder/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivorder {

std::size_t ConstraintSystem::add_variable(std::string name)
{
    names_.push_back(std::move(name));
    return names_.size() - 1;
}

std::size_t ConstraintSystem::add(std::size_t lhs, std::size_t rhs, std::int64_t bound,
                                  std::string note)
{
    if (lhs >= names_.size() || rhs >= names_.size())
        throw std::invalid_argument("constraint references an undeclared variable");
    if (bound != 0 && bound != -1)
        throw std::invalid_argument("constraint bound must be 0 or -1");
    constraints_.push_back({lhs, rhs, bound, std::move(note)});
    return constraints_.size() - 1;
}

// Edge rhs -> lhs with weight bound: dist[lhs] <= dist[rhs] + bound.
SolveResult ConstraintSystem::solve() const
{
    const std::size_t n = names_.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::int64_t> dist(n, 0);
    std::vector<std::size_t> via(n, none);

    std::size_t relaxed = none;
    for (std::size_t round = 0; round <= n; ++round) {
        relaxed = none;
        for (std::size_t e = 0; e < constraints_.size(); ++e) {
            const auto& c = constraints_[e];
            if (dist[c.rhs] + c.bound < dist[c.lhs]) {
                dist[c.lhs] = dist[c.rhs] + c.bound;
                via[c.lhs] = e;
                relaxed = c.lhs;
            }
        }
        if (relaxed == none)
            return Potentials{std::move(dist)};
    }

    // Still relaxing after n+1 rounds: walk predecessors n times to land on
    // the cycle, then collect it.
    std::size_t v = relaxed;
    for (std::size_t i = 0; i < n; ++i) {
        if (via[v] == none)
            throw std::logic_error("negative cycle walk left the predecessor graph");
        v = constraints_[via[v]].rhs;
    }
    NegativeCycle cycle;
    std::size_t u = v;
    do {
        const std::size_t e = via[u];
        cycle.constraints.push_back(e);
        cycle.weight += constraints_[e].bound;
        u = constraints_[e].rhs;
    } while (u != v);
    std::reverse(cycle.constraints.begin(), cycle.constraints.end());
    return cycle;
}

bool ConstraintSystem::satisfied_by(const std::vector<std::int64_t>& values) const
{
    if (values.size() != names_.size())
        return false;
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) {
        return values[c.lhs] - values[c.rhs] <= c.bound;
    });
}

bool ConstraintSystem::certifies(const NegativeCycle& cycle) const
{
    if (cycle.constraints.empty())
        return false;
    std::int64_t weight = 0;
    for (std::size_t k = 0; k < cycle.constraints.size(); ++k) {
        const std::size_t e = cycle.constraints[k];
        if (e >= constraints_.size())
            return false;
        const std::size_t next = cycle.constraints[(k + 1) % cycle.constraints.size()];
        if (constraints_[e].lhs != constraints_[next].rhs)
            return false;
        weight += constraints_[e].bound;
    }
    return weight < 0 && weight == cycle.weight;
}

std::string ConstraintSystem::describe(const NegativeCycle& cycle) const
{
    std::string out;
    for (std::size_t e : cycle.constraints) {
        const auto& c = constraints_[e];
        if (!out.empty())
            out += "; ";
        out += names_[c.lhs] + " - " + names_[c.rhs] + " <= " + std::to_string(c.bound);
        if (!c.note.empty())
            out += " (" + c.note + ")";
    }
    return out;
}

} // namespace ivorder
