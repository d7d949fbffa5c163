#ifndef CIEMO_PROBLEMS_PROBLEMS_HPP
#define CIEMO_PROBLEMS_PROBLEMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/types.hpp"

namespace ciemo {

/// Immutable description of a benchmark problem instance.
struct ProblemSpec {
    std::string name;
    std::size_t d = 0;
    std::size_t m = 0;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Counts expensive evaluations against a hard budget.
class EvaluationBudget {
public:
    explicit EvaluationBudget(std::size_t limit) : limit_(limit) {}

    std::size_t used() const noexcept { return used_; }
    std::size_t limit() const noexcept { return limit_; }
    std::size_t remaining() const noexcept { return limit_ - used_; }
    bool exhausted() const noexcept { return used_ >= limit_; }

    void charge() {
        if (used_ >= limit_)
            throw Error(ErrorCode::BudgetExhausted, "evaluation budget exhausted");
        ++used_;
    }

private:
    std::size_t used_ = 0;
    std::size_t limit_;
};

/// Builds a problem instance by name (zdt1-4, zdt6, dtlz1-7).
/// d = 0 selects the default dimension: 8 for m = 2, 6 for 3-objective DTLZ.
ProblemSpec make_problem(const std::string& name, std::size_t m, std::size_t d = 0);

/// True whether the name denotes a supported problem.
bool is_known_problem(const std::string& name);

/// Evaluates the benchmark objectives at x, charging one budget unit.
/// Throws on out-of-bounds input or an exhausted budget.
ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x, EvaluationBudget& budget);

/// Objective values without budget accounting (internal analysis only).
ObjectiveVector evaluate_objectives(const ProblemSpec& spec, const DecisionVector& x);

/// Deterministic sample of the analytical Pareto front. Exactly n points for
/// two-objective problems; for m = 3 the simplex-lattice construction returns
/// the smallest lattice with at least n points.
std::vector<ObjectiveVector> true_front_reference(const ProblemSpec& spec, std::size_t n);

} // namespace ciemo

#endif
