#ifndef CIEMO_INFILL_SELECT_HPP
#define CIEMO_INFILL_SELECT_HPP

#include <string>
#include <vector>

#include "core/types.hpp"
#include "infill/indicators.hpp"
#include "moea/selection.hpp"
#include "problems/problems.hpp"
#include "sampling/rng.hpp"

namespace ciemo {

enum class WeightMode { Random, FixedOne };

/// Which composite-indicator flavor drives query-point selection.
struct InfillVariant {
    bool use_i1 = true;
    bool use_i2 = true;
    bool use_i3 = true;
    WeightMode weights = WeightMode::Random;
    bool normalize = true;
    int q = 1;               ///< points selected per iteration
    bool random_pick = false; ///< uniform choice from the pool, ignoring indicators

    /// Canonical short label ("ci", "rand", "i3", "ci-nonorm-q10", ...).
    std::string label() const;
};

/// Parses a label produced by InfillVariant::label(); throws on junk.
InfillVariant variant_from_label(const std::string& label);

/// Indicator components, weights, composite values, and the chosen pool
/// index for one selection slot.
struct IndicatorScores {
    std::vector<double> i1, i2, i3;
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    std::vector<double> ci;
    std::size_t chosen = 0;
};

struct SelectionResult {
    std::vector<DecisionVector> chosen_x;
    std::vector<IndicatorScores> slots;    ///< empty for random_pick slots
    std::vector<bool> random_fallback;     ///< true when the duplicate guard gave up
    std::size_t duplicate_rejections = 0;  ///< candidates skipped by the guard
};

/// Chooses q query points from the candidate pool. Each slot draws fresh
/// weights, maximizes the composite of the enabled indicators, removes the
/// winner from the pool, and recomputes indicator scores for the next slot.
/// Candidates within 1e-8 (infinity norm, box-scaled decision space) of an
/// archive point or an already chosen point are skipped; if everything is a
/// duplicate the slot falls back to a uniform random in-bounds point.
SelectionResult select(const SurrogatePopulation& pstar, const Database& db,
                       const InfillVariant& variant, const ProblemSpec& problem, RngStream& rng);

} // namespace ciemo

#endif
