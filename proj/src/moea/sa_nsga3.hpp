#ifndef CIEMO_MOEA_SA_NSGA3_HPP
#define CIEMO_MOEA_SA_NSGA3_HPP

#include <cstddef>
#include <vector>

#include "core/types.hpp"
#include "moea/reference_vectors.hpp"
#include "moea/selection.hpp"
#include "problems/problems.hpp"
#include "sampling/rng.hpp"
#include "surrogate/gp.hpp"

namespace ciemo {

struct SaNsga3Params {
    ReferenceVectorSet reference_vectors;
    std::size_t population_size = 0; ///< equals reference_vectors.size()
    std::size_t t_max = 20;
    double eta_c = 20.0;
    double p_c = 1.0;
    double eta_m = 20.0;
    double p_m = -1.0; ///< < 0 selects the 1/d default
};

/// Smallest Das-Dennis lattice with at least n0 vectors; the paper-style
/// population sizing where reference-vector count and population size match.
SaNsga3Params default_sa_nsga3_params(std::size_t m, std::size_t n0);

/// Surrogate-landscape NSGA-III: seeds the population from the archive
/// (selected on true objectives, then re-scored by the models), then runs
/// t_max generations where all offspring objectives come from the surrogates.
/// Spends no true evaluations. The ideal point is computed once from the
/// archive and held fixed.
SurrogatePopulation sa_nsga3(const Database& db, const std::vector<const Surrogate*>& models,
                             const SaNsga3Params& params, const ProblemSpec& problem,
                             RngStream& rng);

} // namespace ciemo

#endif
