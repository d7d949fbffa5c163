#include "moea/sa_nsga3.hpp"

#include <algorithm>

#include "core/dominance.hpp"
#include "core/errors.hpp"
#include "moea/variation.hpp"

namespace ciemo {

namespace {

// Predicts every objective for a batch of decision vectors.
void score_with_models(const std::vector<const Surrogate*>& models,
                       std::vector<Candidate>& members) {
    const std::size_t m = models.size();
    std::vector<DecisionVector> xs;
    xs.reserve(members.size());
    for (const auto& c : members) xs.push_back(c.x);

    std::vector<Prediction> preds;
    for (std::size_t j = 0; j < m; ++j) {
        models[j]->predict_batch(xs, preds);
        for (std::size_t i = 0; i < members.size(); ++i) {
            members[i].predicted.resize(m);
            members[i].variance.resize(m);
            members[i].predicted[j] = preds[i].mean;
            members[i].variance[j] = preds[i].variance;
        }
    }
}

} // namespace

SaNsga3Params default_sa_nsga3_params(std::size_t m, std::size_t n0) {
    SaNsga3Params params;
    params.reference_vectors = das_dennis_at_least(m, n0);
    params.population_size = params.reference_vectors.size();
    return params;
}

SurrogatePopulation sa_nsga3(const Database& db, const std::vector<const Surrogate*>& models,
                             const SaNsga3Params& params, const ProblemSpec& problem,
                             RngStream& rng) {
    if (db.empty())
        throw Error(ErrorCode::EmptyInput, "sa_nsga3: empty database");
    if (models.size() != db.objectives())
        throw Error(ErrorCode::InvalidArgument, "sa_nsga3: need one model per objective");
    const std::size_t N = params.population_size;
    if (N == 0 || N != params.reference_vectors.size())
        throw Error(ErrorCode::InvalidArgument,
                    "sa_nsga3: population size must match the reference vector count");

    // Ideal point: initialized from the archive, then lowered by any better
    // predicted objective seen during the search. Keeping it a running
    // minimum keeps translated objectives non-negative, which the
    // extreme-point intercept construction in the selection requires.
    ObjectiveVector ideal = db.ideal();
    auto lower_ideal = [&ideal](const SurrogatePopulation& pop) {
        for (const auto& c : pop)
            for (std::size_t j = 0; j < ideal.size(); ++j)
                ideal[j] = std::min(ideal[j], c.predicted[j]);
    };

    // Seed population: archive members selected on their true objectives.
    SurrogatePopulation seed;
    seed.reserve(db.size());
    for (const auto& s : db.samples()) seed.push_back(Candidate{s.x, s.f, {}});

    SurrogatePopulation population;
    if (seed.size() >= N) {
        population = environmental_selection(seed, ideal, params.reference_vectors, N, rng);
    } else {
        population = seed;
        // Too few archive members: fill with binary-tournament clones by rank.
        const FrontPartition fp = fast_nondominated_sort(db.objective_rows());
        std::vector<std::size_t> rank(seed.size());
        for (std::size_t f = 0; f < fp.fronts.size(); ++f)
            for (std::size_t i : fp.fronts[f]) rank[i] = f;
        while (population.size() < N) {
            const std::size_t a = rng.uniform_index(seed.size());
            const std::size_t b = rng.uniform_index(seed.size());
            population.push_back(seed[rank[b] < rank[a] ? b : a]);
        }
    }
    score_with_models(models, population);
    lower_ideal(population);

    const double p_m = params.p_m >= 0.0 ? params.p_m : 1.0 / static_cast<double>(problem.d);

    for (std::size_t t = 0; t < params.t_max; ++t) {
        const std::vector<std::size_t> pool = rng.permutation(N);
        SurrogatePopulation offspring;
        offspring.reserve(N);
        for (std::size_t i = 0; i + 1 < N; i += 2) {
            auto [c1, c2] = sbx_crossover(population[pool[i]].x, population[pool[i + 1]].x,
                                          params.eta_c, params.p_c, problem.lower, problem.upper, rng);
            c1 = polynomial_mutation(c1, params.eta_m, p_m, problem.lower, problem.upper, rng);
            c2 = polynomial_mutation(c2, params.eta_m, p_m, problem.lower, problem.upper, rng);
            offspring.push_back(Candidate{std::move(c1), {}, {}});
            offspring.push_back(Candidate{std::move(c2), {}, {}});
        }
        score_with_models(models, offspring);
        lower_ideal(offspring);

        SurrogatePopulation merged = std::move(offspring);
        merged.insert(merged.end(), population.begin(), population.end());
        population = environmental_selection(merged, ideal, params.reference_vectors, N, rng);
    }
    return population;
}

} // namespace ciemo
