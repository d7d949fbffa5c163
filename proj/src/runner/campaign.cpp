#include "runner/campaign.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <thread>

#include "core/errors.hpp"

namespace ciemo {

namespace {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
};

Stats mean_std(const std::vector<double>& v) {
    Stats s;
    if (v.empty()) return s;
    for (double x : v) s.mean += x;
    s.mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - s.mean) * (x - s.mean);
    s.stddev = v.size() > 1 ? std::sqrt(acc / static_cast<double>(v.size() - 1)) : 0.0;
    return s;
}

} // namespace

CampaignResult run_campaign(const RunConfig& config) {
    RunConfig base = config;
    resolve_config(base);

    struct Job {
        RunConfig cfg;
        std::size_t order = 0;
    };
    std::vector<Job> jobs;
    for (const auto& problem : base.problems) {
        for (const auto& variant_label : base.variants) {
            for (std::size_t r = 0; r < base.repeats; ++r) {
                RunConfig cfg = base;
                cfg.problem = problem;
                cfg.problems = {problem};
                cfg.variant = variant_from_label(variant_label);
                cfg.variants = {variant_label};
                cfg.d = config.d; // re-resolve per problem family
                cfg.seed = base.seed + r;
                resolve_config(cfg);
                jobs.push_back(Job{std::move(cfg), jobs.size()});
            }
        }
    }

    // Shared metric contexts, one per problem instance actually used.
    std::map<std::string, std::shared_ptr<const MetricContext>> contexts;
    for (const auto& job : jobs) {
        const std::string key = job.cfg.problem + "/" + std::to_string(job.cfg.m) + "/" +
                                std::to_string(job.cfg.d) + "/" +
                                std::to_string(job.cfg.reference_size);
        if (!contexts.count(key)) {
            const ProblemSpec spec = make_problem(job.cfg.problem, job.cfg.m, job.cfg.d);
            contexts[key] = std::make_shared<const MetricContext>(spec, job.cfg.reference_size);
        }
    }
    auto context_of = [&](const RunConfig& cfg) {
        const std::string key = cfg.problem + "/" + std::to_string(cfg.m) + "/" +
                                std::to_string(cfg.d) + "/" + std::to_string(cfg.reference_size);
        return contexts.at(key);
    };

    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::min<std::size_t>(base.parallelism, jobs.size());

    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[jobs[i].order] = run_ci_emo(jobs[i].cfg, *context_of(jobs[i].cfg));
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    CampaignResult result;
    result.summary.repeats = base.repeats;
    result.summary.baseline = base.baseline;

    // Aggregate cells in grid order.
    std::size_t idx = 0;
    std::map<std::string, std::vector<double>> baseline_igd_by_problem;
    for (const auto& problem : base.problems) {
        for (const auto& variant_label : base.variants) {
            CampaignCell cell;
            cell.problem = problem;
            cell.variant = variant_label;
            for (std::size_t r = 0; r < base.repeats; ++r, ++idx) {
                const RunRecord& rec = records[idx];
                if (rec.aborted || rec.trajectory.empty()) {
                    ++cell.failures;
                    continue;
                }
                cell.final_igd.push_back(rec.final_igd_plus());
                cell.final_hv.push_back(rec.final_hv());
            }
            const Stats igd = mean_std(cell.final_igd);
            const Stats hv = mean_std(cell.final_hv);
            cell.igd_mean = igd.mean;
            cell.igd_std = igd.stddev;
            cell.hv_mean = hv.mean;
            cell.hv_std = hv.stddev;
            cell.is_baseline = variant_label == base.baseline;
            if (cell.is_baseline) baseline_igd_by_problem[problem] = cell.final_igd;
            result.summary.cells.push_back(std::move(cell));
        }
    }
    for (auto& cell : result.summary.cells) {
        if (cell.is_baseline) continue;
        const auto it = baseline_igd_by_problem.find(cell.problem);
        if (it == baseline_igd_by_problem.end()) continue;
        if (cell.final_igd.size() >= 5 && it->second.size() >= 5)
            cell.verdict = wilcoxon_rank_sum(cell.final_igd, it->second, 0.05);
    }

    result.records = std::move(records);
    return result;
}

} // namespace ciemo
