#ifndef CIEMO_CORE_TYPES_HPP
#define CIEMO_CORE_TYPES_HPP

#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace ciemo {

/// Point in decision space, length d, box-bounded by the owning problem.
using DecisionVector = std::vector<double>;

/// Point in objective space, length m, minimization throughout.
using ObjectiveVector = std::vector<double>;

/// One expensive evaluation: decision vector, observed objectives, and the
/// ordinal of the evaluation that produced it.
struct EvaluatedSample {
    DecisionVector x;
    ObjectiveVector f;
    std::size_t eval_index = 0;
};

/// Append-only archive of all expensively evaluated samples, with running
/// per-objective min/max summaries kept consistent on every insertion.
class Database {
public:
    Database(std::size_t d, std::size_t m)
        : d_(d), m_(m) {
        if (d == 0 || m == 0)
            throw Error(ErrorCode::InvalidArgument, "Database: d and m must be positive");
    }

    std::size_t dimension() const noexcept { return d_; }
    std::size_t objectives() const noexcept { return m_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    const std::vector<EvaluatedSample>& samples() const noexcept { return samples_; }
    const EvaluatedSample& operator[](std::size_t i) const { return samples_[i]; }

    /// Appends a sample; eval_index is assigned contiguously from 0.
    void append(DecisionVector x, ObjectiveVector f) {
        if (x.size() != d_)
            throw Error(ErrorCode::DimensionMismatch, "Database::append: x has wrong length");
        if (f.size() != m_)
            throw Error(ErrorCode::DimensionMismatch, "Database::append: f has wrong length");
        if (samples_.empty()) {
            ideal_ = f;
            nadir_ = f;
        } else {
            for (std::size_t i = 0; i < m_; ++i) {
                if (f[i] < ideal_[i]) ideal_[i] = f[i];
                if (f[i] > nadir_[i]) nadir_[i] = f[i];
            }
        }
        samples_.push_back(EvaluatedSample{std::move(x), std::move(f), samples_.size()});
    }

    /// Per-objective minimum over all samples (the ideal point z).
    const ObjectiveVector& ideal() const {
        require_nonempty();
        return ideal_;
    }

    /// Per-objective maximum over all samples.
    const ObjectiveVector& nadir() const {
        require_nonempty();
        return nadir_;
    }

    /// Objective vectors of all samples, in insertion order.
    std::vector<ObjectiveVector> objective_rows() const {
        std::vector<ObjectiveVector> rows;
        rows.reserve(samples_.size());
        for (const auto& s : samples_) rows.push_back(s.f);
        return rows;
    }

private:
    void require_nonempty() const {
        if (samples_.empty())
            throw Error(ErrorCode::EmptyInput, "Database: no samples");
    }

    std::size_t d_;
    std::size_t m_;
    std::vector<EvaluatedSample> samples_;
    ObjectiveVector ideal_;
    ObjectiveVector nadir_;
};

/// Result of non-dominated sorting: fronts[0] is the non-dominated set,
/// and the index sets partition the input population.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

} // namespace ciemo

#endif
