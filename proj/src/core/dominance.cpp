#include "core/dominance.hpp"

#include "core/errors.hpp"

namespace ciemo {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "dominates: objective vectors differ in length");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<std::size_t> nondominated_subset(const std::vector<ObjectiveVector>& points) {
    if (points.empty())
        throw Error(ErrorCode::EmptyInput, "nondominated_subset: empty input");
    const std::size_t n = points.size();
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < n; ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < n && !dominated; ++j) {
            if (j != i && dominates(points[j], points[i])) dominated = true;
        }
        if (!dominated) result.push_back(i);
    }
    return result;
}

FrontPartition fast_nondominated_sort(const std::vector<ObjectiveVector>& points) {
    if (points.empty())
        throw Error(ErrorCode::EmptyInput, "fast_nondominated_sort: empty input");
    const std::size_t n = points.size();

    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    FrontPartition partition;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return partition;
}

ObjectiveVector ideal_point(const Database& db) {
    return db.ideal();
}

} // namespace ciemo
