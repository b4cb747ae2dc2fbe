#ifndef VSRQ_CLUSTERING_HPP
#define VSRQ_CLUSTERING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace vsrq::clustering {

/// Row-major sample matrix: samples x features, entries expected in [0,1].
class SampleMatrix {
public:
    SampleMatrix(std::size_t samples, std::size_t features);

    std::size_t samples() const { return rows_; }
    std::size_t features() const { return cols_; }
    double at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
    double& at(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

/// Fuzzy membership matrix: clusters x samples. Each column sums to 1.
class MembershipMatrix {
public:
    MembershipMatrix(std::size_t clusters, std::size_t samples);

    std::size_t clusters() const { return rows_; }
    std::size_t samples() const { return cols_; }
    double at(std::size_t cluster, std::size_t sample) const {
        return cells_[cluster * cols_ + sample];
    }
    double& at(std::size_t cluster, std::size_t sample) {
        return cells_[cluster * cols_ + sample];
    }

    /// Max |column sum - 1| over all samples.
    double columnSumError() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

struct FcmParams {
    std::size_t clusters = 2;
    double fuzzifier = 2.0;    // m > 1
    std::uint64_t seed = 42;
    double tolerance = 1e-6;   // on max membership change
    std::size_t maxIterations = 300;
};

struct FcmResult {
    MembershipMatrix memberships{1, 1};
    std::vector<std::vector<double>> centers;  // clusters x features
    std::vector<double> objectiveTrace;        // one entry per iteration
    std::size_t iterations = 0;
    bool converged = false;
};

/// Called after each iteration with the current memberships and objective.
using FcmObserver = std::function<void(const MembershipMatrix&, double)>;

/// Fuzzy c-means with seeded uniform random center initialization.
/// Clusters are relabeled on return so center norms ascend (cluster 0 is the
/// lowest-risk class). Rejects fuzzifier <= 1, clusters < 2 or > samples,
/// and sample entries outside [0,1].
FcmResult fuzzyCluster(const SampleMatrix& data, const FcmParams& params,
                       const FcmObserver& observer = {});

/// Class eigenvalue per sample: R_i = sum_e membership[e][i] * (e + 1),
/// the membership-weighted mean of 1-based class ranks.
std::vector<double> classEigenvalue(const MembershipMatrix& memberships);

/// Sensitivity of the classification: mean over samples of
/// (a * maxMembership - 1) / (a - 1), clipped into [0,1]. Rejects a = 1.
double sensitivityCoefficient(const MembershipMatrix& memberships);

/// Blend weight used when clustering is skipped entirely.
inline constexpr double kDefaultSensitivity = 0.5;

}  // namespace vsrq::clustering

#endif
