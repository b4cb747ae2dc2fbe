#ifndef VSRQ_WEIGHTING_HPP
#define VSRQ_WEIGHTING_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vsrq/core.hpp"

namespace vsrq::weighting {

/// Pairwise comparison matrix on the 1/9..9 scale.
/// Invariants: square, n >= 2, unit diagonal, entries within [1/9, 9],
/// reciprocality phi_ji = 1/phi_ij within 1e-6.
class JudgmentMatrix {
public:
    /// Strict construction; throws core::ConfigError on any violation.
    static JudgmentMatrix fromEntries(std::vector<std::vector<double>> entries);

    /// Tolerant construction for matrices quoted at limited print precision:
    /// a lower-triangle entry that deviates from 1/phi_ij by more than 1e-6
    /// but at most 5e-3 is replaced by the exact reciprocal (upper triangle
    /// wins) and a warning is recorded. Larger deviations still throw.
    static JudgmentMatrix fromEntriesRepaired(std::vector<std::vector<double>> entries,
                                              std::vector<std::string>& warnings);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> cells_;
};

struct AhpResult {
    std::vector<double> weights;     // normalized row geometric means
    double lambdaMax = 0.0;
    double consistencyIndex = 0.0;   // (lambdaMax - n) / (n - 1)
    double consistencyRatio = 0.0;   // CI / RI(n); 0 for n <= 2
};

/// Random consistency index for matrix order n (1-based, defined for
/// n in [1, 10]).
double randomIndex(std::size_t n);

/// Crisp AHP weights via normalized row geometric means, with the standard
/// consistency statistics.
AhpResult ahpWeights(const JudgmentMatrix& matrix);

/// Gate value: matrices with consistencyRatio below this are acceptable.
inline constexpr double kConsistencyGate = 0.1;

/// Interval-valued pairwise comparison matrix.
/// Invariants: square, n >= 2, lower <= upper entrywise, unit interval
/// diagonal [1,1], entries within [1/9, 9], interval reciprocality
/// lower_ji = 1/upper_ij and upper_ji = 1/lower_ij within 1e-6.
class IntervalJudgmentMatrix {
public:
    static IntervalJudgmentMatrix fromEntries(std::vector<std::vector<double>> lower,
                                              std::vector<std::vector<double>> upper);

    std::size_t size() const { return n_; }
    double lower(std::size_t i, std::size_t j) const { return lo_[i * n_ + j]; }
    double upper(std::size_t i, std::size_t j) const { return hi_[i * n_ + j]; }
    core::Interval at(std::size_t i, std::size_t j) const {
        return core::Interval(lower(i, j), upper(i, j));
    }

private:
    std::size_t n_ = 0;
    std::vector<double> lo_;
    std::vector<double> hi_;
};

/// Symmetric multiplicative fuzzification of a crisp matrix: entry phi maps
/// to [phi/(1+delta), phi*(1+delta)], clamped into [1/9, 9], with the lower
/// triangle rebuilt from the upper to keep interval reciprocality exact.
/// delta = 0 degenerates to zero-width entries. Rejects negative delta.
IntervalJudgmentMatrix fuzzify(const JudgmentMatrix& crisp, double delta);

/// Interval weight vector from an interval judgment matrix:
///   gLo_j = 1 / sum_i upper_ij,   gHi_j = 1 / sum_i lower_ij,
///   mu = sqrt(sum_j gLo_j),       nu = sqrt(sum_j gHi_j),
///   gamma_j = [mu * gLo_j, nu * gHi_j].
/// On a zero-width matrix built from a perfectly consistent crisp matrix
/// this reduces exactly to the AHP weights.
std::vector<core::Interval> ifahpWeights(const IntervalJudgmentMatrix& matrix);

/// True when every crisp weight lies inside its interval weight (closed
/// containment). Sizes must match.
bool intervalsContainCrisp(std::span<const core::Interval> gamma,
                           std::span<const double> crisp);

}  // namespace vsrq::weighting

#endif
