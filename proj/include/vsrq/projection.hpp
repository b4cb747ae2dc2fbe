#ifndef VSRQ_PROJECTION_HPP
#define VSRQ_PROJECTION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsrq/clustering.hpp"

namespace vsrq::projection {

using clustering::SampleMatrix;

/// Heaviside step: 1 for t >= 0, 0 otherwise.
double unitStep(double t);

/// Non-negative unit direction over the feature axes. Construction rejects
/// negative components and vectors whose norm is not 1 within 1e-9.
class DirectionVector {
public:
    explicit DirectionVector(std::vector<double> components);

    /// Zeroes negative components and rescales to unit norm. Rejects vectors
    /// with no positive component.
    static DirectionVector normalized(std::vector<double> components);

    std::size_t size() const { return components_.size(); }
    double at(std::size_t j) const { return components_[j]; }
    const std::vector<double>& components() const { return components_; }

private:
    std::vector<double> components_;
};

/// One-dimensional projections phi_i = sum_j l_j * z_ij.
std::vector<double> project(const SampleMatrix& data, const DirectionVector& direction);

/// Projection index A * B for a candidate direction:
///   A = sample standard deviation of the projections ((x-1) divisor),
///   b = windowFactor * A,
///   B = sum over ordered sample pairs of (b - |phi_i - phi_a|) when the
///       difference is non-negative (unit step window).
/// Undefined (rejected) for fewer than 2 samples.
double ppObjective(const SampleMatrix& data, const DirectionVector& direction,
                   double windowFactor);

struct PpParams {
    std::uint64_t seed = 42;
    std::size_t populationSize = 60;
    std::size_t generations = 200;
    double windowFactor = 0.1;
};

struct PpResult {
    DirectionVector direction{std::vector<double>{1.0}};
    double objective = 0.0;
    std::vector<double> projections;
    std::vector<double> weights;  // squared direction components, sum 1
};

/// Seeded population search (tournament selection, blend crossover, Gaussian
/// mutation, elitist) over the non-negative unit sphere. Returns the best
/// direction ever evaluated; with one feature the only feasible direction
/// (1) is returned directly.
PpResult optimizeDirection(const SampleMatrix& data, const PpParams& params);

}  // namespace vsrq::projection

#endif
