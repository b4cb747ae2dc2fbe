#include "vsrq/projection.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace vsrq::projection {

double unitStep(double t) { return t >= 0.0 ? 1.0 : 0.0; }

DirectionVector::DirectionVector(std::vector<double> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("direction vector must be non-empty");
    double norm2 = 0.0;
    for (double c : components_) {
        if (std::isnan(c) || c < 0.0)
            throw std::invalid_argument("direction components must be non-negative");
        norm2 += c * c;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("direction vector must have unit norm");
}

DirectionVector DirectionVector::normalized(std::vector<double> components) {
    double norm2 = 0.0;
    for (double& c : components) {
        if (std::isnan(c)) throw std::invalid_argument("direction component is NaN");
        if (c < 0.0) c = 0.0;
        norm2 += c * c;
    }
    if (norm2 <= 0.0)
        throw std::invalid_argument("direction vector needs a positive component");
    double norm = std::sqrt(norm2);
    for (double& c : components) c /= norm;
    return DirectionVector(std::move(components));
}

std::vector<double> project(const SampleMatrix& data, const DirectionVector& direction) {
    if (direction.size() != data.features())
        throw std::invalid_argument("direction has " + std::to_string(direction.size()) +
                                    " components for " + std::to_string(data.features()) +
                                    " features");
    std::vector<double> phi(data.samples(), 0.0);
    for (std::size_t i = 0; i < data.samples(); ++i)
        for (std::size_t j = 0; j < data.features(); ++j)
            phi[i] += direction.at(j) * data.at(i, j);
    return phi;
}

double ppObjective(const SampleMatrix& data, const DirectionVector& direction,
                   double windowFactor) {
    if (data.samples() < 2)
        throw std::invalid_argument("projection index undefined for fewer than 2 samples");
    if (std::isnan(windowFactor) || windowFactor < 0.0)
        throw std::invalid_argument("window factor must be non-negative");

    std::vector<double> phi = project(data, direction);
    auto x = static_cast<double>(phi.size());

    double mean = 0.0;
    for (double p : phi) mean += p;
    mean /= x;
    double varSum = 0.0;
    for (double p : phi) varSum += (p - mean) * (p - mean);
    double spread = std::sqrt(varSum / (x - 1.0));

    double window = windowFactor * spread;
    double density = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t k = 0; k < phi.size(); ++k) {
            double gap = window - std::abs(phi[i] - phi[k]);
            density += gap * unitStep(gap);
        }
    }
    return spread * density;
}

namespace {

std::vector<double> randomDirection(std::size_t y, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(y);
    for (;;) {
        double norm2 = 0.0;
        for (double& c : v) {
            c = std::abs(gauss(rng));
            norm2 += c * c;
        }
        if (norm2 > 0.0) return v;
    }
}

}  // namespace

PpResult optimizeDirection(const SampleMatrix& data, const PpParams& params) {
    std::size_t y = data.features();
    if (params.populationSize < 2)
        throw std::invalid_argument("population needs at least 2 candidates");

    auto finish = [&](DirectionVector direction, double objective) {
        PpResult out{std::move(direction), objective, {}, {}};
        out.projections = project(data, out.direction);
        out.weights.resize(y);
        for (std::size_t j = 0; j < y; ++j)
            out.weights[j] = out.direction.at(j) * out.direction.at(j);
        return out;
    };

    if (y == 1) {
        DirectionVector only(std::vector<double>{1.0});
        return finish(only, ppObjective(data, only, params.windowFactor));
    }

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, params.populationSize - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<DirectionVector> population;
    std::vector<double> fitness;
    population.reserve(params.populationSize);
    fitness.reserve(params.populationSize);
    for (std::size_t p = 0; p < params.populationSize; ++p) {
        population.push_back(DirectionVector::normalized(randomDirection(y, rng)));
        fitness.push_back(ppObjective(data, population.back(), params.windowFactor));
    }

    std::size_t bestIdx = 0;
    for (std::size_t p = 1; p < params.populationSize; ++p)
        if (fitness[p] > fitness[bestIdx]) bestIdx = p;
    DirectionVector best = population[bestIdx];
    double bestFitness = fitness[bestIdx];

    auto tournament = [&]() -> std::size_t {
        std::size_t lhs = pick(rng);
        std::size_t rhs = pick(rng);
        return fitness[lhs] >= fitness[rhs] ? lhs : rhs;
    };

    for (std::size_t gen = 0; gen < params.generations; ++gen) {
        double sigma = 0.3 * (1.0 - static_cast<double>(gen) /
                                        static_cast<double>(params.generations)) +
                       0.02;
        std::vector<DirectionVector> next;
        std::vector<double> nextFitness;
        next.reserve(params.populationSize);
        nextFitness.reserve(params.populationSize);
        next.push_back(best);
        nextFitness.push_back(bestFitness);

        while (next.size() < params.populationSize) {
            const DirectionVector& a = population[tournament()];
            const DirectionVector& b = population[tournament()];
            double mix = unit(rng);
            std::vector<double> child(y);
            for (std::size_t j = 0; j < y; ++j) {
                child[j] = mix * a.at(j) + (1.0 - mix) * b.at(j);
                if (unit(rng) < 0.3) child[j] += sigma * gauss(rng);
                if (child[j] < 0.0) child[j] = 0.0;
            }
            DirectionVector candidate = [&]() {
                try {
                    return DirectionVector::normalized(std::move(child));
                } catch (const std::invalid_argument&) {
                    return DirectionVector::normalized(randomDirection(y, rng));
                }
            }();
            double f = ppObjective(data, candidate, params.windowFactor);
            if (f > bestFitness) {
                bestFitness = f;
                best = candidate;
            }
            next.push_back(std::move(candidate));
            nextFitness.push_back(f);
        }
        population = std::move(next);
        fitness = std::move(nextFitness);
    }

    return finish(best, bestFitness);
}

}  // namespace vsrq::projection
