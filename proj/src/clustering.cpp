#include "vsrq/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "vsrq/core.hpp"

namespace vsrq::clustering {

using core::ConfigError;
using core::InputError;

SampleMatrix::SampleMatrix(std::size_t samples, std::size_t features)
    : rows_(samples), cols_(features) {
    if (samples == 0 || features == 0)
        throw InputError("sample matrix must be non-empty");
    cells_.assign(rows_ * cols_, 0.0);
}

MembershipMatrix::MembershipMatrix(std::size_t clusters, std::size_t samples)
    : rows_(clusters), cols_(samples) {
    if (clusters == 0 || samples == 0)
        throw InputError("membership matrix must be non-empty");
    cells_.assign(rows_ * cols_, 0.0);
}

double MembershipMatrix::columnSumError() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < cols_; ++i) {
        double sum = 0.0;
        for (std::size_t e = 0; e < rows_; ++e) sum += at(e, i);
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

namespace {

double squaredDistance(const SampleMatrix& data, std::size_t row,
                       const std::vector<double>& center) {
    double sum = 0.0;
    for (std::size_t j = 0; j < data.features(); ++j) {
        double d = data.at(row, j) - center[j];
        sum += d * d;
    }
    return sum;
}

// Memberships for one sample given squared distances to all centers.
// Zero-distance centers take the whole membership, split if several coincide.
void membershipsFromDistances(const std::vector<double>& d2, double fuzzifier,
                              std::vector<double>& out) {
    std::size_t a = d2.size();
    std::size_t zeros = 0;
    for (double d : d2)
        if (d == 0.0) ++zeros;
    if (zeros > 0) {
        for (std::size_t e = 0; e < a; ++e)
            out[e] = d2[e] == 0.0 ? 1.0 / static_cast<double>(zeros) : 0.0;
        return;
    }
    double exponent = 1.0 / (fuzzifier - 1.0);
    double total = 0.0;
    for (std::size_t e = 0; e < a; ++e) {
        out[e] = std::pow(1.0 / d2[e], exponent);
        total += out[e];
    }
    for (std::size_t e = 0; e < a; ++e) out[e] /= total;
}

}  // namespace

FcmResult fuzzyCluster(const SampleMatrix& data, const FcmParams& params,
                       const FcmObserver& observer) {
    std::size_t x = data.samples();
    std::size_t y = data.features();
    std::size_t a = params.clusters;
    if (a < 2) throw ConfigError("cluster count must be at least 2");
    if (a > x)
        throw InputError("cluster count " + std::to_string(a) +
                         " exceeds sample count " + std::to_string(x));
    if (!(params.fuzzifier > 1.0))
        throw ConfigError("fuzzifier must exceed 1");
    if (params.maxIterations == 0)
        throw ConfigError("iteration budget must be positive");
    for (std::size_t i = 0; i < x; ++i)
        for (std::size_t j = 0; j < y; ++j) {
            double v = data.at(i, j);
            if (!(v >= 0.0 && v <= 1.0))
                throw InputError("sample entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") is outside [0,1]");
        }

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> centers(a, std::vector<double>(y, 0.0));
    for (auto& center : centers)
        for (double& c : center) c = unit(rng);

    FcmResult result;
    result.memberships = MembershipMatrix(a, x);
    MembershipMatrix previous(a, x);

    std::vector<double> d2(a);
    std::vector<double> column(a);

    for (std::size_t iter = 0; iter < params.maxIterations; ++iter) {
        // Memberships from current centers.
        for (std::size_t i = 0; i < x; ++i) {
            for (std::size_t e = 0; e < a; ++e) d2[e] = squaredDistance(data, i, centers[e]);
            membershipsFromDistances(d2, params.fuzzifier, column);
            for (std::size_t e = 0; e < a; ++e) result.memberships.at(e, i) = column[e];
        }

        // Centers from memberships.
        for (std::size_t e = 0; e < a; ++e) {
            double weightSum = 0.0;
            std::fill(centers[e].begin(), centers[e].end(), 0.0);
            for (std::size_t i = 0; i < x; ++i) {
                double w = std::pow(result.memberships.at(e, i), params.fuzzifier);
                weightSum += w;
                for (std::size_t j = 0; j < y; ++j) centers[e][j] += w * data.at(i, j);
            }
            if (weightSum > 0.0)
                for (std::size_t j = 0; j < y; ++j) centers[e][j] /= weightSum;
        }

        double objective = 0.0;
        for (std::size_t i = 0; i < x; ++i)
            for (std::size_t e = 0; e < a; ++e)
                objective += std::pow(result.memberships.at(e, i), params.fuzzifier) *
                             squaredDistance(data, i, centers[e]);
        result.objectiveTrace.push_back(objective);
        if (observer) observer(result.memberships, objective);

        double delta = 0.0;
        if (iter > 0)
            for (std::size_t e = 0; e < a; ++e)
                for (std::size_t i = 0; i < x; ++i)
                    delta = std::max(delta, std::abs(result.memberships.at(e, i) -
                                                     previous.at(e, i)));
        previous = result.memberships;
        result.iterations = iter + 1;
        if (iter > 0 && delta < params.tolerance) {
            result.converged = true;
            break;
        }
    }

    // Relabel so cluster 0 has the smallest center norm (lowest risk class).
    std::vector<std::size_t> order(a);
    std::iota(order.begin(), order.end(), 0);
    auto norm2 = [&](std::size_t e) {
        double s = 0.0;
        for (double c : centers[e]) s += c * c;
        return s;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t lhs, std::size_t rhs) { return norm2(lhs) < norm2(rhs); });

    std::vector<std::vector<double>> sortedCenters(a);
    MembershipMatrix sorted(a, x);
    for (std::size_t e = 0; e < a; ++e) {
        sortedCenters[e] = centers[order[e]];
        for (std::size_t i = 0; i < x; ++i) sorted.at(e, i) = result.memberships.at(order[e], i);
    }
    result.centers = std::move(sortedCenters);
    result.memberships = std::move(sorted);
    return result;
}

std::vector<double> classEigenvalue(const MembershipMatrix& memberships) {
    std::vector<double> out(memberships.samples(), 0.0);
    for (std::size_t i = 0; i < memberships.samples(); ++i)
        for (std::size_t e = 0; e < memberships.clusters(); ++e)
            out[i] += memberships.at(e, i) * static_cast<double>(e + 1);
    return out;
}

double sensitivityCoefficient(const MembershipMatrix& memberships) {
    auto a = static_cast<double>(memberships.clusters());
    if (memberships.clusters() < 2)
        throw InputError("sensitivity undefined for a single cluster");
    double sum = 0.0;
    for (std::size_t i = 0; i < memberships.samples(); ++i) {
        double best = 0.0;
        for (std::size_t e = 0; e < memberships.clusters(); ++e)
            best = std::max(best, memberships.at(e, i));
        sum += (a * best - 1.0) / (a - 1.0);
    }
    double rho = sum / static_cast<double>(memberships.samples());
    return std::min(std::max(rho, 0.0), 1.0);
}

}  // namespace vsrq::clustering
