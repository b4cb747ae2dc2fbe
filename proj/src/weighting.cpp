#include "vsrq/weighting.hpp"

#include <cmath>
#include <sstream>

namespace vsrq::weighting {

using core::ConfigError;

namespace {

constexpr double kScaleLo = 1.0 / 9.0;
constexpr double kScaleHi = 9.0;
constexpr double kReciprocalTol = 1e-6;
constexpr double kRepairTol = 5e-3;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string cellName(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<double> flattenSquare(const std::vector<std::vector<double>>& rows,
                                  std::size_t& nOut) {
    std::size_t n = rows.size();
    if (n < 2)
        throw ConfigError("judgment matrix needs order >= 2, got " + std::to_string(n));
    std::vector<double> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ConfigError("judgment matrix row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n));
        for (double v : rows[i]) cells.push_back(v);
    }
    nOut = n;
    return cells;
}

void checkScale(double v, std::size_t i, std::size_t j) {
    if (std::isnan(v) || v < kScaleLo - kReciprocalTol || v > kScaleHi + kReciprocalTol)
        throw ConfigError("judgment entry " + cellName(i, j) + " = " + fmt(v) +
                          " outside the [1/9, 9] scale");
}

}  // namespace

JudgmentMatrix JudgmentMatrix::fromEntries(std::vector<std::vector<double>> entries) {
    std::vector<std::string> warnings;
    JudgmentMatrix m = fromEntriesRepaired(std::move(entries), warnings);
    if (!warnings.empty())
        throw ConfigError("judgment matrix not reciprocal: " + warnings.front());
    return m;
}

JudgmentMatrix JudgmentMatrix::fromEntriesRepaired(std::vector<std::vector<double>> entries,
                                                   std::vector<std::string>& warnings) {
    JudgmentMatrix m;
    m.cells_ = flattenSquare(entries, m.n_);
    std::size_t n = m.n_;

    for (std::size_t i = 0; i < n; ++i) {
        double diag = m.cells_[i * n + i];
        if (std::abs(diag - 1.0) > kReciprocalTol)
            throw ConfigError("judgment diagonal entry " + cellName(i, i) + " = " +
                              fmt(diag) + ", expected 1");
        m.cells_[i * n + i] = 1.0;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) checkScale(m.cells_[i * n + j], i, j);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double expected = 1.0 / m.cells_[i * n + j];
            double actual = m.cells_[j * n + i];
            double deviation = std::abs(actual - expected);
            if (deviation <= kReciprocalTol) continue;
            if (deviation <= kRepairTol) {
                warnings.push_back("entry " + cellName(j, i) + " = " + fmt(actual) +
                                   " replaced by reciprocal " + fmt(expected) +
                                   " of entry " + cellName(i, j));
                m.cells_[j * n + i] = expected;
            } else {
                throw ConfigError("judgment entries " + cellName(i, j) + " and " +
                                  cellName(j, i) + " are not reciprocal: " +
                                  fmt(m.cells_[i * n + j]) + " vs " + fmt(actual));
            }
        }
    }
    return m;
}

double randomIndex(std::size_t n) {
    static constexpr double kRi[] = {0.0,  0.0,  0.58, 0.90, 1.12,
                                     1.24, 1.32, 1.41, 1.45, 1.49};
    if (n < 1 || n > 10)
        throw std::invalid_argument("random index defined for orders 1..10, got " +
                                    std::to_string(n));
    return kRi[n - 1];
}

AhpResult ahpWeights(const JudgmentMatrix& matrix) {
    std::size_t n = matrix.size();
    AhpResult out;
    out.weights.resize(n);

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double logSum = 0.0;
        for (std::size_t j = 0; j < n; ++j) logSum += std::log(matrix.at(i, j));
        out.weights[i] = std::exp(logSum / static_cast<double>(n));
        total += out.weights[i];
    }
    for (double& w : out.weights) w /= total;

    double lambdaSum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double rowDot = 0.0;
        for (std::size_t j = 0; j < n; ++j) rowDot += matrix.at(i, j) * out.weights[j];
        lambdaSum += rowDot / out.weights[i];
    }
    out.lambdaMax = lambdaSum / static_cast<double>(n);
    out.consistencyIndex = (out.lambdaMax - static_cast<double>(n)) /
                           (static_cast<double>(n) - 1.0);
    double ri = randomIndex(n);
    out.consistencyRatio = ri > 0.0 ? out.consistencyIndex / ri : 0.0;
    return out;
}

IntervalJudgmentMatrix IntervalJudgmentMatrix::fromEntries(
    std::vector<std::vector<double>> lower, std::vector<std::vector<double>> upper) {
    IntervalJudgmentMatrix m;
    std::size_t nLo = 0;
    std::size_t nHi = 0;
    m.lo_ = flattenSquare(lower, nLo);
    m.hi_ = flattenSquare(upper, nHi);
    if (nLo != nHi)
        throw ConfigError("interval judgment bounds have different orders: " +
                          std::to_string(nLo) + " vs " + std::to_string(nHi));
    m.n_ = nLo;
    std::size_t n = m.n_;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double lo = m.lo_[i * n + j];
            double hi = m.hi_[i * n + j];
            checkScale(lo, i, j);
            checkScale(hi, i, j);
            if (lo > hi)
                throw ConfigError("interval judgment entry " + cellName(i, j) +
                                  " inverted: [" + fmt(lo) + ", " + fmt(hi) + "]");
        }
        if (std::abs(m.lo_[i * n + i] - 1.0) > kReciprocalTol ||
            std::abs(m.hi_[i * n + i] - 1.0) > kReciprocalTol)
            throw ConfigError("interval judgment diagonal " + cellName(i, i) +
                              " must be [1,1]");
        m.lo_[i * n + i] = 1.0;
        m.hi_[i * n + i] = 1.0;
    }

    // Interval reciprocality crosses the bounds: lo_ji = 1/hi_ij, hi_ji = 1/lo_ij.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m.lo_[j * n + i] - 1.0 / m.hi_[i * n + j]) > kReciprocalTol ||
                std::abs(m.hi_[j * n + i] - 1.0 / m.lo_[i * n + j]) > kReciprocalTol)
                throw ConfigError("interval judgment entries " + cellName(i, j) + " and " +
                                  cellName(j, i) + " are not interval-reciprocal");
        }
    }
    return m;
}

IntervalJudgmentMatrix fuzzify(const JudgmentMatrix& crisp, double delta) {
    if (std::isnan(delta) || delta < 0.0)
        throw std::invalid_argument("fuzzification spread must be non-negative, got " +
                                    fmt(delta));
    std::size_t n = crisp.size();
    std::vector<std::vector<double>> lower(n, std::vector<double>(n, 1.0));
    std::vector<std::vector<double>> upper(n, std::vector<double>(n, 1.0));
    auto clamp = [](double v) { return std::min(std::max(v, kScaleLo), kScaleHi); };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double lo = clamp(crisp.at(i, j) / (1.0 + delta));
            double hi = clamp(crisp.at(i, j) * (1.0 + delta));
            lower[i][j] = lo;
            upper[i][j] = hi;
            lower[j][i] = 1.0 / hi;
            upper[j][i] = 1.0 / lo;
        }
    }
    return IntervalJudgmentMatrix::fromEntries(std::move(lower), std::move(upper));
}

std::vector<core::Interval> ifahpWeights(const IntervalJudgmentMatrix& matrix) {
    std::size_t n = matrix.size();
    std::vector<double> gLo(n), gHi(n);
    for (std::size_t j = 0; j < n; ++j) {
        double colLo = 0.0;
        double colHi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            colLo += matrix.lower(i, j);
            colHi += matrix.upper(i, j);
        }
        gLo[j] = 1.0 / colHi;
        gHi[j] = 1.0 / colLo;
    }

    double mu = 0.0;
    double nu = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        mu += gLo[j];
        nu += gHi[j];
    }
    mu = std::sqrt(mu);
    nu = std::sqrt(nu);

    std::vector<core::Interval> gamma;
    gamma.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        gamma.emplace_back(mu * gLo[j], nu * gHi[j]);
    return gamma;
}

bool intervalsContainCrisp(std::span<const core::Interval> gamma,
                           std::span<const double> crisp) {
    if (gamma.size() != crisp.size())
        throw std::invalid_argument("weight vectors have different sizes: " +
                                    std::to_string(gamma.size()) + " vs " +
                                    std::to_string(crisp.size()));
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (!gamma[j].contains(crisp[j])) return false;
    return true;
}

}  // namespace vsrq::weighting
