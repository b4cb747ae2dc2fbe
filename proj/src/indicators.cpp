#include "vsrq/indicators.hpp"

#include <cmath>
#include <sstream>

#include "vsrq/core.hpp"

namespace vsrq::indicators {

using core::InputError;

namespace {

void requireFinite(double v, const char* what) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << " must be finite";
        throw InputError(msg.str());
    }
}

void requireCount(double v, const char* what) {
    requireFinite(v, what);
    if (v < 0.0) {
        std::ostringstream msg;
        msg << what << " must be non-negative, got " << v;
        throw InputError(msg.str());
    }
}

}  // namespace

CouplingGraph::CouplingGraph(std::size_t ecuCount)
    : n_(ecuCount), adj_(ecuCount * ecuCount, 0) {}

void CouplingGraph::addCall(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) {
        std::ostringstream msg;
        msg << "ECU id out of range: (" << i << ", " << j << ") with "
            << n_ << " ECUs";
        throw InputError(msg.str());
    }
    if (i == j) {
        throw InputError("an ECU cannot call itself");
    }
    adj_[i * n_ + j] = 1;
    adj_[j * n_ + i] = 1;
}

bool CouplingGraph::linked(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw InputError("ECU id out of range");
    }
    return adj_[i * n_ + j] != 0;
}

std::size_t CouplingGraph::edgeCount() const {
    std::size_t total = 0;
    for (char bit : adj_) total += static_cast<std::size_t>(bit);
    return total / 2;
}

double ecuCoupling(const CouplingGraph& graph) {
    return static_cast<double>(graph.edgeCount());
}

double inVehicleCommRisk(const CommInventory& inv) {
    const std::array<double, 5> counts = {inv.lin, inv.canLow, inv.canHigh,
                                          inv.flexray, inv.most};
    const char* names[5] = {"LIN count", "low-speed CAN count",
                            "high-speed CAN count", "FlexRay count",
                            "MOST count"};
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        requireCount(counts[i], names[i]);
        requireCount(inv.busSeverity[i], "bus severity weight");
        total += inv.busSeverity[i] * counts[i];
    }
    return total;
}

double userToVehicleCommRisk(const CommInventory& inv) {
    requireCount(inv.dsrc, "DSRC count");
    return inv.dsrc;
}

double vehicleToVehicleCommRisk(const CommInventory& inv) {
    requireCount(inv.vanetsV2v, "vehicle-to-vehicle VANET count");
    return inv.vanetsV2v;
}

double vehicleToInfraCommRisk(const CommInventory& inv) {
    const std::array<double, 3> counts = {inv.vanetsInfra, inv.wifi,
                                          inv.cellular};
    const char* names[3] = {"infrastructure VANET count", "WiFi count",
                            "cellular count"};
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        requireCount(counts[i], names[i]);
        requireCount(inv.infraSeverity[i], "infrastructure harm weight");
        total += inv.infraSeverity[i] * counts[i];
    }
    return total;
}

CodeComplexityRisks codeComplexityRisks(const std::vector<ModuleMetrics>& modules) {
    CodeComplexityRisks risks;
    for (const ModuleMetrics& m : modules) {
        requireCount(m.loc, "module loc");
        requireCount(m.distinctOperators, "distinct operator count");
        requireCount(m.distinctOperands, "distinct operand count");
        requireCount(m.totalOperators, "total operator count");
        requireCount(m.totalOperands, "total operand count");
        requireCount(m.cfgEdges, "control-flow edge count");
        requireCount(m.cfgNodes, "control-flow node count");

        const double vocabulary = m.distinctOperators + m.distinctOperands;
        const double occurrences = m.totalOperators + m.totalOperands;
        if (occurrences > 0.0 && vocabulary <= 0.0) {
            std::ostringstream msg;
            msg << "module '" << m.id
                << "' has operator/operand occurrences but an empty vocabulary";
            throw InputError(msg.str());
        }
        if (m.cfgNodes < 1.0) {
            std::ostringstream msg;
            msg << "module '" << m.id
                << "' has a control-flow graph with no nodes";
            throw InputError(msg.str());
        }

        risks.locRisk += m.loc;
        if (vocabulary > 0.0) {
            risks.halsteadRisk += occurrences * std::log2(vocabulary) / 3000.0;
        }
        risks.cyclomaticRisk += m.cfgEdges - m.cfgNodes + 2.0;
    }
    return risks;
}

double forgettingFactor(double ageYears, double halfLifeYears) {
    requireFinite(ageYears, "age");
    requireFinite(halfLifeYears, "half-life");
    if (halfLifeYears <= 0.0) {
        throw InputError("half-life must be positive");
    }
    if (ageYears < 0.0) {
        throw InputError("age must be non-negative");
    }
    return std::exp2(-ageYears / halfLifeYears);
}

HistoryRisks historyRisks(const HistoryRecords& records) {
    HistoryRisks risks;
    for (const RecallRecord& r : records.recalls) {
        requireCount(r.recallCount, "recall count");
        requireCount(r.repairCount, "repair count");
        const double forgetting = forgettingFactor(r.ageYears, records.halfLifeYears);
        risks.recallRisk += r.recallCount + forgetting * r.repairCount;
    }
    requireCount(records.performanceLimitationAccidents,
                 "performance-limitation accident count");
    risks.performanceRisk = records.performanceLimitationAccidents;

    const AttackCounts& a = records.attacks;
    const std::array<double, 4> counts = {a.vehicle, a.terminal, a.network,
                                          a.cloud};
    const char* names[4] = {"vehicle attack count", "terminal attack count",
                            "network attack count", "cloud attack count"};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        requireCount(counts[i], names[i]);
        requireCount(a.severity[i], "attack severity weight");
        risks.attackRisk += a.severity[i] * counts[i];
    }
    return risks;
}

double damageSeverity(const SeverityVector& severity) {
    const std::array<double, 4> scores = {severity.safety, severity.privacy,
                                          severity.financial,
                                          severity.operational};
    const char* names[4] = {"safety severity", "privacy severity",
                            "financial severity", "operational severity"};
    double worst = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        requireFinite(scores[i], names[i]);
        if (scores[i] < 0.0 || scores[i] > 9.0 ||
            scores[i] != std::floor(scores[i])) {
            std::ostringstream msg;
            msg << names[i] << " must be a whole number in [0,9], got "
                << scores[i];
            throw InputError(msg.str());
        }
        worst = std::max(worst, scores[i]);
    }
    return worst;
}

}  // namespace vsrq::indicators
