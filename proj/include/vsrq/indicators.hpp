#ifndef VSRQ_INDICATORS_HPP
#define VSRQ_INDICATORS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace vsrq::indicators {

/// Symmetric, irreflexive call graph over the ECUs of one subsystem.
/// An empty graph (no ECUs) is valid and has no edges.
class CouplingGraph {
public:
    explicit CouplingGraph(std::size_t ecuCount);

    /// Records that ECUs i and j call each other. Symmetric; repeated adds
    /// are idempotent. Rejects i == j and out-of-range ids.
    void addCall(std::size_t i, std::size_t j);

    std::size_t ecuCount() const { return n_; }
    bool linked(std::size_t i, std::size_t j) const;
    std::size_t edgeCount() const;

private:
    std::size_t n_;
    std::vector<char> adj_;  // row-major n x n
};

/// ECU coupling degree: number of linked ECU pairs, i.e. half the sum of
/// the symmetric adjacency indicator.
double ecuCoupling(const CouplingGraph& graph);

/// Communication module counts across all four vehicle communication
/// domains, plus the severity weights applied to the weighted domains.
struct CommInventory {
    // in-vehicle buses
    double lin = 0.0;
    double canLow = 0.0;
    double canHigh = 0.0;
    double flexray = 0.0;
    double most = 0.0;
    // user-to-vehicle
    double dsrc = 0.0;
    // vehicle-to-vehicle
    double vanetsV2v = 0.0;
    // vehicle-to-infrastructure
    double vanetsInfra = 0.0;
    double wifi = 0.0;
    double cellular = 0.0;

    /// Severity of an attack on each in-vehicle bus type, in the order
    /// (LIN, low-speed CAN, high-speed CAN, FlexRay, MOST).
    std::array<double, 5> busSeverity = {1.0, 1.0, 2.0, 2.0, 1.0};
    /// Harm degree per infrastructure channel (VANET, WiFi, cellular).
    std::array<double, 3> infraSeverity = {1.0, 1.0, 1.0};
};

/// V1: severity-weighted count of in-vehicle bus modules.
double inVehicleCommRisk(const CommInventory& inv);
/// V2: count of DSRC modules.
double userToVehicleCommRisk(const CommInventory& inv);
/// V3: count of vehicle-to-vehicle VANET modules.
double vehicleToVehicleCommRisk(const CommInventory& inv);
/// V4: harm-weighted count of infrastructure channels.
double vehicleToInfraCommRisk(const CommInventory& inv);

/// Per-module code measurements feeding the complexity risks.
struct ModuleMetrics {
    std::string id;
    double loc = 0.0;                 // source lines of code
    double distinctOperators = 0.0;   // n1
    double distinctOperands = 0.0;    // n2
    double totalOperators = 0.0;      // N1
    double totalOperands = 0.0;       // N2
    double cfgEdges = 0.0;            // E
    double cfgNodes = 0.0;            // H, at least 1 (a module always has an entry node)
};

struct CodeComplexityRisks {
    double locRisk = 0.0;        // C1
    double halsteadRisk = 0.0;   // C2
    double cyclomaticRisk = 0.0; // C3
};

/// C1 = sum of loc. C2 = sum over modules of (N1+N2)*log2(n1+n2)/3000,
/// where a module with n1+n2 = 0 contributes 0. C3 = sum of (E - H + 2).
/// Rejects occurrence counts without vocabulary (N1+N2 > 0 with n1+n2 = 0)
/// and control-flow graphs without nodes.
CodeComplexityRisks codeComplexityRisks(const std::vector<ModuleMetrics>& modules);

/// One recall campaign: how many vehicles were recalled, how many repaired,
/// and how long ago the campaign happened.
struct RecallRecord {
    double recallCount = 0.0;
    double repairCount = 0.0;
    double ageYears = 0.0;
};

/// Security incident counts by attack surface.
struct AttackCounts {
    double vehicle = 0.0;
    double terminal = 0.0;
    double network = 0.0;
    double cloud = 0.0;
    std::array<double, 4> severity = {1.0, 1.0, 1.0, 1.0};
};

struct HistoryRecords {
    std::vector<RecallRecord> recalls;
    double halfLifeYears = 3.0;
    double performanceLimitationAccidents = 0.0;  // feeds H2 directly
    AttackCounts attacks;
};

struct HistoryRisks {
    double recallRisk = 0.0;       // H1
    double performanceRisk = 0.0;  // H2
    double attackRisk = 0.0;       // H3
};

/// Exponential forgetting factor 2^(-age/halfLife); rejects non-positive
/// half-life and negative age.
double forgettingFactor(double ageYears, double halfLifeYears);

/// H1 = sum over recalls of (recallCount + forgetting * repairCount);
/// H2 = performanceLimitationAccidents; H3 = severity-weighted attack sum.
HistoryRisks historyRisks(const HistoryRecords& records);

/// Severity scores for the four damage dimensions, each graded 0..9.
struct SeverityVector {
    double safety = 0.0;
    double privacy = 0.0;
    double financial = 0.0;
    double operational = 0.0;
};

/// Overall damage severity: the worst (maximum) dimension. Scores must be
/// whole numbers in [0,9].
double damageSeverity(const SeverityVector& severity);

}  // namespace vsrq::indicators

#endif
