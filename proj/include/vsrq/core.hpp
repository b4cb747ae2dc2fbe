#ifndef VSRQ_CORE_HPP
#define VSRQ_CORE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsrq::core {

// Thrown when user-supplied data (system descriptions, corpora, sample
// matrices, ...) fails validation. CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a configuration document fails validation. CLI maps it to
// exit code 2 as well; kept distinct so messages can say which side is wrong.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed interval [lo, hi]. Construction rejects lo > hi.
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double midpoint() const { return 0.5 * (lo_ + hi_); }
    double width() const { return hi_ - lo_; }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    bool overlaps(const Interval& other) const {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }

    bool operator==(const Interval& other) const {
        return lo_ == other.lo_ && hi_ == other.hi_;
    }

private:
    double lo_;
    double hi_;
};

/// [a.lo + b.lo, a.hi + b.hi]
Interval intervalAdd(const Interval& a, const Interval& b);

/// [s * a.lo, s * a.hi]; rejects negative s.
Interval intervalScale(const Interval& a, double s);

/// Endpoint product for non-negative intervals: [a.lo * b.lo, a.hi * b.hi].
/// Rejects intervals with a negative endpoint; sign-mixed interval
/// multiplication is out of scope.
Interval intervalMulNonNegative(const Interval& a, const Interval& b);

/// Clamp both endpoints into [bound.lo, bound.hi].
Interval intervalClamp(const Interval& a, const Interval& bound);

// First-order risk indices.
enum class Index { ECR = 0, VCR = 1, VCCR = 2, VHIR = 3 };
inline constexpr std::size_t kIndexCount = 4;

// Second-order (sub) indicators, grouped by index. Enumeration order is the
// canonical indicator order used for deterministic tie-breaking.
enum class Sub {
    // ECR: per-subsystem ECU coupling
    EMCR = 0,   // engine management
    TCCR,       // transmission control
    EPCR,       // electric power steering
    ESCR,       // body stability control
    MRCR,       // active (magnetorheological) suspension
    ACCR,       // adaptive cruise
    LKCR,       // lane keeping
    AECR,       // automatic emergency braking
    // VCR: communication risks
    IVCR,       // in-vehicle
    U2VCR,      // user-to-vehicle
    V2VCR,      // vehicle-to-vehicle
    V2ICR,      // vehicle-to-infrastructure
    // VCCR: code complexity
    LOCM,       // lines-of-code metric
    HCM,        // Halstead metric
    CCM,        // cyclomatic metric
    // VHIR: historical incidents
    HPSF,       // security-function failure / recall history
    HPESF,      // performance limitation accidents
    HPIS        // attack incidence statistics
};
inline constexpr std::size_t kSubCount = 18;

Index indexOf(Sub sub);
std::span<const Sub> subsOf(Index index);
std::span<const Sub> allSubs();
std::span<const Index> allIndices();

std::string_view name(Index index);
std::string_view name(Sub sub);
std::optional<Index> indexFromName(std::string_view s);
std::optional<Sub> subFromName(std::string_view s);

/// Identifies either a first-order index (sub empty) or one of its
/// sub-indicators. Construction rejects a sub that belongs to another index.
struct IndicatorId {
    Index index;
    std::optional<Sub> sub;

    IndicatorId(Index i) : index(i), sub() {}
    IndicatorId(Sub s) : index(indexOf(s)), sub(s) {}
    IndicatorId(Index i, std::optional<Sub> s);

    std::string toString() const;
    bool operator==(const IndicatorId& other) const {
        return index == other.index && sub == other.sub;
    }
};

enum class BandLabel {
    Normal = 0,
    Slight,
    SlightlySerious,
    Serious,
    ExtremelySerious
};
inline constexpr std::size_t kBandCount = 5;

std::string_view name(BandLabel label);
std::optional<BandLabel> bandLabelFromName(std::string_view s);

struct RiskBand {
    BandLabel label;
    double lo;
    double hi;
};

/// Five contiguous bands over [0,1], labels in ascending order. Bands are
/// half-open [lo, hi) except the top band, which is closed at 1.
class BandTable {
public:
    BandTable() = default;

    /// Validates strictly: 5 bands, labels ascending, first lo = 0,
    /// last hi = 1, every edge exactly shared, lo < hi.
    static BandTable fromBands(std::vector<RiskBand> bands);

    /// Like fromBands, but repairs small seam defects (gap or overlap
    /// between adjacent bands) by snapping the lower band's upper edge to
    /// the lower edge of the upper band. Each repair appends a warning.
    static BandTable fromBandsRepaired(std::vector<RiskBand> bands,
                                       std::vector<std::string>& warnings);

    const std::vector<RiskBand>& bands() const { return bands_; }
    const RiskBand& band(BandLabel label) const;
    /// Lower edge of the given band (the classification threshold for
    /// "this band or above").
    double lowerEdge(BandLabel label) const { return band(label).lo; }

private:
    std::vector<RiskBand> bands_;
};

/// Band containing `value`. Values must lie in [0,1]; anything else is a
/// domain error. Half-open convention: value == a shared edge belongs to
/// the upper band; value == 1 belongs to the top band.
const RiskBand& bandOf(double value, const BandTable& table);

enum class VehicleState { Steady = 0, Critical, Dangerous };
std::string_view name(VehicleState state);

enum class Orientation { Cost, Benefit };
std::string_view name(Orientation o);
std::optional<Orientation> orientationFromName(std::string_view s);

/// Static description of one indicator: display name, whether larger raw
/// values mean more risk (cost) or less (benefit), its banding, and its
/// crisp + interval weights within the parent group.
struct IndicatorSpec {
    std::string displayName;
    Orientation orientation = Orientation::Cost;
    BandTable bands;
    double crispWeight = 0.0;
    Interval intervalWeight;
};

/// The full two-layer indicator hierarchy: 4 indices, 18 sub-indicators.
class IndicatorTree {
public:
    IndicatorSpec& at(Index index) { return index_[static_cast<std::size_t>(index)]; }
    IndicatorSpec& at(Sub sub) { return sub_[static_cast<std::size_t>(sub)]; }
    const IndicatorSpec& at(Index index) const { return index_[static_cast<std::size_t>(index)]; }
    const IndicatorSpec& at(Sub sub) const { return sub_[static_cast<std::size_t>(sub)]; }

    /// Invariant check. Returns human-readable problems; empty means valid.
    /// Checked: index crisp weights sum to 1 (±1e-6), sub crisp weights sum
    /// to 1 within each index (±1e-6), every interval weight contains its
    /// crisp weight, every band table is present (5 bands).
    std::vector<std::string> validate() const;

private:
    std::array<IndicatorSpec, kIndexCount> index_;
    std::array<IndicatorSpec, kSubCount> sub_;
};

}  // namespace vsrq::core

#endif
