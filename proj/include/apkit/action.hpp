#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apkit/fixture.hpp"
#include "apkit/gauge.hpp"
#include "apkit/group.hpp"
#include "apkit/point.hpp"

namespace apkit {

enum class PointKind { Function, Measure, Set, Table };

/// A gauge space with a translation action: the acting group, the kind of
/// points it acts on, the gauges generating the uniformity, and the declared
/// completeness attribute consumed by the Bochner verdict. Immutable after
/// construction.
struct Instance {
    Group group;
    PointKind kind = PointKind::Function;
    std::vector<GaugeSpec> gauges;
    bool declaredComplete = false;
    double defaultWindow = 0;
    std::shared_ptr<const FiniteFixture> fixture;

    const GaugeSpec& gaugeByName(const std::string& name) const;
    double gaugeWindow(const GaugeSpec& spec) const {
        return spec.window >= 0 ? spec.window : defaultWindow;
    }
};

/// Translation action. act(0,x) = x; composition exact on finite groups.
/// Throws WindowingError when a sampled function runs out of domain.
Point act(const Instance& inst, const GroupElement& t, const Point& x);

/// One (t, act(t,x)) entry per window element, in enumeration order.
std::vector<std::pair<GroupElement, Point>> orbit_samples(const Instance& inst, const Point& x,
                                                          double W);

/// gauge(x, y) for the given spec; dispatches on point kind.
double gauge_eval(const Instance& inst, const GaugeSpec& spec, const Point& x, const Point& y);

/// gauge(act(t,x), act(s,x)) without materializing translated copies where
/// the point kind allows. If the running value reaches cutoff the scan may
/// stop early and return any value >= cutoff.
double gauge_translate_pair(const Instance& inst, const GaugeSpec& spec, const Point& x,
                            const GroupElement& t, const GroupElement& s,
                            double cutoff = std::numeric_limits<double>::infinity());

/// gauge(act(t,x), x).
double gauge_translate(const Instance& inst, const GaugeSpec& spec, const Point& x,
                       const GroupElement& t);

struct ViolationTriple {
    std::size_t xIndex = 0, yIndex = 0;
    GroupElement t;
    double before = 0;  // gauge(x, y)
    double after = 0;   // gauge(act(t,x), act(t,y))
};

struct InvarianceLevel {
    double eps = 0;
    double delta = 0;       // largest delta found; meaningful when hasDelta
    bool hasDelta = false;  // false = no violation observed, delta unbounded
};

struct InvarianceCertificate {
    bool exactInvariant = false;  // all probes equal within 1e-12
    bool pseudoInvariant = true;
    double modulus = 0;  // max |gauge(act(t,x),act(t,y)) - gauge(x,y)| observed
    std::vector<InvarianceLevel> levels;
    std::optional<ViolationTriple> violation;
    std::size_t pairsProbed = 0;
    std::size_t translatesProbed = 0;
};

/// Probe Definition-style (pseudo) invariance of a single gauge over sampled
/// point pairs and window translations. Deterministic; the budget caps the
/// number of (pair, translate) evaluations by striding the translate list.
InvarianceCertificate check_invariance(const Instance& inst, const GaugeSpec& spec,
                                       std::span<const Point> points,
                                       std::span<const double> epsGrid,
                                       std::size_t budget = 200000);

enum class EquiFlag { Passed, Discrete, Fail, Inconclusive };

struct EquiLevel {
    double eps = 0;
    double radius = 0;  // largest neighborhood radius found
    EquiFlag flag = EquiFlag::Passed;
    std::optional<std::pair<std::size_t, GroupElement>> witness;  // point, translation
};

struct EquicontinuityCertificate {
    bool discreteGroup = false;
    std::vector<EquiLevel> levels;
};

/// For each eps, the largest r such that every sampled x and every s with
/// d_G(s,0) < r satisfy gauge(act(s,x), x) < eps. Degenerates to a flagged
/// trivial pass on discrete groups.
EquicontinuityCertificate equicontinuity_check(const Instance& inst, const GaugeSpec& spec,
                                               std::span<const Point> points,
                                               std::span<const double> epsGrid,
                                               double maxRadius);

}  // namespace apkit
