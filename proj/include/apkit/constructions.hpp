#pragma once

#include <cstdint>
#include <vector>

#include "apkit/action.hpp"

namespace apkit {

struct InvariantMetricResult {
    double dbar = 0;         // windowed sup of gauge over translates
    double dprime = 0;       // dbar capped at 1
    bool converged = false;  // sup stopped growing over the window tail
    bool invarianceWarning = false;
};

/// Windowed evaluation of the invariant metric built from a pseudo-invariant
/// gauge: dbar = sup over |t| <= W of gauge(act(t,x), act(t,y)), dprime the
/// 1-capped value. Exact (and always converged) on FiniteCyclic. Pass the
/// invariance certificate when available; without one, or with a
/// non-pseudo-invariant one, the result carries a warning flag.
InvariantMetricResult invariant_metric_eval(const Instance& inst, const GaugeSpec& spec,
                                            const Point& x, const Point& y, double W,
                                            const InvarianceCertificate* cert = nullptr,
                                            double tailFraction = 0.25);

/// Symmetrized mixed gauge
///   rho(x,y)  = inf over d_G(t,0) <= rMax of max(d_G(t,0), gauge(act(-t,x), y)),
///   result    = max(rho(x,y), rho(y,x)).
/// (x,y) lies in the neighborhood generated by V[ball(r), U_eps] whenever the
/// result is < min(r, eps).
double mixed_gauge_eval(const Instance& inst, const GaugeSpec& spec, const Point& x,
                        const Point& y, double rMax);

/// Finite hull: orbit representatives distinct up to gauge 0, the induced
/// addition table, and the period subgroup. All abelian group axioms are
/// verified exhaustively during construction.
struct HullGroup {
    std::vector<std::int64_t> elements;  // representative translate per class; x itself first
    int identityIndex = 0;
    std::vector<std::vector<int>> addTable;
    std::vector<std::int64_t> periodSubgroup;
    bool axiomsVerified = false;
};

/// Exact finite mode only (FiniteCyclic group). Verifies the gauge is a
/// pseudometric on the orbit, that the induced addition is well defined, all
/// abelian group axioms, and that t -> act(t,x) is a surjective homomorphism
/// with kernel the period subgroup.
HullGroup build_hull_group(const Instance& inst, const GaugeSpec& spec, const Point& x);

struct PeriodSubgroup {
    std::vector<GroupElement> periods;
    bool windowed = false;
};

/// {t : gauge(act(t,x), x) = 0}, exact on FiniteCyclic (verified closed under
/// the group operations), otherwise the periods found in the window |t| <= W,
/// flagged windowed.
PeriodSubgroup period_subgroup(const Instance& inst, const GaugeSpec& spec, const Point& x,
                               double W = -1);

}  // namespace apkit
