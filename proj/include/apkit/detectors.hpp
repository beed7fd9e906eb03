#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apkit/action.hpp"

namespace apkit {

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

/// gauge(act(t,x), x) for every window element t, in enumeration order.
/// Everything downstream (periods, gaps, density) reads off this table.
struct TranslateProfile {
    std::vector<GroupElement> translates;
    std::vector<double> values;
    double windowRadius = 0;
};

TranslateProfile translate_profile(const Instance& inst, const GaugeSpec& spec, const Point& x,
                                   double W);

struct AlmostPeriodReport {
    double eps = 0;
    double windowRadius = 0;
    std::vector<GroupElement> periods;  // sorted; always contains 0
    double maxGap = 0;                  // sentinel 2W+1 when only the trivial period exists
    double coveringRadius = 0;          // minimal admissible R (sentinel 2W+1)
    Verdict relDense = Verdict::Fail;
    bool windowed = false;
};

AlmostPeriodReport almost_periods(const Instance& inst, const GaugeSpec& spec, const Point& x,
                                  double eps, double W);
AlmostPeriodReport almost_periods_from_profile(const Instance& inst, const TranslateProfile& prof,
                                               double eps);

/// Verdict of the report's trimmed covering condition at radius R
/// (every window point at distance <= W-R from 0 lies within R of a period).
Verdict relative_density(const Instance& inst, const AlmostPeriodReport& report, double R);

struct FiniteDensityResult {
    Verdict verdict = Verdict::Fail;
    std::vector<GroupElement> cover;  // F with periods + F covering the target
    bool windowed = false;
};

/// Exact mode (FiniteCyclic): exhaustive minimal F with P + F = G; the
/// verdict demands a proper witness (F != G) unless P is already the whole
/// group. Windowed mode: greedy F covering the edge-trimmed window.
FiniteDensityResult finite_relative_density(const Instance& inst, const AlmostPeriodReport& report);

struct EpsNet {
    double eps = 0;
    std::vector<GroupElement> centers;  // translate parameters, scan order
    std::vector<int> assignments;       // covering center per window element
    bool covered = true;
};

/// Greedy packing net over orbit translates: scan window elements in
/// enumeration order, adding a translate as a center iff it is >= eps away
/// from every existing center.
EpsNet greedy_eps_net(const Instance& inst, const GaugeSpec& spec, const Point& x, double eps,
                      double W);

/// Containment check behind total-boundedness: every window element t sits in
/// some center's almost-period translate, t in t_j + P_{2 eps + tol}(x).
bool net_period_cover_check(const Instance& inst, const GaugeSpec& spec, const Point& x,
                            const EpsNet& net, double eps, double tol, double W);

struct EpsVerdicts {
    double eps = 0;
    Verdict bohr = Verdict::Fail;
    double coveringRadius = 0;
    std::size_t periodCount = 0;
    Verdict pseudoBochner = Verdict::Fail;
    std::size_t netSize = 0;      // exact mode: |F|; windowed: net size at W
    std::size_t netSizeGrown = 0; // windowed: net size at 2W
    Verdict bochner = Verdict::Fail;
};

struct Classification {
    Verdict bohr = Verdict::Fail;
    Verdict pseudoBochner = Verdict::Fail;
    Verdict bochner = Verdict::Fail;
    bool exactMode = false;
    bool declaredComplete = false;
    std::vector<std::string> flags;  // WINDOWED, DISCRETE, EXACT
    std::vector<EpsVerdicts> perEps;
};

/// Bohr / pseudo-Bochner / Bochner verdicts over the eps grid. Exact on
/// FiniteCyclic; windowed elsewhere (net-size stabilization across W and 2W
/// for the pseudo-Bochner leg, covering radius <= W/2 for the Bohr leg).
/// The Bochner verdict is pseudo-Bochner gated by the declared completeness
/// attribute of the instance.
Classification classify(const Instance& inst, const GaugeSpec& spec, const Point& x,
                        const std::vector<double>& epsGrid, double W);

/// Geometric default grid {1, 1/2, 1/4, 1/8, 1/16} scaled by the orbit
/// diameter observed on the profile.
std::vector<double> default_eps_grid(const TranslateProfile& prof);

}  // namespace apkit
