#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apkit/group.hpp"
#include "apkit/point.hpp"

namespace apkit {

enum class TestFnKind { Hat, Indicator };

/// Hat (tent) or indicator primitive with rational parameters, evaluated
/// exactly at lattice points. Hat: height*(1 - |x-center|/radius) on the open
/// interval of that radius. Indicator: height on the closed interval.
struct TestFn {
    TestFnKind kind = TestFnKind::Hat;
    Rational center = Rational(0);
    Rational radius = Rational(1);
    Rational height = Rational(1);

    Rational eval(const Rational& x) const;
    Rational supportRadius() const { return radius; }
};

enum class GaugeForm { Sup, Stepanov, Autocorrelation, MeasureNorm, Vague, Product, Table };
enum class GaugeKind { Metric, Pseudometric, Family };

/// Named gauge with its evaluation parameters. Entourages are represented
/// only through sublevel sets {(x,y) : gauge(x,y) < eps} of these specs.
struct GaugeSpec {
    std::string name;
    GaugeKind kind = GaugeKind::Pseudometric;
    GaugeForm form = GaugeForm::Sup;
    double window = -1;              // evaluation window, real units; <0 = instance default
    std::int64_t stepCells = 1;      // Stepanov averaging cells per axis
    double stepP = 1.0;              // Stepanov exponent p >= 1
    std::int64_t autocorrRadius = 0; // averaging box radius (0 = window)
    std::int64_t normCells = 1;      // measure-norm K cells
    std::vector<TestFn> testFns;     // vague/product parameter list
};

/// Basis entourage U = {(x,y) : gauge(x,y) < eps}.
struct Entourage {
    GaugeSpec gauge;
    double eps;
};

// The concrete gauges. All return nonnegative values, are symmetric, and
// vanish on identical arguments; measure-backed ones are exact rationals.

/// Max over the window of the pointwise codomain distance.
double sup_gauge(const Group& g, const SampledFunction& f, const SampledFunction& h, double W);

/// sup_y of the normalized p-mean of the pointwise distance over the cell
/// block y+K, K a box of kCells per axis.
double stepanov_gauge(const Group& g, const SampledFunction& f, const SampledFunction& h,
                      std::int64_t kCells, double p, double W);

/// card((A symdiff B) within the centered box of radius n) / card(box).
double autocorrelation_gauge(const Group& g, const PointSet& a, const PointSet& b, std::int64_t n);

/// sup_t |mu-nu|(t+K) over the window, K a block of kCells cells.
Rational measure_norm_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                            std::int64_t kCells, double W);

/// max_j |mu(phi_j) - nu(phi_j)|.
Rational vague_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                     std::span<const TestFn> testFns);

/// max_j sup_y |((mu-nu)*phi_j)(y)| over the window.
Rational product_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                       std::span<const TestFn> testFns, double W);

/// Signed difference measure mu - nu (weights subtracted, zeros dropped).
PointMeasure measure_difference(const PointMeasure& mu, const PointMeasure& nu);

/// mu(phi) = sum of weight * phi(support * h).
Rational measure_apply(const Group& g, const PointMeasure& mu, const TestFn& fn);

}  // namespace apkit
