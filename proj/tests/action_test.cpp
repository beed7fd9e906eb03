#include <doctest.h>

#include <cmath>

#include "apkit/action.hpp"
#include "apkit/errors.hpp"
#include "apkit/generators.hpp"
#include "apkit/oracle.hpp"

using namespace apkit;

namespace {

Instance function_instance(Group g, double gaugeWindow) {
    Instance inst;
    inst.group = std::move(g);
    inst.kind = PointKind::Function;
    GaugeSpec sup;
    sup.name = "sup";
    sup.form = GaugeForm::Sup;
    sup.window = gaugeWindow;
    inst.gauges.push_back(sup);
    inst.defaultWindow = gaugeWindow;
    return inst;
}

SampledFunction alternating(std::int64_t R) {
    SampledFunction f;
    f.domainRadius = R;
    f.values.resize(static_cast<std::size_t>(2 * R + 1));
    for (std::int64_t c = -R; c <= R; ++c)
        f.values[static_cast<std::size_t>(c + R)] = (c % 2 == 0) ? 1.0 : -1.0;
    return f;
}

}  // namespace

TEST_CASE("action laws hold exactly on finite groups") {
    Instance inst = function_instance(Group::finiteCyclic(6), 6);
    SampledFunction f;
    f.domainRadius = 0;
    f.values = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    Point x = f;

    CHECK(act(inst, inst.group.zero(), x) == x);
    for (std::int64_t s = 0; s < 6; ++s)
        for (std::int64_t t = 0; t < 6; ++t) {
            Point lhs = act(inst, GroupElement(s), act(inst, GroupElement(t), x));
            Point rhs = act(inst, inst.group.add(GroupElement(s), GroupElement(t)), x);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("translation of measures and sets") {
    Instance inst = function_instance(Group::latticeWindow(1, 100), 50);
    PointMeasure d0 = normalize_measure({GroupElement(std::int64_t{0})}, {Rational(1)});
    Point moved = act(inst, GroupElement(std::int64_t{1}), Point(d0));
    const auto& d1 = std::get<PointMeasure>(moved);
    REQUIRE(d1.support.size() == 1);
    CHECK(d1.support[0].scalar() == 1);

    std::vector<GroupElement> evens;
    for (std::int64_t c = -20; c <= 20; c += 2) evens.emplace_back(c);
    PointSet lam = normalize_point_set(evens, 20);
    Point shifted = act(inst, GroupElement(std::int64_t{3}), Point(lam));
    const auto& lam3 = std::get<PointSet>(shifted);
    for (const auto& e : lam3.elements) CHECK(((e.scalar() - 3) % 2) == 0);
    CHECK(lam3.elements.front().scalar() == -17);
}

TEST_CASE("translation out of the sample domain raises a windowing error") {
    Instance inst = function_instance(Group::latticeWindow(1, 100), 10);
    SampledFunction f = alternating(15);
    CHECK_THROWS_AS(act(inst, GroupElement(std::int64_t{20}), Point(f)), WindowingError);
    try {
        act(inst, GroupElement(std::int64_t{20}), Point(f));
    } catch (const WindowingError& e) {
        CHECK(e.neededRadius == 20);
        CHECK(e.availableRadius == 15);
    }
}

TEST_CASE("orbit samples enumerate the window deterministically") {
    Instance inst = function_instance(Group::finiteCyclic(4), 4);
    SampledFunction f;
    f.domainRadius = 0;
    f.values = {1.0, 0.0, 0.0, 0.0};
    auto samples = orbit_samples(inst, Point(f), 99);
    REQUIRE(samples.size() == 4);
    CHECK(samples[0].first.scalar() == 0);
    CHECK(samples[3].first.scalar() == 3);

    // Fixed point: constant function.
    SampledFunction c;
    c.domainRadius = 0;
    c.values = {2.0, 2.0, 2.0, 2.0};
    for (const auto& [t, p] : orbit_samples(inst, Point(c), 99)) CHECK(p == Point(c));
}

TEST_CASE("alternating orbit has two distinct points up to gauge zero") {
    Instance inst = function_instance(Group::latticeWindow(1, 30), 10);
    SampledFunction f = alternating(30);
    auto samples = orbit_samples(inst, Point(f), 3);
    REQUIRE(samples.size() == 7);
    const auto& spec = inst.gauges.front();
    std::vector<Point> distinct;
    for (const auto& [t, p] : samples) {
        bool seen = false;
        for (const auto& q : distinct)
            if (gauge_eval(inst, spec, p, q) < 1e-12) seen = true;
        if (!seen) distinct.push_back(p);
    }
    CHECK(distinct.size() == 2);
}

TEST_CASE("sup gauge on a cyclic group is exactly invariant") {
    Instance inst = function_instance(Group::finiteCyclic(8), 8);
    SampledFunction f;
    f.domainRadius = 0;
    f.values = {0.0, 0.5, 1.0, 0.25, -0.5, 0.75, -1.0, 0.1};
    SampledFunction g = f;
    for (auto& v : g.values) v = -v;
    std::vector<Point> pts{Point(f), Point(g)};
    std::vector<double> grid{1.0, 0.5, 0.25};
    auto cert = check_invariance(inst, inst.gauges.front(), pts, grid, 10000);
    CHECK(cert.exactInvariant);
    CHECK(cert.pseudoInvariant);
    CHECK(cert.modulus <= 1e-12);
    CHECK(!cert.violation.has_value());
}

TEST_CASE("a non-invariant table gauge yields a violating triple") {
    auto fix = std::make_shared<FiniteFixture>(make_noninvariant_counterexample());
    Instance inst = make_table_instance(fix);
    std::vector<Point> pts{Point(TablePoint{0}), Point(TablePoint{1}), Point(TablePoint{2})};
    std::vector<double> grid{0.5};
    auto cert = check_invariance(inst, inst.gauges.front(), pts, grid, 10000);
    CHECK(!cert.exactInvariant);
    CHECK(cert.modulus > 0.5);
    REQUIRE(cert.violation.has_value());
    // The recorded triple reproduces the deviation.
    const auto& v = *cert.violation;
    double before = gauge_eval(inst, inst.gauges.front(), pts[v.xIndex], pts[v.yIndex]);
    double after = gauge_eval(inst, inst.gauges.front(), act(inst, v.t, pts[v.xIndex]),
                              act(inst, v.t, pts[v.yIndex]));
    CHECK(before == v.before);
    CHECK(after == v.after);
    CHECK(std::abs(after - before) == cert.modulus);
}

TEST_CASE("empty sample set is a usage error") {
    Instance inst = function_instance(Group::finiteCyclic(4), 4);
    std::vector<Point> none;
    std::vector<double> grid{1.0};
    CHECK_THROWS_AS(check_invariance(inst, inst.gauges.front(), none, grid), UsageError);
}

TEST_CASE("equicontinuity on a fine lattice with a uniformly continuous sample") {
    Group r = Group::fineLattice(Rational(1, 10), 40.0);
    Instance inst;
    inst.group = r;
    inst.kind = PointKind::Function;
    GaugeSpec sup;
    sup.name = "sup";
    sup.form = GaugeForm::Sup;
    sup.window = 10.0;
    inst.gauges.push_back(sup);
    inst.defaultWindow = 10.0;

    std::vector<double> freqs{0.25};
    std::vector<double> amps{1.0};
    SampledFunction f = make_trig_function(r, freqs, amps, r.stepsFor(40.0));
    std::vector<Point> pts{Point(f)};
    std::vector<double> grid{1.0, 0.5};
    auto cert = equicontinuity_check(inst, inst.gauges.front(), pts, grid, 2.0);
    CHECK(!cert.discreteGroup);
    for (const auto& lvl : cert.levels) {
        CHECK(lvl.flag == EquiFlag::Passed);
        CHECK(lvl.radius > 0.1);  // above the lattice resolution
    }
    // Tighter eps admits a smaller neighborhood.
    CHECK(cert.levels[1].radius <= cert.levels[0].radius + 1e-12);
}

TEST_CASE("norm gauge on a pure point comb fails equicontinuity at every step") {
    Group r = Group::fineLattice(Rational(1, 10), 40.0);
    Instance inst;
    inst.group = r;
    inst.kind = PointKind::Measure;
    GaugeSpec norm;
    norm.name = "norm";
    norm.form = GaugeForm::MeasureNorm;
    norm.normCells = 5;  // half a comb period, holds an original/shifted pair
    norm.window = 10.0;
    inst.gauges.push_back(norm);
    inst.defaultWindow = 10.0;

    // Comb at the integers (multiples of ten steps), weight 1.
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (std::int64_t k = -30; k <= 30; ++k) {
        support.emplace_back(k * 10);
        weights.emplace_back(1);
    }
    PointMeasure comb = normalize_measure(std::move(support), std::move(weights));
    std::vector<Point> pts{Point(comb)};
    std::vector<double> grid{1.0};
    auto cert = equicontinuity_check(inst, inst.gauges.front(), pts, grid, 0.55);
    REQUIRE(cert.levels.size() == 1);
    CHECK(cert.levels[0].flag == EquiFlag::Fail);
    REQUIRE(cert.levels[0].witness.has_value());
    const auto& [pi, s] = *cert.levels[0].witness;
    CHECK(pi == 0);
    CHECK(inst.group.norm(s) == doctest::Approx(0.1));
    // The gap is twice the minimal weight.
    CHECK(gauge_translate(inst, inst.gauges.front(), pts[0], s) == 2.0);
}

TEST_CASE("discrete groups pass equicontinuity trivially with a flag") {
    Instance inst = function_instance(Group::finiteCyclic(5), 5);
    SampledFunction f;
    f.domainRadius = 0;
    f.values = {0, 1, 2, 3, 4};
    std::vector<Point> pts{Point(f)};
    std::vector<double> grid{0.1};
    auto cert = equicontinuity_check(inst, inst.gauges.front(), pts, grid, 1.0);
    CHECK(cert.discreteGroup);
    CHECK(cert.levels[0].flag == EquiFlag::Discrete);
}

TEST_CASE("equicontinuity moduli transfer to orbit samples under an invariant gauge") {
    // Periodic sample on a fine lattice: the windowed sup gauge is exactly
    // translation invariant once the window holds a full period, so the
    // moduli measured at x transfer verbatim to every orbit point.
    Group r = Group::fineLattice(Rational(1, 10), 40.0);
    Instance inst;
    inst.group = r;
    inst.kind = PointKind::Function;
    GaugeSpec sup;
    sup.name = "sup";
    sup.form = GaugeForm::Sup;
    sup.window = 10.0;
    inst.gauges.push_back(sup);
    inst.defaultWindow = 10.0;

    std::vector<double> freqs{0.25};
    std::vector<double> amps{1.0};
    SampledFunction f = make_trig_function(r, freqs, amps, r.stepsFor(40.0));

    std::vector<Point> base{Point(f)};
    std::vector<Point> orbitPts;
    for (std::int64_t k = -5; k <= 5; ++k)
        orbitPts.push_back(act(inst, GroupElement(k), Point(f)));

    std::vector<double> grid{1.0, 0.5, 0.25};
    auto certBase = equicontinuity_check(inst, inst.gauges.front(), base, grid, 2.0);
    auto certOrbit = equicontinuity_check(inst, inst.gauges.front(), orbitPts, grid, 2.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(certOrbit.levels[i].flag == EquiFlag::Passed);
        CHECK(certOrbit.levels[i].radius == doctest::Approx(certBase.levels[i].radius).epsilon(1e-12));
    }
}
