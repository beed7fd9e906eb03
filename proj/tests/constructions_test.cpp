#include <doctest.h>

#include <cmath>
#include <memory>

#include "apkit/constructions.hpp"
#include "apkit/errors.hpp"
#include "apkit/generators.hpp"
#include "apkit/oracle.hpp"

using namespace apkit;

namespace {

std::shared_ptr<FiniteFixture> pair_fixture(const Rational& dist) {
    auto fix = std::make_shared<FiniteFixture>();
    fix->n = 2;
    fix->numPoints = 2;
    fix->actionTable = {0, 1, 1, 0};
    fix->gaugeTable.assign(4, Rational(0));
    fix->gauge(0, 1) = fix->gauge(1, 0) = dist;
    fix->validate();
    return fix;
}

Instance measure_instance(Group g, std::int64_t cells, double W) {
    Instance inst;
    inst.group = std::move(g);
    inst.kind = PointKind::Measure;
    GaugeSpec norm;
    norm.name = "norm";
    norm.form = GaugeForm::MeasureNorm;
    norm.normCells = cells;
    norm.window = W;
    inst.gauges.push_back(norm);
    inst.defaultWindow = W;
    return inst;
}

}  // namespace

TEST_CASE("invariant metric reduces to the gauge under exact invariance") {
    auto fix = pair_fixture(Rational(3, 10));
    Instance inst = make_table_instance(fix);
    const auto& spec = inst.gauges.front();
    std::vector<Point> pts{Point(TablePoint{0}), Point(TablePoint{1})};
    std::vector<double> grid{1.0};
    auto cert = check_invariance(inst, spec, pts, grid);
    REQUIRE(cert.exactInvariant);

    auto res = invariant_metric_eval(inst, spec, pts[0], pts[1], 2, &cert);
    CHECK(res.dbar == doctest::Approx(0.3));
    CHECK(res.dprime == doctest::Approx(0.3));
    CHECK(res.converged);
    CHECK(!res.invarianceWarning);
}

TEST_CASE("invariant metric caps at one") {
    auto fix = pair_fixture(Rational(2));
    Instance inst = make_table_instance(fix);
    auto res = invariant_metric_eval(inst, inst.gauges.front(), Point(TablePoint{0}),
                                     Point(TablePoint{1}), 2);
    CHECK(res.dbar == doctest::Approx(2.0));
    CHECK(res.dprime == 1.0);
    CHECK(res.invarianceWarning);  // no certificate supplied
}

TEST_CASE("windowed sup matches the exhaustive translate maximum on Z6") {
    // Non-invariant table: dbar must equal a brute-force scan over all six
    // translates.
    auto fix = std::make_shared<FiniteFixture>(make_random_fixture(42, 6, false));
    Instance inst = make_table_instance(fix);
    const auto& spec = inst.gauges.front();
    for (int i = 0; i < fix->numPoints; ++i)
        for (int j = 0; j < fix->numPoints; ++j) {
            double expect = 0;
            for (std::int64_t t = 0; t < 6; ++t)
                expect = std::max(expect, fix->gauge(fix->act(t, i), fix->act(t, j)).toDouble());
            auto res = invariant_metric_eval(inst, spec, Point(TablePoint{i}), Point(TablePoint{j}), 6);
            CHECK(res.dbar == doctest::Approx(expect));
        }
}

TEST_CASE("capped metric satisfies the metric axioms and exact invariance") {
    auto fix = std::make_shared<FiniteFixture>(make_random_fixture(7, 12, true));
    Instance inst = make_table_instance(fix);
    const auto& spec = inst.gauges.front();
    const int m = fix->numPoints;
    auto dprime = [&](int i, int j) {
        return invariant_metric_eval(inst, spec, Point(TablePoint{i}), Point(TablePoint{j}), 12)
            .dprime;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            CHECK(dprime(i, j) == dprime(j, i));
            if (i != j) CHECK(dprime(i, j) > 0);  // Hausdorff on a metric table
            for (int k = 0; k < m; ++k)
                CHECK(dprime(i, j) <= dprime(i, k) + dprime(k, j) + 1e-9);
            for (std::int64_t t = 0; t < fix->n; ++t)
                CHECK(dprime(fix->act(t, i), fix->act(t, j)) == doctest::Approx(dprime(i, j)));
        }
}

TEST_CASE("uniform equivalence between the gauge and the capped metric") {
    auto fix = std::make_shared<FiniteFixture>(make_random_fixture(19, 24, true));
    Instance inst = make_table_instance(fix);
    const auto& spec = inst.gauges.front();
    const int m = fix->numPoints;

    std::vector<std::pair<double, double>> pairs;  // (gauge, dprime)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double raw = fix->gauge(i, j).toDouble();
            double dp = invariant_metric_eval(inst, spec, Point(TablePoint{i}),
                                              Point(TablePoint{j}), fix->n)
                            .dprime;
            pairs.emplace_back(raw, dp);
        }
    // d'(x,y) < r implies gauge(x,y) < r for r < 1.
    for (double r : {0.25, 0.5, 0.75, 0.99})
        for (const auto& [raw, dp] : pairs)
            if (dp < r) CHECK(raw < r);
    // For each eps there is a sampled delta with gauge < delta -> dprime <= eps.
    for (double eps : {0.25, 0.5, 0.75}) {
        double delta = std::numeric_limits<double>::infinity();
        for (const auto& [raw, dp] : pairs)
            if (dp > eps) delta = std::min(delta, raw);
        CHECK(delta > 0);
        for (const auto& [raw, dp] : pairs)
            if (raw < delta) CHECK(dp <= eps + 1e-9);
    }
}

TEST_CASE("mixed gauge vanishes on the diagonal and respects small shifts") {
    Group r = Group::fineLattice(Rational(1, 10), 30.0);
    Instance inst = measure_instance(r, 5, 8.0);
    const auto& spec = inst.gauges.front();

    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (std::int64_t k = -25; k <= 25; ++k) {
        support.emplace_back(k * 10);
        weights.emplace_back(1);
    }
    Point comb{normalize_measure(std::move(support), std::move(weights))};
    Point shifted = act(inst, GroupElement(std::int64_t{1}), comb);  // one lattice step

    CHECK(mixed_gauge_eval(inst, spec, comb, comb, 1.0) == 0.0);

    double plain = gauge_eval(inst, spec, comb, shifted);
    CHECK(plain >= 2.0);
    double mixed = mixed_gauge_eval(inst, spec, comb, shifted, 1.0);
    CHECK(mixed <= 0.1 + 1e-12);

    // Mixed never exceeds plain, and shrinks as the shift budget grows.
    CHECK(mixed <= plain);
    double wide = mixed_gauge_eval(inst, spec, comb, shifted, 2.0);
    CHECK(wide <= mixed + 1e-12);
}

TEST_CASE("mixed gauge on a discrete group with a sub-unit budget is the plain gauge") {
    Group z = Group::latticeWindow(1, 50);
    Instance inst = measure_instance(z, 1, 20.0);
    const auto& spec = inst.gauges.front();
    PointMeasure a = make_comb(2, Rational(1), 40);
    PointMeasure b = make_comb(3, Rational(1), 40);
    double plain = gauge_eval(inst, spec, Point(a), Point(b));
    CHECK(mixed_gauge_eval(inst, spec, Point(a), Point(b), 0.5) == doctest::Approx(plain));
    CHECK_THROWS_AS(mixed_gauge_eval(inst, spec, Point(a), Point(b), 0.0), UsageError);
}

TEST_CASE("mixed gauge triangle inequality up to one lattice step") {
    Group r = Group::fineLattice(Rational(1, 10), 30.0);
    Instance inst = measure_instance(r, 5, 8.0);
    const auto& spec = inst.gauges.front();
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (std::int64_t k = -25; k <= 25; ++k) {
        support.emplace_back(k * 10);
        weights.emplace_back(1);
    }
    Point comb{normalize_measure(std::move(support), std::move(weights))};
    std::vector<Point> pts;
    for (std::int64_t s : {0, 1, 2, 3, 7}) pts.push_back(act(inst, GroupElement(s), comb));
    auto rho = [&](const Point& a, const Point& b) {
        return mixed_gauge_eval(inst, spec, a, b, 1.5);
    };
    for (const auto& a : pts)
        for (const auto& b : pts) {
            CHECK(rho(a, b) == doctest::Approx(rho(b, a)));
            for (const auto& c : pts) CHECK(rho(a, c) <= rho(a, b) + rho(b, c) + 0.1 + 1e-12);
        }
}

TEST_CASE("mixed relation sets satisfy the uniformity axioms on a finite fixture") {
    // V[O,U] built explicitly as a pair set over fixture points; the five
    // uniformity axioms checked by enumeration, composition/inverse via the
    // constructions the proofs use.
    auto fix = std::make_shared<FiniteFixture>(make_random_fixture(5, 8, true));
    Instance inst = make_table_instance(fix);
    const int m = fix->numPoints;
    const std::int64_t n = fix->n;

    auto sublevel = [&](const Rational& eps) {
        std::vector<std::pair<int, int>> u;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (fix->gauge(i, j) < eps) u.emplace_back(i, j);
        return u;
    };
    auto mixedSet = [&](std::int64_t radius, const std::vector<std::pair<int, int>>& u) {
        // V[O,U] = {(act(t,i), j) : d_G(t,0) <= radius, (i,j) in U}
        std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
        for (std::int64_t t = 0; t < n; ++t) {
            if (std::min(t, n - t) > radius) continue;
            for (const auto& [i, j] : u) rel[fix->act(t, i)][j] = true;
        }
        return rel;
    };

    Rational eps(3, 2);
    auto U = sublevel(eps);
    auto V = mixedSet(2, U);

    // Diagonal.
    for (int i = 0; i < m; ++i) CHECK(V[i][i]);

    // Composition: V[O', U'] with O'+O' <= O and U' at half level composes in.
    auto Vhalf = mixedSet(1, sublevel(eps / Rational(2)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool composed = false;
            for (int k = 0; k < m; ++k)
                if (Vhalf[i][k] && Vhalf[k][j]) composed = true;
            if (composed) CHECK(V[i][j]);
        }

    // Symmetry: with a symmetric ball and an invariant symmetric gauge the
    // relation itself is symmetric (the inverse-axiom construction).
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) CHECK(V[i][j] == V[j][i]);

    // Upward closure and intersection come from the sublevel structure:
    // smaller eps and radius give a smaller relation.
    auto Vsmall = mixedSet(1, sublevel(eps / Rational(2)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (Vsmall[i][j]) CHECK(V[i][j]);
}

TEST_CASE("hull of a two-class orbit in Z6") {
    // Z6 acting on two points: period subgroup {0,2,4}, hull iso Z2.
    auto fix = std::make_shared<FiniteFixture>();
    fix->n = 6;
    fix->numPoints = 2;
    fix->actionTable = {0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0};
    fix->gaugeTable.assign(4, Rational(0));
    fix->gauge(0, 1) = fix->gauge(1, 0) = Rational(1);
    fix->validate();
    Instance inst = make_table_instance(fix);

    HullGroup hull = build_hull_group(inst, inst.gauges.front(), Point(TablePoint{0}));
    CHECK(hull.axiomsVerified);
    REQUIRE(hull.elements.size() == 2);
    CHECK(hull.elements[0] == 0);
    CHECK(hull.elements[1] == 1);
    CHECK(hull.periodSubgroup == std::vector<std::int64_t>{0, 2, 4});
    CHECK(hull.addTable[0][0] == 0);
    CHECK(hull.addTable[0][1] == 1);
    CHECK(hull.addTable[1][1] == 0);
}

TEST_CASE("hull of a fixed point is trivial") {
    auto fix = std::make_shared<FiniteFixture>();
    fix->n = 4;
    fix->numPoints = 1;
    fix->actionTable = {0, 0, 0, 0};
    fix->gaugeTable = {Rational(0)};
    fix->validate();
    Instance inst = make_table_instance(fix);
    HullGroup hull = build_hull_group(inst, inst.gauges.front(), Point(TablePoint{0}));
    CHECK(hull.elements.size() == 1);
    CHECK(hull.periodSubgroup.size() == 4);
}

TEST_CASE("hull of a free orbit on Z5 is the full cycle") {
    auto fix = std::make_shared<FiniteFixture>(make_random_fixture(101, 5, true));
    // Force the free case: regenerate until the orbit is full.
    std::uint64_t seed = 101;
    while (fix->numPoints != 5)
        fix = std::make_shared<FiniteFixture>(make_random_fixture(++seed, 5, true));
    Instance inst = make_table_instance(fix);
    HullGroup hull = build_hull_group(inst, inst.gauges.front(), Point(TablePoint{0}));
    REQUIRE(hull.elements.size() == 5);
    CHECK(hull.periodSubgroup == std::vector<std::int64_t>{0});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(hull.addTable[i][j] == (i + j) % 5);
}

TEST_CASE("hull rejects non-cyclic groups") {
    Group z = Group::latticeWindow(1, 10);
    Instance inst = measure_instance(z, 1, 5.0);
    PointMeasure m = make_comb(2, Rational(1), 8);
    CHECK_THROWS_AS(build_hull_group(inst, inst.gauges.front(), Point(m)), UsageError);
}

TEST_CASE("period subgroup of the alternating function is the even lattice") {
    Group z = Group::latticeWindow(1, 40);
    Instance inst;
    inst.group = z;
    inst.kind = PointKind::Function;
    GaugeSpec sup;
    sup.name = "sup";
    sup.form = GaugeForm::Sup;
    sup.window = 10.0;
    inst.gauges.push_back(sup);
    inst.defaultWindow = 10.0;

    SampledFunction f;
    f.domainRadius = 40;
    for (std::int64_t c = -40; c <= 40; ++c) f.values.push_back((c % 2 == 0) ? 1.0 : -1.0);

    auto per = period_subgroup(inst, inst.gauges.front(), Point(f), 20.0);
    CHECK(per.windowed);
    REQUIRE(per.periods.size() == 21);
    for (const auto& p : per.periods) CHECK(p.scalar() % 2 == 0);
}

TEST_CASE("period subgroup of a Sturmian sample is trivial") {
    Group z = Group::latticeWindow(1, 200);
    Instance inst;
    inst.group = z;
    inst.kind = PointKind::Set;
    GaugeSpec ac;
    ac.name = "autocorr";
    ac.form = GaugeForm::Autocorrelation;
    ac.autocorrRadius = 60;
    inst.gauges.push_back(ac);
    inst.defaultWindow = 60.0;

    const double golden = 0.6180339887498949;
    PointSet s = make_sturmian_set(golden, 0.0, 200);
    auto per = period_subgroup(inst, inst.gauges.front(), Point(s), 40.0);
    CHECK(per.windowed);
    REQUIRE(per.periods.size() == 1);
    CHECK(per.periods[0].isZero());
}

TEST_CASE("period subgroup of a fixed point is the whole group") {
    auto fix = std::make_shared<FiniteFixture>();
    fix->n = 5;
    fix->numPoints = 1;
    fix->actionTable = {0, 0, 0, 0, 0};
    fix->gaugeTable = {Rational(0)};
    fix->validate();
    Instance inst = make_table_instance(fix);
    auto per = period_subgroup(inst, inst.gauges.front(), Point(TablePoint{0}));
    CHECK(!per.windowed);
    CHECK(per.periods.size() == 5);
}
