#include <doctest.h>

#include <random>

#include "apkit/errors.hpp"
#include "apkit/gauge.hpp"
#include "apkit/generators.hpp"

using namespace apkit;

namespace {

SampledFunction alternating(std::int64_t R) {
    SampledFunction f;
    f.domainRadius = R;
    f.values.resize(static_cast<std::size_t>(2 * R + 1));
    for (std::int64_t c = -R; c <= R; ++c)
        f.values[static_cast<std::size_t>(c + R)] = (c % 2 == 0) ? 1.0 : -1.0;
    return f;
}

SampledFunction random_function(std::mt19937_64& rng, std::int64_t R) {
    SampledFunction f;
    f.domainRadius = R;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    f.values.resize(static_cast<std::size_t>(2 * R + 1));
    for (auto& v : f.values) v = dist(rng);
    return f;
}

PointMeasure random_measure(std::mt19937_64& rng, std::int64_t R, int count) {
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (int i = 0; i < count; ++i) {
        support.emplace_back(static_cast<std::int64_t>(rng() % (2 * R + 1)) - R);
        weights.emplace_back(static_cast<std::int64_t>(rng() % 9) - 4);
    }
    return normalize_measure(std::move(support), std::move(weights));
}

}  // namespace

TEST_CASE("sup gauge basics") {
    Group z = Group::latticeWindow(1, 21);
    SampledFunction f = alternating(21);
    CHECK(sup_gauge(z, f, f, 20) == 0.0);

    // (-1)^n against its 1-shift differs by 2 everywhere.
    SampledFunction shifted = alternating(21);
    for (std::int64_t c = -21; c <= 21; ++c)
        shifted.values[static_cast<std::size_t>(c + 21)] = (c % 2 == 0) ? -1.0 : 1.0;
    CHECK(sup_gauge(z, f, shifted, 20) == 2.0);
}

TEST_CASE("sup gauge with torus codomain sees the angle difference") {
    Group z = Group::latticeWindow(1, 10);
    SampledFunction f, g;
    f.domainRadius = g.domainRadius = 10;
    f.codomain = g.codomain = CodomainMetric::Torus;
    const double theta = 0.7;
    for (std::int64_t c = -10; c <= 10; ++c) {
        double base = 0.3 * static_cast<double>(c);
        f.values.push_back(base);
        g.values.push_back(base + theta);
    }
    CHECK(sup_gauge(z, f, g, 10) == doctest::Approx(theta).epsilon(1e-12));
}

TEST_CASE("stepanov gauge averages over the cell block") {
    Group z = Group::latticeWindow(1, 20);
    SampledFunction f = alternating(20);
    SampledFunction g = f;
    for (auto& v : g.values) v += 0.25;  // constant difference
    CHECK(stepanov_gauge(z, f, g, 2, 1.0, 18) == doctest::Approx(0.25).epsilon(1e-12));

    // Single spike of height 1 averaged over two cells.
    SampledFunction h = f;
    h.values[static_cast<std::size_t>(0 + 20)] += 1.0;
    CHECK(stepanov_gauge(z, f, h, 2, 1.0, 18) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(stepanov_gauge(z, f, g, 100, 1.0, 18), ResourceError);
}

TEST_CASE("stepanov never exceeds sup") {
    Group z = Group::latticeWindow(1, 30);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        SampledFunction f = random_function(rng, 30);
        SampledFunction g = random_function(rng, 30);
        double st = stepanov_gauge(z, f, g, 3, 2.0, 25);
        double su = sup_gauge(z, f, g, 25);
        CHECK(st <= su + 1e-12);
    }
}

TEST_CASE("autocorrelation gauge counts the symmetric difference") {
    Group z = Group::latticeWindow(1, 60);
    std::vector<GroupElement> evens, odds, evensPlus;
    for (std::int64_t c = -60; c <= 60; ++c) {
        if (c % 2 == 0) evens.emplace_back(c);
        else odds.emplace_back(c);
    }
    PointSet lam = normalize_point_set(evens, 60);
    PointSet gam = normalize_point_set(odds, 60);
    CHECK(autocorrelation_gauge(z, lam, lam, 10) == 0.0);
    CHECK(autocorrelation_gauge(z, lam, gam, 10) == 1.0);

    evensPlus = lam.elements;
    evensPlus.emplace_back(1);
    PointSet lamPlus = normalize_point_set(evensPlus, 60);
    double d = autocorrelation_gauge(z, lam, lamPlus, 50);
    CHECK(d == doctest::Approx(1.0 / 101.0));
    CHECK(d <= 0.01);

    CHECK_THROWS_AS(autocorrelation_gauge(z, lam, gam, 100), WindowingError);
}

TEST_CASE("autocorrelation triangle inequality is exact at fixed n") {
    Group z = Group::latticeWindow(1, 40);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto randomSet = [&]() {
            std::vector<GroupElement> e;
            for (std::int64_t c = -40; c <= 40; ++c)
                if (rng() % 2) e.emplace_back(c);
            return normalize_point_set(e, 40);
        };
        PointSet a = randomSet(), b = randomSet(), c = randomSet();
        double ab = autocorrelation_gauge(z, a, b, 40);
        double bc = autocorrelation_gauge(z, b, c, 40);
        double ac = autocorrelation_gauge(z, a, c, 40);
        // Counts are exact small integers over a common denominator.
        CHECK(ac <= ab + bc + 1e-15);
    }
}

TEST_CASE("measure norm gauge slides the cell block") {
    Group z = Group::latticeWindow(1, 100);
    PointMeasure delta0 = normalize_measure({GroupElement(std::int64_t{0})}, {Rational(1)});
    PointMeasure zero;
    CHECK(measure_norm_gauge(z, delta0, zero, 1, 50) == Rational(1));

    PointMeasure comb = make_comb(1, Rational(3), 100);
    CHECK(measure_norm_gauge(z, comb, zero, 4, 50) == Rational(12));

    // Cyclic wrap: total mass bound for blocks covering the whole group.
    Group z6 = Group::finiteCyclic(6);
    PointMeasure m = normalize_measure({GroupElement(std::int64_t{0}), GroupElement(std::int64_t{5})},
                                       {Rational(2), Rational(3)});
    CHECK(measure_norm_gauge(z6, m, zero, 6, 0) == Rational(5));
    CHECK(measure_norm_gauge(z6, m, zero, 2, 0) == Rational(5));  // window {5,0} wraps
    CHECK(measure_norm_gauge(z6, m, zero, 1, 0) == Rational(3));
}

TEST_CASE("vague gauge evaluates test functions exactly") {
    Group z = Group::latticeWindow(1, 100);
    PointMeasure d0 = normalize_measure({GroupElement(std::int64_t{0})}, {Rational(1)});
    PointMeasure d1 = normalize_measure({GroupElement(std::int64_t{1})}, {Rational(1)});
    TestFn hat;
    hat.radius = Rational(2);
    CHECK(vague_gauge(z, d0, d0, std::span(&hat, 1)).isZero());
    CHECK(vague_gauge(z, d0, d1, std::span(&hat, 1)) == Rational(1, 2));

    TestFn escape;
    escape.radius = Rational(1000);
    CHECK_THROWS_AS(vague_gauge(z, d0, d1, std::span(&escape, 1)), WindowingError);
}

TEST_CASE("layered measure is vague-invisible to shifts by 5 under narrow hats") {
    Group z = Group::latticeWindow(1, 200);
    PointMeasure mu = counterexample_measure(3, 150);
    PointMeasure shifted = mu;
    for (auto& e : shifted.support) e = GroupElement(e.scalar() + 5);
    TestFn hat;
    hat.radius = Rational(5);  // support (-5, 5)
    CHECK(vague_gauge(z, mu, shifted, std::span(&hat, 1)).isZero());
}

TEST_CASE("product gauge is Lipschitz in the shift on the fine lattice") {
    Group r = Group::fineLattice(Rational(1, 10), 10.0);
    PointMeasure d0 = normalize_measure({GroupElement(std::int64_t{0})}, {Rational(1)});
    PointMeasure dt = normalize_measure({GroupElement(std::int64_t{3})}, {Rational(1)});  // 0.3
    TestFn hat;
    hat.radius = Rational(2);  // slope 1/2
    Rational v = product_gauge(r, d0, dt, std::span(&hat, 1), 8.0);
    CHECK(v == Rational(3, 20));
    CHECK(v.toDouble() <= 0.5 * 0.3 + 1e-12);

    CHECK(product_gauge(r, d0, d0, std::span(&hat, 1), 8.0).isZero());
}

TEST_CASE("product gauge vanishes on an exact period") {
    Group z = Group::latticeWindow(1, 60);
    PointMeasure comb = make_comb(2, Rational(1), 50);
    PointMeasure shifted;
    for (const auto& e : comb.support) shifted.support.emplace_back(e.scalar() + 2);
    shifted.weights = comb.weights;
    TestFn hat;
    hat.radius = Rational(2);
    // Evaluation window stays clear of the comb edges.
    CHECK(product_gauge(z, comb, shifted, std::span(&hat, 1), 40.0).isZero());
}

TEST_CASE("gauge axioms on random triples") {
    Group z = Group::latticeWindow(1, 30);
    std::mt19937_64 rng(23);
    TestFn hat;
    hat.radius = Rational(3);
    for (int trial = 0; trial < 200; ++trial) {
        SampledFunction fa = random_function(rng, 30);
        SampledFunction fb = random_function(rng, 30);
        SampledFunction fc = random_function(rng, 30);
        double ab = sup_gauge(z, fa, fb, 25), bc = sup_gauge(z, fb, fc, 25),
               ac = sup_gauge(z, fa, fc, 25);
        CHECK(sup_gauge(z, fa, fa, 25) == 0.0);
        CHECK(ab == sup_gauge(z, fb, fa, 25));
        CHECK(ac <= ab + bc + 1e-9);

        PointMeasure ma = random_measure(rng, 25, 8);
        PointMeasure mb = random_measure(rng, 25, 8);
        PointMeasure mc = random_measure(rng, 25, 8);
        Rational vab = vague_gauge(z, ma, mb, std::span(&hat, 1));
        Rational vbc = vague_gauge(z, mb, mc, std::span(&hat, 1));
        Rational vac = vague_gauge(z, ma, mc, std::span(&hat, 1));
        CHECK(vague_gauge(z, ma, ma, std::span(&hat, 1)).isZero());
        CHECK(vab == vague_gauge(z, mb, ma, std::span(&hat, 1)));
        CHECK(vac <= vab + vbc);  // exact rationals

        Rational nab = measure_norm_gauge(z, ma, mb, 2, 25);
        Rational nbc = measure_norm_gauge(z, mb, mc, 2, 25);
        Rational nac = measure_norm_gauge(z, ma, mc, 2, 25);
        CHECK(nab == measure_norm_gauge(z, mb, ma, 2, 25));
        CHECK(nac <= nab + nbc);
    }
}

TEST_CASE("incompatible windows and codomains raise usage errors") {
    Group z = Group::latticeWindow(1, 10);
    SampledFunction small = alternating(5);
    SampledFunction big = alternating(10);
    CHECK_THROWS_AS(sup_gauge(z, small, big, 10), ResourceError);

    SampledFunction torus = big;
    torus.codomain = CodomainMetric::Torus;
    CHECK_THROWS_AS(sup_gauge(z, big, torus, 5), UsageError);
}
