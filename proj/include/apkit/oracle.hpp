#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "apkit/action.hpp"
#include "apkit/constructions.hpp"
#include "apkit/detectors.hpp"
#include "apkit/fixture.hpp"

namespace apkit {

/// Exhaustive per-level verdicts on a finite fixture, computed in exact
/// rational arithmetic straight from the tables. Bochner is only asserted
/// when the gauge is exactly invariant (without invariance the routes can
/// legitimately disagree).
struct OracleVerdicts {
    Verdict bohr = Verdict::Fail;
    Verdict pseudoBochner = Verdict::Fail;
    std::optional<Verdict> bochner;
    std::vector<std::int64_t> minimalF;   // exhaustive minimal cover witness
    std::int64_t coveringRadius = 0;      // of the period set in the cyclic metric
    std::size_t periodCount = 0;
    std::size_t orbitNetSize = 0;         // greedy orbit cover at diameter < eps
};

OracleVerdicts oracle_classify(const FiniteFixture& fix, int xIndex, const Rational& eps);

/// Orbit quotient with full exhaustive axiom verification, straight from the
/// rational tables.
HullGroup oracle_hull(const FiniteFixture& fix, int xIndex);

/// Random fixture: cyclic action on a divisor-sized orbit with a shortest
/// path gauge from a random weighted graph; group averaging produces the
/// invariant variant.
FiniteFixture make_random_fixture(std::uint64_t seed, std::int64_t n, bool invariant);

/// Three-point non-invariant fixture whose small-eps period set is {0} while
/// two distinct translates stay close: density verdicts fail although the
/// orbit is coverable, which is exactly what invariance rules out.
FiniteFixture make_noninvariant_counterexample();

/// Levels at which period sets change: distinct positive pairwise orbit
/// distances plus midpoints between consecutive ones.
std::vector<Rational> interesting_eps_levels(const FiniteFixture& fix, int xIndex);

/// Table-backed instance over the fixture for running the detector path.
Instance make_table_instance(std::shared_ptr<const FiniteFixture> fix);

}  // namespace apkit
