#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apkit/gauge.hpp"
#include "apkit/group.hpp"
#include "apkit/point.hpp"

namespace apkit {

/// f(t) = sum_i amplitudes[i] * cos(2 pi frequencies[i] t), sampled over the
/// box of the given step radius (whole group for FiniteCyclic).
SampledFunction make_trig_function(const Group& g, std::span<const double> frequencies,
                                   std::span<const double> amplitudes, std::int64_t domainRadius);

/// Sturmian (Beatty-difference) set {n : floor((n+1)s + b) - floor(ns + b) = 1}
/// over |n| <= W; slope in (0, 1].
PointSet make_sturmian_set(double slope, double intercept, std::int64_t W);

/// Periodic comb: weight at every multiple of period within |t| <= W.
PointMeasure make_comb(std::int64_t period, const Rational& weight, std::int64_t W);

/// The layered measure sum_{n>=1} n * delta_{5^(n+1) Z + 2*5^n} truncated to
/// terms n <= nMax and support |t| <= W. Exact integers, overlaps merged.
PointMeasure counterexample_measure(int nMax, std::int64_t W);

/// Terms n in [lo, hi] of the layered measure, truncated to |t| <= W.
PointMeasure counterexample_terms(int lo, int hi, std::int64_t W);

/// Exact power 5^k with overflow checking.
std::int64_t pow5(int k);

struct LayeredRow {
    int level = 0;           // N
    std::int64_t shift = 0;  // m in 5^N + 5^(N+1) Z
    bool periodicityHolds = false;     // T_m mu_N == mu_N on the compared interior
    bool tailAvoidsCore = false;       // supp(nu_N) misses (-5^N, 5^N)
    bool shiftedTailAvoidsCore = false;
};

struct LayeredReport {
    int nMax = 0;
    std::int64_t window = 0;
    std::vector<LayeredRow> rows;
    bool allHold = false;
    // K = {0} norm over a window containing 2*5^N, per level.
    std::vector<std::pair<int, Rational>> normGrowth;
    // Residue containment of the tail: holds for the leading term, fails for
    // the deeper ones (recorded, not assumed).
    bool tailResidueFirstTerm = false;
    bool tailResidueAllTerms = true;
};

/// Integer verification table for the layered counterexample: for each level
/// N <= nMax and every shift m in (5^N + 5^(N+1) Z) within the window, check
/// the three exact statements behind its almost periodicity, plus the norm
/// growth sequence certifying translation unboundedness.
LayeredReport verify_layered_measure(int nMax, std::int64_t window);

}  // namespace apkit
