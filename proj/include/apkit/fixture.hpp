#pragma once

#include <cstdint>
#include <vector>

#include "apkit/rational.hpp"

namespace apkit {

/// Fully explicit finite model: a cyclic group of order n acting by
/// permutations on a finite point list carrying an exact rational gauge
/// table. Ground truth for the exhaustive baseline and for table-backed
/// instances.
struct FiniteFixture {
    std::int64_t n = 0;
    int numPoints = 0;
    std::vector<Rational> gaugeTable;  // numPoints * numPoints
    std::vector<int> actionTable;      // n * numPoints, actionTable[t*numPoints + p]

    const Rational& gauge(int i, int j) const {
        return gaugeTable[static_cast<std::size_t>(i) * numPoints + j];
    }
    Rational& gauge(int i, int j) {
        return gaugeTable[static_cast<std::size_t>(i) * numPoints + j];
    }
    int act(std::int64_t t, int p) const {
        std::int64_t tt = t % n;
        if (tt < 0) tt += n;
        return actionTable[static_cast<std::size_t>(tt) * numPoints + p];
    }

    /// Exact checks: gauge symmetric with zero diagonal and triangle
    /// inequality; action is a permutation for each t satisfying the group
    /// action laws. Throws DataError on violation.
    void validate() const;

    /// Whether gauge(act(t,i), act(t,j)) == gauge(i,j) for all t,i,j.
    bool exactlyInvariant() const;
};

}  // namespace apkit
