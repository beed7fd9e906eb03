#include "apkit/fixture.hpp"

#include <vector>

#include "apkit/errors.hpp"

namespace apkit {

void FiniteFixture::validate() const {
    if (n < 1 || numPoints < 1) throw DataError("fixture needs n >= 1 and at least one point");
    if (gaugeTable.size() != static_cast<std::size_t>(numPoints) * numPoints)
        throw DataError("fixture gauge table has wrong size");
    if (actionTable.size() != static_cast<std::size_t>(n) * numPoints)
        throw DataError("fixture action table has wrong size");

    for (int i = 0; i < numPoints; ++i) {
        if (!gauge(i, i).isZero()) throw DataError("fixture gauge has nonzero diagonal");
        for (int j = 0; j < numPoints; ++j) {
            if (gauge(i, j) != gauge(j, i)) throw DataError("fixture gauge not symmetric");
            if (gauge(i, j) < Rational(0)) throw DataError("fixture gauge negative");
            for (int k = 0; k < numPoints; ++k)
                if (gauge(i, j) > gauge(i, k) + gauge(k, j))
                    throw DataError("fixture gauge violates the triangle inequality");
        }
    }

    // Each translate acts as a permutation; identity and composition laws
    // hold exactly.
    for (std::int64_t t = 0; t < n; ++t) {
        std::vector<bool> seen(static_cast<std::size_t>(numPoints), false);
        for (int p = 0; p < numPoints; ++p) {
            int q = act(t, p);
            if (q < 0 || q >= numPoints) throw DataError("fixture action out of range");
            if (seen[static_cast<std::size_t>(q)]) throw DataError("fixture action not injective");
            seen[static_cast<std::size_t>(q)] = true;
        }
    }
    for (int p = 0; p < numPoints; ++p)
        if (act(0, p) != p) throw DataError("fixture action has no identity");
    for (std::int64_t s = 0; s < n; ++s)
        for (std::int64_t t = 0; t < n; ++t)
            for (int p = 0; p < numPoints; ++p)
                if (act(s, act(t, p)) != act((s + t) % n, p))
                    throw DataError("fixture action violates the composition law");
}

bool FiniteFixture::exactlyInvariant() const {
    for (std::int64_t t = 0; t < n; ++t)
        for (int i = 0; i < numPoints; ++i)
            for (int j = 0; j < numPoints; ++j)
                if (gauge(act(t, i), act(t, j)) != gauge(i, j)) return false;
    return true;
}

}  // namespace apkit
