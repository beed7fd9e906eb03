#include "apkit/point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "apkit/errors.hpp"

namespace apkit {

PointMeasure normalize_measure(std::vector<GroupElement> support, std::vector<Rational> weights) {
    if (support.size() != weights.size())
        throw UsageError("measure support/weight lists differ in length");
    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    PointMeasure m;
    for (std::size_t k : order) {
        if (!m.support.empty() && m.support.back() == support[k]) {
            m.weights.back() += weights[k];
            if (m.weights.back().isZero()) {
                m.support.pop_back();
                m.weights.pop_back();
            }
        } else if (!weights[k].isZero()) {
            m.support.push_back(support[k]);
            m.weights.push_back(weights[k]);
        }
    }
    return m;
}

PointSet normalize_point_set(std::vector<GroupElement> elements, std::int64_t windowRadius) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PointSet s;
    s.elements = std::move(elements);
    s.windowRadius = windowRadius;
    return s;
}

double min_separation(const Group& g, const PointSet& s) {
    if (s.elements.size() < 2) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    // Sorted order makes adjacent pairs sufficient in one dimension.
    if (g.dim() == 1 && g.kind() != GroupKind::FiniteCyclic) {
        for (std::size_t i = 1; i < s.elements.size(); ++i)
            best = std::min(best, g.metric(s.elements[i], s.elements[i - 1]));
        return best;
    }
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        for (std::size_t j = i + 1; j < s.elements.size(); ++j)
            best = std::min(best, g.metric(s.elements[i], s.elements[j]));
    return best;
}

const double* sample_at(const Group& g, const SampledFunction& f, const GroupElement& e) {
    std::int64_t idx = g.boxIndex(e, f.domainRadius);
    return f.values.data() + static_cast<std::size_t>(idx) * f.codomainDim;
}

double codomain_distance(const SampledFunction& f, const double* a, const double* b) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    double acc = 0.0;
    for (int i = 0; i < f.codomainDim; ++i) {
        double d = std::abs(a[i] - b[i]);
        if (f.codomain == CodomainMetric::Torus) {
            d = std::fmod(d, kTwoPi);
            d = std::min(d, kTwoPi - d);
        }
        acc += d * d;
    }
    return std::sqrt(acc);
}

void validate_function(const Group& g, const SampledFunction& f) {
    if (f.codomainDim < 1) throw UsageError("codomain dimension must be >= 1");
    std::int64_t expect = g.boxSize(f.domainRadius) * f.codomainDim;
    if (static_cast<std::int64_t>(f.values.size()) != expect)
        throw UsageError("sampled function has wrong value count");
    for (double v : f.values)
        if (!std::isfinite(v)) throw DataError("sampled function contains non-finite value");
}

}  // namespace apkit
