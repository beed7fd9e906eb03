#include "apkit/generators.hpp"

#include <algorithm>
#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

SampledFunction make_trig_function(const Group& g, std::span<const double> frequencies,
                                   std::span<const double> amplitudes, std::int64_t domainRadius) {
    if (frequencies.size() != amplitudes.size())
        throw UsageError("frequency and amplitude lists differ in length");
    SampledFunction f;
    f.codomainDim = 1;
    f.codomain = CodomainMetric::Euclidean;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double h = g.step().toDouble();

    if (g.kind() == GroupKind::FiniteCyclic) {
        f.domainRadius = 0;
        f.values.resize(static_cast<std::size_t>(g.order()));
        for (std::int64_t v = 0; v < g.order(); ++v) {
            double acc = 0;
            for (std::size_t i = 0; i < frequencies.size(); ++i)
                acc += amplitudes[i] * std::cos(kTwoPi * frequencies[i] * static_cast<double>(v));
            f.values[static_cast<std::size_t>(v)] = acc;
        }
        return f;
    }
    if (g.dim() != 1) throw UsageError("trig generator implemented for 1-d groups");
    f.domainRadius = domainRadius;
    f.values.resize(static_cast<std::size_t>(2 * domainRadius + 1));
    for (std::int64_t c = -domainRadius; c <= domainRadius; ++c) {
        double t = static_cast<double>(c) * h;
        double acc = 0;
        for (std::size_t i = 0; i < frequencies.size(); ++i)
            acc += amplitudes[i] * std::cos(kTwoPi * frequencies[i] * t);
        f.values[static_cast<std::size_t>(c + domainRadius)] = acc;
    }
    return f;
}

PointSet make_sturmian_set(double slope, double intercept, std::int64_t W) {
    if (!(slope > 0) || slope > 1) throw UsageError("Sturmian slope must lie in (0, 1]");
    std::vector<GroupElement> elems;
    for (std::int64_t n = -W; n <= W; ++n) {
        double a = std::floor(static_cast<double>(n + 1) * slope + intercept);
        double b = std::floor(static_cast<double>(n) * slope + intercept);
        if (a - b == 1.0) elems.emplace_back(n);
    }
    return normalize_point_set(std::move(elems), W);
}

PointMeasure make_comb(std::int64_t period, const Rational& weight, std::int64_t W) {
    if (period < 1) throw UsageError("comb period must be positive");
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (std::int64_t k = -(W / period); k * period <= W; ++k) {
        support.emplace_back(k * period);
        weights.push_back(weight);
    }
    return normalize_measure(std::move(support), std::move(weights));
}

std::int64_t pow5(int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) v = checked_mul(v, 5);
    return v;
}

PointMeasure counterexample_terms(int lo, int hi, std::int64_t W) {
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        std::int64_t base = checked_mul(2, pow5(n));   // 2*5^n
        std::int64_t stride = pow5(n + 1);             // 5^(n+1)
        if (base > W) continue;
        std::int64_t kLo = -((W + base) / stride);
        for (std::int64_t k = kLo;; ++k) {
            std::int64_t p = checked_add(checked_mul(k, stride), base);
            if (p > W) break;
            if (p >= -W) {
                support.emplace_back(p);
                weights.emplace_back(n);
            }
        }
    }
    return normalize_measure(std::move(support), std::move(weights));
}

PointMeasure counterexample_measure(int nMax, std::int64_t W) {
    if (nMax < 0 || nMax > 20) throw UsageError("level must lie in [0, 20]");
    return counterexample_terms(1, nMax, W);
}

namespace {

// Restrict a measure to |t| <= R.
PointMeasure restrict_measure(const PointMeasure& m, std::int64_t R) {
    std::vector<GroupElement> s;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < m.support.size(); ++i) {
        std::int64_t c = m.support[i].scalar();
        if (c >= -R && c <= R) {
            s.push_back(m.support[i]);
            w.push_back(m.weights[i]);
        }
    }
    PointMeasure out;
    out.support = std::move(s);
    out.weights = std::move(w);
    return out;
}

PointMeasure shift_measure(const PointMeasure& m, std::int64_t t) {
    std::vector<GroupElement> s;
    for (const auto& e : m.support) s.emplace_back(checked_add(e.scalar(), t));
    PointMeasure out;
    out.support = std::move(s);
    out.weights = m.weights;
    return out;
}

bool support_avoids_open_interval(const PointMeasure& m, std::int64_t radius) {
    for (const auto& e : m.support) {
        std::int64_t c = e.scalar();
        if (c > -radius && c < radius) return false;
    }
    return true;
}

}  // namespace

LayeredReport verify_layered_measure(int nMax, std::int64_t window) {
    if (nMax < 0 || nMax > 20) throw UsageError("level must lie in [0, 20]");
    LayeredReport rep;
    rep.nMax = nMax;
    rep.window = window;
    rep.allHold = true;

    // Work on a generation window wide enough that every compared translate is
    // fully represented.
    const std::int64_t gen = checked_mul(2, window);

    for (int N = 1; N <= nMax; ++N) {
        std::int64_t core = pow5(N);
        std::int64_t stride = pow5(N + 1);
        PointMeasure head = counterexample_terms(1, N - 1, gen);  // 5^N periodic part
        PointMeasure tail = counterexample_terms(N, nMax, gen);
        const bool tailAvoids = support_avoids_open_interval(tail, core);

        for (std::int64_t m = core - stride * ((window + core) / stride); m <= window;
             m += stride) {
            if (m < -window) continue;
            LayeredRow row;
            row.level = N;
            row.shift = m;
            // (i) the head is m-periodic on the interior untouched by truncation
            std::int64_t interior = gen - std::llabs(m);
            PointMeasure shifted = restrict_measure(shift_measure(head, m), interior);
            PointMeasure plain = restrict_measure(head, interior);
            row.periodicityHolds =
                shifted.support == plain.support && shifted.weights == plain.weights;
            // (ii) + (iii) the tail and its shift avoid the open core interval
            row.tailAvoidsCore = tailAvoids;
            row.shiftedTailAvoidsCore = support_avoids_open_interval(shift_measure(tail, m), core);
            if (!(row.periodicityHolds && row.tailAvoidsCore && row.shiftedTailAvoidsCore))
                rep.allHold = false;
            rep.rows.push_back(row);
        }

        // Norm growth: K = {0} norm over a window containing 2*5^N is at
        // least N (the level-N atom sits at 2*5^N with weight N).
        std::int64_t wN = checked_mul(2, pow5(N));
        PointMeasure muN = counterexample_measure(nMax, wN);
        Rational best(0);
        for (const auto& w : muN.weights) best = Rational::max(best, w.abs());
        rep.normGrowth.emplace_back(N, best);
    }

    // Residue bookkeeping for the tail: the leading term lies in
    // 2*5^N + 5^(N+1) Z, deeper terms generally do not.
    if (nMax >= 1) {
        int N = 1;
        std::int64_t stride = pow5(N + 1);
        std::int64_t residue = checked_mul(2, pow5(N)) % stride;
        PointMeasure lead = counterexample_terms(N, N, window);
        rep.tailResidueFirstTerm = true;
        for (const auto& e : lead.support) {
            std::int64_t r = ((e.scalar() % stride) + stride) % stride;
            if (r != residue) rep.tailResidueFirstTerm = false;
        }
        PointMeasure deep = counterexample_terms(N, nMax, window);
        for (const auto& e : deep.support) {
            std::int64_t r = ((e.scalar() % stride) + stride) % stride;
            if (r != residue) rep.tailResidueAllTerms = false;
        }
    }
    return rep;
}

}  // namespace apkit
