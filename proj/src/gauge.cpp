#include "apkit/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

// Lexicographic odometer over the box [-R, R]^dim.
template <typename Fn>
void for_each_box(int dim, std::int64_t R, Fn&& fn) {
    std::vector<std::int64_t> cur(dim, -R);
    while (true) {
        fn(cur);
        int i = dim - 1;
        while (i >= 0 && cur[i] == R) { cur[i] = -R; --i; }
        if (i < 0) break;
        ++cur[i];
    }
}

std::int64_t window_steps(const Group& g, double W) {
    if (g.kind() == GroupKind::FiniteCyclic) return g.order();
    return g.stepsFor(W);
}

void require_domains(const Group& g, const SampledFunction& f, const SampledFunction& h,
                     std::int64_t steps) {
    if (f.codomainDim != h.codomainDim || f.codomain != h.codomain)
        throw UsageError("incompatible codomains in gauge evaluation");
    if (g.kind() == GroupKind::FiniteCyclic) return;
    if (f.domainRadius < steps || h.domainRadius < steps)
        throw ResourceError("sample domain too small for gauge window");
}

// floor(num/den) for a normalized rational.
std::int64_t rational_floor(const Rational& r) {
    std::int64_t q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() < 0) --q;
    return q;
}

std::int64_t rational_ceil(const Rational& r) {
    std::int64_t q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() > 0) ++q;
    return q;
}

}  // namespace

Rational TestFn::eval(const Rational& x) const {
    Rational d = (x - center).abs();
    if (kind == TestFnKind::Indicator) {
        return d <= radius ? height : Rational(0);
    }
    if (!(d < radius)) return Rational(0);
    return height * (Rational(1) - d / radius);
}

double sup_gauge(const Group& g, const SampledFunction& f, const SampledFunction& h, double W) {
    std::int64_t steps = window_steps(g, W);
    require_domains(g, f, h, steps);
    double best = 0.0;
    if (g.kind() == GroupKind::FiniteCyclic) {
        for (std::int64_t v = 0; v < g.order(); ++v) {
            const double* a = f.values.data() + static_cast<std::size_t>(v) * f.codomainDim;
            const double* b = h.values.data() + static_cast<std::size_t>(v) * f.codomainDim;
            best = std::max(best, codomain_distance(f, a, b));
        }
        return best;
    }
    if (g.dim() == 1) {
        std::int64_t offF = f.domainRadius, offH = h.domainRadius;
        for (std::int64_t c = -steps; c <= steps; ++c) {
            const double* a = f.values.data() + static_cast<std::size_t>(c + offF) * f.codomainDim;
            const double* b = h.values.data() + static_cast<std::size_t>(c + offH) * f.codomainDim;
            best = std::max(best, codomain_distance(f, a, b));
        }
        return best;
    }
    for_each_box(g.dim(), steps, [&](const std::vector<std::int64_t>& c) {
        GroupElement e{c};
        best = std::max(best, codomain_distance(f, sample_at(g, f, e), sample_at(g, h, e)));
    });
    return best;
}

double stepanov_gauge(const Group& g, const SampledFunction& f, const SampledFunction& h,
                      std::int64_t kCells, double p, double W) {
    if (kCells < 1) throw UsageError("Stepanov cell count must be >= 1");
    if (p < 1.0 || !std::isfinite(p)) throw UsageError("Stepanov exponent must satisfy 1 <= p < inf");
    std::int64_t steps = window_steps(g, W);
    require_domains(g, f, h, steps);

    std::int64_t spanCells = 1;
    for (int i = 0; i < g.dim(); ++i) spanCells = checked_mul(spanCells, kCells);

    double best = 0.0;
    auto cellMean = [&](const std::vector<std::int64_t>& y) {
        double acc = 0.0;
        std::vector<std::int64_t> cell(g.dim(), 0);
        while (true) {
            std::vector<std::int64_t> at(g.dim());
            for (int i = 0; i < g.dim(); ++i) at[i] = y[i] + cell[i];
            GroupElement e = g.kind() == GroupKind::FiniteCyclic ? g.make(at) : GroupElement{at};
            double d = codomain_distance(f, sample_at(g, f, e), sample_at(g, h, e));
            acc += std::pow(d, p);
            int i = g.dim() - 1;
            while (i >= 0 && cell[i] == kCells - 1) { cell[i] = 0; --i; }
            if (i < 0) break;
            ++cell[i];
        }
        return std::pow(acc / static_cast<double>(spanCells), 1.0 / p);
    };

    if (g.kind() == GroupKind::FiniteCyclic) {
        if (kCells > g.order()) throw ResourceError("Stepanov cell block larger than the group");
        for (std::int64_t v = 0; v < g.order(); ++v) best = std::max(best, cellMean({v}));
        return best;
    }
    if (2 * steps + 1 < kCells) throw ResourceError("Stepanov cell block larger than the window");
    // y + K must stay inside the window: y in [-steps, steps - kCells + 1] per axis.
    std::vector<std::int64_t> y(g.dim(), -steps);
    const std::int64_t yMax = steps - kCells + 1;
    while (true) {
        best = std::max(best, cellMean(y));
        int i = g.dim() - 1;
        while (i >= 0 && y[i] == yMax) { y[i] = -steps; --i; }
        if (i < 0) break;
        ++y[i];
    }
    return best;
}

double autocorrelation_gauge(const Group& g, const PointSet& a, const PointSet& b, std::int64_t n) {
    if (n < 0) throw UsageError("autocorrelation radius must be nonnegative");
    if (a.windowRadius >= 0 && n > a.windowRadius)
        throw WindowingError("autocorrelation radius exceeds point-set window", n, a.windowRadius);
    if (b.windowRadius >= 0 && n > b.windowRadius)
        throw WindowingError("autocorrelation radius exceeds point-set window", n, b.windowRadius);

    std::vector<GroupElement> sym;
    std::set_symmetric_difference(a.elements.begin(), a.elements.end(), b.elements.begin(),
                                  b.elements.end(), std::back_inserter(sym));
    std::int64_t inside = 0;
    for (const auto& e : sym) {
        if (g.kind() == GroupKind::FiniteCyclic || g.inBox(e, n)) ++inside;
    }
    std::int64_t total = g.kind() == GroupKind::FiniteCyclic ? g.order() : g.boxSize(n);
    return static_cast<double>(inside) / static_cast<double>(total);
}

PointMeasure measure_difference(const PointMeasure& mu, const PointMeasure& nu) {
    std::vector<GroupElement> support;
    std::vector<Rational> weights;
    support.reserve(mu.support.size() + nu.support.size());
    std::size_t i = 0, j = 0;
    while (i < mu.support.size() || j < nu.support.size()) {
        bool takeMu;
        if (i == mu.support.size()) takeMu = false;
        else if (j == nu.support.size()) takeMu = true;
        else if (mu.support[i] == nu.support[j]) {
            Rational w = mu.weights[i] - nu.weights[j];
            if (!w.isZero()) { support.push_back(mu.support[i]); weights.push_back(w); }
            ++i; ++j;
            continue;
        } else takeMu = mu.support[i] < nu.support[j];
        if (takeMu) { support.push_back(mu.support[i]); weights.push_back(mu.weights[i]); ++i; }
        else { support.push_back(nu.support[j]); weights.push_back(-nu.weights[j]); ++j; }
    }
    PointMeasure d;
    d.support = std::move(support);
    d.weights = std::move(weights);
    return d;
}

Rational measure_norm_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                            std::int64_t kCells, double W) {
    if (g.dim() != 1) throw UsageError("measure norm gauge implemented for 1-d groups");
    if (kCells < 1) throw UsageError("norm gauge cell count must be >= 1");
    PointMeasure diff = measure_difference(mu, nu);

    // |mu - nu| restricted to coordinates, weights in absolute value.
    std::vector<std::int64_t> coord;
    std::vector<Rational> w;
    coord.reserve(diff.support.size());
    for (std::size_t i = 0; i < diff.support.size(); ++i) {
        coord.push_back(diff.support[i].scalar());
        w.push_back(diff.weights[i].abs());
    }

    Rational best(0);
    if (g.kind() == GroupKind::FiniteCyclic) {
        std::int64_t n = g.order();
        std::int64_t k = std::min<std::int64_t>(kCells, n);
        // Unroll the cycle once so windows wrapping 0 are plain intervals.
        std::vector<std::int64_t> cc = coord;
        std::vector<Rational> ww = w;
        for (std::size_t i = 0; i < coord.size(); ++i) {
            cc.push_back(coord[i] + n);
            ww.push_back(w[i]);
        }
        for (std::int64_t t = 0; t < n; ++t) {
            Rational acc(0);
            for (std::size_t i = 0; i < cc.size(); ++i)
                if (cc[i] >= t && cc[i] <= t + k - 1) acc += ww[i];
            best = Rational::max(best, acc);
        }
        return best;
    }

    std::int64_t steps = g.stepsFor(W);
    std::int64_t tMax = steps - kCells + 1;
    if (tMax < -steps) throw ResourceError("norm gauge cell block larger than the window");
    // Candidate left edges: each in-window support point, clamped into range.
    std::vector<std::int64_t> cand;
    cand.push_back(-steps);
    for (std::size_t i = 0; i < coord.size(); ++i) {
        if (coord[i] < -steps || coord[i] > steps) continue;
        cand.push_back(std::min(std::max(coord[i], -steps), tMax));
    }
    for (std::int64_t t : cand) {
        Rational acc(0);
        auto lo = std::lower_bound(coord.begin(), coord.end(), t);
        for (auto it = lo; it != coord.end() && *it <= t + kCells - 1; ++it)
            acc += w[static_cast<std::size_t>(it - coord.begin())];
        best = Rational::max(best, acc);
    }
    return best;
}

Rational measure_apply(const Group& g, const PointMeasure& mu, const TestFn& fn) {
    const Rational h = g.step();
    // Only support points inside the test function's interval contribute.
    Rational lo = (fn.center - fn.radius) / h;
    Rational hi = (fn.center + fn.radius) / h;
    std::int64_t cLo = rational_ceil(lo), cHi = rational_floor(hi);
    Rational acc(0);
    if (g.dim() != 1) throw UsageError("test functions implemented for 1-d groups");
    auto it = std::lower_bound(mu.support.begin(), mu.support.end(), GroupElement(cLo));
    for (; it != mu.support.end() && it->scalar() <= cHi; ++it) {
        std::size_t i = static_cast<std::size_t>(it - mu.support.begin());
        acc += mu.weights[i] * fn.eval(Rational(it->scalar()) * h);
    }
    return acc;
}

Rational vague_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                     std::span<const TestFn> testFns) {
    if (testFns.empty()) throw UsageError("vague gauge needs at least one test function");
    const Rational h = g.step();
    const Rational windowReal = Rational(g.radiusSteps()) * h;
    for (const auto& fn : testFns) {
        if (g.kind() != GroupKind::FiniteCyclic &&
            fn.center.abs() + fn.radius > windowReal)
            throw WindowingError("test function support escapes the representable window",
                                 rational_ceil(fn.center.abs() + fn.radius), g.radiusSteps());
    }
    Rational best(0);
    for (const auto& fn : testFns)
        best = Rational::max(best, (measure_apply(g, mu, fn) - measure_apply(g, nu, fn)).abs());
    return best;
}

Rational product_gauge(const Group& g, const PointMeasure& mu, const PointMeasure& nu,
                       std::span<const TestFn> testFns, double W) {
    if (testFns.empty()) throw UsageError("product gauge needs at least one test function");
    if (g.dim() != 1) throw UsageError("product gauge implemented for 1-d groups");
    PointMeasure diff = measure_difference(mu, nu);
    const Rational h = g.step();
    std::int64_t steps = window_steps(g, W);
    Rational best(0);
    for (const auto& fn : testFns) {
        Rational supAbs(0);
        std::int64_t yLo = g.kind() == GroupKind::FiniteCyclic ? 0 : -steps;
        std::int64_t yHi = g.kind() == GroupKind::FiniteCyclic ? g.order() - 1 : steps;
        for (std::int64_t y = yLo; y <= yHi; ++y) {
            // ((mu-nu)*phi)(y) = sum_s w(s) phi((y-s)h); restrict s to the
            // support interval of phi around y.
            Rational lo = Rational(y) - (fn.center + fn.radius) / h;
            Rational hi = Rational(y) - (fn.center - fn.radius) / h;
            std::int64_t sLo = rational_ceil(lo), sHi = rational_floor(hi);
            Rational acc(0);
            auto it = std::lower_bound(diff.support.begin(), diff.support.end(), GroupElement(sLo));
            for (; it != diff.support.end() && it->scalar() <= sHi; ++it) {
                std::size_t i = static_cast<std::size_t>(it - diff.support.begin());
                acc += diff.weights[i] * fn.eval(Rational(y - it->scalar()) * h);
            }
            supAbs = Rational::max(supAbs, acc.abs());
        }
        best = Rational::max(best, supAbs);
    }
    return best;
}

}  // namespace apkit
