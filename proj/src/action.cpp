#include "apkit/action.hpp"

#include <algorithm>
#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

const GaugeSpec& Instance::gaugeByName(const std::string& name) const {
    for (const auto& s : gauges)
        if (s.name == name) return s;
    throw UsageError("unknown gauge: " + name);
}

namespace {

SampledFunction act_function(const Group& g, const GroupElement& t, const SampledFunction& f) {
    SampledFunction out;
    out.codomainDim = f.codomainDim;
    out.codomain = f.codomain;
    if (g.kind() == GroupKind::FiniteCyclic) {
        out.domainRadius = f.domainRadius;
        out.values.resize(f.values.size());
        std::int64_t n = g.order();
        std::int64_t shift = ((t.scalar() % n) + n) % n;
        for (std::int64_t v = 0; v < n; ++v) {
            std::int64_t src = v - shift;
            if (src < 0) src += n;
            std::copy_n(f.values.data() + src * f.codomainDim, f.codomainDim,
                        out.values.data() + v * f.codomainDim);
        }
        return out;
    }
    std::int64_t tmax = 0;
    for (auto v : t.c) tmax = std::max(tmax, v < 0 ? -v : v);
    std::int64_t newR = f.domainRadius - tmax;
    if (newR < 0)
        throw WindowingError("translation pushes samples outside the representable window", tmax,
                             f.domainRadius);
    out.domainRadius = newR;
    out.values.resize(static_cast<std::size_t>(g.boxSize(newR)) * f.codomainDim);
    // g(c) = f(c - t), lexicographic over the shrunken box.
    std::vector<std::int64_t> cur(g.dim(), -newR);
    std::size_t w = 0;
    while (true) {
        std::vector<std::int64_t> src(g.dim());
        for (int i = 0; i < g.dim(); ++i) src[i] = cur[i] - t.c[i];
        const double* from = sample_at(g, f, GroupElement{src});
        std::copy_n(from, f.codomainDim, out.values.data() + w);
        w += static_cast<std::size_t>(f.codomainDim);
        int i = g.dim() - 1;
        while (i >= 0 && cur[i] == newR) { cur[i] = -newR; --i; }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace

Point act(const Instance& inst, const GroupElement& t, const Point& x) {
    const Group& g = inst.group;
    if (const auto* f = std::get_if<SampledFunction>(&x)) return act_function(g, t, *f);
    if (const auto* m = std::get_if<PointMeasure>(&x)) {
        std::vector<GroupElement> support;
        support.reserve(m->support.size());
        for (const auto& s : m->support) support.push_back(g.add(s, t));
        return normalize_measure(std::move(support), m->weights);
    }
    if (const auto* s = std::get_if<PointSet>(&x)) {
        std::vector<GroupElement> elems;
        elems.reserve(s->elements.size());
        for (const auto& e : s->elements) elems.push_back(g.add(e, t));
        return normalize_point_set(std::move(elems), s->windowRadius);
    }
    const auto& tp = std::get<TablePoint>(x);
    if (!inst.fixture) throw UsageError("table point without fixture");
    return TablePoint{inst.fixture->act(t.scalar(), tp.index)};
}

std::vector<std::pair<GroupElement, Point>> orbit_samples(const Instance& inst, const Point& x,
                                                          double W) {
    std::vector<std::pair<GroupElement, Point>> out;
    for (const auto& t : inst.group.windowElements(W)) out.emplace_back(t, act(inst, t, x));
    return out;
}

double gauge_eval(const Instance& inst, const GaugeSpec& spec, const Point& x, const Point& y) {
    const Group& g = inst.group;
    const double W = inst.gaugeWindow(spec);
    switch (spec.form) {
        case GaugeForm::Sup:
        case GaugeForm::Stepanov: {
            const auto* f = std::get_if<SampledFunction>(&x);
            const auto* h = std::get_if<SampledFunction>(&y);
            if (!f || !h) throw UsageError("gauge expects sampled functions");
            return spec.form == GaugeForm::Sup
                       ? sup_gauge(g, *f, *h, W)
                       : stepanov_gauge(g, *f, *h, spec.stepCells, spec.stepP, W);
        }
        case GaugeForm::Autocorrelation: {
            const auto* a = std::get_if<PointSet>(&x);
            const auto* b = std::get_if<PointSet>(&y);
            if (!a || !b) throw UsageError("gauge expects point sets");
            std::int64_t n = spec.autocorrRadius > 0 ? spec.autocorrRadius : g.stepsFor(W);
            return autocorrelation_gauge(g, *a, *b, n);
        }
        case GaugeForm::MeasureNorm:
        case GaugeForm::Vague:
        case GaugeForm::Product: {
            const auto* m = std::get_if<PointMeasure>(&x);
            const auto* v = std::get_if<PointMeasure>(&y);
            if (!m || !v) throw UsageError("gauge expects point measures");
            if (spec.form == GaugeForm::MeasureNorm)
                return measure_norm_gauge(g, *m, *v, spec.normCells, W).toDouble();
            if (spec.form == GaugeForm::Vague)
                return vague_gauge(g, *m, *v, spec.testFns).toDouble();
            return product_gauge(g, *m, *v, spec.testFns, W).toDouble();
        }
        case GaugeForm::Table: {
            const auto* a = std::get_if<TablePoint>(&x);
            const auto* b = std::get_if<TablePoint>(&y);
            if (!a || !b) throw UsageError("gauge expects table points");
            if (!inst.fixture) throw UsageError("table gauge without fixture");
            return inst.fixture->gauge(a->index, b->index).toDouble();
        }
    }
    throw UsageError("unhandled gauge form");
}

double gauge_translate_pair(const Instance& inst, const GaugeSpec& spec, const Point& x,
                            const GroupElement& t, const GroupElement& s, double cutoff) {
    const Group& g = inst.group;
    // Fast path: sup gauge of two translates of the same sampled function,
    // evaluated by index offset with optional early exit.
    if (spec.form == GaugeForm::Sup) {
        if (const auto* f = std::get_if<SampledFunction>(&x)) {
            if (g.kind() != GroupKind::FiniteCyclic && g.dim() == 1) {
                std::int64_t steps = g.stepsFor(inst.gaugeWindow(spec));
                std::int64_t ta = t.scalar(), sa = s.scalar();
                std::int64_t need = steps + std::max(std::llabs(ta), std::llabs(sa));
                if (need > f->domainRadius)
                    throw WindowingError("translate pair exceeds sample domain", need,
                                         f->domainRadius);
                double best = 0.0;
                const int m = f->codomainDim;
                const std::int64_t off = f->domainRadius;
                for (std::int64_t c = -steps; c <= steps; ++c) {
                    const double* a = f->values.data() + (c - ta + off) * m;
                    const double* b = f->values.data() + (c - sa + off) * m;
                    double d = codomain_distance(*f, a, b);
                    if (d > best) {
                        best = d;
                        if (best >= cutoff) return best;
                    }
                }
                return best;
            }
        }
    }
    if (spec.form == GaugeForm::Table) {
        const auto& tp = std::get<TablePoint>(x);
        if (!inst.fixture) throw UsageError("table gauge without fixture");
        return inst.fixture
            ->gauge(inst.fixture->act(t.scalar(), tp.index), inst.fixture->act(s.scalar(), tp.index))
            .toDouble();
    }
    Point xt = act(inst, t, x);
    Point xs = act(inst, s, x);
    return gauge_eval(inst, spec, xt, xs);
}

double gauge_translate(const Instance& inst, const GaugeSpec& spec, const Point& x,
                       const GroupElement& t) {
    return gauge_translate_pair(inst, spec, x, t, inst.group.zero());
}

InvarianceCertificate check_invariance(const Instance& inst, const GaugeSpec& spec,
                                       std::span<const Point> points,
                                       std::span<const double> epsGrid, std::size_t budget) {
    if (points.empty()) throw UsageError("check_invariance needs a nonempty sample set");
    const Group& g = inst.group;
    auto translates = g.windowElements(inst.gaugeWindow(spec));

    std::size_t pairCount = points.size() * (points.size() - 1) / 2 + points.size();
    std::size_t perPair = std::max<std::size_t>(1, budget / std::max<std::size_t>(1, pairCount));
    std::size_t stride = std::max<std::size_t>(1, translates.size() / perPair);

    InvarianceCertificate cert;
    cert.exactInvariant = true;

    struct PairObs { double before; double worstAfter; };
    std::vector<PairObs> obs;

    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i; j < points.size(); ++j) {
            double before = gauge_eval(inst, spec, points[i], points[j]);
            double worstAfter = before;
            for (std::size_t k = 0; k < translates.size(); k += stride) {
                const auto& t = translates[k];
                Point xt = act(inst, t, points[i]);
                Point yt = act(inst, t, points[j]);
                double after = gauge_eval(inst, spec, xt, yt);
                ++cert.translatesProbed;
                double dev = std::abs(after - before);
                if (dev > cert.modulus) {
                    cert.modulus = dev;
                    cert.violation = ViolationTriple{i, j, t, before, after};
                }
                if (dev > 1e-12) cert.exactInvariant = false;
                worstAfter = std::max(worstAfter, after);
            }
            obs.push_back({before, worstAfter});
            ++cert.pairsProbed;
        }
    }
    if (cert.exactInvariant) cert.violation.reset();

    for (double eps : epsGrid) {
        InvarianceLevel lvl;
        lvl.eps = eps;
        double minViolating = std::numeric_limits<double>::infinity();
        for (const auto& o : obs)
            if (o.worstAfter >= eps) minViolating = std::min(minViolating, o.before);
        if (std::isfinite(minViolating)) {
            lvl.hasDelta = true;
            lvl.delta = minViolating;
            if (!(lvl.delta > 0)) cert.pseudoInvariant = false;
        }
        cert.levels.push_back(lvl);
    }
    return cert;
}

EquicontinuityCertificate equicontinuity_check(const Instance& inst, const GaugeSpec& spec,
                                               std::span<const Point> points,
                                               std::span<const double> epsGrid, double maxRadius) {
    EquicontinuityCertificate cert;
    const Group& g = inst.group;
    const double h = g.step().toDouble();
    if (g.discrete()) {
        cert.discreteGroup = true;
        for (double eps : epsGrid) cert.levels.push_back({eps, 1.0, EquiFlag::Discrete, {}});
        return cert;
    }

    // Probe gauge(act(s,x), x) for s sorted by |s| and record, per eps, the
    // smallest violating |s|; the largest admissible radius is just below it.
    auto shifts = g.windowElements(maxRadius);
    std::sort(shifts.begin(), shifts.end(), [&](const GroupElement& a, const GroupElement& b) {
        double na = g.norm(a), nb = g.norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });

    struct Violation { double snorm; std::size_t point; GroupElement s; };
    std::vector<Violation> firstViolation(epsGrid.size(),
                                          {std::numeric_limits<double>::infinity(), 0, {}});

    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        for (const auto& s : shifts) {
            if (s.isZero()) continue;
            double val = gauge_translate(inst, spec, points[pi], s);
            double sn = g.norm(s);
            for (std::size_t e = 0; e < epsGrid.size(); ++e) {
                if (val >= epsGrid[e] && sn < firstViolation[e].snorm)
                    firstViolation[e] = {sn, pi, s};
            }
        }
    }

    for (std::size_t e = 0; e < epsGrid.size(); ++e) {
        EquiLevel lvl;
        lvl.eps = epsGrid[e];
        const auto& v = firstViolation[e];
        if (!std::isfinite(v.snorm)) {
            lvl.flag = EquiFlag::Passed;
            lvl.radius = maxRadius;  // no violation up to the probe horizon
        } else if (v.snorm <= h + 1e-12) {
            lvl.flag = EquiFlag::Fail;  // no radius above lattice resolution
            lvl.radius = 0;
            lvl.witness = std::make_pair(v.point, v.s);
        } else {
            lvl.flag = EquiFlag::Passed;
            lvl.radius = v.snorm;  // ball(r) is open, r = smallest violating |s|
            lvl.witness = std::make_pair(v.point, v.s);
        }
        cert.levels.push_back(lvl);
    }
    return cert;
}

}  // namespace apkit
