#include "apkit/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

namespace {
constexpr double kZeroTol = 1e-12;
}

InvariantMetricResult invariant_metric_eval(const Instance& inst, const GaugeSpec& spec,
                                            const Point& x, const Point& y, double W,
                                            const InvarianceCertificate* cert,
                                            double tailFraction) {
    const Group& g = inst.group;
    auto translates = g.windowElements(W);
    std::stable_sort(translates.begin(), translates.end(),
                     [&](const GroupElement& a, const GroupElement& b) {
                         double na = g.norm(a), nb = g.norm(b);
                         if (na != nb) return na < nb;
                         return a < b;
                     });

    InvariantMetricResult res;
    res.invarianceWarning = (cert == nullptr) || !cert->pseudoInvariant;
    double attainedAt = 0;
    for (const auto& t : translates) {
        Point xt = act(inst, t, x);
        Point yt = act(inst, t, y);
        double v = gauge_eval(inst, spec, xt, yt);
        if (v > res.dbar) {
            res.dbar = v;
            attainedAt = g.norm(t);
        }
    }
    res.dprime = res.dbar < 1.0 ? res.dbar : 1.0;
    if (g.kind() == GroupKind::FiniteCyclic) {
        res.converged = true;  // the sup ran over the whole group
    } else {
        res.converged = attainedAt <= (1.0 - tailFraction) * W;
    }
    return res;
}

namespace {

double mixed_one_sided(const Instance& inst, const GaugeSpec& spec, const Point& x,
                       const Point& y, const std::vector<GroupElement>& shifts) {
    const Group& g = inst.group;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : shifts) {
        double dg = g.norm(t);
        if (dg >= best) continue;
        Point moved = act(inst, g.neg(t), x);
        double val = std::max(dg, gauge_eval(inst, spec, moved, y));
        best = std::min(best, val);
    }
    return best;
}

}  // namespace

double mixed_gauge_eval(const Instance& inst, const GaugeSpec& spec, const Point& x,
                        const Point& y, double rMax) {
    if (!(rMax > 0)) throw UsageError("mixed gauge needs rMax > 0");
    auto shifts = inst.group.windowElements(rMax);
    double ab = mixed_one_sided(inst, spec, x, y, shifts);
    double ba = mixed_one_sided(inst, spec, y, x, shifts);
    return std::max(ab, ba);
}

HullGroup build_hull_group(const Instance& inst, const GaugeSpec& spec, const Point& x) {
    const Group& g = inst.group;
    if (g.kind() != GroupKind::FiniteCyclic)
        throw UsageError("hull construction requires a finite cyclic group");
    const std::int64_t n = g.order();

    std::vector<Point> orbit;
    orbit.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) orbit.push_back(act(inst, GroupElement(t), x));

    // Pairwise gauge table over the orbit, with pseudometric sanity checks.
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i; j < n; ++j) {
            double v = gauge_eval(inst, spec, orbit[i], orbit[j]);
            double w = gauge_eval(inst, spec, orbit[j], orbit[i]);
            if (std::abs(v - w) > kZeroTol)
                throw DataError("gauge is not symmetric on the orbit");
            if (i == j && v > kZeroTol) throw DataError("gauge has nonzero diagonal on the orbit");
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t k = 0; k < n; ++k)
                if (d[i * n + j] > d[i * n + k] + d[k * n + j] + 1e-9)
                    throw DataError("gauge violates the triangle inequality on the orbit");

    // Classes of the gauge-0 identification, representative = first translate.
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> reps;
    for (std::int64_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (d[t * n + reps[c]] < kZeroTol) {
                cls[t] = static_cast<int>(c);
                break;
            }
        }
        if (cls[t] < 0) {
            cls[t] = static_cast<int>(reps.size());
            reps.push_back(t);
        }
    }
    // Zero-distance must be a clean equivalence here (pseudometric quotient).
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            bool same = cls[i] == cls[j];
            bool zero = d[i * n + j] < kZeroTol;
            if (same != zero)
                throw DataError("gauge-0 identification is not transitive on the orbit");
        }

    const int m = static_cast<int>(reps.size());
    HullGroup hull;
    hull.elements = reps;
    hull.identityIndex = cls[0];

    hull.addTable.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            hull.addTable[i][j] = cls[(reps[i] + reps[j]) % n];

    // Well-definedness of the induced addition over whole classes.
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t s = 0; s < n; ++s)
            if (hull.addTable[cls[t]][cls[s]] != cls[(t + s) % n])
                throw DataError("induced addition is not well defined on gauge-0 classes");

    // Abelian group axioms, exhaustively.
    for (int i = 0; i < m; ++i) {
        if (hull.addTable[i][hull.identityIndex] != i || hull.addTable[hull.identityIndex][i] != i)
            throw DataError("hull identity axiom failed");
        bool hasInverse = false;
        for (int j = 0; j < m; ++j)
            if (hull.addTable[i][j] == hull.identityIndex) hasInverse = true;
        if (!hasInverse) throw DataError("hull inverse axiom failed");
        for (int j = 0; j < m; ++j) {
            if (hull.addTable[i][j] != hull.addTable[j][i])
                throw DataError("hull commutativity failed");
            for (int k = 0; k < m; ++k)
                if (hull.addTable[hull.addTable[i][j]][k] != hull.addTable[i][hull.addTable[j][k]])
                    throw DataError("hull associativity failed");
        }
    }

    // F(t) = act(t,x): homomorphism onto the classes with kernel Per(x).
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t s = 0; s < n; ++s)
            if (cls[(t + s) % n] != hull.addTable[cls[t]][cls[s]])
                throw DataError("orbit map is not a homomorphism");

    for (std::int64_t t = 0; t < n; ++t)
        if (cls[t] == hull.identityIndex) hull.periodSubgroup.push_back(t);

    if (static_cast<std::int64_t>(hull.periodSubgroup.size()) * m != n)
        throw DataError("|hull| * |Per(x)| != |G|");

    hull.axiomsVerified = true;
    return hull;
}

PeriodSubgroup period_subgroup(const Instance& inst, const GaugeSpec& spec, const Point& x,
                               double W) {
    const Group& g = inst.group;
    PeriodSubgroup out;
    if (g.kind() == GroupKind::FiniteCyclic) {
        const std::int64_t n = g.order();
        std::vector<bool> isPeriod(static_cast<std::size_t>(n), false);
        for (std::int64_t t = 0; t < n; ++t) {
            GroupElement e(t);
            if (gauge_eval(inst, spec, act(inst, e, x), x) < kZeroTol) {
                isPeriod[t] = true;
                out.periods.push_back(e);
            }
        }
        // Exact mode: closure under addition and negation.
        for (std::int64_t a = 0; a < n; ++a) {
            if (!isPeriod[a]) continue;
            if (!isPeriod[(n - a) % n]) throw DataError("period set not closed under negation");
            for (std::int64_t b = 0; b < n; ++b)
                if (isPeriod[b] && !isPeriod[(a + b) % n])
                    throw DataError("period set not closed under addition");
        }
        return out;
    }
    double window = W >= 0 ? W : inst.defaultWindow;
    out.windowed = true;
    for (const auto& t : g.windowElements(window)) {
        if (gauge_translate(inst, spec, x, t) < kZeroTol) out.periods.push_back(t);
    }
    return out;
}

}  // namespace apkit
