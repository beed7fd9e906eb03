#include "apkit/detectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

TranslateProfile translate_profile(const Instance& inst, const GaugeSpec& spec, const Point& x,
                                   double W) {
    TranslateProfile prof;
    prof.translates = inst.group.windowElements(W);
    prof.values.reserve(prof.translates.size());
    for (const auto& t : prof.translates) prof.values.push_back(gauge_translate(inst, spec, x, t));
    prof.windowRadius =
        inst.group.kind() == GroupKind::FiniteCyclic ? static_cast<double>(inst.group.order()) : W;
    return prof;
}

namespace {

std::int64_t cyclic_dist(std::int64_t a, std::int64_t n) {
    std::int64_t v = ((a % n) + n) % n;
    return std::min(v, n - v);
}

// Minimal covering radius of the period set over the cyclic group.
std::int64_t cyclic_covering_radius(const std::vector<std::int64_t>& periods, std::int64_t n) {
    std::int64_t worst = 0;
    for (std::int64_t g = 0; g < n; ++g) {
        std::int64_t best = n;
        for (auto p : periods) best = std::min(best, cyclic_dist(g - p, n));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

AlmostPeriodReport almost_periods_from_profile(const Instance& inst, const TranslateProfile& prof,
                                               double eps) {
    if (!(eps > 0)) throw UsageError("eps must be positive");
    const Group& g = inst.group;
    AlmostPeriodReport rep;
    rep.eps = eps;
    rep.windowRadius = prof.windowRadius;
    for (std::size_t i = 0; i < prof.translates.size(); ++i)
        if (prof.values[i] < eps) rep.periods.push_back(prof.translates[i]);
    std::sort(rep.periods.begin(), rep.periods.end());

    const double sentinel = 2 * rep.windowRadius + 1;
    const double h = g.step().toDouble();

    if (g.kind() == GroupKind::FiniteCyclic) {
        const std::int64_t n = g.order();
        std::vector<std::int64_t> ps;
        for (const auto& p : rep.periods) ps.push_back(p.scalar());
        if (ps.size() <= 1) {
            rep.maxGap = sentinel;
            rep.coveringRadius = sentinel;
            rep.relDense = ps.size() == 1 && n == 1 ? Verdict::Pass : Verdict::Fail;
            // n == 1: the single period is the whole group.
            if (n == 1) rep.coveringRadius = 0;
            return rep;
        }
        std::int64_t gap = 0;
        for (std::size_t i = 1; i < ps.size(); ++i) gap = std::max(gap, ps[i] - ps[i - 1]);
        gap = std::max(gap, n - ps.back() + ps.front());
        rep.maxGap = static_cast<double>(gap);
        rep.coveringRadius = static_cast<double>(cyclic_covering_radius(ps, n));
        // Finite model: density demands a witness that is not the whole group.
        rep.relDense = (ps.size() >= 2 || static_cast<std::int64_t>(ps.size()) == n)
                           ? Verdict::Pass
                           : Verdict::Fail;
        return rep;
    }

    rep.windowed = true;
    if (rep.periods.size() <= 1) {
        rep.maxGap = sentinel;
        rep.coveringRadius = sentinel;
        rep.relDense = Verdict::Fail;
        return rep;
    }

    const std::int64_t T = g.stepsFor(prof.windowRadius);
    if (g.dim() == 1) {
        std::vector<std::int64_t> ps;
        ps.reserve(rep.periods.size());
        for (const auto& p : rep.periods) ps.push_back(p.scalar());
        double gap = 0;
        for (std::size_t i = 1; i < ps.size(); ++i)
            gap = std::max(gap, static_cast<double>(ps[i] - ps[i - 1]) * h);
        rep.maxGap = gap;

        // Nearest-period distance per window point, then ring-prefix maxima
        // give the minimal trimmed covering radius.
        std::vector<double> ringMax(static_cast<std::size_t>(T) + 1, 0.0);
        std::size_t k = 0;
        for (std::int64_t v = -T; v <= T; ++v) {
            while (k + 1 < ps.size() && ps[k + 1] <= v) ++k;
            std::int64_t d = std::llabs(v - ps[k]);
            if (k + 1 < ps.size()) d = std::min(d, std::llabs(ps[k + 1] - v));
            auto ring = static_cast<std::size_t>(std::llabs(v));
            ringMax[ring] = std::max(ringMax[ring], static_cast<double>(d) * h);
        }
        std::vector<double> prefix(ringMax.size());
        double run = 0;
        for (std::size_t r = 0; r < ringMax.size(); ++r) {
            run = std::max(run, ringMax[r]);
            prefix[r] = run;
        }
        rep.coveringRadius = sentinel;
        for (std::int64_t r = 0; r <= T; ++r) {
            if (prefix[static_cast<std::size_t>(T - r)] <= static_cast<double>(r) * h + 1e-12) {
                rep.coveringRadius = static_cast<double>(r) * h;
                break;
            }
        }
    } else {
        // Small-window general-dimension fallback.
        double gapWorst = 0;
        std::vector<double> ringMax(static_cast<std::size_t>(T) + 1, 0.0);
        for (const auto& v : prof.translates) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : rep.periods) best = std::min(best, g.metric(v, p));
            gapWorst = std::max(gapWorst, best);
            std::int64_t ring = 0;
            for (auto c : v.c) ring = std::max(ring, std::llabs(c));
            ringMax[static_cast<std::size_t>(ring)] = std::max(ringMax[static_cast<std::size_t>(ring)], best);
        }
        rep.maxGap = gapWorst;
        std::vector<double> prefix(ringMax.size());
        double run = 0;
        for (std::size_t r = 0; r < ringMax.size(); ++r) {
            run = std::max(run, ringMax[r]);
            prefix[r] = run;
        }
        rep.coveringRadius = sentinel;
        for (std::int64_t r = 0; r <= T; ++r) {
            if (prefix[static_cast<std::size_t>(T - r)] <= static_cast<double>(r) * h + 1e-12) {
                rep.coveringRadius = static_cast<double>(r) * h;
                break;
            }
        }
    }
    rep.relDense = rep.coveringRadius <= rep.windowRadius / 2 + 1e-12 ? Verdict::Pass
                                                                      : Verdict::Fail;
    return rep;
}

AlmostPeriodReport almost_periods(const Instance& inst, const GaugeSpec& spec, const Point& x,
                                  double eps, double W) {
    return almost_periods_from_profile(inst, translate_profile(inst, spec, x, W), eps);
}

Verdict relative_density(const Instance& inst, const AlmostPeriodReport& report, double R) {
    if (R > report.windowRadius) throw UsageError("density radius exceeds the window");
    if (R < 0) throw UsageError("density radius must be nonnegative");
    if (inst.group.kind() == GroupKind::FiniteCyclic) {
        const auto n = static_cast<std::size_t>(inst.group.order());
        bool proper = report.periods.size() >= 2 || report.periods.size() == n;
        return proper && report.coveringRadius <= R + 1e-12 ? Verdict::Pass : Verdict::Fail;
    }
    if (report.periods.size() <= 1) return Verdict::Fail;  // sentinel radius
    return report.coveringRadius <= R + 1e-12 ? Verdict::Pass : Verdict::Fail;
}

namespace {

// Exact minimal cover of Z_n by translates of P (bitmask branch and bound,
// n <= 64). Returns the chosen translates.
struct CoverSearch {
    std::int64_t n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> setOf;  // translate f -> bitmask of P+f
    int periodCount = 1;
    std::vector<std::int64_t> best;

    void run(const std::vector<std::int64_t>& periods) {
        periodCount = static_cast<int>(periods.size());
        setOf.assign(static_cast<std::size_t>(n), 0);
        for (std::int64_t f = 0; f < n; ++f) {
            std::uint64_t m = 0;
            for (auto p : periods) m |= 1ULL << ((p + f) % n);
            setOf[static_cast<std::size_t>(f)] = m;
        }
        // Greedy upper bound first.
        std::vector<std::int64_t> greedy;
        std::uint64_t unc = full;
        while (unc) {
            std::int64_t pick = -1;
            int bestCov = -1;
            for (std::int64_t f = 0; f < n; ++f) {
                int cov = std::popcount(setOf[static_cast<std::size_t>(f)] & unc);
                if (cov > bestCov) { bestCov = cov; pick = f; }
            }
            greedy.push_back(pick);
            unc &= ~setOf[static_cast<std::size_t>(pick)];
        }
        best = greedy;
        std::vector<std::int64_t> chosen;
        dfs(full, chosen);
        std::sort(best.begin(), best.end());
    }

    void dfs(std::uint64_t unc, std::vector<std::int64_t>& chosen) {
        if (!unc) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        auto lower = chosen.size() +
                     (static_cast<std::size_t>(std::popcount(unc)) + periodCount - 1) / periodCount;
        if (lower >= best.size()) return;
        int g = std::countr_zero(unc);
        // Candidates are exactly the translates covering g.
        std::vector<std::int64_t> cands;
        for (std::int64_t f = 0; f < n; ++f)
            if (setOf[static_cast<std::size_t>(f)] & (1ULL << g)) cands.push_back(f);
        std::sort(cands.begin(), cands.end(), [&](std::int64_t a, std::int64_t b) {
            int ca = std::popcount(setOf[static_cast<std::size_t>(a)] & unc);
            int cb = std::popcount(setOf[static_cast<std::size_t>(b)] & unc);
            if (ca != cb) return ca > cb;
            return a < b;
        });
        for (auto f : cands) {
            chosen.push_back(f);
            dfs(unc & ~setOf[static_cast<std::size_t>(f)], chosen);
            chosen.pop_back();
        }
    }
};

}  // namespace

FiniteDensityResult finite_relative_density(const Instance& inst,
                                            const AlmostPeriodReport& report) {
    const Group& g = inst.group;
    FiniteDensityResult out;

    if (g.kind() == GroupKind::FiniteCyclic) {
        const std::int64_t n = g.order();
        std::vector<std::int64_t> periods;
        for (const auto& p : report.periods) periods.push_back(p.scalar());
        if (periods.empty()) throw UsageError("report has no periods");

        if (static_cast<std::int64_t>(periods.size()) == n) {
            out.verdict = Verdict::Pass;
            out.cover.push_back(GroupElement(std::int64_t{0}));
            return out;
        }
        if (n <= 64) {
            CoverSearch search;
            search.n = n;
            search.full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
            search.run(periods);
            for (auto f : search.best) out.cover.push_back(GroupElement(f));
        } else {
            // Greedy fallback above the exact-search range.
            std::vector<bool> covered(static_cast<std::size_t>(n), false);
            std::int64_t left = n;
            while (left > 0) {
                std::int64_t pick = -1, bestCov = -1;
                for (std::int64_t f = 0; f < n; ++f) {
                    std::int64_t cov = 0;
                    for (auto p : periods)
                        if (!covered[static_cast<std::size_t>((p + f) % n)]) ++cov;
                    if (cov > bestCov) { bestCov = cov; pick = f; }
                }
                out.cover.push_back(GroupElement(pick));
                for (auto p : periods) {
                    auto idx = static_cast<std::size_t>((p + pick) % n);
                    if (!covered[idx]) { covered[idx] = true; --left; }
                }
            }
            std::sort(out.cover.begin(), out.cover.end());
        }
        // Proper witness required: F covering with fewer than n translates,
        // unless the period set is already everything.
        out.verdict = static_cast<std::int64_t>(out.cover.size()) < n || n == 1 ? Verdict::Pass
                                                                                : Verdict::Fail;
        return out;
    }

    // Windowed greedy cover of the edge-trimmed window, d = 1.
    if (g.dim() != 1) throw UsageError("windowed finite density implemented for 1-d groups");
    out.windowed = true;
    const std::int64_t T = g.stepsFor(report.windowRadius);
    double R = report.relDense == Verdict::Pass ? report.coveringRadius : report.windowRadius / 2;
    const std::int64_t trim = T - g.stepsFor(R);

    std::vector<std::int64_t> periods;
    for (const auto& p : report.periods) periods.push_back(p.scalar());

    std::vector<bool> covered(static_cast<std::size_t>(2 * trim + 1), false);
    std::int64_t left = 2 * trim + 1;
    auto coverWith = [&](std::int64_t f, bool apply) {
        std::int64_t cnt = 0;
        for (auto p : periods) {
            std::int64_t v = p + f;
            if (v < -trim || v > trim) continue;
            auto idx = static_cast<std::size_t>(v + trim);
            if (!covered[idx]) {
                ++cnt;
                if (apply) { covered[idx] = true; --left; }
            }
        }
        return cnt;
    };

    while (left > 0) {
        // Leftmost uncovered point; candidates are translates placing some
        // period on it.
        std::int64_t v = 0;
        for (std::int64_t u = -trim; u <= trim; ++u)
            if (!covered[static_cast<std::size_t>(u + trim)]) { v = u; break; }
        std::int64_t pick = v;  // f = v - 0 always works since 0 is a period
        std::int64_t bestCov = -1;
        for (auto p : periods) {
            std::int64_t f = v - p;
            if (f < -T || f > T) continue;
            std::int64_t cov = coverWith(f, false);
            if (cov > bestCov || (cov == bestCov && f < pick)) { bestCov = cov; pick = f; }
        }
        coverWith(pick, true);
        out.cover.push_back(GroupElement(pick));
    }
    std::sort(out.cover.begin(), out.cover.end());
    out.verdict = Verdict::Pass;
    return out;
}

EpsNet greedy_eps_net(const Instance& inst, const GaugeSpec& spec, const Point& x, double eps,
                      double W) {
    if (!(eps > 0)) throw UsageError("eps must be positive");
    EpsNet net;
    net.eps = eps;
    auto translates = inst.group.windowElements(W);
    net.assignments.reserve(translates.size());
    std::vector<int> searchOrder;  // center indices, most recently matched first

    for (const auto& t : translates) {
        int assigned = -1;
        for (std::size_t oi = 0; oi < searchOrder.size(); ++oi) {
            int ci = searchOrder[oi];
            double dv = gauge_translate_pair(inst, spec, x, t, net.centers[ci], eps);
            if (dv < eps) {
                assigned = ci;
                if (oi > 0) {
                    searchOrder.erase(searchOrder.begin() + static_cast<std::ptrdiff_t>(oi));
                    searchOrder.insert(searchOrder.begin(), ci);
                }
                break;
            }
        }
        if (assigned < 0) {
            assigned = static_cast<int>(net.centers.size());
            net.centers.push_back(t);
            searchOrder.insert(searchOrder.begin(), assigned);
        }
        net.assignments.push_back(assigned);
    }
    return net;
}

bool net_period_cover_check(const Instance& inst, const GaugeSpec& spec, const Point& x,
                            const EpsNet& net, double eps, double tol, double W) {
    const Group& g = inst.group;
    const double threshold = 2 * eps + tol;
    if (g.kind() == GroupKind::FiniteCyclic) {
        auto prof = translate_profile(inst, spec, x, W);
        const std::int64_t n = g.order();
        for (std::int64_t t = 0; t < n; ++t) {
            bool hit = false;
            for (const auto& c : net.centers) {
                std::int64_t u = ((t - c.scalar()) % n + n) % n;
                if (prof.values[static_cast<std::size_t>(u)] < threshold) { hit = true; break; }
            }
            if (!hit) return false;
        }
        return true;
    }
    if (g.dim() != 1) throw UsageError("net cover check implemented for 1-d groups");
    auto prof = translate_profile(inst, spec, x, 2 * W);
    const std::int64_t T2 = g.stepsFor(2 * W);
    const std::int64_t T = g.stepsFor(W);
    for (std::int64_t t = -T; t <= T; ++t) {
        bool hit = false;
        for (const auto& c : net.centers) {
            std::int64_t u = t - c.scalar();
            if (u < -T2 || u > T2) continue;
            if (prof.values[static_cast<std::size_t>(u + T2)] < threshold) { hit = true; break; }
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<double> default_eps_grid(const TranslateProfile& prof) {
    double diam = 0;
    for (double v : prof.values) diam = std::max(diam, v);
    if (!(diam > 0)) diam = 1.0;
    return {diam, diam / 2, diam / 4, diam / 8, diam / 16};
}

Classification classify(const Instance& inst, const GaugeSpec& spec, const Point& x,
                        const std::vector<double>& epsGrid, double W) {
    const Group& g = inst.group;
    Classification cls;
    cls.exactMode = g.kind() == GroupKind::FiniteCyclic;
    cls.declaredComplete = inst.declaredComplete;
    cls.flags.push_back(cls.exactMode ? "EXACT" : "WINDOWED");

    GaugeSpec eff = spec;
    eff.window = W;
    TranslateProfile prof = translate_profile(inst, eff, x, W);
    std::vector<double> grid = epsGrid.empty() ? default_eps_grid(prof) : epsGrid;
    if (grid.empty()) throw UsageError("eps grid is empty");

    cls.bohr = cls.pseudoBochner = cls.bochner = Verdict::Pass;
    for (double eps : grid) {
        EpsVerdicts ev;
        ev.eps = eps;
        AlmostPeriodReport rep = almost_periods_from_profile(inst, prof, eps);
        ev.bohr = rep.relDense;
        ev.coveringRadius = rep.coveringRadius;
        ev.periodCount = rep.periods.size();

        if (cls.exactMode) {
            FiniteDensityResult fd = finite_relative_density(inst, rep);
            ev.pseudoBochner = fd.verdict;
            ev.netSize = fd.cover.size();
        } else {
            EpsNet a = greedy_eps_net(inst, eff, x, eps, W);
            EpsNet b = greedy_eps_net(inst, eff, x, eps, 2 * W);
            ev.netSize = a.centers.size();
            ev.netSizeGrown = b.centers.size();
            ev.pseudoBochner =
                a.centers.size() == b.centers.size() ? Verdict::Pass : Verdict::Fail;
        }
        ev.bochner = (ev.pseudoBochner == Verdict::Pass && inst.declaredComplete)
                         ? Verdict::Pass
                         : Verdict::Fail;

        if (ev.bohr != Verdict::Pass) cls.bohr = Verdict::Fail;
        if (ev.pseudoBochner != Verdict::Pass) cls.pseudoBochner = Verdict::Fail;
        if (ev.bochner != Verdict::Pass) cls.bochner = Verdict::Fail;
        cls.perEps.push_back(ev);
    }
    return cls;
}

}  // namespace apkit
