#include "apkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

// Independent exhaustive minimal cover of Z_n by translates of P: plain
// pivot-driven depth-first search over subsets, kept separate from the
// detector-side search on purpose so the two witnesses cross-check each
// other.
struct ExhaustiveCover {
    std::int64_t n;
    std::vector<std::uint64_t> translateMask;
    std::size_t bestSize;
    std::vector<std::int64_t> best;
    std::size_t periodCount;

    explicit ExhaustiveCover(const std::vector<std::int64_t>& periods, std::int64_t order)
        : n(order), periodCount(periods.size()) {
        translateMask.assign(static_cast<std::size_t>(n), 0);
        for (std::int64_t f = 0; f < n; ++f) {
            std::uint64_t m = 0;
            for (auto p : periods) m |= 1ULL << ((p + f) % n);
            translateMask[static_cast<std::size_t>(f)] = m;
        }
        bestSize = static_cast<std::size_t>(n) + 1;
        std::vector<std::int64_t> chosen;
        std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
        search(full, chosen);
        std::sort(best.begin(), best.end());
    }

    void search(std::uint64_t uncovered, std::vector<std::int64_t>& chosen) {
        if (uncovered == 0) {
            if (chosen.size() < bestSize) {
                bestSize = chosen.size();
                best = chosen;
            }
            return;
        }
        std::size_t need =
            (static_cast<std::size_t>(std::popcount(uncovered)) + periodCount - 1) / periodCount;
        if (chosen.size() + need >= bestSize) return;
        int pivot = std::countr_zero(uncovered);
        for (std::int64_t f = 0; f < n; ++f) {
            if (!(translateMask[static_cast<std::size_t>(f)] & (1ULL << pivot))) continue;
            chosen.push_back(f);
            search(uncovered & ~translateMask[static_cast<std::size_t>(f)], chosen);
            chosen.pop_back();
        }
    }
};

std::int64_t cyc_dist(std::int64_t a, std::int64_t n) {
    std::int64_t v = ((a % n) + n) % n;
    return std::min(v, n - v);
}

}  // namespace

OracleVerdicts oracle_classify(const FiniteFixture& fix, int xIndex, const Rational& eps) {
    if (fix.n > 64) throw UsageError("oracle covers groups of order <= 64");
    if (!(eps > Rational(0))) throw UsageError("eps must be positive");
    const std::int64_t n = fix.n;

    std::vector<std::int64_t> periods;
    for (std::int64_t t = 0; t < n; ++t)
        if (fix.gauge(fix.act(t, xIndex), xIndex) < eps) periods.push_back(t);

    OracleVerdicts out;
    out.periodCount = periods.size();

    ExhaustiveCover cover(periods, n);
    out.minimalF = cover.best;

    std::int64_t worst = 0;
    for (std::int64_t g = 0; g < n; ++g) {
        std::int64_t bestDist = n;
        for (auto p : periods) bestDist = std::min(bestDist, cyc_dist(g - p, n));
        worst = std::max(worst, bestDist);
    }
    out.coveringRadius = worst;

    // Density with a proper witness: P + F = G with F a proper subset, or P
    // already everything. In a finite group this is the only non-vacuous
    // reading; it is equivalent to |P| >= 2 and the exhaustive cover verifies
    // the witness side independently.
    bool dense = static_cast<std::int64_t>(periods.size()) == n ||
                 (periods.size() >= 2 && static_cast<std::int64_t>(cover.best.size()) < n);
    if (periods.size() >= 2 && static_cast<std::int64_t>(cover.best.size()) >= n && n > 1)
        throw DataError("cover search found no proper witness for a multi-element period set");
    out.bohr = dense ? Verdict::Pass : Verdict::Fail;
    out.pseudoBochner = dense ? Verdict::Pass : Verdict::Fail;

    // Greedy cover of the orbit by diameter-<eps cliques (total boundedness
    // statistic at this level).
    {
        std::vector<int> orbit;
        for (std::int64_t t = 0; t < n; ++t) {
            int q = fix.act(t, xIndex);
            if (std::find(orbit.begin(), orbit.end(), q) == orbit.end()) orbit.push_back(q);
        }
        std::vector<std::vector<int>> cliques;
        for (int q : orbit) {
            bool placed = false;
            for (auto& c : cliques) {
                bool fits = true;
                for (int r : c)
                    if (!(fix.gauge(q, r) < eps)) { fits = false; break; }
                if (fits) { c.push_back(q); placed = true; break; }
            }
            if (!placed) cliques.push_back({q});
        }
        out.orbitNetSize = cliques.size();
    }

    if (fix.exactlyInvariant()) {
        // Bochner via definitions: the orbit must cover with fewer than |G|
        // diameter-<eps sets (a pair of close translates), plus completeness,
        // which a finite fixture always has.
        bool pairClose = false;
        for (std::int64_t t = 0; t < n && !pairClose; ++t)
            for (std::int64_t s = t + 1; s < n; ++s)
                if (fix.gauge(fix.act(t, xIndex), fix.act(s, xIndex)) < eps) {
                    pairClose = true;
                    break;
                }
        out.bochner = (n == 1 || pairClose) ? Verdict::Pass : Verdict::Fail;
    }
    return out;
}

HullGroup oracle_hull(const FiniteFixture& fix, int xIndex) {
    const std::int64_t n = fix.n;
    std::vector<int> orbitPoint(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) orbitPoint[static_cast<std::size_t>(t)] = fix.act(t, xIndex);

    // Gauge-0 classes over translates (rational, exact).
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> reps;
    for (std::int64_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (fix.gauge(orbitPoint[static_cast<std::size_t>(t)],
                          orbitPoint[static_cast<std::size_t>(reps[c])])
                    .isZero()) {
                cls[static_cast<std::size_t>(t)] = static_cast<int>(c);
                break;
            }
        }
        if (cls[static_cast<std::size_t>(t)] < 0) {
            cls[static_cast<std::size_t>(t)] = static_cast<int>(reps.size());
            reps.push_back(t);
        }
    }

    const int m = static_cast<int>(reps.size());
    HullGroup hull;
    hull.elements = reps;
    hull.identityIndex = cls[0];
    hull.addTable.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            hull.addTable[i][j] = cls[static_cast<std::size_t>((reps[i] + reps[j]) % n)];

    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t s = 0; s < n; ++s)
            if (cls[static_cast<std::size_t>((t + s) % n)] !=
                hull.addTable[cls[static_cast<std::size_t>(t)]][cls[static_cast<std::size_t>(s)]])
                throw DataError("oracle: induced addition not well defined");

    for (int i = 0; i < m; ++i) {
        if (hull.addTable[i][hull.identityIndex] != i) throw DataError("oracle: identity axiom");
        bool inv = false;
        for (int j = 0; j < m; ++j)
            if (hull.addTable[i][j] == hull.identityIndex) inv = true;
        if (!inv) throw DataError("oracle: inverse axiom");
        for (int j = 0; j < m; ++j) {
            if (hull.addTable[i][j] != hull.addTable[j][i]) throw DataError("oracle: commutativity");
            for (int k = 0; k < m; ++k)
                if (hull.addTable[hull.addTable[i][j]][k] != hull.addTable[i][hull.addTable[j][k]])
                    throw DataError("oracle: associativity");
        }
    }

    for (std::int64_t t = 0; t < n; ++t)
        if (cls[static_cast<std::size_t>(t)] == hull.identityIndex)
            hull.periodSubgroup.push_back(t);
    if (static_cast<std::int64_t>(hull.periodSubgroup.size()) * m != n)
        throw DataError("oracle: |hull| * |Per| != |G|");
    hull.axiomsVerified = true;
    return hull;
}

FiniteFixture make_random_fixture(std::uint64_t seed, std::int64_t n, bool invariant) {
    if (n < 1 || n > 64) throw UsageError("fixture order must lie in [1, 64]");
    std::mt19937_64 rng(seed);

    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::int64_t m = divisors[rng() % divisors.size()];

    FiniteFixture fix;
    fix.n = n;
    fix.numPoints = static_cast<int>(m);
    fix.actionTable.resize(static_cast<std::size_t>(n) * m);
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t p = 0; p < m; ++p)
            fix.actionTable[static_cast<std::size_t>(t) * m + p] =
                static_cast<int>((p + t) % m);

    // Shortest-path metric of a random connected weighted graph.
    const std::int64_t INF = 1'000'000'000;
    std::vector<std::int64_t> d(static_cast<std::size_t>(m) * m, INF);
    auto at = [&](std::int64_t i, std::int64_t j) -> std::int64_t& {
        return d[static_cast<std::size_t>(i) * m + j];
    };
    for (std::int64_t i = 0; i < m; ++i) at(i, i) = 0;
    auto addEdge = [&](std::int64_t i, std::int64_t j, std::int64_t w) {
        if (i == j) return;
        at(i, j) = std::min(at(i, j), w);
        at(j, i) = std::min(at(j, i), w);
    };
    for (std::int64_t i = 1; i < m; ++i)
        addEdge(i, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(i)),
                1 + static_cast<std::int64_t>(rng() % 9));
    for (std::int64_t e = 0; e < m / 2; ++e)
        addEdge(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)),
                static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)),
                1 + static_cast<std::int64_t>(rng() % 9));
    for (std::int64_t k = 0; k < m; ++k)
        for (std::int64_t i = 0; i < m; ++i)
            for (std::int64_t j = 0; j < m; ++j)
                at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));

    fix.gaugeTable.assign(static_cast<std::size_t>(m) * m, Rational(0));
    if (invariant) {
        // Group averaging: depends only on the shift class, hence exactly
        // invariant under the cyclic action.
        for (std::int64_t i = 0; i < m; ++i)
            for (std::int64_t j = 0; j < m; ++j) {
                Rational acc(0);
                for (std::int64_t k = 0; k < m; ++k)
                    acc += Rational(at((i + k) % m, (j + k) % m));
                fix.gauge(static_cast<int>(i), static_cast<int>(j)) = acc / Rational(m);
            }
    } else {
        for (std::int64_t i = 0; i < m; ++i)
            for (std::int64_t j = 0; j < m; ++j)
                fix.gauge(static_cast<int>(i), static_cast<int>(j)) = Rational(at(i, j));
    }
    fix.validate();
    return fix;
}

FiniteFixture make_noninvariant_counterexample() {
    FiniteFixture fix;
    fix.n = 3;
    fix.numPoints = 3;
    fix.actionTable = {0, 1, 2, 1, 2, 0, 2, 0, 1};
    fix.gaugeTable.assign(9, Rational(0));
    fix.gauge(0, 1) = fix.gauge(1, 0) = Rational(1);
    fix.gauge(0, 2) = fix.gauge(2, 0) = Rational(1);
    fix.gauge(1, 2) = fix.gauge(2, 1) = Rational(1, 100);
    fix.validate();
    if (fix.exactlyInvariant()) throw DataError("counterexample fixture is unexpectedly invariant");
    return fix;
}

std::vector<Rational> interesting_eps_levels(const FiniteFixture& fix, int xIndex) {
    std::vector<Rational> values;
    for (std::int64_t t = 0; t < fix.n; ++t)
        for (std::int64_t s = 0; s < fix.n; ++s) {
            Rational v = fix.gauge(fix.act(t, xIndex), fix.act(s, xIndex));
            if (!v.isZero()) values.push_back(v);
        }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Rational> levels;
    if (values.empty()) {
        levels.emplace_back(1);
        return levels;
    }
    levels.push_back(values.front() / Rational(2));
    for (std::size_t i = 0; i < values.size(); ++i) {
        levels.push_back(values[i]);
        if (i + 1 < values.size())
            levels.push_back((values[i] + values[i + 1]) / Rational(2));
    }
    levels.push_back(values.back() + Rational(1));
    return levels;
}

Instance make_table_instance(std::shared_ptr<const FiniteFixture> fix) {
    Instance inst;
    inst.group = Group::finiteCyclic(fix->n);
    inst.kind = PointKind::Table;
    GaugeSpec spec;
    spec.name = "table";
    spec.kind = GaugeKind::Pseudometric;
    spec.form = GaugeForm::Table;
    spec.window = static_cast<double>(fix->n);
    inst.gauges.push_back(spec);
    inst.declaredComplete = true;  // finite models are complete
    inst.defaultWindow = static_cast<double>(fix->n);
    inst.fixture = std::move(fix);
    return inst;
}

}  // namespace apkit
