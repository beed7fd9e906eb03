#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apkit/config.hpp"
#include "apkit/constructions.hpp"
#include "apkit/detectors.hpp"
#include "apkit/errors.hpp"
#include "apkit/generators.hpp"
#include "apkit/oracle.hpp"
#include "apkit/report.hpp"

namespace {

struct CommonOpts {
    std::string configPath;
    std::vector<double> eps;
    double window = -1;
    std::string outDir;
    bool exact = false;
    std::int64_t seed = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needsConfig = true) {
    auto* opt = cmd->add_option("--config", o.configPath, "JSON run configuration");
    if (needsConfig) opt->required();
    cmd->add_option("--eps", o.eps, "eps grid override");
    cmd->add_option("--window", o.window, "analysis window override");
    cmd->add_option("--out", o.outDir, "output directory override");
    cmd->add_flag("--exact", o.exact, "require exact finite mode");
    cmd->add_option("--seed", o.seed, "seed override");
}

apkit::RunConfig load(const CommonOpts& o) {
    apkit::RunConfig cfg = apkit::load_config(o.configPath);
    if (!o.eps.empty()) cfg.epsGrid = o.eps;
    if (o.window >= 0) cfg.window = o.window;
    if (!o.outDir.empty()) cfg.outDir = o.outDir;
    if (o.exact) cfg.exact = true;
    if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
    if (cfg.exact && cfg.instance.group.kind() != apkit::GroupKind::FiniteCyclic)
        throw apkit::UsageError("exact mode requires a finite cyclic group");
    return cfg;
}

int run_analyze(const CommonOpts& o) {
    apkit::RunConfig cfg = load(o);
    const auto& spec = cfg.instance.gaugeByName(cfg.analysisGauge);
    apkit::Classification cls =
        apkit::classify(cfg.instance, spec, cfg.point, cfg.epsGrid, cfg.window);

    apkit::GaugeSpec eff = spec;
    eff.window = cfg.window;
    apkit::TranslateProfile prof =
        apkit::translate_profile(cfg.instance, eff, cfg.point, cfg.window);
    std::vector<double> grid = cfg.epsGrid.empty() ? apkit::default_eps_grid(prof) : cfg.epsGrid;

    apkit::write_json_file(cfg.outDir + "/classification.json",
                           apkit::classification_to_json(cls, spec.name, cfg.window));
    apkit::write_text_file(cfg.outDir + "/periods.csv", apkit::periods_csv(grid, prof));
    std::cout << "bohr=" << apkit::verdict_name(cls.bohr)
              << " pseudoBochner=" << apkit::verdict_name(cls.pseudoBochner)
              << " bochner=" << apkit::verdict_name(cls.bochner) << "\n";
    return 0;
}

int run_net(const CommonOpts& o) {
    apkit::RunConfig cfg = load(o);
    const auto& spec = cfg.instance.gaugeByName(cfg.analysisGauge);
    apkit::GaugeSpec eff = spec;
    eff.window = cfg.window;
    apkit::TranslateProfile prof =
        apkit::translate_profile(cfg.instance, eff, cfg.point, cfg.window);
    std::vector<double> grid = cfg.epsGrid.empty() ? apkit::default_eps_grid(prof) : cfg.epsGrid;
    double eps = grid.front();
    apkit::EpsNet net = apkit::greedy_eps_net(cfg.instance, eff, cfg.point, eps, cfg.window);
    apkit::write_json_file(cfg.outDir + "/net.json", apkit::net_to_json(net));
    std::cout << "centers=" << net.centers.size() << " eps=" << eps << "\n";
    return 0;
}

int run_hull(const CommonOpts& o) {
    apkit::RunConfig cfg = load(o);
    if (cfg.instance.group.kind() != apkit::GroupKind::FiniteCyclic)
        throw apkit::UsageError("hull construction requires a finite cyclic group");
    const auto& spec = cfg.instance.gaugeByName(cfg.analysisGauge);
    apkit::HullGroup hull = apkit::build_hull_group(cfg.instance, spec, cfg.point);
    apkit::write_json_file(cfg.outDir + "/hull.json", apkit::hull_to_json(hull));
    std::cout << "order=" << hull.elements.size()
              << " periods=" << hull.periodSubgroup.size() << "\n";
    return 0;
}

int run_counterexample(int nMax, std::int64_t window, const std::string& outDir) {
    apkit::LayeredReport rep = apkit::verify_layered_measure(nMax, window);
    apkit::write_json_file(outDir + "/counterexample.json", apkit::layered_report_to_json(rep));

    // Almost-period listing under the vague gauge at the deepest level.
    if (nMax >= 1) {
        apkit::Group g = apkit::Group::latticeWindow(1, 2 * window);
        apkit::PointMeasure mu = apkit::counterexample_measure(nMax, 2 * window);
        apkit::TestFn hat;
        hat.kind = apkit::TestFnKind::Hat;
        hat.radius = apkit::Rational(apkit::pow5(nMax));
        std::string csv = "t,vagueGauge\n";
        for (std::int64_t t = -window; t <= window; ++t) {
            apkit::PointMeasure shifted = mu;
            for (auto& e : shifted.support) e = apkit::GroupElement(e.scalar() + t);
            apkit::Rational v = apkit::vague_gauge(g, shifted, mu, std::span(&hat, 1));
            csv += std::to_string(t) + "," + v.toString() + "\n";
        }
        apkit::write_text_file(outDir + "/almost_periods.csv", csv);
    }
    std::cout << (rep.allHold ? "all rows PASS" : "ROW FAILURES") << " rows=" << rep.rows.size()
              << "\n";
    return rep.allHold ? 0 : 1;
}

int run_oracle_suite(int count, std::int64_t maxN, std::uint64_t seed) {
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        std::int64_t n = 1 + static_cast<std::int64_t>(s % static_cast<std::uint64_t>(maxN));
        auto fix = std::make_shared<apkit::FiniteFixture>(apkit::make_random_fixture(s, n, true));
        apkit::Instance inst = apkit::make_table_instance(fix);
        const auto& spec = inst.gauges.front();
        apkit::TablePoint x{0};

        bool ok = true;
        for (const auto& eps : apkit::interesting_eps_levels(*fix, 0)) {
            apkit::OracleVerdicts ov = apkit::oracle_classify(*fix, 0, eps);
            if (!ov.bochner || ov.bohr != ov.pseudoBochner || ov.bohr != *ov.bochner) ok = false;
            apkit::Classification det =
                apkit::classify(inst, spec, x, {eps.toDouble()}, static_cast<double>(fix->n));
            if (det.bohr != ov.bohr || det.pseudoBochner != ov.pseudoBochner ||
                det.bochner != *ov.bochner)
                ok = false;
        }
        apkit::HullGroup a = apkit::oracle_hull(*fix, 0);
        apkit::HullGroup b = apkit::build_hull_group(inst, spec, x);
        if (a.elements != b.elements || a.addTable != b.addTable ||
            a.periodSubgroup != b.periodSubgroup)
            ok = false;
        if (!ok) {
            ++failures;
            std::cout << "fixture " << i << " (n=" << n << "): MISMATCH\n";
        }
    }
    std::cout << "oracle-suite: " << (count - failures) << "/" << count << " fixtures agree\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost periodicity toolkit"};
    app.require_subcommand(1);

    CommonOpts analyzeOpts, netOpts, hullOpts;
    auto* analyze = app.add_subcommand("analyze", "classify a point and write reports");
    add_common(analyze, analyzeOpts);
    auto* net = app.add_subcommand("net", "greedy eps-net over orbit translates");
    add_common(net, netOpts);
    auto* hull = app.add_subcommand("hull", "finite hull group with axiom certificate");
    add_common(hull, hullOpts);

    int ceNMax = 3;
    std::int64_t ceWindow = 3125;
    std::string ceOut = "out";
    auto* ce = app.add_subcommand("counterexample", "layered-measure verification table");
    ce->add_option("--nmax", ceNMax, "deepest level")->check(CLI::Range(0, 20));
    ce->add_option("--window", ceWindow, "window radius");
    ce->add_option("--out", ceOut, "output directory");

    int osCount = 200;
    std::int64_t osMaxN = 64;
    std::uint64_t osSeed = 1;
    auto* os = app.add_subcommand("oracle-suite", "random-fixture agreement battery");
    os->add_option("--count", osCount, "number of fixtures");
    os->add_option("--max-n", osMaxN, "largest group order")->check(CLI::Range(1, 64));
    os->add_option("--seed", osSeed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << apkit::error_diagnostic("usage", e.what());
        return 2;
    }

    try {
        if (*analyze) return run_analyze(analyzeOpts);
        if (*net) return run_net(netOpts);
        if (*hull) return run_hull(hullOpts);
        if (*ce) return run_counterexample(ceNMax, ceWindow, ceOut);
        if (*os) return run_oracle_suite(osCount, osMaxN, osSeed);
    } catch (const apkit::UsageError& e) {
        std::cerr << apkit::error_diagnostic("usage", e.what());
        return 2;
    } catch (const apkit::ResourceError& e) {
        std::cerr << apkit::error_diagnostic("resource", e.what());
        return 3;
    } catch (const apkit::ArithmeticError& e) {
        std::cerr << apkit::error_diagnostic("arithmetic", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::cerr << apkit::error_diagnostic("internal", e.what());
        return 1;
    }
    return 2;
}
