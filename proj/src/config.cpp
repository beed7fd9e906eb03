#include "apkit/config.hpp"

#include <algorithm>
#include <fstream>

#include "apkit/errors.hpp"
#include "apkit/generators.hpp"

namespace apkit {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw UsageError(std::string("config missing field: ") + key);
    return *it;
}

Group group_from_json(const json& j) {
    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "Zn") return Group::finiteCyclic(need(j, "n").get<std::int64_t>());
    if (kind == "Z") return Group::latticeWindow(1, need(j, "window").get<std::int64_t>());
    if (kind == "Zd")
        return Group::latticeWindow(need(j, "d").get<int>(), need(j, "window").get<std::int64_t>());
    if (kind == "R") {
        Rational h = rational_from_json(need(j, "h"));
        return Group::fineLattice(h, need(j, "window").get<double>());
    }
    throw UsageError("unknown group kind: " + kind);
}

Point point_from_json(const Group& g, const json& inst, PointKind kind, std::uint64_t /*seed*/) {
    const json& gen = need(inst, "generator");
    std::string type = need(gen, "type").get<std::string>();

    if (type == "trig") {
        auto freqs = need(gen, "frequencies").get<std::vector<double>>();
        auto amps = need(gen, "amplitudes").get<std::vector<double>>();
        std::int64_t domain = gen.value("domain", g.radiusSteps());
        return make_trig_function(g, freqs, amps, domain);
    }
    if (type == "values") {
        SampledFunction f;
        f.domainRadius = gen.value("domain", g.radiusSteps());
        f.codomainDim = gen.value("dim", 1);
        f.codomain = gen.value("codomain", std::string("euclidean")) == "torus"
                         ? CodomainMetric::Torus
                         : CodomainMetric::Euclidean;
        f.values = need(gen, "values").get<std::vector<double>>();
        validate_function(g, f);
        return f;
    }
    if (type == "sturmian") {
        std::int64_t W = gen.value("window", g.radiusSteps());
        return make_sturmian_set(need(gen, "slope").get<double>(), gen.value("intercept", 0.0), W);
    }
    if (type == "pointset") {
        std::vector<GroupElement> elems;
        for (const auto& v : need(gen, "elements")) elems.emplace_back(v.get<std::int64_t>());
        return normalize_point_set(std::move(elems), gen.value("window", std::int64_t{-1}));
    }
    if (type == "comb") {
        std::int64_t W = gen.value("window", g.radiusSteps());
        return make_comb(need(gen, "period").get<std::int64_t>(),
                         rational_from_json(gen.value("weight", json(1))), W);
    }
    if (type == "counterexample") {
        std::int64_t W = gen.value("window", g.radiusSteps());
        return counterexample_measure(need(gen, "nmax").get<int>(), W);
    }
    if (type == "measure") {
        std::vector<GroupElement> support;
        std::vector<Rational> weights;
        for (const auto& v : need(gen, "support")) support.emplace_back(v.get<std::int64_t>());
        for (const auto& v : need(gen, "weights")) weights.push_back(rational_from_json(v));
        return normalize_measure(std::move(support), std::move(weights));
    }
    (void)kind;
    throw UsageError("unknown generator type: " + type);
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw UsageError("rational array must be [num, den]");
        return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number()) return Rational::fromDoubleExact(j.get<double>());
    throw UsageError("expected a number or [num, den] pair");
}

TestFn testfn_from_json(const json& j) {
    TestFn fn;
    std::string kind = j.value("kind", std::string("hat"));
    if (kind == "hat") fn.kind = TestFnKind::Hat;
    else if (kind == "indicator") fn.kind = TestFnKind::Indicator;
    else throw UsageError("unknown test function kind: " + kind);
    fn.center = rational_from_json(j.value("center", json(0)));
    fn.radius = rational_from_json(need(j, "radius"));
    fn.height = rational_from_json(j.value("height", json(1)));
    if (!(fn.radius > Rational(0))) throw UsageError("test function radius must be positive");
    return fn;
}

GaugeSpec gauge_from_json(const json& j) {
    GaugeSpec spec;
    spec.name = need(j, "name").get<std::string>();
    std::string form = need(j, "form").get<std::string>();
    if (form == "sup") spec.form = GaugeForm::Sup;
    else if (form == "stepanov") spec.form = GaugeForm::Stepanov;
    else if (form == "autocorrelation") spec.form = GaugeForm::Autocorrelation;
    else if (form == "measure_norm") spec.form = GaugeForm::MeasureNorm;
    else if (form == "vague") spec.form = GaugeForm::Vague;
    else if (form == "product") spec.form = GaugeForm::Product;
    else throw UsageError("unknown gauge form: " + form);

    spec.kind = spec.form == GaugeForm::Vague || spec.form == GaugeForm::Product
                    ? GaugeKind::Family
                    : GaugeKind::Pseudometric;
    if (j.contains("kind")) {
        std::string k = j["kind"].get<std::string>();
        if (k == "metric") spec.kind = GaugeKind::Metric;
        else if (k == "pseudometric") spec.kind = GaugeKind::Pseudometric;
        else if (k == "family") spec.kind = GaugeKind::Family;
        else throw UsageError("unknown gauge kind: " + k);
    }
    spec.window = j.value("window", -1.0);
    spec.stepCells = j.value("cells", std::int64_t{1});
    spec.stepP = j.value("p", 1.0);
    spec.autocorrRadius = j.value("radius", std::int64_t{0});
    spec.normCells = j.value("cells", std::int64_t{1});
    if (j.contains("testFunctions"))
        for (const auto& t : j["testFunctions"]) spec.testFns.push_back(testfn_from_json(t));
    if ((spec.form == GaugeForm::Vague || spec.form == GaugeForm::Product) && spec.testFns.empty())
        throw UsageError("gauge family needs a test function list");
    return spec;
}

RunConfig config_from_json(const json& j) {
    if (j.value("schema", std::string()) != "apkit/1")
        throw UsageError("config schema must be \"apkit/1\"");
    RunConfig cfg;
    cfg.instance.group = group_from_json(need(j, "group"));

    const json& inst = need(j, "instance");
    std::string pk = need(inst, "pointKind").get<std::string>();
    if (pk == "function") cfg.instance.kind = PointKind::Function;
    else if (pk == "measure") cfg.instance.kind = PointKind::Measure;
    else if (pk == "pointset") cfg.instance.kind = PointKind::Set;
    else throw UsageError("unknown pointKind: " + pk);
    cfg.instance.declaredComplete = inst.value("declaredComplete", false);

    for (const auto& gj : need(j, "gauges")) cfg.instance.gauges.push_back(gauge_from_json(gj));
    if (cfg.instance.gauges.empty()) throw UsageError("config needs at least one gauge");

    const json& an = j.contains("analysis") ? j["analysis"] : json::object();
    cfg.analysisGauge = an.value("gauge", cfg.instance.gauges.front().name);
    cfg.window = an.value("window", -1.0);
    cfg.rMax = an.value("rMax", 0.0);
    if (an.contains("epsGrid")) {
        cfg.epsGrid = an["epsGrid"].get<std::vector<double>>();
        for (double e : cfg.epsGrid)
            if (!(e > 0)) throw UsageError("eps grid entries must be positive");
        // Strictly sorted in either direction; normalized descending.
        auto sorted = cfg.epsGrid;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw UsageError("eps grid entries must be distinct");
        bool asc = std::is_sorted(cfg.epsGrid.begin(), cfg.epsGrid.end());
        bool desc = std::is_sorted(cfg.epsGrid.begin(), cfg.epsGrid.end(), std::greater<>());
        if (!asc && !desc) throw UsageError("eps grid must be sorted");
        cfg.epsGrid = sorted;
    }

    cfg.instance.defaultWindow = cfg.window >= 0
                                     ? cfg.window
                                     : static_cast<double>(cfg.instance.group.radiusSteps()) *
                                           cfg.instance.group.step().toDouble();
    if (cfg.window < 0) cfg.window = cfg.instance.defaultWindow;

    cfg.outDir = j.value("out", std::string("out"));
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.exact = j.value("exact", cfg.instance.group.kind() == GroupKind::FiniteCyclic);

    cfg.point = point_from_json(cfg.instance.group, inst, cfg.instance.kind, cfg.seed);

    // The analysis gauge must exist.
    cfg.instance.gaugeByName(cfg.analysisGauge);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config field has wrong type: ") + e.what());
    }
}

}  // namespace apkit
