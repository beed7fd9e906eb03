#include "apkit/report.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

OrderedJson element_json(const GroupElement& e) {
    if (e.c.size() == 1) return OrderedJson(e.c[0]);
    return OrderedJson(e.c);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw ArithmeticError("double formatting failed");
    return std::string(buf, ptr);
}

OrderedJson classification_to_json(const Classification& cls, const std::string& gaugeName,
                                   double window) {
    OrderedJson j;
    j["schema"] = "apkit/1";
    j["kind"] = "classification";
    j["gauge"] = gaugeName;
    j["window"] = window;
    j["mode"] = cls.exactMode ? "exact" : "windowed";
    j["declaredComplete"] = cls.declaredComplete;
    j["verdicts"] = {{"bohr", verdict_name(cls.bohr)},
                     {"pseudoBochner", verdict_name(cls.pseudoBochner)},
                     {"bochner", verdict_name(cls.bochner)}};
    j["flags"] = cls.flags;
    OrderedJson per = OrderedJson::array();
    for (const auto& ev : cls.perEps) {
        OrderedJson e;
        e["eps"] = ev.eps;
        e["bohr"] = verdict_name(ev.bohr);
        e["coveringRadius"] = ev.coveringRadius;
        e["periodCount"] = ev.periodCount;
        e["pseudoBochner"] = verdict_name(ev.pseudoBochner);
        e["netSize"] = ev.netSize;
        if (!cls.exactMode) e["netSizeGrown"] = ev.netSizeGrown;
        e["bochner"] = verdict_name(ev.bochner);
        per.push_back(e);
    }
    j["perEps"] = per;
    return j;
}

OrderedJson hull_to_json(const HullGroup& hull) {
    OrderedJson j;
    j["schema"] = "apkit/1";
    j["kind"] = "hull";
    j["elements"] = hull.elements;
    j["identityIndex"] = hull.identityIndex;
    j["addTable"] = hull.addTable;
    j["periods"] = hull.periodSubgroup;
    j["axiomsVerified"] = hull.axiomsVerified;
    return j;
}

OrderedJson net_to_json(const EpsNet& net) {
    OrderedJson j;
    j["schema"] = "apkit/1";
    j["kind"] = "net";
    j["eps"] = net.eps;
    OrderedJson centers = OrderedJson::array();
    for (const auto& c : net.centers) centers.push_back(element_json(c));
    j["centers"] = centers;
    j["size"] = net.centers.size();
    j["assignments"] = net.assignments;
    j["covered"] = net.covered;
    return j;
}

OrderedJson layered_report_to_json(const LayeredReport& rep) {
    OrderedJson j;
    j["schema"] = "apkit/1";
    j["kind"] = "counterexample";
    j["nMax"] = rep.nMax;
    j["window"] = rep.window;
    j["allHold"] = rep.allHold;
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"level", r.level},
                        {"shift", r.shift},
                        {"periodicity", r.periodicityHolds},
                        {"tailAvoidsCore", r.tailAvoidsCore},
                        {"shiftedTailAvoidsCore", r.shiftedTailAvoidsCore}});
    }
    j["rows"] = rows;
    OrderedJson growth = OrderedJson::array();
    for (const auto& [level, norm] : rep.normGrowth)
        growth.push_back({{"level", level}, {"normK0", norm.toString()}});
    j["normGrowth"] = growth;
    j["tailResidue"] = {{"leadingTerm", rep.tailResidueFirstTerm},
                        {"allTerms", rep.tailResidueAllTerms}};
    return j;
}

std::string periods_csv(const std::vector<double>& epsGrid, const TranslateProfile& prof) {
    std::string out = "eps,t,gaugeValue\n";
    for (double eps : epsGrid) {
        for (std::size_t i = 0; i < prof.translates.size(); ++i) {
            out += format_double(eps);
            out += ',';
            const auto& e = prof.translates[i];
            for (std::size_t k = 0; k < e.c.size(); ++k) {
                if (k) out += ';';
                out += std::to_string(e.c[k]);
            }
            out += ',';
            out += format_double(prof.values[i]);
            out += '\n';
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ResourceError("cannot write file: " + path);
    out << content;
}

void write_json_file(const std::string& path, const OrderedJson& j) {
    write_text_file(path, j.dump(2) + "\n");
}

std::string error_diagnostic(const std::string& type, const std::string& message) {
    OrderedJson j;
    j["error"] = {{"type", type}, {"message", message}};
    return j.dump() + "\n";
}

}  // namespace apkit
