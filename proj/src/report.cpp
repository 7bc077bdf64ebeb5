#include "legdet/verify.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace legdet {

namespace {

std::string join_aux(const std::map<std::string, std::string>& aux) {
    std::string out;
    for (const auto& [key, value] : aux) {
        if (!out.empty()) out += "; ";
        out += key + "=" + value;
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["target"] = std::string(to_string(report.target));
    j["from"] = report.from;
    j["to"] = report.to;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["p"] = r.p;
        rec["status"] = std::string(to_string(r.status));
        rec["computed"] = r.computed;
        rec["predicted"] = r.predicted;
        rec["aux"] = r.aux;
        j["records"].push_back(std::move(rec));
    }
    j["pass"] = report.pass;
    j["fail"] = report.fail;
    j["skipped"] = report.skipped;
    j["elapsed_s"] = report.elapsed_s;
    return j.dump(2) + "\n";
}

std::string render_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "p,status,computed,predicted,aux\n";
    for (const auto& r : report.records)
        out << r.p << ',' << to_string(r.status) << ',' << csv_field(r.computed) << ',' << csv_field(r.predicted) << ','
            << csv_field(join_aux(r.aux)) << '\n';
    return out.str();
}

std::string render_text(const SweepReport& report) {
    std::ostringstream out;
    out << "target " << to_string(report.target) << ", primes in [" << report.from << ", " << report.to << "]\n";
    out << std::left << std::setw(8) << "p" << std::setw(9) << "status" << std::setw(24) << "computed" << ' '
        << std::setw(23) << "predicted" << ' ' << "details\n";
    for (const auto& r : report.records) {
        out << std::setw(8) << r.p << std::setw(9) << to_string(r.status) << std::setw(24) << r.computed << ' '
            << std::setw(23) << r.predicted << ' ' << join_aux(r.aux) << '\n';
    }
    out << "pass " << report.pass << ", fail " << report.fail << ", skipped " << report.skipped << " ("
        << std::fixed << std::setprecision(3) << report.elapsed_s << " s)\n";
    return out.str();
}

} // namespace

std::string render_report(const SweepReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Text: return render_text(report);
    }
    return {};
}

} // namespace legdet
