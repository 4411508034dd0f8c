#include "hbsa/io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hbsa {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fixed(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

ordered_json event_json(const DetectionEvent& ev, double p) {
    ordered_json j;
    j["det1"] = ev.d1.str();
    j["det2"] = ev.d2.str();
    j["interval"] = to_string(ev.interval);
    j["probability"] = p;
    return j;
}

}  // namespace

std::string table_to_records(const SignatureTable& table) {
    ordered_json doc;
    doc["schema-version"] = kSchemaVersion;
    doc["kind"] = "signature-table";
    doc["rows"] = ordered_json::array();
    for (const auto& row : table.rows()) {
        ordered_json r;
        r["spatial"] = to_string(row.input.spatial);
        r["polarization"] = to_string(row.input.polarization);
        r["interval"] = to_string(row.interval());
        r["events"] = ordered_json::array();
        for (const auto& [ev, p] : row.events) r["events"].push_back(event_json(ev, p));
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string distribution_to_records(const HyperBellIndex& input, const Distribution& dist) {
    ordered_json doc;
    doc["schema-version"] = kSchemaVersion;
    doc["kind"] = "detection-distribution";
    doc["spatial"] = to_string(input.spatial);
    doc["polarization"] = to_string(input.polarization);
    doc["events"] = ordered_json::array();
    for (const auto& [ev, p] : dist) doc["events"].push_back(event_json(ev, p));
    return doc.dump(2) + "\n";
}

std::string sweep_to_records(const std::vector<SweepPoint>& points) {
    ordered_json doc;
    doc["schema-version"] = kSchemaVersion;
    doc["kind"] = "noise-sweep";
    doc["points"] = ordered_json::array();
    for (const auto& p : points) {
        ordered_json r;
        r["param-name"] = p.param_name;
        r["param-value"] = p.param_value;
        r["min-diagonal"] = p.min_diagonal;
        r["mean-diagonal"] = p.mean_diagonal;
        r["unclassified-mass"] = p.unclassified_mass;
        doc["points"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string table_to_flat(const SignatureTable& table) {
    std::ostringstream os;
    os << "spatial,pol,interval,det1,det2,probability\n";
    for (const auto& row : table.rows())
        for (const auto& [ev, p] : row.events)
            os << to_string(row.input.spatial) << "," << to_string(row.input.polarization) << ","
               << to_string(ev.interval) << "," << ev.d1.str() << "," << ev.d2.str() << ","
               << fixed(p) << "\n";
    return os.str();
}

std::string distribution_to_flat(const Distribution& dist) {
    std::ostringstream os;
    os << "det1,det2,interval,probability\n";
    for (const auto& [ev, p] : dist)
        os << ev.d1.str() << "," << ev.d2.str() << "," << to_string(ev.interval) << "," << fixed(p)
           << "\n";
    return os.str();
}

std::string sweep_to_flat(const std::vector<SweepPoint>& points) {
    std::ostringstream os;
    os << "param-name,param-value,min-diagonal,mean-diagonal,unclassified-mass\n";
    for (const auto& p : points)
        os << p.param_name << "," << fixed(p.param_value) << "," << fixed(p.min_diagonal) << ","
           << fixed(p.mean_diagonal) << "," << fixed(p.unclassified_mass) << "\n";
    return os.str();
}

std::string table_to_human(const SignatureTable& table) {
    std::ostringstream os;
    for (const auto& row : table.rows()) {
        os << row.input.str() << "  [interval " << to_string(row.interval()) << "]\n";
        for (const auto& [ev, p] : row.events)
            os << "    " << ev.d1.str() << "  " << ev.d2.str() << "   p = " << fixed(p) << "\n";
    }
    return os.str();
}

std::string distribution_to_human(const Distribution& dist) {
    std::ostringstream os;
    double total = 0.0;
    for (const auto& [ev, p] : dist) {
        os << "  " << ev.str() << "   p = " << fixed(p) << "\n";
        total += p;
    }
    os << "  total probability: " << fixed(total) << "\n";
    return os.str();
}

std::string state_to_human(const TwoPhotonState& state) {
    std::ostringstream os;
    os << std::setprecision(6);
    for (const auto& [pair, amp] : state.amplitudes()) {
        os << "  ";
        if (std::abs(amp.imag()) < 1e-12) {
            os << std::showpos << amp.real() << std::noshowpos;
        } else {
            os << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag())
               << "i)";
        }
        os << " " << pair.first.str() << pair.second.str() << "\n";
    }
    return os.str();
}

std::string diff_to_human(const DiffReport& report) {
    std::ostringstream os;
    for (const auto& row : report.rows) {
        if (row.empty()) continue;
        os << row.input.str() << ":";
        if (row.interval_mismatch)
            os << " interval mismatch (oracle " << to_string(row.oracle_interval) << ")";
        os << " missing " << row.missing.size() << ", extra " << row.extra.size() << "\n";
        for (const auto& ev : row.missing) os << "    - " << ev.str() << "\n";
        for (const auto& ev : row.extra) os << "    + " << ev.str() << "\n";
    }
    if (report.empty()) os << "all rows match\n";
    return os.str();
}

}  // namespace hbsa
