#include "sq/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace sq {

static nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["mode"] = mode_name(r.mode);
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["eps"] = r.eps;
    j["residual"] = r.max_residual;
    j["failures"] = r.failure_count;
    j["witnesses"] = r.witnesses;
    j["pass"] = r.pass;
    return j;
}

std::string report_to_json(const VerificationReport& r) {
    return report_json(r).dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

void write_reports(const std::string& path, const std::vector<VerificationReport>& rs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << reports_to_json(rs) << "\n";
}

void print_report_table(std::ostream& os, const std::vector<VerificationReport>& rs) {
    os << std::left << std::setw(40) << "check" << std::setw(7) << "mode"
       << std::setw(9) << "samples" << std::setw(12) << "seed"
       << std::setw(14) << "residual" << "result\n";
    for (const auto& r : rs) {
        os << std::left << std::setw(40) << r.name << std::setw(7) << mode_name(r.mode)
           << std::setw(9) << r.samples << std::setw(12) << r.seed
           << std::setw(14) << std::setprecision(3) << std::scientific << r.max_residual
           << (r.pass ? "pass" : "FAIL") << "\n";
        if (!r.pass) {
            for (const auto& w : r.witnesses) os << "    witness: " << w << "\n";
            if (static_cast<std::size_t>(r.failure_count) > r.witnesses.size())
                os << "    (" << r.failure_count << " failures total)\n";
        }
    }
    os.flags(std::ios::fmtflags{});
}

bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace sq
