#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sq {

enum class Mode { Exact, Float };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

// Shared knobs of every check: scalar mode, float tolerance, sample count,
// master seed. Exact mode ignores eps (any nonzero residual is a failure).
struct CheckConfig {
    Mode mode = Mode::Float;
    double eps = 1e-9;
    int samples = 1000;
    std::uint64_t seed = 1;
};

// Outcome of one check. pass holds iff no witness was recorded, which in
// exact mode means every residual was exactly zero and in float mode that
// every residual stayed within eps.
struct VerificationReport {
    std::string name;
    Mode mode = Mode::Float;
    int samples = 0;
    std::uint64_t seed = 0;
    double eps = 1e-9;
    double max_residual = 0.0;
    long failure_count = 0;
    std::vector<std::string> witnesses; // first few failing inputs
    bool pass = true;

    static constexpr std::size_t kMaxWitnesses = 8;

    VerificationReport() = default;
    VerificationReport(std::string check_name, const CheckConfig& cfg)
        : name(std::move(check_name)), mode(cfg.mode), samples(cfg.samples),
          seed(cfg.seed), eps(cfg.eps) {}

    // Record one comparison. `exactly_equal` drives the exact-mode verdict;
    // float mode compares residual against eps. The witness is built lazily
    // so passing samples cost nothing.
    void add(double residual, bool exactly_equal,
             const std::function<std::string()>& witness) {
        if (residual > max_residual) max_residual = residual;
        bool ok = (mode == Mode::Exact) ? exactly_equal : (residual <= eps);
        if (!ok) {
            pass = false;
            ++failure_count;
            if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
        }
    }

    void fail(const std::string& witness) {
        add(1.0, false, [&] { return witness; });
    }
};

// Plain-text structured serialization (JSON) plus a human-readable table.
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
void write_reports(const std::string& path, const std::vector<VerificationReport>& rs);
void print_report_table(std::ostream& os, const std::vector<VerificationReport>& rs);
bool all_pass(const std::vector<VerificationReport>& rs);

} // namespace sq
