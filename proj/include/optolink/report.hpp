#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optolink/perf.hpp"
#include "optolink/photonics.hpp"
#include "optolink/scenario.hpp"
#include "optolink/sim.hpp"

namespace optolink::report {

struct BitrateRow {
    int bitwidth;
    double electrical_latency_ns;
    double electrical_gbyte_per_s;
    double optical_latency_ps;
    double optical_tbyte_per_s;
};

struct PowerRow {
    int bitwidth;
    int cores;
    double electrical_uw;
    double optical_w;
};

struct AreaRow {
    int cores;
    double electrical_um2;   // 128-bit configuration
    long long channels;      // 128-bit x cores
    double optical_mm2;
};

struct Tables {
    std::vector<BitrateRow> bitrate;
    std::vector<PowerRow> power;
    std::vector<AreaRow> area;
    double photonic_per_channel_mm2 = 0.0;
};

Tables make_tables(const photonics::PhotonicParams& params = {});

// Regression gate: every published value must be reproduced (bitrates and
// bandwidths to 3 significant figures, optical power within 0.5 %,
// electrical lookups exact).
struct CheckResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};
CheckResult verify_tables(const Tables& tables);

struct CoverageRow {
    std::string accelerator;
    std::string hardware;
    std::string schemes;
    double required_gbyte_per_s;
    bool met;
    long long min_channels;  // smallest channel count that satisfies the row
};

struct CoverageReport {
    long long channels;
    double offered_tbyte_per_s;
    std::vector<CoverageRow> rows;
};

CoverageReport make_coverage(long long channels, double per_channel_gbyte_per_s = 12.5);

// ---- serialization ----------------------------------------------------

// CSV payloads start with a "# generated ..." header line; everything after
// it is byte-stable for identical inputs.
std::string timestamp_header();

std::string bitrate_csv(const Tables& t);
std::string power_csv(const Tables& t);
std::string area_csv(const Tables& t);
std::string tables_json(const Tables& t, int indent = 2);

std::string coverage_csv(const CoverageReport& r);
std::string coverage_json(const CoverageReport& r, int indent = 2);

std::string sim_result_csv(const sim::SimResult& r);
std::string sim_result_json(const sim::SimResult& r, int indent = 2);

std::string sweep_csv(sim::SweepAxis axis, const std::vector<sim::SweepEntry>& rows);
std::string sweep_json(sim::SweepAxis axis, const std::vector<sim::SweepEntry>& rows,
                       int indent = 2);

// Writes content to dir/name, creating dir if needed. Returns the full path.
std::string write_report_file(const std::string& dir, const std::string& name,
                              const std::string& content);

// ---- transform self-test ----------------------------------------------

struct SelfTestResult {
    bool passed = false;
    std::uint64_t cases_run = 0;
    std::vector<std::string> failures;
};

/// Oracle-equivalence, round-trip, linearity, convolution, and butterfly-
/// count checks for every power-of-two size up to max_n. inject_fault
/// corrupts one cached twiddle first and is expected to make the suite fail
/// (negative control for the checking machinery itself).
SelfTestResult ntt_selftest(std::uint64_t max_n, bool inject_fault = false,
                            std::uint64_t seed = 0x5eed5eedULL);

}  // namespace optolink::report
