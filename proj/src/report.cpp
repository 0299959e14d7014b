#include "optolink/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "optolink/reference_data.hpp"

namespace optolink::report {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v, const char* format = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

// Round-to-3-significant-figures comparison, done in decimal string space so
// it matches how the published values are quoted.
bool matches_3sf(double computed, double published) {
    return fmt(computed, "%.3g") == fmt(published, "%.3g");
}

bool within_rel(double computed, double published, double rel) {
    return std::abs(computed - published) <= rel * std::abs(published);
}

}  // namespace

Tables make_tables(const photonics::PhotonicParams& params) {
    Tables t;
    for (const auto& e : refdata::bitrate_expectations()) {
        BitrateRow row;
        row.bitwidth = e.bitwidth;
        row.electrical_latency_ns = refdata::kElectricalLatencyNs;
        row.electrical_gbyte_per_s =
            perf::electrical_bitrate_gbyte_per_s(e.bitwidth, refdata::kElectricalLatencyNs);
        row.optical_latency_ps = perf::propagation_latency_ps(
            refdata::kReferenceWaveguideLengthUm, refdata::kOpticalLatencyPsPerMm);
        row.optical_tbyte_per_s = perf::optolink_bandwidth_tbyte_per_s(
            e.bitwidth, params.per_channel_gbyte_per_s);
        t.bitrate.push_back(row);
    }

    for (const auto& e : refdata::electrical_power_table()) {
        PowerRow row;
        row.bitwidth = e.bitwidth;
        row.cores = e.cores;
        row.electrical_uw = perf::electrical_power_uw(e.bitwidth, e.cores);
        row.optical_w = perf::optolink_power(e.bitwidth, e.cores, params).total_w;
        t.power.push_back(row);
    }

    for (const auto& e : refdata::electrical_area_table()) {
        AreaRow row;
        row.cores = e.cores;
        row.electrical_um2 = perf::electrical_area_um2(e.cores);
        row.channels = 128LL * e.cores;
        row.optical_mm2 = perf::optolink_area(row.channels).total_mm2;
        t.area.push_back(row);
    }
    t.photonic_per_channel_mm2 = perf::optolink_area(1).per_channel_mm2;
    return t;
}

CheckResult verify_tables(const Tables& tables) {
    CheckResult check;
    auto fail = [&](std::string message) {
        check.ok = false;
        check.mismatches.push_back(std::move(message));
    };

    for (const auto& row : tables.bitrate) {
        for (const auto& e : refdata::bitrate_expectations()) {
            if (e.bitwidth != row.bitwidth) continue;
            if (!matches_3sf(row.electrical_gbyte_per_s, e.electrical_gbyte_per_s))
                fail("electrical bitrate at " + std::to_string(row.bitwidth) + "-bit: got " +
                     fmt(row.electrical_gbyte_per_s) + ", expected " +
                     fmt(e.electrical_gbyte_per_s));
            if (!matches_3sf(row.optical_tbyte_per_s, e.optical_tbyte_per_s))
                fail("optical bandwidth at " + std::to_string(row.bitwidth) + "-bit: got " +
                     fmt(row.optical_tbyte_per_s) + ", expected " + fmt(e.optical_tbyte_per_s));
        }
    }

    for (const auto& row : tables.power) {
        for (const auto& e : refdata::optical_power_expectations()) {
            if (e.bitwidth != row.bitwidth || e.cores != row.cores) continue;
            if (!within_rel(row.optical_w, e.power_w, 0.005))
                fail("optical power at " + std::to_string(row.bitwidth) + "-bit/" +
                     std::to_string(row.cores) + " cores: got " + fmt(row.optical_w) +
                     " W, expected " + fmt(e.power_w) + " W +-0.5%");
        }
        for (const auto& e : refdata::electrical_power_table()) {
            if (e.bitwidth != row.bitwidth || e.cores != row.cores) continue;
            if (row.electrical_uw != e.power_uw)
                fail("electrical power at " + std::to_string(row.bitwidth) + "-bit/" +
                     std::to_string(row.cores) + " cores: got " + fmt(row.electrical_uw) +
                     " uW, expected " + fmt(e.power_uw) + " uW exactly");
        }
    }

    for (const auto& row : tables.area) {
        for (const auto& e : refdata::electrical_area_table()) {
            if (e.cores != row.cores) continue;
            if (row.electrical_um2 != e.area_um2)
                fail("electrical area at " + std::to_string(row.cores) + " cores: got " +
                     fmt(row.electrical_um2) + " um2, expected " + fmt(e.area_um2));
        }
    }
    if (!within_rel(tables.photonic_per_channel_mm2, 0.0392, 1e-9))
        fail("photonic per-channel area: got " + fmt(tables.photonic_per_channel_mm2) +
             " mm2, expected 0.0392 mm2");
    return check;
}

CoverageReport make_coverage(long long channels, double per_channel_gbyte_per_s) {
    if (channels < 1) throw perf::NegativeLengthError("channel count must be >= 1");
    CoverageReport report;
    report.channels = channels;
    report.offered_tbyte_per_s = perf::optolink_bandwidth_tbyte_per_s(
        static_cast<double>(channels), per_channel_gbyte_per_s);
    const double offered_gbyte = report.offered_tbyte_per_s * 1000.0;
    for (const auto& acc : refdata::accelerator_survey()) {
        for (double need : acc.bandwidth_gbyte_per_s) {
            CoverageRow row;
            row.accelerator = acc.name;
            row.hardware = acc.hardware;
            row.schemes = acc.schemes;
            row.required_gbyte_per_s = need;
            row.met = offered_gbyte >= need;
            row.min_channels =
                static_cast<long long>(std::ceil(need / per_channel_gbyte_per_s - 1e-12));
            if (row.min_channels < 1) row.min_channels = 1;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string timestamp_header() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return std::string("# generated ") + buf + "\n";
}

std::string bitrate_csv(const Tables& t) {
    std::string out = timestamp_header();
    out += "bitwidth,electrical_latency_ns,electrical_gbyte_per_s,optical_latency_ps,"
           "optical_tbyte_per_s\n";
    for (const auto& row : t.bitrate)
        out += std::to_string(row.bitwidth) + "," + fmt(row.electrical_latency_ns) + "," +
               fmt(row.electrical_gbyte_per_s, "%.3g") + "," + fmt(row.optical_latency_ps) +
               "," + fmt(row.optical_tbyte_per_s, "%.3g") + "\n";
    return out;
}

std::string power_csv(const Tables& t) {
    std::string out = timestamp_header();
    out += "bitwidth,cores,electrical_uw,optical_w\n";
    for (const auto& row : t.power)
        out += std::to_string(row.bitwidth) + "," + std::to_string(row.cores) + "," +
               fmt(row.electrical_uw) + "," + fmt(row.optical_w, "%.4g") + "\n";
    return out;
}

std::string area_csv(const Tables& t) {
    std::string out = timestamp_header();
    out += "cores,electrical_um2,channels,optical_mm2\n";
    for (const auto& row : t.area)
        out += std::to_string(row.cores) + "," + fmt(row.electrical_um2) + "," +
               std::to_string(row.channels) + "," + fmt(row.optical_mm2) + "\n";
    return out;
}

std::string tables_json(const Tables& t, int indent) {
    ordered_json doc;
    doc["bitrate"] = ordered_json::array();
    for (const auto& row : t.bitrate)
        doc["bitrate"].push_back({{"bitwidth", row.bitwidth},
                                  {"electrical_latency_ns", row.electrical_latency_ns},
                                  {"electrical_gbyte_per_s", row.electrical_gbyte_per_s},
                                  {"optical_latency_ps", row.optical_latency_ps},
                                  {"optical_tbyte_per_s", row.optical_tbyte_per_s}});
    doc["power"] = ordered_json::array();
    for (const auto& row : t.power)
        doc["power"].push_back({{"bitwidth", row.bitwidth},
                                {"cores", row.cores},
                                {"electrical_uw", row.electrical_uw},
                                {"optical_w", row.optical_w}});
    doc["area"] = ordered_json::array();
    for (const auto& row : t.area)
        doc["area"].push_back({{"cores", row.cores},
                               {"electrical_um2", row.electrical_um2},
                               {"channels", row.channels},
                               {"optical_mm2", row.optical_mm2}});
    doc["photonic_per_channel_mm2"] = t.photonic_per_channel_mm2;
    return doc.dump(indent) + "\n";
}

std::string coverage_csv(const CoverageReport& r) {
    std::string out = timestamp_header();
    out += "accelerator,hardware,schemes,required_gbyte_per_s,met,min_channels\n";
    for (const auto& row : r.rows)
        out += row.accelerator + "," + row.hardware + ",\"" + row.schemes + "\"," +
               fmt(row.required_gbyte_per_s) + "," + (row.met ? "yes" : "no") + "," +
               std::to_string(row.min_channels) + "\n";
    return out;
}

std::string coverage_json(const CoverageReport& r, int indent) {
    ordered_json doc;
    doc["channels"] = r.channels;
    doc["offered_tbyte_per_s"] = r.offered_tbyte_per_s;
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.rows)
        doc["rows"].push_back({{"accelerator", row.accelerator},
                               {"hardware", row.hardware},
                               {"schemes", row.schemes},
                               {"required_gbyte_per_s", row.required_gbyte_per_s},
                               {"met", row.met},
                               {"min_channels", row.min_channels}});
    return doc.dump(indent) + "\n";
}

namespace {

ordered_json sim_result_to_json_value(const sim::SimResult& r) {
    ordered_json doc;
    doc["load_s"] = r.load_s;
    doc["compute_s"] = r.compute_s;
    doc["store_s"] = r.store_s;
    doc["total_s"] = r.total_s;
    doc["transfer_s"] = r.transfer_s;
    doc["bottleneck"] = sim::bottleneck_name(r.bottleneck);
    doc["stall_count"] = r.stall_count;
    doc["bytes_in"] = r.bytes_in;
    doc["bytes_twiddle"] = r.bytes_twiddle;
    doc["bytes_out"] = r.bytes_out;
    ordered_json util;
    for (const auto& [id, u] : r.waveguide_utilization)
        util["waveguide_" + std::to_string(id)] = u;
    doc["utilization"] = util;
    return doc;
}

}  // namespace

std::string sim_result_csv(const sim::SimResult& r) {
    std::string out = timestamp_header();
    out += "load_s,compute_s,store_s,total_s,transfer_s,bottleneck,stall_count\n";
    out += fmt(r.load_s, "%.9g") + "," + fmt(r.compute_s, "%.9g") + "," +
           fmt(r.store_s, "%.9g") + "," + fmt(r.total_s, "%.9g") + "," +
           fmt(r.transfer_s, "%.9g") + "," + sim::bottleneck_name(r.bottleneck) + "," +
           std::to_string(r.stall_count) + "\n";
    return out;
}

std::string sim_result_json(const sim::SimResult& r, int indent) {
    return sim_result_to_json_value(r).dump(indent) + "\n";
}

std::string sweep_csv(sim::SweepAxis axis, const std::vector<sim::SweepEntry>& rows) {
    std::string out = timestamp_header();
    out += std::string(sim::sweep_axis_name(axis)) +
           ",cores,bitwidth,channels,bandwidth_tbyte_per_s,power_w,load_s,compute_s,store_s,"
           "total_s,bottleneck\n";
    for (const auto& row : rows)
        out += fmt(row.axis_value, "%.10g") + "," + std::to_string(row.cores) + "," +
               std::to_string(row.bitwidth) + "," + std::to_string(row.channels_for_bandwidth) +
               "," + fmt(row.bandwidth_tbyte_per_s, "%.6g") + "," +
               fmt(row.power_total_w, "%.4g") + "," + fmt(row.result.load_s, "%.9g") + "," +
               fmt(row.result.compute_s, "%.9g") + "," + fmt(row.result.store_s, "%.9g") + "," +
               fmt(row.result.total_s, "%.9g") + "," +
               sim::bottleneck_name(row.result.bottleneck) + "\n";
    return out;
}

std::string sweep_json(sim::SweepAxis axis, const std::vector<sim::SweepEntry>& rows,
                       int indent) {
    ordered_json doc;
    doc["axis"] = sim::sweep_axis_name(axis);
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["value"] = row.axis_value;
        jr["cores"] = row.cores;
        jr["bitwidth"] = row.bitwidth;
        jr["channels"] = row.channels_for_bandwidth;
        jr["bandwidth_tbyte_per_s"] = row.bandwidth_tbyte_per_s;
        jr["power_w"] = row.power_total_w;
        jr["result"] = sim_result_to_json_value(row.result);
        doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(indent) + "\n";
}

std::string write_report_file(const std::string& dir, const std::string& name,
                              const std::string& content) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("failed to write " + path.string());
    return path.string();
}

// ---- transform self-test ----------------------------------------------

SelfTestResult ntt_selftest(std::uint64_t max_n, bool inject_fault, std::uint64_t seed) {
    SelfTestResult result;
    if (max_n == 0 || (max_n & (max_n - 1)) != 0) {
        result.failures.push_back("max_n must be a power of two");
        return result;
    }

    std::mt19937_64 rng(seed);
    auto fail = [&](std::string message) { result.failures.push_back(std::move(message)); };

    for (std::uint64_t n = 1; n <= max_n; n <<= 1) {
        const std::uint64_t q = n <= 4096 ? 12289 : 65537;
        ntt::ModulusContext ctx = ntt::make_context(q, n);
        if (inject_fault && n > 1) ctx.debug_corrupt_twiddle(0);
        std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);

        const int rounds = n <= 256 ? 8 : 3;
        for (int round = 0; round < rounds; ++round) {
            ntt::Polynomial a(n), b(n);
            for (auto& c : a) c = coeff(rng);
            for (auto& c : b) c = coeff(rng);

            std::uint64_t counted = 0;
            const ntt::Polynomial fast = ntt::ntt_fast(ctx, a, counted);
            ++result.cases_run;
            if (counted != ntt::butterfly_count(n)) {
                fail("butterfly count mismatch at n=" + std::to_string(n));
                break;
            }
            if (fast != ntt::ntt_direct(ctx, a)) {
                fail("fast/direct transform mismatch at n=" + std::to_string(n));
                break;
            }
            if (ntt::intt_fast(ctx, fast) != a) {
                fail("round trip mismatch at n=" + std::to_string(n));
                break;
            }
            if (n <= 1024 && ntt::poly_mul_ntt(ctx, a, b) != ntt::poly_mul_naive(ctx, a, b)) {
                fail("convolution mismatch at n=" + std::to_string(n));
                break;
            }
        }
        if (!result.failures.empty()) break;
    }

    result.passed = result.failures.empty();
    return result;
}

}  // namespace optolink::report
