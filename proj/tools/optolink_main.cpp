// optolink command-line front end.
//
// Subcommands:
//   tables                 regenerate the bitrate/power/area reference tables
//   compare --channels N   check accelerator bandwidth requirements
//   simulate -f FILE       run one scenario
//   sweep -f FILE          run a scenario across an axis of values
//   ntt-selftest           transform correctness suite
//
// Exit codes: 0 success, 1 model or regression failure, 2 usage/schema error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optolink/report.hpp"

namespace {

using namespace optolink;

struct GlobalOpts {
    std::string out_dir = "reports";
    std::string format = "csv";
};

void emit(const GlobalOpts& g, const std::string& name_base, const std::string& csv,
          const std::string& json) {
    const bool as_json = g.format == "json";
    const std::string path = report::write_report_file(
        g.out_dir, name_base + (as_json ? ".json" : ".csv"), as_json ? json : csv);
    std::cout << "wrote " << path << "\n";
}

int cmd_tables(const GlobalOpts& g, double laser_mw_override) {
    photonics::PhotonicParams params;
    if (laser_mw_override >= 0.0) params.laser_wall_mw_per_channel = laser_mw_override;

    const report::Tables tables = report::make_tables(params);
    emit(g, "bitrate_table", report::bitrate_csv(tables), report::tables_json(tables));
    if (g.format == "csv") {
        report::write_report_file(g.out_dir, "power_table.csv", report::power_csv(tables));
        report::write_report_file(g.out_dir, "area_table.csv", report::area_csv(tables));
        std::cout << "wrote " << g.out_dir << "/power_table.csv\n";
        std::cout << "wrote " << g.out_dir << "/area_table.csv\n";
    }

    const report::CheckResult check = report::verify_tables(tables);
    if (!check.ok) {
        for (const auto& m : check.mismatches) std::cerr << "mismatch: " << m << "\n";
        std::cerr << "table regression check FAILED\n";
        return 1;
    }
    std::cout << "all reference values reproduced\n";
    return 0;
}

int cmd_compare(const GlobalOpts& g, long long channels) {
    const report::CoverageReport coverage = report::make_coverage(channels);
    emit(g, "accelerator_coverage", report::coverage_csv(coverage),
         report::coverage_json(coverage));
    std::cout << "offered bandwidth: " << coverage.offered_tbyte_per_s << " TB/s with "
              << channels << " channels\n";
    for (const auto& row : coverage.rows)
        std::cout << (row.met ? "  [met]     " : "  [not met] ") << row.accelerator << " ("
                  << row.required_gbyte_per_s << " GB/s, needs >= " << row.min_channels
                  << " channels)\n";
    return 0;
}

int cmd_simulate(const GlobalOpts& g, const std::string& file) {
    const scenario::Scenario sc = scenario::load_scenario_file(file);
    GlobalOpts local = g;
    if (sc.output_format) local.format = *sc.output_format;
    const sim::SimResult result = sim::run_sim_config(sc.config);
    emit(local, "sim_result", report::sim_result_csv(result),
         report::sim_result_json(result));
    std::cout << "load " << result.load_s << " s, compute " << result.compute_s
              << " s, store " << result.store_s << " s, total " << result.total_s
              << " s, bottleneck " << sim::bottleneck_name(result.bottleneck) << "\n";
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& file, const std::string& axis_arg,
              const std::vector<double>& values_arg) {
    const scenario::Scenario sc = scenario::load_scenario_file(file);
    GlobalOpts local = g;
    if (sc.output_format) local.format = *sc.output_format;

    sim::SweepAxis axis;
    std::vector<double> values;
    if (!axis_arg.empty()) {
        try {
            axis = sim::sweep_axis_from_name(axis_arg);
        } catch (const std::invalid_argument& e) {
            throw scenario::ScenarioError(e.what());
        }
        values = values_arg;
    } else if (sc.sweep) {
        axis = sc.sweep->axis;
        values = sc.sweep->values;
    } else {
        throw scenario::ScenarioError(
            "no sweep axis: pass --axis/--values or add a sweep block to the scenario");
    }

    const auto rows = sim::sweep(sc.config, axis, values);
    emit(local, std::string("sweep_") + sim::sweep_axis_name(axis),
         report::sweep_csv(axis, rows), report::sweep_json(axis, rows));
    for (const auto& row : rows)
        std::cout << sim::sweep_axis_name(axis) << "=" << row.axis_value << ": bandwidth "
                  << row.bandwidth_tbyte_per_s << " TB/s, power " << row.power_total_w
                  << " W, total " << row.result.total_s << " s\n";
    return 0;
}

int cmd_ntt_selftest(std::uint64_t max_n, bool inject_fault) {
    if (max_n == 0 || (max_n & (max_n - 1)) != 0) {
        std::cerr << "--max-n must be a power of two\n";
        return 2;
    }
    const report::SelfTestResult result = report::ntt_selftest(max_n, inject_fault);
    std::cout << result.cases_run << " transform cases run\n";
    for (const auto& f : result.failures) std::cerr << "failure: " << f << "\n";
    std::cout << (result.passed ? "self-test PASSED\n" : "self-test FAILED\n");
    return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photonic memory-interconnect design-space explorer"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global --out/--format after the subcommand

    GlobalOpts global;
    app.add_option("--out", global.out_dir, "Output directory for report files")
        ->envname("OPTOLINK_OUT_DIR");
    app.add_option("--format", global.format, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* tables = app.add_subcommand("tables", "Regenerate reference tables");
    double laser_mw = -1.0;
    tables->add_option("--laser-mw", laser_mw,
                       "Override the per-channel laser wall power calibration (mW)");

    auto* compare = app.add_subcommand("compare", "Accelerator bandwidth coverage");
    long long channels = 128;
    compare->add_option("--channels", channels, "Optical channel count")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* simulate = app.add_subcommand("simulate", "Run one scenario");
    std::string sim_file;
    simulate->add_option("-f,--file", sim_file, "Scenario JSON file")->required();

    auto* sweep = app.add_subcommand("sweep", "Run a scenario across an axis");
    std::string sweep_file, sweep_axis;
    std::vector<double> sweep_values;
    sweep->add_option("-f,--file", sweep_file, "Scenario JSON file")->required();
    sweep->add_option("--axis", sweep_axis, "cores|bitwidth|channels|n");
    sweep->add_option("--values", sweep_values, "Axis values")->delimiter(',');

    auto* selftest = app.add_subcommand("ntt-selftest", "Transform correctness suite");
    std::uint64_t max_n = 1024;
    bool inject_fault = false;
    selftest->add_option("--max-n", max_n, "Largest transform size (power of two)");
    selftest->add_flag("--inject-fault", inject_fault,
                       "Corrupt a cached twiddle first (the suite must then fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) return cmd_tables(global, laser_mw);
        if (compare->parsed()) return cmd_compare(global, channels);
        if (simulate->parsed()) return cmd_simulate(global, sim_file);
        if (sweep->parsed()) return cmd_sweep(global, sweep_file, sweep_axis, sweep_values);
        if (selftest->parsed()) return cmd_ntt_selftest(max_n, inject_fault);
    } catch (const scenario::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 2;
    } catch (const topo::TopologyParseError& e) {
        std::cerr << "topology error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
