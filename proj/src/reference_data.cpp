#include "optolink/reference_data.hpp"

namespace optolink::refdata {

const std::vector<ElectricalPowerEntry>& electrical_power_table() {
    static const std::vector<ElectricalPowerEntry> table = {
        {32, 4, 283.89},  {32, 8, 562.44},  {32, 16, 1121.9},
        {64, 4, 308.18},  {64, 8, 619.29},  {64, 16, 1232.19},
        {128, 4, 336.99}, {128, 8, 661.74}, {128, 16, 1332.31},
    };
    return table;
}

const std::vector<ElectricalAreaEntry>& electrical_area_table() {
    static const std::vector<ElectricalAreaEntry> table = {
        {4, 3097.3},
        {8, 5741.2},
        {16, 11861.9},
    };
    return table;
}

const std::vector<OpticalPowerExpectation>& optical_power_expectations() {
    static const std::vector<OpticalPowerExpectation> table = {
        {32, 4, 1.65},  {32, 8, 3.29},  {32, 16, 6.58},
        {64, 4, 3.29},  {64, 8, 6.58},  {64, 16, 13.16},
        {128, 4, 6.59}, {128, 8, 13.16}, {128, 16, 26.31},
    };
    return table;
}

const std::vector<BitrateExpectation>& bitrate_expectations() {
    static const std::vector<BitrateExpectation> table = {
        {32, 1.32, 0.4},
        {64, 2.63, 0.8},
        {128, 5.26, 1.6},
    };
    return table;
}

const std::vector<AcceleratorRequirement>& accelerator_survey() {
    static const std::vector<AcceleratorRequirement> table = {
        {"100x", "GPU", "BFV, CKKS", {900.0}},
        {"cryptGPU", "GPU", "MPC", {1.25}},
        {"TensorFHE", "GPU", "BFV, CKKS", {2400.0}},
        {"HEAX", "FPGA", "CKKS", {34.0, 64.0}},
        {"Poseidon", "FPGA", "BFV, CKKS", {460.0}},
        {"FAB", "FPGA", "BFV, CKKS", {460.0}},
        {"F1", "ASIC", "BFV, CKKS", {1000.0}},
        {"CraterLake", "ASIC", "BFV, CKKS", {2400.0}},
        {"BTS", "ASIC", "BFV, CKKS", {1000.0}},
        {"ARK", "ASIC", "BFV, CKKS", {1000.0}},
    };
    return table;
}

}  // namespace optolink::refdata
