#include "optolink/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace optolink::scenario {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ScenarioError(where + " must be a JSON object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key))
            throw ScenarioError("unknown field '" + key + "' in " + where);
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number())
        throw ScenarioError(where + "." + key + " must be a number");
    return obj.at(key).get<double>();
}

bool get_bool(const json& obj, const std::string& where, const std::string& key,
              bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean())
        throw ScenarioError(where + "." + key + " must be a boolean");
    return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const std::string& where, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string())
        throw ScenarioError(where + "." + key + " must be a string");
    return obj.at(key).get<std::string>();
}

photonics::PhotonicParams parse_photonic(const json& obj) {
    photonics::PhotonicParams p;
    require_keys(obj, "photonic",
                 {"laser_source_loss_db", "coupler_loss_db", "splitter_loss_db",
                  "waveguide_loss_db_per_cm", "ring_drop_loss_db", "ring_through_loss_db",
                  "photodetector_loss_db", "ring_heating_mw", "tx_power_mw_per_channel",
                  "rx_power_mw_per_channel", "per_wavelength_gbit_per_s",
                  "per_channel_gbyte_per_s", "laser_wall_mw_per_channel",
                  "rx_sensitivity_dbm"});
    p.laser_source_loss_db = get_number(obj, "photonic", "laser_source_loss_db", p.laser_source_loss_db);
    p.coupler_loss_db = get_number(obj, "photonic", "coupler_loss_db", p.coupler_loss_db);
    p.splitter_loss_db = get_number(obj, "photonic", "splitter_loss_db", p.splitter_loss_db);
    p.waveguide_loss_db_per_cm =
        get_number(obj, "photonic", "waveguide_loss_db_per_cm", p.waveguide_loss_db_per_cm);
    p.ring_drop_loss_db = get_number(obj, "photonic", "ring_drop_loss_db", p.ring_drop_loss_db);
    p.ring_through_loss_db =
        get_number(obj, "photonic", "ring_through_loss_db", p.ring_through_loss_db);
    p.photodetector_loss_db =
        get_number(obj, "photonic", "photodetector_loss_db", p.photodetector_loss_db);
    p.ring_heating_mw = get_number(obj, "photonic", "ring_heating_mw", p.ring_heating_mw);
    p.tx_power_mw_per_channel =
        get_number(obj, "photonic", "tx_power_mw_per_channel", p.tx_power_mw_per_channel);
    p.rx_power_mw_per_channel =
        get_number(obj, "photonic", "rx_power_mw_per_channel", p.rx_power_mw_per_channel);
    p.per_wavelength_gbit_per_s =
        get_number(obj, "photonic", "per_wavelength_gbit_per_s", p.per_wavelength_gbit_per_s);
    p.per_channel_gbyte_per_s =
        get_number(obj, "photonic", "per_channel_gbyte_per_s", p.per_channel_gbyte_per_s);
    p.laser_wall_mw_per_channel =
        get_number(obj, "photonic", "laser_wall_mw_per_channel", p.laser_wall_mw_per_channel);
    p.rx_sensitivity_dbm =
        get_number(obj, "photonic", "rx_sensitivity_dbm", p.rx_sensitivity_dbm);
    return p;
}

sim::Workload parse_workload(const json& obj) {
    sim::Workload w;
    require_keys(obj, "workload",
                 {"n", "coefficient_bits", "transforms", "butterflies_per_s",
                  "twiddle_traffic", "override"});
    w.n = static_cast<std::uint64_t>(get_number(obj, "workload", "n", static_cast<double>(w.n)));
    w.coefficient_bits = static_cast<int>(
        get_number(obj, "workload", "coefficient_bits", w.coefficient_bits));
    w.transforms = static_cast<std::uint64_t>(
        get_number(obj, "workload", "transforms", static_cast<double>(w.transforms)));
    w.butterflies_per_s = get_number(obj, "workload", "butterflies_per_s", w.butterflies_per_s);

    const std::string twiddle = get_string(obj, "workload", "twiddle_traffic", "full_table");
    if (twiddle == "full_table") w.twiddle_traffic = sim::TwiddleTraffic::full_table;
    else if (twiddle == "none") w.twiddle_traffic = sim::TwiddleTraffic::none;
    else if (twiddle == "per_stage") w.twiddle_traffic = sim::TwiddleTraffic::per_stage;
    else throw ScenarioError("workload.twiddle_traffic must be full_table|none|per_stage");

    if (obj.contains("override")) {
        const json& o = obj.at("override");
        require_keys(o, "workload.override",
                     {"bytes_in", "bytes_twiddle", "bytes_out", "compute_ops", "ops_per_s"});
        sim::WorkloadOverride ov;
        ov.bytes_in = get_number(o, "workload.override", "bytes_in", 0.0);
        ov.bytes_twiddle = get_number(o, "workload.override", "bytes_twiddle", 0.0);
        ov.bytes_out = get_number(o, "workload.override", "bytes_out", 0.0);
        ov.compute_ops = get_number(o, "workload.override", "compute_ops", 0.0);
        ov.ops_per_s = get_number(o, "workload.override", "ops_per_s", 1.0);
        w.override_counts = ov;
    }
    return w;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
    }

    require_keys(doc, "scenario",
                 {"schema_version", "photonic", "topology", "workload", "sim", "sweep",
                  "output_format"});
    Scenario s;
    if (!doc.contains("schema_version") || !doc.at("schema_version").is_number_integer())
        throw ScenarioError("scenario.schema_version (integer) is required");
    s.schema_version = doc.at("schema_version").get<int>();
    if (s.schema_version != kSchemaVersion)
        throw ScenarioError("unsupported schema_version " + std::to_string(s.schema_version));

    if (doc.contains("photonic")) s.config.photonic = parse_photonic(doc.at("photonic"));

    if (doc.contains("topology")) {
        const json& t = doc.at("topology");
        require_keys(t, "topology", {"cores", "bitwidth", "waveguide_length_um", "inline"});
        if (t.contains("inline")) {
            if (t.contains("cores") || t.contains("bitwidth"))
                throw ScenarioError("topology.inline excludes cores/bitwidth");
            s.config.explicit_topology =
                topo::OptoLinkTopology::from_json_string(t.at("inline").dump());
            s.config.cores = s.config.explicit_topology->num_cores;
            s.config.bitwidth = s.config.explicit_topology->bitwidth;
        } else {
            s.config.cores = static_cast<int>(get_number(t, "topology", "cores", 4));
            s.config.bitwidth = static_cast<int>(get_number(t, "topology", "bitwidth", 128));
            s.config.waveguide_length_um =
                get_number(t, "topology", "waveguide_length_um", 1000.0);
        }
    }

    if (doc.contains("workload")) s.config.workload = parse_workload(doc.at("workload"));

    if (doc.contains("sim")) {
        const json& o = doc.at("sim");
        require_keys(o, "sim",
                     {"overlap", "memory_bandwidth_gbyte_per_s", "conflict_buffer_depth"});
        s.config.options.overlap = get_bool(o, "sim", "overlap", true);
        if (o.contains("memory_bandwidth_gbyte_per_s"))
            s.config.options.memory_bandwidth_gbyte_per_s =
                get_number(o, "sim", "memory_bandwidth_gbyte_per_s", 0.0);
        if (o.contains("conflict_buffer_depth"))
            s.config.options.conflict_buffer_depth = static_cast<std::uint32_t>(
                get_number(o, "sim", "conflict_buffer_depth", 0.0));
    }

    if (doc.contains("sweep")) {
        const json& o = doc.at("sweep");
        require_keys(o, "sweep", {"axis", "values"});
        SweepSpec spec;
        try {
            spec.axis = sim::sweep_axis_from_name(get_string(o, "sweep", "axis", ""));
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(e.what());
        }
        if (!o.contains("values") || !o.at("values").is_array())
            throw ScenarioError("sweep.values must be an array of numbers");
        for (const auto& v : o.at("values")) {
            if (!v.is_number()) throw ScenarioError("sweep.values must be numbers");
            spec.values.push_back(v.get<double>());
        }
        s.sweep = spec;
    }

    if (doc.contains("output_format")) {
        const std::string f = get_string(doc, "scenario", "output_format", "csv");
        if (f != "csv" && f != "json")
            throw ScenarioError("output_format must be 'csv' or 'json'");
        s.output_format = f;
    }
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s, int indent) {
    ordered_json doc;
    doc["schema_version"] = s.schema_version;

    const photonics::PhotonicParams defaults;
    const photonics::PhotonicParams& p = s.config.photonic;
    ordered_json jp;
    auto set_if = [&](const char* key, double value, double fallback) {
        if (value != fallback) jp[key] = value;
    };
    set_if("laser_source_loss_db", p.laser_source_loss_db, defaults.laser_source_loss_db);
    set_if("coupler_loss_db", p.coupler_loss_db, defaults.coupler_loss_db);
    set_if("splitter_loss_db", p.splitter_loss_db, defaults.splitter_loss_db);
    set_if("waveguide_loss_db_per_cm", p.waveguide_loss_db_per_cm,
           defaults.waveguide_loss_db_per_cm);
    set_if("ring_drop_loss_db", p.ring_drop_loss_db, defaults.ring_drop_loss_db);
    set_if("ring_through_loss_db", p.ring_through_loss_db, defaults.ring_through_loss_db);
    set_if("photodetector_loss_db", p.photodetector_loss_db, defaults.photodetector_loss_db);
    set_if("ring_heating_mw", p.ring_heating_mw, defaults.ring_heating_mw);
    set_if("tx_power_mw_per_channel", p.tx_power_mw_per_channel,
           defaults.tx_power_mw_per_channel);
    set_if("rx_power_mw_per_channel", p.rx_power_mw_per_channel,
           defaults.rx_power_mw_per_channel);
    set_if("per_wavelength_gbit_per_s", p.per_wavelength_gbit_per_s,
           defaults.per_wavelength_gbit_per_s);
    set_if("per_channel_gbyte_per_s", p.per_channel_gbyte_per_s,
           defaults.per_channel_gbyte_per_s);
    set_if("laser_wall_mw_per_channel", p.laser_wall_mw_per_channel,
           defaults.laser_wall_mw_per_channel);
    set_if("rx_sensitivity_dbm", p.rx_sensitivity_dbm, defaults.rx_sensitivity_dbm);
    if (!jp.empty()) doc["photonic"] = jp;

    ordered_json jt;
    if (s.config.explicit_topology) {
        jt["inline"] = ordered_json::parse(s.config.explicit_topology->to_json_string());
    } else {
        jt["cores"] = s.config.cores;
        jt["bitwidth"] = s.config.bitwidth;
        jt["waveguide_length_um"] = s.config.waveguide_length_um;
    }
    doc["topology"] = jt;

    const sim::Workload& w = s.config.workload;
    ordered_json jw;
    jw["n"] = w.n;
    jw["coefficient_bits"] = w.coefficient_bits;
    jw["transforms"] = w.transforms;
    if (w.butterflies_per_s != 0.0) jw["butterflies_per_s"] = w.butterflies_per_s;
    switch (w.twiddle_traffic) {
        case sim::TwiddleTraffic::full_table: jw["twiddle_traffic"] = "full_table"; break;
        case sim::TwiddleTraffic::none: jw["twiddle_traffic"] = "none"; break;
        case sim::TwiddleTraffic::per_stage: jw["twiddle_traffic"] = "per_stage"; break;
    }
    if (w.override_counts) {
        ordered_json jo;
        jo["bytes_in"] = w.override_counts->bytes_in;
        jo["bytes_twiddle"] = w.override_counts->bytes_twiddle;
        jo["bytes_out"] = w.override_counts->bytes_out;
        jo["compute_ops"] = w.override_counts->compute_ops;
        jo["ops_per_s"] = w.override_counts->ops_per_s;
        jw["override"] = jo;
    }
    doc["workload"] = jw;

    ordered_json js;
    js["overlap"] = s.config.options.overlap;
    if (s.config.options.memory_bandwidth_gbyte_per_s)
        js["memory_bandwidth_gbyte_per_s"] = *s.config.options.memory_bandwidth_gbyte_per_s;
    if (s.config.options.conflict_buffer_depth)
        js["conflict_buffer_depth"] = *s.config.options.conflict_buffer_depth;
    doc["sim"] = js;

    if (s.sweep) {
        ordered_json jsw;
        jsw["axis"] = sim::sweep_axis_name(s.sweep->axis);
        jsw["values"] = s.sweep->values;
        doc["sweep"] = jsw;
    }
    if (s.output_format) doc["output_format"] = *s.output_format;
    return doc.dump(indent);
}

}  // namespace optolink::scenario
