#include "optolink/topology.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

namespace optolink::topo {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* role_name(ChannelRole role) {
    switch (role) {
        case ChannelRole::input_data: return "input_data";
        case ChannelRole::twiddle: return "twiddle";
        case ChannelRole::output: return "output";
    }
    return "input_data";
}

ChannelRole role_from_name(const std::string& name) {
    if (name == "input_data") return ChannelRole::input_data;
    if (name == "twiddle") return ChannelRole::twiddle;
    if (name == "output") return ChannelRole::output;
    throw TopologyParseError("unknown channel role '" + name + "'");
}

int OptoLinkTopology::channel_count() const {
    int count = 0;
    for (const auto& wg : waveguides) count += static_cast<int>(wg.channels.size());
    return count;
}

int OptoLinkTopology::channel_count(ChannelRole role) const {
    int count = 0;
    for (const auto& wg : waveguides)
        for (const auto& ch : wg.channels)
            if (ch.role == role) ++count;
    return count;
}

int OptoLinkTopology::distinct_wavelengths() const {
    std::set<int> ids;
    for (const auto& wg : waveguides)
        for (const auto& ch : wg.channels) ids.insert(ch.wavelength_id);
    return static_cast<int>(ids.size());
}

int OptoLinkTopology::rings_on_waveguide(int waveguide_id) const {
    for (const auto& wg : waveguides)
        if (wg.id == waveguide_id) return 2 * static_cast<int>(wg.channels.size());
    return 0;
}

OptoLinkTopology build_reference_topology(int num_cores, int bitwidth,
                                          double waveguide_length_um) {
    if (num_cores < 1) throw InvalidCountError("num_cores must be >= 1");
    if (bitwidth < 1) throw InvalidCountError("bitwidth must be >= 1");
    if (waveguide_length_um < 0.0) throw InvalidCountError("waveguide length must be >= 0");

    OptoLinkTopology t;
    t.num_cores = num_cores;
    t.bitwidth = bitwidth;
    t.waveguides.resize(5);
    for (int i = 0; i < 5; ++i) {
        t.waveguides[i].id = i + 1;
        t.waveguides[i].length_um = waveguide_length_um;
    }

    const Endpoint mc = Endpoint::memory_controller();
    auto add = [&](int wg, int wavelength, ChannelRole role, Endpoint src, Endpoint dst) {
        t.waveguides[wg - 1].channels.push_back(
            OpticalChannel{wavelength, wg, role, src, dst});
    };

    // Wavelengths 1..4C feed the cores (guides 1-2 input, 3-4 twiddle with
    // the same ids reused), 4C+1..6C return results on guide 5.
    for (int c = 0; c < num_cores; ++c) {
        const int base = 4 * c;
        add(1, base + 1, ChannelRole::input_data, mc, Endpoint::core(c));
        add(1, base + 2, ChannelRole::input_data, mc, Endpoint::core(c));
        add(2, base + 3, ChannelRole::input_data, mc, Endpoint::core(c));
        add(2, base + 4, ChannelRole::input_data, mc, Endpoint::core(c));
        add(3, base + 1, ChannelRole::twiddle, mc, Endpoint::core(c));
        add(3, base + 2, ChannelRole::twiddle, mc, Endpoint::core(c));
        add(4, base + 3, ChannelRole::twiddle, mc, Endpoint::core(c));
        add(4, base + 4, ChannelRole::twiddle, mc, Endpoint::core(c));
        const int out_base = 4 * num_cores + 2 * c;
        add(5, out_base + 1, ChannelRole::output, Endpoint::core(c), mc);
        add(5, out_base + 2, ChannelRole::output, Endpoint::core(c), mc);
    }
    return t;
}

ValidationReport validate_topology(const OptoLinkTopology& t) {
    ValidationReport report;
    auto flag = [&](std::string code, std::string message) {
        report.violations.push_back(Violation{std::move(code), std::move(message)});
    };

    if (t.num_cores < 1) flag("invalid_count", "topology declares no cores");
    if (t.bitwidth < 1) flag("invalid_count", "topology declares no bitwidth");

    for (const auto& wg : t.waveguides) {
        std::unordered_set<int> seen;
        for (const auto& ch : wg.channels) {
            if (!seen.insert(ch.wavelength_id).second)
                flag("duplicate_wavelength",
                     "wavelength " + std::to_string(ch.wavelength_id) +
                         " multiplexed twice in waveguide " + std::to_string(wg.id));
        }
    }

    for (const auto& wg : t.waveguides) {
        for (const auto& ch : wg.channels) {
            if (ch.source == ch.sink)
                flag("dangling_endpoint", "channel " + std::to_string(ch.wavelength_id) +
                                              " loops back to its source");
            for (const Endpoint& ep : {ch.source, ch.sink}) {
                if (!ep.is_memory_controller() && ep.core_id >= t.num_cores)
                    flag("dangling_endpoint",
                         "channel " + std::to_string(ch.wavelength_id) + " references core " +
                             std::to_string(ep.core_id) + " outside 0.." +
                             std::to_string(t.num_cores - 1));
            }
            const bool outbound = ch.role == ChannelRole::output;
            if (outbound && (ch.source.is_memory_controller() || !ch.sink.is_memory_controller()))
                flag("role_direction", "output channel " + std::to_string(ch.wavelength_id) +
                                           " must run core -> memory controller");
            if (!outbound && (!ch.source.is_memory_controller() || ch.sink.is_memory_controller()))
                flag("role_direction", std::string(role_name(ch.role)) + " channel " +
                                           std::to_string(ch.wavelength_id) +
                                           " must run memory controller -> core");
        }
    }

    for (int c = 0; c < t.num_cores; ++c) {
        for (ChannelRole role :
             {ChannelRole::input_data, ChannelRole::twiddle, ChannelRole::output}) {
            bool found = false;
            for (const auto& wg : t.waveguides) {
                for (const auto& ch : wg.channels) {
                    const Endpoint& core_end =
                        role == ChannelRole::output ? ch.source : ch.sink;
                    if (ch.role == role && core_end == Endpoint::core(c)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found)
                flag("missing_role", "core " + std::to_string(c) + " has no " +
                                         role_name(role) + " channel");
        }
    }
    return report;
}

WavelengthDemand wavelength_demand(const OptoLinkTopology& t) {
    WavelengthDemand d;
    d.distinct_wavelengths = t.distinct_wavelengths();
    for (const auto& wg : t.waveguides)
        d.max_per_waveguide =
            std::max(d.max_per_waveguide, static_cast<int>(wg.channels.size()));
    d.exceeds_wdm_limit = d.max_per_waveguide > kWdmWavelengthLimit;
    return d;
}

namespace {

std::string endpoint_to_string(const Endpoint& ep) {
    return ep.is_memory_controller() ? "memory_controller"
                                     : "core:" + std::to_string(ep.core_id);
}

Endpoint endpoint_from_string(const std::string& s) {
    if (s == "memory_controller") return Endpoint::memory_controller();
    if (s.rfind("core:", 0) == 0) {
        try {
            return Endpoint::core(std::stoi(s.substr(5)));
        } catch (const std::exception&) {
        }
    }
    throw TopologyParseError("bad endpoint '" + s + "'");
}

}  // namespace

std::string OptoLinkTopology::to_json_string(int indent) const {
    ordered_json j;
    j["num_cores"] = num_cores;
    j["bitwidth"] = bitwidth;
    j["waveguides"] = ordered_json::array();
    for (const auto& wg : waveguides) {
        ordered_json jw;
        jw["id"] = wg.id;
        jw["length_um"] = wg.length_um;
        jw["channels"] = ordered_json::array();
        for (const auto& ch : wg.channels) {
            ordered_json jc;
            jc["wavelength_id"] = ch.wavelength_id;
            jc["role"] = role_name(ch.role);
            jc["source"] = endpoint_to_string(ch.source);
            jc["sink"] = endpoint_to_string(ch.sink);
            jw["channels"].push_back(std::move(jc));
        }
        j["waveguides"].push_back(std::move(jw));
    }
    return j.dump(indent);
}

OptoLinkTopology OptoLinkTopology::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw TopologyParseError(std::string("topology JSON parse failed: ") + e.what());
    }
    try {
        OptoLinkTopology t;
        t.num_cores = j.at("num_cores").get<int>();
        t.bitwidth = j.at("bitwidth").get<int>();
        for (const auto& jw : j.at("waveguides")) {
            Waveguide wg;
            wg.id = jw.at("id").get<int>();
            wg.length_um = jw.value("length_um", 1000.0);
            for (const auto& jc : jw.at("channels")) {
                OpticalChannel ch;
                ch.wavelength_id = jc.at("wavelength_id").get<int>();
                ch.waveguide_id = wg.id;
                ch.role = role_from_name(jc.at("role").get<std::string>());
                ch.source = endpoint_from_string(jc.at("source").get<std::string>());
                ch.sink = endpoint_from_string(jc.at("sink").get<std::string>());
                wg.channels.push_back(ch);
            }
            t.waveguides.push_back(std::move(wg));
        }
        return t;
    } catch (const json::exception& e) {
        throw TopologyParseError(std::string("topology JSON malformed: ") + e.what());
    }
}

}  // namespace optolink::topo
