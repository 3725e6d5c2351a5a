#include "wavesim/io.hpp"

#include "wavesim/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace wavesim {

using nlohmann::json;

std::string format_shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file '" + path + "'");
    out << text;
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

void write_trace_csv(const std::string& path, const WaveformTrace& trace) {
    std::string buf;
    buf.reserve(trace.size() * kSignalCount * 14 + 512);
    buf += "t_s";
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        buf += ',';
        buf += signal_name(static_cast<Signal>(s));
    }
    buf += '\n';
    for (std::size_t i = 0; i < trace.size(); ++i) {
        buf += format_shortest(trace.t[i]);
        for (std::size_t s = 0; s < kSignalCount; ++s) {
            buf += ',';
            buf += format_shortest(trace.cols[s][i]);
        }
        buf += '\n';
    }
    write_text_file(path, buf);
}

WaveformTrace read_trace_csv(const std::string& path, double fundamental_hz) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trace file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty trace file '" + path + "'");

    // Map header names back to signal slots.
    std::vector<int> slots;
    {
        std::stringstream hs(line);
        std::string name;
        bool first = true;
        while (std::getline(hs, name, ',')) {
            if (first) {
                if (name != "t_s") throw ConfigError("trace CSV must start with a t_s column");
                first = false;
                continue;
            }
            int slot = -1;
            for (std::size_t s = 0; s < kSignalCount; ++s) {
                if (name == signal_name(static_cast<Signal>(s))) {
                    slot = static_cast<int>(s);
                    break;
                }
            }
            if (slot < 0) throw ConfigError("unknown trace column '" + name + "'");
            slots.push_back(slot);
        }
    }

    WaveformTrace trace;
    trace.fundamental_hz = fundamental_hz;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::size_t idx = 0;
        while (std::getline(ls, cell, ',')) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc()) throw ConfigError("bad number in trace CSV: '" + cell + "'");
            if (idx == 0) {
                trace.t.push_back(v);
            } else {
                if (idx - 1 >= slots.size()) throw ConfigError("ragged row in trace CSV");
                trace.cols[static_cast<std::size_t>(slots[idx - 1])].push_back(v);
            }
            ++idx;
        }
    }
    if (trace.size() >= 2) trace.dt_sample = trace.t[1] - trace.t[0];
    return trace;
}

void write_table_csv(const std::string& path, const std::vector<std::string>& headers,
                     const std::vector<std::span<const double>>& columns) {
    if (headers.size() != columns.size() || columns.empty()) {
        throw ConfigError("write_table_csv: header/column mismatch");
    }
    std::string buf;
    for (std::size_t i = 0; i < headers.size(); ++i) {
        if (i) buf += ',';
        buf += headers[i];
    }
    buf += '\n';
    const std::size_t rows = columns[0].size();
    for (const auto& c : columns) {
        if (c.size() != rows) throw ConfigError("write_table_csv: ragged columns");
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) buf += ',';
            buf += format_shortest(columns[i][r]);
        }
        buf += '\n';
    }
    write_text_file(path, buf);
}

namespace {

json warnings_to_json(const std::vector<RunWarning>& warnings) {
    json arr = json::array();
    for (const auto& w : warnings) {
        arr.push_back({{"code", w.code}, {"message", w.message}});
    }
    return arr;
}

} // namespace

std::string summary_to_json(const SummaryReport& rep) {
    json j;
    j["scenario"] = rep.scenario;
    j["settled"] = rep.settled;
    j["window_t_begin_s"] = rep.window_t_begin;
    j["window_t_end_s"] = rep.window_t_end;
    j["v_rect_mean_V"] = rep.v_rect_mean;
    j["v_zeta_mean_V"] = rep.v_zeta_mean;
    j["zeta_gain_measured"] = rep.zeta_gain_measured;
    j["zeta_gain_analytic"] = rep.zeta_gain_analytic;
    j["ripple_zeta_out_Vpp"] = rep.ripple_zeta_out;
    j["v_load_fund_peak_V"] = rep.v_load_fund_peak;
    j["i_load_fund_peak_A"] = rep.i_load_fund_peak;
    j["v_load_peak_eq8_V"] = rep.v_load_peak_eq8;
    j["thd_v"] = rep.thd_v;
    j["thd_i"] = rep.thd_i;
    j["efficiency"] = rep.efficiency;
    j["energy_audit"] = {{"input_J", rep.audit.input_J},
                         {"output_J", rep.audit.output_J},
                         {"stored_delta_J", rep.audit.stored_delta_J},
                         {"residual_frac", rep.audit.residual_frac}};
    j["stress_sw_q1_V"] = rep.stress_sw_q1;
    j["stress_diode_V"] = rep.stress_diode;
    j["stress_s1_V"] = rep.stress_s1;
    j["stress_switch_predicted_V"] = rep.stress_switch_predicted;
    j["stress_diode_predicted_V"] = rep.stress_diode_predicted;
    j["ccm_flag"] = rep.ccm_flag;
    j["dcm_step_count"] = rep.dcm_step_count;
    j["warnings"] = warnings_to_json(rep.warnings);
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string buf = "duty,zeta_gain_analytic,boost_gain_analytic,zeta_gain_simulated,ccm,settled\n";
    for (const auto& r : rows) {
        buf += format_shortest(r.duty);
        buf += ',';
        buf += format_shortest(r.zeta_gain_analytic);
        buf += ',';
        buf += format_shortest(r.boost_gain_analytic);
        buf += ',';
        buf += r.zeta_gain_simulated ? format_shortest(*r.zeta_gain_simulated) : std::string("");
        buf += ',';
        buf += r.zeta_gain_simulated ? (r.ccm ? "1" : "0") : std::string("");
        buf += ',';
        buf += r.zeta_gain_simulated ? (r.settled ? "1" : "0") : std::string("");
        buf += '\n';
    }
    return buf;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json jr;
        jr["duty"] = r.duty;
        jr["zeta_gain_analytic"] = r.zeta_gain_analytic;
        jr["boost_gain_analytic"] = r.boost_gain_analytic;
        if (r.zeta_gain_simulated) {
            jr["zeta_gain_simulated"] = *r.zeta_gain_simulated;
            jr["ccm"] = r.ccm;
            jr["settled"] = r.settled;
        }
        if (!r.error.empty()) jr["error"] = r.error;
        arr.push_back(jr);
    }
    json j;
    j["points"] = arr;
    return j.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
    json j;
    j["artifact"] = {{"name", m.artifact_name}, {"version", m.artifact_version}};
    j["scenario"] = m.scenario;
    j["config_digest"] = m.config_digest;
    j["config_echo"] = m.config_echo;
    j["overrides"] = m.overrides;
    j["emitted_files"] = m.emitted_files;
    j["warnings"] = warnings_to_json(m.warnings);
    return j.dump(2) + "\n";
}

} // namespace wavesim
