#pragma once

// File emission: CSV traces and figure data, JSON summary and manifest.
// Numbers are written with shortest round-trip formatting so repeated runs
// are byte-identical and golden files stay stable.

#include "wavesim/analysis.hpp"
#include "wavesim/config.hpp"
#include "wavesim/report.hpp"
#include "wavesim/solver.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wavesim {

std::string format_shortest(double v);

/// FNV-1a 64-bit digest (non-cryptographic fingerprint), as 16 hex digits.
std::string fnv1a64_hex(const std::string& data);

void write_trace_csv(const std::string& path, const WaveformTrace& trace);

/// Read a trace written by write_trace_csv. The fundamental frequency is not
/// stored in the CSV, so the caller supplies it.
WaveformTrace read_trace_csv(const std::string& path, double fundamental_hz);

/// Generic small-table writer for the per-figure plot data files.
void write_table_csv(const std::string& path, const std::vector<std::string>& headers,
                     const std::vector<std::span<const double>>& columns);

void write_text_file(const std::string& path, const std::string& text);

std::string summary_to_json(const SummaryReport& rep);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

struct RunManifest {
    std::string artifact_name = "wavesim";
    std::string artifact_version = "0.1.0";
    std::string scenario;
    std::string config_digest;
    std::string config_echo;
    std::vector<std::string> overrides;
    std::vector<std::string> emitted_files;
    std::vector<RunWarning> warnings;
};

std::string manifest_to_json(const RunManifest& m);

} // namespace wavesim
