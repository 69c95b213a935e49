#pragma once

#include <string>
#include <vector>

#include "flipdec/harness.hpp"

namespace flipdec {

/// Sweep configuration file: flat INI-style sections of typed key = value
/// lines, '#' comments. Sections: [code], [decoders], [channel], [stopping],
/// [run], [output].
///
///   [code]
///   spec = bch:15,7
///   [decoders]
///   list = dfd, grand
///   abb = 1000000
///   [channel]
///   ebno_db = 10, 12, 14
///   [stopping]
///   min_bits = 1e7
///   min_word_errors = 100
///   max_words = 1e9
///   [run]
///   seed = 1
///   workers = 2
///   [output]
///   csv = sweep.csv
struct ParsedConfig {
  SweepConfig sweep;
  std::string output_path;
};

/// Throws InvalidArgument with "line N:" diagnostics on malformed input.
ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

/// Canonical key=value echo of a resolved config (embedded in CSV manifests).
std::vector<std::string> config_echo_lines(const ParsedConfig& cfg);

}  // namespace flipdec
