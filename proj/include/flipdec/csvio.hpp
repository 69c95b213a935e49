#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flipdec/analysis.hpp"
#include "flipdec/harness.hpp"

namespace flipdec {

inline constexpr const char* kSweepCsvHeader =
    "code,decoder,ebno_db,bits_sent,bit_errors,ber,words_sent,word_errors,wer,"
    "avg_queries,max_queries,abandoned,seed";

/// Reproducibility metadata embedded as comment lines ahead of the header.
struct RunManifest {
  std::string tool_version;
  std::string timestamp;  // RFC3339-ish; the only line allowed to differ on reruns
  std::uint64_t master_seed = 0;
  std::vector<std::string> config_lines;  // echo of the resolved configuration
};

void write_sweep_csv(std::ostream& os, const RunManifest& manifest,
                     const std::vector<SweepRow>& rows);
void write_sweep_csv_file(const std::string& path, const RunManifest& manifest,
                          const std::vector<SweepRow>& rows);

/// Parses a sweep CSV (comment lines ignored); values round-trip exactly.
std::vector<SweepRow> read_sweep_csv(std::istream& is);
std::vector<SweepRow> read_sweep_csv_file(const std::string& path);

/// Collects the (ebno, ber) points of one (code, decoder) pair, sorted by
/// Eb/N0. Empty selectors are allowed when the file holds a single pair.
BerCurve curve_from_rows(const std::vector<SweepRow>& rows, const std::string& code = "",
                         const std::string& decoder = "");

/// Shortest-round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace flipdec
