#include "flipdec/csvio.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "flipdec/error.hpp"

namespace flipdec {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

/// Code and decoder names may embed commas (bch:15,7); quote when needed.
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const RunManifest& manifest,
                     const std::vector<SweepRow>& rows) {
  os << "# flipdec " << manifest.tool_version << "\n";
  os << "# timestamp " << manifest.timestamp << "\n";
  os << "# seed " << manifest.master_seed << "\n";
  for (const auto& line : manifest.config_lines) os << "# " << line << "\n";
  os << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    os << csv_quote(r.code) << ',' << csv_quote(r.decoder) << ','
       << format_double(r.ebno_db) << ','
       << r.bits_sent << ',' << r.bit_errors << ',' << format_double(r.ber) << ','
       << r.words_sent << ',' << r.word_errors << ',' << format_double(r.wer) << ','
       << format_double(r.avg_queries) << ',' << r.max_queries << ',' << r.abandoned
       << ',' << r.seed << "\n";
  }
}

void write_sweep_csv_file(const std::string& path, const RunManifest& manifest,
                          const std::vector<SweepRow>& rows) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("cannot open '" + path + "' for writing");
  write_sweep_csv(os, manifest, rows);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted)
    throw InvalidArgument("csv line " + std::to_string(line_no) + ": unterminated quote");
  out.push_back(std::move(field));
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw InvalidArgument("csv line " + std::to_string(line_no) + ": bad number '" + s +
                          "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw InvalidArgument("csv line " + std::to_string(line_no) + ": bad count '" + s +
                          "'");
  return v;
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::vector<SweepRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kSweepCsvHeader)
        throw InvalidArgument("csv line " + std::to_string(line_no) +
                              ": unexpected header");
      saw_header = true;
      continue;
    }
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 13)
      throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected 13 fields, got " +
                            std::to_string(f.size()));
    SweepRow r;
    r.code = f[0];
    r.decoder = f[1];
    r.ebno_db = parse_double(f[2], line_no);
    r.bits_sent = parse_u64(f[3], line_no);
    r.bit_errors = parse_u64(f[4], line_no);
    r.ber = parse_double(f[5], line_no);
    r.words_sent = parse_u64(f[6], line_no);
    r.word_errors = parse_u64(f[7], line_no);
    r.wer = parse_double(f[8], line_no);
    r.avg_queries = parse_double(f[9], line_no);
    r.max_queries = parse_u64(f[10], line_no);
    r.abandoned = parse_u64(f[11], line_no);
    r.seed = parse_u64(f[12], line_no);
    rows.push_back(std::move(r));
  }
  if (!saw_header) throw InvalidArgument("csv: missing header");
  return rows;
}

std::vector<SweepRow> read_sweep_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open '" + path + "'");
  return read_sweep_csv(is);
}

BerCurve curve_from_rows(const std::vector<SweepRow>& rows, const std::string& code,
                         const std::string& decoder) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& r : rows) pairs.insert({r.code, r.decoder});
  std::string want_code = code;
  std::string want_dec = decoder;
  if (want_code.empty() && want_dec.empty()) {
    if (pairs.size() != 1)
      throw InvalidArgument("curve selection is ambiguous: file holds " +
                            std::to_string(pairs.size()) + " (code, decoder) pairs");
    want_code = pairs.begin()->first;
    want_dec = pairs.begin()->second;
  }
  BerCurve curve;
  curve.code = want_code;
  curve.decoder = want_dec;
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if ((want_code.empty() || r.code == want_code) &&
        (want_dec.empty() || r.decoder == want_dec))
      pts.emplace_back(r.ebno_db, r.ber);
  }
  if (pts.empty())
    throw InvalidArgument("no rows match curve '" + want_code + "/" + want_dec + "'");
  std::sort(pts.begin(), pts.end());
  for (auto& [x, y] : pts) {
    curve.ebno_db.push_back(x);
    curve.ber.push_back(y);
  }
  return curve;
}

}  // namespace flipdec
