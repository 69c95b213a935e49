#include "flipdec/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "flipdec/csvio.hpp"
#include "flipdec/error.hpp"

namespace flipdec {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string item = trim(s.substr(pos, next - pos));
    if (!item.empty()) out.push_back(item);
    pos = next + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidArgument("config line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) fail(line, "trailing junk in number '" + v + "'");
    return d;
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "bad number '" + v + "'");
  }
}

std::uint64_t to_count(const std::string& v, std::size_t line) {
  // counts accept scientific notation (1e7) for convenience
  const double d = to_double(v, line);
  if (d < 0 || d > 9.2e18 || d != std::floor(d))
    fail(line, "'" + v + "' is not a nonnegative integer");
  return static_cast<std::uint64_t>(d);
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig cfg;
  bool have_code = false, have_decoders = false, have_grid = false;

  std::istringstream is(text);
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(line_no, "unterminated section header");
      section = t.substr(1, t.size() - 2);
      if (section != "code" && section != "decoders" && section != "channel" &&
          section != "stopping" && section != "run" && section != "output")
        fail(line_no, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) fail(line_no, "key '" + key + "' outside any section");

    if (section == "code") {
      if (key == "spec") {
        cfg.sweep.code_spec = value;
        have_code = true;
      } else {
        fail(line_no, "unknown key code." + key);
      }
    } else if (section == "decoders") {
      if (key == "list") {
        cfg.sweep.decoder_specs = split_list(value);
        have_decoders = !cfg.sweep.decoder_specs.empty();
      } else if (key == "abb") {
        cfg.sweep.grand.abandonment_threshold = to_count(value, line_no);
      } else {
        fail(line_no, "unknown key decoders." + key);
      }
    } else if (section == "channel") {
      if (key == "ebno_db") {
        cfg.sweep.ebno_grid_db.clear();
        for (const auto& item : split_list(value))
          cfg.sweep.ebno_grid_db.push_back(to_double(item, line_no));
        have_grid = !cfg.sweep.ebno_grid_db.empty();
      } else {
        fail(line_no, "unknown key channel." + key);
      }
    } else if (section == "stopping") {
      if (key == "min_bits") {
        cfg.sweep.stopping.min_bits = to_count(value, line_no);
      } else if (key == "min_word_errors") {
        cfg.sweep.stopping.min_word_errors = to_count(value, line_no);
      } else if (key == "max_words") {
        cfg.sweep.stopping.max_words = to_count(value, line_no);
      } else {
        fail(line_no, "unknown key stopping." + key);
      }
    } else if (section == "run") {
      if (key == "seed") {
        cfg.sweep.master_seed = to_count(value, line_no);
      } else if (key == "workers") {
        cfg.sweep.workers = static_cast<unsigned>(to_count(value, line_no));
      } else if (key == "chunk_words") {
        cfg.sweep.chunk_words = to_count(value, line_no);
        if (cfg.sweep.chunk_words == 0) fail(line_no, "chunk_words must be positive");
      } else {
        fail(line_no, "unknown key run." + key);
      }
    } else if (section == "output") {
      if (key == "csv") {
        cfg.output_path = value;
      } else {
        fail(line_no, "unknown key output." + key);
      }
    }
  }
  if (!have_code) throw InvalidArgument("config: missing code.spec");
  if (!have_decoders) throw InvalidArgument("config: missing decoders.list");
  if (!have_grid) throw InvalidArgument("config: missing channel.ebno_db");
  return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str());
}

std::vector<std::string> config_echo_lines(const ParsedConfig& cfg) {
  std::vector<std::string> out;
  out.push_back("code.spec=" + cfg.sweep.code_spec);
  std::string dl = "decoders.list=";
  for (std::size_t i = 0; i < cfg.sweep.decoder_specs.size(); ++i)
    dl += (i ? "," : "") + cfg.sweep.decoder_specs[i];
  out.push_back(dl);
  out.push_back("decoders.abb=" + std::to_string(cfg.sweep.grand.abandonment_threshold));
  std::string grid = "channel.ebno_db=";
  for (std::size_t i = 0; i < cfg.sweep.ebno_grid_db.size(); ++i)
    grid += (i ? "," : "") + format_double(cfg.sweep.ebno_grid_db[i]);
  out.push_back(grid);
  out.push_back("stopping.min_bits=" + std::to_string(cfg.sweep.stopping.min_bits));
  out.push_back("stopping.min_word_errors=" +
                std::to_string(cfg.sweep.stopping.min_word_errors));
  out.push_back("stopping.max_words=" + std::to_string(cfg.sweep.stopping.max_words));
  out.push_back("run.seed=" + std::to_string(cfg.sweep.master_seed));
  out.push_back("run.chunk_words=" + std::to_string(cfg.sweep.chunk_words));
  return out;
}

}  // namespace flipdec
