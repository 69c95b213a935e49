#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flipdec/analysis.hpp"
#include "flipdec/baseline.hpp"
#include "flipdec/channel.hpp"
#include "flipdec/codes.hpp"
#include "flipdec/config.hpp"
#include "flipdec/csvio.hpp"
#include "flipdec/error.hpp"
#include "flipdec/flip_decoder.hpp"
#include "flipdec/harness.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string now_rfc3339() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string maybe_load_file(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream is(arg.substr(1));
  if (!is) throw flipdec::InvalidArgument("cannot open vector file '" + arg.substr(1) + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  std::string s = ss.str();
  for (auto& c : s)
    if (c == '\n' || c == '\t' || c == ' ') c = ',';
  return s;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string item = s.substr(pos, next - pos);
    std::size_t b = item.find_first_not_of(" \t\r");
    if (b != std::string::npos) {
      std::size_t e = item.find_last_not_of(" \t\r");
      out.push_back(item.substr(b, e - b + 1));
    }
    pos = next + 1;
  }
  return out;
}

flipdec::BitWord parse_bits(const std::string& arg) {
  const auto toks = split_tokens(maybe_load_file(arg));
  flipdec::BitWord w(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "1")
      w.set(i, true);
    else if (toks[i] != "0")
      throw flipdec::InvalidArgument("bit vector: bad token '" + toks[i] +
                                     "' at position " + std::to_string(i + 1));
  }
  return w;
}

std::vector<double> parse_reals(const std::string& arg) {
  const auto toks = split_tokens(maybe_load_file(arg));
  std::vector<double> out;
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(toks[i], &used));
      if (used != toks[i].size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw flipdec::InvalidArgument("real vector: bad token '" + toks[i] +
                                     "' at position " + std::to_string(i + 1));
    }
  }
  return out;
}

int cmd_codes() {
  for (const auto& spec : flipdec::stock_code_specs()) {
    const auto code = flipdec::parse_code_spec(spec);
    char rate[16];
    std::snprintf(rate, sizeof(rate), "%.4f", code.rate());
    std::cout << spec << "  n=" << code.n << "  k=" << code.k
              << "  d_min=" << code.d_min << "  rate=" << rate << "\n";
  }
  return 0;
}

int cmd_decode(const std::string& code_spec, const std::string& decoder_spec,
               const std::string& r_arg, const std::string& h_arg) {
  const auto code = flipdec::parse_code_spec(code_spec);
  const auto r = parse_bits(r_arg);
  if (r.size() != code.n)
    throw flipdec::InvalidArgument("r has length " + std::to_string(r.size()) +
                                   ", code needs n=" + std::to_string(code.n));
  std::vector<double> h;
  if (h_arg.empty()) {
    h.assign(code.n, 1.0);
  } else {
    h = parse_reals(h_arg);
    if (h.size() != code.n)
      throw flipdec::InvalidArgument("h has length " + std::to_string(h.size()) +
                                     ", code needs n=" + std::to_string(code.n));
  }
  const auto decoder = flipdec::make_decoder(code, decoder_spec);

  // soft decoders get a synthetic noiseless observation consistent with (r, h)
  flipdec::ChannelObservation obs;
  obs.h = h;
  obs.rho_c_bar = 1.0;
  obs.y_re.resize(code.n);
  obs.y_im.assign(code.n, 0.0);
  for (std::size_t j = 0; j < code.n; ++j) obs.y_re[j] = h[j] * (r.get(j) ? -1.0 : 1.0);

  const flipdec::DecodeInput in{r, h, &obs, 0.0};
  const auto out = decoder->decode(in);

  const auto flip = r ^ out.codeword_hat;
  std::cout << "codeword: " << out.codeword_hat.to_string() << "\n";
  std::cout << "message:  " << out.codeword_hat.prefix(code.k).to_string() << "\n";
  std::cout << "queries: " << out.queries << "\n";
  std::cout << "valid: " << (out.found_valid ? "yes" : "no") << "\n";
  std::cout << "flips: " << out.flips_applied;
  if (flip.weight() > 0) {
    std::cout << " (positions";
    for (std::size_t j = 0; j < code.n; ++j)
      if (flip.get(j)) std::cout << ' ' << j + 1;
    std::cout << ")";
  }
  std::cout << "\n";
  if (out.abandoned) std::cout << "abandoned: yes\n";
  return 0;
}

int cmd_simulate(const std::string& config_path, std::uint64_t seed_override,
                 bool has_seed, const std::string& out_override, int workers_override) {
  auto cfg = flipdec::parse_config_file(config_path);
  if (has_seed) cfg.sweep.master_seed = seed_override;
  if (!out_override.empty()) cfg.output_path = out_override;
  if (workers_override > 0) cfg.sweep.workers = static_cast<unsigned>(workers_override);
  if (cfg.sweep.workers == 0) {
    if (const char* env = std::getenv("FLIPDEC_WORKERS"))
      cfg.sweep.workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (cfg.output_path.empty())
    throw flipdec::InvalidArgument("config: missing output.csv (or pass --out)");

  const auto rows = flipdec::run_sweep(cfg.sweep);

  flipdec::RunManifest manifest;
  manifest.tool_version = kVersion;
  manifest.timestamp = now_rfc3339();
  manifest.master_seed = cfg.sweep.master_seed;
  manifest.config_lines = flipdec::config_echo_lines(cfg);
  flipdec::write_sweep_csv_file(cfg.output_path, manifest, rows);
  std::cout << "wrote " << rows.size() << " rows to " << cfg.output_path << "\n";
  return 0;
}

int cmd_bound(std::size_t n, std::size_t d_min, double rate,
              const std::string& grid_arg, const std::string& out_path) {
  const auto grid = parse_reals(grid_arg);
  if (grid.empty()) throw flipdec::InvalidArgument("bound: empty grid");
  flipdec::BoundInput input;
  input.n = n;
  input.d_min = d_min;
  for (double db : grid) input.rho_c_bar.push_back(rate * std::pow(10.0, db / 10.0));
  const auto values = flipdec::pfd_bound(input);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw flipdec::InvalidArgument("cannot open '" + out_path + "'");
    os = &file;
  }
  *os << "ebno_db,rho_c_bar,bound\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    *os << flipdec::format_double(grid[i]) << ','
        << flipdec::format_double(input.rho_c_bar[i]) << ','
        << flipdec::format_double(values[i]) << "\n";
  return 0;
}

std::pair<std::string, std::string> parse_select(const std::string& sel) {
  if (sel.empty()) return {"", ""};
  const std::size_t at = sel.find('/');
  if (at == std::string::npos)
    throw flipdec::InvalidArgument("curve selector wants code/decoder, got '" + sel + "'");
  return {sel.substr(0, at), sel.substr(at + 1)};
}

int cmd_gain(const std::string& coded_path, const std::string& ref_path,
             double target_ber, const std::string& coded_sel,
             const std::string& ref_sel) {
  const auto coded_rows = flipdec::read_sweep_csv_file(coded_path);
  const auto ref_rows = flipdec::read_sweep_csv_file(ref_path);
  const auto [cc, cd] = parse_select(coded_sel);
  const auto [rc, rd] = parse_select(ref_sel);
  const auto coded = flipdec::curve_from_rows(coded_rows, cc, cd);
  const auto ref = flipdec::curve_from_rows(ref_rows, rc, rd);
  const double coded_db = flipdec::ebno_at_ber(coded, target_ber);
  const double ref_db = flipdec::ebno_at_ber(ref, target_ber);
  std::cout << "coded_ebno_db: " << flipdec::format_double(coded_db) << "\n";
  std::cout << "reference_ebno_db: " << flipdec::format_double(ref_db) << "\n";
  std::cout << "gain_db: " << flipdec::format_double(ref_db - coded_db) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flip decoding toolkit: universal CSI-guided bit-flip decoders, "
               "baselines, fading-channel sweeps and error bounds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* codes = app.add_subcommand("codes", "list the stock code constructions");

  auto* decode = app.add_subcommand("decode", "decode one received word");
  decode->set_help_flag("--help", "print help");  // frees -h / --h for the CSI vector
  std::string d_code, d_decoder = "dfd", d_r, d_h;
  decode->add_option("--code", d_code, "code spec, e.g. bch:15,7")->required();
  decode->add_option("--decoder", d_decoder, "decoder spec (default dfd)");
  decode->add_option("--r", d_r, "received bits, comma separated or @file")->required();
  decode->add_option("--h", d_h, "CSI magnitudes, comma separated or @file");

  auto* simulate = app.add_subcommand("simulate", "run a Monte-Carlo sweep from a config file");
  std::string s_config, s_out;
  std::uint64_t s_seed = 0;
  int s_workers = 0;
  simulate->add_option("config", s_config, "sweep config file")->required();
  auto* seed_opt = simulate->add_option("--seed", s_seed, "override master seed");
  simulate->add_option("--out", s_out, "override output CSV path");
  simulate->add_option("--workers", s_workers, "worker thread count");

  auto* bound = app.add_subcommand("bound", "evaluate the flip-decoder error bound");
  std::size_t b_n = 0, b_dmin = 0;
  double b_rate = 1.0;
  std::string b_grid, b_out;
  bound->add_option("--n", b_n, "code length")->required();
  bound->add_option("--dmin", b_dmin, "minimum distance")->required();
  bound->add_option("--rate", b_rate, "code rate for the Eb/N0 -> SNR mapping");
  bound->add_option("--ebno-db", b_grid, "Eb/N0 grid, comma separated")->required();
  bound->add_option("--out", b_out, "output CSV (stdout when omitted)");

  auto* gain = app.add_subcommand("gain", "coding gain between two sweep CSVs");
  std::string g_coded, g_ref, g_coded_sel, g_ref_sel;
  double g_target = 1e-5;
  gain->add_option("--coded", g_coded, "coded curve CSV")->required();
  gain->add_option("--reference", g_ref, "reference curve CSV")->required();
  gain->add_option("--target-ber", g_target, "target BER")->required();
  gain->add_option("--coded-select", g_coded_sel, "code/decoder when ambiguous");
  gain->add_option("--reference-select", g_ref_sel, "code/decoder when ambiguous");

  try {
    app.parse(argc, argv);
    if (codes->parsed()) return cmd_codes();
    if (decode->parsed()) return cmd_decode(d_code, d_decoder, d_r, d_h);
    if (simulate->parsed())
      return cmd_simulate(s_config, s_seed, seed_opt->count() > 0, s_out, s_workers);
    if (bound->parsed()) return cmd_bound(b_n, b_dmin, b_rate, b_grid, b_out);
    if (gain->parsed()) return cmd_gain(g_coded, g_ref, g_target, g_coded_sel, g_ref_sel);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const flipdec::LimitRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const flipdec::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
