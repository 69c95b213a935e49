// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Individual criteria can be selected by number on the command line
// (e.g. ./acceptance 1 2 10) — the default runs everything.
//
// Heads-up on runtime: criterion 4 measures high-SNR BER slopes with at least
// 100 word errors per point, which costs tens of minutes of Monte-Carlo on a
// small machine. Everything else finishes in seconds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "flipdec/analysis.hpp"
#include "flipdec/baseline.hpp"
#include "flipdec/channel.hpp"
#include "flipdec/codes.hpp"
#include "flipdec/flip_decoder.hpp"
#include "flipdec/flip_patterns.hpp"
#include "flipdec/harness.hpp"
#include "flipdec/rng.hpp"

using namespace flipdec;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  const char* label;
  bool (*fn)();
};

bool expect(bool ok, const std::string& detail) {
  if (!ok) std::printf("    FAILED: %s\n", detail.c_str());
  return ok;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

BerCurve curve_of(const std::vector<SweepRow>& rows, const std::string& decoder) {
  BerCurve c;
  c.decoder = decoder;
  for (const auto& r : rows)
    if (r.decoder == decoder) {
      c.code = r.code;
      c.ebno_db.push_back(r.ebno_db);
      c.ber.push_back(r.ber);
    }
  return c;
}

// ---------------------------------------------------------------------------
// 1. Reference decode replay: exact codeword, success on the second flip
//    pattern (three queries total), under a millisecond.
bool criterion1() {
  const LinearCode code = parse_code_spec("bch:15,7");
  const DfdDecoder dec(code);
  const BitWord expected{1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0};
  const BitWord r{1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0};
  const std::vector<double> h = {1.0869, 0.7561, 2.496,  1.8351, 0.416,
                                 0.1256, 0.9395, 1.6002, 0.4133, 1.6239,
                                 0.0854, 1.1069, 0.817,  0.9698, 1.5772};
  const auto t0 = Clock::now();
  const auto out = dec.decode(DecodeInput{r, h, nullptr, 0.0});
  const auto t1 = Clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  bool ok = expect(out.codeword_hat == expected, "decoded word differs");
  ok &= expect(out.found_valid, "no valid codeword found");
  ok &= expect(out.queries == 3, "expected 3 queries (initial + 2 patterns), got " +
                                     std::to_string(out.queries));
  ok &= expect(out.flips_applied == 1, "expected a single flipped bit");
  ok &= expect(ms < 1.0, "decode took " + fmt(ms) + " ms");
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Flip-set fidelity: the 15-pattern window set for d_min 5 and the
//    6-pattern extended set for (7,4,3) with a one-bit extension.
bool criterion2() {
  bool ok = true;
  const FlipPatternSet phi = build_phi(5, 15);
  ok &= expect(phi.patterns.size() == 15, "plain set cardinality");
  const int plain[15][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
                            {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1},
                            {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1}, {0, 0, 1, 1},
                            {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}};
  for (std::size_t i = 0; i < 15 && ok; ++i) {
    BitWord want(15);
    for (std::size_t j = 0; j < 4; ++j) want.set(j, plain[i][j]);
    ok &= expect(phi.patterns[i] == want, "plain pattern " + std::to_string(i + 1));
  }
  const FlipPatternSet fe = build_phi_e(3, 1, 7);
  ok &= expect(fe.patterns.size() == 6, "extended set cardinality");
  const int ext[6][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                         {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (std::size_t i = 0; i < 6 && ok; ++i) {
    BitWord want(7);
    for (std::size_t j = 0; j < 3; ++j) want.set(j, ext[i][j]);
    ok &= expect(fe.patterns[i] == want, "extended pattern " + std::to_string(i + 1));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Guaranteed correction of every error confined to the d least reliable
//    positions, exhaustive over patterns x 100 CSI draws.
bool criterion3() {
  bool ok = true;
  for (const char* spec : {"pc:12", "hamming:4", "bch:15,7"}) {
    const LinearCode code = parse_code_spec(spec);
    const DfdDecoder dec(code);
    const std::size_t d = code.d_min - 1;
    Rng rng(1003);
    std::uint64_t cases = 0, failures = 0;
    for (int draw = 0; draw < 100; ++draw) {
      std::vector<double> h(code.n);
      for (auto& v : h) v = rng.rayleigh();
      const auto [hs, perm] = sort_csi(h);
      BitWord msg(code.k);
      for (std::size_t i = 0; i < code.k; ++i) msg.set(i, rng.next_u64() & 1u);
      const BitWord cw = encode(code, msg);
      for (std::uint64_t e = 1; e < (std::uint64_t{1} << d); ++e) {
        BitWord r = cw;
        for (std::size_t j = 0; j < d; ++j)
          if ((e >> j) & 1u) r.flip(perm[j]);
        const auto out = dec.decode(DecodeInput{r, h, nullptr, 0.0});
        ++cases;
        if (!out.found_valid || !(out.codeword_hat == cw)) ++failures;
      }
    }
    std::printf("    %-10s window-confined cases %llu, failures %llu\n", spec,
                static_cast<unsigned long long>(cases),
                static_cast<unsigned long long>(failures));
    ok &= expect(failures == 0, std::string(spec) + ": window errors not corrected");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Diversity slopes in the 30-40 dB window with >= 100 word errors/point.
bool criterion4() {
  bool ok = true;
  {
    SweepConfig cfg;
    cfg.code_spec = "pc:4";
    cfg.decoder_specs = {"dfd"};
    cfg.ebno_grid_db = {30.0, 33.0, 36.0};
    cfg.stopping.min_bits = 3'000'000;
    cfg.stopping.min_word_errors = 150;
    cfg.stopping.max_words = 20'000'000'000ULL;
    cfg.master_seed = 1004;
    const auto rows = run_sweep(cfg);
    for (const auto& r : rows) {
      std::printf("    pc:4 %4.1f dB  ber %.3e  word_errors %llu\n", r.ebno_db, r.ber,
                  static_cast<unsigned long long>(r.word_errors));
      ok &= expect(r.word_errors >= 100, "pc:4 point holds fewer than 100 errors");
    }
    const double slope = estimate_diversity(curve_of(rows, "dfd"), 30.0, 40.0);
    std::printf("    pc:4 slope %.3f (want 1.7..2.3)\n", slope);
    ok &= expect(slope > 1.7 && slope < 2.3, "pc:4 slope " + fmt(slope));
  }
  {
    const LinearCode code = parse_code_spec("hamming:3");
    const DfdDecoder dec(code);
    StoppingRule stop;
    stop.min_bits = 4'000'000;
    stop.max_words = 80'000'000'000ULL;
    BerCurve curve;
    curve.code = code.name;
    curve.decoder = "dfd";
    const double points[2] = {30.0, 32.0};
    const std::uint64_t errs[2] = {200, 100};
    for (int i = 0; i < 2; ++i) {
      stop.min_word_errors = errs[i];
      const SweepRow row = run_point(code, dec, points[i], stop, 1005, i, 0);
      std::printf("    hamming:3 %4.1f dB  ber %.3e  word_errors %llu  words %llu\n",
                  row.ebno_db, row.ber, static_cast<unsigned long long>(row.word_errors),
                  static_cast<unsigned long long>(row.words_sent));
      ok &= expect(row.word_errors >= 100, "hamming:3 point holds fewer than 100 errors");
      curve.ebno_db.push_back(row.ebno_db);
      curve.ber.push_back(row.ber);
    }
    const double slope = estimate_diversity(curve, 30.0, 40.0);
    std::printf("    hamming:3 slope %.3f (want 2.6..3.4)\n", slope);
    ok &= expect(slope > 2.6 && slope < 3.4, "hamming:3 slope " + fmt(slope));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Absolute operating points at BER 1e-5, +/- 0.7 dB.
bool criterion5() {
  struct Case {
    const char* spec;
    std::vector<double> grid;
    double target_db;
  };
  const Case cases[] = {
      {"bch:15,7", {15.4, 16.1, 16.8}, 16.1},
      {"hamming:3", {18.3, 19.0, 19.7}, 19.0},
  };
  bool ok = true;
  for (const auto& c : cases) {
    SweepConfig cfg;
    cfg.code_spec = c.spec;
    cfg.decoder_specs = {"dfd"};
    cfg.ebno_grid_db = c.grid;
    cfg.stopping.min_bits = 30'000'000;  // >= 1e7 message bits per point
    cfg.stopping.min_word_errors = 300;
    cfg.stopping.max_words = 40'000'000'000ULL;
    cfg.master_seed = 1006;
    const auto rows = run_sweep(cfg);
    for (const auto& r : rows)
      std::printf("    %-10s %4.1f dB  ber %.3e  bits %llu\n", c.spec, r.ebno_db, r.ber,
                  static_cast<unsigned long long>(r.bits_sent));
    double crossing = 0.0;
    try {
      crossing = ebno_at_ber(curve_of(rows, "dfd"), 1e-5);
    } catch (const std::exception& e) {
      return expect(false, std::string("crossing not bracketed: ") + e.what());
    }
    std::printf("    %-10s BER 1e-5 at %.3f dB (want %.1f +/- 0.7)\n", c.spec, crossing,
                c.target_db);
    ok &= expect(std::abs(crossing - c.target_db) <= 0.7,
                 std::string(c.spec) + " crossing " + fmt(crossing));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Extended-window decoder operating points at BER 1e-3, and strict
//    improvement as the extension grows.
bool criterion6() {
  const LinearCode code = parse_code_spec("bch:15,7");
  const std::vector<std::vector<double>> grids = {
      {10.4, 11.1, 11.8}, {9.3, 10.0, 10.7}, {8.7, 9.4, 10.1}, {8.1, 8.8, 9.5}};
  std::vector<double> crossing(4);
  bool ok = true;
  for (std::size_t eps = 0; eps < 4; ++eps) {
    SweepConfig cfg;
    cfg.code_spec = "bch:15,7";
    cfg.decoder_specs = {"edfd:" + std::to_string(eps)};
    cfg.ebno_grid_db = grids[eps];
    cfg.stopping.min_bits = 3'000'000;
    cfg.stopping.min_word_errors = 600;
    cfg.stopping.max_words = 1'000'000'000;
    cfg.master_seed = 1007 + eps;
    const auto rows = run_sweep(cfg);
    try {
      crossing[eps] = ebno_at_ber(curve_of(rows, cfg.decoder_specs[0]), 1e-3);
    } catch (const std::exception& e) {
      return expect(false, std::string("eps ") + std::to_string(eps) +
                               " crossing not bracketed: " + e.what());
    }
    std::printf("    edfd:%zu BER 1e-3 at %.3f dB\n", eps, crossing[eps]);
  }
  ok &= expect(std::abs(crossing[0] - 11.2) <= 0.3,
               "eps 0 crossing " + fmt(crossing[0]) + " (want 11.2 +/- 0.3)");
  ok &= expect(std::abs(crossing[3] - 8.8) <= 0.3,
               "eps 3 crossing " + fmt(crossing[3]) + " (want 8.8 +/- 0.3)");
  for (int e = 1; e < 4; ++e)
    ok &= expect(crossing[e] < crossing[e - 1],
                 "crossings not strictly decreasing at eps " + std::to_string(e));
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Uncoded anchor: closed form and simulation cross BER 1e-5 inside
//    [40.7, 42.1] dB.
bool criterion7() {
  bool ok = true;
  double lo = 30.0, hi = 50.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (uncoded_ber(mid) > 1e-5 ? lo : hi) = mid;
  }
  std::printf("    closed-form crossing %.3f dB\n", lo);
  ok &= expect(lo > 40.7 && lo < 42.1, "closed-form crossing " + fmt(lo));

  SweepConfig cfg;
  cfg.code_spec = "uncoded:64";
  cfg.decoder_specs = {"hdd"};  // pass-through for the identity code
  cfg.ebno_grid_db = {40.0, 41.0, 42.0};
  cfg.stopping.min_bits = 30'000'000;
  cfg.stopping.min_word_errors = 0;
  cfg.stopping.max_words = 1'000'000'000;
  cfg.master_seed = 1008;
  const auto rows = run_sweep(cfg);
  for (const auto& r : rows)
    std::printf("    uncoded %4.1f dB  ber %.3e (closed form %.3e)\n", r.ebno_db, r.ber,
                uncoded_ber(r.ebno_db));
  double crossing = 0.0;
  try {
    crossing = ebno_at_ber(curve_of(rows, "hdd"), 1e-5);
  } catch (const std::exception& e) {
    return expect(false, std::string("simulated crossing not bracketed: ") + e.what());
  }
  std::printf("    simulated crossing %.3f dB (want 40.7..42.1)\n", crossing);
  ok &= expect(crossing > 40.7 && crossing < 42.1, "simulated crossing " + fmt(crossing));
  return ok;
}

// ---------------------------------------------------------------------------
// 8. The word-error bound dominates the simulated WER everywhere it is
//    resolvable, and keeps the full diversity slope at high SNR.
bool criterion8() {
  bool ok = true;
  SweepConfig cfg;
  cfg.code_spec = "bch:15,7";
  cfg.decoder_specs = {"dfd"};
  cfg.ebno_grid_db = {2, 4, 6, 8, 10, 12, 14};
  cfg.stopping.min_bits = 1'000'000;
  cfg.stopping.min_word_errors = 300;
  cfg.stopping.max_words = 500'000'000;
  cfg.master_seed = 1009;
  const auto rows = run_sweep(cfg);
  const double rate = 7.0 / 15.0;
  for (const auto& r : rows) {
    const double rho = rate * std::pow(10.0, r.ebno_db / 10.0);
    const double bound = pfd_bound_terms(15, 5, rho).total();
    std::printf("    %4.1f dB  wer %.3e  bound %.3e\n", r.ebno_db, r.wer, bound);
    if (r.wer > 1e-6)
      ok &= expect(bound >= r.wer, "bound below simulated WER at " + fmt(r.ebno_db));
  }
  const double b50 = pfd_bound_terms(15, 5, rate * 1e5).total();
  const double b60 = pfd_bound_terms(15, 5, rate * 1e6).total();
  const double slope = std::log10(b50) - std::log10(b60);
  std::printf("    bound slope over 50..60 dB: %.3f (want 4.7..5.3)\n", slope);
  ok &= expect(slope > 4.7 && slope < 5.3, "bound slope " + fmt(slope));
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Complexity properties: the flip window bounds queries (and the bound is
//    attained), abandonment caps the guessing decoders, and the average-query
//    comparison against plain guessing at 12 dB.
bool criterion9() {
  bool ok = true;
  {
    const LinearCode code = parse_code_spec("hamming:3");
    const DfdDecoder dec(code);
    const std::vector<double> h = {0.3, 0.5, 0.9, 1.1, 1.4, 1.7, 2.0};
    const std::uint64_t bound = std::uint64_t{1} << (code.d_min - 1);
    std::uint64_t max_seen = 0;
    for (std::uint32_t bits = 0; bits < (1u << code.n); ++bits) {
      BitWord r(code.n);
      for (std::size_t j = 0; j < code.n; ++j) r.set(j, (bits >> j) & 1u);
      const auto out = dec.decode(DecodeInput{r, h, nullptr, 0.0});
      max_seen = std::max(max_seen, out.queries);
      if (out.queries > bound) {
        ok = expect(false, "query bound exceeded");
        break;
      }
    }
    std::printf("    dfd max queries over all hamming:3 inputs: %llu (bound %llu)\n",
                static_cast<unsigned long long>(max_seen),
                static_cast<unsigned long long>(bound));
    ok &= expect(max_seen == bound, "query bound not attained");
  }
  {
    SweepConfig cfg;
    cfg.code_spec = "bch:15,7";
    cfg.decoder_specs = {"dfd", "grand"};
    cfg.ebno_grid_db = {0.0, 12.0};
    cfg.stopping.min_bits = 700'000;
    cfg.stopping.min_word_errors = 100;
    cfg.stopping.max_words = 100'000'000;
    cfg.master_seed = 1010;
    cfg.grand.abandonment_threshold = 1'000'000;
    const auto rows = run_sweep(cfg);
    const LinearCode code = parse_code_spec(cfg.code_spec);
    double dfd_avg12 = 0, grand_avg12 = 0;
    for (const auto& r : rows) {
      if (r.decoder == "dfd")
        ok &= expect(r.max_queries <= (std::uint64_t{1} << (code.d_min - 1)),
                     "dfd sweep max queries");
      if (r.decoder == "grand")
        ok &= expect(r.max_queries <= cfg.grand.abandonment_threshold,
                     "grand sweep max queries exceed the abandonment threshold");
      if (r.ebno_db == 12.0 && r.decoder == "dfd") dfd_avg12 = r.avg_queries;
      if (r.ebno_db == 12.0 && r.decoder == "grand") grand_avg12 = r.avg_queries;
    }
    const double pct = 100.0 * dfd_avg12 / grand_avg12;
    std::printf("    at 12 dB on shared trials: dfd avg %.3f, grand avg %.3f -> %.1f%%\n",
                dfd_avg12, grand_avg12, pct);
    ok &= expect(pct < 5.0, "dfd average queries are " + fmt(pct) +
                                "% of grand's (threshold 5%)");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Oracle equivalences: exact nearest-codeword behaviour of the guessing
//     and table decoders, and the rank-weight pattern schedule.
bool criterion10() {
  bool ok = true;
  const LinearCode code = parse_code_spec("hamming:3");
  const GrandDecoder grand(code);
  const HddDecoder hdd(code);
  std::vector<BitWord> book;
  for (std::uint64_t m = 0; m < (1u << code.k); ++m) {
    BitWord msg(code.k);
    for (std::size_t i = 0; i < code.k; ++i) msg.set(i, (m >> i) & 1u);
    book.push_back(encode(code, msg));
  }
  for (std::uint32_t bits = 0; bits < (1u << code.n); ++bits) {
    BitWord r(code.n);
    for (std::size_t j = 0; j < code.n; ++j) r.set(j, (bits >> j) & 1u);
    std::size_t best = code.n + 1;
    for (const auto& c : book) best = std::min(best, hamming_distance(r, c));
    const auto g = grand.decode(DecodeInput{r, {}, nullptr, 0.0});
    const auto t = hdd.decode(DecodeInput{r, {}, nullptr, 0.0});
    if (hamming_distance(r, g.codeword_hat) != best ||
        hamming_distance(r, t.codeword_hat) != best) {
      ok = expect(false, "nearest-codeword mismatch at input " + std::to_string(bits));
      break;
    }
  }
  if (ok) std::printf("    grand and hdd are exact nearest-codeword decoders (128/128)\n");

  const std::size_t n = 6;
  const auto schedule = orbgrand_schedule(n, n * (n + 1) / 2);
  std::vector<std::vector<std::uint32_t>> expected;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t b = 0; b < n; ++b)
      if ((mask >> b) & 1u) s.push_back(b + 1);
    expected.push_back(s);
  }
  std::stable_sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
    auto wl = [](const auto& v) {
      std::uint32_t s = 0;
      for (auto x : v) s += x;
      return s;
    };
    if (wl(a) != wl(b)) return wl(a) < wl(b);
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  ok &= expect(schedule == expected, "rank-weight schedule differs from the sort oracle");
  if (ok) std::printf("    rank-weight schedule matches the (weight, size, lex) sort\n");
  return ok;
}

// ---------------------------------------------------------------------------
// 11. Determinism: identical manifests produce identical rows for any worker
//     count, twice over.
bool criterion11() {
  SweepConfig cfg;
  cfg.code_spec = "bch:15,7";
  cfg.decoder_specs = {"dfd", "grand"};
  cfg.ebno_grid_db = {9.0, 13.0};
  cfg.stopping.min_bits = 700'000;
  cfg.stopping.min_word_errors = 60;
  cfg.stopping.max_words = 10'000'000;
  cfg.master_seed = 1011;
  cfg.workers = 1;
  const auto a1 = run_sweep(cfg);
  const auto a2 = run_sweep(cfg);
  cfg.workers = 2;
  const auto b1 = run_sweep(cfg);
  const auto b2 = run_sweep(cfg);
  cfg.workers = 7;
  const auto c1 = run_sweep(cfg);
  bool ok = expect(a1 == a2, "rerun with 1 worker differs");
  ok &= expect(b1 == b2, "rerun with 2 workers differs");
  ok &= expect(a1 == b1, "1-worker and 2-worker rows differ");
  ok &= expect(a1 == c1, "1-worker and 7-worker rows differ");
  if (ok) std::printf("    %zu rows identical across reruns and worker counts\n", a1.size());
  return ok;
}

const Criterion kCriteria[] = {
    {1, "reference decode replay", criterion1},
    {2, "flip-set fidelity", criterion2},
    {3, "guaranteed window correction", criterion3},
    {4, "diversity slopes", criterion4},
    {5, "absolute operating points", criterion5},
    {6, "extended-window operating points", criterion6},
    {7, "uncoded anchor", criterion7},
    {8, "bound dominance and slope", criterion8},
    {9, "complexity properties", criterion9},
    {10, "oracle equivalences", criterion10},
    {11, "determinism", criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  for (const auto& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    std::printf("criterion %2d: %s\n", c.id, c.label);
    std::fflush(stdout);
    const auto t0 = Clock::now();
    const bool ok = c.fn();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %d (%s) in %.1f s\n", ok ? "PASS" : "FAIL", c.id,
                c.label, secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
