#include "flipdec/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "flipdec/error.hpp"
#include "flipdec/flip_decoder.hpp"

namespace flipdec {

namespace {

std::vector<BitWord> column_syndromes(const BitMatrix& H) {
  std::vector<BitWord> cols;
  cols.reserve(H.cols());
  for (std::size_t c = 0; c < H.cols(); ++c) {
    BitWord col(H.rows());
    for (std::size_t r = 0; r < H.rows(); ++r)
      if (H.get(r, c)) col.set(r, true);
    cols.push_back(std::move(col));
  }
  return cols;
}

std::uint64_t syndrome_bits(const BitWord& s) {
  return s.size() == 0 ? 0 : s.limbs()[0];
}

/// Lexicographically next weight-w combination over [0, n); false when done.
bool next_combination(std::vector<std::uint32_t>& c, std::size_t n) {
  const std::size_t w = c.size();
  std::size_t i = w;
  while (i > 0 && c[i - 1] == n - w + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < w; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- syndrome table

SyndromeTable::SyndromeTable(const BitMatrix& H, std::size_t redundancy_limit) {
  const std::size_t red = H.rows();
  const std::size_t n = H.cols();
  if (red > redundancy_limit)
    throw LimitRefusal("SyndromeTable: redundancy " + std::to_string(red) +
                       " exceeds limit " + std::to_string(redundancy_limit));
  const auto cols = column_syndromes(H);
  const std::size_t entries = std::size_t{1} << red;
  leaders_.assign(entries, BitWord());
  std::vector<bool> filled(entries, false);
  leaders_[0] = BitWord(n);
  filled[0] = true;
  std::size_t remaining = entries - 1;

  for (std::size_t w = 1; w <= n && remaining > 0; ++w) {
    std::vector<std::uint32_t> sup(w);
    std::iota(sup.begin(), sup.end(), 0u);
    do {
      BitWord s(red);
      for (auto j : sup) s ^= cols[j];
      const std::uint64_t key = syndrome_bits(s);
      if (!filled[key]) {
        filled[key] = true;
        BitWord e(n);
        for (auto j : sup) e.set(j, true);
        leaders_[key] = std::move(e);
        if (--remaining == 0) break;
      }
    } while (next_combination(sup, n));
  }
}

HddDecoder::HddDecoder(const LinearCode& code, std::size_t redundancy_limit)
    : code_(code), table_(code.H, redundancy_limit), name_("hdd") {}

void HddDecoder::decode(const DecodeInput& in, DecodeOutcome& out) const {
  const BitWord s = syndrome(code_.H, in.r);
  const BitWord& e = table_.leader(syndrome_bits(s));
  out.codeword_hat = in.r;
  out.codeword_hat ^= e;
  out.queries = 1;
  out.found_valid = true;
  out.flips_applied = e.weight();
  out.abandoned = false;
}

DecodeOutcome hdd_decode(const LinearCode& code, const BitWord& r) {
  HddDecoder dec(code);
  return dec.decode(DecodeInput{r, {}, nullptr, 0.0});
}

// ---------------------------------------------------------------- soft ML

SoftMlDecoder::SoftMlDecoder(const LinearCode& code, std::size_t k_limit)
    : code_(code), name_("softml") {
  if (code.k > k_limit)
    throw LimitRefusal("softml: k=" + std::to_string(code.k) + " exceeds soft-ML limit " +
                       std::to_string(k_limit));
  row_support_.resize(code.k);
  for (std::size_t i = 0; i < code.k; ++i)
    for (std::size_t j = 0; j < code.n; ++j)
      if (code.G.get(i, j)) row_support_[i].push_back(static_cast<std::uint32_t>(j));
}

void SoftMlDecoder::decode(const DecodeInput& in, DecodeOutcome& out) const {
  if (in.obs == nullptr)
    throw InvalidArgument("softml: needs the channel observation");
  const auto& obs = *in.obs;
  const std::size_t n = code_.n;

  // metric(c) = sum_j t_j (-1)^(c_j) with t_j = h_j Re(y_j); equivalently
  // minimize sum over set bits of t. Walk messages in Gray order updating the
  // codeword and the partial sum incrementally.
  thread_local std::vector<double> t;
  t.resize(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = obs.h[j] * obs.y_re[j];

  BitWord cw(n);
  double cost = 0.0;  // sum of t over set bits of cw
  BitWord best = cw;
  double best_cost = cost;

  std::uint64_t prev_gray = 0;
  const std::uint64_t total = std::uint64_t{1} << code_.k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::size_t row = static_cast<std::size_t>(std::countr_zero(gray ^ prev_gray));
    prev_gray = gray;
    for (auto j : row_support_[row]) {
      cw.flip(j);
      cost += cw.get(j) ? t[j] : -t[j];
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = cw;
    } else if (cost == best_cost) {
      // lexicographically smallest wins: first differing position holds 0
      for (std::size_t j = 0; j < n; ++j) {
        if (cw.get(j) != best.get(j)) {
          if (!cw.get(j)) best = cw;
          break;
        }
      }
    }
  }
  out.codeword_hat = best;
  out.queries = total;
  out.found_valid = true;
  out.flips_applied = in.r.size() == n ? hamming_distance(in.r, best) : 0;
  out.abandoned = false;
}

DecodeOutcome soft_ml_decode(const LinearCode& code, const ChannelObservation& obs) {
  SoftMlDecoder dec(code);
  const BitWord r = hard_decision_bits(obs);
  return dec.decode(DecodeInput{r, obs.h, &obs, 0.0});
}

// ---------------------------------------------------------------- GRAND

GrandDecoder::GrandDecoder(const LinearCode& code, GrandConfig cfg)
    : code_(code), cfg_(cfg), col_syndrome_(column_syndromes(code.H)), name_("grand") {
  if (cfg_.abandonment_threshold < 1)
    throw InvalidArgument("grand: abandonment threshold must be >= 1");
  all_positions_.resize(code.n);
  std::iota(all_positions_.begin(), all_positions_.end(), 0u);
}

void GrandDecoder::run_schedule(const BitWord& r,
                                std::span<const std::uint32_t> positions,
                                DecodeOutcome& out) const {
  const BitWord base = syndrome(code_.H, r);
  out.queries = 1;
  out.abandoned = false;
  if (base.all_zero()) {
    out.codeword_hat = r;
    out.found_valid = true;
    out.flips_applied = 0;
    return;
  }
  const std::size_t u = positions.size();
  BitWord trial(code_.H.rows());
  std::vector<std::uint32_t> sup;
  for (std::size_t w = 1; w <= u; ++w) {
    if (out.queries >= cfg_.abandonment_threshold) break;
    sup.resize(w);
    std::iota(sup.begin(), sup.end(), 0u);
    do {
      trial = base;
      for (auto j : sup) trial ^= col_syndrome_[positions[j]];
      ++out.queries;
      if (trial.all_zero()) {
        out.codeword_hat = r;
        for (auto j : sup) out.codeword_hat.flip(positions[j]);
        out.found_valid = true;
        out.flips_applied = w;
        return;
      }
    } while (out.queries < cfg_.abandonment_threshold && next_combination(sup, u));
  }
  out.codeword_hat = r;
  out.found_valid = false;
  out.flips_applied = 0;
  out.abandoned = true;
}

void GrandDecoder::decode(const DecodeInput& in, DecodeOutcome& out) const {
  run_schedule(in.r, all_positions_, out);
}

DecodeOutcome grand_decode(const LinearCode& code, const BitWord& r,
                           const GrandConfig& cfg) {
  GrandDecoder dec(code, cfg);
  return dec.decode(DecodeInput{r, {}, nullptr, 0.0});
}

// ---------------------------------------------------------------- ORBGRAND

OrbgrandDecoder::OrbgrandDecoder(const LinearCode& code, GrandConfig cfg)
    : code_(code), cfg_(cfg), col_syndrome_(column_syndromes(code.H)),
      name_("orbgrand") {}

namespace {

/// Visits ascending rank subsets (distinct values in [1, n]) of size `count`
/// summing to `target`, in lexicographic order. Returns false if the visitor
/// stopped the walk.
template <typename Fn>
bool visit_rank_subsets(std::size_t n, std::size_t target, std::size_t count,
                        std::vector<std::uint32_t>& prefix, std::size_t lo, Fn&& fn) {
  if (count == 0) {
    return target == 0 ? fn(prefix) : true;
  }
  // remaining choices are count distinct values in [lo, n]
  for (std::size_t v = lo; v + count - 1 <= n; ++v) {
    // min/max achievable sums with v as the next element
    const std::size_t rest = count - 1;
    const std::size_t min_sum = v + (v + 1 + v + rest) * rest / 2;
    if (min_sum > target) break;
    std::size_t max_sum = v;
    for (std::size_t i = 0; i < rest; ++i) max_sum += n - i;
    if (max_sum < target) continue;
    prefix.push_back(static_cast<std::uint32_t>(v));
    const bool keep = visit_rank_subsets(n, target - v, rest, prefix, v + 1, fn);
    prefix.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> orbgrand_schedule(std::size_t n,
                                                          std::size_t wl_max) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> prefix;
  for (std::size_t wl = 1; wl <= wl_max; ++wl) {
    for (std::size_t count = 1; count <= n; ++count) {
      visit_rank_subsets(n, wl, count, prefix, 1, [&](const auto& ranks) {
        out.push_back(ranks);
        return true;
      });
    }
  }
  return out;
}

void OrbgrandDecoder::decode_with_ranks(const BitWord& r,
                                        const std::vector<std::uint32_t>& ranks,
                                        DecodeOutcome& out) const {
  const std::size_t n = code_.n;
  if (ranks.size() != n)
    throw InvalidArgument("orbgrand: rank vector length mismatch");
  std::vector<std::uint32_t> pos_of_rank(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t v = ranks[j];
    if (v < 1 || v > n || seen[v])
      throw InvalidArgument("orbgrand: ranks must be a permutation of 1..n");
    seen[v] = true;
    pos_of_rank[v] = static_cast<std::uint32_t>(j);
  }

  const BitWord base = syndrome(code_.H, r);
  out.queries = 1;
  out.abandoned = false;
  if (base.all_zero()) {
    out.codeword_hat = r;
    out.found_valid = true;
    out.flips_applied = 0;
    return;
  }

  const std::size_t wl_max = n * (n + 1) / 2;
  BitWord trial(code_.H.rows());
  std::vector<std::uint32_t> prefix;
  bool found = false;
  std::vector<std::uint32_t> winner;
  for (std::size_t wl = 1; wl <= wl_max && !found; ++wl) {
    for (std::size_t count = 1; count <= n && !found; ++count) {
      if (out.queries >= cfg_.abandonment_threshold) {
        out.codeword_hat = r;
        out.found_valid = false;
        out.flips_applied = 0;
        out.abandoned = true;
        return;
      }
      const bool completed = visit_rank_subsets(
          n, wl, count, prefix, 1, [&](const std::vector<std::uint32_t>& rs) {
            trial = base;
            for (auto v : rs) trial ^= col_syndrome_[pos_of_rank[v]];
            ++out.queries;
            if (trial.all_zero()) {
              found = true;
              winner = rs;
              return false;
            }
            return out.queries < cfg_.abandonment_threshold;
          });
      if (!completed && !found) {  // threshold hit mid-walk
        out.codeword_hat = r;
        out.found_valid = false;
        out.flips_applied = 0;
        out.abandoned = true;
        return;
      }
    }
  }
  if (found) {
    out.codeword_hat = r;
    for (auto v : winner) out.codeword_hat.flip(pos_of_rank[v]);
    out.found_valid = true;
    out.flips_applied = winner.size();
    return;
  }
  out.codeword_hat = r;
  out.found_valid = false;
  out.flips_applied = 0;
  out.abandoned = true;
}

std::vector<std::uint32_t> reliability_ranks_from_observation(
    const ChannelObservation& obs) {
  const std::size_t n = obs.h.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return obs.h[a] * std::abs(obs.y_re[a]) < obs.h[b] * std::abs(obs.y_re[b]);
  });
  std::vector<std::uint32_t> ranks(n);
  for (std::size_t i = 0; i < n; ++i) ranks[order[i]] = static_cast<std::uint32_t>(i + 1);
  return ranks;
}

void OrbgrandDecoder::decode(const DecodeInput& in, DecodeOutcome& out) const {
  if (in.obs == nullptr)
    throw InvalidArgument("orbgrand: needs the channel observation for ranks");
  decode_with_ranks(in.r, reliability_ranks_from_observation(*in.obs), out);
}

DecodeOutcome orbgrand_decode(const LinearCode& code, const BitWord& r,
                              const std::vector<std::uint32_t>& reliability_ranks,
                              const GrandConfig& cfg) {
  OrbgrandDecoder dec(code, cfg);
  DecodeOutcome out;
  dec.decode_with_ranks(r, reliability_ranks, out);
  return out;
}

// ---------------------------------------------------------------- fading-GRAND

FadingGrandDecoder::FadingGrandDecoder(const LinearCode& code, GrandConfig cfg)
    : GrandDecoder(code, cfg) {
  name_ = "fading-grand";
}

void FadingGrandDecoder::decode(const DecodeInput& in, DecodeOutcome& out) const {
  if (in.h.size() != code_.n)
    throw InvalidArgument("fading-grand: CSI length mismatch");
  const double delta = threshold(cfg_, in.ebno_db);
  if (delta <= 0.0) {
    run_schedule(in.r, all_positions_, out);
    return;
  }
  std::vector<std::uint32_t> flippable;
  flippable.reserve(code_.n);
  for (std::size_t j = 0; j < code_.n; ++j)
    if (in.h[j] < delta) flippable.push_back(static_cast<std::uint32_t>(j));
  run_schedule(in.r, flippable, out);
}

DecodeOutcome fading_grand_decode(const LinearCode& code, const BitWord& r,
                                  const std::vector<double>& h, double ebno_db,
                                  const GrandConfig& cfg) {
  FadingGrandDecoder dec(code, cfg);
  return dec.decode(DecodeInput{r, h, nullptr, ebno_db});
}

// ---------------------------------------------------------------- factory

std::unique_ptr<Decoder> make_decoder(const LinearCode& code, const std::string& spec,
                                      const GrandConfig& grand) {
  if (spec == "dfd") return std::make_unique<DfdDecoder>(code);
  if (spec == "hdd") return std::make_unique<HddDecoder>(code);
  if (spec == "softml") return std::make_unique<SoftMlDecoder>(code);
  if (spec == "grand") return std::make_unique<GrandDecoder>(code, grand);
  if (spec == "orbgrand") return std::make_unique<OrbgrandDecoder>(code, grand);
  if (spec.rfind("edfd:", 0) == 0) {
    std::size_t eps = 0;
    try {
      eps = std::stoul(spec.substr(5));
    } catch (const std::exception&) {
      throw InvalidArgument("decoder spec '" + spec + "': bad epsilon");
    }
    return std::make_unique<EdfdDecoder>(code, eps);
  }
  if (spec == "fading-grand") return std::make_unique<FadingGrandDecoder>(code, grand);
  if (spec.rfind("fading-grand:", 0) == 0) {
    const std::string params = spec.substr(13);
    const std::size_t comma = params.find(',');
    if (comma == std::string::npos)
      throw InvalidArgument("decoder spec '" + spec + "': wants fading-grand:m,b");
    GrandConfig cfg = grand;
    try {
      cfg.fading_m = std::stod(params.substr(0, comma));
      cfg.fading_b = std::stod(params.substr(comma + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("decoder spec '" + spec + "': bad m,b values");
    }
    return std::make_unique<FadingGrandDecoder>(code, cfg);
  }
  throw InvalidArgument("unknown decoder spec '" + spec + "'");
}

}  // namespace flipdec
