#include "flipdec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <map>
#include <mutex>
#include <memory>
#include <thread>

#include "flipdec/channel.hpp"
#include "flipdec/error.hpp"
#include "flipdec/rng.hpp"

namespace flipdec {

namespace {

struct DecoderStats {
  std::uint64_t bit_errors = 0;
  std::uint64_t word_errors = 0;
  std::uint64_t queries = 0;
  std::uint64_t max_queries = 0;
  std::uint64_t abandoned = 0;

  void fold(const DecoderStats& o) {
    bit_errors += o.bit_errors;
    word_errors += o.word_errors;
    queries += o.queries;
    max_queries = std::max(max_queries, o.max_queries);
    abandoned += o.abandoned;
  }
};

struct ChunkStats {
  std::uint64_t words = 0;
  std::vector<DecoderStats> per_decoder;
};

std::uint64_t message_bit_diff(const BitWord& chat, const BitWord& msg, std::size_t k) {
  const auto a = chat.limbs();
  const auto b = msg.limbs();
  const std::size_t full = k / 64;
  std::uint64_t diff = 0;
  for (std::size_t i = 0; i < full; ++i) diff += std::popcount(a[i] ^ b[i]);
  if (k & 63)
    diff += std::popcount((a[full] ^ b[full]) & ((std::uint64_t{1} << (k & 63)) - 1));
  return diff;
}

/// Codeword lookup for small codes; the generic G-row XOR encode shows up in
/// profiles once words shrink to a handful of symbols.
struct EncodeTable {
  std::vector<std::uint64_t> words;
  static bool usable(const LinearCode& code) { return code.k <= 14 && code.n <= 64; }
  explicit EncodeTable(const LinearCode& code) {
    words.resize(std::size_t{1} << code.k);
    BitWord msg(code.k), cw(code.n);
    for (std::uint64_t m = 0; m < words.size(); ++m) {
      msg.limbs()[0] = m;
      encode_into(code, msg, cw);
      words[m] = cw.limbs()[0];
    }
  }
};

ChunkStats run_chunk(const LinearCode& code, const EncodeTable* table,
                     const std::vector<const Decoder*>& decoders, const SnrPoint& snr,
                     std::uint64_t words, Rng rng, bool soft) {
  const std::size_t n = code.n;
  const std::size_t k = code.k;
  ChunkStats stats;
  stats.words = words;
  stats.per_decoder.resize(decoders.size());

  BitWord msg(k), cw(n), r(n);
  std::vector<double> s(n);
  ChannelObservation obs;
  DecodeOutcome outcome;
  const std::size_t msg_limbs = msg.limb_count();
  const std::uint64_t msg_tail_mask =
      (k & 63) ? (std::uint64_t{1} << (k & 63)) - 1 : ~std::uint64_t{0};

  for (std::uint64_t w = 0; w < words; ++w) {
    auto ml = msg.limbs();
    for (std::size_t i = 0; i < msg_limbs; ++i) ml[i] = rng.next_u64();
    ml[msg_limbs - 1] &= msg_tail_mask;

    if (table)
      cw.limbs()[0] = table->words[ml[0]];
    else
      encode_into(code, msg, cw);
    for (std::size_t j = 0; j < n; ++j) s[j] = cw.get(j) ? -1.0 : 1.0;
    apply_channel_into(s, snr, rng, obs, soft);
    r.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (obs.y_re[j] < 0.0) r.set(j, true);

    const DecodeInput in{r, obs.h, soft ? &obs : nullptr, snr.ebno_db};
    for (std::size_t d = 0; d < decoders.size(); ++d) {
      decoders[d]->decode(in, outcome);
      auto& ds = stats.per_decoder[d];
      const std::uint64_t diff = message_bit_diff(outcome.codeword_hat, msg, k);
      ds.bit_errors += diff;
      ds.word_errors += diff > 0;
      ds.queries += outcome.queries;
      ds.max_queries = std::max(ds.max_queries, outcome.queries);
      ds.abandoned += outcome.abandoned;
    }
  }
  return stats;
}

}  // namespace

std::vector<SweepRow> run_point_multi(const LinearCode& code,
                                      const std::vector<const Decoder*>& decoders,
                                      double ebno_db, const StoppingRule& stopping,
                                      std::uint64_t master_seed,
                                      std::uint64_t point_index, unsigned workers,
                                      std::uint64_t chunk_words) {
  if (decoders.empty()) throw InvalidArgument("run_point: no decoders");
  if (stopping.min_bits < code.n)
    throw InvalidArgument("run_point: min_bits must be at least n");
  if (chunk_words == 0) throw InvalidArgument("run_point: chunk_words must be positive");
  const SnrPoint snr = SnrPoint::from_ebno(ebno_db, code.rate());
  const bool soft = std::any_of(decoders.begin(), decoders.end(),
                                [](const Decoder* d) { return d->uses_soft_observation(); });
  std::unique_ptr<EncodeTable> table;
  if (EncodeTable::usable(code)) table = std::make_unique<EncodeTable>(code);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  // deterministic chunk sizes: chunk c covers words [c*W, min((c+1)W, max_words))
  const auto chunk_size = [&](std::uint64_t c) -> std::uint64_t {
    const std::uint64_t lo = c * chunk_words;
    if (lo >= stopping.max_words) return 0;
    return std::min(chunk_words, stopping.max_words - lo);
  };

  // stop once, scanning chunks in index order: bits >= min_bits AND
  // (every decoder has min_word_errors OR max_words reached)
  std::uint64_t words_folded = 0;
  std::vector<DecoderStats> folded(decoders.size());
  const auto stop_satisfied = [&]() {
    if (words_folded * code.k < stopping.min_bits) return false;
    if (words_folded >= stopping.max_words) return true;
    return std::all_of(folded.begin(), folded.end(), [&](const DecoderStats& d) {
      return d.word_errors >= stopping.min_word_errors;
    });
  };

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, ChunkStats> pending;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<bool> stop{false};

  auto worker_fn = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
      const std::uint64_t size = chunk_size(c);
      if (size == 0) break;
      ChunkStats cs = run_chunk(code, table.get(), decoders, snr, size,
                                Rng::from_key(master_seed, point_index, c), soft);
      std::lock_guard<std::mutex> lock(mu);
      pending.emplace(c, std::move(cs));
      cv.notify_one();
    }
    std::lock_guard<std::mutex> lock(mu);
    cv.notify_one();
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker_fn);

  // fold chunks strictly in order; the fold decides when to stop
  {
    std::unique_lock<std::mutex> lock(mu);
    std::uint64_t next_fold = 0;
    while (chunk_size(next_fold) != 0 && !stop_satisfied()) {
      cv.wait(lock, [&] { return pending.count(next_fold) > 0; });
      const ChunkStats& cs = pending.at(next_fold);
      words_folded += cs.words;
      for (std::size_t d = 0; d < folded.size(); ++d) folded[d].fold(cs.per_decoder[d]);
      pending.erase(next_fold);
      ++next_fold;
    }
    stop.store(true, std::memory_order_relaxed);
  }
  for (auto& t : pool) t.join();

  std::vector<SweepRow> rows;
  rows.reserve(decoders.size());
  for (std::size_t d = 0; d < decoders.size(); ++d) {
    SweepRow row;
    row.code = code.name;
    row.decoder = decoders[d]->name();
    row.ebno_db = ebno_db;
    row.words_sent = words_folded;
    row.bits_sent = words_folded * code.k;
    row.bit_errors = folded[d].bit_errors;
    row.word_errors = folded[d].word_errors;
    row.ber = row.bits_sent ? static_cast<double>(row.bit_errors) / row.bits_sent : 0.0;
    row.wer = row.words_sent ? static_cast<double>(row.word_errors) / row.words_sent : 0.0;
    row.avg_queries =
        row.words_sent ? static_cast<double>(folded[d].queries) / row.words_sent : 0.0;
    row.max_queries = folded[d].max_queries;
    row.abandoned = folded[d].abandoned;
    row.seed = master_seed;
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepRow run_point(const LinearCode& code, const Decoder& decoder, double ebno_db,
                   const StoppingRule& stopping, std::uint64_t master_seed,
                   std::uint64_t point_index, unsigned workers,
                   std::uint64_t chunk_words) {
  return run_point_multi(code, {&decoder}, ebno_db, stopping, master_seed, point_index,
                         workers, chunk_words)
      .front();
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.ebno_grid_db.empty()) throw InvalidArgument("run_sweep: empty SNR grid");
  const LinearCode code = parse_code_spec(config.code_spec);
  std::vector<std::unique_ptr<Decoder>> decoders;
  std::vector<const Decoder*> ptrs;
  for (const auto& spec : config.decoder_specs) {
    decoders.push_back(make_decoder(code, spec, config.grand));  // validates limits
    ptrs.push_back(decoders.back().get());
  }
  if (ptrs.empty()) throw InvalidArgument("run_sweep: no decoders configured");

  std::vector<std::vector<SweepRow>> per_point;
  per_point.reserve(config.ebno_grid_db.size());
  for (std::size_t p = 0; p < config.ebno_grid_db.size(); ++p) {
    per_point.push_back(run_point_multi(code, ptrs, config.ebno_grid_db[p],
                                        config.stopping, config.master_seed, p,
                                        config.workers, config.chunk_words));
  }
  // group rows by decoder so each curve is contiguous in the output
  std::vector<SweepRow> rows;
  rows.reserve(config.ebno_grid_db.size() * ptrs.size());
  for (std::size_t d = 0; d < ptrs.size(); ++d)
    for (auto& point_rows : per_point) rows.push_back(point_rows[d]);
  return rows;
}

}  // namespace flipdec
