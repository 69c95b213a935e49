#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "flipdec/codes.hpp"
#include "flipdec/decoder.hpp"

namespace flipdec {

/// A point stops once min_bits message bits went out AND every decoder either
/// hit min_word_errors or the point reached max_words.
struct StoppingRule {
  std::uint64_t min_bits = 10'000'000;
  std::uint64_t min_word_errors = 100;
  std::uint64_t max_words = 1'000'000'000;
};

struct SweepConfig {
  std::string code_spec;
  std::vector<std::string> decoder_specs;
  std::vector<double> ebno_grid_db;
  StoppingRule stopping;
  std::uint64_t master_seed = 1;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t chunk_words = 10'000;
  GrandConfig grand;
};

struct SweepRow {
  std::string code;
  std::string decoder;
  double ebno_db = 0.0;
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors = 0;
  double ber = 0.0;
  std::uint64_t words_sent = 0;
  std::uint64_t word_errors = 0;
  double wer = 0.0;
  double avg_queries = 0.0;
  std::uint64_t max_queries = 0;
  std::uint64_t abandoned = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One decoder at one SNR point. `point_index` keys the RNG streams: rows
/// sharing (master seed, point index) see identical channel trials, so
/// decoders evaluated at the same grid position compare on the same noise.
SweepRow run_point(const LinearCode& code, const Decoder& decoder, double ebno_db,
                   const StoppingRule& stopping, std::uint64_t master_seed,
                   std::uint64_t point_index = 0, unsigned workers = 1,
                   std::uint64_t chunk_words = 10'000);

/// Several decoders sharing the channel trials of one SNR point.
std::vector<SweepRow> run_point_multi(const LinearCode& code,
                                      const std::vector<const Decoder*>& decoders,
                                      double ebno_db, const StoppingRule& stopping,
                                      std::uint64_t master_seed,
                                      std::uint64_t point_index, unsigned workers,
                                      std::uint64_t chunk_words);

/// Full sweep: one row per (decoder, grid point), rows grouped by decoder.
/// Deterministic for a fixed config regardless of worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

}  // namespace flipdec
