#pragma once

#include <cstdint>
#include <vector>

#include "flipdec/decoder.hpp"

namespace flipdec {

/// Coset-leader table: syndrome value -> minimum-weight error pattern
/// (lexicographically first support among equal weights).
class SyndromeTable {
 public:
  SyndromeTable(const BitMatrix& H, std::size_t redundancy_limit = 20);

  const BitWord& leader(std::uint64_t syndrome_bits) const {
    return leaders_[syndrome_bits];
  }
  std::size_t size() const { return leaders_.size(); }

 private:
  std::vector<BitWord> leaders_;
};

/// Exact minimum-Hamming-distance hard decoding via the coset-leader table.
class HddDecoder : public Decoder {
 public:
  using Decoder::decode;
  explicit HddDecoder(const LinearCode& code, std::size_t redundancy_limit = 20);
  const std::string& name() const override { return name_; }
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

 private:
  const LinearCode& code_;
  SyndromeTable table_;
  std::string name_;
};

/// Brute-force coherent maximum-likelihood decoding over all 2^k codewords,
/// maximizing sum_j h_j Re(y_j) (-1)^(c_j); ties pick the lexicographically
/// smallest codeword.
class SoftMlDecoder : public Decoder {
 public:
  using Decoder::decode;
  explicit SoftMlDecoder(const LinearCode& code, std::size_t k_limit = 20);
  const std::string& name() const override { return name_; }
  bool uses_soft_observation() const override { return true; }
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

 private:
  const LinearCode& code_;
  std::vector<std::vector<std::uint32_t>> row_support_;
  std::string name_;
};

/// Hard-decision GRAND: test error patterns in ascending Hamming weight
/// (lexicographic support order within a weight) until the syndrome clears or
/// the abandonment threshold is spent.
class GrandDecoder : public Decoder {
 public:
  using Decoder::decode;
  GrandDecoder(const LinearCode& code, GrandConfig cfg = {});
  const std::string& name() const override { return name_; }
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

  /// Core schedule, restricted to `positions`; shared with the fading variant.
  void run_schedule(const BitWord& r, std::span<const std::uint32_t> positions,
                    DecodeOutcome& out) const;

 protected:
  const LinearCode& code_;
  GrandConfig cfg_;
  std::vector<BitWord> col_syndrome_;
  std::vector<std::uint32_t> all_positions_;
  std::string name_;
};

/// ORBGRAND: patterns ordered by logistic weight (sum of flipped bits'
/// reliability ranks, rank 1 = least reliable), then by flip count, then
/// lexicographically. Ranks come from |h * Re(y)| when decoding a channel
/// observation.
class OrbgrandDecoder : public Decoder {
 public:
  using Decoder::decode;
  OrbgrandDecoder(const LinearCode& code, GrandConfig cfg = {});
  const std::string& name() const override { return name_; }
  bool uses_soft_observation() const override { return true; }
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

  /// Explicit-rank entry point; ranks[pos] in 1..n must be a permutation.
  void decode_with_ranks(const BitWord& r, const std::vector<std::uint32_t>& ranks,
                         DecodeOutcome& out) const;

 private:
  const LinearCode& code_;
  GrandConfig cfg_;
  std::vector<BitWord> col_syndrome_;
  std::string name_;
};

/// Fading-GRAND: positions with CSI at or above the threshold
/// Delta = m * (Eb/N0 dB) + b are never flipped; the GRAND schedule runs on
/// the remaining positions. A nonpositive threshold disables the masking.
class FadingGrandDecoder : public GrandDecoder {
 public:
  using Decoder::decode;
  FadingGrandDecoder(const LinearCode& code, GrandConfig cfg = {});
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

  static double threshold(const GrandConfig& cfg, double ebno_db) {
    return cfg.fading_m * ebno_db + cfg.fading_b;
  }
};

/// One-shot helpers mirroring the decoder classes.
DecodeOutcome hdd_decode(const LinearCode& code, const BitWord& r);
DecodeOutcome soft_ml_decode(const LinearCode& code, const ChannelObservation& obs);
DecodeOutcome grand_decode(const LinearCode& code, const BitWord& r,
                           const GrandConfig& cfg = {});
DecodeOutcome orbgrand_decode(const LinearCode& code, const BitWord& r,
                              const std::vector<std::uint32_t>& reliability_ranks,
                              const GrandConfig& cfg = {});
DecodeOutcome fading_grand_decode(const LinearCode& code, const BitWord& r,
                                  const std::vector<double>& h, double ebno_db,
                                  const GrandConfig& cfg = {});

/// The ORBGRAND pattern schedule for n bits up to logistic weight wl_max,
/// as rank subsets (ascending). Exposed for schedule verification.
std::vector<std::vector<std::uint32_t>> orbgrand_schedule(std::size_t n,
                                                          std::size_t wl_max);

/// Reliability ranks (1 = least reliable) from CSI-weighted soft values.
std::vector<std::uint32_t> reliability_ranks_from_observation(
    const ChannelObservation& obs);

}  // namespace flipdec
