#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "flipdec/bitword.hpp"
#include "flipdec/channel.hpp"
#include "flipdec/codes.hpp"

namespace flipdec {

struct DecodeOutcome {
  BitWord codeword_hat;
  std::uint64_t queries = 0;     // codebook queries = syndrome/metric evaluations
  bool found_valid = false;      // a zero-syndrome word was produced
  std::size_t flips_applied = 0; // weight of the winning flip/error pattern
  bool abandoned = false;        // GRAND-family threshold hit (never set by DFD/EDFD)
};

struct DecodeInput {
  const BitWord& r;                      // hard-decision word
  std::span<const double> h;             // CSI magnitudes
  const ChannelObservation* obs = nullptr;  // present when the channel kept soft values
  double ebno_db = 0.0;
};

/// A decoder instance is bound to one code at construction (precomputing
/// tables, flip sets, codebooks) and is immutable afterwards; decode() is
/// const and safe to call from many threads.
class Decoder {
 public:
  virtual ~Decoder() = default;
  virtual const std::string& name() const = 0;
  virtual bool uses_soft_observation() const { return false; }
  virtual void decode(const DecodeInput& in, DecodeOutcome& out) const = 0;

  DecodeOutcome decode(const DecodeInput& in) const {
    DecodeOutcome out;
    decode(in, out);
    return out;
  }
};

struct GrandConfig {
  std::uint64_t abandonment_threshold = 1'000'000;
  double fading_m = -0.02165;
  double fading_b = 0.7924;
};

/// Builds a decoder from its selection string:
/// `dfd`, `edfd:EPS`, `hdd`, `softml`, `grand`, `orbgrand`, `fading-grand:M,B`.
std::unique_ptr<Decoder> make_decoder(const LinearCode& code, const std::string& spec,
                                      const GrandConfig& grand = {});

}  // namespace flipdec
