#pragma once

#include <vector>

#include "flipdec/decoder.hpp"
#include "flipdec/flip_patterns.hpp"

namespace flipdec {

/// Diversity flip decoding: check the received word, and while the syndrome
/// is nonzero try each flip vector on the CSI-sorted word in pattern order,
/// one syndrome evaluation (= one codebook query) per attempt. Falls back to
/// the received word when the set is exhausted.
///
/// The loop never materializes the permuted word: the syndrome of
/// inverse-permute(r_sort xor f) equals syndrome(r) xor the H-columns of the
/// flipped original positions, so each query is a few limb XORs.
class FlipDecoderBase : public Decoder {
 public:
  using Decoder::decode;
  const std::string& name() const override { return name_; }
  void decode(const DecodeInput& in, DecodeOutcome& out) const override;

  const FlipPatternSet& patterns() const { return patterns_; }

 protected:
  FlipDecoderBase(const LinearCode& code, FlipPatternSet patterns, std::string name);

  const LinearCode& code_;
  FlipPatternSet patterns_;
  std::size_t window_ = 0;
  std::vector<BitWord> col_syndrome_;  // H column j as an (n-k)-bit word
  std::string name_;
};

class DfdDecoder : public FlipDecoderBase {
 public:
  explicit DfdDecoder(const LinearCode& code)
      : FlipDecoderBase(code, build_phi(code.d_min, code.n), "dfd") {}
};

class EdfdDecoder : public FlipDecoderBase {
 public:
  EdfdDecoder(const LinearCode& code, std::size_t epsilon)
      : FlipDecoderBase(code, build_phi_e(code.d_min, epsilon, code.n),
                        "edfd:" + std::to_string(epsilon)) {}
};

/// One-shot helpers (tests, CLI); sweeps should hold a decoder instance.
DecodeOutcome dfd_decode(const LinearCode& code, const BitWord& r,
                         const std::vector<double>& h);
DecodeOutcome edfd_decode(const LinearCode& code, const BitWord& r,
                          const std::vector<double>& h, std::size_t epsilon);

}  // namespace flipdec
