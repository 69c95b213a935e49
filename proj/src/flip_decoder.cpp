#include "flipdec/flip_decoder.hpp"

#include <algorithm>

#include "flipdec/error.hpp"

namespace flipdec {

namespace {

struct CsiEntry {
  double h;
  std::uint32_t idx;
};

// ascending by value, ties by original index (matches sort_csi)
thread_local std::vector<CsiEntry> t_order;

}  // namespace

FlipDecoderBase::FlipDecoderBase(const LinearCode& code, FlipPatternSet patterns,
                                 std::string name)
    : code_(code), patterns_(std::move(patterns)), name_(std::move(name)) {
  window_ = patterns_.d + patterns_.epsilon;
  col_syndrome_.reserve(code.n);
  for (std::size_t c = 0; c < code.n; ++c) {
    BitWord col(code.H.rows());
    for (std::size_t r = 0; r < code.H.rows(); ++r)
      if (code.H.get(r, c)) col.set(r, true);
    col_syndrome_.push_back(std::move(col));
  }
}

void FlipDecoderBase::decode(const DecodeInput& in, DecodeOutcome& out) const {
  const BitWord& r = in.r;
  if (r.size() != code_.n || in.h.size() != code_.n)
    throw InvalidArgument("flip decode: input length does not match code length");

  out.abandoned = false;
  BitWord base = syndrome(code_.H, r);
  out.queries = 1;
  if (base.all_zero()) {
    out.codeword_hat = r;
    out.found_valid = true;
    out.flips_applied = 0;
    return;
  }

  auto& order = t_order;
  order.resize(code_.n);
  for (std::size_t j = 0; j < code_.n; ++j)
    order[j] = {in.h[j], static_cast<std::uint32_t>(j)};
  std::sort(order.begin(), order.end(), [](const CsiEntry& a, const CsiEntry& b) {
    return a.h < b.h || (a.h == b.h && a.idx < b.idx);
  });

  BitWord trial(code_.H.rows());
  for (const auto& sup : patterns_.supports) {
    trial = base;
    for (auto j : sup) trial ^= col_syndrome_[order[j].idx];
    ++out.queries;
    if (trial.all_zero()) {
      out.codeword_hat = r;
      for (auto j : sup) out.codeword_hat.flip(order[j].idx);
      out.found_valid = true;
      out.flips_applied = sup.size();
      return;
    }
  }
  out.codeword_hat = r;
  out.found_valid = false;
  out.flips_applied = 0;
}

DecodeOutcome dfd_decode(const LinearCode& code, const BitWord& r,
                         const std::vector<double>& h) {
  DfdDecoder dec(code);
  return dec.decode(DecodeInput{r, h, nullptr, 0.0});
}

DecodeOutcome edfd_decode(const LinearCode& code, const BitWord& r,
                          const std::vector<double>& h, std::size_t epsilon) {
  EdfdDecoder dec(code, epsilon);
  return dec.decode(DecodeInput{r, h, nullptr, 0.0});
}

}  // namespace flipdec
