#pragma once

#include <utility>
#include <vector>

#include "flipdec/bitword.hpp"
#include "flipdec/rng.hpp"

namespace flipdec {

/// Operating point: average SNR per coded bit rho_c_bar = rate * 10^(EbN0/10).
struct SnrPoint {
  double ebno_db = 0.0;
  double rate = 1.0;
  double rho_c_bar = 1.0;

  static SnrPoint from_ebno(double ebno_db, double rate);
};

/// One transmitted word as seen by the receiver: complex samples y, the
/// per-symbol fading magnitudes h (perfect CSI), and the operating SNR.
struct ChannelObservation {
  std::vector<double> y_re;
  std::vector<double> y_im;
  std::vector<double> h;
  double rho_c_bar = 1.0;
};

/// BPSK map: bit 0 -> +1, bit 1 -> -1.
std::vector<double> modulate_bpsk(const BitWord& c);

/// y_j = h_j s_j + w_j with h_j iid Rayleigh (E[h^2] = 1) and w_j circularly
/// symmetric complex Gaussian of total variance N0.
///
/// Calibration: only the real noise component (variance N0/2) affects BPSK
/// detection, so N0 = 1/(2 rho_c_bar); the instantaneous post-detection SNR
/// of symbol j is then 2 h_j^2 rho_c_bar and the rate-1 uncoded curve crosses
/// BER 1e-5 near 41 dB.
ChannelObservation apply_channel(const std::vector<double>& s, const SnrPoint& snr,
                                 Rng& rng);

/// In-place variant for tight loops; when draw_imag is false the quadrature
/// component is skipped (hard-decision receivers never look at it).
void apply_channel_into(const std::vector<double>& s, const SnrPoint& snr, Rng& rng,
                        ChannelObservation& obs, bool draw_imag = true);

/// Hard decision r_j = 1 iff Re(y_j) < 0 (ties decide 0), plus the CSI copy.
std::pair<BitWord, std::vector<double>> hard_decision(const ChannelObservation& obs);
BitWord hard_decision_bits(const ChannelObservation& obs);

/// Closed-form BPSK bit error probability on Rayleigh fading at average
/// post-detection SNR gamma_bar: 0.5 (1 - sqrt(g/(1+g))).
double rayleigh_bpsk_ber(double gamma_bar);

/// Same, at an Eb/N0 operating point for the uncoded (rate 1) reference:
/// gamma_bar = 2 * 10^(ebno_db/10).
double uncoded_ber(double ebno_db);

}  // namespace flipdec
