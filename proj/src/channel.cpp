#include "flipdec/channel.hpp"

#include <cmath>

#include "flipdec/error.hpp"

namespace flipdec {

SnrPoint SnrPoint::from_ebno(double ebno_db, double rate) {
  if (rate <= 0.0 || rate > 1.0) throw InvalidArgument("SnrPoint: rate out of (0, 1]");
  SnrPoint p;
  p.ebno_db = ebno_db;
  p.rate = rate;
  p.rho_c_bar = rate * std::pow(10.0, ebno_db / 10.0);
  return p;
}

std::vector<double> modulate_bpsk(const BitWord& c) {
  std::vector<double> s(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) s[j] = c.get(j) ? -1.0 : 1.0;
  return s;
}

void apply_channel_into(const std::vector<double>& s, const SnrPoint& snr, Rng& rng,
                        ChannelObservation& obs, bool draw_imag) {
  if (snr.rho_c_bar <= 0.0) throw InvalidArgument("apply_channel: SNR must be positive");
  const std::size_t n = s.size();
  obs.rho_c_bar = snr.rho_c_bar;
  obs.y_re.resize(n);
  obs.h.resize(n);
  const double n0 = 1.0 / (2.0 * snr.rho_c_bar);
  const double sigma = std::sqrt(n0 / 2.0);  // per noise component
  if (draw_imag) {
    obs.y_im.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double h = rng.rayleigh();
      obs.h[j] = h;
      obs.y_re[j] = h * s[j] + sigma * rng.normal();
      obs.y_im[j] = sigma * rng.normal();
    }
  } else {
    obs.y_im.clear();
    for (std::size_t j = 0; j < n; ++j) {
      const double h = rng.rayleigh();
      obs.h[j] = h;
      obs.y_re[j] = h * s[j] + sigma * rng.normal();
    }
  }
}

ChannelObservation apply_channel(const std::vector<double>& s, const SnrPoint& snr,
                                 Rng& rng) {
  ChannelObservation obs;
  apply_channel_into(s, snr, rng, obs, /*draw_imag=*/true);
  return obs;
}

BitWord hard_decision_bits(const ChannelObservation& obs) {
  BitWord r(obs.y_re.size());
  for (std::size_t j = 0; j < obs.y_re.size(); ++j)
    if (obs.y_re[j] < 0.0) r.set(j, true);
  return r;
}

std::pair<BitWord, std::vector<double>> hard_decision(const ChannelObservation& obs) {
  return {hard_decision_bits(obs), obs.h};
}

double rayleigh_bpsk_ber(double gamma_bar) {
  if (gamma_bar <= 0.0) return 0.5;
  return 0.5 * (1.0 - std::sqrt(gamma_bar / (1.0 + gamma_bar)));
}

double uncoded_ber(double ebno_db) {
  return rayleigh_bpsk_ber(2.0 * std::pow(10.0, ebno_db / 10.0));
}

}  // namespace flipdec
