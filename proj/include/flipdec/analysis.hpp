#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flipdec {

/// BER-vs-Eb/N0 curve points plus identifying metadata.
struct BerCurve {
  std::string code;
  std::string decoder;
  std::vector<double> ebno_db;  // strictly increasing
  std::vector<double> ber;      // in (0, 1]
};

/// Expected Chernoff-surrogate error probability of the r-th least reliable
/// of n Rayleigh-faded bits: nPr / prod_{k=0}^{r-1} (rho + n - k).
double qbar_r(std::size_t n, std::size_t r, double rho_c_bar);

/// Union-style bound on the probability that v (1 <= v <= d) errors defeat a
/// window-d flip decoder: at least one error lies outside the window.
double pe_v_bound(std::size_t n, std::size_t d, std::size_t v, double rho_c_bar);

/// Probability of d+1 or more raw errors under the surrogate
/// qbar = 1/(1 + rho): binomial tail.
double pe_tail(std::size_t n, std::size_t d, double rho_c_bar);

struct BoundInput {
  std::size_t n = 0;
  std::size_t d_min = 0;
  std::vector<double> rho_c_bar;  // positive, increasing
};

struct BoundTerms {
  double window_term = 0.0;  // sum over v of pe_v_bound
  double tail_term = 0.0;    // pe_tail
  double total() const { return window_term + tail_term; }
};

BoundTerms pfd_bound_terms(std::size_t n, std::size_t d_min, double rho_c_bar);

/// Word-error upper bound for the flip decoder over a SNR grid.
std::vector<double> pfd_bound(const BoundInput& input);

/// Least-squares slope of -log10(ber) against log10(linear SNR) over the
/// points whose Eb/N0 lies within [window_lo_db, window_hi_db].
double estimate_diversity(const BerCurve& curve, double window_lo_db,
                          double window_hi_db);

/// Horizontal Eb/N0 gap (reference minus coded) at the target BER, each curve
/// interpolated linearly in log10(ber).
double coding_gain(const BerCurve& coded, const BerCurve& reference, double target_ber);

/// Eb/N0 at which the curve crosses target_ber (log-linear interpolation);
/// throws when the target is not bracketed, naming the curve.
double ebno_at_ber(const BerCurve& curve, double target_ber);

}  // namespace flipdec
