#include "flipdec/analysis.hpp"

#include <cmath>
#include <string>

#include "flipdec/error.hpp"

namespace flipdec {

namespace {

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n + 1)) -
         std::lgamma(static_cast<double>(k + 1)) -
         std::lgamma(static_cast<double>(n - k + 1));
}

}  // namespace

double qbar_r(std::size_t n, std::size_t r, double rho_c_bar) {
  if (r < 1 || r > n) throw InvalidArgument("qbar_r: need 1 <= r <= n");
  if (rho_c_bar < 0.0) throw InvalidArgument("qbar_r: negative SNR");
  // log-domain: products of up to n factors span many decades at high SNR
  double lg = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    lg += std::log(static_cast<double>(n - j));
    lg -= std::log(rho_c_bar + static_cast<double>(n - j));
  }
  return std::exp(lg);
}

double pe_v_bound(std::size_t n, std::size_t d, std::size_t v, double rho_c_bar) {
  if (v < 1 || v > d) throw InvalidArgument("pe_v_bound: need 1 <= v <= d");
  if (d >= n) throw InvalidArgument("pe_v_bound: need d < n");
  const double lq_d1 = std::log(qbar_r(n, d + 1, rho_c_bar));
  const double lq_1 = std::log(qbar_r(n, 1, rho_c_bar));
  const double l1q_n = std::log1p(-qbar_r(n, n, rho_c_bar));
  double sum = 0.0;
  for (std::size_t vm = 1; vm <= v; ++vm) {
    const std::size_t vn = v - vm;
    const double lt = log_binomial(n - d, vm) + log_binomial(d, vn) +
                      static_cast<double>(vm) * lq_d1 + static_cast<double>(vn) * lq_1 +
                      static_cast<double>(n - v) * l1q_n;
    sum += std::exp(lt);
  }
  return sum;
}

double pe_tail(std::size_t n, std::size_t d, double rho_c_bar) {
  const double lq = -std::log1p(rho_c_bar);            // log(1/(1+rho))
  const double l1q = std::log(rho_c_bar) - std::log1p(rho_c_bar);
  double sum = 0.0;
  for (std::size_t m = d + 1; m <= n; ++m) {
    double lt = log_binomial(n, m) + static_cast<double>(m) * lq;
    if (m < n) lt += static_cast<double>(n - m) * l1q;
    sum += std::exp(lt);
  }
  return std::min(sum, 1.0);
}

BoundTerms pfd_bound_terms(std::size_t n, std::size_t d_min, double rho_c_bar) {
  if (d_min < 2) throw InvalidArgument("pfd_bound: d_min must be >= 2");
  const std::size_t d = d_min - 1;
  BoundTerms t;
  for (std::size_t v = 1; v <= d; ++v) t.window_term += pe_v_bound(n, d, v, rho_c_bar);
  t.tail_term = pe_tail(n, d, rho_c_bar);
  return t;
}

std::vector<double> pfd_bound(const BoundInput& input) {
  std::vector<double> out;
  out.reserve(input.rho_c_bar.size());
  for (double rho : input.rho_c_bar) {
    if (rho <= 0.0) throw InvalidArgument("pfd_bound: SNR grid must be positive");
    out.push_back(pfd_bound_terms(input.n, input.d_min, rho).total());
  }
  return out;
}

double estimate_diversity(const BerCurve& curve, double window_lo_db,
                          double window_hi_db) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < curve.ebno_db.size(); ++i) {
    const double db = curve.ebno_db[i];
    if (db < window_lo_db || db > window_hi_db) continue;
    if (curve.ber[i] <= 0.0)
      throw InvalidArgument("estimate_diversity: nonpositive BER point in window");
    const double x = db / 10.0;  // log10 of linear SNR
    const double y = -std::log10(curve.ber[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw InvalidArgument("estimate_diversity: window holds fewer than 2 points");
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

double ebno_at_ber(const BerCurve& curve, double target_ber) {
  if (curve.ebno_db.size() != curve.ber.size() || curve.ebno_db.size() < 2)
    throw InvalidArgument("ebno_at_ber: curve '" + curve.code + "/" + curve.decoder +
                          "' needs >= 2 points");
  const double lt = std::log10(target_ber);
  for (std::size_t i = 0; i + 1 < curve.ber.size(); ++i) {
    const double a = std::log10(curve.ber[i]);
    const double b = std::log10(curve.ber[i + 1]);
    if ((a >= lt && b <= lt) || (a <= lt && b >= lt)) {
      if (a == b) return curve.ebno_db[i];
      const double f = (lt - a) / (b - a);
      return curve.ebno_db[i] + f * (curve.ebno_db[i + 1] - curve.ebno_db[i]);
    }
  }
  throw InvalidArgument("ebno_at_ber: target " + std::to_string(target_ber) +
                        " outside range of curve '" + curve.code + "/" +
                        curve.decoder + "'");
}

double coding_gain(const BerCurve& coded, const BerCurve& reference, double target_ber) {
  const double coded_db = ebno_at_ber(coded, target_ber);
  const double reference_db = ebno_at_ber(reference, target_ber);
  return reference_db - coded_db;
}

}  // namespace flipdec
