#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flipdec/analysis.hpp"
#include "flipdec/error.hpp"
#include "flipdec/rng.hpp"
#include "oracles.hpp"

using namespace flipdec;

namespace {

double log_choose(std::size_t n, std::size_t k) {
  return std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
         std::lgamma(double(n - k + 1));
}

/// Binomial upper tail P(X >= m), straightforward term sum.
double binom_tail(std::size_t n, std::size_t m, double p) {
  double s = 0;
  for (std::size_t i = m; i <= n; ++i)
    s += std::exp(log_choose(n, i) + i * std::log(p) + (n - i) * std::log1p(-p));
  return s;
}

/// Density of the r-th smallest of n unit-mean exponentials, scaled to mean
/// rho; integrated against exp(-y) this is the quadrature oracle for qbar_r.
double order_stat_density(std::size_t n, std::size_t r, double rho, double y) {
  const double la = std::lgamma(double(n + 1)) - std::lgamma(double(r)) -
                    std::lgamma(double(n - r + 1));
  const double u = y / rho;
  return std::exp(la) / rho * std::pow(-std::expm1(-u), double(r - 1)) *
         std::exp(-u * double(n - r + 1));
}

}  // namespace

TEST_CASE("qbar closed forms at the edges") {
  const std::size_t n = 15;
  for (double rho : {0.5, 3.0, 40.0, 1000.0}) {
    CHECK(qbar_r(n, 1, rho) == doctest::Approx(n / (n + rho)).epsilon(1e-12));
    // r = n: nP_n / prod = n! / prod (the nP_n factor is load-bearing: it is
    // what makes qbar(n, n, 0) equal 1)
    double expect = 1.0;
    for (std::size_t k = 0; k < n; ++k)
      expect *= double(n - k) / (rho + double(n - k));
    CHECK(qbar_r(n, n, rho) == doctest::Approx(expect).epsilon(1e-9));
  }
  for (std::size_t r = 1; r <= n; ++r) CHECK(qbar_r(n, r, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(qbar_r(n, 0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(qbar_r(n, 16, 1.0), InvalidArgument);
}

TEST_CASE("qbar is nonincreasing in the reliability rank") {
  for (std::size_t n : {7u, 15u, 31u, 63u}) {
    for (double db = 0; db <= 45; db += 5) {
      const double rho = std::pow(10.0, db / 10.0);
      double prev = 1.1;
      for (std::size_t r = 1; r <= n; ++r) {
        const double q = qbar_r(n, r, rho);
        CHECK(q <= prev + 1e-15);
        prev = q;
      }
    }
  }
}

TEST_CASE("qbar agrees with numeric integration of the order-statistic density") {
  for (std::size_t r : {std::size_t{1}, std::size_t{5}, std::size_t{15}}) {
    for (double rho : {1.0, 10.0, 100.0}) {
      const auto integrand = [&](double y) {
        return order_stat_density(15, r, rho, y) * std::exp(-y);
      };
      // the integrand decays like exp(-y (1 + (n-r+1)/rho)); cut far out
      const double cutoff = 80.0 + 10.0 * rho;
      const double numeric = oracle::integrate(integrand, 0.0, cutoff, 1e-12);
      CHECK(qbar_r(15, r, rho) == doctest::Approx(numeric).epsilon(1e-6));
    }
  }
}

TEST_CASE("single-error bound term collapses to its closed form") {
  const std::size_t n = 15, d = 4;
  for (double rho : {2.0, 20.0, 200.0}) {
    const double expect = (n - d) * qbar_r(n, d + 1, rho) *
                          std::pow(1.0 - qbar_r(n, n, rho), double(n - 1));
    CHECK(pe_v_bound(n, d, 1, rho) == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK_THROWS_AS(pe_v_bound(n, d, 0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(pe_v_bound(n, d, 5, 1.0), InvalidArgument);
}

TEST_CASE("window bound terms decay monotonically once the bound is meaningful") {
  // below ~10 dB the (1 - qbar_n)^(n-v) factor still grows quickly and the
  // term value rises (it sits far above 1 there anyway); from 10 dB on every
  // factor shrinks and the term must decay
  const std::size_t n = 15, d = 4;
  for (std::size_t v = 1; v <= d; ++v) {
    double prev = 1e300;
    for (double db = 10; db <= 40; db += 2) {
      const double value = pe_v_bound(n, d, v, std::pow(10.0, db / 10.0));
      CHECK(value >= 0.0);
      CHECK(std::isfinite(value));
      CHECK(value <= prev);
      prev = value;
    }
    // nonnegative and finite at low SNR too, even where not monotone
    for (double db = 0; db < 10; db += 2) {
      const double value = pe_v_bound(n, d, v, std::pow(10.0, db / 10.0));
      CHECK(value >= 0.0);
      CHECK(std::isfinite(value));
    }
  }
}

TEST_CASE("tail term equals the binomial upper tail") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng.next_u64() % 60;
    const std::size_t d = 1 + rng.next_u64() % std::min<std::size_t>(n - 1, 10);
    const double rho = std::pow(10.0, (rng.uniform() * 40.0) / 10.0);
    const double p = 1.0 / (1.0 + rho);
    CHECK(pe_tail(n, d, rho) == doctest::Approx(binom_tail(n, d + 1, p)).epsilon(1e-9));
  }
  CHECK(pe_tail(15, 4, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("tail slope approaches the window size plus one") {
  // n = 15, d = 4: between 50 and 60 dB the log-log slope sits within 0.1 of 5
  const double r1 = std::pow(10.0, 5.0), r2 = std::pow(10.0, 6.0);
  const double slope = (std::log10(pe_tail(15, 4, r1)) - std::log10(pe_tail(15, 4, r2)));
  CHECK(slope > 4.9);
  CHECK(slope < 5.1);
}

TEST_CASE("assembled bound dominates its tail and keeps the diversity slope") {
  BoundInput input;
  input.n = 15;
  input.d_min = 5;
  for (double db = 0; db <= 60; db += 2)
    input.rho_c_bar.push_back(std::pow(10.0, db / 10.0));
  const auto bound = pfd_bound(input);
  for (std::size_t i = 0; i < bound.size(); ++i) {
    CHECK(bound[i] >= pe_tail(15, 4, input.rho_c_bar[i]));
    CHECK(std::isfinite(bound[i]));
    CHECK(bound[i] > 0.0);
  }
  const double s = std::log10(pfd_bound_terms(15, 5, 1e5).total()) -
                   std::log10(pfd_bound_terms(15, 5, 1e6).total());
  CHECK(s > 4.7);
  CHECK(s < 5.3);
}

TEST_CASE("at high SNR one bound term dominates by orders of magnitude") {
  // both terms decay at the diversity slope; the window term carries the far
  // larger constant (n-d) nP_{d+1} versus C(n, d+1)
  const double rho60 = 0.4667 * 1e6;
  const auto t = pfd_bound_terms(15, 5, rho60);
  CHECK(t.tail_term / t.window_term < 1e-2);
  const double ratio50 = pfd_bound_terms(15, 5, 0.4667 * 1e5).tail_term /
                         pfd_bound_terms(15, 5, 0.4667 * 1e5).window_term;
  const double ratio60 = t.tail_term / t.window_term;
  CHECK(ratio60 == doctest::Approx(ratio50).epsilon(0.05));  // stable asymptotic ratio
}

TEST_CASE("diversity estimate recovers synthetic power laws exactly") {
  BerCurve c2;
  c2.code = "x";
  c2.decoder = "y";
  for (double db = 20; db <= 44; db += 4) {
    const double rho = std::pow(10.0, db / 10.0);
    c2.ebno_db.push_back(db);
    c2.ber.push_back(0.37 / (rho * rho));
  }
  CHECK(estimate_diversity(c2, 20, 44) == doctest::Approx(2.0).epsilon(1e-9));

  BerCurve c5 = c2;
  for (std::size_t i = 0; i < c5.ber.size(); ++i) {
    const double rho = std::pow(10.0, c5.ebno_db[i] / 10.0);
    c5.ber[i] = 12.0 / std::pow(rho, 5.0);
  }
  CHECK(estimate_diversity(c5, 20, 44) == doctest::Approx(5.0).epsilon(1e-9));

  CHECK_THROWS_AS(estimate_diversity(c5, 20, 21), InvalidArgument);
}

TEST_CASE("coding gain interpolation") {
  BerCurve a;
  a.code = "coded";
  a.decoder = "dfd";
  BerCurve b;
  b.code = "ref";
  b.decoder = "hdd";
  for (double db = 10; db <= 30; db += 2) {
    a.ebno_db.push_back(db);
    a.ber.push_back(std::pow(10.0, -db / 4.0));
    b.ebno_db.push_back(db);
    b.ber.push_back(std::pow(10.0, -(db - 6.0) / 4.0));  // same shape, 6 dB right
  }
  CHECK(coding_gain(a, a, 1e-4) == doctest::Approx(0.0));
  CHECK(coding_gain(a, b, 1e-4) == doctest::Approx(6.0).epsilon(1e-9));
  // out-of-range targets name the failing curve: 3e-2 only misses the coded
  // curve, 1e-7 only misses the reference
  CHECK_THROWS_WITH_AS(coding_gain(a, b, 3e-2), doctest::Contains("coded"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(coding_gain(a, b, 1e-7), doctest::Contains("ref"),
                       InvalidArgument);
}
