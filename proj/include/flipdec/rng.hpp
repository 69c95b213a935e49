#pragma once

#include <cmath>
#include <cstdint>

namespace flipdec {

/// xoshiro256++ with splitmix64 seeding. Streams are keyed by a tuple of
/// integers (master seed, point index, chunk index) so parallel sweeps can
/// hand every chunk its own independent, reproducible generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_from(seed); }

  static Rng from_key(std::uint64_t master, std::uint64_t point, std::uint64_t chunk) {
    std::uint64_t x = mix(master ^ mix(point + 0x9e3779b97f4a7c15ULL));
    x = mix(x ^ mix(chunk + 0x517cc1b727220a95ULL));
    return Rng(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1] (safe for log()).
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via a 128-layer ziggurat; the slow wedge/tail paths are
  /// hit a fraction of a percent of the time.
  double normal() {
    const Zig& z = *zig_;
    for (;;) {
      const std::uint64_t u = next_u64();
      const int idx = static_cast<int>(u & 127);
      const std::int64_t j =
          static_cast<std::int64_t>(u >> 11) - (std::int64_t{1} << 52);
      if (std::uint64_t(j < 0 ? -j : j) < z.kn[idx]) return j * z.wn[idx];
      if (idx == 0) {  // tail beyond R
        double x, y;
        do {
          x = -std::log(uniform_pos()) / Zig::kR;
          y = -std::log(uniform_pos());
        } while (y + y < x * x);
        return j > 0 ? Zig::kR + x : -(Zig::kR + x);
      }
      const double x = j * z.wn[idx];
      if (z.fn[idx] + uniform() * (z.fn[idx - 1] - z.fn[idx]) < std::exp(-0.5 * x * x))
        return x;
    }
  }

  /// Exponential(1) via a 256-layer ziggurat.
  double exponential() {
    const Zig& z = *zig_;
    for (;;) {
      const std::uint64_t u = next_u64();
      const int idx = static_cast<int>(u & 255);
      const std::uint64_t j = u >> 12;
      if (j < z.ke[idx]) return j * z.we[idx];
      if (idx == 0) return Zig::kRe - std::log(uniform_pos());
      const double x = j * z.we[idx];
      if (z.fe[idx] + uniform() * (z.fe[idx - 1] - z.fe[idx]) < std::exp(-x)) return x;
    }
  }

  /// Rayleigh magnitude with E[h^2] = 1.
  double rayleigh() { return std::sqrt(exponential()); }

 private:
  struct Zig {
    // normal: 128 layers over [0, R], Marsaglia-Tsang layout with 52-bit lanes
    static constexpr double kR = 3.442619855899;
    // exponential: 256 layers over [0, Re]
    static constexpr double kRe = 7.69711747013104972;
    std::uint64_t kn[128];
    double wn[128], fn[128];
    std::uint64_t ke[256];
    double we[256], fe[256];

    Zig() {
      const double m1 = 4503599627370496.0;  // 2^52
      double dn = kR, tn = kR;
      const double vn = 9.91256303526217e-3;
      double q = vn / std::exp(-0.5 * dn * dn);
      kn[0] = static_cast<std::uint64_t>((dn / q) * m1);
      kn[1] = 0;
      wn[0] = q / m1;
      wn[127] = dn / m1;
      fn[0] = 1.0;
      fn[127] = std::exp(-0.5 * dn * dn);
      for (int i = 126; i >= 1; --i) {
        dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
        kn[i + 1] = static_cast<std::uint64_t>((dn / tn) * m1);
        tn = dn;
        fn[i] = std::exp(-0.5 * dn * dn);
        wn[i] = dn / m1;
      }

      double de = kRe, te = kRe;
      const double ve = 3.949659822581572e-3;
      q = ve / std::exp(-de);
      ke[0] = static_cast<std::uint64_t>((de / q) * m1);
      ke[1] = 0;
      we[0] = q / m1;
      we[255] = de / m1;
      fe[0] = 1.0;
      fe[255] = std::exp(-de);
      for (int i = 254; i >= 1; --i) {
        de = -std::log(ve / de + std::exp(-de));
        ke[i + 1] = static_cast<std::uint64_t>((de / te) * m1);
        te = de;
        fe[i] = std::exp(-de);
        we[i] = de / m1;
      }
    }
  };

  static const Zig& zig() {
    static const Zig tables;
    return tables;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix(std::uint64_t& x) {
    return mix(x += 0x9e3779b97f4a7c15ULL);
  }
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  void seed_from(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t s_[4];
  const Zig* zig_ = &zig();
};

}  // namespace flipdec
