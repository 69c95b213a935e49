#include "flipdec/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "flipdec/error.hpp"

namespace flipdec {

namespace {

LinearCode finish_from_generator(std::string name, const BitMatrix& G_any) {
  LinearCode code;
  code.name = std::move(name);
  code.n = G_any.cols();
  code.k = G_any.rows();
  code.G = to_systematic(G_any).matrix;
  code.H = parity_from_systematic(code.G);
  return code;
}

}  // namespace

LinearCode make_parity_check(std::size_t n) {
  if (n < 2) throw InvalidArgument("make_parity_check: n must be >= 2");
  const std::size_t k = n - 1;
  LinearCode code;
  code.name = "pc:" + std::to_string(n);
  code.n = n;
  code.k = k;
  code.G = BitMatrix(k, n);
  for (std::size_t r = 0; r < k; ++r) {
    code.G.set(r, r, true);
    code.G.set(r, n - 1, true);
  }
  code.H = BitMatrix(1, n);
  for (std::size_t c = 0; c < n; ++c) code.H.set(0, c, true);
  code.d_min = 2;
  code.d_min_provenance = DminProvenance::designed;
  return code;
}

LinearCode make_hamming(unsigned m) {
  if (m < 2) throw InvalidArgument("make_hamming: m must be >= 2");
  const std::size_t n = (std::size_t{1} << m) - 1;
  const std::size_t k = n - m;
  // G = [I_k | P] where the rows of P are the m-bit values of weight >= 2
  // in increasing numeric order (the weight-1 values are the identity part
  // of H = [P^T | I_m]).
  LinearCode code;
  code.name = "hamming:" + std::to_string(m);
  code.n = n;
  code.k = k;
  code.G = BitMatrix(k, n);
  std::size_t r = 0;
  for (std::uint32_t v = 1; v <= n; ++v) {
    if (std::popcount(v) < 2) continue;
    code.G.set(r, r, true);
    for (unsigned b = 0; b < m; ++b)
      if ((v >> b) & 1u) code.G.set(r, k + b, true);
    ++r;
  }
  code.H = parity_from_systematic(code.G);
  code.d_min = 3;
  code.d_min_provenance = DminProvenance::designed;
  if (k <= 12) min_distance_bruteforce(code);
  return code;
}

std::uint64_t bch_generator_poly(unsigned m, unsigned t) {
  const GF2mField field = GF2mField::with_default_poly(m);
  std::uint64_t g = 1;
  std::vector<unsigned> covered;  // orbit representatives already multiplied in
  for (unsigned e = 1; e <= 2 * t; ++e) {
    auto orbit = conjugate_orbit(field, e);
    const unsigned rep = *std::min_element(orbit.begin(), orbit.end());
    if (std::find(covered.begin(), covered.end(), rep) != covered.end()) continue;
    covered.push_back(rep);
    const std::uint64_t mp = minimal_polynomial(field, field.alpha_pow(e));
    // carry-less multiply g *= mp
    std::uint64_t prod = 0;
    for (unsigned b = 0; b < 64; ++b)
      if ((mp >> b) & 1u) prod ^= g << b;
    g = prod;
  }
  return g;
}

LinearCode make_bch(unsigned m, unsigned t) {
  if (m < 3) throw InvalidArgument("make_bch: m must be >= 3");
  if (t < 1) throw InvalidArgument("make_bch: t must be >= 1");
  const std::size_t n = (std::size_t{1} << m) - 1;
  if (2 * t + 1 > n) throw InvalidArgument("make_bch: designed distance exceeds n");
  const std::uint64_t g = bch_generator_poly(m, t);
  const unsigned deg = 63 - std::countl_zero(g);
  if (deg >= n) throw InvalidArgument("make_bch: dimension would be <= 0");
  const std::size_t k = n - deg;

  // Row i carries x^(k-1-i) * g(x); column j holds the coefficient of
  // x^(n-1-j) so the message occupies the leftmost (high-degree) positions.
  BitMatrix G(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (unsigned d = 0; d <= deg; ++d)
      if ((g >> d) & 1u) G.set(i, n - 1 - (k - 1 - i) - d, true);

  LinearCode code = finish_from_generator(
      "bch:" + std::to_string(n) + "," + std::to_string(k), G);
  code.d_min = 2 * t + 1;
  code.d_min_provenance = DminProvenance::designed;
  if (k <= 16) min_distance_bruteforce(code);
  return code;
}

namespace {

/// Bhattacharyya reliability per synthetic channel, tracked as
/// (log z, log (1-z)) so neither end saturates. Smaller z = more reliable.
std::vector<double> polar_log_z(std::size_t n, double z0) {
  std::vector<double> lz = {std::log(z0)};
  std::vector<double> l1z = {std::log1p(-z0)};
  for (std::size_t len = 1; len < n; len <<= 1) {
    std::vector<double> nlz(2 * len), nl1z(2 * len);
    for (std::size_t i = 0; i < len; ++i) {
      const double z = std::exp(lz[i]);
      nlz[i] = lz[i] + std::log(2.0 - z);   // z' = z(2-z)
      nl1z[i] = 2.0 * l1z[i];               // 1-z' = (1-z)^2
      nlz[len + i] = 2.0 * lz[i];           // z' = z^2
      nl1z[len + i] = l1z[i] + std::log1p(z);
    }
    lz = std::move(nlz);
    l1z = std::move(nl1z);
  }
  return lz;
}

}  // namespace

LinearCode make_polar(std::size_t n, std::size_t k, double design_parameter) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw InvalidArgument("make_polar: n must be a power of two");
  if (k < 1 || k > n) throw InvalidArgument("make_polar: need 1 <= k <= n");
  if (design_parameter <= 0.0 || design_parameter >= 1.0)
    throw InvalidArgument("make_polar: design parameter must be in (0, 1)");

  const auto lz = polar_log_z(n, design_parameter);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lz[a] < lz[b]; });
  std::vector<std::size_t> info(order.begin(), order.begin() + k);
  std::sort(info.begin(), info.end());

  // Kronecker-power rows without materializing the full matrix:
  // row i has a 1 in column j iff the bits of j are a subset of the bits of i.
  BitMatrix G(k, n);
  std::size_t min_row_weight = n + 1;
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = info[r];
    for (std::size_t j = 0; j <= i; ++j)
      if ((j & i) == j) G.set(r, j, true);
    min_row_weight = std::min(min_row_weight,
                              std::size_t{1} << std::popcount(static_cast<unsigned long long>(i)));
  }

  LinearCode code = finish_from_generator(
      "polar:" + std::to_string(n) + "," + std::to_string(k), G);
  code.d_min = min_row_weight;
  code.d_min_provenance = DminProvenance::designed;
  return code;
}

LinearCode make_uncoded(std::size_t n) {
  if (n < 1) throw InvalidArgument("make_uncoded: n must be >= 1");
  LinearCode code;
  code.name = "uncoded:" + std::to_string(n);
  code.n = n;
  code.k = n;
  code.G = BitMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) code.G.set(i, i, true);
  code.H = BitMatrix(0, n);
  code.d_min = 1;
  code.d_min_provenance = DminProvenance::designed;
  return code;
}

std::size_t min_distance_bruteforce(LinearCode& code, std::size_t k_limit) {
  if (code.k > k_limit)
    throw LimitRefusal("min_distance_bruteforce: k=" + std::to_string(code.k) +
                       " exceeds limit " + std::to_string(k_limit));
  BitWord acc(code.n);
  std::size_t best = code.n + 1;
  std::uint64_t prev_gray = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << code.k); ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    prev_gray = gray;
    code.G.xor_row_into(static_cast<std::size_t>(std::countr_zero(changed)), acc);
    best = std::min(best, acc.weight());
  }
  code.d_min = best;
  code.d_min_provenance = DminProvenance::computed;
  return best;
}

void encode_into(const LinearCode& code, const BitWord& message, BitWord& out) {
  if (message.size() != code.k)
    throw InvalidArgument("encode: message length " + std::to_string(message.size()) +
                          " != k=" + std::to_string(code.k));
  out.clear();
  for (std::size_t i = 0; i < code.k; ++i)
    if (message.get(i)) code.G.xor_row_into(i, out);
}

BitWord encode(const LinearCode& code, const BitWord& message) {
  BitWord out(code.n);
  encode_into(code, message, out);
  return out;
}

namespace {

std::vector<long> parse_ints(const std::string& s) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      out.push_back(std::stol(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw InvalidArgument("code spec: bad integer '" + s.substr(pos, next - pos) + "'");
    }
    pos = next + 1;
  }
  return out;
}

}  // namespace

LinearCode parse_code_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument("code spec '" + spec + "': expected family:params");
  const std::string family = spec.substr(0, colon);
  const auto params = parse_ints(spec.substr(colon + 1));

  if (family == "pc") {
    if (params.size() != 1) throw InvalidArgument("pc spec wants pc:n");
    return make_parity_check(static_cast<std::size_t>(params[0]));
  }
  if (family == "hamming") {
    if (params.size() != 1) throw InvalidArgument("hamming spec wants hamming:m");
    return make_hamming(static_cast<unsigned>(params[0]));
  }
  if (family == "uncoded") {
    if (params.size() != 1) throw InvalidArgument("uncoded spec wants uncoded:n");
    return make_uncoded(static_cast<std::size_t>(params[0]));
  }
  if (family == "bch") {
    if (params.size() != 2) throw InvalidArgument("bch spec wants bch:n,k");
    const std::size_t n = static_cast<std::size_t>(params[0]);
    const std::size_t k = static_cast<std::size_t>(params[1]);
    unsigned m = 0;
    while ((std::size_t{1} << m) - 1 < n) ++m;
    if ((std::size_t{1} << m) - 1 != n)
      throw InvalidArgument("bch spec: n must be 2^m - 1");
    for (unsigned t = 1; 2 * t + 1 <= n; ++t) {
      LinearCode code = make_bch(m, t);
      if (code.k == k) return code;
      if (code.k < k)
        break;
    }
    throw InvalidArgument("bch spec: no t gives dimension k=" + std::to_string(k) +
                          " at n=" + std::to_string(n));
  }
  if (family == "polar") {
    if (params.size() != 2) throw InvalidArgument("polar spec wants polar:n,k");
    return make_polar(static_cast<std::size_t>(params[0]),
                      static_cast<std::size_t>(params[1]));
  }
  throw InvalidArgument("unknown code family '" + family + "'");
}

std::vector<std::string> stock_code_specs() {
  return {
      "pc:4",        "pc:12",       "pc:64",       "pc:128",     "pc:256",
      "hamming:3",   "hamming:4",   "hamming:5",   "hamming:6",  "hamming:7",
      "hamming:8",   "bch:15,7",    "bch:31,21",   "bch:63,51",  "bch:127,113",
      "bch:255,239", "polar:128,120", "polar:128,113", "polar:128,106",
      "polar:128,99",
  };
}

}  // namespace flipdec
