#include "flipdec/gf2m.hpp"

#include <string>

namespace flipdec {

GF2mField::GF2mField(unsigned m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly), size_((1u << m) - 1) {
  if (m < 2 || m > 16) throw InvalidArgument("GF2mField: m must be in [2, 16]");
  if ((primitive_poly >> m) != 1u)
    throw InvalidArgument("GF2mField: primitive polynomial must have degree m");
  antilog_.resize(size_);
  log_.assign(size_ + 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < size_; ++i) {
    antilog_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x >> m_) x ^= poly_;
  }
  if (x != 1)
    throw InvalidArgument("GF2mField: polynomial 0x" + std::to_string(primitive_poly) +
                          " is not primitive");
}

std::uint32_t GF2mField::default_primitive_poly(unsigned m) {
  switch (m) {
    case 2: return 0b111;
    case 3: return 0b1011;            // x^3+x+1
    case 4: return 0b10011;           // x^4+x+1
    case 5: return 0b100101;          // x^5+x^2+1
    case 6: return 0b1000011;         // x^6+x+1
    case 7: return 0b10001001;        // x^7+x^3+1
    case 8: return 0b100011101;       // x^8+x^4+x^3+x^2+1
    case 9: return 0b1000010001;      // x^9+x^4+1
    case 10: return 0b10000001001;    // x^10+x^3+1
    default:
      throw InvalidArgument("GF2mField: no default primitive polynomial for m=" +
                            std::to_string(m));
  }
}

unsigned GF2mField::log(std::uint32_t x) const {
  if (x == 0 || x > size_) throw InvalidArgument("GF2mField::log of zero");
  return log_[x];
}

std::uint32_t GF2mField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % size_];
}

std::vector<unsigned> conjugate_orbit(const GF2mField& field, unsigned exponent) {
  std::vector<unsigned> orbit;
  unsigned e = exponent % field.order();
  do {
    orbit.push_back(e);
    e = (e * 2) % field.order();
  } while (e != orbit.front());
  return orbit;
}

std::uint64_t minimal_polynomial(const GF2mField& field, std::uint32_t element) {
  if (element == 0) throw InvalidArgument("minimal_polynomial: zero element");
  const unsigned exp = field.log(element);
  const auto orbit = conjugate_orbit(field, exp);

  // product of (X + alpha^i) over the orbit; coefficients tracked in GF(2^m)
  // and checked to collapse into GF(2)
  std::vector<std::uint32_t> coeff = {1};  // ascending powers of X
  for (unsigned e : orbit) {
    const std::uint32_t root = field.alpha_pow(e);
    std::vector<std::uint32_t> next(coeff.size() + 1, 0);
    for (std::size_t d = 0; d < coeff.size(); ++d) {
      next[d + 1] ^= coeff[d];
      next[d] ^= field.mul(coeff[d], root);
    }
    coeff = std::move(next);
  }
  std::uint64_t mask = 0;
  for (std::size_t d = 0; d < coeff.size(); ++d) {
    if (coeff[d] > 1)
      throw InvalidArgument("minimal_polynomial: coefficients did not land in GF(2)");
    if (coeff[d]) mask |= std::uint64_t{1} << d;
  }
  return mask;
}

}  // namespace flipdec
