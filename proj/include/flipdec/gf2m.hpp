#pragma once

#include <cstdint>
#include <vector>

#include "flipdec/error.hpp"

namespace flipdec {

/// GF(2^m) arithmetic via log/antilog tables over a fixed primitive polynomial.
class GF2mField {
 public:
  /// primitive_poly is the full degree-m polynomial as a bitmask, LSB = x^0
  /// (e.g. x^4+x+1 -> 0b10011). Defaults per extension degree are in
  /// default_primitive_poly().
  GF2mField(unsigned m, std::uint32_t primitive_poly);

  static std::uint32_t default_primitive_poly(unsigned m);
  static GF2mField with_default_poly(unsigned m) {
    return GF2mField(m, default_primitive_poly(m));
  }

  unsigned m() const { return m_; }
  std::uint32_t primitive_poly() const { return poly_; }
  std::uint32_t order() const { return size_; }  // 2^m - 1

  std::uint32_t alpha_pow(unsigned e) const { return antilog_[e % size_]; }
  unsigned log(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

 private:
  unsigned m_;
  std::uint32_t poly_;
  std::uint32_t size_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> log_;
};

/// Monic binary minimal polynomial of alpha^exponent, as a bitmask with
/// LSB = x^0. Its degree divides m. Throws for the zero element
/// (exponent refers to a nonzero power of alpha, so only an explicit
/// element value of 0 is rejected by the element overload).
std::uint64_t minimal_polynomial(const GF2mField& field, std::uint32_t element);

/// Cyclotomic-coset exponents of alpha^exponent: {e, 2e, 4e, ...} mod 2^m-1.
std::vector<unsigned> conjugate_orbit(const GF2mField& field, unsigned exponent);

}  // namespace flipdec
