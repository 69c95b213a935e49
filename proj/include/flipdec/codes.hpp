#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flipdec/bitmatrix.hpp"
#include "flipdec/bitword.hpp"
#include "flipdec/gf2m.hpp"

namespace flipdec {

enum class DminProvenance { computed, designed, supplied };

/// A binary linear block code in systematic form: G = [I_k | P], H = [P^T | I].
/// Immutable after construction; safe to share across threads.
struct LinearCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix G;  // k x n, systematic
  BitMatrix H;  // (n-k) x n
  std::size_t d_min = 0;
  DminProvenance d_min_provenance = DminProvenance::supplied;

  double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

/// Single parity bit over n-1 message bits: (n, n-1), d_min 2.
LinearCode make_parity_check(std::size_t n);

/// Hamming code from m >= 2 parity bits: (2^m - 1, 2^m - 1 - m), d_min 3.
LinearCode make_hamming(unsigned m);

/// Narrow-sense binary BCH code of length 2^m - 1 correcting t errors.
/// g(x) = lcm of the minimal polynomials of alpha^1 .. alpha^2t over the
/// fixed per-m primitive polynomial. d_min is the designed distance 2t+1,
/// replaced by the exact brute-force value when k is small enough to afford it.
LinearCode make_bch(unsigned m, unsigned t);

/// Generator polynomial of the (m, t) BCH code, ascending bitmask.
std::uint64_t bch_generator_poly(unsigned m, unsigned t);

/// Polar code: rows of the log2(n)-fold Kronecker power of [[1,0],[1,1]],
/// information set chosen by a Bhattacharyya recursion started at
/// design_parameter (erasure-style). d_min = minimum selected row weight.
LinearCode make_polar(std::size_t n, std::size_t k, double design_parameter = 0.5);

/// Identity code (k == n): every word is a codeword. Used as the uncoded
/// reference in sweeps. Equivalent to make_polar(n, n) but for any n.
LinearCode make_uncoded(std::size_t n);

/// Exact minimum nonzero-codeword weight by Gray-code enumeration of all
/// 2^k - 1 messages. Refuses when k exceeds the limit. Updates d_min and
/// provenance on the passed code.
std::size_t min_distance_bruteforce(LinearCode& code, std::size_t k_limit = 20);

/// Systematic encoding: first k bits of the result equal the message.
BitWord encode(const LinearCode& code, const BitWord& message);
void encode_into(const LinearCode& code, const BitWord& message, BitWord& out);

/// Parses `pc:n`, `hamming:m`, `bch:n,k`, `polar:n,k`, `uncoded:n`.
LinearCode parse_code_spec(const std::string& spec);

/// The set of stock code specs the CLI advertises.
std::vector<std::string> stock_code_specs();

}  // namespace flipdec
