#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hodgekit {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Invalid mathematical input: non-homogeneous polynomials where homogeneity
// is required, degenerate lattices, actions that do not fix G, and so on.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// weighted_degree on a polynomial whose terms have several distinct degrees.
struct NonHomogeneousError : DomainError {
  std::vector<long> degrees;  // distinct weighted degrees present, ascending
  explicit NonHomogeneousError(std::vector<long> degs);
};

// Text that does not conform to the polynomial grammar.
struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the source text
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// A query whose method-specific bound was exceeded; the answer is neither
// true nor false. Raised instead of returning a silent default.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline NonHomogeneousError::NonHomogeneousError(std::vector<long> degs)
    : DomainError([&degs] {
        std::string msg = "polynomial is not homogeneous; degrees present:";
        for (long d : degs) msg += " " + std::to_string(d);
        return msg;
      }()),
      degrees(std::move(degs)) {}

}  // namespace hodgekit
