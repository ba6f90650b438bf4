#pragma once

// Internal arbitrary-precision helpers. Kept out of the public headers so the
// installed package does not depend on Boost.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "toricmot/error.hpp"
#include "toricmot/lattice.hpp"

namespace toricmot::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

inline Int to_int(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Int>::max()) ||
      v < BigInt(std::numeric_limits<Int>::min())) {
    throw ToricError(Errc::Overflow, "value does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

BigMatrix to_big(const IntegerMatrix& m);

/// P * A * Q = D with P, Q unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  std::vector<BigInt> diag;  // min(rows, cols) entries
  BigMatrix left;            // P, rows x rows
  std::size_t rank = 0;
};

SmithDecomposition smith_decompose(BigMatrix a, std::size_t rows, std::size_t cols);

}  // namespace toricmot::detail
