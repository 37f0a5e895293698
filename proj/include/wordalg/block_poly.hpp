#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordalg/word.hpp"

namespace wordalg {

/// Alternating-sign run-length coefficients of a bit sequence.
///
/// |c_i| is the length of the i-th maximal run (most significant first) and
/// sign(c_i) is +1 for a run of ones, -1 for a run of zeros. The magnitudes
/// sum to the width.
class BlockPoly {
 public:
  /// Validates: nonempty, no zero entries, alternating signs, sum |c| == width.
  BlockPoly(std::vector<int> coeffs, int width);

  const std::vector<int>& coeffs() const { return coeffs_; }
  int width() const { return width_; }
  /// Block dimension: the number of runs.
  int dimension() const { return static_cast<int>(coeffs_.size()); }
  /// Signed sum: ones minus zeros.
  int sum() const;

  /// Space-separated signed list, e.g. "+2 -1 +1".
  std::string to_string() const;

  friend bool operator==(const BlockPoly&, const BlockPoly&) = default;

 private:
  std::vector<int> coeffs_;
  int width_;
};

BlockPoly block_encode(const Word& w);
Word block_decode(const BlockPoly& p);
/// Same codec over an arbitrary 0/1 sequence (nonzero entries count as 1).
BlockPoly block_encode_sequence(std::span<const std::uint8_t> bits);

int block_dimension(const Word& w);

inline constexpr int kMaxDeltaWidth = 20;

/// delta(v) for v = 0 .. 2^k - 1 at fixed width k, by direct run counting.
std::vector<int> delta_sequence(int k, unsigned jobs = 1);
/// Fractal generator: seed [1]; at each level append reverse(x) + d, with
/// d = 1 below the last level and d = 0 at the last.
std::vector<int> delta_sequence_recursive(int kmax);

/// Coefficients of conjugate(w): negate(reverse(c)).
BlockPoly conjugate_coeffs(const BlockPoly& p);

}  // namespace wordalg
