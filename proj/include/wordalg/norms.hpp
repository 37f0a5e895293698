#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "wordalg/word.hpp"

namespace wordalg {

enum class NormKind { DigitSum, DCT, DST };

std::string_view to_string(NormKind kind);
/// Accepts "digitsum", "dct", "dst".
NormKind parse_norm_kind(std::string_view name);

struct NormParams {
  double g = std::numbers::ln2;
  NormParams() = default;
  explicit NormParams(double g_);
};

/// Number of 1 bits.
int digit_sum(const Word& w);

/// Orthonormal type-II cosine or sine transform matrix for width k, applied by
/// direct O(k^2) summation to the bit string read as {0,1} reals, MSB at index 0.
class TransformKernel {
 public:
  TransformKernel(int width, NormKind kind);

  int width() const { return width_; }
  NormKind kind() const { return kind_; }
  std::vector<double> coeffs(const Word& w) const;
  /// Sum of all transform coefficients of w.
  double coeff_sum(const Word& w) const;

 private:
  int width_;
  NormKind kind_;
  std::vector<double> matrix_;  // row-major, output index major
};

std::vector<double> transform_coeffs(const Word& w, NormKind kind);

/// Exponent f: digit sum, or the sum of the transform coefficients.
double f_value(const Word& w, NormKind kind);
/// exp(g f). Exact powers of two for DigitSum at g = ln 2.
double norm(const Word& w, NormKind kind, const NormParams& params = {});
double norm_from_f(double f, NormKind kind, const NormParams& params);

inline constexpr double kCensusResolution = 1e-9;
inline constexpr int kMaxCensusWidth = 20;
inline constexpr int kMaxPairSweepWidth = 10;

struct CensusResult {
  int width = 0;
  NormKind kind = NormKind::DigitSum;
  std::size_t distinct_count = 0;
  std::size_t largest_class = 0;
  std::vector<double> f_values;  // indexed by word value
};

/// Exact census of f over S_k; values collide iff they agree after rounding to 1e-9.
CensusResult degeneracy_census(int k, NormKind kind, unsigned jobs = 1);

enum class WordFilter { All, Balanced };

/// max |f(v*) - f(v)| over S_k.
double symmetry_residual(int k, NormKind kind);
/// max |f(mu nu) - f(mu) - f(nu)| over pairs, with mu nu the string
/// concatenation evaluated at width 2k.
double multiplicativity_residual(int k, NormKind kind);
/// max | ||v v*|| - ||v||^2 | over S_k (optionally only balanced words).
double cstar_residual(int k, NormKind kind, const NormParams& params = {},
                      WordFilter filter = WordFilter::All);

}  // namespace wordalg
