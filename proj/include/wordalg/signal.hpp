#pragma once

#include <array>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "wordalg/block_poly.hpp"
#include "wordalg/word.hpp"

namespace wordalg::signal {

using Complex = std::complex<double>;

/// Symbol-wise 0 -> "10", 1 -> "01". Output width is 2k (k <= 32).
Word manchester_encode(const Word& w);
/// Inverse of manchester_encode; throws on any pair other than "10"/"01".
Word manchester_decode(const Word& w);

/// Unit-power harmonic weights derived from block-polynomial magnitudes.
struct OFDMCode {
  std::vector<double> weights;  // w_i = sqrt(|c_i| / sum |c|), harmonics 1..delta
  int sign_term = 0;            // c_0 = mod(v, 2)
  double omega0 = 2 * std::numbers::pi;

  double power() const;
};

OFDMCode ofdm_weights(const BlockPoly& p, double omega0 = 2 * std::numbers::pi);
/// Recovers the word behind a code of known width. The magnitudes come from
/// width * w_i^2 and the run signs from sign_term.
Word ofdm_decode(const OFDMCode& code, int width);

struct SampledSignal {
  std::vector<Complex> samples;
  double t0 = 0.0;
  double dt = 1.0;

  SampledSignal() = default;
  SampledSignal(std::vector<Complex> samples, double t0, double dt);

  std::size_t size() const { return samples.size(); }
  double time(std::size_t j) const { return t0 + dt * static_cast<double>(j); }
  /// Sum |s_j|^2 dt.
  double energy() const;
};

/// Samples f at t_j = (j - n/2) * span / n, j = 0..n-1.
SampledSignal sample_centered(std::size_t n, double span, const std::function<Complex(double)>& f);

/// s(t_j) = sum_i w_i exp(i * i * omega0 * t_j) over one fundamental period.
/// Requires N >= 2 * (number of weights).
SampledSignal synthesize(const OFDMCode& code, std::size_t sample_count);

/// Largest deviation of the discrete temporal-average Gram matrix of
/// harmonics 1..harmonics from the identity. Defaults to harmonics = N/2.
double orthogonality_residual(std::size_t sample_count, std::size_t harmonics = 0);

/// Flips bits of the word behind `code` (0 -> 1 at flips_0to1, 1 -> 0 at
/// flips_1to0) additively and re-encodes. Masks must be disjoint and valid.
OFDMCode apply_transition_masks(const OFDMCode& code, int width, const Word& flips_0to1,
                                const Word& flips_1to0);

/// Real 2x2 phase-space matrix [[a, b], [c, d]] with unit determinant.
class LCTParams {
 public:
  LCTParams(double a, double b, double c, double d, double tolerance = 1e-12);

  static LCTParams identity() { return {1, 0, 0, 1}; }
  static LCTParams fourier() { return {0, 1, -1, 0}; }
  /// Fractional Fourier rotation by angle alpha.
  static LCTParams rotation(double alpha);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double det() const { return a_ * d_ - b_ * c_; }

 private:
  double a_, b_, c_, d_;
};

inline constexpr double kDegenerateB = 1e-9;

/// Unitary LCT by direct O(N^2) quadrature on the input grid. For |b| >= 1e-9:
///   F(u) = (i b)^{-1/2} exp(i pi d u^2 / b) sum_t exp(-2 pi i u t / b) exp(i pi a t^2 / b) s(t) dt.
/// Otherwise the scaling-chirp limit sqrt(d) exp(i pi c d u^2) s(d u) with
/// band-limited (sinc) interpolation.
SampledSignal lct_apply(const LCTParams& p, const SampledSignal& s, unsigned jobs = 1);

/// Matrix product p2 . p1 (apply p1 first). Throws if det drifts by more than 1e-9.
LCTParams lct_compose(const LCTParams& p1, const LCTParams& p2);

/// Relative L2 distance between p2(p1(s)) and (p2 . p1)(s).
double additivity_residual(const LCTParams& p1, const LCTParams& p2, const SampledSignal& s);

/// Relative L2 distance ||x - y|| / ||y||.
double relative_l2(const SampledSignal& x, const SampledSignal& y);

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Complex det(const Mat2& m);

struct YBBlocks {
  Mat2 r11, r12, r21, r22;
  /// Per block: true when det != 1, i.e. not a valid LCT parameter matrix.
  std::array<bool, 4> non_unimodular{};
};

/// The 2x2 blocks of m^2 with m = [[A, B], [C, D]]:
/// R11 = A^2 + BC, R12 = AB + BD, R21 = CA + DC, R22 = CB + D^2.
YBBlocks yb_block_decompose(const Mat4& m);
/// Same blocks with the lower row multiplied in the order AC + CD, BC + D^2.
/// Agrees with yb_block_decompose only when C commutes with A, B and D.
YBBlocks yb_block_decompose_literal(const Mat4& m);

}  // namespace wordalg::signal
