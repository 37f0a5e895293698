#include "wordalg/signal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wordalg/parallel.hpp"

namespace wordalg::signal {

using std::numbers::pi;

Word manchester_encode(const Word& w) {
  if (w.width() > 32) throw std::invalid_argument("manchester_encode: width must be <= 32");
  std::uint64_t out = 0;
  for (int i = 0; i < w.width(); ++i) out = (out << 2) | (w.bit(i) ? 0b01U : 0b10U);
  return Word(out, 2 * w.width());
}

Word manchester_decode(const Word& w) {
  if (w.width() % 2 != 0) throw std::invalid_argument("manchester_decode: odd width");
  std::uint64_t out = 0;
  for (int i = 0; i < w.width(); i += 2) {
    const bool first = w.bit(i);
    if (first == w.bit(i + 1))
      throw std::invalid_argument("manchester_decode: invalid symbol pair at position " + std::to_string(i));
    out = (out << 1) | static_cast<std::uint64_t>(!first);
  }
  return Word(out, w.width() / 2);
}

double OFDMCode::power() const {
  double p = 0.0;
  for (double w : weights) p += w * w;
  return p;
}

OFDMCode ofdm_weights(const BlockPoly& p, double omega0) {
  if (!(omega0 > 0)) throw std::invalid_argument("ofdm_weights: omega0 must be positive");
  OFDMCode code;
  code.omega0 = omega0;
  code.sign_term = p.coeffs().back() > 0 ? 1 : 0;
  const double total = p.width();
  code.weights.reserve(p.coeffs().size());
  for (int c : p.coeffs()) code.weights.push_back(std::sqrt(std::abs(c) / total));
  return code;
}

Word ofdm_decode(const OFDMCode& code, int width) {
  if (code.weights.empty()) throw std::invalid_argument("ofdm_decode: no weights");
  const std::size_t runs = code.weights.size();
  std::vector<int> coeffs(runs);
  // The last run carries the parity bit; signs alternate backwards from it.
  int sign = code.sign_term ? 1 : -1;
  for (std::size_t i = runs; i-- > 0;) {
    const double w = code.weights[i];
    const long magnitude = std::lround(w * w * width);
    if (magnitude <= 0) throw std::invalid_argument("ofdm_decode: weight does not match the width");
    coeffs[i] = sign * static_cast<int>(magnitude);
    sign = -sign;
  }
  return block_decode(BlockPoly(std::move(coeffs), width));
}

SampledSignal::SampledSignal(std::vector<Complex> samples_, double t0_, double dt_)
    : samples(std::move(samples_)), t0(t0_), dt(dt_) {
  if (samples.empty()) throw std::invalid_argument("SampledSignal: no samples");
  if (!(dt > 0)) throw std::invalid_argument("SampledSignal: dt must be positive");
}

double SampledSignal::energy() const {
  double e = 0.0;
  for (const Complex& x : samples) e += std::norm(x);
  return e * dt;
}

SampledSignal sample_centered(std::size_t n, double span, const std::function<Complex(double)>& f) {
  if (n == 0 || !(span > 0)) throw std::invalid_argument("sample_centered: need n > 0 and span > 0");
  const double dt = span / static_cast<double>(n);
  const double t0 = -static_cast<double>(n / 2) * dt;
  std::vector<Complex> samples(n);
  for (std::size_t j = 0; j < n; ++j) samples[j] = f(t0 + dt * static_cast<double>(j));
  return SampledSignal(std::move(samples), t0, dt);
}

namespace {

// exp(2 pi i m / n) with the phase reduced modulo n first.
Complex unit_root(std::uint64_t m, std::uint64_t n) {
  return std::polar(1.0, 2 * pi * static_cast<double>(m % n) / static_cast<double>(n));
}

}  // namespace

SampledSignal synthesize(const OFDMCode& code, std::size_t sample_count) {
  if (sample_count < 2 * code.weights.size() || sample_count == 0)
    throw std::invalid_argument("synthesize: undersampled (need N >= 2 * harmonics)");
  const double period = 2 * pi / code.omega0;
  std::vector<Complex> s(sample_count);
  for (std::size_t j = 0; j < sample_count; ++j)
    for (std::size_t i = 0; i < code.weights.size(); ++i)
      s[j] += code.weights[i] * unit_root((i + 1) * j, sample_count);
  return SampledSignal(std::move(s), 0.0, period / static_cast<double>(sample_count));
}

double orthogonality_residual(std::size_t sample_count, std::size_t harmonics) {
  if (sample_count < 2) throw std::invalid_argument("orthogonality_residual: need N >= 2");
  if (harmonics == 0) harmonics = sample_count / 2;
  if (2 * harmonics > sample_count) throw std::invalid_argument("orthogonality_residual: undersampled");
  // Gram entries depend only on the harmonic difference.
  double worst = 0.0;
  for (std::size_t diff = 1; diff < harmonics; ++diff) {
    Complex avg{};
    for (std::size_t j = 0; j < sample_count; ++j) avg += unit_root(diff * j, sample_count);
    worst = std::max(worst, std::abs(avg / static_cast<double>(sample_count)));
  }
  return worst;
}

OFDMCode apply_transition_masks(const OFDMCode& code, int width, const Word& flips_0to1,
                                const Word& flips_1to0) {
  if (flips_0to1.width() != width || flips_1to0.width() != width)
    throw std::invalid_argument("apply_transition_masks: mask width mismatch");
  if ((flips_0to1.value() & flips_1to0.value()) != 0)
    throw std::invalid_argument("apply_transition_masks: masks overlap");
  const Word v = ofdm_decode(code, width);
  if ((v.value() & flips_0to1.value()) != 0)
    throw std::invalid_argument("apply_transition_masks: 0->1 flip on a bit that is already 1");
  if ((v.value() & flips_1to0.value()) != flips_1to0.value())
    throw std::invalid_argument("apply_transition_masks: 1->0 flip on a bit that is already 0");
  const Word flipped(v.value() + flips_0to1.value() - flips_1to0.value(), width);
  return ofdm_weights(block_encode(flipped), code.omega0);
}

LCTParams::LCTParams(double a, double b, double c, double d, double tolerance)
    : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw std::invalid_argument("LCTParams: non-finite entry");
  if (std::abs(det() - 1.0) > tolerance)
    throw std::invalid_argument("LCTParams: determinant must be 1");
}

LCTParams LCTParams::rotation(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {c, s, -s, c};
}

SampledSignal lct_apply(const LCTParams& p, const SampledSignal& s, unsigned jobs) {
  for (const Complex& x : s.samples)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw std::invalid_argument("lct_apply: non-finite sample");
  const std::size_t n = s.size();
  std::vector<Complex> out(n);

  if (std::abs(p.b()) < kDegenerateB) {
    const Complex scale = std::sqrt(Complex(p.d(), 0.0));
    parallel_for_ranges(0, n, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t m = lo; m < hi; ++m) {
        const double u = s.time(m);
        const double x = p.d() * u;
        const double pos = (x - s.t0) / s.dt;
        const double nearest = std::round(pos);
        Complex value{};
        if (std::abs(pos - nearest) < 1e-12 && nearest >= 0 && nearest < static_cast<double>(n)) {
          value = s.samples[static_cast<std::size_t>(nearest)];
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            const double arg = pi * (pos - static_cast<double>(j));
            value += s.samples[j] * (std::sin(arg) / arg);
          }
        }
        out[m] = scale * std::polar(1.0, pi * p.c() * p.d() * u * u) * value;
      }
    });
    return SampledSignal(std::move(out), s.t0, s.dt);
  }

  const double b = p.b();
  const Complex norm = 1.0 / std::sqrt(Complex(0.0, b));
  std::vector<Complex> chirped(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = s.time(j);
    chirped[j] = s.samples[j] * std::polar(1.0, pi * p.a() * t * t / b);
  }
  parallel_for_ranges(0, n, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t m = lo; m < hi; ++m) {
      const double u = s.time(m);
      Complex acc{};
      for (std::size_t j = 0; j < n; ++j) acc += chirped[j] * std::polar(1.0, -2 * pi * u * s.time(j) / b);
      out[m] = norm * std::polar(1.0, pi * p.d() * u * u / b) * acc * s.dt;
    }
  });
  return SampledSignal(std::move(out), s.t0, s.dt);
}

LCTParams lct_compose(const LCTParams& p1, const LCTParams& p2) {
  return LCTParams(p2.a() * p1.a() + p2.b() * p1.c(), p2.a() * p1.b() + p2.b() * p1.d(),
                   p2.c() * p1.a() + p2.d() * p1.c(), p2.c() * p1.b() + p2.d() * p1.d(), 1e-9);
}

double relative_l2(const SampledSignal& x, const SampledSignal& y) {
  if (x.size() != y.size()) throw std::invalid_argument("relative_l2: size mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += std::norm(x.samples[i] - y.samples[i]);
    den += std::norm(y.samples[i]);
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

double additivity_residual(const LCTParams& p1, const LCTParams& p2, const SampledSignal& s) {
  return relative_l2(lct_apply(p2, lct_apply(p1, s)), lct_apply(lct_compose(p1, p2), s));
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return out;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][j] + y[i][j];
  return out;
}

Complex det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

namespace {

Mat2 block(const Mat4& m, int row, int col) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = m[2 * row + i][2 * col + j];
  return out;
}

void flag(YBBlocks& r) {
  const Mat2* blocks[] = {&r.r11, &r.r12, &r.r21, &r.r22};
  for (int i = 0; i < 4; ++i) r.non_unimodular[i] = std::abs(det(*blocks[i]) - 1.0) > 1e-12;
}

}  // namespace

YBBlocks yb_block_decompose(const Mat4& m) {
  const Mat2 A = block(m, 0, 0), B = block(m, 0, 1), C = block(m, 1, 0), D = block(m, 1, 1);
  YBBlocks r{A * A + B * C, A * B + B * D, C * A + D * C, C * B + D * D, {}};
  flag(r);
  return r;
}

YBBlocks yb_block_decompose_literal(const Mat4& m) {
  const Mat2 A = block(m, 0, 0), B = block(m, 0, 1), C = block(m, 1, 0), D = block(m, 1, 1);
  YBBlocks r{A * A + B * C, A * B + B * D, A * C + C * D, B * C + D * D, {}};
  flag(r);
  return r;
}

}  // namespace wordalg::signal
