#include "wordalg/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wordalg/parallel.hpp"

namespace wordalg {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::DigitSum: return "digitsum";
    case NormKind::DCT: return "dct";
    case NormKind::DST: return "dst";
  }
  return "unknown";
}

NormKind parse_norm_kind(std::string_view name) {
  if (name == "digitsum") return NormKind::DigitSum;
  if (name == "dct") return NormKind::DCT;
  if (name == "dst") return NormKind::DST;
  throw std::invalid_argument("unknown norm kind: " + std::string(name));
}

NormParams::NormParams(double g_) : g(g_) {
  if (!(g > 0) || !std::isfinite(g)) throw std::invalid_argument("NormParams: g must be > 0");
}

int digit_sum(const Word& w) { return std::popcount(w.value()); }

TransformKernel::TransformKernel(int width, NormKind kind)
    : width_(width), kind_(kind), matrix_(static_cast<std::size_t>(width) * width) {
  if (kind == NormKind::DigitSum) throw std::invalid_argument("TransformKernel: not a transform kind");
  if (width < 0 || width > kMaxWordWidth) throw std::invalid_argument("TransformKernel: bad width");
  const double k = width;
  for (int m = 0; m < width; ++m) {
    double scale = std::sqrt(2.0 / k);
    if ((kind == NormKind::DCT && m == 0) || (kind == NormKind::DST && m == width - 1))
      scale = std::sqrt(1.0 / k);
    for (int n = 0; n < width; ++n) {
      const double phase = std::numbers::pi * (n + 0.5) / k;
      const double entry = kind == NormKind::DCT ? std::cos(phase * m) : std::sin(phase * (m + 1));
      matrix_[static_cast<std::size_t>(m) * width + n] = scale * entry;
    }
  }
}

std::vector<double> TransformKernel::coeffs(const Word& w) const {
  if (w.width() != width_) throw std::invalid_argument("TransformKernel: width mismatch");
  std::vector<double> out(static_cast<std::size_t>(width_), 0.0);
  for (int m = 0; m < width_; ++m) {
    double acc = 0.0;
    for (int n = 0; n < width_; ++n)
      if (w.bit(n)) acc += matrix_[static_cast<std::size_t>(m) * width_ + n];
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

double TransformKernel::coeff_sum(const Word& w) const {
  double total = 0.0;
  for (double c : coeffs(w)) total += c;
  return total;
}

std::vector<double> transform_coeffs(const Word& w, NormKind kind) {
  return TransformKernel(w.width(), kind).coeffs(w);
}

double f_value(const Word& w, NormKind kind) {
  if (kind == NormKind::DigitSum) return digit_sum(w);
  return TransformKernel(w.width(), kind).coeff_sum(w);
}

double norm_from_f(double f, NormKind kind, const NormParams& params) {
  if (kind == NormKind::DigitSum && params.g == std::numbers::ln2) return std::ldexp(1.0, static_cast<int>(f));
  return std::exp(params.g * f);
}

double norm(const Word& w, NormKind kind, const NormParams& params) {
  return norm_from_f(f_value(w, kind), kind, params);
}

namespace {

void require_width(int k, int max, const char* what) {
  if (k < 1 || k > max) throw std::invalid_argument(std::string(what) + ": k out of range");
}

// Evaluates f over S_k, reusing one kernel per width.
class FEvaluator {
 public:
  FEvaluator(int k, NormKind kind) : kind_(kind) {
    if (kind != NormKind::DigitSum) {
      kernel_.emplace(k, kind);
      if (2 * k <= kMaxWordWidth) wide_.emplace(2 * k, kind);
    }
  }
  double operator()(const Word& w) const {
    if (kind_ == NormKind::DigitSum) return digit_sum(w);
    return (w.width() == kernel_->width() ? *kernel_ : *wide_).coeff_sum(w);
  }

 private:
  NormKind kind_;
  std::optional<TransformKernel> kernel_;
  std::optional<TransformKernel> wide_;
};

}  // namespace

CensusResult degeneracy_census(int k, NormKind kind, unsigned jobs) {
  require_width(k, kMaxCensusWidth, "degeneracy_census");
  const std::uint64_t count = std::uint64_t{1} << k;
  CensusResult out;
  out.width = k;
  out.kind = kind;
  out.f_values.resize(count);
  const FEvaluator f(k, kind);
  std::vector<long long> keys(count);
  parallel_for_ranges(0, count, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t v = lo; v < hi; ++v) {
      out.f_values[v] = f(Word(v, k));
      keys[v] = std::llround(out.f_values[v] / kCensusResolution);
    }
  });
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    ++out.distinct_count;
    out.largest_class = std::max(out.largest_class, j - i);
    i = j;
  }
  return out;
}

double symmetry_residual(int k, NormKind kind) {
  require_width(k, kMaxCensusWidth, "symmetry_residual");
  const FEvaluator f(k, kind);
  double worst = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    const Word w(v, k);
    worst = std::max(worst, std::abs(f(conjugate(w)) - f(w)));
  }
  return worst;
}

double multiplicativity_residual(int k, NormKind kind) {
  require_width(k, kMaxPairSweepWidth, "multiplicativity_residual");
  const FEvaluator f(k, kind);
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<double> single(count);
  for (std::uint64_t v = 0; v < count; ++v) single[v] = f(Word(v, k));
  double worst = 0.0;
  for (std::uint64_t a = 0; a < count; ++a)
    for (std::uint64_t b = 0; b < count; ++b) {
      const double joined = f(concat_str(Word(a, k), Word(b, k)));
      worst = std::max(worst, std::abs(joined - single[a] - single[b]));
    }
  return worst;
}

double cstar_residual(int k, NormKind kind, const NormParams& params, WordFilter filter) {
  require_width(k, kMaxCensusWidth, "cstar_residual");
  const FEvaluator f(k, kind);
  double worst = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    const Word w(v, k);
    if (filter == WordFilter::Balanced && 2 * digit_sum(w) != k) continue;
    const double product = norm_from_f(f(concat_lo(w, conjugate(w))), kind, params);
    const double single = norm_from_f(f(w), kind, params);
    worst = std::max(worst, std::abs(product - single * single));
  }
  return worst;
}

}  // namespace wordalg
