#include "wordalg/block_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "wordalg/parallel.hpp"

namespace wordalg {

BlockPoly::BlockPoly(std::vector<int> coeffs, int width) : coeffs_(std::move(coeffs)), width_(width) {
  if (coeffs_.empty()) throw std::invalid_argument("BlockPoly: empty coefficient list");
  long total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) throw std::invalid_argument("BlockPoly: zero coefficient");
    if (i > 0 && (coeffs_[i] > 0) == (coeffs_[i - 1] > 0))
      throw std::invalid_argument("BlockPoly: signs must alternate");
    total += std::abs(coeffs_[i]);
  }
  if (total != width_) throw std::invalid_argument("BlockPoly: sum of |c_i| must equal the width");
}

int BlockPoly::sum() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

std::string BlockPoly::to_string() const {
  std::string out;
  for (int c : coeffs_) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "-") + std::to_string(std::abs(c));
  }
  return out;
}

namespace {

template <class BitAt>
std::vector<int> run_lengths(int n, BitAt bit_at) {
  std::vector<int> coeffs;
  int i = 0;
  while (i < n) {
    const bool b = bit_at(i);
    int j = i;
    while (j < n && bit_at(j) == b) ++j;
    coeffs.push_back(b ? j - i : -(j - i));
    i = j;
  }
  return coeffs;
}

}  // namespace

BlockPoly block_encode(const Word& w) {
  if (w.width() < 1) throw std::invalid_argument("block_encode: width must be >= 1");
  return BlockPoly(run_lengths(w.width(), [&w](int i) { return w.bit(i); }), w.width());
}

Word block_decode(const BlockPoly& p) {
  if (p.width() > kMaxWordWidth) throw std::invalid_argument("block_decode: width exceeds 64 bits");
  std::uint64_t v = 0;
  for (int c : p.coeffs()) {
    const int len = std::abs(c);
    v = len >= 64 ? 0 : v << len;
    if (c > 0) v |= low_mask(len);
  }
  return Word(v, p.width());
}

BlockPoly block_encode_sequence(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("block_encode_sequence: empty input");
  const int n = static_cast<int>(bits.size());
  return BlockPoly(run_lengths(n, [bits](int i) { return bits[static_cast<std::size_t>(i)] != 0; }), n);
}

int block_dimension(const Word& w) {
  if (w.width() == 0) return 0;
  // Runs = 1 + number of adjacent positions whose bits differ.
  const std::uint64_t changes = (w.value() ^ (w.value() >> 1)) & low_mask(w.width() - 1);
  return 1 + std::popcount(changes);
}

std::vector<int> delta_sequence(int k, unsigned jobs) {
  if (k < 1 || k > kMaxDeltaWidth) throw std::invalid_argument("delta_sequence: k out of range");
  std::vector<int> out(std::size_t{1} << k);
  parallel_for_ranges(0, out.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t v = lo; v < hi; ++v) out[v] = block_dimension(Word(v, k));
  });
  return out;
}

std::vector<int> delta_sequence_recursive(int kmax) {
  if (kmax < 1 || kmax > kMaxDeltaWidth)
    throw std::invalid_argument("delta_sequence_recursive: kmax out of range");
  std::vector<int> x{1};
  for (int level = 1; level <= kmax; ++level) {
    const int d = level < kmax ? 1 : 0;
    const std::size_t half = x.size();
    x.reserve(2 * half);
    for (std::size_t i = half; i-- > 0;) x.push_back(x[i] + d);
  }
  return x;
}

BlockPoly conjugate_coeffs(const BlockPoly& p) {
  std::vector<int> c(p.coeffs().rbegin(), p.coeffs().rend());
  for (int& x : c) x = -x;
  return BlockPoly(std::move(c), p.width());
}

}  // namespace wordalg
