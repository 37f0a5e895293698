#include "wordalg/dyck.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wordalg/block_poly.hpp"
#include "wordalg/parallel.hpp"

namespace wordalg {

namespace {

bool opens(bool bit, DyckConvention conv) { return bit == (conv == DyckConvention::OneOpens); }

}  // namespace

bool is_dyck(const Word& w, DyckConvention conv, DyckKind kind) {
  const int n = w.width();
  if (n == 0) return kind == DyckKind::Any;
  if (n % 2 != 0) return false;
  int depth = 0;
  for (int i = 0; i < n; ++i) {
    depth += opens(w.bit(i), conv) ? 1 : -1;
    if (depth < 0) return false;
    if (kind == DyckKind::Prime && depth == 0 && i + 1 < n) return false;
  }
  return depth == 0;
}

bool is_dyck_blocks(const Word& w, DyckConvention conv, DyckKind kind) {
  if (w.width() == 0) return kind == DyckKind::Any;
  const BlockPoly p = block_encode(w);
  const int sign = conv == DyckConvention::OneOpens ? 1 : -1;
  const auto& c = p.coeffs();
  if (c.size() % 2 != 0) return false;
  int partial = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    partial += sign * c[j];
    if (partial < 0 || (kind == DyckKind::Prime && partial == 0)) return false;
  }
  return partial + sign * c.back() == 0;
}

std::vector<Word> enumerate_dyck(int width, DyckConvention conv, DyckKind kind, unsigned jobs) {
  if (width < 0 || width % 2 != 0 || width > kMaxDyckEnumWidth)
    throw std::invalid_argument("enumerate_dyck: width must be even and <= 28");
  if (width == 0) return kind == DyckKind::Any ? std::vector<Word>{Word()} : std::vector<Word>{};
  const std::uint64_t count = std::uint64_t{1} << width;
  const unsigned workers = std::max(1U, jobs);
  std::vector<std::vector<Word>> parts(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  parallel_for_ranges(0, count, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    auto& part = parts[lo / chunk];
    for (std::uint64_t v = lo; v < hi; ++v)
      if (is_dyck(Word(v, width), conv, kind)) part.emplace_back(v, width);
  });
  std::vector<Word> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t catalan(int n) {
  if (n < 0 || n > 33) throw std::invalid_argument("catalan: n out of range");
  // C_{i+1} = C_i * 2(2i+1) / (i+2); the division is exact at every step.
  u128 c = 1;
  for (int i = 0; i < n; ++i) c = c * (2 * (2 * i + 1)) / (i + 2);
  return static_cast<std::uint64_t>(c);
}

std::uint64_t catalan_product_form(int n) {
  // (n+2)...(2n) stays below 2^128 up to n = 25.
  if (n < 0 || n > 25) throw std::invalid_argument("catalan_product_form: n out of range");
  u128 num = 1;
  u128 den = 1;
  for (int j = n + 2; j <= 2 * n; ++j) num *= static_cast<unsigned>(j);
  for (int j = 2; j <= n; ++j) den *= static_cast<unsigned>(j);
  return static_cast<std::uint64_t>(num / den);
}

ClosureReport conjugation_closure_check(int k) {
  if (k < 2 || k % 2 != 0 || k > 16)
    throw std::invalid_argument("conjugation_closure_check: k must be even, 2..16");
  ClosureReport r;
  r.width = k;
  const auto dyck = enumerate_dyck(k);
  r.dyck_count = dyck.size();
  std::set<Word> conj_image;
  std::set<Word> comp_image;
  for (const Word& v : dyck) {
    const Word vs = conjugate(v);
    if (!is_dyck(concat_str(v, vs))) r.concat_with_conjugate = false;
    conj_image.insert(vs);
    comp_image.insert(complement(v));
  }
  r.conjugate_maps_onto = std::equal(conj_image.begin(), conj_image.end(), dyck.begin(), dyck.end());
  const auto zero_opens = enumerate_dyck(k, DyckConvention::ZeroOpens);
  const bool same = std::equal(comp_image.begin(), comp_image.end(), zero_opens.begin(), zero_opens.end());
  bool disjoint = true;
  for (const Word& z : zero_opens)
    if (std::binary_search(dyck.begin(), dyck.end(), z)) disjoint = false;
  r.complement_is_zero_opens = same && disjoint;
  return r;
}

}  // namespace wordalg
