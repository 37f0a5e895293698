#pragma once

#include <cstdint>
#include <vector>

#include "wordalg/word.hpp"

namespace wordalg {

/// Which bit value plays the opening bracket.
enum class DyckConvention { OneOpens, ZeroOpens };

/// Any: prefix balance >= 0 on every proper prefix.
/// Prime: strictly positive on every proper prefix (irreducible, single arch).
enum class DyckKind { Any, Prime };

/// Bracket scan. The empty word is Dyck (but not prime).
bool is_dyck(const Word& w, DyckConvention conv = DyckConvention::OneOpens,
             DyckKind kind = DyckKind::Any);

/// Same decision taken from the block polynomial: proper partial sums of the
/// coefficients >= 0 (> 0 for Prime), total 0, even block dimension.
bool is_dyck_blocks(const Word& w, DyckConvention conv = DyckConvention::OneOpens,
                    DyckKind kind = DyckKind::Any);

inline constexpr int kMaxDyckEnumWidth = 28;

/// Dyck words of the given (even) width, sorted by value, found by scanning S_width.
std::vector<Word> enumerate_dyck(int width, DyckConvention conv = DyckConvention::OneOpens,
                                 DyckKind kind = DyckKind::Any, unsigned jobs = 1);

/// C(2n, n) / (n + 1), exact for n <= 33.
std::uint64_t catalan(int n);
/// (n+2)(n+3)...(2n) / n!, exact for n <= 25.
std::uint64_t catalan_product_form(int n);

struct ClosureReport {
  int width = 0;
  std::size_t dyck_count = 0;
  bool concat_with_conjugate = true;    // v ++ v* is Dyck for every Dyck v
  bool conjugate_maps_onto = true;      // v -> v* permutes the Dyck set
  bool complement_is_zero_opens = true; // complement image == ZeroOpens Dyck set, disjoint

  bool ok() const { return concat_with_conjugate && conjugate_maps_onto && complement_is_zero_opens; }
};

/// Exhaustive closure check for even k <= 16.
ClosureReport conjugation_closure_check(int k);

}  // namespace wordalg
