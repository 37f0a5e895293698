#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wordalg/word.hpp"

namespace wordalg::tl {

/// A Temperley-Lieb basis diagram on n strands: a noncrossing perfect
/// matching of 2n boundary points.
///
/// Boundary points are numbered in circular order: top points left to right
/// are 0..n-1, bottom points right to left are n..2n-1. Bottom position j
/// (counted from the left) is therefore point 2n-1-j.
class TLDiagram {
 public:
  /// Validates a fixed-point-free, noncrossing involution on 2n points.
  TLDiagram(int n, std::vector<int> partner);

  static TLDiagram identity(int n);

  int n() const { return n_; }
  int partner(int point) const { return partner_.at(static_cast<std::size_t>(point)); }
  const std::vector<int>& pairing() const { return partner_; }

  static int top(int pos) { return pos; }
  int bottom(int pos) const { return 2 * n_ - 1 - pos; }

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

 private:
  int n_;
  std::vector<int> partner_;
};

/// A diagram times delta^delta_exp; the loop value delta stays formal.
struct ScaledDiagram {
  TLDiagram diagram;
  int delta_exp = 0;

  friend bool operator==(const ScaledDiagram&, const ScaledDiagram&) = default;
};

/// Top and bottom halves of a 2n-wide Dyck code, as string halves:
/// up = first n symbols, down = last n symbols.
struct SplitWord {
  Word up;
  Word down;

  static SplitWord split(const Word& code);
  Word join() const { return concat_str(up, down); }
};

/// Arithmetic extractors: mod(v, 2^k) and floor(v / 2^k) for a 2k-wide word.
/// With MSB-first strings the low half is the *second* string half.
Word low_half(const Word& w);
Word high_half(const Word& w);

/// Bracket-matches the 2n symbols of a OneOpens Dyck word along the circular order.
TLDiagram from_dyck(const Word& w);
Word to_dyck(const TLDiagram& d);

/// e_i for 1 <= i <= n-1: cup on top positions (i-1, i), cap on the same
/// bottom positions, every other strand vertical.
TLDiagram generator(int i, int n);

/// Top-bottom mirror image.
TLDiagram flip(const TLDiagram& d);

/// Stacks a above b (a's bottom glued to b's top) and traces every strand.
/// Closed loops formed at the interface add to delta_exp.
ScaledDiagram compose(const TLDiagram& a, const TLDiagram& b);
ScaledDiagram compose(const ScaledDiagram& a, const ScaledDiagram& b);

/// Quaternary superposition of the interface: digit i is
/// 2 * bit(conjugate(v_d), i) + bit(mu_u, i).
std::vector<std::uint8_t> interface_code(const Word& v_down, const Word& mu_up);

/// Connectivity of the middle interface, read from the quaternary code alone.
///
/// Through strands of the upper factor are numbered left to right by the
/// unmatched upper digits; likewise for the lower factor.
struct InterfaceResolution {
  std::vector<std::pair<int, int>> upper_pairs;  // upper through strands joined to each other
  std::vector<std::pair<int, int>> lower_pairs;  // lower through strands joined to each other
  int loops = 0;

  bool fast() const { return upper_pairs.empty() && lower_pairs.empty(); }
};

InterfaceResolution resolve_interface(const std::vector<std::uint8_t>& digits);

/// True iff the product code is the literal join v_u ++ mu_d. Decided from
/// (v_d, mu_u) only.
bool classify_g(const SplitWord& v, const SplitWord& mu);

struct FastProduct {
  Word word;
  int delta_exp = 0;
  bool fast_path = true;
  Word mask_up;    // r_u: bits of v_u flipped 1 -> 0
  Word mask_down;  // r_d: bits of mu_d flipped 0 -> 1
};

/// Arithmetized product of two Dyck codes of width 2n:
/// (v_u - r_u) ++ (mu_d + r_d), with the masks empty on the fast path.
FastProduct compose_fast(const Word& v, const Word& mu);

struct RelationReport {
  int n = 0;
  int checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// e_i^2 = delta e_i, e_i e_j = e_j e_i for |i-j| >= 2, e_i e_{i+-1} e_i = e_i.
RelationReport check_relations(int n);

/// Boolean matrix over the words of S_{2n} with leading bit 1 (LEX order).
struct BoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;

  bool at(std::size_t r, std::size_t c) const { return cells[r * cols + c] != 0; }
  /// Plain PBM: "P1\n<w> <h>\n" then rows of space-separated 0/1.
  std::string to_pbm() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
};

inline constexpr int kMaxTableStrands = 6;

/// Entry (v, mu) is 1 iff both words are Dyck and classify_g holds.
BoolMatrix product_table(int n, unsigned jobs = 1);
/// Row/column labels of product_table(n).
std::vector<Word> product_table_index(int n);

struct AlternationStep {
  int first = 0;      // generator index i
  int second = 0;     // generator index mod(i + j)
  int steps = 0;      // factors in the product so far
  bool invariant = false;              // fast branch: (v_u, mu_d) carried through unchanged
  bool single_bit_transition = false;  // non-fast step, each mask flips at most one bit
  Word code;
  int delta_exp = 0;
};

struct AlternationReport {
  int n = 0;
  std::vector<AlternationStep> steps;
  int even_checked = 0, even_invariant = 0;
  int odd_checked = 0, odd_single_bit = 0;
  bool null_transition_square = true;  // T_i T_i keeps (v_u, mu_d) for every i
};

/// Empirical check of the alternating products T_i T_{mod(i+j)} T_i ...
AlternationReport alternation_report(int n, int max_steps = 6);

}  // namespace wordalg::tl
