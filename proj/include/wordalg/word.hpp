#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordalg {

/// Largest width a single Word can hold.
inline constexpr int kMaxWordWidth = 64;
/// Largest width accepted by APIs that sweep all of S_k.
inline constexpr int kMaxExhaustiveWidth = 24;

/// All-ones mask of the given width (width 64 included).
constexpr std::uint64_t low_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Reverses the bit order of a full 64-bit value.
constexpr std::uint64_t reverse_bits64(std::uint64_t r) {
  r = ((r & 0x5555555555555555ULL) << 1) | ((r & 0xaaaaaaaaaaaaaaaaULL) >> 1);
  r = ((r & 0x3333333333333333ULL) << 2) | ((r & 0xccccccccccccccccULL) >> 2);
  r = ((r & 0x0f0f0f0f0f0f0f0fULL) << 4) | ((r & 0xf0f0f0f0f0f0f0f0ULL) >> 4);
  r = ((r & 0x00ff00ff00ff00ffULL) << 8) | ((r & 0xff00ff00ff00ff00ULL) >> 8);
  r = ((r & 0x0000ffff0000ffffULL) << 16) | ((r & 0xffff0000ffff0000ULL) >> 16);
  return (r << 32) | (r >> 32);
}

/// A fixed-width binary word: an integer value together with its bit count.
///
/// The string form is most-significant bit first and always carries exactly
/// `width` characters. Width 0 is the empty word.
class Word {
 public:
  Word() = default;
  Word(std::uint64_t value, int width);

  /// Parses a string of '0'/'1' characters; the width is the string length.
  static Word from_string(std::string_view bits);

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }

  /// Bit at string position i (0 = most significant).
  bool bit(int i) const { return (value_ >> (width_ - 1 - i)) & 1U; }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int width_ = 0;
  std::uint64_t value_ = 0;
};

Word complement(const Word& w);
Word reflect(const Word& w);
/// Reverse-complement: reflect(complement(w)) == complement(reflect(w)).
Word conjugate(const Word& w);

bool is_palindrome(const Word& w);
/// Number of palindromes in S_k, i.e. 2^ceil(k/2).
std::uint64_t count_palindromes(int k);

/// Arithmetic product mu + 2^k * nu. Both widths must equal k; the result
/// has width 2k and renders as str(nu) + str(mu).
Word concat_lo(const Word& mu, const Word& nu);
/// String concatenation: str(result) == str(mu) + str(nu). Widths may differ.
Word concat_str(const Word& mu, const Word& nu);

/// Sequence of equal-width words; the monoid where w followed by
/// complement(w) (in either order) cancels to the empty sequence.
class WordSequence {
 public:
  WordSequence() = default;
  explicit WordSequence(std::vector<Word> items);

  void push_back(const Word& w);
  const std::vector<Word>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const WordSequence&, const WordSequence&) = default;

 private:
  std::vector<Word> items_;
};

/// Removes adjacent (w, complement(w)) pairs until none remain.
WordSequence reduce(const WordSequence& s);

/// Finite complex-weighted combination of words of one width.
class FormalSum {
 public:
  using Complex = std::complex<double>;

  explicit FormalSum(int width = 0) : width_(width) {}

  int width() const { return width_; }
  /// Adds z to the coefficient of w; entries that reach zero are dropped.
  FormalSum& add(const Word& w, Complex z);
  Complex coefficient(const Word& w) const;
  const std::map<std::uint64_t, Complex>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator*(Complex z, const FormalSum& s);

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  int width_;
  std::map<std::uint64_t, Complex> terms_;
};

/// (sum z_i v_i)* = sum conj(z_i) conjugate(v_i).
FormalSum sum_conjugate(const FormalSum& s);

/// z (mu nu*) + conj(z) (nu mu*), products taken with concat_lo.
FormalSum symmetric_form(FormalSum::Complex z, const Word& mu, const Word& nu);
/// The 4k-wide product nu mu* mu nu* (concat_lo, low factor first), fixed by
/// conjugate(). Renders as str(nu*) + str(mu) + str(mu*) + str(nu).
Word symmetric_product(const Word& mu, const Word& nu);

/// All 2^k words of width k in LEX (= numeric) order. Requires 1 <= k <= 24.
std::vector<Word> dictionary(int k);

/// A total map S_k -> S_k stored as a lookup table.
struct EndomorphismTable {
  int width = 0;
  std::vector<std::uint64_t> table;

  EndomorphismTable() = default;
  EndomorphismTable(int width, std::vector<std::uint64_t> table);

  static EndomorphismTable identity(int width);
  std::uint64_t operator()(std::uint64_t n) const { return table.at(n); }
  friend bool operator==(const EndomorphismTable&, const EndomorphismTable&) = default;
};

/// Decoder/encoder pair between integers and words. Must satisfy
/// encode(decode(n)) == n and decode(encode(w)) == w.
struct Coding {
  std::function<Word(std::uint64_t, int)> decode;
  std::function<std::uint64_t(const Word&)> encode;

  static Coding identity();
};

/// f = e . M . d over all of S_k.
EndomorphismTable global_map(const std::function<Word(const Word&)>& word_map, int width,
                             const Coding& coding = Coding::identity());
/// Lifts the table to a word map through the identity coding and transports it back.
EndomorphismTable global_map(const EndomorphismTable& m);

namespace detail {
int bits_per_digit(unsigned radix);
std::vector<unsigned> radix_digits(const Word& w, unsigned radix);
}  // namespace detail

/// Functional lookup table parsing: reads the base-`radix` digits of w, most
/// significant first, and left-folds table[digit] over the seed.
///
/// For power-of-two radices the width must be a multiple of log2(radix); for
/// other radices the digit count is the smallest n with radix^n >= 2^width.
template <class State>
State flut_parse(const Word& w, unsigned radix, std::span<const std::function<State(State)>> table,
                 State seed) {
  if (radix < 2) throw std::invalid_argument("flut_parse: radix must be >= 2");
  if (table.size() != radix) throw std::invalid_argument("flut_parse: table size must equal radix");
  for (unsigned digit : detail::radix_digits(w, radix)) seed = table[digit](std::move(seed));
  return seed;
}

}  // namespace wordalg
