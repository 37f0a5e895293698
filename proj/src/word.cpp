#include "wordalg/word.hpp"

#include <bit>
#include <string>

namespace wordalg {

Word::Word(std::uint64_t value, int width) : width_(width), value_(value) {
  if (width < 0 || width > kMaxWordWidth)
    throw std::invalid_argument("Word: width " + std::to_string(width) + " out of range");
  if ((value & ~low_mask(width)) != 0)
    throw std::invalid_argument("Word: value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
}

Word Word::from_string(std::string_view bits) {
  if (bits.size() > kMaxWordWidth) throw std::invalid_argument("Word: bit string too long");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("Word: expected only '0' and '1'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Word(v, static_cast<int>(bits.size()));
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Word complement(const Word& w) { return Word(w.value() ^ low_mask(w.width()), w.width()); }

Word reflect(const Word& w) {
  if (w.width() == 0) return w;
  return Word(reverse_bits64(w.value()) >> (64 - w.width()), w.width());
}

Word conjugate(const Word& w) { return reflect(complement(w)); }

bool is_palindrome(const Word& w) { return reflect(w) == w; }

std::uint64_t count_palindromes(int k) {
  if (k < 1 || k > 63) throw std::invalid_argument("count_palindromes: k out of range");
  return std::uint64_t{1} << ((k + 1) / 2);
}

Word concat_lo(const Word& mu, const Word& nu) {
  if (mu.width() != nu.width()) throw std::invalid_argument("concat_lo: width mismatch");
  const int k = mu.width();
  if (2 * k > kMaxWordWidth) throw std::invalid_argument("concat_lo: result exceeds 64 bits");
  return Word(mu.value() | (k == 0 ? 0 : nu.value() << k), 2 * k);
}

Word concat_str(const Word& mu, const Word& nu) {
  const int width = mu.width() + nu.width();
  if (width > kMaxWordWidth) throw std::invalid_argument("concat_str: result exceeds 64 bits");
  const std::uint64_t high = nu.width() >= 64 ? 0 : mu.value() << nu.width();
  return Word(high | nu.value(), width);
}

WordSequence::WordSequence(std::vector<Word> items) {
  items_.reserve(items.size());
  for (const Word& w : items) push_back(w);
}

void WordSequence::push_back(const Word& w) {
  if (!items_.empty() && items_.front().width() != w.width())
    throw std::invalid_argument("WordSequence: all words must share one width");
  items_.push_back(w);
}

WordSequence reduce(const WordSequence& s) {
  // Free reduction with complement as the inverse; the stack pass yields the
  // unique normal form.
  std::vector<Word> stack;
  stack.reserve(s.size());
  for (const Word& w : s.items()) {
    if (!stack.empty() && stack.back() == complement(w))
      stack.pop_back();
    else
      stack.push_back(w);
  }
  return WordSequence(std::move(stack));
}

FormalSum& FormalSum::add(const Word& w, Complex z) {
  if (w.width() != width_) throw std::invalid_argument("FormalSum: width mismatch");
  auto [it, inserted] = terms_.try_emplace(w.value(), Complex{});
  it->second += z;
  if (it->second == Complex{}) terms_.erase(it);
  return *this;
}

FormalSum::Complex FormalSum::coefficient(const Word& w) const {
  if (w.width() != width_) return {};
  auto it = terms_.find(w.value());
  return it == terms_.end() ? Complex{} : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.width_ != width_ && !other.terms_.empty())
    throw std::invalid_argument("FormalSum: width mismatch");
  for (const auto& [v, z] : other.terms_) add(Word(v, width_), z);
  return *this;
}

FormalSum operator*(FormalSum::Complex z, const FormalSum& s) {
  FormalSum out(s.width());
  for (const auto& [v, c] : s.terms()) out.add(Word(v, s.width()), z * c);
  return out;
}

FormalSum sum_conjugate(const FormalSum& s) {
  FormalSum out(s.width());
  for (const auto& [v, z] : s.terms()) out.add(conjugate(Word(v, s.width())), std::conj(z));
  return out;
}

FormalSum symmetric_form(FormalSum::Complex z, const Word& mu, const Word& nu) {
  if (mu.width() != nu.width()) throw std::invalid_argument("symmetric_form: width mismatch");
  FormalSum out(2 * mu.width());
  out.add(concat_lo(mu, conjugate(nu)), z);
  out.add(concat_lo(nu, conjugate(mu)), std::conj(z));
  return out;
}

Word symmetric_product(const Word& mu, const Word& nu) {
  if (mu.width() != nu.width()) throw std::invalid_argument("symmetric_product: width mismatch");
  return concat_lo(concat_lo(nu, conjugate(mu)), concat_lo(mu, conjugate(nu)));
}

std::vector<Word> dictionary(int k) {
  if (k < 1 || k > kMaxExhaustiveWidth) throw std::invalid_argument("dictionary: k out of range");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) out.emplace_back(v, k);
  return out;
}

EndomorphismTable::EndomorphismTable(int width_, std::vector<std::uint64_t> table_)
    : width(width_), table(std::move(table_)) {
  if (width < 1 || width > kMaxExhaustiveWidth)
    throw std::invalid_argument("EndomorphismTable: width out of range");
  if (table.size() != (std::size_t{1} << width))
    throw std::invalid_argument("EndomorphismTable: table must have 2^width entries");
  for (std::uint64_t entry : table)
    if (entry > low_mask(width)) throw std::out_of_range("EndomorphismTable: entry out of range");
}

EndomorphismTable EndomorphismTable::identity(int width) {
  std::vector<std::uint64_t> t(std::size_t{1} << width);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return EndomorphismTable(width, std::move(t));
}

Coding Coding::identity() {
  return Coding{[](std::uint64_t n, int k) { return Word(n, k); },
                [](const Word& w) { return w.value(); }};
}

EndomorphismTable global_map(const std::function<Word(const Word&)>& word_map, int width,
                             const Coding& coding) {
  if (width < 1 || width > kMaxExhaustiveWidth)
    throw std::invalid_argument("global_map: width out of range");
  std::vector<std::uint64_t> f(std::size_t{1} << width);
  for (std::uint64_t n = 0; n < f.size(); ++n) {
    const Word image = word_map(coding.decode(n, width));
    f[n] = coding.encode(image);
  }
  return EndomorphismTable(width, std::move(f));
}

EndomorphismTable global_map(const EndomorphismTable& m) {
  const int k = m.width;
  return global_map([&m, k](const Word& w) { return Word(m(w.value()), k); }, k);
}

namespace detail {

int bits_per_digit(unsigned radix) {
  return std::has_single_bit(radix) ? std::countr_zero(radix) : 0;
}

std::vector<unsigned> radix_digits(const Word& w, unsigned radix) {
  std::vector<unsigned> digits;
  if (const int bits = bits_per_digit(radix); bits > 0) {
    if (w.width() % bits != 0)
      throw std::invalid_argument("flut_parse: width must be a multiple of the digit size");
    for (int pos = w.width() - bits; pos >= 0; pos -= bits)
      digits.push_back(static_cast<unsigned>((w.value() >> pos) & low_mask(bits)));
    return digits;
  }
  // Smallest n with radix^n >= 2^width, computed without overflow.
  std::size_t count = 0;
  for (long double span = 1; span < static_cast<long double>(low_mask(w.width())) + 1; span *= radix)
    ++count;
  std::uint64_t v = w.value();
  digits.assign(count, 0);
  for (std::size_t i = count; i-- > 0;) {
    digits[i] = static_cast<unsigned>(v % radix);
    v /= radix;
  }
  return digits;
}

}  // namespace detail

}  // namespace wordalg
