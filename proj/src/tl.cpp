#include "wordalg/tl.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wordalg/dyck.hpp"
#include "wordalg/parallel.hpp"

namespace wordalg::tl {

namespace {

constexpr int kMaxStrands = 32;

void require_strands(int n, int max, const char* what) {
  if (n < 1 || n > max) throw std::invalid_argument(std::string(what) + ": n out of range");
}

// Splits a bracket row into matched arcs and unmatched opens. Returns -1 for
// unmatched (through) positions in `arc`; `through` lists them left to right.
struct BracketRow {
  std::vector<int> arc;
  std::vector<int> through;
};

template <class IsOpen>
BracketRow match_row(int n, IsOpen is_open) {
  BracketRow row{std::vector<int>(static_cast<std::size_t>(n), -1), {}};
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (is_open(i)) {
      stack.push_back(i);
    } else {
      if (stack.empty()) throw std::invalid_argument("interface row has an unmatched close");
      row.arc[static_cast<std::size_t>(i)] = stack.back();
      row.arc[static_cast<std::size_t>(stack.back())] = i;
      stack.pop_back();
    }
  }
  row.through = std::move(stack);
  return row;
}

Word clear_bits(const Word& w, std::uint64_t mask) { return Word(w.value() & ~mask, w.width()); }
Word set_bits(const Word& w, std::uint64_t mask) { return Word(w.value() | mask, w.width()); }

std::uint64_t string_bit(int index, int width) { return std::uint64_t{1} << (width - 1 - index); }

}  // namespace

TLDiagram::TLDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
  require_strands(n, kMaxStrands, "TLDiagram");
  const int points = 2 * n;
  if (static_cast<int>(partner_.size()) != points) throw std::invalid_argument("TLDiagram: need 2n entries");
  std::vector<int> stack;
  for (int p = 0; p < points; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= points || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw std::invalid_argument("TLDiagram: pairing is not a fixed-point-free involution");
    if (q > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) throw std::invalid_argument("TLDiagram: arcs cross");
      stack.pop_back();
    }
  }
}

TLDiagram TLDiagram::identity(int n) {
  require_strands(n, kMaxStrands, "TLDiagram::identity");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    partner[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
    partner[static_cast<std::size_t>(2 * n - 1 - i)] = i;
  }
  return TLDiagram(n, std::move(partner));
}

SplitWord SplitWord::split(const Word& code) {
  if (code.width() % 2 != 0) throw std::invalid_argument("SplitWord: width must be even");
  const int n = code.width() / 2;
  return SplitWord{Word(code.value() >> n, n), Word(code.value() & low_mask(n), n)};
}

Word low_half(const Word& w) {
  if (w.width() % 2 != 0) throw std::invalid_argument("low_half: width must be even");
  const int k = w.width() / 2;
  return Word(w.value() & low_mask(k), k);
}

Word high_half(const Word& w) {
  if (w.width() % 2 != 0) throw std::invalid_argument("high_half: width must be even");
  const int k = w.width() / 2;
  return Word(w.value() >> k, k);
}

TLDiagram from_dyck(const Word& w) {
  if (w.width() == 0 || !is_dyck(w)) throw std::invalid_argument("from_dyck: not a nonempty Dyck word");
  const int points = w.width();
  std::vector<int> partner(static_cast<std::size_t>(points));
  std::vector<int> stack;
  for (int p = 0; p < points; ++p) {
    if (w.bit(p)) {
      stack.push_back(p);
    } else {
      partner[static_cast<std::size_t>(p)] = stack.back();
      partner[static_cast<std::size_t>(stack.back())] = p;
      stack.pop_back();
    }
  }
  return TLDiagram(points / 2, std::move(partner));
}

Word to_dyck(const TLDiagram& d) {
  std::uint64_t v = 0;
  for (int p = 0; p < 2 * d.n(); ++p) v = (v << 1) | static_cast<std::uint64_t>(d.partner(p) > p);
  return Word(v, 2 * d.n());
}

TLDiagram generator(int i, int n) {
  require_strands(n, kMaxStrands, "generator");
  if (i < 1 || i > n - 1) throw std::out_of_range("generator: index must satisfy 1 <= i <= n-1");
  std::vector<int> partner = TLDiagram::identity(n).pairing();
  auto link = [&partner](int p, int q) {
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  };
  link(i - 1, i);
  link(2 * n - 1 - (i - 1), 2 * n - 1 - i);
  return TLDiagram(n, std::move(partner));
}

TLDiagram flip(const TLDiagram& d) {
  const int last = 2 * d.n() - 1;
  std::vector<int> partner(static_cast<std::size_t>(last + 1));
  for (int p = 0; p <= last; ++p) partner[static_cast<std::size_t>(last - p)] = last - d.partner(p);
  return TLDiagram(d.n(), std::move(partner));
}

ScaledDiagram compose(const TLDiagram& a, const TLDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: strand count mismatch");
  const int n = a.n();
  const int last = 2 * n - 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);

  // Walks from middle position m into the upper factor and keeps bouncing
  // until the strand leaves through an outer boundary point.
  auto exit_from_middle = [&](int m, bool going_up) {
    for (;;) {
      seen[static_cast<std::size_t>(m)] = true;
      if (going_up) {
        const int q = a.partner(a.bottom(m));
        if (q < n) return q;  // a's top = result top
        m = last - q;
      } else {
        const int r = b.partner(m);
        if (r >= n) return r;  // b's bottom = result bottom, same point number
        m = r;
      }
      going_up = !going_up;
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    if (partner[static_cast<std::size_t>(p)] >= 0) continue;
    int q;
    if (p < n) {
      q = a.partner(p);
      if (q >= n) q = exit_from_middle(last - q, false);
    } else {
      q = b.partner(p);
      if (q < n) q = exit_from_middle(q, true);
    }
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      cur = last - a.partner(a.bottom(cur));
      seen[static_cast<std::size_t>(cur)] = true;
      cur = b.partner(cur);
    } while (cur != m);
  }
  return ScaledDiagram{TLDiagram(n, std::move(partner)), loops};
}

ScaledDiagram compose(const ScaledDiagram& a, const ScaledDiagram& b) {
  ScaledDiagram out = compose(a.diagram, b.diagram);
  out.delta_exp += a.delta_exp + b.delta_exp;
  return out;
}

std::vector<std::uint8_t> interface_code(const Word& v_down, const Word& mu_up) {
  if (v_down.width() != mu_up.width()) throw std::invalid_argument("interface_code: width mismatch");
  const Word upper = conjugate(v_down);
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(upper.width()));
  for (int i = 0; i < upper.width(); ++i)
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(2 * upper.bit(i) + mu_up.bit(i));
  return digits;
}

InterfaceResolution resolve_interface(const std::vector<std::uint8_t>& digits) {
  const int n = static_cast<int>(digits.size());
  const BracketRow upper = match_row(n, [&](int i) { return (digits[static_cast<std::size_t>(i)] & 2) != 0; });
  const BracketRow lower = match_row(n, [&](int i) { return (digits[static_cast<std::size_t>(i)] & 1) != 0; });
  if (upper.through.size() > static_cast<std::size_t>(n) || lower.through.size() > static_cast<std::size_t>(n))
    throw std::logic_error("resolve_interface: inconsistent rows");

  std::vector<int> upper_index(static_cast<std::size_t>(n), -1);
  std::vector<int> lower_index(static_cast<std::size_t>(n), -1);
  for (std::size_t t = 0; t < upper.through.size(); ++t) upper_index[static_cast<std::size_t>(upper.through[t])] = static_cast<int>(t);
  for (std::size_t t = 0; t < lower.through.size(); ++t) lower_index[static_cast<std::size_t>(lower.through[t])] = static_cast<int>(t);

  InterfaceResolution res;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  // Follows arcs alternately in the lower (going_down) and upper rows from
  // position p until a through position ends the path.
  auto walk = [&](int p, bool going_down) {
    for (;;) {
      seen[static_cast<std::size_t>(p)] = true;
      const BracketRow& row = going_down ? lower : upper;
      const int next = row.arc[static_cast<std::size_t>(p)];
      if (next < 0) return std::pair{p, going_down};
      p = next;
      seen[static_cast<std::size_t>(p)] = true;
      going_down = !going_down;
    }
  };

  for (int p : upper.through) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    const auto [end, in_lower] = walk(p, true);
    if (!in_lower)
      res.upper_pairs.emplace_back(upper_index[static_cast<std::size_t>(p)], upper_index[static_cast<std::size_t>(end)]);
  }
  for (int p : lower.through) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    const auto [end, in_lower] = walk(p, false);
    if (in_lower)
      res.lower_pairs.emplace_back(lower_index[static_cast<std::size_t>(p)], lower_index[static_cast<std::size_t>(end)]);
  }
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    ++res.loops;
    int cur = p;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      cur = upper.arc[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(cur)] = true;
      cur = lower.arc[static_cast<std::size_t>(cur)];
    } while (cur != p);
  }
  return res;
}

bool classify_g(const SplitWord& v, const SplitWord& mu) {
  return resolve_interface(interface_code(v.down, mu.up)).fast();
}

FastProduct compose_fast(const Word& v, const Word& mu) {
  if (v.width() != mu.width() || v.width() == 0) throw std::invalid_argument("compose_fast: width mismatch");
  if (!is_dyck(v) || !is_dyck(mu)) throw std::invalid_argument("compose_fast: inputs must be Dyck words");
  const int n = v.width() / 2;
  const SplitWord sv = SplitWord::split(v);
  const SplitWord smu = SplitWord::split(mu);
  const InterfaceResolution res = resolve_interface(interface_code(sv.down, smu.up));

  FastProduct out;
  out.delta_exp = res.loops;
  out.fast_path = res.fast();
  std::uint64_t r_u = 0;
  std::uint64_t r_d = 0;
  if (!res.upper_pairs.empty()) {
    // Through strands of v leave the top as the unmatched opens of v_u.
    const BracketRow top = match_row(n, [&](int i) { return sv.up.bit(i); });
    for (auto [s, t] : res.upper_pairs) {
      const int later = std::max(top.through[static_cast<std::size_t>(s)], top.through[static_cast<std::size_t>(t)]);
      r_u |= string_bit(later, n);
    }
  }
  if (!res.lower_pairs.empty()) {
    // Through strands of mu end at the unmatched closes of mu_d; the string
    // runs right to left along the bottom edge.
    std::vector<int> ends;
    std::vector<int> depth_stack;
    for (int i = 0; i < n; ++i) {
      if (smu.down.bit(i))
        depth_stack.push_back(i);
      else if (!depth_stack.empty())
        depth_stack.pop_back();
      else
        ends.push_back(i);
    }
    std::reverse(ends.begin(), ends.end());
    for (auto [s, t] : res.lower_pairs) {
      const int earlier = std::min(ends[static_cast<std::size_t>(s)], ends[static_cast<std::size_t>(t)]);
      r_d |= string_bit(earlier, n);
    }
  }
  out.mask_up = Word(r_u, n);
  out.mask_down = Word(r_d, n);
  out.word = concat_str(clear_bits(sv.up, r_u), set_bits(smu.down, r_d));
  return out;
}

RelationReport check_relations(int n) {
  require_strands(n, 8, "check_relations");
  RelationReport report;
  report.n = n;
  auto expect = [&report](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.violations.push_back(what);
  };
  for (int i = 1; i < n; ++i) {
    const TLDiagram ei = generator(i, n);
    const auto name = [](int k) { return "e" + std::to_string(k); };
    expect(compose(ei, ei) == ScaledDiagram{ei, 1}, name(i) + "^2 != delta " + name(i));
    for (int j = 1; j < n; ++j) {
      const TLDiagram ej = generator(j, n);
      if (std::abs(i - j) >= 2) {
        const ScaledDiagram ij = compose(ei, ej);
        expect(ij == compose(ej, ei) && ij.delta_exp == 0, name(i) + name(j) + " != " + name(j) + name(i));
      } else if (std::abs(i - j) == 1) {
        expect(compose(compose(ei, ej).diagram, ei) == ScaledDiagram{ei, 0},
               name(i) + name(j) + name(i) + " != " + name(i));
      }
    }
  }
  return report;
}

std::string BoolMatrix::to_pbm() const {
  std::string out = "P1\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n";
  out.reserve(out.size() + rows * cols * 2);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0) out += ' ';
      out += at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<Word> product_table_index(int n) {
  require_strands(n, kMaxTableStrands, "product_table_index");
  const int width = 2 * n;
  std::vector<Word> index;
  for (std::uint64_t v = std::uint64_t{1} << (width - 1); v < (std::uint64_t{1} << width); ++v)
    index.emplace_back(v, width);
  return index;
}

BoolMatrix product_table(int n, unsigned jobs) {
  const std::vector<Word> index = product_table_index(n);
  const std::size_t size = index.size();
  std::vector<std::uint8_t> dyck(size);
  std::vector<SplitWord> halves;
  halves.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    dyck[i] = is_dyck(index[i]);
    halves.push_back(SplitWord::split(index[i]));
  }
  BoolMatrix m{size, size, std::vector<std::uint8_t>(size * size, 0)};
  parallel_for_ranges(0, size, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (!dyck[r]) continue;
      for (std::size_t c = 0; c < size; ++c)
        if (dyck[c] && classify_g(halves[r], halves[c])) m.cells[r * size + c] = 1;
    }
  });
  return m;
}

AlternationReport alternation_report(int n, int max_steps) {
  require_strands(n, 8, "alternation_report");
  if (max_steps < 2) throw std::invalid_argument("alternation_report: max_steps must be >= 2");
  AlternationReport report;
  report.n = n;
  for (int i = 1; i < n; ++i) {
    const Word gi = to_dyck(generator(i, n));
    for (int j = 0; j + 1 < n; ++j) {
      const int second = (i - 1 + j) % (n - 1) + 1;
      const Word gs = to_dyck(generator(second, n));
      Word code = gi;
      int delta = 0;
      for (int steps = 2; steps <= max_steps; ++steps) {
        const FastProduct fp = compose_fast(code, steps % 2 == 0 ? gs : gi);
        AlternationStep st;
        st.first = i;
        st.second = second;
        st.steps = steps;
        st.invariant = fp.fast_path;
        st.single_bit_transition = !fp.fast_path && std::popcount(fp.mask_up.value()) <= 1 &&
                                   std::popcount(fp.mask_down.value()) <= 1;
        delta += fp.delta_exp;
        st.delta_exp = delta;
        st.code = fp.word;
        code = fp.word;
        if (steps % 2 == 0) {
          ++report.even_checked;
          report.even_invariant += st.invariant;
        } else {
          ++report.odd_checked;
          report.odd_single_bit += st.single_bit_transition;
        }
        if (j == 0 && steps == 2 && !(fp.fast_path && fp.word == gi && fp.delta_exp == 1))
          report.null_transition_square = false;
        report.steps.push_back(st);
      }
    }
  }
  return report;
}

}  // namespace wordalg::tl
