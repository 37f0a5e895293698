#include "wordalg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordalg/block_poly.hpp"
#include "wordalg/dyck.hpp"
#include "wordalg/norms.hpp"
#include "wordalg/signal.hpp"
#include "wordalg/tl.hpp"

namespace wordalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string format;  // empty: the command's own default rendering
  std::string out_path;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct Result {
  int code = kExitOk;
  std::string text;
};

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Csv {
 public:
  explicit Csv(std::initializer_list<std::string_view> header) { row(header); }
  template <class... T>
  void add(const T&... fields) {
    std::vector<std::string> cells{cell(fields)...};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ += ',';
      out_ += csv_field(cells[i]);
    }
    out_ += '\n';
  }
  std::string str() const { return out_; }

 private:
  void row(std::initializer_list<std::string_view> cells) {
    bool first = true;
    for (auto c : cells) {
      if (!first) out_ += ',';
      out_ += csv_field(c);
      first = false;
    }
    out_ += '\n';
  }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(bool b) { return b ? "true" : "false"; }
  static std::string cell(double x) { return fmt(x); }
  template <class I>
    requires std::is_integral_v<I>
  static std::string cell(I x) { return std::to_string(x); }
  std::string out_;
};

OutputFormat resolve_format(const Globals& g, OutputFormat fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "csv") return OutputFormat::Csv;
  if (g.format == "json") return OutputFormat::Json;
  if (g.format == "pbm") return OutputFormat::Pbm;
  throw std::invalid_argument("unknown format: " + g.format);
}

void require_not_pbm(const Globals& g) {
  if (g.format == "pbm") throw std::invalid_argument("pbm output is only available for boolean matrices");
}

json word_json(const Word& w) { return json{{"value", w.value()}, {"string", w.str()}}; }

int parse_width(const std::string& token, const char* what) {
  int k = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), k);
  if (ec != std::errc{} || ptr != token.data() + token.size() || k < 0)
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got '" + token + "'");
  return k;
}

// ---- word hierarchy --------------------------------------------------------

Result cmd_dict(const Globals& g, int k) {
  require_not_pbm(g);
  const auto words = dictionary(k);
  if (resolve_format(g, OutputFormat::Csv) == OutputFormat::Json) {
    json arr = json::array();
    for (const Word& w : words)
      arr.push_back({{"value", w.value()}, {"string", w.str()}, {"conjugate", conjugate(w).str()},
                     {"is_palindrome", is_palindrome(w)}});
    return {kExitOk, arr.dump() + "\n"};
  }
  Csv csv{"value", "string", "conjugate", "is_palindrome"};
  for (const Word& w : words) csv.add(w.value(), w.str(), conjugate(w).str(), is_palindrome(w));
  return {kExitOk, csv.str()};
}

Result cmd_conj(const Globals& g, int k, const std::string& token) {
  require_not_pbm(g);
  const Word w = parse_word(token, k);
  const std::pair<const char*, Word> rows[] = {
      {"word", w}, {"complement", complement(w)}, {"reflect", reflect(w)}, {"conjugate", conjugate(w)}};
  if (g.format == "json") {
    json j;
    for (const auto& [name, x] : rows) j[name] = word_json(x);
    j["is_palindrome"] = is_palindrome(w);
    j["digit_sum"] = digit_sum(w);
    return {kExitOk, j.dump() + "\n"};
  }
  if (g.format == "csv") {
    Csv csv{"op", "value", "string"};
    for (const auto& [name, x] : rows) csv.add(name, x.value(), x.str());
    return {kExitOk, csv.str()};
  }
  std::ostringstream os;
  for (const auto& [name, x] : rows) os << name << ' ' << x.str() << " (" << x.value() << ")\n";
  os << "is_palindrome " << (is_palindrome(w) ? "true" : "false") << "\n";
  return {kExitOk, os.str()};
}

Result cmd_norm(const Globals& g, int k, const std::optional<std::string>& token, NormKind kind, double gval) {
  require_not_pbm(g);
  const NormParams params(gval);
  std::vector<Word> words;
  if (token) {
    words.push_back(parse_word(*token, k));
  } else {
    words = dictionary(k);
  }
  const std::optional<TransformKernel> kernel =
      kind == NormKind::DigitSum || k == 0 ? std::nullopt : std::optional<TransformKernel>(std::in_place, k, kind);
  auto f_of = [&](const Word& w) { return kernel ? kernel->coeff_sum(w) : f_value(w, kind); };
  if (resolve_format(g, OutputFormat::Csv) == OutputFormat::Json) {
    json arr = json::array();
    for (const Word& w : words) {
      const double f = f_of(w);
      arr.push_back({{"value", w.value()}, {"string", w.str()}, {"f", f}, {"norm", norm_from_f(f, kind, params)}});
    }
    return {kExitOk, arr.dump() + "\n"};
  }
  Csv csv{"value", "f", "norm"};
  for (const Word& w : words) {
    const double f = f_of(w);
    csv.add(w.value(), f, norm_from_f(f, kind, params));
  }
  return {kExitOk, csv.str()};
}

Result cmd_census(const Globals& g, int k, NormKind kind, double gval) {
  require_not_pbm(g);
  const NormParams params(gval);
  const CensusResult census = degeneracy_census(k, kind, g.jobs);
  if (resolve_format(g, OutputFormat::Json) == OutputFormat::Csv) {
    Csv csv{"value", "f", "norm"};
    for (std::size_t v = 0; v < census.f_values.size(); ++v)
      csv.add(static_cast<std::uint64_t>(v), census.f_values[v], norm_from_f(census.f_values[v], kind, params));
    return {kExitOk, csv.str()};
  }
  json residuals;
  residuals["symmetry"] = symmetry_residual(k, kind);
  residuals["multiplicativity"] = k <= kMaxPairSweepWidth ? json(multiplicativity_residual(k, kind)) : json(nullptr);
  residuals["cstar"] = cstar_residual(k, kind, params);
  json j{{"k", k},
         {"kind", std::string(to_string(kind))},
         {"distinct_count", census.distinct_count},
         {"largest_class", census.largest_class},
         {"residuals", residuals}};
  return {kExitOk, j.dump() + "\n"};
}

// ---- block polynomials -----------------------------------------------------

Result cmd_blockpoly(const Globals& g, int k, const std::optional<std::string>& token) {
  require_not_pbm(g);
  std::vector<Word> words;
  if (token) {
    words.push_back(parse_word(*token, k));
  } else {
    words = dictionary(k);
  }
  if (resolve_format(g, OutputFormat::Csv) == OutputFormat::Json) {
    json arr = json::array();
    for (const Word& w : words) {
      const BlockPoly p = block_encode(w);
      arr.push_back({{"value", w.value()}, {"string", w.str()}, {"delta", p.dimension()}, {"coeffs", p.coeffs()}});
    }
    return {kExitOk, arr.dump() + "\n"};
  }
  Csv csv{"value", "string", "delta", "coeffs"};
  for (const Word& w : words) {
    const BlockPoly p = block_encode(w);
    csv.add(w.value(), w.str(), p.dimension(), p.to_string());
  }
  return {kExitOk, csv.str()};
}

Result cmd_delta(const Globals& g, int kmax, bool recursive, bool check) {
  require_not_pbm(g);
  const std::vector<int> direct = delta_sequence(kmax, g.jobs);
  std::vector<int> shown = direct;
  int code = kExitOk;
  std::string note;
  if (recursive || check) {
    const std::vector<int> rec = delta_sequence_recursive(kmax);
    if (recursive) shown = rec;
    if (check && rec != direct) {
      code = kExitCheckFailed;
      note = "check failed: recursive generator disagrees with run counting\n";
    }
  }
  if (resolve_format(g, OutputFormat::Json) == OutputFormat::Csv) {
    Csv csv{"value", "delta"};
    for (std::size_t v = 0; v < shown.size(); ++v) csv.add(static_cast<std::uint64_t>(v), shown[v]);
    return {code, csv.str() + note};
  }
  return {code, json(shown).dump() + "\n" + note};
}

// ---- dyck ------------------------------------------------------------------

Result cmd_dyck_enum(const Globals& g, int width, bool prime, const std::string& convention) {
  require_not_pbm(g);
  if (width % 2 != 0) throw std::invalid_argument("dyck enum: width must be even");
  const DyckConvention conv = convention == "zero" ? DyckConvention::ZeroOpens : DyckConvention::OneOpens;
  if (convention != "one" && convention != "zero") throw std::invalid_argument("convention must be one|zero");
  const DyckKind kind = prime ? DyckKind::Prime : DyckKind::Any;
  const auto words = enumerate_dyck(width, conv, kind, g.jobs);
  const int n = width / 2;
  const std::uint64_t expected = prime ? (n == 0 ? 0 : catalan(n - 1)) : catalan(n);
  if (resolve_format(g, OutputFormat::Csv) == OutputFormat::Json) {
    json list = json::array();
    for (const Word& w : words) list.push_back(w.str());
    json j{{"n", n},
           {"count", words.size()},
           {"catalan", expected},
           {"match", words.size() == expected},
           {"prime", prime},
           {"convention", convention},
           {"words", list}};
    return {kExitOk, j.dump() + "\n"};
  }
  Csv csv{"value", "string"};
  for (const Word& w : words) csv.add(w.value(), w.str());
  return {kExitOk, csv.str()};
}

Result cmd_dyck_closure(const Globals& g, int k) {
  require_not_pbm(g);
  const ClosureReport r = conjugation_closure_check(k);
  json j{{"k", k},
         {"dyck_count", r.dyck_count},
         {"concat_with_conjugate", r.concat_with_conjugate},
         {"conjugate_maps_onto", r.conjugate_maps_onto},
         {"complement_is_zero_opens", r.complement_is_zero_opens},
         {"ok", r.ok()}};
  return {r.ok() ? kExitOk : kExitCheckFailed, j.dump() + "\n"};
}

// ---- temperley-lieb --------------------------------------------------------

int strands_from_width(int width) {
  if (width < 2 || width % 2 != 0) throw std::invalid_argument("expected an even width 2n >= 2");
  return width / 2;
}

Result cmd_tl_product(const Globals& g, int width, const std::string& vt, const std::string& mt, bool check) {
  require_not_pbm(g);
  strands_from_width(width);
  const Word v = parse_word(vt, width);
  const Word mu = parse_word(mt, width);
  const tl::FastProduct fp = tl::compose_fast(v, mu);
  const tl::ScaledDiagram oracle = tl::compose(tl::from_dyck(v), tl::from_dyck(mu));
  const bool agrees = tl::to_dyck(oracle.diagram) == fp.word && oracle.delta_exp == fp.delta_exp;
  const int code = check && !agrees ? kExitCheckFailed : kExitOk;
  if (g.format == "json") {
    json j{{"v", word_json(v)},       {"mu", word_json(mu)},          {"word", word_json(fp.word)},
           {"delta_exp", fp.delta_exp}, {"fast_path", fp.fast_path},   {"r_u", fp.mask_up.str()},
           {"r_d", fp.mask_down.str()}, {"oracle_match", agrees}};
    return {code, j.dump() + "\n"};
  }
  if (g.format == "csv") {
    Csv csv{"v", "mu", "word", "value", "delta_exp", "fast_path", "oracle_match"};
    csv.add(v.str(), mu.str(), fp.word.str(), fp.word.value(), fp.delta_exp, fp.fast_path, agrees);
    return {code, csv.str()};
  }
  std::ostringstream os;
  os << fp.word.str() << " delta_exp=" << fp.delta_exp << "\n"
     << "value=" << fp.word.value() << " fast_path=" << (fp.fast_path ? "true" : "false")
     << " r_u=" << fp.mask_up.str() << " r_d=" << fp.mask_down.str()
     << " oracle=" << (agrees ? "match" : "MISMATCH") << "\n";
  return {code, os.str()};
}

Result cmd_tl_table(const Globals& g, int width) {
  const int n = strands_from_width(width);
  const tl::BoolMatrix m = tl::product_table(n, g.jobs);
  const OutputFormat f = resolve_format(g, OutputFormat::Pbm);
  if (f == OutputFormat::Pbm) return {kExitOk, m.to_pbm()};
  const auto index = tl::product_table_index(n);
  if (f == OutputFormat::Json) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::string bits;
      for (std::size_t c = 0; c < m.cols; ++c) bits += m.at(r, c) ? '1' : '0';
      rows.push_back(bits);
    }
    json labels = json::array();
    for (const Word& w : index) labels.push_back(w.str());
    return {kExitOk, json{{"rows", m.rows}, {"cols", m.cols}, {"index", labels}, {"matrix", rows}}.dump() + "\n"};
  }
  std::string out = "word";
  for (const Word& w : index) out += "," + w.str();
  out += '\n';
  for (std::size_t r = 0; r < m.rows; ++r) {
    out += index[r].str();
    for (std::size_t c = 0; c < m.cols; ++c) out += m.at(r, c) ? ",1" : ",0";
    out += '\n';
  }
  return {kExitOk, out};
}

Result cmd_tl_relations(const Globals& g, int n) {
  require_not_pbm(g);
  const tl::RelationReport r = tl::check_relations(n);
  const int code = r.ok() ? kExitOk : kExitCheckFailed;
  if (g.format == "json")
    return {code, json{{"n", n}, {"checks", r.checks}, {"violations", r.violations}, {"ok", r.ok()}}.dump() + "\n"};
  if (g.format == "csv") {
    Csv csv{"n", "checks", "violations"};
    csv.add(n, r.checks, static_cast<int>(r.violations.size()));
    return {code, csv.str()};
  }
  std::ostringstream os;
  os << "n=" << n << " checks=" << r.checks << " violations=" << r.violations.size() << "\n";
  for (const auto& v : r.violations) os << "  " << v << "\n";
  return {code, os.str()};
}

Result cmd_tl_altreport(const Globals& g, int n, int steps) {
  require_not_pbm(g);
  const tl::AlternationReport r = tl::alternation_report(n, steps);
  if (resolve_format(g, OutputFormat::Csv) == OutputFormat::Json) {
    json list = json::array();
    for (const auto& s : r.steps)
      list.push_back({{"first", s.first},
                      {"second", s.second},
                      {"steps", s.steps},
                      {"invariant", s.invariant},
                      {"single_bit_transition", s.single_bit_transition},
                      {"code", s.code.str()},
                      {"delta_exp", s.delta_exp}});
    json j{{"n", n},
           {"even_checked", r.even_checked},
           {"even_invariant", r.even_invariant},
           {"odd_checked", r.odd_checked},
           {"odd_single_bit", r.odd_single_bit},
           {"null_transition_square", r.null_transition_square},
           {"steps", list}};
    return {kExitOk, j.dump() + "\n"};
  }
  Csv csv{"first", "second", "steps", "invariant", "single_bit_transition", "code", "delta_exp"};
  for (const auto& s : r.steps)
    csv.add(s.first, s.second, s.steps, s.invariant, s.single_bit_transition, s.code.str(), s.delta_exp);
  return {kExitOk, csv.str()};
}

Result cmd_tl_verify(const Globals& g, int n, std::size_t samples) {
  require_not_pbm(g);
  if (n < 1 || n > 8) throw std::invalid_argument("tl verify: n must be in 1..8");
  const auto dyck = enumerate_dyck(2 * n);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  auto one = [&](const Word& v, const Word& mu) {
    const tl::FastProduct fp = tl::compose_fast(v, mu);
    const tl::ScaledDiagram o = tl::compose(tl::from_dyck(v), tl::from_dyck(mu));
    ++checked;
    if (tl::to_dyck(o.diagram) != fp.word || o.delta_exp != fp.delta_exp) ++mismatches;
  };
  if (samples == 0) {
    for (const Word& v : dyck)
      for (const Word& mu : dyck) one(v, mu);
  } else {
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<std::size_t> pick(0, dyck.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const Word& v = dyck[pick(rng)];
      one(v, dyck[pick(rng)]);
    }
  }
  json j{{"n", n}, {"checked", checked}, {"mismatches", mismatches}, {"seed", g.seed}};
  return {mismatches == 0 ? kExitOk : kExitCheckFailed, j.dump() + "\n"};
}

// ---- signals ---------------------------------------------------------------

Result cmd_ofdm(const Globals& g, int k, const std::string& token, std::size_t samples) {
  require_not_pbm(g);
  const Word w = parse_word(token, k);
  const signal::OFDMCode code = signal::ofdm_weights(block_encode(w));
  if (g.format == "csv") {
    const signal::SampledSignal s = signal::synthesize(code, samples);
    Csv csv{"t", "re", "im"};
    for (std::size_t j = 0; j < s.size(); ++j) csv.add(s.time(j), s.samples[j].real(), s.samples[j].imag());
    return {kExitOk, csv.str()};
  }
  json j{{"weights", code.weights}, {"sign_term", code.sign_term}, {"omega0", code.omega0}};
  return {kExitOk, j.dump() + "\n"};
}

struct SelfTestRow {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

std::vector<SelfTestRow> lct_selftest(std::size_t n, std::uint64_t seed, unsigned jobs) {
  using signal::Complex;
  using signal::LCTParams;
  using std::numbers::pi;
  const double span = std::sqrt(static_cast<double>(n) / 2.0);
  const auto gaussian = signal::sample_centered(n, span, [](double t) { return Complex(std::exp(-pi * t * t)); });
  std::vector<SelfTestRow> rows;

  rows.push_back({"identity", signal::relative_l2(signal::lct_apply(LCTParams::identity(), gaussian, jobs), gaussian),
                  1e-9});

  // Direct DFT-sum reference for (0, 1, -1, 0): (-i)^{1/2} sum s(t) exp(-2 pi i u t) dt.
  signal::SampledSignal ref = gaussian;
  for (std::size_t m = 0; m < n; ++m) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j)
      acc += gaussian.samples[j] * std::polar(1.0, -2 * pi * gaussian.time(m) * gaussian.time(j));
    ref.samples[m] = std::polar(1.0, -pi / 4) * acc * gaussian.dt;
  }
  rows.push_back({"fourier_vs_dft", signal::relative_l2(signal::lct_apply(LCTParams::fourier(), gaussian, jobs), ref),
                  1e-6});

  const std::pair<const char*, std::pair<LCTParams, LCTParams>> family[] = {
      {"rot(pi/6)+rot(pi/5)", {LCTParams::rotation(pi / 6), LCTParams::rotation(pi / 5)}},
      {"rot(pi/4)+rot(pi/4)", {LCTParams::rotation(pi / 4), LCTParams::rotation(pi / 4)}},
      {"scale(1.25)+rot(0.7)", {LCTParams(1.25, 0, 0, 0.8), LCTParams::rotation(0.7)}},
      {"rot(0.7)+scale(1.25)", {LCTParams::rotation(0.7), LCTParams(1.25, 0, 0, 0.8)}},
      {"(0.5,1,-0.75,0.5)+rot(0.9)", {LCTParams(0.5, 1, -0.75, 0.5), LCTParams::rotation(0.9)}},
      {"shear(0.3)+rot(1.0)", {LCTParams(1, 0, 0.3, 1), LCTParams::rotation(1.0)}},
  };
  for (const auto& [name, pq] : family)
    rows.push_back({std::string("compose:") + name, signal::additivity_residual(pq.first, pq.second, gaussian), 1e-6});

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> centre(-2.0, 2.0), width(0.7, 1.3), freq(-1.0, 1.0), angle(0.5, 2.6);
  double worst = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::array<double, 4>> packets(3);
    for (auto& p : packets) p = {centre(rng), width(rng), freq(rng), angle(rng) * 2};
    const auto s = signal::sample_centered(n, span, [&](double t) {
      Complex acc{};
      for (const auto& [c, w, f, ph] : packets)
        acc += std::exp(-pi * (t - c) * (t - c) / (w * w)) * std::polar(1.0, 2 * pi * f * t + ph);
      return acc;
    });
    const auto out = signal::lct_apply(LCTParams::rotation(angle(rng)), s, jobs);
    worst = std::max(worst, std::abs(out.energy() / s.energy() - 1.0));
  }
  rows.push_back({"energy:random_packets", worst, 1e-6});
  return rows;
}

Result cmd_lct_selftest(const Globals& g, std::size_t n) {
  require_not_pbm(g);
  if (n < 16) throw std::invalid_argument("lct selftest: need at least 16 samples");
  const auto rows = lct_selftest(n, g.seed, g.jobs);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const SelfTestRow& r) { return r.pass(); });
  const int code = ok ? kExitOk : kExitCheckFailed;
  if (g.format == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back({{"case", r.name}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass()}});
    return {code, json{{"N", n}, {"cases", list}, {"ok", ok}}.dump() + "\n"};
  }
  if (g.format == "csv") {
    Csv csv{"case", "residual", "tolerance", "pass"};
    for (const auto& r : rows) csv.add(r.name, r.residual, r.tolerance, r.pass());
    return {code, csv.str()};
  }
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-30s %-12s %-9s %s\n", "case", "residual", "tol", "result");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-30s %-12.3e %-9.0e %s\n", r.name.c_str(), r.residual, r.tolerance,
                  r.pass() ? "PASS" : "FAIL");
    os << line;
  }
  return {code, os.str()};
}

Result cmd_manchester(const Globals& g, bool encode, const std::string& bits) {
  require_not_pbm(g);
  const Word w = Word::from_string(bits);
  const Word r = encode ? signal::manchester_encode(w) : signal::manchester_decode(w);
  if (g.format == "json") return {kExitOk, json{{"input", word_json(w)}, {"output", word_json(r)}}.dump() + "\n"};
  if (g.format == "csv") {
    Csv csv{"input", "output", "value"};
    csv.add(w.str(), r.str(), r.value());
    return {kExitOk, csv.str()};
  }
  return {kExitOk, r.str() + "\n"};
}

}  // namespace

Word parse_word(std::string_view token, int width) {
  if (token.starts_with("0b")) {
    const std::string_view bits = token.substr(2);
    if (bits.empty() || static_cast<int>(bits.size()) > width)
      throw std::invalid_argument("binary literal does not fit the width");
    return Word(Word::from_string(bits).value(), width);
  }
  const bool binary = static_cast<int>(token.size()) == width &&
                      token.find_first_not_of("01") == std::string_view::npos;
  if (binary) return Word::from_string(token);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("cannot read '" + std::string(token) + "' as a word of width " + std::to_string(width));
  return Word(v, width);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary-word algebra: conjugation, norms, block polynomials, Dyck words, "
               "Temperley-Lieb products and signal encodings."};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: csv, json or pbm")->check(CLI::IsMember({"csv", "json", "pbm"}));
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--jobs", g.jobs, "Worker threads for exhaustive sweeps")->check(CLI::Range(1U, 256U));

  std::string width_arg, value_arg, mu_arg, kind_arg = "digitsum", convention = "one";
  std::optional<std::string> opt_value;
  double gval = std::numbers::ln2;
  bool recursive = false, check = false, prime = false;
  std::size_t samples = 0, lct_n = 512, ofdm_samples = 64;
  int alt_steps = 6;

  auto* dict = app.add_subcommand("dict", "Dictionary of S_k with conjugates");
  dict->add_option("k", width_arg)->required();

  auto* conj = app.add_subcommand("conj", "Complement, reflection and conjugate of one word");
  conj->add_option("k", width_arg)->required();
  conj->add_option("value", value_arg)->required();

  auto* normc = app.add_subcommand("norm", "f values and norms over S_k (or one word)");
  normc->add_option("k", width_arg)->required();
  normc->add_option("value", opt_value);
  normc->add_option("--kind", kind_arg)->check(CLI::IsMember({"digitsum", "dct", "dst"}));
  normc->add_option("--g", gval, "Exponent scale g > 0");

  auto* census = app.add_subcommand("census", "Degeneracy census and residuals");
  census->add_option("k", width_arg)->required();
  census->add_option("--kind", kind_arg)->check(CLI::IsMember({"digitsum", "dct", "dst"}));
  census->add_option("--g", gval, "Exponent scale g > 0");

  auto* blockpoly = app.add_subcommand("blockpoly", "Block polynomial coefficients");
  blockpoly->add_option("k", width_arg)->required();
  blockpoly->add_option("value", opt_value);

  auto* delta = app.add_subcommand("delta", "Block-dimension sequence over S_kmax");
  delta->add_option("kmax", width_arg)->required();
  delta->add_flag("--recursive", recursive, "Use the recursive generator");
  delta->add_flag("--check", check, "Compare the recursive generator with run counting");

  auto* dyck = app.add_subcommand("dyck", "Dyck words");
  dyck->require_subcommand(1);
  auto* dyck_enum = dyck->add_subcommand("enum", "Enumerate Dyck words of width 2n");
  dyck_enum->add_option("width", width_arg)->required();
  dyck_enum->add_flag("--prime", prime, "Only irreducible words (strictly positive proper prefixes)");
  dyck_enum->add_option("--convention", convention, "Opening bit: one or zero")->check(CLI::IsMember({"one", "zero"}));
  auto* dyck_closure = dyck->add_subcommand("closure", "Conjugation closure check at width k");
  dyck_closure->add_option("k", width_arg)->required();

  auto* tlc = app.add_subcommand("tl", "Temperley-Lieb diagram algebra");
  tlc->require_subcommand(1);
  auto* tl_product = tlc->add_subcommand("product", "Arithmetized product of two Dyck codes");
  tl_product->add_option("width", width_arg)->required();
  tl_product->add_option("v", value_arg)->required();
  tl_product->add_option("mu", mu_arg)->required();
  tl_product->add_flag("--check", check, "Fail when the diagram oracle disagrees");
  auto* tl_table = tlc->add_subcommand("table", "Fast-path product table over S_2n");
  tl_table->add_option("width", width_arg)->required();
  auto* tl_relations = tlc->add_subcommand("relations", "Check generator relations for TL_n");
  tl_relations->add_option("n", width_arg)->required();
  auto* tl_alt = tlc->add_subcommand("altreport", "Alternating generator products report");
  tl_alt->add_option("n", width_arg)->required();
  tl_alt->add_option("--steps", alt_steps, "Longest product length")->check(CLI::Range(2, 64));
  auto* tl_verify = tlc->add_subcommand("verify", "Fast product against the diagram oracle");
  tl_verify->add_option("n", width_arg)->required();
  tl_verify->add_option("--samples", samples, "Random pairs (0 = all pairs)");

  auto* ofdm = app.add_subcommand("ofdm", "OFDM harmonic weights of a word");
  ofdm->add_option("k", width_arg)->required();
  ofdm->add_option("value", value_arg)->required();
  ofdm->add_option("--samples", ofdm_samples, "Samples per period for csv output");

  auto* lct = app.add_subcommand("lct", "Linear canonical transform");
  lct->require_subcommand(1);
  auto* lct_self = lct->add_subcommand("selftest", "Identity, Fourier, composition and energy residuals");
  lct_self->add_option("--N", lct_n, "Samples");

  auto* manchester = app.add_subcommand("manchester", "Manchester code");
  manchester->require_subcommand(1);
  auto* man_enc = manchester->add_subcommand("encode", "0 -> 10, 1 -> 01");
  man_enc->add_option("bits", value_arg)->required();
  auto* man_dec = manchester->add_subcommand("decode", "Inverse of encode");
  man_dec->add_option("bits", value_arg)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os_out, os_err;
    const int rc = app.exit(e, os_out, os_err);
    out << os_out.str();
    err << os_err.str();
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Result result;
  try {
    const NormKind kind = parse_norm_kind(kind_arg);
    auto width = [&](const char* what) { return parse_width(width_arg, what); };
    if (*dict) result = cmd_dict(g, width("k"));
    else if (*conj) result = cmd_conj(g, width("k"), value_arg);
    else if (*normc) result = cmd_norm(g, width("k"), opt_value, kind, gval);
    else if (*census) result = cmd_census(g, width("k"), kind, gval);
    else if (*blockpoly) result = cmd_blockpoly(g, width("k"), opt_value);
    else if (*delta) result = cmd_delta(g, width("kmax"), recursive, check);
    else if (*dyck_enum) result = cmd_dyck_enum(g, width("width"), prime, convention);
    else if (*dyck_closure) result = cmd_dyck_closure(g, width("k"));
    else if (*tl_product) result = cmd_tl_product(g, width("width"), value_arg, mu_arg, check);
    else if (*tl_table) result = cmd_tl_table(g, width("width"));
    else if (*tl_relations) result = cmd_tl_relations(g, width("n"));
    else if (*tl_alt) result = cmd_tl_altreport(g, width("n"), alt_steps);
    else if (*tl_verify) result = cmd_tl_verify(g, width("n"), samples);
    else if (*ofdm) result = cmd_ofdm(g, width("k"), value_arg, ofdm_samples);
    else if (*lct_self) result = cmd_lct_selftest(g, lct_n);
    else if (*man_enc) result = cmd_manchester(g, true, value_arg);
    else if (*man_dec) result = cmd_manchester(g, false, value_arg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << g.out_path << "\n";
      return kExitUsage;
    }
    file << result.text;
  }
  if (result.code == kExitCheckFailed) err << "check failed\n";
  return result.code;
}

}  // namespace wordalg::cli
