#include "tropkap/parse_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "tropkap/error.hpp"

namespace tropkap {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c >= 0x20 && c < 0x7f) return std::string("'") + text[pos] + "'";
  std::ostringstream os;
  os << "byte 0x" << std::hex << static_cast<int>(c);
  return os.str();
}

// Recursive-descent scanner shared by the rational and series grammars.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  /// Consumes '+', '-' or U+2212; returns +1/-1, or 0 if none present.
  int accept_sign() {
    if (accept('+')) return 1;
    if (accept('-')) return -1;
    if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
      pos_ += kUnicodeMinus.size();
      return -1;
    }
    return 0;
  }

  bool at_sign() const {
    const char c = peek();
    return c == '+' || c == '-' || text_.substr(pos_).starts_with(kUnicodeMinus);
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + " at byte " +
                         std::to_string(pos_) + ", found " +
                         describe(text_, pos_),
                     pos_);
  }

  std::string digits(const std::string& what) {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail(what);
    return std::string(text_.substr(start, pos_ - start));
  }

  /// digits [ "/" digits ], unsigned.
  Rational unsigned_rational(bool allow_space) {
    const std::string num = digits("digit");
    if (allow_space) skip_space();
    if (!accept('/')) return Rational::from_strings(num);
    if (allow_space) skip_space();
    const std::size_t den_pos = pos_;
    const std::string den = digits("denominator digit");
    if (den.find_first_not_of('0') == std::string::npos) {
      throw ParseError("zero denominator at byte " + std::to_string(den_pos),
                       den_pos);
    }
    return Rational::from_strings(num, den);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_exponent(Scanner& s) {
  s.skip_space();
  if (s.accept('(')) {
    s.skip_space();
    const int sign = s.accept_sign();
    s.skip_space();
    Rational e = s.unsigned_rational(true);
    s.skip_space();
    if (!s.accept(')')) s.fail("')'");
    return sign < 0 ? -e : e;
  }
  const int sign = s.accept_sign();
  s.skip_space();
  Rational e = Rational::from_strings(s.digits("exponent digit"));
  if (s.peek() == '/') s.fail("parenthesized fractional exponent");
  return sign < 0 ? -e : e;
}

Rational parse_monomial(Scanner& s) {
  if (!s.accept('t')) s.fail("'t'");
  s.skip_space();
  if (!s.accept('^')) return Rational(1);
  return parse_exponent(s);
}

Term parse_term(Scanner& s) {
  s.skip_space();
  if (is_digit(s.peek())) {
    Rational coeff = s.unsigned_rational(true);
    s.skip_space();
    if (!s.accept('*')) return Term{std::move(coeff), Rational(0)};
    s.skip_space();
    return Term{std::move(coeff), parse_monomial(s)};
  }
  if (s.peek() == 't') return Term{Rational(1), parse_monomial(s)};
  s.fail("coefficient or 't'");
}

std::string format_exponent(const Rational& e) {
  if (e.is_integer()) return "t^" + e.to_string();
  return "t^(" + e.to_string() + ")";
}

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
  std::size_t offset;  // byte offset of the line in the whole input
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t\f\v");
    if (first != std::string_view::npos && line[first] != '#') {
      out.push_back(Line{line, number, start});
    }
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return out;
}

[[noreturn]] void ragged(const Line& line, std::size_t got,
                         std::size_t expected) {
  throw ParseError("ragged row at line " + std::to_string(line.number) +
                       ": " + std::to_string(got) + " entries, expected " +
                       std::to_string(expected),
                   line.offset, line.number, 1);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner s(text);
  s.skip_space();
  const int sign = s.accept_sign();
  Rational r = s.unsigned_rational(false);
  s.skip_space();
  if (!s.at_end()) s.fail("end of rational");
  return sign < 0 ? -r : r;
}

PuiseuxSeries parse_series(std::string_view text) {
  Scanner s(text);
  std::vector<Term> terms;
  s.skip_space();
  int sign = s.accept_sign();
  for (;;) {
    Term term = parse_term(s);
    if (sign < 0) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
    s.skip_space();
    if (s.at_end()) break;
    if (!s.at_sign()) s.fail("'+' or '-'");
    sign = s.accept_sign();
  }
  return PuiseuxSeries(std::move(terms));
}

std::string format_series(const PuiseuxSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& term : s.terms()) {
    const bool negative = term.coefficient.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(term.coefficient);
    if (term.exponent.is_zero()) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += term.exponent == Rational(1) ? std::string("t")
                                        : format_exponent(term.exponent);
  }
  return out;
}

TropicalMatrix parse_tropical_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty tropical matrix", 0);
  std::vector<Rational> entries;
  std::size_t cols = 0;
  for (const Line& line : lines) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.text.size()) {
      while (i < line.text.size() && is_space(line.text[i])) ++i;
      if (i >= line.text.size()) break;
      const std::size_t start = i;
      while (i < line.text.size() && !is_space(line.text[i])) ++i;
      const std::string_view token = line.text.substr(start, i - start);
      try {
        entries.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        const std::size_t column = start + e.position() + 1;
        throw ParseError("line " + std::to_string(line.number) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line.offset + start + e.position(), line.number,
                         column);
      }
      ++count;
    }
    if (cols == 0) {
      cols = count;
    } else if (count != cols) {
      ragged(line, count, cols);
    }
  }
  return TropicalMatrix(lines.size(), cols, std::move(entries));
}

PuiseuxMatrix parse_puiseux_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty series matrix", 0);
  std::vector<PuiseuxSeries> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const Line& line = lines[r];
    std::size_t count = 0;
    std::size_t start = 0;
    for (;;) {
      std::size_t end = line.text.find(';', start);
      if (end == std::string_view::npos) end = line.text.size();
      const std::string_view cell = line.text.substr(start, end - start);
      try {
        entries.push_back(parse_series(cell));
      } catch (const ParseError& e) {
        const std::size_t column = start + e.position() + 1;
        throw ParseError("row " + std::to_string(r + 1) + ", cell " +
                             std::to_string(count + 1) + " (line " +
                             std::to_string(line.number) + ", column " +
                             std::to_string(column) + "): " + e.what(),
                         line.offset + start + e.position(), line.number,
                         column);
      }
      ++count;
      if (end == line.text.size()) break;
      start = end + 1;
    }
    if (cols == 0) {
      cols = count;
    } else if (count != cols) {
      ragged(line, count, cols);
    }
  }
  return PuiseuxMatrix(lines.size(), cols, std::move(entries));
}

std::string format_tropical_matrix(const TropicalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

std::string format_puiseux_matrix(const PuiseuxMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += "; ";
      out += format_series(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TropicalMatrix load_tropical_matrix(const std::filesystem::path& path) {
  return parse_tropical_matrix(read_text_file(path));
}

PuiseuxMatrix load_puiseux_matrix(const std::filesystem::path& path) {
  return parse_puiseux_matrix(read_text_file(path));
}

}  // namespace tropkap
