#include "socle3/parser.hpp"

#include <cctype>
#include <vector>

#include "socle3/error.hpp"

namespace socle3 {

namespace {

constexpr int kMaxExponent = 1000;

class Parser {
 public:
  Parser(std::string_view text, VarSpace space, std::size_t num_vars)
      : text_(text), space_(space), num_vars_(num_vars), result_{Polynomial(space, num_vars), {}} {}

  ParseResult run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      skip_ws();
      term(c == '-');
    }
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void term(bool negative) {
    if (at_end()) fail("expected term");
    Rational coeff = 1;
    std::vector<int> exps(num_vars_, 0);
    bool need_power = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits("number"));
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        den = Integer(digits("denominator"));
        if (den == 0) throw ParseError("division by zero in coefficient", den_pos);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') {
        finish(negative, coeff, exps);
        return;
      }
      ++pos_;
      skip_ws();
      need_power = true;
    }
    while (true) {
      if (at_end()) fail(need_power ? "expected variable" : "expected term");
      power(exps);
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    finish(negative, coeff, exps);
  }

  void power(std::vector<int>& exps) {
    const char letter = variable_letter(space_);
    const char other = space_ == VarSpace::Ring ? 'y' : 'x';
    char c = peek();
    if (c == other) fail(std::string("variable family '") + other + "' not allowed here");
    if (c != letter) fail(std::string("unexpected character '") + c + "'");
    const std::size_t var_pos = pos_;
    ++pos_;
    std::string idx = digits("variable index");
    if (idx.size() > 6) throw ParseError("variable index out of range", var_pos);
    std::size_t i = std::stoul(idx);
    if (i < 1 || i > num_vars_) throw ParseError("variable index out of range", var_pos);
    int e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      std::string ds = digits("exponent");
      if (ds.size() > 4 || std::stoi(ds) > kMaxExponent) throw ParseError("exponent too large", exp_pos);
      e = std::stoi(ds);
    }
    exps[i - 1] += e;
    result_.consumed_variables.insert(i - 1);
  }

  void finish(bool negative, Rational coeff, std::vector<int>& exps) {
    if (negative) coeff = -coeff;
    result_.value.add_term(Monomial(std::move(exps)), coeff);
  }

  std::string_view text_;
  VarSpace space_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
  ParseResult result_;
};

}  // namespace

ParseResult parse_poly_detailed(std::string_view text, VarSpace space, std::size_t num_vars) {
  if (num_vars == 0) throw PreconditionError("need at least one variable");
  return Parser(text, space, num_vars).run();
}

Polynomial parse_poly(std::string_view text, VarSpace space, std::size_t num_vars) {
  return parse_poly_detailed(text, space, num_vars).value;
}

std::string print_monomial(const Monomial& m, VarSpace space) {
  std::string out;
  const char letter = variable_letter(space);
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += letter;
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string print_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  // Group by degree (descending); within a degree keep canonical order.
  std::vector<std::pair<const Monomial*, const Rational*>> terms;
  for (int d = p.degree(); d >= 0; --d)
    for (const auto& [m, c] : p.terms())
      if (m.degree() == d) terms.emplace_back(&m, &c);
  std::string out;
  bool first = true;
  for (auto [m, c] : terms) {
    const bool neg = sgn(*c) < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational a = abs(*c);
    if (m->degree() == 0) {
      out += to_string(a);
    } else {
      if (a != 1) {
        out += to_string(a);
        out += '*';
      }
      out += print_monomial(*m, p.space());
    }
  }
  return out;
}

}  // namespace socle3
