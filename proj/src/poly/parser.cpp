#include "seshadri/poly/parser.hpp"

#include <cctype>

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') fail("division is only allowed inside a rational literal");
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (!accept('^')) return b;
    std::string e = digits();
    if (e.size() > 3 || std::stoul(e) > Monomial::kMaxExponent) fail("exponent too large");
    unsigned n = static_cast<unsigned>(std::stoul(e));
    Poly r = Poly::constant(vars_.size(), Rational(1));
    for (unsigned i = 0; i < n; ++i) r *= b;
    return r;
  }

  Poly base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) {
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        return Poly::constant(vars_.size(), parse_rational(num + "/" + den));
      }
      return Poly::constant(vars_.size(), parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(vars_.size(), i);
      pos_ = start;
      fail("unknown variable \"" + name + "\"");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const VariableNames& vars_;
  std::size_t pos_ = 0;
};

template <class K>
std::string render(const Polynomial<K>& f, const VariableNames& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += c;
    else if (c == "1") out += mono;
    else out += c + "*" + mono;
  }
  return out;
}

}  // namespace

VariableNames indexed_names(const std::string& prefix, std::size_t count, std::size_t start) {
  VariableNames names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(start + i));
  return names;
}

Poly parse_polynomial(std::string_view expr, const VariableNames& vars) {
  if (vars.size() > kMaxVariables) throw InputError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  return Parser(expr, vars).parse();
}

std::string to_string(const Poly& f, const VariableNames& vars) { return render(f, vars); }
std::string to_string(const PolyZp& f, const VariableNames& vars) { return render(f, vars); }

}  // namespace seshadri
