#include "drwkit/expr.hpp"

#include <cctype>

namespace drwkit {

RationalPoly RationalPoly::constant(std::size_t nvars, const mpq_class& c) {
  RationalPoly r;
  r.nvars = nvars;
  if (sgn(c) != 0) r.terms.emplace(Exponents(nvars, 0), c);
  return r;
}

bool RationalPoly::is_constant() const {
  for (const auto& [e, c] : terms)
    for (unsigned x : e)
      if (x != 0) return false;
  return true;
}

mpq_class RationalPoly::constant_term() const {
  auto it = terms.find(Exponents(nvars, 0));
  return it == terms.end() ? mpq_class(0) : it->second;
}

namespace {

RationalPoly add(const RationalPoly& a, const RationalPoly& b, int sign) {
  RationalPoly r = a;
  for (const auto& [e, c] : b.terms) {
    mpq_class v = r.terms.count(e) ? r.terms[e] : mpq_class(0);
    v += sign * c;
    if (sgn(v) == 0)
      r.terms.erase(e);
    else
      r.terms[e] = v;
  }
  return r;
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  r.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      mpq_class v = r.terms.count(e) ? r.terms[e] : mpq_class(0);
      v += ca * cb;
      if (sgn(v) == 0)
        r.terms.erase(e);
      else
        r.terms[e] = v;
    }
  }
  return r;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars,
         const std::map<std::string, BigInt>& constants)
      : text_(text), vars_(vars), constants_(constants) {}

  RationalPoly run() {
    RationalPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPoly expr() {
    RationalPoly r = term();
    while (true) {
      if (accept('+'))
        r = add(r, term(), 1);
      else if (accept('-'))
        r = add(r, term(), -1);
      else
        return r;
    }
  }

  RationalPoly term() {
    RationalPoly r = unary();
    while (true) {
      if (accept('*')) {
        r = mul(r, unary());
      } else if (accept('/')) {
        RationalPoly d = unary();
        if (!d.is_constant()) error("division by a non-constant");
        mpq_class c = d.constant_term();
        if (sgn(c) == 0) fail(ErrorKind::DivisionByZero, "division by zero in \"" + text_ + "\"");
        r = mul(r, RationalPoly::constant(vars_.size(), 1 / c));
      } else {
        return r;
      }
    }
  }

  RationalPoly unary() {
    if (accept('-')) return mul(RationalPoly::constant(vars_.size(), -1), unary());
    if (accept('+')) return unary();
    return power();
  }

  RationalPoly power() {
    RationalPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      RationalPoly r = RationalPoly::constant(vars_.size(), 1);
      for (unsigned long i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  RationalPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalPoly r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalPoly::constant(vars_.size(), mpq_class(BigInt(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == ident) {
          RationalPoly r;
          r.nvars = vars_.size();
          Exponents e(vars_.size(), 0);
          e[i] = 1;
          r.terms.emplace(e, 1);
          return r;
        }
      }
      auto it = constants_.find(ident);
      if (it != constants_.end()) return RationalPoly::constant(vars_.size(), mpq_class(it->second));
      error("unknown identifier '" + ident + "'");
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  const std::map<std::string, BigInt>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_expression(const std::string& text, const std::vector<std::string>& variables,
                              const std::map<std::string, BigInt>& constants) {
  Parser parser(text, variables, constants);
  RationalPoly r = parser.run();
  r.nvars = variables.size();
  return r;
}

}  // namespace drwkit
