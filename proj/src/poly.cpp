#include "artin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

std::size_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

namespace {

void enumerate(std::size_t n, std::size_t d, std::size_t pos, Exponent& cur,
               std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<unsigned>(d);
    out.push_back(cur);
    return;
  }
  for (std::size_t a = d + 1; a-- > 0;) {
    cur[pos] = static_cast<unsigned>(a);
    enumerate(n, d - a, pos + 1, cur, out);
  }
}

// Graded-lex descending comparison: higher degree first, then lex with x1 largest.
bool grlex_greater(const Exponent& a, const Exponent& b) {
  std::size_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Exponent> out;
  if (n == 0) return out;
  Exponent cur(n, 0);
  enumerate(n, d, 0, cur, out);
  return out;
}

Polynomial Polynomial::monomial(const Exponent& e, const mpz_class& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const mpz_class& c) {
  return monomial(Exponent(nvars, 0), c);
}

void Polynomial::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw DimensionError("polynomial variable count mismatch");
  Polynomial r(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r(nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

std::size_t Polynomial::min_degree() const {
  if (terms_.empty()) return 0;
  std::size_t d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const { return degree() == min_degree(); }

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, mpz_class>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    mpz_class c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial result(vars_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial term = parse_term();
      if (sign < 0)
        result -= term;
      else
        result += term;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    mpz_class coeff = 1;
    Exponent e(vars_.size(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected coefficient or variable");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) fail_at(start, "unknown variable '" + name + "'");
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          std::size_t caret = pos_++;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail_at(caret, "expected exponent after '^'");
          mpz_class p = parse_integer();
          if (p > 1000000) fail("exponent too large");
          power = static_cast<unsigned>(p.get_ui());
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Polynomial::monomial(e, coeff);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
    throw ParseError(0, pos + 1, what);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace artin
