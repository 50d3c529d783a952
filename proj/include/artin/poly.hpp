#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace artin {

using Exponent = std::vector<unsigned>;

std::size_t total_degree(const Exponent& e);

/// All exponent vectors of total degree d in n variables, in graded-lex descending
/// order (x1 > x2 > ... > xn).
std::vector<Exponent> monomials_of_degree(std::size_t n, std::size_t d);

/// Integer-coefficient polynomial, the form relations and presentation entries take
/// before they are reduced into a field.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(const Exponent& e, const mpz_class& c = 1);
  static Polynomial constant(std::size_t nvars, const mpz_class& c);

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const mpz_class& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpz_class& c) const;

  /// Largest total degree; 0 for the zero polynomial.
  std::size_t degree() const;
  std::size_t min_degree() const;
  bool is_homogeneous() const;

  /// Renders with the given variable names, terms in graded-lex descending order.
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, mpz_class> terms_;
};

/// Parses `term (('+'|'-') term)*` where a term is an optional integer coefficient
/// followed by `*`-separated variables with optional `^` powers. Throws ParseError with
/// column = 1-based offset into `text` (line reported as 0).
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace artin
