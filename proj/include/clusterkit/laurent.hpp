#pragma once

// Sparse multivariate integer polynomials in u_1..u_n with GMP coefficients,
// and cluster variables as a content-free numerator over a monomial.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterkit/error.hpp"

namespace clusterkit {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {}
  ExponentVector(std::initializer_list<int> exps) : exps_(exps) {}

  static ExponentVector unit(std::size_t n, std::size_t i, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& values() const noexcept { return exps_; }

  long degree() const noexcept;
  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;
  // Componentwise a >= b.
  bool dominates(const ExponentVector& b) const;

  ExponentVector& operator+=(const ExponentVector& b);
  ExponentVector& operator-=(const ExponentVector& b);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(int s, ExponentVector a);

  static ExponentVector min(const ExponentVector& a, const ExponentVector& b);
  static ExponentVector max(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

// Graded lexicographic order with u_1 > u_2 > ... ; true when a is the larger
// monomial. Terms are stored largest first.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

struct Term {
  ExponentVector exps;
  mpz_class coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static IntPolynomial constant(std::size_t nvars, const mpz_class& c);
  static IntPolynomial variable(std::size_t nvars, std::size_t i);
  static IntPolynomial monomial(ExponentVector exps, const mpz_class& c = 1);
  // Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static IntPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  // Terms with distinct exponent vectors and nonzero coefficients; only sorts.
  static IntPolynomial from_distinct_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  const Term& leading_term() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& g);
  IntPolynomial& operator-=(const IntPolynomial& g);
  friend IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g) { return f += g; }
  friend IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g) { return f -= g; }
  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
  IntPolynomial pow(unsigned k) const;
  // Multiplication by u^shift (shift non-negative).
  IntPolynomial shifted(const ExponentVector& shift) const;

  mpz_class evaluate(const std::vector<long>& point) const;
  // Componentwise minimum exponent over all terms; zero vector for 0.
  ExponentVector content_monomial() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "u1^2+2*u1*u2-1"; variable names default to u1..un.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // grlex descending, nonzero coefficients
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Leading-term division f = q*g + r under grlex; DivisionByZero for g = 0.
DivisionResult divide(const IntPolynomial& f, const IntPolynomial& g);

class NotDivisibleError : public Error {
 public:
  explicit NotDivisibleError(IntPolynomial remainder)
      : Error(Errc::NotDivisible, "nonzero remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const IntPolynomial& remainder() const noexcept { return remainder_; }

 private:
  IntPolynomial remainder_;
};

// Throws NotDivisibleError unless g divides f exactly.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

namespace detail {

IntPolynomial multiply_schoolbook(const IntPolynomial& f, const IntPolynomial& g);

// Kronecker substitution into GMP integers. nullopt when the dense image
// would be too large to be worth it.
std::optional<IntPolynomial> multiply_kronecker(const IntPolynomial& f, const IntPolynomial& g);

enum class KroneckerDivision { Quotient, NotDivisible, Undecided };
// Only reports Quotient once q*g = f is certain from the packing bounds.
KroneckerDivision exact_divide_kronecker(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& q);

}  // namespace detail

// f(e_i) > 0 for every e_i = (1,..,1,0,1,..,1).
bool is_positive_polynomial(const IntPolynomial& f);

// numerator / u^denominator with the numerator free of monomial factors.
// Denominator entries may be negative (u_i itself is 1 / u_i^{-1}).
class ReducedFraction {
 public:
  static ReducedFraction normalize(IntPolynomial numerator, ExponentVector denominator);
  static ReducedFraction one(std::size_t nvars);
  static ReducedFraction indeterminate(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return numerator_.nvars(); }
  const IntPolynomial& numerator() const noexcept { return numerator_; }
  const ExponentVector& denominator() const noexcept { return denominator_; }

  // Index i when this is exactly u_i.
  std::optional<std::size_t> initial_variable() const;
  // Positive numerator, or an initial variable.
  bool is_good_reduced_form() const;
  bool is_content_free() const { return numerator_.content_monomial().is_zero(); }

  friend ReducedFraction operator*(const ReducedFraction& a, const ReducedFraction& b);
  friend ReducedFraction operator+(const ReducedFraction& a, const ReducedFraction& b);
  ReducedFraction pow(unsigned k) const;
  // a / b where b's numerator must divide a's; NotDivisibleError otherwise.
  friend ReducedFraction divide_exact(const ReducedFraction& a, const ReducedFraction& b);

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

  // Stable byte encoding; equal fractions and only equal fractions share it.
  std::string canonical_bytes() const;
  // "(u1^2+u2+1)/(u1*u2)"
  std::string display(const std::vector<std::string>& names = {}) const;

 private:
  ReducedFraction(IntPolynomial num, ExponentVector den)
      : numerator_(std::move(num)), denominator_(std::move(den)) {}

  IntPolynomial numerator_;
  ExponentVector denominator_;
};

inline const ExponentVector& denominator_vector(const ReducedFraction& x) { return x.denominator(); }

}  // namespace clusterkit
