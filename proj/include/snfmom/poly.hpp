#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snfmom {

using Int = boost::multiprecision::cpp_int;

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : PolyError {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at);
};
struct RingMismatch : PolyError {
  using PolyError::PolyError;
};
struct LaurentEscape : PolyError {
  using PolyError::PolyError;
};
struct DivisionFailure : PolyError {
  using PolyError::PolyError;
};
struct MultivariateInput : PolyError {
  using PolyError::PolyError;
};

/// A variable identifier. Ordering and equality follow the name.
struct Var {
  std::string name;
  auto operator<=>(const Var&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<Ring>;

/// Registry of variables for one polynomial ring over the integers.
/// Variables are identified by name; each is either ordinary or
/// Laurent-invertible (negative exponents allowed). Registration is
/// idempotent and thread-safe.
class Ring {
 public:
  static RingPtr create();

  Var var(const std::string& name);          // ordinary variable
  Var laurent_var(const std::string& name);  // invertible variable
  bool is_laurent(const std::string& name) const;
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  Ring() = default;
  mutable std::mutex mu_;
  std::map<std::string, bool> vars_;  // name -> laurent flag
};

/// Exponent vector: variable names (sorted) with nonzero integer exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one();
  static Monomial of(const Var& v, int exp = 1);

  Monomial times(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // exponent subtraction
  Monomial pow(int k) const;
  /// componentwise o <= *this with all differences >= 0
  bool divisible_by(const Monomial& o) const;

  int exponent(const std::string& name) const;  // 0 when absent
  long long total_degree() const;
  bool is_one() const { return entries_.empty(); }
  const std::vector<std::pair<std::string, int>>& entries() const {
    return entries_;
  }

  bool operator==(const Monomial&) const = default;
  std::string to_string() const;  // "" for the unit monomial

 private:
  friend class Poly;
  // sorted by name, exponents nonzero
  std::vector<std::pair<std::string, int>> entries_;
};

/// Graded-lexicographic comparison, highest first: larger total degree wins,
/// ties broken by exponents on the alphabetically earliest differing variable.
struct MonoGradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate (optionally Laurent) polynomial with cpp_int
/// coefficients, kept in canonical form: no zero coefficients, terms ordered
/// graded-lex descending, negative exponents only on Laurent variables of the
/// owning ring. Values are immutable; every operation returns a fresh Poly.
class Poly {
 public:
  using TermMap = std::map<Monomial, Int, MonoGradedLexDesc>;

  Poly() = default;  // zero over no particular ring

  static Poly zero(RingPtr ring = nullptr);
  static Poly constant(Int c, RingPtr ring = nullptr);
  static Poly variable(const RingPtr& ring, const std::string& name);
  static Poly monomial(const RingPtr& ring, const Monomial& m, Int coeff);
  static Poly from_terms(RingPtr ring, TermMap terms);  // validates

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::optional<Int> as_constant() const;  // engaged iff constant (incl. zero)

  const TermMap& terms() const { return terms_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t term_count() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator+(const Int& c) const;
  Poly operator-(const Int& c) const;
  Poly operator*(const Int& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;  // k < 0 only for invertible polynomials

  /// Exact quotient in the ring; nullopt when none exists.
  std::optional<Poly> try_exact_div(const Poly& d) const;
  Poly exact_div(const Poly& d) const;  // throws DivisionFailure

  /// Multiplicative inverse, when *this is a unit: +-1 times a monomial in
  /// Laurent variables only.
  std::optional<Poly> try_invert() const;
  Poly inverse() const;  // throws DivisionFailure

  /// Simultaneous substitution of variables by polynomials over the same
  /// ring (or constants). Negative powers require an invertible image.
  Poly substitute(const std::map<std::string, Poly>& images) const;
  Poly substitute(const std::string& name, const Poly& image) const;

  std::set<std::string> variables() const;
  int degree_in(const std::string& name) const;        // max exponent, 0 if absent
  int min_exponent_in(const std::string& name) const;  // min over terms, 0 if absent
  long long total_degree() const;  // of the leading term; 0 for zero poly

  /// Coefficients with respect to one variable: exponent -> coefficient
  /// (a polynomial in the remaining variables).
  std::map<int, Poly> coeffs_in(const std::string& name) const;

  /// Integer content (gcd of coefficients, nonnegative; 0 for the zero poly).
  Int content() const;

  double eval_double(const std::map<std::string, double>& point) const;

  std::string to_string() const;
  static Poly parse(const RingPtr& ring, const std::string& text);

 private:
  Poly(RingPtr ring, TermMap terms, bool validate);
  void validate_laurent() const;
  static RingPtr unify(const RingPtr& a, const RingPtr& b);

  RingPtr ring_;
  TermMap terms_;
};

Poly operator*(const Int& c, const Poly& p);

/// Gcd of univariate (or constant) polynomials over the integers via the
/// primitive polynomial remainder sequence; result has a positive leading
/// coefficient. Laurent inputs are reduced by their monomial content first.
/// Throws MultivariateInput when the inputs involve two or more variables.
Poly gcd_univariate(const Poly& a, const Poly& b);

}  // namespace snfmom
