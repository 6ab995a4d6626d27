#pragma once

// Dense matrices over a sparse multivariate polynomial ring, with the exact
// linear algebra needed to certify diagonal forms: fraction-free
// determinants, unitriangular-times-diagonal extraction, divisibility-chain
// checks, and a gcd-of-minors oracle.

#include <cstddef>
#include <string>
#include <vector>

#include "snfmom/poly.hpp"

namespace snfmom {

struct BudgetExceeded : PolyError {
  using PolyError::PolyError;
};
struct NotAPermutation : PolyError {
  using PolyError::PolyError;
};
struct ShapeMismatch : PolyError {
  using PolyError::PolyError;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring = nullptr);

  static PolyMatrix identity(std::size_t n, RingPtr ring = nullptr);
  static PolyMatrix from_rows(std::vector<std::vector<Poly>> rows);
  static PolyMatrix diagonal(const std::vector<Poly>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RingPtr ring() const { return ring_; }

  Poly& at(std::size_t i, std::size_t j);
  const Poly& at(std::size_t i, std::size_t j) const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;
  bool is_zero() const;

  PolyMatrix submatrix(const std::vector<std::size_t>& ri,
                       const std::vector<std::size_t>& ci) const;
  std::vector<Poly> diagonal_entries() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  RingPtr ring_;
  std::vector<Poly> data_;
};

// Fraction-free determinant (Bareiss elimination with row pivoting).
Poly det_bareiss(const PolyMatrix& a);

// Cofactor-expansion determinant; exponential, for small matrices and as an
// independent cross-check.
Poly det_cofactor(const PolyMatrix& a);

// A = L * D * U with L lower unitriangular, U upper unitriangular, D
// diagonal, all over the same ring. `exact` is false when no such
// factorization with this leading structure exists; `witness` then explains
// the first failure.
struct LduResult {
  PolyMatrix l, d, u;
  bool exact = false;
  std::string witness;
};
LduResult ldu_extract(const PolyMatrix& a);

// a | b in the polynomial ring, with divides(0, b) true only for b == 0.
bool divides(const Poly& a, const Poly& b);

// Ascending divisibility chain d[0] | d[1] | ... (zeros only at the end).
bool check_chain(const std::vector<Poly>& d);

// Matches an extracted diagonal against a claimed one up to order and unit
// (sign) factors, and records whether the claimed order forms a divisibility
// chain. Throws NotAPermutation when no matching exists.
struct SsnfCertificate {
  std::vector<Poly> diagonal;     // claimed entries, in claimed order
  std::vector<std::size_t> perm;  // diagonal[i] == sign_fix[i] * extracted[perm[i]]
  std::vector<int> sign_fix;
  bool chain_ok = false;
};
SsnfCertificate reorder_to_ssnf(const std::vector<Poly>& extracted,
                                const std::vector<Poly>& claimed);

// gcd of all k-by-k minors, sign-normalized. Univariate matrices only
// (throws MultivariateInput). Throws BudgetExceeded when the number of
// minors C(rows,k)*C(cols,k) exceeds `budget`. Honors the SNFMOM_THREADS
// environment variable (default 1) with a deterministic chunked fold.
Poly minor_gcd(const PolyMatrix& a, std::size_t k,
               long long budget = 2000000);

}  // namespace snfmom
