#pragma once

// Moment sequences of three-term recurrences, their Hankel matrices, and
// verification of the claimed unitriangular-diagonal-unitriangular structure
// of those matrices.
//
// A weight system (b_n)_{n>=0}, (lambda_n)_{n>=1} defines monic polynomials
//   p_{n+1}(x) = (x - b_n) p_n(x) - lambda_n p_{n-1}(x)
// and a linear functional L with L(p_m p_n) = delta_{mn} lambda_1...lambda_n.
// The n-th moment is mu_n = L(x^n), a weighted count of length-n paths with
// steps up (weight 1), flat at height h (weight b_h), and down to height h
// (weight lambda_{h+1}).

#include <functional>
#include <string>
#include <vector>

#include "snfmom/polymat.hpp"
#include "snfmom/report.hpp"

namespace snfmom {

struct NonzeroB : PolyError {
  using PolyError::PolyError;
};
struct NotMonic : PolyError {
  using PolyError::PolyError;
};
struct DegreeMismatch : PolyError {
  using PolyError::PolyError;
};

struct RecurrenceSpec {
  RingPtr ring;
  std::string name;
  std::function<Poly(int)> b;       // b_n for n >= 0
  std::function<Poly(int)> lambda;  // lambda_n for n >= 1
};

// Fully symbolic weights b0, b1, ... and l1, l2, ... on a fresh ring.
RecurrenceSpec symbolic_spec(int max_n);

class MomentFunctional {
 public:
  explicit MomentFunctional(RecurrenceSpec spec);
  const Poly& moment(int n);  // mu_n
  const RecurrenceSpec& spec() const { return spec_; }
  // L applied to a polynomial in x given by ascending coefficients.
  Poly apply(const std::vector<Poly>& xcoeffs);

 private:
  RecurrenceSpec spec_;
  std::vector<std::vector<Poly>> rows_;  // path-weight row vectors
  std::vector<Poly> moments_;
  std::vector<Poly> bs_, ls_;
  const Poly& b(int n);
  const Poly& l(int n);
};

// Ascending coefficients of p_n (monic, degree n).
std::vector<Poly> poly_coeffs(const RecurrenceSpec& spec, int n);

// mu_n by explicit enumeration of all step sequences; n <= 14.
Poly motzkin_moment_oracle(const RecurrenceSpec& spec, int n);

// Index scheme of a moment matrix: entry (i,j) holds mu at
// none: i+j, one: i+j+1, even: 2i+2j, odd: 2i+2j+2.
enum class Shift { none, one, even, odd };

PolyMatrix hankel(MomentFunctional& fn, int n, Shift s = Shift::none);

// Cumulative products s_k = lambda_1 ... lambda_k for k = 0..n.
std::vector<Poly> lambda_products(const RecurrenceSpec& spec, int n);

// The diagonal claimed for hankel(fn, n, shift): s_0..s_n for none,
// s_0, s_2, .., s_{2n} for even, s_1, s_3, .., s_{2n+1} for odd.
// Shift::one carries no general claim (throws PolyError).
std::vector<Poly> claimed_shift_diagonal(const RecurrenceSpec& spec, int n,
                                         Shift s);

struct VerifyOptions {
  long long minor_budget = 2000000;
  bool minor_check = true;
  int max_minor_order = 4;
  bool check_product = true;
  std::size_t product_dim_limit = 16;
};

// Generic engine: extract A = L D U, compare D against the claimed diagonal
// entrywise, check the divisibility chain, optionally re-multiply L D U and
// cross-check gcds of k-by-k minors against prefix products of the claim.
VerificationReport verify_diagonal_claim(const std::string& case_id,
                                         const PolyMatrix& a,
                                         const std::vector<Poly>& claimed,
                                         const VerifyOptions& opts = {});

VerificationReport verify_hankel_snf(MomentFunctional& fn, int n, Shift s,
                                     const std::vector<Poly>& claimed,
                                     const VerifyOptions& opts = {});

// P H P^t == diag(s_0..s_n) with P the coefficient matrix of p_0..p_n.
VerificationReport orthogonality_check(MomentFunctional& fn, int n);

// When every b_n vanishes, moments interleave with those of two derived
// weight systems (the classical splitting into even and odd parts).
struct OddEvenSplit {
  RecurrenceSpec even, odd;
};
OddEvenSplit odd_even_split(const RecurrenceSpec& spec, int check_upto = 10);

// Checks, for one symbolic or concrete spec with b == 0:
//  - mu_{2k} equals the k-th derived even moment, mu_{2k+1} == 0,
//  - mu_{2k+2} equals lambda_1 times the k-th derived odd moment,
//  - the even- and odd-indexed moment matrices carry the claimed diagonals,
//  - det factorizes as the product of the even and odd determinants.
VerificationReport verify_eo_theorem(const RecurrenceSpec& spec, int n);

// --------------------------------------------------------------- Gram

// G_ij = L(Y_i Z_j) for polynomial bases given by ascending x-coefficients.
// Y[i] and Z[i] must be monic of degree i (NotMonic / DegreeMismatch).
PolyMatrix gram_matrix(MomentFunctional& fn,
                       const std::vector<std::vector<Poly>>& y,
                       const std::vector<std::vector<Poly>>& z);

// Verifies that gram_matrix(fn, y, z) carries diag(s_0..s_n) regardless of
// the choice of monic bases.
VerificationReport verify_generalized_gram(
    MomentFunctional& fn, const std::vector<std::vector<Poly>>& y,
    const std::vector<std::vector<Poly>>& z, const VerifyOptions& opts = {});

// --------------------------------------------- structured Vandermonde

// M_ij = g_i([j]_q) with g_i(x) = sum_k A_ik a^k x^k, A lower unitriangular.
PolyMatrix vandermonde_general(const RingPtr& ring, int n, const PolyMatrix& a,
                               const std::string& avar = "a",
                               const std::string& qvar = "q");

// A_ik = binom(i,k), i.e. M_ij = (1 + a[j]_q)^i.
PolyMatrix vandermonde_binomial(const RingPtr& ring, int n,
                                const std::string& avar = "a",
                                const std::string& qvar = "q");

// M_ij = [j+1]_q^i.
PolyMatrix vandermonde_shifted_powers(const RingPtr& ring, int n,
                                      const std::string& qvar = "q");

// diag(a^k q^C(k,2) [k]!_q)  /  diag(q^C(k+1,2) [k]!_q) for the shifted kind.
std::vector<Poly> vandermonde_claimed_diagonal(const RingPtr& ring, int n,
                                               bool shifted,
                                               const std::string& avar = "a",
                                               const std::string& qvar = "q");

// The bases that tie the Vandermonde theorem to the generalized Gram
// theorem over the a-weighted block-counting recurrence: Z_j expands by
// Gaussian binomials, Y_i by Stirling-transformed rows of A.
struct GramBases {
  RecurrenceSpec spec;  // the underlying recurrence (fresh ring, vars a, q)
  std::vector<std::vector<Poly>> y, z;
};
GramBases charlier_gram_bases(int n);
GramBases charlier_gram_bases(int n, const PolyMatrix& a);

// Compares the Vandermonde matrix with the Gram matrix built from
// charlier_gram_bases: both must carry the same claimed diagonal; reports
// whether they even agree entrywise (recorded in extras, not required).
VerificationReport vandermonde_gram_bridge(int n,
                                           const VerifyOptions& opts = {});

}  // namespace snfmom
