#pragma once

// Toeplitz matrices of two-sided moment sequences and their
// unitriangular-diagonal-unitriangular structure.
//
// A weight system (b_n)_{n>=0}, (lambda_n)_{n>=1} with every b_n invertible
// defines monic polynomials
//   q_{n+1}(z) = (z - b_n) q_n(z) - z lambda_n q_{n-1}(z)
// and a linear functional L on Laurent polynomials in z with L(1) = 1 and
// L(z^m q_n(1/z)) = 0 for 0 <= m < n. Its two-sided moments mu_k = L(z^k)
// are weighted counts of Schroder paths (up, level, down steps of horizontal
// span 1/2, 1, 1/2 staying at or above the axis):
//   mu_n   (n >= 0): paths of span n, weights up 1, level at height h 1/b_h,
//                    down from height h lambda_h/(b_{h-1} b_h);
//   mu_{-n} (n > 0): paths of span n starting with a level step, weights
//                    up 1, level at height h b_h, down from height h
//                    lambda_h.
// The Toeplitz matrix (mu_{i-j}) then factors as P^{-1} D Q^{-t} with P, Q
// unitriangular and D = diag((-1)^k lambda_1..lambda_k / (b_1..b_k)).

#include <memory>
#include <string>
#include <vector>

#include "snfmom/moments.hpp"
#include "snfmom/polymat.hpp"
#include "snfmom/report.hpp"

namespace snfmom {

// Fully symbolic weights: Laurent-invertible b0..b_max, ordinary l1..l_max.
RecurrenceSpec symbolic_laurent_spec(int max_n);

// b = 1, lambda_n = q^(n-1): moments are the q-analogues of the large
// Schroder numbers.
RecurrenceSpec schroeder_spec();

// Two-sided moment cache. Requires every b_n it touches to be invertible
// (DivisionFailure otherwise).
class ToeplitzFunctional {
 public:
  explicit ToeplitzFunctional(RecurrenceSpec spec);
  const Poly& moment(int n);  // mu_n, any sign of n
  const RecurrenceSpec& spec() const { return spec_; }
  // L applied to sum_k zcoeffs[k] z^(low+k).
  Poly apply(const std::vector<Poly>& zcoeffs, int low);

 private:
  RecurrenceSpec spec_;
  std::vector<Poly> pos_moments_, neg_moments_;  // neg_moments_[n] = mu_{-n}
  std::vector<Poly> bs_, ls_, inv_bs_;
  const Poly& b(int n);
  const Poly& l(int n);
  const Poly& inv_b(int n);
  Poly run(int n, bool barred);  // one bounded path-weight recursion
};

// mu_n by explicit enumeration of all step sequences; |n| <= 10.
Poly schroder_moment_oracle(const RecurrenceSpec& spec, int n);

// Weight of one explicit path, steps 'N' (up), 'E' (level), 'S' (down);
// barred selects the polynomial weights used for negative moments.
Poly schroder_path_weight(const RecurrenceSpec& spec,
                          const std::string& steps, bool barred);

// Ascending z-coefficients of q_n (monic, degree n).
std::vector<Poly> q_coeffs(const RecurrenceSpec& spec, int n);

// Ascending z-coefficients of the partner polynomial p_m (monic, degree m):
// p_0 = 1 and p_m(z) = (z^m q_{m+1}(1/z) - z^{m-1} q_m(1/z)) scaled by
// the unit (-1)^(m+1) b_0 .. b_m.
std::vector<Poly> partner_coeffs(const RecurrenceSpec& spec, int m);

PolyMatrix toeplitz_matrix(ToeplitzFunctional& fn, int n);  // (mu_{i-j})

// d_k = (-1)^k lambda_1..lambda_k (b_1..b_k)^{-1} for k = 0..n.
std::vector<Poly> toeplitz_claimed_diagonal(const RecurrenceSpec& spec,
                                            int n);

// Checks L(p_m(z) q_n(1/z)) = d_m delta_{mn} for 0 <= m, n <= N, and that
// P T Q^t equals diag(d) as a matrix identity.
VerificationReport verify_biorthogonality(ToeplitzFunctional& fn, int n);

// Extracts T = L D U and compares D to the claimed alternating diagonal.
VerificationReport verify_toeplitz_snf(ToeplitzFunctional& fn, int n,
                                       const VerifyOptions& opts = {});

// The same matrix written over Z[q] from the sequence R_k(q) of q-weighted
// Schroder path counts: entry (i,j) = R_{i-j}(q) on or below the diagonal,
// R_{j-i-1}(q) above it.
PolyMatrix schroeder_cross_matrix(const RingPtr& ring, int n,
                                  const std::string& var = "q");

}  // namespace snfmom
