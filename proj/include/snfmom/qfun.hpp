#pragma once

// Standard q-analogue building blocks and small combinatorial number
// helpers used to state claimed diagonals and closed-form moment values.

#include <string>
#include <vector>

#include "snfmom/poly.hpp"

namespace snfmom {

// [n] = 1 + v + v^2 + ... + v^{n-1}; zero for n <= 0.
Poly q_int(const RingPtr& ring, int n, const std::string& var = "q");

// [n]! = [1][2]...[n]; 1 for n <= 0.
Poly q_factorial(const RingPtr& ring, int n, const std::string& var = "q");

// Gaussian binomial [n choose k]; exact division of factorials.
Poly q_binomial(const RingPtr& ring, int n, int k,
                const std::string& var = "q");

// Homogeneous two-base analogue (r^n - s^n)/(r - s) =
// r^{n-1} + r^{n-2} s + ... + s^{n-1}; zero for n <= 0.
Poly q_int_two(const RingPtr& ring, int n, const std::string& r,
               const std::string& s);

// [1][3][5]...[2n-1]; 1 for n <= 0.
Poly q_double_factorial_odd(const RingPtr& ring, int n,
                            const std::string& var = "q");

// C_0 .. C_nmax with C_{n+1} = sum_k v^k C_k C_{n-k}.
std::vector<Poly> q_catalan_upto(const RingPtr& ring, int nmax,
                                 const std::string& var = "q");

// sum_k binom(n, 2k) C_k(v).
Poly q_motzkin(const RingPtr& ring, int n, const std::string& var = "q");

// S(n,k) analogue via S(n,k) = S(n-1,k-1) + [k] S(n-1,k).
Poly q_stirling(const RingPtr& ring, int n, int k,
                const std::string& var = "q");

// sum_k S_q(n,k) a^k.
Poly bell_sum(const RingPtr& ring, int n, const std::string& avar = "a",
              const std::string& qvar = "q");

// sum_k binom(n+k, 2k) C_k(v); the weighted lattice-path count whose values
// at v = 1 are 1, 2, 6, 22, 90, ...
Poly q_schroeder(const RingPtr& ring, int n, const std::string& var = "q");

// Exact integer helpers.
Int binomial_int(long long n, long long k);
Int factorial_int(int n);
Int stirling2_int(int n, int k);

}  // namespace snfmom
