#include "snfmom/qfun.hpp"

namespace snfmom {

Poly q_int(const RingPtr& ring, int n, const std::string& var) {
  Poly out = Poly::zero(ring);
  Var v = ring->var(var);
  for (int e = 0; e < n; ++e) out += Poly::monomial(ring, Monomial::of(v, e), 1);
  return out;
}

Poly q_factorial(const RingPtr& ring, int n, const std::string& var) {
  Poly out = Poly::constant(1, ring);
  for (int j = 2; j <= n; ++j) out *= q_int(ring, j, var);
  return out;
}

Poly q_binomial(const RingPtr& ring, int n, int k, const std::string& var) {
  if (k < 0 || k > n) return Poly::zero(ring);
  Poly num = Poly::constant(1, ring);
  for (int j = n - k + 1; j <= n; ++j) num *= q_int(ring, j, var);
  return num.exact_div(q_factorial(ring, k, var));
}

Poly q_int_two(const RingPtr& ring, int n, const std::string& r,
               const std::string& s) {
  Poly out = Poly::zero(ring);
  Var vr = ring->var(r), vs = ring->var(s);
  for (int i = 0; i < n; ++i) {
    out += Poly::monomial(ring, Monomial::of(vr, n - 1 - i).times(Monomial::of(vs, i)), 1);
  }
  return out;
}

Poly q_double_factorial_odd(const RingPtr& ring, int n,
                            const std::string& var) {
  Poly out = Poly::constant(1, ring);
  for (int j = 1; j <= n; ++j) out *= q_int(ring, 2 * j - 1, var);
  return out;
}

std::vector<Poly> q_catalan_upto(const RingPtr& ring, int nmax,
                                 const std::string& var) {
  std::vector<Poly> c{Poly::constant(1, ring)};
  Var v = ring->var(var);
  for (int n = 0; n + 1 <= nmax; ++n) {
    Poly next = Poly::zero(ring);
    for (int k = 0; k <= n; ++k) {
      next += Poly::monomial(ring, Monomial::of(v, k), 1) * c[k] * c[n - k];
    }
    c.push_back(next);
  }
  return c;
}

Poly q_motzkin(const RingPtr& ring, int n, const std::string& var) {
  auto c = q_catalan_upto(ring, n / 2, var);
  Poly out = Poly::zero(ring);
  for (int k = 0; 2 * k <= n; ++k) {
    out += c[k] * binomial_int(n, 2 * k);
  }
  return out;
}

Poly q_stirling(const RingPtr& ring, int n, int k, const std::string& var) {
  if (n == 0 || k <= 0 || k > n) {
    return Poly::constant(n == 0 && k == 0 ? 1 : 0, ring);
  }
  // row-by-row table
  std::vector<Poly> row{Poly::constant(1, ring)};  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    std::vector<Poly> next(static_cast<std::size_t>(m) + 1,
                           Poly::zero(ring));
    for (int j = 1; j <= m; ++j) {
      if (j - 1 < static_cast<int>(row.size())) next[j] += row[j - 1];
      if (j < static_cast<int>(row.size())) {
        next[j] += q_int(ring, j, var) * row[j];
      }
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Poly bell_sum(const RingPtr& ring, int n, const std::string& avar,
              const std::string& qvar) {
  Poly out = Poly::zero(ring);
  Var a = ring->var(avar);
  for (int k = 0; k <= n; ++k) {
    out += Poly::monomial(ring, Monomial::of(a, k), 1) *
           q_stirling(ring, n, k, qvar);
  }
  return out;
}

Poly q_schroeder(const RingPtr& ring, int n, const std::string& var) {
  auto c = q_catalan_upto(ring, n, var);
  Poly out = Poly::zero(ring);
  for (int k = 0; k <= n; ++k) {
    out += c[k] * binomial_int(n + k, 2 * k);
  }
  return out;
}

Int binomial_int(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (long long i = 0; i < k; ++i) {
    out = out * Int(n - i) / Int(i + 1);
  }
  return out;
}

Int factorial_int(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Int stirling2_int(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k <= 0 || k > n) return 0;
  std::vector<Int> row{1};  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
      if (j - 1 < static_cast<int>(row.size())) next[j] += row[j - 1];
      if (j < static_cast<int>(row.size())) next[j] += Int(j) * row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace snfmom
