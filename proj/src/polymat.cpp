#include "snfmom/polymat.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace snfmom {

namespace {

RingPtr fold_ring(RingPtr acc, const RingPtr& r) {
  if (!acc) return r;
  if (r && r != acc) throw RingMismatch("matrix entries from different rings");
  return acc;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)) {
  data_.assign(rows_ * cols_, Poly::zero(ring_));
}

PolyMatrix PolyMatrix::identity(std::size_t n, RingPtr ring) {
  PolyMatrix m(n, n, std::move(ring));
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = Poly::constant(1, m.ring_);
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Poly>> rows) {
  PolyMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows[0].size();
  for (auto& row : rows) {
    if (row.size() != m.cols_) throw ShapeMismatch("ragged rows");
    for (auto& p : row) {
      m.ring_ = fold_ring(m.ring_, p.ring());
      m.data_.push_back(std::move(p));
    }
  }
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& d) {
  RingPtr rg;
  for (auto& p : d) rg = fold_ring(rg, p.ring());
  PolyMatrix m(d.size(), d.size(), rg);
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("index out of range");
  return data_[i * cols_ + j];
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("index out of range");
  return data_[i * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(cols_, rows_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) {
    throw ShapeMismatch("product shapes " + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + " and " +
                        std::to_string(o.rows_) + "x" +
                        std::to_string(o.cols_));
  }
  PolyMatrix m(rows_, o.cols_, fold_ring(ring_, o.ring_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& bkj = o.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeMismatch("difference of unequal shapes");
  }
  PolyMatrix m(rows_, cols_, fold_ring(ring_, o.ring_));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m.data_[i] = data_[i] - o.data_[i];
  }
  return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!(data_[i] == o.data_[i])) return false;
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& ri,
                                 const std::vector<std::size_t>& ci) const {
  PolyMatrix m(ri.size(), ci.size(), ring_);
  for (std::size_t i = 0; i < ri.size(); ++i) {
    for (std::size_t j = 0; j < ci.size(); ++j) {
      m.at(i, j) = at(ri[i], ci[j]);
    }
  }
  return m;
}

std::vector<Poly> PolyMatrix::diagonal_entries() const {
  std::vector<Poly> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    d.push_back(at(i, i));
  }
  return d;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Poly det_bareiss(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1, a.ring());
  PolyMatrix w = a;
  int sign = 1;
  Poly prev = Poly::constant(1, a.ring());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!w.at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == k) return Poly::zero(a.ring());
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(pivot, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num.exact_div(prev);
      }
      w.at(i, k) = Poly::zero(a.ring());
    }
    prev = w.at(k, k);
  }
  Poly d = w.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Poly det_cofactor(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1, a.ring());
  if (n == 1) return a.at(0, 0);
  Poly out = Poly::zero(a.ring());
  std::vector<std::size_t> cols;
  for (std::size_t j = 1; j < n; ++j) cols.push_back(j);
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t t = 0; t < n; ++t) {
      if (t != j) sub.push_back(t);
    }
    Poly minor = det_cofactor(a.submatrix(rows, sub));
    Poly term = a.at(0, j) * minor;
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

LduResult ldu_extract(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("ldu of a non-square matrix");
  std::size_t n = a.rows();
  LduResult out;
  out.l = PolyMatrix::identity(n, a.ring());
  out.u = PolyMatrix::identity(n, a.ring());
  out.d = PolyMatrix(n, n, a.ring());
  out.exact = true;
  PolyMatrix r = a;
  auto pos = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Poly p = r.at(k, k);
    if (p.is_zero()) {
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!r.at(i, k).is_zero()) {
          out.exact = false;
          out.witness = "zero pivot at step " + std::to_string(k) +
                        " with nonzero residual at " + pos(i, k);
          return out;
        }
        if (!r.at(k, i).is_zero()) {
          out.exact = false;
          out.witness = "zero pivot at step " + std::to_string(k) +
                        " with nonzero residual at " + pos(k, i);
          return out;
        }
      }
      continue;  // d_kk stays zero
    }
    out.d.at(k, k) = p;
    for (std::size_t i = k + 1; i < n; ++i) {
      auto q = r.at(i, k).try_exact_div(p);
      if (!q) {
        out.exact = false;
        out.witness = "no exact quotient at " + pos(i, k) + ": " +
                      r.at(i, k).to_string() + " by " + p.to_string();
        return out;
      }
      out.l.at(i, k) = *q;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      auto q = r.at(k, j).try_exact_div(p);
      if (!q) {
        out.exact = false;
        out.witness = "no exact quotient at " + pos(k, j) + ": " +
                      r.at(k, j).to_string() + " by " + p.to_string();
        return out;
      }
      out.u.at(k, j) = *q;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (out.l.at(i, k).is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (r.at(k, j).is_zero()) continue;
        r.at(i, j) -= out.l.at(i, k) * r.at(k, j);
      }
    }
  }
  return out;
}

bool divides(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero();
  return b.try_exact_div(a).has_value();
}

bool check_chain(const std::vector<Poly>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (!divides(d[i], d[i + 1])) return false;
  }
  return true;
}

SsnfCertificate reorder_to_ssnf(const std::vector<Poly>& extracted,
                                const std::vector<Poly>& claimed) {
  if (extracted.size() != claimed.size()) {
    throw NotAPermutation("diagonal lengths differ");
  }
  SsnfCertificate cert;
  cert.diagonal = claimed;
  std::vector<bool> used(extracted.size(), false);
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < extracted.size() && !found; ++j) {
      if (used[j]) continue;
      if (extracted[j] == claimed[i]) {
        cert.perm.push_back(j);
        cert.sign_fix.push_back(1);
        used[j] = found = true;
      } else if (-extracted[j] == claimed[i]) {
        cert.perm.push_back(j);
        cert.sign_fix.push_back(-1);
        used[j] = found = true;
      }
    }
    if (!found) {
      throw NotAPermutation("no unused extracted entry matches claimed entry " +
                            std::to_string(i) + " = " + claimed[i].to_string());
    }
  }
  cert.chain_ok = check_chain(claimed);
  return cert;
}

namespace {

long long binom_ll(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long long out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out = out * static_cast<long long>(n - i) / static_cast<long long>(i + 1);
    if (out > (1LL << 62) / 4) return 1LL << 62;  // saturate
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i-- > 0) {
      if (c[i] + (k - i) < n) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

int thread_count() {
  const char* env = std::getenv("SNFMOM_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t >= 1 ? t : 1;
}

}  // namespace

Poly minor_gcd(const PolyMatrix& a, std::size_t k, long long budget) {
  if (k == 0 || k > a.rows() || k > a.cols()) {
    throw ShapeMismatch("minor order out of range");
  }
  std::set<std::string> vars;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (auto& v : a.at(i, j).variables()) vars.insert(v);
    }
  }
  if (vars.size() > 1) {
    throw MultivariateInput("minor gcd requires a univariate matrix");
  }
  long long total = binom_ll(a.rows(), k) * binom_ll(a.cols(), k);
  if (total > budget) {
    throw BudgetExceeded("would enumerate " + std::to_string(total) +
                         " minors, budget " + std::to_string(budget));
  }
  auto rc = combinations(a.rows(), k);
  auto cc = combinations(a.cols(), k);
  const std::size_t nr = rc.size(), nc = cc.size(), count = nr * nc;

  auto one_minor = [&](std::size_t flat) {
    PolyMatrix sub = a.submatrix(rc[flat / nc], cc[flat % nc]);
    return k <= 3 ? det_cofactor(sub) : det_bareiss(sub);
  };

  int threads = thread_count();
  if (threads <= 1 || count < 64) {
    Poly g = Poly::zero(a.ring());
    for (std::size_t f = 0; f < count; ++f) {
      g = gcd_univariate(g, one_minor(f));
      if (g.is_one()) break;
    }
    return g;
  }

  std::vector<Poly> partial(static_cast<std::size_t>(threads),
                            Poly::zero(a.ring()));
  std::atomic<bool> settled{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::size_t lo = count * t / threads, hi = count * (t + 1) / threads;
      Poly g = Poly::zero(a.ring());
      for (std::size_t f = lo; f < hi && !settled.load(); ++f) {
        g = gcd_univariate(g, one_minor(f));
        if (g.is_one()) settled.store(true);
      }
      partial[static_cast<std::size_t>(t)] = std::move(g);
    });
  }
  for (auto& th : pool) th.join();
  if (settled.load()) return Poly::constant(1, a.ring());
  Poly g = Poly::zero(a.ring());
  for (auto& p : partial) g = gcd_univariate(g, p);
  return g;
}

}  // namespace snfmom
