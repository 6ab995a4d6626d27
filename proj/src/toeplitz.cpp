#include "snfmom/toeplitz.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "snfmom/qfun.hpp"

namespace snfmom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> to_strings(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

RecurrenceSpec symbolic_laurent_spec(int max_n) {
  auto r = Ring::create();
  for (int i = 0; i <= max_n; ++i) r->laurent_var("b" + std::to_string(i));
  for (int i = 1; i <= max_n; ++i) r->var("l" + std::to_string(i));
  return RecurrenceSpec{
      r, "symbolic-laurent",
      [r](int n) { return Poly::variable(r, "b" + std::to_string(n)); },
      [r](int n) { return Poly::variable(r, "l" + std::to_string(n)); }};
}

RecurrenceSpec schroeder_spec() {
  auto r = Ring::create();
  Var q = r->var("q");
  return RecurrenceSpec{
      r, "schroder", [r](int) { return Poly::constant(1, r); },
      [r, q](int n) { return Poly::monomial(r, Monomial::of(q, n - 1), 1); }};
}

// ------------------------------------------------------ ToeplitzFunctional

ToeplitzFunctional::ToeplitzFunctional(RecurrenceSpec spec)
    : spec_(std::move(spec)) {
  pos_moments_.push_back(Poly::constant(1, spec_.ring));
  neg_moments_.push_back(Poly::constant(1, spec_.ring));
}

const Poly& ToeplitzFunctional::b(int n) {
  while (static_cast<int>(bs_.size()) <= n) {
    bs_.push_back(spec_.b(static_cast<int>(bs_.size())));
  }
  return bs_[static_cast<std::size_t>(n)];
}

const Poly& ToeplitzFunctional::l(int n) {
  if (ls_.empty()) ls_.push_back(Poly::zero(spec_.ring));  // unused index 0
  while (static_cast<int>(ls_.size()) <= n) {
    ls_.push_back(spec_.lambda(static_cast<int>(ls_.size())));
  }
  return ls_[static_cast<std::size_t>(n)];
}

const Poly& ToeplitzFunctional::inv_b(int n) {
  while (static_cast<int>(inv_bs_.size()) <= n) {
    inv_bs_.push_back(b(static_cast<int>(inv_bs_.size())).inverse());
  }
  return inv_bs_[static_cast<std::size_t>(n)];
}

// Dynamic program over path prefixes of one target span, counted in
// half-units so that rises and falls advance one state and level steps two
// (hence the prev/cur pair). States that cannot return to the axis within
// the remaining span are pruned, which also keeps every height within the
// range where the weight functions are defined.
Poly ToeplitzFunctional::run(int n, bool barred) {
  std::vector<Poly> prev, cur;
  int s = 0;
  if (barred) {  // forced initial level step, two half-units long
    cur = {b(0)};
    s = 2;
  } else {
    cur = {Poly::constant(1, spec_.ring)};
  }
  for (; s < 2 * n; ++s) {
    int hmax = 2 * n - (s + 1);  // farthest height that can still return
    std::vector<Poly> next(
        static_cast<std::size_t>(
            std::min(static_cast<int>(cur.size()), hmax)) +
            1,
        Poly::zero(spec_.ring));
    for (int h = 0; h < static_cast<int>(cur.size()); ++h) {
      const Poly& w = cur[static_cast<std::size_t>(h)];
      if (w.is_zero()) continue;
      if (h + 1 <= hmax) next[static_cast<std::size_t>(h) + 1] += w;  // rise
      if (h >= 1) {  // fall from height h
        next[static_cast<std::size_t>(h) - 1] +=
            barred ? w * l(h) : w * l(h) * inv_b(h - 1) * inv_b(h);
      }
    }
    for (int h = 0; h < static_cast<int>(prev.size()) && h <= hmax; ++h) {
      const Poly& w = prev[static_cast<std::size_t>(h)];
      if (w.is_zero()) continue;  // level step, two half-units
      next[static_cast<std::size_t>(h)] += barred ? w * b(h) : w * inv_b(h);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur[0];
}

const Poly& ToeplitzFunctional::moment(int n) {
  std::vector<Poly>& memo = n >= 0 ? pos_moments_ : neg_moments_;
  int m = n >= 0 ? n : -n;
  while (static_cast<int>(memo.size()) <= m) {
    memo.push_back(run(static_cast<int>(memo.size()), n < 0));
  }
  return memo[static_cast<std::size_t>(m)];
}

Poly ToeplitzFunctional::apply(const std::vector<Poly>& zcoeffs, int low) {
  Poly out = Poly::zero(spec_.ring);
  for (std::size_t k = 0; k < zcoeffs.size(); ++k) {
    if (zcoeffs[k].is_zero()) continue;
    out += zcoeffs[k] * moment(low + static_cast<int>(k));
  }
  return out;
}

// ------------------------------------------------------------ free helpers

Poly schroder_moment_oracle(const RecurrenceSpec& spec, int n) {
  int m = n >= 0 ? n : -n;
  if (m > 10) {
    throw PolyError("schroder_moment_oracle supports |n| <= 10, got " +
                    std::to_string(n));
  }
  bool barred = n < 0;
  std::vector<Poly> ls{Poly::zero(spec.ring)};
  std::vector<Poly> bs;
  for (int i = 0; i <= m; ++i) {
    bs.push_back(spec.b(i));
    if (i >= 1) ls.push_back(spec.lambda(i));
  }
  std::vector<Poly> inv_bs;
  if (!barred) {
    for (auto& p : bs) inv_bs.push_back(p.inverse());
  }
  Poly total = Poly::zero(spec.ring);
  // rem: remaining horizontal span in half-units
  auto rec = [&](auto&& self, int rem, int h, const Poly& w) -> void {
    if (h > rem) return;  // cannot return to the axis in time
    if (rem == 0) {
      total += w;
      return;
    }
    self(self, rem - 1, h + 1, w);  // rise
    if (h >= 1) {                   // fall
      Poly fw = barred ? w * ls[static_cast<std::size_t>(h)]
                       : w * ls[static_cast<std::size_t>(h)] *
                             inv_bs[static_cast<std::size_t>(h) - 1] *
                             inv_bs[static_cast<std::size_t>(h)];
      self(self, rem - 1, h - 1, fw);
    }
    if (rem >= 2) {  // level
      Poly lw = barred ? w * bs[static_cast<std::size_t>(h)]
                       : w * inv_bs[static_cast<std::size_t>(h)];
      self(self, rem - 2, h, lw);
    }
  };
  if (barred) {
    if (m >= 1) rec(rec, 2 * m - 2, 0, bs[0]);  // forced initial level step
    else total = Poly::constant(1, spec.ring);
  } else {
    rec(rec, 2 * m, 0, Poly::constant(1, spec.ring));
  }
  return total;
}

Poly schroder_path_weight(const RecurrenceSpec& spec,
                          const std::string& steps, bool barred) {
  Poly w = Poly::constant(1, spec.ring);
  int h = 0;
  for (char c : steps) {
    switch (c) {
      case 'N':
        ++h;
        break;
      case 'S':
        if (h == 0) throw PolyError("fall below the axis");
        w = barred ? w * spec.lambda(h)
                   : w * spec.lambda(h) * spec.b(h - 1).inverse() *
                         spec.b(h).inverse();
        --h;
        break;
      case 'E':
        w = barred ? w * spec.b(h) : w * spec.b(h).inverse();
        break;
      default:
        throw PolyError(std::string("unknown step '") + c + "'");
    }
  }
  if (h != 0) throw PolyError("path does not end on the axis");
  return w;
}

std::vector<Poly> q_coeffs(const RecurrenceSpec& spec, int n) {
  std::vector<Poly> qm1;  // q_{-1} = 0
  std::vector<Poly> q{Poly::constant(1, spec.ring)};
  for (int k = 0; k < n; ++k) {
    Poly bk = spec.b(k);
    std::vector<Poly> next(q.size() + 1, Poly::zero(spec.ring));
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j + 1] += q[j];       // z q_k
      next[j] -= bk * q[j];      // -b_k q_k
    }
    if (k >= 1) {
      Poly lk = spec.lambda(k);
      for (std::size_t j = 0; j < qm1.size(); ++j) {
        next[j + 1] -= lk * qm1[j];  // -z lambda_k q_{k-1}
      }
    }
    qm1 = std::move(q);
    q = std::move(next);
  }
  return q;
}

std::vector<Poly> partner_coeffs(const RecurrenceSpec& spec, int m) {
  if (m == 0) return {Poly::constant(1, spec.ring)};
  std::vector<Poly> qm = q_coeffs(spec, m);
  std::vector<Poly> qm1 = q_coeffs(spec, m + 1);
  Poly unit = Poly::constant(m % 2 == 0 ? -1 : 1, spec.ring);
  for (int i = 0; i <= m; ++i) unit *= spec.b(i);
  Poly scale = unit.inverse();
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    Poly num = qm1[static_cast<std::size_t>(m - j)];
    if (m - 1 - j >= 0) num -= qm[static_cast<std::size_t>(m - 1 - j)];
    out.push_back(num * scale);
  }
  if (!out.back().is_one()) {
    throw NotMonic("partner polynomial of degree " + std::to_string(m) +
                   " is not monic");
  }
  return out;
}

PolyMatrix toeplitz_matrix(ToeplitzFunctional& fn, int n) {
  PolyMatrix t(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1,
               fn.spec().ring);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          fn.moment(i - j);
    }
  }
  return t;
}

std::vector<Poly> toeplitz_claimed_diagonal(const RecurrenceSpec& spec,
                                            int n) {
  std::vector<Poly> out{Poly::constant(1, spec.ring)};
  for (int k = 1; k <= n; ++k) {
    out.push_back(-(out.back() * spec.lambda(k) * spec.b(k).inverse()));
  }
  return out;
}

VerificationReport verify_biorthogonality(ToeplitzFunctional& fn, int n) {
  auto t0 = Clock::now();
  const RecurrenceSpec& spec = fn.spec();
  VerificationReport rep;
  rep.case_id = spec.name + "-biorthogonality-n" + std::to_string(n);
  rep.rows = rep.cols = static_cast<std::size_t>(n) + 1;
  rep.methods = {"congruence"};
  std::size_t dim = static_cast<std::size_t>(n) + 1;
  PolyMatrix p(dim, dim, spec.ring), q(dim, dim, spec.ring);
  for (int i = 0; i <= n; ++i) {
    auto pc = partner_coeffs(spec, i);
    auto qc = q_coeffs(spec, i);
    for (int k = 0; k <= i; ++k) {
      p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          pc[static_cast<std::size_t>(k)];
      q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          qc[static_cast<std::size_t>(k)];
    }
  }
  PolyMatrix t = toeplitz_matrix(fn, n);
  PolyMatrix lhs = p * t * q.transpose();
  PolyMatrix want = PolyMatrix::diagonal(toeplitz_claimed_diagonal(spec, n));
  rep.claimed = to_strings(want.diagonal_entries());
  rep.extracted = to_strings(lhs.diagonal_entries());
  rep.match = lhs == want;
  if (!rep.match) {
    for (std::size_t i = 0; i < dim && rep.witness.empty(); ++i) {
      for (std::size_t j = 0; j < dim && rep.witness.empty(); ++j) {
        if (lhs.at(i, j) != want.at(i, j)) {
          rep.witness = "entry (" + std::to_string(i) + "," +
                        std::to_string(j) + "): " + lhs.at(i, j).to_string() +
                        " != " + want.at(i, j).to_string();
        }
      }
    }
  }
  rep.runtime_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_toeplitz_snf(ToeplitzFunctional& fn, int n,
                                       const VerifyOptions& opts) {
  const RecurrenceSpec& spec = fn.spec();
  return verify_diagonal_claim(spec.name + "-toeplitz-n" + std::to_string(n),
                               toeplitz_matrix(fn, n),
                               toeplitz_claimed_diagonal(spec, n), opts);
}

PolyMatrix schroeder_cross_matrix(const RingPtr& ring, int n,
                                  const std::string& var) {
  std::vector<Poly> r;
  for (int k = 0; k <= n; ++k) r.push_back(q_schroeder(ring, k, var));
  PolyMatrix out(static_cast<std::size_t>(n) + 1,
                 static_cast<std::size_t>(n) + 1, ring);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      int k = i >= j ? i - j : j - i - 1;
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          r[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

}  // namespace snfmom
