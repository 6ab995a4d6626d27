#include "snfmom/young.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "snfmom/families.hpp"
#include "snfmom/moments.hpp"
#include "snfmom/qfun.hpp"

namespace snfmom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string cell_var_name(int u, int v) {
  return "x" + std::to_string(u) + "_" + std::to_string(v);
}

// Grid position of cell c (0-based along the line) of line t.
std::pair<int, int> grid_pos(const Region& r, int t, int c) {
  return r.transposed ? std::make_pair(r.top + c, r.left + t)
                      : std::make_pair(r.top + t, r.left + c);
}

void strip_trailing_empty(std::vector<int>& len) {
  while (!len.empty() && len.back() == 0) len.pop_back();
}

constexpr int kMaxRegionCells = 40;

// Sum over down-closed subsets (per-line prefixes with weakly decreasing
// lengths) of the product of complement weights. `weight(t, c)` is the
// variable attached to cell c of line t.
Poly genfun_impl(const RingPtr& ring, const Region& r,
                 const std::function<Poly(int, int)>& weight) {
  if (r.cell_count() > kMaxRegionCells)
    throw PolyError("region generating function limited to " +
                    std::to_string(kMaxRegionCells) + " cells, got " +
                    std::to_string(r.cell_count()));
  std::vector<int> len = r.len;
  strip_trailing_empty(len);
  const int lines = static_cast<int>(len.size());
  const Poly one = Poly::constant(1, ring);
  if (lines == 0) return one;

  // suffix[t][m] = product of weights of cells m..len[t]-1 of line t
  std::vector<std::vector<Poly>> suffix(lines);
  for (int t = 0; t < lines; ++t) {
    suffix[t].assign(len[t] + 1, one);
    for (int c = len[t] - 1; c >= 0; --c)
      suffix[t][c] = weight(t, c) * suffix[t][c + 1];
  }

  std::vector<std::vector<std::optional<Poly>>> memo(lines);
  for (int t = 0; t < lines; ++t) memo[t].assign(len[t] + 1, std::nullopt);

  std::function<const Poly&(int, int)> rec = [&](int t,
                                                 int cap) -> const Poly& {
    cap = std::min(cap, len[t]);
    if (memo[t][cap]) return *memo[t][cap];
    Poly acc = Poly::zero(ring);
    for (int m = 0; m <= cap; ++m) {
      if (t + 1 < lines)
        acc += suffix[t][m] * rec(t + 1, m);
      else
        acc += suffix[t][m];
    }
    memo[t][cap] = std::move(acc);
    return *memo[t][cap];
  };
  return rec(0, len[0]);
}

Poly cell_weight(const RingPtr& ring, const Region& r, int t, int c) {
  auto [u, v] = grid_pos(r, t, c);
  return Poly::variable(ring, cell_var_name(u, v));
}

}  // namespace

YoungShape::YoungShape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      throw PolyError("shape rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw PolyError("shape rows must be weakly decreasing");
  }
}

int YoungShape::cell_count() const {
  int total = 0;
  for (int r : rows_) total += r;
  return total;
}

bool YoungShape::contains(int u, int v) const {
  return u >= 1 && v >= 1 && u <= row_count() && v <= rows_[u - 1];
}

std::vector<int> YoungShape::conjugate() const {
  std::vector<int> out(col_count(), 0);
  for (int v = 1; v <= col_count(); ++v)
    for (int u = 1; u <= row_count(); ++u)
      if (rows_[u - 1] >= v) out[v - 1] = u;
  return out;
}

int YoungShape::diagonal_length() const {
  int d = 0;
  while (d < row_count() && rows_[d] >= d + 1) ++d;
  return d;
}

std::string YoungShape::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ",";
    os << rows_[i];
  }
  os << ")";
  return os.str();
}

YoungShape YoungShape::staircase(int top) {
  std::vector<int> rows;
  for (int r = top; r >= 1; --r) rows.push_back(r);
  return YoungShape(rows);
}

int Region::cell_count() const {
  int total = 0;
  for (int l : len) total += l;
  return total;
}

std::vector<std::pair<int, int>> region_cells(const Region& r) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < static_cast<int>(r.len.size()); ++t)
    for (int c = 0; c < r.len[t]; ++c) out.push_back(grid_pos(r, t, c));
  return out;
}

Region lambda_region(const YoungShape& shape, int i, int j) {
  Region r;
  r.top = i;
  r.left = j;
  for (int u = i; u <= shape.row_count() && shape.rows()[u - 1] >= j; ++u)
    r.len.push_back(shape.rows()[u - 1] - j + 1);
  return r;
}

Region upper_region(const YoungShape& shape, int i, int k, int shift) {
  Region r;
  int col0 = std::max(1, k - shift);
  r.top = i;
  r.left = col0;
  for (int u = i; u <= std::min(k - 1, shape.row_count()); ++u)
    r.len.push_back(std::max(0, shape.rows()[u - 1] - col0 + 1));
  strip_trailing_empty(r.len);
  return r;
}

Region lower_region(const YoungShape& shape, int l, int j, int shift) {
  Region r;
  int row0 = std::max(1, l - shift);
  r.top = row0;
  r.left = j;
  r.transposed = true;
  std::vector<int> conj = shape.conjugate();
  for (int v = j; v <= std::min(l - 1, shape.col_count()); ++v)
    r.len.push_back(std::max(0, conj[v - 1] - row0 + 1));
  strip_trailing_empty(r.len);
  return r;
}

Poly region_genfun(const RingPtr& ring, const Region& r) {
  return genfun_impl(ring, r,
                     [&](int t, int c) { return cell_weight(ring, r, t, c); });
}

Poly region_genfun_uniform(const RingPtr& ring, const Region& r,
                           const std::string& var) {
  Poly q = Poly::variable(ring, var);
  return genfun_impl(ring, r, [&](int, int) { return q; });
}

Poly region_product(const RingPtr& ring, const Region& r) {
  Poly out = Poly::constant(1, ring);
  for (auto [u, v] : region_cells(r))
    out *= Poly::variable(ring, cell_var_name(u, v));
  return out;
}

PolyMatrix a_matrix(const RingPtr& ring, const YoungShape& shape) {
  int n = shape.diagonal_length() + 1;
  PolyMatrix a(n, n, ring);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a.at(i - 1, j - 1) = region_genfun(ring, lambda_region(shape, i, j));
  return a;
}

PolyMatrix rect_a_matrix(const RingPtr& ring, const YoungShape& shape, int a,
                         int b) {
  PolyMatrix m(a, b, ring);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      m.at(i - 1, j - 1) = region_genfun(ring, lambda_region(shape, i, j));
  return m;
}

bool border_anchor(const YoungShape& shape, int a, int b) {
  if (a < 1 || b < 1 || shape.contains(a, b)) return false;
  int u = a - 1, v = b - 1;
  if (u == 0) return v <= shape.col_count();
  if (v == 0) return u <= shape.row_count();
  return shape.contains(u, v);
}

UdlFactors udl_combinatorial(const RingPtr& ring, const YoungShape& shape) {
  int n = shape.diagonal_length() + 1;
  UdlFactors f;
  f.u = PolyMatrix::identity(n, ring);
  f.l = PolyMatrix::identity(n, ring);
  std::vector<Poly> diag;
  for (int k = 1; k <= n; ++k)
    diag.push_back(region_product(ring, lambda_region(shape, k, k)));
  f.d = PolyMatrix::diagonal(diag);
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      f.u.at(i - 1, k - 1) =
          region_genfun(ring, upper_region(shape, i, k, 0));
      f.l.at(k - 1, i - 1) =
          region_genfun(ring, lower_region(shape, k, i, 0));
    }
  return f;
}

UdlFactors rect_udl_combinatorial(const RingPtr& ring,
                                  const YoungShape& shape, int a, int b) {
  UdlFactors f;
  f.u = PolyMatrix::identity(a, ring);
  f.l = PolyMatrix::identity(b, ring);
  f.d = PolyMatrix(a, b, ring);
  for (int i = 1; i <= a; ++i)
    for (int k = i + 1; k <= a; ++k)
      f.u.at(i - 1, k - 1) =
          region_genfun(ring, upper_region(shape, i, k, a - b));
  for (int j = 1; j <= b; ++j)
    for (int l = j + 1; l <= b; ++l)
      f.l.at(l - 1, j - 1) =
          region_genfun(ring, lower_region(shape, l, j, b - a));
  for (int i = 1; i <= std::min(a, b); ++i)
    f.d.at(a - i, b - i) =
        region_product(ring, lambda_region(shape, a - i + 1, b - i + 1));
  return f;
}

namespace {

// Entries below the diagonal of `u` and above the diagonal of `l` must be
// zero, diagonals one. Returns an empty string when fine.
std::string triangularity_witness(const PolyMatrix& u, const PolyMatrix& l) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    if (!u.at(i, i).is_one()) return "upper factor diagonal not 1";
    for (std::size_t j = 0; j < i; ++j)
      if (!u.at(i, j).is_zero()) return "upper factor not triangular";
  }
  for (std::size_t i = 0; i < l.rows(); ++i) {
    if (!l.at(i, i).is_one()) return "lower factor diagonal not 1";
    for (std::size_t j = i + 1; j < l.cols(); ++j)
      if (!l.at(i, j).is_zero()) return "lower factor not triangular";
  }
  return "";
}

std::string product_witness(const PolyMatrix& prod, const PolyMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(prod.at(i, j) == a.at(i, j)))
        return "factor product differs from the matrix at entry (" +
               std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): " + prod.at(i, j).to_string() + " vs " +
               a.at(i, j).to_string();
  return "";
}

}  // namespace

VerificationReport verify_udl(const YoungShape& shape) {
  auto t0 = Clock::now();
  auto ring = Ring::create();
  VerificationReport rep;
  rep.case_id = "young-udl-" + shape.to_string();

  PolyMatrix a = a_matrix(ring, shape);
  rep.rows = a.rows();
  rep.cols = a.cols();
  UdlFactors f = udl_combinatorial(ring, shape);
  std::vector<Poly> diag = f.d.diagonal_entries();
  std::vector<Poly> claimed(diag.rbegin(), diag.rend());
  for (const Poly& p : diag) rep.extracted.push_back(p.to_string());
  for (const Poly& p : claimed) rep.claimed.push_back(p.to_string());
  rep.extras["cells"] = std::to_string(shape.cell_count());

  bool ok = true;
  rep.witness = triangularity_witness(f.u, f.l);
  if (rep.witness.empty()) {
    rep.methods.push_back("unitriangular-structure");
    rep.witness = product_witness(f.u * f.d * f.l, a);
    if (rep.witness.empty()) rep.methods.push_back("combinatorial-factorization");
  }
  ok = rep.witness.empty();

  if (ok && a.rows() <= 4) {
    Poly det = det_bareiss(a);
    Poly prod = Poly::constant(1, ring);
    for (const Poly& p : diag) prod *= p;
    if (det == prod) {
      rep.methods.push_back("determinant");
    } else {
      ok = false;
      rep.witness = "determinant " + det.to_string() +
                    " differs from the diagonal product " + prod.to_string();
    }
  }

  if (ok) {
    SsnfCertificate cert = reorder_to_ssnf(diag, claimed);
    if (cert.chain_ok) {
      rep.methods.push_back("ssnf-chain");
    } else {
      ok = false;
      rep.witness = "reversed diagonal is not a divisibility chain";
    }
  }

  rep.match = ok;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

VerificationReport verify_rect_udl(const YoungShape& shape, int a, int b) {
  if (!border_anchor(shape, a, b))
    throw PolyError("(" + std::to_string(a) + "," + std::to_string(b) +
                    ") is not a border anchor of " + shape.to_string());
  auto t0 = Clock::now();
  auto ring = Ring::create();
  VerificationReport rep;
  rep.case_id = "young-rect-" + shape.to_string() + "-" + std::to_string(a) +
                "x" + std::to_string(b);
  rep.rows = static_cast<std::size_t>(a);
  rep.cols = static_cast<std::size_t>(b);
  rep.extras["cells"] = std::to_string(shape.cell_count());

  PolyMatrix m = rect_a_matrix(ring, shape, a, b);
  UdlFactors f = rect_udl_combinatorial(ring, shape, a, b);
  const int c = std::min(a, b);
  std::vector<Poly> chain;  // d_1 .. d_c, ascending claim
  for (int i = 1; i <= c; ++i) chain.push_back(f.d.at(a - i, b - i));
  for (const Poly& p : chain) rep.claimed.push_back(p.to_string());
  for (std::size_t i = 0; i < f.d.rows(); ++i)
    for (std::size_t j = 0; j < f.d.cols(); ++j)
      if (!f.d.at(i, j).is_zero())
        rep.extracted.push_back(f.d.at(i, j).to_string());

  bool ok = true;
  rep.witness = triangularity_witness(f.u, f.l);
  if (rep.witness.empty()) {
    rep.methods.push_back("unitriangular-structure");
    // D may be nonzero only on the anti-diagonal band fixed above.
    for (int i = 0; i < a && rep.witness.empty(); ++i)
      for (int j = 0; j < b; ++j) {
        bool allowed = (a - i == b - j) && (a - i >= 1) && (a - i <= c);
        if (!allowed && !f.d.at(i, j).is_zero()) {
          rep.witness = "middle factor has a stray entry at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ")";
          break;
        }
      }
    if (rep.witness.empty()) rep.methods.push_back("shifted-diagonal-pattern");
  }
  if (rep.witness.empty()) {
    rep.witness = product_witness(f.u * f.d * f.l, m);
    if (rep.witness.empty()) rep.methods.push_back("combinatorial-factorization");
  }
  ok = rep.witness.empty();

  if (ok) {
    if (!chain.empty() && chain.front().is_one() && check_chain(chain)) {
      rep.methods.push_back("ssnf-chain");
    } else {
      ok = false;
      rep.witness = "claimed diagonal is not an ascending chain from 1";
    }
  }

  if (ok) {
    // Signed permutations are not needed: plain row and column permutations
    // move the anti-diagonal band onto the leading diagonal.
    PolyMatrix x(a, a, ring), y(b, b, ring);
    const Poly one = Poly::constant(1, ring);
    for (int t = 0; t < a; ++t) x.at(t, t < c ? a - 1 - t : t - c) = one;
    for (int t = 0; t < b; ++t) y.at(t < c ? b - 1 - t : t - c, t) = one;
    PolyMatrix target(a, b, ring);
    for (int t = 0; t < c; ++t) target.at(t, t) = chain[t];
    if (x * f.d * y == target) {
      rep.methods.push_back("permutation-normalization");
    } else {
      ok = false;
      rep.witness = "permuted middle factor is not the claimed diagonal";
    }
  }

  rep.match = ok;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

VerificationReport catalan_specialization(int n, bool odd) {
  if (n < 1) throw PolyError("specialization index must be positive");
  auto t0 = Clock::now();
  const int top = odd ? 2 * n : 2 * n - 1;
  YoungShape shape = YoungShape::staircase(top);
  auto ring = Ring::create();
  const std::string qname = "q";
  Poly q = Poly::variable(ring, qname);
  const int m = shape.diagonal_length();  // == n for both parities

  VerificationReport rep;
  rep.case_id = "young-staircase-" + std::to_string(top) + "-q";
  rep.rows = rep.cols = static_cast<std::size_t>(m) + 1;
  rep.extras["shape"] = shape.to_string();

  PolyMatrix a(m + 1, m + 1, ring);
  for (int i = 1; i <= m + 1; ++i)
    for (int j = 1; j <= m + 1; ++j)
      a.at(i - 1, j - 1) =
          region_genfun_uniform(ring, lambda_region(shape, i, j), qname);

  std::vector<Poly> claimed;
  for (int t = 0; t <= m; ++t) {
    int w = 2 * t + (odd ? 1 : 0);
    claimed.push_back(q.pow(w * (w - 1) / 2));
  }
  for (const Poly& p : claimed) rep.claimed.push_back(p.to_string());

  bool ok = true;

  // Factor with the same uniform weights and compare the product.
  PolyMatrix u = PolyMatrix::identity(m + 1, ring);
  PolyMatrix l = PolyMatrix::identity(m + 1, ring);
  std::vector<Poly> diag;
  for (int k = 1; k <= m + 1; ++k)
    diag.push_back(
        q.pow(lambda_region(shape, k, k).cell_count()));
  PolyMatrix d = PolyMatrix::diagonal(diag);
  for (int i = 1; i <= m + 1; ++i)
    for (int k = i + 1; k <= m + 1; ++k) {
      u.at(i - 1, k - 1) =
          region_genfun_uniform(ring, upper_region(shape, i, k, 0), qname);
      l.at(k - 1, i - 1) =
          region_genfun_uniform(ring, lower_region(shape, k, i, 0), qname);
    }
  for (const Poly& p : diag) rep.extracted.push_back(p.to_string());
  rep.witness = product_witness(u * d * l, a);
  if (rep.witness.empty()) {
    rep.methods.push_back("combinatorial-factorization");
  } else {
    ok = false;
  }

  // The reversed factorization diagonal must equal the claim exactly.
  if (ok) {
    for (int t = 0; t <= m; ++t)
      if (!(diag[m - t] == claimed[t])) {
        ok = false;
        rep.witness = "reversed diagonal entry " + std::to_string(t) +
                      " is " + diag[m - t].to_string() + ", claimed " +
                      claimed[t].to_string();
        break;
      }
    if (ok && check_chain(claimed)) rep.methods.push_back("diagonal-identity");
  }

  // Independent route: gcds of k-by-k minors against prefix products.
  if (ok) {
    Poly prefix = Poly::constant(1, ring);
    for (int k = 1; k <= m + 1 && ok; ++k) {
      prefix *= claimed[k - 1];
      Poly g = minor_gcd(a, k);
      if (!(g == prefix)) {
        ok = false;
        rep.witness = "gcd of " + std::to_string(k) + "-minors is " +
                      g.to_string() + ", expected " + prefix.to_string();
      }
    }
    if (ok) rep.methods.push_back("minor-gcd");
  }

  // Entrywise bridge to the reversed moment matrix of the area-weighted
  // Catalan numbers.
  if (ok) {
    auto cat = q_catalan_upto(ring, 2 * n + (odd ? 1 : 0), qname);
    for (int i = 1; i <= m + 1 && ok; ++i)
      for (int j = 1; j <= m + 1 && ok; ++j) {
        int idx = 2 * n + 2 - i - j + (odd ? 1 : 0);
        if (!(a.at(i - 1, j - 1) == cat[idx])) {
          ok = false;
          rep.witness = "entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is " +
                        a.at(i - 1, j - 1).to_string() +
                        ", expected Catalan value " + cat[idx].to_string();
        }
      }
    if (ok) rep.methods.push_back("hankel-bridge");
  }

  // The claim coincides with the shifted moment-matrix diagonal claim.
  if (ok) {
    RecurrenceSpec spec = family_spec(Family::catalan);
    std::vector<Poly> want = claimed_shift_diagonal(
        spec, n, odd ? Shift::odd : Shift::even);
    for (int t = 0; t <= m && ok; ++t)
      if (want[t].to_string() != rep.claimed[t]) {
        ok = false;
        rep.witness = "claim differs from the shifted moment claim at " +
                      std::to_string(t);
      }
    if (ok) rep.methods.push_back("moment-claim-bridge");
  }

  rep.match = ok;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

}  // namespace snfmom
