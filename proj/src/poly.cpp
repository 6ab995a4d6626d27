#include "snfmom/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace snfmom {

ParseError::ParseError(const std::string& msg, std::size_t at)
    : PolyError(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}

// ---------------------------------------------------------------- Ring

RingPtr Ring::create() { return RingPtr(new Ring()); }

Var Ring::var(const std::string& name) {
  std::lock_guard<std::mutex> lock(mu_);
  vars_.emplace(name, false);
  return Var{name};
}

Var Ring::laurent_var(const std::string& name) {
  std::lock_guard<std::mutex> lock(mu_);
  vars_[name] = true;
  return Var{name};
}

bool Ring::is_laurent(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = vars_.find(name);
  return it != vars_.end() && it->second;
}

bool Ring::has(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  return vars_.count(name) > 0;
}

std::vector<std::string> Ring::names() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out;
  for (auto& [n, _] : vars_) out.push_back(n);
  return out;
}

// ------------------------------------------------------------ Monomial

Monomial Monomial::one() { return Monomial(); }

Monomial Monomial::of(const Var& v, int exp) {
  Monomial m;
  if (exp != 0) m.entries_.emplace_back(v.name, exp);
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() ||
        (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      out.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() ||
               o.entries_[j].first < entries_[i].first) {
      out.entries_.push_back(o.entries_[j++]);
    } else {
      int e = entries_[i].second + o.entries_[j].second;
      if (e != 0) out.entries_.emplace_back(entries_[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial inv;
  inv.entries_.reserve(o.entries_.size());
  for (auto& [n, e] : o.entries_) inv.entries_.emplace_back(n, -e);
  return times(inv);
}

Monomial Monomial::pow(int k) const {
  Monomial out;
  if (k == 0) return out;
  out.entries_.reserve(entries_.size());
  for (auto& [n, e] : entries_) out.entries_.emplace_back(n, e * k);
  return out;
}

bool Monomial::divisible_by(const Monomial& o) const {
  std::size_t i = 0;
  for (auto& [n, e] : o.entries_) {
    while (i < entries_.size() && entries_[i].first < n) ++i;
    if (i == entries_.size() || entries_[i].first != n ||
        entries_[i].second < e) {
      return false;
    }
  }
  return true;
}

int Monomial::exponent(const std::string& name) const {
  for (auto& [n, e] : entries_) {
    if (n == name) return e;
  }
  return 0;
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (auto& [n, e] : entries_) d += e;
  return d;
}

std::string Monomial::to_string() const {
  std::string out;
  for (auto& [n, e] : entries_) {
    if (!out.empty()) out += "*";
    out += n;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonoGradedLexDesc::operator()(const Monomial& a, const Monomial& b) const {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    int xa = 0, xb = 0;
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      xa = ea[i++].second;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      xb = eb[j++].second;
    } else {
      xa = ea[i++].second;
      xb = eb[j++].second;
    }
    if (xa != xb) return xa > xb;
  }
  return false;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring, TermMap terms, bool validate)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  if (validate) validate_laurent();
}

void Poly::validate_laurent() const {
  for (auto& [m, c] : terms_) {
    for (auto& [name, exp] : m.entries()) {
      if (!ring_) {
        throw RingMismatch("polynomial with variables requires a ring");
      }
      if (exp < 0 && !ring_->is_laurent(name)) {
        throw LaurentEscape("negative exponent on non-Laurent variable '" +
                            name + "'");
      }
    }
  }
}

RingPtr Poly::unify(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw RingMismatch("operands belong to different rings");
}

Poly Poly::zero(RingPtr ring) { return Poly(std::move(ring), {}, false); }

Poly Poly::constant(Int c, RingPtr ring) {
  TermMap t;
  if (c != 0) t.emplace(Monomial::one(), std::move(c));
  return Poly(std::move(ring), std::move(t), false);
}

Poly Poly::variable(const RingPtr& ring, const std::string& name) {
  if (!ring) throw RingMismatch("variable requires a ring");
  Var v = ring->var(name);
  TermMap t;
  t.emplace(Monomial::of(v), Int(1));
  return Poly(ring, std::move(t), false);
}

Poly Poly::monomial(const RingPtr& ring, const Monomial& m, Int coeff) {
  TermMap t;
  if (coeff != 0) t.emplace(m, std::move(coeff));
  return Poly(ring, std::move(t), true);
}

Poly Poly::from_terms(RingPtr ring, TermMap terms) {
  return Poly(std::move(ring), std::move(terms), true);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Int> Poly::as_constant() const {
  if (terms_.empty()) return Int(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out(unify(ring_, o.ring_), terms_, false);
  for (auto& [m, c] : o.terms_) {
    auto [it, fresh] = out.terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  ring_ = unify(ring_, o.ring_);
  for (auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out(ring_, terms_, false);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }
Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator+(const Int& c) const { return *this + Poly::constant(c); }
Poly Poly::operator-(const Int& c) const { return *this - Poly::constant(c); }

Poly Poly::operator*(const Int& c) const {
  if (c == 0) return Poly::zero(ring_);
  Poly out(ring_, terms_, false);
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

Poly operator*(const Int& c, const Poly& p) { return p * c; }

namespace {

struct VarSpan {
  int min = 0, max = 0;
};

// exponent ranges of every variable appearing in p
std::map<std::string, VarSpan> spans(const Poly& p) {
  std::map<std::string, VarSpan> out;
  bool first_row = true;
  for (auto& [m, c] : p.terms()) {
    std::map<std::string, int> row;
    for (auto& [n, e] : m.entries()) row[n] = e;
    for (auto& [n, e] : row) {
      auto it = out.find(n);
      if (it == out.end()) {
        // variable absent in earlier terms means exponent 0 there
        out[n] = first_row ? VarSpan{e, e} : VarSpan{std::min(e, 0),
                                                     std::max(e, 0)};
      } else {
        it->second.min = std::min(it->second.min, e);
        it->second.max = std::max(it->second.max, e);
      }
    }
    for (auto& [n, sp] : out) {
      if (!row.count(n)) {
        sp.min = std::min(sp.min, 0);
        sp.max = std::max(sp.max, 0);
      }
    }
    first_row = false;
  }
  return out;
}

std::vector<Int> to_dense(const Poly& p, const std::string& v, int shift,
                          int size) {
  std::vector<Int> out(static_cast<std::size_t>(size));
  for (auto& [m, c] : p.terms()) {
    out[static_cast<std::size_t>(m.exponent(v) - shift)] = c;
  }
  return out;
}

Poly from_dense(const RingPtr& ring, const std::string& v,
                const std::vector<Int>& cs, int shift) {
  Poly::TermMap t;
  Var var{v};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] != 0) {
      t.emplace(Monomial::of(var, static_cast<int>(i) + shift), cs[i]);
    }
  }
  return Poly::from_terms(ring, std::move(t));
}

std::vector<Int> dense_mul(const std::vector<Int>& a,
                           const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// exact division of dense univariate integer polynomials; b's last entry
// must be nonzero
std::optional<std::vector<Int>> dense_exact_div(std::vector<Int> a,
                                                const std::vector<Int>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) return std::vector<Int>{};
  if (a.size() < b.size()) return std::nullopt;
  std::size_t db = b.size() - 1;
  std::vector<Int> q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& lead = a[db + k];
    if (lead == 0) continue;
    if (lead % b[db] != 0) return std::nullopt;
    Int t = lead / b[db];
    q[k] = t;
    for (std::size_t j = 0; j <= db; ++j) a[j + k] -= t * b[j];
  }
  for (auto& c : a) {
    if (c != 0) return std::nullopt;
  }
  return q;
}

constexpr int kDenseSpanLimit = 1 << 16;

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  RingPtr rg = unify(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly::zero(rg);
  if (auto c = as_constant()) return o * *c;
  if (auto c = o.as_constant()) return *this * *c;

  // dense path when both operands live in one common variable
  auto sa = spans(*this);
  auto sb = spans(o);
  if (sa.size() == 1 && sb.size() == 1 &&
      sa.begin()->first == sb.begin()->first) {
    const std::string& v = sa.begin()->first;
    VarSpan ra = sa.begin()->second, rb = sb.begin()->second;
    long long wa = ra.max - ra.min + 1, wb = rb.max - rb.min + 1;
    if (wa <= kDenseSpanLimit && wb <= kDenseSpanLimit) {
      auto da = to_dense(*this, v, ra.min, static_cast<int>(wa));
      auto db = to_dense(o, v, rb.min, static_cast<int>(wb));
      return from_dense(rg, v, dense_mul(da, db), ra.min + rb.min);
    }
  }

  const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
  TermMap acc;
  for (auto& [ms, cs] : small.terms_) {
    for (auto& [ml, cl] : large.terms_) {
      Monomial m = ms.times(ml);
      Int c = cs * cl;
      auto [it, fresh] = acc.emplace(std::move(m), std::move(c));
      if (!fresh) {
        it->second += cs * cl;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  return Poly(rg, std::move(acc), false);
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(int k) const {
  if (k == 0) return Poly::constant(1, ring_);
  if (k < 0) {
    auto inv = try_invert();
    if (!inv) throw DivisionFailure("negative power of a non-unit");
    return inv->pow(-k);
  }
  Poly base = *this;
  Poly out = Poly::constant(1, ring_);
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return out;
}

std::optional<Poly> Poly::try_invert() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (c != 1 && c != -1) return std::nullopt;
  for (auto& [n, e] : m.entries()) {
    if (!ring_ || !ring_->is_laurent(n)) return std::nullopt;
  }
  TermMap t;
  t.emplace(m.pow(-1), c);
  return Poly(ring_, std::move(t), false);
}

Poly Poly::inverse() const {
  auto inv = try_invert();
  if (!inv) throw DivisionFailure("polynomial is not a unit");
  return *inv;
}

std::optional<Poly> Poly::try_exact_div(const Poly& d) const {
  RingPtr rg;
  try {
    rg = unify(ring_, d.ring_);
  } catch (const RingMismatch&) {
    return std::nullopt;
  }
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return Poly::zero(rg);
  if (auto dc = d.as_constant()) {
    TermMap t;
    for (auto& [m, c] : terms_) {
      if (c % *dc != 0) return std::nullopt;
      t.emplace(m, c / *dc);
    }
    return Poly(rg, std::move(t), false);
  }

  // factor out per-variable valuations; they are additive, so the monomial
  // parts divide independently of the polynomial parts
  auto sp = spans(*this);
  auto sd = spans(d);
  Monomial shift_p, shift_d;
  for (auto& [n, r] : sp) {
    if (r.min != 0) shift_p = shift_p.times(Monomial::of(Var{n}, r.min));
  }
  for (auto& [n, r] : sd) {
    if (r.min != 0) shift_d = shift_d.times(Monomial::of(Var{n}, r.min));
  }
  Monomial mono_q = shift_p.divided_by(shift_d);
  for (auto& [n, e] : mono_q.entries()) {
    if (e < 0 && (!rg || !rg->is_laurent(n))) return std::nullopt;
  }

  auto strip = [](const Poly& p, const Monomial& m, const RingPtr& rg) {
    if (m.is_one()) return p;
    TermMap t;
    for (auto& [mm, c] : p.terms()) t.emplace(mm.divided_by(m), c);
    return Poly(rg, std::move(t), false);
  };
  Poly np = strip(*this, shift_p, rg);
  Poly nd = strip(d, shift_d, rg);

  std::optional<Poly> q;

  // dense univariate fast path
  auto snp = spans(np);
  auto snd = spans(nd);
  if (snp.size() == 1 && snd.size() <= 1 &&
      (snd.empty() || snd.begin()->first == snp.begin()->first)) {
    const std::string& v = snp.begin()->first;
    VarSpan rp = snp.begin()->second;
    VarSpan rd_ = snd.empty() ? VarSpan{0, 0} : snd.begin()->second;
    if (rp.max + 1 <= kDenseSpanLimit) {
      auto da = to_dense(np, v, 0, rp.max + 1);
      auto db = to_dense(nd, v, 0, rd_.max + 1);
      auto dq = dense_exact_div(std::move(da), db);
      if (!dq) return std::nullopt;
      q = from_dense(rg, v, *dq, 0);
    }
  }

  if (!q) {
    // long division by leading terms in graded-lex order
    TermMap rem = np.terms();
    TermMap quo;
    const auto& [ltd_m, ltd_c] = *nd.terms().begin();
    while (!rem.empty()) {
      const auto& [ltr_m, ltr_c] = *rem.begin();
      if (!ltr_m.divisible_by(ltd_m)) return std::nullopt;
      if (ltr_c % ltd_c != 0) return std::nullopt;
      Monomial qm = ltr_m.divided_by(ltd_m);
      Int qc = ltr_c / ltd_c;
      quo.emplace(qm, qc);
      for (auto& [m, c] : nd.terms()) {
        Monomial mm = qm.times(m);
        auto [it, fresh] = rem.emplace(mm, -qc * c);
        if (!fresh) {
          it->second -= qc * c;
          if (it->second == 0) rem.erase(it);
        }
      }
    }
    q = Poly(rg, std::move(quo), false);
  }

  if (mono_q.is_one()) return q;
  TermMap shifted;
  for (auto& [m, c] : q->terms()) shifted.emplace(m.times(mono_q), c);
  return Poly(rg, std::move(shifted), false);
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw DivisionFailure("division by zero");
  auto q = try_exact_div(d);
  if (!q) {
    throw DivisionFailure("no exact quotient of " + to_string() + " by " +
                          d.to_string());
  }
  return *q;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
  RingPtr rg = ring_;
  for (auto& [n, p] : images) rg = unify(rg, p.ring());
  Poly out = Poly::zero(rg);
  for (auto& [m, c] : terms_) {
    Poly term = Poly::constant(c, rg);
    Monomial rest;
    for (auto& [n, e] : m.entries()) {
      auto it = images.find(n);
      if (it == images.end()) {
        rest = rest.times(Monomial::of(Var{n}, e));
        continue;
      }
      if (e >= 0) {
        term *= it->second.pow(e);
      } else {
        auto inv = it->second.try_invert();
        if (!inv) {
          throw LaurentEscape("cannot substitute a non-unit into a negative "
                              "power of '" + n + "'");
        }
        term *= inv->pow(-e);
      }
    }
    if (!rest.is_one()) {
      TermMap t;
      t.emplace(rest, Int(1));
      term *= Poly(rg, std::move(t), false);
    }
    out += term;
  }
  return out;
}

Poly Poly::substitute(const std::string& name, const Poly& image) const {
  return substitute(std::map<std::string, Poly>{{name, image}});
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (auto& [m, c] : terms_) {
    for (auto& [n, e] : m.entries()) out.insert(n);
  }
  return out;
}

int Poly::degree_in(const std::string& name) const {
  int d = 0;
  bool any = false;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(name);
    if (!any || e > d) d = e;
    any = true;
  }
  return any ? d : 0;
}

int Poly::min_exponent_in(const std::string& name) const {
  int d = 0;
  bool any = false;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(name);
    if (!any || e < d) d = e;
    any = true;
  }
  return any ? d : 0;
}

long long Poly::total_degree() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.total_degree();
}

std::map<int, Poly> Poly::coeffs_in(const std::string& name) const {
  std::map<int, Poly> out;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(name);
    Monomial rest = m.divided_by(Monomial::of(Var{name}, e));
    auto it = out.find(e);
    if (it == out.end()) {
      it = out.emplace(e, Poly::zero(ring_)).first;
    }
    TermMap t;
    t.emplace(rest, c);
    it->second += Poly(ring_, std::move(t), false);
  }
  return out;
}

Int Poly::content() const {
  Int g = 0;
  for (auto& [m, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

double Poly::eval_double(const std::map<std::string, double>& point) const {
  double out = 0;
  for (auto& [m, c] : terms_) {
    double t = c.convert_to<double>();
    for (auto& [n, e] : m.entries()) {
      auto it = point.find(n);
      if (it == point.end()) {
        throw PolyError("eval_double: no value for variable '" + n + "'");
      }
      t *= std::pow(it->second, e);
    }
    out += t;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    bool neg = c < 0;
    Int ac = boost::multiprecision::abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += ac.str();
    } else {
      if (ac != 1) out += ac.str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- parse

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool ident_start() const {
    return std::isalpha(static_cast<unsigned char>(peek()));
  }
  bool digit() const {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  Int read_integer() {
    std::size_t start = pos;
    while (digit()) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    return Int(s.substr(start, pos - start));
  }

  int read_exponent() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    std::size_t start = pos;
    while (digit()) ++pos;
    if (pos == start) throw ParseError("expected an exponent", pos);
    std::string digits = s.substr(start, pos - start);
    if (digits.size() > 6) throw ParseError("exponent out of range", start);
    int e = std::stoi(digits);
    return neg ? -e : e;
  }

  std::string read_ident() {
    std::size_t start = pos;
    ++pos;  // caller checked ident_start
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) ||
            s[pos] == '_')) {
      ++pos;
    }
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly Poly::parse(const RingPtr& ring, const std::string& text) {
  if (!ring) throw RingMismatch("parse requires a ring");
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty input", 0);

  Poly out = Poly::zero(ring);
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      if (c.done()) break;
      throw ParseError("expected '+' or '-'", c.pos);
    }
    first = false;

    // one term
    Int coeff = 1;
    Monomial mono;
    bool have_any = false;
    if (c.digit()) {
      coeff = c.read_integer();
      have_any = true;
      std::size_t save = c.pos;
      c.skip_ws();
      if (c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
        if (!c.ident_start()) throw ParseError("expected a variable", c.pos);
      } else if (!c.ident_start() || c.pos != save) {
        c.pos = save;  // constant term
      }
    }
    while (c.ident_start()) {
      std::string name = c.read_ident();
      int exp = 1;
      if (c.peek() == '^') {
        ++c.pos;
        exp = c.read_exponent();
      }
      Var v = ring->var(name);
      mono = mono.times(Monomial::of(v, exp));
      have_any = true;
      std::size_t save = c.pos;
      c.skip_ws();
      if (c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
        if (!c.ident_start()) throw ParseError("expected a variable", c.pos);
      } else {
        c.pos = save;
        break;
      }
    }
    if (!have_any) throw ParseError("expected a term", c.pos);
    out += Poly::monomial(ring, mono, coeff * sign);

    std::size_t save = c.pos;
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-') {
      throw ParseError("unexpected input", save == c.pos ? c.pos : save);
    }
  }
  return out;
}

// ------------------------------------------------------------------ gcd

namespace {

Int vec_content(const std::vector<Int>& v) {
  Int g = 0;
  for (auto& c : v) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

void vec_trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Int> vec_primitive(std::vector<Int> v) {
  Int g = vec_content(v);
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
  return v;
}

// gcd of primitive univariate integer polynomials (dense, trimmed, nonempty)
std::vector<Int> prs_gcd(std::vector<Int> a, std::vector<Int> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      return {Int(1)};  // nonzero constant divides a primitive poly only via 1
    }
    // pseudo-remainder: repeatedly kill the leading coefficient
    std::vector<Int> r = a;
    const Int lb = b.back();
    while (r.size() >= b.size()) {
      Int lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& c : r) c *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
      vec_trim(r);
      if (r.empty()) break;
    }
    a = std::move(b);
    b = vec_primitive(std::move(r));
    vec_trim(b);
  }
  return vec_primitive(std::move(a));
}

}  // namespace

Poly gcd_univariate(const Poly& a, const Poly& b) {
  std::set<std::string> vars = a.variables();
  for (auto& v : b.variables()) vars.insert(v);
  if (vars.size() > 1) {
    throw MultivariateInput("gcd_univariate requires at most one variable, got " +
                            std::to_string(vars.size()));
  }
  RingPtr rg = a.ring() ? a.ring() : b.ring();

  auto normalize = [](Poly p) {
    if (!p.is_zero() && p.terms().begin()->second < 0) return -p;
    return p;
  };

  if (a.is_zero() && b.is_zero()) return Poly::zero(rg);
  if (vars.empty()) {
    Int g = boost::multiprecision::gcd(a.as_constant().value_or(0),
                                       b.as_constant().value_or(0));
    return Poly::constant(boost::multiprecision::abs(g), rg);
  }
  const std::string v = *vars.begin();

  // clear negative (Laurent) exponents: they are units and do not affect
  // the polynomial gcd
  auto lift = [&](const Poly& p) {
    int m = p.min_exponent_in(v);
    if (m >= 0 || p.is_zero()) return p;
    return p * Poly::monomial(p.ring() ? p.ring() : rg,
                              Monomial::of(Var{v}, -m), 1);
  };
  Poly pa = lift(a), pb = lift(b);
  if (pa.is_zero()) return normalize(pb);
  if (pb.is_zero()) return normalize(pa);

  auto dense = [&](const Poly& p) {
    std::vector<Int> out(static_cast<std::size_t>(p.degree_in(v)) + 1);
    for (auto& [m, c] : p.terms()) {
      out[static_cast<std::size_t>(m.exponent(v))] = c;
    }
    return out;
  };
  std::vector<Int> da = dense(pa), db = dense(pb);
  Int ca = vec_content(da), cb = vec_content(db);
  Int cg = boost::multiprecision::gcd(ca, cb);
  std::vector<Int> g = prs_gcd(vec_primitive(std::move(da)),
                               vec_primitive(std::move(db)));
  Poly::TermMap t;
  Var var{v};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0) t.emplace(Monomial::of(var, static_cast<int>(i)), g[i] * cg);
  }
  return normalize(Poly::from_terms(rg, std::move(t)));
}

}  // namespace snfmom
