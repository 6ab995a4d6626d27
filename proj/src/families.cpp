#include "snfmom/families.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "snfmom/qfun.hpp"

namespace snfmom {

namespace {

Poly av(const RingPtr& ring, const std::string& name, int exp = 1) {
  return Poly::monomial(ring, Monomial::of(ring->var(name), exp), 1);
}

// binomial(k, 2) as an int exponent
int choose2(int k) { return k * (k - 1) / 2; }

void require_range(const char* what, int n, int limit) {
  if (n < 0 || n > limit) {
    throw PolyError(std::string(what) + " supports 0 <= n <= " +
                    std::to_string(limit) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Family> all_families() {
  return {Family::catalan,           Family::motzkin,
          Family::bell_qstirling,    Family::bell_crossings,
          Family::matchings,         Family::perfect_matchings,
          Family::permutations,      Family::octabasic,
          Family::factorial,         Family::double_factorial};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::catalan: return "catalan";
    case Family::motzkin: return "motzkin";
    case Family::bell_qstirling: return "bell-qstirling";
    case Family::bell_crossings: return "bell-crossings";
    case Family::matchings: return "matchings";
    case Family::perfect_matchings: return "perfect-matchings";
    case Family::permutations: return "permutations";
    case Family::octabasic: return "octabasic";
    case Family::factorial: return "factorial";
    case Family::double_factorial: return "double-factorial";
  }
  throw PolyError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "catalan-star") key = "catalan";  // historical alias
  for (Family f : all_families()) {
    if (family_name(f) == key) return f;
  }
  return std::nullopt;
}

std::string family_description(Family f) {
  switch (f) {
    case Family::catalan:
      return "area-weighted Catalan numbers (aerated); b=0, l_n=q^(n-1)";
    case Family::motzkin:
      return "q-Motzkin numbers; b=1, l_n=q^(n-1)";
    case Family::bell_qstirling:
      return "Bell polynomials via q-Stirling numbers; "
             "b_n=a*q^n+[n], l_n=a*q^(n-1)*[n]";
    case Family::bell_crossings:
      return "set partitions by blocks and arc crossings; "
             "b_n=a+[n], l_n=a*[n]";
    case Family::matchings:
      return "partial matchings by crossings+2*nestings; "
             "b=1, l_n=q^(n-1)*[n]";
    case Family::perfect_matchings:
      return "perfect matchings by crossings+2*nestings; "
             "b=0, l_n=q^(n-1)*[n]";
    case Family::permutations:
      return "permutations by weak excedances and crossings; "
             "b_n=y*[n+1]+[n], l_n=y*[n]^2";
    case Family::octabasic:
      return "eight-base Laguerre weights; b_n=a*[n+1]_{r,s}+b*[n]_{t,u}, "
             "l_n=a*b*[n]_{p,q}*[n]_{v,w}";
    case Family::factorial:
      return "q-factorials; b_n=q^n*[n+1]+q^n*[n], l_n=q^(2n-1)*[n]^2";
    case Family::double_factorial:
      return "odd q-double factorials (even part of perfect matchings); "
             "b_0=1, b_n=q^(2n-1)*[2n]+q^(2n)*[2n+1], "
             "l_n=q^(4n-3)*[2n-1]*[2n]";
  }
  throw PolyError("unknown family");
}

RecurrenceSpec family_spec(Family f) {
  RecurrenceSpec spec;
  spec.ring = Ring::create();
  spec.name = family_name(f);
  RingPtr r = spec.ring;
  switch (f) {
    case Family::catalan:
      spec.b = [r](int) { return Poly::zero(r); };
      spec.lambda = [r](int n) { return av(r, "q", n - 1); };
      break;
    case Family::motzkin:
      spec.b = [r](int) { return Poly::constant(1, r); };
      spec.lambda = [r](int n) { return av(r, "q", n - 1); };
      break;
    case Family::bell_qstirling:
      spec.b = [r](int n) { return av(r, "a") * av(r, "q", n) + q_int(r, n); };
      spec.lambda = [r](int n) {
        return av(r, "a") * av(r, "q", n - 1) * q_int(r, n);
      };
      break;
    case Family::bell_crossings:
      spec.b = [r](int n) { return av(r, "a") + q_int(r, n); };
      spec.lambda = [r](int n) { return av(r, "a") * q_int(r, n); };
      break;
    case Family::matchings:
      spec.b = [r](int) { return Poly::constant(1, r); };
      spec.lambda = [r](int n) { return av(r, "q", n - 1) * q_int(r, n); };
      break;
    case Family::perfect_matchings:
      spec.b = [r](int) { return Poly::zero(r); };
      spec.lambda = [r](int n) { return av(r, "q", n - 1) * q_int(r, n); };
      break;
    case Family::permutations:
      spec.b = [r](int n) { return av(r, "y") * q_int(r, n + 1) + q_int(r, n); };
      spec.lambda = [r](int n) {
        Poly qn = q_int(r, n);
        return av(r, "y") * qn * qn;
      };
      break;
    case Family::octabasic:
      spec.b = [r](int n) {
        return av(r, "a") * q_int_two(r, n + 1, "r", "s") +
               av(r, "b") * q_int_two(r, n, "t", "u");
      };
      spec.lambda = [r](int n) {
        return av(r, "a") * av(r, "b") * q_int_two(r, n, "p", "q") *
               q_int_two(r, n, "v", "w");
      };
      break;
    case Family::factorial:
      spec.b = [r](int n) {
        return av(r, "q", n) * (q_int(r, n + 1) + q_int(r, n));
      };
      spec.lambda = [r](int n) {
        Poly qn = q_int(r, n);
        return av(r, "q", 2 * n - 1) * qn * qn;
      };
      break;
    case Family::double_factorial:
      spec.b = [r](int n) {
        if (n == 0) return Poly::constant(1, r);
        return av(r, "q", 2 * n - 1) * q_int(r, 2 * n) +
               av(r, "q", 2 * n) * q_int(r, 2 * n + 1);
      };
      spec.lambda = [r](int n) {
        return av(r, "q", 4 * n - 3) * q_int(r, 2 * n - 1) * q_int(r, 2 * n);
      };
      break;
  }
  return spec;
}

std::vector<Poly> family_claimed_diagonal(Family f, const RingPtr& ring,
                                          int n) {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    switch (f) {
      case Family::catalan:
      case Family::motzkin:
        out.push_back(av(ring, "q", choose2(k)));
        break;
      case Family::bell_qstirling:
        out.push_back(av(ring, "a", k) * av(ring, "q", choose2(k)) *
                      q_factorial(ring, k));
        break;
      case Family::bell_crossings:
        out.push_back(av(ring, "a", k) * q_factorial(ring, k));
        break;
      case Family::matchings:
      case Family::perfect_matchings:
        out.push_back(av(ring, "q", choose2(k)) * q_factorial(ring, k));
        break;
      case Family::permutations: {
        Poly fk = q_factorial(ring, k);
        out.push_back(av(ring, "y", k) * fk * fk);
        break;
      }
      case Family::octabasic: {
        Poly d = av(ring, "a", k) * av(ring, "b", k);
        for (int j = 1; j <= k; ++j) {
          d = d * q_int_two(ring, j, "p", "q") * q_int_two(ring, j, "v", "w");
        }
        out.push_back(d);
        break;
      }
      case Family::factorial: {
        Poly fk = q_factorial(ring, k);
        out.push_back(av(ring, "q", k * k) * fk * fk);
        break;
      }
      case Family::double_factorial:
        out.push_back(av(ring, "q", choose2(2 * k)) *
                      q_factorial(ring, 2 * k));
        break;
    }
  }
  return out;
}

Poly closed_form_moment(Family f, const RingPtr& ring, int n) {
  switch (f) {
    case Family::catalan: {
      if (n % 2 == 1) return Poly::zero(ring);
      return q_catalan_upto(ring, n / 2).back();
    }
    case Family::motzkin:
      return q_motzkin(ring, n);
    case Family::bell_qstirling:
      return bell_sum(ring, n);
    case Family::bell_crossings:
      return partition_crossing_sum(ring, n);
    case Family::matchings: {
      Poly out = Poly::zero(ring);
      for (int k = 0; 2 * k <= n; ++k) {
        out += q_double_factorial_odd(ring, k) * binomial_int(n, 2 * k);
      }
      return out;
    }
    case Family::perfect_matchings: {
      if (n % 2 == 1) return Poly::zero(ring);
      return q_double_factorial_odd(ring, n / 2);
    }
    case Family::permutations:
      return perm_genfun(ring, n);
    case Family::octabasic:
      throw NoClosedForm("the octabasic moments have no known closed form");
    case Family::factorial:
      return q_factorial(ring, n);
    case Family::double_factorial:
      return q_double_factorial_odd(ring, n);
  }
  throw PolyError("unknown family");
}

// ------------------------------------------------------------- oracles

std::vector<std::vector<int>> set_partitions(int n) {
  require_range("set_partitions", n, 10);
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // depth-first over restricted growth strings
  auto rec = [&](auto&& self, int i, int maxseen) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int v = 0; v <= maxseen + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(maxseen, v));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

namespace {

// Arcs joining consecutive elements of each block, as (left, right) pairs.
std::vector<std::pair<int, int>> partition_arcs(const std::vector<int>& rgs) {
  std::map<int, int> last;  // block id -> most recent element
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
    int b = rgs[static_cast<std::size_t>(i)];
    auto it = last.find(b);
    if (it != last.end()) {
      arcs.emplace_back(it->second, i);
      it->second = i;
    } else {
      last.emplace(b, i);
    }
  }
  return arcs;
}

int count_crossings(const std::vector<std::pair<int, int>>& arcs) {
  int cr = 0;
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      auto [i, j] = arcs[x];
      auto [k, l] = arcs[y];
      if (k < i) std::swap(i, k), std::swap(j, l);
      if (i < k && k < j && j < l) ++cr;
    }
  }
  return cr;
}

int count_nestings(const std::vector<std::pair<int, int>>& arcs) {
  int ne = 0;
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      auto [i, j] = arcs[x];
      auto [k, l] = arcs[y];
      if (k < i) std::swap(i, k), std::swap(j, l);
      if (i < k && l < j) ++ne;
    }
  }
  return ne;
}

}  // namespace

PartitionStats partition_stats(const std::vector<int>& rgs) {
  PartitionStats st;
  st.blocks =
      rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
  st.crossings = count_crossings(partition_arcs(rgs));
  return st;
}

Poly partition_crossing_sum(const RingPtr& ring, int n,
                            const std::string& avar,
                            const std::string& qvar) {
  Poly out = Poly::zero(ring);
  Var a = ring->var(avar), q = ring->var(qvar);
  for (const auto& rgs : set_partitions(n)) {
    PartitionStats st = partition_stats(rgs);
    out += Poly::monomial(
        ring, Monomial::of(a, st.blocks).times(Monomial::of(q, st.crossings)),
        1);
  }
  return out;
}

Poly matching_genfun(const RingPtr& ring, int n, bool perfect_only,
                     const std::string& var) {
  require_range("matching_genfun", n, 12);
  Poly out = Poly::zero(ring);
  Var q = ring->var(var);
  std::vector<std::pair<int, int>> arcs;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < n && used[static_cast<std::size_t>(i)]) ++i;
    if (i == n) {
      int w = count_crossings(arcs) + 2 * count_nestings(arcs);
      out += Poly::monomial(ring, Monomial::of(q, w), 1);
      return;
    }
    used[static_cast<std::size_t>(i)] = true;
    if (!perfect_only) self(self, i + 1);  // leave i isolated
    for (int j = i + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      arcs.emplace_back(i, j);
      self(self, i + 1);
      arcs.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(i)] = false;
  };
  rec(rec, 0);
  return out;
}

PermStats perm_stats(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  PermStats st;
  auto s = [&](int i) { return sigma[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= n; ++i) {
    if (s(i) >= i) ++st.weak_excedances;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < j && j <= s(i) && s(i) < s(j)) ++st.crossings;
      if (i > j && j > s(i) && s(i) > s(j)) ++st.crossings;
    }
  }
  return st;
}

Poly perm_genfun(const RingPtr& ring, int n, const std::string& yvar,
                 const std::string& qvar) {
  require_range("perm_genfun", n, 8);
  Poly out = Poly::zero(ring);
  Var y = ring->var(yvar), q = ring->var(qvar);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
  do {
    PermStats st = perm_stats(sigma);
    out += Poly::monomial(ring,
                          Monomial::of(y, st.weak_excedances)
                              .times(Monomial::of(q, st.crossings)),
                          1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace snfmom
