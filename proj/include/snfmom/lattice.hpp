#pragma once

// Gram matrices over finite join-semilattices: zeta/Moebius factorization
// G = Z diag(g) Z^t, characteristic-polynomial diagonal forms over the set
// partition lattice, noncrossing partitions with Kreweras duals, the
// two-variable join-count matrices J_n(q, delta), Beraha factors, Dyck-path
// height counts, determinant identities, and exact evidence probes for the
// conjectured diagonal forms.

#include <string>
#include <utility>
#include <vector>

#include "snfmom/polymat.hpp"
#include "snfmom/report.hpp"

namespace snfmom {

struct NotLinearExtension : PolyError {
  using PolyError::PolyError;
};
struct NotNoncrossing : PolyError {
  using PolyError::PolyError;
};

// A set partition of [n]: blocks sorted internally and by least element.
using Blocks = std::vector<std::vector<int>>;

Blocks blocks_from_rgs(const std::vector<int>& rgs);
std::string blocks_label(const Blocks& x);  // e.g. "1,3|2"
bool is_noncrossing(const Blocks& x);
// Finest common coarsening inside the full partition lattice of [n].
Blocks partition_join(const Blocks& x, const Blocks& y, int n);

// A finite join-semilattice with a fixed element ordering, precomputed join
// table, and ranks. `leq(i,j)` holds when element i refines into j, i.e.
// join(i,j) == j.
struct RankedLattice {
  std::string name;
  int ground = 0;  // size of the underlying ground set, when partition-based
  std::vector<std::string> labels;
  std::vector<Blocks> elements;  // empty for abstract lattices
  std::vector<int> rank;
  std::vector<std::vector<int>> join_table;
  int bottom = 0, top = 0;

  int size() const { return static_cast<int>(labels.size()); }
  int join(int i, int j) const { return join_table[i][j]; }
  bool leq(int i, int j) const { return join_table[i][j] == j; }
  int lattice_rank() const { return rank[top]; }

  // Order is a linear extension; join is idempotent, commutative, monotone,
  // associative on sampled triples; ranks increase strictly upward.
  void validate(unsigned seed = 1) const;
};

// All set partitions of [n], finer elements first (block count descending,
// ties by restricted-growth string). Bottom is the all-singletons partition,
// top the single block. n <= 7.
RankedLattice partition_lattice(int n);

// The noncrossing partitions of [n] in the same ordering. n <= 8.
std::vector<Blocks> noncrossing_partitions(int n);

// Noncrossing partitions with join = noncrossing closure of the partition
// join. n <= 8.
RankedLattice noncrossing_lattice(int n);

// Dual partition: one cycle per block turns x into a permutation s; the dual
// is read off the cycles of s^{-1} composed after the long cycle
// (1 2 ... n). Throws NotNoncrossing if the result crosses.
Blocks kreweras_dual(const Blocks& x, int n);

// Zeta matrix Z (Z_ij = 1 iff element i <= element j) and the inversion g
// with f(x) = sum over y >= x of g(y). Throws NotLinearExtension when the
// ordering does not make Z upper unitriangular.
struct MoebiusData {
  PolyMatrix z;
  std::vector<Poly> g;
};
MoebiusData moebius_data(const RankedLattice& lat, const std::vector<Poly>& f);

// G_ij = f(join(i, j)).
PolyMatrix gram_from_join(const RankedLattice& lat,
                          const std::vector<Poly>& f);

// Checks G = Z diag(g) Z^t exactly (entrywise via upper-bound sets and, on
// small lattices, by the literal triple product), plus det G = prod g on
// small lattices.
VerificationReport verify_lattice_factorization(const std::string& case_id,
                                                const RankedLattice& lat,
                                                const std::vector<Poly>& f);

// The join-closure of the chosen elements inside `ambient`, reusing its
// ordering, joins, and (re-based) ranks.
RankedLattice join_closed_sublattice(const RankedLattice& ambient,
                                     const std::vector<int>& chosen);

// Builds (q^{|x join y|}) over the partition lattice of [n] and verifies its
// claimed diagonal form: entries q(q-1)...(q-k+1) with multiplicity
// S(n,k) ascending in k, via the factorization, the closed form of each g,
// the multiplicity count, the divisibility chain, and the identity
// q^n = sum_k q(q-1)...(q-k+1) S(n,k). n <= 6.
VerificationReport verify_char_poly_snf(int n);

long long stirling2(int n, int k);
// q (q-1) ... (q - k + 1); the empty product for k <= 0.
Poly falling_factorial(const RingPtr& ring, const std::string& var, int k);

// (q^{|x v y|} delta^{|x' v y'|}) over the noncrossing partitions of [n],
// joins taken in the full partition lattice, primes denoting duals. With
// with_delta false the delta part is dropped. n <= 6.
PolyMatrix j_matrix(const RingPtr& ring, int n, bool with_delta,
                    const std::string& qvar = "q",
                    const std::string& dvar = "delta");

// p_k and f_k in the variable z: p follows p_{k+1} = b_k p_k - p_{k-1}
// (b_k = z for even k, 1 for odd k; p_{-1} = 0, p_0 = 1), and
// f_k = p_k / prod{f_d : d < k, (d+1) | (k+1)} by exact division. Index k
// lives at position k-1. Degrees validated against phi(k+1)/2.
struct BerahaTable {
  RingPtr ring;
  std::vector<Poly> p, f;
};
BerahaTable beraha_factors(int k_max);

// h[k-1] = number of Dyck paths with 2n steps and height exactly k,
// m[k-1] = number with height at least k. n <= 12.
struct DyckCounts {
  std::vector<long long> h, m;
};
DyckCounts dyck_height_counts(int n);

// det J_n(q) against the Beraha product prod f_k(q)^{m_k}, and
// det J_n(q,delta) against the same product at q*delta. n <= 4.
VerificationReport verify_dahab_determinants(int n);

// Noncrossing perfect matchings of [2n] aligned with the noncrossing
// partition ordering. Each element i owns the points 2i-1 and 2i; a block
// {i_1 < ... < i_k} pairs the even point of each element with the odd point
// of the block's cyclically next element: arcs (2 i_t, 2 i_{t+1} - 1) for
// t < k plus the wrap-around arc (2 i_k, 2 i_1 - 1).
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int n);

// (q^{c(m,m')}) over noncrossing perfect matchings of [2n], where c counts
// connected components of the union multigraph. n <= 6.
PolyMatrix lickorish_matrix(const RingPtr& ring, int n,
                            const std::string& qvar = "q");

// Entrywise bridge: the component-count matrix equals the two-variable
// join-count matrix at delta = q divided by q, and its diagonal is constant
// q^n. n <= 6.
VerificationReport verify_lickorish_bridge(int n);

// Exact evidence for the conjectured diagonal forms: s_k I_{h_k} with
// s_k = f_1 ... f_k evaluated at q*delta (j_general), q (j_q), q^2 (j_qq),
// or the q-normalized q^2 case (lickorish). Gathers entry gcd, determinant
// (small n), and for univariate matrices the gcds of k-by-k minors against
// prefix products, stopping at the minor budget.
enum class ProbeMode { j_general, j_q, j_qq, lickorish };
std::string probe_mode_name(ProbeMode mode);
ProbeReport probe_conjecture(int n, ProbeMode mode);

}  // namespace snfmom
