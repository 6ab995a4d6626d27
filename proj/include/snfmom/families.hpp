#pragma once

// Named weight systems whose moment sequences are classical combinatorial
// generating functions, together with the closed forms of their moments and
// moment-matrix diagonals, and independent enumerative oracles (paths, set
// partitions, matchings, permutations) to check everything against.

#include <optional>
#include <string>
#include <vector>

#include "snfmom/moments.hpp"

namespace snfmom {

struct NoClosedForm : PolyError {
  using PolyError::PolyError;
};

enum class Family {
  catalan,            // b = 0, l_n = q^{n-1}: aerated area-weighted Catalan
  motzkin,            // b = 1, l_n = q^{n-1}
  bell_qstirling,     // b_n = a q^n + [n], l_n = a q^{n-1} [n]
  bell_crossings,     // b_n = a + [n], l_n = a [n]
  matchings,          // b = 1, l_n = q^{n-1} [n]
  perfect_matchings,  // b = 0, l_n = q^{n-1} [n]
  permutations,       // b_n = y [n+1] + [n], l_n = y [n]^2
  octabasic,          // eight independent bases, see family_spec
  factorial,          // b_n = q^n [n+1] + q^n [n], l_n = q^{2n-1} [n]^2
  double_factorial,   // the even-part system of perfect_matchings
};

std::vector<Family> all_families();
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::string family_description(Family f);

// Fresh ring on every call.
RecurrenceSpec family_spec(Family f);

// Claimed moment-matrix diagonal entries for k = 0..n, in closed form
// (powers, factorial analogues), over the given ring (pass family_spec(f).ring).
std::vector<Poly> family_claimed_diagonal(Family f, const RingPtr& ring,
                                          int n);

// Closed form of mu_n; throws NoClosedForm for the octabasic system.
// For bell_crossings and permutations this is the defining enumerative sum.
Poly closed_form_moment(Family f, const RingPtr& ring, int n);

// ------------------------------------------------------------- oracles

// All set partitions of {1..n} as restricted growth strings (n <= 10).
std::vector<std::vector<int>> set_partitions(int n);

// Arc diagram statistics of a set partition: arcs join consecutive elements
// of each block; a crossing is a pair of arcs (i,j), (k,l) with i<k<j<l.
struct PartitionStats {
  int blocks = 0;
  int crossings = 0;
};
PartitionStats partition_stats(const std::vector<int>& rgs);

// sum over set partitions of a^blocks q^crossings (n <= 10).
Poly partition_crossing_sum(const RingPtr& ring, int n,
                            const std::string& avar = "a",
                            const std::string& qvar = "q");

// sum over (partial or perfect) matchings of q^(crossings + 2*nestings)
// (n <= 12).
Poly matching_genfun(const RingPtr& ring, int n, bool perfect_only,
                     const std::string& var = "q");

// sigma given in one-line form: sigma[i] is the image of i+1, values 1..n.
struct PermStats {
  int weak_excedances = 0;
  int crossings = 0;
};
PermStats perm_stats(const std::vector<int>& sigma);

// sum over all permutations of y^wex q^crossings (n <= 8).
Poly perm_genfun(const RingPtr& ring, int n, const std::string& yvar = "y",
                 const std::string& qvar = "q");

}  // namespace snfmom
