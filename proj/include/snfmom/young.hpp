#pragma once

// Matrices of skew-shape generating functions over a Young diagram, their
// exact factorization into unitriangular times (shifted) diagonal times
// unitriangular, and the q-specialization that recovers the Hankel matrices
// of area-weighted Catalan numbers.
//
// Cells are 1-based: (u,v) is row u, column v; cell (u,v) carries the
// variable x{u}_{v}. For a shape L and corner (i,j), L(i,j) denotes
// {(u,v) in L : u >= i, v >= j}. The generating function of an anchored
// region R sums, over all down-closed subsets M of R (componentwise order),
// the product of the variables in R \ M.

#include <string>
#include <utility>
#include <vector>

#include "snfmom/polymat.hpp"
#include "snfmom/report.hpp"

namespace snfmom {

class YoungShape {
 public:
  explicit YoungShape(std::vector<int> rows);  // weakly decreasing, positive

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return rows_.empty() ? 0 : rows_[0]; }
  int cell_count() const;
  bool contains(int u, int v) const;  // 1-based
  std::vector<int> conjugate() const;
  // largest d with (d,d) in the shape
  int diagonal_length() const;
  std::string to_string() const;  // e.g. "(3,1)"

  static YoungShape staircase(int top);  // (top, top-1, ..., 1)

 private:
  std::vector<int> rows_;
};

// An anchored region: line t (0-based) holds cells at grid positions
//   normal:     (top + t, left .. left + len[t] - 1)   (lines are rows)
//   transposed: (top .. top + len[t] - 1, left + t)    (lines are columns)
// with len weakly decreasing, so down-closed subsets are per-line prefixes
// of weakly decreasing lengths.
struct Region {
  int top = 1, left = 1;
  std::vector<int> len;
  bool transposed = false;
  int cell_count() const;
};

// Grid coordinates (u,v) of the region's cells, line by line.
std::vector<std::pair<int, int>> region_cells(const Region& r);

Region lambda_region(const YoungShape& shape, int i, int j);
// {(u,v) in shape : i <= u < k, v >= k - shift}, rows clamped to the shape
Region upper_region(const YoungShape& shape, int i, int k, int shift = 0);
// {(u,v) in shape : j <= v < l, u >= l - shift}, stored by columns
Region lower_region(const YoungShape& shape, int l, int j, int shift = 0);

// Generating function of the region's down-closed subsets (cells at most
// 40); cell (u,v) contributes variable x{u}_{v}.
Poly region_genfun(const RingPtr& ring, const Region& r);
// Same sum with every cell contributing the single variable `var`.
Poly region_genfun_uniform(const RingPtr& ring, const Region& r,
                           const std::string& var);
// Product of the region's variables.
Poly region_product(const RingPtr& ring, const Region& r);

// Entry (i,j), 1-based, is the generating function of shape(i,j).
// Square version: (d+1) x (d+1); rectangular version: a x b for an anchor
// square (a,b) on the outer border strip of the shape.
PolyMatrix a_matrix(const RingPtr& ring, const YoungShape& shape);
PolyMatrix rect_a_matrix(const RingPtr& ring, const YoungShape& shape,
                         int a, int b);

// True when (a,b) lies just outside the shape on the strip running from the
// square below the first column to the square right of the first row: the
// diagonal neighbor (a-1,b-1) lies in the shape, or does so virtually via
// row 0 (b-1 <= first row length) or column 0 (a-1 <= number of rows).
bool border_anchor(const YoungShape& shape, int a, int b);

struct UdlFactors {
  PolyMatrix u, d, l;  // upper unitriangular, (shifted) diagonal, lower
};
UdlFactors udl_combinatorial(const RingPtr& ring, const YoungShape& shape);
UdlFactors rect_udl_combinatorial(const RingPtr& ring,
                                  const YoungShape& shape, int a, int b);

// Checks A = U D L exactly, the triangularity of the factors, the
// determinant split det A = prod D_kk, and that the reversed diagonal
// (1, D_dd, .., D_11) is an ascending divisibility chain reachable by a
// signed permutation.
VerificationReport verify_udl(const YoungShape& shape);

// Rectangular analogue at a border anchor (a,b): A = U D L with D holding
// d_i = prod over shape(a-i+1, b-i+1) at position (a-i+1, b-i+1), and
// signed permutations X, Y with X D Y = diag(d_1, .., d_c, 0, ..) an
// ascending chain starting at d_1 = 1 (c = min(a,b)).
VerificationReport verify_rect_udl(const YoungShape& shape, int a, int b);

// Bridge between the staircase specialization x_s = q and the moment-matrix
// results for area-weighted Catalan numbers: for the staircase with top row
// 2n-1 (odd = false) or 2n (odd = true), the skew matrix equals the
// row-and-column reversed Hankel matrix of C_{i+j}(q) resp. C_{i+j+1}(q),
// and the reversed factorization diagonal equals the Hankel claim
// q^binom(2t,2) resp. q^binom(2t+1,2).
VerificationReport catalan_specialization(int n, bool odd);

}  // namespace snfmom
