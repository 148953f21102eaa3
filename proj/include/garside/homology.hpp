#pragma once

// The Dehornoy-Lafont complex of the interval monoid with trivial integer
// coefficients, in degrees <= 3, and the homology groups H_1 and H_2.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "garside/monoid.hpp"
#include "garside/smith.hpp"

namespace garside {

/// Position of an atom in s_n < ... < s_3 < t_0 < ... < t_{e-1}.
int atom_order(const Generator& g, const GroupParams& params);

struct Cell {
  std::vector<Generator> atoms;  // strictly increasing in atom_order

  std::string to_string() const;  // "[s3,t0,t2]"
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Least common left multiple of the atoms (join for right divisibility).
int cell_lcm(const GarsideStructure& g, const std::vector<Generator>& atoms);
/// Least atom dividing the simple s on the right.
Generator least_right_divisor(const GarsideStructure& g, int s);

/// All r-cells, sorted by atom order. enumerate_cells(g, 0) is {[]}.
std::vector<Cell> enumerate_cells(const GarsideStructure& g, int r);

/// True when every set of at most `max_size` atoms has the same join for
/// left and for right divisibility.
bool atom_joins_agree(const GarsideStructure& g, int max_size);

/// Matrix of d_r (rows: (r-1)-cells, columns: r-cells) from the closed-form
/// formulas. r must be 2 or 3. Throws TheoremViolation on an unclassified cell.
IntMatrix differential_closed_form(const GarsideStructure& g, int r);

/// d_r, r in 1..3, from the recursive definition with monoid coefficients,
/// then augmented. Throws CapExceeded when the recursion grows past `cap`
/// memoized terms.
IntMatrix differential_generic(const GarsideStructure& g, int r, std::size_t cap = 2000000);

/// Boundary of one r-cell with monoid coefficients, as "coef*word[cell]" terms.
std::vector<std::string> generic_boundary_terms(const GarsideStructure& g, const Cell& cell);

enum class DifferentialMethod { Closed, Generic };

/// H_r for r in {1, 2}, using ranks and invariant factors.
AbelianGroup homology_group(const GarsideStructure& g, int r,
                            DifferentialMethod method = DifferentialMethod::Closed);

/// Same group through an explicit kernel basis.
AbelianGroup homology_group_via_kernel(const GarsideStructure& g, int r,
                                       DifferentialMethod method = DifferentialMethod::Closed);

}  // namespace garside
