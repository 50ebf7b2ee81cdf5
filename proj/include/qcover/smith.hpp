#pragma once

#include <vector>

#include "qcover/errors.hpp"

namespace qcover {

using IntMat = std::vector<std::vector<long long>>;

// Diagonal of the Smith normal form plus the derived invariants. The diagonal
// is padded with zeros to the number of columns (generators), entries
// non-negative and forming a divisibility chain.
struct SmithResult {
  std::vector<long long> diagonal;
  int rank_free = 0;                // columns minus nonzero diagonal entries
  std::vector<long long> torsion;   // diagonal entries > 1
};

// Exact integer reduction with checked 64-bit arithmetic; throws
// OverflowGuard if a pivot product would overflow.
SmithResult smith_normal_form(const IntMat& M);

// Smith data with the right transform kept, enough to decide membership in
// the integer lattice spanned by the rows of M.
struct SmithLattice {
  int rows = 0, cols = 0;
  std::vector<long long> diagonal;  // padded to cols
  IntMat V;                         // cols x cols unimodular, M V has the diagonal's columns
};

SmithLattice smith_lattice(const IntMat& M);

// Is d an integer combination of the rows of the reduced matrix?
bool in_row_lattice(const SmithLattice& L, const std::vector<long long>& d);

std::string smith_group_str(const SmithResult& s);

}  // namespace qcover
