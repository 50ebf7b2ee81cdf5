#pragma once

#include "qcover/rack.hpp"

namespace qcover {
namespace zoo {

// Three-element involutive quandle {a, b, s}: s swaps a and b, everything
// else acts trivially.
RackPtr qabs();

// Six-element involutive rack {a, a2, b, b2, 1, 2}: the four letters share
// one symmetry, the numbers act by the two letter swaps.
RackPtr rack6();

// Dihedral rack on Z_n: x <| y = 2y - x.
RackPtr dihedral(int n);

// Conjugation quandle of the symmetric group on three points.
RackPtr conj_s3();

// Cayley table of the symmetric group on three points.
std::vector<std::vector<int>> s3_cayley();
std::vector<std::string> s3_labels();

}  // namespace zoo
}  // namespace qcover
