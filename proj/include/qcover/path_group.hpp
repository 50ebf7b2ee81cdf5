#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcover/hom.hpp"
#include "qcover/perm.hpp"
#include "qcover/rack.hpp"
#include "qcover/smith.hpp"
#include "qcover/word.hpp"

namespace qcover {

// Finite presentation of the path group of a rack: one generator per element,
// one relation per (x, a) pair identifying the generator of x <| a with the
// conjugate a^-1 x a. Relations are stored reduced, in row-major (x, a) order.
struct PathPresentation {
  RackPtr rack;
  std::vector<GroupWord> relations;  // n^2 entries, possibly empty words
};

PathPresentation pth_presentation(RackPtr X);

// Exponent-sum rows of the relations (n^2 x n, entries in {-1,0,1}).
IntMat relation_matrix(const PathPresentation& P);

// Image of a word under the quotient onto the inner automorphism group:
// compose the symmetries left to right.
Perm excess(const FiniteRack& X, const GroupWord& u);

// Right action of a word on an element; evaluates trails to their endpoint.
int act(const FiniteRack& X, int x, const GroupWord& u);

// Rank and torsion of the abelianized path group via Smith reduction of the
// relation matrix.
SmithResult abelianization(const PathPresentation& P);

// Words base * g_i^-1 generating the characteristic-zero subgroup against a
// fixed base element.
std::vector<GroupWord> pth0_generators(const FiniteRack& X, int base = 0);

// Image under the excess of the kernel of the induced map between path
// groups: the normal closure, inside Inn(dom), of the symmetry quotients
// S_a S_b^-1 over kernel pairs of f. Requires f surjective.
PermGroup kernel_image_subgroup(const RackHom& f, std::size_t cap = kDefaultClosureCap);

// Sound three-valued equality in the path group. Equal and NotEqual are
// certified; Unknown is the honest fallback (the full word problem is out of
// reach). NotEqual carries the separating invariant.
enum class Eq3 { Equal, NotEqual, Unknown };

struct Eq3Config {
  int depth = 4;             // relator insertions per derivation
  int length_cap = 32;       // longest intermediate word kept
  std::size_t node_budget = 65536;  // visited-word bound per query
};

struct WordEqReport {
  Eq3 verdict = Eq3::Unknown;
  std::string method;  // "free-reduction", "rewriting", "excess", "abelianized"
  std::string detail;
};

WordEqReport word_eq3(const FiniteRack& X, const GroupWord& u, const GroupWord& v,
                      const Eq3Config& cfg = {});

}  // namespace qcover
