#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcover/errors.hpp"

namespace qcover {

// A permutation of {0..n-1}, stored as its image table: p[x] is the image of x.
// Points act on the right, so composition reads left to right.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool perm_is_identity(const Perm& p);
// compose(p, q): apply p first, then q.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
// g^-1 * p * g, reading left to right (conjugate of p by g).
Perm perm_conjugate(const Perm& p, const Perm& g);
std::string perm_cycles(const Perm& p, const std::vector<std::string>& labels);

std::size_t perm_hash(const Perm& p);

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// A finite permutation group given by generators. The full element set is
// materialized lazily by breadth-first multiplication and cached; the cap
// bounds the closure size.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  // True iff the generator list is empty (every generator was the identity).
  bool is_trivial() const { return gens_.empty(); }

  const std::vector<Perm>& elements(std::size_t cap = kDefaultClosureCap) const;
  std::size_t order(std::size_t cap = kDefaultClosureCap) const { return elements(cap).size(); }
  bool contains(const Perm& p, std::size_t cap = kDefaultClosureCap) const;

  // Orbit of a point under the generators and their inverses, sorted.
  std::vector<int> orbit(int point) const;
  // All orbits, each sorted, ordered by least member.
  std::vector<std::vector<int>> orbits() const;

  // Stabilizer of a point, generated by Schreier generators.
  PermGroup stabilizer(int point) const;

  // Subgroup normally generated by `seed` inside this group: closes the seed
  // set under conjugation by the group generators. The returned group is
  // presented by that conjugation-closed generating set.
  PermGroup normal_closure(const std::vector<Perm>& seed, std::size_t cap = kDefaultClosureCap) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  mutable std::vector<Perm> elements_;
  mutable bool materialized_ = false;
};

}  // namespace qcover
