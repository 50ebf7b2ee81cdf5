#pragma once

#include <utility>
#include <vector>

#include "qcover/perm.hpp"
#include "qcover/rack.hpp"

namespace qcover {

// A rack-compatible partition of the carrier. Stored in canonical form: each
// element points at the least member of its class, so two congruences on the
// same carrier compare by ==.
class Congruence {
 public:
  // Discrete congruence (everything is its own class).
  explicit Congruence(RackPtr carrier);

  // Smallest compatible equivalence containing the pairs: union-find closure
  // to a fixpoint under both operations in both argument positions.
  static Congruence from_pairs(RackPtr carrier, const std::vector<std::pair<int, int>>& pairs);

  // Raw partition, not closed and not checked for compatibility (quotient()
  // performs the compatibility check). Blocks must cover the carrier.
  static Congruence from_partition(RackPtr carrier, const std::vector<std::vector<int>>& blocks);

  // Orbit congruence of a permutation group acting on the carrier.
  static Congruence from_orbits(RackPtr carrier, const PermGroup& H);

  const RackPtr& carrier() const { return carrier_; }
  int cls(int x) const { return root_[x]; }
  bool same(int a, int b) const { return root_[a] == root_[b]; }
  int class_count() const { return class_count_; }
  bool is_discrete() const { return class_count_ == static_cast<int>(root_.size()); }

  // Classes sorted internally, ordered by least member.
  std::vector<std::vector<int>> classes() const;

  // True iff every class of this congruence is inside a class of `other`.
  bool refines(const Congruence& other) const;

  bool operator==(const Congruence& other) const { return root_ == other.root_; }
  bool operator!=(const Congruence& other) const { return !(*this == other); }

 private:
  RackPtr carrier_;
  std::vector<int> root_;
  int class_count_ = 0;
};

Congruence orbit_congruence(RackPtr X, const PermGroup& H);

// Do the relations R and S permute as composites (R then S equals S then R)?
// S is an arbitrary relation given as a pair list; the diagonal is added so
// the input is reflexive as required.
bool relations_permute(const Congruence& R, const std::vector<std::pair<int, int>>& S);

}  // namespace qcover
