#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcover/errors.hpp"
#include "qcover/perm.hpp"

namespace qcover {

struct RackFlags {
  bool is_quandle = false;
  bool is_involutive = false;
  bool is_trivial = false;
};

// A finite rack as a validated order-n table. table(x, y) = x <| y, so the
// column at y is the symmetry S_y; the inverse operation is derived by
// inverting each column and stored.
class FiniteRack {
 public:
  // Validates both axioms: every column a permutation, self-distributivity on
  // all triples. Throws NotBijectiveColumn / SelfDistributivityFail /
  // ShapeError with the first witness found.
  static FiniteRack validate(std::string name, std::vector<std::string> labels,
                             const std::vector<std::vector<int>>& table);

  // Builds without any axiom check. Exists only so that deliberately broken
  // tables can be injected into the self-test batteries; columns must still
  // be permutations so the inverse table is defined.
  static FiniteRack unchecked(std::string name, std::vector<std::string> labels,
                              const std::vector<std::vector<int>>& table);

  int order() const { return n_; }
  int fwd(int x, int y) const { return pos_[x * n_ + y]; }
  int bwd(int x, int y) const { return neg_[x * n_ + y]; }
  int op(int x, int y, int sign) const { return sign > 0 ? fwd(x, y) : bwd(x, y); }

  // The symmetry S_y as a permutation (x maps to x <| y).
  Perm symmetry(int y) const;
  Perm symmetry_inv(int y) const;

  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent

  RackFlags classify() const;

  bool same_table(const FiniteRack& other) const {
    return n_ == other.n_ && pos_ == other.pos_;
  }

 private:
  FiniteRack() = default;
  static FiniteRack build(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<int>>& table, bool check_r2);

  std::string name_;
  std::vector<std::string> labels_;
  int n_ = 0;
  std::vector<int> pos_, neg_;
};

using RackPtr = std::shared_ptr<const FiniteRack>;

inline RackPtr make_rack(FiniteRack r) { return std::make_shared<const FiniteRack>(std::move(r)); }

// Trivial rack: x <| y = x.
RackPtr trivial_rack(int n, const std::string& name = "");

// Conjugation rack of a group table: x <| a = a^-1 x a. Checks that the table
// is a group (associativity, identity, inverses) and throws NotAGroup
// otherwise. The result is always a quandle.
RackPtr conj_of_group(std::string name, std::vector<std::string> labels,
                      const std::vector<std::vector<int>>& cayley);

// Inner automorphism group, generated by the symmetries. Materializes the
// closure eagerly (breadth-first multiplication, capped).
PermGroup inn_group(const FiniteRack& X, std::size_t cap = kDefaultClosureCap);

// Generators of Inn(X) without materializing the closure.
PermGroup inn_generators(const FiniteRack& X);

}  // namespace qcover
