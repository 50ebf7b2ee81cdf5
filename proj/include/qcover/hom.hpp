#pragma once

#include <utility>
#include <vector>

#include "qcover/congruence.hpp"
#include "qcover/rack.hpp"

namespace qcover {

// A validated rack homomorphism. Preserving <| suffices; <|^-1 preservation
// follows from it.
struct RackHom {
  RackPtr dom;
  RackPtr cod;
  std::vector<int> map;
  bool surjective = false;

  int operator()(int x) const { return map[x]; }
};

RackHom check_hom(RackPtr dom, RackPtr cod, std::vector<int> map);

RackHom identity_hom(RackPtr X);

// Compose f then g.
RackHom compose_hom(const RackHom& f, const RackHom& g);

struct QuotientResult {
  RackPtr rack;
  RackHom projection;
};

// Quotient by a partition. Verifies compatibility even for congruences built
// by closure; a raw partition that fails gets an IncompatiblePartition with
// the witness. Class labels are brace-joined member labels, classes ordered
// by least member.
QuotientResult quotient(RackPtr X, const Congruence& C);

struct PullbackResult {
  RackPtr rack;
  RackHom proj1;  // onto dom(f)
  RackHom proj2;  // onto dom(g)
};

// Subrack of the product on pairs agreeing in the common codomain.
PullbackResult pullback(const RackHom& f, const RackHom& g);

// Kernel pair as a congruence on the domain.
Congruence kernel_pair(const RackHom& f);

}  // namespace qcover
