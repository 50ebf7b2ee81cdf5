#pragma once

#include <utility>
#include <vector>

#include "qcover/congruence.hpp"
#include "qcover/covers.hpp"
#include "qcover/hom.hpp"
#include "qcover/rack.hpp"
#include "qcover/rng.hpp"
#include "qcover/word.hpp"

namespace qcover {

// Deterministic generators for the property batteries. Racks are drawn from
// closed families (constant-action racks, dihedral and affine quandles,
// conjugation racks, disjoint unions, subracks, quotients, relabelings), so
// every sample is a valid rack by construction.
namespace sampler {

RackPtr random_rack(Rng& rng, int max_order);

// Canonical quotient by a random congruence, optionally relabeled.
RackHom random_surjection(Rng& rng, int max_order);

// A surjection that is a covering: the centralization of a random
// surjection, or a quandle-reflection unit.
RackHom random_covering(Rng& rng, int max_order, std::size_t cap);

Congruence random_congruence(Rng& rng, RackPtr X);

// Internal reflexive relation: the diagonal plus random pairs, closed under
// the componentwise operations (a subrack of X x X containing the diagonal).
// The permutability laws hold for these, not for arbitrary pair sets.
std::vector<std::pair<int, int>> random_reflexive_relation(Rng& rng, const FiniteRack& X);

GroupWord random_word(Rng& rng, int alphabet, int max_len);

// Word of characteristic zero (balanced signs), possibly empty.
GroupWord random_balanced_word(Rng& rng, int alphabet, int half_len);

// Step pairs drawn uniformly from the kernel pairs of f, geometric length
// with mean 3 truncated at 6.
Horn random_horn(Rng& rng, const RackHom& f);

// One entry swap inside a column: keeps every column a permutation but
// almost always breaks self-distributivity. For fault-injection self-tests.
RackPtr mutate_table(Rng& rng, const FiniteRack& X);

}  // namespace sampler

}  // namespace qcover
