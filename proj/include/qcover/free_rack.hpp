#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcover/word.hpp"

namespace qcover {

// Normal form of a free-rack element: a head generator and a reduced path
// word acting on it.
struct FreeRackElem {
  int head = 0;
  GroupWord path;
  bool operator==(const FreeRackElem& o) const { return head == o.head && path == o.path; }
};

// (a,g) <|^s (b,h) = (a, g h^-1 b^s h).
FreeRackElem fr_op(const FreeRackElem& x, const FreeRackElem& y, int sign);

// Free-quandle normal form: the path is the characteristic-zero
// representative relative to the head.
struct FreeQuandleElem {
  int head = 0;
  GroupWord path;  // char_sum() == 0
  bool operator==(const FreeQuandleElem& o) const { return head == o.head && path == o.path; }
};

// (a, a^-chi(g) g): rebalance any word to its characteristic-zero
// representative relative to the head.
FreeQuandleElem fq_normalize(int head, const GroupWord& g);

// (a,g) <|^s (b,h) = (a, a^-s g h^-1 b^s h); inputs must have characteristic
// zero (CharacteristicNonZero otherwise) and the result does too.
FreeQuandleElem fq_op(const FreeQuandleElem& x, const FreeQuandleElem& y, int sign);

// Witness that a word dies in the free group of the codomain: the
// non-crossing pairing of its letter positions plus the pair (nu, nu') where
// nu is the word itself and nu' replaces every letter by the earlier letter
// of its pair. nu' reduces to the empty word and maps letterwise to the same
// image as nu.
struct SymmetricPairWitness {
  std::vector<std::pair<int, int>> pairing;  // 0-based positions, first < second
  std::vector<Letter> nu;                    // raw letters, not reduced
  std::vector<Letter> nu_prime;              // raw letters, reduces to empty
};

// If the image of u under the generator map f reduces to the empty word,
// produce the pairing (stack order: each letter pairs with the most recent
// unmatched cancelling one); otherwise nullopt (not in the kernel).
std::optional<SymmetricPairWitness> kernel_pairing(const std::vector<int>& f, const GroupWord& u);

}  // namespace qcover
