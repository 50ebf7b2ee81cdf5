#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcover/errors.hpp"

namespace qcover {

// One signed generator occurrence: (generator index, +1 or -1).
using Letter = std::pair<int, int>;

// A freely reduced word over indexed generators. Every constructor and
// operation reduces eagerly, so adjacent cancelling letters never survive.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);
  static GroupWord single(int gen, int sign);

  GroupWord operator*(const GroupWord& other) const;
  GroupWord inverse() const;
  bool operator==(const GroupWord& other) const { return letters_ == other.letters_; }
  bool operator!=(const GroupWord& other) const { return !(*this == other); }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  // Exponent sum; a homomorphism to the integers.
  int char_sum() const;

  // Letterwise image under a generator map, reduced.
  GroupWord mapped(const std::vector<int>& f) const;

  // Exponent-sum vector over an alphabet of the given size.
  std::vector<long long> exponent_vector(int alphabet_size) const;

  // Token syntax: whitespace-separated `g` or `g^-1` over declared labels.
  static GroupWord parse(const std::string& text, const std::vector<std::string>& labels);
  std::string str(const std::vector<std::string>& labels) const;

  std::size_t hash() const;

 private:
  std::vector<Letter> letters_;
};

// Reduce a raw letter sequence (cancel adjacent inverse pairs to a fixpoint).
std::vector<Letter> reduce_letters(const std::vector<Letter>& raw);

std::string letters_str(const std::vector<Letter>& letters, const std::vector<std::string>& labels);

}  // namespace qcover
