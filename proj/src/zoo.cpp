#include "qcover/zoo.hpp"

#include <array>

namespace qcover {
namespace zoo {

RackPtr qabs() {
  return make_rack(FiniteRack::validate("Qabs", {"a", "b", "s"},
                                        {{0, 0, 1}, {1, 1, 0}, {2, 2, 2}}));
}

RackPtr rack6() {
  // Symmetries, one row per acting element.
  std::vector<std::vector<int>> rows = {
      {1, 0, 3, 2, 4, 5}, {1, 0, 3, 2, 4, 5}, {1, 0, 3, 2, 4, 5},
      {1, 0, 3, 2, 4, 5}, {2, 3, 0, 1, 4, 5}, {3, 2, 1, 0, 4, 5}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) t[x][y] = rows[y][x];
  return make_rack(FiniteRack::validate("rack6", {"a", "a2", "b", "b2", "1", "2"}, t));
}

RackPtr dihedral(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  return make_rack(FiniteRack::validate("R" + std::to_string(n), {}, t));
}

std::vector<std::string> s3_labels() { return {"e", "r", "rr", "s", "sr", "srr"}; }

std::vector<std::vector<int>> s3_cayley() {
  // Permutations of {0,1,2}: e, r = (0 1 2), rr = (0 2 1), s = (0 1),
  // sr = s then r, srr = s then rr. Product x*y = apply x, then y.
  auto apply = [](const std::array<int, 3>& p, const std::array<int, 3>& q) {
    return std::array<int, 3>{q[p[0]], q[p[1]], q[p[2]]};
  };
  std::vector<std::array<int, 3>> elems = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  std::vector<std::vector<int>> cayley(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto prod = apply(elems[i], elems[j]);
      for (int k = 0; k < 6; ++k)
        if (prod == elems[k]) cayley[i][j] = k;
    }
  return cayley;
}

RackPtr conj_s3() { return conj_of_group("conjS3", s3_labels(), s3_cayley()); }

}  // namespace zoo
}  // namespace qcover
