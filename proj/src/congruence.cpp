#include "qcover/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace qcover {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns true if the classes were distinct. The smaller root wins so the
  // canonical form falls out directly.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence::Congruence(RackPtr carrier) : carrier_(std::move(carrier)) {
  const int n = carrier_->order();
  root_.resize(n);
  std::iota(root_.begin(), root_.end(), 0);
  class_count_ = n;
}

Congruence Congruence::from_pairs(RackPtr carrier, const std::vector<std::pair<int, int>>& pairs) {
  const FiniteRack& X = *carrier;
  const int n = X.order();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ShapeError("pair out of range");
    if (uf.unite(a, b)) work.push_back({a, b});
  }
  // a = b forces a <| c = b <| c, c <| a = c <| b, and the same for <|^-1.
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (int c = 0; c < n; ++c) {
      const std::pair<int, int> derived[4] = {
          {X.fwd(a, c), X.fwd(b, c)},
          {X.fwd(c, a), X.fwd(c, b)},
          {X.bwd(a, c), X.bwd(b, c)},
          {X.bwd(c, a), X.bwd(c, b)},
      };
      for (auto [u, v] : derived)
        if (uf.unite(u, v)) work.push_back({u, v});
    }
  }
  Congruence out(std::move(carrier));
  out.class_count_ = 0;
  for (int i = 0; i < n; ++i) {
    out.root_[i] = uf.find(i);
    if (out.root_[i] == i) ++out.class_count_;
  }
  return out;
}

Congruence Congruence::from_partition(RackPtr carrier, const std::vector<std::vector<int>>& blocks) {
  const int n = carrier->order();
  Congruence out(std::move(carrier));
  std::vector<int> seen(n, 0);
  out.class_count_ = static_cast<int>(blocks.size());
  for (const auto& block : blocks) {
    if (block.empty()) throw ShapeError("empty partition block");
    int least = *std::min_element(block.begin(), block.end());
    for (int x : block) {
      if (x < 0 || x >= n || seen[x]) throw ShapeError("blocks do not partition the carrier");
      seen[x] = 1;
      out.root_[x] = least;
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw ShapeError("blocks do not partition the carrier");
  return out;
}

Congruence Congruence::from_orbits(RackPtr carrier, const PermGroup& H) {
  if (H.degree() != carrier->order()) throw DegreeMismatch("group degree differs from rack order");
  auto orbits = H.orbits();
  return from_partition(std::move(carrier), orbits);
}

std::vector<std::vector<int>> Congruence::classes() const {
  const int n = static_cast<int>(root_.size());
  std::vector<std::vector<int>> out;
  std::vector<int> where(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = root_[i];
    if (where[r] < 0) {
      where[r] = static_cast<int>(out.size());
      out.push_back({});
    }
    out[where[r]].push_back(i);
  }
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (std::size_t i = 0; i < root_.size(); ++i)
    if (!other.same(static_cast<int>(i), root_[i])) return false;
  return true;
}

Congruence orbit_congruence(RackPtr X, const PermGroup& H) {
  return Congruence::from_orbits(std::move(X), H);
}

bool relations_permute(const Congruence& R, const std::vector<std::pair<int, int>>& S) {
  const int n = R.carrier()->order();
  std::vector<std::vector<char>> s(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) s[i][i] = 1;
  for (auto [a, b] : S) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ShapeError("relation pair out of range");
    s[a][b] = 1;
  }
  auto composite = [&](bool r_first) {
    std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool mid = r_first ? R.same(x, y) : s[x][y] != 0;
        if (!mid) continue;
        for (int z = 0; z < n; ++z) {
          bool second = r_first ? s[y][z] != 0 : R.same(y, z);
          if (second) out[x][z] = 1;
        }
      }
    return out;
  };
  return composite(true) == composite(false);
}

}  // namespace qcover
