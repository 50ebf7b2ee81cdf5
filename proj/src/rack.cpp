#include "qcover/rack.hpp"

#include <algorithm>

namespace qcover {

FiniteRack FiniteRack::build(std::string name, std::vector<std::string> labels,
                             const std::vector<std::vector<int>>& table, bool check_r2) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ShapeError("empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw ShapeError("table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw ShapeError("table entry out of range");
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) throw ShapeError("label count does not match order");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw ShapeError("duplicate label '" + labels[i] + "'");

  FiniteRack r;
  r.name_ = std::move(name);
  r.labels_ = std::move(labels);
  r.n_ = n;
  r.pos_.resize(n * n);
  r.neg_.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.pos_[x * n + y] = table[x][y];

  // Each column must be a permutation; its inverse defines <|^-1.
  for (int y = 0; y < n; ++y) {
    std::vector<int> hit(n, -1);
    for (int x = 0; x < n; ++x) {
      int v = r.pos_[x * n + y];
      if (hit[v] != -1) throw NotBijectiveColumn(y);
      hit[v] = x;
    }
    for (int v = 0; v < n; ++v) r.neg_[v * n + y] = hit[v];
  }

  if (check_r2) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (r.fwd(r.fwd(x, y), z) != r.fwd(r.fwd(x, z), r.fwd(y, z)))
            throw SelfDistributivityFail(x, y, z);
  }
  return r;
}

FiniteRack FiniteRack::validate(std::string name, std::vector<std::string> labels,
                                const std::vector<std::vector<int>>& table) {
  return build(std::move(name), std::move(labels), table, true);
}

FiniteRack FiniteRack::unchecked(std::string name, std::vector<std::string> labels,
                                 const std::vector<std::vector<int>>& table) {
  return build(std::move(name), std::move(labels), table, false);
}

Perm FiniteRack::symmetry(int y) const {
  Perm p(n_);
  for (int x = 0; x < n_; ++x) p[x] = fwd(x, y);
  return p;
}

Perm FiniteRack::symmetry_inv(int y) const {
  Perm p(n_);
  for (int x = 0; x < n_; ++x) p[x] = bwd(x, y);
  return p;
}

int FiniteRack::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

RackFlags FiniteRack::classify() const {
  RackFlags f;
  f.is_quandle = true;
  f.is_involutive = true;
  f.is_trivial = true;
  for (int x = 0; x < n_; ++x) {
    if (fwd(x, x) != x) f.is_quandle = false;
    for (int y = 0; y < n_; ++y) {
      if (fwd(fwd(x, y), y) != x) f.is_involutive = false;
      if (fwd(x, y) != x) f.is_trivial = false;
    }
  }
  return f;
}

RackPtr trivial_rack(int n, const std::string& name) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = x;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_rack(FiniteRack::validate(name.empty() ? "T" + std::to_string(n) : name,
                                        std::move(labels), table));
}

RackPtr conj_of_group(std::string name, std::vector<std::string> labels,
                      const std::vector<std::vector<int>>& cayley) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool id = true;
    for (int x = 0; x < n; ++x)
      if (cayley[i][x] != x || cayley[x][i] != x) {
        id = false;
        break;
      }
    if (id) e = i;
  }
  if (e < 0) throw NotAGroup("no identity element");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (cayley[a][b] == e && cayley[b][a] == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) table[x][a] = cayley[cayley[inv[a]][x]][a];
  return make_rack(FiniteRack::validate(std::move(name), std::move(labels), table));
}

PermGroup inn_generators(const FiniteRack& X) {
  std::vector<Perm> gens;
  gens.reserve(X.order());
  for (int y = 0; y < X.order(); ++y) gens.push_back(X.symmetry(y));
  return PermGroup(X.order(), std::move(gens));
}

PermGroup inn_group(const FiniteRack& X, std::size_t cap) {
  PermGroup g = inn_generators(X);
  g.elements(cap);
  return g;
}

}  // namespace qcover
