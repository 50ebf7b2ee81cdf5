#include "qcover/hom.hpp"

#include <algorithm>

namespace qcover {

RackHom check_hom(RackPtr dom, RackPtr cod, std::vector<int> map) {
  const FiniteRack& A = *dom;
  const FiniteRack& B = *cod;
  if (static_cast<int>(map.size()) != A.order()) throw ShapeError("map length differs from domain order");
  for (int v : map)
    if (v < 0 || v >= B.order()) throw ShapeError("map value out of range");
  for (int x = 0; x < A.order(); ++x)
    for (int y = 0; y < A.order(); ++y)
      if (map[A.fwd(x, y)] != B.fwd(map[x], map[y])) throw NotAHomomorphism(x, y);
  std::vector<char> hit(B.order(), 0);
  for (int v : map) hit[v] = 1;
  RackHom h;
  h.dom = std::move(dom);
  h.cod = std::move(cod);
  h.map = std::move(map);
  h.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return h;
}

RackHom identity_hom(RackPtr X) {
  std::vector<int> map(X->order());
  for (int i = 0; i < X->order(); ++i) map[i] = i;
  return check_hom(X, X, std::move(map));
}

RackHom compose_hom(const RackHom& f, const RackHom& g) {
  if (f.cod->order() != g.dom->order() || !f.cod->same_table(*g.dom))
    throw ShapeError("composition mismatch");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return check_hom(f.dom, g.cod, std::move(map));
}

QuotientResult quotient(RackPtr X, const Congruence& C) {
  const FiniteRack& A = *X;
  const int n = A.order();

  // Compatibility: representatives of equal classes must act and be acted on
  // identically up to the partition, for both operations.
  for (int x = 0; x < n; ++x) {
    int x0 = C.cls(x);
    if (x0 == x) continue;
    for (int y = 0; y < n; ++y) {
      if (!C.same(A.fwd(x, y), A.fwd(x0, y)) || !C.same(A.fwd(y, x), A.fwd(y, x0)) ||
          !C.same(A.bwd(x, y), A.bwd(x0, y)) || !C.same(A.bwd(y, x), A.bwd(y, x0)))
        throw IncompatiblePartition("classes of " + A.label(x) + " and " + A.label(x0) +
                                    " act differently at " + A.label(y));
    }
  }

  auto classes = C.classes();
  const int m = static_cast<int>(classes.size());
  std::vector<int> class_index(n, -1);
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) {
    std::string lab = "{";
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      if (k) lab += ",";
      lab += A.label(classes[c][k]);
    }
    lab += "}";
    labels[c] = lab;
    for (int x : classes[c]) class_index[x] = c;
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) table[c][d] = class_index[A.fwd(classes[c][0], classes[d][0])];

  RackPtr Q = make_rack(FiniteRack::validate(A.name() + "/~", std::move(labels), table));
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = class_index[x];
  QuotientResult out;
  out.projection = check_hom(X, Q, std::move(proj));
  out.rack = std::move(Q);
  return out;
}

PullbackResult pullback(const RackHom& f, const RackHom& g) {
  if (f.cod->order() != g.cod->order() || !f.cod->same_table(*g.cod))
    throw ShapeError("pullback requires a common codomain");
  const FiniteRack& A = *f.dom;
  const FiniteRack& B = *g.dom;
  std::vector<std::pair<int, int>> elems;
  for (int x = 0; x < A.order(); ++x)
    for (int y = 0; y < B.order(); ++y)
      if (f.map[x] == g.map[y]) elems.push_back({x, y});
  if (elems.empty()) throw ShapeError("empty pullback");

  const int m = static_cast<int>(elems.size());
  std::vector<int> index(A.order() * B.order(), -1);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    auto [x, y] = elems[i];
    index[x * B.order() + y] = i;
    labels[i] = "(" + A.label(x) + "," + B.label(y) + ")";
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, y] = elems[i];
      auto [u, v] = elems[j];
      table[i][j] = index[A.fwd(x, u) * B.order() + B.fwd(y, v)];
    }
  RackPtr P = make_rack(FiniteRack::validate("pb(" + A.name() + "," + B.name() + ")",
                                             std::move(labels), table));
  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[i] = elems[i].first;
    p2[i] = elems[i].second;
  }
  PullbackResult out;
  out.proj1 = check_hom(P, f.dom, std::move(p1));
  out.proj2 = check_hom(P, g.dom, std::move(p2));
  out.rack = std::move(P);
  return out;
}

Congruence kernel_pair(const RackHom& f) {
  std::vector<std::vector<int>> blocks(f.cod->order());
  for (int x = 0; x < f.dom->order(); ++x) blocks[f.map[x]].push_back(x);
  std::vector<std::vector<int>> nonempty;
  for (auto& b : blocks)
    if (!b.empty()) nonempty.push_back(std::move(b));
  return Congruence::from_partition(f.dom, nonempty);
}

}  // namespace qcover
