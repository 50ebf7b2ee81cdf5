#include "qcover/sampler.hpp"

#include "qcover/zoo.hpp"

#include <algorithm>
#include <numeric>

namespace qcover {
namespace sampler {

namespace {

std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

// Every column equals one fixed permutation sigma: x <| y = sigma(x).
RackPtr constant_action_rack(Rng& rng, int n) {
  std::vector<int> sigma = random_perm(rng, n);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = sigma[x];
  return make_rack(FiniteRack::validate("perm" + std::to_string(n), {}, t));
}

RackPtr affine_rack(Rng& rng, int n) {
  std::vector<int> units;
  for (int t = 1; t < n; ++t)
    if (std::gcd(t, n) == 1) units.push_back(t);
  int t = units[rng.below(static_cast<int>(units.size()))];
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x][y] = ((t * x + (1 - t) * y) % n + n * n) % n;
  return make_rack(FiniteRack::validate("aff" + std::to_string(n) + "_" + std::to_string(t), {}, tab));
}

RackPtr conj_cyclic(int n) {
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
  return conj_of_group("conjZ" + std::to_string(n), {}, cayley);
}

RackPtr disjoint_union(RackPtr A, RackPtr B) {
  const int n = A->order(), m = B->order();
  std::vector<std::vector<int>> t(n + m, std::vector<int>(n + m));
  for (int x = 0; x < n + m; ++x)
    for (int y = 0; y < n + m; ++y) {
      if (x < n && y < n)
        t[x][y] = A->fwd(x, y);
      else if (x >= n && y >= n)
        t[x][y] = n + B->fwd(x - n, y - n);
      else
        t[x][y] = x;  // elements of the other block act trivially
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("L" + A->label(i));
  for (int i = 0; i < m; ++i) labels.push_back("R" + B->label(i));
  return make_rack(FiniteRack::validate(A->name() + "+" + B->name(), std::move(labels), t));
}

RackPtr subrack_closure(Rng& rng, RackPtr X) {
  const FiniteRack& R = *X;
  const int n = R.order();
  std::vector<char> in(n, 0);
  int seeds = 1 + rng.below(n);
  for (int i = 0; i < seeds; ++i) in[rng.below(n)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!in[x] || !in[y]) continue;
        for (int v : {R.fwd(x, y), R.bwd(x, y)})
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
      }
  }
  std::vector<int> members;
  for (int x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  if (static_cast<int>(members.size()) == n) return X;
  std::vector<int> index(n, -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[members[i]] = static_cast<int>(i);
    labels.push_back(R.label(members[i]));
  }
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = index[R.fwd(members[i], members[j])];
  return make_rack(FiniteRack::validate(R.name() + "sub", std::move(labels), t));
}

RackPtr relabeled(Rng& rng, RackPtr X) {
  const FiniteRack& R = *X;
  const int n = R.order();
  std::vector<int> p = random_perm(rng, n);  // new index of old element
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) labels[p[x]] = R.label(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[p[x]][p[y]] = p[R.fwd(x, y)];
  return make_rack(FiniteRack::validate(R.name() + "'", std::move(labels), t));
}

}  // namespace

RackPtr random_rack(Rng& rng, int max_order) {
  RackPtr out;
  switch (rng.below(9)) {
    case 0:
      out = trivial_rack(1 + rng.below(max_order));
      break;
    case 1:
      out = constant_action_rack(rng, 1 + rng.below(max_order));
      break;
    case 2:
      out = zoo::dihedral(std::min(max_order, 3 + rng.below(4)));
      break;
    case 3:
      out = max_order >= 3 ? affine_rack(rng, 3 + rng.below(std::max(1, max_order - 2)))
                           : trivial_rack(max_order);
      break;
    case 4:
      out = conj_cyclic(1 + rng.below(max_order));
      break;
    case 5: {
      if (max_order >= 2) {
        int n1 = 1 + rng.below(max_order - 1);
        Rng sub(rng.next());
        out = disjoint_union(random_rack(sub, n1), random_rack(sub, max_order - n1));
      } else {
        out = trivial_rack(1);
      }
      break;
    }
    case 6: {
      Rng sub(rng.next());
      out = subrack_closure(rng, random_rack(sub, max_order));
      break;
    }
    case 7: {
      Rng sub(rng.next());
      RackPtr base = random_rack(sub, max_order);
      Congruence c = random_congruence(rng, base);
      out = quotient(base, c).rack;
      break;
    }
    default: {
      if (max_order >= 6 && rng.below(2))
        out = zoo::rack6();
      else if (max_order >= 3)
        out = zoo::qabs();
      else
        out = trivial_rack(std::min(2, max_order));
      break;
    }
  }
  if (out->order() > max_order) {
    Rng sub(rng.next());
    return random_rack(sub, max_order);
  }
  if (rng.chance(1, 3)) out = relabeled(rng, out);
  return out;
}

Congruence random_congruence(Rng& rng, RackPtr X) {
  const int n = X->order();
  std::vector<std::pair<int, int>> pairs;
  int k = rng.below(3);
  for (int i = 0; i < k; ++i) pairs.push_back({rng.below(n), rng.below(n)});
  return Congruence::from_pairs(std::move(X), pairs);
}

RackHom random_surjection(Rng& rng, int max_order) {
  RackPtr A = random_rack(rng, max_order);
  Congruence c = random_congruence(rng, A);
  return quotient(A, c).projection;
}

RackHom random_covering(Rng& rng, int max_order, std::size_t cap) {
  if (rng.chance(1, 3)) {
    FrqResult q = frq(random_rack(rng, max_order));
    return q.unit;
  }
  RackHom f = random_surjection(rng, max_order);
  return centralize(f, cap).central;
}

std::vector<std::pair<int, int>> random_reflexive_relation(Rng& rng, const FiniteRack& X) {
  const int n = X.order();
  std::vector<char> in(n * n, 0);
  for (int i = 0; i < n; ++i) in[i * n + i] = 1;
  int k = rng.below(3);
  for (int i = 0; i < k; ++i) in[rng.below(n) * n + rng.below(n)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int p = 0; p < n * n; ++p) {
      if (!in[p]) continue;
      for (int q = 0; q < n * n; ++q) {
        if (!in[q]) continue;
        int a = p / n, b = p % n, c = q / n, d = q % n;
        int fwd = X.fwd(a, c) * n + X.fwd(b, d);
        int bwd = X.bwd(a, c) * n + X.bwd(b, d);
        if (!in[fwd]) {
          in[fwd] = 1;
          grew = true;
        }
        if (!in[bwd]) {
          in[bwd] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<std::pair<int, int>> rel;
  for (int p = 0; p < n * n; ++p)
    if (in[p]) rel.push_back({p / n, p % n});
  return rel;
}

GroupWord random_word(Rng& rng, int alphabet, int max_len) {
  std::vector<Letter> letters;
  int len = rng.below(max_len + 1);
  for (int i = 0; i < len; ++i) letters.push_back({rng.below(alphabet), rng.sign()});
  return GroupWord(std::move(letters));
}

GroupWord random_balanced_word(Rng& rng, int alphabet, int half_len) {
  std::vector<Letter> letters;
  int k = rng.below(half_len + 1);
  for (int i = 0; i < k; ++i) {
    letters.push_back({rng.below(alphabet), 1});
    letters.push_back({rng.below(alphabet), -1});
  }
  // Interleave by rotation so the positive and negative halves mix.
  int rot = letters.empty() ? 0 : rng.below(static_cast<int>(letters.size()));
  std::rotate(letters.begin(), letters.begin() + rot, letters.end());
  return GroupWord(std::move(letters));
}

Horn random_horn(Rng& rng, const RackHom& f) {
  const int n = f.dom->order();
  std::vector<std::pair<int, int>> eq;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.map[a] == f.map[b]) eq.push_back({a, b});
  Horn h;
  h.hom = f;
  h.base = rng.below(n);
  int len = 0;
  while (len < 6 && rng.chance(3, 4)) ++len;
  for (int i = 0; i < len; ++i) {
    auto [a, b] = eq[rng.below(static_cast<int>(eq.size()))];
    h.steps.push_back({a, b, rng.sign()});
  }
  return h;
}

RackPtr mutate_table(Rng& rng, const FiniteRack& X) {
  const int n = X.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = X.fwd(x, y);
  if (n >= 2) {
    int y = rng.below(n);
    int x1 = rng.below(n);
    int x2 = (x1 + 1 + rng.below(n - 1)) % n;
    std::swap(t[x1][y], t[x2][y]);
  }
  return make_rack(FiniteRack::unchecked(X.name() + "!", X.labels(), t));
}

}  // namespace sampler
}  // namespace qcover
