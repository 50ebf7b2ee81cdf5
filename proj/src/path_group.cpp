#include "qcover/path_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace qcover {

namespace {

std::vector<GroupWord> pth_relations(const FiniteRack& R) {
  const int n = R.order();
  std::vector<GroupWord> rels;
  rels.reserve(n * n);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      int c = R.fwd(x, a);
      rels.push_back(GroupWord({{c, -1}, {a, -1}, {x, 1}, {a, 1}}));
    }
  return rels;
}

IntMat relation_matrix_of(const std::vector<GroupWord>& rels, int n) {
  IntMat M;
  M.reserve(rels.size());
  for (const GroupWord& r : rels) M.push_back(r.exponent_vector(n));
  return M;
}

}  // namespace

PathPresentation pth_presentation(RackPtr X) {
  PathPresentation P;
  P.relations = pth_relations(*X);
  P.rack = std::move(X);
  return P;
}

IntMat relation_matrix(const PathPresentation& P) {
  return relation_matrix_of(P.relations, P.rack->order());
}

Perm excess(const FiniteRack& X, const GroupWord& u) {
  Perm p = perm_identity(X.order());
  for (const Letter& l : u.letters()) {
    Perm s = l.second > 0 ? X.symmetry(l.first) : X.symmetry_inv(l.first);
    p = perm_compose(p, s);
  }
  return p;
}

int act(const FiniteRack& X, int x, const GroupWord& u) {
  for (const Letter& l : u.letters()) x = X.op(x, l.first, l.second);
  return x;
}

SmithResult abelianization(const PathPresentation& P) {
  return smith_normal_form(relation_matrix(P));
}

std::vector<GroupWord> pth0_generators(const FiniteRack& X, int base) {
  if (X.order() == 0) throw EmptyRack("no base element");
  if (base < 0 || base >= X.order()) throw ShapeError("base out of range");
  std::vector<GroupWord> out;
  for (int i = 0; i < X.order(); ++i) {
    if (i == base) continue;
    out.push_back(GroupWord({{base, 1}, {i, -1}}));
  }
  return out;
}

PermGroup kernel_image_subgroup(const RackHom& f, std::size_t cap) {
  if (!f.surjective) throw NotSurjective("kernel image needs a surjection");
  const FiniteRack& A = *f.dom;
  const int n = A.order();
  std::vector<Perm> seed;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || f.map[a] != f.map[b]) continue;
      Perm p = perm_compose(A.symmetry(a), A.symmetry_inv(b));
      if (!perm_is_identity(p)) seed.push_back(std::move(p));
    }
  return inn_generators(A).normal_closure(seed, cap);
}

namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : w) {
      h ^= static_cast<std::size_t>(l.first * 2 + (l.second > 0 ? 1 : 0)) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Breadth-first search over relator insertions: every child is the free
// reduction of the word with one relator (or inverse) spliced in. Reaching
// the empty word proves membership in the normal closure of the relators.
bool insertion_search(const std::vector<GroupWord>& relators, const GroupWord& start,
                      const Eq3Config& cfg) {
  if (start.empty()) return true;
  std::vector<std::vector<Letter>> moves;
  {
    std::unordered_set<std::vector<Letter>, LettersHash> seen;
    for (const GroupWord& r : relators) {
      if (r.empty()) continue;
      if (seen.insert(r.letters()).second) moves.push_back(r.letters());
      std::vector<Letter> inv = r.inverse().letters();
      if (seen.insert(inv).second) moves.push_back(std::move(inv));
    }
  }
  std::unordered_set<std::vector<Letter>, LettersHash> visited;
  std::deque<std::pair<std::vector<Letter>, int>> queue;
  visited.insert(start.letters());
  queue.push_back({start.letters(), 0});
  while (!queue.empty()) {
    auto [word, depth] = queue.front();
    queue.pop_front();
    if (depth >= cfg.depth) continue;
    for (std::size_t pos = 0; pos <= word.size(); ++pos) {
      for (const auto& mv : moves) {
        std::vector<Letter> next;
        next.reserve(word.size() + mv.size());
        next.insert(next.end(), word.begin(), word.begin() + pos);
        next.insert(next.end(), mv.begin(), mv.end());
        next.insert(next.end(), word.begin() + pos, word.end());
        next = reduce_letters(next);
        if (next.empty()) return true;
        if (static_cast<int>(next.size()) > cfg.length_cap) continue;
        if (visited.size() >= cfg.node_budget) continue;
        if (visited.insert(next).second) queue.push_back({std::move(next), depth + 1});
      }
    }
  }
  return false;
}

std::string vec_str(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

WordEqReport word_eq3(const FiniteRack& X, const GroupWord& u, const GroupWord& v,
                      const Eq3Config& cfg) {
  WordEqReport rep;
  GroupWord w = u * v.inverse();
  if (w.empty()) {
    rep.verdict = Eq3::Equal;
    rep.method = "free-reduction";
    return rep;
  }
  Perm pu = excess(X, u);
  Perm pv = excess(X, v);
  if (pu != pv) {
    rep.verdict = Eq3::NotEqual;
    rep.method = "excess";
    rep.detail = "inner images differ: " + perm_cycles(pu, X.labels()) + " vs " +
                 perm_cycles(pv, X.labels());
    return rep;
  }
  std::vector<GroupWord> relators = pth_relations(X);
  SmithLattice L = smith_lattice(relation_matrix_of(relators, X.order()));
  std::vector<long long> du = u.exponent_vector(X.order());
  std::vector<long long> dv = v.exponent_vector(X.order());
  std::vector<long long> diff(du.size());
  for (std::size_t i = 0; i < du.size(); ++i) diff[i] = du[i] - dv[i];
  if (!in_row_lattice(L, diff)) {
    rep.verdict = Eq3::NotEqual;
    rep.method = "abelianized";
    rep.detail = "exponent vectors " + vec_str(du) + " vs " + vec_str(dv) +
                 " differ modulo the relation lattice";
    return rep;
  }
  if (insertion_search(relators, w, cfg)) {
    rep.verdict = Eq3::Equal;
    rep.method = "rewriting";
    return rep;
  }
  rep.verdict = Eq3::Unknown;
  rep.method = "bounded-search";
  return rep;
}

}  // namespace qcover
