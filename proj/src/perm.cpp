#include "qcover/perm.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace qcover {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) r[p[i]] = i;
  return r;
}

Perm perm_conjugate(const Perm& p, const Perm& g) {
  return perm_compose(perm_compose(perm_inverse(g), p), g);
}

std::string perm_cycles(const Perm& p, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += labels[j];
      first = false;
      j = p[j];
    }
    out += ")";
  }
  if (out.empty()) out = "id";
  return out;
}

std::size_t perm_hash(const Perm& p) {
  std::size_t h = 1469598103934665603ull;
  for (int v : p) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
struct PermHasher {
  std::size_t operator()(const Perm& p) const { return perm_hash(p); }
};
}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
  std::unordered_set<Perm, PermHasher> seen;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != degree_) throw DegreeMismatch("generator degree mismatch");
    if (perm_is_identity(g)) continue;
    if (seen.insert(g).second) gens_.push_back(std::move(g));
  }
}

const std::vector<Perm>& PermGroup::elements(std::size_t cap) const {
  if (materialized_) return elements_;
  std::vector<Perm> elems;
  std::unordered_set<Perm, PermHasher> seen;
  std::deque<Perm> queue;
  Perm id = perm_identity(degree_);
  seen.insert(id);
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens_) {
      Perm next = perm_compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ClosureCapExceeded(cap);
        elems.push_back(next);
        queue.push_back(next);
      }
    }
  }
  elements_ = std::move(elems);
  materialized_ = true;
  return elements_;
}

bool PermGroup::contains(const Perm& p, std::size_t cap) const {
  const auto& elems = elements(cap);
  return std::find(elems.begin(), elems.end(), p) != elems.end();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<Perm> moves = gens_;
  for (const Perm& g : gens_) moves.push_back(perm_inverse(g));
  std::vector<bool> seen(degree_, false);
  std::vector<int> out;
  std::deque<int> queue;
  seen[point] = true;
  queue.push_back(point);
  out.push_back(point);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const Perm& g : moves) {
      int y = g[x];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<bool> done(degree_, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < degree_; ++i) {
    if (done[i]) continue;
    auto orb = orbit(i);
    for (int x : orb) done[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup PermGroup::stabilizer(int point) const {
  // Orbit BFS keeping a transversal t[x] with point . t[x] = x, then the
  // Schreier generators t[x] g inverse(t[x.g]) generate the stabilizer.
  std::unordered_map<int, Perm> transversal;
  std::deque<int> queue;
  transversal[point] = perm_identity(degree_);
  queue.push_back(point);
  std::vector<Perm> moves = gens_;
  for (const Perm& g : gens_) moves.push_back(perm_inverse(g));
  std::vector<Perm> schreier;
  std::unordered_set<Perm, PermHasher> seen;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const Perm& g : moves) {
      int y = g[x];
      auto it = transversal.find(y);
      if (it == transversal.end()) {
        transversal[y] = perm_compose(transversal[x], g);
        queue.push_back(y);
      } else {
        Perm s = perm_compose(perm_compose(transversal[x], g), perm_inverse(it->second));
        if (!perm_is_identity(s) && seen.insert(s).second) schreier.push_back(std::move(s));
      }
    }
  }
  return PermGroup(degree_, schreier);
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seed, std::size_t cap) const {
  std::unordered_set<Perm, PermHasher> seen;
  std::vector<Perm> closed;
  std::deque<Perm> queue;
  for (const Perm& p : seed) {
    if (static_cast<int>(p.size()) != degree_) throw DegreeMismatch("seed degree mismatch");
    if (perm_is_identity(p)) continue;
    if (seen.insert(p).second) {
      closed.push_back(p);
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens_) {
      for (const Perm& c : {perm_conjugate(cur, g), perm_conjugate(cur, perm_inverse(g))}) {
        if (!perm_is_identity(c) && seen.insert(c).second) {
          if (seen.size() > cap) throw ClosureCapExceeded(cap);
          closed.push_back(c);
          queue.push_back(c);
        }
      }
    }
  }
  return PermGroup(degree_, closed);
}

}  // namespace qcover
