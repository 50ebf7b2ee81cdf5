#include "qcover/covers.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcover {

Pi0Result pi0(RackPtr X) {
  Congruence co = orbit_congruence(X, inn_generators(*X));
  auto q = quotient(X, co);
  if (!q.rack->classify().is_trivial)
    throw MethodDisagreement("component quotient is not a trivial rack");
  return Pi0Result{std::move(co), std::move(q.rack), std::move(q.projection)};
}

RackPtr connected_component(RackPtr X, int a) {
  const FiniteRack& R = *X;
  if (a < 0 || a >= R.order()) throw ShapeError("element out of range");
  Congruence co = orbit_congruence(X, inn_generators(R));
  std::vector<int> members;
  for (int x = 0; x < R.order(); ++x)
    if (co.same(x, a)) members.push_back(x);
  std::vector<int> index(R.order(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[members[i]] = static_cast<int>(i);
    labels.push_back(R.label(members[i]));
  }
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = index[R.fwd(members[i], members[j])];
  return make_rack(FiniteRack::validate(R.name() + "|" + R.label(a), std::move(labels), table));
}

TrivialReport is_trivial_ext(const RackHom& f) {
  if (!f.surjective) throw NotSurjective("trivial-extension test needs a surjection");
  Congruence co = orbit_congruence(f.dom, inn_generators(*f.dom));
  const int n = f.dom->order();
  TrivialReport rep;
  rep.verdict = true;
  for (int a = 0; a < n && rep.verdict; ++a)
    for (int b = a + 1; b < n; ++b)
      if (co.same(a, b) && f.map[a] == f.map[b]) {
        rep.verdict = false;
        rep.witness = {a, b};
        break;
      }
  return rep;
}

namespace {

// Kernel pairs (a, b), a != b, in lexicographic order.
std::vector<std::pair<int, int>> kernel_pairs_list(const RackHom& f) {
  std::vector<std::pair<int, int>> out;
  const int n = f.dom->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && f.map[a] == f.map[b]) out.push_back({a, b});
  return out;
}

std::optional<std::array<int, 3>> scan_pairs(const RackHom& f,
                                             const std::vector<std::pair<int, int>>& pairs,
                                             bool parallel) {
  const FiniteRack& A = *f.dom;
  const int n = A.order();
  const long long total = static_cast<long long>(pairs.size());
  long long hit = -1;
  int hit_x = -1;
#ifdef _OPENMP
  const bool use_omp = parallel && total * n >= 4096;
#else
  const bool use_omp = false;
  (void)parallel;
#endif
  if (use_omp) {
#ifdef _OPENMP
#pragma omp parallel
    {
      long long local_hit = -1;
      int local_x = -1;
#pragma omp for schedule(static)
      for (long long i = 0; i < total; ++i) {
        if (local_hit >= 0) continue;
        auto [a, b] = pairs[i];
        for (int x = 0; x < n; ++x)
          if (A.bwd(A.fwd(x, a), b) != x) {
            local_hit = i;
            local_x = x;
            break;
          }
      }
#pragma omp critical
      {
        if (local_hit >= 0 && (hit < 0 || local_hit < hit)) {
          hit = local_hit;
          hit_x = local_x;
        }
      }
    }
#endif
  } else {
    for (long long i = 0; i < total && hit < 0; ++i) {
      auto [a, b] = pairs[i];
      for (int x = 0; x < n; ++x)
        if (A.bwd(A.fwd(x, a), b) != x) {
          hit = i;
          hit_x = x;
          break;
        }
    }
  }
  if (hit < 0) return std::nullopt;
  return std::array<int, 3>{hit_x, pairs[hit].first, pairs[hit].second};
}

}  // namespace

std::optional<std::array<int, 3>> covering_scan_serial(const RackHom& f) {
  return scan_pairs(f, kernel_pairs_list(f), false);
}

std::optional<std::array<int, 3>> covering_scan(const RackHom& f) {
  return scan_pairs(f, kernel_pairs_list(f), true);
}

CoveringReport is_covering(const RackHom& f, std::size_t cap) {
  if (!f.surjective) throw NotSurjective("covering test needs a surjection");
  CoveringReport rep;
  auto witness = covering_scan(f);
  rep.method_scan = !witness.has_value();
  rep.method_kernel = kernel_image_subgroup(f, cap).is_trivial();
  if (rep.method_scan != rep.method_kernel)
    throw MethodDisagreement("covering scan and kernel image disagree on " + f.dom->name());
  rep.verdict = rep.method_scan;
  rep.witness = witness;
  return rep;
}

HornReport horn_analyze(const Horn& h) {
  const FiniteRack& A = *h.hom.dom;
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    auto [a, b, d] = h.steps[i];
    if (a < 0 || a >= A.order() || b < 0 || b >= A.order() || (d != 1 && d != -1))
      throw InvalidHorn(static_cast<int>(i));
    if (h.hom.map[a] != h.hom.map[b]) throw InvalidHorn(static_cast<int>(i));
  }
  if (h.base < 0 || h.base >= A.order()) throw ShapeError("horn base out of range");
  HornReport rep;
  rep.retracts = true;
  int xa = h.base, xb = h.base;
  for (const auto& [a, b, d] : h.steps) {
    xa = A.op(xa, a, d);
    xb = A.op(xb, b, d);
    if (xa != xb) rep.retracts = false;
  }
  rep.end_a = xa;
  rep.end_b = xb;
  rep.closes = xa == xb;
  return rep;
}

NormalReport is_normal_ext(const RackHom& f) {
  if (!f.surjective) throw NotSurjective("normal-extension test needs a surjection");
  auto pb = pullback(f, f);
  NormalReport rep;
  rep.verdict = true;
  for (int side = 1; side <= 2 && rep.verdict; ++side) {
    const RackHom& proj = side == 1 ? pb.proj1 : pb.proj2;
    TrivialReport triv = is_trivial_ext(proj);
    if (triv.verdict) continue;
    rep.verdict = false;
    rep.failing_projection = side;

    // Rebuild the connecting path inside the kernel-pair rack to exhibit the
    // membrane whose projected trail loops while the other does not.
    const FiniteRack& P = *pb.rack;
    auto [from, to] = *triv.witness;
    std::vector<int> parent(P.order(), -1), via(P.order(), -1), sign(P.order(), 0);
    std::deque<int> queue;
    parent[from] = from;
    queue.push_back(from);
    while (!queue.empty() && parent[to] < 0) {
      int cur = queue.front();
      queue.pop_front();
      for (int w = 0; w < P.order(); ++w)
        for (int d : {1, -1}) {
          int nxt = P.op(cur, w, d);
          if (parent[nxt] < 0) {
            parent[nxt] = cur;
            via[nxt] = w;
            sign[nxt] = d;
            queue.push_back(nxt);
          }
        }
    }
    if (parent[to] < 0) throw MethodDisagreement("witness pair not connected in the kernel pair");
    Membrane m;
    m.base = {pb.proj1.map[from], pb.proj2.map[from]};
    std::vector<std::array<int, 3>> rev;
    for (int cur = to; cur != from; cur = parent[cur])
      rev.push_back({pb.proj1.map[via[cur]], pb.proj2.map[via[cur]], sign[cur]});
    std::reverse(rev.begin(), rev.end());
    m.steps = std::move(rev);
    rep.witness = std::move(m);
  }
  return rep;
}

namespace {

// Endpoint reachability from the diagonal: breadth-first over pairs, stepping
// both legs with one kernel pair at a time.
Congruence horn_endpoint_congruence(const RackHom& f) {
  const FiniteRack& A = *f.dom;
  const int n = A.order();
  std::vector<std::pair<int, int>> eq;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.map[a] == f.map[b]) eq.push_back({a, b});

  std::vector<char> reached(n * n, 0);
  std::deque<std::pair<int, int>> queue;
  for (int x = 0; x < n; ++x) {
    reached[x * n + x] = 1;
    queue.push_back({x, x});
  }
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (auto [a, b] : eq)
      for (int d : {1, -1}) {
        int uu = A.op(u, a, d);
        int vv = A.op(v, b, d);
        if (!reached[uu * n + vv]) {
          reached[uu * n + vv] = 1;
          queue.push_back({uu, vv});
        }
      }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (reached[u * n + v]) pairs.push_back({u, v});
  Congruence out = Congruence::from_pairs(f.dom, pairs);

  // The reachable set must itself be the equivalence relation it generates.
  long long expect = 0;
  for (const auto& cls : out.classes())
    expect += static_cast<long long>(cls.size()) * static_cast<long long>(cls.size());
  if (expect != static_cast<long long>(pairs.size()))
    throw MethodDisagreement("horn endpoints do not form an equivalence relation");
  return out;
}

}  // namespace

CentralizeResult centralize(const RackHom& f, std::size_t cap) {
  if (!f.surjective) throw NotSurjective("centralization needs a surjection");
  const FiniteRack& A = *f.dom;
  const int n = A.order();

  std::vector<std::pair<int, int>> gen_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (f.map[a] != f.map[b]) continue;
      for (int x = 0; x < n; ++x) gen_pairs.push_back({A.bwd(A.fwd(x, a), b), x});
    }
  Congruence by_pairs = Congruence::from_pairs(f.dom, gen_pairs);
  Congruence by_horns = horn_endpoint_congruence(f);
  Congruence by_kernel = orbit_congruence(f.dom, kernel_image_subgroup(f, cap));

  if (!(by_pairs == by_horns) || !(by_pairs == by_kernel))
    throw MethodDisagreement("centralizing congruence routes disagree on " + A.name());

  if (!by_pairs.refines(kernel_pair(f)))
    throw MethodDisagreement("centralizing congruence exceeds the kernel pair");

  auto q = quotient(f.dom, by_pairs);
  std::vector<int> induced(q.rack->order());
  for (int x = 0; x < n; ++x) induced[q.projection.map[x]] = f.map[x];
  RackHom central = check_hom(q.rack, f.cod, std::move(induced));
  CoveringReport cov = is_covering(central, cap);
  if (!cov.verdict) throw MethodDisagreement("centralized map failed the covering check");

  CentralizeResult out{std::move(by_pairs), std::move(q.projection), std::move(central),
                       true, true, true};
  return out;
}

FrqResult frq(RackPtr X) {
  const FiniteRack& R = *X;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < R.order(); ++x) pairs.push_back({x, R.fwd(x, x)});
  Congruence q = Congruence::from_pairs(X, pairs);
  auto quo = quotient(X, q);
  if (!quo.rack->classify().is_quandle)
    throw MethodDisagreement("quandle quotient is not a quandle");
  CoveringReport cov = is_covering(quo.projection);
  if (!cov.verdict) throw MethodDisagreement("quandle unit failed the covering check");
  return FrqResult{std::move(quo.rack), std::move(quo.projection)};
}

RackHom frq_hom(const RackHom& f) {
  FrqResult qa = frq(f.dom);
  FrqResult qb = frq(f.cod);
  std::vector<int> map(qa.quandle->order());
  for (int x = 0; x < f.dom->order(); ++x)
    map[qa.unit.map[x]] = qb.unit.map[f.map[x]];
  return check_hom(qa.quandle, qb.quandle, std::move(map));
}

EndpointCoverResult endpoint_cover(RackPtr X, std::size_t cap) {
  const FiniteRack& R = *X;
  const int n = R.order();
  PermGroup inn = inn_generators(R);
  const std::vector<Perm>& elems = inn.elements(cap);
  const int m = static_cast<int>(elems.size());

  std::unordered_map<std::size_t, std::vector<int>> by_hash;
  for (int i = 0; i < m; ++i) by_hash[perm_hash(elems[i])].push_back(i);
  auto index_of = [&](const Perm& p) {
    for (int i : by_hash[perm_hash(p)])
      if (elems[i] == p) return i;
    throw MethodDisagreement("closure is not closed under composition");
  };

  // Images of the symmetries at every endpoint b . h.
  std::vector<Perm> endpoint_sym(n);
  for (int b = 0; b < n; ++b) endpoint_sym[b] = R.symmetry(b);

  const int N = n * m;
  std::vector<std::string> labels(N);
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < m; ++g) labels[a * m + g] = "(" + R.label(a) + ";g" + std::to_string(g) + ")";
  std::vector<std::vector<int>> table(N, std::vector<int>(N));
  // (a,g) <| (b,h) = (a, g * S_{b.h}): the acting trail contributes the
  // symmetry at its endpoint.
  std::vector<int> act_index(n * m);
  for (int b = 0; b < n; ++b)
    for (int h = 0; h < m; ++h) act_index[b * m + h] = index_of(perm_conjugate(endpoint_sym[b], elems[h]));
  std::vector<std::vector<int>> mult(m, std::vector<int>(m));
  for (int g = 0; g < m; ++g)
    for (int k = 0; k < m; ++k) mult[g][k] = index_of(perm_compose(elems[g], elems[k]));

  for (int a = 0; a < n; ++a)
    for (int g = 0; g < m; ++g)
      for (int b = 0; b < n; ++b)
        for (int h = 0; h < m; ++h)
          table[a * m + g][b * m + h] = a * m + mult[g][act_index[b * m + h]];

  RackPtr cover = make_rack(FiniteRack::validate(R.name() + "~inn", std::move(labels), table));
  std::vector<int> ep(N);
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < m; ++g) ep[a * m + g] = elems[g][a];
  RackHom endpoint = check_hom(cover, X, std::move(ep));
  CoveringReport cov = is_covering(endpoint, cap);
  if (!cov.verdict) throw MethodDisagreement("endpoint map failed the covering check");
  return EndpointCoverResult{std::move(cover), std::move(endpoint)};
}

SkeletonReport fundamental_skeleton(RackPtr X, const std::optional<std::vector<int>>& pointing,
                                    std::size_t cap) {
  const FiniteRack& R = *X;
  PermGroup inn = inn_generators(R);
  Congruence co = orbit_congruence(X, inn);
  SkeletonReport rep;
  rep.components = co.classes();

  if (pointing) {
    if (pointing->size() != rep.components.size())
      throw BadPointing("pointing size differs from component count");
    std::vector<char> used(rep.components.size(), 0);
    for (int p : *pointing) {
      if (p < 0 || p >= R.order()) throw BadPointing("representative out of range");
      int c = -1;
      for (std::size_t i = 0; i < rep.components.size(); ++i)
        if (co.same(rep.components[i][0], p)) c = static_cast<int>(i);
      if (c < 0 || used[c]) throw BadPointing("representatives must cover each component once");
      used[c] = 1;
    }
    rep.pointing.resize(rep.components.size());
    for (int p : *pointing)
      for (std::size_t i = 0; i < rep.components.size(); ++i)
        if (co.same(rep.components[i][0], p)) rep.pointing[i] = p;
  } else {
    for (const auto& cls : rep.components) rep.pointing.push_back(cls[0]);
  }

  for (int repEl : rep.pointing) {
    PermGroup stab = inn.stabilizer(repEl);
    for (const Perm& g : stab.generators())
      if (g[repEl] != repEl) throw MethodDisagreement("loop generator moves its base point");
    rep.loop_orders.push_back(stab.order(cap));
    rep.loop_generators.push_back(stab.generators());
  }
  return rep;
}

}  // namespace qcover
