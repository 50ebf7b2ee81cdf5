#include "qcover/suite.hpp"

#include <algorithm>

#include "qcover/covers.hpp"
#include "qcover/free_rack.hpp"
#include "qcover/path_group.hpp"
#include "qcover/sampler.hpp"
#include "qcover/zoo.hpp"

namespace qcover {

namespace {

RackPtr sample_rack(Rng& rng, const SuiteConfig& cfg, int max_order) {
  RackPtr X = sampler::random_rack(rng, max_order);
  if (cfg.mutate && X->order() >= 2) return sampler::mutate_table(rng, *X);
  return X;
}

std::string triple_str(const FiniteRack& X, int x, int y, int z) {
  return "(" + X.label(x) + "," + X.label(y) + "," + X.label(z) + ")";
}

// Greedy witness shrinking: drop one element whenever the rest is closed
// under both operations and the failure survives on the restriction.
RackPtr shrink_rack(RackPtr X, const std::function<bool(const RackPtr&)>& fails) {
  bool improved = true;
  while (improved && X->order() > 1) {
    improved = false;
    for (int drop = 0; drop < X->order() && !improved; ++drop) {
      const FiniteRack& R = *X;
      const int n = R.order();
      bool closed = true;
      for (int x = 0; x < n && closed; ++x) {
        if (x == drop) continue;
        for (int y = 0; y < n; ++y) {
          if (y == drop) continue;
          if (R.fwd(x, y) == drop || R.bwd(x, y) == drop) {
            closed = false;
            break;
          }
        }
      }
      if (!closed) continue;
      std::vector<int> members;
      for (int x = 0; x < n; ++x)
        if (x != drop) members.push_back(x);
      std::vector<int> index(n, -1);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < members.size(); ++i) {
        index[members[i]] = static_cast<int>(i);
        labels.push_back(R.label(members[i]));
      }
      const int m = n - 1;
      std::vector<std::vector<int>> t(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = index[R.fwd(members[i], members[j])];
      try {
        RackPtr cand = make_rack(FiniteRack::unchecked(R.name() + "-", std::move(labels), t));
        if (fails(cand)) {
          X = cand;
          improved = true;
        }
      } catch (const Error&) {
      }
    }
  }
  return X;
}

std::optional<std::string> check_unfolding(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sample_rack(rng, cfg, cfg.max_order);
  auto violation = [](const RackPtr& Rp) -> std::optional<std::array<int, 4>> {
    const FiniteRack& R = *Rp;
    const int n = R.order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (R.fwd(x, R.fwd(y, z)) != R.fwd(R.fwd(R.bwd(x, z), y), z))
            return std::array<int, 4>{0, x, y, z};
          if (R.fwd(x, R.bwd(y, z)) != R.bwd(R.fwd(R.fwd(x, z), y), z))
            return std::array<int, 4>{1, x, y, z};
          if (R.bwd(x, R.bwd(y, z)) != R.bwd(R.bwd(R.fwd(x, z), y), z))
            return std::array<int, 4>{2, x, y, z};
          if (R.bwd(x, R.fwd(y, z)) != R.fwd(R.bwd(R.bwd(x, z), y), z))
            return std::array<int, 4>{3, x, y, z};
        }
    return std::nullopt;
  };
  auto v = violation(X);
  if (!v) return std::nullopt;
  X = shrink_rack(X, [&](const RackPtr& c) { return violation(c).has_value(); });
  v = violation(X);
  static const char* names[] = {"fwd/fwd", "fwd/bwd", "bwd/bwd", "bwd/fwd"};
  return "unfolding " + std::string(names[(*v)[0]]) + " fails on " + X->name() + " at " +
         triple_str(*X, (*v)[1], (*v)[2], (*v)[3]);
}

std::optional<std::string> check_weak_idempotency(Rng& rng, const SuiteConfig& cfg) {
  RackPtr Xp = sample_rack(rng, cfg, cfg.max_order);
  auto violation = [](const RackPtr& Rp) -> std::optional<std::string> {
    const FiniteRack& X = *Rp;
    for (int y = 0; y < X.order(); ++y) {
      for (int k = -3; k <= 3; ++k) {
        int chain = y;
        for (int i = 0; i < (k < 0 ? -k : k); ++i) chain = X.op(chain, y, k < 0 ? -1 : 1);
        for (int x = 0; x < X.order(); ++x)
          if (X.fwd(x, chain) != X.fwd(x, y))
            return "x <| (y <|^" + std::to_string(k) + " y) != x <| y on " + X.name() + " at (" +
                   X.label(x) + "," + X.label(y) + ")";
      }
    }
    return std::nullopt;
  };
  auto v = violation(Xp);
  if (!v) return std::nullopt;
  Xp = shrink_rack(Xp, [&](const RackPtr& c) { return violation(c).has_value(); });
  return violation(Xp);
}

std::optional<std::string> check_co_two_routes(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sample_rack(rng, cfg, cfg.max_order);
  Congruence orbit = orbit_congruence(X, inn_generators(*X));
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < X->order(); ++x)
    for (int y = 0; y < X->order(); ++y) pairs.push_back({x, X->fwd(x, y)});
  Congruence generated = Congruence::from_pairs(X, pairs);
  if (orbit == generated) return std::nullopt;
  return "orbit route and generated route to the component congruence differ on " + X->name();
}

std::optional<std::string> check_requotient(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  auto q = quotient(X, Congruence(X));
  if (q.rack->order() != X->order()) return "discrete quotient changed the order of " + X->name();
  for (int x = 0; x < X->order(); ++x)
    for (int y = 0; y < X->order(); ++y)
      if (q.rack->fwd(q.projection.map[x], q.projection.map[y]) != q.projection.map[X->fwd(x, y)])
        return "discrete quotient is not an isomorphism on " + X->name();
  return std::nullopt;
}

std::optional<std::string> check_orbit_permute(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  PermGroup inn = inn_generators(*X);
  GroupWord w = sampler::random_word(rng, X->order(), 4);
  PermGroup N = inn.normal_closure({excess(*X, w)}, cfg.closure_cap);
  Congruence R = orbit_congruence(X, N);
  auto S = sampler::random_reflexive_relation(rng, *X);
  if (relations_permute(R, S)) return std::nullopt;
  return "orbit congruence fails to permute with a reflexive relation on " + X->name();
}

FreeRackElem random_fr(Rng& rng, int alphabet) {
  return FreeRackElem{rng.below(alphabet), sampler::random_word(rng, alphabet, 5)};
}

std::optional<std::string> check_free_rack_axioms(Rng& rng, const SuiteConfig&) {
  int alphabet = 1 + rng.below(4);
  FreeRackElem x = random_fr(rng, alphabet), y = random_fr(rng, alphabet),
               z = random_fr(rng, alphabet);
  if (!(fr_op(fr_op(x, y, 1), y, -1) == x) || !(fr_op(fr_op(x, y, -1), y, 1) == x))
    return "free rack fails cancellation";
  for (int d : {1, -1})
    for (int e : {1, -1}) {
      FreeRackElem lhs = fr_op(fr_op(x, y, d), z, e);
      FreeRackElem rhs = fr_op(fr_op(x, z, e), fr_op(y, z, e), d);
      if (!(lhs == rhs)) return "free rack fails self-distributivity";
    }
  return std::nullopt;
}

FreeQuandleElem random_fq(Rng& rng, int alphabet) {
  return fq_normalize(rng.below(alphabet), sampler::random_word(rng, alphabet, 5));
}

std::optional<std::string> check_free_quandle_axioms(Rng& rng, const SuiteConfig&) {
  int alphabet = 1 + rng.below(4);
  FreeQuandleElem x = random_fq(rng, alphabet), y = random_fq(rng, alphabet),
                  z = random_fq(rng, alphabet);
  if (!(fq_op(x, x, 1) == x)) return "free quandle fails idempotency";
  if (!(fq_op(fq_op(x, y, 1), y, -1) == x) || !(fq_op(fq_op(x, y, -1), y, 1) == x))
    return "free quandle fails cancellation";
  for (int d : {1, -1})
    for (int e : {1, -1}) {
      FreeQuandleElem lhs = fq_op(fq_op(x, y, d), z, e);
      FreeQuandleElem rhs = fq_op(fq_op(x, z, e), fq_op(y, z, e), d);
      if (!(lhs == rhs)) return "free quandle fails self-distributivity";
      if (lhs.path.char_sum() != 0) return "free quandle operation broke the balance invariant";
    }
  return std::nullopt;
}

std::optional<std::string> check_free_action_rack(Rng& rng, const SuiteConfig&) {
  int alphabet = 1 + rng.below(4);
  FreeRackElem start = random_fr(rng, alphabet);
  GroupWord h = sampler::random_word(rng, alphabet, 5);
  FreeRackElem cur = start;
  for (const Letter& l : h.letters()) cur = fr_op(cur, FreeRackElem{l.first, {}}, l.second);
  if (!(cur.path == start.path * h)) return "letterwise action differs from right multiplication";
  if (!h.empty() && cur == start) return "nonempty word fixed a free rack element";
  return std::nullopt;
}

std::optional<std::string> check_free_action_quandle(Rng& rng, const SuiteConfig&) {
  int alphabet = 2 + rng.below(3);
  FreeQuandleElem start = random_fq(rng, alphabet);
  GroupWord h = sampler::random_balanced_word(rng, alphabet, 3);
  FreeQuandleElem cur = start;
  for (const Letter& l : h.letters())
    cur = fq_op(cur, FreeQuandleElem{l.first, {}}, l.second);
  if (!(cur.path == start.path * h)) return "balanced action differs from right multiplication";
  if (!h.empty() && cur == start) return "nonempty balanced word fixed a free quandle element";
  return std::nullopt;
}

std::optional<std::string> check_kernel_pairing(Rng& rng, const SuiteConfig&) {
  int na = 2 + rng.below(4);
  int nb = 1 + rng.below(2);
  std::vector<int> f(na);
  for (int i = 0; i < na; ++i) f[i] = rng.below(nb);

  // A guaranteed kernel word: a product of conjugated kernel-pair letters.
  std::vector<std::pair<int, int>> same;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (a != b && f[a] == f[b]) same.push_back({a, b});
  GroupWord u;
  int factors = rng.below(4);
  for (int i = 0; i < factors && !same.empty(); ++i) {
    auto [a, b] = same[rng.below(static_cast<int>(same.size()))];
    GroupWord c = sampler::random_word(rng, na, 3);
    u = u * c * GroupWord({{a, 1}, {b, -1}}) * c.inverse();
  }
  auto w = kernel_pairing(f, u);
  if (!w) return "kernel word was not recognized";
  for (std::size_t k = 0; k < w->nu.size(); ++k) {
    if (f[w->nu[k].first] != f[w->nu_prime[k].first] || w->nu[k].second != w->nu_prime[k].second)
      return "pair word does not match letterwise in the image";
  }
  if (!GroupWord(w->nu_prime).empty()) return "pair word does not reduce to the empty word";
  if (!(GroupWord(w->nu) * GroupWord(w->nu_prime).inverse() == u))
    return "pairing round-trip does not recover the word";
  for (auto [i, j] : w->pairing)
    for (auto [l, m] : w->pairing)
      if (i < l && l < j && j < m) return "pairing lines cross";

  // And a word with a visibly nonempty image must be rejected.
  GroupWord v = u * GroupWord::single(0, 1);
  if (kernel_pairing(f, v)) return "word outside the kernel was accepted";
  return std::nullopt;
}

std::optional<std::string> check_excess_kills_relations(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  PathPresentation P = pth_presentation(X);
  for (const GroupWord& r : P.relations)
    if (!perm_is_identity(excess(*X, r)))
      return "a defining relation survives in the inner group on " + X->name();
  return std::nullopt;
}

std::optional<std::string> check_augmented_identities(Rng& rng, const SuiteConfig& cfg) {
  RackPtr Xp = sampler::random_rack(rng, cfg.max_order);
  const FiniteRack& X = *Xp;
  GroupWord u = sampler::random_word(rng, X.order(), 5);
  GroupWord v = sampler::random_word(rng, X.order(), 5);
  int x = rng.below(X.order()), y = rng.below(X.order());
  if (act(X, x, u * v) != act(X, act(X, x, u), v)) return "action is not multiplicative";
  if (act(X, x, GroupWord()) != x) return "empty word moved a point";
  if (act(X, X.fwd(x, y), u) != X.fwd(act(X, x, u), act(X, y, u)))
    return "action does not respect the operation";
  Perm e = excess(X, u);
  if (X.symmetry(act(X, x, u)) != perm_conjugate(X.symmetry(x), e))
    return "endpoint symmetry is not the conjugated symmetry";
  return std::nullopt;
}

std::optional<std::string> check_ab_components(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  SmithResult ab = abelianization(pth_presentation(X));
  int comps = pi0(X).components->order();
  if (ab.rank_free != comps)
    return "abelianized rank " + std::to_string(ab.rank_free) + " differs from component count " +
           std::to_string(comps) + " on " + X->name();
  if (!ab.torsion.empty()) return "abelianized path group has torsion on " + X->name();
  return std::nullopt;
}

std::optional<std::string> check_kernel_image_iff(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);
  bool trivial = kernel_image_subgroup(f, cfg.closure_cap).is_trivial();
  bool all_equal = true;
  const FiniteRack& A = *f.dom;
  for (int a = 0; a < A.order() && all_equal; ++a)
    for (int b = a + 1; b < A.order(); ++b)
      if (f.map[a] == f.map[b] && A.symmetry(a) != A.symmetry(b)) {
        all_equal = false;
        break;
      }
  if (trivial != all_equal)
    return "kernel image triviality disagrees with symmetry equality on " + A.name();
  return std::nullopt;
}

std::optional<std::string> check_word_eq3(Rng& rng, const SuiteConfig& cfg) {
  RackPtr Xp = sampler::random_rack(rng, cfg.max_order);
  const FiniteRack& X = *Xp;
  GroupWord u = sampler::random_word(rng, X.order(), 4);
  GroupWord v = sampler::random_word(rng, X.order(), 4);
  WordEqReport rep = word_eq3(X, u, v);
  if (rep.verdict == Eq3::Equal && excess(X, u) != excess(X, v))
    return "Equal verdict with differing inner images on " + X.name();
  if (rep.verdict == Eq3::NotEqual && rep.detail.empty())
    return "NotEqual verdict without a separating invariant";

  // A word times a conjugated relator must never be separated from itself.
  PathPresentation P = pth_presentation(Xp);
  const GroupWord& r = P.relations[rng.below(static_cast<int>(P.relations.size()))];
  GroupWord c = sampler::random_word(rng, X.order(), 2);
  GroupWord v2 = u * (c * r * c.inverse());
  if (word_eq3(X, u, v2).verdict == Eq3::NotEqual)
    return "a relator consequence was declared NotEqual on " + X.name();
  return std::nullopt;
}

std::optional<std::string> check_covering_methods(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);
  CoveringReport rep = is_covering(f, cfg.closure_cap);  // throws on disagreement
  if (rep.verdict != rep.method_scan || rep.method_scan != rep.method_kernel)
    return "report fields inconsistent";
  if (covering_scan(f) != covering_scan_serial(f))
    return "sharded scan and serial scan differ on " + f.dom->name();
  return std::nullopt;
}

std::optional<std::string> check_pullback_stability(Rng& rng, const SuiteConfig& cfg) {
  // Two surjections with a genuinely common codomain: refine one congruence
  // by another on the same rack.
  RackPtr A = sampler::random_rack(rng, cfg.max_order);
  Congruence C = sampler::random_congruence(rng, A);
  std::vector<std::pair<int, int>> extra;
  for (int i = 0; i < A->order(); ++i) extra.push_back({i, C.cls(i)});
  int more = rng.below(3);
  for (int i = 0; i < more; ++i) extra.push_back({rng.below(A->order()), rng.below(A->order())});
  Congruence D = Congruence::from_pairs(A, extra);

  auto fine = quotient(A, C);
  auto coarse = quotient(A, D);
  std::vector<int> factor(fine.rack->order());
  for (int x = 0; x < A->order(); ++x)
    factor[fine.projection.map[x]] = coarse.projection.map[x];
  RackHom c = check_hom(fine.rack, coarse.rack, std::move(factor));
  const RackHom& e = coarse.projection;

  auto pb = pullback(e, c);
  bool proj_cov = is_covering(pb.proj1, cfg.closure_cap).verdict;
  bool c_cov = is_covering(c, cfg.closure_cap).verdict;
  if (proj_cov != c_cov)
    return "pullback along a surjection changed the covering verdict on " + A->name();

  // And a guaranteed covering with the same codomain must stay one.
  RackHom c2 = centralize(e, cfg.closure_cap).central;
  if (!is_covering(pullback(e, c2).proj1, cfg.closure_cap).verdict)
    return "pullback of a centralized covering is not a covering on " + A->name();
  return std::nullopt;
}

std::optional<std::string> check_horn_retraction(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_covering(rng, cfg.max_order, cfg.closure_cap);
  for (int i = 0; i < cfg.horns_per_covering; ++i) {
    Horn h = sampler::random_horn(rng, f);
    HornReport rep = horn_analyze(h);
    if (!rep.retracts) {
      // Shrink to the first prefix that stays open.
      Horn min = h;
      min.steps.clear();
      int xa = h.base, xb = h.base;
      for (const auto& s : h.steps) {
        min.steps.push_back(s);
        xa = f.dom->op(xa, s[0], s[2]);
        xb = f.dom->op(xb, s[1], s[2]);
        if (xa != xb) break;
      }
      return "a horn over the covering " + f.dom->name() + " fails to retract (length " +
             std::to_string(min.steps.size()) + ")";
    }
  }
  // A failed covering witness must convert to a one-step horn that stays open.
  RackHom g = sampler::random_surjection(rng, cfg.max_order);
  auto w = covering_scan(g);
  if (w) {
    Horn h;
    h.hom = g;
    h.base = (*w)[0];
    h.steps = {{(*w)[1], (*w)[2], 1}};
    HornReport rep = horn_analyze(h);
    if (rep.closes) return "covering witness produced a closing horn on " + g.dom->name();
  }
  return std::nullopt;
}

std::optional<std::string> check_centralize_routes(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);
  CentralizeResult res = centralize(f, cfg.closure_cap);  // routes compared inside
  RackHom composite = compose_hom(res.unit, res.central);
  if (composite.map != f.map) return "centralization does not factor the original map";
  return std::nullopt;
}

std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  // Restricted growth strings.
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> part(blocks);
    for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i);
    out.push_back(part);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

std::optional<std::string> check_centralize_minimal(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, std::min(cfg.max_order, 5));
  CentralizeResult res = centralize(f, cfg.closure_cap);
  Congruence eq = kernel_pair(f);
  for (const auto& part : all_partitions(f.dom->order())) {
    Congruence D = Congruence::from_partition(f.dom, part);
    if (!D.refines(eq)) continue;
    QuotientResult q;
    try {
      q = quotient(f.dom, D);
    } catch (const IncompatiblePartition&) {
      continue;
    }
    std::vector<int> induced(q.rack->order());
    for (int x = 0; x < f.dom->order(); ++x) induced[q.projection.map[x]] = f.map[x];
    RackHom g = check_hom(q.rack, f.cod, std::move(induced));
    if (!covering_scan(g).has_value()) {
      // D centralizes f, so the centralizing congruence must sit below it.
      if (!res.c1.refines(D))
        return "a smaller centralizing congruence exists on " + f.dom->name();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_c1_permutes(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);
  Congruence c1 = centralize(f, cfg.closure_cap).c1;
  auto S = sampler::random_reflexive_relation(rng, *f.dom);
  if (!relations_permute(c1, S))
    return "centralizing congruence fails to permute with a relation on " + f.dom->name();
  Congruence D = sampler::random_congruence(rng, f.dom);
  std::vector<std::pair<int, int>> d_pairs;
  for (int x = 0; x < f.dom->order(); ++x)
    for (int y = 0; y < f.dom->order(); ++y)
      if (D.same(x, y)) d_pairs.push_back({x, y});
  if (!relations_permute(c1, d_pairs))
    return "centralizing congruence fails to permute with a congruence on " + f.dom->name();
  return std::nullopt;
}

std::optional<std::string> check_qx_permutes(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  FrqResult q = frq(X);
  Congruence qx = kernel_pair(q.unit);
  auto S = sampler::random_reflexive_relation(rng, *X);
  if (!relations_permute(qx, S))
    return "quandle congruence fails to permute with a relation on " + X->name();
  return std::nullopt;
}

std::optional<std::string> check_double_ext_quotient(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_covering(rng, cfg.max_order, cfg.closure_cap);
  Congruence D = sampler::random_congruence(rng, f.dom);
  auto qa = quotient(f.dom, D);
  std::vector<std::pair<int, int>> image_pairs;
  for (int x = 0; x < f.dom->order(); ++x)
    for (int y = 0; y < f.dom->order(); ++y)
      if (D.same(x, y)) image_pairs.push_back({f.map[x], f.map[y]});
  Congruence E = Congruence::from_pairs(f.cod, image_pairs);
  auto qb = quotient(f.cod, E);
  std::vector<int> induced(qa.rack->order());
  for (int x = 0; x < f.dom->order(); ++x)
    induced[qa.projection.map[x]] = qb.projection.map[f.map[x]];
  RackHom f2 = check_hom(qa.rack, qb.rack, std::move(induced));

  // Comparison map surjective = the square is a double extension.
  std::vector<char> hit(static_cast<std::size_t>(f.cod->order()) * qa.rack->order(), 0);
  for (int x = 0; x < f.dom->order(); ++x)
    hit[f.map[x] * qa.rack->order() + qa.projection.map[x]] = 1;
  for (int b = 0; b < f.cod->order(); ++b)
    for (int a2 = 0; a2 < qa.rack->order(); ++a2)
      if (qb.projection.map[b] == f2.map[a2] && !hit[b * qa.rack->order() + a2])
        return std::nullopt;  // not a double extension; nothing to check

  if (!is_covering(f2, cfg.closure_cap).verdict)
    return "quotient along a double extension lost the covering property on " + f.dom->name();
  return std::nullopt;
}

std::optional<std::string> check_frq_unit(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, cfg.max_order);
  FrqResult q = frq(X);  // covering and quandle checks inside
  if (X->classify().is_quandle && q.quandle->order() != X->order())
    return "quandle reflection of a quandle is not an isomorphism on " + X->name();
  return std::nullopt;
}

std::optional<std::string> check_frq_centralize_commute(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);

  RackHom fq = frq_hom(f);
  CentralizeResult after = centralize(fq, cfg.closure_cap);
  FrqResult domq = frq(f.dom);
  std::vector<int> route1(f.dom->order());
  for (int x = 0; x < f.dom->order(); ++x)
    route1[x] = after.unit.map[domq.unit.map[x]];

  CentralizeResult first = centralize(f, cfg.closure_cap);
  FrqResult then = frq(first.unit.cod);
  std::vector<int> route2(f.dom->order());
  for (int x = 0; x < f.dom->order(); ++x)
    route2[x] = then.unit.map[first.unit.map[x]];

  auto blocks = [&](const std::vector<int>& m, int classes) {
    std::vector<std::vector<int>> b(classes);
    for (int x = 0; x < f.dom->order(); ++x) b[m[x]].push_back(x);
    return b;
  };
  Congruence P1 = Congruence::from_partition(f.dom, blocks(route1, after.unit.cod->order()));
  Congruence P2 = Congruence::from_partition(f.dom, blocks(route2, then.quandle->order()));
  if (P1.class_count() != P2.class_count())
    return "the two composite quotients have different sizes on " + f.dom->name();
  if (!quotient(f.dom, P1).rack->same_table(*quotient(f.dom, P2).rack))
    return "the two composite quotients have different tables on " + f.dom->name();
  return std::nullopt;
}

std::optional<std::string> check_extension_chain(Rng& rng, const SuiteConfig& cfg) {
  RackHom f = sampler::random_surjection(rng, cfg.max_order);
  bool trivial = is_trivial_ext(f).verdict;
  bool normal = is_normal_ext(f).verdict;
  bool covering = is_covering(f, cfg.closure_cap).verdict;
  if (trivial && !normal) return "a trivial extension is not normal on " + f.dom->name();
  if (normal && !covering) return "a normal extension is not a covering on " + f.dom->name();
  return std::nullopt;
}

std::optional<std::string> check_endpoint_cover(Rng& rng, const SuiteConfig& cfg) {
  RackPtr X = sampler::random_rack(rng, std::min(cfg.max_order, 5));
  EndpointCoverResult ec = endpoint_cover(X, cfg.closure_cap);  // covering checked inside
  std::size_t inn_order = inn_group(*X, cfg.closure_cap).order();
  if (ec.cover->order() != static_cast<int>(inn_order) * X->order())
    return "cover size differs from order times inner group on " + X->name();
  return std::nullopt;
}

}  // namespace

const std::vector<Property>& suite_properties() {
  static const std::vector<Property> props = {
      {"unfolding-identities", 1, 1, check_unfolding},
      {"weak-idempotency", 1, 1, check_weak_idempotency},
      {"co-two-routes", 1, 1, check_co_two_routes},
      {"requotient-iso", 1, 1, check_requotient},
      {"orbit-congruence-permutes", 1, 1, check_orbit_permute},
      {"free-rack-axioms", 50, 1, check_free_rack_axioms},
      {"free-quandle-axioms", 50, 1, check_free_quandle_axioms},
      {"free-action-rack", 50, 1, check_free_action_rack},
      {"free-action-quandle", 50, 1, check_free_action_quandle},
      {"kernel-pairing-roundtrip", 5, 1, check_kernel_pairing},
      {"excess-kills-relations", 1, 1, check_excess_kills_relations},
      {"augmented-rack-identities", 1, 1, check_augmented_identities},
      {"abelianization-components", 1, 1, check_ab_components},
      {"kernel-image-triviality-iff", 1, 1, check_kernel_image_iff},
      {"word-eq3-soundness", 1, 2, check_word_eq3},
      {"covering-method-agreement", 1, 1, check_covering_methods},
      {"covering-pullback-stability", 1, 1, check_pullback_stability},
      {"horn-retraction", 1, 1, check_horn_retraction},
      {"centralize-three-routes", 1, 1, check_centralize_routes},
      {"centralize-minimality", 1, 4, check_centralize_minimal},
      {"c1-permutes", 1, 1, check_c1_permutes},
      {"qx-congruence-permutes", 1, 1, check_qx_permutes},
      {"double-ext-quotient-stability", 1, 1, check_double_ext_quotient},
      {"frq-unit-covering", 1, 1, check_frq_unit},
      {"frq-centralize-commute", 1, 2, check_frq_centralize_commute},
      {"trivial-normal-covering-chain", 1, 1, check_extension_chain},
      {"endpoint-cover-covering", 1, 4, check_endpoint_cover},
  };
  return props;
}

const Property& find_property(const std::string& name) {
  for (const Property& p : suite_properties())
    if (p.name == name) return p;
  throw ShapeError("unknown property '" + name + "'");
}

PropertyOutcome run_property(const Property& p, const SuiteConfig& cfg, int samples) {
  PropertyOutcome out;
  out.name = p.name;
  out.samples = samples;
  std::vector<std::string> witnesses(samples);
  std::vector<char> failed(samples, 0);

  std::uint64_t prop_tag = 0;
  for (char c : p.name) prop_tag = prop_tag * 131 + static_cast<unsigned char>(c);

  auto run_one = [&](int i) {
    Rng rng(mix_seed(cfg.seed, prop_tag, static_cast<std::uint64_t>(i)));
    try {
      auto w = p.check(rng, cfg);
      if (w) {
        failed[i] = 1;
        witnesses[i] = *w;
      }
    } catch (const Error& e) {
      failed[i] = 1;
      witnesses[i] = std::string("exception: ") + e.what();
    } catch (const std::exception& e) {
      failed[i] = 1;
      witnesses[i] = std::string("unexpected exception: ") + e.what();
    }
  };

  if (cfg.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < samples; ++i) run_one(i);
  } else {
    for (int i = 0; i < samples; ++i) run_one(i);
  }

  for (int i = 0; i < samples; ++i) {
    if (!failed[i]) continue;
    if (out.failures == 0) out.first_witness = witnesses[i];
    ++out.failures;
  }
  return out;
}

std::vector<PropertyOutcome> run_suite(const SuiteConfig& cfg) {
  std::vector<PropertyOutcome> out;
  for (const Property& p : suite_properties()) {
    int samples = std::max(1, cfg.samples * p.scale_num / p.scale_den);
    out.push_back(run_property(p, cfg, samples));
  }
  return out;
}

}  // namespace qcover
