#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "qcover/congruence.hpp"
#include "qcover/hom.hpp"
#include "qcover/path_group.hpp"
#include "qcover/perm.hpp"
#include "qcover/rack.hpp"

namespace qcover {

struct Pi0Result {
  Congruence co;
  RackPtr components;  // trivial rack on the components
  RackHom unit;
};

// Connected components as the orbit congruence of the inner automorphism
// group, with the trivial quotient and its unit.
Pi0Result pi0(RackPtr X);

// Subrack on the component of a, labels inherited.
RackPtr connected_component(RackPtr X, int a);

struct TrivialReport {
  bool verdict = false;
  // Two distinct connected elements with the same image.
  std::optional<std::pair<int, int>> witness;
};

// Trivial extension: injective on every connected component.
TrivialReport is_trivial_ext(const RackHom& f);

struct CoveringReport {
  bool verdict = false;
  // (x, a, b) with f(a) = f(b) and x <| a <|^-1 b != x; doubles as a
  // length-1 horn that fails to close.
  std::optional<std::array<int, 3>> witness;
  bool method_scan = false;    // direct triple scan
  bool method_kernel = false;  // kernel image subgroup is trivial
};

// Decides the covering property by two independent routes and insists they
// agree (MethodDisagreement otherwise).
CoveringReport is_covering(const RackHom& f, std::size_t cap = kDefaultClosureCap);

// Scan route only: deterministic first witness in (a, b, x) order, or
// nullopt when every kernel pair acts identically. Serial reference.
std::optional<std::array<int, 3>> covering_scan_serial(const RackHom& f);
// Same result, inner loops sharded across threads.
std::optional<std::array<int, 3>> covering_scan(const RackHom& f);

// A pair of parallel step sequences over a homomorphism, sharing a base.
struct Horn {
  RackHom hom;
  int base = 0;
  std::vector<std::array<int, 3>> steps;  // (a_i, b_i, delta_i)
};

struct HornReport {
  int end_a = 0, end_b = 0;
  bool closes = false;
  bool retracts = false;
};

HornReport horn_analyze(const Horn& h);

// Like a horn but the two trails may start at different f-related points.
struct Membrane {
  std::pair<int, int> base;
  std::vector<std::array<int, 3>> steps;
};

struct NormalReport {
  bool verdict = false;
  int failing_projection = 0;  // 1 or 2 when verdict is false
  // A membrane whose one trail loops while the other does not.
  std::optional<Membrane> witness;
};

// Normal extension: both kernel-pair projections are trivial extensions.
NormalReport is_normal_ext(const RackHom& f);

struct CentralizeResult {
  Congruence c1;
  RackHom unit;     // onto the centralized domain
  RackHom central;  // induced map to the codomain; always a covering
  bool route_pairs = false;   // generated congruence
  bool route_horns = false;   // endpoint reachability
  bool route_kernel = false;  // kernel-image orbits
};

// The centralizing congruence computed by three independent routes that must
// agree, with the reflection of f into coverings.
CentralizeResult centralize(const RackHom& f, std::size_t cap = kDefaultClosureCap);

struct FrqResult {
  RackPtr quandle;
  RackHom unit;
};

// Universal quandle quotient: collapse each element with its own symmetry
// orbit on itself. The unit is checked to be a covering.
FrqResult frq(RackPtr X);

// Image of f under the quandle reflection: the induced map between the
// quandle quotients.
RackHom frq_hom(const RackHom& f);

struct EndpointCoverResult {
  RackPtr cover;     // carrier X x Inn(X), trails acting by endpoint
  RackHom endpoint;  // (a, g) maps to a . g; checked to be a covering
};

// Finite truncation of the path-indexed cover through the inner
// automorphism group. Weak universality is not claimed.
EndpointCoverResult endpoint_cover(RackPtr X, std::size_t cap = kDefaultClosureCap);

struct SkeletonReport {
  std::vector<std::vector<int>> components;       // sorted, by least member
  std::vector<int> pointing;                      // one representative each
  std::vector<std::vector<Perm>> loop_generators; // stabilizer generators
  std::vector<std::size_t> loop_orders;           // stabilizer orders
  bool inn_truncated = true;  // loop groups are reported through Inn only
};

// One vertex per component; the loop data is the stabilizer of the chosen
// representative inside Inn(X) (Schreier generators), explicitly flagged as
// the Inn-image of the loop group.
SkeletonReport fundamental_skeleton(RackPtr X, const std::optional<std::vector<int>>& pointing,
                                    std::size_t cap = kDefaultClosureCap);

}  // namespace qcover
