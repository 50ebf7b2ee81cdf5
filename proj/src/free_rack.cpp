#include "qcover/free_rack.hpp"

namespace qcover {

FreeRackElem fr_op(const FreeRackElem& x, const FreeRackElem& y, int sign) {
  if (sign != 1 && sign != -1) throw ShapeError("sign must be +1 or -1");
  GroupWord conj = y.path.inverse() * GroupWord::single(y.head, sign) * y.path;
  return FreeRackElem{x.head, x.path * conj};
}

FreeQuandleElem fq_normalize(int head, const GroupWord& g) {
  int chi = g.char_sum();
  GroupWord balanced = chi == 0 ? g : GroupWord([&] {
    std::vector<Letter> pre;
    for (int i = 0; i < (chi > 0 ? chi : -chi); ++i) pre.push_back({head, chi > 0 ? -1 : 1});
    auto rest = g.letters();
    pre.insert(pre.end(), rest.begin(), rest.end());
    return pre;
  }());
  return FreeQuandleElem{head, std::move(balanced)};
}

FreeQuandleElem fq_op(const FreeQuandleElem& x, const FreeQuandleElem& y, int sign) {
  if (sign != 1 && sign != -1) throw ShapeError("sign must be +1 or -1");
  if (x.path.char_sum() != 0 || y.path.char_sum() != 0)
    throw CharacteristicNonZero("operand path has nonzero characteristic");
  GroupWord conj = y.path.inverse() * GroupWord::single(y.head, sign) * y.path;
  GroupWord path = GroupWord::single(x.head, -sign) * x.path * conj;
  return FreeQuandleElem{x.head, std::move(path)};
}

std::optional<SymmetricPairWitness> kernel_pairing(const std::vector<int>& f, const GroupWord& u) {
  // Simulate the stack reduction of the image word; the surviving stack is
  // the reduced image, so an empty stack means u is in the kernel and the
  // pop events are exactly the non-crossing pairing of positions.
  std::vector<int> stack;
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(u.size());
  for (int k = 0; k < n; ++k) {
    const Letter& l = u[k];
    if (l.first >= static_cast<int>(f.size())) throw ShapeError("generator outside map domain");
    if (!stack.empty()) {
      const Letter& top = u[stack.back()];
      if (f[top.first] == f[l.first] && top.second == -l.second) {
        pairs.push_back({stack.back(), k});
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(k);
  }
  if (!stack.empty()) return std::nullopt;

  std::vector<int> partner_min(n, -1);
  for (auto [i, j] : pairs) {
    partner_min[i] = i;
    partner_min[j] = i;
  }
  SymmetricPairWitness w;
  w.pairing = std::move(pairs);
  w.nu = u.letters();
  w.nu_prime.reserve(n);
  for (int k = 0; k < n; ++k) w.nu_prime.push_back({u[partner_min[k]].first, u[k].second});
  return w;
}

}  // namespace qcover
