#include "boxlab/box.hpp"

namespace boxlab {

LocalRelabel LocalRelabel::then(const LocalRelabel& next) const {
  return {inputFlip ^ next.inputFlip, outputFlipConst ^ next.outputFlipConst ^ (next.outputFlipByInput & inputFlip),
          outputFlipByInput ^ next.outputFlipByInput};
}

LocalRelabel LocalRelabel::inverse() const {
  return {inputFlip, outputFlipConst ^ (outputFlipByInput & inputFlip), outputFlipByInput};
}

Lro Lro::from_code(int c) {
  return {((c >> 6) & 1) != 0, LocalRelabel::from_code((c >> 3) & 7), LocalRelabel::from_code(c & 7)};
}

const std::vector<Lro>& lro_group() {
  static const std::vector<Lro> group = [] {
    std::vector<Lro> g;
    g.reserve(128);
    for (int c = 0; c < 128; ++c) g.push_back(Lro::from_code(c));
    return g;
  }();
  return group;
}

Lro compose(const Lro& first, const Lro& second) {
  const LocalRelabel& toAlice = first.partySwap ? second.bob : second.alice;
  const LocalRelabel& toBob = first.partySwap ? second.alice : second.bob;
  return {first.partySwap != second.partySwap, first.alice.then(toAlice), first.bob.then(toBob)};
}

Lro inverse(const Lro& g) {
  if (!g.partySwap) return {false, g.alice.inverse(), g.bob.inverse()};
  return {true, g.bob.inverse(), g.alice.inverse()};
}

BipartiteBox apply_lro(const BipartiteBox& P, const Lro& g) {
  std::array<double, BipartiteBox::kSize> t{};
  const auto& A = g.alice;
  const auto& B = g.bob;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          int x2 = x ^ A.inputFlip;
          int y2 = y ^ B.inputFlip;
          int a2 = a ^ (A.outputFlipByInput & x) ^ A.outputFlipConst;
          int b2 = b ^ (B.outputFlipByInput & y) ^ B.outputFlipConst;
          if (g.partySwap) {
            std::swap(x2, y2);
            std::swap(a2, b2);
          }
          t[BipartiteBox::index(x2, y2, a2, b2)] = P(x, y, a, b);
        }
  return make_box_unchecked(t);
}

}  // namespace boxlab
