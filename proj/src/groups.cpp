#include "irack/groups.hpp"

#include <array>

namespace irack {

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  g.carrier = Carrier::numbered(n);
  g.mult.assign(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.mult[i][j] = static_cast<Element>((i + j) % n);
  return g;
}

GroupTable symmetric_group_s3() {
  // Images of (1,2,3) under each permutation, zero-based.
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  GroupTable g;
  g.carrier = Carrier({"e", "t12", "t13", "t23", "c123", "c132"});
  g.mult.assign(6, std::vector<Element>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // (σ·τ)(x) = σ(τ(x))
      Perm prod{};
      for (int x = 0; x < 3; ++x) prod[x] = perms[i][perms[j][x]];
      for (std::size_t r = 0; r < 6; ++r)
        if (perms[r] == prod) g.mult[i][j] = static_cast<Element>(r);
    }
  }
  return g;
}

}  // namespace irack
