#ifndef QND_TESTS_FIXTURES_HPP_
#define QND_TESTS_FIXTURES_HPP_

#include <functional>
#include <vector>

#include "qnd/enumerate.hpp"
#include "qnd/quandle.hpp"

namespace qnd::test {

// The three-element quandle with 0 ◁ 2 = 1, 1 ◁ 2 = 0 and all else fixed.
inline Quandle E() {
  return validate_quandle({{0, 0, 1}, {1, 1, 0}, {2, 2, 2}});
}

// Dihedral quandle of order 3: a ◁ b = 2b - a mod 3.
inline Quandle R3() {
  return validate_quandle({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

inline Quandle one() {
  return validate_quandle({{0}});
}

// Every quandle of order 1..max_order, up to isomorphism.
inline std::vector<Quandle> all_up_to(std::size_t max_order) {
  std::vector<Quandle> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& q : enumerate_quandles(n)) {
      out.push_back(std::move(q));
    }
  }
  return out;
}

inline SubSet from_mask(std::size_t n, std::uint64_t mask) {
  SubSet s(n);
  for (Element x = 0; x < n; ++x) {
    if (mask >> x & 1U) {
      s.insert(x);
    }
  }
  return s;
}

// Calls fn(map) for each of the n2^n1 maps {0..n1-1} -> {0..n2-1}.
inline void for_each_map(std::size_t n1, std::size_t n2,
                         std::function<void(std::vector<Element> const&)> const& fn) {
  std::vector<Element> map(n1, 0);
  if (n1 > 0 && n2 == 0) {
    return;
  }
  while (true) {
    fn(map);
    std::size_t i = n1;
    while (i > 0) {
      --i;
      if (++map[i] < n2) {
        break;
      }
      map[i] = 0;
      if (i == 0) {
        return;
      }
    }
    if (n1 == 0) {
      return;
    }
  }
}

}  // namespace qnd::test

#endif  // QND_TESTS_FIXTURES_HPP_
