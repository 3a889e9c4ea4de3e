#include "doctest.h"

#include "fixtures.hpp"
#include "qnd/classify.hpp"
#include "qnd/connectivity.hpp"

using namespace qnd;
using namespace qnd::test;

TEST_CASE("orbits examples") {
  auto const oe = orbits(E());
  CHECK(oe.class_count == 2);
  CHECK(oe.class_of == std::vector<Element>{0, 0, 1});
  CHECK(oe.classes[0] == SubSet(3, {0, 1}));
  CHECK(oe.classes[1] == SubSet(3, {2}));

  for (std::size_t n = 0; n <= 5; ++n) {
    auto const ot = orbits(trivial_quandle(n));
    CHECK(ot.class_count == n);
  }
  CHECK(orbits(R3()).class_count == 1);
}

TEST_CASE("pi0") {
  auto const pe = pi0(E());
  CHECK(pe.quandle == trivial_quandle(2));
  CHECK(pe.unit.map() == std::vector<Element>{0, 0, 1});

  auto const pt = pi0(trivial_quandle(4));
  CHECK(pt.quandle == trivial_quandle(4));
  CHECK(pt.unit.is_injective());
  CHECK(pt.unit.is_surjective());

  auto const pr = pi0(R3());
  CHECK(pr.quandle.order() == 1);
  CHECK(pr.unit.map() == std::vector<Element>{0, 0, 0});
}

TEST_CASE("is_connected") {
  CHECK(is_connected(R3()));
  CHECK_FALSE(is_connected(E()));
  CHECK(is_connected(one()));
  CHECK_FALSE(is_connected(Quandle()));
}

TEST_CASE("pi0_product_witness examples") {
  auto const ee = pi0_product_witness(E(), E());
  CHECK(orbits(product(E(), E())).class_count == 4);
  CHECK(ee.source().order() == 4);
  CHECK(ee.target().order() == 4);

  auto const unit = pi0_product_witness(one(), E());
  CHECK(unit.map() == std::vector<Element>{0, 1});

  auto const re = pi0_product_witness(R3(), E());
  CHECK(re.source().order() == 2);
  CHECK(re.target().order() == 2);
  CHECK_THROWS_AS(pi0_product_witness(trivial_quandle(40), trivial_quandle(40)), OverflowOrder);
}

TEST_CASE("orbits agree with closure of singletons under all translations") {
  for (auto const& q : all_up_to(5)) {
    auto const orb = orbits(q);
    for (Element x = 0; x < q.order(); ++x) {
      SubSet reach(q.order(), {x});
      bool   grew = true;
      while (grew) {
        grew = false;
        for (auto v : reach.elements()) {
          for (Element y = 0; y < q.order(); ++y) {
            for (Element w : {q.op(v, y), q.inv(v, y)}) {
              if (!reach.contains(w)) {
                reach.insert(w);
                grew = true;
              }
            }
          }
        }
      }
      CHECK(reach == orb.orbit_of(x));
    }
  }
}

TEST_CASE("the unit is a surjection onto a trivial quandle with orbit fibres") {
  for (auto const& q : all_up_to(5)) {
    auto const p   = pi0(q);
    auto const orb = orbits(q);
    CHECK(p.unit.is_surjective());
    CHECK(is_trivial(p.quandle));
    for (Element x = 0; x < q.order(); ++x) {
      for (Element y = 0; y < q.order(); ++y) {
        CHECK((p.unit(x) == p.unit(y)) == orb.orbit_of(x).contains(y));
      }
    }
  }
}

TEST_CASE("orbits of products and functoriality") {
  auto const qs = all_up_to(5);
  for (auto const& a : qs) {
    for (auto const& b : qs) {
      if (a.order() * b.order() <= 25) {
        auto const g = pi0_product_witness(a, b);
        CHECK(g.is_injective());
        CHECK(g.is_surjective());
      }
    }
  }
  auto const small = all_up_to(3);
  for (auto const& s : small) {
    for (auto const& t : small) {
      auto const os = orbits(s), ot = orbits(t);
      for (auto const& f : enumerate_homs(s, t)) {
        for (Element x = 0; x < s.order(); ++x) {
          for (Element y = 0; y < s.order(); ++y) {
            if (os.class_of[x] == os.class_of[y]) {
              CHECK(ot.class_of[f(x)] == ot.class_of[f(y)]);
            }
          }
        }
      }
    }
  }
}
