#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "qnd/connectivity.hpp"
#include "qnd/quandle.hpp"

using namespace qnd;
using namespace qnd::test;

TEST_CASE("validate_quandle accepts the small examples") {
  auto const e = E();
  CHECK(e.order() == 3);
  CHECK(e.op(0, 2) == 1);
  CHECK(e.op(1, 2) == 0);
  // ◁⁻¹ = ◁ for the three-element example and for R3.
  CHECK(std::equal(e.table().begin(), e.table().end(), e.inv_table().begin()));

  auto const r = R3();
  CHECK(std::equal(r.table().begin(), r.table().end(), r.inv_table().begin()));
  CHECK(r == dihedral_quandle(3));

  auto const o = one();
  CHECK(o.order() == 1);
  CHECK(o.op(0, 0) == 0);
}

TEST_CASE("the empty quandle is valid") {
  auto const q = validate_quandle(0, {});
  CHECK(q.order() == 0);
  CHECK(q == Quandle());
  CHECK(all_subquandles(q).size() == 1);
}

TEST_CASE("validate_quandle reports the first failing witness") {
  SUBCASE("A1") {
    try {
      validate_quandle({{0, 0, 1}, {1, 1, 0}, {2, 2, 1}});
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom() == Axiom::A1);
      CHECK(e.witness() == std::vector<Element>{2, 2});
    }
  }
  SUBCASE("A2") {
    try {
      validate_quandle({{0, 0}, {0, 1}});
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom() == Axiom::A2);
      CHECK(e.witness() == std::vector<Element>{1, 0});
    }
  }
  SUBCASE("A3") {
    // Columns are permutations fixing their index, but rho_2 is not the
    // conjugate of rho_1 by rho_0.
    std::vector<std::vector<Element>> rows{{0, 2, 0}, {2, 1, 1}, {1, 0, 2}};
    auto at = [&](Element x, Element y) { return rows[x][y]; };
    std::vector<Element> first;
    for (Element x = 0; x < 3 && first.empty(); ++x) {
      for (Element y = 0; y < 3 && first.empty(); ++y) {
        for (Element z = 0; z < 3 && first.empty(); ++z) {
          if (at(at(x, y), z) != at(at(x, z), at(y, z))) {
            first = {x, y, z};
          }
        }
      }
    }
    REQUIRE(!first.empty());
    try {
      validate_quandle(rows);
      FAIL("expected AxiomViolation");
    } catch (AxiomViolation const& e) {
      CHECK(e.axiom() == Axiom::A3);
      CHECK(e.witness() == first);
    }
  }
  SUBCASE("entries out of range and bad shapes") {
    CHECK_THROWS_AS(validate_quandle(2, {0, 0, 5, 1}), Error);
    CHECK_THROWS_AS(validate_quandle(2, {0, 0, 1}), Error);
    CHECK_THROWS_AS(validate_quandle({{0, 0}, {1}}), Error);
  }
}

TEST_CASE("a supplied inverse table must match the column inverses") {
  std::vector<Element> table{0, 2, 1, 2, 1, 0, 1, 0, 2};
  CHECK_NOTHROW(validate_quandle(3, table, table));
  auto wrong = table;
  std::swap(wrong[1], wrong[4]);
  CHECK_THROWS_AS(validate_quandle(3, table, wrong), AxiomViolation);
}

TEST_CASE("chain_apply folds signed steps from the left") {
  std::vector<ChainStep> one_step{{true, 2}};
  CHECK(chain_apply(E(), 0, one_step) == 1);
  CHECK(chain_apply(E(), 2, {}) == 2);
  std::vector<ChainStep> two{{true, 1}, {true, 1}};
  CHECK(chain_apply(R3(), 0, two) == 0);
  std::vector<ChainStep> undo{{true, 1}, {false, 1}};
  CHECK(chain_apply(R3(), 0, undo) == 0);
}

TEST_CASE("product") {
  CHECK(product(E(), one()) == E());
  CHECK(product(E(), E()).order() == 9);
  auto const p = product(R3(), E());
  // (0,0) ◁ (1,2) = (0 ◁ 1, 0 ◁ 2) = (2, 1)
  CHECK(p.op(0 * 3 + 0, 1 * 3 + 2) == 2 * 3 + 1);
  auto const t = p.table();
  CHECK_NOTHROW(validate_quandle(p.order(), std::vector<Element>(t.begin(), t.end())));
  CHECK_THROWS_AS(product(E(), E(), 8), OverflowOrder);
}

TEST_CASE("generated_subquandle examples") {
  CHECK(generated_subquandle(E(), SubSet(3, {0, 2})) == SubSet::full(3));
  CHECK(generated_subquandle(R3(), SubSet(3, {0, 1})) == SubSet::full(3));
  CHECK(generated_subquandle(E(), SubSet(3)).empty());
  for (auto const& q : all_up_to(4)) {
    for (Element x = 0; x < q.order(); ++x) {
      CHECK(generated_subquandle(q, SubSet(q.order(), {x})) == SubSet(q.order(), {x}));
    }
  }
}

TEST_CASE("generated_subquandle equals the chain set over the seed") {
  // Breadth-first expansion of left-nested chains whose acting elements are
  // all in the seed.
  auto chains = [](Quandle const& q, SubSet const& seed) {
    SubSet out = seed;
    bool   grew = true;
    while (grew) {
      grew = false;
      for (auto v : out.elements()) {
        for (auto a : seed.elements()) {
          for (Element w : {q.op(v, a), q.inv(v, a)}) {
            if (!out.contains(w)) {
              out.insert(w);
              grew = true;
            }
          }
        }
      }
    }
    return out;
  };
  for (auto const& q : all_up_to(5)) {
    std::size_t const n = q.order();
    for (std::uint64_t m = 0; m < (1U << n); ++m) {
      auto const seed = from_mask(n, m);
      auto const gen  = generated_subquandle(q, seed);
      REQUIRE(gen == chains(q, seed));
      CHECK(seed.is_subset_of(gen));
      CHECK(is_subquandle(q, gen));
      CHECK(generated_subquandle(q, gen) == gen);
      for (std::uint64_t b = m;; b = (b + 1) | m) {
        CHECK(gen.is_subset_of(generated_subquandle(q, from_mask(n, b))));
        if (b == (1U << n) - 1) {
          break;
        }
      }
    }
  }
}

TEST_CASE("every quandle satisfies the inverse round trip and the rewriting identity") {
  for (auto const& q : all_up_to(5)) {
    for (Element x = 0; x < q.order(); ++x) {
      for (Element y = 0; y < q.order(); ++y) {
        CHECK(q.inv(q.op(x, y), y) == x);
        CHECK(q.op(q.inv(x, y), y) == x);
        for (Element z = 0; z < q.order(); ++z) {
          for (bool a : {true, false}) {
            for (bool b : {true, false}) {
              CHECK(q.act(x, a, q.act(y, b, z)) == q.act(q.act(q.act(x, !b, z), a, y), b, z));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("validate_hom") {
  auto const t2 = trivial_quandle(2);
  CHECK_NOTHROW(validate_hom(E(), t2, {0, 0, 1}));
  CHECK_NOTHROW(validate_hom(R3(), R3(), {1, 0, 2}));
  CHECK(identity_hom(E()).map() == std::vector<Element>{0, 1, 2});
  try {
    validate_hom(R3(), R3(), {0, 0, 1});
    FAIL("expected NotHomomorphism");
  } catch (NotHomomorphism const& e) {
    CHECK(e.x() == 0);
    CHECK(e.y() == 1);
  }
  CHECK_THROWS_AS(validate_hom(E(), t2, {0, 0}), Error);
  CHECK_THROWS_AS(validate_hom(E(), t2, {0, 0, 2}), Error);
}

TEST_CASE("image and inverse image of subquandles") {
  auto const eta = validate_hom(E(), trivial_quandle(2), {0, 0, 1});
  CHECK(image_subquandle(eta, SubSet(3, {0, 1})) == SubSet(2, {0}));
  CHECK(image_subquandle(identity_hom(E()), SubSet(3, {0, 1})) == SubSet(3, {0, 1}));
  CHECK(image_subquandle(terminal_hom(R3()), SubSet::full(3)) == SubSet::full(1));
  CHECK_THROWS_AS(image_subquandle(eta, SubSet(3, {0, 2})), NotSubquandle);

  CHECK(preimage_subquandle(eta, SubSet(2, {1})) == SubSet(3, {2}));
  CHECK(preimage_subquandle(identity_hom(E()), SubSet(3, {2})) == SubSet(3, {2}));
  auto const first = projection(E(), E(), 0);
  CHECK(preimage_subquandle(first, SubSet(3, {2})) == SubSet(9, {6, 7, 8}));
  CHECK_THROWS_AS(preimage_subquandle(identity_hom(E()), SubSet(3, {0, 2})), NotSubquandle);
}

TEST_CASE("f(f⁻¹(T)) ⊆ T with equality for surjections") {
  auto const qs = all_up_to(3);
  for (auto const& s : qs) {
    for (auto const& t : qs) {
      for (auto const& f : enumerate_homs(s, t)) {
        for (auto const& sub : all_subquandles(t)) {
          auto const back = image_subquandle(f, preimage_subquandle(f, sub));
          CHECK(back.is_subset_of(sub));
          if (f.is_surjective()) {
            CHECK(back == sub);
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate_homs examples") {
  auto const homs = enumerate_homs(R3(), E());
  REQUIRE(homs.size() == 3);
  for (Element v = 0; v < 3; ++v) {
    CHECK(homs[v].map() == std::vector<Element>(3, v));
  }
  CHECK(enumerate_homs(one(), E()).size() == 3);
  CHECK(enumerate_homs(E(), one()).size() == 1);
  CHECK(enumerate_homs(Quandle(), E()).size() == 1);
  CHECK(enumerate_homs(E(), Quandle()).empty());
}

TEST_CASE("enumerate_homs equals brute-force filtering for orders <= 3") {
  auto const qs = all_up_to(3);
  for (auto const& s : qs) {
    for (auto const& t : qs) {
      std::vector<std::vector<Element>> brute;
      for_each_map(s.order(), t.order(), [&](std::vector<Element> const& m) {
        try {
          validate_hom(s, t, m);
          brute.push_back(m);
        } catch (NotHomomorphism const&) {
        }
      });
      std::vector<std::vector<Element>> found;
      for (auto const& f : enumerate_homs(s, t)) {
        found.push_back(f.map());
      }
      CHECK(found == brute);
    }
  }
}

TEST_CASE("all_subquandles") {
  std::vector<SubSet> expected{SubSet(3),         SubSet(3, {0}),    SubSet(3, {1}),
                               SubSet(3, {2}),    SubSet(3, {0, 1}), SubSet::full(3)};
  CHECK(all_subquandles(E()) == expected);
  CHECK(all_subquandles(one()) == std::vector<SubSet>{SubSet(1), SubSet(1, {0})});
  CHECK(all_subquandles(trivial_quandle(2)).size() == 4);
  CHECK_THROWS_AS(all_subquandles(trivial_quandle(13)), BoundExceeded);
}

TEST_CASE("induced subquandle and relabel") {
  auto const ind = induced_subquandle(E(), SubSet(3, {0, 1}));
  CHECK(ind.quandle == trivial_quandle(2));
  CHECK(ind.embedding == std::vector<Element>{0, 1});
  CHECK_THROWS_AS(induced_subquandle(E(), SubSet(3, {0, 2})), NotSubquandle);

  std::vector<Element> sigma{2, 0, 1};
  auto const           moved = relabel(E(), sigma);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      CHECK(moved.op(sigma[x], sigma[y]) == sigma[E().op(x, y)]);
    }
  }
  CHECK_NOTHROW(validate_hom(E(), moved, sigma));
}
