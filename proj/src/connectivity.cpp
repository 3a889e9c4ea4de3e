#include "qnd/connectivity.hpp"

#include "qnd/union_find.hpp"

namespace qnd {

OrbitPartition orbits(Quandle const& q) {
  std::size_t const n = q.order();
  detail::UnionFind uf(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      uf.unite(x, q.op(x, y));
    }
  }
  OrbitPartition out;
  out.parent_order = n;
  out.class_of     = uf.labels(&out.class_count);
  out.classes.assign(out.class_count, SubSet(n));
  for (Element x = 0; x < n; ++x) {
    out.classes[out.class_of[x]].insert(x);
  }
  return out;
}

ComponentQuotient pi0(Quandle const& q) {
  auto const orb     = orbits(q);
  auto       trivial = trivial_quandle(orb.class_count);
  auto       unit    = validate_hom(q, trivial, orb.class_of);
  return {std::move(trivial), std::move(unit)};
}

bool is_connected(Quandle const& q) {
  return orbits(q).class_count == 1;
}

QuandleHom pi0_product_witness(Quandle const& q1, Quandle const& q2, std::size_t bound) {
  auto const        p   = product(q1, q2, bound);
  auto const        op  = orbits(p);
  auto const        o1  = orbits(q1);
  auto const        o2  = orbits(q2);
  std::size_t const n2  = q2.order();
  std::size_t const k2  = o2.class_count;
  auto const        src = trivial_quandle(op.class_count);
  auto const        tgt = trivial_quandle(o1.class_count * k2);

  constexpr Element    unset = static_cast<Element>(-1);
  std::vector<Element> gamma(op.class_count, unset);
  for (Element a = 0; a < p.order(); ++a) {
    Element const image = o1.class_of[a / n2] * static_cast<Element>(k2) + o2.class_of[a % n2];
    Element&      slot  = gamma[op.class_of[a]];
    if (slot != unset && slot != image) {
      throw WitnessNotBijective("orbit comparison map is not well defined");
    }
    slot = image;
  }
  auto hom = validate_hom(src, tgt, std::move(gamma));
  if (!hom.is_injective() || !hom.is_surjective()) {
    throw WitnessNotBijective("orbit comparison map is not a bijection");
  }
  return hom;
}

}  // namespace qnd
