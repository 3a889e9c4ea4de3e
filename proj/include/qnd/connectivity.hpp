#ifndef QND_CONNECTIVITY_HPP_
#define QND_CONNECTIVITY_HPP_

// Orbits of a quandle under its inner automorphism group, the connected
// component quandle and its unit map.

#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

//! Partition of the carrier into orbits. Orbits are numbered by their
//! smallest member, ascending.
struct OrbitPartition {
  std::size_t          parent_order = 0;
  std::vector<Element> class_of;
  std::size_t          class_count = 0;
  std::vector<SubSet>  classes;

  SubSet const& orbit_of(Element x) const { return classes[class_of[x]]; }
};

//! Connected components of the graph with edges x -- x ◁ y.
OrbitPartition orbits(Quandle const& q);

//! The trivial quandle on the orbits together with the projection onto it.
struct ComponentQuotient {
  Quandle    quandle;
  QuandleHom unit;
};

ComponentQuotient pi0(Quandle const& q);

//! Exactly one orbit. The empty quandle has no orbit and is not connected.
bool is_connected(Quandle const& q);

//! The comparison map from the orbits of q1 × q2 to pairs of orbits,
//! [(x, y)] ↦ ([x], [y]), checked to be a bijective homomorphism. Pairs of
//! orbits are encoded as i * class_count(q2) + j.
//!
//! Throws WitnessNotBijective if the check fails and OverflowOrder if the
//! product exceeds bound.
QuandleHom pi0_product_witness(Quandle const& q1,
                               Quandle const& q2,
                               std::size_t    bound = kDefaultCarrierBound);

}  // namespace qnd

#endif  // QND_CONNECTIVITY_HPP_
