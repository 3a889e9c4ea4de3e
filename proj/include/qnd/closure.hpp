#ifndef QND_CLOSURE_HPP_
#define QND_CLOSURE_HPP_

// The closure operator on subquandles induced by the orbit projection: a
// subquandle is sent to the union of the orbits it meets.

#include "qnd/quandle.hpp"

namespace qnd {

//! Union of all orbits meeting M. Throws NotSubquandle.
SubSet closure_sub(Quandle const& q, SubSet const& m);

bool is_dense(Quandle const& q, SubSet const& m);
bool is_closed(Quandle const& q, SubSet const& m);

//! M ⊆ closure(M) ⊆ q. `inner` is M re-indexed into `induced`, the quandle
//! induced on `outer` (ascending member order).
struct DenseClosedFactorization {
  SubSet               outer;
  Quandle              induced;
  std::vector<Element> embedding;
  SubSet               inner;
};

DenseClosedFactorization dense_closed_factorization(Quandle const& q, SubSet const& m);

//! Whether M is dense in its own closure.
bool weakly_hereditary_at(Quandle const& q, SubSet const& m);

//! The diagonal {(x, x)} of q × q under the product encoding.
SubSet diagonal(Quandle const& q);

//! Diagonal dense in q × q. Computed from the definition, not from the orbit
//! count. Throws OverflowOrder if q × q exceeds bound.
bool is_c_connected(Quandle const& q, std::size_t bound = kDefaultCarrierBound);

//! Diagonal closed in q × q. Throws OverflowOrder.
bool is_c_separated(Quandle const& q, std::size_t bound = kDefaultCarrierBound);

}  // namespace qnd

#endif  // QND_CLOSURE_HPP_
