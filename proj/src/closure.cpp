#include "qnd/closure.hpp"

#include <stdexcept>

#include "qnd/connectivity.hpp"

namespace qnd {

SubSet closure_sub(Quandle const& q, SubSet const& m) {
  require_subquandle(q, m);
  auto const orb = orbits(q);
  SubSet     out(q.order());
  std::vector<bool> touched(orb.class_count, false);
  for (auto a : m.elements()) {
    touched[orb.class_of[a]] = true;
  }
  for (Element x = 0; x < q.order(); ++x) {
    if (touched[orb.class_of[x]]) {
      out.insert(x);
    }
  }
  return out;
}

bool is_dense(Quandle const& q, SubSet const& m) {
  return closure_sub(q, m).is_full();
}

bool is_closed(Quandle const& q, SubSet const& m) {
  return closure_sub(q, m) == m;
}

DenseClosedFactorization dense_closed_factorization(Quandle const& q, SubSet const& m) {
  auto outer   = closure_sub(q, m);
  auto induced = induced_subquandle(q, outer);
  SubSet inner(induced.quandle.order());
  for (Element i = 0; i < induced.embedding.size(); ++i) {
    if (m.contains(induced.embedding[i])) {
      inner.insert(i);
    }
  }
  return {std::move(outer), std::move(induced.quandle), std::move(induced.embedding),
          std::move(inner)};
}

bool weakly_hereditary_at(Quandle const& q, SubSet const& m) {
  auto const f = dense_closed_factorization(q, m);
  return is_dense(f.induced, f.inner);
}

SubSet diagonal(Quandle const& q) {
  std::size_t const n = q.order();
  SubSet            d(n * n);
  for (Element x = 0; x < n; ++x) {
    d.insert(static_cast<Element>(x * n + x));
  }
  return d;
}

bool is_c_connected(Quandle const& q, std::size_t bound) {
  auto const square = product(q, q, bound);
  auto const diag   = diagonal(q);
  auto const gen    = generated_subquandle(square, diag);
  if (!(gen == diag)) {
    throw std::logic_error("diagonal is not a subquandle of the square");
  }
  return is_dense(square, gen);
}

bool is_c_separated(Quandle const& q, std::size_t bound) {
  auto const square = product(q, q, bound);
  return is_closed(square, diagonal(q));
}

}  // namespace qnd
