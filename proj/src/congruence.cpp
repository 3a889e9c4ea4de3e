#include "qnd/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "qnd/connectivity.hpp"
#include "qnd/union_find.hpp"

namespace qnd {

namespace {

  void require_same_parent(std::size_t a, std::size_t b) {
    if (a != b) {
      throw ParentMismatch(a, b);
    }
  }

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Congruence / Relation
////////////////////////////////////////////////////////////////////////////////

Congruence::Congruence(std::vector<Element> class_of) : class_of_(std::move(class_of)) {
  std::vector<Element> relabel;
  constexpr Element    unset = static_cast<Element>(-1);
  for (auto& c : class_of_) {
    if (c >= relabel.size()) {
      relabel.resize(c + 1, unset);
    }
    if (relabel[c] == unset) {
      relabel[c] = static_cast<Element>(class_count_++);
    }
    c = relabel[c];
  }
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<Element> c(n);
  for (Element x = 0; x < n; ++x) {
    c[x] = x;
  }
  return Congruence(std::move(c));
}

Congruence Congruence::total(std::size_t n) {
  return Congruence(std::vector<Element>(n, 0));
}

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out(class_count_);
  for (Element x = 0; x < class_of_.size(); ++x) {
    out[class_of_[x]].push_back(x);
  }
  return out;
}

bool Congruence::refines(Congruence const& other) const {
  require_same_parent(parent_order(), other.parent_order());
  // Each class of self must map into a single class of other.
  std::vector<Element> target(class_count_, static_cast<Element>(-1));
  for (Element x = 0; x < class_of_.size(); ++x) {
    Element& t = target[class_of_[x]];
    if (t == static_cast<Element>(-1)) {
      t = other.class_of_[x];
    } else if (t != other.class_of_[x]) {
      return false;
    }
  }
  return true;
}

Relation Relation::of(Congruence const& c) {
  Relation r(c.parent_order());
  for (Element a = 0; a < r.n_; ++a) {
    for (Element b = 0; b < r.n_; ++b) {
      if (c.related(a, b)) {
        r.insert(a, b);
      }
    }
  }
  return r;
}

std::size_t Relation::size() const noexcept {
  return static_cast<std::size_t>(std::count(pairs_.begin(), pairs_.end(), true));
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (contains(a, b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

bool Relation::is_subset_of(Relation const& other) const {
  require_same_parent(n_, other.n_);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i] && !other.pairs_[i]) {
      return false;
    }
  }
  return true;
}

Relation compose(Relation const& r, Relation const& s) {
  require_same_parent(r.parent_order(), s.parent_order());
  std::size_t const n = r.parent_order();
  Relation          out(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!r.contains(a, b)) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (s.contains(b, c)) {
          out.insert(a, c);
        }
      }
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////////
// Compatibility
////////////////////////////////////////////////////////////////////////////////

namespace {

  // Returns true and fills witness on the first incompatibility.
  bool find_incompatibility(Quandle const& q, Congruence const& c, std::vector<Element>& witness) {
    std::size_t const n = q.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (!c.related(a, b)) {
          continue;
        }
        for (Element x = 0; x < n; ++x) {
          if (!c.related(q.op(a, x), q.op(b, x)) || !c.related(q.op(x, a), q.op(x, b))
              || !c.related(q.inv(a, x), q.inv(b, x)) || !c.related(q.inv(x, a), q.inv(x, b))) {
            witness = {a, b, x};
            return true;
          }
        }
      }
    }
    return false;
  }

}  // namespace

bool is_compatible(Quandle const& q, Congruence const& c) {
  require_same_parent(c.parent_order(), q.order());
  std::vector<Element> witness;
  return !find_incompatibility(q, c, witness);
}

void require_compatible(Quandle const& q, Congruence const& c) {
  require_same_parent(c.parent_order(), q.order());
  std::vector<Element> witness;
  if (find_incompatibility(q, c, witness)) {
    throw NotCongruence("partition is not compatible with the operations", witness);
  }
}

Congruence congruence_from_relation(Quandle const& q, Relation const& r) {
  require_same_parent(r.parent_order(), q.order());
  std::size_t const n = q.order();
  for (Element a = 0; a < n; ++a) {
    if (!r.contains(a, a)) {
      throw NotCongruence("relation is not reflexive", {a, a});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (r.contains(a, b) && !r.contains(b, a)) {
        throw NotCongruence("relation is not symmetric", {a, b});
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!r.contains(a, b)) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (r.contains(b, c) && !r.contains(a, c)) {
          throw NotCongruence("relation is not transitive", {a, b, c});
        }
      }
    }
  }
  // Reflexive, symmetric and transitive: class of x is labelled by its
  // smallest related element.
  std::vector<Element> class_of(n);
  for (Element x = 0; x < n; ++x) {
    Element m = x;
    for (Element y = 0; y < x; ++y) {
      if (r.contains(y, x)) {
        m = y;
        break;
      }
    }
    class_of[x] = m;
  }
  Congruence c(std::move(class_of));
  require_compatible(q, c);
  return c;
}

////////////////////////////////////////////////////////////////////////////////
// Constructions
////////////////////////////////////////////////////////////////////////////////

Congruence inn_congruence(Quandle const& q) {
  Congruence c(orbits(q).class_of);
  require_compatible(q, c);
  return c;
}

QuotientResult quotient(Quandle const& q, Congruence const& theta) {
  require_compatible(q, theta);
  std::size_t const    n = q.order(), k = theta.class_count();
  std::vector<Element> rep(k);
  for (Element x = n; x-- > 0;) {
    rep[theta.class_of(x)] = x;
  }
  std::vector<Element> table(k * k);
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      table[i * k + j] = theta.class_of(q.op(rep[i], rep[j]));
    }
  }
  auto quot = validate_quandle(k, std::move(table));
  auto proj = validate_hom(q, quot, theta.class_of());
  return {std::move(quot), std::move(proj)};
}

Congruence kernel_pair(QuandleHom const& f) {
  return Congruence(f.map());
}

Congruence congruence_generated(Quandle const& q, Relation const& seed) {
  require_same_parent(seed.parent_order(), q.order());
  std::size_t const n = q.order();
  detail::UnionFind uf(n);
  for (auto [a, b] : seed.pairs()) {
    uf.unite(a, b);
  }
  // Every pair in the equivalence is generated by pairs (a, root(a)); close
  // those under left and right translations until nothing merges.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element a = 0; a < n; ++a) {
      Element const r = uf.find(a);
      if (r == a) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        changed |= uf.unite(q.op(a, c), q.op(r, c));
        changed |= uf.unite(q.op(c, a), q.op(c, r));
        changed |= uf.unite(q.inv(a, c), q.inv(r, c));
        changed |= uf.unite(q.inv(c, a), q.inv(c, r));
      }
    }
  }
  return Congruence(uf.labels());
}

bool permutes_with_inn(Quandle const& q, Congruence const& r) {
  require_compatible(q, r);
  auto const inn = Relation::of(inn_congruence(q));
  auto const rel = Relation::of(r);
  return compose(inn, rel) == compose(rel, inn);
}

Congruence effective_closure(Quandle const& q, Congruence const& r) {
  require_compatible(q, r);
  auto const inn = Relation::of(inn_congruence(q));
  return congruence_from_relation(q, compose(Relation::of(r), inn));
}

Congruence join(Quandle const& q, Congruence const& r, Congruence const& s) {
  require_same_parent(r.parent_order(), s.parent_order());
  require_same_parent(r.parent_order(), q.order());
  std::size_t const n = q.order();
  Relation          seed(n);
  detail::UnionFind uf(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (r.related(a, b) || s.related(a, b)) {
        seed.insert(a, b);
        uf.unite(a, b);
      }
    }
  }
  auto generated = congruence_generated(q, seed);
  if (!(generated == Congruence(uf.labels()))) {
    throw std::logic_error("congruence join differs from the partition join");
  }
  return generated;
}

Congruence preimage_congruence(QuandleHom const& f, Congruence const& r) {
  require_same_parent(r.parent_order(), f.target().order());
  std::vector<Element> class_of(f.source().order());
  for (Element x = 0; x < class_of.size(); ++x) {
    class_of[x] = r.class_of(f(x));
  }
  return Congruence(std::move(class_of));
}

Relation image_relation(QuandleHom const& f, Congruence const& r) {
  require_same_parent(r.parent_order(), f.source().order());
  std::size_t const n = f.source().order();
  Relation          out(f.target().order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (r.related(a, b)) {
        out.insert(f(a), f(b));
      }
    }
  }
  return out;
}

Congruence image_congruence(QuandleHom const& f, Congruence const& r) {
  if (!f.is_surjective()) {
    throw NotSurjective("image of a congruence requires a surjective homomorphism");
  }
  return congruence_generated(f.target(), image_relation(f, r));
}

std::vector<Congruence> all_congruences(Quandle const& q, std::size_t bound) {
  std::size_t const n = q.order();
  if (n > bound) {
    throw BoundExceeded("congruence enumeration", n, bound);
  }
  std::vector<Congruence> out;
  std::vector<Element>    rgs(n, 0);
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
  auto search = [&](auto&& self, std::size_t i, Element max_used) -> void {
    if (i == n) {
      Congruence c(rgs);
      if (is_compatible(q, c)) {
        out.push_back(std::move(c));
      }
      return;
    }
    for (Element v = 0; v <= max_used + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  if (n == 0) {
    out.emplace_back(std::vector<Element>{});
    return out;
  }
  search(search, 1, 0);
  return out;
}

}  // namespace qnd
