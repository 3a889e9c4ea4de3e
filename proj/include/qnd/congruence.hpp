#ifndef QND_CONGRUENCE_HPP_
#define QND_CONGRUENCE_HPP_

// Congruences on finite quandles, raw binary relations and the closure
// operator on congruences induced by the orbit projection.

#include <cstddef>
#include <utility>
#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

//! An equivalence relation on the carrier stored as a partition. Classes are
//! numbered by smallest member, ascending, so equal partitions compare equal.
//! Compatibility with a particular quandle is established by the functions
//! that build congruences for it.
class Congruence {
 public:
  Congruence() = default;

  //! Normalizes the class labels; any labelling of the partition is accepted.
  explicit Congruence(std::vector<Element> class_of);

  static Congruence discrete(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t                 parent_order() const noexcept { return class_of_.size(); }
  std::size_t                 class_count() const noexcept { return class_count_; }
  std::vector<Element> const& class_of() const noexcept { return class_of_; }
  Element class_of(Element x) const noexcept { return class_of_[x]; }
  bool    related(Element a, Element b) const noexcept { return class_of_[a] == class_of_[b]; }

  //! Classes as ascending member lists, in class-index order.
  std::vector<std::vector<Element>> classes() const;

  //! Every pair of self is a pair of other. Throws ParentMismatch.
  bool refines(Congruence const& other) const;

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  std::vector<Element> class_of_;
  std::size_t          class_count_ = 0;
};

//! An arbitrary set of ordered pairs on the carrier.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t parent_order)
      : n_(parent_order), pairs_(parent_order * parent_order, false) {}

  static Relation of(Congruence const& c);

  std::size_t parent_order() const noexcept { return n_; }
  bool contains(Element a, Element b) const noexcept { return pairs_[a * n_ + b]; }
  void insert(Element a, Element b) { pairs_.at(a * n_ + b) = true; }
  std::size_t size() const noexcept;

  std::vector<std::pair<Element, Element>> pairs() const;

  //! Throws ParentMismatch.
  bool is_subset_of(Relation const& other) const;

  friend bool operator==(Relation const&, Relation const&) = default;

 private:
  std::size_t       n_ = 0;
  std::vector<bool> pairs_;
};

//! Throws NotCongruence with a witness (a, b, c) if the partition is not
//! compatible with q: a ~ b but one of a ◁ c, c ◁ a (or their ◁⁻¹
//! versions) is not related to the corresponding value for b.
void require_compatible(Quandle const& q, Congruence const& c);
bool is_compatible(Quandle const& q, Congruence const& c);

//! Converts a relation that must already be a congruence on q. Throws
//! NotCongruence if it is not reflexive, symmetric, transitive and compatible.
Congruence congruence_from_relation(Quandle const& q, Relation const& r);

//! Orbit congruence: x ~ y iff x and y share an orbit.
Congruence inn_congruence(Quandle const& q);

struct QuotientResult {
  Quandle    quandle;
  QuandleHom projection;
};

//! q / θ with [a] ◁ [b] = [a ◁ b]. Throws NotCongruence.
QuotientResult quotient(Quandle const& q, Congruence const& theta);

//! The fibres of f.
Congruence kernel_pair(QuandleHom const& f);

//! Least congruence containing seed.
Congruence congruence_generated(Quandle const& q, Relation const& seed);

//! {(a, c) | exists b: (a, b) in r and (b, c) in s}. Throws ParentMismatch.
Relation compose(Relation const& r, Relation const& s);

//! ~Inn ∘ R == R ∘ ~Inn as pair sets. Throws NotCongruence.
bool permutes_with_inn(Quandle const& q, Congruence const& r);

//! R ∘ ~Inn, checked to be a congruence. Throws NotCongruence.
Congruence effective_closure(Quandle const& q, Congruence const& r);

//! Least congruence containing both, checked against the join of the two
//! partitions. Throws ParentMismatch.
Congruence join(Quandle const& q, Congruence const& r, Congruence const& s);

//! x ~ y iff f(x) ~ f(y) in r.
Congruence preimage_congruence(QuandleHom const& f, Congruence const& r);

//! Congruence generated by {(f(a), f(b)) | a ~ b}. Throws NotSurjective.
Congruence image_congruence(QuandleHom const& f, Congruence const& r);

//! The congruence generated by the direct image pairs, without the
//! generation step: the plain relation {(f(a), f(b)) | a ~ b}.
Relation image_relation(QuandleHom const& f, Congruence const& r);

//! Every congruence on q: set partitions in restricted-growth-string order
//! filtered by compatibility. Throws BoundExceeded if q.order() > bound.
std::vector<Congruence> all_congruences(Quandle const& q, std::size_t bound = 8);

}  // namespace qnd

#endif  // QND_CONGRUENCE_HPP_
