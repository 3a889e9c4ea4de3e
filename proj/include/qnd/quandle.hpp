#ifndef QND_QUANDLE_HPP_
#define QND_QUANDLE_HPP_

// Finite quandles on the carrier {0, ..., n-1}, their subsets, homomorphisms
// and the elementary constructions on them (products, generated subquandles,
// images and inverse images).

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qnd/errors.hpp"

namespace qnd {

//! Default bound on the carrier of constructed quandles (products).
inline constexpr std::size_t kDefaultCarrierBound = 1024;
//! Default bound for exhaustive subset enumeration (one machine word of
//! subsets).
inline constexpr std::size_t kDefaultExhaustiveBound = 12;

class Quandle;
class QuandleHom;

namespace detail {
  // Builds a quandle from a table known to satisfy the axioms. Only used for
  // constructions that preserve the axioms structurally.
  Quandle make_unchecked(std::size_t order, std::vector<Element> table);
  // Same for maps that are homomorphisms by construction.
  QuandleHom make_hom_unchecked(Quandle source, Quandle target, std::vector<Element> map);
}  // namespace detail

//! An immutable finite quandle. table[x][y] = x ◁ y, inv_table[x][y] = x ◁⁻¹ y.
//! Copies share the underlying tables.
class Quandle {
 public:
  //! The empty quandle.
  Quandle();

  std::size_t order() const noexcept { return data_->order; }

  Element op(Element x, Element y) const noexcept {
    return data_->table[x * data_->order + y];
  }

  Element inv(Element x, Element y) const noexcept {
    return data_->inv_table[x * data_->order + y];
  }

  //! Signed operation: op when positive is true, inv otherwise.
  Element act(Element x, bool positive, Element y) const noexcept {
    return positive ? op(x, y) : inv(x, y);
  }

  //! Row-major Cayley table of ◁.
  std::span<Element const> table() const noexcept { return data_->table; }
  std::span<Element const> inv_table() const noexcept {
    return data_->inv_table;
  }

  friend bool operator==(Quandle const& a, Quandle const& b) noexcept {
    return a.data_ == b.data_
           || (a.order() == b.order() && a.data_->table == b.data_->table);
  }

 private:
  struct Data {
    std::size_t          order = 0;
    std::vector<Element> table;
    std::vector<Element> inv_table;
  };

  explicit Quandle(std::shared_ptr<Data const> data) : data_(std::move(data)) {}

  friend Quandle detail::make_unchecked(std::size_t, std::vector<Element>);
  friend Quandle validate_quandle(std::size_t,
                                  std::vector<Element>,
                                  std::optional<std::vector<Element>>);

  std::shared_ptr<Data const> data_;
};

//! Checks the quandle axioms and returns the validated quandle. The table is
//! row-major with table[x * order + y] = x ◁ y. If an inverse table is
//! supplied it must coincide with the column inverses of table.
//!
//! Throws AxiomViolation carrying the first failing witness in lexicographic
//! order (A1 is checked before A2, A2 before A3), and Error if the table has
//! the wrong size or an entry out of range.
Quandle validate_quandle(std::size_t                         order,
                         std::vector<Element>                table,
                         std::optional<std::vector<Element>> inv_table = {});

//! Convenience overload taking the table as a list of rows.
Quandle validate_quandle(std::vector<std::vector<Element>> const& rows);

//! The trivial quandle x ◁ y = x on n elements.
Quandle trivial_quandle(std::size_t n);

//! The dihedral quandle x ◁ y = 2y - x mod n.
Quandle dihedral_quandle(std::size_t n);

//! The quandle obtained by transporting q along the bijection sigma, so that
//! sigma(x) ◁' sigma(y) = sigma(x ◁ y).
Quandle relabel(Quandle const& q, std::span<Element const> sigma);

//! One step of a chain: x ◁ y if positive, x ◁⁻¹ y otherwise.
struct ChainStep {
  bool    positive;
  Element y;
};

//! Left fold of the signed operations over steps, starting at x.
Element chain_apply(Quandle const& q, Element x, std::span<ChainStep const> steps);

//! Componentwise product; the pair (i, j) is encoded as i * q2.order() + j.
//! Throws OverflowOrder if the carrier would exceed bound.
Quandle product(Quandle const& q1,
                Quandle const& q2,
                std::size_t    bound = kDefaultCarrierBound);

//! A subset of the carrier {0, ..., parent_order - 1}.
class SubSet {
 public:
  SubSet() = default;
  explicit SubSet(std::size_t parent_order) : members_(parent_order, false) {}
  SubSet(std::size_t parent_order, std::span<Element const> elements);
  SubSet(std::size_t parent_order, std::initializer_list<Element> elements)
      : SubSet(parent_order, std::span<Element const>(elements.begin(), elements.size())) {}

  static SubSet full(std::size_t parent_order);

  std::size_t parent_order() const noexcept { return members_.size(); }
  bool        contains(Element x) const noexcept { return members_[x]; }
  void        insert(Element x) { members_.at(x) = true; }
  void        erase(Element x) { members_.at(x) = false; }
  std::size_t size() const noexcept;
  bool        empty() const noexcept { return size() == 0; }
  bool        is_full() const noexcept { return size() == parent_order(); }

  //! Members in ascending order.
  std::vector<Element> elements() const;

  //! Throws ParentMismatch when the parents differ.
  bool is_subset_of(SubSet const& other) const;

  friend SubSet operator|(SubSet const& a, SubSet const& b);
  friend SubSet operator&(SubSet const& a, SubSet const& b);
  friend bool   operator==(SubSet const&, SubSet const&) = default;

 private:
  std::vector<bool> members_;
};

//! Size first, then lexicographic on the ascending member list.
bool size_lex_less(SubSet const& a, SubSet const& b);

//! True iff S is closed under ◁ and ◁⁻¹.
bool is_subquandle(Quandle const& q, SubSet const& s);

//! Throws NotSubquandle unless S is a subquandle of q.
void require_subquandle(Quandle const& q, SubSet const& s);

//! Least subquandle containing seed.
SubSet generated_subquandle(Quandle const& q, SubSet const& seed);

//! Join of two subquandles: the subquandle generated by their union.
SubSet join_subquandles(Quandle const& q, SubSet const& a, SubSet const& b);

//! A subquandle as a quandle in its own right, re-indexed in ascending member
//! order. embedding[i] is the parent element corresponding to i.
struct InducedSubquandle {
  Quandle              quandle;
  std::vector<Element> embedding;
};

InducedSubquandle induced_subquandle(Quandle const& q, SubSet const& s);

//! A map between carriers preserving both operations.
class QuandleHom {
 public:
  Quandle const&              source() const noexcept { return source_; }
  Quandle const&              target() const noexcept { return target_; }
  std::vector<Element> const& map() const noexcept { return map_; }
  Element operator()(Element x) const noexcept { return map_[x]; }

  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(QuandleHom const& a, QuandleHom const& b) noexcept {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  QuandleHom(Quandle source, Quandle target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  friend QuandleHom validate_hom(Quandle const&, Quandle const&, std::vector<Element>);
  friend QuandleHom detail::make_hom_unchecked(Quandle, Quandle, std::vector<Element>);

  Quandle              source_;
  Quandle              target_;
  std::vector<Element> map_;
};

//! Checks both preservation identities exhaustively. Throws NotHomomorphism
//! with the first failing pair, or Error if the map has the wrong length or a
//! value outside the target.
QuandleHom validate_hom(Quandle const& source, Quandle const& target, std::vector<Element> map);

QuandleHom identity_hom(Quandle const& q);

//! The unique map to the one-element quandle.
QuandleHom terminal_hom(Quandle const& q);

//! g ∘ f. Throws ParentMismatch if f.target() is not g.source().
QuandleHom compose(QuandleHom const& g, QuandleHom const& f);

//! The first (or second) projection of product(q1, q2).
QuandleHom projection(Quandle const& q1, Quandle const& q2, int which);

//! Direct image of a subquandle. Throws NotSubquandle if S is not closed.
SubSet image_subquandle(QuandleHom const& f, SubSet const& s);

//! Inverse image of a subquandle. Throws NotSubquandle if T is not closed.
SubSet preimage_subquandle(QuandleHom const& f, SubSet const& t);

//! Every homomorphism source -> target in lexicographic order of the map.
std::vector<QuandleHom> enumerate_homs(Quandle const& source, Quandle const& target);

//! Every subquandle (including the empty one) in size-then-lexicographic
//! order. Throws BoundExceeded if q.order() > bound.
std::vector<SubSet> all_subquandles(Quandle const& q,
                                    std::size_t    bound = kDefaultExhaustiveBound);

}  // namespace qnd

#endif  // QND_QUANDLE_HPP_
