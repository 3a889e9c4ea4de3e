#include "qnd/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qnd {

namespace {

  std::string witness_text(std::vector<Element> const& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i ? "," : "") << w[i];
    }
    os << ')';
    return os.str();
  }

  std::vector<Element> invert_columns(std::size_t n, std::vector<Element> const& table) {
    std::vector<Element> inv(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        inv[table[x * n + y] * n + y] = x;
      }
    }
    return inv;
  }

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Errors
////////////////////////////////////////////////////////////////////////////////

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
  }
  return "?";
}

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<Element> witness)
    : Error("axiom " + to_string(axiom) + " violated at " + witness_text(witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

AxiomViolation::AxiomViolation(std::string const& source, AxiomViolation const& inner)
    : Error(source + ": " + inner.what()), axiom_(inner.axiom_), witness_(inner.witness_) {}

NotHomomorphism::NotHomomorphism(Element x, Element y)
    : Error("map does not preserve the operations at " + witness_text({x, y})), x_(x), y_(y) {}

NotCongruence::NotCongruence(std::string const& reason, std::vector<Element> witness)
    : Error("not a congruence: " + reason + " at " + witness_text(witness)),
      witness_(std::move(witness)) {}

OverflowOrder::OverflowOrder(std::size_t requested, std::size_t bound)
    : Error("carrier of order " + std::to_string(requested) + " exceeds the bound "
            + std::to_string(bound)) {}

BoundExceeded::BoundExceeded(std::string const& what, std::size_t requested, std::size_t bound)
    : Error(what + ": order " + std::to_string(requested) + " exceeds the bound "
            + std::to_string(bound)) {}

ParentMismatch::ParentMismatch(std::size_t left, std::size_t right)
    : Error("carrier mismatch: " + std::to_string(left) + " vs " + std::to_string(right)) {}

ParseError::ParseError(std::string source, std::size_t line, std::string reason)
    : Error(source + ":" + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(std::move(reason)) {}

////////////////////////////////////////////////////////////////////////////////
// Quandle
////////////////////////////////////////////////////////////////////////////////

Quandle::Quandle() : data_(std::make_shared<Data const>()) {}

Quandle detail::make_unchecked(std::size_t order, std::vector<Element> table) {
  auto inv = invert_columns(order, table);
  return Quandle(std::make_shared<Quandle::Data const>(
      Quandle::Data{order, std::move(table), std::move(inv)}));
}

Quandle validate_quandle(std::size_t                         n,
                         std::vector<Element>                table,
                         std::optional<std::vector<Element>> inv_table) {
  if (table.size() != n * n) {
    throw Error("table has " + std::to_string(table.size()) + " entries, expected "
                + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error("entry " + std::to_string(table[i]) + " at " + witness_text({Element(i / n), Element(i % n)})
                  + " is outside the carrier");
    }
  }
  auto at = [&](Element x, Element y) { return table[x * n + y]; };

  for (Element x = 0; x < n; ++x) {
    if (at(x, x) != x) {
      throw AxiomViolation(Axiom::A1, {x, x});
    }
  }

  // A2: each column is a permutation. The witness is the first (x, y) whose
  // value was already hit by an earlier row in column y.
  std::vector<Element> seen(n);
  for (Element y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x = 0; x < n; ++x) {
      if (seen[at(x, y)]++) {
        throw AxiomViolation(Axiom::A2, {x, y});
      }
    }
  }
  auto inv = invert_columns(n, table);
  if (inv_table) {
    if (inv_table->size() != n * n) {
      throw Error("inverse table has the wrong size");
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if ((*inv_table)[x * n + y] != inv[x * n + y]) {
          throw AxiomViolation(Axiom::A2, {x, y});
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (at(at(x, y), z) != at(at(x, z), at(y, z))) {
          throw AxiomViolation(Axiom::A3, {x, y, z});
        }
        auto iat = [&](Element a, Element b) { return inv[a * n + b]; };
        if (iat(iat(x, y), z) != iat(iat(x, z), iat(y, z))) {
          throw AxiomViolation(Axiom::A3, {x, y, z});
        }
      }
    }
  }
  return Quandle(std::make_shared<Quandle::Data const>(
      Quandle::Data{n, std::move(table), std::move(inv)}));
}

Quandle validate_quandle(std::vector<std::vector<Element>> const& rows) {
  std::size_t const    n = rows.size();
  std::vector<Element> table;
  table.reserve(n * n);
  for (auto const& row : rows) {
    if (row.size() != n) {
      throw Error("row of length " + std::to_string(row.size()) + " in a table of order "
                  + std::to_string(n));
    }
    table.insert(table.end(), row.begin(), row.end());
  }
  return validate_quandle(n, std::move(table));
}

Quandle trivial_quandle(std::size_t n) {
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    std::fill_n(table.begin() + x * n, n, x);
  }
  return detail::make_unchecked(n, std::move(table));
}

Quandle dihedral_quandle(std::size_t n) {
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<Element>((2 * y + n - x) % n);
    }
  }
  return validate_quandle(n, std::move(table));
}

Quandle relabel(Quandle const& q, std::span<Element const> sigma) {
  std::size_t const n = q.order();
  if (sigma.size() != n) {
    throw ParentMismatch(sigma.size(), n);
  }
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[sigma[x] * n + sigma[y]] = sigma[q.op(x, y)];
    }
  }
  return detail::make_unchecked(n, std::move(table));
}

Element chain_apply(Quandle const& q, Element x, std::span<ChainStep const> steps) {
  for (auto const& step : steps) {
    x = q.act(x, step.positive, step.y);
  }
  return x;
}

Quandle product(Quandle const& q1, Quandle const& q2, std::size_t bound) {
  std::size_t const n1 = q1.order(), n2 = q2.order(), n = n1 * n2;
  if (n > bound) {
    throw OverflowOrder(n, bound);
  }
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element const i = q1.op(a / n2, b / n2);
      Element const j = q2.op(a % n2, b % n2);
      table[a * n + b] = static_cast<Element>(i * n2 + j);
    }
  }
  return detail::make_unchecked(n, std::move(table));
}

////////////////////////////////////////////////////////////////////////////////
// SubSet
////////////////////////////////////////////////////////////////////////////////

SubSet::SubSet(std::size_t parent_order, std::span<Element const> elements)
    : members_(parent_order, false) {
  for (auto x : elements) {
    insert(x);
  }
}

SubSet SubSet::full(std::size_t parent_order) {
  SubSet s(parent_order);
  s.members_.flip();
  return s;
}

std::size_t SubSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<Element> SubSet::elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < members_.size(); ++x) {
    if (members_[x]) {
      out.push_back(x);
    }
  }
  return out;
}

bool SubSet::is_subset_of(SubSet const& other) const {
  if (parent_order() != other.parent_order()) {
    throw ParentMismatch(parent_order(), other.parent_order());
  }
  for (std::size_t x = 0; x < members_.size(); ++x) {
    if (members_[x] && !other.members_[x]) {
      return false;
    }
  }
  return true;
}

SubSet operator|(SubSet const& a, SubSet const& b) {
  if (a.parent_order() != b.parent_order()) {
    throw ParentMismatch(a.parent_order(), b.parent_order());
  }
  SubSet out(a);
  for (std::size_t x = 0; x < a.members_.size(); ++x) {
    out.members_[x] = a.members_[x] || b.members_[x];
  }
  return out;
}

SubSet operator&(SubSet const& a, SubSet const& b) {
  if (a.parent_order() != b.parent_order()) {
    throw ParentMismatch(a.parent_order(), b.parent_order());
  }
  SubSet out(a);
  for (std::size_t x = 0; x < a.members_.size(); ++x) {
    out.members_[x] = a.members_[x] && b.members_[x];
  }
  return out;
}

bool size_lex_less(SubSet const& a, SubSet const& b) {
  auto const sa = a.size(), sb = b.size();
  if (sa != sb) {
    return sa < sb;
  }
  return a.elements() < b.elements();
}

////////////////////////////////////////////////////////////////////////////////
// Subquandles
////////////////////////////////////////////////////////////////////////////////

bool is_subquandle(Quandle const& q, SubSet const& s) {
  if (s.parent_order() != q.order()) {
    throw ParentMismatch(s.parent_order(), q.order());
  }
  auto const members = s.elements();
  for (auto x : members) {
    for (auto y : members) {
      if (!s.contains(q.op(x, y)) || !s.contains(q.inv(x, y))) {
        return false;
      }
    }
  }
  return true;
}

void require_subquandle(Quandle const& q, SubSet const& s) {
  if (!is_subquandle(q, s)) {
    throw NotSubquandle("subset is not closed under the quandle operations");
  }
}

SubSet generated_subquandle(Quandle const& q, SubSet const& seed) {
  if (seed.parent_order() != q.order()) {
    throw ParentMismatch(seed.parent_order(), q.order());
  }
  SubSet               out(q.order());
  std::vector<Element> members;
  std::vector<Element> todo = seed.elements();
  auto                 push = [&](Element z) {
    if (!out.contains(z)) {
      out.insert(z);
      todo.push_back(z);
    }
  };
  for (auto x : todo) {
    out.insert(x);
  }
  while (!todo.empty()) {
    Element const z = todo.back();
    todo.pop_back();
    members.push_back(z);
    // Combine z with every member found so far, including itself.
    for (std::size_t i = 0; i < members.size(); ++i) {
      Element const w = members[i];
      push(q.op(z, w));
      push(q.op(w, z));
      push(q.inv(z, w));
      push(q.inv(w, z));
    }
  }
  return out;
}

SubSet join_subquandles(Quandle const& q, SubSet const& a, SubSet const& b) {
  return generated_subquandle(q, a | b);
}

InducedSubquandle induced_subquandle(Quandle const& q, SubSet const& s) {
  require_subquandle(q, s);
  auto const           embedding = s.elements();
  std::size_t const    m         = embedding.size();
  std::vector<Element> index(q.order(), 0);
  for (Element i = 0; i < m; ++i) {
    index[embedding[i]] = i;
  }
  std::vector<Element> table(m * m);
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      table[i * m + j] = index[q.op(embedding[i], embedding[j])];
    }
  }
  return {detail::make_unchecked(m, std::move(table)), embedding};
}

////////////////////////////////////////////////////////////////////////////////
// Homomorphisms
////////////////////////////////////////////////////////////////////////////////

QuandleHom detail::make_hom_unchecked(Quandle source, Quandle target, std::vector<Element> map) {
  return QuandleHom(std::move(source), std::move(target), std::move(map));
}

bool QuandleHom::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (auto v : map_) {
    hit[v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool QuandleHom::is_injective() const {
  std::vector<bool> hit(target_.order(), false);
  for (auto v : map_) {
    if (hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

QuandleHom validate_hom(Quandle const& source, Quandle const& target, std::vector<Element> map) {
  if (map.size() != source.order()) {
    throw Error("map has length " + std::to_string(map.size()) + ", expected "
                + std::to_string(source.order()));
  }
  for (auto v : map) {
    if (v >= target.order()) {
      throw Error("map value " + std::to_string(v) + " is outside the target carrier");
    }
  }
  for (Element x = 0; x < source.order(); ++x) {
    for (Element y = 0; y < source.order(); ++y) {
      if (map[source.op(x, y)] != target.op(map[x], map[y])
          || map[source.inv(x, y)] != target.inv(map[x], map[y])) {
        throw NotHomomorphism(x, y);
      }
    }
  }
  return QuandleHom(source, target, std::move(map));
}

QuandleHom identity_hom(Quandle const& q) {
  std::vector<Element> map(q.order());
  std::iota(map.begin(), map.end(), Element(0));
  return detail::make_hom_unchecked(q, q, std::move(map));
}

QuandleHom terminal_hom(Quandle const& q) {
  return detail::make_hom_unchecked(q, trivial_quandle(1), std::vector<Element>(q.order(), 0));
}

QuandleHom compose(QuandleHom const& g, QuandleHom const& f) {
  if (!(f.target() == g.source())) {
    throw ParentMismatch(f.target().order(), g.source().order());
  }
  std::vector<Element> map(f.source().order());
  for (Element x = 0; x < map.size(); ++x) {
    map[x] = g(f(x));
  }
  return detail::make_hom_unchecked(f.source(), g.target(), std::move(map));
}

QuandleHom projection(Quandle const& q1, Quandle const& q2, int which) {
  auto const           p  = product(q1, q2);
  std::size_t const    n2 = q2.order();
  std::vector<Element> map(p.order());
  for (Element a = 0; a < p.order(); ++a) {
    map[a] = static_cast<Element>(which == 0 ? a / n2 : a % n2);
  }
  return detail::make_hom_unchecked(p, which == 0 ? q1 : q2, std::move(map));
}

SubSet image_subquandle(QuandleHom const& f, SubSet const& s) {
  require_subquandle(f.source(), s);
  SubSet out(f.target().order());
  for (auto x : s.elements()) {
    out.insert(f(x));
  }
  return out;
}

SubSet preimage_subquandle(QuandleHom const& f, SubSet const& t) {
  require_subquandle(f.target(), t);
  SubSet out(f.source().order());
  for (Element x = 0; x < f.source().order(); ++x) {
    if (t.contains(f(x))) {
      out.insert(x);
    }
  }
  return out;
}

std::vector<QuandleHom> enumerate_homs(Quandle const& source, Quandle const& target) {
  std::size_t const       n1 = source.order(), n2 = target.order();
  std::vector<QuandleHom> out;
  if (n1 == 0) {
    out.push_back(detail::make_hom_unchecked(source, target, {}));
    return out;
  }
  if (n2 == 0) {
    return out;
  }
  std::vector<Element> map(n1, 0);

  // Checks every pair whose triple (a, b, a ◁ b) has its largest index at x,
  // so that each identity is tested exactly when it becomes determined.
  auto consistent_at = [&](Element x) {
    for (Element a = 0; a <= x; ++a) {
      for (Element b = 0; b <= x; ++b) {
        Element const c = source.op(a, b);
        Element const d = source.inv(a, b);
        if (c <= x && (a == x || b == x || c == x) && map[c] != target.op(map[a], map[b])) {
          return false;
        }
        if (d <= x && (a == x || b == x || d == x) && map[d] != target.inv(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Element x) -> void {
    if (x == n1) {
      out.push_back(detail::make_hom_unchecked(source, target, map));
      return;
    }
    for (Element v = 0; v < n2; ++v) {
      map[x] = v;
      if (consistent_at(x)) {
        self(self, x + 1);
      }
    }
  };
  search(search, 0);
  return out;
}

std::vector<SubSet> all_subquandles(Quandle const& q, std::size_t bound) {
  std::size_t const n = q.order();
  if (n > bound) {
    throw BoundExceeded("subquandle enumeration", n, bound);
  }
  std::vector<SubSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    SubSet s(n);
    for (Element x = 0; x < n; ++x) {
      if (mask >> x & 1U) {
        s.insert(x);
      }
    }
    if (is_subquandle(q, s)) {
      out.push_back(std::move(s));
    }
  }
  std::stable_sort(out.begin(), out.end(), size_lex_less);
  return out;
}

}  // namespace qnd
