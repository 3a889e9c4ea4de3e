#include "qnd/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "qnd/connectivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qnd {

namespace {

  using Table = std::vector<Element>;
  using Perm  = std::vector<Element>;

  // Backtracking over the columns rho_y = (x -> x ◁ y). Each column is a
  // permutation fixing y; self-distributivity is equivalent to
  //   rho_{b ◁ c} = rho_c rho_b rho_c^{-1}   for all b, c,
  // which is checked as soon as columns b, c and b ◁ c are all placed, and
  // which forces column k whenever k = b ◁ c for earlier b, c.
  class ColumnSearch {
   public:
    explicit ColumnSearch(std::size_t n) : n_(n), cols_(n), inv_(n) {
      perms_fixing_.resize(n);
      for (Element k = 0; k < n; ++k) {
        Perm rest;
        for (Element x = 0; x < n; ++x) {
          if (x != k) {
            rest.push_back(x);
          }
        }
        do {
          Perm p;
          p.reserve(n);
          p.insert(p.end(), rest.begin(), rest.begin() + k);
          p.push_back(k);
          p.insert(p.end(), rest.begin() + k, rest.end());
          perms_fixing_[k].push_back(std::move(p));
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    }

    // Calls sink(table) for every valid table extending the first `depth`
    // columns already placed.
    template <typename Sink>
    void run(Element depth, Sink&& sink) {
      if (depth == n_) {
        sink(table());
        return;
      }
      Perm forced;
      if (forced_column(depth, forced)) {
        place(depth, forced);
        if (consistent(depth)) {
          run(depth + 1, sink);
        }
        return;
      }
      for (auto const& p : perms_fixing_[depth]) {
        place(depth, p);
        if (consistent(depth)) {
          run(depth + 1, sink);
        }
      }
    }

    // All consistent assignments of the first `depth` columns.
    std::vector<std::vector<Perm>> prefixes(Element depth) {
      std::vector<std::vector<Perm>> out;
      auto rec = [&](auto&& self, Element k) -> void {
        if (k == depth) {
          out.emplace_back(cols_.begin(), cols_.begin() + depth);
          return;
        }
        for (auto const& p : perms_fixing_[k]) {
          place(k, p);
          if (consistent(k)) {
            self(self, k + 1);
          }
        }
      };
      rec(rec, 0);
      return out;
    }

    void load(std::vector<Perm> const& prefix) {
      for (Element k = 0; k < prefix.size(); ++k) {
        place(k, prefix[k]);
      }
    }

   private:
    void place(Element k, Perm const& p) {
      cols_[k] = p;
      inv_[k].resize(n_);
      for (Element x = 0; x < n_; ++x) {
        inv_[k][p[x]] = x;
      }
    }

    // rho_c rho_b rho_c^{-1}
    void conjugate(Element b, Element c, Perm& out) const {
      out.resize(n_);
      for (Element x = 0; x < n_; ++x) {
        out[x] = cols_[c][cols_[b][inv_[c][x]]];
      }
    }

    bool forced_column(Element k, Perm& out) const {
      for (Element c = 0; c < k; ++c) {
        for (Element b = 0; b < k; ++b) {
          if (cols_[c][b] == k) {
            conjugate(b, c, out);
            return true;
          }
        }
      }
      return false;
    }

    bool consistent(Element k) {
      for (Element c = 0; c <= k; ++c) {
        for (Element b = 0; b <= k; ++b) {
          Element const m = cols_[c][b];
          if (m > k || (b != k && c != k && m != k)) {
            continue;
          }
          conjugate(b, c, scratch_);
          if (scratch_ != cols_[m]) {
            return false;
          }
        }
      }
      return true;
    }

    Table table() const {
      Table t(n_ * n_);
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          t[x * n_ + y] = cols_[y][x];
        }
      }
      return t;
    }

    std::size_t                    n_;
    std::vector<Perm>              cols_;
    std::vector<Perm>              inv_;
    std::vector<std::vector<Perm>> perms_fixing_;
    Perm                           scratch_;
  };

  void require_enumerable(std::size_t n) {
    if (n > kMaxEnumerationOrder) {
      throw BoundExceeded("quandle enumeration", n, kMaxEnumerationOrder);
    }
  }

  std::vector<Quandle> to_quandles(std::size_t n, std::set<Table> const& forms) {
    std::vector<Quandle> out;
    out.reserve(forms.size());
    for (auto const& t : forms) {
      out.push_back(validate_quandle(n, t));
    }
    return out;
  }

  std::vector<Quandle> enumerate_serial(std::size_t n) {
    ColumnSearch    search(n);
    std::set<Table> forms;
    search.run(0, [&](Table const& t) {
      forms.insert(canonical_form(detail::make_unchecked(n, t)));
    });
    return to_quandles(n, forms);
  }

  std::vector<Quandle> enumerate_parallel(std::size_t n) {
    if (n < 3) {
      return enumerate_serial(n);
    }
    auto const frontier = ColumnSearch(n).prefixes(2);
    std::set<Table> forms;
    std::ptrdiff_t const count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel
    {
      ColumnSearch    search(n);
      std::set<Table> local;
#pragma omp for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        search.load(frontier[i]);
        search.run(2, [&](Table const& t) {
          local.insert(canonical_form(detail::make_unchecked(n, t)));
        });
      }
#pragma omp critical(qnd_enumerate_merge)
      forms.merge(local);
    }
    return to_quandles(n, forms);
  }

}  // namespace

std::vector<Quandle> enumerate_quandles(std::size_t n, Execution execution) {
  require_enumerable(n);
  if (n == 0) {
    return {Quandle()};
  }
  return execution == Execution::serial ? enumerate_serial(n) : enumerate_parallel(n);
}

std::size_t count_labeled_quandles(std::size_t n, Execution execution) {
  require_enumerable(n);
  if (n == 0) {
    return 1;
  }
  if (execution == Execution::serial || n < 3) {
    std::size_t total = 0;
    ColumnSearch(n).run(0, [&](Table const&) { ++total; });
    return total;
  }
  auto const           frontier = ColumnSearch(n).prefixes(2);
  std::size_t          total    = 0;
  std::ptrdiff_t const count    = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel reduction(+ : total)
  {
    ColumnSearch search(n);
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      search.load(frontier[i]);
      search.run(2, [&](Table const&) { ++total; });
    }
  }
  return total;
}

std::vector<Element> canonical_form(Quandle const& q) {
  std::size_t const n = q.order();
  if (n > kMaxCanonicalOrder) {
    throw BoundExceeded("canonical form", n, kMaxCanonicalOrder);
  }
  // tau runs over all bijections; the candidate table has entry
  // tau^{-1}(tau(i) ◁ tau(j)) at (i, j).
  Perm tau(n), tau_inv(n);
  std::iota(tau.begin(), tau.end(), Element(0));
  Table best(q.table().begin(), q.table().end());
  Table candidate(n * n);
  do {
    for (Element i = 0; i < n; ++i) {
      tau_inv[tau[i]] = i;
    }
    // Compare lazily; stop at the first differing entry.
    int cmp = 0;
    for (std::size_t pos = 0; pos < n * n && cmp <= 0; ++pos) {
      Element const i = static_cast<Element>(pos / n), j = static_cast<Element>(pos % n);
      Element const v = tau_inv[q.op(tau[i], tau[j])];
      candidate[pos]  = v;
      if (cmp == 0) {
        cmp = v < best[pos] ? -1 : (v > best[pos] ? 1 : 0);
      }
    }
    if (cmp < 0) {
      best = candidate;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return best;
}

Quandle canonical_quandle(Quandle const& q) {
  return detail::make_unchecked(q.order(), canonical_form(q));
}

std::optional<std::vector<Element>> are_isomorphic(Quandle const& a, Quandle const& b) {
  std::size_t const n = a.order();
  if (b.order() != n) {
    return std::nullopt;
  }
  // Per-element invariants: fixed points of the column, fixed points of the
  // row, orbit size.
  auto invariants = [n](Quandle const& q) {
    auto const                                        orb = orbits(q);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> inv(n);
    for (Element y = 0; y < n; ++y) {
      std::size_t col = 0, row = 0;
      for (Element x = 0; x < n; ++x) {
        col += q.op(x, y) == x;
        row += q.op(y, x) == y;
      }
      inv[y] = {col, row, orb.orbit_of(y).size()};
    }
    return inv;
  };
  auto const ia = invariants(a), ib = invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
  }
  constexpr Element    unset = static_cast<Element>(-1);
  std::vector<Element> sigma(n, unset);
  std::vector<bool>    used(n, false);

  auto consistent_at = [&](Element x) {
    for (Element u = 0; u <= x; ++u) {
      for (Element v = 0; v <= x; ++v) {
        Element const w = a.op(u, v);
        if (w <= x && (u == x || v == x || w == x) && sigma[w] != b.op(sigma[u], sigma[v])) {
          return false;
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self, Element x) -> bool {
    if (x == n) {
      return true;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v] || ia[x] != ib[v]) {
        continue;
      }
      sigma[x] = v;
      used[v]  = true;
      if (consistent_at(x) && self(self, x + 1)) {
        return true;
      }
      used[v]  = false;
      sigma[x] = unset;
    }
    return false;
  };
  if (search(search, 0)) {
    return sigma;
  }
  return std::nullopt;
}

}  // namespace qnd
