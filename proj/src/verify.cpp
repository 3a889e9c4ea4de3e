#include "qnd/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qnd/classify.hpp"
#include "qnd/closure.hpp"
#include "qnd/congruence.hpp"
#include "qnd/connectivity.hpp"
#include "qnd/text_io.hpp"

namespace qnd {

namespace {

  // Instance counter remembering the first failure.
  struct Tally {
    std::size_t instances = 0;
    std::size_t failures  = 0;
    std::string witness;

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
      ++instances;
      if (!ok && failures++ == 0) {
        witness = describe();
      }
    }

    void merge(Tally const& other) {
      instances += other.instances;
      if (other.failures != 0 && failures == 0) {
        witness = other.witness;
      }
      failures += other.failures;
    }
  };

  // Runs body(i, tally) for i in [0, count), in parallel when requested.
  // Partial tallies are merged in index order so the reported witness does
  // not depend on scheduling.
  Tally tally_over(std::size_t                                 count,
                   Execution                                   execution,
                   std::function<void(std::size_t, Tally&)> const& body) {
    std::vector<Tally> parts(count);
    auto guarded = [&](std::size_t i) {
      try {
        body(i, parts[i]);
      } catch (std::exception const& e) {
        parts[i].check(false, [&] { return std::string("exception: ") + e.what(); });
      }
    };
    std::ptrdiff_t const n = static_cast<std::ptrdiff_t>(count);
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        guarded(static_cast<std::size_t>(i));
      }
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        guarded(static_cast<std::size_t>(i));
      }
    }
    Tally total;
    for (auto const& p : parts) {
      total.merge(p);
    }
    return total;
  }

  SuiteResult make_result(std::string name, std::string statement, Tally const& t) {
    return {std::move(name), std::move(statement), t.instances, t.failures, t.witness};
  }

  std::string with(Quandle const& q, std::string const& what) {
    return describe_quandle(q) + (what.empty() ? "" : " " + what);
  }

  std::string sub_text(SubSet const& s) {
    return "{" + format_subset(s) + "}";
  }

  std::string cong_text(Congruence const& c) {
    return "<" + format_congruence(c) + ">";
  }

  std::string hom_text(QuandleHom const& f) {
    return describe_quandle(f.source()) + " -> " + describe_quandle(f.target()) + " map ["
           + format_map(f.map()) + "]";
  }

  SubSet subset_from_mask(std::size_t n, std::uint64_t mask) {
    SubSet s(n);
    for (Element x = 0; x < n; ++x) {
      if (mask >> x & 1U) {
        s.insert(x);
      }
    }
    return s;
  }

  // M × N inside product(q1, q2).
  SubSet product_subset(SubSet const& m, SubSet const& n) {
    std::size_t const n2 = n.parent_order();
    SubSet            out(m.parent_order() * n2);
    for (auto a : m.elements()) {
      for (auto b : n.elements()) {
        out.insert(static_cast<Element>(a * n2 + b));
      }
    }
    return out;
  }

  struct HomEntry {
    QuandleHom  f;
    std::size_t source;
    std::size_t target;
  };

  struct Catalogue {
    std::vector<Quandle>                 quandles;  // orders 1..max_order
    std::vector<std::vector<SubSet>>     subquandles;
    std::vector<std::vector<Congruence>> congruences;
    std::size_t                          hom_count = 0;  // quandles[0..hom_count) have order <= 4
    std::vector<HomEntry>                homs;
  };

  Catalogue build_catalogue(VerifyOptions const& options) {
    Catalogue c;
    for (std::size_t n = 1; n <= options.max_order; ++n) {
      for (auto& q : enumerate_quandles(n, options.execution)) {
        c.quandles.push_back(std::move(q));
      }
    }
    for (auto const& q : c.quandles) {
      c.subquandles.push_back(all_subquandles(q));
      c.congruences.push_back(all_congruences(q));
      if (q.order() <= 4) {
        ++c.hom_count;
      }
    }
    for (std::size_t i = 0; i < c.hom_count; ++i) {
      for (std::size_t j = 0; j < c.hom_count; ++j) {
        for (auto& f : enumerate_homs(c.quandles[i], c.quandles[j])) {
          c.homs.push_back({std::move(f), i, j});
        }
      }
    }
    return c;
  }

  using Suite = SuiteResult (*)(Catalogue const&, VerifyOptions const&);

  //////////////////////////////////////////////////////////////////////////////
  // Quandle core
  //////////////////////////////////////////////////////////////////////////////

  SuiteResult core_round_trip(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      for (Element x = 0; x < q.order(); ++x) {
        for (Element y = 0; y < q.order(); ++y) {
          t.check(q.inv(q.op(x, y), y) == x && q.op(q.inv(x, y), y) == x, [&] {
            return with(q, "x=" + std::to_string(x) + " y=" + std::to_string(y));
          });
        }
      }
    });
    return make_result("core.inverse-round-trip", "(x ◁ y) ◁⁻¹ y = x = (x ◁⁻¹ y) ◁ y", t);
  }

  SuiteResult core_generated_closure(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&       q     = c.quandles[i];
      std::size_t const n     = q.order();
      std::uint64_t const total = std::uint64_t(1) << n;
      std::vector<SubSet> gen(total);
      for (std::uint64_t a = 0; a < total; ++a) {
        auto const seed = subset_from_mask(n, a);
        gen[a]          = generated_subquandle(q, seed);
        t.check(seed.is_subset_of(gen[a]) && is_subquandle(q, gen[a])
                    && generated_subquandle(q, gen[a]) == gen[a],
                [&] { return with(q, "seed=" + sub_text(seed)); });
      }
      for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = a;; b = (b + 1) | a) {
          t.check(gen[a].is_subset_of(gen[b]), [&] {
            return with(q, "A=" + sub_text(subset_from_mask(n, a))
                               + " B=" + sub_text(subset_from_mask(n, b)));
          });
          if (b == total - 1) {
            break;
          }
        }
      }
    });
    return make_result("core.generated-closure",
                       "generated subquandle is extensive, monotone and idempotent", t);
  }

  // Values of left-nested chains a1 ◁± a2 ◁± ... with every ai in the seed.
  SubSet chain_set(Quandle const& q, SubSet const& seed) {
    SubSet               out = seed;
    std::vector<Element> frontier = seed.elements();
    auto const           acting   = seed.elements();
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (auto v : frontier) {
        for (auto a : acting) {
          for (Element w : {q.op(v, a), q.inv(v, a)}) {
            if (!out.contains(w)) {
              out.insert(w);
              next.push_back(w);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  SuiteResult core_chain_set(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&       q = c.quandles[i];
      std::size_t const n = q.order();
      for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
        auto const seed = subset_from_mask(n, a);
        t.check(generated_subquandle(q, seed) == chain_set(q, seed),
                [&] { return with(q, "seed=" + sub_text(seed)); });
      }
    });
    return make_result("core.join-chain-set",
                       "generated subquandle equals the set of chains over the seed", t);
  }

  SuiteResult core_rewriting(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      for (Element x = 0; x < q.order(); ++x) {
        for (Element y = 0; y < q.order(); ++y) {
          for (Element z = 0; z < q.order(); ++z) {
            for (bool alpha : {true, false}) {
              for (bool beta : {true, false}) {
                Element const lhs = q.act(x, alpha, q.act(y, beta, z));
                Element const rhs = q.act(q.act(q.act(x, !beta, z), alpha, y), beta, z);
                t.check(lhs == rhs, [&] {
                  return with(q, "x=" + std::to_string(x) + " y=" + std::to_string(y)
                                     + " z=" + std::to_string(z));
                });
              }
            }
          }
        }
      }
    });
    return make_result("core.rewriting-identity",
                       "x ◁ᵅ (y ◁ᵝ z) = ((x ◁⁻ᵝ z) ◁ᵅ y) ◁ᵝ z", t);
  }

  SuiteResult core_hom_enumeration(Catalogue const& c, VerifyOptions const& o) {
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < c.quandles.size(); ++i) {
      if (c.quandles[i].order() <= 3) {
        small.push_back(i);
      }
    }
    auto t = tally_over(small.size() * small.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& s  = c.quandles[small[k / small.size()]];
      auto const& d  = c.quandles[small[k % small.size()]];
      std::size_t const n1 = s.order(), n2 = d.order();
      std::vector<std::vector<Element>> brute;
      std::vector<Element>              map(n1, 0);
      std::size_t                       total = 1;
      for (std::size_t i = 0; i < n1; ++i) {
        total *= n2;
      }
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = n1; i-- > 0;) {
          map[i] = static_cast<Element>(rest % n2);
          rest /= n2;
        }
        try {
          validate_hom(s, d, map);
          brute.push_back(map);
        } catch (NotHomomorphism const&) {
        }
      }
      std::vector<std::vector<Element>> found;
      for (auto const& f : enumerate_homs(s, d)) {
        found.push_back(f.map());
      }
      t.check(found == brute, [&] { return describe_quandle(s) + " -> " + describe_quandle(d); });
    });
    return make_result("core.hom-enumeration",
                       "backtracking hom enumeration equals brute-force filtering (orders <= 3)",
                       t);
  }

  SuiteResult core_image_preimage(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& h = c.homs[k];
      for (auto const& s : c.subquandles[h.target]) {
        auto const back = image_subquandle(h.f, preimage_subquandle(h.f, s));
        bool const ok   = back.is_subset_of(s) && (!h.f.is_surjective() || back == s);
        t.check(ok, [&] { return hom_text(h.f) + " T=" + sub_text(s); });
      }
    });
    return make_result("core.image-preimage",
                       "f(f⁻¹(T)) ⊆ T, with equality for surjective f", t);
  }

  //////////////////////////////////////////////////////////////////////////////
  // Connectivity
  //////////////////////////////////////////////////////////////////////////////

  SuiteResult conn_orbit_oracle(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&       q   = c.quandles[i];
      auto const        orb = orbits(q);
      std::size_t const n   = q.order();
      for (Element x = 0; x < n; ++x) {
        // Closure of {x} under every right translation and its inverse.
        SubSet               reach(n, {x});
        std::vector<Element> todo{x};
        while (!todo.empty()) {
          Element const v = todo.back();
          todo.pop_back();
          for (Element y = 0; y < n; ++y) {
            for (Element w : {q.op(v, y), q.inv(v, y)}) {
              if (!reach.contains(w)) {
                reach.insert(w);
                todo.push_back(w);
              }
            }
          }
        }
        t.check(reach == orb.orbit_of(x), [&] { return with(q, "x=" + std::to_string(x)); });
      }
    });
    return make_result("orbits.oracle", "union-find orbits equal translation reachability", t);
  }

  SuiteResult conn_unit(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q   = c.quandles[i];
      auto const  p   = pi0(q);
      auto const  orb = orbits(q);
      bool        ok  = p.unit.is_surjective() && is_trivial(p.quandle);
      for (Element x = 0; x < q.order(); ++x) {
        for (Element y = 0; y < q.order(); ++y) {
          ok = ok && ((p.unit(x) == p.unit(y)) == orb.orbit_of(x).contains(y));
        }
      }
      t.check(ok, [&] { return with(q, ""); });
    });
    return make_result("orbits.unit",
                       "the unit is a surjection onto a trivial quandle whose fibres are orbits",
                       t);
  }

  SuiteResult conn_products(Catalogue const& c, VerifyOptions const& o) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < c.quandles.size(); ++i) {
      for (std::size_t j = 0; j < c.quandles.size(); ++j) {
        if (c.quandles[i].order() * c.quandles[j].order() <= 25) {
          pairs.emplace_back(i, j);
        }
      }
    }
    auto t = tally_over(pairs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& q1 = c.quandles[pairs[k].first];
      auto const& q2 = c.quandles[pairs[k].second];
      auto const  g  = pi0_product_witness(q1, q2);
      t.check(g.is_injective() && g.is_surjective(),
              [&] { return describe_quandle(q1) + " x " + describe_quandle(q2); });
    });
    return make_result("orbits.products",
                       "orbits of a product correspond bijectively to pairs of orbits", t);
  }

  SuiteResult conn_functoriality(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& f  = c.homs[k].f;
      auto const  os = orbits(f.source());
      auto const  ot = orbits(f.target());
      bool        ok = true;
      for (Element x = 0; x < f.source().order(); ++x) {
        for (Element y = 0; y < f.source().order(); ++y) {
          if (os.class_of[x] == os.class_of[y]) {
            ok = ok && ot.class_of[f(x)] == ot.class_of[f(y)];
          }
        }
      }
      t.check(ok, [&] { return hom_text(f); });
    });
    return make_result("orbits.functoriality", "homomorphisms map orbits into orbits", t);
  }

  //////////////////////////////////////////////////////////////////////////////
  // Closure on subquandles
  //////////////////////////////////////////////////////////////////////////////

  SuiteResult closure_axioms(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&         q    = c.quandles[i];
      auto const&         subs = c.subquandles[i];
      std::vector<SubSet> cl;
      for (auto const& m : subs) {
        cl.push_back(closure_sub(q, m));
        t.check(m.is_subset_of(cl.back()) && closure_sub(q, cl.back()) == cl.back(),
                [&] { return with(q, "M=" + sub_text(m)); });
      }
      for (std::size_t a = 0; a < subs.size(); ++a) {
        for (std::size_t b = 0; b < subs.size(); ++b) {
          if (subs[a].is_subset_of(subs[b])) {
            t.check(cl[a].is_subset_of(cl[b]), [&] {
              return with(q, "M=" + sub_text(subs[a]) + " N=" + sub_text(subs[b]));
            });
          }
        }
      }
    });
    return make_result("closure.axioms",
                       "closure is extensive, monotone and idempotent on subquandles", t);
  }

  SuiteResult closure_continuity(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& h = c.homs[k];
      for (auto const& m : c.subquandles[h.source]) {
        auto const lhs = image_subquandle(h.f, closure_sub(h.f.source(), m));
        auto const rhs = closure_sub(h.f.target(), image_subquandle(h.f, m));
        t.check(lhs.is_subset_of(rhs), [&] { return hom_text(h.f) + " M=" + sub_text(m); });
      }
    });
    return make_result("closure.continuity", "f(c(M)) ⊆ c(f(M)) for every homomorphism", t);
  }

  SuiteResult closure_singletons(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q   = c.quandles[i];
      auto const  orb = orbits(q);
      for (Element x = 0; x < q.order(); ++x) {
        t.check(closure_sub(q, SubSet(q.order(), {x})) == orb.orbit_of(x),
                [&] { return with(q, "x=" + std::to_string(x)); });
      }
    });
    return make_result("closure.singleton-orbit", "c({x}) is the orbit of x", t);
  }

  SuiteResult closure_additive(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&       q    = c.quandles[i];
      auto const&       subs = c.subquandles[i];
      std::size_t const n    = q.order();
      for (auto const& a : subs) {
        for (auto const& b : subs) {
          auto const lhs = closure_sub(q, join_subquandles(q, a, b));
          auto const rhs = join_subquandles(q, closure_sub(q, a), closure_sub(q, b));
          t.check(lhs == rhs, [&] { return with(q, "S=" + sub_text(a) + " T=" + sub_text(b)); });
        }
      }
      // Families of singletons {{a} | a in A}, for every subset A.
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        auto const family = subset_from_mask(n, mask);
        SubSet     closures(n);
        for (auto a : family.elements()) {
          closures = closures | closure_sub(q, SubSet(n, {a}));
        }
        auto const lhs = closure_sub(q, generated_subquandle(q, family));
        auto const rhs = generated_subquandle(q, closures);
        t.check(lhs == rhs, [&] { return with(q, "singletons of " + sub_text(family)); });
      }
    });
    return make_result("closure.additive", "c(⋁ Sᵢ) = ⋁ c(Sᵢ)", t);
  }

  SuiteResult closure_productive(Catalogue const& c, VerifyOptions const& o) {
    std::vector<std::vector<std::size_t>> tuples;
    std::size_t const                     m = c.quandles.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t const nij = c.quandles[i].order() * c.quandles[j].order();
        if (nij > 25) {
          continue;
        }
        tuples.push_back({i, j});
        for (std::size_t k = 0; k < m; ++k) {
          if (nij * c.quandles[k].order() <= 25) {
            tuples.push_back({i, j, k});
          }
        }
      }
    }
    auto t = tally_over(tuples.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const&          idx = tuples[k];
      Quandle              prod = c.quandles[idx[0]];
      std::vector<SubSet>  boxes = c.subquandles[idx[0]];
      std::vector<SubSet>  closed;
      for (auto const& s : boxes) {
        closed.push_back(closure_sub(prod, s));
      }
      std::string label = describe_quandle(prod);
      for (std::size_t f = 1; f < idx.size(); ++f) {
        auto const&         q = c.quandles[idx[f]];
        std::vector<SubSet> next_boxes, next_closed;
        for (std::size_t b = 0; b < boxes.size(); ++b) {
          for (auto const& s : c.subquandles[idx[f]]) {
            next_boxes.push_back(product_subset(boxes[b], s));
            next_closed.push_back(product_subset(closed[b], closure_sub(q, s)));
          }
        }
        prod   = product(prod, q);
        boxes  = std::move(next_boxes);
        closed = std::move(next_closed);
        label += " x " + describe_quandle(q);
      }
      for (std::size_t b = 0; b < boxes.size(); ++b) {
        t.check(closure_sub(prod, boxes[b]) == closed[b],
                [&] { return label + " box=" + sub_text(boxes[b]); });
      }
    });
    return make_result("closure.productive",
                       "c(M × N) = c(M) × c(N) for binary and ternary products of order <= 25",
                       t);
  }

  SuiteResult closure_surjective_images(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& h = c.homs[k];
      if (!h.f.is_surjective()) {
        return;
      }
      for (auto const& m : c.subquandles[h.source]) {
        auto const lhs = image_subquandle(h.f, closure_sub(h.f.source(), m));
        auto const rhs = closure_sub(h.f.target(), image_subquandle(h.f, m));
        t.check(lhs == rhs, [&] { return hom_text(h.f) + " M=" + sub_text(m); });
      }
    });
    return make_result("closure.surjective-images", "f(c(M)) = c(f(M)) for surjective f", t);
  }

  SuiteResult closure_c_connected(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      t.check(is_c_connected(q) == is_connected(q), [&] { return with(q, ""); });
    });
    return make_result("closure.c-connected",
                       "dense diagonal iff exactly one orbit", t);
  }

  SuiteResult closure_c_separated(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      t.check(is_c_separated(q) == is_trivial(q), [&] { return with(q, ""); });
    });
    return make_result("closure.c-separated", "closed diagonal iff trivial", t);
  }

  SuiteResult closure_worked_example(Catalogue const&, VerifyOptions const&) {
    Tally      t;
    auto const e = validate_quandle({{0, 0, 1}, {1, 1, 0}, {2, 2, 2}});
    auto const m = SubSet(3, {0});
    auto const f = dense_closed_factorization(e, m);
    t.check(format_congruence(Congruence(orbits(e).class_of)) == "0,1;2",
            [] { return std::string("orbits of the three-element example"); });
    t.check(f.outer == SubSet(3, {0, 1}), [] { return std::string("closure of {0}"); });
    t.check(is_trivial(f.induced), [] { return std::string("induced quandle on {0,1}"); });
    t.check(closure_sub(f.induced, f.inner) == f.inner,
            [] { return std::string("closure of {0} in {0,1}"); });
    t.check(!weakly_hereditary_at(e, m), [] { return std::string("weak heredity at {0}"); });
    return make_result("closure.not-weakly-hereditary",
                       "three-element example: {0} is not dense in its closure {0,1}", t);
  }

  //////////////////////////////////////////////////////////////////////////////
  // Classification
  //////////////////////////////////////////////////////////////////////////////

  SuiteResult classify_chain(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q  = c.quandles[i];
      bool const  tr = is_trivial(q), qt = is_quasi_trivial(q);
      bool const  z  = is_in_disconnectedness_class(q);
      t.check((!tr || qt) && (!qt || z), [&] { return with(q, ""); });
    });
    return make_result("classify.trivial-quasi-z", "trivial ⇒ quasi-trivial ⇒ in Z", t);
  }

  // Values of chains x ◁± x1 ◁± ... of length 1..depth.
  SubSet bounded_chains(Quandle const& q, Element x, std::size_t depth) {
    std::size_t const    n = q.order();
    SubSet               out(n);
    std::vector<Element> frontier{x};
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<Element> next;
      for (auto v : frontier) {
        for (Element y = 0; y < n; ++y) {
          for (Element w : {q.op(v, y), q.inv(v, y)}) {
            if (!out.contains(w)) {
              out.insert(w);
              next.push_back(w);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  SuiteResult classify_quasi_reduction(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q     = c.quandles[i];
      bool        chain = true;
      for (Element x = 0; x < q.order(); ++x) {
        for (auto v : bounded_chains(q, x, q.order()).elements()) {
          chain = chain && q.op(x, v) == x;
        }
      }
      t.check(chain == is_quasi_trivial(q), [&] { return with(q, ""); });
    });
    return make_result("classify.quasi-trivial-reduction",
                       "orbit test for quasi-triviality matches chain enumeration", t);
  }

  SuiteResult classify_witness(Catalogue const& c, VerifyOptions const& o) {
    Tally t;
    if (o.max_order >= 3) {
      bool found = false;
      for (auto const& q : c.quandles) {
        found = found || (is_in_disconnectedness_class(q) && !is_trivial(q));
      }
      t.check(found, [] { return std::string("no non-trivial member of Z"); });
    }
    return make_result("classify.z-not-trivial",
                       "some non-trivial quandle has no non-trivial connected subquandle", t);
  }

  SuiteResult classify_connected_z(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      t.check(!(is_connected(q) && is_in_disconnectedness_class(q)) || q.order() <= 1,
              [&] { return with(q, ""); });
    });
    return make_result("classify.connected-in-z", "connected members of Z have one element", t);
  }

  SuiteResult classify_constant_homs(Catalogue const& c, VerifyOptions const& o) {
    std::vector<std::size_t> connected, in_z;
    for (std::size_t i = 0; i < c.quandles.size(); ++i) {
      if (is_connected(c.quandles[i])) {
        connected.push_back(i);
      }
      if (is_in_disconnectedness_class(c.quandles[i])) {
        in_z.push_back(i);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto i : connected) {
      for (auto j : in_z) {
        double candidates = 1;
        for (std::size_t k = 0; k < c.quandles[i].order(); ++k) {
          candidates *= static_cast<double>(c.quandles[j].order());
        }
        if (candidates <= 243) {
          pairs.emplace_back(i, j);
        }
      }
    }
    auto t = tally_over(pairs.size(), o.execution, [&](std::size_t k, Tally& t) {
      for (auto const& f : enumerate_homs(c.quandles[pairs[k].first], c.quandles[pairs[k].second])) {
        t.check(is_constant(f), [&] { return hom_text(f); });
      }
    });
    return make_result("classify.constant-homs",
                       "every homomorphism from a connected quandle into Z is constant", t);
  }

  SuiteResult classify_order_two(Catalogue const&, VerifyOptions const&) {
    Tally t;
    for (std::uint32_t code = 0; code < 16; ++code) {
      std::vector<Element> table{code & 1U, code >> 1 & 1U, code >> 2 & 1U, code >> 3 & 1U};
      try {
        auto q = validate_quandle(2, table);
        t.check(is_trivial(q), [&] { return describe_quandle(q); });
      } catch (AxiomViolation const&) {
      }
    }
    return make_result("classify.order-two", "the only two-element quandle is trivial", t);
  }

  //////////////////////////////////////////////////////////////////////////////
  // Congruences
  //////////////////////////////////////////////////////////////////////////////

  SuiteResult cong_permutability(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      for (auto const& r : c.congruences[i]) {
        t.check(permutes_with_inn(q, r), [&] { return with(q, "R=" + cong_text(r)); });
      }
    });
    return make_result("congruence.permutability", "~Inn ∘ R = R ∘ ~Inn", t);
  }

  SuiteResult cong_formula_oracle(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      for (auto const& r : c.congruences[i]) {
        auto const quot   = quotient(q, r);
        auto const oracle = kernel_pair(compose(pi0(quot.quandle).unit, quot.projection));
        t.check(effective_closure(q, r) == oracle, [&] { return with(q, "R=" + cong_text(r)); });
      }
    });
    return make_result("congruence.closure-formula",
                       "R ∘ ~Inn equals the kernel pair of X -> X/R -> π₀(X/R)", t);
  }

  SuiteResult cong_axioms(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const&             q     = c.quandles[i];
      auto const&             congs = c.congruences[i];
      std::vector<Congruence> cl;
      for (auto const& r : congs) {
        cl.push_back(effective_closure(q, r));
        t.check(r.refines(cl.back()) && effective_closure(q, cl.back()) == cl.back(),
                [&] { return with(q, "R=" + cong_text(r)); });
      }
      for (std::size_t a = 0; a < congs.size(); ++a) {
        for (std::size_t b = 0; b < congs.size(); ++b) {
          if (congs[a].refines(congs[b])) {
            t.check(cl[a].refines(cl[b]), [&] {
              return with(q, "R=" + cong_text(congs[a]) + " S=" + cong_text(congs[b]));
            });
          }
        }
      }
    });
    return make_result("congruence.axioms",
                       "closure of congruences is extensive, monotone and idempotent", t);
  }

  SuiteResult cong_inverse_images(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& h = c.homs[k];
      for (auto const& r : c.congruences[h.target]) {
        auto const lhs = effective_closure(h.f.source(), preimage_congruence(h.f, r));
        auto const rhs = preimage_congruence(h.f, effective_closure(h.f.target(), r));
        bool const ok  = lhs.refines(rhs) && (!h.f.is_surjective() || lhs == rhs);
        t.check(ok, [&] { return hom_text(h.f) + " R=" + cong_text(r); });
      }
    });
    return make_result("congruence.inverse-images",
                       "c(f⁻¹(R)) ⊆ f⁻¹(c(R)), with equality for surjective f", t);
  }

  SuiteResult cong_discrete(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q = c.quandles[i];
      t.check(effective_closure(q, Congruence::discrete(q.order())) == inn_congruence(q),
              [&] { return with(q, ""); });
    });
    return make_result("congruence.discrete-closure", "c(Δ) = ~Inn", t);
  }

  SuiteResult cong_inn_images(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& f = c.homs[k].f;
      if (!f.is_surjective()) {
        return;
      }
      t.check(image_congruence(f, inn_congruence(f.source())) == inn_congruence(f.target()),
              [&] { return hom_text(f); });
    });
    return make_result("congruence.inn-images", "f(~Inn(X)) = ~Inn(Y) for surjective f", t);
  }

  SuiteResult cong_inn_image_closed(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.homs.size(), o.execution, [&](std::size_t k, Tally& t) {
      auto const& f = c.homs[k].f;
      if (!f.is_surjective()) {
        return;
      }
      auto const inn = inn_congruence(f.source());
      auto const raw = image_relation(f, inn);
      t.check(raw == Relation::of(image_congruence(f, inn)), [&] { return hom_text(f); });
    });
    return make_result("congruence.inn-image-closed",
                       "the direct image of ~Inn under a surjection is already a congruence", t);
  }

  SuiteResult cong_joins(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q     = c.quandles[i];
      auto const& congs = c.congruences[i];
      for (auto const& r : congs) {
        for (auto const& s : congs) {
          auto const lhs = effective_closure(q, join(q, r, s));
          auto const rhs = join(q, effective_closure(q, r), effective_closure(q, s));
          t.check(lhs == rhs,
                  [&] { return with(q, "R=" + cong_text(r) + " S=" + cong_text(s)); });
        }
      }
    });
    return make_result("congruence.joins", "c(R ∨ S) = c(R) ∨ c(S)", t);
  }

  SuiteResult cong_supremum(Catalogue const& c, VerifyOptions const& o) {
    auto t = tally_over(c.quandles.size(), o.execution, [&](std::size_t i, Tally& t) {
      auto const& q   = c.quandles[i];
      auto const  inn = inn_congruence(q);
      for (auto const& r : c.congruences[i]) {
        auto const cl = effective_closure(q, r);
        bool       ok = r.refines(cl) && inn.refines(cl) && cl == join(q, r, inn);
        // Least: every congruence above R and ~Inn is above the closure.
        for (auto const& s : c.congruences[i]) {
          if (r.refines(s) && inn.refines(s)) {
            ok = ok && cl.refines(s);
          }
        }
        t.check(ok, [&] { return with(q, "R=" + cong_text(r)); });
      }
    });
    return make_result("congruence.supremum",
                       "R ∘ ~Inn is the least congruence containing R and ~Inn", t);
  }

  //////////////////////////////////////////////////////////////////////////////
  // Enumeration
  //////////////////////////////////////////////////////////////////////////////

  // All valid tables of order n by exhaustive search, deduplicated by
  // canonical form.
  std::vector<std::vector<Element>> naive_classes(std::size_t n) {
    std::set<std::vector<Element>> forms;
    std::size_t                    total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
      total *= n;
    }
    std::vector<Element> table(n * n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (auto& e : table) {
        e = static_cast<Element>(rest % n);
        rest /= n;
      }
      try {
        forms.insert(canonical_form(validate_quandle(n, table)));
      } catch (AxiomViolation const&) {
      }
    }
    return {forms.begin(), forms.end()};
  }

  SuiteResult enum_naive(Catalogue const&, VerifyOptions const& o) {
    Tally t;
    for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_order, 3); ++n) {
      std::vector<std::vector<Element>> found;
      for (auto const& q : enumerate_quandles(n, o.execution)) {
        found.emplace_back(q.table().begin(), q.table().end());
      }
      t.check(found == naive_classes(n), [&] { return "order " + std::to_string(n); });
    }
    return make_result("enumerate.naive-oracle",
                       "enumeration equals exhaustive filtering up to isomorphism (orders <= 3)",
                       t);
  }

  SuiteResult enum_determinism(Catalogue const& c, VerifyOptions const& o) {
    Tally t;
    for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_order, 5); ++n) {
      auto const serial   = enumerate_quandles(n, Execution::serial);
      auto const parallel = enumerate_quandles(n, Execution::parallel);
      bool       ok       = serial == parallel;
      for (std::size_t i = 0; ok && i < serial.size(); ++i) {
        ok = canonical_form(serial[i]) == std::vector<Element>(serial[i].table().begin(),
                                                               serial[i].table().end());
        for (std::size_t j = 0; ok && j < i; ++j) {
          ok = !are_isomorphic(serial[i], serial[j]).has_value();
        }
      }
      std::size_t offset = 0;
      for (auto const& q : c.quandles) {
        offset += q.order() < n;
      }
      for (std::size_t i = 0; ok && i < serial.size(); ++i) {
        ok = c.quandles[offset + i] == serial[i];
      }
      t.check(ok, [&] { return "order " + std::to_string(n); });
    }
    return make_result("enumerate.determinism",
                       "serial, parallel and repeated enumerations agree on canonical, "
                       "pairwise non-isomorphic representatives",
                       t);
  }

  SuiteResult enum_counts(Catalogue const& c, VerifyOptions const& o) {
    static constexpr std::size_t expected[] = {1, 1, 1, 3, 7, 22, 73};
    Tally                        t;
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      auto const count = static_cast<std::size_t>(std::count_if(
          c.quandles.begin(), c.quandles.end(), [&](Quandle const& q) { return q.order() == n; }));
      t.check(count == expected[n], [&] {
        return "order " + std::to_string(n) + ": " + std::to_string(count) + " classes";
      });
    }
    return make_result("enumerate.class-counts",
                       "isomorphism classes per order are 1, 1, 3, 7, 22, 73", t);
  }

  constexpr Suite kSuites[] = {
      core_round_trip,          core_generated_closure,  core_chain_set,
      core_rewriting,           core_hom_enumeration,    core_image_preimage,
      conn_orbit_oracle,        conn_unit,               conn_products,
      conn_functoriality,       closure_worked_example,  closure_axioms,
      closure_continuity,       closure_singletons,      closure_additive,
      closure_productive,       closure_surjective_images, closure_c_connected,
      closure_c_separated,      classify_chain,          classify_quasi_reduction,
      classify_witness,         classify_connected_z,    classify_constant_homs,
      classify_order_two,       cong_permutability,      cong_formula_oracle,
      cong_axioms,              cong_inverse_images,     cong_discrete,
      cong_inn_images,          cong_inn_image_closed,   cong_joins,
      cong_supremum,            enum_naive,              enum_determinism,
      enum_counts,
  };

}  // namespace

std::string describe_quandle(Quandle const& q) {
  std::ostringstream os;
  os << '[' << q.order() << ':';
  for (Element x = 0; x < q.order(); ++x) {
    os << (x ? "/" : " ");
    for (Element y = 0; y < q.order(); ++y) {
      os << (y ? " " : "") << q.op(x, y);
    }
  }
  os << ']';
  return os.str();
}

std::vector<SuiteResult> run_verification(VerifyOptions const& options) {
  if (options.max_order > kMaxEnumerationOrder) {
    throw BoundExceeded("verification", options.max_order, kMaxEnumerationOrder);
  }
  auto const               catalogue = build_catalogue(options);
  std::vector<SuiteResult> out;
  for (auto suite : kSuites) {
    out.push_back(suite(catalogue, options));
  }
  return out;
}

std::string format_suite_line(SuiteResult const& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  instances=" << r.instances
     << "  " << r.statement;
  if (!r.passed()) {
    os << "\n      failures=" << r.failures << " first witness: " << r.witness;
  }
  return os.str();
}

std::string format_suite_json(SuiteResult const& r) {
  nlohmann::ordered_json j;
  j["suite"]     = r.name;
  j["statement"] = r.statement;
  j["instances"] = r.instances;
  j["failures"]  = r.failures;
  j["passed"]    = r.passed();
  if (!r.passed()) {
    j["witness"] = r.witness;
  }
  return j.dump();
}

}  // namespace qnd
