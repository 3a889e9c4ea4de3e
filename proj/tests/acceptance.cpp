// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; the only tolerances are the wall-clock
// limits listed next to each criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "qnd/classify.hpp"
#include "qnd/cli.hpp"
#include "qnd/closure.hpp"
#include "qnd/congruence.hpp"
#include "qnd/connectivity.hpp"
#include "qnd/enumerate.hpp"

using namespace qnd;
using namespace qnd::test;

namespace {

struct Outcome {
  std::size_t checks   = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, std::string const& what) {
    ++checks;
    if (!ok && failures++ == 0) {
      first_failure = what;
    }
  }
};

std::string show(Quandle const& q) {
  std::string s = "[" + std::to_string(q.order()) + ":";
  for (Element x = 0; x < q.order(); ++x) {
    s += x ? " /" : "";
    for (Element y = 0; y < q.order(); ++y) {
      s += " " + std::to_string(q.op(x, y));
    }
  }
  return s + "]";
}

std::string show(SubSet const& s) {
  std::string out = "{";
  for (auto x : s.elements()) {
    out += (out.size() > 1 ? "," : "") + std::to_string(x);
  }
  return out + "}";
}

int failed_criteria = 0;

void criterion(int id, char const* title, double limit_seconds,
               std::function<void(Outcome&)> const& body) {
  Outcome    o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool const in_time = limit_seconds <= 0 || secs < limit_seconds;
  bool const ok      = o.failures == 0 && in_time;
  failed_criteria += !ok;
  std::printf("%s  criterion %d  %s  checks=%zu failures=%zu time=%.2fs", ok ? "PASS" : "FAIL", id,
              title, o.checks, o.failures, secs);
  if (limit_seconds > 0) {
    std::printf(" limit=%.0fs", limit_seconds);
  }
  std::printf("\n");
  if (o.failures > 0) {
    std::printf("      first failure: %s\n", o.first_failure.c_str());
  }
  if (!in_time) {
    std::printf("      exceeded the time limit\n");
  }
  std::fflush(stdout);
}

// Calls fn for every homomorphism between members of qs.
template <typename Fn>
void for_each_hom(std::vector<Quandle> const& qs, Fn&& fn) {
  for (auto const& s : qs) {
    for (auto const& t : qs) {
      for (auto const& f : enumerate_homs(s, t)) {
        fn(f);
      }
    }
  }
}

std::string run_cli(std::vector<std::string> const& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  auto const up_to_4 = all_up_to(4);
  auto const up_to_5 = all_up_to(5);

  criterion(1, "worked example: closure is not weakly hereditary", 1.0, [](Outcome& o) {
    auto const e   = E();
    auto const orb = orbits(e);
    o.expect(orb.class_count == 2 && orb.classes[0] == SubSet(3, {0, 1})
                 && orb.classes[1] == SubSet(3, {2}),
             "orbits of E are not {0,1},{2}");
    o.expect(closure_sub(e, SubSet(3, {0})) == SubSet(3, {0, 1}), "closure of {0} is not {0,1}");
    auto const ind = induced_subquandle(e, SubSet(3, {0, 1}));
    o.expect(is_trivial(ind.quandle), "induced quandle on {0,1} is not trivial");
    o.expect(closure_sub(ind.quandle, SubSet(2, {0})) == SubSet(2, {0}),
             "closure of {0} inside {0,1} is not {0}");
    o.expect(!weakly_hereditary_at(e, SubSet(3, {0})), "weakly_hereditary_at(E, {0}) is true");
  });

  criterion(2, "closure operator axioms (orders <= 5, homs between orders <= 4)", 300.0,
            [&](Outcome& o) {
              for (auto const& q : up_to_5) {
                auto const subs = all_subquandles(q);
                std::vector<SubSet> cl;
                for (auto const& m : subs) {
                  cl.push_back(closure_sub(q, m));
                  o.expect(m.is_subset_of(cl.back()), "extensivity " + show(q) + show(m));
                  o.expect(closure_sub(q, cl.back()) == cl.back(),
                           "idempotency " + show(q) + show(m));
                }
                for (std::size_t a = 0; a < subs.size(); ++a) {
                  for (std::size_t b = 0; b < subs.size(); ++b) {
                    if (subs[a].is_subset_of(subs[b])) {
                      o.expect(cl[a].is_subset_of(cl[b]),
                               "monotonicity " + show(q) + show(subs[a]) + show(subs[b]));
                    }
                  }
                }
              }
              for_each_hom(up_to_4, [&](QuandleHom const& f) {
                for (auto const& m : all_subquandles(f.source())) {
                  auto const lhs = image_subquandle(f, closure_sub(f.source(), m));
                  auto const rhs = closure_sub(f.target(), image_subquandle(f, m));
                  o.expect(lhs.is_subset_of(rhs),
                           "continuity " + show(f.source()) + "->" + show(f.target()) + show(m));
                }
              });
            });

  criterion(3, "closure properties: orbits, additivity, productivity, surjective images",
            600.0, [&](Outcome& o) {
              for (auto const& q : up_to_5) {
                auto const orb  = orbits(q);
                auto const subs = all_subquandles(q);
                SubSet     all_closures(q.order());
                for (Element x = 0; x < q.order(); ++x) {
                  auto const c = closure_sub(q, SubSet(q.order(), {x}));
                  o.expect(c == orb.orbit_of(x), "singleton closure " + show(q));
                  all_closures = all_closures | c;
                }
                // The family of all singletons joins to the whole carrier.
                o.expect(closure_sub(q, SubSet::full(q.order())) == all_closures,
                         "all-singletons additivity " + show(q));
                for (auto const& m : subs) {
                  SubSet pieces(q.order());
                  for (auto x : m.elements()) {
                    pieces = pieces | closure_sub(q, SubSet(q.order(), {x}));
                  }
                  o.expect(closure_sub(q, m) == pieces, "singleton additivity " + show(q) + show(m));
                  for (auto const& n : subs) {
                    o.expect(closure_sub(q, join_subquandles(q, m, n))
                                 == join_subquandles(q, closure_sub(q, m), closure_sub(q, n)),
                             "binary additivity " + show(q) + show(m) + show(n));
                  }
                }
              }
              for (auto const& a : up_to_5) {
                for (auto const& b : up_to_5) {
                  if (a.order() * b.order() > 25) {
                    continue;
                  }
                  auto const p  = product(a, b);
                  auto const sa = all_subquandles(a);
                  auto const sb = all_subquandles(b);
                  for (auto const& m : sa) {
                    auto const cm = closure_sub(a, m);
                    for (auto const& n : sb) {
                      auto const cn = closure_sub(b, n);
                      SubSet     box(p.order()), expected(p.order());
                      for (Element x = 0; x < a.order(); ++x) {
                        for (Element y = 0; y < b.order(); ++y) {
                          auto const code = static_cast<Element>(x * b.order() + y);
                          if (m.contains(x) && n.contains(y)) {
                            box.insert(code);
                          }
                          if (cm.contains(x) && cn.contains(y)) {
                            expected.insert(code);
                          }
                        }
                      }
                      o.expect(closure_sub(p, box) == expected,
                               "productivity " + show(a) + show(b) + show(m) + show(n));
                    }
                  }
                }
              }
              for_each_hom(up_to_4, [&](QuandleHom const& f) {
                if (!f.is_surjective()) {
                  return;
                }
                for (auto const& m : all_subquandles(f.source())) {
                  o.expect(image_subquandle(f, closure_sub(f.source(), m))
                               == closure_sub(f.target(), image_subquandle(f, m)),
                           "surjective image " + show(f.source()) + "->" + show(f.target()));
                }
              });
            });

  criterion(4, "c-connected = connected and c-separated = trivial (orders <= 5, products <= 25)", 0.0,
            [&](Outcome& o) {
              for (auto const& q : up_to_5) {
                o.expect(is_c_connected(q) == is_connected(q), "c-connected " + show(q));
                o.expect(is_c_separated(q) == is_trivial(q), "c-separated " + show(q));
              }
              for (auto const& a : up_to_5) {
                for (auto const& b : up_to_5) {
                  if (a.order() < 2 || b.order() < 2 || a.order() * b.order() > 25) {
                    continue;
                  }
                  auto const p = product(a, b);
                  o.expect(is_c_connected(p) == is_connected(p),
                           "c-connected product " + show(a) + show(b));
                  o.expect(is_c_separated(p) == is_trivial(p),
                           "c-separated product " + show(a) + show(b));
                }
              }
            });

  criterion(5, "trivial => quasi-trivial => in Z; maps from connected into Z are constant",
            0.0, [&](Outcome& o) {
              for (auto const& q : up_to_5) {
                bool const t  = is_trivial(q);
                bool const qt = is_quasi_trivial(q);
                bool const z  = is_in_disconnectedness_class(q);
                o.expect(!t || qt, "trivial but not quasi-trivial " + show(q));
                o.expect(!qt || z, "quasi-trivial but not in Z " + show(q));
              }
              o.expect(is_in_disconnectedness_class(E()) && !is_trivial(E()),
                       "E does not witness Z != trivial");
              for (auto const& s : up_to_4) {
                if (!is_connected(s)) {
                  continue;
                }
                for (auto const& t : up_to_4) {
                  if (!is_in_disconnectedness_class(t)) {
                    continue;
                  }
                  for (auto const& f : enumerate_homs(s, t)) {
                    o.expect(is_constant(f), "non-constant map " + show(s) + "->" + show(t));
                  }
                }
              }
            });

  criterion(6, "effective closure of congruences (orders <= 5, all congruences)", 600.0,
            [&](Outcome& o) {
              for (auto const& q : up_to_5) {
                auto const inn   = inn_congruence(q);
                auto const inn_r = Relation::of(inn);
                auto const congs = all_congruences(q);
                o.expect(effective_closure(q, Congruence::discrete(q.order())) == inn,
                         "c(discrete) != Inn " + show(q));
                std::vector<Congruence> cl;
                for (auto const& r : congs) {
                  auto const rr = Relation::of(r);
                  o.expect(compose(inn_r, rr) == compose(rr, inn_r), "permutability " + show(q));
                  auto const c   = effective_closure(q, r);
                  auto const quo = quotient(q, r);
                  o.expect(kernel_pair(compose(pi0(quo.quandle).unit, quo.projection)) == c,
                           "kernel-pair oracle " + show(q));
                  o.expect(r.refines(c), "axiom 1 " + show(q));
                  o.expect(effective_closure(q, c) == c, "axiom 4 " + show(q));
                  cl.push_back(c);
                }
                for (std::size_t a = 0; a < congs.size(); ++a) {
                  for (std::size_t b = 0; b < congs.size(); ++b) {
                    if (congs[a].refines(congs[b])) {
                      o.expect(cl[a].refines(cl[b]), "axiom 2 " + show(q));
                    }
                    o.expect(effective_closure(q, join(q, congs[a], congs[b]))
                                 == join(q, cl[a], cl[b]),
                             "joins " + show(q));
                  }
                }
              }
              for_each_hom(up_to_4, [&](QuandleHom const& f) {
                auto const& s = f.source();
                auto const& t = f.target();
                for (auto const& r : all_congruences(t)) {
                  auto const lhs = effective_closure(s, preimage_congruence(f, r));
                  auto const rhs = preimage_congruence(f, effective_closure(t, r));
                  o.expect(lhs.refines(rhs), "axiom 3 " + show(s) + "->" + show(t));
                  if (f.is_surjective()) {
                    o.expect(lhs == rhs, "axiom 5 " + show(s) + "->" + show(t));
                  }
                }
                if (f.is_surjective()) {
                  o.expect(image_congruence(f, inn_congruence(s)) == inn_congruence(t),
                           "image of Inn " + show(s) + "->" + show(t));
                }
              });
            });

  criterion(7, "enumeration matches the naive oracle; counts 1,1,3,7,22", 60.0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::vector<Element>> canon;
      for_each_map(n * n, n, [&](std::vector<Element> const& t) {
        try {
          canon.insert(canonical_form(validate_quandle(n, t)));
        } catch (AxiomViolation const&) {
        }
      });
      std::vector<std::vector<Element>> found;
      for (auto const& q : enumerate_quandles(n)) {
        found.emplace_back(q.table().begin(), q.table().end());
      }
      o.expect(found == std::vector<std::vector<Element>>(canon.begin(), canon.end()),
               "naive oracle mismatch at n=" + std::to_string(n));
    }
    std::vector<std::size_t> const counts{1, 1, 3, 7, 22};
    for (std::size_t n = 1; n <= 5; ++n) {
      o.expect(enumerate_quandles(n).size() == counts[n - 1],
               "class count at n=" + std::to_string(n));
    }
  });

  criterion(8, "CLI examples byte-exact; verify --max-order 4 exits 0", 60.0, [](Outcome& o) {
    auto const path = std::filesystem::temp_directory_path() / "qnd_acceptance_E.qnd";
    std::ofstream(path) << "3\n0 0 1\n1 1 0\n2 2 2\n";
    int code = -1;
    o.expect(run_cli({"closure", path.string(), "--sub", "0"}, code)
                     == "closure: 0,1\ndense: false\nclosed: false\n"
                 && code == 0,
             "closure example");
    std::filesystem::remove(path);
    auto const one_out = run_cli({"verify", "--max-order", "1"}, code);
    o.expect(code == 0 && one_out.find("FAIL") == std::string::npos, "verify --max-order 1");
    o.expect(run_cli({"enumerate", "--order", "4", "--count-only"}, code) == "7\n" && code == 0,
             "enumerate --order 4 --count-only");
    auto const four_out = run_cli({"verify", "--max-order", "4"}, code);
    o.expect(code == 0 && four_out.find("FAIL") == std::string::npos, "verify --max-order 4");
  });

  std::printf("%s\n", failed_criteria == 0 ? "acceptance: all criteria passed"
                                           : "acceptance: some criteria failed");
  return failed_criteria == 0 ? 0 : 1;
}
