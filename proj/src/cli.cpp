#include "qnd/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "qnd/classify.hpp"
#include "qnd/closure.hpp"
#include "qnd/congruence.hpp"
#include "qnd/connectivity.hpp"
#include "qnd/enumerate.hpp"
#include "qnd/text_io.hpp"
#include "qnd/verify.hpp"

namespace qnd::cli {

namespace {

  struct Options {
    std::string              file;
    std::string              file2;
    std::string              sub;
    std::vector<std::string> congs;
    std::size_t              order       = 0;
    std::size_t              max_order   = 4;
    bool                     count_only  = false;
    bool                     json        = false;
    bool                     serial      = false;
  };

  int cmd_check(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    out << "valid quandle of order " << q.order() << '\n';
    return kExitOk;
  }

  int cmd_orbits(Options const& o, std::ostream& out) {
    auto const q   = parse_quandle_file(o.file);
    auto const orb = orbits(q);
    out << "count: " << orb.class_count << '\n'
        << "classes: " << format_congruence(Congruence(orb.class_of)) << '\n';
    return kExitOk;
  }

  int cmd_pi0(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    auto const p = pi0(q);
    out << "# unit: " << format_map(p.unit.map()) << '\n' << format_quandle(p.quandle);
    return kExitOk;
  }

  int cmd_closure(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    auto const m = parse_subset(o.sub, q.order());
    auto const c = closure_sub(q, m);
    out << "closure: " << format_subset(c) << '\n'
        << "dense: " << (c.is_full() ? "true" : "false") << '\n'
        << "closed: " << (c == m ? "true" : "false") << '\n';
    return kExitOk;
  }

  int cmd_closure_cong(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    auto const r = parse_congruence(o.congs.front(), q);
    out << "closure: " << format_congruence(effective_closure(q, r)) << '\n';
    return kExitOk;
  }

  int cmd_inn(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    out << "inn: " << format_congruence(inn_congruence(q)) << '\n';
    return kExitOk;
  }

  int cmd_quotient(Options const& o, std::ostream& out) {
    auto const q   = parse_quandle_file(o.file);
    auto const res = quotient(q, parse_congruence(o.congs.front(), q));
    out << "# projection: " << format_map(res.projection.map()) << '\n'
        << format_quandle(res.quandle);
    return kExitOk;
  }

  int cmd_join(Options const& o, std::ostream& out) {
    auto const q = parse_quandle_file(o.file);
    auto const r = parse_congruence(o.congs[0], q);
    auto const s = parse_congruence(o.congs[1], q);
    out << "join: " << format_congruence(join(q, r, s)) << '\n';
    return kExitOk;
  }

  int cmd_classify(Options const& o, std::ostream& out) {
    auto const report = classify(parse_quandle_file(o.file));
    if (o.json) {
      out << format_report_json(report) << '\n';
    } else {
      out << format_report(report) << "summary: " << format_report_summary(report) << '\n';
    }
    return kExitOk;
  }

  int cmd_product(Options const& o, std::ostream& out) {
    out << format_quandle(product(parse_quandle_file(o.file), parse_quandle_file(o.file2)));
    return kExitOk;
  }

  int cmd_homs(Options const& o, std::ostream& out) {
    auto const homs = enumerate_homs(parse_quandle_file(o.file), parse_quandle_file(o.file2));
    out << "count: " << homs.size() << '\n';
    for (auto const& f : homs) {
      out << format_map(f.map()) << '\n';
    }
    return kExitOk;
  }

  int cmd_enumerate(Options const& o, std::ostream& out) {
    auto const list =
        enumerate_quandles(o.order, o.serial ? Execution::serial : Execution::parallel);
    if (o.count_only) {
      out << list.size() << '\n';
      return kExitOk;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << (i ? "\n" : "") << format_quandle(list[i]);
    }
    return kExitOk;
  }

  int cmd_verify(Options const& o, std::ostream& out) {
    auto const results = run_verification(
        {o.max_order, o.serial ? Execution::serial : Execution::parallel});
    std::size_t failed = 0;
    for (auto const& r : results) {
      out << (o.json ? format_suite_json(r) : format_suite_line(r)) << '\n';
      failed += !r.passed();
    }
    if (!o.json) {
      if (failed == 0) {
        out << "verify: all " << results.size() << " suites passed (max order " << o.max_order
            << ")\n";
      } else {
        out << "verify: " << failed << " of " << results.size() << " suites failed\n";
      }
    }
    return failed == 0 ? kExitOk : kExitDomain;
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandle toolkit: orbits, closure operators and congruences", "qnd"};
  app.require_subcommand(1);
  Options                   o;
  std::function<int()>      action;

  auto file_command = [&](char const* name, char const* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "quandle table file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    return sub;
  };

  file_command("check", "validate a quandle table", cmd_check);
  file_command("orbits", "orbits under the inner automorphism group", cmd_orbits);
  file_command("pi0", "trivial quandle of orbits and the projection onto it", cmd_pi0);
  file_command("closure", "closure of a subquandle", cmd_closure)
      ->add_option("--sub", o.sub, "subquandle as a comma list, e.g. 0,1")
      ->required();
  file_command("closure-cong", "closure of a congruence", cmd_closure_cong)
      ->add_option("--cong", o.congs, "congruence classes, e.g. 0,1;2")
      ->required()
      ->expected(1);
  file_command("inn", "orbit congruence", cmd_inn);
  file_command("quotient", "quotient by a congruence", cmd_quotient)
      ->add_option("--cong", o.congs, "congruence classes, e.g. 0,1;2")
      ->required()
      ->expected(1);
  file_command("join", "join of two congruences", cmd_join)
      ->add_option("--cong", o.congs, "congruence classes (give twice)")
      ->required()
      ->expected(2);
  file_command("classify", "classification flags", cmd_classify)
      ->add_flag("--json", o.json, "single-line JSON output");

  for (auto [name, help, fn] :
       {std::tuple{"product", "componentwise product of two quandles", &cmd_product},
        std::tuple{"homs", "all homomorphisms between two quandles", &cmd_homs}}) {
    auto* sub = file_command(name, help, fn);
    sub->add_option("file2", o.file2, "second quandle table file")->required();
  }

  auto* enumerate = app.add_subcommand("enumerate", "all quandles of an order up to isomorphism");
  enumerate->add_option("--order", o.order, "order (at most 6)")->required();
  enumerate->add_flag("--count-only", o.count_only, "print only the number of classes");
  enumerate->add_flag("--serial", o.serial, "use the serial reference search");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(o, out); }; });

  auto* verify = app.add_subcommand("verify", "run every property suite");
  verify->add_option("--max-order", o.max_order, "largest order checked (default 4)");
  verify->add_flag("--json", o.json, "one JSON object per suite");
  verify->add_flag("--serial", o.serial, "run suites without OpenMP");
  verify->callback([&] { action = [&] { return cmd_verify(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << "error: no command given\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace qnd::cli
