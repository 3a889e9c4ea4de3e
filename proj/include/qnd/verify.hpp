#ifndef QND_VERIFY_HPP_
#define QND_VERIFY_HPP_

// Exhaustive property suites over all quandles up to a given order. Each
// suite checks one statement about the closure operators on every instance
// and reports the first failing witness.

#include <cstddef>
#include <string>
#include <vector>

#include "qnd/enumerate.hpp"

namespace qnd {

struct VerifyOptions {
  std::size_t max_order = 4;
  Execution   execution = Execution::parallel;
};

struct SuiteResult {
  std::string name;       // short identifier, e.g. "closure.singleton-orbit"
  std::string statement;  // the property checked
  std::size_t instances = 0;
  std::size_t failures  = 0;
  std::string witness;    // first failing instance, empty when passed

  bool passed() const noexcept { return failures == 0; }
};

//! Runs every suite. Instances are quandles of order 1..max_order; statements
//! quantified over homomorphisms use orders up to min(max_order, 4). Throws
//! BoundExceeded if max_order > 6.
std::vector<SuiteResult> run_verification(VerifyOptions const& options);

std::string format_suite_line(SuiteResult const& r);
std::string format_suite_json(SuiteResult const& r);

//! "[3: 0 0 1/1 1 0/2 2 2]"
std::string describe_quandle(Quandle const& q);

}  // namespace qnd

#endif  // QND_VERIFY_HPP_
