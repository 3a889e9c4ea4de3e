#ifndef QND_CLASSIFY_HPP_
#define QND_CLASSIFY_HPP_

#include <string>

#include "qnd/quandle.hpp"

namespace qnd {

//! x ◁ y = x for all x, y.
bool is_trivial(Quandle const& q);

//! Every element is fixed by ◁ and ◁⁻¹ against each member of its own orbit.
//! The set of values of chains starting at x is exactly the orbit of x, which
//! reduces the chain condition to this finite check.
bool is_quasi_trivial(Quandle const& q);

//! No connected subquandle with more than one element. Throws BoundExceeded
//! when q is too large for subquandle enumeration.
bool is_in_disconnectedness_class(Quandle const& q,
                                  std::size_t    bound = kDefaultExhaustiveBound);

//! The image has exactly one element. Maps out of the empty quandle count as
//! constant, including the empty map into the empty quandle.
bool is_constant(QuandleHom const& f);

struct ClassifyReport {
  std::size_t order         = 0;
  bool        trivial       = false;
  bool        quasi_trivial = false;
  bool        connected     = false;
  bool        c_connected   = false;
  bool        c_separated   = false;
  bool        in_z          = false;
  std::size_t orbit_count   = 0;
};

ClassifyReport classify(Quandle const& q);

//! Aligned "key: value" lines.
std::string format_report(ClassifyReport const& r);
//! Single line "order=3 trivial=false ...".
std::string format_report_summary(ClassifyReport const& r);
//! One JSON object on a single line.
std::string format_report_json(ClassifyReport const& r);

}  // namespace qnd

#endif  // QND_CLASSIFY_HPP_
