#include "qnd/classify.hpp"

#include <sstream>

#include "json.hpp"

#include "qnd/closure.hpp"
#include "qnd/connectivity.hpp"

namespace qnd {

bool is_trivial(Quandle const& q) {
  for (Element x = 0; x < q.order(); ++x) {
    for (Element y = 0; y < q.order(); ++y) {
      if (q.op(x, y) != x) {
        return false;
      }
    }
  }
  return true;
}

bool is_quasi_trivial(Quandle const& q) {
  auto const orb = orbits(q);
  for (Element x = 0; x < q.order(); ++x) {
    for (auto y : orb.orbit_of(x).elements()) {
      if (q.op(x, y) != x || q.inv(x, y) != x) {
        return false;
      }
    }
  }
  return true;
}

bool is_in_disconnectedness_class(Quandle const& q, std::size_t bound) {
  for (auto const& s : all_subquandles(q, bound)) {
    if (s.size() > 1 && is_connected(induced_subquandle(q, s).quandle)) {
      return false;
    }
  }
  return true;
}

bool is_constant(QuandleHom const& f) {
  if (f.source().order() == 0) {
    return true;
  }
  auto const& map = f.map();
  for (auto v : map) {
    if (v != map.front()) {
      return false;
    }
  }
  return true;
}

ClassifyReport classify(Quandle const& q) {
  ClassifyReport r;
  r.order         = q.order();
  r.trivial       = is_trivial(q);
  r.quasi_trivial = is_quasi_trivial(q);
  r.orbit_count   = orbits(q).class_count;
  r.connected     = r.orbit_count == 1;
  r.c_connected   = is_c_connected(q);
  r.c_separated   = is_c_separated(q);
  r.in_z          = is_in_disconnectedness_class(q);
  return r;
}

namespace {
  char const* flag(bool b) {
    return b ? "true" : "false";
  }
}  // namespace

std::string format_report(ClassifyReport const& r) {
  std::ostringstream os;
  os << "order:         " << r.order << '\n'
     << "trivial:       " << flag(r.trivial) << '\n'
     << "quasi_trivial: " << flag(r.quasi_trivial) << '\n'
     << "connected:     " << flag(r.connected) << '\n'
     << "c_connected:   " << flag(r.c_connected) << '\n'
     << "c_separated:   " << flag(r.c_separated) << '\n'
     << "in_Z:          " << flag(r.in_z) << '\n'
     << "orbits:        " << r.orbit_count << '\n';
  return os.str();
}

std::string format_report_summary(ClassifyReport const& r) {
  std::ostringstream os;
  os << "order=" << r.order << " trivial=" << flag(r.trivial)
     << " quasi_trivial=" << flag(r.quasi_trivial) << " connected=" << flag(r.connected)
     << " c_connected=" << flag(r.c_connected) << " c_separated=" << flag(r.c_separated)
     << " in_Z=" << flag(r.in_z) << " orbits=" << r.orbit_count;
  return os.str();
}

std::string format_report_json(ClassifyReport const& r) {
  nlohmann::ordered_json j;
  j["order"]         = r.order;
  j["trivial"]       = r.trivial;
  j["quasi_trivial"] = r.quasi_trivial;
  j["connected"]     = r.connected;
  j["c_connected"]   = r.c_connected;
  j["c_separated"]   = r.c_separated;
  j["in_Z"]          = r.in_z;
  j["orbits"]        = r.orbit_count;
  return j.dump();
}

}  // namespace qnd
