#ifndef QND_ENUMERATE_HPP_
#define QND_ENUMERATE_HPP_

// Generation of all quandles of a given order up to isomorphism, isomorphism
// testing and canonical forms.

#include <cstddef>
#include <optional>
#include <vector>

#include "qnd/quandle.hpp"

namespace qnd {

inline constexpr std::size_t kMaxEnumerationOrder = 6;
inline constexpr std::size_t kMaxCanonicalOrder   = 8;

enum class Execution { serial, parallel };

//! One representative per isomorphism class, each given by its canonical
//! form, sorted by canonical table. Throws BoundExceeded if n > 6.
//!
//! The serial and parallel versions return identical lists; the serial one is
//! kept as the reference.
std::vector<Quandle> enumerate_quandles(std::size_t n, Execution execution = Execution::parallel);

//! Number of valid quandle tables on {0, ..., n-1} (not up to isomorphism).
std::size_t count_labeled_quandles(std::size_t n, Execution execution = Execution::parallel);

//! A bijection sigma with sigma(x ◁ y) = sigma(x) ◁ sigma(y), or nothing.
std::optional<std::vector<Element>> are_isomorphic(Quandle const& a, Quandle const& b);

//! Lexicographically least row-major table over all relabellings of q.
//! Throws BoundExceeded if q.order() > 8.
std::vector<Element> canonical_form(Quandle const& q);

//! The quandle whose table is canonical_form(q).
Quandle canonical_quandle(Quandle const& q);

}  // namespace qnd

#endif  // QND_ENUMERATE_HPP_
