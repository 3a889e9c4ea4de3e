#ifndef QND_TEXT_IO_HPP_
#define QND_TEXT_IO_HPP_

// Plain-text formats: quandle tables, subsets as comma lists and congruences
// as semicolon-separated classes ("0,1;2").

#include <filesystem>
#include <string>
#include <string_view>

#include "qnd/congruence.hpp"
#include "qnd/quandle.hpp"

namespace qnd {

//! Line 1 holds n, the next n lines hold the rows of ◁. '#' starts a comment;
//! blank lines are ignored. Throws ParseError or AxiomViolation.
Quandle parse_quandle_text(std::string_view text, std::string const& source = "<input>");

//! Reads and parses a file. Throws ParseError (line 0 when unreadable).
Quandle parse_quandle_file(std::filesystem::path const& path);

//! Canonical text: no comments, single spaces, '\n' line endings.
std::string format_quandle(Quandle const& q);

//! "0,2,3"; the empty string is the empty subset. Throws ParseError on
//! malformed input or elements outside the carrier.
SubSet      parse_subset(std::string_view text, std::size_t parent_order);
std::string format_subset(SubSet const& s);

//! "0,1;2". Elements not listed form singleton classes. Throws ParseError on
//! malformed input or repeated elements, NotCongruence if the partition is
//! not compatible with q.
Congruence  parse_congruence(std::string_view text, Quandle const& q);
std::string format_congruence(Congruence const& c);

std::string format_map(std::vector<Element> const& map);

}  // namespace qnd

#endif  // QND_TEXT_IO_HPP_
