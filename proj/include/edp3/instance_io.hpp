#ifndef EDP3_INSTANCE_IO_HPP
#define EDP3_INSTANCE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edp3/instance.hpp"

namespace edp3 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format (DIMACS-style, 1-indexed node ids):
//   c <comment>            ignored, anywhere
//   p edp <n> <m>          exactly once, before e/d lines
//   e <u> <v>              exactly m times
//   d <s> <t>              exactly three times
// Loops are rejected with a diagnostic; counts must match the header.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical rendering: header, live edges ascending by id, demand lines.
std::string render_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

// Solution files: three lines of 1-indexed node ids, one per path; a single
// id denotes the empty path at that node.
std::string render_solution(const Solution& sol);

// Reconstructs paths against the instance by matching consecutive nodes to
// unused parallel edges. Returns nullopt when no edge assignment exists.
std::optional<Solution> parse_solution_text(const Instance& inst,
                                            const std::string& text);

}  // namespace edp3

#endif  // EDP3_INSTANCE_IO_HPP
