#pragma once

// Line-oriented text format for diagrams:
//   diagram s=<int> t=<int> loops=<int>
//   block b3 t1+1 t2+1
//   wrap k=<int> b0 b1+1
// '#' starts a comment; blank lines are ignored. The printer emits canonical
// output and the parser round-trips it byte-identically.

#include <iosfwd>
#include <string>

#include "adm/diagram.hpp"

namespace adm {

std::string print_diagram(const AffineDiagram& d);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

AffineDiagram parse_diagram(const std::string& text);
AffineDiagram read_diagram_file(const std::string& path);
void write_diagram_file(const std::string& path, const AffineDiagram& d);

}  // namespace adm
