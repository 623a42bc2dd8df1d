// Reading and writing planar-diagram codes and chord-diagram text files.

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "almax/model.hpp"

namespace almax {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line(line), column(column) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), line(0), column(0) {}

  int line;
  int column;
};

// PD[X[a,b,c,d], ...].  Crossing signs come from propagating the
// orientation a -> c of each under-strand along the link components.
PDCode parse_pd(std::string_view text);
std::string write_pd(const PDCode& pd);

// Number of link components of a PD code (1 for PD[]).
int component_count(const PDCode& pd);

// Mirror image: every crossing changes sign, D(1) and D(0) trade places.
PDCode mirror(const PDCode& pd);

// D(1): every crossing 1-smoothed, chord i at crossing i.  Endpoints of
// chord i are named "x<i>a" (the turn through positions a,b) and "x<i>b".
ChordDiagram resolve_all_ones(const PDCode& pd);

// The all-zeros resolution of pd, as a D(1) in its own right.
ChordDiagram resolve_all_zeros(const PDCode& pd);

struct CDInput {
  ChordDiagram diagram;
  std::optional<std::array<int, 2>> writhe;   // n_plus, n_minus
};

CDInput parse_chord_diagram(std::string_view text);
std::string write_chord_diagram(const ChordDiagram& d,
                                std::optional<std::array<int, 2>> writhe = std::nullopt);

// Builds a diagram from circle endpoint-name lists and chords given as
// (index, name, name).  Side data takes the drawing defaults: monochords
// inside, bichords outside.  Throws ParseError on invariant violations.
ChordDiagram make_chord_diagram(
    const std::vector<std::vector<std::string>>& circles,
    const std::vector<std::tuple<int, std::string, std::string>>& chords);

// A link diagram of either kind, with signs when known.
struct LinkInput {
  std::string source;
  std::optional<PDCode> pd;
  ChordDiagram top;          // D(1)
  bool has_signs = false;
  int n_plus = 0;
  int n_minus = 0;
};

// Sniffs "PD[" to choose the grammar.
LinkInput parse_input(std::string_view text, std::string source = "<input>");
LinkInput load_input(const std::string& path);

}  // namespace almax
