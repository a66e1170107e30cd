#pragma once

#include <string>
#include <string_view>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

// One simplex per line as whitespace-separated labels; '#' starts a comment.
// The result is the closure, with vertex ids in ascending label order.
// Throws ParseError naming the line.
SimplicialComplex parse_complex(std::string_view text);

// Lines "edge <id> <u> <v>" and "vertex <v>". Vertex ids follow ascending
// label order, edge ids ascending edge-label order.
Multigraph parse_multigraph(std::string_view text);

// Canonical form: one facet per line, labels ascending within a line, lines
// sorted. Equal complexes give identical text.
std::string serialize_complex(const SimplicialComplex& k);

// Isolated vertices first, then edges in ascending label order.
std::string serialize_multigraph(const Multigraph& g);

// The pair table as comment rows "# <pair-id> <index> <source> -> <target>",
// simplices written as comma-joined labels.
std::string serialize_pair_table(const MorseComplex& m);

// Pair table followed by the facets of M, named by pair id.
std::string serialize_morse(const MorseComplex& m);

std::string read_file(const std::string& path);

}  // namespace dmt
