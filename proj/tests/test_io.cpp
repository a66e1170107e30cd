#include "doctest.h"
#include "dmt/corpus.hpp"
#include "dmt/errors.hpp"
#include "dmt/io.hpp"

using namespace dmt;

namespace {

int parse_error_line(const std::string& text, bool multigraph) {
  try {
    if (multigraph)
      parse_multigraph(text);
    else
      parse_complex(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse complexes") {
  const auto k = parse_complex("a b c\n");
  CHECK(k.size() == 7);
  CHECK(k.labels() == std::vector<std::string>{"a", "b", "c"});

  const auto l = parse_complex("# comment\nz y\n\ny x  # trailing\nw\n");
  CHECK(l.labels() == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(l.facets().size() == 3);
  CHECK(parse_complex("").empty());
}

TEST_CASE("parse multigraphs") {
  const auto g = parse_multigraph("edge e1 u v\nedge e2 u v\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 2);
  CHECK(g.parallel(0, 1));

  const auto h = parse_multigraph("vertex z\nedge b y x\nedge a x w\n");
  CHECK(h.vertex_labels() == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(h.edge_labels() == std::vector<std::string>{"a", "b"});
  CHECK(h.incident(3).empty());
}

TEST_CASE("parse errors name the line") {
  CHECK(parse_error_line("a a b\n", false) == 1);
  CHECK(parse_error_line("a b\nc d d\n", false) == 2);
  CHECK(parse_error_line("edge e u u\n", true) == 1);
  CHECK(parse_error_line("edge e u v\n# x\nedge e v w\n", true) == 3);
  CHECK(parse_error_line("edge e u\n", true) == 1);
  CHECK(parse_error_line("vertex\n", true) == 1);
  CHECK(parse_error_line("arc e u v\n", true) == 1);
  CHECK_THROWS_AS(read_file("/nonexistent/file"), MalformedInput);
}

TEST_CASE("complex serialization is canonical") {
  CHECK(serialize_complex(parse_complex("c b a\nd c\n")) == "a b c\nc d\n");
  CHECK(serialize_complex(parse_complex("d c\nb a c\n")) == "a b c\nc d\n");
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : complexes_on(n, false)) {
      const auto text = serialize_complex(k);
      const auto back = parse_complex(text);
      CHECK(serialize_complex(back) == text);
      CHECK(back.f_vector() == k.f_vector());
    }
}

TEST_CASE("multigraph serialization round trips") {
  const std::string text = "vertex z\nedge a w x\nedge b x y\nedge c x y\n";
  CHECK(serialize_multigraph(parse_multigraph(text)) == text);
  for (const auto& g : connected_multigraphs(3, 2)) {
    const auto back = parse_multigraph(serialize_multigraph(g));
    CHECK(back.num_edges() == g.num_edges());
    CHECK(multigraphs_isomorphic(back, g));
  }
}

TEST_CASE("pair tables") {
  const auto m = morse_complex(parse_complex("a b\n"));
  CHECK(serialize_pair_table(m) == "# p0 0 a -> a,b\n# p1 0 b -> a,b\n");
  CHECK(serialize_morse(m) == "# p0 0 a -> a,b\n# p1 0 b -> a,b\np0\np1\n");

  const auto mm = morse_complex(parse_complex("a b c\n"));
  const auto as_complex = parse_complex(serialize_morse(mm));
  CHECK(as_complex.facets().size() == mm.facets().size());
}
