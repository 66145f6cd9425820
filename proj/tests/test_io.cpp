#include <doctest.h>

#include "tmg/constructions.hpp"
#include "tmg/crossings.hpp"
#include "tmg/error.hpp"
#include "tmg/io.hpp"
#include "tmg/styles.hpp"
#include "test_support.hpp"

using namespace tmg;
using tmgtest::P;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("serialize then parse is the identity on the corpus") {
  const std::vector<Drawing> corpus = {
      tmgtest::x_drawing(),
      tmgtest::lens_with_interior_vertex(),
      empty_lens_gadget(LensKind::BetweenCrossings),
      separated_arc_construction(4),
      random_polyline_drawing(5, 6, 4),
  };
  for (const auto& d : corpus) {
    const std::string text = serialize_drawing(d);
    const Drawing back = parse_drawing(text);
    CHECK(serialize_drawing(back) == text);
    CHECK(back.vertex_count() == d.vertex_count());
    CHECK(back.edge_count() == d.edge_count());
    CHECK(crossing_number(back) == crossing_number(d));
    CHECK(is_separated(back).holds == is_separated(d).holds);
    CHECK(back.max_multiplicity() == d.max_multiplicity());
  }
}

TEST_CASE("rationals serialize exactly") {
  Drawing d;
  d.add_vertex("a", Point{tmgtest::R(1, 3), tmgtest::R(-7, 2)});
  d.add_vertex("b", Point{tmgtest::R(22, 7), tmgtest::R(0)});
  d.add_edge("ab", "a", "b",
             Polyline({Point{tmgtest::R(1, 3), tmgtest::R(-7, 2)},
                       Point{tmgtest::R(22, 7), tmgtest::R(0)}}));
  const std::string text = serialize_drawing(d);
  CHECK(text.find("1/3") != std::string::npos);
  CHECK(text.find("-7/2") != std::string::npos);
  const Drawing back = parse_drawing(text);
  CHECK(back.vertices()[0].position.x == tmgtest::R(1, 3));
}

TEST_CASE("parser reports malformed input with positions") {
  CHECK_THROWS_AS(parse_drawing("V a 0 0\n"), Error);  // missing header
  try {
    parse_drawing("TMGD 1\nV a 1/0 0\n");
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ParseError);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_drawing("TMGD 1\nX what\n"), Error);
  CHECK_THROWS_AS(parse_drawing("TMGD 1\nV a 0 0\nV b 1 0\nE e a b 0 0\n"), Error);
}

TEST_CASE("loops and mismatched endpoints are invariant violations") {
  try {
    parse_drawing("TMGD 1\nV a 0 0\nE e a a 0 0 1 1 0 0\n");
    FAIL("expected InvariantViolation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvariantViolation);
  }
  try {
    parse_drawing("TMGD 1\nV a 0 0\nV b 2 0\nE e a b 0 0 1 5\n");
    FAIL("expected InvariantViolation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvariantViolation);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const Drawing d = parse_drawing(
      "# a drawing\nTMGD 1\n\nV a 0 0   # home\nV b 1 0\nE e a b 0 0 1 0\n");
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 1);
}

TEST_CASE("svg for the X drawing has 2 paths, 4 vertex dots, 1 crossing marker") {
  const std::string svg = render_svg(tmgtest::x_drawing());
  CHECK(count_occurrences(svg, "class=\"edge\"") == 2);
  CHECK(count_occurrences(svg, "class=\"vertex\"") == 4);
  CHECK(count_occurrences(svg, "class=\"crossing\"") == 1);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg is deterministic and labels its source") {
  const std::string a = render_svg(tmgtest::x_drawing());
  const std::string b = render_svg(tmgtest::x_drawing());
  CHECK(a == b);
  CHECK(a.find("<!-- source: ") != std::string::npos);
  SvgOptions options;
  options.source_label = "unit-test";
  CHECK(render_svg(tmgtest::x_drawing(), options).find("unit-test") != std::string::npos);
}

TEST_CASE("empty drawing renders to a well-formed svg") {
  Drawing d;
  const std::string svg = render_svg(d);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 0);
}

TEST_CASE("the n=4 arc construction renders 12 edge paths") {
  const std::string svg = render_svg(separated_arc_construction(4));
  CHECK(count_occurrences(svg, "class=\"edge\"") == 12);
}

TEST_CASE("empty-lens shading emits polygons") {
  SvgOptions options;
  options.shade_empty_lenses = true;
  const std::string svg = render_svg(empty_lens_gadget(LensKind::BetweenCrossings), options);
  CHECK(count_occurrences(svg, "class=\"lens\"") == 1);
}

TEST_CASE("report sink renders all three formats with fixed columns") {
  ReportSink table({"n", "e", "verdict"}, ReportFormat::Table);
  table.add_row({"4", "12", "ok"});
  table.add_row({"5", "30", "ok"});
  table.add_footnote("sample note");
  const std::string t = table.render();
  CHECK(t.find("n") < t.find("e"));
  CHECK(t.find("sample note") != std::string::npos);

  ReportSink tsv({"n", "e"}, ReportFormat::Delimited);
  tsv.add_row({"4", "12"});
  CHECK(tsv.render() == "n\te\n4\t12\n");

  ReportSink json({"n", "e"}, ReportFormat::Structured);
  json.add_row({"4", "12"});
  const std::string j = json.render();
  CHECK(j.find("\"n\": \"4\"") != std::string::npos);
  CHECK(j.front() == '[');
}

TEST_CASE("content hash is stable") {
  CHECK(content_hash("") == content_hash(""));
  CHECK(content_hash("a") != content_hash("b"));
  CHECK(content_hash("abc").size() == 16);
}
