#include <regex>

#include "corpus.hpp"
#include "doctest.h"
#include "pseudoknot/flype.hpp"
#include "pseudoknot/gauss.hpp"
#include "pseudoknot/invariant.hpp"
#include "pseudoknot/render.hpp"

using namespace pk;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("empty diagram is just the circle") {
  const std::string svg = render_svg(PseudoGaussDiagram{});
  CHECK(svg.starts_with("<svg"));
  CHECK(count(svg, "<circle") == 1);
  CHECK(count(svg, "<line") == 0);
  CHECK(render_svg(DecoratedChordDiagram{}) == svg);
}

TEST_CASE("trefoil shadow has three bold chords") {
  const std::string svg = render_svg(pd_to_gauss(parse_pd(corpus::trefoil_shadow)));
  CHECK(count(svg, "stroke-width=\"4.50\"") == 3);
  CHECK(count(svg, "marker-end") == 0);
  CHECK(count(svg, "<circle") == 1 + 6);
}

TEST_CASE("classical chords are arrows with signs") {
  const std::string svg = render_svg(parse_gauss("O1+,U2-,U1+,O2-"));
  CHECK(count(svg, "marker-end=\"url(#head)\"") == 2);
  CHECK(count(svg, ">+</text>") == 1);
  CHECK(count(svg, ">-</text>") == 1);
  // endpoint 0 sits at the top, endpoint 1 to its left
  CHECK(svg.find("cx=\"200.00\" cy=\"50.00\"") != std::string::npos);
  CHECK(svg.find("cx=\"50.00\" cy=\"200.00\"") != std::string::npos);
}

TEST_CASE("decorations are printed") {
  const auto c = compute_i(parse_gauss("Pt1,O2+,Ph1,U2+"));
  const std::string svg = render_svg(c);
  CHECK(count(svg, ">1</text>") == 1);
}

TEST_CASE("rendering is deterministic") {
  const auto g = pd_to_gauss(p1_shadow());
  CHECK(render_svg(g) == render_svg(pd_to_gauss(p1_shadow())));
  const std::regex num("-?[0-9]+\\.[0-9]{2}");
  CHECK(std::regex_search(render_svg(g), num));
}
