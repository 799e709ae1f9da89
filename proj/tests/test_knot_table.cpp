#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "pseudoknot/bracket.hpp"
#include "pseudoknot/error.hpp"
#include "pseudoknot/knot_table.hpp"

using namespace pk;

namespace {

std::vector<KnotSource> sources(const std::string& file) {
  std::ifstream in(corpus::data_path(file));
  return read_sources(in);
}

}  // namespace

TEST_CASE("names") {
  const KnotName m = KnotName::parse("-7_7");
  CHECK(m.mirrored);
  CHECK(m.base == "7_7");
  CHECK(m.to_string() == "-7_7");
  CHECK(m.crossing_number() == 7);
  CHECK(KnotName::parse("-3_1") < KnotName::parse("3_1"));
  CHECK(KnotName::parse("3_1") < KnotName::parse("4_1"));
  CHECK(KnotName::parse("7_2") < KnotName::parse("7_10"));
  CHECK(KnotName::parse("0_1") < KnotName::parse("-3_1"));
  CHECK_THROWS_AS(KnotName::parse("-"), ParseError);
}

TEST_CASE("bundled table: 27 entries built from 15 sources") {
  const auto src = sources("knot_sources.pd");
  CHECK(src.size() == 15);
  const KnotTable t = build_table(src);
  CHECK(t.size() == 27);
  std::size_t amphichiral = 0;
  for (const KnotEntry& e : t.entries()) amphichiral += e.amphichiral;
  CHECK(amphichiral == 3);
  CHECK(t.find(KnotName::parse("4_1"))->amphichiral);
  CHECK(t.find(KnotName::parse("6_3"))->amphichiral);
  CHECK(t.find(KnotName::parse("0_1"))->jones == LaurentPolynomial(1));
  CHECK(t.find(KnotName::parse("3_1"))->jones == LaurentPolynomial::from_terms({{-4, -1}, {-3, 1}, {-1, 1}}));
}

TEST_CASE("shipped table file is exactly the built table") {
  std::ostringstream out;
  write_table(out, build_table(sources("knot_sources.pd")));
  CHECK(out.str() == corpus::read_file(corpus::data_path("knot_table.txt")));

  auto eight = sources("knot_sources.pd");
  for (auto& s : sources("knot_sources_8.pd")) eight.push_back(s);
  std::ostringstream out8;
  write_table(out8, build_table(eight));
  CHECK(out8.str() == corpus::read_file(corpus::data_path("knot_table_8.txt")));
  CHECK(load_table_file(corpus::data_path("knot_table_8.txt")).size() == 64);
}

TEST_CASE("file format round trips bit-exactly") {
  const KnotTable t = load_table_file(corpus::data_path("knot_table.txt"));
  std::ostringstream out;
  write_table(out, t);
  std::istringstream in(out.str());
  const KnotTable again = read_table(in);
  CHECK(again == t);
  std::ostringstream out2;
  write_table(out2, again);
  CHECK(out2.str() == out.str());
}

TEST_CASE("invariant violations are rejected") {
  CHECK_THROWS_AS(build_table({}), ValidationError);
  const auto j = LaurentPolynomial::from_terms({{-4, -1}, {-3, 1}, {-1, 1}});
  // Chiral without mirror.
  CHECK_THROWS_AS(KnotTable({{KnotName::parse("3_1"), 3, false, j}}), ValidationError);
  // Mirror with the wrong polynomial.
  CHECK_THROWS_AS(KnotTable({{KnotName::parse("3_1"), 3, false, j}, {KnotName::parse("-3_1"), 3, false, j * j}}),
                  ValidationError);
  // Duplicate polynomial.
  CHECK_THROWS_AS(KnotTable({{KnotName::parse("0_1"), 0, true, 1}, {KnotName::parse("9_9"), 9, true, 1}}),
                  ValidationError);
  // Amphichiral flag on a chiral polynomial.
  CHECK_THROWS_AS(KnotTable({{KnotName::parse("3_1"), 3, true, j}}), ValidationError);
  // Two copies of the same source.
  auto src = sources("knot_sources.pd");
  src.push_back(src.back());
  CHECK_THROWS_AS(build_table(src), ValidationError);
  std::istringstream bad("3_1 3 2 1:1\n");
  CHECK_THROWS_AS(read_table(bad), ParseError);
}

TEST_CASE("classify") {
  const KnotTable t = load_table_file(corpus::data_path("knot_table.txt"));
  const ResolvedPD neg(parse_pd(corpus::trefoil_negative));
  const ResolvedPD pos = mirror(neg);
  CHECK(classify(neg, t).name->to_string() == "3_1");
  CHECK(classify(pos, t).name->to_string() == "-3_1");
  CHECK(classify(ResolvedPD(parse_pd(corpus::figure_eight)), t).name->to_string() == "4_1");

  // An 8-crossing knot is not in the 7-crossing table.
  const auto eight = sources("knot_sources_8.pd");
  const Classification c = classify(eight.front().diagram, t);
  CHECK(!c.name);
  CHECK(c.jones == jones(eight.front().diagram));
  const KnotTable t8 = load_table_file(corpus::data_path("knot_table_8.txt"));
  CHECK(classify(eight.front().diagram, t8).name->to_string() == "8_1");
}
