#include "linarr/io.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "linarr/intervals.hpp"
#include "linarr/svg.hpp"
#include "test_support.hpp"

namespace linarr {
namespace {

using ::testing::HasSubstr;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
  return c;
}

TEST(EdgeListTest, ParsesWithCommentsAndBlankLines) {
  std::istringstream in("# a path\n3\n\n1 2   # first\n2 3\n");
  const auto t = io::read_edge_list(in);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(testing::edge_set(t), testing::edge_set(testing::p3()));
}

TEST(EdgeListTest, SingleVertex) {
  std::istringstream in("1\n");
  EXPECT_EQ(io::read_edge_list(in).size(), 1u);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  auto error_of = [](const std::string& text) -> std::pair<std::size_t, std::string> {
    std::istringstream in(text);
    try {
      io::read_edge_list(in);
    } catch (const io::parse_error& e) {
      return {e.line(), e.what()};
    }
    return {0, "accepted"};
  };
  auto [line, what] = error_of("3\n1 2\n2 x\n");
  EXPECT_EQ(line, 3u);
  EXPECT_THAT(what, HasSubstr("'x'"));

  std::tie(line, what) = error_of("4\n1 2\n3 4\n");
  EXPECT_EQ(line, 3u);
  EXPECT_THAT(what, HasSubstr("expected 3 edges"));

  std::tie(line, what) = error_of("3\n1 2\n1 2 3\n");
  EXPECT_EQ(line, 3u);

  std::tie(line, what) = error_of("3\n1 2\n2 1\n");
  EXPECT_THAT(what, HasSubstr("duplicate"));

  std::tie(line, what) = error_of("3\n1 -2\n2 3\n");
  EXPECT_EQ(line, 2u);

  std::tie(line, what) = error_of("");
  EXPECT_THAT(what, HasSubstr("empty"));
}

TEST(HeadVectorTest, Parses) {
  std::istringstream in("2 0 2 3 2 5\n");
  const auto t = io::read_head_vector(in);
  EXPECT_EQ(t.root(), 2u);
  EXPECT_EQ(t.size(), 6u);
  std::ostringstream out;
  io::write_head_vector(out, t);
  EXPECT_EQ(out.str(), "2 0 2 3 2 5\n");
}

TEST(HeadVectorTest, Rejects) {
  std::istringstream two_roots("0 0\n");
  EXPECT_THROW(io::read_head_vector(two_roots), io::parse_error);
  std::istringstream two_lines("0 1\n1\n");
  EXPECT_THROW(io::read_head_vector(two_lines), io::parse_error);
  std::istringstream cycle("2 3 1 0\n");
  EXPECT_THROW(io::read_head_vector(cycle), io::parse_error);
}

TEST(ArrangementFileTest, ReadsSolveOutput) {
  const auto t = testing::sep6_tree();
  const auto arr = arrange_optimal_planar(t);
  std::ostringstream out;
  io::write_positions(out, arr);
  out << "D=6\n";
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_arrangement(in, 6), arr);
}

TEST(ArrangementFileTest, RejectsNonBijections) {
  std::istringstream dup("1 1\n2 1\n3 2\n");
  EXPECT_THROW(io::read_arrangement(dup, 3), io::parse_error);
  std::istringstream missing("1 1\n2 2\n");
  EXPECT_THROW(io::read_arrangement(missing, 3), io::parse_error);
  std::istringstream twice("1 1\n1 2\n3 3\n");
  EXPECT_THROW(io::read_arrangement(twice, 3), io::parse_error);
}

TEST(EdgeListTest, WriteReadRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tree(1 + seed * 3, seed);
    std::stringstream buf;
    io::write_edge_list(buf, t);
    EXPECT_EQ(io::read_edge_list(buf).edges(), t.edges());
  }
}

TEST(SvgTest, DotsAndArcs) {
  std::ostringstream out;
  svg::render(out, testing::p3(), arrangement::identity(3));
  const auto text = out.str();
  EXPECT_EQ(count(text, "class=\"vertex\""), 3u);
  EXPECT_EQ(count(text, "class=\"arc\""), 2u);
  EXPECT_EQ(count(text, "class=\"root\""), 0u);

  std::ostringstream rooted;
  svg::render(rooted, testing::sep6_tree(), arrange_optimal_projective(root_at(testing::sep6_tree(), 1)), 1);
  EXPECT_EQ(count(rooted.str(), "class=\"root\""), 1u);
  EXPECT_EQ(count(rooted.str(), "class=\"arc\""), 5u);
}

}  // namespace
}  // namespace linarr
