#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpb/diagram.hpp"
#include "fpb/render.hpp"

using namespace fpb;

namespace {

RenderSpec spec_for(std::initializer_list<int> letters) {
  RenderSpec s;
  s.word = BasketWord::validate(letters);
  return s;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, SingleBand) {
  const auto r = render_svg(spec_for({1, 1}));
  EXPECT_EQ(r.arcs, 1);
  EXPECT_EQ(r.breaks, 0);
  EXPECT_EQ(count(r.svg, "<path"), 2);
}

TEST(Render, TrefoilBreaks) {
  const auto r = render_svg(spec_for({1, 2, 3, 4, 1, 2, 3, 4}));
  EXPECT_EQ(r.arcs, 4);
  EXPECT_EQ(r.breaks, 24);
}

TEST(Render, BreaksMatchCrossings) {
  for (auto letters : {std::vector<int>{1, 2, 1, 2}, std::vector<int>{1, 2, 3, 4, 4, 3, 2, 1},
                       std::vector<int>{1, 3, 2, 4, 3, 1, 4, 2}, std::vector<int>{1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6}}) {
    RenderSpec s;
    s.word = BasketWord::validate(letters);
    EXPECT_EQ(static_cast<std::size_t>(render_svg(s).breaks), to_planar_diagram(s.word).crossings.size());
  }
}

TEST(Render, EmptyWordIsDiscOnly) {
  const auto r = render_svg(spec_for({}));
  EXPECT_EQ(r.arcs, 0);
  EXPECT_EQ(count(r.svg, "<rect"), 1);
  EXPECT_EQ(count(r.svg, "<path"), 0);
}

TEST(Render, Deterministic) {
  auto s = spec_for({1, 3, 2, 4, 1, 3, 4, 2});
  EXPECT_EQ(render_svg(s).svg, render_svg(s).svg);
  s.show_band_numbers = false;
  s.show_disc_label = false;
  EXPECT_EQ(count(render_svg(s).svg, "<text"), 0);
}

TEST(Render, RejectsBadScale) {
  auto s = spec_for({1, 1});
  s.scale = 0;
  EXPECT_THROW(render_svg(s), std::invalid_argument);
}

TEST(Render, WritesFiles) {
  auto s = spec_for({1, 2, 1, 2});
  s.output_path = (std::filesystem::temp_directory_path() / "fpb_render_test.svg").string();
  const auto r = write_svg(s);
  std::ifstream in(s.output_path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.svg);
  std::filesystem::remove(s.output_path);

  s.output_path = "/nonexistent-dir/x.svg";
  EXPECT_THROW(write_svg(s), IoError);
}
