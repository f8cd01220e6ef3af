/// @file
/// @brief Tests for the SVG emitters.

#include <gtest/gtest.h>

#include "tma/fixtures.h"
#include "tma/render.h"

namespace tma {
namespace {

DiagramDocument sample(std::string mapping) {
  DiagramDocument doc;
  doc.mapping = std::move(mapping);
  doc.label = "s<1>";
  doc.diagrams = {{0, {{0, 1}, {0, kUnbounded}}}, {1, {{1, 1.5}}}};
  return doc;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(RenderTest, BarcodeColorsFollowMappingKind) {
  EXPECT_EQ(barcode_color("I"), kTimeColor);
  EXPECT_EQ(barcode_color("II"), kTimeColor);
  for (const char* m : {"III", "IV", "V", "VI"}) EXPECT_EQ(barcode_color(m), kPitchColor);
  const std::string teal = barcode_svg(sample("I"));
  EXPECT_EQ(count(teal, "fill=\"#008080\""), 3u);
  EXPECT_EQ(count(barcode_svg(sample("IV")), std::string("fill=\"") + std::string(kPitchColor) + "\""), 3u);
}

TEST(RenderTest, StandaloneAndEscaped) {
  for (const std::string& svg : {barcode_svg(sample("II")), persistence_diagram_svg(sample("II"))}) {
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("<!-- tma "), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(svg.find("href"), std::string::npos);
    EXPECT_EQ(svg.find("<script"), std::string::npos);
    EXPECT_NE(svg.find("s&lt;1&gt;"), std::string::npos);
  }
}

TEST(RenderTest, BettiTraceAndDendrogram) {
  const ComplexSequence seq = cumulative_sequence(luna_fragment().chords());
  const std::string trace = betti_trace_svg(seq, "luna");
  EXPECT_NE(trace.find("betti-trace"), std::string::npos);
  EXPECT_EQ(trace, betti_trace_svg(seq, "luna"));
  const DistanceMatrix d = {{0, 1, 4}, {1, 0, 3}, {4, 3, 0}};
  const std::string tree = dendrogram_svg(agglomerate(d, Linkage::kSingle, {"a", "b", "c"}), "t");
  EXPECT_NE(tree.find("bottleneck distance"), std::string::npos);
  EXPECT_EQ(count(tree, "<line"), 2u * 3u + 6u);  // three per merge, plus the axis
}

}  // namespace
}  // namespace tma
