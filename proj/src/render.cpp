/// @file
/// @brief SVG emission.

#include "tma/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tma/io.h"

namespace tma {

namespace {

constexpr double kWidth = 640.0;
constexpr double kMargin = 48.0;

const char* const kDimensionColors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string open_svg(double width, double height, std::string_view title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<!-- tma " + std::string(kVersion) + " -->\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
       "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<title>" + escape(title) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"" + num(width / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" + escape(title) +
       "</text>\n";
  return s;
}

std::string line(double x1, double y1, double x2, double y2, std::string_view stroke, double w = 1.0,
                 std::string_view extra = {}) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
         "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(w) + "\"" + std::string(extra) + "/>\n";
}

std::string text(double x, double y, std::string_view anchor, std::string_view body) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + std::string(anchor) + "\">" +
         escape(body) + "</text>\n";
}

/// Largest finite value among births and deaths, at least 1.
double finite_extent(const DiagramDocument& doc) {
  double m = 0.0;
  for (const auto& d : doc.diagrams) {
    for (const auto& p : d.points) {
      m = std::max(m, p.birth);
      if (!p.is_infinite()) m = std::max(m, p.death);
    }
  }
  return m > 0.0 ? m : 1.0;
}

std::string horizontal_axis(double x0, double x1, double y, double max_value, std::string_view label) {
  std::string s = line(x0, y, x1, y, "#000000");
  for (int k = 0; k <= 4; ++k) {
    const double x = x0 + (x1 - x0) * k / 4.0;
    s += line(x, y, x, y + 4, "#000000");
    s += text(x, y + 16, "middle", format_double(std::round(max_value * k / 4.0 * 1000.0) / 1000.0));
  }
  s += text((x0 + x1) / 2, y + 32, "middle", label);
  return s;
}

std::string vertical_axis(double x, double y0, double y1, double max_value, std::string_view label) {
  std::string s = line(x, y0, x, y1, "#000000");
  for (int k = 0; k <= 4; ++k) {
    const double y = y0 + (y1 - y0) * k / 4.0;
    s += line(x - 4, y, x, y, "#000000");
    s += text(x - 6, y + 4, "end", format_double(std::round(max_value * k / 4.0 * 1000.0) / 1000.0));
  }
  s += "<text x=\"14\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
       num((y0 + y1) / 2) + ")\">" + escape(label) + "</text>\n";
  return s;
}

}  // namespace

std::string_view barcode_color(std::string_view mapping) {
  const auto id = parse_mapping(mapping);
  return id && mapping_has_time(*id) ? kTimeColor : kPitchColor;
}

std::string barcode_svg(const DiagramDocument& doc) {
  const std::string_view color = barcode_color(doc.mapping);
  const double extent = finite_extent(doc) * 1.1;
  constexpr double kBar = 6.0;
  constexpr double kGap = 3.0;
  constexpr double kGroupGap = 22.0;
  double height = 40.0;
  for (const auto& d : doc.diagrams) height += kGroupGap + static_cast<double>(d.points.size()) * (kBar + kGap);
  height += 50.0;
  const double x0 = kMargin + 20;
  const double x1 = kWidth - kMargin;
  auto xs = [&](double v) { return x0 + (x1 - x0) * std::min(v, extent) / extent; };

  std::string s = open_svg(kWidth, height, "barcode " + doc.mapping + " " + doc.label);
  double y = 40.0;
  for (const auto& d : doc.diagrams) {
    y += kGroupGap;
    s += text(kMargin - 10, y - 6, "start", "H" + std::to_string(d.dimension));
    for (const auto& p : d.points) {
      const double end = p.is_infinite() ? x1 : xs(p.death);
      s += "<rect x=\"" + num(xs(p.birth)) + "\" y=\"" + num(y) + "\" width=\"" + num(std::max(end - xs(p.birth), 0.5)) +
           "\" height=\"" + num(kBar) + "\" fill=\"" + std::string(color) + "\"/>\n";
      if (p.is_infinite()) s += text(x1 + 4, y + kBar, "start", "inf");
      y += kBar + kGap;
    }
  }
  s += horizontal_axis(x0, x1, y + 10, extent, "scale (" + doc.scale + ")");
  s += "</svg>\n";
  return s;
}

std::string persistence_diagram_svg(const DiagramDocument& doc) {
  const double extent = finite_extent(doc) * 1.1;
  const double size = 480.0;
  const double x0 = kMargin + 10;
  const double x1 = x0 + size - 2 * kMargin;
  const double y0 = 40.0;
  const double y1 = y0 + size - 2 * kMargin;
  const double inf_y = y0 - 8;
  auto xs = [&](double v) { return x0 + (x1 - x0) * v / extent; };
  auto ys = [&](double v) { return y1 - (y1 - y0) * v / extent; };

  std::string s = open_svg(size + 40, size + 20, "persistence diagram " + doc.mapping + " " + doc.label);
  s += line(xs(0), ys(0), xs(extent), ys(extent), "#999999", 1.0, " stroke-dasharray=\"4 3\"");
  s += line(x0, inf_y, x1, inf_y, "#cccccc");
  s += text(x1 + 4, inf_y + 4, "start", "inf");
  for (const auto& d : doc.diagrams) {
    const char* fill = kDimensionColors[static_cast<std::size_t>(d.dimension) % 6];
    for (const auto& p : d.points) {
      const double cy = p.is_infinite() ? inf_y : ys(p.death);
      s += "<circle cx=\"" + num(xs(p.birth)) + "\" cy=\"" + num(cy) + "\" r=\"3\" fill=\"" + fill +
           "\" fill-opacity=\"0.8\"/>\n";
    }
  }
  double ly = y0 + 8;
  for (const auto& d : doc.diagrams) {
    s += "<circle cx=\"" + num(x0 + 10) + "\" cy=\"" + num(ly - 4) + "\" r=\"3\" fill=\"" +
         kDimensionColors[static_cast<std::size_t>(d.dimension) % 6] + "\"/>\n";
    s += text(x0 + 18, ly, "start", "H" + std::to_string(d.dimension));
    ly += 14;
  }
  s += horizontal_axis(x0, x1, y1, extent, "birth");
  s += vertical_axis(x0, y1, y0, extent, "death");
  s += "</svg>\n";
  return s;
}

std::string betti_trace_svg(const ComplexSequence& sequence, std::string_view title) {
  const std::size_t rows = sequence.betti_table.size();
  std::size_t top = 0;
  std::size_t max_beta = 1;
  for (const BettiRow& r : sequence.betti_table) {
    for (std::size_t k = 0; k < kBettiColumns; ++k) {
      if (r[k] > 0) top = std::max(top, k);
      max_beta = std::max(max_beta, r[k]);
    }
  }
  const double panel = 70.0;
  const double height = 50.0 + static_cast<double>(top + 1) * (panel + 14) + 40;
  const double x0 = kMargin + 20;
  const double x1 = kWidth - kMargin;
  const double step = rows > 0 ? (x1 - x0) / static_cast<double>(rows) : 0.0;

  std::string s = open_svg(kWidth, height, "betti-trace " + std::string(title));
  double y = 50.0;
  for (std::size_t k = 0; k <= top; ++k) {
    const double base = y + panel;
    s += text(kMargin - 20, y + panel / 2, "start", "b" + std::to_string(k));
    s += line(x0, base, x1, base, "#000000");
    std::string path;
    for (std::size_t i = 0; i < rows; ++i) {
      const double v = static_cast<double>(sequence.betti_table[i][k]);
      const double py = base - panel * v / static_cast<double>(max_beta);
      path += (i == 0 ? "M" : "L") + num(x0 + step * static_cast<double>(i)) + " " + num(py) + " ";
      path += "L" + num(x0 + step * static_cast<double>(i + 1)) + " " + num(py) + " ";
    }
    if (!path.empty()) {
      s += "<path d=\"" + path.substr(0, path.size() - 1) + "\" fill=\"none\" stroke=\"" +
           kDimensionColors[k % 6] + "\" stroke-width=\"2\"/>\n";
    }
    y += panel + 14;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t label = i < sequence.labels.size() ? sequence.labels[i] : i;
    if (rows <= 40 || i % 5 == 0) {
      s += text(x0 + step * (static_cast<double>(i) + 0.5), y + 12, "middle", std::to_string(label));
    }
  }
  s += "</svg>\n";
  return s;
}

std::string dendrogram_svg(const Dendrogram& d, std::string_view title) {
  const std::size_t n = d.leaf_count();
  const double height = 420.0;
  const double x0 = kMargin + 30;
  const double x1 = kWidth - kMargin;
  const double y0 = 40.0;
  const double y1 = height - 90.0;
  double max_height = 0.0;
  for (const Merge& m : d.merges) {
    if (std::isfinite(m.height)) max_height = std::max(max_height, m.height);
  }
  if (max_height <= 0.0) max_height = 1.0;
  max_height *= 1.1;
  auto ys = [&](double h) { return std::isfinite(h) ? y1 - (y1 - y0) * h / max_height : y0; };

  std::vector<double> xpos(n + d.merges.size(), 0.0);
  std::vector<double> ypos(n + d.merges.size(), y1);
  const std::vector<std::size_t> order = leaf_order(d);
  const double step = n > 0 ? (x1 - x0) / static_cast<double>(n) : 0.0;
  std::string s = open_svg(kWidth, height, "dendrogram " + std::string(title) + " (" +
                                               std::string(to_string(d.linkage)) + ")");
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t leaf = order[k];
    xpos[leaf] = x0 + step * (static_cast<double>(k) + 0.5);
    s += "<text x=\"" + num(xpos[leaf]) + "\" y=\"" + num(y1 + 10) + "\" text-anchor=\"end\" transform=\"rotate(-45 " +
         num(xpos[leaf]) + " " + num(y1 + 10) + ")\">" + escape(d.leaf_labels[leaf]) + "</text>\n";
  }
  for (const Merge& m : d.merges) {
    const double ym = ys(m.height);
    s += line(xpos[m.a], ypos[m.a], xpos[m.a], ym, "#333333", 1.5);
    s += line(xpos[m.b], ypos[m.b], xpos[m.b], ym, "#333333", 1.5);
    s += line(xpos[m.a], ym, xpos[m.b], ym, "#333333", 1.5);
    xpos[m.id] = (xpos[m.a] + xpos[m.b]) / 2;
    ypos[m.id] = ym;
  }
  s += vertical_axis(x0 - 10, y1, y0, max_height, "bottleneck distance");
  s += "</svg>\n";
  return s;
}

}  // namespace tma
