#include "toratlas/render.hpp"

#include <cmath>
#include <cstdio>

#include "toratlas/extend.hpp"

namespace toratlas {

namespace {

// Fixed one-decimal formatting keeps the output byte-identical across runs.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x + 0.0);  // normalize -0.0
  return buf;
}

const char* fill_for(int face_index) {
  static const char* palette[] = {"#dbeafe", "#dcfce7", "#fef9c3",
                                  "#fde2e2", "#ede9fe", "#d1f5f0"};
  return palette[face_index % 6];
}

struct Block {
  std::string body;
  double width = 0, height = 0;
};

Block render_block(const RotationMap& m, const std::string& caption, double y0) {
  auto polys = polygon_decomposition(m);
  int count = static_cast<int>(polys.size());
  double rmax = 24;
  for (const auto& p : polys) rmax = std::max(rmax, 12.0 + 5.0 * p.size());
  double cell = 2 * rmax + 44;
  int cols = count == 0 ? 1 : std::min(count, 4);
  int rows = count == 0 ? 0 : (count + cols - 1) / cols;

  Block b;
  b.width = cols * cell + 20;
  double top = y0 + (caption.empty() ? 8 : 28);
  b.height = (top - y0) + rows * cell + 12;
  if (!caption.empty())
    b.body += "<text x=\"12\" y=\"" + num(y0 + 18) +
              "\" font-size=\"14\" font-family=\"monospace\">" + caption + "</text>\n";

  const double pi = 3.14159265358979323846;
  for (int i = 0; i < count; ++i) {
    const auto& verts = polys[i];
    int len = static_cast<int>(verts.size());
    double r = 12.0 + 5.0 * len;
    double cx = (i % cols) * cell + cell / 2 + 10;
    double cy = top + (i / cols) * cell + cell / 2;
    std::string points;
    for (int k = 0; k < len; ++k) {
      double ang = -pi / 2 + 2 * pi * k / len;
      if (!points.empty()) points += " ";
      points += num(cx + r * std::cos(ang)) + "," + num(cy + r * std::sin(ang));
    }
    b.body += "<polygon points=\"" + points + "\" fill=\"" + fill_for(i) +
              "\" stroke=\"#334\" stroke-width=\"1.0\"/>\n";
    for (int k = 0; k < len; ++k) {
      double ang = -pi / 2 + 2 * pi * k / len;
      double lx = cx + (r + 13) * std::cos(ang);
      double ly = cy + (r + 13) * std::sin(ang) + 4;
      b.body += "<text x=\"" + num(lx) + "\" y=\"" + num(ly) +
                "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">" +
                m.graph.label_of(verts[k]) + "</text>\n";
    }
    b.body += "<text x=\"" + num(cx) + "\" y=\"" + num(cy + 4) +
              "\" font-size=\"10\" font-family=\"monospace\" text-anchor=\"middle\" "
              "fill=\"#667\">f" +
              std::to_string(i) + "</text>\n";
  }
  return b;
}

}  // namespace

std::string maps_to_svg(const std::vector<RotationMap>& maps,
                        const std::vector<std::string>& captions) {
  double width = 160, y = 10;
  std::string body;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::string caption = i < captions.size() ? captions[i] : "";
    Block b = render_block(maps[i], caption, y);
    body += b.body;
    width = std::max(width, b.width);
    y += b.height;
  }
  double height = y + 10;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#ffffff\"/>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

std::string map_to_svg(const RotationMap& m) { return maps_to_svg({m}, {}); }

}  // namespace toratlas
