#include "gcon/render.hpp"

#include <algorithm>
#include <sstream>

namespace gcon {

namespace {

struct Frame {
  int min_a = 0, max_a = 0, min_b = 0, max_b = 0;
  int cols() const { return max_a - min_a + 1; }
  int rows() const { return max_b - min_b + 1; }
};

Frame frame_of(const std::vector<Monomial>& boxes) {
  Frame f{boxes.front().a, boxes.front().a, boxes.front().b, boxes.front().b};
  for (const Monomial& m : boxes) {
    f.min_a = std::min(f.min_a, m.a);
    f.max_a = std::max(f.max_a, m.a);
    f.min_b = std::min(f.min_b, m.b);
    f.max_b = std::max(f.max_b, m.b);
  }
  return f;
}

}  // namespace

std::string render_ascii(const RealizedStair& rs) {
  const std::vector<Monomial> boxes = rs.boxes();
  const Frame f = frame_of(boxes);
  const GroupOrder k = rs.stair().order();
  const std::size_t label = std::to_string(k.value() - 1).size();
  const std::size_t cell = label + 2;

  std::vector<std::string> grid(f.rows(), std::string(cell * f.cols(), ' '));
  for (const Monomial& m : boxes) {
    std::string text = std::to_string(m.irrep(k).index);
    text = "[" + std::string(label - text.size(), ' ') + text + "]";
    grid[f.max_b - m.b].replace(cell * (m.a - f.min_a), cell, text);
  }
  std::string out;
  for (std::string& row : grid) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const RealizedStair& rs) {
  const std::vector<Monomial> boxes = rs.boxes();
  const Frame f = frame_of(boxes);
  const GroupOrder k = rs.stair().order();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << f.cols() << ' ' << f.rows()
      << "\" width=\"" << 40 * f.cols() << "\" height=\"" << 40 * f.rows() << "\">\n";
  for (const Monomial& m : boxes) {
    const int x = m.a - f.min_a;
    const int y = f.max_b - m.b;
    out << "  <rect x=\"" << x << "\" y=\"" << y
        << "\" width=\"1\" height=\"1\" fill=\"white\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
    out << "  <text x=\"" << x << ".5\" y=\"" << y
        << ".5\" font-size=\"0.45\" text-anchor=\"middle\" dominant-baseline=\"central\">"
        << m.irrep(k).index << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::optional<RealizedStair> figure_of(const Document& doc) {
  if (auto* s = std::get_if<Stair>(&doc)) return realize(*s);
  if (auto* r = std::get_if<RealizedStair>(&doc)) return *r;
  if (auto* ch = std::get_if<Chamber>(&doc)) return ch->realized_chamber_stair();
  return std::nullopt;
}

}  // namespace gcon
