#include <algorithm>
#include <map>
#include <sstream>

#include "behrend/commands.hpp"

namespace behrend {

namespace {

std::string node_ideal(const DynkinNode& n) {
  return factor_label(n.branch, n.key, Int(n.level));
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char* kSvgHeader = "<svg xmlns=\"http://www.w3.org/2000/svg\" ";

}  // namespace

std::string to_dot(const DynkinDiagram& D) {
  std::ostringstream out;
  out << "graph dynkin {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  std::map<std::size_t, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < D.nodes.size(); ++i) levels[D.nodes[i].level].push_back(i);
  for (const auto& [level, ids] : levels) {
    out << "  { rank=same;";
    for (auto i : ids) out << " n" << i << ";";
    out << " }  // level " << level << "\n";
  }
  for (std::size_t i = 0; i < D.nodes.size(); ++i) {
    const auto& n = D.nodes[i];
    out << "  n" << i << " [label=\"" << escape_dot(node_ideal(n)) << "\\nself-int "
        << n.self_intersection << "\\nmult " << n.multiplicity << "\\n"
        << (n.surviving ? "surviving" : "contracted") << "\"";
    if (!n.surviving) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& [a, b] : D.edges()) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string ferrers_grid(const FerrersDiagram& F) {
  std::size_t rows = 0;
  for (const auto& h : F.column_heights) rows = std::max(rows, to_index(h, "Ferrers height"));
  std::string out;
  for (std::size_t r = rows; r-- > 0;) {
    std::string line;
    for (const auto& h : F.column_heights) line += Int(r) < h ? "[]" : "  ";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string ferrers_svg(const FerrersDiagram& F) {
  const int cell = 24, pad = 10;
  std::size_t rows = 0;
  for (const auto& h : F.column_heights) rows = std::max(rows, to_index(h, "Ferrers height"));
  const std::size_t cols = F.column_heights.size();
  const std::size_t w = cols * cell + 2 * pad, h = rows * cell + 2 * pad;
  std::ostringstream out;
  out << kSvgHeader << "width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " "
      << h << "\">\n";
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t height = to_index(F.column_heights[c], "Ferrers height");
    for (std::size_t r = 0; r < height; ++r) {
      out << "  <rect x=\"" << pad + c * cell << "\" y=\"" << pad + (rows - 1 - r) * cell
          << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"#dde6f0\" stroke=\"#223\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string fan_svg(const Fan& F) {
  const int size = 320, pad = 20;
  const int span = size - 2 * pad;
  std::ostringstream out;
  out << kSvgHeader << "width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size
      << " " << size << "\">\n";
  for (const auto& r : F.rays) {
    // direction only: scale the ray to the picture
    double x = r.x.convert_to<double>(), y = r.y.convert_to<double>();
    double m = std::max(x, y);
    double ex = pad + span * x / m, ey = size - pad - span * y / m;
    out << "  <line x1=\"" << pad << "\" y1=\"" << size - pad << "\" x2=\"" << ex << "\" y2=\""
        << ey << "\" stroke=\"#223\"/>\n";
    out << "  <text x=\"" << ex << "\" y=\"" << ey << "\" font-size=\"11\">(" << r.x << ","
        << r.y << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string dynkin_svg(const DynkinDiagram& D) {
  const int dx = 150, dy = 70, pad = 50;
  std::map<std::size_t, std::size_t> seen;  // nodes placed per level
  std::vector<std::pair<int, int>> pos(D.nodes.size());
  std::size_t max_level = 1, max_row = 1;
  for (std::size_t i = 0; i < D.nodes.size(); ++i) {
    const auto level = D.nodes[i].level;
    const auto row = seen[level]++;
    pos[i] = {pad + static_cast<int>(level - 1) * dx, pad + static_cast<int>(row) * dy};
    max_level = std::max(max_level, level);
    max_row = std::max(max_row, row + 1);
  }
  const int w = 2 * pad + static_cast<int>(max_level - 1) * dx + 100;
  const int h = 2 * pad + static_cast<int>(max_row - 1) * dy;
  std::ostringstream out;
  out << kSvgHeader << "width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " "
      << h << "\">\n";
  for (const auto& [a, b] : D.edges()) {
    out << "  <line x1=\"" << pos[a].first << "\" y1=\"" << pos[a].second << "\" x2=\""
        << pos[b].first << "\" y2=\"" << pos[b].second << "\" stroke=\"#223\"/>\n";
  }
  for (std::size_t i = 0; i < D.nodes.size(); ++i) {
    const auto& n = D.nodes[i];
    out << "  <circle cx=\"" << pos[i].first << "\" cy=\"" << pos[i].second
        << "\" r=\"9\" fill=\"" << (n.surviving ? "#223" : "#fff") << "\" stroke=\"#223\"/>\n";
    out << "  <text x=\"" << pos[i].first - 30 << "\" y=\"" << pos[i].second - 14
        << "\" font-size=\"11\">" << escape_xml(node_ideal(n)) << "  " << n.self_intersection
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace behrend
