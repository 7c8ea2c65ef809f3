#include <cstdio>
#include <numeric>
#include <sstream>

#include "trigrid/diagram.hpp"
#include "trigrid/error.hpp"

namespace trigrid {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

enum class Format { kSvg, kAscii };

Format parse_format(std::string_view f) {
  if (f == "svg") return Format::kSvg;
  if (f == "ascii") return Format::kAscii;
  throw UsageError("unknown render format '" + std::string(f) + "' (expected svg or ascii)");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double sx(double x) { return kMargin + x * kSize; }
double sy(double y) { return kMargin + (1.0 - y) * kSize; }

std::string stroke(Color c) {
  switch (c) {
    case Color::kRed: return "#d62728";
    case Color::kBlue: return "#1f77b4";
    default: return "#2ca02c";
  }
}

char symbol(VertexId v) {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  return v < 36 ? kDigits[v] : '#';
}

void svg_open(std::ostringstream& out) {
  const std::string total = num(kSize + 2 * kMargin);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total << "\" height=\"" << total
      << "\" viewBox=\"0 0 " << total << " " << total << "\">\n"
      << "<defs><clipPath id=\"torus\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
      << num(kSize) << "\" height=\"" << num(kSize) << "\"/></clipPath></defs>\n"
      << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSize) << "\" height=\""
      << num(kSize) << "\" fill=\"white\" stroke=\"black\"/>\n";
}

void svg_point(std::ostringstream& out, double x, double y, VertexId v) {
  out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"5\" fill=\"black\"/>\n"
      << "<text x=\"" << num(sx(x) + 6) << "\" y=\"" << num(sy(y) - 6) << "\" font-size=\"10\">" << v << "</text>\n";
}

// The line x + y = s (mod 1) inside the unit square.
std::string antidiagonal(double s) {
  if (s == 0.0) return "M " + num(sx(1)) + " " + num(sy(0)) + " L " + num(sx(0)) + " " + num(sy(1));
  return "M " + num(sx(s)) + " " + num(sy(0)) + " L " + num(sx(0)) + " " + num(sy(s)) + " M " + num(sx(1)) + " " +
         num(sy(s)) + " L " + num(sx(s)) + " " + num(sy(1));
}

std::string ascii_grid(const CombinatorialDiagram& d) {
  std::vector<std::string> slots(d.n * d.n, "..");
  for (VertexId v = 0; v < d.cells.size(); ++v) {
    const Cell& c = d.cells[v];
    slots[c.row * d.n + c.col][c.triangle == Triangle::kLower ? 0 : 1] = symbol(v);
  }
  std::ostringstream out;
  out << "n = " << d.n << " (cell: lower upper)\n";
  for (std::size_t r = d.n; r-- > 0;) {
    char label[16];
    std::snprintf(label, sizeof label, "%3zu |", r);
    out << label;
    for (std::size_t c = 0; c < d.n; ++c) out << ' ' << slots[r * d.n + c];
    out << '\n';
  }
  out << "    +";
  for (std::size_t c = 0; c < d.n; ++c) out << "---";
  out << "\n     ";
  for (std::size_t c = 0; c < d.n; ++c) {
    char label[8];
    std::snprintf(label, sizeof label, "%3zu", c % 1000);
    out << label;
  }
  out << '\n';
  return out.str();
}

// Shortest displacement from p to q along the c-line through p.
std::array<Rational, 2> along_line(const IntPair& n, const Point& p, const Point& q) {
  const Integer nx = static_cast<long>(n[0]), ny = static_cast<long>(n[1]);
  Rational dx = q[0] - p[0], dy = q[1] - p[1];
  const Rational m = dx * nx + dy * ny;  // an integer on an edge
  // u with <n, u> = 1.
  Integer g, ux, uy;
  mpz_gcdext(g.get_mpz_t(), ux.get_mpz_t(), uy.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  dx -= m * ux;
  dy -= m * uy;
  const Integer tx = -ny, ty = nx;
  Rational lambda = (dx * tx + dy * ty) / Rational(tx * tx + ty * ty);
  const Integer shift = floor(lambda + Rational(1, 2));
  dx -= shift * tx;
  dy -= shift * ty;
  return {dx, dy};
}

}  // namespace

std::string render(const CombinatorialDiagram& d, std::string_view format) {
  if (parse_format(format) == Format::kAscii) return ascii_grid(d);
  std::ostringstream out;
  svg_open(out);
  const double step = 1.0 / static_cast<double>(d.n);
  for (std::size_t k = 0; k < d.n; ++k) {
    const double s = static_cast<double>(k) * step;
    out << "<path class=\"red\" d=\"M " << num(sx(s)) << " " << num(sy(0)) << " L " << num(sx(s)) << " "
        << num(sy(1)) << "\" stroke=\"" << stroke(Color::kRed) << "\"/>\n";
    out << "<path class=\"blue\" d=\"M " << num(sx(0)) << " " << num(sy(s)) << " L " << num(sx(1)) << " "
        << num(sy(s)) << "\" stroke=\"" << stroke(Color::kBlue) << "\"/>\n";
    out << "<path class=\"green\" d=\"" << antidiagonal(s) << "\" stroke=\"" << stroke(Color::kGreen) << "\"/>\n";
  }
  for (VertexId v = 0; v < d.cells.size(); ++v) {
    const Cell& c = d.cells[v];
    const double off = c.triangle == Triangle::kLower ? 1.0 / 3.0 : 2.0 / 3.0;
    svg_point(out, (static_cast<double>(c.col) + off) * step, (static_cast<double>(c.row) + off) * step, v);
  }
  out << "</svg>\n";
  return out.str();
}

std::string render(const GeometricDiagram& d, std::string_view format) {
  if (parse_format(format) == Format::kAscii) {
    if (!d.slopes.is_standard())
      throw DomainError("nonstandard_slopes", "ascii rendering needs the standard slope system");
    return ascii_grid(snap(d));
  }
  std::ostringstream out;
  svg_open(out);
  out << "<g clip-path=\"url(#torus)\">\n";
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
    const Edge& edge = d.graph.edge(e);
    const Point& p = d.points[edge.tail];
    const Point& q = d.points[edge.head];
    const auto delta = along_line(d.slopes.normal(edge.color), p, q);
    const double px = p[0].get_d(), py = p[1].get_d(), qx = q[0].get_d(), qy = q[1].get_d();
    const double dx = delta[0].get_d(), dy = delta[1].get_d();
    out << "<path class=\"" << color_name(edge.color) << "\" d=\"M " << num(sx(px)) << " " << num(sy(py)) << " L "
        << num(sx(px + dx)) << " " << num(sy(py + dy)) << " M " << num(sx(qx - dx)) << " " << num(sy(qy - dy))
        << " L " << num(sx(qx)) << " " << num(sy(qy)) << "\" stroke=\"" << stroke(edge.color)
        << "\" stroke-width=\"2\"/>\n";
  }
  out << "</g>\n";
  for (VertexId v = 0; v < d.points.size(); ++v) svg_point(out, d.points[v][0].get_d(), d.points[v][1].get_d(), v);
  out << "</svg>\n";
  return out.str();
}

}  // namespace trigrid
