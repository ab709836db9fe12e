#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tropcomm/errors.hpp"
#include "tropcomm/polytrope.hpp"

namespace tropcomm {

PlanePoint to_plane(const TropVector& x) {
  if (x.size() != 3) throw UnsupportedSize("plane chart needs points of TP^2");
  return {Rational(x[1].value() - x[0].value()), Rational(x[2].value() - x[0].value())};
}

std::vector<PlanePoint> tropical_segment(const TropVector& p, const TropVector& q) {
  std::vector<Rational> breaks;
  for (std::size_t i = 0; i < p.size(); ++i) breaks.emplace_back(q[i].value() - p[i].value());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<PlanePoint> path;
  for (const auto& lambda : breaks) {
    std::vector<TropScalar> point(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      point[i] = oplus(TropScalar(Rational(lambda + p[i].value())), q[i]);
    }
    PlanePoint pp = to_plane(TropVector(std::move(point)));
    if (path.empty() || !(path.back() == pp)) path.push_back(std::move(pp));
  }
  return path;
}

namespace {

// a*u + b*v <= c
struct HalfPlane {
  Rational a, b, c;
};

std::vector<HalfPlane> half_planes(std::span<const TropMatrix> matrices) {
  // x = (0, u, v): coordinate i contributes (du, dv)
  static const std::array<std::array<int, 2>, 3> coord{{{0, 0}, {1, 0}, {0, 1}}};
  std::vector<HalfPlane> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      TropScalar bound;
      for (const auto& m : matrices) bound = oplus(bound, m(i, j));
      if (bound.is_infinite()) continue;
      out.push_back({Rational(coord[i][0] - coord[j][0]), Rational(coord[i][1] - coord[j][1]),
                     bound.value()});
    }
  return out;
}

void require_plane_input(std::span<const TropMatrix> matrices) {
  if (matrices.empty()) throw UnsupportedSize("no matrices to draw");
  for (const auto& m : matrices) {
    if (m.size() != 3) throw UnsupportedSize("only 3x3 matrices can be drawn in TP^2");
    if (!m.all_finite()) throw UnsupportedSize("only finite matrices can be drawn");
  }
}

}  // namespace

std::vector<PlanePoint> image_intersection_polygon(std::span<const TropMatrix> matrices) {
  require_plane_input(matrices);
  const auto planes = half_planes(matrices);
  std::vector<PlanePoint> pts;
  for (std::size_t s = 0; s < planes.size(); ++s)
    for (std::size_t t = s + 1; t < planes.size(); ++t) {
      const auto& p = planes[s];
      const auto& q = planes[t];
      Rational det = p.a * q.b - p.b * q.a;
      if (det == 0) continue;
      PlanePoint x{Rational((p.c * q.b - p.b * q.c) / det), Rational((p.a * q.c - p.c * q.a) / det)};
      bool inside = std::all_of(planes.begin(), planes.end(),
                                [&](const HalfPlane& h) { return h.a * x.u + h.b * x.v <= h.c; });
      if (inside && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(std::move(x));
    }
  if (pts.size() < 3) return pts;

  // the region is convex; order by angle around the lowest-leftmost point
  auto pivot_it = std::min_element(pts.begin(), pts.end(), [](const PlanePoint& l, const PlanePoint& r) {
    return l.v < r.v || (l.v == r.v && l.u < r.u);
  });
  std::iter_swap(pts.begin(), pivot_it);
  const PlanePoint pivot = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const PlanePoint& l, const PlanePoint& r) {
    Rational cross = (l.u - pivot.u) * (r.v - pivot.v) - (l.v - pivot.v) * (r.u - pivot.u);
    if (cross != 0) return cross > 0;
    Rational dl = abs(l.u - pivot.u) + abs(l.v - pivot.v);
    Rational dr = abs(r.u - pivot.u) + abs(r.v - pivot.v);
    return dl < dr;
  });
  return pts;
}

namespace {

const std::array<const char*, 4> kColours{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Viewport {
  double min_u, max_u, min_v, max_v;
  double scale;
  static constexpr double kSize = 480.0;

  double x(const Rational& u) const { return (u.get_d() - min_u) * scale; }
  double y(const Rational& v) const { return (max_v - v.get_d()) * scale; }
};

std::string num(double d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << d;
  return s.str();
}

}  // namespace

void render_polytrope_svg(std::span<const TropMatrix> matrices, std::ostream& out) {
  require_plane_input(matrices);

  std::vector<std::vector<PlanePoint>> columns;
  std::vector<std::vector<std::vector<PlanePoint>>> hulls;
  std::vector<std::vector<PlanePoint>> images;
  std::vector<PlanePoint> all;
  for (const auto& m : matrices) {
    std::vector<PlanePoint> cols;
    for (const auto& v : image_vertices(m)) cols.push_back(to_plane(v));
    std::vector<std::vector<PlanePoint>> segs;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) segs.push_back(tropical_segment(m.column(i), m.column(j)));
    const TropMatrix single[] = {m};
    images.push_back(image_intersection_polygon(single));
    all.insert(all.end(), cols.begin(), cols.end());
    for (const auto& s : segs) all.insert(all.end(), s.begin(), s.end());
    all.insert(all.end(), images.back().begin(), images.back().end());
    columns.push_back(std::move(cols));
    hulls.push_back(std::move(segs));
  }
  const auto common = image_intersection_polygon(matrices);

  Viewport vp{all.front().u.get_d(), all.front().u.get_d(), all.front().v.get_d(), all.front().v.get_d(), 1.0};
  for (const auto& p : all) {
    vp.min_u = std::min(vp.min_u, p.u.get_d());
    vp.max_u = std::max(vp.max_u, p.u.get_d());
    vp.min_v = std::min(vp.min_v, p.v.get_d());
    vp.max_v = std::max(vp.max_v, p.v.get_d());
  }
  const double span = std::max({vp.max_u - vp.min_u, vp.max_v - vp.min_v, 1e-9});
  const double margin = 0.1 * span;
  vp.min_u -= margin;
  vp.max_u += margin;
  vp.min_v -= margin;
  vp.max_v += margin;
  vp.scale = Viewport::kSize / (span + 2 * margin);
  const double width = (vp.max_u - vp.min_u) * vp.scale;
  const double height = (vp.max_v - vp.min_v) * vp.scale;

  auto points_attr = [&](const std::vector<PlanePoint>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + num(vp.x(p.u)) + "," + num(vp.y(p.v));
    return s;
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<desc>Images in TP^2, chart (x2-x1, x3-x1)</desc>\n";
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const char* colour = kColours[k % kColours.size()];
    const char* dash = k % 2 ? " stroke-dasharray=\"6,3\"" : "";
    out << "<g id=\"matrix" << k + 1 << "\">\n";
    if (images[k].size() >= 3) {
      out << "<polygon class=\"image\" points=\"" << points_attr(images[k]) << "\" fill=\"" << colour
          << "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
    }
    for (const auto& seg : hulls[k]) {
      out << "<polyline class=\"hull\" points=\"" << points_attr(seg) << "\" fill=\"none\" stroke=\"" << colour
          << "\" stroke-width=\"2\"" << dash << "/>\n";
    }
    for (const auto& p : columns[k]) {
      out << "<circle class=\"vertex\" cx=\"" << num(vp.x(p.u)) << "\" cy=\"" << num(vp.y(p.v))
          << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (matrices.size() > 1 && common.size() >= 3) {
    out << "<polygon class=\"intersection\" points=\"" << points_attr(common)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
}

void render_polytrope_svg(std::span<const TropMatrix> matrices, const std::string& path) {
  std::ostringstream buffer;
  render_polytrope_svg(matrices, buffer);
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  file << buffer.str();
  if (!file) throw Error("failed writing " + path);
}

}  // namespace tropcomm
