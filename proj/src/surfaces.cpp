#include "gyrostab/surfaces.hpp"

#include "gyrostab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace gyrostab {

double GridSpec::coordinate(std::size_t axis, int i) const {
  const GridAxis& ax = axes.at(axis);
  const double t = static_cast<double>(i) / (ax.count - 1);
  return ax.min * (1.0 - t) + ax.max * t;
}

std::size_t GridSpec::point_count() const {
  std::size_t n = 1;
  for (const auto& ax : axes) n *= static_cast<std::size_t>(ax.count);
  return n;
}

void GridSpec::validate() const {
  if (axes.empty() || axes.size() > 3)
    throw ConfigError("sweep requires between 1 and 3 swept axes, got " +
                      std::to_string(axes.size()));
  const ModelInfo& model = find_model(this->model);
  ParamMap probe = fixed;
  for (const auto& ax : axes) {
    if (ax.count < 2)
      throw ConfigError("axis '" + ax.name + "' needs at least 2 points");
    if (!(ax.min < ax.max))
      throw ConfigError("axis '" + ax.name + "' needs min < max");
    if (probe.count(ax.name))
      throw ConfigError("axis '" + ax.name + "' duplicates a fixed or swept parameter");
    probe[ax.name] = ax.min;
  }
  validate_params(model, probe);
}

const std::vector<double>& SweepResult::channel(const std::string& name) const {
  for (std::size_t i = 0; i < channel_names.size(); ++i)
    if (channel_names[i] == name) return channels[i];
  throw ConfigError("unknown channel '" + name + "'");
}

SweepResult sweep(const GridSpec& spec, const Tolerances& tol) {
  spec.validate();
  const ModelInfo& model = find_model(spec.model);

  SweepResult result;
  result.spec = spec;
  const std::size_t total = spec.point_count();
  result.verdicts.resize(total);

  // Channel layout from the first grid point; identical at every point.
  {
    ParamMap first = spec.fixed;
    for (std::size_t a = 0; a < spec.axes.size(); ++a)
      first[spec.axes[a].name] = spec.coordinate(a, 0);
    result.channel_names.push_back("max_real_part");
    for (const auto& [name, value] : model.margins(first))
      result.channel_names.push_back(name);
  }
  result.channels.assign(result.channel_names.size(), {});
  for (auto& ch : result.channels) ch.resize(total);

  std::vector<int> index(spec.axes.size(), 0);
  ParamMap point = spec.fixed;
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < spec.axes.size(); ++a)
      point[spec.axes[a].name] = spec.coordinate(a, index[a]);

    const SystemMatrices sys = model.build(point);
    const StabilityVerdict verdict = classify(sys, tol);
    result.verdicts[flat] = verdict_code(verdict.cls);
    result.channels[0][flat] = verdict.max_real_part;
    const auto margins = model.margins(point);
    for (std::size_t m = 0; m < margins.size(); ++m)
      result.channels[m + 1][flat] = margins[m].second;

    // Row-major increment, last declared axis fastest.
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      if (++index[a] < spec.axes[a].count) break;
      index[a] = 0;
    }
  }
  return result;
}

namespace {

struct SegmentEnd {
  std::int64_t edge;
  std::array<double, 2> vertex;
};

// Vertex on the grid edge between nodes a and b (values of opposite sign),
// linearly interpolated. Both cells sharing the edge compute the identical
// vertex.
SegmentEnd edge_vertex(std::int64_t node_a, std::int64_t node_b, double va, double vb,
                       const std::array<double, 2>& pa, const std::array<double, 2>& pb) {
  const double t = va / (va - vb);
  SegmentEnd e;
  e.edge = (std::min(node_a, node_b) << 32) | std::max(node_a, node_b);
  e.vertex = {pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])};
  return e;
}

}  // namespace

ContourSet contour_grid(const std::vector<double>& values, const GridAxis& x,
                        const GridAxis& y, const std::string& channel_name,
                        const std::function<double(double, double)>& center_eval) {
  const int nx = x.count, ny = y.count;
  auto val = [&](int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; };
  auto coord_x = [&](int i) {
    const double t = static_cast<double>(i) / (nx - 1);
    return x.min * (1.0 - t) + x.max * t;
  };
  auto coord_y = [&](int j) {
    const double t = static_cast<double>(j) / (ny - 1);
    return y.min * (1.0 - t) + y.max * t;
  };
  auto node = [&](int i, int j) { return static_cast<std::int64_t>(i) * ny + j; };

  std::vector<std::pair<SegmentEnd, SegmentEnd>> segments;
  for (int i = 0; i + 1 < nx; ++i) {
    for (int j = 0; j + 1 < ny; ++j) {
      const double v00 = val(i, j), v10 = val(i + 1, j);
      const double v01 = val(i, j + 1), v11 = val(i + 1, j + 1);
      const int code = (v00 < 0.0 ? 1 : 0) | (v10 < 0.0 ? 2 : 0) |
                       (v11 < 0.0 ? 4 : 0) | (v01 < 0.0 ? 8 : 0);
      if (code == 0 || code == 15) continue;

      const std::array<double, 2> p00{coord_x(i), coord_y(j)};
      const std::array<double, 2> p10{coord_x(i + 1), coord_y(j)};
      const std::array<double, 2> p01{coord_x(i), coord_y(j + 1)};
      const std::array<double, 2> p11{coord_x(i + 1), coord_y(j + 1)};

      auto bottom = [&] { return edge_vertex(node(i, j), node(i + 1, j), v00, v10, p00, p10); };
      auto top = [&] { return edge_vertex(node(i, j + 1), node(i + 1, j + 1), v01, v11, p01, p11); };
      auto left = [&] { return edge_vertex(node(i, j), node(i, j + 1), v00, v01, p00, p01); };
      auto right = [&] { return edge_vertex(node(i + 1, j), node(i + 1, j + 1), v10, v11, p10, p11); };

      switch (code) {
        case 1: case 14: segments.emplace_back(left(), bottom()); break;
        case 2: case 13: segments.emplace_back(bottom(), right()); break;
        case 3: case 12: segments.emplace_back(left(), right()); break;
        case 4: case 11: segments.emplace_back(right(), top()); break;
        case 6: case 9: segments.emplace_back(bottom(), top()); break;
        case 7: case 8: segments.emplace_back(left(), top()); break;
        case 5: case 10: {
          // Saddle cell: the true field at the cell center decides which
          // diagonal pair of corners stays connected.
          double center;
          if (center_eval) {
            center = center_eval(0.5 * (p00[0] + p11[0]), 0.5 * (p00[1] + p11[1]));
          } else {
            center = 0.25 * (v00 + v10 + v01 + v11);
          }
          const bool center_inside = center < 0.0;
          if ((code == 5) == center_inside) {
            segments.emplace_back(bottom(), right());
            segments.emplace_back(left(), top());
          } else {
            segments.emplace_back(left(), bottom());
            segments.emplace_back(right(), top());
          }
          break;
        }
        default: break;
      }
    }
  }

  // Stitch segments into polylines; shared edge keys glue neighbours.
  std::map<std::int64_t, std::vector<std::size_t>> by_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge[segments[s].first.edge].push_back(s);
    by_edge[segments[s].second.edge].push_back(s);
  }

  ContourSet out;
  std::vector<bool> used(segments.size(), false);
  auto walk = [&](std::size_t start, std::int64_t start_edge) {
    Polyline line;
    line.channel = channel_name;
    std::size_t seg = start;
    std::int64_t entry = start_edge;
    const SegmentEnd& first_end = (segments[start].first.edge == start_edge)
                                      ? segments[start].first
                                      : segments[start].second;
    line.points.push_back(first_end.vertex);
    while (true) {
      used[seg] = true;
      const SegmentEnd& exit_end = (segments[seg].first.edge == entry)
                                       ? segments[seg].second
                                       : segments[seg].first;
      line.points.push_back(exit_end.vertex);
      const auto& candidates = by_edge[exit_end.edge];
      std::size_t next = seg;
      for (std::size_t c : candidates)
        if (!used[c]) next = c;
      if (next == seg) break;
      entry = exit_end.edge;
      seg = next;
    }
    out.lines.push_back(std::move(line));
  };

  // Open chains first (edges referenced by exactly one segment), then loops.
  for (const auto& [edge, segs] : by_edge) {
    if (segs.size() != 1) continue;
    if (!used[segs.front()]) walk(segs.front(), edge);
  }
  for (std::size_t s = 0; s < segments.size(); ++s)
    if (!used[s]) walk(s, segments[s].first.edge);
  return out;
}

ContourSet extract_contours(const SweepResult& result, const std::string& channel) {
  if (result.spec.axes.size() != 2)
    throw ConfigError("contour extraction requires a 2-D sweep");
  const auto& values = result.channel(channel);

  std::function<double(double, double)> center_eval;
  if (channel != "max_real_part") {
    const ModelInfo& model = find_model(result.spec.model);
    const GridSpec spec = result.spec;
    center_eval = [&model, spec, channel](double cx, double cy) {
      ParamMap point = spec.fixed;
      point[spec.axes[0].name] = cx;
      point[spec.axes[1].name] = cy;
      for (const auto& [name, value] : model.margins(point))
        if (name == channel) return value;
      throw ConfigError("channel '" + channel + "' vanished from margins");
    };
  }
  return contour_grid(values, result.spec.axes[0], result.spec.axes[1], channel,
                      center_eval);
}

std::array<std::array<double, 2>, 3> brouwer_cusps(double omega) {
  const double w2 = omega * omega;
  return {{{w2, -3.0 * w2}, {-3.0 * w2, w2}, {w2, w2}}};
}

double whirl_residual(double im_lambda, double omega, double epsilon) {
  const double f = im_lambda * im_lambda - 1.0 - omega * omega;
  return f * f - 4.0 * omega * omega - epsilon * epsilon;
}

double whirl_residual_alt(double im_lambda, double omega, double epsilon) {
  const double f = im_lambda * im_lambda - 1.0 - omega * omega;
  return f * f - 4.0 * omega * omega * im_lambda * im_lambda - epsilon * epsilon;
}

double growth_residual(double re_lambda, double omega, double epsilon) {
  const double f = re_lambda * re_lambda + 1.0 + omega * omega;
  return f * f - 4.0 * omega * omega - epsilon * epsilon;
}

double growth_residual_alt(double re_lambda, double omega, double epsilon) {
  const double f = re_lambda * re_lambda + 1.0 + omega * omega;
  return f * f - 4.0 * omega * omega * re_lambda * re_lambda - epsilon * epsilon;
}

ResidualCertification certify_residual_forms(int omega_count, int eps_count,
                                             double omega_max, double eps_max,
                                             double tolerance) {
  ResidualCertification cert;
  for (int i = 0; i < omega_count; ++i) {
    const double w = omega_max * i / (omega_count - 1);
    for (int j = 0; j < eps_count; ++j) {
      const double eps = eps_max * j / (eps_count - 1);
      const SystemMatrices sys = build_brouwer({1.0 + eps, 1.0 - eps, w});
      const Spectrum spec = solve_quartic_closed_form(characteristic_poly(sys));
      const double band = 1e-12 * (1.0 + spec.spectral_radius());
      for (const auto& r : spec.roots) {
        if (std::abs(r.real()) <= band) {
          cert.max_whirl = std::max(cert.max_whirl, std::abs(whirl_residual(r.imag(), w, eps)));
          cert.max_whirl_alt =
              std::max(cert.max_whirl_alt, std::abs(whirl_residual_alt(r.imag(), w, eps)));
        }
        if (std::abs(r.imag()) <= band) {
          cert.max_growth =
              std::max(cert.max_growth, std::abs(growth_residual(r.real(), w, eps)));
          cert.max_growth_alt =
              std::max(cert.max_growth_alt, std::abs(growth_residual_alt(r.real(), w, eps)));
        }
      }
    }
  }
  cert.printed_forms_certified =
      cert.max_whirl <= tolerance && cert.max_growth <= tolerance;
  return cert;
}

ViaductSlice viaduct_slice(double kappa, double k1, double omega, double nu,
                           std::array<double, 2> delta1_range,
                           std::array<double, 2> delta2_range, int count) {
  GridSpec spec;
  spec.model = "shieh-masur";
  spec.axes = {{"delta1", delta1_range[0], delta1_range[1], count},
               {"delta2", delta2_range[0], delta2_range[1], count}};
  spec.fixed = {{"k1", k1}, {"k2", k1 + kappa}, {"omega", omega}, {"nu", nu}};

  ViaductSlice slice;
  slice.grid = sweep(spec);
  slice.contours = extract_contours(slice.grid, "H3");
  ContourSet p4 = extract_contours(slice.grid, "p4");
  for (auto& line : p4.lines) slice.contours.lines.push_back(std::move(line));
  return slice;
}

std::vector<std::vector<std::array<double, 3>>> self_intersection_curve(
    double k1, double omega, double nu, int samples_per_branch) {
  if (samples_per_branch < 2)
    throw ConfigError("self-intersection curve needs at least 2 samples per branch");
  const PureImaginaryWindow w = pure_imaginary_window(k1, omega, nu);
  const int n = samples_per_branch;

  std::vector<std::vector<std::array<double, 3>>> branches(2);
  // From the EP at -2w toward zero damping (kappa runs off to +infinity).
  for (int i = 0; i < n; ++i) {
    const double d1 = -2.0 * omega * (n - i) / n;
    branches[0].push_back({d1, -d1, -4.0 * omega * nu / d1});
  }
  // From the double-zero point to the EP at +2w, endpoints included.
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    const double d1 = w.delta_d * (1.0 - t) + 2.0 * omega * t;
    branches[1].push_back({d1, -d1, -4.0 * omega * nu / d1});
  }
  return branches;
}

}  // namespace gyrostab
