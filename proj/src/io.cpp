#include "gyrostab/io.hpp"

#include "gyrostab/criteria.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

namespace gyrostab::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write to " + tmp);
    out << content;
    if (!out.good()) throw ConfigError("short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

json spectrum_json(const Spectrum& spec) {
  json roots = json::array();
  for (const auto& r : spec.roots) roots.push_back({{"re", r.real()}, {"im", r.imag()}});
  json clusters = json::array();
  for (const auto& cl : spec.clusters) {
    clusters.push_back({{"center_re", cl.center.real()},
                        {"center_im", cl.center.imag()},
                        {"members", cl.members},
                        {"algebraic", cl.algebraic},
                        {"geometric", cl.geometric},
                        {"on_axis", cl.on_axis},
                        {"borderline", cl.borderline}});
  }
  return {{"roots", roots}, {"clusters", clusters}};
}

json verdict_json(const StabilityVerdict& verdict) {
  return {{"class", to_string(verdict.cls)},
          {"code", verdict_code(verdict.cls)},
          {"max_real_part", verdict.max_real_part},
          {"diagnostics", verdict.diagnostics},
          {"borderline", verdict.borderline}};
}

json classify_document(const std::string& model, const ParamMap& params,
                       const SystemMatrices& sys, const QuarticPoly& poly,
                       const Spectrum& spec, const StabilityVerdict& verdict,
                       const std::vector<std::pair<std::string, double>>& margins) {
  json margin_map = json::object();
  for (const auto& [name, value] : margins) margin_map[name] = value;
  return {{"model", model},
          {"label", sys.label},
          {"parameters", params},
          {"matrices",
           {{"a", {{sys.a(0, 0), sys.a(0, 1)}, {sys.a(1, 0), sys.a(1, 1)}}},
            {"b", {{sys.b(0, 0), sys.b(0, 1)}, {sys.b(1, 0), sys.b(1, 1)}}}}},
          {"quartic", {{"c3", poly.c3}, {"c2", poly.c2}, {"c1", poly.c1}, {"c0", poly.c0}}},
          {"spectrum", spectrum_json(spec)},
          {"verdict", verdict_json(verdict)},
          {"margins", margin_map}};
}

std::string classify_csv(const std::string& model, const ParamMap& params,
                         const QuarticPoly& poly, const Spectrum& spec,
                         const StabilityVerdict& verdict,
                         const std::vector<std::pair<std::string, double>>& margins) {
  std::ostringstream head, row;
  head << "model";
  row << model;
  for (const auto& [name, value] : params) {
    head << "," << name;
    row << "," << format_double(value);
  }
  head << ",c3,c2,c1,c0";
  row << "," << format_double(poly.c3) << "," << format_double(poly.c2) << ","
      << format_double(poly.c1) << "," << format_double(poly.c0);
  for (int i = 0; i < 4; ++i) {
    head << ",root" << i + 1 << "_re,root" << i + 1 << "_im";
    row << "," << format_double(spec.roots[i].real()) << ","
        << format_double(spec.roots[i].imag());
  }
  head << ",verdict,verdict_code,max_real_part";
  row << "," << to_string(verdict.cls) << "," << verdict_code(verdict.cls) << ","
      << format_double(verdict.max_real_part);
  for (const auto& [name, value] : margins) {
    head << "," << name;
    row << "," << format_double(value);
  }
  return head.str() + "\n" + row.str() + "\n";
}

json sweep_document(const SweepResult& result) {
  json axes = json::array();
  for (const auto& ax : result.spec.axes)
    axes.push_back({{"name", ax.name}, {"min", ax.min}, {"max", ax.max}, {"count", ax.count}});
  json channels = json::object();
  for (std::size_t i = 0; i < result.channel_names.size(); ++i)
    channels[result.channel_names[i]] = result.channels[i];
  return {{"model", result.spec.model},
          {"axes", axes},
          {"fixed", result.spec.fixed},
          {"ordering", "row-major, first declared axis slowest"},
          {"verdict_codes",
           {{"0", "AsymptoticallyStable"},
            {"1", "MarginallyStable"},
            {"2", "DivergenceUnstable"},
            {"3", "FlutterUnstable"},
            {"4", "NonSemisimpleAxisUnstable"}}},
          {"verdicts", result.verdicts},
          {"channels", channels}};
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  for (const auto& ax : result.spec.axes) out << ax.name << ",";
  out << "verdict";
  for (const auto& name : result.channel_names) out << "," << name;
  out << "\n";

  const std::size_t total = result.spec.point_count();
  std::vector<int> index(result.spec.axes.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < result.spec.axes.size(); ++a)
      out << format_double(result.spec.coordinate(a, index[a])) << ",";
    out << result.verdicts[flat];
    for (const auto& ch : result.channels) out << "," << format_double(ch[flat]);
    out << "\n";
    for (std::size_t a = result.spec.axes.size(); a-- > 0;) {
      if (++index[a] < result.spec.axes[a].count) break;
      index[a] = 0;
    }
  }
  return out.str();
}

json contours_document(const ContourSet& contours) {
  json lines = json::array();
  for (const auto& line : contours.lines) {
    json pts = json::array();
    for (const auto& p : line.points) pts.push_back({p[0], p[1]});
    lines.push_back({{"channel", line.channel}, {"points", pts}});
  }
  return {{"polylines", lines}};
}

json trajectory_document(const Trajectory& traj) {
  json states = json::array();
  for (const auto& s : traj.states) states.push_back({s(0), s(1), s(2), s(3)});
  return {{"label", traj.label},
          {"frame", traj.frame == Frame::Lab ? "lab" : "corotating"},
          {"dt", traj.dt},
          {"overflow", traj.overflow},
          {"times", traj.times},
          {"states", states}};
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,x,y,vx,vy\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& s = traj.states[i];
    out << format_double(traj.times[i]) << "," << format_double(s(0)) << ","
        << format_double(s(1)) << "," << format_double(s(2)) << ","
        << format_double(s(3)) << "\n";
  }
  return out.str();
}

json growth_summary(const GrowthEstimate& est, double max_real_part,
                    const Trajectory& traj) {
  return {{"rate", est.rate},
          {"fit_residual", est.fit_residual},
          {"window", {est.t_start, est.t_end}},
          {"oscillation_dominated", est.oscillation_dominated},
          {"max_real_part", max_real_part},
          {"samples", traj.size()},
          {"overflow", traj.overflow}};
}

json special_points_document(double k1, double omega, double nu) {
  const auto pts = exceptional_points(k1, omega, nu);
  const auto window = pure_imaginary_window(k1, omega, nu);
  const auto cusps = brouwer_cusps(omega);

  json eps = json::array();
  json double_zero;
  for (const auto& ep : pts) {
    json entry = {{"delta1", ep.delta1},
                  {"delta2", ep.delta2},
                  {"kappa", ep.kappa},
                  {"eigenvalue_re", ep.eigenvalue.real()},
                  {"eigenvalue_im", ep.eigenvalue.imag()},
                  {"pure_imaginary", ep.pure_imaginary}};
    if (ep.kind == DegeneracyKind::DoubleZero)
      double_zero = entry;
    else
      eps.push_back(entry);
  }
  return {{"parameters", {{"k1", k1}, {"omega", omega}, {"nu", nu}}},
          {"exceptional_points", eps},
          {"double_zero", double_zero},
          {"window",
           {{"delta_d", window.delta_d},
            {"kappa_d", window.kappa_d},
            {"branches",
             {{window.negative_branch[0], window.negative_branch[1]},
              {window.positive_branch[0], window.positive_branch[1]}}}}},
          {"cusps", {{cusps[0][0], cusps[0][1]}, {cusps[1][0], cusps[1][1]}, {cusps[2][0], cusps[2][1]}}}};
}

}  // namespace gyrostab::io
