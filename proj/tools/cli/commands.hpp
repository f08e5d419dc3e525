#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cli/descriptor.hpp"
#include "cli/report.hpp"
#include "cli/verify.hpp"
#include "qho/qho.hpp"

namespace qho::cli {

struct Options {
  std::string command;
  double time = 0.0;
  std::optional<double> tol;
  int quad_order = 64;
  bool csv = false;
  DescriptorDefaults defaults;
  std::string suite = "all";
  double grid_min = -4.0;
  double grid_max = 4.0;
  int grid_count = 9;

  Json to_json() const {
    Json j{{"time", time},
           {"quad_order", quad_order},
           {"format", csv ? "csv" : "json"},
           {"mu", defaults.params.mu},
           {"omega", defaults.params.omega},
           {"hbar", defaults.params.hbar},
           {"conjugate_angular", defaults.conjugate_angular},
           {"allow_overlap", defaults.allow_overlap}};
    j["tol"] = tol ? Json(*tol) : Json(nullptr);
    if (command == "verify") j["suite"] = suite;
    if (command == "sample") j["grid"] = Json{{"min", grid_min}, {"max", grid_max}, {"count", grid_count}};
    return j;
  }
};

inline constexpr double kExactTol = 1e-10;
inline constexpr double kQuadratureTol = 1e-8;
inline constexpr double kAngularTol = 1e-9;

namespace detail {

inline Json report_head(const Options& opts, const std::vector<StateDescriptor>& states) {
  Json inputs = Json::array();
  for (const auto& d : states) inputs.push_back(d.source);
  return Json{{"command", opts.command}, {"options", opts.to_json()}, {"inputs", std::move(inputs)}};
}

inline Json parallelism_json(const GramMatrix& g) {
  Json out = Json::array();
  for (const auto& p : g.parallelism) {
    out.push_back(Json{{"row", p.row},
                       {"col", p.col},
                       {"pointwise_parallel", p.pointwise_parallel},
                       {"equal_theta", p.equal_theta}});
  }
  return out;
}

}  // namespace detail

/// Energy table: closed form against exact and quadrature expectation of H.
/// Energies are reported in units of hbar*omega.
inline Outcome cmd_spectrum(const Options& opts, const std::vector<StateDescriptor>& states) {
  const double tol = opts.tol.value_or(kExactTol);
  const double quad_tol = std::max(tol, kQuadratureTol);
  Outcome out;
  out.body = detail::report_head(opts, states);
  out.table.header = {"index", "kind", "closed_form", "exact", "quadrature", "delta_exact", "delta_quadrature"};
  Json rows = Json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateDescriptor& d = states[i];
    const double unit = d.params.quantum();
    double closed = 0.0, exact = 0.0;
    std::optional<double> quad;
    std::optional<double> alternate;
    bool quad_sufficient = true;
    switch (d.kind) {
      case StateKind::ho1d:
        closed = energy_nm(d.qpair(), d.params);
        alternate = energy_nm_correction_form(d.qpair(), d.params);
        break;
      case StateKind::product:
        closed = product_energy_closed_form(d.product().factors, d.params);
        break;
      case StateKind::split:
        closed = split_energy_closed_form(d.split(), d.params);
        break;
      case StateKind::radial: {
        const RadialState& r = d.radial();
        closed = full_spherical_energy(r.u, r.v, r.l, r.theta, d.params);
        exact = radial_expectation_energy(r);
        break;
      }
      case StateKind::spherical:
        throw ValidationError("spectrum: spherical harmonics carry no energy of their own; use a radial descriptor");
    }
    if (d.is_cartesian()) {
      const WaveState s = d.wavestate();
      const OperatorExpr h = total_hamiltonian(d.params, s.dims());
      exact = expectation(h, s, opts.time);
      const WaveState hs = apply(h, s);
      std::vector<QuadratureRule> rules(static_cast<std::size_t>(s.dims()),
                                        make_rule(RuleKind::gauss_hermite, opts.quad_order));
      quad_sufficient = quadrature_order_sufficient(hs, s, rules);
      quad = inner_quad(hs, s, opts.time, rules);
    }
    const double d_exact = std::abs(exact - closed) / unit;
    Json row{{"index", i},
             {"kind", to_string(d.kind)},
             {"closed_form", closed / unit},
             {"exact", exact / unit},
             {"delta_exact", d_exact}};
    bool pass = d_exact <= tol;
    if (alternate) row["closed_form_correction_form"] = *alternate / unit;
    if (quad) {
      const double d_quad = std::abs(*quad - closed) / unit;
      row["quadrature"] = *quad / unit;
      row["delta_quadrature"] = d_quad;
      if (!quad_sufficient) {
        row["quadrature_warning"] = "quadrature order too low for this state; delta not enforced";
      } else {
        pass = pass && d_quad <= quad_tol;
      }
    } else {
      row["quadrature"] = nullptr;
      row["delta_quadrature"] = nullptr;
    }
    row["pass"] = pass;
    all_pass = all_pass && pass;
    out.table.rows.push_back({std::to_string(i), to_string(d.kind), format_real(closed / unit),
                              format_real(exact / unit), quad ? format_real(*quad / unit) : "",
                              format_real(d_exact), quad ? format_real(std::abs(*quad - closed) / unit) : ""});
    rows.push_back(std::move(row));
  }
  out.body["tolerances"] = Json{{"exact", tol}, {"quadrature", quad_tol}};
  out.body["energy_unit"] = "hbar*omega";
  out.body["results"] = std::move(rows);
  out.body["passed"] = all_pass;
  out.exit_code = all_pass ? kExitOk : kExitCheckFailed;
  return out;
}

/// Gram matrix of a homogeneous list of states against its reference:
/// the closed form for ho1d, radial and spherical states, a quadrature
/// evaluation for product and split states.
inline Outcome cmd_gram(const Options& opts, const std::vector<StateDescriptor>& states) {
  const StateKind kind = states.front().kind;
  for (const auto& d : states) {
    if (d.kind != kind) throw ValidationError("gram: all states must share one kind");
    if (!(d.params == states.front().params)) throw ValidationError("gram: all states must share physical parameters");
  }
  const PhysicalParams& params = states.front().params;
  GramMatrix g;
  std::string reference = "closed_form";
  double tol = opts.tol.value_or(kExactTol);
  std::optional<double> quad_dev;
  switch (kind) {
    case StateKind::ho1d: {
      std::vector<QPair> pairs;
      for (const auto& d : states) pairs.push_back(d.qpair());
      g = gram(pairs, opts.time, params);
      double dev = 0.0;
      std::vector<WaveState> ws;
      for (const auto& q : pairs) ws.push_back(psi_nm(q, params));
      for (std::size_t r = 0; r < ws.size(); ++r) {
        for (std::size_t c = 0; c < ws.size(); ++c) {
          dev = std::max(dev, std::abs(inner_quad(ws[r], ws[c], opts.time, opts.quad_order) - g.entries(r, c)));
        }
      }
      quad_dev = dev;
      break;
    }
    case StateKind::product:
    case StateKind::split: {
      reference = "quadrature";
      tol = opts.tol.value_or(kAngularTol);
      std::vector<WaveState> ws;
      for (const auto& d : states) ws.push_back(d.wavestate());
      for (const auto& w : ws) {
        if (w.dims() != ws.front().dims()) throw ValidationError("gram: all states must share dimension");
      }
      const auto count = static_cast<Eigen::Index>(ws.size());
      g.time = opts.time;
      g.entries.resize(count, count);
      g.closed_form.resize(count, count);
      for (std::size_t i = 0; i < states.size(); ++i) g.labels.push_back(states[i].source.dump());
      for (Eigen::Index r = 0; r < count; ++r) {
        for (Eigen::Index c = 0; c < count; ++c) {
          g.entries(r, c) = inner(ws[r], ws[c], opts.time);
          g.closed_form(r, c) = inner_quad(ws[r], ws[c], opts.time, opts.quad_order);
        }
      }
      break;
    }
    case StateKind::radial: {
      std::vector<RadialState> rs;
      for (const auto& d : states) rs.push_back(d.radial());
      g = radial_gram(rs);
      double dev = 0.0;
      for (std::size_t r = 0; r < rs.size(); ++r) {
        for (std::size_t c = 0; c < rs.size(); ++c) {
          dev = std::max(dev, std::abs(radial_inner_quad(rs[r], rs[c], opts.quad_order) - g.entries(r, c)));
        }
      }
      quad_dev = dev;
      break;
    }
    case StateKind::spherical: {
      tol = opts.tol.value_or(kAngularTol);
      std::vector<QSphericalHarmonic> hs;
      for (const auto& d : states) hs.push_back(d.spherical());
      g = angular_gram(hs, SphereQuadrature::make(opts.quad_order, 2 * opts.quad_order));
      break;
    }
  }

  Outcome out;
  out.body = detail::report_head(opts, states);
  const double dev = g.max_deviation();
  const double offdiag = g.max_offdiagonal();
  Json result{{"kind", to_string(kind)},
              {"labels", g.labels},
              {"matrix", matrix_json(g.entries)},
              {"reference_kind", reference},
              {"reference", matrix_json(g.closed_form)},
              {"max_deviation", dev},
              {"asymmetry", g.asymmetry()},
              {"identity_deviation", g.identity_deviation()},
              {"max_offdiagonal", offdiag},
              {"non_orthogonal", offdiag > tol},
              {"parallelism", detail::parallelism_json(g)}};
  result["quadrature_max_deviation"] = quad_dev ? Json(*quad_dev) : Json(nullptr);
  const bool pass = dev <= tol && (!quad_dev || *quad_dev <= std::max(tol, kQuadratureTol));
  out.body["tolerances"] = Json{{"deviation", tol}, {"quadrature", std::max(tol, kQuadratureTol)}};
  out.body["results"] = std::move(result);
  out.body["passed"] = pass;
  out.exit_code = pass ? kExitOk : kExitCheckFailed;

  out.table.header = {"row", "col", "value", "reference"};
  for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.entries.cols(); ++c) {
      out.table.rows.push_back({std::to_string(r), std::to_string(c), format_real(g.entries(r, c)),
                                format_real(g.closed_form(r, c))});
    }
  }
  return out;
}

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"algebra", "ladder", "residual", "radial", "angular", "all"};
  return names;
}

inline Outcome cmd_verify(const Options& opts) {
  const PhysicalParams& params = opts.defaults.params;
  std::vector<std::pair<std::string, std::vector<Check>>> suites;
  auto want = [&](const char* name) { return opts.suite == "all" || opts.suite == name; };
  if (want("algebra")) suites.emplace_back("algebra", verify_algebra());
  if (want("ladder")) suites.emplace_back("ladder", verify_ladder(params));
  if (want("residual")) suites.emplace_back("residual", verify_residual(params));
  if (want("radial")) suites.emplace_back("radial", verify_radial(params));
  if (want("angular")) suites.emplace_back("angular", verify_angular(opts.quad_order, 2 * opts.quad_order));
  if (suites.empty()) throw ValidationError("verify: unknown suite '" + opts.suite + "'");

  Outcome out;
  out.body = Json{{"command", opts.command}, {"options", opts.to_json()}};
  out.table.header = {"suite", "check", "measured", "comparison", "tolerance", "pass"};
  Json results = Json::array();
  bool all_pass = true;
  for (const auto& [name, checks] : suites) {
    Json arr = Json::array();
    for (const Check& c : checks) {
      arr.push_back(c.to_json());
      all_pass = all_pass && c.passed();
      out.table.rows.push_back({name, c.name, format_real(c.measured), c.at_least ? ">=" : "<=",
                                format_real(c.tolerance), c.passed() ? "true" : "false"});
    }
    results.push_back(Json{{"suite", name}, {"checks", std::move(arr)}});
  }
  out.body["results"] = std::move(results);
  out.body["passed"] = all_pass;
  out.exit_code = all_pass ? kExitOk : kExitCheckFailed;
  return out;
}

/// Values along a line: for Cartesian states x runs along the first axis
/// with the other coordinates at 0; for radial states x is rho; for
/// spherical harmonics x is the polar angle at azimuth 0.
inline Outcome cmd_sample(const Options& opts, const std::vector<StateDescriptor>& states) {
  if (states.size() != 1) throw ValidationError("sample: expected exactly one state descriptor");
  if (!(opts.grid_min < opts.grid_max) || opts.grid_count < 2 || !std::isfinite(opts.grid_min) ||
      !std::isfinite(opts.grid_max)) {
    throw ValidationError("sample: grid needs min < max and count >= 2");
  }
  const StateDescriptor& d = states.front();
  std::function<Quaternion(double)> eval;
  std::optional<WaveState> ws;
  if (d.is_cartesian()) {
    ws = d.wavestate();
    eval = [&](double x) {
      std::vector<double> pt(static_cast<std::size_t>(ws->dims()), 0.0);
      pt[0] = x;
      return evaluate(*ws, pt, opts.time);
    };
  } else if (d.kind == StateKind::radial) {
    const double scale = d.params.length_scale();
    eval = [&d, scale](double r) { return d.radial().value(scale * r); };
  } else {
    eval = [&d](double polar) { return d.spherical()(polar, 0.0); };
  }

  Outcome out;
  out.csv = opts.csv;
  out.body = detail::report_head(opts, states);
  out.table.header = {"x", "re_z0", "im_z0", "re_z1", "im_z1", "abs"};
  Json rows = Json::array();
  for (int i = 0; i < opts.grid_count; ++i) {
    const double x = opts.grid_min + (opts.grid_max - opts.grid_min) * i / (opts.grid_count - 1);
    const Quaternion q = eval(x);
    const double a = abs(q);
    rows.push_back(Json{{"x", x}, {"re_z0", q.x0}, {"im_z0", q.x1}, {"re_z1", q.x2}, {"im_z1", q.x3}, {"abs", a}});
    out.table.rows.push_back({format_real(x), format_real(q.x0), format_real(q.x1), format_real(q.x2),
                              format_real(q.x3), format_real(a)});
  }
  out.body["results"] = std::move(rows);
  return out;
}

}  // namespace qho::cli
