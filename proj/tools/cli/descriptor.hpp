#pragma once

// Line-delimited JSON state descriptors, one object per line:
//
//   {"kind":"ho1d","n":1,"m":2,"theta":0.7853981633974483}
//   {"kind":"product","factors":[{"n":1,"m":2,"theta":0.5},{"n":0,"m":1,"theta":0.5}]}
//   {"kind":"split","dims":2,"P":[1],"Pprime":[2],"n":0,"m":0,"theta":0.785}
//   {"kind":"radial","u":0,"v":1,"l":2,"theta":0.3}
//   {"kind":"spherical","l":1,"m1":0,"m2":1,"theta":1.0471975511965976}
//
// Any descriptor may carry "params": {"mu":..,"omega":..,"hbar":..}, each
// field overriding the command-line default. Unknown fields are rejected.
// Blank lines and lines starting with '#' are skipped.

#include <istream>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qho/qho.hpp"

namespace qho::cli {

using Json = nlohmann::ordered_json;

enum class StateKind { ho1d, product, split, radial, spherical };

inline std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::ho1d: return "ho1d";
    case StateKind::product: return "product";
    case StateKind::split: return "split";
    case StateKind::radial: return "radial";
    case StateKind::spherical: return "spherical";
  }
  return "unknown";
}

struct ProductSpec {
  std::vector<QPair> factors;
};

struct StateDescriptor {
  StateKind kind = StateKind::ho1d;
  std::variant<QPair, ProductSpec, SplitSpec, RadialState, QSphericalHarmonic> spec;
  PhysicalParams params{};
  Json source;  ///< the descriptor as read, echoed in reports

  const QPair& qpair() const { return std::get<QPair>(spec); }
  const ProductSpec& product() const { return std::get<ProductSpec>(spec); }
  const SplitSpec& split() const { return std::get<SplitSpec>(spec); }
  const RadialState& radial() const { return std::get<RadialState>(spec); }
  const QSphericalHarmonic& spherical() const { return std::get<QSphericalHarmonic>(spec); }

  /// Cartesian wavefunction for ho1d, product and split descriptors.
  WaveState wavestate() const {
    switch (kind) {
      case StateKind::ho1d: return psi_nm(qpair(), params);
      case StateKind::product: return product_state(product().factors, params);
      case StateKind::split: return split_state(split(), params);
      default: throw ValidationError(to_string(kind) + " descriptors have no Cartesian wavefunction");
    }
  }

  bool is_cartesian() const {
    return kind == StateKind::ho1d || kind == StateKind::product || kind == StateKind::split;
  }
};

/// Switches set on the command line that shape descriptor construction.
struct DescriptorDefaults {
  PhysicalParams params{};
  bool conjugate_angular = false;
  bool allow_overlap = false;
};

namespace detail {

inline void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw ValidationError(where + ": unknown field '" + key + "'");
  }
}

inline const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline int get_int(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw ValidationError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

inline double get_real(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number()) throw ValidationError(where + ": field '" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(where + ": field '" + key + "' must be finite");
  return d;
}

inline std::set<int> get_index_set(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_array()) throw ValidationError(where + ": field '" + key + "' must be an array");
  std::set<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ValidationError(where + ": '" + key + "' entries must be integers");
    out.insert(e.get<int>());
  }
  return out;
}

inline QPair parse_qpair(const Json& j, const std::string& where) {
  reject_unknown(j, {"kind", "n", "m", "theta", "params"}, where);
  QPair q{get_int(j, "n", where), get_int(j, "m", where), get_real(j, "theta", where)};
  q.validate();
  return q;
}

inline PhysicalParams parse_params(const Json& j, PhysicalParams base, const std::string& where) {
  if (!j.contains("params")) return base;
  const Json& p = j.at("params");
  if (!p.is_object()) throw ValidationError(where + ": 'params' must be an object");
  reject_unknown(p, {"mu", "omega", "hbar"}, where + ".params");
  if (p.contains("mu")) base.mu = get_real(p, "mu", where);
  if (p.contains("omega")) base.omega = get_real(p, "omega", where);
  if (p.contains("hbar")) base.hbar = get_real(p, "hbar", where);
  base.validate();
  return base;
}

}  // namespace detail

inline StateDescriptor parse_descriptor(const Json& j, const DescriptorDefaults& defaults = {},
                                        const std::string& where = "descriptor") {
  using namespace detail;
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
  const Json& kind_field = require(j, "kind", where);
  if (!kind_field.is_string()) throw ValidationError(where + ": 'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  StateDescriptor d;
  d.source = j;
  d.params = parse_params(j, defaults.params, where);

  if (kind == "ho1d") {
    d.kind = StateKind::ho1d;
    d.spec = parse_qpair(j, where);
  } else if (kind == "product") {
    d.kind = StateKind::product;
    reject_unknown(j, {"kind", "factors", "params"}, where);
    const Json& f = require(j, "factors", where);
    if (!f.is_array() || f.empty()) throw ValidationError(where + ": 'factors' must be a nonempty array");
    ProductSpec p;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::string w = where + ".factors[" + std::to_string(i) + "]";
      if (!f[i].is_object()) throw ValidationError(w + ": expected an object");
      reject_unknown(f[i], {"n", "m", "theta"}, w);
      p.factors.push_back(parse_qpair(f[i], w));
    }
    d.spec = std::move(p);
  } else if (kind == "split") {
    d.kind = StateKind::split;
    reject_unknown(j, {"kind", "dims", "P", "Pprime", "n", "m", "theta", "allow_overlap", "params"}, where);
    SplitSpec s;
    s.dims = get_int(j, "dims", where);
    s.P = get_index_set(j, "P", where);
    s.Pprime = get_index_set(j, "Pprime", where);
    s.n = get_int(j, "n", where);
    s.m = get_int(j, "m", where);
    s.theta = get_real(j, "theta", where);
    s.allow_overlap = defaults.allow_overlap;
    if (j.contains("allow_overlap")) {
      if (!j.at("allow_overlap").is_boolean()) throw ValidationError(where + ": 'allow_overlap' must be boolean");
      s.allow_overlap = j.at("allow_overlap").get<bool>();
    }
    s.validate();
    d.spec = std::move(s);
  } else if (kind == "radial") {
    d.kind = StateKind::radial;
    reject_unknown(j, {"kind", "u", "v", "l", "theta", "params"}, where);
    d.spec = radial_state(get_int(j, "u", where), get_int(j, "v", where), get_int(j, "l", where),
                          get_real(j, "theta", where), d.params);
  } else if (kind == "spherical") {
    d.kind = StateKind::spherical;
    reject_unknown(j, {"kind", "l", "m1", "m2", "theta", "conjugate", "params"}, where);
    QSphericalHarmonic h{get_int(j, "l", where), get_int(j, "m1", where), get_int(j, "m2", where),
                         get_real(j, "theta", where), defaults.conjugate_angular};
    if (j.contains("conjugate")) {
      if (!j.at("conjugate").is_boolean()) throw ValidationError(where + ": 'conjugate' must be boolean");
      h.conjugate_slot1 = j.at("conjugate").get<bool>();
    }
    d.spec = qsph_harm(h);
  } else {
    throw ValidationError(where + ": unknown kind '" + kind + "'");
  }
  return d;
}

/// Parse every descriptor line of a stream.
inline std::vector<StateDescriptor> read_descriptors(std::istream& in, const DescriptorDefaults& defaults = {}) {
  std::vector<StateDescriptor> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(where + ": invalid JSON (" + e.what() + ")");
    }
    out.push_back(parse_descriptor(j, defaults, where));
  }
  return out;
}

}  // namespace qho::cli
