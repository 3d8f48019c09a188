#include <cmath>
#include <functional>

#include "boxlab/qstate.hpp"

namespace boxlab {

namespace {

const Vec3 X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

Vec3 comb(double a, const Vec3& u, double b, const Vec3& v) {
  return {a * u[0] + b * v[0], a * u[1] + b * v[1], a * u[2] + b * v[2]};
}

Vec3 neg(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

double param(const ParamMap& p, const std::string& key, const std::string& setting) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorCode::InvalidInput, "settings '" + setting + "' needs parameter " + key);
  return it->second;
}

void require_range(double v, double lo, double hi, const std::string& what) {
  if (!(v >= lo - kEps && v <= hi + kEps))
    throw Error(ErrorCode::InvalidInput, what + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "]");
}

struct Entry {
  std::string primary;  // parameter filled by the NAME(value) form; empty when none
  std::function<MeasurementSettings(const ParamMap&)> build;
};

MeasurementSettings two(std::array<Vec3, 2> a, std::array<Vec3, 2> b) { return {{a, b}}; }
MeasurementSettings three(std::array<Vec3, 2> a, std::array<Vec3, 2> b, std::array<Vec3, 2> c) { return {{a, b, c}}; }

std::array<Vec3, 2> prq_b(double tau) {
  require_range(tau, 0, 1, "tau");
  const double ct = 1.0 / std::sqrt(1.0 + tau), st = std::sqrt(tau / (1.0 + tau));
  return {comb(ct, Z, st, X), comb(ct, Z, -st, X)};
}

const std::map<std::string, Entry>& catalog() {
  static const double r = 1.0 / std::sqrt(2.0);
  static const std::map<std::string, Entry> c = {
      {"BSb", {"", [](const ParamMap&) { return two({X, Y}, {comb(r, X, -r, Y), comb(r, X, r, Y)}); }}},
      {"M_N", {"", [](const ParamMap&) { return two({X, Y}, {comb(r, X, -r, Y), comb(r, X, r, Y)}); }}},
      {"PRQ", {"tau", [](const ParamMap& p) { return two({Z, X}, prq_b(param(p, "tau", "PRQ"))); }}},
      {"MSb", {"", [](const ParamMap&) { return two({X, Y}, {X, Y}); }}},
      {"CSB",
       {"tau", [](const ParamMap& p) { return two({comb(r, Z, r, X), comb(r, Z, -r, X)}, prq_b(param(p, "tau", "CSB"))); }}},
      {"CSB1",
       {"tau",
        [](const ParamMap& p) {
          auto b = prq_b(param(p, "tau", "CSB1"));
          return two({comb(r, Z, r, X), comb(r, Z, -r, X)}, {b[1], b[0]});
        }}},
      {"CSB2",
       {"", [](const ParamMap&) { return two({comb(r, Z, r, X), comb(r, Z, -r, X)}, {comb(r, Z, -r, X), comb(r, Z, r, X)}); }}},
      {"ZSb1", {"", [](const ParamMap&) { return two({Z, X}, {comb(r, Z, r, X), comb(r, Z, -r, X)}); }}},
      {"MSb1", {"", [](const ParamMap&) { return two({X, neg(Y)}, {Y, X}); }}},
      {"M_C", {"", [](const ParamMap&) { return two({X, Y}, {neg(Y), X}); }}},
      {"meb1",
       {"p",
        [](const ParamMap& p) {
          const double v = param(p, "p", "meb1");
          require_range(v, 0, 1, "p");
          return two({X, Y}, {comb(std::sqrt(v), X, -std::sqrt(1 - v), Y), comb(std::sqrt(1 - v), X, std::sqrt(v), Y)});
        }}},
      {"0BMSb",
       {"theta",
        [](const ParamMap& p) {
          const double t = param(p, "theta", "0BMSb");
          const double s = std::sin(2 * t), c = std::cos(2 * t);
          return two({comb(s, X, c, Y), comb(c, X, -s, Y)}, {comb(r, X, r, Y), comb(r, X, -r, Y)});
        }}},
      {"0BMSb1",
       {"theta",
        [](const ParamMap& p) {
          const double t = param(p, "theta", "0BMSb1");
          const double s = std::sin(2 * t), c = std::cos(2 * t);
          return two({comb(c, X, s, Z), comb(s, X, -c, Z)}, {comb(r, X, r, Z), comb(-r, X, r, Z)});
        }}},
      {"BMW",
       {"p",
        [](const ParamMap& p) {
          const double v = param(p, "p", "BMW");
          require_range(v, 0, 1, "p");
          const double w = std::sqrt(1 - v * v);
          return two({comb(v, X, w, Y), comb(w, X, -v, Y)}, {comb(r, X, r, Y), comb(r, X, -r, Y)});
        }}},
      {"BMWb1",
       {"p",
        [](const ParamMap& p) {
          const double v = param(p, "p", "BMWb1");
          require_range(v, 0, 1, "p");
          const double a = std::sqrt(v), b = std::sqrt(1 - v);
          return two({comb(a, X, b, Y), comb(b, X, -a, Y)}, {comb(r, X, r, Y), comb(r, X, -r, Y)});
        }}},
      {"SDxy", {"", [](const ParamMap&) { return three({X, Y}, {comb(r, X, -r, Y), comb(r, X, r, Y)}, {X, Y}); }}},
      {"SDxz", {"", [](const ParamMap&) { return three({Z, X}, {comb(r, Z, r, X), comb(r, Z, -r, X)}, {Z, X}); }}},
      {"MDxy", {"", [](const ParamMap&) { return three({X, Y}, {X, Y}, {X, Y}); }}},
      {"MDxz", {"", [](const ParamMap&) { return three({Z, X}, {Z, X}, {Z, X}); }}},
      {"Ghose",
       {"theta3",
        [](const ParamMap& p) {
          const double t3 = param(p, "theta3", "Ghose");
          const double s = std::sin(t3), c = std::cos(t3), n = std::sqrt(1 + s * s);
          const Vec3 c0{s / n, -s / n, c / n}, c1{s / n, s / n, c / n};
          return three({comb(r, X, r, Y), comb(r, X, -r, Y)}, {comb(r, X, -r, Y), comb(r, X, r, Y)}, {c0, c1});
        }}},
      {"class99",
       {"theta",
        [](const ParamMap& p) {
          const double s2 = std::sin(2 * param(p, "theta", "class99"));
          const double ct = 1.0 / std::sqrt(1 + s2 * s2), st = std::sqrt(1 - ct * ct);
          return three({Z, X}, {comb(ct, Z, st, X), comb(ct, Z, -st, X)}, {Z, X});
        }}},
      {"SMDghz",
       {"p",
        [](const ParamMap& p) {
          const double v = param(p, "p", "SMDghz");
          require_range(v, 0, 1, "p");
          return three({X, Y}, {comb(std::sqrt(v), X, -std::sqrt(1 - v), Y), comb(std::sqrt(1 - v), X, std::sqrt(v), Y)},
                       {X, Y});
        }}},
  };
  return c;
}

}  // namespace

MeasurementSettings settings_catalog(const std::string& name, const ParamMap& params) {
  std::string key = name;
  ParamMap p = params;
  const auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error(ErrorCode::UnknownName, "malformed settings name '" + name + "'");
    key = name.substr(0, open);
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    auto it = catalog().find(key);
    if (it == catalog().end() || it->second.primary.empty())
      throw Error(ErrorCode::UnknownName, "settings '" + key + "' takes no inline parameter");
    try {
      std::size_t used = 0;
      p[it->second.primary] = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "cannot parse settings parameter '" + arg + "'");
    }
  }
  auto it = catalog().find(key);
  if (it == catalog().end()) throw Error(ErrorCode::UnknownName, "unknown settings name '" + name + "'");
  MeasurementSettings s = it->second.build(p);
  validate_settings(s, s.size());
  return s;
}

std::vector<std::string> settings_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : catalog()) names.push_back(v.primary.empty() ? k : k + "(" + v.primary + ")");
  return names;
}

}  // namespace boxlab
