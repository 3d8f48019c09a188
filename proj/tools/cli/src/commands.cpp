#include "boxlab/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "boxlab/acceptance.hpp"
#include "boxlab/discord2.hpp"
#include "boxlab/polytope.hpp"
#include "boxlab/random.hpp"
#include "boxlab/tribox.hpp"
#include "json.hpp"

namespace boxlab::cli {

namespace {

using json = nlohmann::ordered_json;
using Row = std::vector<std::pair<std::string, double>>;

std::string bits(int v, int n) {
  std::string s;
  for (int i = n - 1; i >= 0; --i) s += char('0' + ((v >> i) & 1));
  return s;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << (v == 0 ? 0.0 : v);
  return os.str();
}

Row measure_row2(const BipartiteBox& P) {
  const Measures2 m = measures(P);
  Row r{{"G", m.G}, {"Q", m.Q}, {"T", m.T}, {"C", m.C.value}, {"CSign", double(m.C.sign)}};
  for (int c = 0; c < 8; ++c)
    r.emplace_back("CHSH" + bits(c, 3), chsh_value(P, (c >> 2) & 1, (c >> 1) & 1, c & 1));
  for (int c = 0; c < 4; ++c) r.emplace_back("M" + bits(c, 2), m.mermin.v[c]);
  return r;
}

Row measure_row3(const TripartiteBox& P) {
  const Measures3 m = measures3(P);
  Row r{{"G", m.G}, {"Q", m.Q}, {"T", m.T}, {"C", m.C}, {"CSign", double(m.cSign)}, {"class99", m.class99}};
  for (int c = 0; c < 8; ++c) r.emplace_back("S" + bits(c, 3), m.svetlichny.v[c]);
  for (int c = 0; c < 8; ++c) r.emplace_back("M" + bits(c, 3), m.mermin.v[c]);
  return r;
}

bool two_way_local(const TripartiteBox& P) {
  try {
    lp_vertex_decomposition3(P, TriVertexSet::TwoWayLocal112);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInPolytope) return false;
    throw;
  }
}

std::string render(const Row& row, const std::vector<std::pair<std::string, std::string>>& extra, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json j;
    for (const auto& [k, v] : row) j[k] = v;
    for (const auto& [k, v] : extra) j[k] = v;
    os << j.dump(2) << "\n";
  } else if (format == Format::Csv) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].first;
    for (const auto& e : extra) os << "," << e.first;
    os << "\n";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i].second);
    for (const auto& e : extra) os << "," << e.second;
    os << "\n";
  } else {
    for (const auto& [k, v] : row) os << std::left << std::setw(20) << k << num(v) << "\n";
    for (const auto& [k, v] : extra) os << std::left << std::setw(20) << k << v << "\n";
  }
  return os.str();
}

double link_value(const std::string& rule, double v) {
  if (rule == "value") return v;
  if (rule == "sin2") return std::sin(2 * v);
  if (rule == "tau") return std::pow(std::sin(2 * v), 2);
  throw Error(ErrorCode::InvalidInput, "unknown link rule '" + rule + "' (expected value, sin2 or tau)");
}

using Measure2 = std::function<double(const BipartiteBox&)>;
using Measure3 = std::function<double(const TripartiteBox&)>;

double max_of(const std::array<double, 4>& v) { return *std::max_element(v.begin(), v.end()); }
double max_of(const std::array<double, 8>& v) { return *std::max_element(v.begin(), v.end()); }

const std::map<std::string, std::pair<Measure2, Measure3>>& measure_table() {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  static const std::map<std::string, std::pair<Measure2, Measure3>> table = {
      {"G", {bell_discord, svetlichny_discord}},
      {"Q", {mermin_discord, mermin3_discord}},
      {"T", {total_correlation, total_correlation3}},
      {"C", {[](const BipartiteBox& P) { return classical_correlation(P).value; },
             [](const TripartiteBox& P) { return measures3(P).C; }}},
      {"CHSH", {[](const BipartiteBox& P) { return max_of(bell_functions(P).v); }, nullptr}},
      {"CHSH000", {[](const BipartiteBox& P) { return chsh_value(P, 0, 0, 0); }, nullptr}},
      {"M", {[](const BipartiteBox& P) { return max_of(mermin_functions(P).v); },
             [](const TripartiteBox& P) { return max_of(mermin3_functions(P).v); }}},
      {"S", {nullptr, [](const TripartiteBox& P) { return max_of(svetlichny_functions(P).v); }}},
      {"class99", {nullptr, class99_value}},
      {"mu",
       {[nan](const BipartiteBox& P) {
          try {
            return three_decomposition(P).mu;
          } catch (const Error&) {
            return nan;
          }
        },
        [nan](const TripartiteBox& P) {
          try {
            return three_decomposition3(P).mu;
          } catch (const Error&) {
            return nan;
          }
        }}},
      {"nu",
       {[nan](const BipartiteBox& P) {
          try {
            return three_decomposition(P).nu;
          } catch (const Error&) {
            return nan;
          }
        },
        [nan](const TripartiteBox& P) {
          try {
            return three_decomposition3(P).nu;
          } catch (const Error&) {
            return nan;
          }
        }}},
  };
  return table;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw Error(ErrorCode::InvalidInput, "unknown format '" + s + "'");
}

std::pair<std::string, double> parse_assignment(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidInput, "expected k=v, got '" + kv + "'");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(kv.substr(eq + 1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != kv.size() - eq - 1) throw Error(ErrorCode::InvalidInput, "not a number in '" + kv + "'");
  return {kv.substr(0, eq), v};
}

AnyBox resolve_box(const BoxSource& src) {
  const int given = !src.boxFile.empty() + !src.catalog.empty() + !src.family.empty();
  if (given != 1) throw Error(ErrorCode::InvalidInput, "specify exactly one of --box, --catalog or --family");
  if (src.visibility < 0 || src.visibility > 1) throw Error(ErrorCode::InvalidInput, "visibility must lie in [0, 1]");
  AnyBox out;
  if (!src.boxFile.empty()) return box_from_json(read_file(src.boxFile));
  if (!src.family.empty()) {
    if (src.settings.empty()) throw Error(ErrorCode::InvalidInput, "--family requires --settings");
    const DensityMatrix rho = make_state(src.family, src.stateParams);
    const MeasurementSettings s = settings_catalog(src.settings, src.settingsParams);
    if (rho.qubits() == 2) out.two = born_box2(rho, s);
    else out.three = born_box3(rho, s);
    return out;
  }
  Rng rng(src.seed);
  if (src.catalog == "random2") {
    out.two = random_ns_box(rng);
  } else if (src.catalog == "random3") {
    out.three = random_svetlichny_polytope_box(rng);
  } else {
    try {
      out.two = vertex(parse_vertex_id(src.catalog));
    } catch (const Error&) {
      out.three = tri_vertex(parse_tri_vertex_id(src.catalog));
    }
  }
  if (out.two) out.two = isotropic(*out.two, src.visibility);
  if (out.three) {
    const std::array<TripartiteBox, 2> boxes{*out.three, tri_vertex(TriVertexId::noise3())};
    const std::array<double, 2> w{src.visibility, 1 - src.visibility};
    out.three = mix3(boxes, w);
  }
  return out;
}

std::string cmd_measure(const AnyBox& box, Format format) {
  if (box.two) {
    const MembershipResult m = is_local(*box.two);
    std::vector<std::pair<std::string, std::string>> extra{{"locality", m.inside ? "local" : "nonlocal"}};
    if (!m.inside) extra.emplace_back("violatedFacet", m.violatedFacet);
    return render(measure_row2(*box.two), extra, format);
  }
  const TripartiteBox& P = *box.three;
  const std::vector<std::pair<std::string, std::string>> extra{
      {"locality", two_way_local(P) ? "two-way-local" : "two-way-nonlocal"},
      {"svetlichnyPolytope", in_svetlichny_polytope(P) ? "true" : "false"},
      {"ghzParadox", ghz_paradox_check(P) ? "true" : "false"}};
  return render(measure_row3(P), extra, format);
}

std::string cmd_decompose(const AnyBox& box, const std::string& mode) {
  json j;
  j["mode"] = mode;
  if (mode != "two" && mode != "three") throw Error(ErrorCode::InvalidInput, "mode must be 'two' or 'three'");
  if (box.two) {
    const DecompositionResult d = mode == "two" ? canonical_2decomposition(*box.two) : three_decomposition(*box.two);
    j["mu"] = d.mu;
    if (mode == "three") j["nu"] = d.nu;
    j["pr"] = d.prId.label();
    if (mode == "three") j["mermin"] = d.merminId.label();
    j["status"] = d.status == DecompositionStatus::Ok ? "ok" : "degenerate-mu";
    j["method"] = d.method;
    j["reconstructionError"] = d.reconstructionError;
    j["residual"] = json::parse(box_to_json(d.residual));
  } else {
    if (mode == "two") throw Error(ErrorCode::Unsupported, "tripartite boxes support only the three decomposition");
    const Decomposition3 d = three_decomposition3(*box.three);
    j["mu"] = d.mu;
    j["nu"] = d.nu;
    j["svetlichny"] = d.svId.label();
    j["mermin"] = d.merminId.label();
    j["status"] = d.degenerate ? "degenerate" : "ok";
    j["method"] = d.method;
    j["reconstructionError"] = d.reconstructionError;
    j["residual"] = json::parse(box_to_json(d.residual));
  }
  return j.dump(2) + "\n";
}

std::string cmd_state_box(const std::string& family, const ParamMap& stateParams, const std::string& settings,
                          const ParamMap& settingsParams) {
  BoxSource src;
  src.family = family;
  src.stateParams = stateParams;
  src.settings = settings;
  src.settingsParams = settingsParams;
  const AnyBox b = resolve_box(src);
  return (b.two ? box_to_json(*b.two) : box_to_json(*b.three)) + "\n";
}

std::vector<std::string> sweep_measure_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : measure_table()) out.push_back(k);
  return out;
}

std::string cmd_sweep(const SweepSpec& spec, Format format) {
  if (spec.steps < 2) throw Error(ErrorCode::InvalidInput, "steps must be at least 2");
  if (spec.param.empty()) throw Error(ErrorCode::InvalidInput, "sweep parameter name is empty");
  if (spec.measures.empty()) throw Error(ErrorCode::InvalidInput, "no measures requested");
  if (format == Format::Json) throw Error(ErrorCode::InvalidInput, "sweep output is csv or table");
  std::vector<std::pair<std::string, std::string>> links;
  for (const auto& l : spec.links) {
    const auto eq = l.find('=');
    links.emplace_back(l.substr(0, eq), eq == std::string::npos ? "value" : l.substr(eq + 1));
    link_value(links.back().second, 0);
  }
  const auto& table = measure_table();
  for (const auto& m : spec.measures)
    if (!table.count(m)) throw Error(ErrorCode::InvalidInput, "unknown measure '" + m + "'");

  std::ostringstream os;
  const char sep = format == Format::Csv ? ',' : '\t';
  os << spec.param;
  for (const auto& m : spec.measures) os << sep << m;
  os << "\n";
  for (int i = 0; i < spec.steps; ++i) {
    const double v = spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    BoxSource src;
    src.family = spec.family;
    src.stateParams = spec.stateParams;
    src.stateParams[spec.param] = v;
    src.settings = spec.settings;
    src.settingsParams = spec.settingsParams;
    for (const auto& [name, rule] : links) src.settingsParams[name] = link_value(rule, v);
    const AnyBox box = resolve_box(src);
    os << num(v);
    for (const auto& m : spec.measures) {
      const auto& [f2, f3] = table.at(m);
      if ((box.two && !f2) || (box.three && !f3))
        throw Error(ErrorCode::Unsupported, "measure '" + m + "' is not defined for this number of parties");
      os << sep << num(box.two ? f2(*box.two) : f3(*box.three));
    }
    os << "\n";
  }
  return os.str();
}

int cmd_verify(std::ostream& out, std::uint64_t seed, Format format) {
  const auto results = run_acceptance(seed);
  int failed = 0;
  json j = json::array();
  if (format == Format::Csv) out << "id,pass,worst_error,title\n";
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (format == Format::Json) {
      j.push_back({{"id", r.id}, {"pass", r.pass}, {"worstError", r.worstError}, {"title", r.title}, {"detail", r.detail}});
    } else if (format == Format::Csv) {
      out << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << num(r.worstError) << ",\"" << r.title << "\"\n";
    } else {
      out << format_result_line(r) << "\n";
    }
  }
  if (format == Format::Json) out << j.dump(2) << "\n";
  if (format == Format::Table) out << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed;
}

}  // namespace boxlab::cli
