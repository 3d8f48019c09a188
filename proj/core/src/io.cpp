#include "boxlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace boxlab {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// Flattens a nested array of the given depth (each level of size 2) in row-major order.
void flatten(const json& j, int depth, std::vector<double>& out, const std::string& where) {
  if (depth == 0) {
    if (!j.is_number()) throw Error(ErrorCode::InvalidInput, "expected a number at " + where);
    out.push_back(j.get<double>());
    return;
  }
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::InvalidInput, "expected a length-2 array at " + where);
  for (std::size_t i = 0; i < 2; ++i) flatten(j[i], depth - 1, out, where + "[" + std::to_string(i) + "]");
}

json nest(const double* p, int depth) {
  if (depth == 0) return *p;
  const int stride = 1 << (depth - 1);
  return json::array({nest(p, depth - 1), nest(p + stride, depth - 1)});
}

}  // namespace

std::string box_to_json(const BipartiteBox& P) {
  return json{{"parties", 2}, {"table", nest(P.data().data(), 4)}}.dump(2);
}

std::string box_to_json(const TripartiteBox& P) {
  return json{{"parties", 3}, {"table", nest(P.data().data(), 6)}}.dump(2);
}

AnyBox box_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("parties") || !j.contains("table"))
    throw Error(ErrorCode::InvalidInput, "box JSON needs \"parties\" and \"table\"");
  const int parties = j["parties"].get<int>();
  if (parties != 2 && parties != 3) throw Error(ErrorCode::InvalidInput, "\"parties\" must be 2 or 3");
  std::vector<double> flat;
  flatten(j["table"], parties == 2 ? 4 : 6, flat, "table");
  AnyBox b;
  if (parties == 2) b.two = make_box(flat);
  else b.three = make_box3(flat);
  return b;
}

std::string state_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    json rr = json::array(), ri = json::array();
    for (int c = 0; c < rho.dim(); ++c) {
      rr.push_back(rho.matrix()(r, c).real());
      ri.push_back(rho.matrix()(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return json{{"dim", rho.dim()}, {"re", re}, {"im", im}}.dump(2);
}

DensityMatrix state_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("re"))
    throw Error(ErrorCode::InvalidInput, "state JSON needs \"dim\" and \"re\"");
  const int dim = j["dim"].get<int>();
  if (dim != 4 && dim != 8) throw Error(ErrorCode::InvalidState, "\"dim\" must be 4 or 8");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto fill = [&](const json& a, bool imag) {
    if (!a.is_array() || static_cast<int>(a.size()) != dim) throw Error(ErrorCode::InvalidInput, "matrix row count mismatch");
    for (int r = 0; r < dim; ++r) {
      if (!a[r].is_array() || static_cast<int>(a[r].size()) != dim)
        throw Error(ErrorCode::InvalidInput, "matrix column count mismatch");
      for (int c = 0; c < dim; ++c) {
        const double v = a[r][c].get<double>();
        if (imag) m(r, c) += std::complex<double>(0, v);
        else m(r, c) += v;
      }
    }
  };
  fill(j["re"], false);
  if (j.contains("im")) fill(j["im"], true);
  return DensityMatrix::from_matrix(m);
}

std::string settings_to_json(const MeasurementSettings& s) {
  json out = json::array();
  for (const auto& party : s.parties) out.push_back(json::array({party[0], party[1]}));
  return out.dump(2);
}

MeasurementSettings settings_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_array() || (j.size() != 2 && j.size() != 3))
    throw Error(ErrorCode::InvalidInput, "settings JSON must list 2 or 3 parties");
  MeasurementSettings s;
  for (const auto& party : j) {
    if (!party.is_array() || party.size() != 2) throw Error(ErrorCode::InvalidInput, "each party needs two vectors");
    std::array<Vec3, 2> v{};
    for (int i = 0; i < 2; ++i) {
      if (!party[i].is_array() || party[i].size() != 3)
        throw Error(ErrorCode::InvalidInput, "measurement vectors need three components");
      for (int k = 0; k < 3; ++k) v[i][k] = party[i][k].get<double>();
    }
    s.parties.push_back(v);
  }
  validate_settings(s, s.size());
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace boxlab
