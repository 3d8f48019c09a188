#include "boxlab/box.hpp"

#include <cmath>
#include <sstream>

namespace boxlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::Negative: return "Negative";
    case ErrorCode::Signaling: return "Signaling";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::LpNumericalFailure: return "LpNumericalFailure";
    case ErrorCode::ResidualInvalid: return "ResidualInvalid";
    case ErrorCode::NotInPolytope: return "NotInPolytope";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

namespace {

std::string idx_name(int x, int y, int a, int b) {
  std::ostringstream os;
  os << "[x=" << x << "][y=" << y << "][a=" << a << "][b=" << b << "]";
  return os.str();
}

}  // namespace

std::string validate_table(std::span<const double> p, ErrorCode* code, double tol) {
  auto fail = [&](ErrorCode c, const std::string& msg) {
    if (code) *code = c;
    return msg;
  };
  if (p.size() != BipartiteBox::kSize) {
    return fail(ErrorCode::InvalidInput, "expected 16 entries, got " + std::to_string(p.size()));
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double v = p[BipartiteBox::index(x, y, a, b)];
          if (!std::isfinite(v)) return fail(ErrorCode::InvalidInput, "non-finite entry at " + idx_name(x, y, a, b));
          if (v < -tol) return fail(ErrorCode::Negative, "entry " + idx_name(x, y, a, b) + " = " + std::to_string(v));
        }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      double s = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += p[BipartiteBox::index(x, y, a, b)];
      if (std::abs(s - 1.0) > tol) {
        std::ostringstream os;
        os << "sum over (a,b) at [x=" << x << "][y=" << y << "] is " << s;
        return fail(ErrorCode::NotNormalized, os.str());
      }
    }
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      double m0 = p[BipartiteBox::index(x, 0, a, 0)] + p[BipartiteBox::index(x, 0, a, 1)];
      double m1 = p[BipartiteBox::index(x, 1, a, 0)] + p[BipartiteBox::index(x, 1, a, 1)];
      if (std::abs(m0 - m1) > tol) {
        std::ostringstream os;
        os << "Alice marginal P(a=" << a << "|x=" << x << ") depends on y: " << m0 << " vs " << m1;
        return fail(ErrorCode::Signaling, os.str());
      }
    }
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      double m0 = p[BipartiteBox::index(0, y, 0, b)] + p[BipartiteBox::index(0, y, 1, b)];
      double m1 = p[BipartiteBox::index(1, y, 0, b)] + p[BipartiteBox::index(1, y, 1, b)];
      if (std::abs(m0 - m1) > tol) {
        std::ostringstream os;
        os << "Bob marginal P(b=" << b << "|y=" << y << ") depends on x: " << m0 << " vs " << m1;
        return fail(ErrorCode::Signaling, os.str());
      }
    }
  return {};
}

BipartiteBox make_box(std::span<const double> p, double tol) {
  ErrorCode code{};
  std::string msg = validate_table(p, &code, tol);
  if (!msg.empty()) throw Error(code, msg);
  BipartiteBox box;
  for (int i = 0; i < BipartiteBox::kSize; ++i) box.p_[i] = p[i] < 0.0 ? 0.0 : p[i];
  return box;
}

BipartiteBox make_box_unchecked(const std::array<double, BipartiteBox::kSize>& p) {
  BipartiteBox box;
  box.p_ = p;
  return box;
}

VertexId VertexId::pr(int a, int b, int g) { return {VertexKind::PR, {a & 1, b & 1, g & 1, 0}, 0}; }
VertexId VertexId::det(int a, int b, int g, int e) { return {VertexKind::Det, {a & 1, b & 1, g & 1, e & 1}, 0}; }
VertexId VertexId::mermin_mm(int a, int b, int g) { return {VertexKind::MerminMM, {a & 1, b & 1, g & 1, 0}, 0}; }
VertexId VertexId::mermin_nmm(int index) {
  if (index < 0 || index > 31) throw Error(ErrorCode::InvalidVertex, "MerminNMM index out of range 0..31");
  return {VertexKind::MerminNMM, {(index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1}, index};
}
VertexId VertexId::cc(int a, int b, int g) { return {VertexKind::CC, {a & 1, b & 1, g & 1, 0}, 0}; }
VertexId VertexId::tsirelson(int a, int b, int g) { return {VertexKind::Tsirelson, {a & 1, b & 1, g & 1, 0}, 0}; }
VertexId VertexId::noise() { return {VertexKind::Noise, {}, 0}; }

std::string VertexId::label() const {
  auto bits3 = [&] { return std::to_string(bits[0]) + std::to_string(bits[1]) + std::to_string(bits[2]); };
  switch (kind) {
    case VertexKind::PR: return "PR" + bits3();
    case VertexKind::Det: return "Det" + bits3() + std::to_string(bits[3]);
    case VertexKind::MerminMM: return "MerminMM" + bits3();
    case VertexKind::MerminNMM: return "MerminNMM" + std::to_string(index);
    case VertexKind::CC: return "CC" + bits3();
    case VertexKind::Tsirelson: return "Tsirelson" + bits3();
    case VertexKind::Noise: return "Noise";
  }
  return "?";
}

namespace {

bool parse_bits(const std::string& s, std::size_t n, std::array<int, 4>& out) {
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != '0' && s[i] != '1') return false;
    out[i] = s[i] - '0';
  }
  return true;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

VertexId parse_vertex_id(const std::string& label) {
  std::array<int, 4> b{};
  auto rest = [&](const std::string& prefix) { return label.substr(prefix.size()); };
  if (label == "Noise") return VertexId::noise();
  if (starts_with(label, "MerminNMM")) {
    const std::string r = rest("MerminNMM");
    if (!r.empty() && r.find_first_not_of("0123456789") == std::string::npos && r.size() <= 2)
      return VertexId::mermin_nmm(std::stoi(r));
  } else if (starts_with(label, "MerminMM")) {
    if (parse_bits(rest("MerminMM"), 3, b)) return VertexId::mermin_mm(b[0], b[1], b[2]);
  } else if (starts_with(label, "Tsirelson")) {
    if (parse_bits(rest("Tsirelson"), 3, b)) return VertexId::tsirelson(b[0], b[1], b[2]);
  } else if (starts_with(label, "PR")) {
    if (parse_bits(rest("PR"), 3, b)) return VertexId::pr(b[0], b[1], b[2]);
  } else if (starts_with(label, "Det")) {
    if (parse_bits(rest("Det"), 4, b)) return VertexId::det(b[0], b[1], b[2], b[3]);
  } else if (starts_with(label, "CC")) {
    if (parse_bits(rest("CC"), 3, b)) return VertexId::cc(b[0], b[1], b[2]);
  }
  throw Error(ErrorCode::UnknownName, "unknown bipartite vertex label '" + label + "'");
}

namespace {

using Table = std::array<double, BipartiteBox::kSize>;

template <class Rule>
Table table_from_rule(Rule rule) {
  Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t[BipartiteBox::index(x, y, a, b)] = rule(x, y, a, b);
  return t;
}

Table det_table(int aAlpha, int aBeta, int bGamma, int bEps) {
  return table_from_rule([&](int x, int y, int a, int b) {
    return (a == ((aAlpha * x) ^ aBeta) && b == ((bGamma * y) ^ bEps)) ? 1.0 : 0.0;
  });
}

Table pr_table(int al, int be, int ga) {
  return table_from_rule([&](int x, int y, int a, int b) {
    return ((a ^ b) == ((x * y) ^ (al * x) ^ (be * y) ^ ga)) ? 0.5 : 0.0;
  });
}

Table half_sum(const Table& s, const Table& t) {
  Table r{};
  for (int i = 0; i < BipartiteBox::kSize; ++i) r[i] = 0.5 * (s[i] + t[i]);
  return r;
}

}  // namespace

BipartiteBox vertex(const VertexId& id) {
  const auto& v = id.bits;
  switch (id.kind) {
    case VertexKind::PR:
      return make_box_unchecked(pr_table(v[0], v[1], v[2]));
    case VertexKind::Det:
      return make_box_unchecked(det_table(v[0], v[1], v[2], v[3]));
    case VertexKind::CC:
      return make_box_unchecked(table_from_rule([&](int x, int y, int a, int b) {
        return ((a ^ b) == ((v[0] * x) ^ (v[1] * y) ^ v[2])) ? 0.5 : 0.0;
      }));
    case VertexKind::MerminMM: {
      // beta = 0: PR rule on the diagonal x == y, uniform off it; beta = 1: the reverse.
      const int onDiagonal = v[1] == 0 ? 1 : 0;
      return make_box_unchecked(table_from_rule([&](int x, int y, int a, int b) {
        const bool diag = (x == y);
        if (diag != static_cast<bool>(onDiagonal)) return 0.25;
        return ((a ^ b) == ((x * y) ^ (v[0] * x) ^ (v[1] * y) ^ v[2])) ? 0.5 : 0.0;
      }));
    }
    case VertexKind::MerminNMM: {
      const int variant = (id.index >> 4) & 1;
      const int al = v[0], be = v[1], ga = v[2], ep = v[3];
      Table t1, t2;
      if (variant == 0) {
        t1 = det_table(0, al, 0, be);
        t2 = det_table(1, ga, 1, ep);
      } else {
        t1 = det_table(0, al, 1, be);
        t2 = det_table(1, ga, 0, ep);
      }
      return make_box_unchecked(half_sum(t1, t2));
    }
    case VertexKind::Tsirelson: {
      const double w = 1.0 / std::sqrt(2.0);
      Table t = pr_table(v[0], v[1], v[2]);
      for (double& e : t) e = w * e + (1.0 - w) * 0.25;
      return make_box_unchecked(t);
    }
    case VertexKind::Noise: {
      Table t;
      t.fill(0.25);
      return make_box_unchecked(t);
    }
  }
  throw Error(ErrorCode::InvalidVertex, "unhandled vertex kind");
}

std::vector<VertexId> all_vertex_ids(VertexKind kind) {
  std::vector<VertexId> ids;
  switch (kind) {
    case VertexKind::PR:
    case VertexKind::MerminMM:
    case VertexKind::CC:
    case VertexKind::Tsirelson:
      for (int i = 0; i < 8; ++i) ids.push_back({kind, {(i >> 2) & 1, (i >> 1) & 1, i & 1, 0}, 0});
      break;
    case VertexKind::Det:
      for (int i = 0; i < 16; ++i) ids.push_back(VertexId::det((i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1));
      break;
    case VertexKind::MerminNMM:
      for (int i = 0; i < 32; ++i) ids.push_back(VertexId::mermin_nmm(i));
      break;
    case VertexKind::Noise:
      ids.push_back(VertexId::noise());
      break;
  }
  return ids;
}

BipartiteBox mix(std::span<const BipartiteBox> boxes, std::span<const double> weights) {
  if (boxes.size() != weights.size() || boxes.empty())
    throw Error(ErrorCode::BadWeights, "need one weight per box and at least one box");
  double total = 0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < -kEps) throw Error(ErrorCode::BadWeights, "negative weight " + std::to_string(w));
    total += w;
  }
  if (std::abs(total - 1.0) > kEps) throw Error(ErrorCode::BadWeights, "weights sum to " + std::to_string(total));
  Table t{};
  for (std::size_t k = 0; k < boxes.size(); ++k)
    for (int i = 0; i < BipartiteBox::kSize; ++i) t[i] += weights[k] * boxes[k].data()[i];
  return make_box(t);
}

BipartiteBox isotropic(const BipartiteBox& extremal, double p) {
  const BipartiteBox parts[2] = {extremal, vertex(VertexId::noise())};
  const double w[2] = {p, 1.0 - p};
  return mix(parts, w);
}

double joint_expectation(const BipartiteBox& P, int x, int y) {
  double e = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) e += sgn_bit(a ^ b) * P(x, y, a, b);
  return e;
}

double marginal_probability(const BipartiteBox& P, Party party, int input, int output) {
  double s = 0;
  for (int o = 0; o < 2; ++o)
    s += party == Party::A ? P(input, 0, output, o) : P(0, input, o, output);
  return s;
}

double marginal_expectation(const BipartiteBox& P, Party party, int input) {
  return marginal_probability(P, party, input, 0) - marginal_probability(P, party, input, 1);
}

std::array<std::array<double, 2>, 2> correlators(const BipartiteBox& P) {
  return {{{joint_expectation(P, 0, 0), joint_expectation(P, 0, 1)},
           {joint_expectation(P, 1, 0), joint_expectation(P, 1, 1)}}};
}

double max_abs_diff(const BipartiteBox& P, const BipartiteBox& Q) {
  double m = 0;
  for (int i = 0; i < BipartiteBox::kSize; ++i) m = std::max(m, std::abs(P.data()[i] - Q.data()[i]));
  return m;
}

}  // namespace boxlab
