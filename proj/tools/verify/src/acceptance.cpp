#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "boxlab/acceptance.hpp"
#include "boxlab/discord2.hpp"
#include "boxlab/polytope.hpp"
#include "boxlab/qstate.hpp"
#include "boxlab/random.hpp"
#include "boxlab/tribox.hpp"

namespace boxlab {

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kPi = std::numbers::pi;

class Check {
 public:
  explicit Check(double tol) : tol_(tol) {}

  void near(double got, double want, const std::string& what) { near(got, want, tol_, what); }

  void near(double got, double want, double tol, const std::string& what) {
    const double e = std::abs(got - want);
    if (!std::isfinite(e)) {
      fail(what + ": non-finite value");
      return;
    }
    worst_ = std::max(worst_, e);
    if (e > tol) {
      std::ostringstream os;
      os << std::setprecision(12) << what << ": got " << got << ", expected " << want;
      fail(os.str());
    }
  }

  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }

  void note(const std::string& s) { notes_.push_back(s); }

  CriterionResult finish(int id, const std::string& title) const {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.pass = failures_ == 0;
    r.worstError = worst_;
    std::ostringstream os;
    if (failures_ > 0) os << failures_ << " failed checks; first: ";
    for (std::size_t i = 0; i < messages_.size(); ++i) os << (i ? "; " : "") << messages_[i];
    for (const auto& n : notes_) os << (os.tellp() > 0 ? "; " : "") << n;
    r.detail = os.str();
    return r;
  }

 private:
  void fail(const std::string& msg) {
    if (++failures_ <= 3) messages_.push_back(msg);
  }

  double tol_;
  double worst_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* name, double v) {
  std::ostringstream os;
  os << name << "=" << std::setprecision(6) << v;
  return os.str();
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  return g;
}

double max_bell(const BipartiteBox& P) {
  const auto b = bell_functions(P);
  return *std::max_element(b.v.begin(), b.v.end());
}

double max_mermin(const BipartiteBox& P) {
  const auto m = mermin_functions(P);
  return *std::max_element(m.v.begin(), m.v.end());
}

BipartiteBox schmidt_box(double theta, const std::string& settings, const ParamMap& sp = {}) {
  return born_box2(make_state("Schmidt", {{"theta", theta}}), settings_catalog(settings, sp));
}

CriterionResult c1() {
  Check ck(kClosedFormTol);
  const BipartiteBox pr = vertex(VertexId::pr(0, 0, 0));
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const BipartiteBox P = isotropic(pr, p);
    ck.near(bell_discord(P), 4 * p, fmt("G at p", p));
    ck.near(chsh_value(P, 0, 0, 0), 4 * p, fmt("CHSH000 at p", p));
  }
  return ck.finish(1, "isotropic PR family: G = 4p and CHSH000 = 4p");
}

CriterionResult c2() {
  Check ck(kClosedFormTol);
  const BipartiteBox pr = vertex(VertexId::pr(0, 0, 0));
  for (double theta : grid(0, kPi / 4, 20)) {
    const double s = std::sin(2 * theta), tau = s * s;
    const BipartiteBox P = schmidt_box(theta, "BSb");
    ck.near(max_abs_diff(P, isotropic(pr, s / kSqrt2)), 0, fmt("box vs isotropic PR at theta", theta));
    ck.near(bell_discord(P), 2 * std::sqrt(2 * tau), fmt("G at theta", theta));
    ck.near(max_bell(P), 2 * std::sqrt(2 * tau), fmt("CHSH at theta", theta));
  }
  return ck.finish(2, "Schmidt states, BSb settings: isotropic PR with G = CHSH = 2 sqrt(2 tau)");
}

CriterionResult c3() {
  Check ck(kClosedFormTol);
  for (double theta : grid(0, kPi / 4, 20)) {
    const double s = std::sin(2 * theta), tau = s * s;
    const BipartiteBox P = schmidt_box(theta, "PRQ", {{"tau", tau}});
    ck.near(max_bell(P), 2 * std::sqrt(1 + tau), fmt("CHSH at tau", tau));
    ck.near(bell_discord(P), 4 * tau / std::sqrt(1 + tau), fmt("G at tau", tau));
  }
  return ck.finish(3, "PRQ settings: CHSH = 2 sqrt(1+tau), G = 4 tau / sqrt(1+tau)");
}

CriterionResult c4() {
  Check ck(kClosedFormTol);
  for (double theta : grid(0, kPi / 4, 20)) {
    const double s = std::sin(2 * theta), tau = s * s;
    const BipartiteBox M = schmidt_box(theta, "MSb");
    ck.near(mermin_discord(M), 2 * std::sqrt(tau), fmt("Q (MSb) at tau", tau));
    ck.near(max_mermin(M), 2 * std::sqrt(tau), fmt("steering value at tau", tau));
    const auto flags = steering_check(M);
    const bool steer = std::any_of(flags.begin(), flags.end(), [](bool b) { return b; });
    if (std::abs(2 * std::sqrt(tau) - kSqrt2) > 1e-6)
      ck.expect(steer == (2 * std::sqrt(tau) > kSqrt2), fmt("steering flag at tau", tau));
    const BipartiteBox C = schmidt_box(theta, "CSB", {{"tau", tau}});
    ck.near(mermin_discord(C), 2 * kSqrt2 * tau / std::sqrt(1 + tau), fmt("Q (CSB) at tau", tau));
  }
  return ck.finish(4, "Mermin settings: Q = 2 sqrt(tau) with steering vs sqrt(2); CSB Q = 2 sqrt(2) tau / sqrt(1+tau)");
}

CriterionResult c5() {
  Check ck(kClosedFormTol);
  for (double p : grid(0, 1, 20)) {
    const DensityMatrix rho = make_state("Werner2", {{"p", p}});
    ck.near(bell_discord(born_box2(rho, settings_catalog("BSb"))), 2 * kSqrt2 * p, fmt("G at p", p));
    ck.near(mermin_discord(born_box2(rho, settings_catalog("MSb"))), 2 * p, fmt("Q at p", p));
  }
  return ck.finish(5, "Werner two-qubit: G = 2 sqrt(2) p, Q = 2p");
}

CriterionResult c6() {
  Check ck(kClosedFormTol);
  const DensityMatrix rho = make_state("PsiPlus");
  const BipartiteBox noise = vertex(VertexId::noise());
  for (double p : grid(0.5, 1, 21)) {
    const BipartiteBox P = born_box2(rho, settings_catalog("meb1", {{"p", p}}));
    try {
      const DecompositionResult d = three_decomposition(P);
      ck.near(d.mu, std::sqrt(1 - p), fmt("mu at p", p));
      ck.near(d.nu, std::sqrt(p) - std::sqrt(1 - p), fmt("nu at p", p));
      ck.expect(d.prId == VertexId::pr(0, 0, 0), fmt("PR label PR000 at p", p));
      if (d.status == DecompositionStatus::Ok) ck.near(max_abs_diff(d.residual, noise), 0, fmt("residual vs Noise at p", p));
      ck.near(d.reconstructionError, 0, fmt("reconstruction at p", p));
    } catch (const Error& e) {
      ck.expect(false, std::string("decomposition threw: ") + e.what());
    }
  }
  return ck.finish(6, "Bell-state 3-decomposition: mu = sqrt(1-p), nu = sqrt(p) - sqrt(1-p), residual Noise");
}

CriterionResult c7() {
  Check ck(kClosedFormTol);
  for (double theta : grid(0, kPi / 4, 20)) {
    const double s = std::sin(2 * theta);
    {
      const BipartiteBox P = schmidt_box(theta, "BSb");
      ck.near(total_correlation(P), 2 * kSqrt2 * s, fmt("BSb T at s", s));
      ck.near(bell_discord(P), 2 * kSqrt2 * s, fmt("BSb G at s", s));
    }
    {
      const BipartiteBox P = schmidt_box(theta, "PRQ", {{"tau", s * s}});
      const double want = 4 * s * s / std::sqrt(1 + s * s);
      ck.near(total_correlation(P), want, fmt("PRQ T at s", s));
      ck.near(bell_discord(P), want, fmt("PRQ G at s", s));
    }
    {
      const BipartiteBox P = schmidt_box(theta, "ZSb1");
      const auto c = classical_correlation(P);
      ck.near(c.value, kSqrt2 * s * (1 - s), fmt("ZSb1 C at s", s));
      ck.near(total_correlation(P), kSqrt2 * s * (1 + s), fmt("ZSb1 T at s", s));
      ck.near(bell_discord(P), 2 * kSqrt2 * s, fmt("ZSb1 G at s", s));
      if (c.value > 1e-6) ck.expect(c.sign < 0, fmt("ZSb1 sign (T < G) at s", s));
    }
    {
      const BipartiteBox P = schmidt_box(theta, "MSb1");
      ck.near(total_correlation(P), 2 * s, fmt("MSb1 T at s", s));
      ck.near(mermin_discord(P), 2 * s, fmt("MSb1 Q at s", s));
    }
    {
      const BipartiteBox P = schmidt_box(theta, "CSB2");
      ck.near(classical_correlation(P).value, s * (1 - s), fmt("CSB2 C at s", s));
      ck.near(total_correlation(P), s * (1 + s), fmt("CSB2 T at s", s));
      ck.near(mermin_discord(P), 2 * s, fmt("CSB2 Q at s", s));
    }
  }
  for (double p : grid(0, 1, 20)) {
    const BipartiteBox P = born_box2(make_state("Werner2", {{"p", p}}), settings_catalog("BMWb1", {{"p", p}}));
    const double a = std::sqrt(p), b = std::sqrt(1 - p);
    const double G = 2 * kSqrt2 * p * std::abs(a - b);
    const double Q = kSqrt2 * p * std::abs(a + b - std::abs(a - b));
    ck.near(bell_discord(P), G, fmt("BMWb1 G at p", p));
    ck.near(mermin_discord(P), Q, fmt("BMWb1 Q at p", p));
    ck.near(total_correlation(P), G + Q, fmt("BMWb1 T at p", p));
  }
  return ck.finish(7, "additivity catalog: T, G, Q, C closed forms for BSb, PRQ, ZSb1, MSb1, CSB2, BMWb1");
}

CriterionResult c8(std::uint64_t seed) {
  Check ck(kEps);
  Rng rng(seed);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto r = monogamy_checks(random_ns_box(rng));
    if (!r.holds) ++violations;
    ck.near(std::max(0.0, -std::min(r.bellMargin, r.discordMargin)), 0, "random NS box margin");
  }
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = (i % 2 == 0) ? random_pure_state(rng, 2) : random_mixed_state(rng, 2);
    const auto r = monogamy_checks(born_box2(rho, random_settings(rng, 2)));
    if (!r.holds) ++violations;
    ck.near(std::max(0.0, -std::min(r.bellMargin, r.discordMargin)), 0, "random quantum box margin");
  }
  ck.expect(violations == 0, std::to_string(violations) + " monogamy violations");
  return ck.finish(8, "monogamy: B_i + B_j <= 4 and G + 2Q <= 4 on 10^4 NS boxes and 10^3 quantum boxes");
}

Vec3 random_ball(Rng& rng) {
  const Vec3 u = random_unit(rng);
  const double r = std::cbrt(rng.uniform());
  return {r * u[0], r * u[1], r * u[2]};
}

Vec3 orthogonal_unit(Rng& rng, const Vec3& n) {
  const Vec3 v = random_unit(rng);
  const double d = v[0] * n[0] + v[1] * n[1] + v[2] * n[2];
  Vec3 w{v[0] - d * n[0], v[1] - d * n[1], v[2] - d * n[2]};
  const double len = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  return {w[0] / len, w[1] / len, w[2] / len};
}

CriterionResult c9(std::uint64_t seed) {
  Check ck(1e-8);
  Rng rng(seed);
  struct Cq {
    BlochData data;
    Vec3 basis;
    bool classicalAlice;
  };
  std::vector<Cq> states;
  for (int i = 0; i < 1000; ++i) {
    const bool cq = i % 2 == 0;
    const Vec3 n = random_unit(rng);
    const double p0 = rng.uniform();
    const Vec3 s0 = random_ball(rng), s1 = random_ball(rng);
    states.push_back({bloch_data(cq ? cq_state(p0, n, s0, s1) : qc_state(p0, n, s0, s1)), n, cq});
  }
  double worstGeneral = 0, worstAligned = 0;
  for (int j = 0; j < 1000; ++j) {
    const MeasurementSettings s = random_settings(rng, 2);
    for (const auto& st : states) {
      const BipartiteBox P = born_box2(st.data, s);
      worstGeneral = std::max({worstGeneral, bell_discord(P), mermin_discord(P)});
      MeasurementSettings aligned = s;
      const int k = st.classicalAlice ? 0 : 1;
      aligned.parties[k][0] = st.basis;
      aligned.parties[k][1] = orthogonal_unit(rng, st.basis);
      const BipartiteBox Q = born_box2(st.data, aligned);
      worstAligned = std::max({worstAligned, bell_discord(Q), mermin_discord(Q)});
    }
  }
  ck.near(worstGeneral, 0, "max discord over CQ/QC states x random settings");
  ck.near(worstAligned, 0, "max discord with the classical party measuring along and orthogonal to its basis");
  double worstCompatible = 0;
  for (int i = 0; i < 1000; ++i) {
    const BlochData d = bloch_data(random_mixed_state(rng, 2));
    MeasurementSettings s = random_settings(rng, 2);
    if (i % 2 == 0) s.parties[0][1] = s.parties[0][0];
    else s.parties[1][1] = s.parties[1][0];
    const BipartiteBox P = born_box2(d, s);
    worstCompatible = std::max({worstCompatible, bell_discord(P), mermin_discord(P)});
  }
  ck.near(worstCompatible, 0, "max discord with compatible measurements");
  ck.note(fmt("general", worstGeneral) + ", " + fmt("aligned", worstAligned) + ", " + fmt("compatible", worstCompatible));
  return ck.finish(9, "CQ/QC nullity over 10^3 states x 10^3 settings, and compatible-settings nullity");
}

CriterionResult c10(std::uint64_t seed) {
  Check ck(0);
  Rng rng(seed);
  int disagree = 0, boundary = 0, nonlocal = 0;
  for (int i = 0; i < 10000; ++i) {
    const BipartiteBox P = random_ns_box(rng);
    double best = -1e300;
    for (int c = 0; c < 8; ++c) best = std::max(best, chsh_value(P, (c >> 2) & 1, (c >> 1) & 1, c & 1));
    if (std::abs(best - 2.0) <= kEps) {
      ++boundary;
      continue;
    }
    const bool lp = is_local(P).inside;
    if (!lp) ++nonlocal;
    if (lp != chsh_local(P)) ++disagree;
  }
  ck.expect(disagree == 0, std::to_string(disagree) + " disagreements");
  ck.note(std::to_string(nonlocal) + " nonlocal, " + std::to_string(boundary) + " boundary cases skipped");
  return ck.finish(10, "Fine cross-check: LP locality agrees with the eight CHSH inequalities on 10^4 boxes");
}

CriterionResult c11(std::uint64_t seed) {
  Check ck(1e-12);
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    const BipartiteBox P = random_ns_box(rng);
    double gmin = 1e9, gmax = -1e9, qmin = 1e9, qmax = -1e9, tmin = 1e9, tmax = -1e9;
    for (const Lro& g : lro_group()) {
      const BipartiteBox R = apply_lro(P, g);
      const double G = bell_discord(R), Q = mermin_discord(R), T = total_correlation(R);
      gmin = std::min(gmin, G), gmax = std::max(gmax, G);
      qmin = std::min(qmin, Q), qmax = std::max(qmax, Q);
      tmin = std::min(tmin, T), tmax = std::max(tmax, T);
    }
    ck.near(gmax - gmin, 0, "G spread");
    ck.near(qmax - qmin, 0, "Q spread");
    ck.near(tmax - tmin, 0, "T spread");
  }
  return ck.finish(11, "LRO invariance of G, Q, T over all 128 group elements on 100 boxes");
}

CriterionResult c12() {
  Check ck(kClosedFormTol);
  for (double theta : grid(0, kPi / 4, 20)) {
    const DensityMatrix rho = make_state("GGHZ", {{"theta", theta}});
    const double s = std::sin(2 * theta);
    ck.near(svetlichny_discord(born_box3(rho, settings_catalog("SDxy"))), 4 * kSqrt2 * s, fmt("GGHZ G at theta", theta));
    ck.near(mermin3_discord(born_box3(rho, settings_catalog("MDxy"))), 4 * s, fmt("GGHZ Q at theta", theta));
  }
  for (double p : grid(0, 1, 20)) {
    const DensityMatrix rho = make_state("Werner3", {{"p", p}});
    ck.near(svetlichny_discord(born_box3(rho, settings_catalog("SDxy"))), 4 * kSqrt2 * p, fmt("Werner3 G at p", p));
    ck.near(mermin3_discord(born_box3(rho, settings_catalog("MDxy"))), 4 * p, fmt("Werner3 Q at p", p));
  }
  for (double theta : grid(0.05, kPi / 4, 8))
    for (double theta3 : grid(0.05, kPi / 2, 8)) {
      const ParamMap sp{{"theta", theta}, {"theta3", theta3}};
      const auto e = entanglement_params("GhzClass", sp);
      const TripartiteBox P = born_box3(make_state("GhzClass", sp), settings_catalog("Ghose", {{"theta3", theta3}}));
      const double want = 8 * e.threeTangle / std::sqrt(e.c12 * e.c12 + 2 * e.threeTangle);
      ck.near(svetlichny_discord(P), want, fmt("GHZ-class G at theta", theta) + " " + fmt("theta3", theta3));
    }
  const std::vector<std::array<double, 3>> amps = {{1, 1, 1}, {1, 2, 3}, {2, 1, 1}, {0.5, 1, 1.5}, {3, 1, 2}};
  for (const auto& a : amps) {
    const ParamMap sp{{"a", a[0]}, {"b", a[1]}, {"c", a[2]}};
    const auto e = entanglement_params("WClass", sp);
    const DensityMatrix rho = make_state("WClass", sp);
    const TripartiteBox S = born_box3(rho, settings_catalog("SDxz"));
    const TripartiteBox M = born_box3(rho, settings_catalog("MDxz"));
    const std::string tag = "W(" + std::to_string(a[0]).substr(0, 3) + "," + std::to_string(a[1]).substr(0, 3) + "," +
                            std::to_string(a[2]).substr(0, 3) + ")";
    ck.near(svetlichny_discord(S), 4 * kSqrt2 * e.cAssistMin, tag + " G");
    ck.near(mermin3_discord(M), 4 * e.cAssistMin, tag + " Q");
    ck.near(bell_discord(marginal2(S, Pair::AB)), 2 * kSqrt2 * e.c12, tag + " marginal G_AB (SDxz)");
    ck.near(mermin_discord(marginal2(M, Pair::AB)), 2 * e.c12, tag + " marginal Q_AB (MDxz)");
  }
  return ck.finish(12, "tripartite closed forms: GGHZ, Werner3, GHZ-class under Ghose settings, W-class with marginals");
}

CriterionResult c13() {
  Check ck(kClosedFormTol);
  const DensityMatrix rho = make_state("GHZ");
  const TripartiteBox noise = tri_vertex(TriVertexId::noise3());
  for (double p : grid(0.5, 1, 11)) {
    const TripartiteBox P = born_box3(rho, settings_catalog("SMDghz", {{"p", p}}));
    const double G = svetlichny_discord(P), Q = mermin3_discord(P), T = total_correlation3(P);
    try {
      const Decomposition3 d = three_decomposition3(P);
      ck.near(d.mu, std::sqrt(1 - p), fmt("mu at p", p));
      ck.near(d.nu, std::sqrt(p) - std::sqrt(1 - p), fmt("nu at p", p));
      if (!d.degenerate) {
        double diff = 0;
        for (int i = 0; i < TripartiteBox::kSize; ++i) diff = std::max(diff, std::abs(d.residual.data()[i] - noise.data()[i]));
        ck.near(diff, 0, fmt("residual vs Noise3 at p", p));
      }
    } catch (const Error& e) {
      ck.expect(false, std::string("decomposition threw: ") + e.what());
    }
    ck.near(T, 4 * (std::sqrt(p) + std::sqrt(1 - p)), fmt("T at p", p));
    ck.near(G + Q, T, fmt("G + Q vs T at p", p));
    ck.near(G + Q, 4 * std::sqrt(p), fmt("literal G + Q = 4 sqrt(p) at p", p));
    ck.expect(G + 2 * Q <= 8 + kEps, fmt("G + 2Q <= 8 at p", p));
  }
  return ck.finish(13, "GHZ SMDghz family: mu, nu, T = G + Q, literal G + Q = 4 sqrt(p), G + 2Q <= 8");
}

CriterionResult c14() {
  Check ck(kClosedFormTol);
  for (double theta : grid(0.01, kPi / 4, 20)) {
    const double s = std::sin(2 * theta);
    const TripartiteBox P =
        born_box3(make_state("GGHZ", {{"theta", theta}}), settings_catalog("class99", {{"theta", theta}}));
    ck.near(class99_value(P), 1 + 2 * std::sqrt(1 + s * s), fmt("class-99 value at theta", theta));
  }
  const TripartiteBox ghz =
      born_box3(make_state("GGHZ", {{"theta", kPi / 4}}), settings_catalog("class99", {{"theta", kPi / 4}}));
  ck.near(class99_value(ghz), 1 + 2 * kSqrt2, "maximum at theta = pi/4");
  ck.near(class99_value(tri_vertex(TriVertexId::class8())), 5.0, "Class8 representative");
  return ck.finish(14, "class-99: GGHZ value 1 + 2 sqrt(1 + sin^2 2theta), maximum 1 + 2 sqrt(2), Class8 = 5");
}

CriterionResult c15() {
  Check ck(kClosedFormTol);
  const TripartiteBox M = tri_vertex(TriVertexId::mermin3(0, 0, 0, 0));
  const TripartiteBox Q = born_box3(make_state("GHZ"), settings_catalog("MDxy"));
  ck.expect(ghz_paradox_check(M), "Mermin3 box fails the GHZ paradox check");
  ck.expect(ghz_paradox_check(Q), "GHZ state with MDxy fails the GHZ paradox check");
  for (const TripartiteBox* P : {&M, &Q}) {
    ck.near(expectation3(*P, 0, 0, 0), 1, "<A0B0C0>");
    ck.near(expectation3(*P, 0, 1, 1), -1, "<A0B1C1>");
    ck.near(expectation3(*P, 1, 0, 1), -1, "<A1B0C1>");
    ck.near(expectation3(*P, 1, 1, 0), -1, "<A1B1C0>");
  }
  ck.expect(!ghz_paradox_check(tri_vertex(TriVertexId::noise3())), "Noise3 passes the GHZ paradox check");
  return ck.finish(15, "GHZ paradox: Mermin3 box and GHZ with MDxy show the perfect-correlation signs");
}

CriterionResult c16(std::uint64_t seed) {
  Check ck(kClosedFormTol);
  Rng rng(seed);
  const MeasurementSettings mn = settings_catalog("M_N"), mc = settings_catalog("M_C");
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = make_state("BellDiagonal", random_bell_diagonal_weights(rng));
    ck.near(bell_discord(born_box2(rho, mn)), kSqrt2 * mermin_discord(born_box2(rho, mc)), "G(M_N) vs sqrt(2) Q(M_C)");
  }
  return ck.finish(16, "Bell-diagonal states: G(M_N) = sqrt(2) Q(M_C) on 100 random states");
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8(seed);
    case 9: return c9(seed + 1);
    case 10: return c10(seed + 2);
    case 11: return c11(seed + 3);
    case 12: return c12();
    case 13: return c13();
    case 14: return c14();
    case 15: return c15();
    case 16: return c16(seed + 4);
  }
  throw Error(ErrorCode::InvalidInput, "criterion id must be in 1..16");
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 16; ++id) {
    try {
      out.push_back(run_criterion(id, seed));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, 0, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.title;
  os << " (worst error " << std::scientific << std::setprecision(2) << r.worstError << ")";
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

}  // namespace boxlab
