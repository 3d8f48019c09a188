#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Table2 = std::array<double, 16>;
using Table3 = std::array<double, 64>;

inline int idx2(int x, int y, int a, int b) { return x * 8 + y * 4 + a * 2 + b; }
inline int idx3(int x, int y, int z, int a, int b, int c) { return x * 32 + y * 16 + z * 8 + a * 4 + b * 2 + c; }

inline Table2 pr(int al, int be, int ga) {
  Table2 t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[idx2(x, y, a, b)] = ((a ^ b) == ((x & y) ^ (al & x) ^ (be & y) ^ ga)) ? 0.5 : 0.0;
  return t;
}

inline Table2 det(int al, int be, int ga, int ep) {
  Table2 t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[idx2(x, y, (al & x) ^ be, (ga & y) ^ ep)] = 1.0;
  return t;
}

inline Table2 noise() {
  Table2 t;
  t.fill(0.25);
  return t;
}

inline Table2 mixture(const Table2& p, const Table2& q, double w) {
  Table2 t{};
  for (int i = 0; i < 16; ++i) t[i] = w * p[i] + (1 - w) * q[i];
  return t;
}

inline double corr(const Table2& t, int x, int y) {
  double e = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) e += ((a + b) % 2 ? -1.0 : 1.0) * t[idx2(x, y, a, b)];
  return e;
}

// The four CHSH-type functions written out term by term.
inline std::array<double, 4> bell(const Table2& t) {
  const double e00 = corr(t, 0, 0), e01 = corr(t, 0, 1), e10 = corr(t, 1, 0), e11 = corr(t, 1, 1);
  return {std::abs(e00 + e01 + e10 - e11), std::abs(e00 - e01 + e10 + e11), std::abs(e00 + e01 - e10 + e11),
          std::abs(e00 - e01 - e10 - e11)};
}

inline std::array<double, 4> mermin(const Table2& t) {
  const double e00 = corr(t, 0, 0), e01 = corr(t, 0, 1), e10 = corr(t, 1, 0), e11 = corr(t, 1, 1);
  return {std::abs(e00 - e11), std::abs(e01 - e10), std::abs(e00 + e11), std::abs(e01 + e10)};
}

inline double pair_min(const std::array<double, 4>& f) {
  const double a = f[0], b = f[1], c = f[2], d = f[3];
  return std::min({std::abs(std::abs(a - b) - std::abs(c - d)), std::abs(std::abs(a - c) - std::abs(b - d)),
                   std::abs(std::abs(a - d) - std::abs(b - c))});
}

inline double bell_discord(const Table2& t) { return pair_min(bell(t)); }
inline double mermin_discord(const Table2& t) { return pair_min(mermin(t)); }

using Vec3 = std::array<double, 3>;
using C = std::complex<double>;

inline Eigen::Matrix2cd spin_projector(const Vec3& n, int outcome) {
  const double s = outcome ? -1.0 : 1.0;
  Eigen::Matrix2cd m;
  m << C(1 + s * n[2], 0), C(s * n[0], -s * n[1]), C(s * n[0], s * n[1]), C(1 - s * n[2], 0);
  return m / 2.0;
}

// Born rule by explicit index arithmetic, no Kronecker helper.
inline Table2 born2(const Eigen::Matrix4cd& rho, const std::array<std::array<Vec3, 2>, 2>& s) {
  Table2 t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Eigen::Matrix2cd pa = spin_projector(s[0][x], a), pb = spin_projector(s[1][y], b);
          C tr = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) tr += pa(i / 2, j / 2) * pb(i % 2, j % 2) * rho(j, i);
          t[idx2(x, y, a, b)] = tr.real();
        }
  return t;
}

inline Table3 born3(const Eigen::MatrixXcd& rho, const std::array<std::array<Vec3, 2>, 3>& s) {
  Table3 t{};
  for (int in = 0; in < 8; ++in)
    for (int out = 0; out < 8; ++out) {
      const int x = in >> 2, y = (in >> 1) & 1, z = in & 1, a = out >> 2, b = (out >> 1) & 1, c = out & 1;
      const Eigen::Matrix2cd pa = spin_projector(s[0][x], a), pb = spin_projector(s[1][y], b),
                             pc = spin_projector(s[2][z], c);
      C tr = 0;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          tr += pa(i >> 2, j >> 2) * pb((i >> 1) & 1, (j >> 1) & 1) * pc(i & 1, j & 1) * rho(j, i);
      t[idx3(x, y, z, a, b, c)] = tr.real();
    }
  return t;
}

inline Eigen::Matrix4cd pure2(C c00, C c01, C c10, C c11) {
  Eigen::Vector4cd v(c00, c01, c10, c11);
  v.normalize();
  return v * v.adjoint();
}

inline double corr3(const Table3& t, int x, int y, int z) {
  double e = 0;
  for (int o = 0; o < 8; ++o) e += (__builtin_popcount(o) % 2 ? -1.0 : 1.0) * t[x * 32 + y * 16 + z * 8 + o];
  return e;
}

// Svetlichny box: a^b^c = xy^xz^yz.
inline Table3 svetlichny() {
  Table3 t{};
  for (int in = 0; in < 8; ++in)
    for (int out = 0; out < 8; ++out) {
      const int x = in >> 2, y = (in >> 1) & 1, z = in & 1;
      if (__builtin_popcount(out) % 2 == ((x & y) ^ (x & z) ^ (y & z))) t[in * 8 + out] = 0.25;
    }
  return t;
}

}  // namespace oracle
