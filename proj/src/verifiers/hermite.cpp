// Copyright 2026 The evoharness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evo/verifiers/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace evo::verifiers {

std::string to_string(HermiteBasis b) {
  return b == HermiteBasis::physicist ? "physicist" : "probabilist";
}

HermiteBasis hermite_basis_from_string(const std::string& s) {
  if (s == "physicist") return HermiteBasis::physicist;
  if (s == "probabilist") return HermiteBasis::probabilist;
  throw std::invalid_argument("unknown Hermite basis: " + s);
}

namespace {

// Compensated (double-double) scalar. High orders of the series sit near
// the edge of double precision, and the verifier must detect sign dips an
// optimizer would otherwise tune below one ulp; ~31 effective digits keep
// it ahead of the search. The same pipeline instantiated on plain double
// is the optimizer's cheap screening scorer.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Scalar concept shared by the two instantiations.
inline DD s_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}
inline DD s_sub(DD a, DD b) { return s_add(a, {-b.hi, -b.lo}); }
inline DD s_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}
inline DD s_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}
inline DD s_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = s_sub(a, s_mul_d(b, q1));
  double q2 = r.hi / b.hi;
  r = s_sub(r, s_mul_d(b, q2));
  double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return s_add(q, {q3, 0.0});
}
inline int s_sign(DD a) {
  if (a.hi > 0.0) return 1;
  if (a.hi < 0.0) return -1;
  if (a.lo > 0.0) return 1;
  if (a.lo < 0.0) return -1;
  return 0;
}
inline double s_plain(DD a) { return a.hi + a.lo; }
inline DD s_from(double x) { return {x, 0.0}; }

inline double s_add(double a, double b) { return a + b; }
inline double s_sub(double a, double b) { return a - b; }
inline double s_mul(double a, double b) { return a * b; }
inline double s_mul_d(double a, double b) { return a * b; }
inline double s_div(double a, double b) { return a / b; }
inline int s_sign(double a) { return a > 0.0 ? 1 : (a < 0.0 ? -1 : 0); }
inline double s_plain(double a) { return a; }

template <typename S>
using Poly = std::vector<S>;  // ascending monomial coefficients

template <typename S>
S poly_eval(const Poly<S>& c, double x) {
  S acc{};
  for (size_t i = c.size(); i-- > 0;) {
    acc = s_add(s_mul_d(acc, x), c[i]);
  }
  return acc;
}

template <typename S>
Poly<S> poly_derivative(const Poly<S>& c) {
  Poly<S> d;
  d.reserve(c.size() > 0 ? c.size() - 1 : 0);
  for (size_t i = 1; i < c.size(); ++i) d.push_back(s_mul_d(c[i], double(i)));
  return d;
}

template <typename S>
int poly_degree(const Poly<S>& c) {
  for (size_t i = c.size(); i-- > 0;) {
    if (s_sign(c[i]) != 0) return int(i);
  }
  return -1;
}

template <typename S>
double poly_bisect(const Poly<S>& c, double a, double b, int sign_a,
                   double tol) {
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    double mid = 0.5 * (a + b);
    int sm = s_sign(poly_eval(c, mid));
    if (sm == 0) return mid;
    if (sm == sign_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Strict sign changes on (lo, hi) through the derivative chain: p is
// strictly monotone between consecutive sign changes of p', so each
// monotone piece holds at most one crossing. chain[level] is the level-th
// derivative.
template <typename S>
std::vector<double> chain_sign_changes(const std::vector<Poly<S>>& chain,
                                       size_t level, double lo, double hi) {
  const Poly<S>& c = chain[level];
  int deg = poly_degree(c);
  if (deg <= 0 || lo >= hi) return {};
  if (deg == 1) {
    double root = -s_plain(c[0]) / s_plain(c[1]);
    if (root > lo && root < hi) return {root};
    return {};
  }
  std::vector<double> breaks = chain_sign_changes(chain, level + 1, lo, hi);
  breaks.insert(breaks.begin(), lo);
  breaks.push_back(hi);

  const double tol = 1e-14 * std::max(1.0, std::abs(hi) + std::abs(lo));
  std::vector<double> crossings;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    double a = breaks[i], b = breaks[i + 1];
    int sa = s_sign(poly_eval(c, a));
    int sb = s_sign(poly_eval(c, b));
    if (sa == 0 || sb == 0) continue;  // grazing endpoints are not crossings
    if (sa != sb) crossings.push_back(poly_bisect(c, a, b, sa, tol));
  }
  std::sort(crossings.begin(), crossings.end());
  return crossings;
}

template <typename S>
std::vector<double> sign_changes(const Poly<S>& c, double lo, double hi) {
  std::vector<Poly<S>> chain;
  chain.push_back(c);
  while (poly_degree(chain.back()) > 1) {
    chain.push_back(poly_derivative(chain.back()));
  }
  return chain_sign_changes(chain, 0, lo, hi);
}

// Supremum of {u >= 0 : q(u) < 0}; assumes positive leading coefficient.
// The range [1, inf) goes through the reversed polynomial
// q*(w) = w^deg q(1/w) on (0, 1], which keeps every evaluation inside a
// unit box no matter how tiny the leading coefficient is.
template <typename S>
double negative_set_supremum(const Poly<S>& q) {
  int deg = poly_degree(q);
  Poly<S> rev(deg + 1);
  for (int i = 0; i <= deg; ++i) rev[i] = q[deg - i];

  // Far range first: the smallest w-crossing that opens a negative
  // interval is the largest negative u. Near w = 0+ the (positive)
  // leading coefficient owns the sign, so the first interval is safe.
  {
    std::vector<double> points = sign_changes(rev, 0.0, 1.0);
    points.insert(points.begin(), 0.0);
    points.push_back(1.0);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
      if (points[i] <= 0.0) continue;
      double mid = 0.5 * (points[i] + points[i + 1]);
      if (s_sign(poly_eval(rev, mid)) < 0) {
        return 1.0 / points[i];
      }
    }
  }
  // Whole negative set within [0, 1]. A negative interval ends at a
  // crossing: negativity at u = 1 itself is caught by the far-range scan.
  {
    std::vector<double> points = sign_changes(q, 0.0, 1.0);
    points.insert(points.begin(), 0.0);
    points.push_back(1.0);
    for (size_t i = points.size() - 1; i-- > 0;) {
      double mid = 0.5 * (points[i] + points[i + 1]);
      if (s_sign(poly_eval(q, mid)) < 0) {
        return points[i + 1];
      }
    }
  }
  return 0.0;
}

// Basis polynomials B_0..B_max; coefficients are dyadic so the DD
// instantiation carries them exactly.
template <typename S>
std::vector<Poly<S>> basis_table(HermiteBasis basis, int max_order) {
  std::vector<Poly<S>> table;
  table.push_back({S{1.0}});
  if (max_order == 0) return table;
  table.push_back(basis == HermiteBasis::physicist ? Poly<S>{S{}, S{2.0}}
                                                   : Poly<S>{S{}, S{1.0}});
  for (int n = 1; n < max_order; ++n) {
    const Poly<S>& bn = table[n];
    const Poly<S>& bp = table[n - 1];
    Poly<S> next(n + 2);
    double t_factor = basis == HermiteBasis::physicist ? 2.0 : 1.0;
    double prev_factor = basis == HermiteBasis::physicist ? 2.0 * n : 0.5 * n;
    for (size_t i = 0; i < bn.size(); ++i) {
      next[i + 1] = s_add(next[i + 1], s_mul_d(bn[i], t_factor));
    }
    for (size_t i = 0; i < bp.size(); ++i) {
      next[i] = s_sub(next[i], s_mul_d(bp[i], prev_factor));
    }
    table.push_back(std::move(next));
  }
  return table;
}

template <typename S>
double score_uncertainty_impl(const HermiteCandidate& candidate,
                              double trim_relative) {
  const auto& alpha = candidate.coefficients;
  if (alpha.empty()) throw InvalidSolutionError("empty coefficient vector");
  for (double a : alpha) {
    if (!std::isfinite(a)) throw InvalidSolutionError("non-finite coefficient");
  }
  const int k = int(alpha.size()) - 1;
  auto table = basis_table<S>(candidate.basis, 4 * k);

  // Root constraint p(0) = 0: check, then repair by projecting onto the
  // constraint hyperplane at working precision so the repaired series
  // really vanishes at zero.
  S p0{};
  S row_norm2{};
  double scale = 0.0;
  std::vector<S> row(k + 1);
  for (int n = 0; n <= k; ++n) {
    row[n] = table[4 * n][0];
    S term = s_mul_d(row[n], alpha[n]);
    p0 = s_add(p0, term);
    row_norm2 = s_add(row_norm2, s_mul(row[n], row[n]));
    scale = std::max(scale, std::abs(s_plain(term)));
  }
  if (scale == 0.0) throw InvalidSolutionError("all-zero coefficients");
  if (std::abs(s_plain(p0)) > 1e-6 * scale) {
    throw InvalidSolutionError("root constraint p(0) = 0 violated");
  }
  S factor = s_div(p0, row_norm2);
  std::vector<S> repaired(k + 1);
  double max_alpha = 0.0;
  for (int n = 0; n <= k; ++n) {
    repaired[n] = s_sub(S{alpha[n]}, s_mul(factor, row[n]));
    max_alpha = std::max(max_alpha, std::abs(s_plain(repaired[n])));
  }
  if (max_alpha == 0.0) throw InvalidSolutionError("all-zero after repair");

  Poly<S> mono(4 * k + 1);
  for (int n = 0; n <= k; ++n) {
    const auto& b = table[4 * n];
    for (size_t i = 0; i < b.size(); ++i) {
      mono[i] = s_add(mono[i], s_mul(repaired[n], b[i]));
    }
  }

  double max_c = 0.0;
  for (const auto& c : mono) max_c = std::max(max_c, std::abs(s_plain(c)));
  int deg = -1;
  for (size_t i = mono.size(); i-- > 0;) {
    if (std::abs(s_plain(mono[i])) > trim_relative * max_c) {
      deg = int(i);
      break;
    }
  }
  if (deg <= 0) throw InvalidSolutionError("series is numerically zero");
  if (s_sign(mono[deg]) < 0) {
    throw InvalidSolutionError("negative leading behavior (p -> -inf)");
  }

  // p is even; substitute u = t^2.
  Poly<S> q(deg / 2 + 1);
  for (int i = 0; i <= deg; i += 2) q[i / 2] = mono[i];

  double u_sup = negative_set_supremum(q);
  return u_sup / (2.0 * std::numbers::pi);
}

}  // namespace

std::vector<double> hermite_constraint_row(HermiteBasis basis, int k) {
  auto table = basis_table<DD>(basis, 4 * k);
  std::vector<double> row(k + 1);
  for (int n = 0; n <= k; ++n) row[n] = s_plain(table[4 * n][0]);
  return row;
}

std::vector<double> hermite_series_monomials(const HermiteCandidate& c) {
  const int k = int(c.coefficients.size()) - 1;
  if (k < 0) throw InvalidSolutionError("empty coefficient vector");
  auto table = basis_table<DD>(c.basis, 4 * k);
  std::vector<double> out(4 * k + 1, 0.0);
  for (int n = 0; n <= k; ++n) {
    const auto& b = table[4 * n];
    for (size_t i = 0; i < b.size(); ++i) {
      out[i] += c.coefficients[n] * s_plain(b[i]);
    }
  }
  return out;
}

std::vector<double> project_to_constraint(const std::vector<double>& alpha,
                                          const std::vector<double>& row) {
  double dot = 0.0, norm2 = 0.0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    dot += alpha[i] * row[i];
    norm2 += row[i] * row[i];
  }
  std::vector<double> out(alpha);
  if (norm2 == 0.0) return out;
  double scale = dot / norm2;
  for (size_t i = 0; i < alpha.size(); ++i) out[i] -= scale * row[i];
  return out;
}

std::vector<double> polynomial_sign_changes(const std::vector<double>& coeffs,
                                            double lo, double hi) {
  return sign_changes<double>(coeffs, lo, hi);
}

double score_uncertainty(const HermiteCandidate& candidate) {
  return score_uncertainty_impl<DD>(candidate, 1e-26);
}

double score_uncertainty_screen(const HermiteCandidate& candidate) {
  return score_uncertainty_impl<double>(candidate, 1e-13);
}

VerifierRegistry::Entry uncertainty_verifier(const std::string& id,
                                             HermiteBasis required_basis,
                                             int max_order_k) {
  return {id, "uncertainty",
          [required_basis, max_order_k](const json& payload) {
            if (!payload.is_object() || !payload.contains("coefficients") ||
                !payload.at("coefficients").is_array() ||
                !payload.contains("basis") ||
                !payload.at("basis").is_string()) {
              throw SchemaError(
                  "expected object with \"coefficients\" array and \"basis\"");
            }
            HermiteCandidate c;
            for (const auto& v : payload.at("coefficients")) {
              if (!v.is_number()) {
                throw SchemaError("coefficients must be numeric");
              }
              c.coefficients.push_back(v.get<double>());
            }
            std::string basis = payload.at("basis").get<std::string>();
            try {
              c.basis = hermite_basis_from_string(basis);
            } catch (const std::invalid_argument& e) {
              throw SchemaError(e.what());
            }
            if (c.basis != required_basis) {
              return VerifierResult::invalid("basis must be " +
                                             to_string(required_basis));
            }
            if (int(c.coefficients.size()) > max_order_k + 1) {
              return VerifierResult::invalid(
                  "at most " + std::to_string(max_order_k + 1) +
                  " coefficients allowed");
            }
            try {
              return VerifierResult::ok(score_uncertainty(c));
            } catch (const InvalidSolutionError& e) {
              return VerifierResult::invalid(e.what());
            }
          }};
}

}  // namespace evo::verifiers
