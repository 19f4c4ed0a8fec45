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

#pragma once

#include <string>
#include <vector>

#include "evo/verifiers/registry.hpp"

namespace evo::verifiers {

// Basis for the even-order series p(t) = sum_n alpha_n * B_{4n}(t).
// physicist: B_n = H_n (leading coefficient 2^n).
// probabilist: B_n = H_n / 2^n (leading coefficient 1), the rescaling that
// keeps high orders numerically tame.
enum class HermiteBasis { physicist, probabilist };

std::string to_string(HermiteBasis b);
HermiteBasis hermite_basis_from_string(const std::string& s);

struct HermiteCandidate {
  std::vector<double> coefficients;  // alpha_0 .. alpha_k
  HermiteBasis basis = HermiteBasis::physicist;
};

// B_{4n}(0) for n = 0..k; the root constraint p(0) = 0 is
// sum_n alpha_n * B_{4n}(0) = 0.
std::vector<double> hermite_constraint_row(HermiteBasis basis, int k);

// Monomial coefficients (degree 4k) of p(t) = sum alpha_n B_{4n}(t).
std::vector<double> hermite_series_monomials(const HermiteCandidate& c);

// Orthogonal projection of the coefficients onto the p(0) = 0 hyperplane.
std::vector<double> project_to_constraint(const std::vector<double>& alpha,
                                          const std::vector<double>& row);

// Smallest r >= 0 with p(t) >= 0 for all |t| >= r, as the squared radius
// over 2*pi: C = r_max^2 / (2*pi). Auto-repairs a slightly violated
// p(0) = 0 constraint (relative drift <= 1e-6) by projection; larger
// drift, an all-zero series, or a negative leading tail throw
// InvalidSolutionError. Runs in compensated arithmetic so that sign dips
// too shallow for plain doubles still register.
double score_uncertainty(const HermiteCandidate& candidate);

// Same pipeline in plain double precision: the optimizer's cheap
// screening score. Not the verification contract.
double score_uncertainty_screen(const HermiteCandidate& candidate);

// All sign-change crossings of the polynomial (ascending monomial
// coefficients) on [lo, hi], ascending. Exposed for the optimizer and for
// oracle tests.
std::vector<double> polynomial_sign_changes(const std::vector<double>& coeffs,
                                            double lo, double hi);

VerifierRegistry::Entry uncertainty_verifier(const std::string& id,
                                             HermiteBasis required_basis,
                                             int max_order_k);

}  // namespace evo::verifiers
