// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBLAB_CONTINUOUS_CHECKS_H_
#define SUBLAB_CONTINUOUS_CHECKS_H_

#include <cstdint>

#include <Eigen/Dense>

#include "sublab/continuous.h"
#include "sublab/errors.h"

namespace sublab {

template <typename Derived>
bool InUnitCube(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite() && (x.array() >= 0.0).all() && (x.array() <= 1.0).all();
}

// y + eps * (1 - y) (.) s. Stays in the cube for y, s in the cube.
template <typename DerivedY, typename DerivedS>
Vector mgfw_mask_update(const Eigen::MatrixBase<DerivedY>& y,
                        const Eigen::MatrixBase<DerivedS>& s, double eps) {
  if (y.size() != s.size()) {
    throw InvalidArgument("mask update: dimension mismatch");
  }
  if (!InUnitCube(y) || !InUnitCube(s)) {
    throw InvalidArgument("mask update: y and s must lie in [0,1]^n");
  }
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidArgument("mask update: step must be in (0, 1]");
  }
  Vector next = y + eps * (1.0 - y.array()).matrix().cwiseProduct(s);
  return next.cwiseMin(1.0);
}

// Worst coordinate of |fd_u - g_u| / max(1, |g_u|) where fd is the central
// difference with step h. x must satisfy h <= x_u <= 1 - h.
double grad_check(const ContinuousFunction& f, const Vector& x, double h);

struct DrCheck {
  bool dr = true;
  // On failure: x <= y with grad_u(y) > grad_u(x).
  Vector x;
  Vector y;
  int coordinate = -1;
};

// Samples pairs x <= y and tests grad F(y) <= grad F(x) coordinate-wise.
DrCheck dr_check(const ContinuousFunction& f, int samples, std::uint64_t seed);

struct GammaEstimate {
  double gamma = 1.0;
  Vector x;
  Vector y;
  bool has_witness = false;
};

// min over sampled x <= y with F(y) > F(x) of <y - x, grad F(x)> / (F(y) -
// F(x)), clamped to [0, 1]. The samples always include x = 0 paired with
// every cube vertex (n <= 12), where this ratio is smallest for the
// quadratic families. An estimate from above of the true gamma.
GammaEstimate weak_dr_gamma(const ContinuousFunction& f, int samples,
                            std::uint64_t seed);

// Largest sampled ||grad F(x) - grad F(y)|| / ||x - y||.
double sampled_smoothness(const ContinuousFunction& f, int samples,
                          std::uint64_t seed);

// True iff grad F >= -tol on every sampled point.
bool sampled_monotone(const ContinuousFunction& f, int samples,
                      std::uint64_t seed, double tol = 1e-12);

}  // namespace sublab

#endif  // SUBLAB_CONTINUOUS_CHECKS_H_
