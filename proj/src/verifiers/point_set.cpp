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

#include "evo/verifiers/point_set.hpp"

#include <cmath>
#include <limits>

namespace evo::verifiers {

namespace {

void require_finite(const PointSet2D& ps) {
  for (const auto& p : ps.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidSolutionError("non-finite coordinate");
    }
  }
}

double cross(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

}  // namespace

double max_min_ratio(const PointSet2D& points) {
  const auto& ps = points.points;
  if (ps.size() < 2) throw InvalidSolutionError("need at least 2 points");
  require_finite(points);
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = i + 1; j < ps.size(); ++j) {
      double dx = ps[i].x - ps[j].x;
      double dy = ps[i].y - ps[j].y;
      double d = std::sqrt(dx * dx + dy * dy);
      if (d == 0.0) {
        throw InvalidSolutionError("duplicate points (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
      }
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  return dmax / dmin;
}

double heilbronn_min_area(const PointSet2D& points) {
  const auto& ps = points.points;
  if (ps.size() < 3) throw InvalidSolutionError("need at least 3 points");
  require_finite(points);

  // Container triangle (0,0), (1,0), (0,2); area 1. Barycentric signs of a
  // point p: cross products against each edge, all >= 0 means inside.
  constexpr double ax = 0.0, ay = 0.0;
  constexpr double bx = 1.0, by = 0.0;
  constexpr double cx = 0.0, cy = 2.0;
  for (size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    double s_ab = cross(bx - ax, by - ay, p.x - ax, p.y - ay);
    double s_bc = cross(cx - bx, cy - by, p.x - bx, p.y - by);
    double s_ca = cross(ax - cx, ay - cy, p.x - cx, p.y - cy);
    if (s_ab < 0.0 || s_bc < 0.0 || s_ca < 0.0) {
      throw InvalidSolutionError("point " + std::to_string(i) +
                                 " outside the container triangle");
    }
  }

  double min_area = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = i + 1; j < ps.size(); ++j) {
      for (size_t k = j + 1; k < ps.size(); ++k) {
        double area = 0.5 * std::abs(cross(ps[j].x - ps[i].x,
                                           ps[j].y - ps[i].y,
                                           ps[k].x - ps[i].x,
                                           ps[k].y - ps[i].y));
        min_area = std::min(min_area, area);
      }
    }
  }
  return min_area;
}

PointSet2D point_set_from_payload(const json& payload) {
  if (!payload.is_object() || !payload.contains("points") ||
      !payload.at("points").is_array()) {
    throw SchemaError("expected object with \"points\" array");
  }
  PointSet2D ps;
  for (const auto& row : payload.at("points")) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
        !row[1].is_number()) {
      throw SchemaError("each point must be an [x, y] numeric pair");
    }
    ps.points.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  return ps;
}

namespace {

VerifierResult checked(int expected_count, const PointSet2D& ps,
                       double (*score)(const PointSet2D&)) {
  if (expected_count > 0 &&
      ps.points.size() != static_cast<size_t>(expected_count)) {
    return VerifierResult::invalid(
        "expected " + std::to_string(expected_count) + " points, got " +
        std::to_string(ps.points.size()));
  }
  try {
    return VerifierResult::ok(score(ps));
  } catch (const InvalidSolutionError& e) {
    return VerifierResult::invalid(e.what());
  }
}

}  // namespace

VerifierRegistry::Entry max_min_ratio_verifier(const std::string& id,
                                               int expected_count) {
  return {id, "points", [expected_count](const json& payload) {
            return checked(expected_count, point_set_from_payload(payload),
                           &max_min_ratio);
          }};
}

VerifierRegistry::Entry heilbronn_verifier(const std::string& id,
                                           int expected_count) {
  return {id, "points", [expected_count](const json& payload) {
            return checked(expected_count, point_set_from_payload(payload),
                           &heilbronn_min_area);
          }};
}

}  // namespace evo::verifiers
