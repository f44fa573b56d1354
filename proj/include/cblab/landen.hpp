#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cblab/theta.hpp"

namespace cblab {

// The displayed theta identities for n = 2..6. Each equates an elementary
// symmetric polynomial e_j of the squared zeros b_i of f_{n,tau} with an
// expression in theta_2(0, .) and theta_3(0, .) at tau and n tau.
enum class LandenId { n2, n3, n4_sum, n4_prod, n5_sum, n5_prod, n6_e1, n6_e2, n6_prod };

struct LandenEntry {
  LandenId id;
  std::string_view name;
  int n;
  int j;                  // which e_j the left side is
  int limit_num, limit_den;  // lim e_j / k^j as tau -> i infinity
};

const std::array<LandenEntry, 9>& landen_catalog_entries();
const LandenEntry& landen_entry(LandenId id);
std::optional<LandenId> parse_landen_id(std::string_view name);

struct IdentityReport {
  std::string identity_id;
  UpperHalfPoint tau;
  Complex lhs;
  Complex rhs;
  double residual;  // |lhs - rhs| / max(1, |rhs|)
  double tolerance;
  bool pass;        // residual <= tolerance
};

// prod b_i against theta_2(0,n tau)/theta_3(0,n tau) (n even) or
// n theta_2(0,n tau) theta_3(0,n tau) / (theta_2(0,tau) theta_3(0,tau)) (n odd).
IdentityReport landen_general(int n, const UpperHalfPoint& tau, double tolerance = 1e-10,
                              const SeriesConfig& cfg = {});

// One catalog identity. DenominatorNearZero when a displayed denominator is
// below 1e-12 of its numerator.
IdentityReport landen_catalog(LandenId id, const UpperHalfPoint& tau, double tolerance = 1e-10,
                              const SeriesConfig& cfg = {});

// e_j(b) / k(tau)^j at tau = i y against the rational limit constant.
IdentityReport trig_limit(LandenId id, double y = 30.0, double tolerance = 1e-6,
                          const SeriesConfig& cfg = {});

}  // namespace cblab
