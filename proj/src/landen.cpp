#include "cblab/landen.hpp"

#include <algorithm>
#include <cmath>

#include "cblab/blaschke.hpp"
#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"

namespace cblab {

namespace {

constexpr double kDenominatorRatio = 1e-12;

const std::array<LandenEntry, 9> kCatalog{{
    {LandenId::n2, "n2", 2, 1, 1, 2},
    {LandenId::n3, "n3", 3, 1, 3, 4},
    {LandenId::n4_sum, "n4_sum", 4, 1, 1, 1},
    {LandenId::n4_prod, "n4_prod", 4, 2, 1, 8},
    {LandenId::n5_sum, "n5_sum", 5, 1, 5, 4},
    {LandenId::n5_prod, "n5_prod", 5, 2, 5, 16},
    {LandenId::n6_e1, "n6_e1", 6, 1, 3, 2},
    {LandenId::n6_e2, "n6_e2", 6, 2, 9, 16},
    {LandenId::n6_prod, "n6_prod", 6, 3, 1, 32},
}};

// theta_2(0, .) and theta_3(0, .) at tau and n tau
struct Nulls {
  Complex t2, t3, t2n, t3n;
};

Nulls nulls(int n, const UpperHalfPoint& tau, const SeriesConfig& cfg) {
  const UpperHalfPoint tn = tau.scaled(n);
  return {theta(2, 0.0, tau, cfg), theta(3, 0.0, tau, cfg), theta(2, 0.0, tn, cfg),
          theta(3, 0.0, tn, cfg)};
}

Complex checked_quotient(Complex num, Complex den, std::string_view name) {
  if (den == 0.0 || std::abs(den) < kDenominatorRatio * std::abs(num))
    throw DenominatorNearZero("denominator of identity " + std::string(name) + " is negligible");
  return num / den;
}

Complex pow_int(Complex x, int e) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

Complex general_rhs(int n, const Nulls& t, std::string_view name) {
  if (n % 2 == 0) return checked_quotient(t.t2n, t.t3n, name);
  return checked_quotient(double(n) * t.t2n * t.t3n, t.t2 * t.t3, name);
}

Complex catalog_rhs(LandenId id, const Nulls& t, std::string_view name) {
  const Complex t2sq_t3sq = t.t2 * t.t2 * t.t3 * t.t3;
  switch (id) {
    case LandenId::n2:
      return general_rhs(2, t, name);
    case LandenId::n3:
      return general_rhs(3, t, name);
    case LandenId::n4_prod:
      return general_rhs(4, t, name);
    case LandenId::n5_prod:
      return general_rhs(5, t, name);
    case LandenId::n6_prod:
      return general_rhs(6, t, name);
    case LandenId::n4_sum: {
      const Complex front = checked_quotient(8.0 * t.t2n, t2sq_t3sq, name);
      return front * checked_quotient(pow_int(t.t3n, 4) - pow_int(t.t2n, 4), t.t3n - t.t2n, name);
    }
    case LandenId::n5_sum: {
      const Complex front = checked_quotient(5.0 * t.t2n * t.t3n, 6.0 * t2sq_t3sq, name);
      const Complex num = pow_int(t.t3, 4) + pow_int(t.t2, 4) -
                          25.0 * (pow_int(t.t3n, 4) + pow_int(t.t2n, 4));
      return front * checked_quotient(num, 5.0 * t.t2n * t.t3n - t.t2 * t.t3, name);
    }
    case LandenId::n6_e1:
    case LandenId::n6_e2: {
      const Complex s6 = t.t2n * t.t2n + t.t3n * t.t3n;
      const Complex front = checked_quotient(6.0 * t.t2n * s6, t2sq_t3sq, name);
      const Complex den = t2sq_t3sq - 18.0 * t.t2n * t.t3n * s6;
      const Complex quartics = pow_int(t.t2, 4) + pow_int(t.t3, 4);
      Complex num;
      if (id == LandenId::n6_e1) {
        num = 3.0 * t2sq_t3sq * t.t2n -
              t.t3n * (quartics + 45.0 * pow_int(t.t2n, 4) - 9.0 * pow_int(t.t3n, 4));
      } else {
        num = 3.0 * t2sq_t3sq * t.t3n -
              t.t2n * (quartics - 9.0 * pow_int(t.t2n, 4) + 45.0 * pow_int(t.t3n, 4));
      }
      return front * checked_quotient(num, den, name);
    }
  }
  throw DomainError("unknown identity");
}

IdentityReport make_report(std::string id, const UpperHalfPoint& tau, Complex lhs, Complex rhs,
                           double tolerance) {
  const double residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  return {std::move(id), tau, lhs, rhs, residual, tolerance, residual <= tolerance};
}

BuildOptions options_for(const UpperHalfPoint& tau, const SeriesConfig& cfg) {
  return {!tau.on_imaginary_axis(), cfg};
}

}  // namespace

const std::array<LandenEntry, 9>& landen_catalog_entries() { return kCatalog; }

const LandenEntry& landen_entry(LandenId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e;
  throw DomainError("unknown identity");
}

std::optional<LandenId> parse_landen_id(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  return std::nullopt;
}

IdentityReport landen_general(int n, const UpperHalfPoint& tau, double tolerance,
                              const SeriesConfig& cfg) {
  if (n < 2) throw DomainError("Landen identities need n >= 2");
  const ChebyshevBlaschke cb = build(n, tau, options_for(tau, cfg));
  const std::string name = "general_n" + std::to_string(n);
  return make_report(name, tau, cb.coefficients().back(), general_rhs(n, nulls(n, tau, cfg), name),
                     tolerance);
}

IdentityReport landen_catalog(LandenId id, const UpperHalfPoint& tau, double tolerance,
                              const SeriesConfig& cfg) {
  const LandenEntry& entry = landen_entry(id);
  const ChebyshevBlaschke cb = build(entry.n, tau, options_for(tau, cfg));
  const Complex lhs = cb.coefficients()[static_cast<std::size_t>(entry.j - 1)];
  return make_report(std::string(entry.name), tau, lhs,
                     catalog_rhs(id, nulls(entry.n, tau, cfg), entry.name), tolerance);
}

IdentityReport trig_limit(LandenId id, double y, double tolerance, const SeriesConfig& cfg) {
  const LandenEntry& entry = landen_entry(id);
  const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
  const ChebyshevBlaschke cb = build(entry.n, tau, {false, cfg});
  const Complex k = EllipticContext(tau, cfg).k_modulus();
  const Complex scaled = cb.coefficients()[static_cast<std::size_t>(entry.j - 1)] / pow_int(k, entry.j);
  const Complex target = double(entry.limit_num) / double(entry.limit_den);
  return make_report(std::string(entry.name) + "_limit", tau, scaled, target, tolerance);
}

}  // namespace cblab
