#include "cblab/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "cblab/blaschke.hpp"
#include "cblab/derivatives.hpp"
#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"
#include "cblab/landen.hpp"
#include "cblab/modulus.hpp"
#include "cblab/monodromy.hpp"
#include "cblab/theta.hpp"

namespace cblab {

namespace {

// Running maximum of residuals against one bound, plus extra failures that
// have no residual.
class Tally {
 public:
  explicit Tally(double tolerance) : tolerance_(tolerance) {}

  void residual(double r, const std::string& where) {
    ++checks_;
    if (!(r <= worst_)) worst_ = std::isnan(r) ? INFINITY : std::max(worst_, r);
    if (!(r <= tolerance_)) fail(where);
  }
  void require(bool ok, const std::string& where) {
    ++checks_;
    if (!ok) fail(where);
  }

  CriterionResult result(int id, std::string name) const {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.pass = first_failure_.empty();
    r.worst = worst_;
    r.tolerance = tolerance_;
    std::ostringstream os;
    os << checks_ << " checks";
    if (!r.pass) os << ", " << failures_ << " failed, first: " << first_failure_;
    r.detail = os.str();
    return r;
  }

 private:
  void fail(const std::string& where) {
    ++failures_;
    if (first_failure_.empty()) first_failure_ = where;
  }

  double tolerance_;
  double worst_ = 0.0;
  long checks_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

// Rounding floor for comparing two residuals that may both have converged.
double ulps(double scale) { return 4.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string tau_text(const UpperHalfPoint& tau) {
  std::ostringstream os;
  os << "tau=" << tau.re() << "+" << tau.im() << "i";
  return os.str();
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1));
  return out;
}

CriterionResult theta_identities() {
  Tally t(1e-10);
  const std::vector<UpperHalfPoint> grid{
      UpperHalfPoint::imaginary(0.3), UpperHalfPoint::imaginary(0.5), UpperHalfPoint::imaginary(1.0),
      UpperHalfPoint::imaginary(2.0), UpperHalfPoint(Complex(0.25, 0.75))};
  const std::vector<Complex> vs{0.0, 0.3, Complex(0.2, 0.1), -0.7, 1.1};
  const Complex I(0.0, 1.0);
  for (const auto& tau : grid) {
    const std::string at = tau_text(tau);
    const Complex t0 = theta(0, 0.0, tau), t2 = theta(2, 0.0, tau), t3 = theta(3, 0.0, tau);
    t.residual(std::abs(std::pow(t3, 4) - std::pow(t2, 4) - std::pow(t0, 4)) / std::abs(std::pow(t3, 4)),
               "quartic " + at);
    t.residual(rel(theta(3, 0.0, tau.shifted(-0.5)), t0), "theta3(tau-1/2) " + at);
    const Complex tv = tau.value();
    const UpperHalfPoint inv(-1.0 / tv);
    const UpperHalfPoint quarter(tv / 4.0);
    const Complex root = std::sqrt(-I * tv / 2.0);
    for (Complex v : vs) {
      t.residual(rel(theta(3, v, tau.shifted(1.0)), theta(3, v, tau)), "theta3 shift " + at);
      // q^((n+1/2)^2) picks up exp(i pi / 2) under tau -> tau + 1 for every n
      t.residual(rel(theta(2, v, tau.shifted(1.0)), I * theta(2, v, tau)), "theta2 shift " + at);
      t.residual(rel(theta(0, v, tau), theta(3, v + kPi / 2.0, tau)), "half period " + at);
      const Complex factor = root * std::exp(I * tv * v * v / (2.0 * kPi));
      t.residual(rel(theta(3, v, inv), factor * theta(3, tv * v / 2.0, quarter)), "theta3 inversion " + at);
      t.residual(rel(theta(2, v, inv), factor * theta(0, tv * v / 2.0, quarter)), "theta2 inversion " + at);
    }
  }
  for (const auto& tau : {UpperHalfPoint::imaginary(1.0), UpperHalfPoint::imaginary(2.0),
                          UpperHalfPoint(Complex(0.25, 1.0))}) {
    const Complex tv = tau.value();
    const UpperHalfPoint image(tv / (4.0 * tv + 1.0));
    t.residual(rel(theta(3, 0.0, image), std::sqrt(4.0 * tv + 1.0) * theta(3, 0.0, tau)),
               "Gamma0(4) " + tau_text(tau));
  }
  return t.result(1, "theta identities");
}

CriterionResult cd_degeneration() {
  Tally t(1e-10);
  const auto us = linspace(-2.0, 2.0, 32);
  std::array<double, 3> err{};
  const std::array<double, 3> ys{10.0, 20.0, 40.0};
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const EllipticContext ctx(UpperHalfPoint::imaginary(ys[k]));
    for (double u : us) err[k] = std::max(err[k], std::abs(ctx.cd(u) - std::cos(u)));
  }
  t.residual(err[1], "max |cd(u,20i) - cos u|");
  t.require(err[2] <= err[1] + ulps(1.0) && err[1] <= err[0] + ulps(1.0),
            "error not monotone in Im(tau)");
  return t.result(2, "cd degeneration");
}

CriterionResult blaschke_disk(std::uint64_t seed) {
  Tally t(1e-10);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double y : {0.8, 1.0, 2.0}) {
    const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
    for (int n = 1; n <= 8; ++n) {
      const ChebyshevBlaschke cb = build(n, tau);
      const std::string at = "n=" + std::to_string(n) + " " + tau_text(tau);
      for (int k = 0; k < 64; ++k) {
        const Complex z = std::polar(1.0, 2.0 * kPi * k / 64.0);
        t.residual(std::abs(std::abs(cb.eval_product(z)) - 1.0), "boundary " + at);
        t.residual(std::abs(cb.eval_product(z) - cb.eval_expanded(z)), "forms on boundary " + at);
      }
      for (int k = 0; k < 100; ++k) {
        const Complex z = std::polar(0.999 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
        const Complex w = cb.eval_product(z);
        t.require(std::abs(w) < 1.0, "interior modulus " + at);
        t.residual(std::abs(w - cb.eval_expanded(z)), "forms in interior " + at);
      }
    }
  }
  return t.result(3, "Blaschke boundary and interior");
}

CriterionResult functional_definition() {
  Tally t(1e-9);
  const auto us = linspace(-3.0, 3.0, 20);
  for (double y : {0.5, 1.0})
    for (int n = 2; n <= 4; ++n) {
      const ChebyshevBlaschke cb = build(n, UpperHalfPoint::imaginary(y));
      for (double u : us)
        t.residual(functional_definition_gap(cb, u),
                   "n=" + std::to_string(n) + " " + tau_text(cb.tau()));
    }
  return t.result(4, "functional definition");
}

CriterionResult composition() {
  Tally t(1e-9);
  std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {3, 2}};
  for (int k = 1; k <= 6; ++k) pairs.emplace_back(1, k);
  for (double y : {0.5, 1.0})
    for (auto [m, n] : pairs) {
      const ComposeReport r = compose_check(m, n, UpperHalfPoint::imaginary(y));
      t.residual(r.max_deviation, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  return t.result(5, "composition law");
}

CriterionResult coefficient_oracles() {
  Tally t(1e-8);
  for (double y : {0.5, 1.0, 2.0}) {
    const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
    for (int n = 1; n <= 10; ++n) {
      const ChebyshevBlaschke cb = build(n, tau);
      const int h = n / 2;
      const auto from_zeros = cb.coefficients();
      const auto from_derivs = coefficients_from_derivatives(n, tau);
      const auto taylor = cb.taylor_series(n + 2 * h + 1);
      const auto from_division = coefficients_from_taylor(n, taylor);
      const std::string at = "n=" + std::to_string(n) + " " + tau_text(tau);
      t.require(from_derivs.size() == from_zeros.size() && from_division.size() == from_zeros.size(),
                "coefficient count " + at);
      for (std::size_t j = 0; j < from_zeros.size() && j < from_derivs.size() && j < from_division.size(); ++j) {
        t.residual(rel(from_derivs[j], from_zeros[j]), "derivatives vs zeros " + at);
        t.residual(rel(from_division[j], from_zeros[j]), "division vs zeros " + at);
        t.residual(rel(from_derivs[j], from_division[j]), "derivatives vs division " + at);
      }
    }
  }
  return t.result(6, "coefficient triple oracle");
}

CriterionResult critical() {
  Tally t(1e-7);
  for (double y : {0.5, 1.0})
    for (int n = 2; n <= 6; ++n) {
      const ChebyshevBlaschke cb = build(n, UpperHalfPoint::imaginary(y));
      const std::string at = "n=" + std::to_string(n) + " " + tau_text(cb.tau());
      const Complex s = cb.sqrt_k_n();
      const std::vector<Complex> expected =
          n == 2 ? std::vector<Complex>{-s} : std::vector<Complex>{-s, s};
      const CriticalValues cv = critical_values(cb);
      t.require(cv.values.size() == expected.size(), "count " + at);
      for (std::size_t i = 0; i < std::min(cv.values.size(), expected.size()); ++i)
        t.residual(std::abs(cv.values[i] - expected[i]), "value " + at);
    }
  return t.result(7, "critical values");
}

CriterionResult chebyshev_limit() {
  Tally t(1e-8);
  const auto xs = linspace(-1.0, 1.0, 21);
  for (int n = 1; n <= 6; ++n) {
    const ChebyshevBlaschke cb = build(n, UpperHalfPoint::imaginary(10.0));
    for (double x : xs)
      t.residual(std::abs(cb.elliptic_rational(x) - chebyshev_poly(n, x)), "n=" + std::to_string(n));
  }
  return t.result(8, "Chebyshev degeneration");
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_one_line(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  return by.inverse().then(p).then(by);
}

CriterionResult monodromy_suite(std::uint64_t seed) {
  Tally t(0.0);
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    const std::string at = "n=" + std::to_string(n);
    for (const auto& s1 : perms)
      for (const auto& s2 : perms) {
        const MonodromyRep rep(s1, s2);
        if (!is_transitive(rep)) continue;
        const int chi = euler_characteristic_disk(rep);
        const int c3 = face_cycles(rep);
        t.require(is_tree(rep) == (chi == 1), "tree iff chi = 1, " + at);
        // genus g cover of the sphere: chi_disk + c3 = 2 - 2g
        const int sphere = chi + c3;
        t.require(sphere <= 2 && sphere % 2 == 0, "sphere characteristic, " + at);
        if (is_tree(rep)) t.require(sphere == 2, "tree covering is a sphere, " + at);

        const Permutation& by = perms[rng() % perms.size()];
        const MonodromyRep image(conjugate(s1, by), conjugate(s2, by));
        t.require(are_equivalent(rep, image), "conjugate not equivalent, " + at);
        t.require(image.sigma1().cycle_type() == s1.cycle_type() &&
                      image.sigma2().cycle_type() == s2.cycle_type(),
                  "conjugation changed cycle type, " + at);
        // a swap of the generators is equivalent only when cycle types allow it
        const MonodromyRep swapped(s2, s1);
        if (are_equivalent(rep, swapped))
          t.require(s1.cycle_type() == s2.cycle_type(), "equivalence across cycle types, " + at);
      }
  }
  for (int n = 1; n <= 10; ++n) {
    const MonodromyRep rep = chebyshev_monodromy(n);
    const std::string at = "chain n=" + std::to_string(n);
    t.require(is_transitive(rep) && is_tree(rep), "not a tree, " + at);
    const DessinStats st = dessin_stats(rep);
    t.require(st.vertices == n + 1 && st.edges == n, "dessin stats, " + at);
  }
  return t.result(9, "monodromy suite");
}

CriterionResult modulus_keystone() {
  Tally t(1e-8);
  for (double y : {0.5, 1.0, 2.0}) {
    const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
    for (int n = 1; n <= 4; ++n) {
      const double s = EllipticContext(tau.scaled(n)).sqrt_k().real();
      const std::string at = "n=" + std::to_string(n) + " " + tau_text(tau);
      t.residual(std::abs(disk_minus_geodesic_modulus(GeodesicSegment(-s, s)) - n * y / 4.0),
                 "geodesic " + at);
      if (n >= 2)
        t.residual(std::abs(dessin_size(build(n, tau)).size - y / 4.0), "dessin size " + at);
    }
  }
  // exact anchors, held to the tighter bound
  const double a1 = std::abs(grotzsch_modulus(1.0 / std::sqrt(2.0)) - 0.25);
  const double a2 = std::abs(grotzsch_modulus(3.0 - 2.0 * std::sqrt(2.0)) - 0.5);
  t.residual(a1, "Grotzsch anchor 1/sqrt(2)");
  t.residual(a2, "Grotzsch anchor 3 - 2 sqrt(2)");
  t.require(a1 <= 1e-10 && a2 <= 1e-10, "Grotzsch anchors beyond 1e-10");
  return t.result(10, "modulus keystone");
}

CriterionResult landen_suite() {
  Tally t(1e-10);
  const std::array<double, 6> ys{0.4, 0.5, 0.75, 1.0, 1.5, 2.0};
  for (double y : ys) {
    const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
    for (const auto& e : landen_catalog_entries()) {
      const IdentityReport r = landen_catalog(e.id, tau);
      t.residual(r.residual, r.identity_id + " " + tau_text(tau));
    }
    for (int n = 2; n <= 10; ++n) {
      const IdentityReport r = landen_general(n, tau);
      t.residual(r.residual, r.identity_id + " " + tau_text(tau));
    }
  }
  // the limits have their own, looser bound
  for (const auto& e : landen_catalog_entries()) {
    const IdentityReport far = trig_limit(e.id, 30.0);
    const IdentityReport near = trig_limit(e.id, 10.0);
    t.require(far.pass, far.identity_id + " at y=30");
    t.require(far.residual <= near.residual + ulps(1.0),
              far.identity_id + " not converging");
  }
  return t.result(11, "Landen catalog");
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  static const std::array<const char*, kCriterionCount> names{
      "theta identities",      "cd degeneration",      "Blaschke boundary and interior",
      "functional definition", "composition law",      "coefficient triple oracle",
      "critical values",       "Chebyshev degeneration", "monodromy suite",
      "modulus keystone",      "Landen catalog"};
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in 1..11");
  try {
    switch (id) {
      case 1: return theta_identities();
      case 2: return cd_degeneration();
      case 3: return blaschke_disk(seed);
      case 4: return functional_definition();
      case 5: return composition();
      case 6: return coefficient_oracles();
      case 7: return critical();
      case 8: return chebyshev_limit();
      case 9: return monodromy_suite(seed);
      case 10: return modulus_keystone();
      default: return landen_suite();
    }
  } catch (const Error& e) {
    CriterionResult r;
    r.id = id;
    r.name = names[static_cast<std::size_t>(id - 1)];
    r.detail = std::string(e.kind()) + ": " + e.what();
    return r;
  }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace cblab
