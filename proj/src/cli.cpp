#include "cblab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>

#include "cblab/acceptance.hpp"
#include "cblab/blaschke.hpp"
#include "cblab/derivatives.hpp"
#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"
#include "cblab/landen.hpp"
#include "cblab/modulus.hpp"
#include "cblab/monodromy.hpp"
#include "cblab/record.hpp"

namespace cblab::cli {

namespace {

using record::Json;

struct Options {
  std::string format = "json";
  double tol = SeriesConfig{}.rel_tol;
  int max_terms = SeriesConfig{}.max_index;
  std::uint64_t seed = kDefaultSeed;

  std::optional<double> tau_im;
  std::optional<std::string> tau;
  bool upper_half = false;

  int n = 0, m = 0, j = 0, order = 5;
  std::string v = "0", z, u, a, b;
  double r = 0.0, t = 0.0, y = 30.0;
  std::optional<double> check_tol;  // default 1e-10, 1e-6 for limits
  std::string id;
  std::string sigma1, sigma2, rho1, rho2;
  std::optional<int> degree;
};

struct Outcome {
  Json payload;
  bool verified = true;
};

double parse_real(const std::string& text, const std::string& flag) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw ParseError(flag + ": '" + text + "' is not a finite real number");
  return value;
}

// "re,im" or a bare real
Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, flag), 0.0};
  if (text.find(',', comma + 1) != std::string::npos)
    throw ParseError(flag + ": expected 're,im', got '" + text + "'");
  return {parse_real(text.substr(0, comma), flag), parse_real(text.substr(comma + 1), flag)};
}

SeriesConfig series(const Options& o) {
  SeriesConfig cfg{o.tol, o.max_terms};
  cfg.validate();
  return cfg;
}

UpperHalfPoint tau_of(const Options& o) {
  if (o.tau_im && o.tau) throw ParseError("give either --tau-im or --tau, not both");
  if (o.tau_im) return UpperHalfPoint::imaginary(*o.tau_im);
  if (o.tau) return UpperHalfPoint(parse_complex(*o.tau, "--tau"));
  throw ParseError("missing --tau-im or --tau");
}

ChebyshevBlaschke cb_of(const Options& o) {
  return build(o.n, tau_of(o), BuildOptions{o.upper_half, series(o)});
}

// real on the imaginary axis, {re, im} elsewhere
Json scalar(Complex z, bool real) {
  if (real) return z.real();
  return record::complex_value(z);
}

Json scalars(const std::vector<Complex>& zs, bool real) {
  Json out = Json::array();
  for (Complex z : zs) out.push_back(scalar(z, real));
  return out;
}

Json complex_list(const std::vector<Complex>& zs) {
  Json out = Json::array();
  for (Complex z : zs) out.push_back(record::complex_value(z));
  return out;
}

Outcome cmd_theta(const Options& o) {
  const UpperHalfPoint tau = tau_of(o);
  const Complex v = parse_complex(o.v, "--v");
  const ThetaEval e = theta_eval(o.j, v, tau, series(o));
  if (!e.converged)
    throw PrecisionError("theta series did not converge within --max-terms", e.degraded);
  Json p;
  p["j"] = o.j;
  p["v"] = record::complex_value(v);
  p["tau"] = record::complex_value(tau.value());
  p["re"] = e.value.real();
  p["im"] = e.value.imag();
  p["terms"] = e.terms;
  p["degraded"] = e.degraded;
  return {p};
}

Outcome cmd_elliptic(const Options& o) {
  const EllipticContext ctx(tau_of(o), series(o));
  const Complex u = parse_complex(o.u, "--u");
  Json p;
  p["u"] = record::complex_value(u);
  p["tau"] = record::complex_value(ctx.tau().value());
  p["k"] = record::complex_value(ctx.k_modulus());
  p["sqrt_k"] = record::complex_value(ctx.sqrt_k());
  p["omega1"] = record::complex_value(ctx.omega1());
  p["sn"] = record::complex_value(ctx.sn(u));
  p["cn"] = record::complex_value(ctx.cn(u));
  p["dn"] = record::complex_value(ctx.dn(u));
  p["cd"] = record::complex_value(ctx.cd(u));
  p["degraded"] = ctx.tau().degraded();
  return {p};
}

Outcome cmd_cb_build(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const bool real = cb.tau().on_imaginary_axis();
  Json p = record::chebyshev_blaschke(cb);
  p["sqrt_k"] = scalar(cb.sqrt_k(), real);
  p["sqrt_k_n"] = scalar(cb.sqrt_k_n(), real);
  p["omega_ratio"] = scalar(cb.omega_ratio(), real);
  return {p};
}

Outcome cmd_cb_eval(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const Complex z = parse_complex(o.z, "--z");
  Json p;
  p["n"] = cb.degree();
  p["z"] = record::complex_value(z);
  p["product"] = record::complex_value(cb.eval_product(z));
  p["expanded"] = record::complex_value(cb.eval_expanded(z));
  return {p};
}

Outcome cmd_cb_coeffs(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const bool real = cb.tau().on_imaginary_axis();
  const auto other = coefficients_from_derivatives(cb.degree(), cb.tau(), series(o));
  double residual = 0.0;
  for (std::size_t i = 0; i < other.size(); ++i)
    residual = std::max(residual, std::abs(other[i] - cb.coefficients()[i]) /
                                      std::max(std::abs(cb.coefficients()[i]), 1e-300));
  Json p;
  p["n"] = cb.degree();
  p["S"] = scalars(cb.coefficients(), real);
  p["S_from_derivatives"] = scalars(other, real);
  p["cross_check_residual"] = residual;
  return {p};
}

Outcome cmd_cb_derivs(const Options& o) {
  if (o.order < 0 || o.order > 40) throw DomainError("--order must be in 0..40");
  const UpperHalfPoint tau = tau_of(o);
  if (!tau.on_imaginary_axis() && !o.upper_half)
    throw DomainError("tau off the imaginary axis needs --upper-half");
  const auto d = derivatives_at_zero(o.n, tau, o.order, series(o));
  Json p;
  p["n"] = o.n;
  p["derivatives"] = scalars(d, tau.on_imaginary_axis());
  return {p};
}

Outcome cmd_cb_critical(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const CriticalValues cv = critical_values(cb);
  Json p;
  p["n"] = cb.degree();
  p["points"] = complex_list(cv.points);
  p["values"] = complex_list(cv.values);
  p["sqrt_k_n"] = scalar(cb.sqrt_k_n(), cb.tau().on_imaginary_axis());
  return {p};
}

Outcome cmd_cb_modulus(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const ModulusLambda ml = modulus_lambda(cb);
  Json p;
  p["n"] = cb.degree();
  p["lambda"] = ml.lambda;
  p["normalized_modulus"] = ml.normalized_modulus;
  return {p};
}

Outcome cmd_cb_compose(const Options& o) {
  const ComposeReport r = compose_check(o.m, o.n, tau_of(o), BuildOptions{o.upper_half, series(o)});
  Json p;
  p["m"] = r.m;
  p["n"] = r.n;
  p["samples"] = r.samples;
  p["max_deviation"] = r.max_deviation;
  return {p};
}

// Both permutations on a common degree: --degree if given, else the larger
// of the two inferred ones.
std::pair<Permutation, Permutation> permutation_pair(const std::string& s1, const std::string& s2,
                                                     std::optional<int> degree) {
  auto inferred = [](const std::string& text) -> std::optional<int> {
    try {
      return Permutation::parse(text).degree();
    } catch (const ParseError&) {
      return std::nullopt;  // reported by the parse below
    }
  };
  if (!degree) {
    const auto d1 = inferred(s1), d2 = inferred(s2);
    if (d1 || d2) degree = std::max(d1.value_or(0), d2.value_or(0));
  }
  return {Permutation::parse(s1, degree), Permutation::parse(s2, degree)};
}

Json cycle_type_json(const Permutation& p) { return Json(p.cycle_type()); }

Outcome cmd_mono_analyze(const Options& o) {
  auto [s1, s2] = permutation_pair(o.sigma1, o.sigma2, o.degree);
  const MonodromyRep rep(s1, s2);
  Json p;
  p["n"] = rep.degree();
  p["sigma1"] = s1.cycle_string();
  p["sigma2"] = s2.cycle_string();
  p["sigma1_cycle_type"] = cycle_type_json(s1);
  p["sigma2_cycle_type"] = cycle_type_json(s2);
  p["c1"] = s1.cycle_count();
  p["c2"] = s2.cycle_count();
  p["c3"] = face_cycles(rep);
  const bool transitive = is_transitive(rep);
  p["transitive"] = transitive;
  if (transitive) {
    p["tree"] = is_tree(rep);
    p["euler_disk"] = euler_characteristic_disk(rep);
    p["euler_sphere"] = sphere_euler_characteristic(rep);
    if (is_tree(rep)) {
      const DessinStats st = dessin_stats(rep);
      p["dessin"] = Json{{"vertices", st.vertices}, {"edges", st.edges}};
    }
  }
  return {p};
}

Outcome cmd_mono_equiv(const Options& o) {
  auto [s1, s2] = permutation_pair(o.sigma1, o.sigma2, o.degree);
  auto [r1, r2] = permutation_pair(o.rho1, o.rho2, s1.degree());
  Json p;
  p["n"] = s1.degree();
  p["equivalent"] = are_equivalent(MonodromyRep(s1, s2), MonodromyRep(r1, r2));
  return {p};
}

Outcome cmd_mono_chebyshev(const Options& o) {
  const MonodromyRep rep = chebyshev_monodromy(o.n);
  const DessinStats st = dessin_stats(rep);
  Json p;
  p["n"] = rep.degree();
  p["sigma1"] = rep.sigma1().cycle_string();
  p["sigma2"] = rep.sigma2().cycle_string();
  p["vertices"] = st.vertices;
  p["edges"] = st.edges;
  return {p};
}

Outcome cmd_mod_annulus(const Options& o) {
  Json p;
  p["r"] = o.r;
  p["modulus"] = annulus_modulus(o.r);
  return {p};
}

Outcome cmd_mod_grotzsch(const Options& o) {
  Json p;
  p["t"] = o.t;
  p["modulus"] = grotzsch_modulus(o.t);
  return {p};
}

Outcome cmd_mod_geodesic(const Options& o) {
  const GeodesicSegment seg(parse_complex(o.a, "--a"), parse_complex(o.b, "--b"));
  Json p;
  p["a"] = record::complex_value(seg.a());
  p["b"] = record::complex_value(seg.b());
  p["distance"] = poincare_distance(seg.a(), seg.b());
  p["modulus"] = disk_minus_geodesic_modulus(seg);
  return {p};
}

Outcome cmd_mod_dessin(const Options& o) {
  const ChebyshevBlaschke cb = cb_of(o);
  const DessinSize ds = dessin_size(cb);
  Json p;
  p["n"] = cb.degree();
  p["size"] = ds.size;
  p["ring_modulus"] = ds.ring_modulus;
  p["lambda"] = ds.lambda;
  p["expected"] = cb.tau().im() / 4.0;
  return {p};
}

LandenId landen_id(const std::string& name) {
  if (auto id = parse_landen_id(name)) return *id;
  std::string known;
  for (const auto& e : landen_catalog_entries()) known += (known.empty() ? "" : ", ") + std::string(e.name);
  throw ParseError("--id: unknown identity '" + name + "' (known: general, " + known + ")");
}

Outcome cmd_landen_verify(const Options& o) {
  if (o.id.empty()) throw ParseError("--id is required");
  const UpperHalfPoint tau = tau_of(o);
  const IdentityReport r = o.id == "general"
                               ? landen_general(o.n, tau, o.check_tol.value_or(1e-10), series(o))
                               : landen_catalog(landen_id(o.id), tau, o.check_tol.value_or(1e-10), series(o));
  return {record::identity_report(r), r.pass};
}

Outcome cmd_landen_limit(const Options& o) {
  if (o.id.empty()) throw ParseError("--id is required");
  const IdentityReport r = trig_limit(landen_id(o.id), o.y, o.check_tol.value_or(1e-6), series(o));
  return {record::identity_report(r), r.pass};
}

Outcome cmd_landen_all(const Options& o) {
  std::vector<UpperHalfPoint> grid;
  if (o.tau_im || o.tau) {
    grid.push_back(tau_of(o));
  } else {
    for (double y : {0.4, 0.5, 0.75, 1.0, 1.5, 2.0}) grid.push_back(UpperHalfPoint::imaginary(y));
  }
  Json p;
  p["records"] = Json::array();
  bool all = true;
  for (const auto& e : landen_catalog_entries())
    for (const auto& tau : grid) {
      const IdentityReport r = landen_catalog(e.id, tau, o.check_tol.value_or(1e-10), series(o));
      all = all && r.pass;
      p["records"].push_back(record::identity_report(r));
    }
  return {p, all};
}

Outcome cmd_verify_all(const Options& o) {
  const auto results = run_acceptance(o.seed);
  Json p;
  p["seed"] = o.seed;
  int passed = 0;
  p["records"] = Json::array();
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    p["records"].push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"pass", r.pass},
                                {"worst", r.worst},
                                {"tolerance", r.tolerance},
                                {"detail", r.detail}});
  }
  p["passed"] = passed;
  p["total"] = static_cast<int>(results.size());
  return {p, passed == static_cast<int>(results.size())};
}

std::string status_of(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const PrecisionError*>(&e)) return "precision_error";
  return "domain_error";
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          const std::string& status, const Json& body, bool is_error) {
  if (format == "csv") {
    if (is_error) {
      Json row;
      row["command"] = command;
      row["status"] = status;
      row["kind"] = body["kind"];
      row["message"] = body["message"];
      out << record::to_csv(row);
    } else {
      out << record::to_csv(body);
    }
    return;
  }
  Json doc;
  doc["command"] = command;
  doc["status"] = status;
  doc[is_error ? "error" : "payload"] = body;
  out << record::dump(doc);
}

Json error_body(const std::string& kind, const std::string& message) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Theta functions, Chebyshev-Blaschke products and their monodromy", "cblab"};
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", o.tol, "Relative truncation tolerance of the theta series");
  app.add_option("--max-terms", o.max_terms, "Largest series index summed");
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  std::string command;
  std::function<Outcome(const Options&)> handler;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& path,
                  const std::string& help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&command, &handler, path, fn] {
      command = path;
      handler = fn;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->fallthrough();
    g->require_subcommand(1, 1);
    return g;
  };
  auto with_tau = [&](CLI::App* sub) {
    sub->add_option("--tau-im", o.tau_im, "tau = i * value");
    sub->add_option("--tau", o.tau, "tau as re,im");
    return sub;
  };
  auto with_cb = [&](CLI::App* sub) {
    with_tau(sub);
    sub->add_option("--n", o.n, "Degree")->required();
    sub->add_flag("--upper-half", o.upper_half, "Allow tau off the imaginary axis");
    return sub;
  };

  CLI::App* th = with_tau(leaf(&app, "theta", "theta", "Jacobi theta function theta_j(v, tau)", cmd_theta));
  th->add_option("--j", o.j, "Index 0..3")->required();
  th->add_option("--v", o.v, "Argument, real or re,im");

  with_tau(leaf(&app, "elliptic", "elliptic", "sn, cn, dn, cd at u", cmd_elliptic))
      ->add_option("--u", o.u, "Argument, real or re,im")
      ->required();

  CLI::App* cb = group("cb", "Chebyshev-Blaschke products");
  with_cb(leaf(cb, "build", "cb build", "Squared zeros and coefficients", cmd_cb_build));
  with_cb(leaf(cb, "eval", "cb eval", "Evaluate at z", cmd_cb_eval))
      ->add_option("--z", o.z, "Point re,im")
      ->required();
  with_cb(leaf(cb, "coeffs", "cb coeffs", "Coefficients S_j, cross-checked", cmd_cb_coeffs));
  with_cb(leaf(cb, "derivs", "cb derivs", "Derivatives at 0", cmd_cb_derivs))
      ->add_option("--order", o.order, "Highest derivative order");
  with_cb(leaf(cb, "critical", "cb critical", "Critical values in the disk", cmd_cb_critical));
  with_cb(leaf(cb, "modulus", "cb modulus", "Modulus of the dessin complement", cmd_cb_modulus));
  with_cb(leaf(cb, "compose", "cb compose", "f_{m,n tau} o f_{n,tau} against f_{mn,tau}", cmd_cb_compose))
      ->add_option("--m", o.m, "Outer degree")
      ->required();

  CLI::App* mono = group("monodromy", "Permutation-pair monodromy");
  auto with_pair = [&](CLI::App* sub) {
    sub->add_option("--sigma1", o.sigma1, "First generator")->required();
    sub->add_option("--sigma2", o.sigma2, "Second generator")->required();
    sub->add_option("--degree", o.degree, "Degree n, if not implied");
    return sub;
  };
  with_pair(leaf(mono, "analyze", "monodromy analyze", "Cycles, transitivity, tree test", cmd_mono_analyze));
  CLI::App* eq = with_pair(leaf(mono, "equiv", "monodromy equiv", "Equivalence of two pairs", cmd_mono_equiv));
  eq->add_option("--rho1", o.rho1, "First generator of the second pair")->required();
  eq->add_option("--rho2", o.rho2, "Second generator of the second pair")->required();
  leaf(mono, "chebyshev", "monodromy chebyshev", "Monodromy of the degree-n chain", cmd_mono_chebyshev)
      ->add_option("--n", o.n, "Degree")
      ->required();

  CLI::App* mod = group("modulus", "Conformal moduli");
  leaf(mod, "annulus", "modulus annulus", "Annulus r < |z| < 1", cmd_mod_annulus)
      ->add_option("--r", o.r, "Inner radius")
      ->required();
  leaf(mod, "grotzsch", "modulus grotzsch", "Disk slit along [0, t]", cmd_mod_grotzsch)
      ->add_option("--t", o.t, "Slit length")
      ->required();
  CLI::App* geo = leaf(mod, "geodesic", "modulus geodesic", "Disk minus a geodesic segment", cmd_mod_geodesic);
  geo->add_option("--a", o.a, "Endpoint re,im")->required();
  geo->add_option("--b", o.b, "Endpoint re,im")->required();
  with_cb(leaf(mod, "dessin-size", "modulus dessin-size", "Size of the Chebyshev dessin", cmd_mod_dessin));

  // `landen --id X --tau-im Y` is shorthand for `landen verify ...`
  CLI::App* landen = app.add_subcommand("landen", "Theta identities");
  landen->fallthrough();
  landen->require_subcommand(0, 1);
  with_tau(landen);
  landen->add_option("--id", o.id, "Identity id, or 'general' with --n");
  landen->add_option("--n", o.n, "Degree for the general identity");
  landen->add_option("--y", o.y, "Im(tau) for the trigonometric limit");
  landen->add_option("--check-tol", o.check_tol, "Residual tolerance");
  landen->callback([&] {
    if (handler) return;
    command = "landen verify";
    handler = cmd_landen_verify;
  });
  leaf(landen, "verify", "landen verify", "One identity at one tau", cmd_landen_verify);
  leaf(landen, "limit", "landen limit", "Trigonometric limit of an identity", cmd_landen_limit);
  leaf(landen, "all", "landen all", "Every catalog identity over the tau grid", cmd_landen_all);

  leaf(&app, "verify-all", "verify-all", "Run the acceptance suite", cmd_verify_all);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (command.empty()) {
      // name whatever subcommands were recognized before the failure
      for (const CLI::App* at = &app; !at->get_subcommands().empty();) {
        at = at->get_subcommands().front();
        command += (command.empty() ? "" : " ") + at->get_name();
      }
    }
    err << "cblab: " << e.what() << "\n" << "Run with --help for usage.\n";
    emit(out, o.format == "csv" ? "csv" : "json", command, "parse_error",
         error_body("ParseError", e.what()), true);
    return kExitInputError;
  }

  try {
    const Outcome result = handler(o);
    emit(out, o.format, command, result.verified ? "ok" : "verification_failed", result.payload,
         false);
    return result.verified ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    const std::string status = status_of(e);
    err << "cblab: " << e.kind() << ": " << e.what() << "\n";
    if (status == "parse_error") err << "Run with --help for usage.\n";
    emit(out, o.format, command, status, error_body(e.kind(), e.what()), true);
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "cblab: internal error: " << e.what() << "\n";
    emit(out, o.format, command, "domain_error", error_body("InternalError", e.what()), true);
    return kExitInputError;
  }
}

}  // namespace cblab::cli
