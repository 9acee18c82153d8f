#include "divlab/fclass.hpp"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace divlab {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

// (t-1)^2 s / (t+s) without overflow for s near 0 or inf.
double kernel_times_s(double t, double s) {
  const double sq = (t - 1.0) * (t - 1.0);
  return s > t ? sq / (1.0 + t / s) : sq * s / (t + s);
}

// Density C s^alpha / (1+s)^2 evaluated through logarithms.
std::function<double(double)> cauchy_power_density(double scale, double alpha) {
  return [scale, alpha](double s) { return scale * std::exp(alpha * std::log(s) - 2.0 * std::log1p(s)); };
}

std::vector<double> merged_breaks(std::vector<double> base, std::initializer_list<double> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

bool power_alpha_supported(double alpha) {
  return alpha > 0.0 && alpha <= 2.0 && alpha != 1.0;
}

ConvexFunctionSpec make_neg_log() {
  ConvexFunctionSpec f;
  f.name = "neg_log";
  f.eval = [](double t) { return -std::log(t); };
  f.perspective = [](double a, double b) { return b * (std::log(b) - std::log(a)); };
  f.f_at_zero_plus = kInf;
  f.fprime_at_infinity = 0.0;
  IntegralRepresentation rep;
  rep.b = -1.0;
  rep.density = [](double s) { return 1.0 / ((1.0 + s) * (1.0 + s)); };
  rep.tails = {0.0, -2.0};
  f.representation = std::move(rep);
  return f;
}

ConvexFunctionSpec make_t_log_t() {
  // The representation is the pushforward of the neg_log one under transposition.
  ConvexFunctionSpec f = transpose(make_neg_log());
  f.name = "t_log_t";
  f.eval = [](double t) { return t * std::log(t); };
  f.perspective = [](double a, double b) { return a * (std::log(a) - std::log(b)); };
  return f;
}

ConvexFunctionSpec make_power(double alpha) {
  ConvexFunctionSpec f;
  std::ostringstream name;
  name << "power:" << alpha;
  f.name = name.str();
  IntegralRepresentation rep;
  if (alpha == 2.0) {
    f.eval = [](double t) { return t * t; };
    f.perspective = [](double a, double b) { return a * a / b; };
    rep.a = 1.0;
    rep.b = 2.0;
    rep.c = 1.0;
    f.f_at_zero_plus = 0.0;
    f.fprime_at_infinity = kInf;
  } else if (alpha < 1.0) {
    // -t^alpha, convex for 0 < alpha < 1.
    f.eval = [alpha](double t) { return -std::pow(t, alpha); };
    f.perspective = [alpha](double a, double b) {
      return -std::exp(alpha * std::log(a) + (1.0 - alpha) * std::log(b));
    };
    rep.a = -1.0;
    rep.b = -alpha;
    rep.density = cauchy_power_density(std::sin(alpha * kPi) / kPi, alpha);
    rep.tails = {alpha, alpha - 2.0};
    f.f_at_zero_plus = 0.0;
    f.fprime_at_infinity = 0.0;
  } else {
    f.eval = [alpha](double t) { return std::pow(t, alpha); };
    f.perspective = [alpha](double a, double b) {
      return std::exp(alpha * std::log(a) + (1.0 - alpha) * std::log(b));
    };
    rep.a = 1.0;
    rep.b = alpha;
    rep.density = cauchy_power_density(-std::sin(alpha * kPi) / kPi, alpha);
    rep.tails = {alpha, alpha - 2.0};
    f.f_at_zero_plus = 0.0;
    f.fprime_at_infinity = kInf;
  }
  f.representation = std::move(rep);
  return f;
}

// The power densities are checked against their evaluators before first use.
void gate_power_representation(const ConvexFunctionSpec& f, double alpha) {
  static std::mutex mutex;
  static std::map<double, RepresentationCheck> verified;
  RepresentationCheck check;
  {
    std::lock_guard lock(mutex);
    auto it = verified.find(alpha);
    if (it == verified.end()) it = verified.emplace(alpha, validate_representation(f)).first;
    check = it->second;
  }
  if (check.max_scaled_error > 1e-8 || !check.boundary_consistent || !check.integrable) {
    std::ostringstream os;
    os << "representation of " << f.name << " failed validation (scaled error " << check.max_scaled_error
       << " at t=" << check.worst_t << ")";
    throw Error(ErrorKind::UnsupportedFunction, os.str());
  }
}

ConvexFunctionSpec make_square_dev() {
  ConvexFunctionSpec f;
  f.name = "square_dev";
  f.eval = [](double t) { return (t - 1.0) * (t - 1.0); };
  f.perspective = [](double a, double b) { return (a - b) * (a - b) / b; };
  f.f_at_zero_plus = 1.0;
  f.fprime_at_infinity = kInf;
  IntegralRepresentation rep;
  rep.c = 1.0;
  f.representation = std::move(rep);
  return f;
}

ConvexFunctionSpec make_square_dev_over_t() {
  ConvexFunctionSpec f;
  f.name = "square_dev_over_t";
  f.eval = [](double t) { return (t - 1.0) * (t - 1.0) / t; };
  f.perspective = [](double a, double b) { return (a - b) * (a - b) / a; };
  f.f_at_zero_plus = kInf;
  f.fprime_at_infinity = 1.0;
  IntegralRepresentation rep;
  rep.d = 1.0;
  f.representation = std::move(rep);
  return f;
}

ConvexFunctionSpec make_hellinger() {
  // (1 - sqrt t)^2 = 1 + t + 2(-sqrt t), so mu is twice the density of power:0.5.
  ConvexFunctionSpec f;
  f.name = "hellinger";
  f.eval = [](double t) {
    const double r = 1.0 - std::sqrt(t);
    return r * r;
  };
  f.perspective = [](double a, double b) {
    const double r = std::sqrt(a) - std::sqrt(b);
    return r * r;
  };
  f.f_at_zero_plus = 1.0;
  f.fprime_at_infinity = 1.0;
  IntegralRepresentation rep;
  rep.density = cauchy_power_density(2.0 / kPi, 0.5);
  rep.tails = {0.5, -1.5};
  f.representation = std::move(rep);
  return f;
}

}  // namespace

double IntegralRepresentation::measure_integral(const std::function<double(double)>& weight, double lo,
                                                double hi) const {
  double total = 0.0;
  for (const Atom& atom : atoms) {
    if (atom.location >= lo && atom.location <= hi) total += weight(atom.location) * atom.mass;
  }
  if (has_density() && lo < hi) {
    const auto& dens = density;
    total += integrate_log_scale([&](double s) { return weight(s) * s * dens(s); }, lo, hi,
                                 merged_breaks(breakpoints, {1.0}))
                 .value;
  }
  return total;
}

double IntegralRepresentation::reconstruct(double t) const {
  if (!(t > 0.0)) throw Error(ErrorKind::DomainError, "representation is defined for t > 0");
  const double dt = t - 1.0;
  // fma keeps c (t-1)^2 + b (t-1) + a correctly rounded for large t.
  double value = std::fma(c * dt, dt, a + b * dt) + d * dt * dt / t;
  for (const Atom& atom : atoms) value += dt * dt / (t + atom.location) * atom.mass;
  if (has_density() && dt != 0.0) {
    const auto& dens = density;
    value += integrate_log_scale([&](double s) { return kernel_times_s(t, s) * dens(s); }, 0.0, kInf,
                                 merged_breaks(breakpoints, {1.0, t}))
                 .value;
  }
  return value;
}

double IntegralRepresentation::zero_limit() const {
  if (d > 0.0) return kInf;
  double value = a - b + c;
  for (const Atom& atom : atoms) value += atom.mass / atom.location;
  if (has_density()) {
    if (tails.exponent_at_zero <= 0.0) return kInf;
    value += measure_integral([](double s) { return 1.0 / s; }, 0.0, kInf);
  }
  return value;
}

double IntegralRepresentation::slope_at_infinity() const {
  if (c > 0.0) return kInf;
  double value = b + d;
  for (const Atom& atom : atoms) value += atom.mass;
  if (has_density()) {
    if (tails.exponent_at_infinity >= -1.0) return kInf;
    value += measure_integral([](double) { return 1.0; }, 0.0, kInf);
  }
  return value;
}

double IntegralRepresentation::integrability_norm() const {
  double value = 0.0;
  for (const Atom& atom : atoms) value += atom.mass / (1.0 + atom.location);
  if (has_density()) {
    if (tails.exponent_at_zero <= -1.0 || tails.exponent_at_infinity >= 0.0) return kInf;
    value += measure_integral([](double s) { return 1.0 / (1.0 + s); }, 0.0, kInf);
  }
  return value;
}

double ConvexFunctionSpec::weighted(double a, double b) const {
  if (perspective) return perspective(a, b);
  return b * eval(a / b);
}

bool ConvexFunctionSpec::is_affine() const {
  if (!representation) return false;
  const auto& r = *representation;
  return r.c == 0.0 && r.d == 0.0 && r.atoms.empty() && !r.has_density();
}

ConvexFunctionSpec affine_function(double a, double b) {
  ConvexFunctionSpec f;
  std::ostringstream name;
  name << "affine(" << a << "," << b << ")";
  f.name = name.str();
  f.eval = [a, b](double t) { return a + b * (t - 1.0); };
  f.f_at_zero_plus = a - b;
  f.fprime_at_infinity = b;
  IntegralRepresentation rep;
  rep.a = a;
  rep.b = b;
  f.representation = std::move(rep);
  return f;
}

ConvexFunctionSpec catalog_lookup(const std::string& name, std::optional<double> param) {
  if (name == "power") {
    if (!param || !power_alpha_supported(*param)) {
      throw Error(ErrorKind::UnsupportedFunction, "power requires alpha in (0,1) or (1,2]");
    }
    ConvexFunctionSpec f = make_power(*param);
    if (*param != 2.0) gate_power_representation(f, *param);
    return f;
  }
  if (param) throw Error(ErrorKind::UnsupportedFunction, name + " takes no parameter");
  if (name == "neg_log") return make_neg_log();
  if (name == "t_log_t") return make_t_log_t();
  if (name == "square_dev") return make_square_dev();
  if (name == "square_dev_over_t") return make_square_dev_over_t();
  if (name == "hellinger") return make_hellinger();
  throw Error(ErrorKind::UnsupportedFunction, "unknown function '" + name + "'");
}

ConvexFunctionSpec catalog_from_string(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return catalog_lookup(text);
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  double alpha = 0.0;
  try {
    std::size_t used = 0;
    alpha = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(tail);
  } catch (const std::exception&) {
    throw Error(ErrorKind::UnsupportedFunction, "cannot parse parameter in '" + text + "'");
  }
  return catalog_lookup(head, alpha);
}

std::vector<ConvexFunctionSpec> standard_catalog(double power_alpha) {
  return {catalog_lookup("neg_log"),    catalog_lookup("t_log_t"),
          catalog_lookup("power", power_alpha), catalog_lookup("square_dev"),
          catalog_lookup("square_dev_over_t"), catalog_lookup("hellinger")};
}

ConvexFunctionSpec transpose(const ConvexFunctionSpec& f) {
  if (!f.representation) throw Error(ErrorKind::DomainError, "transpose needs an integral representation");
  const IntegralRepresentation& r = *f.representation;
  ConvexFunctionSpec g;
  g.name = "transpose(" + f.name + ")";
  g.eval = [eval = f.eval](double t) { return t * eval(1.0 / t); };
  if (f.perspective) {
    g.perspective = [p = f.perspective](double a, double b) { return p(b, a); };
  } else {
    g.perspective = [eval = f.eval](double a, double b) { return a * eval(b / a); };
  }
  g.f_at_zero_plus = f.fprime_at_infinity;
  g.fprime_at_infinity = f.f_at_zero_plus;

  IntegralRepresentation t;
  t.a = r.a;
  t.b = r.a - r.b;
  t.c = r.d;
  t.d = r.c;
  // d mu~(s) = s d mu(1/s): an atom (s, m) moves to (1/s, m/s) and a density
  // g(s) becomes g(1/s)/s.
  for (const Atom& atom : r.atoms) t.atoms.push_back({1.0 / atom.location, atom.mass / atom.location});
  if (r.has_density()) {
    t.density = [dens = r.density](double s) { return dens(1.0 / s) / s; };
    t.tails = {-r.tails.exponent_at_infinity - 1.0, -r.tails.exponent_at_zero - 1.0};
  }
  for (double bp : r.breakpoints) t.breakpoints.push_back(1.0 / bp);
  g.representation = std::move(t);
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = std::exp(llo + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

RepresentationCheck validate_representation(const ConvexFunctionSpec& f, std::span<const double> grid) {
  if (!f.representation) throw Error(ErrorKind::DomainError, "no representation to validate");
  const IntegralRepresentation& r = *f.representation;
  RepresentationCheck out;
  for (double t : grid) {
    const double exact = f.eval(t);
    const double err = std::abs(r.reconstruct(t) - exact);
    if (err > out.max_abs_error) {
      out.max_abs_error = err;
      out.worst_t = t;
    }
    out.max_scaled_error = std::max(out.max_scaled_error, err / std::max(1.0, std::abs(exact)));
  }
  auto consistent = [](double stated, double implied) {
    if (std::isinf(stated) || std::isinf(implied)) return stated == implied;
    return std::abs(stated - implied) <= 1e-8 * std::max(1.0, std::abs(stated));
  };
  out.boundary_consistent =
      consistent(f.f_at_zero_plus, r.zero_limit()) && consistent(f.fprime_at_infinity, r.slope_at_infinity());
  out.integrable = r.c >= 0.0 && r.d >= 0.0 &&
                   std::all_of(r.atoms.begin(), r.atoms.end(), [](const Atom& a) { return a.mass > 0.0; }) &&
                   std::isfinite(r.integrability_norm());
  return out;
}

RepresentationCheck validate_representation(const ConvexFunctionSpec& f) {
  const std::vector<double> grid = log_grid(1e-4, 1e4, 200);
  return validate_representation(f, grid);
}

TruncationData truncate(const ConvexFunctionSpec& f, int n) {
  if (!f.representation) throw Error(ErrorKind::DomainError, "truncation needs an integral representation");
  if (n < 1) throw Error(ErrorKind::DomainError, "truncation index must be >= 1");
  const IntegralRepresentation& r = *f.representation;
  TruncationData out;
  out.n = n;
  out.base = r;
  const double nn = static_cast<double>(n);
  const double lo = 1.0 / nn;
  const double hi = nn;

  out.fn_at_zero_plus = r.a - r.b + r.c + nn * r.d + r.measure_integral([](double s) { return 1.0 / s; }, lo, hi);
  out.fn_prime_at_infinity = r.b + nn * r.c + r.d + r.measure_integral([](double) { return 1.0; }, lo, hi);

  if (r.c > 0.0) out.nu_atoms.push_back({hi, r.c * (1.0 + nn)});
  if (r.d > 0.0) out.nu_atoms.push_back({lo, r.d * (1.0 + nn)});
  for (const Atom& atom : r.atoms) {
    if (atom.location >= lo && atom.location <= hi) {
      out.nu_atoms.push_back({atom.location, (1.0 + atom.location) / atom.location * atom.mass});
    }
  }
  if (r.has_density()) {
    out.nu_density = [dens = r.density](double s) { return (1.0 + s) / s * dens(s); };
  }
  out.breakpoints = merged_breaks(r.breakpoints, {1.0});
  return out;
}

double nu_integral(const TruncationData& trunc, const std::function<double(double)>& g) {
  double total = 0.0;
  for (const Atom& atom : trunc.nu_atoms) total += g(atom.location) * atom.mass;
  if (trunc.base.has_density() && trunc.n > 1) {
    // dnu = (1+s)/s dmu, so the du-integrand is g(s) (1+s) mu'(s).
    const auto& dens = trunc.base.density;
    total += integrate_log_scale([&](double s) { return g(s) * (1.0 + s) * dens(s); }, trunc.lower(),
                                 trunc.upper(), trunc.breakpoints)
                 .value;
  }
  return total;
}

double truncated_eval(const TruncationData& trunc, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::DomainError, "f_n is defined for t > 0");
  const IntegralRepresentation& r = trunc.base;
  const double nn = static_cast<double>(trunc.n);
  const double dt = t - 1.0;
  double value = r.a + r.b * dt + r.c * nn * dt * dt / (t + nn) + r.d * dt * dt / (t + 1.0 / nn);
  for (const Atom& atom : r.atoms) {
    if (atom.location >= trunc.lower() && atom.location <= trunc.upper()) {
      value += dt * dt / (t + atom.location) * atom.mass;
    }
  }
  if (r.has_density() && trunc.n > 1 && dt != 0.0) {
    const auto& dens = r.density;
    value += integrate_log_scale([&](double s) { return kernel_times_s(t, s) * dens(s); }, trunc.lower(),
                                 trunc.upper(), merged_breaks(trunc.breakpoints, {t}))
                 .value;
  }
  return value;
}

double h_n_evaluate(const TruncationData& trunc, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::DomainError, "h_n is evaluated at t > 0");
  return nu_integral(trunc, [t](double s) { return t * (1.0 + s) / (t + s); });
}

}  // namespace divlab
