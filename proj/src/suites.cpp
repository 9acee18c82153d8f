#include "divlab/suites.hpp"

#include "divlab/channels.hpp"
#include "divlab/checks.hpp"
#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/parallel.hpp"
#include "divlab/perturbation.hpp"
#include "divlab/random.hpp"
#include "divlab/renyi.hpp"
#include "divlab/variational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace divlab {

namespace {

using checks::eq_violation;
using checks::le_violation;

struct Property {
  std::string name;
  double tolerance;
};

using Violations = std::vector<double>;
using TrialBody = std::function<void(int trial, Rng& rng, Violations& v)>;

void record(Violations& v, std::size_t k, double amount) {
  if (std::isnan(amount)) amount = kInf;
  v[k] = std::max(v[k], amount);
}

std::vector<SuiteOutcome> run_trials(const std::string& suite, const std::vector<Property>& props,
                                     const SuiteOptions& options, std::uint64_t label, const TrialBody& body) {
  const int trials = std::max(options.trials, 0);
  std::vector<Violations> per_trial(static_cast<std::size_t>(trials), Violations(props.size(), 0.0));
  parallel_for(trials, [&](int t) {
    Rng rng = trial_rng(options.seed, static_cast<std::uint64_t>(t), label);
    body(t, rng, per_trial[static_cast<std::size_t>(t)]);
  });
  std::vector<SuiteOutcome> out;
  for (std::size_t k = 0; k < props.size(); ++k) {
    SuiteOutcome o;
    o.suite = suite;
    o.property = props[k].name;
    o.trials = trials;
    o.tolerance = props[k].tolerance;
    for (const auto& v : per_trial) o.max_violation = std::max(o.max_violation, v[k]);
    o.passed = o.max_violation <= o.tolerance;
    out.push_back(o);
  }
  return out;
}

std::vector<ConvexFunctionSpec> suite_catalog() {
  auto fs = standard_catalog(0.5);
  fs.push_back(catalog_lookup("power", 1.5));
  fs.push_back(catalog_lookup("power", 2.0));
  return fs;
}

const std::vector<ConvexFunctionSpec>& catalog() {
  static const std::vector<ConvexFunctionSpec> fs = suite_catalog();
  return fs;
}

Index draw_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

double draw_uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Pairs covering the faithful, singular and orthogonal-support cases.
std::pair<PositiveFunctional, PositiveFunctional> mixed_pair(Index dim, Rng& rng, int kind) {
  switch (kind % 5) {
    case 0:
      return {random_faithful_state(dim, rng), random_faithful_state(dim, rng)};
    case 1:
      return {random_state(dim, rng, draw_index(rng, 1, dim)), random_faithful_state(dim, rng)};
    case 2:
      return {random_faithful_state(dim, rng), random_state(dim, rng, draw_index(rng, 1, dim))};
    case 3: {
      if (dim < 2) return {random_state(dim, rng), random_state(dim, rng)};
      const ComplexMatrix u = random_unitary(dim, rng);
      const Index k = draw_index(rng, 1, dim - 1);
      const ComplexMatrix a = u.leftCols(k) * random_state(k, rng).op().matrix() * u.leftCols(k).adjoint();
      const ComplexMatrix b =
          u.rightCols(dim - k) * random_state(dim - k, rng).op().matrix() * u.rightCols(dim - k).adjoint();
      return {make_functional(HermitianOperator::symmetrize(a)), make_functional(HermitianOperator::symmetrize(b))};
    }
    default:
      return {random_state(dim, rng, draw_index(rng, 1, dim)), random_state(dim, rng, draw_index(rng, 1, dim))};
  }
}

// Projections onto consecutive column blocks of u with the given sizes.
std::vector<HermitianOperator> block_partition(const ComplexMatrix& u, const std::vector<Index>& sizes) {
  std::vector<HermitianOperator> out;
  Index start = 0;
  for (Index s : sizes) {
    const ComplexMatrix cols = u.middleCols(start, s);
    out.push_back(HermitianOperator::symmetrize(cols * cols.adjoint()));
    start += s;
  }
  return out;
}

PositiveFunctional mix(double lambda, const PositiveFunctional& x, const PositiveFunctional& y) {
  return make_functional(x.op() * lambda + y.op() * (1.0 - lambda));
}

// sigma1 = sigma2 - eps P <= sigma2 with P a rank-one projection and eps at
// half the smallest eigenvalue, so sigma1 stays positive.
PositiveFunctional ordered_below(const PositiveFunctional& sigma2, Rng& rng) {
  const HermitianOperator p = random_projection(sigma2.dim(), 1, rng);
  const double eps = 0.5 * sigma2.spectrum().eigenvalues(0);
  return make_functional(sigma2.op() - p * eps);
}

// ---------------------------------------------------------------------------

std::vector<SuiteOutcome> suite_dpi(const SuiteOptions& o) {
  const std::vector<Property> props = {{"monotonicity of S_f under channels", 1e-9},
                                       {"monotonicity of D_alpha under channels, alpha in [0,2]", 1e-9}};
  static const double alphas[] = {0.0, 0.5, 0.9, 1.0, 1.5, 2.0};
  return run_trials("dpi", props, o, 1, [&](int t, Rng& rng, Violations& v) {
    const Index d = o.dim;
    const auto [rho, sigma] = mixed_pair(d, rng, t);
    Channel ch;
    switch (t % 3) {
      case 0: ch = random_cptp(d, d, draw_index(rng, 1, 3), rng()); break;
      case 1: ch = random_cptp(d, std::max<Index>(1, d - 1), d, rng()); break;
      default: {
        const Index k = d > 1 ? draw_index(rng, 1, d - 1) : 1;
        const auto parts = d > 1 ? block_partition(random_unitary(d, rng), {k, d - k})
                                 : std::vector<HermitianOperator>{HermitianOperator::identity(1)};
        ch = pinching_channel(parts);
      }
    }
    const PositiveFunctional rho_out = apply_channel_predual(ch, rho);
    const PositiveFunctional sigma_out = apply_channel_predual(ch, sigma);
    const ModularSpectrum before = relative_modular_spectrum(rho, sigma);
    const ModularSpectrum after = relative_modular_spectrum(rho_out, sigma_out);
    for (const auto& f : catalog()) {
      record(v, 0, le_violation(standard_f_divergence(f, after), standard_f_divergence(f, before)));
    }
    for (double a : alphas) record(v, 1, le_violation(d_alpha(rho_out, sigma_out, a), d_alpha(rho, sigma, a)));
  });
}

std::vector<SuiteOutcome> suite_convexity(const SuiteOptions& o) {
  const std::vector<Property> props = {{"joint convexity of S_f", 1e-9},
                                       {"S_f antitone in sigma when f(0+) <= 0", 1e-9},
                                       {"joint concavity of Q_alpha, alpha in [0,1]", 1e-9},
                                       {"joint convexity of Q_alpha, alpha in [1,2]", 1e-9}};
  static const double lambdas[] = {0.25, 0.5, 0.75};
  return run_trials("convexity", props, o, 2, [&](int t, Rng& rng, Violations& v) {
    const Index d = o.dim;
    const auto [r1, s1] = mixed_pair(d, rng, t);
    const auto [r2, s2] = mixed_pair(d, rng, t + 1);
    for (double lam : lambdas) {
      const PositiveFunctional rm = mix(lam, r1, r2);
      const PositiveFunctional sm = mix(lam, s1, s2);
      const ModularSpectrum mixed = relative_modular_spectrum(rm, sm);
      const ModularSpectrum one = relative_modular_spectrum(r1, s1);
      const ModularSpectrum two = relative_modular_spectrum(r2, s2);
      for (const auto& f : catalog()) {
        const double a = standard_f_divergence(f, one);
        const double b = standard_f_divergence(f, two);
        const double rhs = (std::isinf(a) || std::isinf(b)) ? kInf : lam * a + (1.0 - lam) * b;
        record(v, 0, le_violation(standard_f_divergence(f, mixed), rhs));
      }
      for (double alpha : {0.25, 0.5, 0.75}) {
        const double rhs = lam * q_alpha(one, alpha) + (1.0 - lam) * q_alpha(two, alpha);
        record(v, 2, le_violation(rhs, q_alpha(mixed, alpha)));
      }
      for (double alpha : {1.25, 1.5, 2.0}) {
        const double a = q_alpha(one, alpha);
        const double b = q_alpha(two, alpha);
        const double rhs = (std::isinf(a) || std::isinf(b)) ? kInf : lam * a + (1.0 - lam) * b;
        record(v, 3, le_violation(q_alpha(mixed, alpha), rhs));
      }
    }
    const PositiveFunctional rho = r1;
    const PositiveFunctional sigma2 = random_faithful_state(d, rng);
    const PositiveFunctional sigma1 = ordered_below(sigma2, rng);
    for (const auto& f : catalog()) {
      if (f.f_at_zero_plus > 0.0) continue;
      record(v, 1, le_violation(standard_f_divergence(f, rho, sigma2), standard_f_divergence(f, rho, sigma1)));
    }
  });
}

std::vector<SuiteOutcome> suite_transpose(const SuiteOptions& o) {
  const std::vector<Property> props = {{"S_f(rho||sigma) = S_transpose(f)(sigma||rho)", 1e-10},
                                       {"transpose is an involution", 1e-10}};
  return run_trials("transpose", props, o, 3, [&](int t, Rng& rng, Violations& v) {
    const auto [rho, sigma] = mixed_pair(o.dim, rng, t);
    const double scale = draw_uniform(rng, 0.2, 3.0);
    const PositiveFunctional r = t % 7 == 6 ? rho.scaled(0.0) : rho.scaled(scale);
    const ModularSpectrum fwd = relative_modular_spectrum(r, sigma);
    const ModularSpectrum back = relative_modular_spectrum(sigma, r);
    for (const auto& f : catalog()) {
      const ConvexFunctionSpec ft = transpose(f);
      record(v, 0, eq_violation(standard_f_divergence(ft, back), standard_f_divergence(f, fwd)));
      const ConvexFunctionSpec ftt = transpose(ft);
      const double x = std::exp(draw_uniform(rng, -5.0, 5.0));
      record(v, 1, eq_violation(ftt(x), f(x)));
      record(v, 1, eq_violation(ftt.f_at_zero_plus, f.f_at_zero_plus));
      record(v, 1, eq_violation(ftt.fprime_at_infinity, f.fprime_at_infinity));
    }
  });
}

std::vector<SuiteOutcome> suite_renyi(const SuiteOptions& o) {
  const std::vector<Property> props = {
      {"Q_alpha(rho||sigma) = Q_{1-alpha}(sigma||rho)", 1e-12},
      {"skew identity between D_alpha(rho||sigma) and D_{1-alpha}(sigma||rho)", 1e-10},
      {"D_alpha nondecreasing in alpha", 1e-9},
      {"log Q_alpha convex in alpha", 1e-9},
      {"D_alpha -> D_1 as alpha -> 1", 1e-3},
      {"D_alpha >= log(Tr rho / Tr sigma)", 1e-9},
      {"ordering monotonicity of Q_alpha in sigma", 1e-9},
      {"sandwiched D_alpha <= D_alpha for alpha > 1", 1e-9},
      {"D_2 <= D_max <= D_64 + 0.05 and D_max <= sandwiched D_64 + 0.05", 1e-9},
  };
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(0.05 * k);
  return run_trials("renyi", props, o, 4, [&, grid](int t, Rng& rng, Violations& v) {
    const Index d = o.dim;
    const auto [rho0, sigma0] = mixed_pair(d, rng, t);
    const PositiveFunctional rho = rho0.scaled(draw_uniform(rng, 0.3, 2.0));
    const PositiveFunctional sigma = sigma0.scaled(draw_uniform(rng, 0.3, 2.0));
    const ModularSpectrum fwd = relative_modular_spectrum(rho, sigma);
    const ModularSpectrum back = relative_modular_spectrum(sigma, rho);
    const double log_ratio = std::log(rho.trace() / sigma.trace());
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      record(v, 0, eq_violation(q_alpha(fwd, a), q_alpha(back, 1.0 - a)));
      const double lhs = d_alpha(rho, sigma, a) / a;
      const double rhs_d = d_alpha(sigma, rho, 1.0 - a);
      const double rhs = std::isinf(rhs_d) ? rhs_d : rhs_d / (1.0 - a) + log_ratio / (a * (1.0 - a));
      record(v, 1, eq_violation(lhs, rhs));
    }
    const AlphaSweep sweep = alpha_sweep(rho, sigma, grid);
    for (std::size_t k = 0; k < sweep.rows.size(); ++k) {
      record(v, 5, le_violation(log_ratio, sweep.rows[k].d_value));
      if (k == 0) continue;
      record(v, 2, le_violation(sweep.rows[k - 1].d_value, sweep.rows[k].d_value));
    }
    record(v, 3, sweep.log_convex ? 0.0 : kInf);

    if (rho.is_faithful() && sigma.is_faithful()) {
      const double d1 = d_one(rho, sigma);
      record(v, 4, checks::abs_gap(d_alpha(rho, sigma, 1.0 - 1e-4), d1));
      if (std::isfinite(d_alpha(rho, sigma, 2.0))) record(v, 4, checks::abs_gap(d_alpha(rho, sigma, 1.0 + 1e-4), d1));

      const double dmax = d_max(rho, sigma);
      record(v, 8, le_violation(d_alpha(rho, sigma, 2.0), dmax));
      record(v, 8, le_violation(dmax, d_alpha(rho, sigma, kDInfinityProxyAlpha) + 0.05));
      record(v, 8, le_violation(dmax, sandwiched_d_alpha(rho, sigma, kDInfinityProxyAlpha) + 0.05));
    }
    for (double a : {1.2, 1.5, 2.0}) {
      record(v, 7, le_violation(sandwiched_d_alpha(rho, sigma, a), d_alpha(rho, sigma, a)));
    }
    const PositiveFunctional s2 = random_faithful_state(d, rng);
    const PositiveFunctional s1 = ordered_below(s2, rng);
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
      record(v, 6, le_violation(q_alpha(rho, s1, a), q_alpha(rho, s2, a)));
    }
  });
}

std::vector<SuiteOutcome> suite_variational(const SuiteOptions& o) {
  const std::vector<Property> props = {
      {"variational value matches spectral S_f (relative 1e-3)", 1e-3},
      {"V(n) nondecreasing along the doubling schedule", 1e-9},
      {"V(n) <= S_f", 1e-8},
      {"closed-form V(n) for -log t matches quadrature", 1e-8},
      {"closed-form inner minimum matches numeric solver", 1e-8},
  };
  const auto fs = standard_catalog(0.5);
  return run_trials("variational-agreement", props, o, 5, [&](int, Rng& rng, Violations& v) {
    const Index d = o.dim;
    // Truncation error at n_max grows with the spread of a/b, so the pairs
    // keep every eigenvalue above 0.25/d.
    const PositiveFunctional rho = random_faithful_state(d, rng, kWellConditionedMix);
    const PositiveFunctional sigma = random_faithful_state(d, rng, kWellConditionedMix);
    const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
    VariationalOptions vo;
    vo.n_max = o.n_max;
    for (const auto& f : fs) {
      const double exact = standard_f_divergence(f, spec);
      const VariationalResult res = variational_Sf(f, rho, sigma, vo);
      record(v, 0, eq_violation(res.value, exact));
      for (std::size_t k = 0; k < res.report.values.size(); ++k) {
        record(v, 2, le_violation(res.report.values[k], exact));
        if (k > 0) record(v, 1, le_violation(res.report.values[k - 1], res.report.values[k]));
      }
    }
    static const ConvexFunctionSpec neg_log = catalog_lookup("neg_log");
    for (int n : {1, 3, 64, 1000}) {
      record(v, 3, eq_violation(kosaki_entropy(rho, sigma, n), variational_value_at_n(neg_log, spec, n)));
    }
    const double s = std::exp(draw_uniform(rng, -4.0, 4.0));
    record(v, 4, checks::abs_gap(inner_minimum_numeric(rho, sigma, s).value, inner_minimum(spec, s)));
  });
}

std::vector<SuiteOutcome> suite_peierls(const SuiteOptions& o) {
  const std::vector<Property> props = {
      {"S_f >= Tr sigma f(Tr rho / Tr sigma)", 1e-9},
      {"equality for proportional pairs", 1e-9},
      {"strict gap >= 1e-6 for non-proportional pairs (t log t)", 0.0},
      {"S_f >= 0 when Tr rho = Tr sigma and f(1) = 0", 1e-9},
      {"scalar splitting is strict off proportionality", 0.0},
  };
  return run_trials("peierls", props, o, 6, [&](int t, Rng& rng, Violations& v) {
    const Index d = o.dim;
    const auto [rho0, sigma0] = mixed_pair(d, rng, t);
    const PositiveFunctional rho = rho0.scaled(draw_uniform(rng, 0.2, 3.0));
    const PositiveFunctional sigma = sigma0.scaled(draw_uniform(rng, 0.2, 3.0));
    const double k = draw_uniform(rng, 0.2, 3.0);
    const PositiveFunctional prop = sigma.scaled(k);
    for (const auto& f : catalog()) {
      const double bound = sigma.trace() * f(rho.trace() / sigma.trace());
      record(v, 0, le_violation(bound, standard_f_divergence(f, rho, sigma)));
      record(v, 1, eq_violation(standard_f_divergence(f, prop, sigma), sigma.trace() * f(k)));
      if (std::abs(f(1.0)) < 1e-15) {
        record(v, 3, le_violation(0.0, standard_f_divergence(f, rho.normalized(), sigma.normalized())));
      }
    }
    static const ConvexFunctionSpec t_log_t = catalog_lookup("t_log_t");
    const PositiveFunctional faithful = random_faithful_state(d, rng);
    const PositiveFunctional off = make_functional(faithful.op() + random_state(d, rng).op() * 0.3);
    const double gap = standard_f_divergence(t_log_t, off, faithful) -
                       faithful.trace() * t_log_t(off.trace() / faithful.trace());
    record(v, 2, std::max(0.0, 1e-6 - gap));

    const double a1 = draw_uniform(rng, 0.1, 2.0), b1 = draw_uniform(rng, 0.1, 2.0);
    const double b2 = draw_uniform(rng, 0.1, 2.0);
    const double a2 = b2 * (a1 / b1) * draw_uniform(rng, 1.5, 3.0);
    for (const auto& f : catalog()) {
      if (f.is_affine()) continue;
      const double joint = f.weighted(a1 + a2, b1 + b2);
      const double split = f.weighted(a1, b1) + f.weighted(a2, b2);
      record(v, 4, joint < split ? 0.0 : joint - split + 1e-300);
    }
  });
}

std::vector<SuiteOutcome> suite_compression(const SuiteOptions& o) {
  const std::vector<Property> props = {
      {"compressed S_f reaches S_f at the identity", 1e-10},
      {"compressed S_f nondecreasing along the chain when f >= 0", 1e-9},
      {"restrictions to nested block subalgebras nondecreasing", 1e-9},
  };
  return run_trials("compression", props, o, 7, [&](int t, Rng& rng, Violations& v) {
    const Index d = std::max<Index>(o.dim, 2);
    const auto [rho, sigma] = mixed_pair(d, rng, t);
    const ComplexMatrix u = random_unitary(d, rng);
    std::vector<HermitianOperator> chain;
    for (Index r = std::min<Index>(2, d); ; r = std::min(d, r + 2)) {
      chain.push_back(HermitianOperator::symmetrize(u.leftCols(r) * u.leftCols(r).adjoint()));
      if (r == d) break;
    }
    for (const auto& f : catalog()) {
      const bool nonneg = f.name == "square_dev" || f.name == "square_dev_over_t" || f.name == "hellinger";
      double prev = -kInf;
      for (const auto& e : chain) {
        const double s = standard_f_divergence(f, compress(rho, e), compress(sigma, e));
        if (nonneg) record(v, 1, le_violation(prev, s));
        prev = s;
      }
      record(v, 0, eq_violation(prev, standard_f_divergence(f, rho, sigma)));
    }
    // N_1 = {P, 1-P} inside N_2 = P split further, inside M.
    const Index k = d / 2;
    const auto coarse = block_partition(u, {k, d - k});
    std::vector<Index> fine_sizes(static_cast<std::size_t>(k), 1);
    fine_sizes.push_back(d - k);
    const auto fine = block_partition(u, fine_sizes);
    const PositiveFunctional r1 = restrict_to_subalgebra(rho, coarse), s1 = restrict_to_subalgebra(sigma, coarse);
    const PositiveFunctional r2 = restrict_to_subalgebra(rho, fine), s2 = restrict_to_subalgebra(sigma, fine);
    for (const auto& f : catalog()) {
      const double a = standard_f_divergence(f, r1, s1);
      const double b = standard_f_divergence(f, r2, s2);
      const double c = standard_f_divergence(f, rho, sigma);
      record(v, 2, le_violation(a, b));
      record(v, 2, le_violation(b, c));
    }
  });
}

std::vector<SuiteOutcome> suite_perturbation(const SuiteOptions& o) {
  const std::vector<Property> props = {
      {"D(rho||phi^h) = -rho(h) + D(rho||phi)", 1e-8},
      {"spectral and Umegaki relative entropy agree for phi^h", 1e-9},
      {"Petz ascent reaches D(omega||phi)", 1e-6},
      {"every Petz iterate is a lower bound", 1e-9},
      {"g(h + cI) = g(h)", 1e-12},
      {"Gibbs minimum matches -log Tr exp(log phi - h)", 1e-6},
      {"log Tr exp(log phi + h) >= log Tr phi + phi(h)/Tr phi", 1e-12},
  };
  return run_trials("perturbation", props, o, 8, [&](int t, Rng& rng, Violations& v) {
    const Index d = o.dim;
    const PositiveFunctional phi = random_faithful_state(d, rng).scaled(draw_uniform(rng, 0.5, 2.0));
    const HermitianOperator h = random_hermitian(d, rng, 0.7);
    const PositiveFunctional rho = random_state(d, rng, draw_index(rng, 1, d));
    record(v, 0, eq_violation(entropy_decomposition_check(rho, phi, h).lhs, relative_entropy(rho, phi)));
    record(v, 1, umegaki_check(phi, h));

    const PositiveFunctional omega = random_faithful_state(d, rng);
    const PositiveFunctional phi_n = phi.normalized();
    PetzOptions po;
    po.start = t % 2 == 0 ? PetzStart::LogRatio : PetzStart::Zero;
    const PetzResult pr = petz_variational_entropy(omega, phi_n, po);
    const double exact = relative_entropy(omega, phi_n);
    record(v, 2, pr.iterations <= po.max_iters ? checks::abs_gap(pr.value, exact) : kInf);
    for (double g : pr.history) record(v, 3, std::max(0.0, g - exact));
    const double c = draw_uniform(rng, -3.0, 3.0);
    record(v, 4,
           checks::abs_gap(petz_objective(omega, phi_n, h + HermitianOperator::identity(d) * c),
                           petz_objective(omega, phi_n, h)));

    const GibbsMinimum gm = gibbs_minimum(phi, h);
    record(v, 5, checks::abs_gap(gm.value, gm.closed_form));
    const double lhs = log_trace_exp(faithful_log(phi) + h);
    const double rhs = std::log(phi.trace()) + phi.expectation(h) / phi.trace();
    record(v, 6, std::max(0.0, rhs - lhs));
  });
}

using SuiteFn = std::vector<SuiteOutcome> (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"dpi", suite_dpi},
      {"convexity", suite_convexity},
      {"transpose", suite_transpose},
      {"renyi", suite_renyi},
      {"variational-agreement", suite_variational},
      {"peierls", suite_peierls},
      {"compression", suite_compression},
      {"perturbation", suite_perturbation},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dpi",    "convexity",  "transpose",   "renyi",
                                                 "variational-agreement", "peierls", "compression",
                                                 "perturbation"};
  return names;
}

std::vector<SuiteOutcome> run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  if (options.dim < 1) throw Error(ErrorKind::DimensionError, "suite dimension must be positive");
  return it->second(options);
}

std::vector<SuiteOutcome> run_suites(const std::string& name, const SuiteOptions& options) {
  if (name != "all") return run_suite(name, options);
  std::vector<SuiteOutcome> out;
  for (const auto& n : suite_names()) {
    auto part = run_suite(n, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace divlab
