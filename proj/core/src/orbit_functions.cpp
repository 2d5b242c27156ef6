#include <liepoly/orbit_functions.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liepoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cplx unit_phase(double frac) { return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)}; }

// Phase <mu, x> reduced mod 1 when x is exact.
double phase_mod1(const Weight& mu, const EvalPoint& p) {
  if (p.exact) {
    Rat ph(0);
    for (size_t j = 0; j < mu.size(); ++j) ph += Rat(mu[j]) * (*p.exact)[j];
    return ph.frac().to_double();
  }
  double ph = 0;
  for (size_t j = 0; j < mu.size(); ++j) ph += (double)mu[j] * p.x[j];
  return ph - std::floor(ph);
}

Cplx orbit_sum(const GroupId& g, const Weight& lambda, const EvalPoint& p, bool signed_sum) {
  if ((int)lambda.size() != g.rank() || p.dim() != g.rank())
    throw std::invalid_argument("orbit function: rank mismatch");
  const WeylOrbit& orbit = weyl_orbit(g, lambda);
  Cplx acc{0.0, 0.0};
  for (const OrbitPoint& op : orbit.points) {
    Cplx term = unit_phase(phase_mod1(op.weight, p));
    acc += (signed_sum && op.parity < 0) ? -term : term;
  }
  return acc;
}

} // namespace

EvalPoint EvalPoint::from_rationals(RatVec v) {
  EvalPoint p;
  p.x.reserve(v.size());
  for (const Rat& r : v) p.x.push_back(r.to_double());
  p.exact = std::move(v);
  return p;
}

EvalPoint EvalPoint::from_grid(const GroupId& g, const std::vector<long long>& s, long long M) {
  RatVec t;
  t.reserve(s.size());
  for (long long si : s) t.push_back(M == 0 ? Rat(0) : Rat(si, M));
  return from_rationals(omega_check_to_alpha_check(g, t));
}

Cplx eval_C(const GroupId& g, const Weight& lambda, const EvalPoint& x) {
  if (!is_dominant(lambda)) throw std::invalid_argument("eval_C: lambda must be dominant");
  return orbit_sum(g, lambda, x, false);
}

Cplx eval_S(const GroupId& g, const Weight& lambda, const EvalPoint& x) {
  if (!is_strictly_dominant(lambda))
    throw std::invalid_argument("eval_S: lambda must be strictly dominant");
  return orbit_sum(g, lambda, x, true);
}

namespace {

// k-th directional moments sum_mu sign(mu) e^{2 pi i <mu,x>} <mu,d>^k of an
// antisymmetric orbit sum; (2 pi i)^k f^{(k)} factors cancel in ratios taken
// at equal k, so they are omitted.
std::vector<Cplx> directional_moments(const GroupId& g, const Weight& lambda,
                                      const EvalPoint& p, const std::vector<double>& d,
                                      int max_order) {
  const WeylOrbit& orbit = weyl_orbit(g, lambda);
  std::vector<Cplx> mom(max_order + 1, Cplx{0, 0});
  for (const OrbitPoint& op : orbit.points) {
    Cplx term = unit_phase(phase_mod1(op.weight, p));
    if (op.parity < 0) term = -term;
    double h = 0;
    for (size_t j = 0; j < d.size(); ++j) h += (double)op.weight[j] * d[j];
    double pow = 1.0;
    for (int k = 0; k <= max_order; ++k) {
      mom[k] += term * pow;
      pow *= h;
    }
  }
  return mom;
}

// A fixed interior direction: strictly positive pairings with every simple
// root, slightly detuned to stay off all degeneracy loci, and scaled so the
// pairing heights stay O(1).
std::vector<double> interior_direction(const GroupId& g, const Weight& top) {
  int n = g.rank();
  RatVec t(n);
  static const long long nums[3] = {83, 97, 71};
  for (int j = 0; j < n; ++j) t[j] = Rat(nums[j % 3], 160 + 13 * j);
  RatVec xr = omega_check_to_alpha_check(g, t);
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) d[j] = xr[j].to_double();
  double hmax = 0;
  {
    const WeylOrbit& orbit = weyl_orbit(g, top);
    for (const OrbitPoint& op : orbit.points) {
      double h = 0;
      for (int j = 0; j < n; ++j) h += (double)op.weight[j] * d[j];
      hmax = std::max(hmax, std::fabs(h));
    }
  }
  if (hmax > 0)
    for (double& v : d) v /= hmax;
  return d;
}

} // namespace

Cplx eval_character(const GroupId& g, const Weight& lambda, const EvalPoint& x) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("eval_character: lambda must be dominant");
  Weight rho = rho_weight(g);
  Weight top = lambda;
  for (size_t j = 0; j < top.size(); ++j) top[j] += rho[j];
  Cplx num = eval_S(g, top, x);
  Cplx den = eval_S(g, rho, x);
  double scale = (double)weyl_orbit(g, rho).size();
  if (std::abs(den) > 1e-8 * scale) return num / den;

  // Wall point: both orbit sums vanish. Take directional moments along an
  // interior direction; the first order at which the denominator survives
  // gives the ratio of leading derivatives.
  std::vector<double> d = interior_direction(g, top);
  int max_order = 2 * g.rank() * (int)g.factors().size() + 12;
  std::vector<Cplx> dn = directional_moments(g, rho, x, d, max_order);
  std::vector<Cplx> nm = directional_moments(g, top, x, d, max_order);
  // Noise floor of a cancelled moment is ~1e-15 * |W|; the first surviving
  // one is many orders above it.
  double threshold = 1e-10 * (double)weyl_orbit(g, rho).size();
  for (int k = 0; k <= max_order; ++k)
    if (std::abs(dn[k]) > threshold) return nm[k] / dn[k];
  throw std::runtime_error("eval_character: vanishing order not found");
}

} // namespace liepoly
