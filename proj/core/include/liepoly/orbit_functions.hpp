#ifndef LIEPOLY_ORBIT_FUNCTIONS_HPP
#define LIEPOLY_ORBIT_FUNCTIONS_HPP

#include <complex>
#include <optional>
#include <vector>

#include <liepoly/orbit.hpp>

namespace liepoly {

using Cplx = std::complex<double>;

// Evaluation point in alpha-check coordinates. When the point is rational
// (grid points) the exact coordinates are kept so that phases can be reduced
// mod 1 before exponentiation; orthogonality sums then verify to machine
// precision instead of drifting with the phase magnitude.
struct EvalPoint {
  std::vector<double> x;
  std::optional<RatVec> exact;

  static EvalPoint from_doubles(std::vector<double> v) { return {std::move(v), std::nullopt}; }
  static EvalPoint from_rationals(RatVec v);
  // Grid point s/M given in omega-check coordinates.
  static EvalPoint from_grid(const GroupId& g, const std::vector<long long>& s, long long M);

  int dim() const { return (int)x.size(); }
};

// C_lambda(x) = sum over the Weyl orbit of exp(2 pi i <mu, x>).
Cplx eval_C(const GroupId& g, const Weight& lambda, const EvalPoint& x);

// S_lambda(x): the signed orbit sum; lambda must be strictly dominant.
Cplx eval_S(const GroupId& g, const Weight& lambda, const EvalPoint& x);

// Character of the irreducible representation of highest weight lambda,
// S_{lambda+rho}(x) / S_rho(x). On the reflection walls both numerator and
// denominator vanish; there the value is recovered exactly as the ratio of
// the first non-vanishing directional derivatives along a fixed interior
// direction (the singularity is removable).
Cplx eval_character(const GroupId& g, const Weight& lambda, const EvalPoint& x);

} // namespace liepoly

#endif
