#ifndef LIEPOLY_FAMILIES_HPP
#define LIEPOLY_FAMILIES_HPP

#include <map>

#include <liepoly/discretization.hpp>
#include <liepoly/polynomial.hpp>

namespace liepoly {

// Monomial order induced by the group's level vector.
LevelOrder level_order(const GroupId& g);
BlockLevelOrder block_level_order(const GroupId& g);

// Decomposition of a product of orbit sums: C_lambda * C_mu =
// sum multiplicity * C_nu over dominant nu. The multiplicity of nu is the
// number of pairs from the two orbits summing to nu itself.
std::map<Weight, long long> orbit_product(const GroupId& g, const Weight& lambda,
                                          const Weight& mu);

// C_lambda written as a polynomial in u_j = C_{omega_j}, built by induction
// along the level order: peel a fundamental weight off lambda, expand the
// product u_j C_{lambda - omega_j} and solve for the unique top term. The
// result always has integer coefficients. For product groups the factor
// polynomials are combined over concatenated variables.
const MultiPoly& c_polynomial(const GroupId& g, const Weight& lambda);

// S_lambda(u) = S_{lambda+rho}(x) / S_rho(x) as a polynomial in u, built by
// the signed analogue of the same induction (terms whose shifted weight
// lands on a wall drop out). Equals sum_mu m_{lambda,mu} C_mu(u) with the
// dominant weight multiplicities m.
const MultiPoly& s_polynomial(const GroupId& g, const Weight& lambda);

// Dominant weight multiplicities of the irreducible character chi_lambda,
// recovered by discrete-orthogonality projection on a grid that is fine
// enough for every participating weight: m = <chi, C_mu> / (det C |W_mu| M^n),
// rounded to integers. Throws if a projection misses an integer by more than
// the residual bound.
struct MultiplicityTable {
  Weight seed;
  std::map<Weight, long long> entries;
};
MultiplicityTable weight_multiplicities(const GroupId& g, const Weight& lambda);

// Chebyshev polynomials of the first kind, T_{m+1} = 2 x T_m - T_{m-1}, and
// the rescaled variant T~_m(y) = 2 T_m(y/2) (with T~_0 = 1) that the A1
// orbit polynomials coincide with.
MultiPoly chebyshev_T(int m);
MultiPoly chebyshev_T_tilde(int m);
// Second-kind analogue with the same rescaling, U~_m(2 cos t) = sin((m+1)t)/sin t.
MultiPoly chebyshev_U_tilde(int m);

// (C_{omega_1}(x), ..., C_{omega_n}(x)).
std::vector<Cplx> map_point_to_u(const GroupId& g, const EvalPoint& x);

// Images of the vertices of the fundamental region under x -> u, plus the
// realified presentation used for plotting (A2: (Re u1, Im u1); A3:
// (Re u1, u2, Im u1); the groups with real u are passed through).
struct DomainVertexSet {
  GroupId group;
  std::vector<RatVec> t_coords;               // omega-check coordinates of vertices
  std::vector<std::vector<Cplx>> u;           // raw images
  std::vector<std::vector<double>> presented; // realified presentation
};
DomainVertexSet domain_vertices(const GroupId& g);
std::vector<double> present_u(const GroupId& g, const std::vector<Cplx>& u);

// S(u) = S_rho(x)^2 as an exact polynomial in u, from the signed orbit
// product of the rho-orbit with itself.
const MultiPoly& weight_poly_S(const GroupId& g);

inline Cplx eval_poly(const MultiPoly& p, const std::vector<Cplx>& u) { return p.eval(u); }

} // namespace liepoly

#endif
