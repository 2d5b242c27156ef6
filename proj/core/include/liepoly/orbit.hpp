#ifndef LIEPOLY_ORBIT_HPP
#define LIEPOLY_ORBIT_HPP

#include <map>
#include <optional>
#include <vector>

#include <liepoly/group.hpp>

namespace liepoly {

// Weights are integer coordinate vectors in the omega-basis throughout.
using Weight = std::vector<long long>;

bool is_dominant(const Weight& w);
bool is_strictly_dominant(const Weight& w);

// rho = (1,...,1) in omega-coordinates.
Weight rho_weight(const GroupId& g);

// r_j acting on a weight: subtract lambda_j times row j of the Cartan matrix
// (j is 0-based here; the axis count matches the rank).
Weight reflect(const GroupId& g, int j, const Weight& lambda);

struct OrbitPoint {
  Weight weight;
  int parity; // +1 or -1, sign (-1)^{p(mu)} of the shortest reflection word
};

struct WeylOrbit {
  Weight seed;
  std::vector<OrbitPoint> points; // deterministic order, seed first
  long long size() const { return (long long)points.size(); }
};

// Breadth-first closure of a dominant seed under all simple reflections,
// parity = BFS depth mod 2. Throws if the revisit parities ever disagree.
const WeylOrbit& weyl_orbit(const GroupId& g, const Weight& lambda);

struct DominantRep {
  Weight weight;
  int sign;     // (-1)^{number of reflections applied}
  bool on_wall; // some coordinate of the representative is zero
};

// Unique dominant representative of the W-orbit of mu.
DominantRep dominant_representative(const GroupId& g, const Weight& mu);

// Strict dominantization used by the antisymmetric machinery: returns the
// dominant representative with its sign, or nullopt when the orbit touches a
// wall (in which case the corresponding S-term vanishes).
std::optional<DominantRep> signed_dominant(const GroupId& g, const Weight& mu);

// Congruence number of a weight of a simple group (constant on the blocks of
// the polynomial tables): A_n uses sum_j j*lambda_j mod (n+1), B3 uses
// lambda_3 mod 2, C2 lambda_1 mod 2, C3 lambda_1+lambda_3 mod 2, G2 is 0.
int congruence_class(const GroupId& g, const Weight& lambda);

// Point conversion: omega-check coordinates t -> alpha-check coordinates
// x = C^{-1} t, so that <lambda, x> = sum_j lambda_j x_j.
RatVec omega_check_to_alpha_check(const GroupId& g, const RatVec& t);

// Reflection r_j acting on a point in omega-check coordinates: subtract t_j
// times column j of the Cartan matrix.
template <typename Vec>
void reflect_point_inplace(const GroupData& gd, int j, Vec& t) {
  auto tj = t[j];
  int n = (int)t.size();
  for (int k = 0; k < n; ++k) t[k] = t[k] - tj * gd.cartan[k][j];
}

} // namespace liepoly

#endif
