#ifndef LIEPOLY_DISCRETIZATION_HPP
#define LIEPOLY_DISCRETIZATION_HPP

#include <complex>
#include <vector>

#include <liepoly/orbit_functions.hpp>

namespace liepoly {

struct GridSpec {
  GroupId group;
  long long M = 1;
};

// One point of F_M: numerators s (the point is sum_i (s_i/M) omega-check_i)
// and its weight epsilon(x), the size of the W-orbit of x on the torus R^n/Q-check.
struct GridPoint {
  std::vector<long long> s;
  long long epsilon = 1;
};

// All lattice points of the fundamental region: s >= 0 with
// sum_i s_i m_i <= M per simple factor.  Deterministic (lexicographic) order.
std::vector<GridPoint> grid(const GridSpec& spec);

// Interior points: s_i >= 1 with a strict marks inequality per factor
// (sum s_i m_i < M, equivalently <= M-1); the count follows the Coxeter rule
// |F~_M| = 0 for M < h, 1 for M = h, |F_{M-h}| above.
std::vector<GridPoint> interior_grid(const GridSpec& spec);

// Closed-form point count (binomials for the A/B/C families; G2 and products
// by enumeration of the marks constraint alone).
long long grid_cardinality(const GroupId& g, long long M);
long long interior_grid_cardinality(const GroupId& g, long long M);

// Orbit size of the grid point s/M on the torus R^n/Q-check.
long long epsilon_weight(const GroupId& g, long long M, const std::vector<long long>& s);

// Weight labels admissible at level M: dominant lambda with
// <lambda, dual marks> <= M for the C-family, strictly dominant lambda with
// <lambda, dual marks> <= M-1 for the S-family.  Functions with labels
// outside the window alias on the grid and break orthogonality.
std::vector<Weight> admissible_c_labels(const GroupId& g, long long M);
std::vector<Weight> admissible_s_labels(const GroupId& g, long long M);
bool is_admissible_c(const GroupId& g, long long M, const Weight& w);
bool is_admissible_s(const GroupId& g, long long M, const Weight& w);

struct GramReport {
  GroupId group;
  long long M = 0;
  char family = 'C';
  std::vector<Weight> labels;
  std::vector<std::vector<Cplx>> matrix;
  std::vector<long long> expected_diagonal;
  double max_offdiag = 0.0;     // |G_ij| / sqrt(G_ii G_jj), i != j
  double max_diag_error = 0.0;  // relative error of the diagonal
};

// Gram matrix of unnormalized C-functions over F_M with weight epsilon(x):
// diagonal det(C) |W_lambda| M^n, off-diagonal zero.  Labels outside the
// admissible window are rejected.
GramReport gram_C(const GroupId& g, long long M, const std::vector<Weight>& labels);

// Gram matrix of S-functions over the interior grid with constant weight
// |W|: diagonal det(C) |W| M^n.
GramReport gram_S(const GroupId& g, long long M, const std::vector<Weight>& labels);

} // namespace liepoly

#endif
