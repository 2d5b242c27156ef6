#ifndef LIEPOLY_BRANCHING_HPP
#define LIEPOLY_BRANCHING_HPP

#include <map>

#include <liepoly/families.hpp>

namespace liepoly {

// A maximal-subgroup reduction: integer projection matrix with rank(child)
// rows and rank(parent) columns acting on omega-coordinates. Weights project
// by Pr, evaluation points pull back contragrediently by Pr^T, which keeps
// the pairings <mu, x> = <Pr mu, y> intact.
struct BranchingRule {
  GroupId parent;
  GroupId child;
  IntMat projection;

  std::string name() const { return parent.str() + ":" + child.str(); }
};

// The fourteen maximal semisimple reductions among the rank <= 3 groups.
const std::vector<BranchingRule>& rules_catalog();

// Lookup by "Parent:Child" (also accepts "Parent>Child").
const BranchingRule& find_rule(const std::string& name);

Weight project_weight(const BranchingRule& rule, const Weight& mu);

// Decomposition of the restricted orbit sum: project every point of the
// parent orbit and collect child-dominant images, so that pointwise
// C_lambda(parent) = sum multiplicity * prod_f C_{mu_f}(child factor).
std::map<Weight, long long> branch_orbit(const BranchingRule& rule, const Weight& lambda);

// Variable images X_i -> f_i(Y): the branched polynomials of the parent's
// fundamental orbits, expressed over the child's variables.
const std::vector<MultiPoly>& substitution_map(const BranchingRule& rule);

// Result of reducing a parent polynomial: the substituted polynomial over
// child variables and its expansion in the child's orbit-polynomial basis
// (products of factor C-polynomials; T~ for A1 factors). The remainder of
// the greedy elimination is kept for auditing and is zero on success.
struct Decomposition {
  std::map<Weight, Rat> terms;
  MultiPoly remainder;
};
struct Reduction {
  MultiPoly image;
  Decomposition decomposition;
};
Reduction reduce_polynomial(const BranchingRule& rule, const MultiPoly& p);

// Child basis element for a concatenated dominant label.
MultiPoly child_orbit_poly(const GroupId& child, const Weight& label);

} // namespace liepoly

#endif
