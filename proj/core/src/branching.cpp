#include <liepoly/branching.hpp>

#include <mutex>
#include <stdexcept>

namespace liepoly {

const std::vector<BranchingRule>& rules_catalog() {
  static const std::vector<BranchingRule> catalog = [] {
    auto G = [](const char* s) { return GroupId::parse(s); };
    std::vector<BranchingRule> rules;
    rules.push_back({G("A2"), G("A1"), {{2, 2}}});
    rules.push_back({G("C2"), G("A1xA1"), {{1, 1}, {0, 1}}});
    rules.push_back({G("C2"), G("A1"), {{3, 4}}});
    rules.push_back({G("G2"), G("A1xA1"), {{1, 1}, {3, 1}}});
    rules.push_back({G("G2"), G("A2"), {{1, 0}, {1, 1}}});
    rules.push_back({G("G2"), G("A1"), {{10, 6}}});
    rules.push_back({G("A3"), G("C2"), {{1, 0, 1}, {0, 1, 0}}});
    rules.push_back({G("A3"), G("A1xA1"), {{1, 0, 1}, {1, 2, 1}}});
    // so(7) > so(6): the restriction fixing the first three coordinates of
    // the orthogonal realization; row two reads (1,0,0).
    rules.push_back({G("B3"), G("A3"), {{0, 1, 1}, {1, 0, 0}, {0, 1, 0}}});
    rules.push_back({G("B3"), G("A1xA1xA1"), {{1, 1, 0}, {1, 1, 1}, {0, 2, 1}}});
    rules.push_back({G("B3"), G("G2"), {{0, 1, 0}, {1, 0, 1}}});
    rules.push_back({G("C3"), G("C2xA1"), {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}});
    rules.push_back({G("C3"), G("A2"), {{1, 1, 2}, {0, 1, 0}}});
    rules.push_back({G("C3"), G("A1"), {{5, 8, 9}}});
    return rules;
  }();
  return catalog;
}

const BranchingRule& find_rule(const std::string& name) {
  std::string key = name;
  for (char& c : key)
    if (c == '>') c = ':';
  auto sep = key.find(':');
  if (sep == std::string::npos)
    throw std::invalid_argument("rule name must look like Parent:Child");
  GroupId parent = GroupId::parse(key.substr(0, sep));
  GroupId child = GroupId::parse(key.substr(sep + 1));
  for (const BranchingRule& r : rules_catalog())
    if (r.parent == parent && r.child == child) return r;
  throw std::invalid_argument("no reduction rule " + parent.str() + ":" + child.str());
}

Weight project_weight(const BranchingRule& rule, const Weight& mu) {
  if ((int)mu.size() != rule.parent.rank())
    throw std::invalid_argument("project_weight: rank mismatch");
  int rows = rule.child.rank();
  Weight out(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < mu.size(); ++j) out[i] += rule.projection[i][j] * mu[j];
  return out;
}

std::map<Weight, long long> branch_orbit(const BranchingRule& rule, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("branch_orbit: lambda must be dominant");
  const WeylOrbit& orbit = weyl_orbit(rule.parent, lambda);
  std::map<Weight, long long> out;
  for (const OrbitPoint& op : orbit.points) {
    Weight img = project_weight(rule, op.weight);
    if (is_dominant(img)) ++out[img];
  }
  // Conservation: each child orbit accounts for exactly multiplicity * size
  // parent points.
  long long covered = 0;
  for (const auto& [w, mult] : out) covered += mult * weyl_orbit(rule.child, w).size();
  if (covered != orbit.size())
    throw std::logic_error("branch_orbit: projected multiset is not child-invariant");
  return out;
}

MultiPoly child_orbit_poly(const GroupId& child, const Weight& label) {
  return c_polynomial(child, label);
}

const std::vector<MultiPoly>& substitution_map(const BranchingRule& rule) {
  static std::map<std::string, std::vector<MultiPoly>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rule.name());
  if (it != cache.end()) return it->second;

  int np = rule.parent.rank(), nc = rule.child.rank();
  std::vector<MultiPoly> subs;
  for (int i = 0; i < np; ++i) {
    Weight omega(np, 0);
    omega[i] = 1;
    MultiPoly f(nc);
    for (const auto& [w, mult] : branch_orbit(rule, omega))
      f += child_orbit_poly(rule.child, w) * Rat(mult);
    subs.push_back(std::move(f));
  }
  return cache.emplace(rule.name(), std::move(subs)).first->second;
}

Reduction reduce_polynomial(const BranchingRule& rule, const MultiPoly& p) {
  if (p.arity() != rule.parent.rank())
    throw std::invalid_argument("reduce_polynomial: arity mismatch");
  Reduction red;
  red.image = p.compose(substitution_map(rule));

  // Greedy elimination against the child's orbit-polynomial basis, largest
  // monomial first under the blockwise level order. Every exponent vector is
  // itself a valid child label, so the elimination runs to a zero remainder;
  // the basis is triangular with unit leading coefficients.
  BlockLevelOrder order = block_level_order(rule.child);
  MultiPoly residual = red.image;
  while (!residual.is_zero()) {
    const auto* lead = residual.leading(order);
    Weight label(lead->first.begin(), lead->first.end());
    Rat coeff = lead->second;
    residual -= child_orbit_poly(rule.child, label) * coeff;
    red.decomposition.terms[label] = coeff;
  }
  red.decomposition.remainder = residual;
  return red;
}

} // namespace liepoly
