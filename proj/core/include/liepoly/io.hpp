#ifndef LIEPOLY_IO_HPP
#define LIEPOLY_IO_HPP

#include <string>

#include <liepoly/branching.hpp>

namespace liepoly {
namespace io {

// { "group": ..., "family": "C"|"S", "label": [..],
//   "terms": [ { "exps": [..], "num": "...", "den": "..." } ] }
std::string poly_json(const GroupId& g, char family, const Weight& label,
                      const MultiPoly& p);

// Human form with terms in ascending level order, e.g.
// "24 + 8*u1 + 6*u2 - 3*u3^2 + u1*u2".
std::string poly_string(const MultiPoly& p, const LevelOrder& order,
                        const std::vector<std::string>& names = {});
std::string poly_string(const GroupId& g, const MultiPoly& p,
                        const std::vector<std::string>& names = {});

// CSV rows s_1..s_n, epsilon, x_1..x_n (alpha-check coordinates as decimals)
// and the realified u-presentation.
std::string grid_csv(const GroupId& g, long long M);

// Gram report as JSON: labels, [re, im] matrix entries, expected diagonal,
// max off-diagonal.
std::string gram_json(const GramReport& report);

// Coefficient table in the publication layout: rows are labels of one
// congruence class, columns the monomials appearing, in level order.
std::string table_csv(const GroupId& g, char family,
                      const std::vector<Weight>& labels);

// Full reduction catalog with projection matrices and substitutions.
std::string catalog_json();

// Reduction report for one polynomial.
std::string reduction_json(const BranchingRule& rule, const Weight& label,
                           const Reduction& red);

// Decomposition in T~/C notation, e.g. "T~4 + 2*T~2" or
// "C(1,1) + 3*C(0,0)".
std::string decomposition_string(const BranchingRule& rule, const Decomposition& dec);

std::string weight_string(const Weight& w);

} // namespace io
} // namespace liepoly

#endif
