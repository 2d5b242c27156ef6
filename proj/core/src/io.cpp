#include <liepoly/io.hpp>

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace liepoly {
namespace io {

using nlohmann::json;

std::string weight_string(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

std::string poly_json(const GroupId& g, char family, const Weight& label,
                      const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exps"] = m;
    t["num"] = std::to_string(c.num());
    t["den"] = std::to_string(c.den());
    terms.push_back(t);
  }
  json out;
  out["group"] = g.str();
  out["family"] = std::string(1, family);
  out["label"] = label;
  out["terms"] = terms;
  return out.dump();
}

namespace {

std::string term_string(const Monomial& m, Rat a, bool leading,
                        const std::vector<std::string>& names) {
  std::ostringstream os;
  auto var = [&](int i) {
    if (i < (int)names.size()) return names[i];
    return "u" + std::to_string(i + 1);
  };
  if (leading) {
    if (a < Rat(0)) { os << "-"; a = -a; }
  } else {
    os << (a < Rat(0) ? " - " : " + ");
    if (a < Rat(0)) a = -a;
  }
  bool has_vars = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
  bool star = false;
  if (!has_vars || a != Rat(1)) { os << a.str(); star = true; }
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (star) os << "*";
    os << var((int)i);
    if (m[i] > 1) os << "^" << m[i];
    star = true;
  }
  return os.str();
}

} // namespace

std::string poly_string(const MultiPoly& p, const LevelOrder& order,
                        const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rat>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return order.less(a->first, b->first); });
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i)
    out += term_string(terms[i]->first, terms[i]->second, i == 0, names);
  return out;
}

std::string poly_string(const GroupId& g, const MultiPoly& p,
                        const std::vector<std::string>& names) {
  return poly_string(p, level_order(g), names);
}

std::string grid_csv(const GroupId& g, long long M) {
  int n = g.rank();
  std::ostringstream os;
  for (int i = 0; i < n; ++i) os << "s" << i + 1 << ",";
  os << "epsilon";
  for (int i = 0; i < n; ++i) os << ",x" << i + 1;
  for (int i = 0; i < n; ++i) os << ",u" << i + 1;
  os << "\n";
  os << std::setprecision(15);
  for (const GridPoint& p : grid({g, M})) {
    for (int i = 0; i < n; ++i) os << p.s[i] << ",";
    os << p.epsilon;
    EvalPoint x = EvalPoint::from_grid(g, p.s, M);
    for (int i = 0; i < n; ++i) os << "," << x.x[i];
    std::vector<double> u = present_u(g, map_point_to_u(g, x));
    for (double v : u) os << "," << v;
    os << "\n";
  }
  return os.str();
}

std::string gram_json(const GramReport& rep) {
  json out;
  out["group"] = rep.group.str();
  out["M"] = rep.M;
  out["family"] = std::string(1, rep.family);
  json labels = json::array();
  for (const Weight& w : rep.labels) labels.push_back(w);
  out["labels"] = labels;
  json mat = json::array();
  for (const auto& row : rep.matrix) {
    json r = json::array();
    for (const Cplx& v : row) r.push_back({v.real(), v.imag()});
    mat.push_back(r);
  }
  out["matrix"] = mat;
  out["expected_diagonal"] = rep.expected_diagonal;
  out["max_offdiag"] = rep.max_offdiag;
  out["max_diag_error"] = rep.max_diag_error;
  return out.dump();
}

std::string table_csv(const GroupId& g, char family, const std::vector<Weight>& labels) {
  LevelOrder order = level_order(g);
  // Column set: all monomials used by the requested rows, level-ordered.
  std::set<Monomial> used;
  std::vector<const MultiPoly*> polys;
  for (const Weight& w : labels) {
    const MultiPoly& p = family == 'S' ? s_polynomial(g, w) : c_polynomial(g, w);
    polys.push_back(&p);
    for (const auto& [m, c] : p.terms()) used.insert(m);
  }
  std::vector<Monomial> cols(used.begin(), used.end());
  std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
    return order.less(a, b);
  });
  std::ostringstream os;
  os << "label";
  for (const Monomial& m : cols) {
    Monomial mm = m;
    os << "," << MultiPoly::monomial(std::move(mm), Rat(1)).str();
  }
  os << "\n";
  for (size_t i = 0; i < labels.size(); ++i) {
    os << (family == 'S' ? "S(" : "C(") << weight_string(labels[i]) << ")";
    for (const Monomial& m : cols) {
      const Rat& c = polys[i]->coeff(m);
      os << ",";
      if (!c.is_zero()) os << c.str();
    }
    os << "\n";
  }
  return os.str();
}

std::string catalog_json() {
  json rules = json::array();
  for (const BranchingRule& rule : rules_catalog()) {
    json r;
    r["parent"] = rule.parent.str();
    r["child"] = rule.child.str();
    r["projection"] = rule.projection;
    json subs = json::array();
    const auto& fs = substitution_map(rule);
    for (size_t i = 0; i < fs.size(); ++i) {
      Weight omega(rule.parent.rank(), 0);
      omega[i] = 1;
      subs.push_back(json::parse(poly_json(rule.child, 'C', omega, fs[i])));
    }
    r["substitutions"] = subs;
    rules.push_back(r);
  }
  return json{{"rules", rules}}.dump();
}

namespace {

std::string child_basis_name(const BranchingRule& rule, const Weight& label) {
  // A1 factors print as T~m, larger factors as C(a,b).
  const GroupId& child = rule.child;
  std::string out;
  for (size_t f = 0; f < child.factors().size(); ++f) {
    auto [b, e] = child.block((int)f);
    Weight part(label.begin() + b, label.begin() + e);
    bool all_zero = std::all_of(part.begin(), part.end(), [](long long v) { return v == 0; });
    std::string piece;
    if (child.factors()[f] == Simple::A1) {
      if (all_zero) continue;
      piece = "T~" + std::to_string(part[0]);
      if (child.factors().size() > 1) piece += "(Y" + std::to_string(b + 1) + ")";
    } else {
      if (all_zero) continue;
      piece = "C(" + weight_string(part) + ")";
    }
    if (!out.empty()) out += "*";
    out += piece;
  }
  return out.empty() ? "1" : out;
}

} // namespace

std::string decomposition_string(const BranchingRule& rule, const Decomposition& dec) {
  if (dec.terms.empty()) return "0";
  // Descending blockwise level order reads like the published expansions.
  BlockLevelOrder order = block_level_order(rule.child);
  std::vector<std::pair<Weight, Rat>> terms(dec.terms.begin(), dec.terms.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    Monomial ma(a.first.begin(), a.first.end());
    Monomial mb(b.first.begin(), b.first.end());
    return order.less(mb, ma);
  });
  std::string out;
  bool first = true;
  for (const auto& [label, coeff] : terms) {
    Rat a = coeff;
    if (first) {
      if (a < Rat(0)) { out += "-"; a = -a; }
    } else {
      out += (a < Rat(0)) ? " - " : " + ";
      if (a < Rat(0)) a = -a;
    }
    std::string base = child_basis_name(rule, {label.begin(), label.end()});
    if (a != Rat(1) || base == "1") {
      out += a.str();
      if (base != "1") out += "*" + base;
    } else {
      out += base;
    }
    first = false;
  }
  return out;
}

std::string reduction_json(const BranchingRule& rule, const Weight& label,
                           const Reduction& red) {
  json out;
  out["rule"] = rule.name();
  out["label"] = label;
  out["image"] = json::parse(poly_json(rule.child, 'C', label, red.image));
  json terms = json::array();
  for (const auto& [w, c] : red.decomposition.terms) {
    json t;
    t["child_label"] = w;
    t["num"] = std::to_string(c.num());
    t["den"] = std::to_string(c.den());
    terms.push_back(t);
  }
  out["decomposition"] = terms;
  out["remainder_zero"] = red.decomposition.remainder.is_zero();
  out["pretty"] = decomposition_string(rule, red.decomposition);
  return out.dump();
}

} // namespace io
} // namespace liepoly
