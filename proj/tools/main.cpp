// Command-line front end: orbit listings, fundamental-region grids, Gram
// reports, orbit polynomials, coefficient tables, subgroup reductions and
// domain vertices, with CSV/JSON output suitable for scripting and plotting.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <liepoly/io.hpp>

using namespace liepoly;
using nlohmann::json;

namespace {

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(std::stoll(tok));
  if (w.empty()) throw std::invalid_argument("empty weight '" + text + "'");
  return w;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  return v;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << payload;
  }
}

std::string fmt_complex(Cplx v) {
  std::ostringstream os;
  os.precision(15);
  os << v.real();
  if (v.imag() >= 0) os << "+" << v.imag() << "i";
  else os << "-" << -v.imag() << "i";
  return os.str();
}

// Row sets of the shipped coefficient tables, grouped by congruence class.
std::vector<std::vector<Weight>> table_blocks(const GroupId& g) {
  const std::string n = g.str();
  if (n == "A2")
    return {{{0, 0}, {1, 1}, {3, 0}, {0, 3}},
            {{0, 1}, {2, 0}, {1, 2}},
            {{1, 0}, {0, 2}, {2, 1}}};
  if (n == "C2")
    return {{{0, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {0, 3}},
            {{1, 0}, {1, 1}, {3, 0}, {1, 2}}};
  if (n == "A3")
    return {{{0, 0, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 2}, {2, 1, 0}},
            {{1, 0, 0}, {0, 1, 1}, {0, 0, 3}, {2, 0, 1}, {1, 2, 0}},
            {{0, 1, 0}, {0, 0, 2}, {2, 0, 0}, {1, 1, 1}, {0, 3, 0}},
            {{0, 0, 1}, {1, 1, 0}, {3, 0, 0}, {1, 0, 2}, {0, 2, 1}}};
  if (n == "B3")
    return {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {0, 0, 2}, {1, 1, 0},
             {1, 0, 2}, {3, 0, 0}, {0, 2, 0}, {0, 1, 2}, {2, 1, 0}},
            {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 3}, {2, 0, 1}, {1, 1, 1}}};
  if (n == "C3")
    return {{{0, 0, 0}, {0, 1, 0}, {2, 0, 0}, {1, 0, 1}, {0, 2, 0}, {2, 1, 0},
             {0, 0, 2}, {1, 1, 1}, {0, 3, 0}, {0, 1, 2}},
            {{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {3, 0, 0}, {0, 1, 1}, {2, 0, 1},
             {1, 2, 0}, {1, 0, 2}, {0, 2, 1}, {0, 0, 3}}};
  throw std::invalid_argument("no shipped table for group " + n);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit functions, orthogonal polynomials and branching rules "
               "of the simple Lie groups of rank <= 3"};
  app.require_subcommand(1);

  std::string format = "csv", out_path;
  double tolerance = 1e-8;
  long long max_degree = -1;
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--tolerance", tolerance, "relative off-diagonal bound for gram");
  app.add_option("--max-degree", max_degree, "modified-degree cutoff for table rows");

  std::string group_arg, weight_arg, family_arg = "C", rule_arg, labels_arg = "all",
              point_arg;
  long long M_arg = 1;

  auto* orbit_cmd = app.add_subcommand("orbit", "list a Weyl orbit with parities");
  orbit_cmd->fallthrough();
  orbit_cmd->add_option("group", group_arg)->required();
  orbit_cmd->add_option("weight", weight_arg)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an orbit function at a point");
  eval_cmd->fallthrough();
  eval_cmd->add_option("group", group_arg)->required();
  eval_cmd->add_option("family", family_arg, "C, S or char")->required();
  eval_cmd->add_option("weight", weight_arg)->required();
  eval_cmd->add_option("--x", point_arg, "alpha-check coordinates, comma separated")
      ->required();

  auto* grid_cmd = app.add_subcommand("grid", "fundamental-region lattice with u-images");
  grid_cmd->fallthrough();
  grid_cmd->add_option("group", group_arg)->required();
  grid_cmd->add_option("M", M_arg)->required();

  auto* gram_cmd = app.add_subcommand("gram", "discrete orthogonality report");
  gram_cmd->fallthrough();
  gram_cmd->add_option("group", group_arg)->required();
  gram_cmd->add_option("M", M_arg)->required();
  gram_cmd->add_option("family", family_arg, "C or S")->required();
  gram_cmd->add_option("labels", labels_arg, "'all' or 'k,l;k,l;...'");

  auto* poly_cmd = app.add_subcommand("poly", "orbit polynomial in the u-variables");
  poly_cmd->fallthrough();
  poly_cmd->add_option("group", group_arg)->required();
  poly_cmd->add_option("family", family_arg, "C or S")->required();
  poly_cmd->add_option("weight", weight_arg)->required();

  auto* table_cmd = app.add_subcommand("table", "coefficient table by congruence class");
  table_cmd->fallthrough();
  table_cmd->add_option("group", group_arg)->required();
  table_cmd->add_option("family", family_arg, "C or S");

  auto* branch_cmd = app.add_subcommand("branch", "reduce a polynomial to a subgroup");
  branch_cmd->fallthrough();
  branch_cmd->add_option("rule", rule_arg, "Parent:Child, e.g. A2:A1");
  branch_cmd->add_option("family", family_arg, "C or S");
  branch_cmd->add_option("weight", weight_arg);
  bool catalog_flag = false;
  branch_cmd->add_flag("--catalog", catalog_flag, "emit the full rule catalog as JSON");

  auto* domain_cmd = app.add_subcommand("domain", "vertices of the orthogonality domain");
  domain_cmd->fallthrough();
  domain_cmd->add_option("group", group_arg)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbit_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      const WeylOrbit& orbit = weyl_orbit(g, parse_weight(weight_arg));
      if (format == "json") {
        json pts = json::array();
        for (const OrbitPoint& p : orbit.points)
          pts.push_back({{"weight", p.weight}, {"parity", p.parity}});
        emit(out_path, json{{"group", g.str()},
                            {"seed", orbit.seed},
                            {"size", orbit.size()},
                            {"points", pts}}.dump());
      } else {
        std::ostringstream os;
        os << "weight,parity\n";
        for (const OrbitPoint& p : orbit.points)
          os << "\"" << io::weight_string(p.weight) << "\"," << p.parity << "\n";
        os << "# size " << orbit.size() << "\n";
        emit(out_path, os.str());
      }
    } else if (eval_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      Weight w = parse_weight(weight_arg);
      EvalPoint x = EvalPoint::from_doubles(parse_doubles(point_arg));
      Cplx v;
      if (family_arg == "C") v = eval_C(g, w, x);
      else if (family_arg == "S") v = eval_S(g, w, x);
      else if (family_arg == "char") v = eval_character(g, w, x);
      else throw std::invalid_argument("family must be C, S or char");
      emit(out_path, fmt_complex(v));
    } else if (grid_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      if (format == "json") {
        json rows = json::array();
        for (const GridPoint& p : grid({g, M_arg})) {
          EvalPoint x = EvalPoint::from_grid(g, p.s, M_arg);
          json row{{"s", p.s}, {"epsilon", p.epsilon}, {"x", x.x}};
          row["u"] = present_u(g, map_point_to_u(g, x));
          rows.push_back(row);
        }
        emit(out_path, json{{"group", g.str()}, {"M", M_arg}, {"points", rows}}.dump());
      } else {
        emit(out_path, io::grid_csv(g, M_arg));
      }
    } else if (gram_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      bool s_family = family_arg == "S";
      if (!s_family && family_arg != "C")
        throw std::invalid_argument("family must be C or S");
      std::vector<Weight> labels;
      if (labels_arg == "all") {
        labels = s_family ? admissible_s_labels(g, M_arg) : admissible_c_labels(g, M_arg);
      } else {
        std::stringstream ss(labels_arg);
        std::string tok;
        while (std::getline(ss, tok, ';')) labels.push_back(parse_weight(tok));
      }
      GramReport rep = s_family ? gram_S(g, M_arg, labels) : gram_C(g, M_arg, labels);
      emit(out_path, io::gram_json(rep));
      if (rep.max_offdiag > tolerance || rep.max_diag_error > tolerance) return 2;
    } else if (poly_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      Weight w = parse_weight(weight_arg);
      const MultiPoly& p =
          family_arg == "S" ? s_polynomial(g, w) : c_polynomial(g, w);
      if (format == "json")
        emit(out_path, io::poly_json(g, family_arg == "S" ? 'S' : 'C', w, p));
      else
        emit(out_path, io::poly_string(g, p));
    } else if (table_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      char fam = family_arg == "S" ? 'S' : 'C';
      std::vector<std::vector<Weight>> blocks;
      if (max_degree >= 0) {
        // Degree-truncated listing grouped by congruence class.
        LevelOrder order = level_order(g);
        std::map<int, std::vector<Weight>> by_class;
        std::function<void(Weight&, int)> rec = [&](Weight& w, int i) {
          if (i == g.rank()) {
            Monomial m(w.begin(), w.end());
            if (order.degree(m) <= max_degree)
              by_class[congruence_class(g, w)].push_back(w);
            return;
          }
          for (long long v = 0; v * group_data(g).level_vector[i] <= max_degree; ++v) {
            w[i] = v;
            rec(w, i + 1);
            w[i] = 0;
          }
        };
        Weight w(g.rank(), 0);
        rec(w, 0);
        for (auto& [c, ws] : by_class) {
          std::sort(ws.begin(), ws.end(), [&](const Weight& a, const Weight& b) {
            return order.less(Monomial(a.begin(), a.end()), Monomial(b.begin(), b.end()));
          });
          blocks.push_back(ws);
        }
      } else {
        blocks = table_blocks(g);
      }
      std::map<int, std::string> by_display;
      for (size_t b = 0; b < blocks.size(); ++b) {
        int cls = congruence_class(g, blocks[b][0]);
        if (g.str() == "A2" && cls != 0) cls = 3 - cls; // published A2 block labels
        by_display[cls] = io::table_csv(g, fam, blocks[b]);
      }
      std::ostringstream os;
      for (const auto& [cls, csv] : by_display)
        os << "# class " << cls << "\n" << csv;
      emit(out_path, os.str());
    } else if (branch_cmd->parsed()) {
      if (catalog_flag) {
        emit(out_path, io::catalog_json());
      } else {
        if (rule_arg.empty() || weight_arg.empty())
          throw std::invalid_argument("branch needs RULE FAMILY WEIGHT (or --catalog)");
        const BranchingRule& rule = find_rule(rule_arg);
        Weight w = parse_weight(weight_arg);
        const MultiPoly& p = family_arg == "S" ? s_polynomial(rule.parent, w)
                                               : c_polynomial(rule.parent, w);
        Reduction red = reduce_polynomial(rule, p);
        if (format == "json") {
          emit(out_path, io::reduction_json(rule, w, red));
        } else {
          std::vector<std::string> ynames;
          for (int i = 0; i < rule.child.rank(); ++i)
            ynames.push_back(rule.child.rank() == 1 ? "Y" : "Y" + std::to_string(i + 1));
          std::ostringstream os;
          os << "image: "
             << io::poly_string(red.image, LevelOrder{group_data(rule.child).level_vector},
                                ynames)
             << "\n";
          os << "decomposition: " << io::decomposition_string(rule, red.decomposition) << "\n";
          emit(out_path, os.str());
        }
      }
    } else if (domain_cmd->parsed()) {
      GroupId g = GroupId::parse(group_arg);
      DomainVertexSet dv = domain_vertices(g);
      if (format == "json") {
        json verts = json::array();
        for (size_t i = 0; i < dv.presented.size(); ++i) {
          json t = json::array();
          for (const Rat& r : dv.t_coords[i]) t.push_back(r.str());
          verts.push_back({{"t", t}, {"u", dv.presented[i]}});
        }
        emit(out_path, json{{"group", g.str()}, {"vertices", verts}}.dump());
      } else {
        std::ostringstream os;
        os.precision(15);
        os << "vertex";
        for (int i = 0; i < (int)dv.presented[0].size(); ++i) os << ",u" << i + 1;
        os << "\n";
        for (size_t i = 0; i < dv.presented.size(); ++i) {
          os << "P" << i;
          for (double v : dv.presented[i]) os << "," << v;
          os << "\n";
        }
        emit(out_path, os.str());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
