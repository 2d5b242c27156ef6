#include <liepoly/families.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace liepoly {

LevelOrder level_order(const GroupId& g) {
  return LevelOrder{group_data(g).level_vector};
}

BlockLevelOrder block_level_order(const GroupId& g) {
  BlockLevelOrder order;
  const GroupData& gd = group_data(g);
  for (size_t f = 0; f < g.factors().size(); ++f) {
    auto [b, e] = g.block((int)f);
    order.blocks.push_back(
        LevelOrder{{gd.level_vector.begin() + b, gd.level_vector.begin() + e}});
    order.ranges.emplace_back(b, e);
  }
  return order;
}

std::map<Weight, long long> orbit_product(const GroupId& g, const Weight& lambda,
                                          const Weight& mu) {
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw std::invalid_argument("orbit_product: weights must be dominant");
  const WeylOrbit& oa = weyl_orbit(g, lambda);
  const WeylOrbit& ob = weyl_orbit(g, mu);
  int n = g.rank();
  std::map<Weight, long long> out;
  Weight sum(n);
  for (const OrbitPoint& a : oa.points) {
    for (const OrbitPoint& b : ob.points) {
      bool dom = true;
      for (int i = 0; i < n; ++i) {
        sum[i] = a.weight[i] + b.weight[i];
        if (sum[i] < 0) dom = false;
      }
      if (dom) ++out[sum];
    }
  }
  return out;
}

namespace {

struct FamilyCache {
  std::map<std::pair<std::string, Weight>, MultiPoly> entries;
  std::mutex mu;
};

FamilyCache& c_cache() { static FamilyCache c; return c; }
FamilyCache& s_cache() { static FamilyCache c; return c; }

Weight fundamental(int n, int j) {
  Weight w(n, 0);
  w[j] = 1;
  return w;
}

// C-family induction for a simple group.
MultiPoly build_c_simple(const GroupId& g, const Weight& lambda);

const MultiPoly& c_simple(const GroupId& g, const Weight& lambda) {
  auto key = std::make_pair(g.str(), lambda);
  {
    std::lock_guard<std::mutex> lock(c_cache().mu);
    auto it = c_cache().entries.find(key);
    if (it != c_cache().entries.end()) return it->second;
  }
  MultiPoly p = build_c_simple(g, lambda);
  std::lock_guard<std::mutex> lock(c_cache().mu);
  return c_cache().entries.emplace(key, std::move(p)).first->second;
}

MultiPoly build_c_simple(const GroupId& g, const Weight& lambda) {
  int n = g.rank();
  long long total = 0;
  for (long long v : lambda) total += v;
  if (total == 0) return MultiPoly::constant(n, Rat(1));
  int j = 0;
  while (lambda[j] == 0) ++j;
  if (total == 1) return MultiPoly::variable(n, j);

  Weight mu = lambda;
  --mu[j];
  std::map<Weight, long long> prod = orbit_product(g, fundamental(n, j), mu);
  auto top = prod.find(lambda);
  if (top == prod.end() || top->second != 1)
    throw std::logic_error("c_polynomial: top term of the product is not simple");
  MultiPoly p = MultiPoly::variable(n, j) * c_simple(g, mu);
  for (const auto& [nu, mult] : prod) {
    if (nu == lambda) continue;
    p -= c_simple(g, nu) * Rat(mult);
  }
  if (!p.has_integer_coefficients())
    throw std::logic_error("c_polynomial: non-integer coefficients");
  return p;
}

// Embed a polynomial of a factor into the concatenated variable space.
MultiPoly embed(const MultiPoly& p, int total, int offset) {
  return p.map_monomials(total, [&](const Monomial& m) {
    Monomial out(total, 0);
    for (size_t i = 0; i < m.size(); ++i) out[offset + (int)i] = m[i];
    return out;
  });
}

MultiPoly build_product(const GroupId& g, const Weight& lambda,
                        const MultiPoly& (*factor_poly)(const GroupId&, const Weight&)) {
  int n = g.rank();
  MultiPoly out = MultiPoly::constant(n, Rat(1));
  for (size_t f = 0; f < g.factors().size(); ++f) {
    auto [b, e] = g.block((int)f);
    Weight part(lambda.begin() + b, lambda.begin() + e);
    out = out * embed(factor_poly(GroupId(g.factors()[f]), part), n, b);
  }
  return out;
}

MultiPoly build_s_simple(const GroupId& g, const Weight& lambda);

const MultiPoly& s_simple(const GroupId& g, const Weight& lambda) {
  auto key = std::make_pair(g.str(), lambda);
  {
    std::lock_guard<std::mutex> lock(s_cache().mu);
    auto it = s_cache().entries.find(key);
    if (it != s_cache().entries.end()) return it->second;
  }
  MultiPoly p = build_s_simple(g, lambda);
  std::lock_guard<std::mutex> lock(s_cache().mu);
  return s_cache().entries.emplace(key, std::move(p)).first->second;
}

// Signed induction: u_j S_mu expands through the shifted orbit product
// C_{omega_j} S_{mu+rho} = sum_{nu in W_{omega_j}} S_{mu+rho+nu}, where terms
// on a wall vanish and the rest reflect back with a sign. The top term
// mu + omega_j is the unique one of maximal height.
MultiPoly build_s_simple(const GroupId& g, const Weight& lambda) {
  int n = g.rank();
  long long total = 0;
  for (long long v : lambda) total += v;
  if (total == 0) return MultiPoly::constant(n, Rat(1));
  int j = 0;
  while (lambda[j] == 0) ++j;
  Weight mu = lambda;
  --mu[j];
  Weight rho = rho_weight(g);

  MultiPoly p = MultiPoly::variable(n, j) * s_simple(g, mu);
  const WeylOrbit& orbit = weyl_orbit(g, fundamental(n, j));
  for (const OrbitPoint& op : orbit.points) {
    Weight shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = mu[i] + rho[i] + op.weight[i];
    auto rep = signed_dominant(g, shifted);
    if (!rep) continue; // wall: the S-term vanishes
    Weight label = rep->weight;
    for (int i = 0; i < n; ++i) label[i] -= rho[i];
    if (label == lambda) continue; // the term being solved for
    p -= s_simple(g, label) * Rat(rep->sign);
  }
  if (!p.has_integer_coefficients())
    throw std::logic_error("s_polynomial: non-integer coefficients");
  return p;
}

} // namespace

const MultiPoly& c_polynomial(const GroupId& g, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("c_polynomial: lambda must be dominant");
  if ((int)lambda.size() != g.rank()) throw std::invalid_argument("c_polynomial: rank mismatch");
  if (g.is_simple()) return c_simple(g, lambda);
  auto key = std::make_pair(g.str(), lambda);
  {
    std::lock_guard<std::mutex> lock(c_cache().mu);
    auto it = c_cache().entries.find(key);
    if (it != c_cache().entries.end()) return it->second;
  }
  MultiPoly p = build_product(g, lambda, &c_polynomial);
  std::lock_guard<std::mutex> lock(c_cache().mu);
  return c_cache().entries.emplace(key, std::move(p)).first->second;
}

const MultiPoly& s_polynomial(const GroupId& g, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("s_polynomial: lambda must be dominant");
  if ((int)lambda.size() != g.rank()) throw std::invalid_argument("s_polynomial: rank mismatch");
  if (g.is_simple()) return s_simple(g, lambda);
  auto key = std::make_pair(g.str(), lambda);
  {
    std::lock_guard<std::mutex> lock(s_cache().mu);
    auto it = s_cache().entries.find(key);
    if (it != s_cache().entries.end()) return it->second;
  }
  MultiPoly p = build_product(g, lambda, &s_polynomial);
  std::lock_guard<std::mutex> lock(s_cache().mu);
  return s_cache().entries.emplace(key, std::move(p)).first->second;
}

MultiplicityTable weight_multiplicities(const GroupId& g, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("weight_multiplicities: lambda must be dominant");
  const GroupData& gd = group_data(g);
  int n = g.rank();
  long long level = 0;
  for (int i = 0; i < n; ++i) level += lambda[i] * gd.dual_marks[i];
  long long M = std::max<long long>(level, 1) + 1;

  GridSpec spec{g, M};
  std::vector<GridPoint> pts = grid(spec);
  std::vector<EvalPoint> xs;
  xs.reserve(pts.size());
  for (const GridPoint& p : pts) xs.push_back(EvalPoint::from_grid(g, p.s, M));
  std::vector<Cplx> chi(pts.size());
  for (size_t p = 0; p < pts.size(); ++p) chi[p] = eval_character(g, lambda, xs[p]);

  long long Mn = 1;
  for (int k = 0; k < n; ++k) Mn *= M;

  MultiplicityTable table;
  table.seed = lambda;
  int cong = g.is_simple() ? congruence_class(g, lambda) : 0;
  for (const Weight& mu : admissible_c_labels(g, M)) {
    long long mu_level = 0;
    for (int i = 0; i < n; ++i) mu_level += mu[i] * gd.dual_marks[i];
    if (mu_level > level) continue;
    if (g.is_simple() && congruence_class(g, mu) != cong) continue;
    Cplx acc{0, 0};
    for (size_t p = 0; p < pts.size(); ++p)
      acc += (double)pts[p].epsilon * chi[p] * std::conj(eval_C(g, mu, xs[p]));
    double denom = (double)(gd.cartan_det * weyl_orbit(g, mu).size() * Mn);
    Cplx value = acc / denom;
    long long m = (long long)std::llround(value.real());
    if (std::abs(value - Cplx((double)m, 0)) > 1e-6)
      throw std::runtime_error("weight_multiplicities: projection residual too large");
    if (m < 0) throw std::runtime_error("weight_multiplicities: negative multiplicity");
    if (m != 0) table.entries[mu] = m;
  }
  if (table.entries.find(lambda) == table.entries.end() || table.entries[lambda] != 1)
    throw std::runtime_error("weight_multiplicities: top multiplicity is not 1");
  return table;
}

MultiPoly chebyshev_T(int m) {
  if (m < 0) throw std::invalid_argument("chebyshev_T: negative index");
  MultiPoly prev = MultiPoly::constant(1, Rat(1));
  if (m == 0) return prev;
  MultiPoly cur = MultiPoly::variable(1, 0);
  MultiPoly two_x = MultiPoly::variable(1, 0) * Rat(2);
  for (int k = 1; k < m; ++k) {
    MultiPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPoly chebyshev_T_tilde(int m) {
  if (m < 0) throw std::invalid_argument("chebyshev_T_tilde: negative index");
  // 2 T_m(y/2); the recurrence is the monic one, with T~_2 = y^2 - 2.
  MultiPoly y = MultiPoly::variable(1, 0);
  if (m == 0) return MultiPoly::constant(1, Rat(1));
  if (m == 1) return y;
  MultiPoly prev = y;                                    // T~_1
  MultiPoly cur = y * y - MultiPoly::constant(1, Rat(2)); // T~_2
  for (int k = 2; k < m; ++k) {
    MultiPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPoly chebyshev_U_tilde(int m) {
  if (m < 0) throw std::invalid_argument("chebyshev_U_tilde: negative index");
  MultiPoly y = MultiPoly::variable(1, 0);
  MultiPoly prev = MultiPoly::constant(1, Rat(1));
  if (m == 0) return prev;
  MultiPoly cur = y;
  for (int k = 1; k < m; ++k) {
    MultiPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Cplx> map_point_to_u(const GroupId& g, const EvalPoint& x) {
  int n = g.rank();
  std::vector<Cplx> u(n);
  for (int j = 0; j < n; ++j) u[j] = eval_C(g, fundamental(n, j), x);
  return u;
}

std::vector<double> present_u(const GroupId& g, const std::vector<Cplx>& u) {
  if (g.is_simple() && g.simple() == Simple::A2)
    return {u[0].real(), u[0].imag()};
  if (g.is_simple() && g.simple() == Simple::A3)
    return {u[0].real(), u[1].real(), u[0].imag()};
  std::vector<double> out;
  out.reserve(u.size());
  for (const Cplx& v : u) out.push_back(v.real());
  return out;
}

DomainVertexSet domain_vertices(const GroupId& g) {
  static const char* supported[] = {"A1", "A2", "C2", "G2", "A3", "B3", "C3"};
  bool ok = false;
  for (const char* s : supported) ok = ok || g.str() == s;
  if (!ok) throw std::invalid_argument("domain_vertices: unsupported group " + g.str());
  const GroupData& gd = group_data(g);
  int n = g.rank();
  DomainVertexSet set;
  set.group = g;
  for (int v = 0; v <= n; ++v) {
    RatVec t(n, Rat(0));
    if (v > 0) t[v - 1] = gd.fundamental_vertex_scalings[v - 1];
    set.t_coords.push_back(t);
    EvalPoint x = EvalPoint::from_rationals(omega_check_to_alpha_check(g, t));
    std::vector<Cplx> u = map_point_to_u(g, x);
    set.presented.push_back(present_u(g, u));
    set.u.push_back(std::move(u));
  }
  return set;
}

const MultiPoly& weight_poly_S(const GroupId& g) {
  static std::map<std::string, MultiPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.str());
  if (it != cache.end()) return it->second;

  // S_rho^2 expanded over C-functions: the coefficient of C_delta is the
  // signed count of orbit pairs summing to delta itself.
  Weight rho = rho_weight(g);
  const WeylOrbit& orbit = weyl_orbit(g, rho);
  int n = g.rank();
  std::map<Weight, long long> coeffs;
  Weight sum(n);
  for (const OrbitPoint& a : orbit.points) {
    for (const OrbitPoint& b : orbit.points) {
      bool dom = true;
      for (int i = 0; i < n; ++i) {
        sum[i] = a.weight[i] + b.weight[i];
        if (sum[i] < 0) dom = false;
      }
      if (dom) coeffs[sum] += (long long)a.parity * b.parity;
    }
  }
  MultiPoly p(n);
  for (const auto& [delta, c] : coeffs)
    if (c != 0) p += c_polynomial(g, delta) * Rat(c);
  return cache.emplace(g.str(), std::move(p)).first->second;
}

} // namespace liepoly
