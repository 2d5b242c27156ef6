#include <liepoly/orbit.hpp>

#include <deque>
#include <mutex>
#include <stdexcept>

namespace liepoly {

bool is_dominant(const Weight& w) {
  for (long long c : w)
    if (c < 0) return false;
  return true;
}

bool is_strictly_dominant(const Weight& w) {
  for (long long c : w)
    if (c <= 0) return false;
  return true;
}

Weight rho_weight(const GroupId& g) { return Weight(g.rank(), 1); }

Weight reflect(const GroupId& g, int j, const Weight& lambda) {
  const GroupData& gd = group_data(g);
  int n = g.rank();
  if (j < 0 || j >= n) throw std::out_of_range("reflect: axis index");
  if ((int)lambda.size() != n) throw std::invalid_argument("reflect: rank mismatch");
  Weight out = lambda;
  long long lj = lambda[j];
  for (int k = 0; k < n; ++k) out[k] -= lj * gd.cartan[j][k];
  return out;
}

namespace {

WeylOrbit compute_orbit(const GroupId& g, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("weyl_orbit: seed must be dominant");
  const GroupData& gd = group_data(g);
  int n = g.rank();
  std::map<Weight, int> depth;
  std::deque<Weight> queue;
  depth[lambda] = 0;
  queue.push_back(lambda);
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    int d = depth[w];
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0) continue; // fixed by r_j
      Weight r = w;
      long long wj = w[j];
      for (int k = 0; k < n; ++k) r[k] -= wj * gd.cartan[j][k];
      auto it = depth.find(r);
      if (it == depth.end()) {
        depth[r] = d + 1;
        queue.push_back(r);
      } else if (((it->second ^ (d + 1)) & 1) != 0) {
        // All shortest reflection routes to the same point share parity; a
        // disagreement would make the S-functions ill-defined.
        throw std::logic_error("weyl_orbit: parity mismatch");
      }
    }
  }
  WeylOrbit orbit;
  orbit.seed = lambda;
  orbit.points.reserve(depth.size());
  orbit.points.push_back({lambda, +1});
  for (const auto& [w, d] : depth)
    if (w != lambda) orbit.points.push_back({w, (d & 1) ? -1 : +1});
  return orbit;
}

} // namespace

const WeylOrbit& weyl_orbit(const GroupId& g, const Weight& lambda) {
  static std::map<std::pair<std::string, Weight>, WeylOrbit> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g.str(), lambda);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_orbit(g, lambda)).first;
  return it->second;
}

DominantRep dominant_representative(const GroupId& g, const Weight& mu) {
  const GroupData& gd = group_data(g);
  int n = g.rank();
  Weight w = mu;
  long long count = 0;
  for (;;) {
    int j = -1;
    for (int k = 0; k < n; ++k)
      if (w[k] < 0) { j = k; break; }
    if (j < 0) break;
    long long wj = w[j];
    for (int k = 0; k < n; ++k) w[k] -= wj * gd.cartan[j][k];
    ++count;
  }
  bool wall = false;
  for (long long c : w)
    if (c == 0) wall = true;
  return {w, (count & 1) ? -1 : +1, wall};
}

std::optional<DominantRep> signed_dominant(const GroupId& g, const Weight& mu) {
  DominantRep rep = dominant_representative(g, mu);
  if (rep.on_wall) return std::nullopt;
  return rep;
}

int congruence_class(const GroupId& g, const Weight& lambda) {
  Simple s = g.simple();
  switch (s) {
    case Simple::A1: return (int)(lambda[0] % 2);
    case Simple::A2: return (int)((lambda[0] + 2 * lambda[1]) % 3);
    case Simple::A3: return (int)((lambda[0] + 2 * lambda[1] + 3 * lambda[2]) % 4);
    case Simple::C2: return (int)(lambda[0] % 2);
    case Simple::C3: return (int)((lambda[0] + lambda[2]) % 2);
    case Simple::B3: return (int)(lambda[2] % 2);
    case Simple::G2: return 0;
  }
  throw std::logic_error("unreachable");
}

RatVec omega_check_to_alpha_check(const GroupId& g, const RatVec& t) {
  const GroupData& gd = group_data(g);
  int n = g.rank();
  if ((int)t.size() != n) throw std::invalid_argument("point rank mismatch");
  RatVec x(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] += gd.cartan_inverse[i][j] * t[j];
  return x;
}

} // namespace liepoly
