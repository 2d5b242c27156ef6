#include <liepoly/discretization.hpp>

#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace liepoly {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Enumerate s >= lo with the marks constraint sum s_i m_i <= bound applied
// per simple factor, in lexicographic order.
void enumerate(const GroupId& g, long long bound, long long lo,
               std::vector<GridPoint>& out) {
  if (bound < 0) return;
  const GroupData& gd = group_data(g);
  int n = g.rank();
  int nf = (int)g.factors().size();
  std::vector<long long> s(n, lo);
  std::function<void(int, int, long long)> rec = [&](int f, int i, long long used) {
    if (f == nf) {
      out.push_back({s, 1});
      return;
    }
    auto [b, e] = g.block(f);
    if (i == e) {
      rec(f + 1, f + 1 < nf ? g.block(f + 1).first : 0, 0);
      return;
    }
    for (long long v = lo; used + v * gd.marks[i] <= bound; ++v) {
      s[i] = v;
      rec(f, i + 1, used + v * gd.marks[i]);
    }
  };
  rec(0, 0, 0);
}

} // namespace

std::vector<GridPoint> grid(const GridSpec& spec) {
  if (spec.M < 0) throw std::invalid_argument("grid: M must be nonnegative");
  std::vector<GridPoint> pts;
  enumerate(spec.group, spec.M, 0, pts);
  for (GridPoint& p : pts) p.epsilon = epsilon_weight(spec.group, spec.M, p.s);
  return pts;
}

std::vector<GridPoint> interior_grid(const GridSpec& spec) {
  std::vector<GridPoint> pts;
  if (spec.M >= 1) enumerate(spec.group, spec.M - 1, 1, pts);
  for (GridPoint& p : pts) p.epsilon = epsilon_weight(spec.group, spec.M, p.s);
  return pts;
}

namespace {

long long simple_cardinality(Simple s, long long M) {
  switch (s) {
    case Simple::A1: return M + 1;
    case Simple::A2: return binom(M + 2, 2);
    case Simple::A3: return binom(M + 3, 3);
    case Simple::C2:
    case Simple::B3:
    case Simple::C3: {
      int n = rank(s);
      long long k = M / 2;
      if (M % 2 == 0) return binom(n + k, n) + binom(n + k - 1, n);
      return 2 * binom(n + k, n);
    }
    case Simple::G2: {
      // No closed form is used: count 2 s1 + 3 s2 <= M directly.
      long long cnt = 0;
      for (long long s2 = 0; 3 * s2 <= M; ++s2) cnt += (M - 3 * s2) / 2 + 1;
      return cnt;
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

long long grid_cardinality(const GroupId& g, long long M) {
  long long prod = 1;
  for (Simple s : g.factors()) prod *= simple_cardinality(s, M);
  return prod;
}

long long interior_grid_cardinality(const GroupId& g, long long M) {
  long long prod = 1;
  for (Simple s : g.factors()) {
    long long h = group_data(GroupId(s)).coxeter_number;
    if (M < h) return 0;
    prod *= (M == h) ? 1 : simple_cardinality(s, M - h);
  }
  return prod;
}

namespace {

// Column-style Hermite reduction of the lattice spanned by the columns of a:
// returns a lower-triangular basis with positive diagonal.
IntMat lattice_basis(IntMat a) {
  int n = (int)a.size();
  for (int row = 0; row < n; ++row) {
    // Euclidean elimination across columns row..n-1 on this row.
    for (;;) {
      int nz = -1;
      for (int c = row; c < n; ++c)
        if (a[row][c] != 0 && (nz == -1 || std::llabs(a[row][c]) < std::llabs(a[row][nz])))
          nz = c;
      if (nz == -1) throw std::logic_error("lattice_basis: rank deficiency");
      bool done = true;
      for (int c = row; c < n; ++c) {
        if (c == nz || a[row][c] == 0) continue;
        long long q = a[row][c] / a[row][nz];
        for (int r = 0; r < n; ++r) a[r][c] -= q * a[r][nz];
        if (a[row][c] != 0) done = false;
      }
      if (done) {
        if (nz != row)
          for (int r = 0; r < n; ++r) std::swap(a[r][nz], a[r][row]);
        if (a[row][row] < 0)
          for (int r = 0; r < n; ++r) a[r][row] = -a[r][row];
        break;
      }
    }
  }
  return a;
}

struct TorusReducer {
  IntMat basis; // lower triangular, positive diagonal
  explicit TorusReducer(const GroupId& g, long long M) {
    const GroupData& gd = group_data(g);
    int n = g.rank();
    IntMat a(n, IntVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = M * gd.cartan[i][j]; // column j = M * alpha-check_j
    basis = lattice_basis(a);
  }
  void reduce(std::vector<long long>& v) const {
    int n = (int)v.size();
    for (int i = 0; i < n; ++i) {
      long long q = v[i] / basis[i][i];
      if (v[i] % basis[i][i] < 0) --q;
      if (q != 0)
        for (int r = i; r < n; ++r) v[r] -= q * basis[r][i];
    }
  }
};

} // namespace

long long epsilon_weight(const GroupId& g, long long M, const std::vector<long long>& s) {
  const GroupData& gd = group_data(g);
  int n = g.rank();
  if ((int)s.size() != n) throw std::invalid_argument("epsilon_weight: rank mismatch");
  for (size_t f = 0; f < g.factors().size(); ++f) {
    auto [b, e] = g.block((int)f);
    long long used = 0;
    for (int i = b; i < e; ++i) {
      if (s[i] < 0) throw std::invalid_argument("epsilon_weight: point outside F_M");
      used += s[i] * gd.marks[i];
    }
    if (used > M) throw std::invalid_argument("epsilon_weight: point outside F_M");
  }
  if (M == 0) return 1; // degenerate torus: only the origin
  TorusReducer torus(g, M);
  std::vector<long long> start = s;
  torus.reduce(start);
  std::set<std::vector<long long>> seen{start};
  std::deque<std::vector<long long>> queue{start};
  while (!queue.empty()) {
    std::vector<long long> t = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      std::vector<long long> r = t;
      long long tj = t[j];
      for (int k = 0; k < n; ++k) r[k] -= tj * gd.cartan[k][j];
      torus.reduce(r);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return (long long)seen.size();
}

namespace {

void enumerate_labels(const GroupId& g, long long bound, long long lo,
                      std::vector<Weight>& out) {
  const GroupData& gd = group_data(g);
  int n = g.rank();
  Weight w(n, lo);
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == n) { out.push_back(w); return; }
    for (long long v = lo;; ++v) {
      long long cost = used + v * gd.dual_marks[i];
      if (cost > bound) break;
      w[i] = v;
      rec(i + 1, cost);
    }
  };
  rec(0, 0);
}

} // namespace

std::vector<Weight> admissible_c_labels(const GroupId& g, long long M) {
  // Strictly inside the level-M dual alcove: labels sitting on the affine
  // face <lambda, dual marks> = M have enlarged affine stabilizers, their
  // restrictions to the grid fold, and the |W_lambda| diagonal formula picks
  // up an extra factor. They are excluded rather than special-cased.
  std::vector<Weight> out;
  enumerate_labels(g, M - 1, 0, out);
  return out;
}

std::vector<Weight> admissible_s_labels(const GroupId& g, long long M) {
  std::vector<Weight> out;
  if (M >= 1) enumerate_labels(g, M - 1, 1, out);
  return out;
}

bool is_admissible_c(const GroupId& g, long long M, const Weight& w) {
  const GroupData& gd = group_data(g);
  long long acc = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    acc += w[i] * gd.dual_marks[i];
  }
  return acc <= M - 1;
}

bool is_admissible_s(const GroupId& g, long long M, const Weight& w) {
  const GroupData& gd = group_data(g);
  long long acc = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1) return false;
    acc += w[i] * gd.dual_marks[i];
  }
  return acc <= M - 1;
}

namespace {

GramReport gram_common(const GroupId& g, long long M, const std::vector<Weight>& labels,
                       bool s_family) {
  const GroupData& gd = group_data(g);
  for (const Weight& w : labels) {
    bool ok = s_family ? is_admissible_s(g, M, w) : is_admissible_c(g, M, w);
    if (!ok)
      throw std::invalid_argument("gram: label outside the level-" + std::to_string(M) +
                                  " admissible window");
  }
  GridSpec spec{g, M};
  std::vector<GridPoint> pts = s_family ? interior_grid(spec) : grid(spec);
  size_t L = labels.size(), P = pts.size();

  // Value table, one row per grid point.
  std::vector<std::vector<Cplx>> val(P, std::vector<Cplx>(L));
  for (size_t p = 0; p < P; ++p) {
    EvalPoint x = EvalPoint::from_grid(g, pts[p].s, M);
    for (size_t l = 0; l < L; ++l)
      val[p][l] = s_family ? eval_S(g, labels[l], x) : eval_C(g, labels[l], x);
  }

  GramReport rep;
  rep.group = g;
  rep.M = M;
  rep.family = s_family ? 'S' : 'C';
  rep.labels = labels;
  rep.matrix.assign(L, std::vector<Cplx>(L, Cplx{0, 0}));
  long long Mn = 1;
  for (int k = 0; k < g.rank(); ++k) Mn *= M;
  for (size_t i = 0; i < L; ++i) {
    for (size_t j = 0; j < L; ++j) {
      Cplx acc{0, 0};
      for (size_t p = 0; p < P; ++p) {
        double w = s_family ? (double)gd.weyl_order : (double)pts[p].epsilon;
        acc += w * val[p][i] * std::conj(val[p][j]);
      }
      rep.matrix[i][j] = acc;
    }
    long long expect = s_family
                           ? gd.cartan_det * gd.weyl_order
                           : gd.cartan_det * weyl_orbit(g, labels[i]).size();
    rep.expected_diagonal.push_back(expect * Mn);
  }
  for (size_t i = 0; i < L; ++i) {
    double di = rep.matrix[i][i].real();
    rep.max_diag_error =
        std::max(rep.max_diag_error,
                 std::abs(rep.matrix[i][i] - Cplx((double)rep.expected_diagonal[i], 0)) /
                     std::abs((double)rep.expected_diagonal[i]));
    for (size_t j = 0; j < L; ++j) {
      if (i == j) continue;
      double dj = rep.matrix[j][j].real();
      double denom = std::sqrt(std::abs(di) * std::abs(dj));
      if (denom > 0)
        rep.max_offdiag = std::max(rep.max_offdiag, std::abs(rep.matrix[i][j]) / denom);
    }
  }
  return rep;
}

} // namespace

GramReport gram_C(const GroupId& g, long long M, const std::vector<Weight>& labels) {
  for (const Weight& w : labels)
    if (!is_dominant(w)) throw std::invalid_argument("gram_C: labels must be dominant");
  return gram_common(g, M, labels, false);
}

GramReport gram_S(const GroupId& g, long long M, const std::vector<Weight>& labels) {
  for (const Weight& w : labels)
    if (!is_strictly_dominant(w))
      throw std::invalid_argument("gram_S: labels must be strictly dominant");
  return gram_common(g, M, labels, true);
}

} // namespace liepoly
