#include <liepoly/group.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace liepoly {

int rank(Simple s) {
  switch (s) {
    case Simple::A1: return 1;
    case Simple::A2: case Simple::C2: case Simple::G2: return 2;
    case Simple::A3: case Simple::B3: case Simple::C3: return 3;
  }
  throw std::logic_error("unreachable");
}

const char* name(Simple s) {
  switch (s) {
    case Simple::A1: return "A1";
    case Simple::A2: return "A2";
    case Simple::C2: return "C2";
    case Simple::G2: return "G2";
    case Simple::A3: return "A3";
    case Simple::B3: return "B3";
    case Simple::C3: return "C3";
  }
  throw std::logic_error("unreachable");
}

GroupId GroupId::parse(const std::string& text) {
  std::vector<Simple> factors;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw std::invalid_argument("empty group factor in '" + text + "'");
    static const std::map<std::string, Simple> table = {
        {"A1", Simple::A1}, {"A2", Simple::A2}, {"C2", Simple::C2},
        {"G2", Simple::G2}, {"A3", Simple::A3}, {"B3", Simple::B3},
        {"C3", Simple::C3}};
    auto it = table.find(token);
    if (it == table.end())
      throw std::invalid_argument("unsupported group factor '" + token + "'");
    factors.push_back(it->second);
    token.clear();
  };
  for (char c : text) {
    char u = (char)std::toupper((unsigned char)c);
    if (u == 'X') {
      flush();
    } else if (!std::isspace((unsigned char)u)) {
      token.push_back(u);
    }
  }
  flush();
  return GroupId(std::move(factors));
}

Simple GroupId::simple() const {
  if (!is_simple()) throw std::invalid_argument("group " + str() + " is not simple");
  return factors_[0];
}

int GroupId::rank() const {
  int n = 0;
  for (Simple s : factors_) n += liepoly::rank(s);
  return n;
}

std::string GroupId::str() const {
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += name(factors_[i]);
  }
  return out;
}

std::pair<int, int> GroupId::block(int f) const {
  int begin = 0;
  for (int i = 0; i < f; ++i) begin += liepoly::rank(factors_[i]);
  return {begin, begin + liepoly::rank(factors_[f])};
}

namespace {

struct SimpleData {
  IntMat cartan;
  IntVec marks;
  IntVec dual_marks;
  long long coxeter;
  long long weyl_order;
  RatVec lengths_sq;
};

// Cartan rows follow alpha_j = sum_k C_jk omega_k. The G2 convention (first
// root long, C = [[2,-3],[-1,2]], marks (2,3)) is the one under which the
// rank-two reduction catalog closes: the orbit of omega_1 projects onto the
// A2 orbit of (1,1) under Pr = [[1,0],[1,1]] and onto {+-10,+-8,+-2} under
// Pr = (10 6), with orbit sizes 12/6/6.
const SimpleData& simple_data(Simple s) {
  static const std::map<Simple, SimpleData> table = {
      {Simple::A1, {{{2}}, {1}, {1}, 2, 2, {Rat(2)}}},
      {Simple::A2, {{{2, -1}, {-1, 2}}, {1, 1}, {1, 1}, 3, 6, {Rat(2), Rat(2)}}},
      {Simple::C2, {{{2, -1}, {-2, 2}}, {2, 1}, {1, 2}, 4, 8, {Rat(1), Rat(2)}}},
      {Simple::G2, {{{2, -3}, {-1, 2}}, {2, 3}, {3, 2}, 6, 12, {Rat(2), Rat(2, 3)}}},
      {Simple::A3, {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {1, 1, 1}, 4, 24,
                    {Rat(2), Rat(2), Rat(2)}}},
      {Simple::B3, {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {1, 2, 2}, {2, 2, 1}, 6, 48,
                    {Rat(2), Rat(2), Rat(1)}}},
      {Simple::C3, {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1}, {1, 2, 2}, 6, 48,
                    {Rat(1), Rat(1), Rat(2)}}},
  };
  return table.at(s);
}

RatMat invert(const IntMat& m) {
  int n = (int)m.size();
  RatMat a(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto& v : a[col]) v /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatMat inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

long long det_int(const IntMat& m) {
  RatMat a((int)m.size(), RatVec((int)m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) a[i][j] = Rat(m[i][j]);
  Rat det(1);
  int n = (int)m.size();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
    det *= a[col][col];
    Rat d = a[col][col];
    for (int c = col; c < n; ++c) a[col][c] /= d;
    for (int r = col + 1; r < n; ++r) {
      Rat f = a[r][col];
      if (f.is_zero()) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (!det.is_integer()) throw std::logic_error("non-integer determinant");
  return det.num();
}

GroupData build(const GroupId& g) {
  GroupData d;
  d.group = g;
  int n = g.rank();
  d.cartan.assign(n, IntVec(n, 0));
  int off = 0;
  d.coxeter_number = 0;
  d.weyl_order = 1;
  for (Simple s : g.factors()) {
    const SimpleData& sd = simple_data(s);
    int r = rank(s);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) d.cartan[off + i][off + j] = sd.cartan[i][j];
    for (int i = 0; i < r; ++i) {
      d.marks.push_back(sd.marks[i]);
      d.dual_marks.push_back(sd.dual_marks[i]);
      d.fundamental_vertex_scalings.push_back(Rat(1, sd.marks[i]));
    }
    d.coxeter_number = std::max(d.coxeter_number, sd.coxeter);
    d.weyl_order *= sd.weyl_order;
    off += r;
  }
  d.cartan_inverse = invert(d.cartan);
  d.cartan_det = det_int(d.cartan);
  // Level vector: a_j = 2 * sum_k (C^-1)_jk. Reproduces the published values
  // (2,2), (3,4), (3,4,3), (6,10,6), (5,8,9) and extends them to A1 -> (1)
  // and G2 -> (10,6).
  d.level_vector.resize(n);
  for (int j = 0; j < n; ++j) {
    Rat sum(0);
    for (int k = 0; k < n; ++k) sum += d.cartan_inverse[j][k];
    Rat a = Rat(2) * sum;
    if (!a.is_integer()) throw std::logic_error("non-integer level vector entry");
    d.level_vector[j] = a.num();
  }
  return d;
}

} // namespace

const GroupData& group_data(const GroupId& g) {
  static std::map<std::string, GroupData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.str());
  if (it == cache.end()) it = cache.emplace(g.str(), build(g)).first;
  return it->second;
}

RatVec root_lengths_sq(const GroupId& g) {
  RatVec out;
  for (Simple s : g.factors()) {
    const RatVec& l = simple_data(s).lengths_sq;
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

} // namespace liepoly
