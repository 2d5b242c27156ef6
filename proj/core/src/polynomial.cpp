#include <liepoly/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace liepoly {

int BlockLevelOrder::cmp(const Monomial& m1, const Monomial& m2) const {
  for (size_t b = 0; b < blocks.size(); ++b) {
    auto [lo, hi] = ranges[b];
    Monomial s1(m1.begin() + lo, m1.begin() + hi);
    Monomial s2(m2.begin() + lo, m2.begin() + hi);
    int c = blocks[b].cmp(s1, s2);
    if (c != 0) return c;
  }
  return 0;
}

MultiPoly MultiPoly::constant(int arity, const Rat& c) {
  MultiPoly p(arity);
  p.add_term(Monomial(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index, int power) {
  MultiPoly p(arity);
  Monomial m(arity, 0);
  m[index] = power;
  p.add_term(m, Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(Monomial m, const Rat& c) {
  MultiPoly p((int)m.size());
  p.add_term(std::move(m), c);
  return p;
}

const Rat& MultiPoly::coeff(const Monomial& m) const {
  static const Rat zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  if ((int)m.size() != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (arity_ == 0 && terms_.empty()) arity_ = o.arity_;
  if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (arity_ == 0 && terms_.empty()) arity_ = o.arity_;
  if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) { terms_.clear(); return *this; }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly out(a.arity_);
  Monomial m(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.arity_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool MultiPoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
  if ((int)args.size() != arity_) throw std::invalid_argument("compose: arity mismatch");
  int out_arity = args.empty() ? 0 : args[0].arity();
  for (const MultiPoly& a : args)
    if (a.arity() != out_arity) throw std::invalid_argument("compose: argument arity mismatch");
  // Powers of each argument, memoized per variable.
  std::vector<std::vector<MultiPoly>> powers(arity_);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& tab = powers[i];
    if (tab.empty()) tab.push_back(MultiPoly::constant(out_arity, Rat(1)));
    while ((int)tab.size() <= e) tab.push_back(tab.back() * args[i]);
    return tab[e];
  };
  MultiPoly out(out_arity);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_arity, c);
    for (int i = 0; i < arity_; ++i)
      if (m[i] > 0) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::map_monomials(
    int new_arity, const std::function<Monomial(const Monomial&)>& f) const {
  MultiPoly out(new_arity);
  for (const auto& [m, c] : terms_) out.add_term(f(m), c);
  return out;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& u) const {
  if ((int)u.size() != arity_) throw std::invalid_argument("eval: arity mismatch");
  // Power tables keep repeated exponent work negligible.
  std::vector<std::vector<std::complex<double>>> powers(arity_);
  for (int i = 0; i < arity_; ++i) powers[i].push_back({1.0, 0.0});
  auto power = [&](int i, int e) {
    auto& tab = powers[i];
    while ((int)tab.size() <= e) tab.push_back(tab.back() * u[i]);
    return tab[e];
  };
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    std::complex<double> term{c.to_double(), 0.0};
    for (int i = 0; i < arity_; ++i)
      if (m[i] > 0) term *= power(i, m[i]);
    acc += term;
  }
  return acc;
}

double MultiPoly::eval_real(const std::vector<double>& u) const {
  std::vector<std::complex<double>> cu(u.begin(), u.end());
  return eval(cu).real();
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var = [&](int i) {
    if (i < (int)names.size()) return names[i];
    return "u" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < Rat(0)) { os << "-"; a = -a; }
    } else {
      os << (a < Rat(0) ? " - " : " + ");
      if (a < Rat(0)) a = -a;
    }
    bool has_vars = false;
    for (int i = 0; i < arity_; ++i)
      if (m[i] > 0) has_vars = true;
    if (!has_vars || a != Rat(1)) os << a.str();
    bool star = !has_vars || a != Rat(1);
    for (int i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      os << var(i);
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

} // namespace liepoly
