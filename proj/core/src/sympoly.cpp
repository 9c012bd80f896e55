#include "lgr/sympoly.hpp"

#include <stdexcept>

namespace lgr {

namespace {

int monomial_weight(const std::vector<int>& e) {
  int w = 0;
  for (size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
  return w;
}

}  // namespace

SymPoly SymPoly::constant(int m, const Rat& c) {
  SymPoly p(m);
  p.add_term(std::vector<int>(m, 0), c);
  return p;
}

SymPoly SymPoly::var(int m, int k) {
  if (k < 1 || k > m) throw std::invalid_argument("SymPoly::var: k out of range");
  SymPoly p(m);
  std::vector<int> e(m, 0);
  e[k - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void SymPoly::add_term(const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != m_)
    throw std::invalid_argument("SymPoly::add_term: exponent length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat SymPoly::coeff(const std::vector<int>& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymPoly::require_same_vars(const SymPoly& o) const {
  if (m_ != o.m_)
    throw std::invalid_argument("SymPoly: variable counts differ");
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  require_same_vars(o);
  SymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  require_same_vars(o);
  SymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SymPoly SymPoly::operator-() const {
  SymPoly r(m_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SymPoly SymPoly::operator*(const Rat& c) const {
  SymPoly r(m_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const { return mul_trunc(o, -1); }

SymPoly SymPoly::mul_trunc(const SymPoly& o, int bound) const {
  require_same_vars(o);
  SymPoly r(m_);
  std::vector<int> e(m_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < m_; ++i) e[i] = ea[i] + eb[i];
      if (bound >= 0 && monomial_weight(e) > bound) continue;
      r.add_term(e, ca * cb);
    }
  return r;
}

SymPoly SymPoly::truncate_weight(int bound) const {
  SymPoly r(m_);
  for (const auto& [e, c] : terms_)
    if (monomial_weight(e) <= bound) r.terms_.emplace(e, c);
  return r;
}

int SymPoly::weighted_degree() const {
  int w = -1;
  for (const auto& [e, c] : terms_) w = std::max(w, monomial_weight(e));
  return w;
}

Rat SymPoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != m_)
    throw std::invalid_argument("SymPoly::eval: point length mismatch");
  /* Power cache: pw[i] holds point[i]^0..point[i]^max needed so repeated
   * monomials cost one lookup per variable. */
  std::vector<std::vector<Rat>> pw(m_, std::vector<Rat>{Rat(1)});
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < m_; ++i) {
      if (e[i] == 0) continue;
      auto& p = pw[i];
      while (static_cast<int>(p.size()) <= e[i]) p.push_back(p.back() * point[i]);
      v *= p[e[i]];
    }
    total += v;
  }
  return total;
}

SymPoly SymPoly::derivative(int k) const {
  if (k < 1 || k > m_)
    throw std::invalid_argument("SymPoly::derivative: k out of range");
  SymPoly r(m_);
  for (const auto& [e, c] : terms_) {
    if (e[k - 1] == 0) continue;
    std::vector<int> d = e;
    d[k - 1] -= 1;
    r.add_term(d, c * e[k - 1]);
  }
  return r;
}

SymPoly SymPoly::widen(int new_m) const {
  if (new_m < m_) throw std::invalid_argument("SymPoly::widen: shrinking");
  SymPoly r(new_m);
  for (const auto& [e, c] : terms_) {
    std::vector<int> w(new_m, 0);
    std::copy(e.begin(), e.end(), w.begin());
    r.terms_.emplace(std::move(w), c);
  }
  return r;
}

Rat poly_eval(const SymPoly& p, const std::vector<Rat>& point) {
  return p.eval(point);
}

}  // namespace lgr
