#include "mdv/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "mdv/errors.hpp"

namespace mdv {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::var(std::vector<std::string> vars, int index) {
  MultiPoly p(std::move(vars));
  if (index < 0 || index >= static_cast<int>(p.vars_.size()))
    throw Error("MultiPoly::var: index out of range");
  std::vector<int> e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
  if (exps.size() != vars_.size())
    throw Error("MultiPoly::add_term: exponent arity mismatch");
  for (int e : exps)
    if (e < 0) throw Error("MultiPoly::add_term: negative exponent");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw Error("MultiPoly: variable list mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      s += "*" + vars_[i] + "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace mdv
