#include "mdv/poisson.hpp"

#include <algorithm>
#include <array>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/matrix.hpp"

namespace mdv {

namespace {

void accumulate(TermMap& m, const Exps& e, const Rat& c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

bool divides(const Exps& pat, const Exps& e) {
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (pat[i] > e[i]) return false;
  return true;
}

TermMap one_term(Exps e, const Rat& c) {
  TermMap t;
  if (c != 0) t.emplace(std::move(e), c);
  return t;
}

}  // namespace

PoissonPresentation::PoissonPresentation(
    std::string name, std::vector<std::string> vars, std::vector<int> degrees,
    std::map<std::pair<int, int>, TermMap> bracket,
    std::vector<RewriteRule> rules, int trunc_len)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      degrees_(std::move(degrees)),
      bracket_(std::move(bracket)),
      rules_(std::move(rules)),
      trunc_len_(trunc_len) {
  int k = var_count();
  if (k == 0) throw Error("PoissonPresentation: no generators");
  if (static_cast<int>(degrees_.size()) != k)
    throw Error("PoissonPresentation: degree list arity mismatch");
  if (trunc_len_ < 0) throw Error("PoissonPresentation: negative truncation");

  auto check_arity = [&](const Exps& e) {
    if (static_cast<int>(e.size()) != k)
      throw Error("PoissonPresentation: exponent arity mismatch");
    for (int x : e)
      if (x < 0) throw Error("PoissonPresentation: negative exponent");
  };

  for (const auto& [ij, terms] : bracket_) {
    if (ij.first < 0 || ij.second <= ij.first || ij.second >= k)
      throw Error("PoissonPresentation: bracket table keys must have i < j");
    int want = degrees_[ij.first] + degrees_[ij.second] - 1;
    for (const auto& [e, c] : terms) {
      check_arity(e);
      if (weighted_degree(e) != want)
        throw Error("PoissonPresentation: bracket entry violates the degree law");
    }
  }
  for (const RewriteRule& r : rules_) {
    check_arity(r.pattern);
    if (length(r.pattern) == 0)
      throw Error("PoissonPresentation: empty rewrite pattern");
    for (const auto& [e, c] : r.rhs) {
      check_arity(e);
      // Length preservation keeps truncation compatible with
      // rewriting; degree preservation keeps the grading defined.
      if (length(e) != length(r.pattern) ||
          weighted_degree(e) != weighted_degree(r.pattern))
        throw Error("PoissonPresentation: rule must preserve length and degree");
    }
  }
}

int PoissonPresentation::length(const Exps& e) const {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

int PoissonPresentation::weighted_degree(const Exps& e) const {
  int s = 0;
  for (int i = 0; i < var_count(); ++i) s += e[i] * degrees_[i];
  return s;
}

bool PoissonPresentation::killed(const Exps& e) const {
  return trunc_len_ > 0 && length(e) >= trunc_len_;
}

std::vector<const RewriteRule*> PoissonPresentation::applicable_rules(
    const Exps& e) const {
  std::vector<const RewriteRule*> out;
  for (const RewriteRule& r : rules_)
    if (divides(r.pattern, e)) out.push_back(&r);
  return out;
}

TermMap PoissonPresentation::bracket_gen(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = bracket_.find({i, j});
  if (it == bracket_.end()) return {};
  if (!flip) return it->second;
  TermMap neg;
  for (const auto& [e, c] : it->second) neg.emplace(e, -c);
  return neg;
}

bool PoissonPresentation::operator==(const PoissonPresentation& o) const {
  if (name_ != o.name_ || vars_ != o.vars_ || degrees_ != o.degrees_ ||
      trunc_len_ != o.trunc_len_ || bracket_ != o.bracket_ ||
      rules_.size() != o.rules_.size())
    return false;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (rules_[i].pattern != o.rules_[i].pattern ||
        rules_[i].rhs != o.rules_[i].rhs)
      return false;
  return true;
}

TermMap reduce_terms(const PoissonPresentation& p, TermMap in, Rng* rng) {
  TermMap out;
  std::vector<std::pair<Exps, Rat>> work(in.begin(), in.end());
  while (!work.empty()) {
    std::size_t idx = work.size() - 1;
    if (rng) idx = static_cast<std::size_t>(rng->next_u64() % work.size());
    auto [m, c] = work[idx];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(idx));
    if (c == 0 || p.killed(m)) continue;
    auto rules = p.applicable_rules(m);
    if (rules.empty()) {
      accumulate(out, m, c);
      continue;
    }
    const RewriteRule* r = rules[0];
    if (rng && rules.size() > 1)
      r = rules[static_cast<std::size_t>(rng->next_u64() % rules.size())];
    for (const auto& [rm, rc] : r->rhs) {
      Exps e = m;
      for (std::size_t t = 0; t < e.size(); ++t)
        e[t] = e[t] - r->pattern[t] + rm[t];
      work.emplace_back(std::move(e), c * rc);
    }
  }
  return out;
}

TermMap bracket_raw(const PoissonPresentation& p, const TermMap& a,
                    const TermMap& b) {
  int k = p.var_count();
  // Table lookups hoisted out of the monomial loops.
  std::vector<std::vector<TermMap>> table(k, std::vector<TermMap>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) table[i][j] = p.bracket_gen(i, j);

  TermMap out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      for (int i = 0; i < k; ++i) {
        if (ma[i] == 0) continue;
        for (int j = 0; j < k; ++j) {
          if (i == j || mb[j] == 0 || table[i][j].empty()) continue;
          Rat coef = ca * cb * ma[i] * mb[j];
          Exps base(static_cast<std::size_t>(k));
          for (int t = 0; t < k; ++t) base[t] = ma[t] + mb[t];
          base[i] -= 1;
          base[j] -= 1;
          for (const auto& [bm, bc] : table[i][j]) {
            Exps e = base;
            for (int t = 0; t < k; ++t) e[t] += bm[t];
            accumulate(out, e, coef * bc);
          }
        }
      }
  return out;
}

PolyElement::PolyElement(PresPtr p) : pres_(std::move(p)) {
  if (!pres_) throw Error("PolyElement: null presentation");
}

PolyElement PolyElement::constant(PresPtr p, const Rat& c) {
  PolyElement r(std::move(p));
  if (c != 0)
    r.terms_.emplace(Exps(static_cast<std::size_t>(r.pres_->var_count()), 0), c);
  return r;
}

PolyElement PolyElement::generator(PresPtr p, int index) {
  PolyElement r(std::move(p));
  if (index < 0 || index >= r.pres_->var_count())
    throw Error("PolyElement::generator: index out of range");
  Exps e(static_cast<std::size_t>(r.pres_->var_count()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  r.terms_ = reduce_terms(*r.pres_, one_term(std::move(e), Rat(1)));
  return r;
}

PolyElement PolyElement::monomial(PresPtr p, Exps e, const Rat& c) {
  PolyElement r(std::move(p));
  if (static_cast<int>(e.size()) != r.pres_->var_count())
    throw Error("PolyElement::monomial: exponent arity mismatch");
  for (int x : e)
    if (x < 0) throw Error("PolyElement::monomial: negative exponent");
  r.terms_ = reduce_terms(*r.pres_, one_term(std::move(e), c));
  return r;
}

PolyElement PolyElement::from_terms(PresPtr p, TermMap t) {
  PolyElement r(std::move(p));
  for (const auto& [e, c] : t) {
    if (static_cast<int>(e.size()) != r.pres_->var_count())
      throw Error("PolyElement::from_terms: exponent arity mismatch");
    for (int x : e)
      if (x < 0) throw Error("PolyElement::from_terms: negative exponent");
  }
  r.terms_ = reduce_terms(*r.pres_, std::move(t));
  return r;
}

PolyElement PolyElement::from_multipoly(PresPtr p, const MultiPoly& q) {
  if (q.variables() != p->vars())
    throw Error("PolyElement::from_multipoly: variable list mismatch");
  TermMap t(q.terms().begin(), q.terms().end());
  return from_terms(std::move(p), std::move(t));
}

namespace {

void check_same_pres(const PolyElement& a, const PolyElement& b) {
  if (*a.pres() != *b.pres())
    throw Error("PolyElement: presentation mismatch");
}

}  // namespace

PolyElement PolyElement::operator+(const PolyElement& o) const {
  check_same_pres(*this, o);
  TermMap t = terms_;
  for (const auto& [e, c] : o.terms_) accumulate(t, e, c);
  return from_terms(pres_, std::move(t));
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  check_same_pres(*this, o);
  TermMap t = terms_;
  for (const auto& [e, c] : o.terms_) accumulate(t, e, -c);
  return from_terms(pres_, std::move(t));
}

PolyElement PolyElement::operator*(const PolyElement& o) const {
  check_same_pres(*this, o);
  TermMap t;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      accumulate(t, e, ca * cb);
    }
  return from_terms(pres_, std::move(t));
}

PolyElement PolyElement::operator*(const Rat& c) const {
  PolyElement r(pres_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

PolyElement PolyElement::pow(int k) const {
  if (k < 0) throw Error("PolyElement::pow: negative exponent");
  PolyElement r = constant(pres_, Rat(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool PolyElement::operator==(const PolyElement& o) const {
  return *pres_ == *o.pres_ && terms_ == o.terms_;
}

bool PolyElement::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) return true;
  int d = pres_->weighted_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (pres_->weighted_degree(e) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

std::string PolyElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    for (int i = 0; i < pres_->var_count(); ++i)
      s += "*" + pres_->vars()[static_cast<std::size_t>(i)] + "^" +
           std::to_string(e[static_cast<std::size_t>(i)]);
  }
  return s;
}

PolyElement poisson_bracket(const PolyElement& a, const PolyElement& b) {
  check_same_pres(a, b);
  return PolyElement::from_terms(a.pres(),
                                 bracket_raw(*a.pres(), a.terms(), b.terms()));
}

AlgebraMap::AlgebraMap(PresPtr source, PresPtr target,
                       std::vector<PolyElement> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (!source_ || !target_) throw Error("AlgebraMap: null presentation");
  if (static_cast<int>(images_.size()) != source_->var_count())
    throw Error("AlgebraMap: one image per source generator required");
  for (const PolyElement& img : images_)
    if (*img.pres() != *target_)
      throw Error("AlgebraMap: image lives in the wrong algebra");

  for (const RewriteRule& r : source_->rules()) {
    PolyElement lhs = apply_terms(one_term(r.pattern, Rat(1)));
    PolyElement rhs = apply_terms(r.rhs);
    if (lhs != rhs)
      throw Error("AlgebraMap: not well defined, rule image mismatch on " +
                  source_->name());
  }
  if (source_->trunc_len() > 0) {
    for (const Exps& m :
         monomials_of_length(source_->var_count(), source_->trunc_len())) {
      if (!apply_terms(one_term(m, Rat(1))).is_zero())
        throw Error(
            "AlgebraMap: not well defined, a truncated monomial has nonzero "
            "image");
    }
  }
}

PolyElement AlgebraMap::apply_terms(const TermMap& t) const {
  PolyElement acc(target_);
  for (const auto& [e, c] : t) {
    PolyElement prod = PolyElement::constant(target_, c);
    for (int i = 0; i < source_->var_count(); ++i)
      if (e[static_cast<std::size_t>(i)] > 0)
        prod = prod * images_[static_cast<std::size_t>(i)].pow(
                          e[static_cast<std::size_t>(i)]);
    acc = acc + prod;
  }
  return acc;
}

PolyElement AlgebraMap::apply(const PolyElement& a) const {
  if (*a.pres() != *source_)
    throw Error("AlgebraMap::apply: element not in the source algebra");
  return apply_terms(a.terms());
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& outer, const AlgebraMap& inner) {
  if (*inner.target_ != *outer.source_)
    throw Error("AlgebraMap::compose: middle algebras differ");
  std::vector<PolyElement> images;
  images.reserve(inner.images_.size());
  for (const PolyElement& img : inner.images_) images.push_back(outer.apply(img));
  return AlgebraMap(inner.source_, outer.target_, std::move(images));
}

std::string AlgebraMap::describe() const {
  std::string s;
  for (int i = 0; i < source_->var_count(); ++i) {
    if (!s.empty()) s += "; ";
    s += source_->vars()[static_cast<std::size_t>(i)] + " -> " +
         images_[static_cast<std::size_t>(i)].str();
  }
  return s;
}

HomReport check_poisson_hom(const AlgebraMap& m, int degree_bound) {
  const PoissonPresentation& S = *m.source();
  for (int i = 0; i < S.var_count(); ++i) {
    const PolyElement& img = m.images()[static_cast<std::size_t>(i)];
    if (img.is_zero()) continue;
    int d = 0;
    if (!img.is_homogeneous(&d) || d != S.degrees()[static_cast<std::size_t>(i)])
      return {false, "generator " + S.vars()[static_cast<std::size_t>(i)] +
                         ": image " + img.str() +
                         " is not homogeneous of degree " +
                         std::to_string(S.degrees()[static_cast<std::size_t>(i)])};
  }
  for (int i = 0; i < S.var_count(); ++i)
    for (int j = i + 1; j < S.var_count(); ++j) {
      PolyElement lhs = poisson_bracket(m.images()[static_cast<std::size_t>(i)],
                                        m.images()[static_cast<std::size_t>(j)]);
      PolyElement rhs =
          m.apply(PolyElement::from_terms(m.source(), S.bracket_gen(i, j)));
      if (lhs != rhs)
        return {false, "(" + S.vars()[static_cast<std::size_t>(i)] + ", " +
                           S.vars()[static_cast<std::size_t>(j)] +
                           "): bracket of images is " + lhs.str() +
                           " but the image of the bracket is " + rhs.str()};
    }
  if (degree_bound > 0) {
    std::vector<PolyElement> ms;
    for (int len = 1; len <= degree_bound; ++len)
      for (const Exps& e : monomials_of_length(S.var_count(), len))
        ms.push_back(PolyElement::monomial(m.source(), e));
    for (const PolyElement& a : ms)
      for (const PolyElement& b : ms) {
        PolyElement lhs = poisson_bracket(m.apply(a), m.apply(b));
        PolyElement rhs = m.apply(poisson_bracket(a, b));
        if (lhs != rhs)
          return {false, "monomial pair (" + a.str() + ", " + b.str() +
                             "): bracket of images differs from image of "
                             "bracket"};
      }
  }
  return {true, ""};
}

namespace {

std::map<std::pair<int, int>, TermMap> kk_table() {
  std::map<std::pair<int, int>, TermMap> b;
  b[{0, 1}] = one_term({1, 0, 0}, Rat(1));
  b[{0, 2}] = one_term({0, 1, 0}, Rat(2));
  b[{1, 2}] = one_term({0, 0, 1}, Rat(1));
  return b;
}

}  // namespace

PresPtr nilpotent_cone() {
  static PresPtr p = std::make_shared<PoissonPresentation>(
      "nilpotent-cone", std::vector<std::string>{"z0", "z1", "z2"},
      std::vector<int>{0, 1, 2}, kk_table(),
      std::vector<RewriteRule>{{{0, 2, 0}, one_term({1, 0, 1}, Rat(1))}}, 0);
  return p;
}

PresPtr truncated_cone(int n) {
  if (n < 0) throw Error("truncated_cone: negative order");
  return std::make_shared<PoissonPresentation>(
      "cone-mod-" + std::to_string(n), std::vector<std::string>{"y0", "y1", "y2"},
      std::vector<int>{0, 1, 2}, kk_table(),
      std::vector<RewriteRule>{{{0, 2, 0}, one_term({1, 0, 1}, Rat(1))}}, n + 1);
}

PresPtr free_coadjoint() {
  static PresPtr p = std::make_shared<PoissonPresentation>(
      "coadjoint", std::vector<std::string>{"z0", "z1", "z2"},
      std::vector<int>{0, 1, 2}, kk_table(), std::vector<RewriteRule>{}, 0);
  return p;
}

PresPtr symplectic_plane(Side s, int trunc, int rank) {
  if (trunc < 0) throw Error("symplectic_plane: negative truncation");
  if (rank < 1) throw Error("symplectic_plane: rank must be positive");
  std::string prefix = (s == Side::line) ? "x" : "xh";
  std::vector<std::string> vars;
  std::vector<int> degrees;
  for (int k = 0; k < rank; ++k) {
    vars.push_back(prefix + std::to_string(2 * k));
    vars.push_back(prefix + std::to_string(2 * k + 1));
    if (s == Side::line) {
      degrees.push_back(0);
      degrees.push_back(1);
    } else {
      degrees.push_back(1);
      degrees.push_back(0);
    }
  }
  std::map<std::pair<int, int>, TermMap> table;
  for (int k = 0; k < rank; ++k)
    table[{2 * k, 2 * k + 1}] =
        one_term(Exps(static_cast<std::size_t>(2 * rank), 0), Rat(-1));
  std::string name = (s == Side::line ? "plane" : "dual-plane");
  name += "-r" + std::to_string(rank) + "-t" + std::to_string(trunc);
  return std::make_shared<PoissonPresentation>(
      name, std::move(vars), std::move(degrees), std::move(table),
      std::vector<RewriteRule>{}, trunc);
}

PresPtr line_functions(int n) {
  if (n < 0) throw Error("line_functions: negative order");
  return std::make_shared<PoissonPresentation>(
      "line-mod-" + std::to_string(n), std::vector<std::string>{"x"},
      std::vector<int>{0}, std::map<std::pair<int, int>, TermMap>{},
      std::vector<RewriteRule>{}, n + 1);
}

std::vector<Exps> monomials_of_length(int nvars, int len) {
  if (nvars < 1 || len < 0) throw Error("monomials_of_length: bad arguments");
  std::vector<Exps> out;
  Exps cur;
  cur.reserve(static_cast<std::size_t>(nvars));
  // Lexicographic by construction: earlier variables iterate slowest.
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(cur.size()) == nvars - 1) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      cur.push_back(a);
      self(self, remaining - a);
      cur.pop_back();
    }
  };
  rec(rec, len);
  return out;
}

std::vector<Exps> normal_monomials(const PoissonPresentation& p) {
  if (p.trunc_len() <= 0)
    throw Error("normal_monomials: presentation is not truncated");
  std::vector<Exps> out;
  for (int len = 0; len < p.trunc_len(); ++len)
    for (const Exps& e : monomials_of_length(p.var_count(), len))
      if (p.applicable_rules(e).empty()) out.push_back(e);
  return out;
}

int graded_slice_dim(const PoissonPresentation& p, int degree) {
  int count = 0;
  for (const Exps& e : normal_monomials(p))
    if (p.weighted_degree(e) == degree) ++count;
  return count;
}

TruncPoly embed_by_length(const PolyElement& a, int n) {
  TruncPoly r(n);
  for (const auto& [e, c] : a.terms()) {
    int l = a.pres()->length(e);
    if (l <= n) r.set_coeff(l, r.coeff(l) + c);
  }
  return r;
}

bool rule_brackets_vanish(const PresPtr& p, std::string* witness) {
  for (const RewriteRule& r : p->rules()) {
    TermMap diff = one_term(r.pattern, Rat(1));
    for (const auto& [e, c] : r.rhs) accumulate(diff, e, -c);
    for (int j = 0; j < p->var_count(); ++j) {
      Exps gen(static_cast<std::size_t>(p->var_count()), 0);
      gen[static_cast<std::size_t>(j)] = 1;
      TermMap br = bracket_raw(*p, diff, one_term(gen, Rat(1)));
      if (!reduce_terms(*p, std::move(br)).empty()) {
        if (witness)
          *witness = "bracket of a rule difference with " +
                     p->vars()[static_cast<std::size_t>(j)] +
                     " does not reduce to zero";
        return false;
      }
    }
  }
  return true;
}

bool killed_brackets_stay_killed(const PresPtr& p, std::string* witness) {
  int L = p->trunc_len();
  if (L == 0) return true;
  for (int len = L; len <= L + 1; ++len)
    for (const Exps& m : monomials_of_length(p->var_count(), len))
      for (int j = 0; j < p->var_count(); ++j) {
        Exps gen(static_cast<std::size_t>(p->var_count()), 0);
        gen[static_cast<std::size_t>(j)] = 1;
        TermMap br = bracket_raw(*p, one_term(m, Rat(1)), one_term(gen, Rat(1)));
        TermMap red = reduce_terms(*p, std::move(br));
        if (!red.empty()) {
          if (witness) {
            PolyElement shown = PolyElement::from_terms(p, red);
            *witness = "killed monomial bracketed with " +
                       p->vars()[static_cast<std::size_t>(j)] +
                       " survives truncation: " + shown.str();
          }
          return false;
        }
      }
  return true;
}

AlgebraMap cone_quotient_map() {
  PresPtr src = free_coadjoint(), tgt = nilpotent_cone();
  std::vector<PolyElement> imgs;
  for (int i = 0; i < 3; ++i) imgs.push_back(PolyElement::generator(tgt, i));
  return AlgebraMap(src, tgt, std::move(imgs));
}

AlgebraMap resolution_map() {
  PresPtr src = nilpotent_cone(), tgt = symplectic_plane(Side::line, 0);
  std::vector<PolyElement> imgs;
  imgs.push_back(PolyElement::monomial(tgt, {1, 0}));
  imgs.push_back(PolyElement::monomial(tgt, {1, 1}, Rat(-1)));
  imgs.push_back(PolyElement::monomial(tgt, {1, 2}));
  return AlgebraMap(src, tgt, std::move(imgs));
}

AlgebraMap classical_fourier(int rank) {
  if (rank < 1) throw Error("classical_fourier: rank must be positive");
  PresPtr src = symplectic_plane(Side::dual_line, 0, rank);
  PresPtr tgt = symplectic_plane(Side::line, 0, rank);
  std::vector<PolyElement> imgs;
  for (int k = 0; k < rank; ++k) {
    imgs.push_back(PolyElement::generator(tgt, 2 * k + 1));
    imgs.push_back(PolyElement::generator(tgt, 2 * k) * Rat(-1));
  }
  return AlgebraMap(src, tgt, std::move(imgs));
}

AlgebraMap inf_moment_map(int n) {
  PresPtr src = free_coadjoint(), tgt = truncated_cone(n);
  std::vector<PolyElement> imgs;
  for (int i = 0; i < 3; ++i) imgs.push_back(PolyElement::generator(tgt, i));
  return AlgebraMap(src, tgt, std::move(imgs));
}

namespace {

AlgebraMap bir_moment_with_sign(const Rat& z1_sign) {
  PresPtr src = free_coadjoint(), tgt = symplectic_plane(Side::dual_line, 0);
  std::vector<PolyElement> imgs;
  imgs.push_back(PolyElement::monomial(tgt, {0, 1}, Rat(-1)));
  imgs.push_back(PolyElement::monomial(tgt, {1, 1}, z1_sign));
  imgs.push_back(PolyElement::monomial(tgt, {2, 1}, Rat(-1)));
  return AlgebraMap(src, tgt, std::move(imgs));
}

}  // namespace

AlgebraMap bir_moment_map() { return bir_moment_with_sign(Rat(1)); }
AlgebraMap bir_moment_map_printed() { return bir_moment_with_sign(Rat(-1)); }

AlgebraMap inverse_system_map(int n) {
  if (n < 0) throw Error("inverse_system_map: negative order");
  PresPtr src = truncated_cone(n + 1), tgt = truncated_cone(n);
  std::vector<PolyElement> imgs;
  for (int i = 0; i < 3; ++i) imgs.push_back(PolyElement::generator(tgt, i));
  return AlgebraMap(src, tgt, std::move(imgs));
}

std::pair<AlgebraMap, AlgebraMap> zero_section_and_projection(int n) {
  PresPtr on = line_functions(n), pn = truncated_cone(n);
  AlgebraMap inclusion(on, pn, {PolyElement::generator(pn, 0)});
  AlgebraMap projection(pn, on,
                        {PolyElement::generator(on, 0), PolyElement(on),
                         PolyElement(on)});
  return {std::move(inclusion), std::move(projection)};
}

AlgebraMap theorem1_map(int n) {
  PresPtr src = nilpotent_cone(), tgt = truncated_cone(n);
  std::vector<PolyElement> imgs;
  for (int i = 0; i < 3; ++i) imgs.push_back(PolyElement::generator(tgt, i));
  return AlgebraMap(src, tgt, std::move(imgs));
}

Theorem1Record theorem1_iso(int n) {
  Theorem1Record rec;
  PresPtr pn = truncated_cone(n);
  for (int p = 0; p <= 2 * n; ++p)
    rec.slice_dims.push_back(graded_slice_dim(*pn, p));

  std::vector<int> cumulative;
  for (int p = 0; p <= 2 * n; ++p)
    cumulative.push_back(static_cast<int>(filtration_basis(n, p).size()));
  for (int p = 0; p <= 2 * n; ++p)
    rec.matrix_dims.push_back(cumulative[static_cast<std::size_t>(p)] -
                              (p ? cumulative[static_cast<std::size_t>(p - 1)]
                                 : 0));
  rec.dims_match = rec.slice_dims == rec.matrix_dims;
  if (!rec.dims_match) rec.witness = "per-degree dimensions differ";

  Distinguished d = distinguished(n);
  std::array<Endo, 3> ops = {d.delta0, d.delta1, d.delta2};
  rec.brackets_match = true;
  for (int i = 0; i < 3 && rec.brackets_match; ++i)
    for (int j = i + 1; j < 3 && rec.brackets_match; ++j) {
      PolyElement br = PolyElement::from_terms(pn, pn->bracket_gen(i, j));
      Endo comm = ops[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(j)] -
                  ops[static_cast<std::size_t>(j)] * ops[static_cast<std::size_t>(i)];
      if (comm.is_zero() != br.is_zero()) {
        rec.brackets_match = false;
        rec.witness = "bracket vanishing differs on generator pair (" +
                      std::to_string(i) + ", " + std::to_string(j) + ")";
        break;
      }
      if (comm.is_zero()) continue;
      SymbolValue s = symbol_of(comm);
      int expected_order =
          pn->degrees()[static_cast<std::size_t>(i)] +
          pn->degrees()[static_cast<std::size_t>(j)] - 1;
      if (s.order != expected_order ||
          s.value != embed_by_length(br, n)) {
        rec.brackets_match = false;
        rec.witness = "bracket mismatch on generator pair (" +
                      std::to_string(i) + ", " + std::to_string(j) +
                      "): symbol " + s.value.str() + " at order " +
                      std::to_string(s.order) + " versus " + br.str();
      }
    }
  return rec;
}

UniquenessRecord uniqueness_solver(int trunc, int degree_bound,
                                   bool first_condition_only) {
  if (trunc < 3)
    throw TruncationTooSmall("uniqueness_solver: truncation below 3");
  if (degree_bound < 0) throw Error("uniqueness_solver: negative degree bound");

  PresPtr full = symplectic_plane(Side::line, 0);
  PresPtr quot = symplectic_plane(Side::line, trunc);
  UniquenessRecord rec{};
  rec.outcome = SolveOutcome::unique;

  // First condition, modulo monomials of length >= trunc. It is
  // linear in the c_i: one column per bracket {x0, x0^{i+1} x1}.
  std::vector<TermMap> cols;
  for (int i = 0; i <= degree_bound; ++i) {
    TermMap fi = one_term({i + 1, 1}, Rat(1));
    cols.push_back(
        reduce_terms(*quot, bracket_raw(*full, one_term({1, 0}, Rat(1)), fi)));
  }
  TermMap rhs = one_term({1, 0}, Rat(1));

  std::map<Exps, int> row_of;
  for (const TermMap& col : cols)
    for (const auto& [e, c] : col) row_of.emplace(e, 0);
  for (const auto& [e, c] : rhs) row_of.emplace(e, 0);
  int nrows = 0;
  for (auto& [e, idx] : row_of) idx = nrows++;

  RatMatrix a(nrows, degree_bound + 1);
  std::vector<Rat> b(static_cast<std::size_t>(nrows), Rat(0));
  for (int i = 0; i <= degree_bound; ++i)
    for (const auto& [e, c] : cols[static_cast<std::size_t>(i)])
      a.at(row_of[e], i) = c;
  for (const auto& [e, c] : rhs) b[static_cast<std::size_t>(row_of[e])] = c;

  std::vector<Rat> sol;
  switch (mat_solve(a, b, sol)) {
    case SolveStatus::inconsistent:
      rec.outcome = SolveOutcome::no_solution;
      rec.witness = "first bracket condition is unsatisfiable";
      return rec;
    case SolveStatus::underdetermined:
      rec.outcome = SolveOutcome::multiple_solutions;
      rec.witness =
          "coefficients beyond the truncation are unconstrained; raise the "
          "truncation or lower the degree bound";
      return rec;
    case SolveStatus::unique:
      break;
  }
  rec.h_coeffs = sol;
  rec.h_is_minus_one = sol[0] == -1;
  for (std::size_t i = 1; i < sol.size(); ++i)
    if (sol[i] != 0) rec.h_is_minus_one = false;

  // Candidate images, kept raw in the untruncated plane; comparisons
  // happen inside the quotient.
  TermMap h;
  for (int i = 0; i <= degree_bound; ++i)
    accumulate(h, {i, 0}, sol[static_cast<std::size_t>(i)]);
  TermMap x0 = one_term({1, 0}, Rat(1));
  TermMap x1 = one_term({0, 1}, Rat(1));
  auto mul = [&](const TermMap& u, const TermMap& v) {
    TermMap out;
    for (const auto& [eu, cu] : u)
      for (const auto& [ev, cv] : v)
        accumulate(out, {eu[0] + ev[0], eu[1] + ev[1]}, cu * cv);
    return out;
  };
  TermMap f1 = mul(mul(x0, h), x1);
  TermMap f2 = mul(mul(x0, mul(h, h)), mul(x1, x1));

  if (!first_condition_only) {
    TermMap lhs2 = reduce_terms(*quot, bracket_raw(*full, x0, f2));
    TermMap rhs2;
    for (const auto& [e, c] : f1) accumulate(rhs2, e, c * 2);
    rhs2 = reduce_terms(*quot, std::move(rhs2));
    TermMap lhs3 = reduce_terms(*quot, bracket_raw(*full, f1, f2));
    TermMap rhs3 = reduce_terms(*quot, TermMap(f2));
    rec.full_conditions_hold = lhs2 == rhs2 && lhs3 == rhs3;
    if (!rec.full_conditions_hold) {
      rec.outcome = SolveOutcome::no_solution;
      rec.witness = "the linear solution violates a higher bracket condition";
      return rec;
    }
  } else {
    rec.full_conditions_hold = false;
  }

  TermMap res1 = reduce_terms(*quot, one_term({1, 1}, Rat(-1)));
  TermMap res2 = reduce_terms(*quot, one_term({1, 2}, Rat(1)));
  rec.equals_resolution_map = reduce_terms(*quot, TermMap(f1)) == res1 &&
                              reduce_terms(*quot, TermMap(f2)) == res2;
  return rec;
}

DiamondRecord diamond_check() {
  AlgebraMap left = AlgebraMap::compose(resolution_map(), cone_quotient_map());
  AlgebraMap right =
      AlgebraMap::compose(classical_fourier(1), bir_moment_map());
  DiamondRecord rec;
  rec.commutes = true;
  for (int i = 0; i < 3; ++i) {
    rec.left_images.push_back(left.images()[static_cast<std::size_t>(i)].str());
    rec.right_images.push_back(
        right.images()[static_cast<std::size_t>(i)].str());
    if (left.images()[static_cast<std::size_t>(i)] !=
        right.images()[static_cast<std::size_t>(i)])
      rec.commutes = false;
  }
  AlgebraMap printed =
      AlgebraMap::compose(classical_fourier(1), bir_moment_map_printed());
  rec.printed_variant_commutes = true;
  for (int i = 0; i < 3; ++i) {
    if (printed.images()[static_cast<std::size_t>(i)] !=
        left.images()[static_cast<std::size_t>(i)]) {
      rec.printed_variant_commutes = false;
      if (rec.printed_witness.empty())
        rec.printed_witness =
            left.source()->vars()[static_cast<std::size_t>(i)] +
            ": expected " +
            left.images()[static_cast<std::size_t>(i)].str() +
            " but the printed sign gives " +
            printed.images()[static_cast<std::size_t>(i)].str();
    }
  }
  return rec;
}

bool ideal_bracket_check(int a_pow, int b_pow, int trunc) {
  if (a_pow < 1 || b_pow < 1) throw Error("ideal_bracket_check: powers must be positive");
  if (trunc <= a_pow + b_pow)
    throw Error("ideal_bracket_check: truncation must exceed a_pow + b_pow");
  PresPtr p = symplectic_plane(Side::line, trunc);
  for (const Exps& ma : monomials_of_length(2, a_pow))
    for (const Exps& mb : monomials_of_length(2, b_pow)) {
      TermMap br =
          reduce_terms(*p, bracket_raw(*p, one_term(ma, Rat(1)),
                                       one_term(mb, Rat(1))));
      for (const auto& [e, c] : br)
        if (p->length(e) < a_pow + b_pow - 2) return false;
    }
  return true;
}

int ideal_bracket_min_length(int a_pow, int b_pow, int trunc) {
  if (a_pow < 1 || b_pow < 1) throw Error("ideal_bracket_min_length: powers must be positive");
  if (trunc <= a_pow + b_pow)
    throw Error("ideal_bracket_min_length: truncation must exceed a_pow + b_pow");
  PresPtr p = symplectic_plane(Side::line, trunc);
  int best = -1;
  for (const Exps& ma : monomials_of_length(2, a_pow))
    for (const Exps& mb : monomials_of_length(2, b_pow)) {
      TermMap br =
          reduce_terms(*p, bracket_raw(*p, one_term(ma, Rat(1)),
                                       one_term(mb, Rat(1))));
      for (const auto& [e, c] : br) {
        int l = p->length(e);
        if (best < 0 || l < best) best = l;
      }
    }
  return best;
}

}  // namespace mdv
