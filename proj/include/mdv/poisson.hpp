#ifndef MDV_POISSON_HPP
#define MDV_POISSON_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mdv/multipoly.hpp"
#include "mdv/rational.hpp"
#include "mdv/rng.hpp"
#include "mdv/truncpoly.hpp"
#include "mdv/weyl.hpp"

namespace mdv {

using Exps = std::vector<int>;
using TermMap = std::map<Exps, Rat>;

// Monomial rewrite: any monomial divisible by pattern has the pattern
// factor replaced by rhs. Shipped rules preserve both total exponent
// and weighted degree, which the constructor enforces; termination
// and confluence rest on that.
struct RewriteRule {
  Exps pattern;
  TermMap rhs;
};

// Finitely presented graded Poisson algebra: named generators with
// integer degrees, an antisymmetric generator bracket table, monomial
// rewrite rules, and an optional truncation killing every monomial of
// total exponent >= trunc_len (0 disables truncation). Immutable.
class PoissonPresentation {
 public:
  PoissonPresentation(std::string name, std::vector<std::string> vars,
                      std::vector<int> degrees,
                      std::map<std::pair<int, int>, TermMap> bracket,
                      std::vector<RewriteRule> rules, int trunc_len);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int trunc_len() const { return trunc_len_; }
  int var_count() const { return static_cast<int>(vars_.size()); }

  int length(const Exps& e) const;  // total exponent
  int weighted_degree(const Exps& e) const;
  bool killed(const Exps& e) const;
  std::vector<const RewriteRule*> applicable_rules(const Exps& e) const;

  // {g_i, g_j} as raw terms; antisymmetry applied, empty when zero.
  TermMap bracket_gen(int i, int j) const;

  // Structural equality; presentations from different builder calls
  // compare equal when they describe the same algebra.
  bool operator==(const PoissonPresentation& o) const;
  bool operator!=(const PoissonPresentation& o) const { return !(*this == o); }

 private:
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<int> degrees_;
  std::map<std::pair<int, int>, TermMap> bracket_;  // keys i < j only
  std::vector<RewriteRule> rules_;
  int trunc_len_;
};

using PresPtr = std::shared_ptr<const PoissonPresentation>;

// Normal form: applies rules until no monomial is reducible, dropping
// killed monomials. With rng set, the reduction order and rule choice
// are randomized; confluence tests compare against the default order.
TermMap reduce_terms(const PoissonPresentation& p, TermMap in,
                     Rng* rng = nullptr);

// Biderivation extension of the generator table to two term maps.
// Not reduced; poisson_bracket is this followed by reduce_terms.
TermMap bracket_raw(const PoissonPresentation& p, const TermMap& a,
                    const TermMap& b);

// Element in normal form.
class PolyElement {
 public:
  explicit PolyElement(PresPtr p);
  static PolyElement constant(PresPtr p, const Rat& c);
  static PolyElement generator(PresPtr p, int index);
  static PolyElement monomial(PresPtr p, Exps e, const Rat& c = Rat(1));
  static PolyElement from_terms(PresPtr p, TermMap t);
  // Variable names must match the presentation's exactly.
  static PolyElement from_multipoly(PresPtr p, const MultiPoly& q);

  const PresPtr& pres() const { return pres_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement operator*(const PolyElement& o) const;
  PolyElement operator*(const Rat& c) const;
  PolyElement pow(int k) const;
  bool operator==(const PolyElement& o) const;
  bool operator!=(const PolyElement& o) const { return !(*this == o); }

  // True when every term has the same weighted degree (or the element
  // is zero); fills degree_out on homogeneous nonzero elements.
  bool is_homogeneous(int* degree_out = nullptr) const;

  // Sum of "c*g1^a1*...*gk^ak", exponent-lexicographic; "0" when zero.
  std::string str() const;

 private:
  PresPtr pres_;
  TermMap terms_;
};

PolyElement poisson_bracket(const PolyElement& a, const PolyElement& b);

// Graded algebra homomorphism given by generator images. Construction
// validates well-definedness eagerly: every rewrite-rule difference
// maps to zero, and when the source is truncated, every monomial at
// the truncation length maps to zero.
class AlgebraMap {
 public:
  AlgebraMap(PresPtr source, PresPtr target, std::vector<PolyElement> images);

  const PresPtr& source() const { return source_; }
  const PresPtr& target() const { return target_; }
  const std::vector<PolyElement>& images() const { return images_; }

  PolyElement apply(const PolyElement& a) const;
  PolyElement apply_terms(const TermMap& t) const;

  // outer after inner; inner's target must equal outer's source.
  static AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner);

  // "g -> image" lines joined by "; ", for witnesses and reports.
  std::string describe() const;

 private:
  PresPtr source_, target_;
  std::vector<PolyElement> images_;
};

struct HomReport {
  bool ok;
  std::string witness;  // failing generator or pair when !ok
};

// Poisson + grading check: {m(g_i), m(g_j)} = m({g_i, g_j}) on all
// generator pairs (sufficient, brackets being biderivations) and each
// image homogeneous of its generator's degree or zero. degree_bound,
// when positive, additionally spot-checks the bracket identity on all
// monomial pairs of total exponent up to the bound.
HomReport check_poisson_hom(const AlgebraMap& m, int degree_bound = 0);

// Shipped presentations. Degrees: cone-side generators carry (0,1,2);
// line plane (x0,x1) carries (0,1); dual plane (xh0,xh1) carries
// (1,0). Truncation is always by total exponent.
PresPtr nilpotent_cone();          // k[z0,z1,z2]/(z1^2 -> z0 z2), KK bracket
PresPtr truncated_cone(int n);     // same with y-names and length bound n+1
PresPtr free_coadjoint();          // k[z0,z1,z2], KK bracket, no relation
PresPtr symplectic_plane(Side s, int trunc, int rank = 1);
PresPtr line_functions(int n);     // k[x]/(len >= n+1), trivial bracket

// All irreducible monomials below the truncation bound (requires a
// truncated presentation), ascending exponent-lexicographic.
std::vector<Exps> normal_monomials(const PoissonPresentation& p);
int graded_slice_dim(const PoissonPresentation& p, int degree);

// Monomials of total exponent exactly len over nvars variables.
std::vector<Exps> monomials_of_length(int nvars, int len);

// x^{total exponent} per term; defined on cone-side elements because
// their rules and truncation preserve total exponent.
TruncPoly embed_by_length(const PolyElement& a, int n);

// The two invariants behind quotient brackets. Both return true with
// an empty witness when the property holds; the truncated plane is
// expected to fail the second one (its truncation ideal is not a
// Poisson ideal, which is the point of the almost-inclusion bound).
bool rule_brackets_vanish(const PresPtr& p, std::string* witness = nullptr);
bool killed_brackets_stay_killed(const PresPtr& p,
                                 std::string* witness = nullptr);

// Shipped maps.
AlgebraMap cone_quotient_map();          // free_coadjoint -> nilpotent_cone
AlgebraMap resolution_map();             // cone -> line plane, untruncated
AlgebraMap classical_fourier(int rank = 1);
AlgebraMap inf_moment_map(int n);        // free_coadjoint -> truncated_cone(n)
AlgebraMap bir_moment_map();             // derived z1 sign (+xh0 xh1)
AlgebraMap bir_moment_map_printed();     // variant with z1 -> -xh0 xh1
AlgebraMap inverse_system_map(int n);    // truncated_cone(n+1) -> truncated_cone(n)
std::pair<AlgebraMap, AlgebraMap> zero_section_and_projection(int n);

struct Theorem1Record {
  std::vector<int> slice_dims;   // weighted-degree dims of the cone quotient
  std::vector<int> matrix_dims;  // order-p symbol dims from filtration kernels
  bool dims_match;
  bool brackets_match;
  std::string witness;
};

// Quotient map nilpotent_cone -> truncated_cone(n) plus the two-sided
// comparison record (dimensions per degree 0..2n, and the bracket
// table against commutators of the distinguished operators).
Theorem1Record theorem1_iso(int n);
AlgebraMap theorem1_map(int n);

enum class SolveOutcome { unique, no_solution, multiple_solutions };

struct UniquenessRecord {
  SolveOutcome outcome;
  std::vector<Rat> h_coeffs;     // c_0..c_d, valid when outcome == unique
  bool h_is_minus_one;           // c_0 = -1 and all higher c_i = 0
  bool full_conditions_hold;     // second and third bracket conditions
  bool equals_resolution_map;    // images reproduce the resolution map
  std::string witness;
};

// Solves for h = sum c_i x0^i making y0 -> x0, y1 -> x0 h x1,
// y2 -> x0 h^2 x1^2 a graded Poisson homomorphism, working modulo
// monomials of length >= trunc. The first bracket condition is linear
// in the c_i and already pins the answer; the remaining two are then
// verified by substitution unless first_condition_only is set.
UniquenessRecord uniqueness_solver(int trunc, int degree_bound,
                                   bool first_condition_only = false);

struct DiamondRecord {
  bool commutes;                        // with the derived z1 sign
  std::vector<std::string> left_images;   // per generator z0, z1, z2
  std::vector<std::string> right_images;
  bool printed_variant_commutes;        // expected false
  std::string printed_witness;
};

// Both composites free coadjoint -> line plane: resolution after the
// cone quotient on the left, classical Fourier after the birational
// moment map on the right.
DiamondRecord diamond_check();

// Sharp bracket bound on powers of the irrelevant ideal m = (x0, x1):
// every bracket of a generator of m^a with a generator of m^b lies in
// m^{a+b-2}. The printed bound a+b-1 fails for every pair (witnessed
// by ideal_bracket_min_length); the verifier reports that separately.
bool ideal_bracket_check(int a_pow, int b_pow, int trunc);

// Minimal total exponent over all nonzero generator brackets of
// m^{a_pow} against m^{b_pow}; -1 when all brackets vanish.
int ideal_bracket_min_length(int a_pow, int b_pow, int trunc);

}  // namespace mdv

#endif
