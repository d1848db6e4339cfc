#include "mdv/suites.hpp"

#include <algorithm>
#include <chrono>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/expr.hpp"
#include "mdv/pbw.hpp"
#include "mdv/poisson.hpp"
#include "mdv/rng.hpp"
#include "mdv/weyl.hpp"

namespace mdv {

namespace {

Check make(std::string name, bool ok, std::string anchor,
           std::string witness_on_fail = "") {
  Check c;
  c.name = std::move(name);
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (!ok) c.witness = std::move(witness_on_fail);
  c.anchor = std::move(anchor);
  return c;
}

std::string nsuf(int n) { return "(n=" + std::to_string(n) + ")"; }

int ceil_half(int p) { return (p + 1) / 2; }

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
}

Endo random_endo(int n, Rng& rng) {
  Endo d(n);
  bool nonzero = false;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      int v = rng.next_int(-3, 3);
      if (v != 0) {
        d.at(i, j) = Rat(v);
        nonzero = true;
      }
    }
  if (!nonzero) d.at(0, 0) = Rat(1);
  return d;
}

TruncPoly random_monomial(int n, Rng& rng) {
  int e = rng.next_int(0, n);
  int c = rng.next_int(1, 3) * (rng.next_int(0, 1) ? 1 : -1);
  return TruncPoly::monomial(n, e, Rat(c));
}

Endo comm(const Endo& a, const Endo& b) { return a * b - b * a; }
WeylOp wcomm(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "filtration", "symbols",    "sl2",       "theorem1",
      "theorem2",   "inverse-system", "uniqueness", "diamond",
      "quantum-diamond", "all"};
  return names;
}

const std::vector<std::string>& subject_names() {
  static const std::vector<std::string> names = {
      "v-table",        "filtration-dims",      "distinguished-matrices",
      "pbw-normal-form", "weyl-normal-form",    "symbol"};
  return names;
}

std::vector<Check> battery_filtration_dims(int n_min, int n_max) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    bool ok = true;
    std::string wit;
    int expect = 0;
    for (int p = 0; p <= 2 * n && ok; ++p) {
      expect += n - ceil_half(p) + 1;
      int got = static_cast<int>(filtration_basis(n, p).size());
      if (got != expect) {
        ok = false;
        wit = "at p=" + std::to_string(p) + ": kernel dimension " +
              std::to_string(got) + ", expected " + std::to_string(expect);
      }
      if (ok && p == 2 * n && got != (n + 1) * (n + 1)) {
        ok = false;
        wit = "top filtration step has dimension " + std::to_string(got) +
              ", expected " + std::to_string((n + 1) * (n + 1));
      }
    }
    out.push_back(make(
        "filtration-dims" + nsuf(n), ok,
        "kernel dimension of the (p+1)-st bracket-with-x power grows by "
        "n - ceil(p/2) + 1 per step and tops out at (n+1)^2",
        wit));
    if (n >= 1) {
      bool vok = true;
      std::string vwit;
      int vsum = 0;
      for (int p = 1; p <= 2 * n && vok; ++p) {
        int v = v_of(n, p);
        vsum += v;
        if (v != ceil_half(p)) {
          vok = false;
          vwit = "v(" + std::to_string(p) + ") = " + std::to_string(v) +
                 ", expected " + std::to_string(ceil_half(p));
        }
      }
      if (vok && vsum != n * (n + 1)) {
        vok = false;
        vwit = "valuation sum " + std::to_string(vsum) + ", expected " +
               std::to_string(n * (n + 1));
      }
      out.push_back(make("v-table" + nsuf(n), vok,
                         "the minimal x-adic valuation at bracket order p is "
                         "ceil(p/2) and the valuations sum to n(n+1)",
                         vwit));
    }
  }
  return out;
}

std::vector<Check> battery_nilpotency(int n_min, int n_max) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i <= n && ok; ++i)
      for (int j = 0; j <= n && ok; ++j) {
        Endo unit(n);
        unit.at(i, j) = Rat(1);
        if (!ad_x_pow(unit, 2 * n + 1).is_zero()) {
          ok = false;
          wit = "basis matrix unit (" + std::to_string(i) + "," +
                std::to_string(j) + ") survives 2n+1 brackets";
        }
      }
    if (ok && n >= 1) {
      Distinguished d = distinguished(n);
      Endo power = Endo::identity(n);
      for (int i = 0; i < n; ++i) power = power * d.delta2;
      Endo top = ad_x_pow(power, 2 * n);
      Endo xpow = Endo::identity(n);
      for (int i = 0; i < n; ++i) xpow = xpow * d.delta0;
      Endo want = xpow * rat_factorial(2 * n);
      if (top.is_zero() || top != want) {
        ok = false;
        wit = "extremal power: 2n brackets give " + top.matrix().str() +
              ", expected " + want.matrix().str();
      }
    }
    out.push_back(make("nilpotency" + nsuf(n), ok,
                       "2n+1 brackets with x kill every operator, while the "
                       "n-th power of the order-two generator survives "
                       "exactly 2n brackets with value (2n)! x^n",
                       wit));
  }
  return out;
}

std::vector<Check> battery_grothendieck(int n_min, int n_max,
                                        std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    Rng rng(mix(seed, 1000 + static_cast<std::uint64_t>(n)));
    bool ok = true;
    std::string wit;
    for (int t = 0; t < 100 && ok; ++t) {
      Endo d = random_endo(n, rng);
      int p = order_of(d);
      for (int u = 0; u < 20 && ok; ++u) {
        std::vector<TruncPoly> fs;
        fs.reserve(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) fs.push_back(random_monomial(n, rng));
        if (!grothendieck_check(d, p, fs)) {
          ok = false;
          wit = "sample " + std::to_string(t) + ", tuple " +
                std::to_string(u) + ": p+1 nested brackets do not vanish at "
                "p = " + std::to_string(p);
        }
      }
      if (ok && p >= 1) {
        std::vector<TruncPoly> xs(static_cast<std::size_t>(p),
                                  TruncPoly::monomial(n, 1));
        if (grothendieck_check(d, p - 1, xs)) {
          ok = false;
          wit = "sample " + std::to_string(t) +
                ": the all-x tuple already vanishes at p-1 although the "
                "bracket order is " + std::to_string(p);
        }
      }
    }
    out.push_back(make("grothendieck" + nsuf(n), ok,
                       "nested brackets with multiplication operators vanish "
                       "exactly beyond the bracket-with-x order (100 seeded "
                       "operators, 20 tuples each)",
                       wit));
  }
  return out;
}

std::vector<Check> battery_symbols(int n_min, int n_max, std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    Rng rng(mix(seed, 2000 + static_cast<std::uint64_t>(n)));
    bool mul_ok = true, val_ok = true;
    std::string mul_wit, val_wit;
    for (int t = 0; t < 100 && (mul_ok || val_ok); ++t) {
      Endo a = random_endo(n, rng);
      Endo b = random_endo(n, rng);
      SymbolValue sa = symbol_of(a);
      SymbolValue sb = symbol_of(b);
      for (const SymbolValue& s : {sa, sb})
        if (val_ok && s.order >= 1 &&
            s.value.valuation() < ceil_half(s.order)) {
          val_ok = false;
          val_wit = "sample " + std::to_string(t) + ": order " +
                    std::to_string(s.order) + " multiplier " + s.value.str() +
                    " has valuation below ceil(p/2)";
        }
      if (!mul_ok) continue;
      Endo prod = a * b;
      int pq = sa.order + sb.order;
      Endo top = ad_x_pow(prod, pq) * (Rat(1) / rat_factorial(pq));
      if (top != mult_op(sa.value * sb.value)) {
        mul_ok = false;
        mul_wit = "sample " + std::to_string(t) +
                  ": normalized top bracket power of the product differs "
                  "from multiplication by the product of multipliers";
      } else if (!prod.is_zero() && order_of(prod) > pq) {
        mul_ok = false;
        mul_wit = "sample " + std::to_string(t) +
                  ": product order exceeds the sum of the factor orders";
      }
    }
    out.push_back(make("symbol-multiplicativity" + nsuf(n), mul_ok,
                       "the top bracket power of a product is multiplication "
                       "by the product of the two principal multipliers "
                       "(100 seeded pairs)",
                       mul_wit));
    out.push_back(make("symbol-valuation" + nsuf(n), val_ok,
                       "principal multipliers at bracket order p vanish to "
                       "order at least ceil(p/2)",
                       val_wit));
  }
  return out;
}

std::vector<Check> battery_sl2(int n_min, int n_max) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    Distinguished d = distinguished(n);
    bool rel = comm(d.delta0, d.delta1) == d.delta0 &&
               comm(d.delta0, d.delta2) == d.delta1 * Rat(2) &&
               comm(d.delta1, d.delta2) == d.delta2;
    out.push_back(make("sl2-relations" + nsuf(n), rel,
                       "the distinguished triple satisfies [d0,d1] = d0, "
                       "[d0,d2] = 2 d1, [d1,d2] = d2",
                       "a bracket relation fails"));
    bool cas = true;
    std::string cwit;
    try {
      Rat scalar = casimir_scalar(n);
      Rat want = rat(n, 2) * (rat(n, 2) + Rat(1));
      if (scalar != want) {
        cas = false;
        cwit = "pairwise scalar " + rat_str(scalar) + ", expected " +
               rat_str(want);
      }
      Endo img = distinguished_hom(n, casimir());
      if (cas && img != Endo::identity(n) * Rat(n * (n + 2))) {
        cas = false;
        cwit = "enveloping evaluation of the central element is not n(n+2) "
               "times the identity";
      }
    } catch (const Error& e) {
      cas = false;
      cwit = e.what();
    }
    out.push_back(make("sl2-casimir" + nsuf(n), cas,
                       "the quadratic central element acts by (n/2)(n/2+1) "
                       "in the pairwise form and by n(n+2) through the "
                       "enveloping evaluation",
                       cwit));
    if (n == 0) {
      bool degen = d.delta0.is_zero() && d.delta1.is_zero() &&
                   d.delta2.is_zero();
      out.push_back(make("sl2-degenerate(n=0)", degen,
                         "all three distinguished operators vanish on the "
                         "one-dimensional quotient",
                         "a distinguished operator is nonzero at n = 0"));
    } else {
      SymbolValue s0 = symbol_of(d.delta0);
      SymbolValue s1 = symbol_of(d.delta1);
      SymbolValue s2 = symbol_of(d.delta2);
      TruncPoly x = TruncPoly::monomial(n, 1);
      bool sym = s0.order == 0 && s1.order == 1 && s2.order == 2 &&
                 s0.value == x && s1.value == x && s2.value == x;
      out.push_back(make("sl2-symbols" + nsuf(n), sym,
                         "the distinguished triple has bracket orders 0, 1, 2 "
                         "and principal multiplier x in every case",
                         "orders " + std::to_string(s0.order) + "," +
                             std::to_string(s1.order) + "," +
                             std::to_string(s2.order) + " with multipliers " +
                             s0.value.str() + "; " + s1.value.str() + "; " +
                             s2.value.str()));
    }
  }
  return out;
}

std::vector<Check> battery_theorem1(int n_min, int n_max) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    Theorem1Record rec = theorem1_iso(n);
    out.push_back(make("theorem1-iso" + nsuf(n),
                       rec.dims_match && rec.brackets_match,
                       "the graded cone quotient and the operator filtration "
                       "have matching per-degree dimensions and structure "
                       "constants",
                       rec.witness));
    int sum = 0;
    for (int v : rec.slice_dims) sum += v;
    out.push_back(make("hilbert-sum" + nsuf(n), sum == (n + 1) * (n + 1),
                       "graded dimensions sum to (n+1)^2",
                       "sum " + std::to_string(sum)));
    bool hom_ok = true;
    std::string hwit;
    try {
      HomReport hr = check_poisson_hom(theorem1_map(n));
      hom_ok = hr.ok;
      hwit = hr.witness;
    } catch (const Error& e) {
      hom_ok = false;
      hwit = e.what();
    }
    out.push_back(make("cone-quotient-hom" + nsuf(n), hom_ok,
                       "the quotient onto the truncated cone algebra "
                       "preserves brackets and degrees",
                       hwit));
  }
  return out;
}

std::vector<Check> battery_theorem2(int n_min, int n_max, std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = n_min; n <= n_max; ++n) {
    SurjectivityResult s = surjectivity_check(n);
    out.push_back(make("spanning-rank" + nsuf(n),
                       s.surjective && s.rank == (n + 1) * (n + 1),
                       "the (n+1)^2 ordered monomial images span the full "
                       "matrix algebra",
                       "rank " + std::to_string(s.rank) + " of " +
                           std::to_string((n + 1) * (n + 1))));
    bool epow = distinguished_hom(n, PBWOp::monomial(n + 1, 0, 0)).is_zero();
    out.push_back(make("e-power-vanishes" + nsuf(n), epow,
                       "the (n+1)-st power of the degree-zero generator acts "
                       "by zero",
                       "e^(n+1) image is nonzero"));
    Rng rng(mix(seed, 3000 + static_cast<std::uint64_t>(n)));
    std::vector<PBWOp> samples;
    for (int t = 0; t < 30; ++t) {
      int c = rng.next_int(1, 3) * (rng.next_int(0, 1) ? 1 : -1);
      samples.push_back(PBWOp::monomial(rng.next_int(0, 3), rng.next_int(0, 3),
                                        rng.next_int(0, 3), Rat(c)));
    }
    for (int t = 0; t < 10; ++t)
      samples.push_back(samples[static_cast<std::size_t>(rng.next_int(0, 29))] *
                        samples[static_cast<std::size_t>(rng.next_int(0, 29))]);
    bool compat = filtration_compat_check(n, samples);
    out.push_back(make("pbw-filtration-compat" + nsuf(n), compat,
                       "evaluation maps each sample into bracket order at "
                       "most its weighted degree (weights 0, 1, 2)",
                       "a sample image exceeds its weighted degree"));
  }
  return out;
}

std::vector<Check> battery_inverse_system(int n_min, int n_max,
                                          int degree_bound) {
  std::vector<Check> out;
  int db = std::min(degree_bound, 4);
  for (int n = n_min; n <= n_max; ++n) {
    bool ok = true;
    std::string wit;
    try {
      AlgebraMap m = inverse_system_map(n);
      HomReport hr = check_poisson_hom(m, db);
      if (!hr.ok) {
        ok = false;
        wit = hr.witness;
      }
      for (int i = 0; ok && i < 3; ++i)
        if (m.images()[static_cast<std::size_t>(i)] !=
            PolyElement::generator(m.target(), i)) {
          ok = false;
          wit = "generator image is not the corresponding generator";
        }
    } catch (const Error& e) {
      ok = false;
      wit = e.what();
    }
    out.push_back(make("inverse-system-hom" + nsuf(n), ok,
                       "restriction to the smaller quotient is a surjective "
                       "bracket- and degree-preserving map",
                       wit));
    bool zs_ok = true;
    std::string zwit;
    try {
      auto [inc, proj] = zero_section_and_projection(n);
      HomReport inc_hom = check_poisson_hom(inc);
      if (!inc_hom.ok) {
        zs_ok = false;
        zwit = inc_hom.witness;
      }
      AlgebraMap round = AlgebraMap::compose(proj, inc);
      if (zs_ok &&
          round.images()[0] != PolyElement::generator(inc.source(), 0)) {
        zs_ok = false;
        zwit = "the projection does not split the inclusion";
      }
      if (zs_ok && (!proj.images()[1].is_zero() || !proj.images()[2].is_zero())) {
        zs_ok = false;
        zwit = "the projection does not annihilate positive degrees";
      }
      out.push_back(make("zero-section" + nsuf(n), zs_ok,
                         "the base inclusion splits the projection onto "
                         "bracket-order zero",
                         zwit));
      if (n >= 1) {
        HomReport proj_hom = check_poisson_hom(proj);
        out.push_back(make("projection-not-poisson" + nsuf(n), !proj_hom.ok,
                           "the projection onto the base annihilates positive "
                           "degrees but cannot preserve brackets",
                           "the projection unexpectedly preserves brackets"));
      }
    } catch (const Error& e) {
      out.push_back(make("zero-section" + nsuf(n), false,
                         "the base inclusion splits the projection onto "
                         "bracket-order zero",
                         e.what()));
    }
  }
  return out;
}

std::vector<Check> battery_quotient_invariants(std::uint64_t seed) {
  std::vector<Check> out;

  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < 200 && ok; ++t) {
      Rng gen(mix(seed, 4000 + static_cast<std::uint64_t>(t)));
      PresPtr p = (t % 2) ? truncated_cone(5) : nilpotent_cone();
      auto random_terms = [&](int count) {
        TermMap m;
        for (int i = 0; i < count; ++i) {
          Exps e = {gen.next_int(0, 3), gen.next_int(0, 3), gen.next_int(0, 2)};
          int c = gen.next_int(1, 3) * (gen.next_int(0, 1) ? 1 : -1);
          auto it = m.find(e);
          if (it == m.end())
            m.emplace(std::move(e), Rat(c));
          else
            it->second += Rat(c);
        }
        return m;
      };
      TermMap a = random_terms(2), b = random_terms(2);
      TermMap prod;
      for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
          Exps e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
          auto it = prod.find(e);
          if (it == prod.end())
            prod.emplace(std::move(e), ca * cb);
          else
            it->second += ca * cb;
        }
      TermMap base = reduce_terms(*p, prod);
      Rng r1(mix(seed, 5000 + static_cast<std::uint64_t>(t)));
      Rng r2(mix(seed, 6000 + static_cast<std::uint64_t>(t)));
      if (base != reduce_terms(*p, prod, &r1) ||
          base != reduce_terms(*p, prod, &r2)) {
        ok = false;
        wit = "product " + std::to_string(t) +
              " reduces differently under randomized orders";
      }
    }
    out.push_back(make("rewrite-confluence", ok,
                       "normal forms of 200 random products do not depend on "
                       "the rewrite order",
                       wit));
  }

  // Planes enter untruncated: their length truncation is not a
  // Poisson ideal (see plane-ideal-not-poisson below), so the
  // truncated plane bracket is not expected to satisfy Jacobi.
  std::vector<PresPtr> shipped = {nilpotent_cone(),
                                  free_coadjoint(),
                                  truncated_cone(4),
                                  symplectic_plane(Side::line, 0),
                                  symplectic_plane(Side::dual_line, 0),
                                  line_functions(4)};

  {
    bool ok = true;
    std::string wit;
    for (const PresPtr& p : shipped) {
      std::string w;
      if (!rule_brackets_vanish(p, &w)) {
        ok = false;
        wit = p->name() + ": " + w;
      }
    }
    out.push_back(make("rule-brackets-vanish", ok,
                       "relation differences bracket to zero with every "
                       "generator in every shipped presentation",
                       wit));
  }

  {
    bool ok = true;
    std::string wit;
    for (int n = 1; n <= 5 && ok; ++n) {
      std::string w;
      if (!killed_brackets_stay_killed(truncated_cone(n), &w)) {
        ok = false;
        wit = "cone quotient n=" + std::to_string(n) + ": " + w;
      }
    }
    if (ok) {
      std::string w;
      if (!killed_brackets_stay_killed(line_functions(4), &w)) {
        ok = false;
        wit = "base quotient: " + w;
      }
    }
    out.push_back(make("killed-brackets", ok,
                       "truncation ideals of the cone and base quotients are "
                       "stable under generator brackets",
                       wit));
  }

  {
    std::string w;
    bool stable = killed_brackets_stay_killed(symplectic_plane(Side::line, 6), &w);
    out.push_back(make("plane-ideal-not-poisson", !stable,
                       "the length truncation of the symplectic plane is not "
                       "bracket-stable, which is why the plane quotients "
                       "carry no induced bracket",
                       "the plane truncation ideal is unexpectedly stable"));
  }

  {
    bool ok = true;
    std::string wit;
    for (std::size_t pi = 0; pi < shipped.size() && ok; ++pi) {
      const PresPtr& p = shipped[pi];
      Rng rng(mix(seed, 7000 + pi));
      auto sample = [&]() {
        for (int tries = 0; tries < 100; ++tries) {
          Exps e(static_cast<std::size_t>(p->var_count()));
          for (int i = 0; i < p->var_count(); ++i) e[static_cast<std::size_t>(i)] = rng.next_int(0, 3);
          if (p->weighted_degree(e) <= 6 &&
              (p->trunc_len() == 0 || p->length(e) < p->trunc_len()))
            return PolyElement::monomial(p, e);
        }
        return PolyElement::constant(p, Rat(1));
      };
      for (int t = 0; t < 30 && ok; ++t) {
        PolyElement a = sample(), b = sample(), c = sample();
        PolyElement jac = poisson_bracket(a, poisson_bracket(b, c)) +
                          poisson_bracket(b, poisson_bracket(c, a)) +
                          poisson_bracket(c, poisson_bracket(a, b));
        if (!jac.is_zero()) {
          ok = false;
          wit = p->name() + ": cyclic sum " + jac.str() + " on (" + a.str() +
                ", " + b.str() + ", " + c.str() + ")";
        }
      }
    }
    out.push_back(make("jacobi", ok,
                       "the cyclic bracket sum vanishes on 30 sampled "
                       "monomial triples of weighted degree at most 6 per "
                       "presentation",
                       wit));
  }

  {
    bool ok = true;
    std::string wit;
    for (std::size_t pi = 0; pi < shipped.size() && ok; ++pi) {
      const PresPtr& p = shipped[pi];
      Rng rng(mix(seed, 8000 + pi));
      for (int t = 0; t < 50 && ok; ++t) {
        Exps ea(static_cast<std::size_t>(p->var_count()));
        Exps eb(static_cast<std::size_t>(p->var_count()));
        for (int i = 0; i < p->var_count(); ++i) {
          ea[static_cast<std::size_t>(i)] = rng.next_int(0, 2);
          eb[static_cast<std::size_t>(i)] = rng.next_int(0, 2);
        }
        PolyElement a = PolyElement::monomial(p, ea);
        PolyElement b = PolyElement::monomial(p, eb);
        if (a.is_zero() || b.is_zero()) continue;
        int da = 0, db_ = 0;
        if (!a.is_homogeneous(&da) || !b.is_homogeneous(&db_)) continue;
        PolyElement br = poisson_bracket(a, b);
        int dd = 0;
        if (!br.is_zero() &&
            (!br.is_homogeneous(&dd) || dd != da + db_ - 1)) {
          ok = false;
          wit = p->name() + ": bracket of degrees " + std::to_string(da) +
                " and " + std::to_string(db_) + " is " + br.str();
        }
      }
    }
    out.push_back(make("graded-leibniz", ok,
                       "brackets of homogeneous elements are homogeneous of "
                       "the summed degree minus one, or zero",
                       wit));
  }

  return out;
}

std::vector<Check> battery_ideal_brackets(int trunc) {
  std::vector<Check> out;
  int hi = std::min(8, trunc - 1);
  bool ok = true, sharp_everywhere = true;
  std::string wit, sharp_wit;
  int pairs = 0;
  for (int a = 1; a < hi; ++a)
    for (int b = 1; a + b <= hi; ++b) {
      if (a + b < 3) continue;
      ++pairs;
      if (!ideal_bracket_check(a, b, trunc) && ok) {
        ok = false;
        wit = "pair (" + std::to_string(a) + ", " + std::to_string(b) +
              ") produces a bracket below total exponent a+b-2";
      }
      int m = ideal_bracket_min_length(a, b, trunc);
      if (m != a + b - 2 && sharp_everywhere) {
        sharp_everywhere = false;
        sharp_wit = "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") has minimal bracket exponent " + std::to_string(m);
      }
    }
  out.push_back(make("ideal-brackets", ok,
                     "generator brackets of the a-th and b-th powers of the "
                     "origin ideal land in the (a+b-2)-nd power, for all "
                     "3 <= a+b <= " + std::to_string(hi),
                     wit));
  if (pairs > 0) {
    Check noted;
    noted.name = "ideal-bound-printed";
    noted.anchor =
        "the stated inclusion exponent a+b-1 overshoots the sharp exponent "
        "a+b-2";
    if (sharp_everywhere) {
      noted.status = CheckStatus::noted_discrepancy;
      noted.witness =
          "every pair in range realizes a bracket of total exponent exactly "
          "a+b-2, one below the stated exponent a+b-1; for example the "
          "bracket of x0^2 with x0*x1 is -2*x0^2";
    } else {
      noted.status = CheckStatus::fail;
      noted.witness = sharp_wit;
    }
    out.push_back(std::move(noted));
  }
  return out;
}

std::vector<Check> battery_uniqueness(int trunc, int degree_bound) {
  std::vector<Check> out;
  UniquenessRecord rec = uniqueness_solver(trunc, degree_bound);
  out.push_back(make("solver-unique", rec.outcome == SolveOutcome::unique,
                     "the bracket conditions determine the connecting "
                     "coefficient series uniquely at this truncation",
                     rec.witness));
  std::string coeffs;
  for (const Rat& c : rec.h_coeffs)
    coeffs += (coeffs.empty() ? "" : " ") + rat_str(c);
  out.push_back(make("h-constant-minus-one", rec.h_is_minus_one,
                     "the unique multiplier series is the constant -1",
                     "solved coefficients: " + coeffs));
  out.push_back(make("higher-conditions", rec.full_conditions_hold,
                     "the remaining two bracket conditions hold for the "
                     "solved multiplier by substitution",
                     rec.witness));
  out.push_back(make("matches-resolution", rec.equals_resolution_map,
                     "the solved map reproduces the resolution images x0, "
                     "-x0*x1, x0*x1^2",
                     "solved images differ from the resolution map"));
  UniquenessRecord first = uniqueness_solver(trunc, degree_bound, true);
  out.push_back(make("first-condition-pins",
                     first.outcome == SolveOutcome::unique &&
                         first.h_is_minus_one,
                     "the first bracket condition alone already pins the "
                     "multiplier to -1",
                     first.witness));
  return out;
}

std::vector<Check> battery_diamond(int degree_bound) {
  std::vector<Check> out;
  int db = std::min(degree_bound, 5);
  struct Named {
    const char* name;
    AlgebraMap map;
    const char* anchor;
  };
  std::vector<Named> maps;
  maps.push_back({"resolution-poisson", resolution_map(),
                  "the cone resolution preserves brackets and degrees"});
  maps.push_back({"cone-quotient-poisson", cone_quotient_map(),
                  "the quotient onto the cone preserves brackets and degrees"});
  maps.push_back({"fourier-poisson", classical_fourier(1),
                  "the sign-swap plane isomorphism preserves brackets and "
                  "degrees"});
  maps.push_back({"moment-map-poisson", bir_moment_map(),
                  "the birational moment map preserves brackets and degrees"});
  for (const Named& nm : maps) {
    HomReport hr = check_poisson_hom(nm.map, db);
    out.push_back(make(nm.name, hr.ok, nm.anchor, hr.witness));
  }

  DiamondRecord rec = diamond_check();
  {
    std::string wit;
    for (int i = 0; i < 3; ++i)
      wit += (i ? "; " : "") + rec.left_images[static_cast<std::size_t>(i)] +
             " vs " + rec.right_images[static_cast<std::size_t>(i)];
    out.push_back(make("diamond-commutes", rec.commutes,
                       "both composites from the free bracket algebra to the "
                       "plane agree on every generator",
                       wit));
  }
  {
    PresPtr plane = symplectic_plane(Side::line, 0);
    AlgebraMap left = AlgebraMap::compose(resolution_map(), cone_quotient_map());
    bool imgs = left.images()[0] == PolyElement::monomial(plane, {1, 0}) &&
                left.images()[1] == PolyElement::monomial(plane, {1, 1}, Rat(-1)) &&
                left.images()[2] == PolyElement::monomial(plane, {1, 2});
    out.push_back(make("diamond-images", imgs,
                       "the common composite sends the generators to x0, "
                       "-x0*x1, x0*x1^2",
                       left.describe()));
  }
  {
    HomReport printed_hom = check_poisson_hom(bir_moment_map_printed());
    Check c;
    c.name = "printed-moment-sign";
    c.anchor =
        "flipping the sign of the middle moment-map image breaks both the "
        "bracket compatibility and the commutativity of the square";
    if (!rec.printed_variant_commutes && !printed_hom.ok) {
      c.status = CheckStatus::noted_discrepancy;
      c.witness = rec.printed_witness +
                  "; the flipped map also fails bracket compatibility on " +
                  printed_hom.witness;
    } else {
      c.status = CheckStatus::fail;
      c.witness = "the sign-flipped variant unexpectedly passes";
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> battery_quantum_diamond() {
  std::vector<Check> out;
  Side dual = Side::dual_line;
  Side line = Side::line;

  {
    Sl2Triple t = sl2_birational_images();
    bool ok = t.e == WeylOp::monomial(dual, 0, 1, Rat(-1)) &&
              t.h == WeylOp::monomial(dual, 1, 1, Rat(-2)) &&
              t.f == WeylOp::monomial(dual, 2, 1, Rat(1));
    out.push_back(make("dual-sl2-images", ok,
                       "the dual-side operator triple is (-Dh, -2*xh*Dh, "
                       "xh^2*Dh)",
                       t.e.str() + "; " + t.h.str() + "; " + t.f.str()));
  }

  bool line_ok = true;
  std::string line_wit;
  try {
    Sl2Triple t = sl2_line_images();
    WeylOp e_want = WeylOp::monomial(line, 1, 0, Rat(1));
    WeylOp h_want = WeylOp::monomial(line, 1, 1, Rat(2));
    h_want.add_term(0, 0, Rat(2));
    WeylOp f_want = WeylOp::monomial(line, 1, 2, Rat(-1));
    f_want.add_term(0, 1, Rat(-2));
    if (t.e != e_want || t.h != h_want || t.f != f_want) {
      line_ok = false;
      line_wit = t.e.str() + "; " + t.h.str() + "; " + t.f.str();
    }
    WeylOp cas = t.h * t.h + (t.e * t.f + t.f * t.e) * Rat(2);
    if (line_ok && !cas.is_zero()) {
      line_ok = false;
      line_wit = "central element image " + cas.str();
    }
  } catch (const Error& e) {
    line_ok = false;
    line_wit = e.what();
  }
  out.push_back(make("line-sl2-images", line_ok,
                     "the transformed triple is (x, 2*x*D+2, -x*D^2-2*D), "
                     "satisfies the bracket relations, and kills the "
                     "quadratic central element",
                     line_wit));

  {
    WeylOp e = WeylOp::monomial(line, 1, 0, Rat(1));
    WeylOp h = WeylOp::monomial(line, 1, 1, Rat(2));
    h.add_term(0, 0, Rat(2));
    WeylOp f_printed = WeylOp::monomial(line, 2, 2, Rat(-1));
    f_printed.add_term(0, 1, Rat(-2));
    WeylOp diff = wcomm(e, f_printed) - h;
    Check c;
    c.name = "printed-f-image";
    c.anchor =
        "the stated third image with quadratic coefficient fails the bracket "
        "relations; the derived image has coefficient x";
    if (!diff.is_zero()) {
      c.status = CheckStatus::noted_discrepancy;
      c.witness = "with f = " + f_printed.str() +
                  ", the defect [e,f] - h equals " + diff.str();
    } else {
      c.status = CheckStatus::fail;
      c.witness = "the stated image unexpectedly satisfies the relations";
    }
    out.push_back(std::move(c));
  }

  {
    bool ok = true;
    std::string wit;
    AlgebraMap cf = classical_fourier(1);
    for (int a = 0; a <= 6 && ok; ++a)
      for (int b = 0; b <= 6 && ok; ++b) {
        WeylOp u = WeylOp::monomial(dual, a, b);
        WeylOp v = quantum_fourier(u);
        if (coeff_degree(u) != weyl_order(v)) {
          ok = false;
          wit = "bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                "): coefficient degree " + std::to_string(coeff_degree(u)) +
                " but transformed operator order " +
                std::to_string(weyl_order(v));
          break;
        }
        PolyElement lhs = cf.apply(
            PolyElement::from_multipoly(cf.source(), coeff_symbol(u)));
        PolyElement rhs =
            PolyElement::from_multipoly(cf.target(), order_symbol(v));
        if (lhs != rhs) {
          ok = false;
          wit = "bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                "): " + lhs.str() + " vs " + rhs.str();
        }
      }
    out.push_back(make("symbol-descent", ok,
                       "top-slice symbols intertwine the operator transform "
                       "with the sign-swap plane isomorphism on all "
                       "bidegrees up to (6,6)",
                       wit));
  }

  {
    bool ok = true;
    std::string wit;
    try {
      descend_to_On(WeylOp::d_gen(line), 1);
      ok = false;
      wit = "the derivative unexpectedly acts on the order-1 quotient";
    } catch (const NotDescendable& e) {
      if (e.witness_power != 2) {
        ok = false;
        wit = "witness power " + std::to_string(e.witness_power) +
              ", expected 2";
      }
    }
    if (ok) {
      WeylOp xd = WeylOp::monomial(line, 1, 1);
      Endo got = descend_to_On(xd, 3);
      Endo want = mult_op(TruncPoly::monomial(3, 1)) * deriv_op(3);
      if (got != want) {
        ok = false;
        wit = "x*D does not act as expected on the order-3 quotient";
      }
    }
    out.push_back(make("descent-guard", ok,
                       "operators act on the quotient exactly when they "
                       "stabilize the defining ideal, with the smallest "
                       "escaping power reported",
                       wit));
  }

  return out;
}

VerificationReport run_suite(const SuiteParams& p) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), p.suite) == names.end())
    throw UsageError("unknown suite '" + p.suite + "'");
  if (p.n_min < 0 || p.n_min > p.n_max)
    throw UsageError("need 0 <= n_min <= n_max");
  if (p.degree_bound < 0) throw UsageError("degree bound must be nonnegative");
  bool wants_uniqueness = p.suite == "uniqueness" || p.suite == "all";
  if (wants_uniqueness && p.trunc < 3)
    throw UsageError("the uniqueness battery needs a truncation of at least 3");
  if (p.trunc < 0) throw UsageError("truncation must be nonnegative");

  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = p.suite;
  r.params = p;

  auto add = [&](std::vector<Check> v) {
    for (Check& c : v) r.checks.push_back(std::move(c));
  };
  auto on = [&](const char* name) {
    return p.suite == name || p.suite == "all";
  };

  if (on("filtration")) {
    add(battery_filtration_dims(p.n_min, p.n_max));
    add(battery_nilpotency(p.n_min, p.n_max));
    add(battery_grothendieck(p.n_min, std::min(p.n_max, 5), p.seed));
  }
  if (on("symbols"))
    add(battery_symbols(p.n_min, std::min(p.n_max, 6), p.seed));
  if (on("sl2")) add(battery_sl2(p.n_min, p.n_max));
  if (on("theorem1")) add(battery_theorem1(p.n_min, std::min(p.n_max, 8)));
  if (on("theorem2"))
    add(battery_theorem2(p.n_min, std::min(p.n_max, 6), p.seed));
  if (on("inverse-system")) {
    add(battery_inverse_system(p.n_min, std::min(p.n_max, 7), p.degree_bound));
    add(battery_quotient_invariants(p.seed));
    add(battery_ideal_brackets(p.trunc));
  }
  if (on("uniqueness")) add(battery_uniqueness(p.trunc, p.degree_bound));
  if (on("diamond")) add(battery_diamond(p.degree_bound));
  if (on("quantum-diamond")) add(battery_quantum_diamond());

  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

std::string compute_subject(const std::string& subject, int n,
                            const std::string& expr, const std::string& side) {
  if (n < 0) throw UsageError("n must be nonnegative");
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  if (subject == "v-table") {
    std::vector<int> vs;
    for (int q = 1; q <= 2 * n; ++q) vs.push_back(v_of(n, q));
    return join(vs);
  }
  if (subject == "filtration-dims") {
    std::vector<int> dims;
    for (int q = 0; q <= 2 * n; ++q)
      dims.push_back(static_cast<int>(filtration_basis(n, q).size()));
    return join(dims);
  }
  if (subject == "distinguished-matrices") {
    Distinguished d = distinguished(n);
    return "delta0 = " + d.delta0.matrix().str() + "\n" +
           "delta1 = " + d.delta1.matrix().str() + "\n" +
           "delta2 = " + d.delta2.matrix().str();
  }
  if (subject == "pbw-normal-form") {
    if (expr.empty()) throw UsageError("subject needs --expr");
    return parse_pbw(expr).str();
  }
  if (subject == "weyl-normal-form") {
    if (expr.empty()) throw UsageError("subject needs --expr");
    if (side != "line" && side != "dual")
      throw UsageError("side must be 'line' or 'dual'");
    return parse_weyl(expr, side == "line" ? Side::line : Side::dual_line)
        .str();
  }
  if (subject == "symbol") {
    if (expr.empty()) throw UsageError("subject needs --expr");
    WeylOp u = parse_weyl(expr, Side::line);
    SymbolValue s = symbol_of(descend_to_On(u, n));
    return "order " + std::to_string(s.order) + ", symbol " + s.value.str();
  }
  throw UsageError("unknown subject '" + subject + "'");
}

}  // namespace mdv
