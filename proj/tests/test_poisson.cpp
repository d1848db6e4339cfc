#include <doctest.h>

#include "mdv/errors.hpp"
#include "mdv/poisson.hpp"
#include "mdv/rng.hpp"

using namespace mdv;

TEST_CASE("generator bracket tables") {
  PresPtr cone = nilpotent_cone();
  PolyElement z0 = PolyElement::generator(cone, 0);
  PolyElement z1 = PolyElement::generator(cone, 1);
  PolyElement z2 = PolyElement::generator(cone, 2);
  CHECK(poisson_bracket(z0, z1) == z0);
  CHECK(poisson_bracket(z0, z2) == z1 * Rat(2));
  CHECK(poisson_bracket(z1, z2) == z2);
  CHECK(poisson_bracket(z1, z0) == z0 * Rat(-1));
  CHECK(poisson_bracket(z0, z0).is_zero());
  // Biderivation: {z0^2, z2} = 2 z0 {z0, z2} = 4 z0 z1.
  CHECK(poisson_bracket(z0 * z0, z2) ==
        PolyElement::monomial(cone, {1, 1, 0}, Rat(4)));

  PresPtr plane = symplectic_plane(Side::line, 0);
  PolyElement x0 = PolyElement::generator(plane, 0);
  PolyElement x1 = PolyElement::generator(plane, 1);
  CHECK(poisson_bracket(x0, x1) == PolyElement::constant(plane, Rat(-1)));
  CHECK(poisson_bracket(x0 * x0, x1) == x0 * Rat(-2));
}

TEST_CASE("rewrite rules and truncation") {
  PresPtr cone = nilpotent_cone();
  CHECK(PolyElement::monomial(cone, {0, 2, 0}) ==
        PolyElement::monomial(cone, {1, 0, 1}));
  CHECK(PolyElement::monomial(cone, {0, 3, 0}) ==
        PolyElement::monomial(cone, {1, 1, 1}));
  PresPtr tc = truncated_cone(2);
  CHECK(PolyElement::monomial(tc, {1, 1, 1}).is_zero());
  CHECK_FALSE(PolyElement::monomial(tc, {0, 2, 0}).is_zero());
  CHECK(*truncated_cone(2) == *truncated_cone(2));
  CHECK(*truncated_cone(2) != *truncated_cone(3));

  // Normal forms do not depend on the reduction order.
  TermMap raw;
  raw[{0, 4, 1}] = Rat(3);
  raw[{1, 2, 0}] = rat(-1, 2);
  TermMap base = reduce_terms(*cone, raw);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Rng rng(s);
    CHECK(reduce_terms(*cone, raw, &rng) == base);
  }
}

TEST_CASE("homogeneity and length embedding") {
  PresPtr cone = free_coadjoint();
  PolyElement a = PolyElement::monomial(cone, {1, 0, 0}) +
                  PolyElement::monomial(cone, {1, 0, 1}, Rat(5));
  int deg = -1;
  CHECK_FALSE(a.is_homogeneous(&deg));
  CHECK(PolyElement::monomial(cone, {1, 0, 1}).is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK(embed_by_length(a, 3) ==
        TruncPoly::monomial(3, 1) + TruncPoly::monomial(3, 2, Rat(5)));
}

TEST_CASE("normal monomial counts") {
  PresPtr tc = truncated_cone(1);
  CHECK(normal_monomials(*tc).size() == 4);  // (n+1)^2
  CHECK(graded_slice_dim(*tc, 0) == 2);
  CHECK(graded_slice_dim(*tc, 1) == 1);
  CHECK(graded_slice_dim(*tc, 2) == 1);
  auto mons = monomials_of_length(2, 2);
  CHECK(mons.size() == 3);
}

TEST_CASE("graded quotient matches the operator filtration") {
  Theorem1Record rec = theorem1_iso(2);
  CHECK(rec.slice_dims == std::vector<int>{3, 2, 2, 1, 1});
  CHECK(rec.matrix_dims == rec.slice_dims);
  CHECK(rec.dims_match);
  CHECK(rec.brackets_match);
}

TEST_CASE("map validation is eager") {
  PresPtr cone = nilpotent_cone();
  PresPtr plane = symplectic_plane(Side::line, 0);
  PolyElement x0 = PolyElement::generator(plane, 0);
  PolyElement x1 = PolyElement::generator(plane, 1);
  CHECK_THROWS_AS(AlgebraMap(cone, plane, {x0, x1}), Error);
  // z1^2 -> x1^2 but z0 z2 -> x0 x1^2: the relation does not map to 0.
  CHECK_THROWS_AS(AlgebraMap(cone, plane, {x0, x1, x1 * x1}), Error);
}

TEST_CASE("shipped maps have the stated images") {
  AlgebraMap res = resolution_map();
  PresPtr plane = res.target();
  CHECK(res.images()[0] == PolyElement::monomial(plane, {1, 0}));
  CHECK(res.images()[1] == PolyElement::monomial(plane, {1, 1}, Rat(-1)));
  CHECK(res.images()[2] == PolyElement::monomial(plane, {1, 2}));
  CHECK(check_poisson_hom(res, 3).ok);

  AlgebraMap cf = classical_fourier(1);
  CHECK(cf.images()[0] == PolyElement::generator(cf.target(), 1));
  CHECK(cf.images()[1] ==
        PolyElement::generator(cf.target(), 0) * Rat(-1));

  AlgebraMap mm = bir_moment_map();
  PresPtr dual = mm.target();
  CHECK(mm.images()[0] == PolyElement::monomial(dual, {0, 1}, Rat(-1)));
  CHECK(mm.images()[1] == PolyElement::monomial(dual, {1, 1}));
  CHECK(mm.images()[2] == PolyElement::monomial(dual, {2, 1}, Rat(-1)));
  CHECK(check_poisson_hom(mm, 3).ok);
  CHECK_FALSE(check_poisson_hom(bir_moment_map_printed()).ok);
}

TEST_CASE("restriction, section, projection") {
  AlgebraMap restr = inverse_system_map(2);
  for (int i = 0; i < 3; ++i)
    CHECK(restr.images()[i] == PolyElement::generator(restr.target(), i));
  CHECK(restr.apply(PolyElement::monomial(restr.source(), {2, 0, 1}))
            .is_zero());
  CHECK(check_poisson_hom(restr, 3).ok);

  auto [inc, proj] = zero_section_and_projection(2);
  CHECK(inc.images()[0] == PolyElement::generator(inc.target(), 0));
  CHECK(proj.images()[0] == PolyElement::generator(proj.target(), 0));
  CHECK(proj.images()[1].is_zero());
  CHECK(proj.images()[2].is_zero());
  CHECK(check_poisson_hom(inc).ok);
  CHECK_FALSE(check_poisson_hom(proj).ok);
  AlgebraMap round = AlgebraMap::compose(proj, inc);
  CHECK(round.images()[0] == PolyElement::generator(inc.source(), 0));
}

TEST_CASE("quotient bracket invariants") {
  CHECK(rule_brackets_vanish(nilpotent_cone()));
  CHECK(rule_brackets_vanish(truncated_cone(3)));
  CHECK(killed_brackets_stay_killed(truncated_cone(3)));
  CHECK(killed_brackets_stay_killed(line_functions(3)));
  std::string w;
  CHECK_FALSE(killed_brackets_stay_killed(symplectic_plane(Side::line, 5), &w));
  CHECK_FALSE(w.empty());
}

TEST_CASE("jacobi holds on the untruncated plane") {
  PresPtr dual = symplectic_plane(Side::dual_line, 0);
  PolyElement a = PolyElement::monomial(dual, {0, 1});
  PolyElement b = PolyElement::monomial(dual, {3, 1});
  PolyElement c = PolyElement::monomial(dual, {3, 3});
  PolyElement jac = poisson_bracket(a, poisson_bracket(b, c)) +
                    poisson_bracket(b, poisson_bracket(c, a)) +
                    poisson_bracket(c, poisson_bracket(a, b));
  CHECK(jac.is_zero());
}

TEST_CASE("connecting-series solver") {
  UniquenessRecord rec = uniqueness_solver(12, 8);
  CHECK(rec.outcome == SolveOutcome::unique);
  CHECK(rec.h_is_minus_one);
  CHECK(rec.full_conditions_hold);
  CHECK(rec.equals_resolution_map);
  REQUIRE(!rec.h_coeffs.empty());
  CHECK(rec.h_coeffs[0] == Rat(-1));
  for (std::size_t i = 1; i < rec.h_coeffs.size(); ++i)
    CHECK(rec.h_coeffs[i] == Rat(0));

  UniquenessRecord first = uniqueness_solver(12, 8, true);
  CHECK(first.outcome == SolveOutcome::unique);
  CHECK(first.h_is_minus_one);

  // Coefficients beyond the truncation's reach are unconstrained.
  CHECK(uniqueness_solver(12, 11).outcome == SolveOutcome::multiple_solutions);
  CHECK_THROWS_AS(uniqueness_solver(2, 1), TruncationTooSmall);
}

TEST_CASE("square of maps commutes with the derived sign only") {
  DiamondRecord rec = diamond_check();
  CHECK(rec.commutes);
  CHECK_FALSE(rec.printed_variant_commutes);
  CHECK_FALSE(rec.printed_witness.empty());
  REQUIRE(rec.left_images.size() == 3);
  CHECK(rec.left_images == rec.right_images);
}

TEST_CASE("ideal power brackets achieve exponent a+b-2") {
  CHECK(ideal_bracket_check(2, 2, 10));
  CHECK(ideal_bracket_check(2, 3, 10));
  CHECK(ideal_bracket_check(1, 2, 10));
  CHECK(ideal_bracket_min_length(2, 2, 10) == 2);
  CHECK(ideal_bracket_min_length(2, 3, 10) == 3);
  CHECK(ideal_bracket_min_length(1, 1, 10) == 0);  // {x0, x1} is a constant
}
