#include "doctest.h"
#include "hodgelef/instances.hpp"
#include "hodgelef/morphic.hpp"
#include "support.hpp"

using namespace hodgelef;
using support::unit;

namespace {

bool check_passed(const ValidationReport& rep, const std::string& name) {
  const Check* c = rep.find(name);
  REQUIRE_MESSAGE(c != nullptr, name);
  return c->passed;
}

void require_all_true(const ConjectureReport& r) {
  CHECK(r.stmt2_dims);
  CHECK(r.stmt3_decomp);
  CHECK(r.stmt4_star);
  CHECK(r.stmt5_lambda);
  CHECK(r.stmt6_adjoint);
  CHECK(r.pairing_nondeg);
  CHECK(r.all_agree);
  CHECK(r.failures.empty());
}

void require_all_false(const ConjectureReport& r) {
  CHECK_FALSE(r.stmt2_dims);
  CHECK_FALSE(r.stmt3_decomp);
  CHECK_FALSE(r.stmt4_star);
  CHECK_FALSE(r.stmt5_lambda);
  CHECK_FALSE(r.stmt6_adjoint);
  CHECK_FALSE(r.pairing_nondeg);
  CHECK(r.all_agree);
  CHECK(r.pairing_implies_dims);
}

RandomBounds fourfold_bounds() {
  RandomBounds b;
  b.min_m = 4;
  b.max_m = 4;
  return b;
}

}  // namespace

TEST_CASE("filtration storage") {
  HodgeFrame f = k3(1).algebra.frame();
  MorphicFiltration m(f);
  CHECK(MorphicFiltration::stored_level(2, 1, 2));
  CHECK_FALSE(MorphicFiltration::stored_level(2, 2, 2));
  CHECK_FALSE(MorphicFiltration::stored_level(2, 0, 2));
  CHECK_THROWS_AS(m.set(2, 2, GMatrix::identity(22)), StructuralError);
  CHECK_THROWS_AS(m.set(1, 2, GMatrix::identity(3)), StructuralError);
  CHECK_THROWS_AS(m.span(1, 2), StructuralError);
  CHECK(m.span(0, 2).cols() == 0);
  CHECK(m.span(2, 2) == GMatrix::identity(22));
}

TEST_CASE("filtration validation") {
  LefschetzAlgebra p2 = projective_space(2).algebra;
  CHECK(validate_filtration(p2, MorphicFiltration::full(p2.frame())).passed());
  LefschetzAlgebra a = k3(1).algebra;
  CHECK(validate_filtration(a, MorphicFiltration::maximal(a.frame())).passed());
  for (const auto& c : validate_filtration(a, MorphicFiltration::full(a.frame())).checks)
    CHECK(c.passed == (c.name != "bound@t=1,k=2"));
  Instance k = k3(1);
  ValidationReport rep = validate_filtration(k.algebra, k.filtration);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << " " << c.detail);

  MorphicFiltration bad = k.filtration;
  bad.set(1, 2, hstack(k.filtration.span(1, 2), GMatrix::column(unit(22, 21))));
  ValidationReport br = validate_filtration(k.algebra, bad);
  CHECK_FALSE(check_passed(br, "bound@t=1,k=2"));
  CHECK_FALSE(br.passed());

  MorphicFiltration no_omega = k.filtration;
  no_omega.set(1, 2, GMatrix(22, 0));
  CHECK_FALSE(check_passed(validate_filtration(k.algebra, no_omega), "omega_algebraic"));

  CHECK_THROWS_AS(validate_filtration(k.algebra, MorphicFiltration::full(projective_space(2).algebra.frame())),
                  StructuralError);
}

TEST_CASE("morphic Hodge numbers") {
  Instance k = k3(1);
  HodgeTable full = morphic_hodge_numbers(k.algebra, k.filtration, 2);
  CHECK(full == k.algebra.frame().table());
  HodgeTable t1 = morphic_hodge_numbers(k.algebra, k.filtration, 1);
  CHECK(t1.at({1, 1}) == 1);
  CHECK(t1.at({2, 0}) == 0);
  CHECK(t1.at({0, 2}) == 0);

  Instance ab = abelian_surface(1);
  CHECK(morphic_hodge_numbers(ab.algebra, ab.filtration, 1).at({1, 1}) == 1);
}

TEST_CASE("subspace families") {
  Instance k = k3(1);
  SubspaceFamily eh = assemble_subfamily(k.algebra, k.filtration, FamilyKind::EH, 0);
  REQUIRE(eh.summands.size() == 3);
  CHECK(eh.summands[0].t == 0);
  CHECK(eh.summands[0].k == 0);
  CHECK(eh.summands[1].t == 1);
  CHECK(eh.summands[1].k == 2);
  CHECK(eh.summands[2].t == 2);
  CHECK(eh.summands[2].k == 4);
  CHECK(eh.gamma(1, 1) == 1);
  CHECK(eh.gamma(1, 0) == -1);
  CHECK(eh.in_degree(1) == nullptr);

  SubspaceFamily oh = assemble_subfamily(k.algebra, k.filtration, FamilyKind::OH, 0);
  CHECK(oh.gamma(1, 0) == 0);
  CHECK(oh.summands.size() == 2);

  SubspaceFamily lh = assemble_subfamily(k.algebra, k.filtration, FamilyKind::LH, 0, 1);
  CHECK(lh.summands.size() == 5);
  CHECK(lh.in_degree(3)->t == 2);

  SubspaceFamily top = assemble_subfamily(k.algebra, k.filtration, FamilyKind::EH, 1);
  for (const auto& s : top.summands) CHECK(rank(s.span) == k.algebra.betti(s.k));

  CHECK_THROWS_AS(assemble_subfamily(k.algebra, k.filtration, FamilyKind::EH, -1), PreconditionError);
}

TEST_CASE("morphic signatures") {
  Instance k = k3(1);
  CHECK(morphic_signature(k.algebra, k.filtration, 2).net() == -16);
  CHECK(morphic_signature(k.algebra, k.filtration, 1) == SignatureTriple{1, 0, 0});
  CHECK_THROWS_AS(morphic_signature(k.algebra, k.filtration, 0), PreconditionError);

  Instance ab = abelian_surface(1);
  CHECK(morphic_signature(ab.algebra, ab.filtration, 1).net() == 1);

  for (int h11 : {1, 4, 10}) {
    Instance s = surface(1, 2, h11, h11);
    CHECK(morphic_signature(s.algebra, s.filtration, 1).net() == 2 - h11);
  }
}

TEST_CASE("conjecture statements on model filtrations") {
  LefschetzAlgebra a = k3(1).algebra;
  for (FamilyKind kind : {FamilyKind::EH, FamilyKind::OH, FamilyKind::LH})
    require_all_true(conjecture_report(a, MorphicFiltration::full(a.frame()), kind, 0, 0));
  require_all_true(conjecture_report(a, MorphicFiltration::maximal(a.frame()), FamilyKind::EH, 0));

  for (int rho : {1, 5, 20}) {
    Instance k = k3(rho);
    require_all_true(conjecture_report(k.algebra, k.filtration, FamilyKind::EH, 0));
  }
}

TEST_CASE("conjecture statements fail together on a lifted fourfold") {
  Instance seven = random_instance(7, fourfold_bounds(), RandomMode::Arbitrary);
  REQUIRE(seven.algebra.m() == 4);
  CHECK(validate_filtration(seven.algebra, seven.filtration).passed());
  ConjectureReport r = conjecture_report(seven.algebra, seven.filtration, FamilyKind::OH, 0, 1);
  require_all_false(r);
  CHECK_FALSE(r.failures.empty());
  require_all_false(conjecture_report(seven.algebra, seven.filtration, FamilyKind::LH, 0, 1));

  Instance three = random_instance(3, fourfold_bounds(), RandomMode::Arbitrary);
  const MorphicFiltration& f = three.filtration;
  const std::size_t b2 = three.algebra.betti(2);
  CHECK(rank(f.span(1, 2)) < b2);
  CHECK(rank(f.span(3, 6)) == three.algebra.betti(6));
  require_all_false(conjecture_report(three.algebra, f, FamilyKind::EH, 0));
}

TEST_CASE("morphic Hodge index theorem") {
  Instance k = k3(1);
  MorphicIndexReport r0 = morphic_hodge_index(k.algebra, k.filtration, 0);
  CHECK(r0.level == 1);
  CHECK(r0.index.match);
  CHECK(r0.index.sigma_direct.net() == 1);
  CHECK(r0.sub_decomposition);
  CHECK(r0.sub_hard_lefschetz);
  CHECK(r0.sub_hodge_riemann);

  MorphicIndexReport r1 = morphic_hodge_index(k.algebra, k.filtration, 1);
  CHECK(r1.level == 2);
  CHECK(r1.index.sigma_direct.net() == -16);
  CHECK(r1.index.sigma_formula == -16);

  for (int r : {1, 2, 7}) {
    Instance q = hypersurface(1, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 19}}, r);
    MorphicIndexReport rep = morphic_hodge_index(q.algebra, q.filtration, 0);
    CHECK(rep.index.match);
    CHECK(rep.index.sigma_direct.net() == 2 - r);
    for (const auto& b : rep.index.e_blocks)
      if (b.p == 1 && b.q == 1 && b.k == 0) {
        CHECK(b.real_dim == static_cast<std::size_t>(r - 1));
        CHECK(b.sign == -1);
        CHECK(b.definite);
      }
  }

  Instance three = random_instance(3, fourfold_bounds(), RandomMode::Arbitrary);
  CHECK_THROWS_AS(morphic_hodge_index(three.algebra, three.filtration, 0), PreconditionError);
}
