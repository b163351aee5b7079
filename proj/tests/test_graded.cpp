#include "doctest.h"
#include "hodgelef/errors.hpp"
#include "hodgelef/graded.hpp"
#include "hodgelef/instances.hpp"
#include "hodgelef/lefschetz.hpp"

using namespace hodgelef;

TEST_CASE("frames from Hodge tables") {
  HodgeFrame p2 = HodgeFrame::build({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}, 2);
  CHECK(p2.betti(0) == 1);
  CHECK(p2.betti(1) == 0);
  CHECK(p2.betti(2) == 1);
  CHECK(p2.betti(4) == 1);

  HodgeFrame k3 = HodgeFrame::build({{{0, 0}, 1}, {{1, 1}, 20}, {{2, 0}, 1}, {{0, 2}, 1}, {{2, 2}, 1}}, 2);
  CHECK(k3.betti(2) == 22);
  CHECK(k3.offset({0, 2}) == 0);
  CHECK(k3.offset({1, 1}) == 1);
  CHECK(k3.offset({2, 0}) == 21);
  CHECK(k3.block_indices({2, 0}) == std::vector<std::size_t>{21});
  CHECK(k3.blocks(2).size() == 3);
  CHECK(k3.hodge(3, 0) == 0);

  CHECK_THROWS_AS(HodgeFrame::build({{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 1}}, 1), StructuralError);
  CHECK_THROWS_AS(HodgeFrame::build({{{0, 0}, 1}, {{3, 0}, 1}, {{0, 3}, 1}}, 2), StructuralError);
  CHECK_THROWS_AS(HodgeFrame::build({{{0, 0}, 1}, {{1, 1}, -1}}, 1), StructuralError);
  CHECK_THROWS_AS(HodgeFrame::build({{{1, 1}, 1}}, 1), StructuralError);
}

TEST_CASE("block restriction") {
  HodgeFrame f = HodgeFrame::build({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}, 1);
  GVector v{2, 3};
  CHECK(restrict_to_block(f, 1, {1, 0}, v) == GVector{0, 3});
  BigradedVector bv{1, v};
  CHECK(bv.block(f, {0, 1}) == GVector{2});
}

TEST_CASE("real points of the projective plane and K3") {
  Instance p2 = projective_space(2);
  auto r = real_basis(p2.algebra, 2);
  REQUIRE(r.size() == 1);
  CHECK(r[0].coords == GVector{1});

  Instance k = k3(1);
  auto rb = real_basis(k.algebra, 2);
  CHECK(rb.size() == 22);
  GMatrix basis = real_basis_matrix(k.algebra, 2);
  CHECK(rank(basis) == 22);
  const GMatrix& c = k.algebra.conj(2);
  for (const auto& v : rb) CHECK(c * conj(v.coords) == v.coords);
}

TEST_CASE("odd degrees have full real dimension") {
  Instance ab = abelian_surface(1);
  for (int k : {1, 3}) CHECK(real_basis(ab.algebra, k).size() == ab.algebra.betti(k));
  auto fixed = conjugation_fixed_basis(ab.algebra.conj(1));
  CHECK(fixed.size() == 4);
}

TEST_CASE("real form recovers real points of a stable subspace") {
  Instance k = k3(1);
  RealForm rf = real_form(k.algebra, 2);
  GMatrix outer(22, 2);
  outer(0, 0) = 1;
  outer(21, 1) = 1;
  GMatrix pts = rf.points(outer);
  CHECK(pts.cols() == 2);
  for (std::size_t c = 0; c < 2; ++c) CHECK(k.algebra.conj(2) * conj(pts.col(c)) == pts.col(c));
  CHECK(span_contains(outer, pts));
}
