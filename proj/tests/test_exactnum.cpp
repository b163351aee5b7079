#include "doctest.h"
#include "hodgelef/errors.hpp"
#include "hodgelef/exactnum.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hodgelef;

namespace {

GMatrix ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<GaussRational>> g;
  for (const auto& r : rows) g.emplace_back(r.begin(), r.end());
  return GMatrix::from_rows(g);
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-0/5")) == "0");
  GaussRational z = parse_gauss("1/2-3*i");
  CHECK(z.re() == Rational(1, 2));
  CHECK(z.im() == Rational(-3));
  CHECK(parse_gauss("i") == GaussRational::i());
  CHECK(parse_gauss("-i") == -GaussRational::i());
  CHECK(parse_gauss("2/3*i").im() == Rational(2, 3));
  for (const char* s : {"0", "5", "-1/2", "i", "-i", "1+i", "2/3-7/5*i", "4*i"})
    CHECK(parse_gauss(to_string(parse_gauss(s))) == parse_gauss(s));
  CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_gauss("1+2j"), StructuralError);
  CHECK_THROWS_AS(parse_gauss(""), StructuralError);
}

TEST_CASE("Gaussian rational field operations") {
  GaussRational a(Rational(1), Rational(2));
  GaussRational b(Rational(3), Rational(-1));
  CHECK(a * b == GaussRational(Rational(5), Rational(5)));
  CHECK((a / b) * b == a);
  CHECK(a * a.conj() == GaussRational(a.norm()));
  CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
  CHECK_THROWS(a / GaussRational(0));
}

TEST_CASE("rank and kernel") {
  SUBCASE("identity") {
    auto kr = mat_kernel_rank(GMatrix::identity(3));
    CHECK(kr.rank == 3);
    CHECK(kr.kernel.empty());
  }
  SUBCASE("zero map") {
    auto kr = mat_kernel_rank(GMatrix(2, 3));
    CHECK(kr.rank == 0);
    CHECK(kr.kernel.size() == 3);
  }
  SUBCASE("rank one") {
    auto kr = mat_kernel_rank(ints({{1, 2}, {2, 4}}));
    CHECK(kr.rank == 1);
    REQUIRE(kr.kernel.size() == 1);
    const GVector& v = kr.kernel[0];
    CHECK(v[0] * GaussRational(1) == v[1] * GaussRational(-2));
    CHECK_FALSE(is_zero(v));
  }
  SUBCASE("complex entries") {
    GMatrix m = GMatrix::from_rows({{1, GaussRational::i()}, {GaussRational::i(), -1}});
    CHECK(rank(m) == 1);
    auto kr = mat_kernel_rank(m);
    CHECK(is_zero(m * kr.kernel.at(0)));
  }
}

TEST_CASE("inverse, solve and spans") {
  GMatrix m = ints({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == GMatrix::identity(2));
  CHECK_FALSE(inverse(ints({{1, 2}, {2, 4}})));

  auto x = solve(m, GVector{3, 2});
  REQUIRE(x);
  CHECK(m * *x == GVector{3, 2});
  CHECK_FALSE(solve(ints({{1, 2}, {2, 4}}), GVector{1, 0}));

  GMatrix u = ints({{1, 0}, {0, 1}, {0, 0}});
  GMatrix w = ints({{1, 0}, {1, 0}, {0, 1}});
  CHECK(span_contains(u, ints({{3}, {4}, {0}})));
  CHECK_FALSE(span_contains(u, ints({{0}, {0}, {1}})));
  GMatrix both = intersect(u, w);
  CHECK(both.cols() == 1);
  CHECK(span_contains(both, ints({{1}, {1}, {0}})));
  CHECK(column_basis(ints({{1, 2, 0}, {2, 4, 1}})).cols() == 2);
}

TEST_CASE("Hermitian signature on fixed matrices") {
  CHECK(hermitian_signature(GMatrix::identity(4)) == SignatureTriple{4, 0, 0});
  CHECK(hermitian_signature(ints({{0, 1}, {1, 0}})) == SignatureTriple{1, 1, 0});
  CHECK(hermitian_signature(ints({{2, 1}, {1, -3}})) == SignatureTriple{1, 1, 0});
  CHECK(hermitian_signature(GMatrix(3, 3)) == SignatureTriple{0, 0, 3});
  GMatrix h = GMatrix::from_rows({{0, GaussRational::i()}, {-GaussRational::i(), 0}});
  CHECK(hermitian_signature(h) == SignatureTriple{1, 1, 0});
  CHECK_THROWS_AS(hermitian_signature(ints({{1, 2}, {3, 1}})), NotHermitianError);
  CHECK_THROWS_AS(hermitian_signature(GMatrix::from_rows({{GaussRational::i()}})), NotHermitianError);
}

TEST_CASE("congruence diagonalization is a congruence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = static_cast<std::size_t>(1 + trial % 5);
    GMatrix g = support::random_hermitian(rng, n, trial % 3 == 0 ? std::optional<std::size_t>(n / 2) : std::nullopt);
    auto cd = congruence_diagonalize(g);
    GMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = cd.diagonal[i];
    CHECK(cd.transform.adjoint() * g * cd.transform == d);
    CHECK(inverse(cd.transform));
  }
}

TEST_CASE("signature agrees with the characteristic polynomial oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto n = static_cast<std::size_t>(1 + trial % 6);
    auto cap = trial % 4 == 1 ? std::optional<std::size_t>(n > 1 ? n - 1 : 1) : std::nullopt;
    GMatrix g = support::random_hermitian(rng, n, cap);
    CHECK(hermitian_signature(g) == oracle::hermitian_inertia(g));
  }
}
