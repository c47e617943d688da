#include <doctest.h>

#include <optional>
#include <vector>

#include "pbasic/intlinalg.hpp"

using namespace pbasic;

namespace {

IntMat make_int(int rows, int cols, std::vector<long> vals) {
  IntMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = vals[size_t(r) * cols + c];
  return m;
}

RatMat make_rat(int rows, int cols, std::vector<Rational> vals) {
  RatMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = vals[size_t(r) * cols + c];
  return m;
}

}  // namespace

TEST_CASE("hnf: canonical form, unimodular transform, pivots") {
  IntMat m = make_int(2, 2, {2, 4, 1, 3});
  HnfResult h = hnf(m);
  CHECK(h.H == make_int(2, 2, {1, 1, 0, 2}));
  CHECK(h.rank() == 2);
  CHECK(h.pivot_cols == std::vector<int>{0, 1});
  CHECK(h.U.mul(m) == h.H);
  // U is unimodular: its own HNF is the identity
  CHECK(hnf(h.U).H == IntMat::identity(2));

  SUBCASE("zero rows sink to the bottom") {
    IntMat z = make_int(3, 2, {2, 4, 1, 2, 3, 6});  // rank 1
    HnfResult hz = hnf(z);
    CHECK(hz.rank() == 1);
    CHECK(hz.H == make_int(3, 2, {1, 2, 0, 0, 0, 0}));
    CHECK(hz.U.mul(z) == hz.H);
  }

  SUBCASE("negative pivots are flipped positive") {
    IntMat neg = make_int(1, 2, {-3, -6});
    CHECK(hnf(neg).H == make_int(1, 2, {3, 6}));
  }

  SUBCASE("entries above a pivot are reduced into [0, pivot)") {
    IntMat a = make_int(2, 2, {5, 7, 0, 3});
    HnfResult ha = hnf(a);
    CHECK(ha.H == make_int(2, 2, {5, 1, 0, 3}));
  }
}

TEST_CASE("hnf characterizes unimodularity and row-span equality") {
  CHECK(hnf(make_int(2, 2, {1, 1, 0, 1})).H == IntMat::identity(2));
  CHECK_FALSE(hnf(make_int(2, 2, {2, 0, 0, 1})).H == IntMat::identity(2));

  // {(1,1),(1,-1)} and {(1,1),(0,2)} span the same lattice;
  // {(1,0),(0,1)} is strictly bigger (index 2)
  RatMat a = make_rat(2, 2, {Rational(1), Rational(1), Rational(1), Rational(-1)});
  RatMat b = make_rat(2, 2, {Rational(1), Rational(1), Rational(0), Rational(2)});
  RatMat e = make_rat(2, 2, {Rational(1), Rational(0), Rational(0), Rational(1)});
  CHECK(z_span_equal(a, b));
  CHECK(z_span_equal(b, a));
  CHECK_FALSE(z_span_equal(a, e));
  CHECK_FALSE(z_span_equal(e, a));
}

TEST_CASE("solve_integral: membership in the row lattice with certificate") {
  RatMat a = make_rat(2, 2, {Rational(2), Rational(4), Rational(1), Rational(3)});

  auto x = solve_integral(a, {Rational(3), Rational(7)});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Integer>{1, 1});

  auto y = solve_integral(a, {Rational(1), Rational(1)});
  REQUIRE(y.has_value());
  CHECK(*y == std::vector<Integer>{1, -1});

  // (1,0) needs x = (3/2, -2): rational but not integral
  CHECK_FALSE(solve_integral(a, {Rational(1), Rational(0)}).has_value());

  // rational entries: scaling by column lcm's keeps relations intact
  RatMat q = make_rat(2, 2, {Rational(1, 2), Rational(1, 3),
                             Rational(1, 2), Rational(1)});
  auto z = solve_integral(q, {Rational(3, 2), Rational(7, 3)});
  REQUIRE(z.has_value());
  CHECK(*z == std::vector<Integer>{1, 2});
}

TEST_CASE("LatticeSolver: rank and dependence witness") {
  RatMat dep = make_rat(3, 2, {Rational(1), Rational(2),
                               Rational(2), Rational(4),
                               Rational(3), Rational(5)});
  LatticeSolver solver(dep);
  CHECK(solver.rank() == 2);
  auto witness = solver.dependence();
  REQUIRE(witness.has_value());
  // a non-zero integer combination of the rows vanishing identically
  bool nonzero = false;
  for (const Integer& c : *witness) nonzero = nonzero || c != 0;
  CHECK(nonzero);
  for (int col = 0; col < 2; ++col) {
    Rational acc = 0;
    for (int r = 0; r < 3; ++r) acc += Rational((*witness)[r]) * dep.at(r, col);
    CHECK(acc == 0);
  }

  RatMat indep = make_rat(2, 3, {Rational(1), Rational(0), Rational(0),
                                 Rational(0), Rational(1), Rational(1)});
  CHECK_FALSE(LatticeSolver(indep).dependence().has_value());
}

TEST_CASE("clear_columns scales each column to integers") {
  RatMat a = make_rat(2, 2, {Rational(1, 2), Rational(1, 3),
                             Rational(1, 4), Rational(1)});
  std::vector<Integer> scales;
  IntMat cleared = clear_columns(a, &scales);
  CHECK(scales == std::vector<Integer>{4, 3});
  CHECK(cleared == make_int(2, 2, {2, 1, 1, 3}));
}

TEST_CASE("rational rank") {
  CHECK(rank(make_rat(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)})) == 1);
  CHECK(rank(make_rat(2, 2, {Rational(1), Rational(2), Rational(2), Rational(5)})) == 2);
  CHECK(rank(RatMat(3, 3)) == 0);
}

TEST_CASE("solve_matrix: exact inverse-application over Q") {
  RatMat a = make_rat(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
  auto x = solve_matrix(a, RatMat::identity(2));
  REQUIRE(x.has_value());
  CHECK(a.mul(*x) == RatMat::identity(2));
  CHECK(x->at(0, 0) == Rational(-2));
  CHECK(x->at(1, 0) == Rational(3, 2));

  RatMat singular = make_rat(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
  CHECK_FALSE(solve_matrix(singular, RatMat::identity(2)).has_value());
}

TEST_CASE("permutation detection") {
  RatMat p = make_rat(2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
  CHECK(is_permutation_matrix(p));
  auto perm = as_permutation(p);
  REQUIRE(perm.has_value());
  CHECK(*perm == std::vector<int>{1, 0});

  CHECK_FALSE(as_permutation(make_rat(2, 2, {Rational(1), Rational(1),
                                             Rational(0), Rational(1)})).has_value());
  CHECK_FALSE(as_permutation(make_rat(2, 2, {Rational(1), Rational(0),
                                             Rational(1), Rational(0)})).has_value());
  CHECK(as_permutation(RatMat::identity(4)).value() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("matrix plumbing: identity, mul, transpose") {
  IntMat a = make_int(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(a.transposed() == make_int(3, 2, {1, 4, 2, 5, 3, 6}));
  CHECK(IntMat::identity(3).mul(a.transposed()) == a.transposed());
  RatMat r = RatMat::from_int(a);
  CHECK(r.at(1, 2) == Rational(6));
}
