#include <filesystem>
#include <vector>

#include "doctest.h"

#include "detchain/errors.hpp"
#include "detchain/matrix.hpp"
#include "test_util.hpp"

using namespace detchain;
using testutil::matrix_of;

TEST_SUITE("matrix") {

TEST_CASE("minors agree with the Leibniz permutation sum") {
  Field fp = Field::prime(32003);
  SplitMix64 rng(91);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<Polynomial>> rows;
    for (int i = 0; i < 3; ++i) {
      std::vector<Polynomial> row;
      for (int j = 0; j < 3; ++j) {
        row.push_back(random_form(fp, 4, 1, rng));
      }
      rows.push_back(std::move(row));
    }
    PolyMatrix m = PolyMatrix::from_rows(fp, 4, rows);
    MinorCache cache(m);
    CHECK(determinant(m) == testutil::leibniz_det(m, {0, 1, 2}, {0, 1, 2}));
    CHECK(cache.minor({0, 2}, {1, 2}) ==
          testutil::leibniz_det(m, {0, 2}, {1, 2}));
    CHECK(cache.minor({1}, {0}) == m.entry(1, 0));
    CHECK(minor(m, {0, 1}, {0, 2}) ==
          testutil::leibniz_det(m, {0, 1}, {0, 2}));
  }
}

TEST_CASE("constant matrix determinant") {
  Field q = Field::rationals();
  PolyMatrix m = matrix_of(q, 1, {{"1", "2"}, {"3", "4"}});
  CHECK(determinant(m).str() == "-2");
}

TEST_CASE("storage normalizes to rows <= cols but logical shape survives") {
  Field q = Field::rationals();
  PolyMatrix tall = matrix_of(
      q, 8, {{"x0", "x1"}, {"x2", "x3"}, {"x4", "x5"}, {"x6", "x7"}});
  CHECK(tall.logical_rows() == 4);
  CHECK(tall.logical_cols() == 2);
  CHECK(tall.rows() == 2);  // stored
  CHECK(tall.cols() == 4);
  CHECK(tall.transposed());
  CHECK(tall.logical_entry(2, 1) == parse_polynomial(q, 8, "x5"));
  CHECK(tall.logical_grid()[3][0] == parse_polynomial(q, 8, "x6"));
}

TEST_CASE("t-homogeneity accepts additive layouts and catches mixtures") {
  Field q = Field::rationals();
  PolyMatrix good = generic_matrix(q, 3, 3);
  CHECK(check_t_homogeneous(good, 3).pass);

  PolyMatrix bad = matrix_of(q, 3, {{"x0", "x1"}, {"x2", "x0^2"}});
  THomogeneityReport rep = check_t_homogeneous(bad, 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.fail_size == 2);
  CHECK(rep.fail_rows == std::vector<int>{1, 2});
  CHECK(rep.fail_cols == std::vector<int>{1, 2});

  SplitMix64 rng(4);
  PolyMatrix rnd = random_forms_matrix(Field::prime(101), 3, {1, 2}, {0, 1, 1},
                                       rng.next(), 3);
  CHECK(check_t_homogeneous(rnd, 2).pass);
}

TEST_CASE("minor and ladder counts match the generator enumerations") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 3, 3);
  CHECK(minor_count(3, 3, 2) == 9);
  CHECK(ladder_minor_count(3, 3, 2) == 5);
  CHECK(minors_ideal(m, 2, MonomialOrder::grevlex()).generators().size() == 9);
  CHECK(ladder_minors_ideal(m, corner_ladder_mask(m), 2,
                            MonomialOrder::grevlex())
            .generators()
            .size() == 5);
  CHECK(minor_count(4, 6, 3) == 4 * 20);
  // ladder of t = m = n has no admitted minor at all
  PolyMatrix sq = generic_matrix(fp, 2, 2);
  CHECK(ladder_minor_count(2, 2, 2) == 0);
  CHECK(ladder_minors_ideal(sq, corner_ladder_mask(sq), 2,
                            MonomialOrder::grevlex())
            .generators()
            .empty());
}

TEST_CASE("ladder mask admits exactly the corner-avoiding rectangles") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 3, 3);
  LadderMask mask = corner_ladder_mask(m);
  CHECK(mask.admits({0, 1}, {0, 1}));
  CHECK(mask.admits({0, 2}, {0, 1}));
  CHECK_FALSE(mask.admits({1, 2}, {1, 2}));
  CHECK_FALSE(mask.admits({2}, {2}));
}

TEST_CASE("deletion uses logical 1-based indices on any storage") {
  Field q = Field::rationals();
  PolyMatrix tall = matrix_of(
      q, 8, {{"x0", "x1"}, {"x2", "x3"}, {"x4", "x5"}, {"x6", "x7"}});
  PolyMatrix o = delete_column(tall, 2);
  CHECK(o.logical_rows() == 4);
  CHECK(o.logical_cols() == 1);
  CHECK(o.logical_entry(1, 0) == parse_polynomial(q, 8, "x2"));
  PolyMatrix n = delete_row(tall, 1);
  CHECK(n.logical_rows() == 3);
  CHECK(n.logical_entry(0, 0) == parse_polynomial(q, 8, "x2"));
  PolyMatrix c = corner_submatrix(tall);
  CHECK(c.logical_rows() == 3);
  CHECK(c.logical_cols() == 1);
  CHECK(c.logical_entry(2, 0) == parse_polynomial(q, 8, "x4"));
  CHECK_THROWS_AS((void)delete_column(tall, 3), InputError);
  CHECK_THROWS_AS((void)delete_row(tall, 0), InputError);
}

TEST_CASE("generalized row ops preserve the minor ideal") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 3, 3);
  for (std::uint64_t seed : {1ULL, 2ULL, 9ULL}) {
    auto [opped, rec] = generalized_row_ops(m, seed);
    CHECK(rec.seed == seed);
    CHECK(rec.transform.size() == 3);
    CHECK(rec.degree_classes.size() == 1);  // generic rows share one class
    IdealHandle a = minors_ideal(m, 2, MonomialOrder::grevlex());
    IdealHandle b = minors_ideal(opped, 2, MonomialOrder::grevlex());
    CHECK(testutil::same_ideal(a, b));
    // determinism
    auto [opped2, rec2] = generalized_row_ops(m, seed);
    CHECK(opped.same_entries(opped2));
    (void)rec2;
  }
}

TEST_CASE("row ops respect degree classes on mixed layouts") {
  Field fp = Field::prime(32003);
  SplitMix64 rng(6);
  // rows of entry-degree 1 and 2: the transform must not mix them
  PolyMatrix m = random_forms_matrix(fp, 4, {1, 1, 2}, {0, 0}, rng.next(), 2);
  auto [opped, rec] = generalized_row_ops(m, 33);
  CHECK(rec.degree_classes.size() == 2);
  CHECK(check_t_homogeneous(opped, 2).pass);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(m.logical_entry(i, j).degree() ==
            opped.logical_entry(i, j).degree());
    }
  }
}

TEST_CASE("column ops mirror row ops through the transpose") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 2, 3);
  auto [opped, rec] = generalized_col_ops(m, 5);
  (void)rec;
  CHECK(opped.logical_rows() == 2);
  CHECK(opped.logical_cols() == 3);
  IdealHandle a = minors_ideal(m, 2, MonomialOrder::grevlex());
  IdealHandle b = minors_ideal(opped, 2, MonomialOrder::grevlex());
  CHECK(testutil::same_ideal(a, b));
}

TEST_CASE("hyper matrix puts the t-th power of the form in the ideal") {
  Field q = Field::rationals();
  Polynomial f = parse_polynomial(q, 2, "x0 + x1");
  PolyMatrix h = hyper_matrix(f, 2);
  IdealHandle ideal = minors_ideal(h, 2, MonomialOrder::grevlex());
  REQUIRE(ideal.generators().size() == 1);
  CHECK(ideal.generators()[0] == f * f);
  CHECK_THROWS_AS((void)hyper_matrix(Polynomial::zero(q, 2), 2), InputError);
  CHECK_THROWS_AS(
      (void)hyper_matrix(parse_polynomial(q, 2, "x0 + x1^2"), 2), InputError);
}

TEST_CASE("random forms are reproducible and respect the degree layout") {
  Field fp = Field::prime(32003);
  PolyMatrix a = random_forms_matrix(fp, 4, {1, 2}, {0, 1}, 77, 3);
  PolyMatrix b = random_forms_matrix(fp, 4, {1, 2}, {0, 1}, 77, 3);
  CHECK(a.same_entries(b));
  CHECK(a.logical_entry(0, 0).degree() == 1);
  CHECK(a.logical_entry(0, 1).degree() == 2);
  CHECK(a.logical_entry(1, 0).degree() == 2);
  CHECK(a.logical_entry(1, 1).degree() == 3);
  PolyMatrix c = random_forms_matrix(fp, 4, {1, 2}, {0, 1}, 78, 3);
  CHECK_FALSE(a.same_entries(c));
}

TEST_CASE("matrix text format round-trips") {
  Field fp = Field::prime(32003);
  for (PolyMatrix m :
       {generic_matrix(fp, 2, 3), random_forms_matrix(fp, 3, {1, 1, 2}, {0, 1},
                                                      13, 2),
        matrix_of(Field::rationals(), 2, {{"x0 - 1", "x1"}, {"0", "x0"}})}) {
    PolyMatrix back = parse_matrix_text(matrix_to_text(m));
    CHECK(back.field() == m.field());
    CHECK(back.num_vars() == m.num_vars());
    REQUIRE(back.logical_rows() == m.logical_rows());
    REQUIRE(back.logical_cols() == m.logical_cols());
    CHECK(back.same_entries(m));
  }
  // tall matrices keep their logical orientation through the file
  PolyMatrix tall = matrix_of(Field::rationals(), 6,
                              {{"x0", "x1"}, {"x2", "x3"}, {"x4", "x5"}});
  PolyMatrix back = parse_matrix_text(matrix_to_text(tall));
  CHECK(back.logical_rows() == 3);
  CHECK(back.same_entries(tall));

  auto path = std::filesystem::temp_directory_path() / "detchain_mat_rt.txt";
  write_matrix_file(tall, path.string());
  CHECK(read_matrix_file(path.string()).same_entries(tall));
  std::filesystem::remove(path);
}

TEST_CASE("matrix text format rejects malformed input") {
  CHECK_THROWS_AS((void)parse_matrix_text("vars: 2\ndims: 1 1\nx0\n"),
                  InputError);  // missing field header
  CHECK_THROWS_AS(
      (void)parse_matrix_text("field: Q\nvars: 2\ndims: 2 2\nx0, x1\n"),
      InputError);  // too few rows
  CHECK_THROWS_AS(
      (void)parse_matrix_text("field: Q\nvars: 2\ndims: 1 2\nx0\n"),
      InputError);  // too few entries
  CHECK_THROWS_AS((void)read_matrix_file("/nonexistent/detchain.txt"),
                  InputError);
}

TEST_CASE("minors ideal validates its inputs") {
  Field q = Field::rationals();
  PolyMatrix bad = matrix_of(q, 3, {{"x0", "x1"}, {"x2", "x0^2"}});
  CHECK_THROWS_AS((void)minors_ideal(bad, 2, MonomialOrder::grevlex()),
                  InputError);
  PolyMatrix good = generic_matrix(q, 2, 2);
  CHECK_THROWS_AS((void)minors_ideal(good, 3, MonomialOrder::grevlex()),
                  InputError);
  CHECK_THROWS_AS((void)minors_ideal(good, 0, MonomialOrder::grevlex()),
                  InputError);
}

}  // TEST_SUITE
