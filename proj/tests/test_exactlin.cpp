#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "whapar/matrix.hpp"

using namespace whapar;

namespace {

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m.at(0, 0) = Rat(a);
  m.at(0, 1) = Rat(b);
  m.at(1, 0) = Rat(c);
  m.at(1, 1) = Rat(d);
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = Rat((long)(rng() % 11) - 5, (long)(rng() % 4) + 1);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rat::parse("2/4") == Rat(1, 2));
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("7").str() == "7");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
}

TEST_CASE("rref on rank-1 matrix") {
  auto [r, piv] = rref(mat2(2, 4, 1, 2));
  CHECK(r == mat2(1, 2, 0, 0));
  CHECK(piv == std::vector<std::size_t>{0});
}

TEST_CASE("rref identity and permutation") {
  auto [r3, p3] = rref(Matrix::identity(3));
  CHECK(r3 == Matrix::identity(3));
  CHECK(p3 == std::vector<std::size_t>{0, 1, 2});
  // hand row-reduction: swap the rows of [[0,1],[1,0]]
  auto [rp, pp] = rref(mat2(0, 1, 1, 0));
  CHECK(rp == Matrix::identity(2));
  CHECK(pp == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 3 + t % 3, 4);
    Matrix r = rref(m).first;
    CHECK(rref(r).first == r);
  }
}

TEST_CASE("kernel dimensions and rank-nullity") {
  CHECK(kernel_basis(Matrix(2, 2)).dim() == 2);
  CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
  Matrix row(1, 2);
  row.at(0, 0) = Rat(1);
  row.at(0, 1) = Rat(1);
  Subspace k = kernel_basis(row);
  CHECK(k.dim() == 1);
  // direct solve: x + y = 0
  Vec v = k.basis_row(0);
  CHECK(v[0] + v[1] == Rat(0));
  CHECK(k.contains(Vec{Rat(1), Rat(-1)}));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 2 + t % 4, 3 + t % 3);
    CHECK(rank(m) + kernel_basis(m).dim() == m.cols());
  }
}

TEST_CASE("membership coordinates") {
  Subspace line = Subspace::from_span(2, {Vec{Rat(1), Rat(0)}});
  auto c = line.coords(Vec{Rat(3), Rat(0)});
  REQUIRE(c.has_value());
  CHECK(*c == Vec{Rat(3)});
  CHECK(!line.coords(Vec{Rat(0), Rat(1)}).has_value());
  CHECK_THROWS_AS((void)line.coords(Vec{Rat(1)}), InputError);

  // (2,0) = 1*(1,1) + 1*(1,-1), solved against the given spanning vectors
  Matrix cols = Matrix::from_cols({Vec{Rat(1), Rat(1)}, Vec{Rat(1), Rat(-1)}});
  auto x = solve(cols, Vec{Rat(2), Rat(0)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{Rat(1), Rat(1)});
}

TEST_CASE("kron basics") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  Matrix a(1, 1);
  a.at(0, 0) = Rat(2);
  Matrix sw = mat2(0, 1, 1, 0);
  Matrix expect = mat2(0, 2, 2, 0);
  CHECK(kron(a, sw) == expect);
}

TEST_CASE("kron respects the index convention on vectors") {
  // (a (x) b)(v (x) w) = a(v) (x) b(w) with index(e_i (x) e_j) = i*dim_b + j
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
    Vec v{Rat((long)(rng() % 7) - 3), Rat((long)(rng() % 7) - 3)};
    Vec w{Rat((long)(rng() % 7) - 3), Rat((long)(rng() % 7) - 3), Rat((long)(rng() % 7) - 3)};
    Vec vw(6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) vw[i * 3 + j] = v[i] * w[j];
    Vec av = a.apply(v), bw = b.apply(w);
    Vec expect(6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) expect[i * 3 + j] = av[i] * bw[j];
    CHECK(kron(a, b).apply(vw) == expect);
  }
}

TEST_CASE("kron is associative and bilinear") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 15; ++t) {
    Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 2, 3);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    Matrix a2 = random_matrix(rng, 2, 2);
    CHECK(kron(a + a2, b) == kron(a, b) + kron(a2, b));
    Rat s(3, 7);
    CHECK(kron(a.scaled(s), b) == kron(a, b).scaled(s));
    CHECK(kron(a, b.scaled(s)) == kron(a, b).scaled(s));
  }
}

TEST_CASE("solve and inverse") {
  Matrix m = mat2(1, 2, 3, 4);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv) * m == Matrix::identity(2));
  CHECK(!inverse(mat2(1, 2, 2, 4)).has_value());
  auto none = solve(Matrix::from_rows({Vec{Rat(1), Rat(1)}}), Vec{Rat(1)});
  REQUIRE(none.has_value());
  auto bad = solve(Matrix::from_rows({Vec{Rat(0), Rat(0)}}), Vec{Rat(1)});
  CHECK(!bad.has_value());
}

TEST_CASE("subspace equality is canonical") {
  Subspace s1 = Subspace::from_span(2, {Vec{Rat(1), Rat(1)}, Vec{Rat(1), Rat(-1)}});
  Subspace s2 = Subspace::full(2);
  CHECK(s1 == s2);
  CHECK(s1.coords(Vec{Rat(2), Rat(0)}).has_value());
}
