#include <doctest.h>

#include <random>

#include "hopfdual/linalg.hpp"

using namespace hopfdual;

namespace {

using Q = Rational;

Matrix<Q> mat(Index r, Index c, std::initializer_list<long long> entries) {
  Matrix<Q> m(r, c);
  auto it = entries.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Q(*it++);
  return m;
}

template <class K>
Matrix<K> random_matrix(const FieldSpec& f, Index r, Index c, std::mt19937_64& rng, int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> z(0, 9);
  Matrix<K> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = make_scalar<K>(f, z(rng) < zero_bias ? 0 : d(rng));
  return m;
}

template <class K>
bool equal(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("rank") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(rank(identity<Q>(q, 2)) == 2);
  CHECK(rank(zero_matrix<Q>(q, 2, 3)) == 0);
  CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("invert") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(equal(invert(identity<Q>(q, 3)), identity<Q>(q, 3)));
  const Matrix<Q> swap = mat(2, 2, {0, 1, 1, 0});
  CHECK(equal(invert(swap), swap));
  CHECK_THROWS_AS(invert(mat(2, 2, {1, 1, 2, 2})), Singular);
  CHECK(equal(invert(mat(2, 2, {2, 1, 1, 1})), mat(2, 2, {1, -1, -1, 2})));
}

TEST_CASE("solve") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix<Q> b = mat(2, 2, {3, 1, -1, 5});
  auto x = solve(identity<Q>(q, 2), b);
  REQUIRE(x);
  CHECK(equal(*x, b));
  auto z = solve(zero_matrix<Q>(q, 2, 2), zero_matrix<Q>(q, 2, 1));
  REQUIRE(z);
  CHECK(is_zero(*z));
  CHECK_FALSE(solve(mat(2, 1, {1, 2}), mat(2, 1, {1, 1})).has_value());
}

TEST_CASE("kernel") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(kernel(identity<Q>(q, 3)).dim() == 0);
  CHECK(kernel(zero_matrix<Q>(q, 2, 2)).dim() == 2);
  const Subspace<Q> k = kernel(mat(2, 2, {1, 2, 2, 4}));
  REQUIRE(k.dim() == 1);
  Vector<Q> v(2);
  v << Q(2), Q(-1);
  CHECK(k.contains(v));
}

TEST_CASE("kron") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(equal(kron(identity<Q>(q, 2), identity<Q>(q, 3)), identity<Q>(q, 6)));
  const Matrix<Q> m = mat(2, 2, {1, -2, 3, 5});
  CHECK(equal(kron(mat(1, 1, {2}), m), Matrix<Q>(m * Q(2))));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto a1 = random_matrix<Q>(q, 2, 2, rng), a2 = random_matrix<Q>(q, 2, 2, rng);
    auto b1 = random_matrix<Q>(q, 2, 2, rng), b2 = random_matrix<Q>(q, 2, 2, rng);
    CHECK(equal(kron(multiply(a1, a2), multiply(b1, b2)), multiply(kron(a1, b1), kron(a2, b2))));
  }
  // e_i (x) e_j sits at i * dim(W) + j
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 4; ++j) {
      Vector<Q> e = kron(unit_vector<Q>(q, 3, i), unit_vector<Q>(q, 4, j));
      CHECK(e(i * 4 + j) == Q(1));
      CHECK(is_zero(Vector<Q>(e - unit_vector<Q>(q, 12, i * 4 + j))));
    }
}

TEST_CASE("hom space flattening") {
  const FieldSpec q = FieldSpec::rationals();
  std::mt19937_64 rng(5);
  const Matrix<Q> f = random_matrix<Q>(q, 3, 2, rng);
  CHECK(equal(hom_from_vector(hom_to_vector(f), 3, 2), f));
  CHECK(hom_to_vector(f)(hom_index(2, 1, 2)) == f(2, 1));
  // Hom(k, W) is W
  const Matrix<Q> w = random_matrix<Q>(q, 4, 1, rng);
  CHECK(equal(Matrix<Q>(hom_to_vector(w)), w));
}

TEST_CASE("quotient_by") {
  const FieldSpec q = FieldSpec::rationals();
  auto none = quotient_by<Q>(3, {});
  CHECK(equal(none.projection(), identity<Q>(q, 3)));

  Vector<Q> r(2);
  r << Q(1), Q(-1);
  auto line = quotient_by<Q>(2, {r});
  CHECK(line.dim() == 1);
  CHECK(line.project(unit_vector<Q>(q, 2, 0)) == line.project(unit_vector<Q>(q, 2, 1)));

  std::vector<Vector<Q>> rels;
  for (int i = 0; i < 3; ++i) {
    Vector<Q> v = zero_vector<Q>(q, 4);
    v(i) = Q(1);
    v(i + 1) = Q(i + 2);
    rels.push_back(v);
  }
  auto small = quotient_by<Q>(4, rels);
  CHECK(small.dim() == 1);
  CHECK(small.section_is_right_inverse());
  for (const auto& v : rels) CHECK(is_zero(small.project(v)));
}

TEST_CASE("solve_conditions") {
  CHECK(solve_conditions<Q>(3, {}).dim() == 3);
  Vector<Q> c(2);
  c << Q(1), Q(0);
  CHECK(solve_conditions<Q>(2, {c}).dim() == 1);
}

TEST_CASE("intertwiner conditions cut out commuting maps") {
  const FieldSpec q = FieldSpec::rationals();
  // maps F: k^2 -> k^2 commuting with a nilpotent Jordan block are a + bN
  const Matrix<Q> n = mat(2, 2, {0, 1, 0, 0});
  ConditionSystem<Q> sys(4);
  sys.add_intertwiner(n, n);
  const Subspace<Q> s = sys.solution();
  CHECK(s.dim() == 2);
  for (Index k = 0; k < s.dim(); ++k) {
    const Matrix<Q> f = hom_from_vector(s.basis_vector(k), 2, 2);
    CHECK(equal(multiply(f, n), multiply(n, f)));
  }
}

TEST_CASE_TEMPLATE("random linear algebra invariants", K, Rational, ModP) {
  const FieldSpec f = std::is_same_v<K, Rational> ? FieldSpec::rationals() : FieldSpec::prime(7);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = dim(rng), c = dim(rng);
    const Matrix<K> m = random_matrix<K>(f, r, c, rng, trial % 8);
    const Index rk = rank(m);
    const Subspace<K> ker = kernel(m);
    CHECK(ker.dim() == c - rk);
    CHECK(is_zero(multiply(m, ker.inclusion())));
    CHECK(rank(ker.inclusion()) == ker.dim());

    const Subspace<K> span = column_span(m);
    CHECK(span.dim() == rk);
    for (Index j = 0; j < c; ++j) CHECK(span.contains(Vector<K>(m.col(j))));

    std::vector<Vector<K>> rels;
    for (Index j = 0; j < c; ++j) rels.push_back(m.col(j));
    const QuotientSpace<K> quo = quotient_by<K>(r, rels);
    CHECK(quo.dim() == r - rk);
    CHECK(quo.section_is_right_inverse());
    CHECK(is_zero(multiply(quo.projection(), m)));
    CHECK(is_zero(quo.project(quo.random_relation(f, rng))));

    if (r == c && rk == r) {
      const Matrix<K> inv = invert(m);
      CHECK(equal(multiply(inv, m), identity<K>(f, r)));
      CHECK(equal(multiply(m, inv), identity<K>(f, r)));
    }
    const Matrix<K> x0 = random_matrix<K>(f, c, 2, rng);
    const Matrix<K> b = multiply(m, x0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(equal(multiply(m, *x), b));
  }
}

TEST_CASE_TEMPLATE("kron_apply matches the explicit Kronecker product", K, Rational, ModP) {
  const FieldSpec f = std::is_same_v<K, Rational> ? FieldSpec::rationals() : FieldSpec::prime(7);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix<K> a = random_matrix<K>(f, dim(rng), dim(rng), rng, trial % 4);
    const Matrix<K> b = random_matrix<K>(f, dim(rng), dim(rng), rng, trial % 3);
    const Matrix<K> m = random_matrix<K>(f, a.cols() * b.cols(), dim(rng), rng, 0);
    const Matrix<K> expected = multiply(kron(a, b), m);
    const Matrix<K> got = kron_apply(a, b, m);
    CHECK(is_zero(Matrix<K>(expected - got)));
  }
}
