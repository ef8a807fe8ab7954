#include <doctest.h>

#include "hopfdual/catalog.hpp"

using namespace hopfdual;

namespace {

using Q = Rational;

template <class K>
bool equal(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
Matrix<K> power(const Matrix<K>& m, int e) {
  Matrix<K> out = m;
  for (int i = 1; i < e; ++i) out = multiply(out, m);
  return out;
}

}  // namespace

TEST_CASE("algebra axioms") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(check_algebra(group_algebra<Q>(GroupTable::cyclic(2), q).algebra).passed());
  CHECK(check_algebra(ground_algebra<Q>(q)).passed());

  // e0 e0 = e1, everything else zero, unit e0: not unital
  std::vector<SparseVector<Q>> products(4);
  products[0].push(1, Q(1));
  auto bad = Algebra<Q>::from_products(q, 2, products, unit_vector<Q>(q, 2, 0));
  const AxiomReport r = check_algebra(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure() == "left unit");
}

TEST_CASE("group tables") {
  CHECK_NOTHROW(GroupTable::cyclic(5).validate());
  CHECK_NOTHROW(GroupTable::symmetric3().validate());
  GroupTable t = GroupTable::cyclic(3);
  t.product[1][1] = 1;  // breaks associativity
  CHECK_THROWS_AS(group_algebra<Q>(t, FieldSpec::rationals()), InvalidGroup);
  GroupTable s3 = GroupTable::symmetric3();
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && s3.product[a][b] == s3.product[b][a];
  CHECK_FALSE(abelian);
}

TEST_CASE("group algebras") {
  const FieldSpec q = FieldSpec::rationals();
  const auto c2 = group_algebra<Q>(GroupTable::cyclic(2), q);
  CHECK(c2.dim() == 2);
  CHECK(equal(c2.antipode, identity<Q>(q, 2)));
  CHECK(check_hopf(c2).passed());
  CHECK(check_hopf(group_algebra<Q>(GroupTable::cyclic(3), q)).passed());
  const auto s3 = group_algebra<Q>(GroupTable::symmetric3(), q);
  CHECK(check_hopf(s3).passed());
  CHECK(equal(multiply(s3.antipode, s3.antipode), identity<Q>(q, 6)));
  // cocommutative: Delta is fixed by the flip
  CHECK(equal(multiply(swap_matrix<Q>(q, 6, 6), s3.comul()), s3.comul()));
  CHECK(equal(antipode_inverse(s3), s3.antipode));
}

TEST_CASE_TEMPLATE("sweedler H4", K, Rational, ModP) {
  for (std::uint64_t p : {0ULL, 5ULL, 7ULL}) {
    if (std::is_same_v<K, Rational> != (p == 0)) continue;
    const FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
    const auto h = sweedler_h4<K>(f);
    CHECK(h.dim() == 4);
    const AxiomReport r = check_hopf(h);
    CHECK_MESSAGE(r.passed(), r.first_failure());
    const Matrix<K> s2 = multiply(h.antipode, h.antipode);
    CHECK_FALSE(equal(s2, identity<K>(f, 4)));
    CHECK_FALSE(s2(2, 2) == make_scalar<K>(f, 1));  // S^2(x) = -x
    CHECK(equal(power(h.antipode, 4), identity<K>(f, 4)));
    const Matrix<K> sinv = antipode_inverse(h);
    CHECK(equal(multiply(sinv, h.antipode), identity<K>(f, 4)));
    // S(ab) = S(b) S(a)
    for (Index a = 0; a < 4; ++a)
      for (Index b = 0; b < 4; ++b) {
        const Vector<K> lhs = apply(h.antipode, h.algebra.multiply(h.algebra.basis(a), h.algebra.basis(b)));
        const Vector<K> rhs = h.algebra.multiply(Vector<K>(h.antipode.col(b)), Vector<K>(h.antipode.col(a)));
        CHECK(equal(Matrix<K>(lhs), Matrix<K>(rhs)));
      }
  }
}

TEST_CASE("sweedler H4 rejects characteristic two") {
  CHECK_THROWS_AS(sweedler_h4<ModP>(FieldSpec::prime(2)), BadCharacteristic);
}

TEST_CASE("tampered antipode fails") {
  const FieldSpec q = FieldSpec::rationals();
  auto h = sweedler_h4<Q>(q);
  h.antipode(3, 2) = Q(1);  // S(x) = +gx
  const AxiomReport r = check_hopf(h);
  CHECK_FALSE(r.passed());
  bool antipode_failed = false;
  for (const auto& c : r.checks)
    if (c.name.find("antipode") != std::string::npos && c.name != "antipode invertible" && !c.passed) antipode_failed = true;
  CHECK(antipode_failed);

  auto z = sweedler_h4<Q>(q);
  z.antipode.row(2).setZero();
  CHECK_THROWS_AS(antipode_inverse(z), Singular);
}

TEST_CASE("duals, opposites and co-opposites") {
  const FieldSpec q = FieldSpec::rationals();
  for (const auto& h : {group_algebra<Q>(GroupTable::cyclic(3), q), group_algebra<Q>(GroupTable::symmetric3(), q),
                        sweedler_h4<Q>(q)}) {
    const auto d = dual_hopf(h);
    CHECK(d.dim() == h.dim());
    CHECK(check_hopf(d).passed());
    CHECK(same_structure(dual_hopf(d), h));
    CHECK(check_hopf(opposite(h)).passed());
    CHECK(check_hopf(coopposite(h)).passed());
  }
  // dual of a group algebra: delta functions multiply pointwise
  const auto c3 = group_algebra<Q>(GroupTable::cyclic(3), q);
  const auto d = dual_hopf(c3);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) {
      const SparseVector<Q>& p = d.algebra.product(a, b);
      if (a == b) {
        CHECK(p.nnz() == 1);
        CHECK(p.at(a) == Q(1));
      } else {
        CHECK(p.empty());
      }
    }
  CHECK(same_structure(opposite(c3), c3));
  CHECK(same_structure(coopposite(c3), c3));
}

TEST_CASE("hom space basis") {
  const FieldSpec q = FieldSpec::rationals();
  Matrix<Q> f = zero_matrix<Q>(q, 3, 4);
  f(2, 1) = Q(5);
  const Vector<Q> v = hom_to_vector(f);
  CHECK(v.size() == 12);
  CHECK(v(hom_index(2, 1, 4)) == Q(5));
  CHECK(equal(hom_from_vector(v, 3, 4), f));
}
