#include <doctest.h>

#include "hopfdual/catalog.hpp"
#include "hopfdual/coring.hpp"

#include <map>

using namespace hopfdual;

namespace {

using Q = Rational;

const char* const kInstances[] = {"I1", "I2", "I3", "I4", "I5", "E1", "E2"};

template <class K>
bool same_subspace(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.dim() != b.dim()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis_vector(i))) return false;
  return true;
}

// Coinvariants straight from the definition: solve rho(a) = a (x) 1 column by
// column with a hand-rolled elimination over Q.
Index coinvariant_dim_oracle(const ComoduleAlgebra<Q>& c) {
  const Index da = c.dim_a(), dh = c.dim_h();
  std::vector<std::vector<Q>> rows;
  for (Index r = 0; r < da * dh; ++r) {
    std::vector<Q> row(da);
    for (Index a = 0; a < da; ++a) {
      row[a] = c.coaction(r, a);
      if (r / dh == a && c.hopf.unit()(r % dh) == Q(1)) row[a] -= Q(1);
    }
    rows.push_back(row);
  }
  Index rank = 0;
  for (Index col = 0; col < da && rank < static_cast<Index>(rows.size()); ++col) {
    Index piv = -1;
    for (Index r = rank; r < static_cast<Index>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) piv = r;
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Q f = rows[r][col] / rows[rank][col];
      for (Index k = 0; k < da; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return da - rank;
}

}  // namespace

TEST_CASE("tensor over the ground field is the plain tensor product") {
  const FieldSpec q = FieldSpec::rationals();
  const Algebra<Q> k = ground_algebra<Q>(q);
  const Matrix<Q> act3 = identity<Q>(q, 3), act2 = identity<Q>(q, 2);
  const QuotientSpace<Q> t = tensor_over(k, act3, 3, act2, 2);
  CHECK(t.dim() == 6);
}

TEST_CASE("A tensor_A A is A") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : kInstances) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const Algebra<Q>& a = inst.comodule->algebra;
    const Matrix<Q> m = a.multiplication_matrix();
    CHECK_MESSAGE(tensor_over(a, m, a.dim(), m, a.dim()).dim() == a.dim(), name);
  }
}

TEST_CASE("tensor_over rejects mismatched lists") {
  CHECK_THROWS_AS(tensor_over<Q>({}, {}), std::invalid_argument);
}

TEST_CASE("canonical coring of k inside kC2") {
  const FieldSpec q = FieldSpec::rationals();
  const HopfAlgebra<Q> h = group_algebra<Q>(GroupTable::cyclic(2), q);
  const GrouplikeCoring<Q> g = canonical_coring(h.algebra, Matrix<Q>(h.unit()));
  CHECK(g.coring.dim() == 4);
  CHECK(check_coring(g.coring).passed());
  CHECK(check_grouplike(g).passed());
}

TEST_CASE("canonical coring over A itself is one dimensional over each basis") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I3", q);
  const Algebra<Q>& a = inst.comodule->algebra;
  const GrouplikeCoring<Q> g = canonical_coring(a, identity<Q>(q, a.dim()));
  CHECK(g.coring.dim() == a.dim());
  CHECK(check_coring(g.coring).passed());
}

TEST_CASE("canonical coring needs a unital subalgebra") {
  const FieldSpec q = FieldSpec::rationals();
  const ComoduleAlgebra<Q> c = graded_c2_algebra<Q>(q);
  Matrix<Q> x = zero_matrix<Q>(q, 2, 1);
  x(1, 0) = Q(1);
  CHECK_THROWS_AS(canonical_coring(c.algebra, x), NotASubring);
}

TEST_CASE("corings from comodule algebras satisfy the axioms") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (const char* name : kInstances) {
      if (f.kind == FieldSpec::Kind::rationals) {
        const Instance<Q> inst = catalog_instance<Q>(name, f);
        const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
        const AxiomReport r = check_coring(g.coring);
        CHECK_MESSAGE(r.passed(), (std::string(name) + ": " + r.first_failure()));
        CHECK_MESSAGE(check_grouplike(g).passed(), name);
        CHECK(g.coring.dim() == inst.comodule->dim_a() * inst.hopf.dim());
      } else {
        const Instance<ModP> inst = catalog_instance<ModP>(name, f);
        const GrouplikeCoring<ModP> g = coring_from_comodule(*inst.comodule);
        CHECK_MESSAGE(check_coring(g.coring).passed(), name);
        CHECK_MESSAGE(check_grouplike(g).passed(), name);
      }
    }
  }
}

TEST_CASE("tampered right action is flagged") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I1", q);
  GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  Coring<Q>& c = g.coring;
  // (1 (x) 1) . g now lands on 2 g (x) g
  const Index col = 0 * c.base.dim() + 1;
  c.bimodule.right_action.col(col) *= Q(2);
  CHECK_FALSE(check_coring(c).passed());
}

TEST_CASE("tampered comultiplication is flagged") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I3", q);
  GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  g.coring.comul_lift(0, 0) += Q(1);
  CHECK_FALSE(check_coring(g.coring).passed());
}

TEST_CASE("trivial coring and coalgebra corings") {
  const FieldSpec q = FieldSpec::rationals();
  const HopfAlgebra<Q> h = sweedler_h4<Q>(q);
  const GrouplikeCoring<Q> t = trivial_coring(h.algebra);
  CHECK(check_coring(t.coring).passed());
  CHECK(check_grouplike(t).passed());
  CHECK(coinvariants(t).dim() == 4);
  const Coring<Q> c = coring_from_coalgebra(h.coalgebra);
  CHECK(c.caa.dim() == 16);
  CHECK(check_coring(c).passed());
}

TEST_CASE("coinvariants agree with the comodule definition") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : kInstances) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
    const Subspace<Q> b = coinvariants(g);
    CHECK_MESSAGE(same_subspace(b, comodule_coinvariants(*inst.comodule)), name);
    CHECK_MESSAGE(b.dim() == coinvariant_dim_oracle(*inst.comodule), name);
  }
  CHECK(comodule_coinvariants(*catalog_instance<Q>("I1", q).comodule).dim() == 1);
}

TEST_CASE("can kills x (x) x on the graded algebra") {
  const FieldSpec q = FieldSpec::rationals();
  const ComoduleAlgebra<Q> c = graded_c2_algebra<Q>(q);
  const GrouplikeCoring<Q> g = coring_from_comodule(c);
  const CanMap<Q> can = can_map(g, coinvariants(g));
  Vector<Q> x = zero_vector<Q>(q, 2);
  x(1) = Q(1);
  const Vector<Q> xx = can.source.project(kron(x, x));
  CHECK_FALSE(is_zero(xx));
  CHECK(is_zero(apply(can.map, xx)));
}

TEST_CASE("can is ill defined over a non coinvariant subring") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I1", q);
  const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  CHECK_THROWS_AS(can_map(g, column_span(identity<Q>(q, 2))), IllDefined);
}

TEST_CASE("Galois condition via can and via the coring map agree") {
  const FieldSpec q = FieldSpec::rationals();
  const std::map<std::string, bool> expected = {{"I1", true},  {"I2", true},  {"I3", true}, {"I4", false},
                                                {"I5", false}, {"E1", true}, {"E2", false}};
  for (const auto& [name, galois] : expected) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const GaloisEvidence a = is_galois(coring_from_comodule(*inst.comodule));
    const GaloisEvidence b = hopf_galois_check(*inst.comodule);
    CHECK_MESSAGE(a.galois == galois, name);
    CHECK_MESSAGE(b.galois == galois, (name + ": " + b.detail));
    CHECK(a.dim_source == b.dim_source);
    CHECK(a.rank == b.rank);
  }
}

TEST_CASE("Galois check over GF(5)") {
  const FieldSpec f = FieldSpec::prime(5);
  CHECK(hopf_galois_check(*catalog_instance<ModP>("I3", f).comodule).galois);
  CHECK_FALSE(hopf_galois_check(*catalog_instance<ModP>("I4", f).comodule).galois);
}
