#include <doctest.h>

#include <random>

#include "hopfdual/catalog.hpp"
#include "hopfdual/certificate.hpp"
#include "hopfdual/duals.hpp"

using namespace hopfdual;

namespace {

using Q = Rational;

const char* const kCore[] = {"I1", "I2", "I3", "I4", "I5"};

template <class K>
bool same_products(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector<K> x = a.multiply(a.basis(i), a.basis(j)), y = b.multiply(b.basis(i), b.basis(j));
      for (Index k = 0; k < x.size(); ++k)
        if (!(x(k) == y(k))) return false;
    }
  return true;
}

// (phi * psi)(c) evaluated term by term from the comultiplication table.
Matrix<Q> left_product_oracle(const Coring<Q>& c, const Matrix<Q>& phi, const Matrix<Q>& psi) {
  const Index n = c.dim();
  Matrix<Q> out = Matrix<Q>::Zero(c.base.dim(), n);
  for (Index col = 0; col < n; ++col) {
    Vector<Q> inner = Vector<Q>::Zero(n);
    for (Index p = 0; p < n; ++p)
      for (Index q = 0; q < n; ++q) {
        const Q coef = c.comul_lift(p * n + q, col);
        if (coef.is_zero()) continue;
        const Vector<Q> a = phi.col(q);
        inner += c.bimodule.right_by(a) * Vector<Q>(Vector<Q>::Unit(n, p)) * coef;
      }
    out.col(col) = psi * inner;
  }
  return out;
}

}  // namespace

TEST_CASE("duals of A (x) H have rank dim A dim H") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : kCore) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
    const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
    const Index expected = inst.comodule->dim_a() * inst.hopf.dim();
    CHECK_MESSAGE(l.dim() == expected, name);
    CHECK_MESSAGE(r.dim() == expected, name);
    AxiomReport lr = check_dual_ring(g.coring, l), rr = check_dual_ring(g.coring, r);
    CHECK_MESSAGE(lr.passed(), (std::string(name) + ": " + lr.first_failure()));
    CHECK_MESSAGE(rr.passed(), (std::string(name) + ": " + rr.first_failure()));
  }
}

TEST_CASE("left dual product agrees with the defining formula") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I3", q);
  const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  const DualRing<Q> l = left_dual(g.coring);
  for (Index i = 0; i < l.dim(); ++i)
    for (Index j = 0; j < l.dim(); ++j) {
      const Matrix<Q> expected = left_product_oracle(g.coring, l.carrier.map(i), l.carrier.map(j));
      const Matrix<Q> got = l.functional(l.algebra.multiply(l.algebra.basis(i), l.algebra.basis(j)));
      CHECK(is_zero(Matrix<Q>(expected - got)));
    }
}

TEST_CASE("duals of the trivial coring are A") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : {"I3", "I4"}) {
    const Algebra<Q> a = catalog_instance<Q>(name, q).comodule->algebra;
    const GrouplikeCoring<Q> t = trivial_coring(a);
    for (const DualRing<Q>& d : {left_dual(t.coring), right_dual(t.coring)}) {
      REQUIRE(d.dim() == a.dim());
      const RingIsoCertificate<Q> cert =
          certify_ring_map("embedding", a, d.algebra, d.embedding, Orientation::multiplicative);
      CHECK(cert.passed());
    }
  }
}

TEST_CASE("dual basis of the free module A (x) H") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : kCore) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
    const DualBasisPair<Q> p = dual_basis(g.coring, left_dual(g.coring));
    CHECK(static_cast<Index>(p.elements.size()) == inst.hopf.dim());
    CHECK(check_dual_basis(g.coring, p));
  }
  const Algebra<Q> a = catalog_instance<Q>("I2", q).comodule->algebra;
  const GrouplikeCoring<Q> t = trivial_coring(a);
  const DualBasisPair<Q> p = dual_basis(t.coring, left_dual(t.coring));
  REQUIRE(p.elements.size() == 1);
  CHECK(p.elements[0] == a.unit());
}

TEST_CASE("dual products do not depend on the lift of the comultiplication") {
  const FieldSpec q = FieldSpec::rationals();
  std::mt19937_64 rng(2024);
  for (const char* name : {"I1", "I3", "I4"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
    const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
    for (int trial = 0; trial < 10; ++trial) {
      Coring<Q> moved = g.coring;
      for (Index c = 0; c < moved.dim(); ++c) moved.comul_lift.col(c) += moved.caa.random_relation(q, rng);
      CHECK(same_products(left_dual(moved).algebra, l.algebra));
      CHECK(same_products(right_dual(moved).algebra, r.algebra));
    }
  }
}

TEST_CASE("smash duality maps are ring isomorphisms") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* name : {"I1", "I2", "I3", "I4", "I5", "E1"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, q);
    const ComoduleAlgebra<Q>& c = *inst.comodule;
    const GrouplikeCoring<Q> g = coring_from_comodule(c);
    const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
    const SmashDualMaps<Q> m = smash_dual_maps(c, l, r);
    const Algebra<Q> smash = smash_product(c);
    const auto gamma = certify_ring_map("gamma", r.algebra, big_smash(c), m.gamma, Orientation::multiplicative);
    const auto gp =
        certify_ring_map("gamma'", l.algebra, big_smash(m.op).opposite(), m.gamma_prime, Orientation::multiplicative);
    const auto tw =
        certify_ring_map("twist", smash, smash_product(m.op).opposite(), m.twist, Orientation::multiplicative);
    const auto all = certify_ring_map("composite", l.algebra, smash, m.composite, Orientation::multiplicative);
    CHECK_MESSAGE(gamma.passed(), name);
    CHECK_MESSAGE(gp.passed(), name);
    CHECK_MESSAGE(tw.passed(), name);
    CHECK_MESSAGE(all.passed(), name);
    CHECK(is_zero(Matrix<Q>(multiply(m.delta, m.gamma) - identity<Q>(q, r.dim()))));
    CHECK(is_zero(Matrix<Q>(multiply(m.delta_prime, m.gamma_prime) - identity<Q>(q, l.dim()))));
    CHECK(verify_certificate(all));

    const ComoduleAlgebra<Q> dual = comodule_on_left_dual(c, l, m);
    const AxiomReport ax = check_comodule_algebra(dual);
    CHECK_MESSAGE(ax.passed(), (std::string(name) + ": " + ax.first_failure()));
  }
}

TEST_CASE("over k the left dual coaction is the comultiplication of H*") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I5", q);
  const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
  const SmashDualMaps<Q> m = smash_dual_maps(*inst.comodule, l, r);
  const ComoduleAlgebra<Q> dual = comodule_on_left_dual(*inst.comodule, l, m);
  // carrier coordinates and H* coordinates agree through the composite
  const Matrix<Q> t = m.composite;
  const Matrix<Q> expected = kron_apply(invert(t), identity<Q>(q, 4), multiply(dual_hopf(inst.hopf).comul(), t));
  CHECK(is_zero(Matrix<Q>(dual.coaction - expected)));
}

TEST_CASE("tampered certificates are caught") {
  const FieldSpec q = FieldSpec::rationals();
  const Instance<Q> inst = catalog_instance<Q>("I3", q);
  const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
  const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
  const SmashDualMaps<Q> m = smash_dual_maps(*inst.comodule, l, r);
  auto cert = certify_ring_map("composite", l.algebra, smash_product(*inst.comodule), m.composite,
                               Orientation::multiplicative);
  REQUIRE(cert.passed());
  auto forged = cert;
  forged.map(0, 1) += Q(1);
  CHECK_FALSE(verify_certificate(forged));
  const auto broken = certify_ring_map("broken", forged.source, forged.target, forged.map, Orientation::multiplicative);
  CHECK_FALSE(broken.passed());
  REQUIRE(broken.witness);
  const auto w = *broken.witness;
  CHECK_FALSE(w.image_of_product == w.product_of_images);
}
