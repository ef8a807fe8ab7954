#include "hopfdual/duals.hpp"

#include <random>

namespace hopfdual {

namespace {

template <class K>
bool equal_vectors(const Vector<K>& a, const Vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class K>
HomSpace<K> linear_functionals(const Coring<K>& c, DualSide side) {
  const Algebra<K>& a = c.base;
  HomBuilder<K> b(c.dim(), a.dim());
  for (Index g : algebra_generators(a).indices) {
    const Vector<K> e = a.basis(g);
    if (side == DualSide::left) {
      b.intertwine(c.bimodule.left_by(e), a.left_multiplication(e));
    } else {
      b.intertwine(c.bimodule.right_by(e), a.right_multiplication(e));
    }
  }
  return b.build();
}

// Assembles the ring from per-basis matrices: on the left (phi * psi) is
// Psi N_phi, on the right Phi M_psi.
template <class K>
DualRing<K> assemble(const Coring<K>& c, DualSide side) {
  const FieldSpec& f = c.field();
  const Index n = c.dim(), da = c.base.dim();
  HomSpace<K> carrier = linear_functionals(c, side);
  const Index d = carrier.dim();
  const Matrix<K> id = identity<K>(f, n);
  auto factors = std::make_shared<std::vector<Matrix<K>>>();
  for (Index k = 0; k < d; ++k) {
    const Matrix<K> fk = carrier.map(k);
    if (side == DualSide::left) {
      factors->push_back(multiply(c.bimodule.right_action, kron_apply(id, fk, c.comul_lift)));
    } else {
      factors->push_back(multiply(c.bimodule.left_action, kron_apply(fk, id, c.comul_lift)));
    }
  }
  auto rule = [carrier, factors, side, n](const Vector<K>& x, const Vector<K>& y) {
    const Vector<K>& combined = side == DualSide::left ? x : y;
    const Vector<K>& outer = side == DualSide::left ? y : x;
    Matrix<K> m = Matrix<K>::Zero(n, n);
    for (Index k = 0; k < combined.size(); ++k)
      if (!is_zero(combined(k))) m += (*factors)[k] * combined(k);
    return carrier.coordinates(multiply(carrier.map_of(outer), m), "dual ring product");
  };
  Vector<K> unit = carrier.coordinates(c.counit, "counit");
  Matrix<K> embedding(d, da);
  for (Index a = 0; a < da; ++a) {
    const Vector<K> e = c.base.basis(a);
    const Matrix<K> m = side == DualSide::left ? c.base.right_multiplication(e) : c.base.left_multiplication(e);
    embedding.col(a) = carrier.coordinates(multiply(m, c.counit), "embedded base element");
  }
  Algebra<K> alg = Algebra<K>::from_rule(f, d, rule, std::move(unit));
  return {side, std::move(carrier), std::move(alg), std::move(embedding)};
}

}  // namespace

template <class K>
DualRing<K> left_dual(const Coring<K>& c) {
  return assemble(c, DualSide::left);
}

template <class K>
DualRing<K> right_dual(const Coring<K>& c) {
  return assemble(c, DualSide::right);
}

template <class K>
AxiomReport check_dual_ring(const Coring<K>& c, const DualRing<K>& d, Index exhaustive_limit) {
  AxiomReport report = check_algebra(d.algebra, exhaustive_limit);
  const Algebra<K>& a = c.base;
  report.add("unit is the counit", equal_vectors(d.algebra.unit(), d.carrier.coordinates(c.counit, "counit")));
  report.add("embedding unital", equal_vectors(Vector<K>(apply(d.embedding, a.unit())), d.algebra.unit()));
  bool mult = true;
  for (Index x = 0; x < a.dim() && mult; ++x)
    for (Index y = 0; y < a.dim() && mult; ++y) {
      const Vector<K> lhs = apply(d.embedding, a.multiply(a.basis(x), a.basis(y)));
      const Vector<K> rhs = d.algebra.multiply(d.embedding.col(x), d.embedding.col(y));
      mult = equal_vectors(lhs, rhs);
    }
  report.add("embedding multiplicative", mult);
  report.add("embedding injective", rank(d.embedding) == a.dim());
  return report;
}

template <class K>
AxiomReport check_lift_independence(const Coring<K>& c, std::uint64_t seed, int trials) {
  AxiomReport report;
  report.add("projection o section = id on C (x)_A C", c.caa.section_is_right_inverse());
  const DualRing<K> l = left_dual(c), r = right_dual(c);
  std::mt19937_64 rng(seed);
  auto same = [](const Algebra<K>& x, const Algebra<K>& y) {
    for (Index i = 0; i < x.dim(); ++i)
      for (Index j = 0; j < x.dim(); ++j)
        if (!equal_vectors(Vector<K>(x.multiply(x.basis(i), x.basis(j))), Vector<K>(y.multiply(y.basis(i), y.basis(j)))))
          return false;
    return true;
  };
  int moved_left = 0, moved_right = 0;
  for (int t = 0; t < trials; ++t) {
    Coring<K> moved = c;
    for (Index k = 0; k < moved.dim(); ++k) moved.comul_lift.col(k) += moved.caa.random_relation(c.field(), rng);
    if (!same(left_dual(moved).algebra, l.algebra)) ++moved_left;
    if (!same(right_dual(moved).algebra, r.algebra)) ++moved_right;
  }
  const std::string of = " of " + std::to_string(trials) + " perturbed lifts";
  report.add("*C products independent of the lift", moved_left == 0, std::to_string(moved_left) + of + " differ");
  report.add("C* products independent of the lift", moved_right == 0, std::to_string(moved_right) + of + " differ");
  return report;
}

template <class K>
DualBasisPair<K> dual_basis(const Coring<K>& c, const DualRing<K>& left) {
  if (left.side != DualSide::left) throw std::invalid_argument("dual_basis: needs the left dual");
  const FieldSpec& f = c.field();
  const Index n = c.dim(), da = c.base.dim(), d = left.dim();
  std::vector<Matrix<K>> acts;
  for (Index a = 0; a < da; ++a) acts.push_back(c.bimodule.left_by(c.base.basis(a)));

  DualBasisPair<K> out;
  RowEchelon<K> spanned(n);
  for (Index k = 0; k < n && !spanned.full(); ++k) {
    const Vector<K> e = unit_vector<K>(f, n, k);
    if (spanned.contains(e)) continue;
    out.elements.push_back(e);
    for (const Matrix<K>& act : acts) spanned.add(SparseVector<K>::from_dense(Vector<K>(act.col(k))));
  }

  // sum_i G_i F_i = 1 with G_i(a) = a c_i and F_i ranging over *C
  const Index m = static_cast<Index>(out.elements.size());
  Matrix<K> system(n * n, m * d);
  for (Index i = 0; i < m; ++i) {
    Matrix<K> g(n, da);
    for (Index a = 0; a < da; ++a) g.col(a) = apply(acts[a], out.elements[i]);
    for (Index k = 0; k < d; ++k) system.col(i * d + k) = hom_to_vector(Matrix<K>(multiply(g, left.carrier.map(k))));
  }
  const std::optional<Matrix<K>> sol = solve(system, Matrix<K>(hom_to_vector(identity<K>(f, n))));
  if (!sol) throw NoDualBasis("dual_basis: C is not projective over the chosen generators");
  for (Index i = 0; i < m; ++i) out.functionals.push_back(left.carrier.map_of(sol->col(0).segment(i * d, d)));
  return out;
}

template <class K>
bool check_dual_basis(const Coring<K>& c, const DualBasisPair<K>& p) {
  const Index n = c.dim();
  Matrix<K> sum = zero_matrix<K>(c.field(), n, n);
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const Matrix<K> a_ci = multiply(c.bimodule.left_action, kron(identity<K>(c.field(), c.base.dim()), Matrix<K>(p.elements[i])));
    sum += multiply(a_ci, p.functionals[i]);
  }
  return is_zero(Matrix<K>(sum - identity<K>(c.field(), n)));
}

template <class K>
SmashDualMaps<K> smash_dual_maps(const ComoduleAlgebra<K>& c, const DualRing<K>& left, const DualRing<K>& right) {
  const FieldSpec& f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), n = da * dh;
  const Algebra<K>& a = c.algebra;
  const HopfAlgebra<K>& h = c.hopf;
  const Matrix<K>& s = h.antipode;
  const Matrix<K> sinv = antipode_inverse(h);
  SmashDualMaps<K> out{{a.opposite(), opposite(h), c.coaction}, {}, {}, {}, {}, {}, {}};

  out.gamma = Matrix<K>(n, right.dim());
  for (Index k = 0; k < right.dim(); ++k) {
    const Matrix<K> phi = right.carrier.map(k);
    for (Index i = 0; i < dh; ++i) {
      const Vector<K> v = apply(phi, kron(a.unit(), Vector<K>(sinv.col(i))));
      for (Index b = 0; b < da; ++b) out.gamma(b * dh + i, k) = v(b);
    }
  }
  out.delta = Matrix<K>(right.dim(), n);
  for (Index b = 0; b < da; ++b)
    for (Index i = 0; i < dh; ++i) {
      Matrix<K> z = zero_matrix<K>(f, da, n);
      for (Index x = 0; x < da; ++x)
        for (Index hh = 0; hh < dh; ++hh)
          for (Index r = 0; r < da; ++r)
            for (Index q = 0; q < dh; ++q) {
              const K& rho = c.coaction(r * dh + q, x);
              if (is_zero(rho)) continue;
              const K coef = rho * h.algebra.multiply(h.algebra.basis(q), Vector<K>(s.col(hh)))(i);
              if (is_zero(coef)) continue;
              z.col(x * dh + hh) += a.multiply(a.basis(b), a.basis(r)) * coef;
            }
      out.delta.col(b * dh + i) = right.carrier.coordinates(z, "delta of a big smash element");
    }

  out.gamma_prime = Matrix<K>(n, left.dim());
  for (Index k = 0; k < left.dim(); ++k) {
    const Matrix<K> phi = left.carrier.map(k);
    for (Index i = 0; i < dh; ++i) {
      const Vector<K> v = apply(phi, kron(a.unit(), h.algebra.basis(i)));
      for (Index b = 0; b < da; ++b) out.gamma_prime(b * dh + i, k) = v(b);
    }
  }
  out.delta_prime = Matrix<K>(left.dim(), n);
  for (Index b = 0; b < da; ++b)
    for (Index i = 0; i < dh; ++i) {
      Matrix<K> z = zero_matrix<K>(f, da, n);
      for (Index x = 0; x < da; ++x) z.col(x * dh + i) = a.multiply(a.basis(x), a.basis(b));
      out.delta_prime.col(b * dh + i) = left.carrier.coordinates(z, "delta' of a big smash element");
    }

  // a # f_j -> sum f_p(S^-1(a_[1])) a_[0] # f_q S^-1 over Delta(f_j) = f_p (x) f_q
  out.twist = zero_matrix<K>(f, n, n);
  for (Index x = 0; x < da; ++x)
    for (Index j = 0; j < dh; ++j)
      for (Index r = 0; r < da; ++r)
        for (Index q1 = 0; q1 < dh; ++q1) {
          const K& rho = c.coaction(r * dh + q1, x);
          if (is_zero(rho)) continue;
          for (Index p = 0; p < dh; ++p)
            for (Index q = 0; q < dh; ++q) {
              const K d = h.algebra.product(p, q).at(j);
              if (is_zero(d) || is_zero(sinv(p, q1))) continue;
              const K coef = rho * d * sinv(p, q1);
              for (Index t = 0; t < dh; ++t)
                if (!is_zero(sinv(q, t))) out.twist(r * dh + t, x * dh + j) += coef * sinv(q, t);
            }
        }
  out.composite = multiply(invert(out.twist), out.gamma_prime);
  return out;
}

template <class K>
Matrix<K> smash_coaction(const ComoduleAlgebra<K>& c) {
  const Index da = c.dim_a(), dh = c.dim_h(), n = da * dh;
  Matrix<K> out = zero_matrix<K>(c.field(), n * dh, n);
  for (Index a = 0; a < da; ++a)
    for (Index j = 0; j < dh; ++j)
      for (Index p = 0; p < dh; ++p)
        for (Index q = 0; q < dh; ++q) {
          const K d = c.hopf.algebra.product(p, q).at(j);
          if (!is_zero(d)) out((a * dh + p) * dh + q, a * dh + j) = d;
        }
  return out;
}

template <class K>
ComoduleAlgebra<K> comodule_on_left_dual(const ComoduleAlgebra<K>& c, const DualRing<K>& left,
                                         const SmashDualMaps<K>& maps) {
  const Matrix<K> back = invert(maps.composite);
  const Matrix<K> id_h = identity<K>(c.field(), c.dim_h());
  Matrix<K> rho = kron_apply(back, id_h, multiply(smash_coaction(c), maps.composite));
  return {left.algebra, dual_hopf(c.hopf), std::move(rho)};
}

#define HOPFDUAL_INSTANTIATE_DUALS(K)                                                                         \
  template struct DualRing<K>;                                                                                \
  template struct DualBasisPair<K>;                                                                           \
  template struct SmashDualMaps<K>;                                                                           \
  template DualRing<K> left_dual(const Coring<K>&);                                                           \
  template DualRing<K> right_dual(const Coring<K>&);                                                          \
  template AxiomReport check_dual_ring(const Coring<K>&, const DualRing<K>&, Index);                               \
  template AxiomReport check_lift_independence(const Coring<K>&, std::uint64_t, int);                           \
  template DualBasisPair<K> dual_basis(const Coring<K>&, const DualRing<K>&);                                 \
  template bool check_dual_basis(const Coring<K>&, const DualBasisPair<K>&);                                  \
  template SmashDualMaps<K> smash_dual_maps(const ComoduleAlgebra<K>&, const DualRing<K>&, const DualRing<K>&); \
  template Matrix<K> smash_coaction(const ComoduleAlgebra<K>&);                                               \
  template ComoduleAlgebra<K> comodule_on_left_dual(const ComoduleAlgebra<K>&, const DualRing<K>&,            \
                                                    const SmashDualMaps<K>&);

HOPFDUAL_INSTANTIATE_DUALS(Rational)
HOPFDUAL_INSTANTIATE_DUALS(ModP)

}  // namespace hopfdual
