#include "hopfdual/smash.hpp"

#include <random>

namespace hopfdual {

namespace {

template <class K>
bool equal_matrices(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
bool equal_vectors(const Vector<K>& a, const Vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class K>
AxiomReport comodule_axioms(const Matrix<K>& rho, Index dim, const HopfAlgebra<K>& h) {
  AxiomReport r;
  const FieldSpec& f = h.field();
  const Matrix<K> id = identity<K>(f, dim);
  const Matrix<K> id_h = identity<K>(f, h.dim());
  if (rho.rows() != dim * h.dim() || rho.cols() != dim) {
    r.add("coaction shape", false);
    return r;
  }
  r.add("coaction coassociative", equal_matrices(multiply(kron(rho, id_h), rho), multiply(kron(id, h.comul()), rho)));
  r.add("coaction counital", equal_matrices(multiply(kron(id, h.coalgebra.counit_row()), rho), id));
  return r;
}

}  // namespace

// ---------------------------------------------------------------- comodules

template <class K>
AxiomReport check_comodule_algebra(const ComoduleAlgebra<K>& c) {
  AxiomReport report = check_algebra(c.algebra);
  AxiomReport co = comodule_axioms(c.coaction, c.dim_a(), c.hopf);
  report.append(co, "");
  if (!co.passed()) return report;
  const Index da = c.dim_a(), dh = c.dim_h();
  // (a (x) h)(b (x) k) = ab (x) hk on the images of basis pairs
  bool mult = true;
  for (Index x = 0; x < da && mult; ++x)
    for (Index y = 0; y < da && mult; ++y) {
      Vector<K> rhs = zero_vector<K>(c.field(), da * dh);
      for (Index p = 0; p < da * dh; ++p) {
        const K& u = c.coaction(p, x);
        if (is_zero(u)) continue;
        for (Index q = 0; q < da * dh; ++q) {
          const K& v = c.coaction(q, y);
          if (is_zero(v)) continue;
          const SparseVector<K>& ab = c.algebra.product(p / dh, q / dh);
          const SparseVector<K>& hk = c.hopf.algebra.product(p % dh, q % dh);
          for (std::size_t s = 0; s < ab.nnz(); ++s)
            for (std::size_t t = 0; t < hk.nnz(); ++t) rhs(ab.index[s] * dh + hk.index[t]) += u * v * ab.value[s] * hk.value[t];
        }
      }
      mult = equal_vectors(Vector<K>(apply(c.coaction, c.algebra.multiply(c.algebra.basis(x), c.algebra.basis(y)))), rhs);
    }
  report.add("coaction multiplicative", mult);
  report.add("coaction unital", equal_vectors(apply(c.coaction, c.algebra.unit()), kron(c.algebra.unit(), c.hopf.unit())));
  return report;
}

template <class K>
Matrix<K> RelativeHopfModule<K>::action_by(const Vector<K>& a) const {
  const Index da = a.size();
  Matrix<K> out = Matrix<K>::Zero(dim, dim);
  for (Index b = 0; b < da; ++b) {
    if (is_zero(a(b))) continue;
    for (Index m = 0; m < dim; ++m) out.col(m) += right_action.col(m * da + b) * a(b);
  }
  return out;
}

template <class K>
AxiomReport check_relative_hopf_module(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m) {
  AxiomReport report;
  const FieldSpec& f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), dm = m.dim;
  if (m.right_action.rows() != dm || m.right_action.cols() != dm * da) {
    report.add("action shape", false);
    return report;
  }
  const Matrix<K> id_m = identity<K>(f, dm);
  const Matrix<K> ma = c.algebra.multiplication_matrix();
  report.add("right action associative", equal_matrices(multiply(m.right_action, kron(m.right_action, identity<K>(f, da))),
                                                         multiply(m.right_action, kron(id_m, ma))));
  report.add("right action unital", equal_matrices(m.action_by(c.algebra.unit()), id_m));
  AxiomReport co = comodule_axioms(m.coaction, dm, c.hopf);
  report.append(co, "");
  if (!co.passed()) return report;
  const Matrix<K> mh = c.hopf.algebra.multiplication_matrix();
  const Matrix<K> shuffle = kron(kron(id_m, swap_matrix<K>(f, dh, da)), identity<K>(f, dh));
  report.add("coaction compatible with action",
             equal_matrices(multiply(m.coaction, m.right_action),
                            multiply(multiply(kron(m.right_action, mh), shuffle), kron(m.coaction, c.coaction))));
  return report;
}

template <class K>
RelativeHopfModule<K> regular_module(const ComoduleAlgebra<K>& c) {
  return {c.dim_a(), c.algebra.multiplication_matrix(), c.coaction};
}

template <class K>
RelativeHopfModule<K> canonical_module(const ComoduleAlgebra<K>& c) {
  const FieldSpec& f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), dm = da * dh;
  Matrix<K> act = zero_matrix<K>(f, dm, dm * da);
  for (Index a = 0; a < da; ++a)
    for (Index h = 0; h < dh; ++h)
      for (Index b = 0; b < da; ++b)
        for (Index r = 0; r < da; ++r)
          for (Index q = 0; q < dh; ++q) {
            const K& coef = c.coaction(r * dh + q, b);
            if (is_zero(coef)) continue;
            const SparseVector<K>& ar = c.algebra.product(a, r);
            const SparseVector<K>& hq = c.hopf.algebra.product(h, q);
            for (std::size_t s = 0; s < ar.nnz(); ++s)
              for (std::size_t t = 0; t < hq.nnz(); ++t)
                act(ar.index[s] * dh + hq.index[t], (a * dh + h) * da + b) += coef * ar.value[s] * hq.value[t];
          }
  const Matrix<K> rho = kron(identity<K>(f, da), c.hopf.comul());
  return {dm, std::move(act), rho};
}

// ----------------------------------------------------------- module algebras

template <class K>
Matrix<K> ModuleAlgebra<K>::acting(const Vector<K>& h) const {
  const Index n = algebra.dim();
  Matrix<K> out = zero_matrix<K>(algebra.field(), n, n);
  for (Index j = 0; j < h.size(); ++j)
    if (!is_zero(h(j))) out += action[j] * h(j);
  return out;
}

template <class K>
AxiomReport check_module_algebra(const ModuleAlgebra<K>& r, Index exhaustive_limit, int samples) {
  AxiomReport report;
  const FieldSpec& f = r.algebra.field();
  const Index n = r.algebra.dim(), dh = r.hopf.dim();
  if (static_cast<Index>(r.action.size()) != dh) {
    report.add("action shape", false);
    return report;
  }
  bool assoc = true;
  for (Index i = 0; i < dh && assoc; ++i)
    for (Index j = 0; j < dh && assoc; ++j) {
      const Vector<K> ij = r.hopf.algebra.multiply(r.hopf.algebra.basis(i), r.hopf.algebra.basis(j));
      assoc = equal_matrices(multiply(r.action[i], r.action[j]), r.acting(ij));
    }
  report.add("module associative", assoc);
  report.add("module unital", equal_matrices(r.acting(r.hopf.unit()), identity<K>(f, n)));

  // h . 1 = eps(h) 1
  bool unit_ok = true;
  for (Index j = 0; j < dh; ++j)
    if (!equal_vectors(apply(r.action[j], r.algebra.unit()), Vector<K>(r.algebra.unit() * r.hopf.counit()(j)))) {
      unit_ok = false;
    }
  report.add("action preserves unit", unit_ok);

  auto compatible = [&](Index h, Index a, Index b) {
    const Vector<K> lhs = apply(r.action[h], r.algebra.multiply(r.algebra.basis(a), r.algebra.basis(b)));
    Vector<K> rhs = zero_vector<K>(f, n);
    for (Index p = 0; p < dh; ++p)
      for (Index q = 0; q < dh; ++q) {
        const K& d = r.hopf.comul()(p * dh + q, h);
        if (is_zero(d)) continue;
        rhs += r.algebra.multiply(r.action[p].col(a), r.action[q].col(b)) * d;
      }
    return equal_vectors(lhs, rhs);
  };
  std::string witness;
  if (n <= exhaustive_limit) {
    for (Index h = 0; h < dh && witness.empty(); ++h)
      for (Index a = 0; a < n && witness.empty(); ++a)
        for (Index b = 0; b < n && witness.empty(); ++b)
          if (!compatible(h, a, b)) witness = std::to_string(h) + "," + std::to_string(a) + "," + std::to_string(b);
    report.add("action measures products", witness.empty(), witness.empty() ? "all basis triples" : witness);
  } else {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n * 131 + dh));
    std::uniform_int_distribution<Index> pick_r(0, n - 1), pick_h(0, dh - 1);
    for (int s = 0; s < samples && witness.empty(); ++s) {
      const Index h = pick_h(rng), a = pick_r(rng), b = pick_r(rng);
      if (!compatible(h, a, b)) witness = std::to_string(h) + "," + std::to_string(a) + "," + std::to_string(b);
    }
    report.add("action measures products", witness.empty(),
               witness.empty() ? std::to_string(samples) + " sampled basis triples" : witness);
  }
  return report;
}

// ------------------------------------------------------------ smash products

template <class K>
Algebra<K> smash_product(const ComoduleAlgebra<K>& c) {
  const FieldSpec& f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), n = da * dh;
  const Matrix<K>& delta = c.hopf.comul();
  // hit[j][q] = f_j <- e_q = sum_k f_j(e_q e_k) f_k
  std::vector<std::vector<Vector<K>>> hit(dh, std::vector<Vector<K>>(dh));
  for (Index j = 0; j < dh; ++j)
    for (Index q = 0; q < dh; ++q) {
      Vector<K> v = zero_vector<K>(f, dh);
      for (Index k = 0; k < dh; ++k) v(k) = c.hopf.algebra.product(q, k).at(j);
      hit[j][q] = v;
    }
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < dh; ++j)
      for (Index p = 0; p < da; ++p)
        for (Index l = 0; l < dh; ++l) {
          Vector<K> out = zero_vector<K>(f, n);
          for (Index r = 0; r < da; ++r)
            for (Index q = 0; q < dh; ++q) {
              const K& rho = c.coaction(r * dh + q, p);
              if (is_zero(rho)) continue;
              const SparseVector<K>& ir = c.algebra.product(i, r);
              // (f_j <- e_q) f_l in H*: (f_k f_l) = sum_s Delta(e_s)[k][l] f_s
              for (Index k = 0; k < dh; ++k) {
                const K& hk = hit[j][q](k);
                if (is_zero(hk)) continue;
                for (Index s = 0; s < dh; ++s) {
                  const K& d = delta(k * dh + l, s);
                  if (is_zero(d)) continue;
                  const K coef = rho * hk * d;
                  for (std::size_t t = 0; t < ir.nnz(); ++t) out(ir.index[t] * dh + s) += coef * ir.value[t];
                }
              }
            }
          products[(i * dh + j) * n + (p * dh + l)] = SparseVector<K>::from_dense(out);
        }
  return Algebra<K>::from_products(f, n, std::move(products), kron(c.algebra.unit(), c.hopf.counit()));
}

template <class K>
Algebra<K> big_smash(const ComoduleAlgebra<K>& c) {
  const FieldSpec f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), n = da * dh;
  const Algebra<K> a = c.algebra;
  const HopfAlgebra<K> h = c.hopf;
  const Matrix<K> rho = c.coaction;
  auto rule = [f, da, dh, a, h, rho](const Vector<K>& x, const Vector<K>& y) {
    const Matrix<K> fm = hom_from_vector(x, da, dh);
    const Matrix<K> gm = hom_from_vector(y, da, dh);
    // fq[q * dh + s] = f(e_q e_s)
    std::vector<Vector<K>> fq(static_cast<std::size_t>(dh * dh));
    for (Index q = 0; q < dh; ++q)
      for (Index s = 0; s < dh; ++s) {
        Vector<K> v = zero_vector<K>(f, da);
        const SparseVector<K>& qs = h.algebra.product(q, s);
        for (std::size_t t = 0; t < qs.nnz(); ++t) v += fm.col(qs.index[t]) * qs.value[t];
        fq[q * dh + s] = std::move(v);
      }
    Matrix<K> out = zero_matrix<K>(f, da, dh);
    for (Index b = 0; b < dh; ++b) {
      const Vector<K> gb = gm.col(b);
      if (is_zero(gb)) continue;
      const Vector<K> rg = apply(rho, gb);
      for (Index t = 0; t < dh; ++t) {
        // w(:, r) collects sum f(g(h_(2))_[1] h_(1)) over the e_r component
        Matrix<K> w = zero_matrix<K>(f, da, da);
        bool any = false;
        for (Index s = 0; s < dh; ++s) {
          const K& d = h.comul()(s * dh + b, t);
          if (is_zero(d)) continue;
          for (Index r = 0; r < da; ++r)
            for (Index q = 0; q < dh; ++q) {
              const K& coef = rg(r * dh + q);
              if (is_zero(coef)) continue;
              w.col(r) += fq[q * dh + s] * (d * coef);
              any = true;
            }
        }
        if (!any) continue;
        for (Index r = 0; r < da; ++r)
          for (Index k = 0; k < da; ++k) {
            const K& wk = w(k, r);
            if (is_zero(wk)) continue;
            const SparseVector<K>& kr = a.product(k, r);
            for (std::size_t u = 0; u < kr.nnz(); ++u) out(kr.index[u], t) += wk * kr.value[u];
          }
      }
    }
    return hom_to_vector(out);
  };
  Matrix<K> unit = Matrix<K>(c.algebra.unit()) * Matrix<K>(c.hopf.counit()).transpose();
  return Algebra<K>::from_rule(f, n, rule, hom_to_vector(unit));
}

template <class K>
Matrix<K> big_to_smash_map(const ComoduleAlgebra<K>& c) {
  // E_{ij} (e_j -> e_i) goes to e_i # f_j; both sit at index i * dim H + j.
  return identity<K>(c.field(), c.dim_a() * c.dim_h());
}

template <class K>
std::vector<Matrix<K>> comodule_to_module(const Matrix<K>& coaction, Index dim, Index dim_h) {
  std::vector<Matrix<K>> act;
  for (Index j = 0; j < dim_h; ++j) {
    Matrix<K> m(dim, dim);
    for (Index r = 0; r < dim; ++r)
      for (Index s = 0; s < dim; ++s) m(r, s) = coaction(r * dim_h + j, s);
    act.push_back(std::move(m));
  }
  return act;
}

template <class K>
Matrix<K> module_to_comodule(const std::vector<Matrix<K>>& action, Index dim) {
  const Index dh = static_cast<Index>(action.size());
  Matrix<K> rho(dim * dh, dim);
  for (Index j = 0; j < dh; ++j)
    for (Index r = 0; r < dim; ++r)
      for (Index s = 0; s < dim; ++s) rho(r * dh + j, s) = action[j](r, s);
  return rho;
}

template <class K>
Algebra<K> module_smash(const ModuleAlgebra<K>& r) {
  const FieldSpec f = r.algebra.field();
  const Index nr = r.algebra.dim(), dh = r.hopf.dim(), n = nr * dh;
  const ModuleAlgebra<K> ra = r;
  auto rule = [f, nr, dh, ra](const Vector<K>& x, const Vector<K>& y) {
    // x = sum_j X_j # h_j with X_j the j-th column of the reshaped vector
    const Matrix<K> xm = hom_from_vector(x, nr, dh);
    const Matrix<K> ym = hom_from_vector(y, nr, dh);
    Matrix<K> out = zero_matrix<K>(f, nr, dh);
    for (Index j = 0; j < dh; ++j) {
      const Vector<K> xj = xm.col(j);
      if (is_zero(xj)) continue;
      for (Index l = 0; l < dh; ++l) {
        const Vector<K> yl = ym.col(l);
        if (is_zero(yl)) continue;
        for (Index a = 0; a < dh; ++a)
          for (Index b = 0; b < dh; ++b) {
            const K& d = ra.hopf.comul()(a * dh + b, j);
            if (is_zero(d)) continue;
            const Vector<K> left = ra.algebra.multiply(xj, apply(ra.action[a], yl));
            if (is_zero(left)) continue;
            const SparseVector<K>& bl = ra.hopf.algebra.product(b, l);
            for (std::size_t t = 0; t < bl.nnz(); ++t) out.col(bl.index[t]) += left * (d * bl.value[t]);
          }
      }
    }
    return hom_to_vector(out);
  };
  return Algebra<K>::from_rule(f, n, rule, kron(r.algebra.unit(), r.hopf.unit()));
}

// ---------------------------------------------------- End_A(M) as H*-algebra

template <class K>
HomSpace<K> right_linear_endomorphisms(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m) {
  const GeneratingSet<K> gens = algebra_generators(c.algebra);
  std::vector<Matrix<K>> acts;
  for (Index g : gens.indices) acts.push_back(m.action_by(c.algebra.basis(g)));
  HomBuilder<K> b(m.dim, m.dim);
  require_linear(b, acts, acts);
  return b.build();
}

template <class K>
EndModuleAlgebra<K> end_module_algebra(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m) {
  const FieldSpec& f = c.field();
  const Index dh = c.dim_h();
  HopfAlgebra<K> dual = dual_hopf(c.hopf);
  std::vector<Matrix<K>> act = comodule_to_module(m.coaction, m.dim, dh);
  EndRing<K> end = end_ring(f, right_linear_endomorphisms(c, m));

  // T[b] = action of S*(f_b)
  std::vector<Matrix<K>> anti(static_cast<std::size_t>(dh));
  for (Index b = 0; b < dh; ++b) {
    Matrix<K> t = zero_matrix<K>(f, m.dim, m.dim);
    for (Index cc = 0; cc < dh; ++cc)
      if (!is_zero(dual.antipode(cc, b))) t += act[cc] * dual.antipode(cc, b);
    anti[b] = std::move(t);
  }
  std::vector<Matrix<K>> r_action;
  for (Index j = 0; j < dh; ++j) {
    Matrix<K> rj(end.space.dim(), end.space.dim());
    for (Index i = 0; i < end.space.dim(); ++i) {
      const Matrix<K> fi = end.space.map(i);
      Matrix<K> img = zero_matrix<K>(f, m.dim, m.dim);
      for (Index a = 0; a < dh; ++a)
        for (Index b = 0; b < dh; ++b) {
          const K& d = dual.comul()(a * dh + b, j);
          if (is_zero(d)) continue;
          img += multiply(multiply(act[a], fi), anti[b]) * d;
        }
      rj.col(i) = end.space.coordinates(img, "end_module_algebra");
    }
    r_action.push_back(std::move(rj));
  }
  ModuleAlgebra<K> ma{end.algebra, dual, std::move(r_action)};
  return {std::move(dual), std::move(act), std::move(end), std::move(ma)};
}

#define HOPFDUAL_INSTANTIATE_SMASH(K)                                                                    \
  template struct ComoduleAlgebra<K>;                                                                    \
  template struct RelativeHopfModule<K>;                                                                 \
  template struct ModuleAlgebra<K>;                                                                      \
  template struct EndModuleAlgebra<K>;                                                                   \
  template AxiomReport check_comodule_algebra(const ComoduleAlgebra<K>&);                                \
  template AxiomReport check_relative_hopf_module(const ComoduleAlgebra<K>&, const RelativeHopfModule<K>&); \
  template RelativeHopfModule<K> regular_module(const ComoduleAlgebra<K>&);                              \
  template RelativeHopfModule<K> canonical_module(const ComoduleAlgebra<K>&);                            \
  template AxiomReport check_module_algebra(const ModuleAlgebra<K>&, Index, int);                        \
  template Algebra<K> smash_product(const ComoduleAlgebra<K>&);                                          \
  template Algebra<K> big_smash(const ComoduleAlgebra<K>&);                                              \
  template Matrix<K> big_to_smash_map(const ComoduleAlgebra<K>&);                                        \
  template std::vector<Matrix<K>> comodule_to_module(const Matrix<K>&, Index, Index);                    \
  template Matrix<K> module_to_comodule(const std::vector<Matrix<K>>&, Index);                           \
  template Algebra<K> module_smash(const ModuleAlgebra<K>&);                                             \
  template HomSpace<K> right_linear_endomorphisms(const ComoduleAlgebra<K>&, const RelativeHopfModule<K>&); \
  template EndModuleAlgebra<K> end_module_algebra(const ComoduleAlgebra<K>&, const RelativeHopfModule<K>&);

HOPFDUAL_INSTANTIATE_SMASH(Rational)
HOPFDUAL_INSTANTIATE_SMASH(ModP)

}  // namespace hopfdual
