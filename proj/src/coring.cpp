#include "hopfdual/coring.hpp"

#include <algorithm>

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
std::vector<std::pair<Index, K>> column_entries(const Matrix<K>& m, Index col) {
  std::vector<std::pair<Index, K>> out;
  for (Index i = 0; i < m.rows(); ++i)
    if (!is_zero(m(i, col))) out.emplace_back(i, m(i, col));
  return out;
}

}  // namespace

template <class K>
Matrix<K> right_action_by(const Matrix<K>& right_action, Index dim, const Vector<K>& a) {
  const Index da = a.size();
  Matrix<K> out = Matrix<K>::Zero(dim, dim);
  for (Index b = 0; b < da; ++b) {
    if (is_zero(a(b))) continue;
    for (Index m = 0; m < dim; ++m) out.col(m) += right_action.col(m * da + b) * a(b);
  }
  return out;
}

template <class K>
Matrix<K> left_action_by(const Matrix<K>& left_action, Index dim, const Vector<K>& a) {
  Matrix<K> out = Matrix<K>::Zero(dim, dim);
  for (Index b = 0; b < a.size(); ++b) {
    if (is_zero(a(b))) continue;
    out += left_action.middleCols(b * dim, dim) * a(b);
  }
  return out;
}

template <class K>
Matrix<K> Bimodule<K>::left_by(const Vector<K>& a) const {
  return left_action_by(left_action, dim, a);
}

template <class K>
Matrix<K> Bimodule<K>::right_by(const Vector<K>& a) const {
  return right_action_by(right_action, dim, a);
}

template <class K>
AxiomReport check_bimodule(const Algebra<K>& a, const Bimodule<K>& m) {
  AxiomReport report;
  const Index n = a.dim();
  if (m.dim_a != n || m.left_action.rows() != m.dim || m.left_action.cols() != n * m.dim ||
      m.right_action.rows() != m.dim || m.right_action.cols() != n * m.dim) {
    report.add("bimodule shape", false);
    return report;
  }
  const Matrix<K> id = identity<K>(a.field(), m.dim);
  std::vector<Matrix<K>> left, right;
  for (Index i = 0; i < n; ++i) {
    left.push_back(m.left_by(a.basis(i)));
    right.push_back(m.right_by(a.basis(i)));
  }
  bool la = true, ra = true, commute = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<K> ij = a.multiply(a.basis(i), a.basis(j));
      if (la && !equal_matrices(m.left_by(ij), multiply(left[i], left[j]))) la = false;
      if (ra && !equal_matrices(m.right_by(ij), multiply(right[j], right[i]))) ra = false;
      if (commute && !equal_matrices(multiply(left[i], right[j]), multiply(right[j], left[i]))) commute = false;
    }
  report.add("left action associative", la);
  report.add("left action unital", equal_matrices(m.left_by(a.unit()), id));
  report.add("right action associative", ra);
  report.add("right action unital", equal_matrices(m.right_by(a.unit()), id));
  report.add("actions commute", commute);
  return report;
}

template <class K>
QuotientSpace<K> tensor_over(const std::vector<Matrix<K>>& right_on_m, const std::vector<Matrix<K>>& left_on_n) {
  if (right_on_m.size() != left_on_n.size() || right_on_m.empty()) {
    throw std::invalid_argument("tensor_over: need matching nonempty lists of acting elements");
  }
  const Index dm = right_on_m.front().rows(), dn = left_on_n.front().rows();
  RowEchelon<K> relations(dm * dn);
  std::vector<std::pair<Index, K>> entries;
  for (std::size_t g = 0; g < right_on_m.size() && !relations.full(); ++g) {
    std::vector<std::vector<std::pair<Index, K>>> rm(static_cast<std::size_t>(dm)), ln(static_cast<std::size_t>(dn));
    for (Index m = 0; m < dm; ++m) rm[m] = column_entries(right_on_m[g], m);
    for (Index n = 0; n < dn; ++n) ln[n] = column_entries(left_on_n[g], n);
    for (Index m = 0; m < dm && !relations.full(); ++m)
      for (Index n = 0; n < dn && !relations.full(); ++n) {
        entries.clear();
        for (const auto& [p, v] : rm[m]) entries.emplace_back(p * dn + n, v);
        for (const auto& [q, v] : ln[n]) entries.emplace_back(m * dn + q, -v);
        std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVector<K> row;
        for (std::size_t t = 0; t < entries.size();) {
          std::size_t u = t;
          K sum = entries[t].second;
          while (++u < entries.size() && entries[u].first == entries[t].first) sum += entries[u].second;
          row.push(entries[t].first, sum);
          t = u;
        }
        relations.add(row);
      }
  }
  return quotient_from_echelon(relations);
}

template <class K>
QuotientSpace<K> tensor_over(const Algebra<K>& a, const Matrix<K>& right_action_m, Index dim_m,
                             const Matrix<K>& left_action_n, Index dim_n) {
  const GeneratingSet<K> gens = algebra_generators(a);
  std::vector<Matrix<K>> rm, ln;
  for (Index g : gens.indices) {
    rm.push_back(right_action_by(right_action_m, dim_m, a.basis(g)));
    ln.push_back(left_action_by(left_action_n, dim_n, a.basis(g)));
  }
  if (rm.empty()) {  // A = k: no relations
    rm.push_back(identity<K>(a.field(), dim_m));
    ln.push_back(identity<K>(a.field(), dim_n));
  }
  return tensor_over(rm, ln);
}

template <class K>
Matrix<K> induced_right_action(const QuotientSpace<K>& q, Index dim_m, const Matrix<K>& right_action_n, Index dim_n,
                               Index dim_a) {
  const Index dq = q.dim();
  Matrix<K> out(dq, dq * dim_a);
  const Matrix<K> id_m = Matrix<K>::Identity(dim_m, dim_m);
  for (Index a = 0; a < dim_a; ++a) {
    Vector<K> ea = Vector<K>::Zero(dim_a);
    ea(a) = K(1);
    const Matrix<K> act = multiply(q.projection(), kron_apply(id_m, right_action_by(right_action_n, dim_n, ea), q.section()));
    for (Index c = 0; c < dq; ++c) out.col(c * dim_a + a) = act.col(c);
  }
  return out;
}

template <class K>
Coring<K> make_coring(const Algebra<K>& base, Bimodule<K> bimodule, Matrix<K> comul_lift, Matrix<K> counit) {
  QuotientSpace<K> caa = tensor_over(base, bimodule.right_action, bimodule.dim, bimodule.left_action, bimodule.dim);
  return {base, std::move(bimodule), std::move(caa), std::move(comul_lift), std::move(counit)};
}

template <class K>
AxiomReport check_coring(const Coring<K>& c) {
  AxiomReport report = check_bimodule(c.base, c.bimodule);
  if (!report.passed()) return report;
  const FieldSpec& f = c.field();
  const Index n = c.dim(), da = c.base.dim();
  const Matrix<K> id = identity<K>(f, n);
  const Matrix<K>& lift = c.comul_lift;
  const Matrix<K>& pi = c.caa.projection();
  bool dl = true, dr = true, el = true, er = true;
  for (Index i = 0; i < da; ++i) {
    const Vector<K> a = c.base.basis(i);
    const Matrix<K> la = c.bimodule.left_by(a), ra = c.bimodule.right_by(a);
    if (dl && !equal_matrices(multiply(pi, multiply(lift, la)), multiply(pi, kron_apply(la, id, lift)))) dl = false;
    if (dr && !equal_matrices(multiply(pi, multiply(lift, ra)), multiply(pi, kron_apply(id, ra, lift)))) dr = false;
    if (el && !equal_matrices(multiply(c.counit, la), multiply(c.base.left_multiplication(a), c.counit))) el = false;
    if (er && !equal_matrices(multiply(c.counit, ra), multiply(c.base.right_multiplication(a), c.counit))) er = false;
  }
  report.add("comultiplication left linear", dl);
  report.add("comultiplication right linear", dr);
  report.add("counit left linear", el);
  report.add("counit right linear", er);
  report.add("left counit law", equal_matrices(multiply(c.bimodule.left_action, kron_apply(c.counit, id, lift)), id));
  report.add("right counit law", equal_matrices(multiply(c.bimodule.right_action, kron_apply(id, c.counit, lift)), id));

  // C (x)_A C (x)_A C as (C (x)_A C) (x)_A C.
  const Matrix<K> r2 = induced_right_action(c.caa, n, c.bimodule.right_action, n, da);
  const QuotientSpace<K> triple = tensor_over(c.base, r2, c.caa.dim(), c.bimodule.left_action, n);
  const Matrix<K> left_first = multiply(triple.projection(), kron_apply(pi, id, kron_apply(lift, id, lift)));
  const Matrix<K> right_first = multiply(triple.projection(), kron_apply(pi, id, kron_apply(id, lift, lift)));
  report.add("coassociativity", equal_matrices(left_first, right_first),
             "in a space of dimension " + std::to_string(triple.dim()));
  return report;
}

template <class K>
AxiomReport check_grouplike(const GrouplikeCoring<K>& g) {
  AxiomReport report;
  const Coring<K>& c = g.coring;
  report.add("grouplike comultiplication",
             equal_matrices(Matrix<K>(c.caa.project(apply(c.comul_lift, g.x))), Matrix<K>(c.caa.project(kron(g.x, g.x)))));
  report.add("grouplike counit", equal_matrices(Matrix<K>(apply(c.counit, g.x)), Matrix<K>(c.base.unit())));
  return report;
}

template <class K>
GrouplikeCoring<K> coring_from_comodule(const ComoduleAlgebra<K>& c) {
  const FieldSpec& f = c.field();
  const Index da = c.dim_a(), dh = c.dim_h(), n = da * dh;
  Matrix<K> left = zero_matrix<K>(f, n, da * n);
  for (Index a = 0; a < da; ++a)
    for (Index b = 0; b < da; ++b) {
      const SparseVector<K>& ab = c.algebra.product(a, b);
      for (Index h = 0; h < dh; ++h)
        for (std::size_t t = 0; t < ab.nnz(); ++t) left(ab.index[t] * dh + h, a * n + b * dh + h) = ab.value[t];
    }
  Bimodule<K> bim{n, da, std::move(left), canonical_module(c).right_action};

  // a (x) h -> (a (x) h_(1)) (x) (1 (x) h_(2))
  Matrix<K> lift = zero_matrix<K>(f, n * n, n);
  const Vector<K>& one = c.algebra.unit();
  for (Index a = 0; a < da; ++a)
    for (Index h = 0; h < dh; ++h)
      for (Index p = 0; p < dh; ++p)
        for (Index q = 0; q < dh; ++q) {
          const K& d = c.hopf.comul()(p * dh + q, h);
          if (is_zero(d)) continue;
          for (Index u = 0; u < da; ++u)
            if (!is_zero(one(u))) lift((a * dh + p) * n + (u * dh + q), a * dh + h) += d * one(u);
        }
  Matrix<K> counit = zero_matrix<K>(f, da, n);
  for (Index a = 0; a < da; ++a)
    for (Index h = 0; h < dh; ++h) counit(a, a * dh + h) = c.hopf.counit()(h);
  Coring<K> coring = make_coring(c.algebra, std::move(bim), std::move(lift), std::move(counit));
  return {std::move(coring), kron(one, c.hopf.unit())};
}

template <class K>
bool is_subalgebra(const Algebra<K>& a, const Subspace<K>& b) {
  if (!b.contains(a.unit())) return false;
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      if (!b.contains(a.multiply(b.basis_vector(i), b.basis_vector(j)))) return false;
  return true;
}

template <class K>
GrouplikeCoring<K> canonical_coring(const Algebra<K>& a, const Matrix<K>& subring) {
  const FieldSpec& f = a.field();
  const Index da = a.dim();
  const Subspace<K> b = column_span(subring);
  if (!is_subalgebra(a, b)) throw NotASubring("canonical_coring: the given span is not a unital subalgebra");
  std::vector<Matrix<K>> rm, ln;
  for (Index i = 0; i < b.dim(); ++i) {
    rm.push_back(a.right_multiplication(b.basis_vector(i)));
    ln.push_back(a.left_multiplication(b.basis_vector(i)));
  }
  QuotientSpace<K> q = tensor_over(rm, ln);
  const Index n = q.dim();
  const Matrix<K> id = identity<K>(f, da);

  Matrix<K> left(n, da * n), right(n, n * da);
  for (Index i = 0; i < da; ++i) {
    const Vector<K> e = a.basis(i);
    const Matrix<K> l = multiply(q.projection(), kron_apply(a.left_multiplication(e), id, q.section()));
    const Matrix<K> r = multiply(q.projection(), kron_apply(id, a.right_multiplication(e), q.section()));
    left.middleCols(i * n, n) = l;
    for (Index c = 0; c < n; ++c) right.col(c * da + i) = r.col(c);
  }
  // [x (x) y] -> [x (x) 1] (x) [1 (x) y]
  std::vector<Vector<K>> first(static_cast<std::size_t>(da)), second(static_cast<std::size_t>(da));
  for (Index x = 0; x < da; ++x) {
    first[x] = q.project(kron(a.basis(x), a.unit()));
    second[x] = q.project(kron(a.unit(), a.basis(x)));
  }
  Matrix<K> lift = zero_matrix<K>(f, n * n, n);
  for (Index c = 0; c < n; ++c)
    for (Index x = 0; x < da; ++x)
      for (Index y = 0; y < da; ++y) {
        const K& s = q.section()(x * da + y, c);
        if (!is_zero(s)) lift.col(c) += kron(first[x], second[y]) * s;
      }
  Matrix<K> counit = multiply(a.multiplication_matrix(), q.section());
  Vector<K> x = q.project(kron(a.unit(), a.unit()));
  Bimodule<K> bim{n, da, std::move(left), std::move(right)};
  return {make_coring(a, std::move(bim), std::move(lift), std::move(counit)), std::move(x)};
}

template <class K>
GrouplikeCoring<K> trivial_coring(const Algebra<K>& a) {
  const Index n = a.dim();
  const Matrix<K> m = a.multiplication_matrix();
  Bimodule<K> bim{n, n, m, m};
  Matrix<K> lift(n * n, n);
  for (Index i = 0; i < n; ++i) lift.col(i) = kron(a.basis(i), a.unit());
  return {make_coring(a, std::move(bim), std::move(lift), identity<K>(a.field(), n)), a.unit()};
}

template <class K>
Coring<K> coring_from_coalgebra(const Coalgebra<K>& c) {
  std::vector<SparseVector<K>> products(1);
  products[0].push(0, make_scalar<K>(c.field, 1));
  Algebra<K> k = Algebra<K>::from_products(c.field, 1, std::move(products), unit_vector<K>(c.field, 1, 0));
  const Matrix<K> id = identity<K>(c.field, c.dim);
  Bimodule<K> bim{c.dim, 1, id, id};
  return make_coring(k, std::move(bim), c.comul, c.counit_row());
}

template <class K>
Subspace<K> coinvariants(const GrouplikeCoring<K>& g) {
  const Coring<K>& c = g.coring;
  const Index da = c.base.dim();
  Matrix<K> d(c.dim(), da);
  for (Index a = 0; a < da; ++a) {
    const Vector<K> e = c.base.basis(a);
    d.col(a) = apply(c.bimodule.left_by(e), g.x) - apply(c.bimodule.right_by(e), g.x);
  }
  return kernel(d);
}

template <class K>
Subspace<K> comodule_coinvariants(const ComoduleAlgebra<K>& c) {
  const Matrix<K> trivial = kron(identity<K>(c.field(), c.dim_a()), Matrix<K>(c.hopf.unit()));
  return kernel(Matrix<K>(c.coaction - trivial));
}

template <class K>
CanMap<K> can_map(const GrouplikeCoring<K>& g, const Subspace<K>& b) {
  const Coring<K>& c = g.coring;
  const Algebra<K>& a = c.base;
  const Index da = a.dim();
  std::vector<Matrix<K>> rm, ln;
  for (Index i = 0; i < b.dim(); ++i) {
    rm.push_back(a.right_multiplication(b.basis_vector(i)));
    ln.push_back(a.left_multiplication(b.basis_vector(i)));
  }
  QuotientSpace<K> q = tensor_over(rm, ln);
  Matrix<K> ambient(c.dim(), da * da);
  for (Index x = 0; x < da; ++x) {
    const Vector<K> ax = apply(c.bimodule.left_by(a.basis(x)), g.x);
    for (Index y = 0; y < da; ++y) ambient.col(x * da + y) = apply(c.bimodule.right_by(a.basis(y)), ax);
  }
  const Matrix<K> map = multiply(ambient, q.section());
  // relations are exactly the columns of 1 - s pi
  if (!is_zero(Matrix<K>(ambient - multiply(map, q.projection())))) {
    throw IllDefined("can_map: a defining relation of A (x)_B A has a nonzero image");
  }
  return {std::move(q), map};
}

template <class K>
GaloisEvidence is_galois(const GrouplikeCoring<K>& g) {
  GaloisEvidence ev;
  const Subspace<K> b = coinvariants(g);
  ev.dim_coinvariants = b.dim();
  const CanMap<K> can = can_map(g, b);
  ev.dim_source = can.source.dim();
  ev.dim_target = g.coring.dim();
  ev.rank = rank(can.map);
  ev.galois = ev.dim_source == ev.dim_target && ev.rank == ev.dim_target;
  ev.detail = ev.galois ? "can is bijective" : (ev.rank < ev.dim_source ? "can is not injective" : "can is not surjective");
  return ev;
}

template <class K>
GaloisEvidence hopf_galois_check(const ComoduleAlgebra<K>& c) {
  GaloisEvidence ev;
  const Index da = c.dim_a(), dh = c.dim_h();
  const Subspace<K> b = comodule_coinvariants(c);
  ev.dim_coinvariants = b.dim();
  const GrouplikeCoring<K> canonical = canonical_coring(c.algebra, b.inclusion());
  const GrouplikeCoring<K> ah = coring_from_comodule(c);
  const Coring<K>& src = canonical.coring;
  const Coring<K>& tgt = ah.coring;

  // a (x) b -> a b_[0] (x) b_[1] on A (x)_k A, then restricted through the section
  Matrix<K> ambient = zero_matrix<K>(c.field(), da * dh, da * da);
  for (Index x = 0; x < da; ++x)
    for (Index y = 0; y < da; ++y)
      for (Index r = 0; r < da; ++r)
        for (Index q = 0; q < dh; ++q) {
          const K& coef = c.coaction(r * dh + q, y);
          if (is_zero(coef)) continue;
          const SparseVector<K>& xr = c.algebra.product(x, r);
          for (std::size_t t = 0; t < xr.nnz(); ++t) ambient(xr.index[t] * dh + q, x * da + y) += coef * xr.value[t];
        }
  std::vector<Matrix<K>> rm, ln;
  for (Index i = 0; i < b.dim(); ++i) {
    rm.push_back(c.algebra.right_multiplication(b.basis_vector(i)));
    ln.push_back(c.algebra.left_multiplication(b.basis_vector(i)));
  }
  const QuotientSpace<K> aba = tensor_over(rm, ln);
  const Matrix<K> map = multiply(ambient, aba.section());
  const bool well_defined = is_zero(Matrix<K>(ambient - multiply(map, aba.projection())));

  ev.dim_source = aba.dim();
  ev.dim_target = tgt.dim();
  ev.rank = rank(map);
  const bool bijective = ev.dim_source == ev.dim_target && ev.rank == ev.dim_target;
  const bool counit_ok = equal_matrices(multiply(tgt.counit, map), src.counit);
  const bool comul_ok = equal_matrices(multiply(tgt.caa.projection(), multiply(tgt.comul_lift, map)),
                                       multiply(tgt.caa.projection(), kron_apply(map, map, src.comul_lift)));
  ev.galois = well_defined && bijective && counit_ok && comul_ok;
  if (!well_defined) {
    ev.detail = "map is not well defined on A (x)_B A";
  } else if (!counit_ok || !comul_ok) {
    ev.detail = "map is not a coring morphism";
  } else {
    ev.detail = bijective ? "coring isomorphism" : "coring morphism, not bijective";
  }
  return ev;
}

#define HOPFDUAL_INSTANTIATE_CORING(K)                                                                          \
  template struct Bimodule<K>;                                                                                  \
  template struct Coring<K>;                                                                                    \
  template struct GrouplikeCoring<K>;                                                                           \
  template struct CanMap<K>;                                                                                    \
  template Matrix<K> right_action_by(const Matrix<K>&, Index, const Vector<K>&);                                \
  template Matrix<K> left_action_by(const Matrix<K>&, Index, const Vector<K>&);                                 \
  template AxiomReport check_bimodule(const Algebra<K>&, const Bimodule<K>&);                                   \
  template QuotientSpace<K> tensor_over(const std::vector<Matrix<K>>&, const std::vector<Matrix<K>>&);          \
  template QuotientSpace<K> tensor_over(const Algebra<K>&, const Matrix<K>&, Index, const Matrix<K>&, Index);   \
  template Matrix<K> induced_right_action(const QuotientSpace<K>&, Index, const Matrix<K>&, Index, Index);      \
  template Coring<K> make_coring(const Algebra<K>&, Bimodule<K>, Matrix<K>, Matrix<K>);                         \
  template AxiomReport check_coring(const Coring<K>&);                                                          \
  template AxiomReport check_grouplike(const GrouplikeCoring<K>&);                                              \
  template GrouplikeCoring<K> coring_from_comodule(const ComoduleAlgebra<K>&);                                  \
  template bool is_subalgebra(const Algebra<K>&, const Subspace<K>&);                                           \
  template GrouplikeCoring<K> canonical_coring(const Algebra<K>&, const Matrix<K>&);                            \
  template GrouplikeCoring<K> trivial_coring(const Algebra<K>&);                                                \
  template Coring<K> coring_from_coalgebra(const Coalgebra<K>&);                                                \
  template Subspace<K> coinvariants(const GrouplikeCoring<K>&);                                                 \
  template Subspace<K> comodule_coinvariants(const ComoduleAlgebra<K>&);                                        \
  template CanMap<K> can_map(const GrouplikeCoring<K>&, const Subspace<K>&);                                    \
  template GaloisEvidence is_galois(const GrouplikeCoring<K>&);                                                 \
  template GaloisEvidence hopf_galois_check(const ComoduleAlgebra<K>&);

HOPFDUAL_INSTANTIATE_CORING(Rational)
HOPFDUAL_INSTANTIATE_CORING(ModP)

}  // namespace hopfdual
