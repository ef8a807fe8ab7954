#include "hopfdual/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hopfdual {

// -------------------------------------------------------------------- groups

void GroupTable::validate() const {
  if (order <= 0 || static_cast<int>(product.size()) != order) throw InvalidGroup("group table has the wrong shape");
  for (const auto& row : product) {
    if (static_cast<int>(row.size()) != order) throw InvalidGroup("group table has the wrong shape");
    for (int v : row)
      if (v < 0 || v >= order) throw InvalidGroup("group table entry out of range");
  }
  if (identity < 0 || identity >= order) throw InvalidGroup("identity index out of range");
  for (int g = 0; g < order; ++g)
    if (product[identity][g] != g || product[g][identity] != g) throw InvalidGroup("identity law fails");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]]) {
          throw InvalidGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
        }
  for (int g = 0; g < order; ++g) inverse(g);
}

int GroupTable::inverse(int g) const {
  for (int h = 0; h < order; ++h)
    if (product[g][h] == identity && product[h][g] == identity) return h;
  throw InvalidGroup("element " + std::to_string(g) + " has no inverse");
}

GroupTable GroupTable::cyclic(int n) {
  GroupTable t;
  t.order = n;
  t.product.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.product[i][j] = (i + j) % n;
  return t;
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GroupTable t;
  t.order = 6;
  t.product.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t.product[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

template <class K>
HopfAlgebra<K> group_algebra(const GroupTable& t, const FieldSpec& f) {
  t.validate();
  const Index n = t.order;
  const K one = make_scalar<K>(f, 1);
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(n * n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) products[a * n + b].push(t.product[a][b], one);
  Algebra<K> alg = Algebra<K>::from_products(f, n, std::move(products), unit_vector<K>(f, n, t.identity));
  Matrix<K> comul = zero_matrix<K>(f, n * n, n);
  Matrix<K> s = zero_matrix<K>(f, n, n);
  for (Index g = 0; g < n; ++g) {
    comul(g * n + g, g) = one;
    s(t.inverse(static_cast<int>(g)), g) = one;
  }
  Vector<K> counit = Vector<K>::Constant(n, one);
  return {std::move(alg), Coalgebra<K>{f, n, std::move(comul), std::move(counit)}, std::move(s)};
}

template <class K>
HopfAlgebra<K> sweedler_h4(const FieldSpec& f) {
  if (f.characteristic() == 2) throw BadCharacteristic("Sweedler's Hopf algebra needs characteristic other than 2");
  auto k = [&](long long v) { return make_scalar<K>(f, v); };
  const Index n = 4;  // 1, g, x, gx
  Tensor3<K> mul(n, std::vector<std::vector<K>>(n, std::vector<K>(n, k(0))));
  for (Index i = 0; i < n; ++i) {
    mul[0][i][i] = k(1);
    mul[i][0][i] = k(1);
  }
  mul[1][1][0] = k(1);   // g g = 1
  mul[1][2][3] = k(1);   // g x = gx
  mul[1][3][2] = k(1);   // g gx = x
  mul[2][1][3] = k(-1);  // x g = -gx
  mul[3][1][2] = k(-1);  // gx g = -x
  Algebra<K> alg = Algebra<K>::from_table(f, mul, unit_vector<K>(f, n, 0));

  Matrix<K> comul = zero_matrix<K>(f, n * n, n);
  comul(0 * n + 0, 0) = k(1);
  comul(1 * n + 1, 1) = k(1);
  comul(2 * n + 0, 2) = k(1);  // x (x) 1
  comul(1 * n + 2, 2) = k(1);  // g (x) x
  comul(3 * n + 1, 3) = k(1);  // gx (x) g
  comul(0 * n + 3, 3) = k(1);  // 1 (x) gx
  Vector<K> counit = zero_vector<K>(f, n);
  counit(0) = k(1);
  counit(1) = k(1);

  Matrix<K> s = zero_matrix<K>(f, n, n);
  s(0, 0) = k(1);
  s(1, 1) = k(1);
  s(3, 2) = k(-1);  // S(x) = -gx
  s(2, 3) = k(1);   // S(gx) = x
  return {std::move(alg), Coalgebra<K>{f, n, std::move(comul), std::move(counit)}, std::move(s)};
}

template <class K>
ComoduleAlgebra<K> regular_comodule_algebra(const HopfAlgebra<K>& h) {
  return {h.algebra, h, h.comul()};
}

template <class K>
ComoduleAlgebra<K> trivial_comodule_algebra(const Algebra<K>& a, const HopfAlgebra<K>& h) {
  return {a, h, kron(identity<K>(a.field(), a.dim()), Matrix<K>(h.unit()))};
}

template <class K>
Algebra<K> ground_algebra(const FieldSpec& f) {
  std::vector<SparseVector<K>> products(1);
  products[0].push(0, make_scalar<K>(f, 1));
  return Algebra<K>::from_products(f, 1, std::move(products), unit_vector<K>(f, 1, 0));
}

template <class K>
ComoduleAlgebra<K> graded_c2_algebra(const FieldSpec& f) {
  const K one = make_scalar<K>(f, 1);
  std::vector<SparseVector<K>> products(4);
  products[0].push(0, one);  // 1 1 = 1
  products[1].push(1, one);  // 1 x = x
  products[2].push(1, one);  // x 1 = x
  Algebra<K> a = Algebra<K>::from_products(f, 2, std::move(products), unit_vector<K>(f, 2, 0));
  HopfAlgebra<K> h = group_algebra<K>(GroupTable::cyclic(2), f);
  Matrix<K> rho = zero_matrix<K>(f, 4, 2);
  rho(0 * 2 + 0, 0) = one;  // 1 -> 1 (x) 1
  rho(1 * 2 + 1, 1) = one;  // x -> x (x) g
  return {std::move(a), std::move(h), std::move(rho)};
}

// ------------------------------------------------------------------ catalog

template <class K>
const RelativeHopfModule<K>* Instance<K>::find_module(const std::string& module_name) const {
  for (const auto& m : modules)
    if (m.name == module_name) return &m.module;
  return nullptr;
}

std::vector<CatalogEntry> catalog_entries(bool include_extended) {
  std::vector<CatalogEntry> out = {
      {"I1", "kC2 coacting on itself by comultiplication", false},
      {"I2", "kC3 coacting on itself by comultiplication", false},
      {"I3", "Sweedler H4 coacting on itself by comultiplication", false},
      {"I4", "k[x]/(x^2) graded by C2, coacted on by kC2", false},
      {"I5", "Sweedler H4 coacting trivially on k", false},
  };
  if (include_extended) {
    out.push_back({"E1", "kS3 coacting on itself by comultiplication", true});
    out.push_back({"E2", "kS3 coacting trivially on k", true});
  }
  return out;
}

template <class K>
Instance<K> catalog_instance(const std::string& name, const FieldSpec& f) {
  if (!field_matches<K>(f)) throw std::invalid_argument("catalog_instance: scalar type does not match the field");
  Instance<K> inst;
  inst.name = name;
  inst.field = f;
  for (const auto& e : catalog_entries(true))
    if (e.name == name) inst.description = e.description;
  if (inst.description.empty()) throw UnknownInstance("unknown instance '" + name + "'");

  if (name == "I1") {
    inst.hopf = group_algebra<K>(GroupTable::cyclic(2), f);
    inst.comodule = regular_comodule_algebra(inst.hopf);
  } else if (name == "I2") {
    inst.hopf = group_algebra<K>(GroupTable::cyclic(3), f);
    inst.comodule = regular_comodule_algebra(inst.hopf);
  } else if (name == "I3") {
    inst.hopf = sweedler_h4<K>(f);
    inst.comodule = regular_comodule_algebra(inst.hopf);
  } else if (name == "I4") {
    inst.comodule = graded_c2_algebra<K>(f);
    inst.hopf = inst.comodule->hopf;
  } else if (name == "I5") {
    inst.hopf = sweedler_h4<K>(f);
    inst.comodule = trivial_comodule_algebra(ground_algebra<K>(f), inst.hopf);
  } else if (name == "E1") {
    inst.hopf = group_algebra<K>(GroupTable::symmetric3(), f);
    inst.comodule = regular_comodule_algebra(inst.hopf);
  } else if (name == "E2") {
    inst.hopf = group_algebra<K>(GroupTable::symmetric3(), f);
    inst.comodule = trivial_comodule_algebra(ground_algebra<K>(f), inst.hopf);
  }
  inst.modules.push_back({"A", regular_module(*inst.comodule)});
  inst.modules.push_back({"AH", canonical_module(*inst.comodule)});
  return inst;
}

#define HOPFDUAL_INSTANTIATE_CATALOG(K)                                                     \
  template HopfAlgebra<K> group_algebra<K>(const GroupTable&, const FieldSpec&);            \
  template HopfAlgebra<K> sweedler_h4<K>(const FieldSpec&);                                 \
  template ComoduleAlgebra<K> regular_comodule_algebra(const HopfAlgebra<K>&);              \
  template ComoduleAlgebra<K> trivial_comodule_algebra(const Algebra<K>&, const HopfAlgebra<K>&); \
  template ComoduleAlgebra<K> graded_c2_algebra<K>(const FieldSpec&);                       \
  template Algebra<K> ground_algebra<K>(const FieldSpec&);                                  \
  template struct Instance<K>;                                                              \
  template Instance<K> catalog_instance<K>(const std::string&, const FieldSpec&);

HOPFDUAL_INSTANTIATE_CATALOG(Rational)
HOPFDUAL_INSTANTIATE_CATALOG(ModP)

}  // namespace hopfdual
