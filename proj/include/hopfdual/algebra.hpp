// Finite-dimensional algebras and coalgebras by structure constants.

#ifndef HOPFDUAL_ALGEBRA_HPP
#define HOPFDUAL_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfdual/linalg.hpp"

namespace hopfdual {

/// One named pass/fail entry of an axiom check.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const AxiomReport& other, const std::string& prefix);
  bool passed() const;
  /// Name of the first failing entry, empty if everything passed.
  std::string first_failure() const;
};

/// Dense rank-3 array t[i][j][k].
template <class K>
using Tensor3 = std::vector<std::vector<std::vector<K>>>;

/// Associative algebra with basis e_0..e_{dim-1}.
///
/// Structure constants e_i e_j = sum_k m[i][j][k] e_k are either given as a
/// table or produced on demand from a multiplication rule on coordinate
/// vectors. Rule-based algebras cache every basis product they compute; the
/// cache is internally synchronized, so values can be shared across threads.
template <class K>
class Algebra {
 public:
  using Rule = std::function<Vector<K>(const Vector<K>&, const Vector<K>&)>;

  Algebra() = default;

  /// products[i * dim + j] holds e_i e_j.
  static Algebra from_products(const FieldSpec& field, Index dim, std::vector<SparseVector<K>> products,
                               Vector<K> unit);
  static Algebra from_table(const FieldSpec& field, const Tensor3<K>& mul, Vector<K> unit);
  static Algebra from_rule(const FieldSpec& field, Index dim, Rule rule, Vector<K> unit);

  const FieldSpec& field() const { return impl_->field; }
  Index dim() const { return impl_->dim; }
  const Vector<K>& unit() const { return impl_->unit; }
  bool has_rule() const { return static_cast<bool>(impl_->rule); }

  /// e_i e_j.
  const SparseVector<K>& product(Index i, Index j) const;
  Vector<K> multiply(const Vector<K>& x, const Vector<K>& y) const;
  Vector<K> basis(Index i) const { return unit_vector<K>(field(), dim(), i); }

  /// Matrix of y -> x y.
  Matrix<K> left_multiplication(const Vector<K>& x) const;
  /// Matrix of y -> y x.
  Matrix<K> right_multiplication(const Vector<K>& x) const;
  /// dim x dim^2 matrix of the multiplication map A (x) A -> A.
  Matrix<K> multiplication_matrix() const;
  Tensor3<K> table() const;

  Algebra opposite() const;

 private:
  struct Impl {
    FieldSpec field;
    Index dim = 0;
    Vector<K> unit;
    Rule rule;
    mutable std::mutex mutex;
    mutable std::vector<std::unique_ptr<SparseVector<K>>> cache;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Coalgebra with Delta(e_k) = sum d[k][i][j] e_i (x) e_j; stored as the
/// dim^2 x dim matrix of Delta and the counit as a coefficient vector.
template <class K>
struct Coalgebra {
  FieldSpec field;
  Index dim = 0;
  Matrix<K> comul;
  Vector<K> counit;

  static Coalgebra from_table(const FieldSpec& field, const Tensor3<K>& comul, Vector<K> counit);
  Tensor3<K> table() const;
  /// The counit as a 1 x dim matrix.
  Matrix<K> counit_row() const { return counit.transpose(); }
  Coalgebra coopposite() const;
};

/// Exhaustive associativity and unit checks. Algebras above `exhaustive_limit`
/// dimensions are checked on `samples` seeded random basis triples.
template <class K>
AxiomReport check_algebra(const Algebra<K>& a, Index exhaustive_limit = 64, int samples = 4096);

template <class K>
AxiomReport check_coalgebra(const Coalgebra<K>& c);

/// Basis vectors e_i chosen greedily so that 1 together with all words in
/// them spans the algebra; `spans` records that the closure reached full
/// dimension.
template <class K>
struct GeneratingSet {
  std::vector<Index> indices;
  bool spans = false;
};

template <class K>
GeneratingSet<K> algebra_generators(const Algebra<K>& a);

/// Algebra structure on A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb'.
template <class K>
Algebra<K> tensor_algebra(const Algebra<K>& a, const Algebra<K>& b);

/// The swap V (x) W -> W (x) V.
template <class K>
Matrix<K> swap_matrix(const FieldSpec& field, Index dim_v, Index dim_w);

}  // namespace hopfdual

#endif  // HOPFDUAL_ALGEBRA_HPP
