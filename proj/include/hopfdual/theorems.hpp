// Verification suites. Each suite builds both sides of an isomorphism
// independently, evaluates the explicit map between them and certifies it.

#ifndef HOPFDUAL_THEOREMS_HPP
#define HOPFDUAL_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/catalog.hpp"
#include "hopfdual/certificate.hpp"
#include "hopfdual/duals.hpp"

namespace hopfdual {

enum class SuiteStatus { pass, fail, precondition };

std::string to_string(SuiteStatus s);

template <class K>
struct SuiteResult {
  std::string suite;
  std::string instance;
  std::string module_name;
  SuiteStatus status = SuiteStatus::fail;
  std::string message;
  AxiomReport checks;
  std::vector<std::pair<std::string, Index>> dims;
  std::vector<RingIsoCertificate<K>> rings;
  std::vector<LinearIsoCertificate<K>> linear;
  std::optional<GaloisEvidence> galois;

  bool passed() const { return status == SuiteStatus::pass; }
  std::optional<Index> dim(const std::string& name) const;
  const RingIsoCertificate<K>* ring(const std::string& name) const;
};

/// Ring isomorphisms between the duals of A (x) H, big smash products and
/// A # H*: (i) C* -> #(H, A), (ii) *C -> #(H^op, A^op)^op, (iii) the twist
/// A # H* -> (A^op # H^{*cop})^op, (iv) *C -> A # H*.
template <class K>
SuiteResult<K> verify_smash_duals(const ComoduleAlgebra<K>& c);

/// The right dual D* of the canonical coring D = R (x)_A R, R = *C, against
/// End(_A C): alpha and beta, gamma and delta, and the composite
/// anti-isomorphism D* -> End(_A C).
template <class K>
SuiteResult<K> verify_dual_coring(const Coring<K>& c);

/// Hom_k(H*, *C) with the big smash structure against End((*C)_A) through
/// f -> (c* -> f(c*_[1]) c*_[0]), together with the commuting diagram.
template <class K>
SuiteResult<K> verify_duality(const ComoduleAlgebra<K>& c);

/// Hom_A(M (x)_A C, N) against Hom_B(M, N) for a Galois coring; M and N are
/// right A-modules given by their action matrices (column m * dim A + a).
template <class K>
SuiteResult<K> verify_galois_hom(const GrouplikeCoring<K>& g, const Matrix<K>& m_action, Index dim_m,
                                 const Matrix<K>& n_action, Index dim_n);

/// End_A(M) # H* against End_B(M) through f # phi -> (m -> f(phi . m)), and
/// the proof chain through Hom_A(M (x)_A C, M).
template <class K>
SuiteResult<K> verify_schneider(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m);

/// Both parts of Ulbrich's theorem for the canonical module M = A (x) H:
/// (ii) A # H* -> End^H_A(M) and (i) End^H_A(M) # H -> End_A(M).
template <class K>
SuiteResult<K> verify_ulbrich(const ComoduleAlgebra<K>& c);

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs a named suite on an instance. T1 takes module "AH" for the coring
/// A (x) H and "trivial" for A as a coring over itself; T4 and T5 take the
/// module name ("A" or "AH"), with N = M.
template <class K>
SuiteResult<K> run_suite(const std::string& suite, const Instance<K>& inst, const std::string& module_name);

}  // namespace hopfdual

#endif  // HOPFDUAL_THEOREMS_HPP
