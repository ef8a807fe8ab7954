// Named instances: group algebras, Sweedler's four-dimensional Hopf algebra
// and stock comodule algebras over them.

#ifndef HOPFDUAL_CATALOG_HPP
#define HOPFDUAL_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/smash.hpp"

namespace hopfdual {

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadCharacteristic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> product;
  int identity = 0;

  /// Throws InvalidGroup unless the table is a group.
  void validate() const;
  int inverse(int g) const;

  static GroupTable cyclic(int n);
  static GroupTable symmetric3();
};

template <class K>
HopfAlgebra<K> group_algebra(const GroupTable& t, const FieldSpec& f);

/// Basis {1, g, x, gx}; throws BadCharacteristic over GF(2).
template <class K>
HopfAlgebra<K> sweedler_h4(const FieldSpec& f);

template <class K>
ComoduleAlgebra<K> regular_comodule_algebra(const HopfAlgebra<K>& h);

template <class K>
ComoduleAlgebra<K> trivial_comodule_algebra(const Algebra<K>& a, const HopfAlgebra<K>& h);

/// k[x]/(x^2) over kC_2 with rho(x) = x (x) g.
template <class K>
ComoduleAlgebra<K> graded_c2_algebra(const FieldSpec& f);

/// The one-dimensional algebra k.
template <class K>
Algebra<K> ground_algebra(const FieldSpec& f);

template <class K>
struct NamedModule {
  std::string name;
  RelativeHopfModule<K> module;
};

template <class K>
struct Instance {
  std::string name;
  std::string description;
  FieldSpec field;
  HopfAlgebra<K> hopf;
  std::optional<ComoduleAlgebra<K>> comodule;
  std::vector<NamedModule<K>> modules;

  const RelativeHopfModule<K>* find_module(const std::string& module_name) const;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  bool extended = false;
};

/// I1..I5, then the extended instances.
std::vector<CatalogEntry> catalog_entries(bool include_extended);

/// Builds a named instance with modules "A" and "AH" (the canonical
/// relative Hopf module A (x) H).
template <class K>
Instance<K> catalog_instance(const std::string& name, const FieldSpec& f);

}  // namespace hopfdual

#endif  // HOPFDUAL_CATALOG_HPP
