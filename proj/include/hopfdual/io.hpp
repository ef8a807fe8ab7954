// Instance files and reports.
//
// Instance files are JSON with an explicit format version. Every scalar is a
// string ("a/b" or an integer over Q, a decimal residue over GF(p)), matrices
// are row-major nested arrays, mul[i][j][k] is the coefficient of e_k in
// e_i e_j and comul[k][i][j] the coefficient of e_i (x) e_j in Delta(e_k).

#ifndef HOPFDUAL_IO_HPP
#define HOPFDUAL_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hopfdual/catalog.hpp"
#include "hopfdual/theorems.hpp"

namespace hopfdual {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceFormatVersion = 1;

/// Malformed input; `location` is a JSON pointer into the document, or
/// "line:column" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Parses text into a document; syntax errors carry line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// The field an instance document declares.
FieldSpec instance_field(const Json& doc);

template <class K>
Json export_matrix(const Matrix<K>& m);
template <class K>
Json export_vector(const Vector<K>& v);
template <class K>
Json export_algebra(const Algebra<K>& a);
template <class K>
Json export_hopf(const HopfAlgebra<K>& h);
template <class K>
Json export_instance(const Instance<K>& inst);

/// Inverse of export_instance. Structures are built as given; validation is
/// left to the axiom checkers.
template <class K>
Instance<K> import_instance(const Json& doc);

/// Canonical serialization: two-space indent, arrays of scalars on one line
/// and a trailing newline.
std::string dump(const Json& doc);

Json report_json(const AxiomReport& r);

template <class K>
Json report_json(const SuiteResult<K>& r, const FieldSpec& field);

template <class K>
std::string report_text(const SuiteResult<K>& r, const FieldSpec& field);

}  // namespace hopfdual

#endif  // HOPFDUAL_IO_HPP
