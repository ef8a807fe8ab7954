// Evidence that a linear map between structure-constant rings is a ring
// (anti-)isomorphism. Every flag is recomputable from source, target and map.

#ifndef HOPFDUAL_CERTIFICATE_HPP
#define HOPFDUAL_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "hopfdual/algebra.hpp"

namespace hopfdual {

class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation { multiplicative, anti };

std::string to_string(Orientation o);

/// First basis pair (i, j) on which the claimed law fails, with f(e_i e_j)
/// and f(e_i) f(e_j) (or f(e_j) f(e_i) for anti maps).
template <class K>
struct Witness {
  Index i = 0;
  Index j = 0;
  Vector<K> image_of_product;
  Vector<K> product_of_images;
};

template <class K>
struct RingIsoCertificate {
  std::string name;
  Algebra<K> source;
  Algebra<K> target;
  Matrix<K> map;  // target.dim x source.dim
  Orientation claim = Orientation::multiplicative;

  Index rank = 0;
  bool bijective = false;
  bool unital = false;
  bool multiplicative = false;
  bool anti_multiplicative = false;
  /// Pairs (generator, basis) instead of all basis pairs.
  bool generator_mode = false;
  std::optional<Witness<K>> witness;

  bool passed() const {
    return bijective && unital && (claim == Orientation::multiplicative ? multiplicative : anti_multiplicative);
  }
};

/// Checks all basis pairs up to exhaustive_limit; above it, f(g b) against
/// f(g) f(b) for the generators g of the source and every basis element b,
/// which determines multiplicativity since words in the generators span.
template <class K>
RingIsoCertificate<K> certify_ring_map(std::string name, const Algebra<K>& source, const Algebra<K>& target,
                                       Matrix<K> map, Orientation claim, Index exhaustive_limit = 64);

/// Recomputes every flag and the witness; true iff they match the stored ones.
template <class K>
bool verify_certificate(const RingIsoCertificate<K>& c, Index exhaustive_limit = 64);

/// Certificate for second o first; the claim is multiplicative when the two
/// orientations agree and anti otherwise.
template <class K>
RingIsoCertificate<K> compose(const RingIsoCertificate<K>& second, const RingIsoCertificate<K>& first,
                              std::string name, Index exhaustive_limit = 64);

template <class K>
struct LinearIsoCertificate {
  std::string name;
  std::string source_description;
  std::string target_description;
  Index dim_source = 0;
  Index dim_target = 0;
  Matrix<K> map;
  Index rank = 0;
  bool bijective = false;

  bool passed() const { return bijective; }
};

template <class K>
LinearIsoCertificate<K> certify_linear_iso(std::string name, std::string source_description,
                                           std::string target_description, Matrix<K> map);

}  // namespace hopfdual

#endif  // HOPFDUAL_CERTIFICATE_HPP
