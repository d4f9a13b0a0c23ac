#pragma once

// K₀ of a finitely presented assembler: the free abelian group on objects
// modulo [A] = Σ [A_i] for every covering family, together with the maps
// induced by functors between presentations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bost/equivariant.hpp"
#include "bost/graded_endo.hpp"
#include "bost/number.hpp"

namespace bost {

struct CoveringFamily {
  std::string target;
  std::vector<std::string> parts;

  friend bool operator==(const CoveringFamily&, const CoveringFamily&) = default;
};

class AssemblerPresentation {
 public:
  AssemblerPresentation() = default;
  /// Throws InvalidInput on duplicate objects or unknown labels in families.
  AssemblerPresentation(std::vector<std::string> objects, std::vector<CoveringFamily> families);

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<CoveringFamily>& families() const noexcept { return families_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const AssemblerPresentation& a, const AssemblerPresentation& b) {
    return a.objects_ == b.objects_ && a.families_ == b.families_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<CoveringFamily> families_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// An integer combination of object labels.
using ObjectCombination = std::map<std::string, Integer>;

struct K0Presentation {
  std::int64_t rank = 0;
  /// Invariant factors d_1 | d_2 | ... with every d_i > 1.
  std::vector<Integer> torsion;
  /// Class of each object: torsion coordinates (reduced mod d_i) first, then
  /// the free coordinates.
  std::map<std::string, std::vector<Integer>> basis_map;
  /// Combinations of objects representing the coordinate generators, in the
  /// same order as the coordinates.
  std::vector<ObjectCombination> generators;

  std::size_t coordinates() const noexcept { return torsion.size() + static_cast<std::size_t>(rank); }
  /// Class of a combination; throws InvalidInput on an unknown label.
  std::vector<Integer> class_of(const ObjectCombination& x) const;
  std::vector<Integer> reduce(std::vector<Integer> y) const;
  bool is_zero_class(const std::vector<Integer>& y) const;
};

K0Presentation k0_from_presentation(const AssemblerPresentation& p);

/// Matrix of the homomorphism K₀(p) → K₀(q) induced by sending each object
/// of p to a combination of objects of q; column j is the image of
/// generator j of kp, rows are the coordinates of kq (torsion rows reduced).
/// Throws RelationViolation naming the first family whose image is not a
/// relation of q, InvalidInput on missing or unknown labels.
IntMatrix induced_k0_map(const AssemblerPresentation& p, const K0Presentation& kp, const AssemblerPresentation& q,
                         const K0Presentation& kq, const std::map<std::string, ObjectCombination>& images);

/// The functor given on objects by object_map, scaled by multiplicity_map
/// (default 1).
IntMatrix induced_k0_map(const AssemblerPresentation& p, const AssemblerPresentation& q,
                         const std::map<std::string, std::string>& object_map,
                         const std::map<std::string, Integer>& multiplicity_map = {});

/// Finite Ẑ-sets whose orbit lengths lie in `lengths` and whose size is at
/// most max_size, ordered by size, then number of orbits, then label; one
/// family per unordered decomposition into two non-empty invariant parts.
AssemblerPresentation finite_set_assembler(const std::vector<std::int64_t>& lengths, std::int64_t max_size);

/// Z/N-sets of size at most 2N.
AssemblerPresentation finite_set_assembler(std::int64_t n);

/// The object map X ↦ f(X) between finite-set presentations for an
/// endofunctor f acting on orbit multisets.
template <class F>
std::map<std::string, ObjectCombination> orbit_functor_images(const AssemblerPresentation& p, F&& f) {
  std::map<std::string, ObjectCombination> images;
  for (const auto& label : p.objects()) images[label] = {{f(OrbitSum::parse_label(label)).label(), 1}};
  return images;
}

}  // namespace bost
