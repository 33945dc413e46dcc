#pragma once

// Endomorphisms and automorphisms of a finite abelian group, given by the images of the
// standard generators e_i, and the conjugation action of Aut(G) on itself.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alexq/abelian.hpp"

namespace alexq {

class Endomorphism {
 public:
  Endomorphism() = default;
  // images[i] is the image of e_i; each must be killed by d_i. Throws InvalidArgument otherwise.
  Endomorphism(AbelianGroup group, std::vector<GroupElement> images);

  static Endomorphism identity(const AbelianGroup& group);
  // Scalar multiplication by k.
  static Endomorphism scalar(const AbelianGroup& group, long long k);
  // "0,1;3,2" means e1 ↦ (0,1), e2 ↦ (3,2). Empty text for the trivial group.
  static Endomorphism parse(const AbelianGroup& group, std::string_view text);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& images() const noexcept { return images_; }

  GroupElement apply(const GroupElement& x) const;
  // Table of images by element index.
  std::vector<std::uint32_t> permutation() const;
  bool is_bijective() const;

  std::string to_string() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.group_ == b.group_ && a.images_ == b.images_;
  }
  // Lexicographic by flattened image coordinates.
  friend auto operator<=>(const Endomorphism& a, const Endomorphism& b) {
    if (auto c = a.group_ <=> b.group_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> images_;
};

class Automorphism : public Endomorphism {
 public:
  Automorphism() = default;
  // Throws InvalidArgument when the map is not bijective.
  explicit Automorphism(Endomorphism f);
  Automorphism(AbelianGroup group, std::vector<GroupElement> images)
      : Automorphism(Endomorphism(std::move(group), std::move(images))) {}

  static Automorphism identity(const AbelianGroup& group) { return Automorphism(Endomorphism::identity(group)); }
  static Automorphism parse(const AbelianGroup& group, std::string_view text) {
    return Automorphism(Endomorphism::parse(group, text));
  }
};

// f ∘ g (apply g first).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);
Automorphism compose(const Automorphism& f, const Automorphism& g);
// Throws InvalidArgument if f is not bijective.
Automorphism invert(const Endomorphism& f);

struct EnumerationOptions {
  // Maximum number of generator-image tuples |G|^rank that may be examined.
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

// All automorphisms, lexicographically ordered. Throws BudgetError when |G|^rank > budget.
std::vector<Automorphism> enumerate_automorphisms(const AbelianGroup& group, const EnumerationOptions& options = {});

struct ConjugacyClass {
  Automorphism representative;  // least member
  std::size_t size = 0;
};

// One entry per conjugacy class of Aut(G), sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const AbelianGroup& group, const EnumerationOptions& options = {});
std::vector<Automorphism> conjugacy_representatives(const AbelianGroup& group, const EnumerationOptions& options = {});

// Quantities shared by conjugate automorphisms.
struct ConjugacyInvariants {
  std::size_t order = 1;
  std::vector<std::size_t> cycle_type;  // sorted cycle lengths of the action on G
  std::size_t image_one_minus_size = 1;  // |Im(Id − φ)|

  friend bool operator==(const ConjugacyInvariants&, const ConjugacyInvariants&) = default;
};
ConjugacyInvariants conjugacy_invariants(const Endomorphism& f);

// Returns h with f = h⁻¹∘g∘h when one exists. The overload taking `automorphisms` searches
// that precomputed list (which must be all of Aut(G)) instead of re-enumerating.
std::optional<Automorphism> is_conjugate(const AbelianGroup& group, const Automorphism& f, const Automorphism& g);
std::optional<Automorphism> is_conjugate(const AbelianGroup& group, const Automorphism& f, const Automorphism& g,
                                         std::span<const Automorphism> automorphisms);

// Lexicographically least element of the conjugacy class of f within the given Aut(G).
Automorphism least_conjugate(const Automorphism& f, std::span<const Automorphism> automorphisms);

}  // namespace alexq
