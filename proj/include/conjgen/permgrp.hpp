#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace conjgen {

class DegreeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CycleSyntaxError : public std::invalid_argument {
 public:
  CycleSyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument("at offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an enumeration would exceed the configured element bound.
class ResourceBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationBound = 10'000'000;

/// A permutation of {0, ..., degree-1}; printed and parsed 1-based in cycle
/// notation.  Products act left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless images is a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);

  /// Parses "(1,2,3)(4,5)" or "()"; degree 0 means the largest point named.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;
  Permutation pow(long e) const;
  /// x^g = g^-1 x g
  Permutation conjugate_by(const Permutation& g) const;
  std::optional<std::uint32_t> first_moved_point() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Permutation group with a base and strong generating set, built by
/// deterministic Schreier-Sims.
class PermGroup {
 public:
  struct Level {
    std::uint32_t base_point;
    std::vector<Permutation> generators;     // strong generators fixing earlier base points
    std::vector<std::uint32_t> orbit;        // basic orbit, orbit[0] == base_point
    std::vector<std::int32_t> orbit_index;   // point -> position in orbit, -1 if absent
    std::vector<Permutation> transversal;    // transversal[j] maps base_point to orbit[j]
    std::vector<Permutation> inverse_transversal;
  };

  /// Throws DegreeMismatchError.  degree is only consulted when gens is empty.
  explicit PermGroup(std::vector<Permutation> gens, std::size_t degree = 0);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  std::vector<std::uint32_t> base() const;
  std::vector<Permutation> strong_generators() const;
  const std::vector<Level>& levels() const noexcept { return levels_; }

  const mpz_class& order() const noexcept { return order_; }
  /// Throws DegreeMismatchError.
  bool contains(const Permutation& p) const;
  Permutation identity() const { return Permutation(degree_); }

  /// Position of p in the transversal enumeration, in [0, order); p must be
  /// a member.
  std::uint64_t rank(const Permutation& p) const;
  Permutation unrank(std::uint64_t r) const;

  /// Every element, in rank order.  Throws ResourceBoundError.
  std::vector<Permutation> elements(std::size_t bound = kDefaultEnumerationBound) const;

  /// Uniform random element from 64 random bits per level.
  Permutation random_element(const std::function<std::uint64_t()>& bits) const;

 private:
  void schreier_sims();
  void rebuild_orbit(Level& lvl) const;
  /// Strips p through levels from `from`; returns the residue and the level
  /// at which stripping stopped (levels_.size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  mpz_class order_;
};

PermGroup build_group(std::vector<Permutation> gens);

/// A conjugacy class as the explicit conjugation orbit of its representative.
struct ConjClass {
  Permutation representative;
  std::vector<Permutation> members;  // members[0] == representative
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  mpz_class centralizer_order;
  /// Schreier vector of the orbit: members[i] = members[parent[i]]^gens[via[i]].
  std::vector<std::int64_t> parent;
  std::vector<std::uint32_t> via;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Permutation& p) const { return index.count(p) != 0; }
  /// Some u with representative^u == members[i].
  Permutation conjugator(const std::vector<Permutation>& gens, std::size_t i) const;
};

/// Conjugation orbit of rep; throws ResourceBoundError past bound members.
ConjClass conjugacy_class(const PermGroup& g, const Permutation& rep,
                          std::size_t bound = kDefaultEnumerationBound);

/// All classes of an enumerable group, identity class first, others in
/// order of first appearance in the element enumeration.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g,
                                         std::size_t bound = kDefaultEnumerationBound);

/// C_g(x) from Schreier generators of the conjugation orbit of x, accepted
/// once its order reaches |g| / |x^g|.
PermGroup centralizer(const PermGroup& g, const ConjClass& cls_of_x);

/// Checks supplied generators against x: each must commute with x and the
/// group they generate must have order |g| / |x^g|.  Throws
/// std::invalid_argument otherwise.
PermGroup verified_centralizer(const PermGroup& g, const ConjClass& cls_of_x,
                               std::vector<Permutation> gens);

/// Number of u in a with u^-1 c_rep in b.
mpz_class brute_struct_const(const PermGroup& g, const ConjClass& a, const ConjClass& b,
                             const Permutation& c_rep);

/// Smallest k <= max_k such that k conjugates of x generate a subgroup
/// containing socle; nullopt when max_k is exceeded.  Requires an enumerable
/// group.  Throws std::invalid_argument on a violated precondition.
std::optional<unsigned> brute_alpha(const PermGroup& g, const PermGroup& socle,
                                    const Permutation& x, unsigned max_k,
                                    std::size_t bound = kDefaultEnumerationBound);

/// Orbits of the group generated by `acting` on the set, by conjugation.
std::vector<std::vector<std::size_t>> conjugation_orbits(const std::vector<Permutation>& set,
                                                         const std::vector<Permutation>& acting);

std::size_t pair_orbit_count(const PermGroup& g, const std::vector<Permutation>& cls,
                             const Permutation& fixed);
std::size_t pair_orbit_count(const PermGroup& g, const ConjClass& cls, const Permutation& fixed);

struct PairLabel {
  Permutation partner;     // orbit representative s of the pair (rep, s)
  std::size_t orbit_size;  // elements covered, with the inverse orbit merged in
  mpz_class order;         // |<rep, s>|
  std::string label;       // Z3, Z3xZ3, A4, SL2(3), A5 or other(N)
};

/// Labels <d1, d2> for d1 the first element of `set` and d2 running over
/// representatives of the orbits of C_g(d1) on `set`, an orbit and the orbit
/// of its inverses counted once.  Every element must have order 3.
std::vector<PairLabel> classify_two_generated(const PermGroup& g,
                                              const std::vector<Permutation>& set,
                                              std::size_t bound = kDefaultEnumerationBound);
std::vector<PairLabel> classify_two_generated(const PermGroup& g, const ConjClass& cls,
                                              std::size_t bound = kDefaultEnumerationBound);

/// Isomorphism label of a group generated by elements of order 3.
std::string order3_subgroup_label(const PermGroup& h, const std::vector<Permutation>& gens,
                                  std::size_t bound = kDefaultEnumerationBound);

}  // namespace conjgen
