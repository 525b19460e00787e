#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "conjgen/cyclo.hpp"

namespace conjgen {

using ClassIndex = std::size_t;
using CharIndex = std::size_t;

class UnknownClassError : public std::out_of_range {
 public:
  explicit UnknownClassError(const std::string& name, const std::string& table = {})
      : std::out_of_range("unknown class '" + name + "'" +
                          (table.empty() ? std::string() : " in table " + table)),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Table data that cannot be what it claims: a non-integral structure
/// constant, an invalid fusion, a malformed row.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassInfo {
  std::string name;
  std::vector<std::string> aliases;
  unsigned element_order = 1;
  mpz_class centralizer_order = 1;
  /// prime p -> name of the class of p-th powers
  std::map<unsigned, std::string> power_maps;
};

/// Ordinary character table of a finite group G, immutable once built.
///
/// Class order is the order of the source data.  Names resolve first against
/// primary names, then against aliases ("16AB" and "16A" may address the same
/// class).
class CharacterTable {
 public:
  CharacterTable(std::string group_name, mpz_class group_order, unsigned socle_index,
                 std::vector<ClassInfo> classes,
                 std::vector<std::vector<CycloValue>> characters);

  const std::string& group_name() const noexcept { return group_name_; }
  const mpz_class& group_order() const noexcept { return group_order_; }
  unsigned socle_index() const noexcept { return socle_index_; }

  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t num_characters() const noexcept { return characters_.size(); }

  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  const ClassInfo& class_info(ClassIndex c) const { return classes_.at(c); }
  const std::string& class_name(ClassIndex c) const { return classes_.at(c).name; }

  const std::vector<CycloValue>& character(CharIndex chi) const { return characters_.at(chi); }
  const CycloValue& value(CharIndex chi, ClassIndex c) const { return characters_[chi][c]; }

  /// Index of the identity class (the unique class of element order 1).
  ClassIndex identity_class() const noexcept { return identity_; }
  const CycloValue& degree(CharIndex chi) const { return characters_.at(chi)[identity_]; }

  std::optional<ClassIndex> find_class(std::string_view name) const;
  /// Throws UnknownClassError.
  ClassIndex class_index(std::string_view name) const;

  /// True when the class lies in the kernel of every linear character, i.e.
  /// in the derived subgroup.  For the almost simple tables shipped here
  /// that is the socle; the remaining classes are the outer ones.
  bool is_inner(ClassIndex c) const { return inner_.at(c); }

  /// Copy with one entry replaced.
  CharacterTable with_value(CharIndex chi, ClassIndex c, CycloValue v) const;

  struct Term {
    unsigned exponent;
    mpq_class coeff;
  };
  /// Per-column views of the canonical values, shared between copies.
  struct Column {
    unsigned conductor = 1;
    std::vector<std::vector<Term>> terms;       // per character
    std::vector<std::vector<Term>> conj_terms;  // per character, complex conjugate
    bool integral = false;  // every value a rational integer fitting long
    std::vector<long> integers;
    std::size_t max_bits = 0;  // bit length of the largest |value| when integral
  };
  const Column& column(ClassIndex c) const { return (*columns_)[c]; }

 private:
  void index_names();
  void build_columns();
  void compute_inner();

  std::string group_name_;
  mpz_class group_order_;
  unsigned socle_index_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<CycloValue>> characters_;
  ClassIndex identity_ = 0;
  std::map<std::string, ClassIndex, std::less<>> primary_;
  std::map<std::string, ClassIndex, std::less<>> alias_;
  std::vector<bool> inner_;
  std::shared_ptr<const std::vector<Column>> columns_;
};

enum class Severity { error, warning };

struct ValidationIssue {
  Severity severity;
  std::string kind;
  std::string message;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool empty() const noexcept { return issues.empty(); }
  bool ok() const noexcept;
  std::size_t error_count() const noexcept;
};

/// Checks every table invariant exactly: divisibility of element and
/// centralizer orders, class sizes, power-map orders, the principal
/// character, the degree sum, and both orthogonality relations.
ValidationReport validate(const CharacterTable& t);

mpz_class class_size(const CharacterTable& t, ClassIndex c);

/// m(a, b, c): the number of pairs (u, v), u in a^G, v in b^G, with uv equal
/// to a fixed element of c, from
///   |G| / (|C(a)| |C(b)|) * sum_chi chi(a) chi(b) conj(chi(c)) / chi(1).
/// Throws TableError if the sum does not yield a nonnegative integer.
mpz_class struct_const(const CharacterTable& t, ClassIndex a, ClassIndex b, ClassIndex c);

/// m(a, b, c) for every class c, in class order.
std::vector<mpz_class> struct_const_row(const CharacterTable& t, ClassIndex a, ClassIndex b);

struct ProductTerm {
  ClassIndex cls;
  mpz_class coefficient;
};

/// Every class c with m(a, b, c) > 0, in class order.
std::vector<ProductTerm> product_classes(const CharacterTable& t, ClassIndex a, ClassIndex b);

/// (1/|G|) sum_c |c| chi(c) conj(psi(c)) for arbitrary class functions.
mpq_class inner_product(const CharacterTable& t, const std::vector<CycloValue>& chi,
                        const std::vector<CycloValue>& psi);
mpq_class inner_product(const CharacterTable& t, CharIndex chi, CharIndex psi);

struct SubgroupClass {
  std::string name;
  mpz_class size;
  unsigned element_order = 1;
};

/// Classes of a subgroup A together with the ambient class each one fuses
/// into.  Characters of A are not needed for restriction multiplicities.
struct FusionMap {
  std::string name;
  std::string ambient;
  std::string subgroup_name;
  mpz_class subgroup_order;
  std::vector<SubgroupClass> classes;
  std::vector<std::string> assignment;  // ambient class name, parallel to classes

  static FusionMap identity(const CharacterTable& t);
  static FusionMap trivial(const CharacterTable& t);
};

/// Ambient class index for each subgroup class.  Throws TableError on an
/// element-order mismatch or class sizes not summing to the subgroup order,
/// UnknownClassError on an unresolvable name.
std::vector<ClassIndex> resolve_fusion(const CharacterTable& t, const FusionMap& f);

/// (chi_A, 1_A) = (1/|A|) sum_k |k| chi(f(k)); throws TableError unless the
/// result is a nonnegative integer.
mpz_class restriction_inner_product(const CharacterTable& t, CharIndex chi, const FusionMap& f);
mpz_class restriction_inner_product(const CharacterTable& t, const std::vector<CycloValue>& chi,
                                    const FusionMap& f);

struct CharacterConstraint {
  enum class Kind { positive, negative, equals };
  std::string cls;
  Kind kind = Kind::positive;
  CycloValue value;
};

class CharacterSelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique irreducible of the given degree satisfying every constraint;
/// CharacterSelectionError on no match or several.
CharIndex find_character(const CharacterTable& t, long degree,
                         const std::vector<CharacterConstraint>& constraints);

}  // namespace conjgen
