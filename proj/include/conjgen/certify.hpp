#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "conjgen/chartab.hpp"

namespace conjgen {

struct MaxSubgroupEntry {
  std::string description;
  mpz_class order;
  bool inside_socle = false;
  std::vector<unsigned long> excluded_element_orders;
};

/// Maximal subgroups of one group.  A complete list covers every maximal
/// subgroup; a partial list covers those whose order is divisible by every
/// prime in covers_prime_divisors, on the authority of `citation`.
struct MaximalSubgroupData {
  std::string group_name;
  bool complete = true;
  std::string citation;
  std::vector<unsigned> covers_prime_divisors;
  std::vector<MaxSubgroupEntry> entries;
};

struct CharacterSelector {
  long degree = 0;
  std::vector<CharacterConstraint> constraints;
};

struct StructConstPositive {
  std::string a, b, c;
  std::optional<mpz_class> expected;
};

/// x1 x2 in c1, x3 (x1 x2) in c2, ...: r chain classes give r + 1 elements
/// of the seed class generating a subgroup that contains elements of every
/// chain class.
struct ChainGeneration {
  std::string seed_class;
  std::vector<std::string> intermediate_classes;
  std::vector<unsigned> required_prime_divisors;
  std::vector<unsigned long> required_element_orders;
  std::string max_data;
};

struct SpreadAxiom {
  unsigned p = 0;
  std::string citation;
};

/// For every g outside the socle some element of `cls` generates G with g.
struct BeamableAxiom {
  std::string cls;
  std::string citation;
};

struct BrauerProper {
  CharacterSelector character;
  std::string fusion_a, fusion_b, fusion_ab;
};

struct BrauerCase {
  std::string product_class;
  std::string fusion_a;
};

struct BrauerCaseAnalysis {
  CharacterSelector character;
  std::string fusion_b;
  std::string fusion_ab;
  std::vector<BrauerCase> cases;
};

struct InvolutionLowerBound {};

struct TranspositionBound {
  unsigned long k = 0;
};

struct ClassificationAxiom {
  std::string citation;
  std::string conclusion;  // "alpha > n", "alpha >= n", "alpha <= n", "alpha < n", "alpha = n"
  std::vector<std::size_t> premise_steps;
};

using Step = std::variant<StructConstPositive, ChainGeneration, SpreadAxiom, BeamableAxiom,
                          BrauerProper, BrauerCaseAnalysis, InvolutionLowerBound,
                          TranspositionBound, ClassificationAxiom>;

/// Tag of a step as written in claim files ("struct_const_positive", ...).
std::string step_kind(const Step& s);

struct Claim {
  std::string name;
  std::string group;
  std::string socle_class;
  unsigned asserted_lower = 0;
  std::optional<unsigned> asserted_upper;  // nullopt: unbounded
  bool data_optional = false;
  std::string description;
  std::vector<Step> steps;
};

/// Malformed claim content, as opposed to a step that runs and fails.
class ClaimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StepResult {
  std::string kind;
  bool passed = false;
  std::string summary;
  /// Recorded exact numbers, e.g. {"m(2B,2B,14A)", "14"}, in computation order.
  std::vector<std::pair<std::string, std::string>> values;
  std::optional<unsigned> lower;  // conclusion alpha >= lower
  std::optional<unsigned> upper;  // conclusion alpha <= upper
  std::vector<std::string> axioms;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

enum class VerdictStatus { verified, refuted, incomplete, skipped };

std::string to_string(VerdictStatus s);
std::optional<VerdictStatus> parse_status(std::string_view s);

struct Verdict {
  std::string claim;
  std::string group;
  std::string socle_class;
  unsigned asserted_lower = 0;
  std::optional<unsigned> asserted_upper;
  unsigned alpha_lower = 2;
  std::optional<unsigned> alpha_upper;  // nullopt: infinity
  std::vector<StepResult> steps;
  std::vector<std::string> axioms_assumed;
  VerdictStatus status = VerdictStatus::incomplete;
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

using FusionLibrary = std::map<std::string, FusionMap, std::less<>>;
using MaxDataLibrary = std::map<std::string, MaximalSubgroupData, std::less<>>;

StepResult check_struct_positive(const CharacterTable& t, const StructConstPositive& s);

StepResult check_chain_generation(const CharacterTable& t, const ChainGeneration& s,
                                  const MaximalSubgroupData* m);

/// Sufficient condition: (chi_A, 1_A) + (chi_B, 1_B) >
/// (chi_{A cap B}, 1_{A cap B}) for a nonprincipal irreducible chi shows
/// <A, B> is proper.
StepResult check_brauer(const CharacterTable& t, const CharacterSelector& chi, const FusionMap& a,
                        const FusionMap& b, const FusionMap& ab);

StepResult check_brauer_case_analysis(const CharacterTable& t, const std::string& socle_class,
                                      const BrauerCaseAnalysis& s, const FusionLibrary& fusions);

StepResult check_transposition_bound(const CharacterTable& t, const std::string& cls,
                                     unsigned long k);

StepResult check_spread_step(const CharacterTable& t, const std::string& socle_class,
                             const SpreadAxiom& s, const mpz_class& socle_order);

StepResult check_beamable(const CharacterTable& t, const std::string& socle_class,
                          const BeamableAxiom& s);

StepResult check_involution_lower_bound(const CharacterTable& t, const std::string& socle_class);

/// Resolves "trivial", "identity" or a library name; nullopt if unknown.
std::optional<FusionMap> lookup_fusion(const CharacterTable& t, const FusionLibrary& fusions,
                                       const std::string& name);

/// Runs every step in order and combines the conclusions.  A null table
/// gives status skipped.  Throws ClaimError on structural problems
/// (unknown class, missing fusion or max data, empty citation).
Verdict verify_claim(const Claim& c, const CharacterTable* table, const FusionLibrary& fusions,
                     const MaxDataLibrary& max_data);

/// Human-readable report.
std::string format_verdict(const Verdict& v);

}  // namespace conjgen
