#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjgen/certify.hpp"
#include "conjgen/chartab.hpp"
#include "conjgen/permgrp.hpp"
#include "conjgen/words.hpp"

namespace conjgen {

/// A problem tied to a place: file path plus a JSON pointer ("/classes/3")
/// or "line N" for text formats.
struct LocatedError {
  std::string file;
  std::string pointer;
  std::string message;

  std::string to_string() const;
  friend bool operator==(const LocatedError&, const LocatedError&) = default;
};

/// One or more located errors; what() joins them, one per line.
class DataError : public std::runtime_error {
 public:
  explicit DataError(std::vector<LocatedError> errors);
  const std::vector<LocatedError>& errors() const noexcept { return errors_; }

 private:
  std::vector<LocatedError> errors_;
};

/// Contents of a .grp file.
struct GroupData {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::pair<std::string, Permutation>> generators;  // file order
  std::vector<std::pair<std::string, std::string>> words;       // name, expression
  NamedPermutations named;                                      // generators and words
  std::vector<std::pair<std::string, Permutation>> class_reps;
  /// class name -> words generating the centralizer of its representative
  std::map<std::string, std::vector<std::string>, std::less<>> centralizers;

  PermGroup group() const;
  std::optional<Permutation> class_rep(std::string_view cls) const;
  /// Cycle notation, a class name from the file, or a word over named elements.
  Permutation element(std::string_view text) const;
};

/// Group file grammar, one item per line, '#' starts a comment:
///   degree := n
///   name := (1,2,3)(4,5)
///   word name := expr
///   class NAME := (cycles) | expr
///   centralizer NAME := expr; expr; ...
GroupData parse_group(std::string_view text, const std::string& file = "<input>");
GroupData load_group(const std::filesystem::path& path);

CharacterTable parse_table(std::string_view json_text, const std::string& file = "<input>");
CharacterTable load_table(const std::filesystem::path& path);
/// Inverse of parse_table.
std::string table_to_json(const CharacterTable& t);

FusionMap parse_fusion(std::string_view json_text, const std::string& name,
                       const std::string& file = "<input>");
FusionMap load_fusion(const std::filesystem::path& path);

MaximalSubgroupData parse_max_data(std::string_view json_text, const std::string& file = "<input>");
MaximalSubgroupData load_max_data(const std::filesystem::path& path);

Claim parse_claim(std::string_view json_text, const std::string& name,
                  const std::string& file = "<input>");
Claim load_claim(const std::filesystem::path& path);
std::string claim_to_json(const Claim& c);

/// Stem of a data file: "mcl_2B" for claims/mcl_2B.claim.json.
std::string data_stem(const std::filesystem::path& path);

struct DataBundle {
  std::filesystem::path root;
  std::map<std::string, CharacterTable, std::less<>> tables;  // by group name
  std::map<std::string, std::string, std::less<>> table_stems;  // stem -> group name
  FusionLibrary fusions;                                        // by stem
  std::map<std::string, GroupData, std::less<>> groups;         // by stem
  MaxDataLibrary max_data;                                      // by stem
  std::vector<std::pair<std::filesystem::path, Claim>> claims;  // sorted by path
  std::vector<LocatedError> warnings;

  /// By group name ("HS.2") or file stem ("hs_2").
  const CharacterTable* find_table(std::string_view name) const;
  const Claim* find_claim(std::string_view name) const;
};

/// Loads and cross-checks tables/, fusions/, groups/, maxdata/, claims/
/// under root.  Missing subdirectories are empty.  Throws DataError listing
/// every problem found; never returns a partially valid bundle.
DataBundle load_bundle(const std::filesystem::path& root);

Verdict verify_in_bundle(const Claim& c, const DataBundle& b);

/// Verdict plus the claim it came from, so a trace can be replayed alone.
struct Trace {
  Claim claim;
  Verdict verdict;
};

std::string trace_to_json(const Verdict& v, const Claim& c);
Trace parse_trace(std::string_view json_text, const std::string& file = "<input>");
/// Throws std::runtime_error on I/O failure.
void export_trace(const Verdict& v, const Claim& c, const std::filesystem::path& path);
Trace read_trace(const std::filesystem::path& path);

/// Re-verifies the embedded claim against the bundle.
Verdict replay(const Trace& t, const DataBundle& b);

std::string verdict_to_json(const Verdict& v);

}  // namespace conjgen
