#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conjgen/permgrp.hpp"

namespace conjgen {

class WordSyntaxError : public std::invalid_argument {
 public:
  WordSyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument("at offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGeneratorError : public std::invalid_argument {
 public:
  explicit UnknownGeneratorError(const std::string& name)
      : std::invalid_argument("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

using NamedPermutations = std::map<std::string, Permutation, std::less<>>;

/// Evaluates a word over named generators:
///   word   := factor (['*'] factor)*
///   factor := atom ('^' ['-'] integer)*
///   atom   := name | '1' | '(' word ')'
/// A name is a letter followed by digits, so "ab^2" reads a * b^2.
/// Whitespace is ignored.
Permutation word_evaluate(const NamedPermutations& gens, std::string_view word);

}  // namespace conjgen
