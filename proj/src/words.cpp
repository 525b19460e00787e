#include "conjgen/words.hpp"

#include <cctype>

namespace conjgen {

namespace {

class WordParser {
 public:
  WordParser(const NamedPermutations& gens, std::string_view text, std::size_t degree)
      : gens_(gens), text_(text), degree_(degree) {}

  Permutation parse() {
    Permutation p = word();
    skip();
    if (pos_ != text_.size()) throw WordSyntaxError(pos_, "unexpected character");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Permutation word() {
    if (!starts_atom()) throw WordSyntaxError(pos_, "expected a generator or '('");
    Permutation p = factor();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!starts_atom()) throw WordSyntaxError(pos_, "expected a factor after '*'");
        p = p * factor();
      } else if (starts_atom()) {
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Permutation factor() {
    Permutation p = atom();
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '^') return p;
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 1'000'000'000) throw WordSyntaxError(start, "exponent too large");
        ++pos_;
      }
      if (pos_ == start) throw WordSyntaxError(pos_, "expected an exponent");
      p = p.pow(neg ? -e : e);
    }
  }

  Permutation atom() {
    skip();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Permutation p = word();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw WordSyntaxError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (c == '1') {
      ++pos_;
      return Permutation(degree_);
    }
    const std::size_t start = pos_++;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = gens_.find(name);
    if (it == gens_.end()) throw UnknownGeneratorError(name);
    return it->second;
  }

  const NamedPermutations& gens_;
  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation word_evaluate(const NamedPermutations& gens, std::string_view word) {
  if (gens.empty()) throw std::invalid_argument("no generators declared");
  const std::size_t degree = gens.begin()->second.degree();
  for (const auto& [name, p] : gens)
    if (p.degree() != degree) throw DegreeMismatchError("generator " + name + " has another degree");
  return WordParser(gens, word, degree).parse();
}

}  // namespace conjgen
