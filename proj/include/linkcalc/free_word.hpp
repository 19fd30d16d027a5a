#pragma once

#include <string>
#include <vector>

namespace linkcalc {

/// Word in a free group. A letter is a nonzero int: +g is the generator g,
/// -g its inverse; generators are 1-based. Words are kept freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int g, int exp = 1);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  int max_generator() const;
  long long exponent_sum(int g) const;

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  FreeWord conjugated_by(const FreeWord& u) const;  // u * w * u^-1
  FreeWord power(int n) const;
  FreeWord cyclically_reduced() const;

  bool operator==(const FreeWord&) const = default;
  bool operator<(const FreeWord& rhs) const { return letters_ < rhs.letters_; }

  std::string str(const std::string& stem = "x") const;

 private:
  std::vector<int> letters_;
};

FreeWord free_reduce(const std::vector<int>& letters);
FreeWord commutator(const FreeWord& u, const FreeWord& v);

/// Parses "x1 x2^-1 [x1, x3] (x2 x1)^2". Identifiers are any letters
/// followed by a 1-based index ("x3", "m2"); brackets build commutators.
FreeWord parse_word(const std::string& text);

}  // namespace linkcalc
