#include "linkcalc/free_word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace linkcalc {

FreeWord free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord::FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {
  // normalize: constructor input is trusted to be reduced only if it came
  // from free_reduce; reduce defensively, it is cheap and idempotent.
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (l == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  letters_ = std::move(out);
}

FreeWord FreeWord::generator(int g, int exp) {
  if (g <= 0) throw std::invalid_argument("generator index must be positive");
  std::vector<int> ls;
  int letter = exp >= 0 ? g : -g;
  for (int i = 0; i < std::abs(exp); ++i) ls.push_back(letter);
  return FreeWord(std::move(ls));
}

int FreeWord::max_generator() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

long long FreeWord::exponent_sum(int g) const {
  long long s = 0;
  for (int l : letters_) {
    if (l == g) ++s;
    if (l == -g) --s;
  }
  return s;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<int> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return free_reduce(ls);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> ls(letters_.rbegin(), letters_.rend());
  for (int& l : ls) l = -l;
  return FreeWord(std::move(ls));
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const {
  return u * (*this) * u.inverse();
}

FreeWord FreeWord::power(int n) const {
  FreeWord base = n >= 0 ? *this : inverse();
  FreeWord out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::cyclically_reduced() const {
  std::vector<int> ls = letters_;
  while (ls.size() >= 2 && ls.front() == -ls.back()) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  return FreeWord(std::move(ls));
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

std::string FreeWord::str(const std::string& stem) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    // run-length collect equal letters into powers
    size_t j = i;
    while (j + 1 < letters_.size() && letters_[j + 1] == letters_[i]) ++j;
    int count = static_cast<int>(j - i + 1);
    if (!out.empty()) out += ' ';
    out += stem + std::to_string(std::abs(letters_[i]));
    int exp = letters_[i] > 0 ? count : -count;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

namespace {

struct WordParser {
  const std::string& s;
  size_t pos = 0;

  explicit WordParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument("word parse error: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
    ++pos;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("word parse error: expected integer at position " +
                                  std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  }

  // atom := ident | '[' word ',' word ']' | '(' word ')'
  FreeWord parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("word parse error: unexpected end");
    char c = s[pos];
    if (c == '[') {
      ++pos;
      FreeWord u = parse_seq();
      expect(',');
      FreeWord v = parse_seq();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos;
      FreeWord w = parse_seq();
      expect(')');
      return w;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
      size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (digits == pos)
        throw std::invalid_argument("word parse error: generator needs an index, e.g. x1");
      int g = std::stoi(s.substr(digits, pos - digits));
      if (g <= 0) throw std::invalid_argument("word parse error: generator index must be >= 1");
      return FreeWord::generator(g);
    }
    throw std::invalid_argument("word parse error: unexpected character '" + std::string(1, c) +
                                "' at position " + std::to_string(pos));
  }

  FreeWord parse_term() {
    FreeWord w = parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      int e = parse_int();
      w = w.power(e);
    }
    return w;
  }

  FreeWord parse_seq() {
    FreeWord out;
    while (true) {
      skip_ws();
      if (pos >= s.size() || s[pos] == ',' || s[pos] == ']' || s[pos] == ')') break;
      out = out * parse_term();
    }
    return out;
  }
};

}  // namespace

FreeWord parse_word(const std::string& text) {
  WordParser p(text);
  FreeWord w = p.parse_seq();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("word parse error: trailing input at position " +
                                std::to_string(p.pos));
  return w;
}

}  // namespace linkcalc
