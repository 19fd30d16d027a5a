#include "linkcalc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linkcalc {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                  std::to_string(pos));
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      throw std::invalid_argument("expected integer at position " +
                                  std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected name at position " +
                                  std::to_string(start));
    return s.substr(start, pos - start);
  }
};

std::vector<long long> int_list(Cursor& c) {
  std::vector<long long> out;
  c.expect('[');
  if (!c.accept(']')) {
    out.push_back(c.integer());
    while (c.accept(',')) out.push_back(c.integer());
    c.expect(']');
  }
  return out;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  Cursor c{text};
  if (c.ident() != "PD") throw std::invalid_argument("expected PD[...]");
  c.expect('[');
  DiagramBuilder b;
  b.corner0_in = true;
  if (!c.accept(']')) {
    do {
      std::string kind = c.ident();
      if (kind == "X") {
        c.expect('[');
        std::array<int, 4> t;
        for (int p = 0; p < 4; ++p) {
          t[p] = static_cast<int>(c.integer());
          if (p < 3) c.expect(',');
        }
        c.expect(']');
        b.crossings.push_back(t);
      } else if (kind == "O") {
        c.expect('[');
        b.free_loops.push_back(static_cast<int>(c.integer()));
        c.expect(']');
      } else {
        throw std::invalid_argument("unknown entry '" + kind + "' in PD code");
      }
    } while (c.accept(','));
    c.expect(']');
  }
  if (!c.at_end()) throw std::invalid_argument("trailing text after PD code");
  return LinkDiagram::finalize(b);
}

LinkDiagram braid_closure(const BraidWord& w) {
  if (w.strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= w.strands)
      throw std::invalid_argument("braid letter out of range");

  int s = w.strands;
  std::vector<int> cur(s + 1), orig(s + 1);
  std::iota(cur.begin(), cur.end(), 0);
  std::iota(orig.begin(), orig.end(), 0);
  int fresh = s + 1;
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  for (int l : w.letters) {
    int j = std::abs(l);
    int a = fresh++;  // lands at position j
    int b = fresh++;  // lands at position j+1
    if (l > 0) {
      // Strand entering at position j passes over, heading up-right.
      tuples.push_back({cur[j + 1], b, a, cur[j]});
      signs.push_back(1);
    } else {
      tuples.push_back({cur[j], cur[j + 1], b, a});
      signs.push_back(-1);
    }
    cur[j] = a;
    cur[j + 1] = b;
  }

  // Close up: the top edge of each position is the bottom edge again.
  std::map<int, int> ren;
  DiagramBuilder b;
  for (int i = 1; i <= s; ++i) {
    if (cur[i] == orig[i])
      b.free_loops.push_back(orig[i]);
    else
      ren[cur[i]] = orig[i];
  }
  auto renamed = [&](int e) {
    auto it = ren.find(e);
    return it == ren.end() ? e : it->second;
  };
  for (size_t c = 0; c < tuples.size(); ++c) {
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = renamed(tuples[c][p]);
    b.crossings.push_back(t);
    b.flows_into[t[0]] = {static_cast<int>(c), 0};
    int oin = signs[c] > 0 ? 3 : 1;
    b.flows_into[t[oin]] = {static_cast<int>(c), oin};
  }
  b.braid = w;
  return LinkDiagram::finalize(b);
}

LinkDiagram parse_br(const std::string& text) {
  Cursor c{text};
  if (c.ident() != "BR") throw std::invalid_argument("expected BR[...]");
  c.expect('[');
  BraidWord w;
  w.strands = static_cast<int>(c.integer());
  c.expect(',');
  for (long long l : int_list(c)) w.letters.push_back(static_cast<int>(l));
  c.expect(']');
  if (!c.at_end()) throw std::invalid_argument("trailing text after braid word");
  return braid_closure(w);
}

LinkDiagram parse_dt(const std::string& text) {
  Cursor c{text};
  if (c.ident() != "DT") throw std::invalid_argument("expected DT[...]");
  std::vector<long long> code = int_list(c);
  if (!c.at_end()) throw std::invalid_argument("trailing text after DT code");

  int n = static_cast<int>(code.size());
  if (n == 0) {
    DiagramBuilder b;
    b.free_loops.push_back(1);
    return LinkDiagram::finalize(b);
  }
  if (n > 16) throw std::invalid_argument("DT code longer than 16 crossings");
  std::set<long long> seen;
  for (long long a : code) {
    long long v = std::abs(a);
    if (v == 0 || v % 2 != 0 || v > 2 * n || !seen.insert(v).second)
      throw std::invalid_argument("DT entries must be distinct even numbers");
  }

  // Passage t sits between edges in(t) = t-1 and out(t) = t (cyclically,
  // edges 1..2n along the knot). Under passage is the odd label when the
  // entry is positive.
  auto in_edge = [&](int t) { return t == 1 ? 2 * n : t - 1; };
  struct Site {
    int under, over;
  };
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) {
    int odd = 2 * i + 1, even = static_cast<int>(std::abs(code[i]));
    sites[i] = code[i] > 0 ? Site{odd, even} : Site{even, odd};
  }

  // Each crossing has two embeddings (the over-strand entering at corner 1
  // or corner 3); search for a sphere-embeddable choice.
  std::vector<std::array<int, 4>> tuples(n);
  std::vector<int> over_in_corner(n);
  for (int i = 0; i < n; ++i) {
    tuples[i][0] = in_edge(sites[i].under);
    tuples[i][2] = sites[i].under;
  }
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    for (int i = 0; i < n; ++i) {
      int oin = (mask >> i) & 1 ? 1 : 3;
      over_in_corner[i] = oin;
      tuples[i][oin] = in_edge(sites[i].over);
      tuples[i][(oin + 2) % 4] = sites[i].over;
    }
    if (!detail::spherical(tuples)) continue;
    DiagramBuilder b;
    b.crossings = tuples;
    for (int i = 0; i < n; ++i) {
      b.flows_into[tuples[i][0]] = {i, 0};
      b.flows_into[tuples[i][over_in_corner[i]]] = {i, over_in_corner[i]};
    }
    return LinkDiagram::finalize(b);
  }
  throw std::runtime_error("non-planar or unclosable code");
}

LinkDiagram parse_link(const std::string& text) {
  Cursor c{text};
  std::string tag = c.ident();
  if (tag == "PD") return parse_pd(text);
  if (tag == "BR") return parse_br(text);
  if (tag == "DT") return parse_dt(text);
  throw std::invalid_argument("unrecognized link format '" + tag + "'");
}

std::string to_pd_text(const LinkDiagram& d) {
  std::string out = "PD[";
  bool first = true;
  for (const Crossing& x : d.crossings()) {
    if (!first) out += ", ";
    first = false;
    out += "X[" + std::to_string(x.edge[0] + 1) + "," +
           std::to_string(x.edge[1] + 1) + "," + std::to_string(x.edge[2] + 1) +
           "," + std::to_string(x.edge[3] + 1) + "]";
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!d.is_free_loop(e)) continue;
    if (!first) out += ", ";
    first = false;
    out += "O[" + std::to_string(e + 1) + "]";
  }
  return out + "]";
}

std::string to_br_text(const BraidWord& w) {
  std::string out = "BR[" + std::to_string(w.strands) + ", [";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w.letters[i]);
  }
  return out + "]]";
}

}  // namespace linkcalc
