#include "linkcalc/milnor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "linkcalc/wirtinger.hpp"

namespace linkcalc {

namespace {

// (v m v^-1)^sign for words.
FreeWord conjugated_meridian(const FreeWord& v, int meridian, int sign) {
  FreeWord m = FreeWord::generator(meridian, sign);
  return v * m * v.inverse();
}

}  // namespace

std::vector<FreeWord> chen_milnor_longitudes(const LinkDiagram& d, int q) {
  if (q < 1) throw std::invalid_argument("nilpotence class must be at least 1");
  ArcStructure a = arc_structure(d);

  // Conjugator of an arc: y_arc = v m_c v^-1 with m_c the meridian of the
  // arc's component. Base arcs are the meridians themselves. Each round
  // substitutes the previous round's conjugators into the walk relations.
  // Passing under with sign s conjugates by the inverse letter x_o^-s,
  // matching the relator o^-s b o^s c^-1; the longitude below reads x_o^s.
  std::vector<FreeWord> v(a.arcs);
  for (int round = 0; round < q; ++round) {
    std::vector<FreeWord> next(a.arcs);
    for (int c = 0; c < d.components(); ++c) {
      FreeWord acc;
      for (const auto& u : a.walk[c]) {
        FreeWord t = conjugated_meridian(
            v[u.over_arc], a.arc_component[u.over_arc] + 1, -u.sign);
        acc = t * acc;
        if (u.to_arc != a.base_arc[c]) next[u.to_arc] = acc;
      }
    }
    v = next;
  }

  std::vector<FreeWord> out;
  for (int c = 0; c < d.components(); ++c) {
    FreeWord l;
    for (const auto& u : a.walk[c])
      l = l * conjugated_meridian(v[u.over_arc],
                                  a.arc_component[u.over_arc] + 1, u.sign);
    l = l * FreeWord::generator(c + 1).power(-a.self_writhe[c]);
    out.push_back(l);
  }
  return out;
}

MilnorEngine::MilnorEngine(const LinkDiagram& d, int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("degree cap must be at least 2");
  ArcStructure a = arc_structure(d);
  int deg = cap_ - 1;  // longitude series degree

  std::vector<TruncatedSeries> meridian, meridian_inv;
  for (int c = 0; c < d.components(); ++c) {
    TruncatedSeries m =
        TruncatedSeries::one(deg) + TruncatedSeries::variable(c + 1, deg);
    meridian.push_back(m);
    meridian_inv.push_back(m.inverse());
  }
  // x_o^e in the truncated algebra, with x_o the over-arc of underpass u
  // written as a conjugated meridian.
  auto arc_power = [&](const std::vector<TruncatedSeries>& v,
                       const ArcStructure::Underpass& u, int e) {
    const TruncatedSeries& m = e > 0 ? meridian[a.arc_component[u.over_arc]]
                                     : meridian_inv[a.arc_component[u.over_arc]];
    return v[u.over_arc] * m * v[u.over_arc].inverse();
  };

  // Same refinement as the word form, in the truncated algebra: degree-k
  // coefficients stabilize after k rounds. Conjugators pick up the inverse
  // letter x_o^-s at each underpass; the longitude reads x_o^s.
  std::vector<TruncatedSeries> v(a.arcs, TruncatedSeries::one(deg));
  for (int round = 0; round <= deg; ++round) {
    std::vector<TruncatedSeries> next(a.arcs, TruncatedSeries::one(deg));
    for (int c = 0; c < d.components(); ++c) {
      TruncatedSeries acc = TruncatedSeries::one(deg);
      for (const auto& u : a.walk[c]) {
        acc = arc_power(v, u, -u.sign) * acc;
        if (u.to_arc != a.base_arc[c]) next[u.to_arc] = acc;
      }
    }
    v = next;
  }

  for (int c = 0; c < d.components(); ++c) {
    TruncatedSeries l = TruncatedSeries::one(deg);
    for (const auto& u : a.walk[c]) l = l * arc_power(v, u, u.sign);
    int w = a.self_writhe[c];
    const TruncatedSeries& corr = w > 0 ? meridian_inv[c] : meridian[c];
    for (int i = 0; i < std::abs(w); ++i) l = l * corr;
    series_.push_back(l);
  }
}

const TruncatedSeries& MilnorEngine::longitude_series(int component) const {
  if (component < 0 || component >= components())
    throw std::invalid_argument("no such component");
  return series_[component];
}

void MilnorEngine::check_index(const std::vector<int>& index) const {
  if (index.size() < 2)
    throw std::invalid_argument("invariant index must have length at least 2");
  if (static_cast<int>(index.size()) > cap_)
    throw std::invalid_argument("index length exceeds the configured degree cap");
  for (int i : index)
    if (i < 1 || i > components())
      throw std::invalid_argument("index entry is not a component");
}

long long MilnorEngine::raw_coefficient(const std::vector<int>& index) const {
  std::vector<int> monomial(index.begin(), index.end() - 1);
  return series_[index.back() - 1].coeff(monomial);
}

MilnorEntry MilnorEngine::mu(const std::vector<int>& index) {
  check_index(index);
  auto it = memo_.find(index);
  if (it != memo_.end()) return it->second;

  // Indeterminacy: gcd of mu-bar over all cyclic rotations of proper
  // subsequences of length >= 2.
  int k = static_cast<int>(index.size());
  std::set<std::vector<int>> shorter;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(index[i]);
    if (sub.size() < 2) continue;
    for (size_t r = 0; r < sub.size(); ++r) {
      std::vector<int> rot;
      for (size_t i = 0; i < sub.size(); ++i)
        rot.push_back(sub[(r + i) % sub.size()]);
      shorter.insert(rot);
    }
  }
  long long delta = 0;
  for (const auto& sub : shorter)
    delta = std::gcd(delta, std::abs(mu(sub).value));

  MilnorEntry e;
  e.index = index;
  e.delta = delta;
  long long raw = raw_coefficient(index);
  e.value = delta > 0 ? ((raw % delta) + delta) % delta : raw;
  memo_[index] = e;
  return e;
}

bool MilnorEngine::vanish_up_to(int max_length) {
  if (max_length < 2) return true;
  if (max_length > cap_)
    throw std::invalid_argument("requested length exceeds the configured degree cap");
  for (const TruncatedSeries& s : series_)
    for (const auto& [m, c] : s.terms())
      if (!m.empty() && static_cast<int>(m.size()) <= max_length - 1 && c != 0)
        return false;
  return true;
}

bool MilnorEngine::refined_vanish(const std::vector<int>& occurrence_bounds) {
  if (static_cast<int>(occurrence_bounds.size()) != components())
    throw std::invalid_argument("one occurrence bound per component required");
  long long total = 0;
  for (int b : occurrence_bounds) {
    if (b < 0) throw std::invalid_argument("occurrence bounds must be nonnegative");
    total += b;
  }
  if (total > cap_)
    throw std::invalid_argument("occurrence bounds exceed the configured degree cap");

  for (int j = 1; j <= components(); ++j) {
    if (occurrence_bounds[j - 1] < 1) continue;  // j occurs at least once
    for (const auto& [m, c] : series_[j - 1].terms()) {
      if (m.empty() || c == 0 || static_cast<int>(m.size()) > total - 1) continue;
      std::vector<int> index = m;
      index.push_back(j);
      std::vector<int> count(components() + 1, 0);
      bool within = true;
      for (int i : index)
        if (++count[i] > occurrence_bounds[i - 1]) { within = false; break; }
      if (within && mu(index).value != 0) return false;
    }
  }
  return true;
}

int MilnorEngine::first_nonvanishing(int max_length) {
  if (max_length > cap_)
    throw std::invalid_argument("requested length exceeds the configured degree cap");
  for (int k = 2; k <= max_length; ++k)
    for (const TruncatedSeries& s : series_)
      for (const auto& [m, c] : s.terms())
        if (static_cast<int>(m.size()) == k - 1 && c != 0) return k;
  return 0;
}

MilnorEntry milnor_mu(const LinkDiagram& d, const std::vector<int>& index,
                      int degree_cap) {
  MilnorEngine e(d, std::max<int>(degree_cap, static_cast<int>(index.size())));
  return e.mu(index);
}

bool mu_vanish_up_to(const LinkDiagram& d, int max_length, int degree_cap) {
  if (max_length < 2) return true;
  if (max_length > degree_cap)
    throw std::invalid_argument("requested length exceeds the configured degree cap");
  MilnorEngine e(d, max_length);
  return e.vanish_up_to(max_length);
}

bool refined_vanish(const LinkDiagram& d,
                    const std::vector<int>& occurrence_bounds, int degree_cap) {
  long long total = 0;
  for (int b : occurrence_bounds) total += std::max(b, 0);
  if (total > degree_cap)
    throw std::invalid_argument("occurrence bounds exceed the configured degree cap");
  MilnorEngine e(d, std::max<int>(2, static_cast<int>(total)));
  return e.refined_vanish(occurrence_bounds);
}

int first_nonvanishing_length(const LinkDiagram& d, int max_length) {
  MilnorEngine e(d, std::max(2, max_length));
  return e.first_nonvanishing(max_length);
}

MilnorTable milnor_table(const LinkDiagram& d, int max_length,
                         const std::string& link_name) {
  if (max_length < 2) throw std::invalid_argument("table length must be at least 2");
  MilnorEngine e(d, max_length);
  MilnorTable t;
  t.link = link_name;
  t.max_length = max_length;
  for (int k = 2; k <= max_length; ++k) {
    std::vector<int> index(k, 1);
    while (true) {
      t.entries.push_back(e.mu(index));
      int pos = k - 1;
      while (pos >= 0 && index[pos] == d.components()) index[pos--] = 1;
      if (pos < 0) break;
      ++index[pos];
    }
  }
  return t;
}

}  // namespace linkcalc
