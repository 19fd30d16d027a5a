#pragma once

#include <string>
#include <vector>

#include "linkcalc/free_word.hpp"
#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Arcs of a diagram (maximal overpasses) and the per-component underpass
/// walks that longitudes and nilpotent rewriting read from.
struct ArcStructure {
  int arcs = 0;
  std::vector<int> edge_arc;       // edge -> arc
  std::vector<int> arc_component;  // arc -> component
  std::vector<int> base_arc;       // component -> arc of its first edge

  // One entry per undercrossing met when traversing the component from its
  // first edge: the arc passing over, the crossing sign, and the arc the
  // strand emerges onto.
  struct Underpass {
    int over_arc;
    int sign;
    int to_arc;
  };
  std::vector<std::vector<Underpass>> walk;  // component -> underpasses
  std::vector<int> self_writhe;              // component -> writhe(d, c)
};

ArcStructure arc_structure(const LinkDiagram& d);

/// Wirtinger presentation: one generator per arc (generator i+1 stands for
/// arc i), one relator per crossing of the form o^s b o^-s c^-1 where o is
/// the over-arc, b the incoming and c the outgoing under-arc, s the sign.
struct GroupPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  std::vector<int> meridian;  // component -> generator index (1-based)
  // Convention tag so downstream consumers know how words were read off.
  std::string basepoint = "first-arc meridians; relator o^s b o^-s c^-1";
};

GroupPresentation wirtinger(const LinkDiagram& d);

/// Zero-framed longitude of a component as a word in arc generators: the
/// over-arc generators collected along the component (with crossing signs
/// as exponents), times meridian^(-writhe) so the word is null-homologous.
FreeWord longitude(const LinkDiagram& d, int component);

/// Exponent sums of a word over component meridian classes: entry j is the
/// total exponent of generators whose arcs lie on component j.
std::vector<long long> abelianize_to_components(const LinkDiagram& d,
                                                const FreeWord& w);

std::string presentation_text(const GroupPresentation& p);

/// Optional cleanup pass: drop relators that repeat another one up to
/// cyclic rotation and inversion.
std::vector<FreeWord> dedup_relators(const std::vector<FreeWord>& relators);

}  // namespace linkcalc
