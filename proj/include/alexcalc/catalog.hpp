#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alexcalc/algebra.hpp"
#include "alexcalc/p2graph.hpp"

namespace alexcalc {

enum class BoundaryKind { Sphere, ProjectivePlane, Torus, KleinBottle };

std::string_view to_string(BoundaryKind kind);  // "S2", "P2", "T2", "Kl"
BoundaryKind parse_boundary_kind(std::string_view text);

struct BoundaryComponent {
  BoundaryKind kind;
  std::string label;
};

// A topologically singular point; its link is always P2.
struct SingularSite {
  std::string id;
  // Coordinates in the canonical generators of the owning atom's H1.
  std::optional<std::vector<std::int64_t>> h1_image;
  // Class of the boundary plane's generator in the atom's presentation.
  std::optional<Word> pi1_word;
};

// pi_1 of the manifold part with its orientation character.
struct Pi1Data {
  Presentation presentation;
  std::vector<int> w1;
};

struct AtomFlags {
  bool manifold = true;
  std::optional<bool> prime;
  std::optional<bool> irreducible;
  std::optional<bool> simply_connected;
  std::optional<bool> has_nonseparating_p2;
  // Orientability of the manifold part.
  std::optional<bool> orientable;
  // Mirror images are identified for every catalog atom.
  bool amphichiral = true;
};

struct AtomSpec {
  std::string name;
  std::vector<SingularSite> sites;
  std::optional<AbelianGroup> h1;
  AtomFlags flags;
  // Summands of the orientable double branched cover; empty when unknown.
  std::vector<std::string> cover;
  // Summands of the orientation double cover of a non-orientable manifold.
  std::vector<std::string> orientation_cover;
  // Whites are exactly the sites, with the same ids.
  std::optional<ColoredGraph> graph;
  std::optional<Pi1Data> pi1;
  std::string note;
  // Built from a table miss; carries derived invariants only.
  bool opaque = false;

  const SingularSite* site(std::string_view id) const;
};

enum class QuotientKind { None, Branched, Punctured };

struct BlockSpec {
  std::string name;
  std::vector<BoundaryComponent> boundary;
  std::vector<SingularSite> singular_sites;
  std::optional<std::string> double_cover;
  std::string involution_note;
  std::size_t fixed_point_count = 0;
  QuotientKind quotient = QuotientKind::None;
  bool opaque = false;

  std::size_t count(BoundaryKind kind) const;
};

using AtomPtr = std::shared_ptr<const AtomSpec>;
using BlockPtr = std::shared_ptr<const BlockSpec>;

// Connected sum along spheres of closed atoms.  Never empty: S3 stands for
// the trivial sum.
struct ClosedSpace {
  std::vector<AtomPtr> summands;
  std::string to_string() const;
};

using Resolved = std::variant<ClosedSpace, BlockPtr>;

struct GluingEntry {
  std::string left;
  std::string right;
  Resolved result;
};

class Catalog {
 public:
  // Empty catalog; most callers want builtin().
  Catalog() = default;

  static const Catalog& builtin();

  // Parses catalog records and adds them.  Redefining an existing name is a
  // CatalogError, as is any record failing validation.
  void merge_text(std::string_view text, std::string_view origin = "<catalog>");
  void merge_file(const std::string& path);

  // Plain names plus the constructors cap(.), double(.), glue(.,.), Xg(n)
  // and FgxS1(n).  Throws UnknownName.
  Resolved resolve(std::string_view name) const;
  std::variant<AtomPtr, BlockPtr> lookup(std::string_view name) const;
  AtomPtr atom(std::string_view name) const;    // closed prime atom or UnknownAtom
  BlockPtr block(std::string_view name) const;  // UnknownName
  bool has_atom(std::string_view name) const;

  // Expression text the name abbreviates, e.g. Q.
  std::optional<std::string> alias(std::string_view name) const;

  Resolved cap_off(const BlockSpec& block) const;
  ClosedSpace double_along(const BlockSpec& block) const;
  Resolved glue(const BlockSpec& a, const BlockSpec& b) const;
  std::vector<GluingEntry> enumerate_gluings() const;
  AtomPtr xg_atom(long g) const;
  AtomPtr fgxs1_atom(long g) const;

  std::vector<std::string> atom_names() const;
  std::vector<std::string> block_names() const;
  std::vector<std::string> alias_names() const;

 private:
  void add_atom(AtomSpec spec);
  void add_block(BlockSpec spec);
  void check_fresh(const std::string& name) const;
  void validate_atom(const AtomSpec& spec) const;
  void validate_block(const BlockSpec& spec) const;
  ClosedSpace single(AtomPtr atom) const;

  std::map<std::string, AtomPtr, std::less<>> atoms_;
  std::map<std::string, BlockPtr, std::less<>> blocks_;
  std::map<std::string, std::string, std::less<>> aliases_;
};

// Removes every space character.
std::string compact_name(std::string_view name);

// Text of the built-in catalog, in the same format merge_text reads.
std::string_view builtin_catalog_text();

}  // namespace alexcalc
