#include "alexcalc/homology.hpp"

#include <algorithm>

namespace alexcalc {

std::optional<AbelianGroup> h1(const SpaceExpr& e) {
  const Decomposition d = decompose(e);
  std::vector<std::size_t> offset;
  std::size_t gens = 0;
  for (const auto& a : d.leaves) {
    if (!a->h1) return std::nullopt;
    offset.push_back(gens);
    gens += a->h1->generator_count();
  }
  IntMatrix rel;
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    const AbelianGroup& g = *d.leaves[i]->h1;
    for (std::size_t t = 0; t < g.torsion.size(); ++t) {
      std::vector<std::int64_t> row(gens, 0);
      row[offset[i] + g.rank + t] = g.torsion[t];
      rel.append_row(row);
    }
  }
  for (const auto& j : d.joints) {
    const auto* sa = d.leaves[j.leaf_a]->site(j.site_a);
    const auto* sb = d.leaves[j.leaf_b]->site(j.site_b);
    if (!sa || !sb || !sa->h1_image || !sb->h1_image) return std::nullopt;
    std::vector<std::int64_t> row(gens, 0);
    for (std::size_t k = 0; k < sa->h1_image->size(); ++k) row[offset[j.leaf_a] + k] += (*sa->h1_image)[k];
    for (std::size_t k = 0; k < sb->h1_image->size(); ++k) row[offset[j.leaf_b] + k] -= (*sb->h1_image)[k];
    rel.append_row(row);
  }
  return AbelianGroup::from_relations(gens, rel);
}

std::optional<Pi1Data> fundamental_group(const SpaceExpr& e) {
  const Decomposition d = decompose(e);
  Pi1Data out;
  std::vector<std::size_t> offset;
  for (const auto& a : d.leaves) {
    if (!a->pi1) return std::nullopt;
    offset.push_back(out.presentation.generators.size());
    out.presentation = free_product(out.presentation, a->pi1->presentation);
    out.w1.insert(out.w1.end(), a->pi1->w1.begin(), a->pi1->w1.end());
  }
  for (const auto& j : d.joints) {
    const auto* sa = d.leaves[j.leaf_a]->site(j.site_a);
    const auto* sb = d.leaves[j.leaf_b]->site(j.site_b);
    if (!sa || !sb || !sa->pi1_word || !sb->pi1_word) return std::nullopt;
    Word r = shift_word(*sa->pi1_word, offset[j.leaf_a]);
    const Word back = inverse(shift_word(*sb->pi1_word, offset[j.leaf_b]));
    r.insert(r.end(), back.begin(), back.end());
    out.presentation.relators.push_back(std::move(r));
  }
  return out;
}

std::optional<AbelianGroup> h1_via_pi1(const SpaceExpr& e) {
  auto pi = fundamental_group(e);
  if (!pi) return std::nullopt;
  return abelianize(pi->presentation);
}

std::optional<AbelianGroup> orientation_cover_h1(const SpaceExpr& e) {
  auto pi = fundamental_group(e);
  if (!pi) return std::nullopt;
  if (std::none_of(pi->w1.begin(), pi->w1.end(), [](int x) { return x != 0; })) return std::nullopt;
  return abelianize(index_two_subgroup(pi->presentation, pi->w1));
}

}  // namespace alexcalc
