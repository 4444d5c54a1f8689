#pragma once

// Exact integer linear algebra and finitely presented groups: the value
// types behind first-homology computations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alexcalc {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void append_row(const std::vector<std::int64_t>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithForm {
  // min(rows, cols) entries, non-negative, d[i] | d[i+1] while non-zero,
  // zeros trailing.
  std::vector<std::int64_t> diagonal;
  std::size_t rank = 0;
  // left * m * right == diag(diagonal), both unimodular.  Only filled when
  // requested.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

// All arithmetic is overflow-checked; throws Error(Overflow) instead of
// wrapping.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk, d1 | d2 | ...
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;

  // Group presented by `generators` generators subject to the rows of
  // `relations`.
  static AbelianGroup from_relations(std::size_t generators, const IntMatrix& relations);
  // Accepts "0", "Z", "Z^2 + Z/2", "Z/4+Z/4".  Torsion is re-normalized.
  static AbelianGroup parse(std::string_view text);

  bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }
  // Generators of the canonical presentation: rank free ones, then one per
  // torsion coefficient.
  std::size_t generator_count() const noexcept { return rank + torsion.size(); }
  std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

struct Letter {
  std::size_t generator = 0;
  int power = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Word inverse(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_index(std::string_view name) const;  // throws UnknownName
  // Words are dot-separated generator names, a trailing ' inverts a letter;
  // "1" is the empty word.  Example: "t1.s.t1'".
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
};

// Free product: generators of `b` follow those of `a`; names are kept as-is
// since words address generators by index.
Presentation free_product(const Presentation& a, const Presentation& b);
Word shift_word(const Word& w, std::size_t offset);

AbelianGroup abelianize(const Presentation& p);
std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t generators);

// Reidemeister-Schreier for the kernel of a homomorphism to Z/2, given by
// its value (0 or 1) on each generator.  Throws if the character is trivial
// or some relator has odd character.
Presentation index_two_subgroup(const Presentation& p, const std::vector<int>& character);

}  // namespace alexcalc
