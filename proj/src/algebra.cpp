#include "alexcalc/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "alexcalc/error.hpp"

namespace alexcalc {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in matrix reduction");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in matrix reduction");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in matrix reduction");
  }
  return out;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw Error(ErrorCode::Overflow, "integer overflow in matrix reduction");
  return a < 0 ? -a : a;
}

// Elementary operations applied simultaneously to the working matrix and the
// accumulated transforms.
class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track)
      : d_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }

  // row[target] -= q * row[source]
  void row_axpy(std::size_t target, std::size_t source, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d_.cols(); ++c)
      d_(target, c) = checked_sub(d_(target, c), checked_mul(q, d_(source, c)));
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        u_(target, c) = checked_sub(u_(target, c), checked_mul(q, u_(source, c)));
  }

  void col_axpy(std::size_t target, std::size_t source, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d_.rows(); ++r)
      d_(r, target) = checked_sub(d_(r, target), checked_mul(q, d_(r, source)));
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        v_(r, target) = checked_sub(v_(r, target), checked_mul(q, v_(r, source)));
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(r, c) = checked_sub(0, d_(r, c));
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = checked_sub(0, u_(r, c));
  }

  IntMatrix& d() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
    }
  return out;
}

void IntMatrix::append_row(const std::vector<std::int64_t>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  Reducer red(m, with_transforms);
  IntMatrix& d = red.d();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest non-zero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const std::int64_t a = checked_abs(d(r, c));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        red.row_axpy(r, t, d(r, t) / d(t, t));
        if (d(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        red.col_axpy(c, t, d(t, c) / d(t, t));
        if (d(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            red.row_axpy(t, r, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) red.negate_row(t);
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = d(i, i);
    if (d(i, i) != 0) ++out.rank;
  }
  if (with_transforms) {
    out.left = std::move(red.u());
    out.right = std::move(red.v());
  }
  return out;
}

AbelianGroup AbelianGroup::from_relations(std::size_t generators, const IntMatrix& relations) {
  AbelianGroup g;
  if (relations.rows() == 0) {
    g.rank = generators;
    return g;
  }
  if (relations.cols() != generators) throw std::invalid_argument("relation width mismatch");
  const SmithForm snf = smith_normal_form(relations);
  g.rank = generators - snf.rank;
  for (std::int64_t d : snf.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  auto fail = [&] {
    return Error(ErrorCode::SyntaxError, "malformed abelian group '" + std::string(text) + "'");
  };
  if (compact.empty()) throw fail();
  if (compact == "0") return {};

  std::size_t rank = 0;
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t next = compact.find('+', pos);
    const std::string term = compact.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty() || term[0] != 'Z') throw fail();
    try {
      if (term == "Z") {
        rank += 1;
      } else if (term[1] == '^') {
        rank += static_cast<std::size_t>(std::stoul(term.substr(2)));
      } else if (term[1] == '/') {
        const std::int64_t d = std::stoll(term.substr(2));
        if (d < 1) throw fail();
        if (d > 1) orders.push_back(d);
      } else {
        throw fail();
      }
    } catch (const std::logic_error&) {
      throw fail();
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  AbelianGroup tors = from_relations(orders.size(), rel);
  tors.rank = rank;
  return tors;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << '^' << rank;
    first = false;
  }
  for (std::int64_t d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::int64_t> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  AbelianGroup g = AbelianGroup::from_relations(orders.size(), rel);
  g.rank = a.rank + b.rank;
  return g;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.power = -l.power;
  return out;
}

std::size_t Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  throw Error(ErrorCode::UnknownName, "unknown generator '" + std::string(name) + "'");
}

Word Presentation::parse_word(std::string_view text) const {
  Word w;
  if (text == "1" || text.empty()) return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('.', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    int power = 1;
    if (!tok.empty() && tok.back() == '\'') {
      power = -1;
      tok.remove_suffix(1);
    }
    if (tok.empty()) throw Error(ErrorCode::SyntaxError, "empty letter in word '" + std::string(text) + "'");
    w.push_back({generator_index(tok), power});
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += generators.at(w[i].generator);
    if (w[i].power < 0) out += '\'';
  }
  return out;
}

Word shift_word(const Word& w, std::size_t offset) {
  Word out = w;
  for (Letter& l : out) l.generator += offset;
  return out;
}

Presentation free_product(const Presentation& a, const Presentation& b) {
  Presentation out = a;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  for (const Word& r : b.relators) out.relators.push_back(shift_word(r, a.generators.size()));
  return out;
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t generators) {
  std::vector<std::int64_t> row(generators, 0);
  for (const Letter& l : w) row.at(l.generator) += l.power;
  return row;
}

AbelianGroup abelianize(const Presentation& p) {
  IntMatrix rel;
  for (const Word& r : p.relators) {
    auto row = exponent_sums(r, p.generators.size());
    if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; }))
      rel.append_row(row);
  }
  return AbelianGroup::from_relations(p.generators.size(), rel);
}

Presentation index_two_subgroup(const Presentation& p, const std::vector<int>& character) {
  const std::size_t n = p.generators.size();
  if (character.size() != n) throw std::invalid_argument("character length mismatch");
  std::size_t stable = n;
  for (std::size_t i = 0; i < n; ++i)
    if (character[i] & 1) {
      stable = i;
      break;
    }
  if (stable == n) throw std::invalid_argument("character is trivial");

  // Cosets {H, Ht} with transversal {1, t}; Schreier generator (c, x) has
  // index c * n + x and stands for rep(c) x rep(c x)^-1.
  Presentation out;
  for (int c = 0; c < 2; ++c)
    for (std::size_t x = 0; x < n; ++x)
      out.generators.push_back(p.generators[x] + (c == 0 ? "" : "^t"));
  out.relators.push_back(Word{{static_cast<std::size_t>(stable), 1}});

  for (const Word& r : p.relators) {
    int parity = 0;
    for (const Letter& l : r) parity ^= character[l.generator] & 1;
    if (parity) throw std::invalid_argument("relator has odd character");
    for (int start = 0; start < 2; ++start) {
      Word rewritten;
      int coset = start;
      for (const Letter& l : r) {
        const int flip = character[l.generator] & 1;
        if (l.power > 0) {
          rewritten.push_back({static_cast<std::size_t>(coset) * n + l.generator, 1});
          coset ^= flip;
        } else {
          coset ^= flip;
          rewritten.push_back({static_cast<std::size_t>(coset) * n + l.generator, -1});
        }
      }
      out.relators.push_back(std::move(rewritten));
    }
  }
  return out;
}

}  // namespace alexcalc
