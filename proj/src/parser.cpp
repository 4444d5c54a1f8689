#include <cctype>

#include "alexcalc/error.hpp"
#include "alexcalc/io.hpp"

namespace alexcalc {

namespace {

constexpr int kMaxAliasDepth = 16;

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~' || c == '/' || c == '-' || c == '.' ||
         c == '\'' || c == '+';
}

struct SiteSpec {
  std::string id;
  std::size_t occurrence = 1;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::string_view text, const Catalog& catalog, int depth) : text_(text), catalog_(catalog), depth_(depth) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw error("unexpected '" + std::string(1, text_[pos_]) + "'", pos_, pos_ + 1);
    return e;
  }

 private:
  Error error(const std::string& msg, std::size_t begin, std::size_t end, ErrorCode code = ErrorCode::SyntaxError) const {
    return Error(code, msg, SourceSpan{begin, end});
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_p2_operator() {
    skip_space();
    return text_.substr(pos_, 3) == "#^{";
  }

  bool at_s2_operator() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == '#' && !at_p2_operator();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw error(std::string("expected '") + c + "'", pos_, std::min(pos_ + 1, text_.size()));
    ++pos_;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (at_s2_operator()) {
      ++pos_;
      left = conn_sum_s2(left, term());
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = primary();
    while (at_p2_operator()) {
      const std::size_t op = pos_;
      pos_ += 3;
      SiteSpec a = site();
      expect(',');
      SiteSpec b = site();
      expect('}');
      ExprPtr right = primary();
      const SiteRef ra = resolve(*left, a, "left");
      const SiteRef rb = resolve(*right, b, "right");
      try {
        left = conn_sum_p2(left, ra, right, rb);
      } catch (const Error& e) {
        throw error(e.what(), op, pos_, e.code());
      }
    }
    return left;
  }

  SiteSpec site() {
    skip_space();
    SiteSpec s;
    s.span.begin = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      s.id.push_back(text_[pos_++]);
    if (s.id.empty()) throw error("expected a site identifier", pos_, std::min(pos_ + 1, text_.size()));
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits.push_back(text_[pos_++]);
      if (digits.empty() || digits.size() > 9) throw error("expected an occurrence number after '@'", s.span.begin, pos_);
      s.occurrence = std::stoul(digits);
      if (s.occurrence == 0) throw error("occurrences count from 1", s.span.begin, pos_);
    }
    s.span.end = pos_;
    return s;
  }

  SiteRef resolve(const SpaceExpr& operand, const SiteSpec& s, const char* side) const {
    std::size_t seen = 0;
    for (const auto& ref : operand.available_sites())
      if (ref.site == s.id && ++seen == s.occurrence) return ref;
    bool exists = false;
    for (const auto& atom : decompose(operand).leaves) exists = exists || atom->site(s.id) != nullptr;
    if (exists && seen < s.occurrence && seen == 0)
      throw error(std::string(side) + " operand has no unconsumed site '" + s.id + "'", s.span.begin, s.span.end,
                  ErrorCode::SiteAlreadyConsumed);
    throw error(std::string(side) + " operand has " + std::to_string(seen) + " free occurrence(s) of site '" + s.id + "'",
                s.span.begin, s.span.end, ErrorCode::SiteNotFound);
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw error("unexpected end of expression", pos_, pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == begin) throw error("expected an atom name", begin, begin + 1);
    if (pos_ < text_.size() && text_[pos_] == '(') {
      int depth = 0;
      do {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < text_.size());
      if (depth != 0) throw error("unbalanced parenthesis in name", begin, pos_);
    }
    const std::string name = compact_name(text_.substr(begin, pos_ - begin));
    if (auto alias = catalog_.alias(name)) {
      if (depth_ >= kMaxAliasDepth) throw error("alias expansion too deep", begin, pos_, ErrorCode::CatalogError);
      try {
        return Parser(*alias, catalog_, depth_ + 1).run();
      } catch (const Error& e) {
        throw error("in alias '" + name + "': " + e.what(), begin, pos_, e.code());
      }
    }
    try {
      Resolved r = catalog_.resolve(name);
      if (std::holds_alternative<BlockPtr>(r))
        throw Error(ErrorCode::NotClosed, "'" + name + "' is a block with boundary, not a closed space");
      return sum_of(std::get<ClosedSpace>(r));
    } catch (const Error& e) {
      const ErrorCode code = e.code() == ErrorCode::UnknownName ? ErrorCode::UnknownAtom : e.code();
      throw error(e.what(), begin, pos_, code);
    }
  }

  std::string_view text_;
  const Catalog& catalog_;
  int depth_;
  std::size_t pos_ = 0;
};

std::string site_text(const SpaceExpr& operand, const SiteRef& ref) {
  std::size_t k = 0;
  for (const auto& s : operand.available_sites()) {
    if (s.site != ref.site) continue;
    ++k;
    if (s == ref) break;
  }
  return k <= 1 ? ref.site : ref.site + "@" + std::to_string(k);
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const Catalog& catalog) { return Parser(text, catalog, 0).run(); }

std::string format_expr(const SpaceExpr& e) {
  switch (e.kind()) {
    case SpaceExpr::Kind::Atom:
      return e.atom()->name;
    case SpaceExpr::Kind::SumS2: {
      std::string right = format_expr(*e.right());
      if (e.right()->kind() == SpaceExpr::Kind::SumS2) right = "(" + right + ")";
      return format_expr(*e.left()) + " # " + right;
    }
    case SpaceExpr::Kind::SumP2: {
      std::string left = format_expr(*e.left());
      if (e.left()->kind() == SpaceExpr::Kind::SumS2) left = "(" + left + ")";
      std::string right = format_expr(*e.right());
      if (e.right()->kind() != SpaceExpr::Kind::Atom) right = "(" + right + ")";
      return left + " #^{" + site_text(*e.left(), e.left_site()) + "," + site_text(*e.right(), e.right_site()) + "} " + right;
    }
  }
  return {};
}

}  // namespace alexcalc
