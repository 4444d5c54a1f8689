#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "alexcalc/catalog.hpp"
#include "alexcalc/cover.hpp"
#include "alexcalc/error.hpp"
#include "alexcalc/homology.hpp"
#include "alexcalc/io.hpp"
#include "alexcalc/normalizer.hpp"
#include "alexcalc/p2graph.hpp"
#include "alexcalc/random_expr.hpp"
#include "alexcalc/surgery.hpp"

namespace alexcalc {

namespace {

// Text output uses "key: value"; machine output "key:value" with keys in
// snake_case.  Single-value commands print the bare value in text mode.
class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void field(const std::string& key, const std::string& value) {
    if (machine_) {
      std::string k = key;
      for (char& c : k)
        if (c == ' ') c = '_';
      out_ << k << ':' << value << '\n';
    } else {
      out_ << key << ": " << value << '\n';
    }
  }

  void line(const std::string& key, const std::string& value) {
    if (machine_) field(key, value);
    else out_ << value << '\n';
  }

  bool machine() const { return machine_; }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool machine_;
};

std::string tri(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "unknown"; }

std::string group(const std::optional<AbelianGroup>& g) { return g ? g->to_string() : "unknown"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnknownName, "cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string resolved_text(const Resolved& r) {
  if (const auto* c = std::get_if<ClosedSpace>(&r)) return c->to_string();
  return std::get<BlockPtr>(r)->name;
}

void describe_atom(Printer& p, const AtomSpec& a) {
  p.field("name", a.name);
  std::string sites;
  for (const auto& s : a.sites) sites += (sites.empty() ? "" : ",") + s.id;
  p.field("sites", sites.empty() ? "-" : sites);
  p.field("singular count", std::to_string(a.sites.size()));
  p.field("h1", group(a.h1));
  p.field("manifold", a.flags.manifold ? "yes" : "no");
  p.field("prime", tri(a.flags.prime));
  p.field("irreducible", tri(a.flags.irreducible));
  p.field("simply connected", tri(a.flags.simply_connected));
  p.field("orientable", tri(a.flags.orientable));
  std::string cover;
  for (const auto& c : a.cover) cover += (cover.empty() ? "" : " # ") + c;
  p.field("cover", cover.empty() ? "unknown" : cover);
  if (!a.note.empty()) p.field("note", a.note);
}

void describe_block(Printer& p, const BlockSpec& b) {
  p.field("name", b.name);
  std::string boundary;
  for (const auto& c : b.boundary) boundary += (boundary.empty() ? "" : ",") + std::string(to_string(c.kind));
  p.field("boundary", boundary.empty() ? "-" : boundary);
  p.field("singular count", std::to_string(b.singular_sites.size()));
  p.field("fixed points", std::to_string(b.fixed_point_count));
  p.field("double cover", b.double_cover.value_or("unknown"));
  if (!b.involution_note.empty()) p.field("involution", b.involution_note);
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::DropSphere: return "drop-sphere";
    case Rule::AbsorbSuspension: return "absorb-suspension";
    case Rule::TwistBundle: return "twist-bundle";
  }
  return "?";
}

// Randomized checks of parity, normal-form invariance and round-tripping.
bool selftest(const Catalog& catalog, std::uint64_t seed, std::size_t count, Printer& p, std::ostream& err) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const ExprPtr e = random_expr(rng, catalog);
    const std::string text = format_expr(*e);
    auto fail = [&](const std::string& what) {
      ++failures;
      err << "selftest: " << what << " for " << text << '\n';
    };
    if (singular_count(*e) % 2 != 0) fail("odd singular count");
    const ExprPtr back = parse_expr(text, catalog);
    if (format_expr(*back) != text) fail("format/parse round trip changed the text");
    const std::string nf = normal_form(*e, catalog).to_string();
    if (normal_form(*reassemble(*e, rng), catalog).to_string() != nf) fail("reassembly changed the normal form");
    NormalizeOptions shuffled;
    shuffled.seed = rng();
    if (normal_form(*e, catalog, shuffled).to_string() != nf) fail("rule order changed the normal form");
  }
  p.field("expressions", std::to_string(count));
  p.field("failures", std::to_string(failures));
  return failures == 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus of closed 3-dimensional spaces with isolated P2-cone singularities", "alexcalc"};
  app.require_subcommand(1);

  std::string catalog_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  app.add_option("--catalog", catalog_path, "Extra catalog file merged over the built-in one");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", seed, "Seed for randomized rule order and self-tests");

  std::string expr_a, expr_b, path, name;
  bool dot = false, trace = false, randomized = false;
  std::size_t count = 200;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize->add_option("expr", expr_a)->required();
  normalize->add_flag("--trace", trace, "Also list the applied rewrites");
  normalize->add_flag("--random-order", randomized, "Apply rewrites in an order drawn from --seed");

  auto* compare = app.add_subcommand("compare", "Decide whether two expressions are homeomorphic");
  compare->add_option("left", expr_a)->required();
  compare->add_option("right", expr_b)->required();

  auto* invariants = app.add_subcommand("invariants", "Print singular count, H1 and flags");
  invariants->add_option("expr", expr_a)->required();

  auto* graph = app.add_subcommand("graph", "Print the colored P2-graph as adjacency text");
  graph->add_option("expr", expr_a)->required();
  graph->add_flag("--dot", dot, "Emit dot instead of adjacency text");

  auto* cover = app.add_subcommand("cover", "Print the orientable double branched cover");
  cover->add_option("expr", expr_a)->required();

  auto* verify = app.add_subcommand("verify-cover", "Check a two-sheeted piece cover description");
  verify->add_option("file", path)->required();

  auto* surgery = app.add_subcommand("surgery", "Surgery descriptions");
  surgery->require_subcommand(1);
  auto* s_check = surgery->add_subcommand("check", "Validate a surgery file");
  s_check->add_option("file", path)->required();
  auto* s_realize = surgery->add_subcommand("realize", "Closed space of a surgery file");
  s_realize->add_option("file", path)->required();
  auto* s_skeleton = surgery->add_subcommand("skeleton", "Surgery skeleton of an expression");
  s_skeleton->add_option("expr", expr_a)->required();
  auto* s_fill = surgery->add_subcommand("fill4d", "4-dimensional filling recipe of an expression");
  s_fill->add_option("expr", expr_a)->required();

  auto* gluings = app.add_subcommand("enumerate-gluings", "List the closed spaces glued from two blocks");

  auto* listing = app.add_subcommand("catalog", "List catalog entries or describe one");
  listing->add_option("name", name);

  auto* self = app.add_subcommand("selftest", "Randomized parity, round-trip and normal-form checks");
  self->add_option("--count", count, "Number of random expressions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Printer p(out, format == "machine");
  // Output is buffered so that a failure leaves no partial result.
  std::ostringstream buffer;
  Printer bp(buffer, p.machine());
  int status = 0;
  std::string source;
  try {
    Catalog catalog = Catalog::builtin();
    if (!catalog_path.empty()) catalog.merge_file(catalog_path);
    auto parse = [&](const std::string& text) {
      source = text;
      return parse_expr(text, catalog);
    };

    if (*normalize) {
      const ExprPtr e = parse(expr_a);
      std::vector<Rule> rules;
      NormalizeOptions opts;
      if (randomized) opts.seed = seed;
      if (trace) opts.trace = &rules;
      bp.line("normal form", normal_form(*e, catalog, opts).to_string());
      if (trace)
        for (Rule r : rules) bp.field("rule", rule_name(r));
    } else if (*compare) {
      const ExprPtr a = parse(expr_a);
      const ExprPtr b = parse(expr_b);
      const Equivalence eq = equivalent(*a, *b, catalog);
      switch (eq.verdict) {
        case Verdict::Yes: bp.line("verdict", "Yes"); break;
        case Verdict::Unknown: bp.line("verdict", "Unknown"); break;
        case Verdict::No:
          if (bp.machine()) bp.field("verdict", "No");
          else buffer << "No: " << eq.certificate->kind << " certificate\n";
          bp.field("certificate.kind", eq.certificate->kind);
          bp.field("certificate.left", eq.certificate->left);
          bp.field("certificate.right", eq.certificate->right);
          break;
      }
    } else if (*invariants) {
      const ExprPtr e = parse(expr_a);
      bp.field("singular count", std::to_string(singular_count(*e)));
      bp.field("h1", group(h1(*e)));
      bp.field("orientable", tri(is_orientable(*e)));
      bp.field("prime", tri(is_prime(*e, catalog)));
      bp.field("irreducible", tri(is_irreducible(*e, catalog)));
      if (singular_count(*e) > 0) bp.field("cover h1", group(cover_h1(*e, catalog)));
    } else if (*graph) {
      const ExprPtr e = parse(expr_a);
      const auto g = graph_of(*e);
      if (!g) throw Error(ErrorCode::UnknownAtom, "no P2-graph is known for this expression");
      buffer << (dot ? to_dot(*g) : to_adjacency_text(*g));
    } else if (*cover) {
      const ExprPtr e = parse(expr_a);
      const auto c = double_branched_cover(*e, catalog);
      bp.line("cover", c ? format_expr(**c) : "Unknown");
      if (bp.machine()) bp.field("cover h1", group(cover_h1(*e, catalog)));
    } else if (*verify) {
      const CoverVerdict v = check_two_sheeted(parse_piece_cover(read_file(path)));
      bp.line("verdict", v.ok ? "ok" : "rejected: " + v.reason);
      if (!v.ok) status = 1;
    } else if (*s_check) {
      validate(parse_surgery(read_file(path)));
      bp.line("verdict", "valid");
    } else if (*s_realize) {
      const ExprPtr e = realize(parse_surgery(read_file(path)), catalog);
      bp.line("space", format_expr(*e));
      if (bp.machine()) bp.field("h1", group(h1(*e)));
    } else if (*s_skeleton) {
      buffer << format_surgery(surgery_skeleton(*parse(expr_a), catalog));
    } else if (*s_fill) {
      const FillingRecipe4D r = filling_4d(parse(expr_a), catalog);
      bp.field("two handles", std::to_string(r.two_handles));
      bp.field("y pieces", std::to_string(r.y_pieces));
      bp.field("boundary", format_expr(*r.boundary_expr));
    } else if (*gluings) {
      for (const auto& g : catalog.enumerate_gluings()) {
        std::string cls = resolved_text(g.result);
        if (const auto* c = std::get_if<ClosedSpace>(&g.result)) cls = normal_form(*sum_of(*c), catalog).to_string();
        const std::string key = "glue(" + g.left + "," + g.right + ")";
        if (bp.machine()) buffer << key << ':' << cls << '\n';
        else buffer << key << " = " << cls << '\n';
      }
    } else if (*listing) {
      if (name.empty()) {
        for (const auto& n : catalog.block_names()) bp.field("block", n);
        for (const auto& n : catalog.atom_names()) bp.field("atom", n);
        for (const auto& n : catalog.alias_names()) bp.field("alias", n);
      } else if (auto alias = catalog.alias(compact_name(name))) {
        bp.field("alias", *alias);
      } else {
        const auto entry = catalog.lookup(compact_name(name));
        if (const auto* a = std::get_if<AtomPtr>(&entry)) describe_atom(bp, **a);
        else describe_block(bp, *std::get<BlockPtr>(entry));
      }
    } else if (*self) {
      if (!selftest(catalog, seed, count, bp, err)) status = 1;
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]";
    if (e.span() && !source.empty() && e.span()->begin <= source.size()) {
      err << " at " << e.span()->begin << ": " << e.what() << '\n';
      err << "  " << source << '\n';
      const std::size_t width = std::max<std::size_t>(1, e.span()->end - e.span()->begin);
      err << "  " << std::string(e.span()->begin, ' ') << std::string(width, '^') << '\n';
    } else {
      err << ": " << e.what() << '\n';
    }
    return 1;
  }
  out << buffer.str();
  return status;
}

}  // namespace alexcalc
