#include "alexcalc/surgery.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "alexcalc/error.hpp"
#include "alexcalc/normalizer.hpp"

namespace alexcalc {

Slope normalize_slope(std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::NonCoprimeSlope,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not a coprime pair");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;
  return {p, q};
}

void validate(const SurgeryDescription& d) {
  std::set<std::string> ids;
  bool klein = false;
  for (const auto& c : d.components) {
    if (!ids.insert(c.id).second) throw Error(ErrorCode::IncompatibleFilling, "component '" + c.id + "' appears twice");
    if (c.filling.kind == FillingKind::SolidTorus) {
      const Slope s = c.filling.slope;
      if (s.q < 0 || std::gcd(s.p, s.q) != 1)
        throw Error(ErrorCode::NonCoprimeSlope, "component '" + c.id + "' has slope " + std::to_string(s.p) + "/" +
                                                    std::to_string(s.q) + " outside normal form");
    }
    if (c.filling.kind != FillingKind::SolidTorus) klein = true;
  }
  if (d.bpt_sites > 0 && d.base != SurgeryBase::S2TwistS1 && !klein)
    throw Error(ErrorCode::IncompatibleFilling,
                "B(pt) replacement needs a solid Klein bottle: use base S2~S1 or a kleinbottle component");
}

SurgeryDescription parse_surgery(std::string_view text) {
  SurgeryDescription d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_base = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty() || w[0][0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "surgery line " + std::to_string(lineno) + ": " + why);
    };
    auto number = [&](const std::string& s) -> std::int64_t {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw fail("bad integer '" + s + "'");
        return v;
      } catch (const std::logic_error&) {
        throw fail("bad integer '" + s + "'");
      }
    };
    if (w[0] == "base" && w.size() == 2) {
      if (have_base) throw fail("base given twice");
      if (w[1] == "S3") d.base = SurgeryBase::S3;
      else if (w[1] == "S2~S1") d.base = SurgeryBase::S2TwistS1;
      else throw fail("base must be S3 or S2~S1");
      have_base = true;
    } else if (w[0] == "component" && w.size() >= 3) {
      LinkComponent c;
      c.id = w[1];
      if (w[2] == "torus" && w.size() == 4) {
        const auto slash = w[3].find('/');
        if (slash == std::string::npos) throw fail("slope must be <p>/<q>");
        c.filling.kind = FillingKind::SolidTorus;
        c.filling.slope = normalize_slope(number(w[3].substr(0, slash)), number(w[3].substr(slash + 1)));
      } else if (w[2] == "kleinbottle" && w.size() == 3) {
        c.filling.kind = FillingKind::SolidKleinBottle;
      } else if (w[2] == "placeholder" && w.size() == 3) {
        c.filling.kind = FillingKind::Placeholder;
      } else {
        throw fail("expected 'component <id> torus <p>/<q>|kleinbottle|placeholder'");
      }
      d.components.push_back(std::move(c));
    } else if (w[0] == "bpt" && w.size() == 2) {
      const auto n = number(w[1]);
      if (n < 0) throw fail("bpt count is negative");
      d.bpt_sites = static_cast<std::size_t>(n);
    } else {
      throw fail("unrecognized line");
    }
  }
  return d;
}

std::string format_surgery(const SurgeryDescription& d) {
  std::ostringstream out;
  out << "base " << (d.base == SurgeryBase::S3 ? "S3" : "S2~S1") << '\n';
  for (const auto& c : d.components) {
    out << "component " << c.id << ' ';
    switch (c.filling.kind) {
      case FillingKind::SolidTorus: out << "torus " << c.filling.slope.p << '/' << c.filling.slope.q; break;
      case FillingKind::SolidKleinBottle: out << "kleinbottle"; break;
      case FillingKind::Placeholder: out << "placeholder"; break;
    }
    out << '\n';
  }
  out << "bpt " << d.bpt_sites << '\n';
  return out.str();
}

ExprPtr realize(const SurgeryDescription& d, const Catalog& catalog) {
  validate(d);
  if (d.components.empty()) {
    if (d.base == SurgeryBase::S3 && d.bpt_sites == 0) return SpaceExpr::make_atom(catalog.atom("S3"));
    if (d.base == SurgeryBase::S2TwistS1) {
      // S2~S1 is the double of the solid Klein bottle; each B(pt) replaces
      // one of the two halves.
      switch (d.bpt_sites) {
        case 0: return SpaceExpr::make_atom(catalog.atom("S2~S1"));
        case 1: return SpaceExpr::make_atom(catalog.atom("Susp(P2)"));
        case 2: return sum_of(ClosedSpace{{catalog.atom("Susp(P2)"), catalog.atom("Susp(P2)")}});
        default: break;
      }
    }
  }
  AtomSpec a;
  std::ostringstream name;
  name << "surgery[base=" << (d.base == SurgeryBase::S3 ? "S3" : "S2~S1");
  for (const auto& c : d.components) {
    name << ',' << c.id << '=';
    switch (c.filling.kind) {
      case FillingKind::SolidTorus: name << "torus(" << c.filling.slope.p << '/' << c.filling.slope.q << ')'; break;
      case FillingKind::SolidKleinBottle: name << "kleinbottle"; break;
      case FillingKind::Placeholder: name << "placeholder"; break;
    }
  }
  name << ",bpt=" << d.bpt_sites << ']';
  a.name = name.str();
  for (std::size_t i = 1; i <= 2 * d.bpt_sites; ++i) a.sites.push_back({"y" + std::to_string(i), std::nullopt, std::nullopt});
  a.flags.manifold = a.sites.empty();
  if (!a.flags.manifold) a.flags.orientable = false;
  a.opaque = true;
  return SpaceExpr::make_atom(std::make_shared<const AtomSpec>(std::move(a)));
}

SurgeryDescription surgery_skeleton(const SpaceExpr& e, const Catalog& catalog) {
  const std::size_t n = singular_count(e);
  if (n % 2 != 0) throw Error(ErrorCode::OddSingularCount, "expression has " + std::to_string(n) + " singular points");
  SurgeryDescription d;
  if (n == 0 && normal_form(e, catalog).to_string() == "S3") return d;
  d.base = (n == 0 && is_orientable(e) == true) ? SurgeryBase::S3 : SurgeryBase::S2TwistS1;
  d.components.push_back({"L", {FillingKind::Placeholder, {}}});
  d.bpt_sites = n / 2;
  return d;
}

FillingRecipe4D filling_4d(ExprPtr e, const Catalog& catalog) {
  const SurgeryDescription skeleton = surgery_skeleton(*e, catalog);
  FillingRecipe4D r;
  r.two_handles = skeleton.components.size();
  r.y_pieces = skeleton.bpt_sites;
  r.boundary_expr = std::move(e);
  return r;
}

}  // namespace alexcalc
