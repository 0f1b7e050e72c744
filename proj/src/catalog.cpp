#include "ktrans/catalog.hpp"

#include <sstream>

namespace ktrans {

std::string to_string(Family f) {
  switch (f) {
    case Family::TypeI: return "I";
    case Family::TypeI1: return "I1";
    case Family::TypeII: return "II";
    case Family::TypeIII: return "III";
    case Family::TypeIV: return "IV";
    case Family::TypeV: return "V";
    case Family::TypeVI: return "VI";
  }
  return "?";
}

std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Generic2: return "Generic2";
    case LatticeKind::ProductSU: return "ProductSU";
    case LatticeKind::RankOne: return "RankOne";
    case LatticeKind::SpDoubled: return "SpDoubled";
  }
  return "?";
}

FamilySpec parse_family_spec(const std::vector<std::string>& w) {
  if (w.empty()) throw IllegalParameters("empty group spec");
  auto num = [&](std::size_t i) -> long {
    if (i >= w.size()) throw IllegalParameters("group spec '" + w[0] + "' is missing a parameter");
    try {
      std::size_t used = 0;
      long v = std::stol(w[i], &used);
      if (used != w[i].size()) throw std::invalid_argument(w[i]);
      return v;
    } catch (const std::logic_error&) {
      throw IllegalParameters("not an integer: " + w[i]);
    }
  };
  auto arity = [&](std::size_t n) {
    if (w.size() != n + 1) throw IllegalParameters("group spec '" + w[0] + "' takes " + std::to_string(n) + " parameter(s)");
  };
  const std::string& f = w[0];
  if (f == "I") {
    arity(2);
    return FamilySpec::I(num(1), num(2));
  }
  if (f == "I1") {
    arity(1);
    return FamilySpec::I1(num(1));
  }
  if (f == "II") {
    arity(1);
    return FamilySpec::II(num(1));
  }
  if (f == "III") {
    arity(1);
    return FamilySpec::III(num(1));
  }
  if (f == "IV") {
    arity(1);
    return FamilySpec::IV(num(1));
  }
  if (f == "V") {
    arity(0);
    return FamilySpec::V();
  }
  if (f == "VI") {
    arity(0);
    return FamilySpec::VI();
  }
  throw IllegalParameters("unknown family: " + f);
}

FamilySpec parse_family_spec(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string s; in >> s;) words.push_back(s);
  return parse_family_spec(words);
}

std::string to_string(const FamilySpec& s) {
  std::string out = to_string(s.family);
  switch (s.family) {
    case Family::TypeI: return out + " " + std::to_string(s.p1) + " " + std::to_string(s.p2);
    case Family::TypeV:
    case Family::TypeVI: return out;
    default: return out + " " + std::to_string(s.p1);
  }
}

long jordan_dim(long r, long a, long b) { return r + a * r * (r - 1) / 2 + r * b; }
long jordan_genus(long r, long a, long b) { return 2 + a * (r - 1) + b; }

namespace {

VmrtFactor factor(long rank, long a, long b) {
  return {rank, a, b, jordan_dim(rank, a, b), jordan_genus(rank, a, b)};
}

void fill_jordan(GroupDatum& g, long r, long a, long b) {
  g.r = r;
  g.a = a;
  g.b = b;
  g.d = jordan_dim(r, a, b);
  g.p = jordan_genus(r, a, b);
  g.d1 = (r - 1) * a + b;
  g.rho_g = 1 + g.d1;
}

void generic2(GroupDatum& g, long a1, long b1) {
  g.kind = LatticeKind::Generic2;
  g.a1 = a1;
  g.b1 = b1;
  g.vmrt = {factor(2, a1, b1)};
  g.rho1 = 1 + a1 + b1;
  g.rho2 = 1 + b1;
}

}  // namespace

GroupDatum group_datum(const FamilySpec& s) {
  GroupDatum g;
  g.spec = s;
  g.name = to_string(s);
  auto need = [&](bool ok, const std::string& why) {
    if (!ok) throw IllegalParameters(g.name + ": " + why);
  };
  switch (s.family) {
    case Family::TypeI: {
      long r = s.p1, b = s.p2;
      need(r >= 2, "rank r >= 2 required");
      need(b >= 0, "b >= 0 required");
      fill_jordan(g, r, 2, b);
      g.kind = LatticeKind::ProductSU;
      g.a1 = 0;
      g.b1 = r + b - 2;
      g.vmrt = {factor(1, 0, r + b - 2), factor(1, 0, r - 2)};
      g.rho1 = r + b - 1;
      g.rho2 = r - 1;
      break;
    }
    case Family::TypeI1: {
      long d = s.p1;
      need(d >= 2, "d >= 2 required");
      fill_jordan(g, 1, 2, d - 1);
      g.kind = LatticeKind::RankOne;
      g.a1 = 0;
      g.b1 = d - 2;
      g.vmrt = {factor(1, 0, d - 2)};
      g.rho1 = d - 1;
      g.rho2 = 0;
      break;
    }
    case Family::TypeII: {
      long k = s.p1;
      need(k >= 4, "k >= 4 required");
      if (k % 2 == 0) {
        long r = k / 2;
        fill_jordan(g, r, 4, 0);
        generic2(g, 2, 2 * r - 4);
      } else {
        long r = (k - 1) / 2;
        fill_jordan(g, r, 4, 2);
        generic2(g, 2, 2 * r - 3);
      }
      break;
    }
    case Family::TypeIII: {
      long r = s.p1;
      need(r >= 2, "rank r >= 2 required");
      fill_jordan(g, r, 1, 0);
      g.kind = LatticeKind::SpDoubled;
      g.a1 = 0;
      g.b1 = r - 2;
      g.vmrt = {factor(1, 0, r - 2)};
      g.rho1 = r - 1;
      g.rho2 = 0;
      break;
    }
    case Family::TypeIV: {
      long n = s.p1;
      need(n > 4, "n > 4 required");
      fill_jordan(g, 2, n - 2, 0);
      generic2(g, n - 4, 0);
      break;
    }
    case Family::TypeV:
      fill_jordan(g, 2, 6, 4);
      generic2(g, 4, 2);
      break;
    case Family::TypeVI:
      fill_jordan(g, 3, 8, 0);
      generic2(g, 6, 4);
      break;
  }
  return g;
}

DualityReport duality_check(const GroupDatum& g) {
  DualityReport rep;
  rep.lhs = make_rational(g.p, g.d);
  rep.lhs.canonicalize();
  std::ostringstream f;
  f << g.p << "/" << g.d;
  // sp(r,R) counts its single VMRT factor twice.
  long weight = g.spec.family == Family::TypeIII ? 2 : 1;
  for (const auto& v : g.vmrt) {
    Rational t(weight * v.dim, v.genus);
    t.canonicalize();
    rep.lhs += t;
    f << " + " << (weight == 2 ? "2*" : "") << v.dim << "/" << v.genus;
  }
  rep.holds = rep.lhs == 2;
  rep.formula = f.str();
  return rep;
}

std::optional<Rational> complementary_table_value(const GroupDatum& g) {
  switch (g.spec.family) {
    case Family::TypeI: return Rational(1 + g.spec.p2);
    case Family::TypeII: return Rational(3);
    case Family::TypeIV: return Rational(g.spec.p1 - 3);
    case Family::TypeV: return Rational(3);
    case Family::TypeVI: return Rational(5);
    case Family::TypeI1: return Rational(g.spec.p1);
    case Family::TypeIII:
      if (g.spec.p1 == 2) return std::nullopt;
      return Rational(g.spec.p1 - 2);
  }
  return std::nullopt;
}

std::vector<FamilySpec> all_family_specs(long bound) {
  std::vector<FamilySpec> out;
  for (long r = 2; r <= bound; ++r)
    for (long b = 0; b <= bound; ++b) out.push_back(FamilySpec::I(r, b));
  for (long d = 2; d <= bound; ++d) out.push_back(FamilySpec::I1(d));
  for (long k = 4; k <= bound; ++k) out.push_back(FamilySpec::II(k));
  for (long r = 2; r <= bound; ++r) out.push_back(FamilySpec::III(r));
  for (long n = 5; n <= bound; ++n) out.push_back(FamilySpec::IV(n));
  out.push_back(FamilySpec::V());
  out.push_back(FamilySpec::VI());
  return out;
}

}  // namespace ktrans
