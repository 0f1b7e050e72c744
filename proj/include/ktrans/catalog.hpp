#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktrans/scalars.hpp"

namespace ktrans {

enum class Family { TypeI, TypeI1, TypeII, TypeIII, TypeIV, TypeV, TypeVI };
enum class LatticeKind { Generic2, ProductSU, RankOne, SpDoubled };

std::string to_string(Family f);
std::string to_string(LatticeKind k);

class IllegalParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  Family family = Family::TypeIV;
  long p1 = 0;  // r (I, III), d (I1), k (II), n (IV)
  long p2 = 0;  // b (I)

  static FamilySpec I(long r, long b) { return {Family::TypeI, r, b}; }
  static FamilySpec I1(long d) { return {Family::TypeI1, d, 0}; }
  static FamilySpec II(long k) { return {Family::TypeII, k, 0}; }
  static FamilySpec III(long r) { return {Family::TypeIII, r, 0}; }
  static FamilySpec IV(long n) { return {Family::TypeIV, n, 0}; }
  static FamilySpec V() { return {Family::TypeV, 0, 0}; }
  static FamilySpec VI() { return {Family::TypeVI, 0, 0}; }
};

// Parses "I 2 1", "I1 3", "II 8", "III 2", "IV 6", "V", "VI".
FamilySpec parse_family_spec(const std::string& text);
FamilySpec parse_family_spec(const std::vector<std::string>& words);
std::string to_string(const FamilySpec& s);

// A compact Hermitian factor of the VMRT, described by its own Jordan data.
struct VmrtFactor {
  long rank = 0;
  long a = 0;
  long b = 0;
  long dim = 0;
  long genus = 0;
};

struct GroupDatum {
  FamilySpec spec;
  std::string name;
  long r = 0;
  long a = 0;
  long b = 0;
  long d = 0;
  long p = 0;
  long d1 = 0;
  // Rank-two VMRT characteristics; for product and rank-one lattices these
  // describe the factor that carries mu1.
  long a1 = 0;
  long b1 = 0;
  std::vector<VmrtFactor> vmrt;
  long rho_g = 0;
  long rho1 = 0;
  long rho2 = 0;
  LatticeKind kind = LatticeKind::Generic2;
};

long jordan_dim(long r, long a, long b);
long jordan_genus(long r, long a, long b);

GroupDatum group_datum(const FamilySpec& spec);

struct DualityReport {
  Rational lhs;
  bool holds = false;
  std::string formula;
};
DualityReport duality_check(const GroupDatum& g);

// Tabulated half-width of the complementary series; nullopt means empty.
std::optional<Rational> complementary_table_value(const GroupDatum& g);

// Every family instance with parameters <= bound (legal ranges respected).
std::vector<FamilySpec> all_family_specs(long bound);

}  // namespace ktrans
