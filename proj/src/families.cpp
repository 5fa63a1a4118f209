#include "mdeg/families.hpp"

#include "mdeg/parser.hpp"

namespace mdeg {

namespace {

// Smallest r >= 0 with r^k >= lo.
Integer ceil_root(const Integer& lo, unsigned long k) {
  if (lo <= 0) return 0;
  Integer r = floor_root(lo, k);
  if (pow(r, k) < lo) ++r;
  return r;
}

// Canonical root of a perfect power: the one of {r, -r} that is 1 mod m, if any.
std::optional<Integer> root_one_mod(const Integer& r, const Integer& m) {
  if (mod(r, m) == mod(Integer(1), m)) return r;
  if (mod(Integer(-r), m) == mod(Integer(1), m)) return Integer(-r);
  return std::nullopt;
}

Membership member_base(const BaseFamily& family, const Integer& d) {
  struct Visitor {
    const Integer& d;
    Membership operator()(const AllIntegers&) const { return {true, d, std::nullopt}; }
    Membership operator()(const APPlusOne& f) const {
      if (auto l = exact_div(d - 1, f.modulus)) return {true, *l, std::nullopt};
      return {};
    }
    Membership operator()(const OddSquares&) const {
      auto r = exact_root(d, 2);
      if (!r || mpz_odd_p(r->get_mpz_t()) == 0) return {};
      return {true, Integer((*r - 1) / 2), *r};
    }
    Membership operator()(const FourthPowersMod12&) const {
      auto r = exact_root(d, 4);
      if (!r) return {};
      auto root = root_one_mod(*r, 12);
      if (!root) return {};
      return {true, *root, *root};
    }
    Membership operator()(const WitnessFourth& f) const {
      auto r = exact_root(d, 4);
      if (!r) return {};
      auto root = root_one_mod(*r, f.base);
      if (!root) return {};
      return {true, Integer((*root - 1) / f.base), *root};
    }
  };
  return std::visit(Visitor{d}, family);
}

// Members m >= lo of a base family, increasing.
std::vector<Integer> enumerate_from(const BaseFamily& family, const Integer& lo, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  // Increasing roots r >= 0 whose power lies in the family.
  auto powers = [&](unsigned long k, auto accepts) {
    for (Integer r = ceil_root(lo, k); out.size() < count; ++r)
      if (accepts(r)) out.push_back(pow(r, k));
  };
  struct Visitor {
    const Integer& lo;
    std::size_t count;
    std::vector<Integer>& out;
    decltype(powers)& emit;
    void operator()(const AllIntegers&) const {
      for (Integer v = lo; out.size() < count; ++v) out.push_back(v);
    }
    void operator()(const APPlusOne& f) const {
      // first l with l*m + 1 >= lo
      Integer l;
      mpz_cdiv_q(l.get_mpz_t(), Integer(lo - 1).get_mpz_t(), f.modulus.get_mpz_t());
      for (; out.size() < count; ++l) out.push_back(l * f.modulus + 1);
    }
    void operator()(const OddSquares&) const {
      emit(2, [](const Integer& r) { return mpz_odd_p(r.get_mpz_t()) != 0; });
    }
    void operator()(const FourthPowersMod12&) const {
      emit(4, [](const Integer& r) { return root_one_mod(r, 12).has_value(); });
    }
    void operator()(const WitnessFourth& f) const {
      emit(4, [&f](const Integer& r) { return root_one_mod(r, f.base).has_value(); });
    }
  };
  std::visit(Visitor{lo, count, out, powers}, family);
  return out;
}

}  // namespace

DegreeFamily make_ap_plus_one(Integer modulus) {
  if (modulus < 1) throw InvalidInput("modulus>=1", "progression modulus must be at least 1");
  return DegreeFamily{APPlusOne{std::move(modulus)}, 0};
}

DegreeFamily make_witness_fourth(Integer base) {
  if (base < 12 || mod(base, 12) != 0)
    throw InvalidInput("base=0 mod 12", "witness base must be a positive multiple of 12");
  return DegreeFamily{WitnessFourth{std::move(base)}, 0};
}

DegreeFamily family_for_class(const DegreeClass& c) {
  switch (c.kind) {
    case DegreeClassKind::Spherical:
    case DegreeClassKind::H2xE1: return make_ap_plus_one(c.parameter);
    case DegreeClassKind::TorusBundleOrSemi: return DegreeFamily{OddSquares{}, 0};
    case DegreeClassKind::NilOther: return DegreeFamily{FourthPowersMod12{}, 0};
    case DegreeClassKind::S2xS1: return DegreeFamily{AllIntegers{}, 0};
    case DegreeClassKind::Finite: break;
  }
  throw NoFamily("finite degree class (" + std::string(reason_tag(c.reason)) +
                 ") has no infinite degree family");
}

Membership member(const DegreeFamily& family, const Integer& d) {
  return member_base(family.base, d - family.offset);
}

std::vector<Integer> enumerate(const DegreeFamily& family, std::size_t count) {
  std::vector<Integer> out = enumerate_from(family.base, Integer(-family.offset), count);
  for (auto& v : out) v += family.offset;
  return out;
}

Integer combined_base(const NormalForm& n) {
  if (!n.finite.empty()) {
    std::string names;
    for (const auto& f : n.finite) {
      if (!names.empty()) names += ", ";
      names += render(f) + " [" + std::string(reason_tag(degree_class(f).reason)) + "]";
    }
    throw NoWitness(n.finite, "no witness: finite-degree factors " + names);
  }
  Integer base = 12;
  for (const auto& order : n.orders()) base *= order;
  for (const auto& a : n.alphas()) base *= a;
  return base;
}

DegreeFamily witness_family(const NormalForm& n) {
  DegreeFamily out = make_witness_fourth(combined_base(n));
  out.offset = 1;
  return out;
}

Integer witness_power(const Integer& base, const Integer& l) { return pow(base * l + 1, 4); }

std::string_view family_kind(const DegreeFamily& family) {
  if (family.shifted()) return "Shifted";
  struct Visitor {
    std::string_view operator()(const AllIntegers&) const { return "AllIntegers"; }
    std::string_view operator()(const APPlusOne&) const { return "APPlusOne"; }
    std::string_view operator()(const OddSquares&) const { return "OddSquares"; }
    std::string_view operator()(const FourthPowersMod12&) const { return "FourthPowersMod12"; }
    std::string_view operator()(const WitnessFourth&) const { return "WitnessFourth"; }
  };
  return std::visit(Visitor{}, family.base);
}

}  // namespace mdeg
