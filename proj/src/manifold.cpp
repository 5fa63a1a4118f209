#include "mdeg/manifold.hpp"

#include <algorithm>
#include <numeric>

namespace mdeg {

namespace {

void require(bool ok, const char* constraint, const std::string& message) {
  if (!ok) throw InvalidInput(constraint, message);
}

void check_cyclic(const Integer& cyclic, const Integer& base_order) {
  require(cyclic >= 1, "m>=1", "cyclic factor must be at least 1");
  require(gcd(cyclic, base_order) == 1, "gcd(m,|pi1|)=1",
          "cyclic factor " + to_string(cyclic) + " is not coprime to the base order " +
              to_string(base_order));
}

std::strong_ordering cmp(const Integer& a, const Integer& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <typename... Pairs>
std::strong_ordering lexicographic(Pairs... results) {
  std::strong_ordering out = std::strong_ordering::equal;
  ((out == 0 ? (out = results, 0) : 0), ...);
  return out;
}

std::strong_ordering compare_pieces(const SphericalFamily& a, const SphericalFamily& b) {
  return lexicographic(a.kind <=> b.kind, cmp(a.p, b.p), cmp(a.q, b.q), cmp(a.n, b.n),
                       cmp(a.cyclic_factor, b.cyclic_factor));
}

std::strong_ordering compare_pieces(const SeifertInvariants& a, const SeifertInvariants& b) {
  auto head = lexicographic(b.base_orientable() <=> a.base_orientable(),
                            cmp(a.base_genus(), b.base_genus()), cmp(a.euler_b(), b.euler_b()));
  if (head != 0) return head;
  const auto& fa = a.fibers();
  const auto& fb = b.fibers();
  for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
    auto c = lexicographic(cmp(fa[i].index, fb[i].index), cmp(fa[i].twist, fb[i].twist));
    if (c != 0) return c;
  }
  return fa.size() <=> fb.size();
}

std::strong_ordering compare_pieces(const MonodromyMatrix& a, const MonodromyMatrix& b) {
  return lexicographic(cmp(a.m11, b.m11), cmp(a.m12, b.m12), cmp(a.m21, b.m21),
                       cmp(a.m22, b.m22));
}

std::strong_ordering compare_pieces(const S2xS1&, const S2xS1&) {
  return std::strong_ordering::equal;
}

template <typename Tagged>
std::strong_ordering compare_pieces(const Tagged& a, const Tagged& b) {
  return a.label <=> b.label;
}

}  // namespace

SphericalFamily SphericalFamily::lens(Integer p, Integer q, Integer cyclic) {
  require(p >= 1, "p>=1", "lens space order must be at least 1");
  require(q >= 0 && q < p, "0<=q<p", "lens parameter q must satisfy 0 <= q < p");
  require(gcd(p, q) == 1, "gcd(p,q)=1",
          "lens parameters " + to_string(p) + "," + to_string(q) + " are not coprime");
  check_cyclic(cyclic, p);
  SphericalFamily out;
  out.kind = SphericalKind::Lens;
  out.p = std::move(p);
  out.q = std::move(q);
  out.cyclic_factor = std::move(cyclic);
  return out;
}

SphericalFamily SphericalFamily::prism(Integer n, Integer cyclic) {
  require(n >= 1, "n>=1", "prism parameter must be at least 1");
  check_cyclic(cyclic, 4 * n);
  SphericalFamily out;
  out.kind = SphericalKind::Prism;
  out.p = 1;
  out.q = 0;
  out.n = std::move(n);
  out.cyclic_factor = std::move(cyclic);
  return out;
}

SphericalFamily SphericalFamily::binary(SphericalKind kind, Integer cyclic) {
  require(kind != SphericalKind::Lens && kind != SphericalKind::Prism, "kind",
          "binary() takes a binary polyhedral kind");
  SphericalFamily out;
  out.kind = kind;
  out.p = 1;
  out.q = 0;
  check_cyclic(cyclic, out.base_order());
  out.cyclic_factor = std::move(cyclic);
  return out;
}

Integer SphericalFamily::base_order() const {
  switch (kind) {
    case SphericalKind::Lens: return p;
    case SphericalKind::Prism: return 4 * n;
    case SphericalKind::BinaryTetrahedral: return 24;
    case SphericalKind::BinaryOctahedral: return 48;
    case SphericalKind::BinaryIcosahedral: return 120;
  }
  return 0;
}

SeifertInvariants SeifertInvariants::make(bool base_orientable, Integer base_genus,
                                          Integer euler_b, std::vector<ExceptionalFiber> fibers) {
  if (base_orientable) {
    require(base_genus >= 0, "genus>=0", "orientable base genus must be nonnegative");
  } else {
    require(base_genus >= 1, "crosscaps>=1", "non-orientable base needs at least one crosscap");
  }
  for (auto& fiber : fibers) {
    require(fiber.index >= 2, "a>=2",
            "exceptional fiber index " + to_string(fiber.index) + " is below 2");
    require(gcd(fiber.index, fiber.twist) == 1, "gcd(a,b)=1",
            "fiber (" + to_string(fiber.index) + "," + to_string(fiber.twist) +
                ") is not coprime");
    Integer reduced = mod(fiber.twist, fiber.index);
    euler_b += (fiber.twist - reduced) / fiber.index;
    fiber.twist = reduced;
  }
  std::sort(fibers.begin(), fibers.end(), [](const ExceptionalFiber& x, const ExceptionalFiber& y) {
    return x.index < y.index || (x.index == y.index && x.twist < y.twist);
  });
  SeifertInvariants out;
  out.base_orientable_ = base_orientable;
  out.base_genus_ = std::move(base_genus);
  out.euler_b_ = std::move(euler_b);
  out.fibers_ = std::move(fibers);
  return out;
}

MonodromyMatrix MonodromyMatrix::make(Integer m11, Integer m12, Integer m21, Integer m22) {
  MonodromyMatrix out{std::move(m11), std::move(m12), std::move(m21), std::move(m22)};
  require(out.determinant() == 1, "det=1",
          "monodromy determinant is " + to_string(out.determinant()) + ", expected 1");
  return out;
}

bool MonodromyMatrix::is_plus_minus_identity() const {
  return m12 == 0 && m21 == 0 && m11 == m22 && abs(m11) == 1;
}

Integer pi1_order(const SphericalFamily& family) {
  Integer base = family.base_order();
  check_cyclic(family.cyclic_factor, base);
  return base * family.cyclic_factor;
}

Integer alpha(const SeifertInvariants& s) {
  Integer out = 1;
  for (const auto& fiber : s.fibers()) out *= fiber.index;
  return out;
}

Rational chi_orb(const SeifertInvariants& s) {
  Rational out = s.base_orientable() ? Rational(2 - 2 * s.base_genus()) : Rational(2 - s.base_genus());
  for (const auto& fiber : s.fibers()) out -= 1 - Rational(1, 1) / Rational(fiber.index);
  out.canonicalize();
  return out;
}

Rational euler_number(const SeifertInvariants& s) {
  Rational sum(s.euler_b());
  for (const auto& fiber : s.fibers()) {
    Rational term(fiber.twist, fiber.index);
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return -sum;
}

void validate_label(const std::string& label) {
  bool ok = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  });
  require(ok, "label", "labels are nonempty runs of letters, digits, '_', '.', '-'");
}

void validate(const PrimeDescriptor& piece) {
  std::visit(
      [](const auto& value) {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, SphericalFamily>) {
          (void)pi1_order(value);
        } else if constexpr (std::is_same_v<T, SeifertInvariants>) {
          Rational chi = chi_orb(value);
          if (chi > 0) {
            bool flat = euler_number(value) == 0;
            require(flat, "spherical-seifert",
                    "Seifert data with spherical geometry: enter it as "
                    "lens/prism/tet/oct/ico instead");
            require(value.base_orientable(), "non-prime-seifert",
                    "this Seifert data is RP3 # RP3, which is not prime: enter "
                    "lens(2,1) # lens(2,1)");
          }
        } else if constexpr (std::is_same_v<T, MonodromyMatrix>) {
          require(value.determinant() == 1, "det=1", "monodromy determinant must be 1");
        } else if constexpr (std::is_same_v<T, S2xS1>) {
        } else {
          validate_label(value.label);
        }
      },
      piece);
}

std::strong_ordering compare(const PrimeDescriptor& a, const PrimeDescriptor& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return compare_pieces(lhs, std::get<T>(b));
      },
      a);
}

ManifoldExpression normalize(ManifoldExpression m) {
  std::stable_sort(m.factors.begin(), m.factors.end(),
                   [](const PrimeDescriptor& x, const PrimeDescriptor& y) {
                     return compare(x, y) < 0;
                   });
  return m;
}

}  // namespace mdeg
