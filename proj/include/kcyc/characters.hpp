#pragma once

// (Z/mZ)^* as a product of cyclic groups and Dirichlet characters on it.
// A character is an exponent vector on the fixed generators: the value on
// generator i is exp(2 pi i e_i / n_i). Values are reported as exponents
// t of zeta_{ord(chi)}, so the caller chooses the cyclotomic level.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace kcyc {

inline constexpr i64 kMaxCharacterModulus = i64{1} << 31;

struct UnitGenerator {
  enum class Kind { cyclic, minus_one, five };

  i64 residue = 1;            // generator as a residue mod the full modulus
  i64 order = 1;
  i64 prime = 2;              // q: the CRT component is (Z/q^e)^*
  int prime_exponent = 0;     // e
  i64 component_modulus = 1;  // q^e
  i64 local = 1;              // generator modulo q^e
  Kind kind = Kind::cyclic;
};

namespace detail {

// log of h to base gamma, gamma of prime order r modulo M
inline i64 prime_order_log(i64 gamma, i64 h, i64 r, i64 M) {
  const u64 um = static_cast<u64>(M);
  if (r <= 1024) {
    u64 x = 1;
    for (i64 d = 0; d < r; ++d) {
      if (x == static_cast<u64>(h)) return d;
      x = mulmod(x, static_cast<u64>(gamma), um);
    }
    throw computation_error("discrete log: element not in subgroup");
  }
  // baby-step giant-step
  const i64 step = static_cast<i64>(std::sqrt(static_cast<double>(r))) + 1;
  std::unordered_map<u64, i64> baby;
  u64 x = 1;
  for (i64 j = 0; j < step; ++j) {
    baby.emplace(x, j);
    x = mulmod(x, static_cast<u64>(gamma), um);
  }
  const u64 giant = powmod(static_cast<u64>(gamma), static_cast<u64>(r - step % r) % static_cast<u64>(r), um);
  u64 y = static_cast<u64>(h);
  for (i64 i = 0; i <= step; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return (i * step + it->second) % r;
    y = mulmod(y, giant, um);
  }
  throw computation_error("discrete log: element not in subgroup");
}

// Pohlig-Hellman: x with g^x = h mod M, g of order n.
inline i64 discrete_log(i64 g, i64 h, i64 n, i64 M) {
  const u64 um = static_cast<u64>(M);
  const u64 g_inv = powmod(static_cast<u64>(g), static_cast<u64>(n - 1), um);
  i64 x = 0, modulus = 1;
  for (auto [r, e] : factor_small(n)) {
    const i64 gamma = static_cast<i64>(powmod(static_cast<u64>(g), static_cast<u64>(n / r), um));
    i64 xr = 0, rk = 1;
    for (int k = 0; k < e; ++k) {
      const u64 shifted = mulmod(powmod(g_inv, static_cast<u64>(xr), um), static_cast<u64>(h), um);
      const i64 hk = static_cast<i64>(powmod(shifted, static_cast<u64>(n / (rk * r)), um));
      xr += prime_order_log(gamma, hk, r, M) * rk;
      rk *= r;
    }
    // combine x mod modulus with xr mod rk
    const i64 t = static_cast<i64>(mulmod(static_cast<u64>(mod_floor(xr - x, rk)),
                                          static_cast<u64>(inverse_mod(modulus % rk, rk)), static_cast<u64>(rk)));
    x += modulus * t;
    modulus *= rk;
  }
  return mod_floor(x, n);
}

}  // namespace detail

/// CRT decomposition of (Z/mZ)^*: smallest primitive root for each odd
/// prime power, and {-1, 5} (or {-1} modulo 4) for the power of two.
class UnitGroupStructure {
 public:
  explicit UnitGroupStructure(i64 m) : m_(m) {
    require(m >= 1, "unit_group: modulus must be >= 1");
    require(m < kMaxCharacterModulus, "unit_group: modulus too large");
    for (auto [q, e] : factor_small(m)) {
      const i64 qe = ipow(q, static_cast<unsigned>(e));
      if (q == 2) {
        if (e >= 2) add({lift(qe - 1, qe), 2, 2, e, qe, qe - 1, UnitGenerator::Kind::minus_one});
        if (e >= 3) add({lift(5, qe), qe / 4, 2, e, qe, 5, UnitGenerator::Kind::five});
      } else {
        const i64 g = smallest_primitive_root(q, e);
        add({lift(g, qe), qe / q * (q - 1), q, e, qe, g, UnitGenerator::Kind::cyclic});
      }
    }
  }

  i64 modulus() const { return m_; }
  const std::vector<UnitGenerator>& generators() const { return gens_; }
  i64 order() const {
    i64 n = 1;
    for (const auto& g : gens_) n *= g.order;
    return n;
  }

  bool is_unit(i64 a) const { return std::gcd(mod_floor(a, m_), m_) == 1; }

  /// Exponents l_i with a = prod g_i^{l_i} (mod m); gcd(a, m) = 1.
  std::vector<i64> discrete_log(i64 a) const {
    require(is_unit(a), "discrete_log: argument is not a unit");
    std::vector<i64> logs;
    logs.reserve(gens_.size());
    for (const auto& g : gens_) {
      const i64 local = mod_floor(a, g.component_modulus);
      switch (g.kind) {
        case UnitGenerator::Kind::minus_one:
          logs.push_back(local % 4 == 3 ? 1 : 0);
          break;
        case UnitGenerator::Kind::five: {
          const i64 b = local % 4 == 3 ? g.component_modulus - local : local;
          logs.push_back(detail::discrete_log(5, b, g.order, g.component_modulus));
          break;
        }
        case UnitGenerator::Kind::cyclic:
          logs.push_back(detail::discrete_log(g.local, local, g.order, g.component_modulus));
          break;
      }
    }
    return logs;
  }

  /// prod g_i^{logs_i} mod m, as a representative in [1, m].
  i64 element(std::span<const i64> logs) const {
    u64 a = 1 % static_cast<u64>(m_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      a = mulmod(a, powmod(static_cast<u64>(gens_[i].residue), static_cast<u64>(mod_floor(logs[i], gens_[i].order)),
                           static_cast<u64>(m_)),
                 static_cast<u64>(m_));
    }
    return a == 0 ? m_ : static_cast<i64>(a);
  }

  /// Calls f(a, logs) once for every unit a in [1, m], walking the
  /// exponent tuples in odometer order.
  template <class F>
  void for_each_unit(F&& f) const {
    std::vector<i64> logs(gens_.size(), 0);
    u64 a = 1 % static_cast<u64>(m_);
    const u64 um = static_cast<u64>(m_);
    for (;;) {
      f(a == 0 ? m_ : static_cast<i64>(a), std::as_const(logs));
      std::size_t i = 0;
      for (; i < gens_.size(); ++i) {
        a = mulmod(a, static_cast<u64>(gens_[i].residue), um);
        if (++logs[i] < gens_[i].order) break;
        logs[i] = 0;
      }
      if (i == gens_.size()) break;
    }
  }

 private:
  // x = local (mod q^e), x = 1 (mod m / q^e)
  i64 lift(i64 local, i64 qe) const {
    const i64 rest = m_ / qe;
    if (rest == 1) return local;
    const i64 t = static_cast<i64>(mulmod(static_cast<u64>(mod_floor(local - 1, qe)),
                                          static_cast<u64>(inverse_mod(rest % qe, qe)), static_cast<u64>(qe)));
    return 1 + rest * t;
  }

  void add(UnitGenerator g) { gens_.push_back(g); }

  i64 m_;
  std::vector<UnitGenerator> gens_;
};

inline UnitGroupStructure unit_group(i64 m) { return UnitGroupStructure(m); }

using UnitGroupPtr = std::shared_ptr<const UnitGroupStructure>;

inline UnitGroupPtr make_unit_group(i64 m) { return std::make_shared<const UnitGroupStructure>(m); }

class DirichletCharacter {
 public:
  DirichletCharacter(UnitGroupPtr group, std::vector<i64> exponents) : group_(std::move(group)), e_(std::move(exponents)) {
    require(group_ != nullptr, "character: null unit group");
    const auto& gens = group_->generators();
    require(e_.size() == gens.size(), "character: exponent count must match the generator count");
    order_ = 1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      e_[i] = mod_floor(e_[i], gens[i].order);
      order_ = std::lcm(order_, gens[i].order / std::gcd(e_[i], gens[i].order));
    }
    scaled_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) scaled_[i] = e_[i] * (order_ / std::gcd(order_, gens[i].order)) / (gens[i].order / std::gcd(order_, gens[i].order));
    conductor_ = compute_conductor();
    even_ = value_exponent_of(modulus() - 1) == 0;
  }

  static DirichletCharacter trivial(i64 m) {
    auto g = make_unit_group(m);
    std::vector<i64> zeros(g->generators().size(), 0);
    return DirichletCharacter(std::move(g), std::move(zeros));
  }

  i64 modulus() const { return group_->modulus(); }
  const UnitGroupStructure& group() const { return *group_; }
  const UnitGroupPtr& group_ptr() const { return group_; }
  const std::vector<i64>& exponents() const { return e_; }
  i64 order() const { return order_; }
  i64 conductor() const { return conductor_; }
  bool is_even() const { return even_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  bool is_trivial() const { return order_ == 1; }

  /// t with chi(a) = zeta_{ord}^t, or nullopt when gcd(a, m) > 1.
  std::optional<i64> evaluate(i64 a) const {
    if (!group_->is_unit(a)) return std::nullopt;
    return value_exponent_of(a);
  }

  /// Exponent of chi at the unit with the given generator logs.
  i64 value_exponent(std::span<const i64> logs) const {
    i64 t = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      t = static_cast<i64>((static_cast<u64>(t) + mulmod(static_cast<u64>(scaled_[i]), static_cast<u64>(logs[i]), static_cast<u64>(order_))) % static_cast<u64>(order_));
    }
    return t;
  }

  /// chi^a on the same modulus.
  DirichletCharacter pow(i64 a) const {
    std::vector<i64> e = e_;
    const auto& gens = group_->generators();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = static_cast<i64>(mulmod(static_cast<u64>(e[i]), static_cast<u64>(mod_floor(a, gens[i].order)), static_cast<u64>(gens[i].order)));
    }
    return DirichletCharacter(group_, std::move(e));
  }

  /// "chi[m;e1,e2,...]": modulus and exponents on the generators of
  /// unit_group(m).
  std::string label() const {
    std::string s = "chi[" + std::to_string(modulus()) + ";";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + "]";
  }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  i64 value_exponent_of(i64 a) const {
    const auto logs = group_->discrete_log(a);
    return value_exponent(logs);
  }

  i64 compute_conductor() const {
    i64 f = 1;
    const auto& gens = group_->generators();
    i64 two_sign = 0, two_five = 0, two_e = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      if (g.kind == UnitGenerator::Kind::minus_one) {
        two_sign = e_[i];
        two_e = g.prime_exponent;
        continue;
      }
      if (g.kind == UnitGenerator::Kind::five) {
        two_five = e_[i];
        continue;
      }
      if (e_[i] == 0) continue;
      // trivial on 1 + q^c Z iff e * phi(q^c) = 0 mod phi(q^e)
      for (int c = 1; c <= g.prime_exponent; ++c) {
        const i64 qc = ipow(g.prime, static_cast<unsigned>(c));
        const i64 phi_qc = qc / g.prime * (g.prime - 1);
        if (static_cast<i64>(mulmod(static_cast<u64>(e_[i]), static_cast<u64>(phi_qc), static_cast<u64>(g.order))) == 0) {
          f *= qc;
          break;
        }
      }
    }
    if (two_five != 0) {
      const i64 five_order = ipow(2, static_cast<unsigned>(two_e - 2));
      for (int c = 3; c <= two_e; ++c) {
        if (static_cast<i64>(mulmod(static_cast<u64>(two_five), static_cast<u64>(ipow(2, static_cast<unsigned>(c - 2))), static_cast<u64>(five_order))) == 0) {
          f *= ipow(2, static_cast<unsigned>(c));
          break;
        }
      }
    } else if (two_sign != 0) {
      f *= 4;
    }
    return f;
  }

  UnitGroupPtr group_;
  std::vector<i64> e_;
  std::vector<i64> scaled_;  // exponent contribution per generator log, in Z/ord
  i64 order_ = 1;
  i64 conductor_ = 1;
  bool even_ = true;
};

inline std::optional<i64> evaluate(const DirichletCharacter& chi, i64 a) { return chi.evaluate(a); }

inline i64 conductor(const DirichletCharacter& chi) { return chi.conductor(); }

/// The character on `target` that agrees with chi on every unit of both
/// moduli. Requires conductor(chi) | target modulus.
inline DirichletCharacter transport(const DirichletCharacter& chi, UnitGroupPtr target) {
  const i64 M = target->modulus();
  require(M % chi.conductor() == 0, "transport: target modulus must be a multiple of the conductor");
  std::vector<i64> e;
  for (const auto& g : target->generators()) {
    i64 a = g.residue;
    while (std::gcd(mod_floor(a, chi.modulus()), chi.modulus()) != 1) a += M;
    const i64 t = *chi.evaluate(a);
    // chi(g)^{ord g} = 1, so t * ord(g) is a multiple of ord(chi)
    const i64 scaled = static_cast<i64>(static_cast<__int128>(t) * g.order / chi.order());
    ensure(static_cast<__int128>(scaled) * chi.order() == static_cast<__int128>(t) * g.order,
           "transport: character value incompatible with generator order");
    e.push_back(scaled);
  }
  return DirichletCharacter(std::move(target), std::move(e));
}

/// The primitive character inducing chi (modulus = conductor).
inline DirichletCharacter primitive(const DirichletCharacter& chi, UnitGroupPtr conductor_group = nullptr) {
  if (chi.is_primitive()) return chi;
  if (!conductor_group) conductor_group = make_unit_group(chi.conductor());
  require(conductor_group->modulus() == chi.conductor(), "primitive: group modulus must equal the conductor");
  return transport(chi, std::move(conductor_group));
}

/// Primitive character of chi1 * chi2.
inline DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
  const i64 M = std::lcm(a.conductor(), b.conductor());
  auto group = make_unit_group(M);
  const auto x = transport(a, group), y = transport(b, group);
  std::vector<i64> e(x.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exponents()[i] + y.exponents()[i];
  return primitive(DirichletCharacter(std::move(group), std::move(e)));
}

/// Every character modulo m, in odometer order of exponent tuples.
inline std::vector<DirichletCharacter> all_characters(const UnitGroupPtr& group) {
  std::vector<DirichletCharacter> out;
  const auto& gens = group->generators();
  std::vector<i64> e(gens.size(), 0);
  for (;;) {
    out.emplace_back(group, e);
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

inline std::vector<DirichletCharacter> all_characters(i64 m) { return all_characters(make_unit_group(m)); }

/// True when the primitive characters form a group under multiplication.
/// All members are transported to the lcm of their conductors, where the
/// group law is addition of exponent vectors.
inline bool is_closed_group(const std::vector<DirichletCharacter>& chars) {
  if (chars.empty()) return false;
  i64 L = 1;
  for (const auto& c : chars) L = std::lcm(L, c.conductor());
  auto group = make_unit_group(L);
  const auto& gens = group->generators();
  std::set<std::vector<i64>> members;
  for (const auto& c : chars) members.insert(transport(c, group).exponents());
  if (members.size() != chars.size()) return false;
  if (!members.contains(std::vector<i64>(gens.size(), 0))) return false;
  std::vector<i64> sum(gens.size());
  for (const auto& x : members) {
    for (const auto& y : members) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (x[i] + y[i]) % gens[i].order;
      if (!members.contains(sum)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fields

/// Q(zeta_m + zeta_m^{-1}); m = 1 or 2 gives Q.
struct RealCyclotomic {
  i64 m = 1;
};

/// The maximal p-extension of Q inside Q(zeta_m)^+.
struct MaxPSubextension {
  i64 m = 1;
  i64 p = 3;
};

/// The cyclic degree-p subfield of Q(zeta_ell), ell prime, ell = 1 mod p.
struct PrimeCyclicSubfield {
  i64 ell = 7;
  i64 p = 3;
};

struct ExplicitCharacterGroup {
  std::vector<DirichletCharacter> characters;
};

using FieldSpec = std::variant<RealCyclotomic, MaxPSubextension, PrimeCyclicSubfield, ExplicitCharacterGroup>;

inline std::string describe(const FieldSpec& spec) {
  struct Visitor {
    std::string operator()(const RealCyclotomic& f) const { return "Q(zeta_" + std::to_string(f.m) + ")^+"; }
    std::string operator()(const MaxPSubextension& f) const {
      return "max " + std::to_string(f.p) + "-subextension of Q(zeta_" + std::to_string(f.m) + ")^+";
    }
    std::string operator()(const PrimeCyclicSubfield& f) const {
      return "degree-" + std::to_string(f.p) + " subfield of Q(zeta_" + std::to_string(f.ell) + ")";
    }
    std::string operator()(const ExplicitCharacterGroup& f) const {
      return "field with " + std::to_string(f.characters.size()) + " explicit characters";
    }
  };
  return std::visit(Visitor{}, spec);
}

namespace detail {

inline std::vector<DirichletCharacter> primitivize_all(const std::vector<DirichletCharacter>& chars) {
  std::map<i64, UnitGroupPtr> groups;
  std::vector<DirichletCharacter> out;
  out.reserve(chars.size());
  for (const auto& c : chars) {
    auto& g = groups[c.conductor()];
    if (!g) g = make_unit_group(c.conductor());
    out.push_back(primitive(c, g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// characters mod m whose exponent on generator i is a multiple of step_i
inline std::vector<DirichletCharacter> subgroup_characters(const UnitGroupPtr& group, const std::vector<i64>& step) {
  std::vector<DirichletCharacter> out;
  const auto& gens = group->generators();
  std::vector<i64> e(gens.size(), 0);
  for (;;) {
    out.emplace_back(group, e);
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      e[i] += step[i];
      if (e[i] < gens[i].order) break;
      e[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

}  // namespace detail

/// The character group X_F of the field: primitive, sorted, verified to be
/// closed under multiplication.
inline std::vector<DirichletCharacter> characters_of_field(const FieldSpec& spec) {
  struct Visitor {
    std::vector<DirichletCharacter> operator()(const RealCyclotomic& f) const {
      require(f.m >= 1, "real cyclotomic field: m must be >= 1");
      std::vector<DirichletCharacter> even;
      for (auto& c : all_characters(f.m)) {
        if (c.is_even()) even.push_back(std::move(c));
      }
      return detail::primitivize_all(even);
    }
    std::vector<DirichletCharacter> operator()(const MaxPSubextension& f) const {
      require(f.m >= 1, "p-subextension: m must be >= 1");
      require(is_odd_prime(f.p), "p-subextension: p must be an odd prime");
      auto group = make_unit_group(f.m);
      std::vector<i64> step;
      for (const auto& g : group->generators()) step.push_back(g.order / ipow(f.p, static_cast<unsigned>(valuation(g.order, f.p))));
      return detail::primitivize_all(detail::subgroup_characters(group, step));
    }
    std::vector<DirichletCharacter> operator()(const PrimeCyclicSubfield& f) const {
      require(is_odd_prime(f.p), "prime cyclic subfield: p must be an odd prime");
      require(is_prime(f.ell), "prime cyclic subfield: ell must be prime");
      require(f.ell % f.p == 1, "prime cyclic subfield: ell must be 1 mod p");
      auto group = make_unit_group(f.ell);
      return detail::primitivize_all(detail::subgroup_characters(group, {(f.ell - 1) / f.p}));
    }
    std::vector<DirichletCharacter> operator()(const ExplicitCharacterGroup& f) const {
      auto out = detail::primitivize_all(f.characters);
      require(out.size() == f.characters.size(), "explicit character group has duplicate members");
      require(is_closed_group(out), "explicit characters do not form a group");
      return out;
    }
  };
  auto chars = std::visit(Visitor{}, spec);
  if (!std::holds_alternative<ExplicitCharacterGroup>(spec)) {
    ensure(is_closed_group(chars), "constructed character set is not a group");
  }
  return chars;
}

/// An abelian number field together with its derived character data.
class AbelianField {
 public:
  explicit AbelianField(FieldSpec spec) : spec_(std::move(spec)), chars_(characters_of_field(spec_)) {
    for (const auto& c : chars_) conductor_ = std::lcm(conductor_, c.conductor());
  }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<DirichletCharacter>& characters() const { return chars_; }
  i64 degree() const { return static_cast<i64>(chars_.size()); }
  i64 conductor() const { return conductor_; }
  bool is_totally_real() const {
    return std::all_of(chars_.begin(), chars_.end(), [](const DirichletCharacter& c) { return c.is_even(); });
  }
  std::string name() const { return describe(spec_); }

 private:
  FieldSpec spec_;
  std::vector<DirichletCharacter> chars_;
  i64 conductor_ = 1;
};

/// Characters of exact order p^j. The field's group must be a p-group.
inline std::vector<DirichletCharacter> ghat_stratum(const AbelianField& field, i64 p, int j) {
  require(is_odd_prime(p), "ghat_stratum: p must be an odd prime");
  require(j >= 0, "ghat_stratum: j must be nonnegative");
  std::vector<DirichletCharacter> out;
  for (const auto& c : field.characters()) {
    const i64 o = c.order();
    require(o == ipow(p, static_cast<unsigned>(valuation(o, p))), "ghat_stratum: character group is not a p-group");
    if (valuation(o, p) == j) out.push_back(c);
  }
  return out;
}

}  // namespace kcyc
