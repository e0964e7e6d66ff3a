#pragma once

// Formal mode algebra for the Ramond twist. Modes are labelled symbols; the
// transformations rewrite a mode of one frame as a Q(zeta_8)-combination of
// modes of the other frame plus central scalars beta_k(h^R, a) and
// beta_k(h^R, h^R). Nothing here acts on an actual module.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sflow/catalog.hpp"
#include "sflow/errors.hpp"
#include "sflow/rational.hpp"
#include "sflow/weight.hpp"

namespace sflow {

/// Element of Q(zeta) with zeta = exp(pi i / 4), stored in the basis
/// 1, zeta, zeta^2, zeta^3 (zeta^4 = -1).
class Cyclotomic8 {
 public:
  Cyclotomic8() = default;
  Cyclotomic8(const Rational& r) { c_[0] = r; }  // NOLINT(google-explicit-constructor)

  /// zeta^e for any integer e.
  static Cyclotomic8 zeta_power(int e) {
    const int m = ((e % 8) + 8) % 8;
    Cyclotomic8 z;
    z.c_[static_cast<std::size_t>(m % 4)] = m < 4 ? Rational(1) : Rational(-1);
    return z;
  }

  const Rational& coeff(std::size_t j) const { return c_[j]; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  /// The exponent e with *this == zeta^e, if *this is a pure eighth root of unity.
  std::optional<int> as_root_of_unity() const {
    for (int e = 0; e < 8; ++e) {
      if (*this == zeta_power(e)) return e;
    }
    return std::nullopt;
  }

  Cyclotomic8& operator+=(const Cyclotomic8& o) {
    for (std::size_t j = 0; j < 4; ++j) c_[j] += o.c_[j];
    return *this;
  }
  Cyclotomic8& operator-=(const Cyclotomic8& o) {
    for (std::size_t j = 0; j < 4; ++j) c_[j] -= o.c_[j];
    return *this;
  }
  friend Cyclotomic8 operator+(Cyclotomic8 a, const Cyclotomic8& b) { return a += b; }
  friend Cyclotomic8 operator-(Cyclotomic8 a, const Cyclotomic8& b) { return a -= b; }
  friend Cyclotomic8 operator-(const Cyclotomic8& a) { return Cyclotomic8() - a; }
  friend Cyclotomic8 operator*(const Cyclotomic8& a, const Cyclotomic8& b) {
    std::array<Rational, 8> wide;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) wide[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclotomic8 out;
    for (std::size_t j = 0; j < 4; ++j) out.c_[j] = wide[j] - wide[j + 4];
    return out;
  }
  friend bool operator==(const Cyclotomic8&, const Cyclotomic8&) = default;

  std::string to_string() const {
    static constexpr std::array<const char*, 4> names{"", "z", "z^2", "z^3"};
    std::string out;
    for (std::size_t j = 0; j < 4; ++j) {
      if (c_[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[j].to_string();
      if (j != 0) out += std::string("*") + names[j];
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Rational, 4> c_{};
};

enum class Generator { J, G, L, JHr };
enum class Frame { NS, R };
enum class Direction { ToRamond, FromRamond };

inline std::string to_string(Generator g) {
  switch (g) {
    case Generator::J: return "J";
    case Generator::G: return "G";
    case Generator::L: return "L";
    case Generator::JHr: return "J^{hR}";
  }
  return "?";
}

inline Generator parse_generator(std::string_view s) {
  if (s == "J" || s == "j") return Generator::J;
  if (s == "G" || s == "g") return Generator::G;
  if (s == "L" || s == "l") return Generator::L;
  if (s == "JHr" || s == "jhr") return Generator::JHr;
  throw parse_error("unknown generator '" + std::string(s) + "' (expected J, G, L or JHr)");
}

/// A formal symbol: either a mode X_n of a given frame, or one of the central
/// scalars beta_k(h^R, a) / beta_k(h^R, h^R).
struct Symbol {
  enum class Kind { Mode, BetaHrA, BetaHrHr };
  Kind kind = Kind::Mode;
  Generator gen = Generator::L;
  int gamma = 0;
  Frame frame = Frame::NS;
  Rational index;

  static Symbol mode(Generator g, int gamma, Frame f, Rational n) { return {Kind::Mode, g, gamma, f, std::move(n)}; }
  static Symbol beta_hr_a() { return {Kind::BetaHrA, Generator::J, 0, Frame::NS, Rational(0)}; }
  static Symbol beta_hr_hr() { return {Kind::BetaHrHr, Generator::JHr, 0, Frame::NS, Rational(0)}; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::BetaHrA: return "beta(hR,a)";
      case Kind::BetaHrHr: return "beta(hR,hR)";
      case Kind::Mode: break;
    }
    std::string s = sflow::to_string(gen);
    if (gen == Generator::J || gen == Generator::G) s += "[" + std::to_string(gamma) + "]";
    if (frame == Frame::R) s += "^R";
    return s + "_" + index.to_string();
  }
};

/// Finite Q(zeta_8)-linear combination of symbols.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const Symbol& s, const Cyclotomic8& c = Rational(1)) { add(s, c); }

  void add(const Symbol& s, const Cyclotomic8& c) {
    auto& slot = terms_[s];
    slot += c;
    if (slot.is_zero()) terms_.erase(s);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a += Cyclotomic8(Rational(-1)) * b; }
  friend FormalSum operator*(const Cyclotomic8& c, const FormalSum& a) {
    FormalSum out;
    for (const auto& [s, v] : a.terms_) out.add(s, c * v);
    return out;
  }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  const std::map<Symbol, Cyclotomic8>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")" + s.to_string();
    }
    return out;
  }

 private:
  std::map<Symbol, Cyclotomic8> terms_;
};

namespace detail {

inline void require_legal_mode(Generator g, int gamma, const Rational& n) {
  switch (g) {
    case Generator::J:
      if (gamma != -2 && gamma != 0 && gamma != 2) {
        throw domain_error("J modes need gamma in {-2,0,2}, got " + std::to_string(gamma));
      }
      break;
    case Generator::G:
      if (gamma != -1 && gamma != 1) throw domain_error("G modes need gamma in {-1,1}, got " + std::to_string(gamma));
      break;
    case Generator::L:
    case Generator::JHr:
      if (gamma != 0) throw domain_error(to_string(g) + " has gamma = 0, got " + std::to_string(gamma));
      break;
  }
  if (!(Rational(2) * n).is_integer()) throw domain_error("mode index must be a half-integer, got " + n.to_string());
  if (g != Generator::G && !n.is_integer()) {
    throw domain_error(to_string(g) + " modes carry integer indices, got " + n.to_string());
  }
}

inline Rational delta(const Rational& a, const Rational& b) { return a == b ? Rational(1) : Rational(0); }

}  // namespace detail

/// Rewrites one mode into the opposite frame.
///
/// ToRamond takes a twisted mode X^R_n and returns its expression in untwisted
/// modes; FromRamond takes an untwisted mode X_n and returns its expression
/// in twisted modes. The L entry of FromRamond is obtained by substituting
/// the J^{hR} inverse into the inverted L relation, so its constant is derived
/// rather than tabulated.
inline FormalSum rewrite(Generator g, int gamma, const Rational& n, Direction dir) {
  detail::require_legal_mode(g, gamma, n);
  const Rational half(1, 2);
  const Rational shift = Rational(gamma) / Rational(2);
  FormalSum out;
  if (dir == Direction::ToRamond) {
    switch (g) {
      case Generator::J:
        out.add(Symbol::mode(g, gamma, Frame::NS, n + shift), Cyclotomic8::zeta_power(-gamma));
        out.add(Symbol::beta_hr_a(), half * detail::delta(n, 0));
        break;
      case Generator::G:
        out.add(Symbol::mode(g, gamma, Frame::NS, n + shift), Cyclotomic8::zeta_power(-gamma));
        break;
      case Generator::JHr:
        out.add(Symbol::mode(g, 0, Frame::NS, n), Rational(1));
        out.add(Symbol::beta_hr_hr(), half * detail::delta(n, 0));
        break;
      case Generator::L:
        out.add(Symbol::mode(Generator::L, 0, Frame::NS, n), Rational(1));
        out.add(Symbol::mode(Generator::JHr, 0, Frame::NS, n), half);
        out.add(Symbol::beta_hr_hr(), Rational(1, 8) * detail::delta(n, 0));
        break;
    }
    return out;
  }
  switch (g) {
    case Generator::J: {
      const Cyclotomic8 phase = Cyclotomic8::zeta_power(gamma);
      out.add(Symbol::mode(g, gamma, Frame::R, n - shift), phase);
      out.add(Symbol::beta_hr_a(), phase * Cyclotomic8(-half * detail::delta(n, shift)));
      break;
    }
    case Generator::G:
      out.add(Symbol::mode(g, gamma, Frame::R, n - shift), Cyclotomic8::zeta_power(gamma));
      break;
    case Generator::JHr:
      out.add(Symbol::mode(g, 0, Frame::R, n), Rational(1));
      out.add(Symbol::beta_hr_hr(), -half * detail::delta(n, 0));
      break;
    case Generator::L: {
      // L_n = L^R_n - (1/2) J^{hR}_n - (1/8) delta_{n,0} beta(hR,hR), then J^{hR}_n -> twisted.
      out.add(Symbol::mode(Generator::L, 0, Frame::R, n), Rational(1));
      out.add(Symbol::beta_hr_hr(), -Rational(1, 8) * detail::delta(n, 0));
      out += Cyclotomic8(-half) * rewrite(Generator::JHr, 0, n, Direction::FromRamond);
      break;
    }
  }
  return out;
}

/// Applies `rewrite` to every mode symbol of `expr`; central scalars pass through.
inline FormalSum rewrite(const FormalSum& expr, Direction dir) {
  const Frame source = dir == Direction::ToRamond ? Frame::R : Frame::NS;
  FormalSum out;
  for (const auto& [s, c] : expr.terms()) {
    if (s.kind == Symbol::Kind::Mode && s.frame == source) {
      out += c * rewrite(s.gen, s.gamma, s.index, dir);
    } else {
      out.add(s, c);
    }
  }
  return out;
}

/// The summary record of one transform: phase exponent (of zeta), new mode
/// index, and the coefficients of the central scalar and of the auxiliary
/// J^{hR} mode.
struct ModeTransform {
  Generator gen = Generator::L;
  int gamma = 0;
  Direction direction = Direction::ToRamond;
  int phase_exp = 0;
  Rational new_index;
  Rational central;    ///< coefficient of beta(hR,a) (J) or beta(hR,hR) (L, J^{hR})
  Rational auxiliary;  ///< coefficient of the J^{hR} mode in the L rule
  FormalSum expansion;
};

inline ModeTransform mode_transform(Generator g, int gamma, const Rational& n, Direction dir) {
  ModeTransform t;
  t.gen = g;
  t.gamma = gamma;
  t.direction = dir;
  t.expansion = rewrite(g, gamma, n, dir);
  const Frame target = dir == Direction::ToRamond ? Frame::NS : Frame::R;
  bool found = false;
  for (const auto& [s, c] : t.expansion.terms()) {
    if (s.kind == Symbol::Kind::Mode && s.gen == g && s.frame == target) {
      const auto e = c.as_root_of_unity();
      if (!e) throw consistency_error("leading coefficient of " + s.to_string() + " is not a root of unity");
      t.phase_exp = *e;
      t.new_index = s.index;
      found = true;
    } else if (s.kind == Symbol::Kind::Mode && s.gen == Generator::JHr) {
      t.auxiliary = c.coeff(0);
    } else if (s.kind != Symbol::Kind::Mode) {
      t.central = c.coeff(0);
    }
  }
  if (!found) throw consistency_error("transform of " + to_string(g) + " lost its leading mode");
  if (g == Generator::J && dir == Direction::FromRamond) {
    // The inverse J rule multiplies its central term by the phase; report it without.
    for (const auto& [s, c] : t.expansion.terms()) {
      if (s.kind == Symbol::Kind::BetaHrA) {
        t.central = (Cyclotomic8::zeta_power(-t.phase_exp) * c).coeff(0);
      }
    }
  }
  return t;
}

struct RoundtripReport {
  bool ok = false;
  Frame start = Frame::R;
  FormalSum input;
  FormalSum result;
};

/// Rewrites a mode into the other frame and back, requiring the identity.
/// Integer indices start from the twisted frame (J, L, J^{hR}, and G since
/// twisted G modes are integral); half-odd indices start from the untwisted
/// frame (G only).
inline RoundtripReport roundtrip(Generator g, int gamma, const Rational& n) {
  detail::require_legal_mode(g, gamma, n);
  RoundtripReport rep;
  rep.start = n.is_integer() ? Frame::R : Frame::NS;
  rep.input = FormalSum(Symbol::mode(g, gamma, rep.start, n));
  if (rep.start == Frame::R) {
    rep.result = rewrite(rewrite(rep.input, Direction::ToRamond), Direction::FromRamond);
  } else {
    rep.result = rewrite(rewrite(rep.input, Direction::FromRamond), Direction::ToRamond);
  }
  rep.ok = rep.result == rep.input;
  return rep;
}

inline bool roundtrip_check(Generator g, int gamma, const Rational& n) { return roundtrip(g, gamma, n).ok; }

/// Residual left in the twisted-frame round trip of L_0 when the constant of
/// the inverse L rule is replaced by `constant` (sign convention: L_n = L^R_n
/// - (1/2)(J^{hR})^R_n + delta_{n,0} constant beta(hR,hR)). Zero exactly for
/// the derived constant 1/8.
inline Rational l_inverse_residual(const Rational& constant) {
  // (L^R_0)  -> L_0 + 1/2 J^{hR}_0 + 1/8 beta
  //          -> L^R_0 - 1/2 J^{hR,R}_0 + c beta + 1/2 (J^{hR,R}_0 - 1/2 beta) + 1/8 beta
  return constant - Rational(1, 4) + Rational(1, 8);
}

/// Central scalar values for a concrete (family, k, rho), with `a` the Cartan
/// element entering beta_k(h^R, a) for J rules.
struct CentralValues {
  Rational beta_hr_a;
  Rational beta_hr_hr;
};

inline CentralValues central_values(const FamilyData& data, const Rational& k, RhoChoice rho,
                                    const std::optional<Weight>& a = std::nullopt) {
  const Weight h = h_r(data, rho);
  CentralValues v;
  v.beta_hr_hr = beta_k(data, k, h, h);
  if (a) v.beta_hr_a = beta_k(data, k, h, *a);
  return v;
}

/// Replaces central symbols by their values: a pure mode combination plus a constant.
struct EvaluatedSum {
  FormalSum modes;
  Cyclotomic8 constant;
};

inline EvaluatedSum evaluate_central(const FormalSum& expr, const CentralValues& v) {
  EvaluatedSum out;
  for (const auto& [s, c] : expr.terms()) {
    switch (s.kind) {
      case Symbol::Kind::Mode: out.modes.add(s, c); break;
      case Symbol::Kind::BetaHrA: out.constant += c * Cyclotomic8(v.beta_hr_a); break;
      case Symbol::Kind::BetaHrHr: out.constant += c * Cyclotomic8(v.beta_hr_hr); break;
    }
  }
  return out;
}

}  // namespace sflow
