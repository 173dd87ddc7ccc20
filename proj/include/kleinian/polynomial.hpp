#pragma once

#include "kleinian/error.hpp"
#include "kleinian/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace kleinian {

/// Sparse commutative polynomial with integer coefficients in a fixed number
/// of variables. Zero coefficients are never stored.
class Polynomial {
public:
  using Exponent = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = power;
    Polynomial p(nvars);
    p.add_term(e, 1);
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw DomainError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Substitutes values[k] for variable k; all values share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& values) const {
    if (values.size() != nvars_) throw DomainError("substitution arity mismatch");
    const std::size_t target = values.empty() ? 0 : values.front().num_vars();
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(target, c);
      for (std::size_t k = 0; k < nvars_; ++k) term = term * values[k].pow(e[k]);
      out += term;
    }
    return out;
  }

  /// Human-readable form over the given variable names, e.g. "z1*z2 - z3^2".
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    // Descending exponent order reads like the textbook normal forms.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      std::string mono;
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(k);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) s += mag.str();
      else if (mag == 1) s += mono;
      else s += mag.str() + "*" + mono;
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void require_same_ring(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomials live in different rings");
  }

  std::size_t nvars_;
  std::map<Exponent, Integer> terms_;
};

} // namespace kleinian
