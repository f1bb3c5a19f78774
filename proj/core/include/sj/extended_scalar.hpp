#pragma once

#include <string>

#include "sj/rational.hpp"

namespace sj {

// A rational value extended by the two symbols arising from blow-up limits:
// Infinity (a pole that survives the limit) and Undefined (a zero and a pole
// that do not cancel; must not occur for well-formed Pieri coefficients).
class ExtendedScalar {
 public:
  enum class Kind { Finite, Infinity, Undefined };

  ExtendedScalar() : kind_(Kind::Finite), value_(0) {}
  /*implicit*/ ExtendedScalar(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}

  static ExtendedScalar finite(Rational v) { return ExtendedScalar(std::move(v)); }
  static ExtendedScalar infinity() { return ExtendedScalar(Kind::Infinity); }
  static ExtendedScalar undefined() { return ExtendedScalar(Kind::Undefined); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinity; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }

  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("ExtendedScalar: no finite value");
    return value_;
  }

  bool operator==(const ExtendedScalar& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::Finite || value_ == o.value_;
  }
  bool operator!=(const ExtendedScalar& o) const { return !(*this == o); }

  std::string str() const {
    switch (kind_) {
      case Kind::Infinity: return "inf";
      case Kind::Undefined: return "undefined";
      default: return to_string(value_);
    }
  }

 private:
  explicit ExtendedScalar(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

}  // namespace sj
