#pragma once

#include <stdexcept>
#include <string>

#include "oscsym/errors.hpp"
#include "oscsym/rational.hpp"

namespace oscsym {

/// The sign class of the family parameter. Plus/Minus carry omega > 0 with
/// alpha = omega^2 / -omega^2; Zero has alpha = 0 and no omega.
class AlgebraMode {
  public:
    enum class Kind { Plus, Minus, Zero };

    static AlgebraMode plus(const Rational& omega) { return AlgebraMode(Kind::Plus, omega); }
    static AlgebraMode minus(const Rational& omega) { return AlgebraMode(Kind::Minus, omega); }
    static AlgebraMode zero() { return AlgebraMode(Kind::Zero, Rational(0)); }

    Kind kind() const { return kind_; }

    const Rational& omega() const {
        if (kind_ == Kind::Zero) throw ZeroModeUnsupported("zero mode has no omega");
        return omega_;
    }

    Rational alpha() const {
        switch (kind_) {
            case Kind::Plus: return omega_ * omega_;
            case Kind::Minus: return -omega_ * omega_;
            default: return Rational(0);
        }
    }

    bool has_f_basis() const { return kind_ != Kind::Zero; }

    std::string str() const {
        switch (kind_) {
            case Kind::Plus: return "plus(omega=" + to_fraction_string(omega_) + ")";
            case Kind::Minus: return "minus(omega=" + to_fraction_string(omega_) + ")";
            default: return "zero";
        }
    }

    friend bool operator==(const AlgebraMode& a, const AlgebraMode& b) {
        return a.kind_ == b.kind_ && a.omega_ == b.omega_;
    }

  private:
    AlgebraMode(Kind k, Rational w) : kind_(k), omega_(std::move(w)) {
        if (k != Kind::Zero && omega_ <= 0)
            throw std::invalid_argument("omega must be positive");
    }
    Kind kind_;
    Rational omega_;
};

}  // namespace oscsym
