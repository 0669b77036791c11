#pragma once

#include <stdexcept>

namespace mpkit {

// Point on the extended real line, for generalized inverses: the infimum of
// an empty level set is +infinity, and a level set without lower bound has
// infimum -infinity. Tagged explicitly so the defective cases cannot leak
// into arithmetic as IEEE specials.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return {Tag::kFinite, v}; }
  static ExtendedReal pos_inf() { return {Tag::kPosInf, 0.0}; }
  static ExtendedReal neg_inf() { return {Tag::kNegInf, 0.0}; }

  bool is_finite() const { return tag_ == Tag::kFinite; }
  bool is_pos_inf() const { return tag_ == Tag::kPosInf; }
  bool is_neg_inf() const { return tag_ == Tag::kNegInf; }

  // Value of a finite point; throws on the infinities.
  double value() const {
    if (!is_finite()) throw std::logic_error("ExtendedReal: value() called on an infinity");
    return value_;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != Tag::kFinite || a.value_ == b.value_;
  }

 private:
  enum class Tag { kNegInf, kFinite, kPosInf };
  ExtendedReal(Tag tag, double v) : tag_(tag), value_(v) {}

  Tag tag_;
  double value_;
};

}  // namespace mpkit
