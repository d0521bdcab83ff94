#pragma once

#include <string>
#include <vector>

namespace unineq {

/// Strictly increasing continuous map [0,inf] -> [0,inf] with a closed-form inverse.
///
/// Composition applies its parts left to right: composition({A, B})(x) = B(A(x)).
/// PowerProfileExact(p) evaluates like Power(p); it marks functions of the form
/// x^p whose survival profile is taken in closed form.
class MonotoneTransform {
 public:
  enum class Kind { Identity, Power, Affine, Composition, PowerProfileExact };

  MonotoneTransform() = default;

  static MonotoneTransform identity() { return {}; }
  static MonotoneTransform power(double p);
  static MonotoneTransform affine(double a, double b);
  static MonotoneTransform composition(std::vector<MonotoneTransform> parts);
  static MonotoneTransform power_profile_exact(double p);

  Kind kind() const { return kind_; }
  double exponent() const { return p_; }
  double slope() const { return a_; }
  double offset() const { return b_; }
  const std::vector<MonotoneTransform>& parts() const { return parts_; }

  /// Throws InputError for negative or NaN input; inf maps to inf.
  double apply(double x) const;

  /// Generalized inverse inf{x >= 0 : apply(x) >= y}. Values below apply(0) map
  /// to 0; negative or NaN input throws InputError.
  double invert(double y) const;

  double operator()(double x) const { return apply(x); }

  bool is_identity() const;

  /// `*this` followed by `next`.
  MonotoneTransform then(const MonotoneTransform& next) const;

  std::string describe() const;

  friend bool operator==(const MonotoneTransform& a, const MonotoneTransform& b);

 private:
  Kind kind_ = Kind::Identity;
  double p_ = 1.0;
  double a_ = 1.0;
  double b_ = 0.0;
  std::vector<MonotoneTransform> parts_;
};

}  // namespace unineq
