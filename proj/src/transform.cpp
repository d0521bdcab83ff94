#include "unineq/transform.hpp"

#include <algorithm>
#include <cmath>

#include "unineq/extval.hpp"

namespace unineq {
namespace {

double require_positive(double v, const char* what) {
  if (!(v > 0.0) || std::isinf(v)) throw InputError(std::string(what) + " must be a finite positive number");
  return v;
}

}  // namespace

MonotoneTransform MonotoneTransform::power(double p) {
  MonotoneTransform t;
  t.kind_ = Kind::Power;
  t.p_ = require_positive(p, "power exponent");
  return t;
}

MonotoneTransform MonotoneTransform::power_profile_exact(double p) {
  MonotoneTransform t = power(p);
  t.kind_ = Kind::PowerProfileExact;
  return t;
}

MonotoneTransform MonotoneTransform::affine(double a, double b) {
  MonotoneTransform t;
  t.kind_ = Kind::Affine;
  t.a_ = require_positive(a, "affine slope");
  if (std::isnan(b) || b < 0.0 || std::isinf(b)) throw InputError("affine offset must be finite and >= 0");
  t.b_ = b;
  return t;
}

MonotoneTransform MonotoneTransform::composition(std::vector<MonotoneTransform> parts) {
  std::vector<MonotoneTransform> flat;
  for (auto& part : parts) {
    if (part.kind_ == Kind::Composition) {
      flat.insert(flat.end(), part.parts_.begin(), part.parts_.end());
    } else if (!part.is_identity()) {
      flat.push_back(std::move(part));
    }
  }
  if (flat.empty()) return identity();
  if (flat.size() == 1) return flat.front();
  MonotoneTransform t;
  t.kind_ = Kind::Composition;
  t.parts_ = std::move(flat);
  return t;
}

double MonotoneTransform::apply(double x) const {
  require_nonnegative(x, "transform input");
  switch (kind_) {
    case Kind::Identity:
      return x;
    case Kind::Power:
    case Kind::PowerProfileExact:
      return ext_pow(x, p_);
    case Kind::Affine:
      return x == kInf ? kInf : a_ * x + b_;
    case Kind::Composition:
      for (const auto& part : parts_) x = part.apply(x);
      return x;
  }
  return x;
}

double MonotoneTransform::invert(double y) const {
  require_nonnegative(y, "transform inverse input");
  switch (kind_) {
    case Kind::Identity:
      return y;
    case Kind::Power:
    case Kind::PowerProfileExact:
      return ext_pow(y, 1.0 / p_);
    case Kind::Affine:
      if (y == kInf) return kInf;
      return y <= b_ ? 0.0 : (y - b_) / a_;
    case Kind::Composition:
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) y = it->invert(y);
      return y;
  }
  return y;
}

bool MonotoneTransform::is_identity() const {
  switch (kind_) {
    case Kind::Identity:
      return true;
    case Kind::Power:
    case Kind::PowerProfileExact:
      return p_ == 1.0;
    case Kind::Affine:
      return a_ == 1.0 && b_ == 0.0;
    case Kind::Composition:
      return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.is_identity(); });
  }
  return false;
}

MonotoneTransform MonotoneTransform::then(const MonotoneTransform& next) const {
  if (next.is_identity()) return *this;
  if (is_identity()) return next;
  const bool pow_this = kind_ == Kind::Power || kind_ == Kind::PowerProfileExact;
  const bool pow_next = next.kind_ == Kind::Power || next.kind_ == Kind::PowerProfileExact;
  if (pow_this && pow_next) {
    MonotoneTransform t = power(p_ * next.p_);
    if (kind_ == Kind::PowerProfileExact) t.kind_ = Kind::PowerProfileExact;
    return t;
  }
  return composition({*this, next});
}

std::string MonotoneTransform::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Power:
      return "power(" + format_value(p_) + ")";
    case Kind::PowerProfileExact:
      return "power_profile_exact(" + format_value(p_) + ")";
    case Kind::Affine:
      return "affine(" + format_value(a_) + "," + format_value(b_) + ")";
    case Kind::Composition: {
      std::string s = "composition[";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += parts_[i].describe();
      }
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const MonotoneTransform& a, const MonotoneTransform& b) {
  if (a.is_identity() && b.is_identity()) return true;
  return a.kind_ == b.kind_ && a.p_ == b.p_ && a.a_ == b.a_ && a.b_ == b.b_ && a.parts_ == b.parts_;
}

}  // namespace unineq
