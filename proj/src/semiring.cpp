#include "taa/semiring.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "taa/errors.hpp"

namespace taa {

void Semiring::check_value(double) const {}

namespace {

class RealSemiring final : public Semiring {
public:
  std::string_view name() const noexcept override { return "real"; }

  double add(double a, double b) const override {
    double r = a + b;
    if (std::isnan(r)) throw ValueError("real semiring: addition produced NaN");
    return r;
  }

  double mul(double a, double b) const override {
    double r = a * b;
    if (std::isnan(r)) throw ValueError("real semiring: multiplication produced NaN");
    return r;
  }

  Ordering compare(double a, double b) const override {
    if (a < b) return Ordering::Less;
    if (a > b) return Ordering::Greater;
    return Ordering::Equal;
  }

  void check_value(double v) const override {
    if (std::isnan(v)) throw ValueError("real semiring: NaN is not a value");
  }
};

class BooleanSemiring final : public Semiring {
public:
  std::string_view name() const noexcept override { return "boolean"; }

  double add(double a, double b) const override {
    check_value(a);
    check_value(b);
    return (a != 0.0 || b != 0.0) ? 1.0 : 0.0;
  }

  double mul(double a, double b) const override {
    check_value(a);
    check_value(b);
    return (a != 0.0 && b != 0.0) ? 1.0 : 0.0;
  }

  Ordering compare(double a, double b) const override {
    check_value(a);
    check_value(b);
    if (a < b) return Ordering::Less;
    if (a > b) return Ordering::Greater;
    return Ordering::Equal;
  }

  void check_value(double v) const override {
    if (v != 0.0 && v != 1.0)
      throw ValueError("boolean semiring: value must be 0 or 1");
  }
};

std::map<std::string, const Semiring*>& registry() {
  static std::map<std::string, const Semiring*> instances = {
      {"real", &real_semiring()}, {"boolean", &boolean_semiring()}};
  return instances;
}

std::mutex registry_mutex;

}  // namespace

const Semiring& real_semiring() {
  static const RealSemiring instance;
  return instance;
}

const Semiring& boolean_semiring() {
  static const BooleanSemiring instance;
  return instance;
}

const Semiring* find_semiring(std::string_view name) {
  std::lock_guard lock(registry_mutex);
  auto& reg = registry();
  auto it = reg.find(std::string(name));
  return it == reg.end() ? nullptr : it->second;
}

void register_semiring(const Semiring& sr) {
  std::lock_guard lock(registry_mutex);
  registry().emplace(std::string(sr.name()), &sr);
}

}  // namespace taa
