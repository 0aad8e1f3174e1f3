#ifndef TAA_SEMIRING_HPP
#define TAA_SEMIRING_HPP

#include <string_view>

namespace taa {

/// Result of a partial comparison.
enum class Ordering { Less, Equal, Greater, Incomparable };

/// A partially-ordered semiring over double-precision values.
///
/// add must be associative and commutative with zero() as identity; mul must
/// be associative with one() as identity, distribute over add, and annihilate
/// at zero(). compare must be a partial order compatible with both operations:
/// a <= b implies a+c <= b+c, and (a <= b, 0 <= c) implies a*c <= b*c.
///
/// Instances are stateless singletons; arrays identify their semiring by
/// instance address. User-defined instances (a tropical semiring, say) can be
/// registered for serialization via register_semiring().
class Semiring {
public:
  virtual ~Semiring() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual double zero() const noexcept { return 0.0; }
  virtual double one() const noexcept { return 1.0; }
  virtual double add(double a, double b) const = 0;
  virtual double mul(double a, double b) const = 0;
  virtual Ordering compare(double a, double b) const = 0;

  /// Rejects values outside the semiring domain (throws ValueError).
  virtual void check_value(double v) const;

  bool is_zero(double v) const { return v == zero(); }
};

/// Arithmetic over R with the total numeric order. NaN is excluded from the
/// domain; operations that would produce NaN throw ValueError.
const Semiring& real_semiring();

/// {0,1} with add = OR, mul = AND, 0 < 1.
const Semiring& boolean_semiring();

/// Registry lookup by name ("real", "boolean", plus registered instances).
/// Returns nullptr when unknown.
const Semiring* find_semiring(std::string_view name);

/// Makes a user-defined instance visible to deserialization.
void register_semiring(const Semiring& sr);

}  // namespace taa

#endif
