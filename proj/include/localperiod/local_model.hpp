#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localperiod/rational.hpp"

namespace localperiod {

/// Discriminant sign epsilon = chi(Delta), always +1 or -1.
enum class Sign : int { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_from_int(int e);

/// A good non-archimedean place: odd residue characteristic, unit discriminant.
///
/// q is the residue field size used by the closed formulas. p and
/// delta_rep are only needed by the brute-force oracle, which always
/// works over Z/p^l with q = p.
class GoodPlace {
public:
    /// Symbolic place: any q >= 3; no oracle access.
    static GoodPlace symbolic(const Rational& q, Sign epsilon);
    /// Oracle-capable place with q = p. delta defaults to 1 for epsilon = +1
    /// and to the least quadratic non-residue mod p for epsilon = -1.
    static GoodPlace prime(std::int64_t p, Sign epsilon, std::optional<std::int64_t> delta = std::nullopt);

    const Rational& q() const { return q_; }
    Sign epsilon() const { return epsilon_; }
    bool has_prime() const { return p_.has_value(); }
    /// Throws std::logic_error on a symbolic place.
    std::int64_t p() const;
    std::int64_t delta_rep() const;

    /// Same place with the opposite discriminant class (delta reselected).
    GoodPlace with_epsilon(Sign e) const;

private:
    Rational q_{3};
    Sign epsilon_ = Sign::Plus;
    std::optional<std::int64_t> p_;
    std::optional<std::int64_t> delta_;
};

bool is_odd_prime(std::int64_t p);

/// Quadratic character of the unit u mod the odd prime p (Euler criterion).
/// Throws std::invalid_argument if p divides u or p is not an odd prime.
Sign chi(std::int64_t u, std::int64_t p);

/// Least positive quadratic non-residue mod p.
std::int64_t least_nonresidue(std::int64_t p);

enum class Kernel { Empty, Unary, BinaryAnisotropic, BinaryHyperbolic };

std::string to_string(Kernel k);
int kernel_dimension(Kernel k);

/// Isometry class of a quadratic form at a good place: anisotropic (or
/// base) kernel plus hyp_count hyperbolic planes.
struct FormShape {
    int n = 0;
    Kernel kernel = Kernel::Empty;
    int hyp_count = 0;
    Sign epsilon = Sign::Plus;

    friend bool operator==(const FormShape&, const FormShape&) = default;
};

/// Canonical shape for dimension n and discriminant sign epsilon.
/// Throws std::invalid_argument for n < 0 or (n = 0, epsilon = -1).
FormShape make_shape(int n, Sign epsilon);

/// sum c_i x_i^2 + sum_j x_j y_j, with integer coefficients read mod p^l.
struct ConcreteForm {
    std::vector<std::int64_t> square_terms;
    int hyp_terms = 0;

    int variables() const { return static_cast<int>(square_terms.size()) + 2 * hyp_terms; }
    std::string to_string() const;
    friend bool operator==(const ConcreteForm&, const ConcreteForm&) = default;
};

/// Model form for shape at place: Unary -> [Delta], BinaryAnisotropic ->
/// [1, -Delta], each hyperbolic plane -> one xy block.
/// Throws std::invalid_argument if the place has no prime or its epsilon
/// disagrees with the shape.
ConcreteForm realize_form(const FormShape& shape, const GoodPlace& place);

/// chi of the signed discriminant (-1)^{floor(n/2)} det, where an xy block
/// has Gram determinant -1/4. With this convention realize_form(make_shape(n, e))
/// always has discriminant sign e.
Sign discriminant_sign(const ConcreteForm& form, std::int64_t p);

} // namespace localperiod
