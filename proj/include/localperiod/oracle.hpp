#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "localperiod/local_model.hpp"
#include "localperiod/rational.hpp"

namespace localperiod {

/// Default cap on p^{2l}, the cost of one histogram merge.
inline constexpr std::uint64_t kDefaultBudgetCells = 10'000'000;

/// Thrown when an oracle request exceeds its work budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// counts[r] = #{x in (Z/p^l)^n : B(x) = r mod p^l}.
///
/// Counts are stored as 128-bit integers; construction refuses any form
/// whose total mass p^{l n} would not fit, so no entry can overflow.
class ValueHistogram {
public:
    using Count = unsigned __int128;

    ValueHistogram(std::int64_t p, int ell);

    std::int64_t p() const { return p_; }
    int ell() const { return ell_; }
    std::uint64_t modulus() const { return modulus_; }
    int variables() const { return variables_; }

    Integer count(std::int64_t residue) const;
    /// Sum of all counts; always p^{l * variables}.
    Integer total() const;
    /// count(rho mod p^l) / p^{l n}.
    Rational measure(const Integer& rho) const;

    const std::vector<Count>& raw() const { return counts_; }

    /// Cyclic convolution with another histogram over the same ring.
    void convolve(const ValueHistogram& other);

    static ValueHistogram point(std::int64_t p, int ell);
    static ValueHistogram square_term(std::int64_t p, int ell, std::int64_t coeff);
    static ValueHistogram hyperbolic_plane(std::int64_t p, int ell);

private:
    std::int64_t p_;
    int ell_;
    std::uint64_t modulus_;
    int variables_ = 0;
    std::vector<Count> counts_;
};

/// Value distribution of form mod p^l, built by convolving one histogram
/// per square term and per xy block. Throws BudgetExceeded when p^{2l}
/// exceeds budget_cells or the counts would not fit.
ValueHistogram value_distribution(const ConcreteForm& form, int ell, const GoodPlace& place,
                                  std::uint64_t budget_cells = kDefaultBudgetCells);

/// X_l(rho) = meas{x in o^n : B(x) = rho mod p^l}; 1 for l = 0.
Rational count_measure(const ConcreteForm& form, const Integer& rho, int ell, const GoodPlace& place,
                       std::uint64_t budget_cells = kDefaultBudgetCells);

/// rho = 0, or rho = p^{2T} (t = p^T).
struct RhoSpec {
    bool zero = true;
    int T = 0;

    static RhoSpec at_zero() { return {true, 0}; }
    static RhoSpec valuation(int T) { return {false, T}; }
    Integer value(std::int64_t p) const;
};

struct OracleSeries {
    RhoSpec rho;
    std::vector<Rational> coeffs; ///< X_l for l = 0..Lmax
};

/// Memoizes histograms of one form at one place, one per l.
class FormOracle {
public:
    FormOracle(ConcreteForm form, GoodPlace place, std::uint64_t budget_cells = kDefaultBudgetCells);

    const ConcreteForm& form() const { return form_; }
    const GoodPlace& place() const { return place_; }

    const ValueHistogram& histogram(int ell);
    Rational measure(const Integer& rho, int ell);

    OracleSeries x_series(RhoSpec rho, int lmax);
    /// entry[T][l] = X_l(p^{2T}).
    std::vector<std::vector<Rational>> pi_table(int tmax, int lmax);
    /// X_l(0) - X_{l+1}(0) for l = 0..lmax.
    std::vector<Rational> weil_zeta(int lmax);

private:
    ConcreteForm form_;
    GoodPlace place_;
    std::uint64_t budget_;
    std::map<int, ValueHistogram> cache_;
};

OracleSeries x_series_oracle(const ConcreteForm& form, RhoSpec rho, int lmax, const GoodPlace& place,
                             std::uint64_t budget_cells = kDefaultBudgetCells);

std::vector<std::vector<Rational>> pi_table_oracle(const ConcreteForm& form, int tmax, int lmax,
                                                   const GoodPlace& place,
                                                   std::uint64_t budget_cells = kDefaultBudgetCells);

std::vector<Rational> weil_zeta_oracle(const ConcreteForm& form, int lmax, const GoodPlace& place,
                                       std::uint64_t budget_cells = kDefaultBudgetCells);

/// True when the form is a diagonal form of dimension 1 or 2 with no
/// nontrivial zero mod p.
bool is_anisotropic_diagonal(const ConcreteForm& form, std::int64_t p);

/// Exhaustively checks ord B(x) = min_i ord(c_i x_i^2) over (Z/p^l)^n,
/// skipping x whose minimum is >= l. Throws std::invalid_argument for
/// forms that are not anisotropic diagonal forms.
bool aniso_valuation_check(const ConcreteForm& form, int ell, const GoodPlace& place);

} // namespace localperiod
