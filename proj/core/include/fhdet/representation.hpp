#pragma once

#include <optional>
#include <vector>

#include "fhdet/symbol.hpp"

namespace fhdet {

/// The symbol with beta_j replaced by beta_j + n_j, sum n_j = 0. Shifts are
/// only allowed at singular points; all representations of a symbol agree up
/// to the constant prod_j z_j^{n_j}.
class Representation {
 public:
  /// The trivial representation (all shifts zero).
  explicit Representation(FHSymbol base);
  /// Throws InvariantError if the shifts do not sum to zero, have the wrong
  /// length, or move a non-singular point.
  Representation(FHSymbol base, std::vector<int> shifts);

  const FHSymbol& base() const { return base_; }
  const std::vector<int>& shifts() const { return shifts_; }
  std::vector<Complex> effective_betas() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  FHSymbol base_;
  std::vector<int> shifts_;
};

/// max over singular pairs of |Re beta_j - Re beta_k|.
double beta_seminorm(const FHSymbol& f);
double beta_seminorm(const Representation& rep);

/// sum over singular points of (Re beta_j + n_j)^2.
double shifted_beta_norm(const Representation& rep);

/// The set M of representations minimizing sum_j (Re beta_j + n_j)^2, found
/// by the min/max reduction followed by enumeration of the ties when the
/// reduced seminorm equals 1. Ties are decided with tolerance 1e-9. The
/// result is sorted lexicographically by shift vector.
std::vector<Representation> find_minimal_representations(const FHSymbol& f);

struct ShiftedSymbol {
  FHSymbol symbol;
  /// log prod_j z_j^{n_j} = i sum_j n_j theta_j (not reduced mod 2 pi i)
  Complex log_prefactor{};
};

/// f(z) = prod z_j^{n_j} * f(z; n_0, ..., n_m).
ShiftedSymbol apply_representation(const Representation& rep);

struct Degeneracy {
  std::size_t index = 0;
  /// alpha_j + beta_j or alpha_j - beta_j (effective beta), a negative integer.
  Complex value{};
  bool plus = true;
};

/// First index j where alpha_j +- (beta_j + n_j) is within 1e-10 of
/// -1, -2, ...; empty when the representation is non-degenerate.
std::optional<Degeneracy> is_degenerate(const Representation& rep);

}  // namespace fhdet
