#pragma once

#include <map>
#include <utility>
#include <vector>

#include "refchoice/axioms.hpp"
#include "refchoice/dataset.hpp"
#include "refchoice/errors.hpp"
#include "refchoice/linear_order.hpp"
#include "refchoice/models.hpp"

namespace refchoice {

/// Raised when data fails an axiom a construction depends on. Carries the
/// failing verdict with its witness.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(Verdict verdict);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Raised when a construction cannot proceed for structural reasons
/// (missing binary problems, incomplete data, intransitive revealed relation).
class RecoveryError : public Error {
 public:
  using Error::Error;
};

/// Intermediate values of a reconstruction, kept for audit.
struct MobiusTable {
  struct PerReference {
    Menu dominators;                                   // P_r
    std::map<Menu, Rational> lambda;                   // λ_r(S)
    std::map<std::pair<Menu, Menu>, Rational> lambda_t;  // (T,S) -> λ_r^T(S)
    std::map<std::pair<Menu, Menu>, Rational> alpha_t;   // (T,S) -> α_r^T(S)
    std::map<std::pair<Menu, Alt>, Rational> kappa;      // (S,x) -> κ(S,x)
    /// Dominant sets T whose λ_r(T) was a free choice: (T, lower bound).
    std::vector<std::pair<Menu, Rational>> slack;
  };
  std::vector<PerReference> references;
};

/// Reference-dependent random utility: per reference, a distribution over
/// linear orders. Only orders with positive weight are stored.
struct RdRumModel {
  Universe universe;
  std::vector<std::vector<std::pair<LinearOrder, Rational>>> orders;
};

/// Generic Mobius inversion on the interval [anchor, top]: given f on every D
/// in the interval, returns g with f(A) = Σ_{anchor⊆B⊆A} g(B).
/// Throws std::invalid_argument when an interval entry is missing.
std::map<Menu, Rational> mobius_invert(const std::map<Menu, Rational>& f, Menu anchor, Menu top);
/// Inverse direction: f(A) = Σ_{anchor⊆B⊆A} g(B).
std::map<Menu, Rational> mobius_sum(const std::map<Menu, Rational>& g, Menu anchor, Menu top);

/// x ⪰ y iff p_y(x,{x,y}) > 0. Requires every binary problem.
LinearOrder reveal_preference(const ChoiceDataset& data);

/// Uniform split of p_r(x,S) over {D : {r,x} ⊆ D ⊆ D_x ∩ S}.
GeneralAttention build_rdram(const ChoiceDataset& data);

struct IraRecovery {
  IraModel model;
  MobiusTable table;
};
/// γ_r(x) = max{p_r(x,{r,x}), p_x(r,{r,x})}.
IraRecovery build_ira(const ChoiceDataset& data);

struct LraRecovery {
  LraModel model;
  MobiusTable table;
};
LraRecovery build_lra(const ChoiceDataset& data);

struct CraRecovery {
  CraModel model;
  MobiusTable table;
};
CraRecovery build_cra(const ChoiceDataset& data);

/// γ_r(x) = μ_r({r,x},{r,x}) for a μ-table with both the consideration-set
/// IIA property and menu-independent marginals. Throws ValidationError
/// naming the failing property otherwise.
IraRecovery ira_from_lra_cra(const GeneralAttention& mu);

}  // namespace refchoice
