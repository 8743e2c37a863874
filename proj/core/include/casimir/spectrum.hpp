#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/character.hpp"
#include "casimir/ideal_poset.hpp"
#include "casimir/rational.hpp"
#include "casimir/root_system.hpp"

namespace casimir {

enum class Strategy : std::uint8_t { Brute, Ideal, Character, Duality };

/// "BRUTE", "IDEAL", "CHARACTER", "DUALITY"
std::string_view strategy_name(Strategy s);

using LabelSubset = std::vector<BasisLabel>;

struct BruteForceResult {
  Rational m;
  /// Every label subset attaining m, each sorted, the list sorted.
  std::vector<LabelSubset> argmax;
  std::uint64_t nodes = 0;
};

/// Maximum of Cas(sum) over i-element subsets of the n basis labels, by
/// branch and bound. The bound is Cas(partial) plus the best t values of
/// 2(partial + rho, gamma) + (top-t row sum of the Gram matrix at gamma),
/// which dominates every completion. Throws BudgetExceeded when more than
/// node_budget search nodes would be visited and std::out_of_range for i
/// outside [0, n].
BruteForceResult mi_bruteforce(const RootSystem& rs, int i, std::uint64_t node_budget = kDefaultBudget);

struct IdealResult {
  Rational m;
  std::vector<NilIdeal> ideals;  // every size-i ideal attaining m
};

/// Maximum of Cas(<a>) over ad-nilpotent ideals a of dimension i, 0 <= i <= r.
IdealResult mi_via_ideals(const RootSystem& rs, int i);

struct BNormalResult {
  Rational m;
  std::vector<LabelSubset> subsets;
};

/// Maximum of Cas over b-normal label subsets of size i, 0 <= i <= r + l.
/// Below r these are exactly the ideals; from r to r + l they are all the
/// positive-root labels plus some Cartan labels.
BNormalResult mi_via_b_normal(const RootSystem& rs, int i);

struct CharacterResult {
  Rational m;
  Decomposition top;   // components with Cas == m
  Decomposition full;  // the whole exterior power
};

/// Decomposes the i-th exterior power and keeps the components of maximal
/// Casimir value. Throws BudgetExceeded when binomial(n, i) > budget.
CharacterResult mi_via_characters(const RootSystem& rs, int i, std::uint64_t budget = kDefaultBudget,
                                  IrreducibleCache* cache = nullptr);

struct Component {
  Weight weight;
  Multiplicity mult = 0;
  BigInt dim;
};

struct SpectrumRow {
  int i = 0;
  Rational m;
  std::vector<Component> components;  // sorted by weight
  BigInt dim;
  std::vector<Strategy> strategies;   // sorted, nonempty
};

struct SpectrumOptions {
  /// Caps binomial(n, i) for the character strategy and search nodes for
  /// the brute-force strategy.
  std::uint64_t budget = kDefaultBudget;
  IrreducibleCache* cache = nullptr;
  /// Worker threads for per-degree work; results do not depend on it.
  int jobs = 1;
};

/// Raw per-degree results of every strategy that ran.
struct DegreeEvidence {
  std::optional<BruteForceResult> brute;
  std::optional<IdealResult> ideal;
  std::optional<BNormalResult> b_normal;
  std::optional<CharacterResult> character;
};

struct SpectrumComputation {
  std::vector<SpectrumRow> rows;
  std::vector<DegreeEvidence> evidence;
};

/// Rows 0..n. Degrees up to r come from ideals, r..r+l from b-normal
/// subsets, the rest from duality; brute force and characters run wherever
/// the budget allows and must agree. Throws StrategyDisagreement otherwise.
SpectrumComputation compute_spectrum(const RootSystem& rs, const SpectrumOptions& options = {});

std::vector<SpectrumRow> spectrum_table(const RootSystem& rs, const SpectrumOptions& options = {});

enum class CheckStatus : std::uint8_t { Pass, Fail, Skipped };
std::string_view status_name(CheckStatus s);

struct Check {
  std::string id;
  std::string name;
  std::string clause;  // the statement being checked, as a formula
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerificationReport {
  CartanType type;
  int n = 0, r = 0, l = 0;
  /// Largest i with m_i = i.
  int observed_p = 0;
  std::vector<Check> checks;
  std::vector<SpectrumRow> rows;

  bool passed() const;
  const Check* find(std::string_view id) const;
};

/// Runs every spectrum check; failures are report entries, never exceptions.
VerificationReport verify_theorems(const RootSystem& rs, const SpectrumOptions& options = {});

}  // namespace casimir
