#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type such as A2 or E8. C2 is accepted and is isomorphic
/// to B2 (it is built from the C-series Cartan matrix, so the long and short
/// simple roots trade places).
struct CartanType {
  Series series = Series::A;
  int rank = 1;

  /// Parses "A2", "g2", "E8"; throws std::invalid_argument (message lists the
  /// valid series and rank ranges) on anything else.
  static CartanType parse(std::string_view text);

  /// Canonical uppercase name, e.g. "F4".
  std::string name() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Throws std::invalid_argument unless the rank is legal for the series.
void validate(const CartanType& type);

/// Human-readable list of legal series/rank combinations, used in errors.
std::string valid_types_description();

/// Every simple type of rank <= max_rank, one representative per
/// isomorphism class (C2 is omitted in favour of B2), ordered by series and
/// then rank.
std::vector<CartanType> simple_types_up_to_rank(int max_rank);

/// Parses a comma separated list, e.g. "A1,A2,B2".
std::vector<CartanType> parse_type_list(std::string_view text);

}  // namespace casimir
