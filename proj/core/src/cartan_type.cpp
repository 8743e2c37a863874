#include "casimir/cartan_type.hpp"

#include <cctype>
#include <stdexcept>

#include "casimir/weight.hpp"

namespace casimir {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool rank_is_legal(Series series, int rank) {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

}  // namespace

std::string valid_types_description() {
  return "valid types: A1-A8, B2-B8, C2-C8 (C2 = B2), D4-D8, E6-E8, F4, G2";
}

void validate(const CartanType& type) {
  if (!rank_is_legal(type.series, type.rank)) {
    throw std::invalid_argument("invalid Cartan type " + type.name() + "; " + valid_types_description());
  }
}

CartanType CartanType::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const std::string shown(s);
  if (s.size() < 2) throw std::invalid_argument("invalid Cartan type '" + shown + "'; " + valid_types_description());
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  if (letter < 'A' || letter > 'G') {
    throw std::invalid_argument("unknown series in '" + shown + "'; " + valid_types_description());
  }
  int rank = 0;
  for (char ch : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000) {
      throw std::invalid_argument("invalid rank in '" + shown + "'; " + valid_types_description());
    }
    rank = rank * 10 + (ch - '0');
  }
  CartanType t{static_cast<Series>(letter), rank};
  validate(t);
  return t;
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

std::vector<CartanType> simple_types_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
    for (int rank = 1; rank <= std::min(max_rank, kMaxRank); ++rank) {
      if (s == Series::C && rank == 2) continue;
      if (rank_is_legal(s, rank)) out.push_back({s, rank});
    }
  }
  return out;
}

std::vector<CartanType> parse_type_list(std::string_view text) {
  std::vector<CartanType> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!trim(item).empty()) out.push_back(CartanType::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty Cartan type list; " + valid_types_description());
  return out;
}

}  // namespace casimir
