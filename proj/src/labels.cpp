#include "olap/labels.hpp"

#include <cctype>

namespace olap {

std::string_view label_token(PoolLabel label) {
  switch (label) {
    case PoolLabel::consensual: return "consensual";
    case PoolLabel::semi_conflicting: return "semi-conflicting";
    case PoolLabel::conflicting: return "conflicting";
  }
  return "?";
}

std::string_view label_display(PoolLabel label) {
  switch (label) {
    case PoolLabel::consensual: return "Consensual";
    case PoolLabel::semi_conflicting: return "Semi-Conflicting";
    case PoolLabel::conflicting: return "Conflicting";
  }
  return "?";
}

std::optional<PoolLabel> parse_label(std::string_view token) {
  for (PoolLabel label : kPoolLabels)
    if (token == label_token(label)) return label;
  return std::nullopt;
}

std::optional<PoolLabel> parse_label_lenient(std::string_view token) {
  std::string folded;
  folded.reserve(token.size());
  for (char c : token)
    folded += (c == '_' || c == ' ') ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return parse_label(folded);
}

}  // namespace olap
