#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace olap {

// The three query pools a mined profile distinguishes, by decreasing
// recurrence: consensual (habitual analyses), semi-conflicting, conflicting.
enum class PoolLabel { consensual, semi_conflicting, conflicting };

inline constexpr std::array<PoolLabel, 3> kPoolLabels{
    PoolLabel::consensual, PoolLabel::semi_conflicting, PoolLabel::conflicting};

// Machine token, e.g. "semi-conflicting". Used in profile documents and
// label files.
std::string_view label_token(PoolLabel label);

// Human heading, e.g. "Semi-Conflicting". Used in reports.
std::string_view label_display(PoolLabel label);

// Exact-token parse ("consensual" | "semi-conflicting" | "conflicting").
std::optional<PoolLabel> parse_label(std::string_view token);

// Forgiving parse: case-insensitive, '_' and ' ' treated as '-'.
std::optional<PoolLabel> parse_label_lenient(std::string_view token);

}  // namespace olap
