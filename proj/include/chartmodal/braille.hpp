#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chartmodal/chart_spec.hpp"

namespace chartmodal {

/// One 8-dot braille cell. Bit (d - 1) of `bits` is raised dot d, which is
/// also the Unicode braille-block layout.
struct BrailleCell {
  std::uint8_t bits = 0;

  static constexpr BrailleCell from_dots(std::initializer_list<int> dots) {
    std::uint8_t b = 0;
    for (int d : dots) b = static_cast<std::uint8_t>(b | (1u << (d - 1)));
    return BrailleCell{b};
  }

  constexpr bool has_dot(int dot) const { return (bits >> (dot - 1)) & 1u; }

  bool operator==(const BrailleCell&) const = default;
};

namespace chords {
inline constexpr BrailleCell blank{};
inline constexpr BrailleCell dots78 = BrailleCell::from_dots({7, 8});
inline constexpr BrailleCell dots36 = BrailleCell::from_dots({3, 6});
inline constexpr BrailleCell dots25 = BrailleCell::from_dots({2, 5});
inline constexpr BrailleCell dots14 = BrailleCell::from_dots({1, 4});
inline constexpr BrailleCell dots1256 = BrailleCell::from_dots({1, 2, 5, 6});
inline constexpr BrailleCell dot2 = BrailleCell::from_dots({2});
inline constexpr BrailleCell dots123456 = BrailleCell::from_dots({1, 2, 3, 4, 5, 6});
inline constexpr BrailleCell dots456 = BrailleCell::from_dots({4, 5, 6});
inline constexpr BrailleCell dots123 = BrailleCell::from_dots({1, 2, 3});
}  // namespace chords

char32_t cell_codepoint(BrailleCell cell);
/// Inverse of cell_codepoint; throws DomainError outside U+2800..U+28FF.
BrailleCell cell_from_codepoint(char32_t cp);

std::string to_utf8(std::span<const BrailleCell> cells);

/// Level in 1..n_levels of `v` within [lo, hi]. Bins are half-open with a
/// closed top bin; a degenerate range (lo == hi) is the top level.
int quantize_level(double v, double lo, double hi, int n_levels);

struct CellRange {
  std::size_t first = 0;
  std::size_t count = 0;
  bool operator==(const CellRange&) const = default;
};

/// A run of braille cells plus the mapping between cells and the chart's
/// cursor positions. Positions are the encoder's linear position numbers
/// (bar index, heat row * cols + col, box slot, smooth index).
class BrailleLine {
 public:
  BrailleLine() = default;
  explicit BrailleLine(std::size_t position_count) : ranges_(position_count) {}

  void push(BrailleCell cell, std::optional<std::size_t> position);

  const std::vector<BrailleCell>& cells() const { return cells_; }
  const std::vector<std::optional<std::size_t>>& positions() const { return pos_of_cell_; }
  std::size_t size() const { return cells_.size(); }
  std::size_t position_count() const { return ranges_.size(); }

  std::optional<std::size_t> position_of_cell(std::size_t cell) const { return pos_of_cell_.at(cell); }
  /// Contiguous cells carrying `position` (count 0 when it has none).
  CellRange cells_of_position(std::size_t position) const { return ranges_.at(position); }

  /// The cell a cursor at `position` highlights: its first cell, or else the
  /// cell whose position is nearest.
  std::optional<std::size_t> cursor_cell(std::size_t position) const;

  std::string utf8() const { return to_utf8(cells_); }

  bool operator==(const BrailleLine&) const = default;

 private:
  std::vector<BrailleCell> cells_;
  std::vector<std::optional<std::size_t>> pos_of_cell_;
  std::vector<CellRange> ranges_;
};

BrailleLine encode_bar(std::span<const double> values);
BrailleLine encode_heat(const HeatData& heat);

/// Cells for one box group spread over `width` cells.
BrailleLine encode_box(const BoxGroup& group, std::size_t width);
/// The smallest width encode_box accepts for `group`.
std::size_t box_min_width(const BoxGroup& group);

/// The line layer resampled to `width` cells.
BrailleLine encode_smooth(std::span<const Point> smooth, std::size_t width);

/// Splits a line into chunks of at most `columns` cells. Positions stay
/// global; cell indices restart at zero in each chunk.
std::vector<BrailleLine> wrap(const BrailleLine& line, std::size_t columns);

/// Largest-remainder split of `budget` cells across segments proportional to
/// `extents`. Positive extents get at least one cell, zero extents none.
/// Requires budget >= number of positive extents.
std::vector<std::size_t> apportion(std::span<const double> extents, std::size_t budget);

}  // namespace chartmodal
