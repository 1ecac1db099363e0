#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chartmodal/chart_spec.hpp"

namespace chartmodal {

struct BarCursor {
  std::size_t index = 0;
  bool operator==(const BarCursor&) const = default;
};

struct HeatCursor {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const HeatCursor&) const = default;
};

/// The seven-slot navigation template of a box group, left to right.
enum class BoxSlot { lower_outliers, min, q1, q2, q3, max, upper_outliers };
inline constexpr std::size_t kBoxSlots = 7;

std::string_view to_string(BoxSlot slot);

struct BoxCursor {
  std::size_t group = 0;
  BoxSlot slot = BoxSlot::lower_outliers;
  bool operator==(const BoxCursor&) const = default;
};

enum class ScatterLayer { points, line };

/// `index` is an x-group index on the points layer and a smooth-sample index
/// on the line layer.
struct ScatterCursor {
  ScatterLayer layer = ScatterLayer::points;
  std::size_t index = 0;
  bool operator==(const ScatterCursor&) const = default;
};

using Cursor = std::variant<BarCursor, HeatCursor, BoxCursor, ScatterCursor>;

enum class Direction { left, right, up, down };
enum class AutoplayMode { outward, inward };

std::string_view to_string(Direction dir);
std::optional<Direction> parse_direction(std::string_view text);

/// Entry position of a fresh session.
Cursor first_cursor(const ChartSpec& spec);

/// First / last cell of the chart, staying on the current scatter layer.
Cursor home_cursor(const ChartSpec& spec, const Cursor& current);
Cursor end_cursor(const ChartSpec& spec, const Cursor& current);

bool cursor_valid(const ChartSpec& spec, const Cursor& cursor);
/// Throws InvalidCursor unless cursor_valid.
void require_cursor(const ChartSpec& spec, const Cursor& cursor);

/// Whether arrows along `dir` move anything for this chart (bars and scatter
/// layers are one-dimensional).
bool direction_supported(const ChartSpec& spec, Direction dir);

/// One step in `dir`; std::nullopt at the boundary. Throws InvalidDirection
/// for an unsupported axis.
std::optional<Cursor> step(const ChartSpec& spec, const Cursor& cursor, Direction dir);

/// The extreme position reachable along `dir`.
Cursor extreme(const ChartSpec& spec, const Cursor& cursor, Direction dir);

/// Positions an autoplay visits, in playback order. Outward runs from the
/// cursor to the boundary in `dir`; inward starts at the opposite boundary and
/// walks in `dir` back to the cursor. Both include the cursor.
std::vector<Cursor> autoplay_walk(const ChartSpec& spec, const Cursor& from, Direction dir,
                                  AutoplayMode mode);

/// Positions along the axis a single left/right step walks (for limits).
std::size_t axis_length(const ChartSpec& spec, const Cursor& cursor, Direction dir);

/// Compact text form used by the CLI and effect traces:
/// "3" (bar), "1,2" (heat row,col), "0,q1" (box group,slot), "points:2" or
/// "line:5" (scatter).
std::string to_string(const Cursor& cursor);
Cursor parse_cursor(const ChartSpec& spec, std::string_view text);

/// Scatter layer switch keeping the x nearest to the current one.
/// Every valid position in reading order: bars left to right, heat cells
/// row-major, box groups slot by slot, scatter points then line samples.
std::vector<Cursor> all_cursors(const ChartSpec& spec);

ScatterCursor switch_layer(const ScatterData& data, const std::vector<XGroup>& groups,
                           const ScatterCursor& from, ScatterLayer to);

}  // namespace chartmodal
