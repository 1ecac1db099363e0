#include "chartmodal/cursor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

constexpr std::array<std::string_view, kBoxSlots> kSlotNames = {
    "lower_outliers", "min", "q1", "q2", "q3", "max", "upper_outliers"};

bool horizontal(Direction dir) { return dir == Direction::left || dir == Direction::right; }

Direction opposite(Direction dir) {
  switch (dir) {
    case Direction::left:
      return Direction::right;
    case Direction::right:
      return Direction::left;
    case Direction::up:
      return Direction::down;
    case Direction::down:
      return Direction::up;
  }
  return dir;
}

std::size_t scatter_layer_size(const ChartSpec& spec, ScatterLayer layer) {
  const auto& data = spec.data<ScatterData>();
  if (layer == ScatterLayer::line) return data.smooth.size();
  return group_scatter_points(data.points).size();
}

std::size_t parse_index(std::string_view text) {
  std::size_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InvalidCursor("'" + std::string(text) + "' is not a position index");
  }
  return v;
}

std::pair<std::string_view, std::string_view> split(std::string_view text, char sep) {
  auto pos = text.find(sep);
  if (pos == std::string_view::npos) {
    throw InvalidCursor("expected '" + std::string(1, sep) + "' in cursor '" + std::string(text) + "'");
  }
  return {text.substr(0, pos), text.substr(pos + 1)};
}

}  // namespace

std::string_view to_string(BoxSlot slot) { return kSlotNames[static_cast<std::size_t>(slot)]; }

std::string_view to_string(Direction dir) {
  switch (dir) {
    case Direction::left:
      return "left";
    case Direction::right:
      return "right";
    case Direction::up:
      return "up";
    case Direction::down:
      return "down";
  }
  return "";
}

std::optional<Direction> parse_direction(std::string_view text) {
  for (auto d : {Direction::left, Direction::right, Direction::up, Direction::down}) {
    if (text == to_string(d)) return d;
  }
  return std::nullopt;
}

Cursor first_cursor(const ChartSpec& spec) {
  switch (spec.type()) {
    case PlotType::bar:
      return BarCursor{};
    case PlotType::heat:
      return HeatCursor{};
    case PlotType::box:
      return BoxCursor{};
    case PlotType::scatter:
      return ScatterCursor{};
  }
  return BarCursor{};
}

Cursor home_cursor(const ChartSpec& spec, const Cursor& current) {
  if (const auto* sc = std::get_if<ScatterCursor>(&current)) return ScatterCursor{sc->layer, 0};
  return first_cursor(spec);
}

Cursor end_cursor(const ChartSpec& spec, const Cursor& current) {
  switch (spec.type()) {
    case PlotType::bar:
      return BarCursor{spec.data<BarData>().values.size() - 1};
    case PlotType::heat: {
      const auto& heat = spec.data<HeatData>();
      return HeatCursor{heat.rows() - 1, heat.cols() - 1};
    }
    case PlotType::box:
      return BoxCursor{spec.data<BoxData>().groups.size() - 1, BoxSlot::upper_outliers};
    case PlotType::scatter: {
      auto layer = std::get<ScatterCursor>(current).layer;
      return ScatterCursor{layer, scatter_layer_size(spec, layer) - 1};
    }
  }
  return current;
}

bool cursor_valid(const ChartSpec& spec, const Cursor& cursor) {
  if (cursor.index() != spec.payload.index()) return false;
  switch (spec.type()) {
    case PlotType::bar:
      return std::get<BarCursor>(cursor).index < spec.data<BarData>().values.size();
    case PlotType::heat: {
      const auto& c = std::get<HeatCursor>(cursor);
      const auto& heat = spec.data<HeatData>();
      return c.row < heat.rows() && c.col < heat.cols();
    }
    case PlotType::box: {
      const auto& c = std::get<BoxCursor>(cursor);
      return c.group < spec.data<BoxData>().groups.size() &&
             static_cast<std::size_t>(c.slot) < kBoxSlots;
    }
    case PlotType::scatter: {
      const auto& c = std::get<ScatterCursor>(cursor);
      return c.index < scatter_layer_size(spec, c.layer);
    }
  }
  return false;
}

void require_cursor(const ChartSpec& spec, const Cursor& cursor) {
  if (!cursor_valid(spec, cursor)) {
    throw InvalidCursor("cursor " + to_string(cursor) + " is outside the " +
                        std::string(to_string(spec.type())) + " chart");
  }
}

bool direction_supported(const ChartSpec& spec, Direction dir) {
  switch (spec.type()) {
    case PlotType::bar:
    case PlotType::scatter:
      return horizontal(dir);
    case PlotType::heat:
    case PlotType::box:
      return true;
  }
  return false;
}

std::optional<Cursor> step(const ChartSpec& spec, const Cursor& cursor, Direction dir) {
  require_cursor(spec, cursor);
  if (!direction_supported(spec, dir)) {
    throw InvalidDirection(std::string(to_string(spec.type())) + " charts do not navigate " +
                           std::string(to_string(dir)));
  }
  // Helper: move an index within [0, n) by -1/+1.
  auto shift = [](std::size_t i, std::size_t n, bool forward) -> std::optional<std::size_t> {
    if (forward) return i + 1 < n ? std::optional(i + 1) : std::nullopt;
    return i > 0 ? std::optional(i - 1) : std::nullopt;
  };
  const bool forward = dir == Direction::right || dir == Direction::down;

  switch (spec.type()) {
    case PlotType::bar: {
      auto c = std::get<BarCursor>(cursor);
      auto i = shift(c.index, spec.data<BarData>().values.size(), forward);
      if (!i) return std::nullopt;
      return BarCursor{*i};
    }
    case PlotType::heat: {
      auto c = std::get<HeatCursor>(cursor);
      const auto& heat = spec.data<HeatData>();
      if (horizontal(dir)) {
        auto i = shift(c.col, heat.cols(), forward);
        if (!i) return std::nullopt;
        c.col = *i;
      } else {
        auto i = shift(c.row, heat.rows(), forward);
        if (!i) return std::nullopt;
        c.row = *i;
      }
      return c;
    }
    case PlotType::box: {
      auto c = std::get<BoxCursor>(cursor);
      if (horizontal(dir)) {
        auto i = shift(static_cast<std::size_t>(c.slot), kBoxSlots, forward);
        if (!i) return std::nullopt;
        c.slot = static_cast<BoxSlot>(*i);
      } else {
        // Groups stack upward: Up moves to the next group.
        auto i = shift(c.group, spec.data<BoxData>().groups.size(), dir == Direction::up);
        if (!i) return std::nullopt;
        c.group = *i;
      }
      return c;
    }
    case PlotType::scatter: {
      auto c = std::get<ScatterCursor>(cursor);
      auto i = shift(c.index, scatter_layer_size(spec, c.layer), forward);
      if (!i) return std::nullopt;
      c.index = *i;
      return c;
    }
  }
  return std::nullopt;
}

Cursor extreme(const ChartSpec& spec, const Cursor& cursor, Direction dir) {
  Cursor at = cursor;
  while (auto next = step(spec, at, dir)) at = *next;
  return at;
}

std::vector<Cursor> autoplay_walk(const ChartSpec& spec, const Cursor& from, Direction dir,
                                  AutoplayMode mode) {
  std::vector<Cursor> walk;
  if (mode == AutoplayMode::outward) {
    walk.push_back(from);
    while (auto next = step(spec, walk.back(), dir)) walk.push_back(*next);
    return walk;
  }
  walk.push_back(extreme(spec, from, opposite(dir)));
  while (!(walk.back() == from)) {
    auto next = step(spec, walk.back(), dir);
    if (!next) break;
    walk.push_back(*next);
  }
  return walk;
}

std::size_t axis_length(const ChartSpec& spec, const Cursor& cursor, Direction dir) {
  if (!direction_supported(spec, dir)) return 1;
  Direction back = horizontal(dir) ? Direction::left : Direction::up;
  return autoplay_walk(spec, extreme(spec, cursor, back), opposite(back), AutoplayMode::outward)
      .size();
}

std::string to_string(const Cursor& cursor) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, BarCursor>) {
          return std::to_string(c.index);
        } else if constexpr (std::is_same_v<T, HeatCursor>) {
          return std::to_string(c.row) + "," + std::to_string(c.col);
        } else if constexpr (std::is_same_v<T, BoxCursor>) {
          return std::to_string(c.group) + "," + std::string(to_string(c.slot));
        } else {
          return std::string(c.layer == ScatterLayer::points ? "points:" : "line:") +
                 std::to_string(c.index);
        }
      },
      cursor);
}

Cursor parse_cursor(const ChartSpec& spec, std::string_view text) {
  Cursor cursor;
  switch (spec.type()) {
    case PlotType::bar:
      cursor = BarCursor{parse_index(text)};
      break;
    case PlotType::heat: {
      auto [r, c] = split(text, ',');
      cursor = HeatCursor{parse_index(r), parse_index(c)};
      break;
    }
    case PlotType::box: {
      auto [g, s] = split(text, ',');
      auto it = std::find(kSlotNames.begin(), kSlotNames.end(), s);
      std::size_t slot = it != kSlotNames.end() ? static_cast<std::size_t>(it - kSlotNames.begin())
                                                 : parse_index(s);
      if (slot >= kBoxSlots) throw InvalidCursor("box slot '" + std::string(s) + "' does not exist");
      cursor = BoxCursor{parse_index(g), static_cast<BoxSlot>(slot)};
      break;
    }
    case PlotType::scatter: {
      ScatterCursor sc;
      if (text.find(':') == std::string_view::npos) {
        sc.index = parse_index(text);
      } else {
        auto [layer, idx] = split(text, ':');
        if (layer == "points") {
          sc.layer = ScatterLayer::points;
        } else if (layer == "line") {
          sc.layer = ScatterLayer::line;
        } else {
          throw InvalidCursor("unknown scatter layer '" + std::string(layer) + "'");
        }
        sc.index = parse_index(idx);
      }
      cursor = sc;
      break;
    }
  }
  require_cursor(spec, cursor);
  return cursor;
}

ScatterCursor switch_layer(const ScatterData& data, const std::vector<XGroup>& groups,
                           const ScatterCursor& from, ScatterLayer to) {
  if (from.layer == to) return from;
  const double x = from.layer == ScatterLayer::points ? groups[from.index].x : data.smooth[from.index].x;
  auto nearest = [x](const auto& seq, auto key) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      // Strict comparison keeps the leftmost of two equally near candidates.
      if (std::abs(key(seq[i]) - x) < std::abs(key(seq[best]) - x)) best = i;
    }
    return best;
  };
  if (to == ScatterLayer::line) {
    return {to, nearest(data.smooth, [](const Point& p) { return p.x; })};
  }
  return {to, nearest(groups, [](const XGroup& g) { return g.x; })};
}

std::vector<Cursor> all_cursors(const ChartSpec& spec) {
  std::vector<Cursor> out;
  switch (spec.type()) {
    case PlotType::bar:
      for (std::size_t i = 0; i < spec.data<BarData>().values.size(); ++i) out.push_back(BarCursor{i});
      break;
    case PlotType::heat: {
      const auto& h = spec.data<HeatData>();
      for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) out.push_back(HeatCursor{r, c});
      }
      break;
    }
    case PlotType::box:
      for (std::size_t g = 0; g < spec.data<BoxData>().groups.size(); ++g) {
        for (std::size_t s = 0; s < kBoxSlots; ++s) out.push_back(BoxCursor{g, static_cast<BoxSlot>(s)});
      }
      break;
    case PlotType::scatter:
      for (auto layer : {ScatterLayer::points, ScatterLayer::line}) {
        for (std::size_t i = 0; i < scatter_layer_size(spec, layer); ++i) out.push_back(ScatterCursor{layer, i});
      }
      break;
  }
  return out;
}

}  // namespace chartmodal
