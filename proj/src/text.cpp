#include "chartmodal/text.hpp"

#include <charconv>

#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

std::string join(const std::vector<double>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format_number(values[i]);
  }
  return out;
}

std::string level_or_ordinal(const AxisSpec& axis, std::size_t index) {
  if (axis.levels && index < axis.levels->size()) return (*axis.levels)[index];
  return std::to_string(index + 1);
}

// Bars run along x unless only the y axis carries category levels.
bool bar_categories_on_y(const ChartSpec& spec) { return !spec.x_axis.levels && spec.y_axis.levels; }

// Box groups sit on the y axis (the usual horizontal layout) unless only x has levels.
bool box_groups_on_x(const ChartSpec& spec) { return spec.x_axis.levels && !spec.y_axis.levels; }

std::string outlier_phrase(const std::vector<double>& values, bool lower) {
  const char* side = lower ? "Lower" : "Upper";
  if (values.empty()) return std::string("No ") + (lower ? "lower" : "upper") + " outliers";
  const bool plural = values.size() > 1;
  return std::to_string(values.size()) + " " + side + (plural ? " Outliers are " : " Outlier is ") +
         join(values, ", ");
}

std::string box_phrase(const BoxGroup& g, BoxSlot slot) {
  switch (slot) {
    case BoxSlot::lower_outliers:
      return outlier_phrase(g.lower_outliers, true);
    case BoxSlot::min:
      return "Minimum is " + format_number(g.min);
    case BoxSlot::q1:
      return "25% is " + format_number(g.q1);
    case BoxSlot::q2:
      return "50% is " + format_number(g.q2);
    case BoxSlot::q3:
      return "75% is " + format_number(g.q3);
    case BoxSlot::max:
      return "Maximum is " + format_number(g.max);
    case BoxSlot::upper_outliers:
      return outlier_phrase(g.upper_outliers, false);
  }
  return {};
}

}  // namespace

std::string_view to_string(Verbosity v) {
  switch (v) {
    case Verbosity::off:
      return "off";
    case Verbosity::terse:
      return "terse";
    case Verbosity::verbose:
      return "verbose";
  }
  return "";
}

std::string_view to_string(Modality m) {
  switch (m) {
    case Modality::braille:
      return "Braille";
    case Modality::text:
      return "Text";
    case Modality::sonification:
      return "Sonification";
    case Modality::review:
      return "Review";
  }
  return "";
}

Verbosity next(Verbosity v) {
  switch (v) {
    case Verbosity::off:
      return Verbosity::terse;
    case Verbosity::terse:
      return Verbosity::verbose;
    case Verbosity::verbose:
      return Verbosity::off;
  }
  return Verbosity::off;
}

std::string format_number(double v) {
  if (v == 0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string announce_modality(Modality modality, std::string_view state) {
  return std::string(to_string(modality)) + " " + std::string(state);
}

std::string category_name(const ChartSpec& spec, std::size_t index) {
  switch (spec.type()) {
    case PlotType::bar:
      return level_or_ordinal(bar_categories_on_y(spec) ? spec.y_axis : spec.x_axis, index);
    case PlotType::box:
      return level_or_ordinal(box_groups_on_x(spec) ? spec.x_axis : spec.y_axis, index);
    default:
      return std::to_string(index + 1);
  }
}

std::string describe(const ChartSpec& spec, const Cursor& cursor, Verbosity verbosity, NavAxis axis) {
  if (verbosity == Verbosity::off) throw DomainError("text modality is off");
  require_cursor(spec, cursor);
  const bool verbose = verbosity == Verbosity::verbose;

  switch (spec.type()) {
    case PlotType::bar: {
      const std::size_t i = std::get<BarCursor>(cursor).index;
      const bool on_y = bar_categories_on_y(spec);
      const AxisSpec& cat_axis = on_y ? spec.y_axis : spec.x_axis;
      const AxisSpec& val_axis = on_y ? spec.x_axis : spec.y_axis;
      const std::string cat = category_name(spec, i);
      const std::string value = format_number(spec.data<BarData>().values[i]);
      if (verbose) return cat_axis.label + " is " + cat + ", " + val_axis.label + " is " + value;
      return cat + ", " + value;
    }
    case PlotType::heat: {
      const auto c = std::get<HeatCursor>(cursor);
      const auto& cell = spec.data<HeatData>().cells[c.row][c.col];
      const std::string value = cell ? format_number(*cell) : "no data";
      const std::string xlevel = level_or_ordinal(spec.x_axis, c.col);
      const std::string ylevel = level_or_ordinal(spec.y_axis, c.row);
      if (verbose) {
        return spec.x_axis.label + " " + xlevel + ", " + spec.y_axis.label + " " + ylevel + ", " +
               spec.title.value_or("Value") + " is " + value;
      }
      return (axis == NavAxis::vertical ? ylevel : xlevel) + ", " + value;
    }
    case PlotType::box: {
      const auto c = std::get<BoxCursor>(cursor);
      const auto& group = spec.data<BoxData>().groups[c.group];
      const AxisSpec& group_axis = box_groups_on_x(spec) ? spec.x_axis : spec.y_axis;
      const std::string name = category_name(spec, c.group);
      const std::string phrase = box_phrase(group, c.slot);
      if (verbose) return group_axis.label + " is " + name + ", " + phrase;
      return axis == NavAxis::vertical ? name + ", " + phrase : phrase;
    }
    case PlotType::scatter: {
      const auto c = std::get<ScatterCursor>(cursor);
      const auto& data = spec.data<ScatterData>();
      if (c.layer == ScatterLayer::line) {
        const Point& p = data.smooth[c.index];
        if (verbose) {
          return spec.x_axis.label + " " + format_number(p.x) + ", " + spec.y_axis.label + " " +
                 format_number(p.y);
        }
        return format_number(p.y);
      }
      const XGroup g = group_scatter_points(data.points)[c.index];
      const std::string ys = "[" + join(g.ys, ",") + "]";
      if (verbose) return spec.x_axis.label + " " + format_number(g.x) + ", " + spec.y_axis.label + " " + ys;
      return format_number(g.x) + ", " + ys;
    }
  }
  return {};
}

}  // namespace chartmodal
