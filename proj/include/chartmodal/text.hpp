#pragma once

#include <string>
#include <string_view>

#include "chartmodal/chart_spec.hpp"
#include "chartmodal/cursor.hpp"

namespace chartmodal {

/// Text modality granularity. Pressing T cycles off -> terse -> verbose -> off.
enum class Verbosity { off, terse, verbose };

/// Which arrow axis produced the current focus; terse text differs for
/// vertical moves in heat maps and box plots.
enum class NavAxis { horizontal, vertical };

enum class Modality { braille, text, sonification, review };

std::string_view to_string(Verbosity v);
std::string_view to_string(Modality m);
Verbosity next(Verbosity v);

/// Shortest decimal text that round-trips `v` ("20448.04", "1610").
std::string format_number(double v);

/// Spoken description of the focused data point. Requires verbosity != off;
/// throws InvalidCursor for a cursor outside the chart.
std::string describe(const ChartSpec& spec, const Cursor& cursor, Verbosity verbosity,
                     NavAxis axis = NavAxis::horizontal);

/// "Braille on", "Text verbose", "Sonification off", ...
std::string announce_modality(Modality modality, std::string_view state);

/// Display name of a box group or bar, from axis levels when present.
std::string category_name(const ChartSpec& spec, std::size_t index);

}  // namespace chartmodal
