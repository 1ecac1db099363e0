#include "chartmodal/braille.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "chartmodal/cursor.hpp"
#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

constexpr char32_t kBrailleBase = 0x2800;

constexpr std::array<BrailleCell, 4> kBarChords = {chords::dots78, chords::dots36, chords::dots25,
                                                   chords::dots14};
constexpr std::array<BrailleCell, 3> kHeatChords = {chords::dots36, chords::dots25, chords::dots14};

void append_utf8(std::string& out, char32_t cp) {
  // Braille-block codepoints are always three UTF-8 bytes.
  out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
  out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
  out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
}

// Sign of n*(v - lo) - k*(hi - lo), computed exactly. The products are split
// into head and tail with fma and the six parts summed as a nonoverlapping
// expansion, so values a rounding error away from a bin edge still land on the
// correct side of it.
void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bv = s - a;
  e = (a - (s - bv)) + (b - bv);
}

int edge_sign(double v, double lo, double hi, int n, int k) {
  const double f[3] = {static_cast<double>(n), -static_cast<double>(n - k), -static_cast<double>(k)};
  const double x[3] = {v, lo, hi};
  std::array<double, 6> parts{};
  for (int i = 0; i < 3; ++i) {
    parts[2 * i] = f[i] * x[i];
    parts[2 * i + 1] = std::fma(f[i], x[i], -parts[2 * i]);
  }
  std::vector<double> expansion;
  for (double p : parts) {
    double q = p;
    for (double& term : expansion) {
      double s, e;
      two_sum(q, term, s, e);
      term = e;
      q = s;
    }
    expansion.push_back(q);
  }
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
    if (*it != 0) return *it > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

char32_t cell_codepoint(BrailleCell cell) { return kBrailleBase + cell.bits; }

BrailleCell cell_from_codepoint(char32_t cp) {
  if (cp < kBrailleBase || cp > kBrailleBase + 0xFF) {
    throw DomainError("codepoint is outside the braille block");
  }
  return BrailleCell{static_cast<std::uint8_t>(cp - kBrailleBase)};
}

std::string to_utf8(std::span<const BrailleCell> cells) {
  std::string out;
  out.reserve(cells.size() * 3);
  for (auto c : cells) append_utf8(out, cell_codepoint(c));
  return out;
}

int quantize_level(double v, double lo, double hi, int n_levels) {
  if (n_levels < 1) throw DomainError("quantizer needs at least one level");
  if (!(lo <= hi)) throw DomainError("quantizer range is inverted");
  if (!(v >= lo && v <= hi)) throw DomainError("value lies outside the quantizer range");
  if (lo == hi) return n_levels;
  // Float estimate, then nudge until v sits between the exact edges of its bin.
  const double scaled = (v - lo) / (hi - lo) * n_levels;
  int level = std::clamp(static_cast<int>(std::floor(scaled)) + 1, 1, n_levels);
  while (level > 1 && edge_sign(v, lo, hi, n_levels, level - 1) < 0) --level;
  while (level < n_levels && edge_sign(v, lo, hi, n_levels, level) >= 0) ++level;
  return level;
}

void BrailleLine::push(BrailleCell cell, std::optional<std::size_t> position) {
  const std::size_t index = cells_.size();
  cells_.push_back(cell);
  pos_of_cell_.push_back(position);
  if (!position) return;
  if (*position >= ranges_.size()) ranges_.resize(*position + 1);
  CellRange& r = ranges_[*position];
  if (r.count == 0) {
    r = {index, 1};
  } else if (r.first + r.count == index) {
    ++r.count;
  } else {
    throw DomainError("cells of one position must be contiguous");
  }
}

std::optional<std::size_t> BrailleLine::cursor_cell(std::size_t position) const {
  if (position < ranges_.size() && ranges_[position].count > 0) return ranges_[position].first;
  std::optional<std::size_t> best;
  std::size_t best_dist = 0;
  for (std::size_t i = 0; i < pos_of_cell_.size(); ++i) {
    if (!pos_of_cell_[i]) continue;
    std::size_t p = *pos_of_cell_[i];
    std::size_t dist = p > position ? p - position : position - p;
    if (!best || dist < best_dist) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

BrailleLine encode_bar(std::span<const double> values) {
  if (values.empty()) throw DomainError("bar chart has no values");
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  // Bars are zero-anchored unless the data goes negative.
  const double lo = *mn >= 0 ? 0.0 : *mn;
  const double hi = *mx;
  BrailleLine line(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    line.push(kBarChords[quantize_level(values[i], lo, hi, 4) - 1], i);
  }
  return line;
}

BrailleLine encode_heat(const HeatData& heat) {
  double lo = 0, hi = 0;
  bool seen = false;
  for (const auto& row : heat.cells) {
    for (const auto& c : row) {
      if (!c) continue;
      lo = seen ? std::min(lo, *c) : *c;
      hi = seen ? std::max(hi, *c) : *c;
      seen = true;
    }
  }
  if (!seen) throw DomainError("heat map has no values");

  const std::size_t cols = heat.cols();
  BrailleLine line(heat.rows() * cols);
  for (std::size_t r = 0; r < heat.rows(); ++r) {
    if (r > 0) line.push(chords::dots1256, std::nullopt);
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = heat.cells[r][c];
      line.push(v ? kHeatChords[quantize_level(*v, lo, hi, 3) - 1] : chords::blank, r * cols + c);
    }
  }
  return line;
}

std::vector<std::size_t> apportion(std::span<const double> extents, std::size_t budget) {
  const std::size_t n = extents.size();
  std::vector<std::size_t> alloc(n, 0);
  const double total = std::accumulate(extents.begin(), extents.end(), 0.0);
  const auto positive = static_cast<std::size_t>(
      std::count_if(extents.begin(), extents.end(), [](double e) { return e > 0; }));
  if (positive == 0) return alloc;
  if (budget < positive) throw WidthTooSmall("budget cannot give every segment a cell");

  std::vector<double> remainder(n, 0.0);
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (extents[i] <= 0) continue;
    // Remainders are kept in units of 1/total so equal fractions compare equal.
    const double scaled = static_cast<double>(budget) * extents[i];
    const double whole = std::floor(scaled / total);
    alloc[i] = static_cast<std::size_t>(whole);
    remainder[i] = scaled - whole * total;
    used += alloc[i];
  }
  // Float rounding can push the floors one past the budget; trim from the right.
  for (std::size_t i = n; used > budget && i-- > 0;) {
    while (alloc[i] > 0 && used > budget) {
      --alloc[i];
      --used;
    }
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (extents[i] > 0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; used < budget; k = (k + 1) % order.size()) {
    ++alloc[order[k]];
    ++used;
  }
  // Every positive segment needs a cell; borrow from the largest (leftmost on ties).
  for (std::size_t i = 0; i < n; ++i) {
    if (extents[i] > 0 && alloc[i] == 0) {
      auto donor = std::max_element(alloc.begin(), alloc.end()) - alloc.begin();
      --alloc[donor];
      alloc[i] = 1;
    }
  }
  return alloc;
}

std::size_t box_min_width(const BoxGroup& g) {
  const double extents[] = {g.q1 - g.min, g.q2 - g.q1, g.q3 - g.q2, g.max - g.q3};
  std::size_t positive = 0;
  for (double e : extents) positive += e > 0 ? 1 : 0;
  return 2 + g.lower_outliers.size() + g.upper_outliers.size() + positive;
}

BrailleLine encode_box(const BoxGroup& g, std::size_t width) {
  const std::size_t demand = box_min_width(g);
  if (width < demand) {
    throw WidthTooSmall("box group needs at least " + std::to_string(demand) + " cells, got " +
                        std::to_string(width));
  }
  const std::size_t fixed = 2 + g.lower_outliers.size() + g.upper_outliers.size();
  const std::array<double, 4> extents = {g.q1 - g.min, g.q2 - g.q1, g.q3 - g.q2, g.max - g.q3};
  const auto cells = apportion(extents, width - fixed);

  auto slot = [](BoxSlot s) { return static_cast<std::size_t>(s); };
  BrailleLine line(kBoxSlots);
  for (std::size_t i = 0; i < g.lower_outliers.size(); ++i) line.push(chords::dot2, slot(BoxSlot::lower_outliers));
  for (std::size_t i = 0; i < cells[0]; ++i) line.push(chords::dots25, slot(BoxSlot::min));
  for (std::size_t i = 0; i < cells[1]; ++i) line.push(chords::dots123456, slot(BoxSlot::q1));
  line.push(chords::dots456, slot(BoxSlot::q2));
  line.push(chords::dots123, slot(BoxSlot::q2));
  for (std::size_t i = 0; i < cells[2]; ++i) line.push(chords::dots123456, slot(BoxSlot::q3));
  for (std::size_t i = 0; i < cells[3]; ++i) line.push(chords::dots25, slot(BoxSlot::max));
  for (std::size_t i = 0; i < g.upper_outliers.size(); ++i) line.push(chords::dot2, slot(BoxSlot::upper_outliers));
  return line;
}

BrailleLine encode_smooth(std::span<const Point> smooth, std::size_t width) {
  if (smooth.empty()) throw DomainError("line layer has no points");
  if (width == 0) throw DomainError("line layer needs at least one cell");
  auto [mn, mx] = std::minmax_element(smooth.begin(), smooth.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
  const double lo = mn->y, hi = mx->y;
  const std::size_t n = smooth.size();
  BrailleLine line(n);
  for (std::size_t j = 0; j < width; ++j) {
    // Nearest sample index, halves rounding up.
    std::size_t idx = width == 1 ? 0 : (2 * j * (n - 1) + (width - 1)) / (2 * (width - 1));
    line.push(kBarChords[quantize_level(smooth[idx].y, lo, hi, 4) - 1], idx);
  }
  return line;
}

std::vector<BrailleLine> wrap(const BrailleLine& line, std::size_t columns) {
  if (columns == 0) throw DomainError("braille display needs at least one column");
  std::vector<BrailleLine> chunks;
  for (std::size_t start = 0; start < line.size(); start += columns) {
    BrailleLine chunk(line.position_count());
    const std::size_t end = std::min(line.size(), start + columns);
    for (std::size_t i = start; i < end; ++i) chunk.push(line.cells()[i], line.positions()[i]);
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

}  // namespace chartmodal
