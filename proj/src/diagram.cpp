#include "posclass/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "posclass/error.hpp"
#include "posclass/int_math.hpp"

namespace posclass {

namespace {

Cell canonical_cell(const Diagram::Period& p, Cell c) {
  const Int shift = floor_div(c.first - 1, p.rows);
  return {c.first - shift * p.rows, c.second - shift * p.columns};
}

}  // namespace

Diagram::Diagram(std::set<Cell> cells) : cells_(std::move(cells)) {}

Diagram::Diagram(Period period, const std::set<Cell>& cells) : period_(period) {
  if (period.rows <= 0 || period.columns <= 0)
    throw Error(ErrorCode::InvalidArgument, "cylinder periods must be positive");
  for (const auto& c : cells) cells_.insert(canonical_cell(period, c));
}

std::map<Int, std::vector<Cell>> Diagram::rows() const {
  std::map<Int, std::vector<Cell>> out;
  for (const auto& c : cells_)
    out[period_ ? floor_mod(c.first, period_->rows) : c.first].push_back(c);
  return out;
}

std::map<Int, std::vector<Cell>> Diagram::columns() const {
  std::map<Int, std::vector<Cell>> out;
  for (const auto& c : cells_)
    out[period_ ? floor_mod(c.second, period_->columns) : c.second].push_back(c);
  return out;
}

std::vector<int> Diagram::row_sizes() const {
  std::vector<int> out;
  for (const auto& [row, cells] : rows()) out.push_back(static_cast<int>(cells.size()));
  return out;
}

std::vector<int> Diagram::column_sizes() const {
  std::vector<int> out;
  for (const auto& [col, cells] : columns()) out.push_back(static_cast<int>(cells.size()));
  return out;
}

Diagram Diagram::transpose() const {
  std::set<Cell> swapped;
  for (const auto& [r, c] : cells_) swapped.insert({c, r});
  if (!period_) return Diagram(std::move(swapped));
  return Diagram(Period{period_->columns, period_->rows}, swapped);
}

bool Diagram::is_toric() const {
  if (!period_) return true;
  std::set<Cell> seen;
  for (const auto& [r, c] : cells_)
    if (!seen.insert({floor_mod(r, period_->rows), floor_mod(c, period_->columns)}).second)
      return false;
  return true;
}

Diagram Diagram::torus_image() const {
  if (!period_) return *this;
  if (!is_toric())
    throw Error(ErrorCode::NotToric, "diagram is not injective on the torus");
  std::set<Cell> image;
  for (const auto& [r, c] : cells_)
    image.insert({floor_mod(r - 1, period_->rows) + 1,
                  floor_mod(c - 1, period_->columns) + 1});
  return Diagram(std::move(image));
}

bool equivalent(const Diagram& a_in, const Diagram& b_in) {
  const Diagram a = a_in.torus_image();
  const Diagram b = b_in.torus_image();
  if (a.size() != b.size()) return false;

  auto sorted_sizes = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_sizes(a.row_sizes()) != sorted_sizes(b.row_sizes())) return false;
  if (sorted_sizes(a.column_sizes()) != sorted_sizes(b.column_sizes())) return false;

  struct Side {
    std::vector<std::vector<Int>> row_columns;  // columns occupied per row
    std::map<Int, int> column_size;
  };
  auto describe = [](const Diagram& d) {
    Side s;
    for (const auto& [row, cells] : d.rows()) {
      std::vector<Int> cols;
      for (const auto& c : cells) cols.push_back(c.second);
      s.row_columns.push_back(std::move(cols));
    }
    for (const auto& [col, cells] : d.columns())
      s.column_size[col] = static_cast<int>(cells.size());
    return s;
  };
  Side sa = describe(a);
  Side sb = describe(b);
  std::sort(sa.row_columns.begin(), sa.row_columns.end(),
            [](const auto& x, const auto& y) { return x.size() > y.size(); });

  std::vector<bool> row_used(sb.row_columns.size(), false);
  std::map<Int, Int> column_map;  // a-column -> b-column
  std::set<Int> column_image;

  std::function<bool(std::size_t)> map_row = [&](std::size_t ra) -> bool {
    if (ra == sa.row_columns.size()) return true;
    const auto& cols_a = sa.row_columns[ra];
    for (std::size_t rb = 0; rb < sb.row_columns.size(); ++rb) {
      if (row_used[rb] || sb.row_columns[rb].size() != cols_a.size()) continue;
      const auto& cols_b = sb.row_columns[rb];
      const std::set<Int> target(cols_b.begin(), cols_b.end());
      // Already-mapped columns must land in this row.
      bool consistent = true;
      std::vector<Int> free_a;
      std::set<Int> taken_b;
      for (Int c : cols_a) {
        auto it = column_map.find(c);
        if (it == column_map.end()) {
          free_a.push_back(c);
        } else if (!target.count(it->second)) {
          consistent = false;
          break;
        } else {
          taken_b.insert(it->second);
        }
      }
      if (!consistent) continue;
      std::vector<Int> free_b;
      for (Int c : cols_b)
        if (!taken_b.count(c) && !column_image.count(c)) free_b.push_back(c);
      if (free_b.size() != free_a.size()) continue;
      row_used[rb] = true;
      // Try bijections free_a -> free_b respecting column sizes.
      std::vector<bool> used_b(free_b.size(), false);
      std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == free_a.size()) return map_row(ra + 1);
        for (std::size_t j = 0; j < free_b.size(); ++j) {
          if (used_b[j]) continue;
          if (sa.column_size.at(free_a[i]) != sb.column_size.at(free_b[j])) continue;
          used_b[j] = true;
          column_map[free_a[i]] = free_b[j];
          column_image.insert(free_b[j]);
          if (assign(i + 1)) return true;
          column_image.erase(free_b[j]);
          column_map.erase(free_a[i]);
          used_b[j] = false;
        }
        return false;
      };
      if (assign(0)) return true;
      row_used[rb] = false;
    }
    return false;
  };
  return map_row(0);
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  std::map<Int, std::vector<Int>> by_row;
  for (const auto& [r, c] : d.cells()) by_row[r].push_back(c);
  for (const auto& [r, cols] : by_row) {
    out << r << ": ";
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
  }
  return out.str();
}

Diagram parse_diagram(std::string_view text) {
  std::set<Cell> cells;
  auto parse_int = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in diagram");
    return value;
  };
  while (!text.empty()) {
    const auto end = text.find_first_of("\n;");
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "diagram line needs 'row: cols'");
    const Int row = parse_int(line.substr(0, colon));
    std::string_view rest = line.substr(colon + 1);
    while (rest.find_first_not_of(" \t\r") != std::string_view::npos) {
      const auto comma = rest.find(',');
      if (!cells.insert({row, parse_int(rest.substr(0, comma))}).second)
        throw Error(ErrorCode::ParseError, "duplicate cell in diagram");
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return Diagram(std::move(cells));
}

}  // namespace posclass
