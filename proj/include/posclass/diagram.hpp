#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posclass {

using Int = std::int64_t;

/// (row, column)
using Cell = std::pair<Int, Int>;

/// A finite set of cells, either in the plane or on the cylinder
/// Z^2 / Z(row_period, column_period). Cylindric cells are stored with
/// their row reduced into [1, row_period]; the column is shifted along.
class Diagram {
 public:
  struct Period {
    Int rows;
    Int columns;
    friend bool operator==(const Period&, const Period&) = default;
  };

  Diagram() = default;
  explicit Diagram(std::set<Cell> cells);
  Diagram(Period period, const std::set<Cell>& cells);

  static Diagram planar(std::set<Cell> cells) { return Diagram(std::move(cells)); }
  static Diagram cylindric(Int row_period, Int column_period,
                           const std::set<Cell>& cells) {
    return Diagram(Period{row_period, column_period}, cells);
  }

  const std::optional<Period>& period() const noexcept { return period_; }
  bool is_planar() const noexcept { return !period_.has_value(); }
  const std::set<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  /// Cells grouped by row class (row residue for cylindric diagrams).
  std::map<Int, std::vector<Cell>> rows() const;
  /// Cells grouped by column class (column residue for cylindric diagrams).
  std::map<Int, std::vector<Cell>> columns() const;
  std::vector<int> row_sizes() const;
  std::vector<int> column_sizes() const;

  /// Swap rows and columns (the period swaps as well).
  Diagram transpose() const;

  /// For cylindric diagrams: no two cells agree modulo both periods.
  /// Planar diagrams are trivially toric.
  bool is_toric() const;
  /// Image in the torus, as a planar diagram with rows in [1, row period]
  /// and columns in [1, column period]. Requires is_toric().
  Diagram torus_image() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::optional<Period> period_;
  std::set<Cell> cells_;
};

/// Equivalence of diagrams: a bijection of cells induced by bijections of
/// rows and of columns. Cylindric inputs must be toric and are compared
/// through their torus images.
bool equivalent(const Diagram& a, const Diagram& b);

/// "row: col1,col2,..." one line per occupied row, rows ascending.
std::string format_diagram(const Diagram& d);
/// Parses the line format above, or a single line with ';' separators.
Diagram parse_diagram(std::string_view text);

}  // namespace posclass
