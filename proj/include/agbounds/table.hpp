#ifndef AGBOUNDS_TABLE_HPP
#define AGBOUNDS_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agbounds/bounds.hpp"

namespace agc {

/// Bound family tabulated by improvement_table; kBest takes the maximum of all.
enum class Selection { kDesigned, kFloor, kKirfelPellikaan, kAsymmetricFloor, kBest };

Selection parse_selection(std::string_view name);
const char* selection_name(Selection s);

struct IntRange {
  int lo = 0;
  int hi = -1;  // inclusive; empty when hi < lo

  int size() const { return hi < lo ? 0 : hi - lo + 1; }
};

struct TableCell {
  /// deg G >= 2g - 2; cells below are left blank.
  bool in_region = false;
  /// Improvement of the selected bound over the designed distance; nullopt
  /// when the bound applies to no representative.
  std::optional<int> improvement;
  /// Improvement of the AF bound, which marks where d exceeds the designed distance.
  int af_improvement = 0;
};

/// Cell (r, c) is G = r P_00 + c P_inf.
struct ImprovementTable {
  Selection selection = Selection::kAsymmetricFloor;
  IntRange rows;
  IntRange cols;
  std::vector<std::vector<TableCell>> cells;
};

/// Cells are independent and are evaluated on `threads` workers; the result
/// does not depend on the thread count.
ImprovementTable improvement_table(const BoundSearch& search, IntRange rows, IntRange cols,
                                   Selection selection, int threads = 1);

enum class TableFormat { kMarkdown, kCsv };

/// Blank for no improvement. Floor and KP tables print '*' where the AF bound
/// improves but the selected bound gives nothing or does not apply.
std::string render_table(const ImprovementTable& table, TableFormat format);

}  // namespace agc

#endif  // AGBOUNDS_TABLE_HPP
