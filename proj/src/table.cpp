#include "agbounds/table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace agc {

Selection parse_selection(std::string_view name) {
  if (name == "designed") return Selection::kDesigned;
  if (name == "floor") return Selection::kFloor;
  if (name == "kp") return Selection::kKirfelPellikaan;
  if (name == "af") return Selection::kAsymmetricFloor;
  if (name == "best") return Selection::kBest;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

const char* selection_name(Selection s) {
  switch (s) {
    case Selection::kDesigned: return "designed";
    case Selection::kFloor: return "floor";
    case Selection::kKirfelPellikaan: return "kp";
    case Selection::kAsymmetricFloor: return "af";
    case Selection::kBest: return "best";
  }
  return "?";
}

namespace {

TableCell evaluate_cell(const BoundSearch& search, const Divisor& g, Selection selection) {
  TableCell cell;
  cell.in_region = g.degree() >= 2 * search.genus() - 2;
  if (!cell.in_region) return cell;
  const int designed = search.designed_distance(g);
  const int af = search.best(g, Method::kAsymmetricFloor)->value;
  cell.af_improvement = af - designed;

  std::optional<BoundResult> r;
  switch (selection) {
    case Selection::kDesigned: r = search.designed(g); break;
    // Floor tables use G itself; shifted representatives are not searched.
    case Selection::kFloor: r = search.floor_bound(g); break;
    case Selection::kKirfelPellikaan: r = search.best(g, Method::kKirfelPellikaan); break;
    case Selection::kAsymmetricFloor: cell.improvement = cell.af_improvement; return cell;
    case Selection::kBest: r = search.best(g); break;
  }
  if (r) cell.improvement = r->value - designed;
  return cell;
}

}  // namespace

ImprovementTable improvement_table(const BoundSearch& search, IntRange rows, IntRange cols,
                                   Selection selection, int threads) {
  ImprovementTable table;
  table.selection = selection;
  table.rows = rows;
  table.cols = cols;
  const int nr = rows.size();
  const int nc = cols.size();
  table.cells.assign(nr, std::vector<TableCell>(nc));
  const int total = nr * nc;

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < total; i = next++) {
      const int r = i / nc;
      const int c = i % nc;
      const Divisor g{cols.lo + c, rows.lo + r, {}};
      table.cells[r][c] = evaluate_cell(search, g, selection);
    }
  };
  const int n = std::clamp(threads, 1, std::max(total, 1));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return table;
}

namespace {

std::string cell_text(const ImprovementTable& table, const TableCell& cell) {
  if (!cell.in_region) return "";
  const bool starred = table.selection == Selection::kFloor || table.selection == Selection::kKirfelPellikaan;
  const int value = cell.improvement.value_or(0);
  if (!starred) return value > 0 ? std::to_string(value) : "";
  if (cell.af_improvement <= 0) return "";
  return value > 0 ? std::to_string(value) : "*";
}

}  // namespace

std::string render_table(const ImprovementTable& table, TableFormat format) {
  std::string out;
  if (table.rows.size() == 0 || table.cols.size() == 0) return out;
  char buf[32];
  if (format == TableFormat::kCsv) {
    for (int c = table.cols.lo; c <= table.cols.hi; ++c) out += "," + std::to_string(c);
    out += "\n";
    for (int r = 0; r < table.rows.size(); ++r) {
      out += std::to_string(table.rows.lo + r);
      for (const auto& cell : table.cells[r]) out += "," + cell_text(table, cell);
      out += "\n";
    }
    return out;
  }

  out += "|    |";
  for (int c = table.cols.lo; c <= table.cols.hi; ++c) {
    std::snprintf(buf, sizeof buf, " %2d |", c);
    out += buf;
  }
  out += "\n|----|";
  for (int c = 0; c < table.cols.size(); ++c) out += "----|";
  out += "\n";
  for (int r = 0; r < table.rows.size(); ++r) {
    std::snprintf(buf, sizeof buf, "| %2d |", table.rows.lo + r);
    out += buf;
    for (const auto& cell : table.cells[r]) {
      std::snprintf(buf, sizeof buf, " %2s |", cell_text(table, cell).c_str());
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace agc
