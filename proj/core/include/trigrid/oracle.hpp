#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/chambers.hpp"
#include "trigrid/diagram.hpp"

namespace trigrid {

enum class SlotOrder { kColumnMajor, kRowMajor };

struct EnumerationOptions {
  bool dedup_translations = true;
  std::size_t max_n = 4;
  SlotOrder order = SlotOrder::kColumnMajor;
};

// Every nonempty set of occupied triangles (at most one point each) whose
// columns, rows and diagonals carry zero or two points. Vertices are numbered
// in (col, row, triangle) order. With dedup, one diagram per translation
// class. Results are sorted by their slot encoding.
std::vector<CombinatorialDiagram> enumerate_combinatorial(std::size_t n, const EnumerationOptions& options = {});

// Joins the points of every occupied column (red), row (blue) and diagonal
// (green). Throws ValidationError for a disconnected result.
ColoredCubicGraph graph_of(const CombinatorialDiagram& d);

struct Realization {
  bool realizable = false;
  std::vector<Point> points;  // when realizable, points inside their own triangles
};

// Exact LP: column and row coordinates strictly inside their strips, each
// point strictly inside its triangle, equal x + y (mod 1) along diagonals.
Realization realize_combinatorial(const CombinatorialDiagram& d);

enum class Verdict { kMatchedChamber, kEmptyModuliFlagged, kUnrealizable, kDisconnectedSkipped, kMismatch };

std::string verdict_name(Verdict v);

struct DiagramCheck {
  CombinatorialDiagram diagram;
  std::optional<ColoredCubicGraph> graph;  // canonical form
  std::size_t bridge_number = 0;
  bool realizable = false;
  Verdict verdict = Verdict::kMismatch;
  std::optional<std::size_t> component, chamber;
};

struct EnumerationReport {
  std::size_t n = 0;
  int bound = 1;
  bool dedup_translations = true;
  std::vector<DiagramCheck> entries;
  std::size_t graphs = 0;  // distinct canonical graphs analyzed

  std::size_t count(Verdict v) const;
  std::size_t mismatches() const { return count(Verdict::kMismatch); }
};

struct CrossCheckOptions {
  EnumerationOptions enumeration;
  ModuliOptions moduli;
};

EnumerationReport cross_check(std::size_t n, int bound, const CrossCheckOptions& options = {});

}  // namespace trigrid
