#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cauchon/qtorus.hpp"

namespace cauchon {

// m x n grid of black/white squares indexed like a matrix (row 1 on top,
// column 1 on the left). The diagram condition: every black square has all
// squares above it black, or all squares to its left black.
class CauchonDiagram {
 public:
  CauchonDiagram(int rows, int cols);  // all white
  CauchonDiagram(int rows, int cols, const std::vector<GenIndex>& black);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_black(int i, int j) const { return cells_[index(i, j)] != 0; }
  bool is_white(int i, int j) const { return !is_black(i, j); }
  std::vector<GenIndex> black_squares() const;
  std::size_t black_count() const;

  bool is_valid() const;  // the diagram condition
  // first black square (in row-major order) violating the condition
  std::optional<GenIndex> first_violation() const;

  static CauchonDiagram all_white(int rows, int cols);
  static CauchonDiagram all_black(int rows, int cols);
  // bit b of mask set => square b (row-major, (1,1) = bit 0) is black
  static CauchonDiagram from_mask(int rows, int cols, std::uint64_t mask);
  std::uint64_t mask() const;

  // Text form: optional "m n" header line, then m rows over {., X}.
  // Throws FormatError on malformed text; ValidationError when the diagram
  // condition fails, unless enforce=false (an escape hatch that exists so
  // the validator itself can be exercised).
  static CauchonDiagram parse(const std::string& text, bool enforce = true);
  std::string serialize() const;  // headerless; parse(serialize(d)) == d

  CauchonDiagram without_last_row() const;

  // Every valid diagram of the given shape exactly once, in row-major
  // bitstring order ('.' < 'X', so all-white first, all-black last).
  // Assigns squares row-major and prunes: the condition at a black square
  // reads only earlier squares, so a violated prefix never extends to a
  // valid diagram.
  static void enumerate(int rows, int cols,
                        const std::function<void(const CauchonDiagram&)>& emit);
  static std::vector<CauchonDiagram> enumerate_all(int rows, int cols);
  static std::uint64_t count(int rows, int cols);

  bool operator==(const CauchonDiagram&) const = default;

 private:
  int index(int i, int j) const;
  bool black_square_ok(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;  // row-major, 1 = black
};

}  // namespace cauchon
