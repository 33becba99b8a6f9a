#include "cauchon/diagram.hpp"

#include <sstream>
#include <stdexcept>

#include "cauchon/errors.hpp"

namespace cauchon {

CauchonDiagram::CauchonDiagram(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("diagram shape must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

CauchonDiagram::CauchonDiagram(int rows, int cols, const std::vector<GenIndex>& black)
    : CauchonDiagram(rows, cols) {
  for (GenIndex g : black) cells_[index(g.row, g.col)] = 1;
}

int CauchonDiagram::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw std::out_of_range("square index outside the grid");
  return (i - 1) * cols_ + (j - 1);
}

std::vector<GenIndex> CauchonDiagram::black_squares() const {
  std::vector<GenIndex> out;
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      if (is_black(i, j)) out.push_back({i, j});
  return out;
}

std::size_t CauchonDiagram::black_count() const {
  std::size_t n = 0;
  for (auto c : cells_) n += c;
  return n;
}

bool CauchonDiagram::black_square_ok(int i, int j) const {
  bool above_all_black = true;
  for (int r = 1; r < i && above_all_black; ++r) above_all_black = is_black(r, j);
  if (above_all_black) return true;
  for (int c = 1; c < j; ++c)
    if (is_white(i, c)) return false;
  return true;
}

bool CauchonDiagram::is_valid() const { return !first_violation().has_value(); }

std::optional<GenIndex> CauchonDiagram::first_violation() const {
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      if (is_black(i, j) && !black_square_ok(i, j)) return GenIndex{i, j};
  return std::nullopt;
}

CauchonDiagram CauchonDiagram::all_white(int rows, int cols) {
  return CauchonDiagram(rows, cols);
}

CauchonDiagram CauchonDiagram::all_black(int rows, int cols) {
  CauchonDiagram d(rows, cols);
  d.cells_.assign(d.cells_.size(), 1);
  return d;
}

CauchonDiagram CauchonDiagram::from_mask(int rows, int cols, std::uint64_t mask) {
  if (static_cast<std::size_t>(rows) * cols > 64)
    throw std::invalid_argument("mask form limited to 64 squares");
  CauchonDiagram d(rows, cols);
  for (std::size_t b = 0; b < d.cells_.size(); ++b)
    if (mask >> b & 1) d.cells_[b] = 1;
  return d;
}

std::uint64_t CauchonDiagram::mask() const {
  if (cells_.size() > 64) throw std::invalid_argument("mask form limited to 64 squares");
  std::uint64_t m = 0;
  for (std::size_t b = 0; b < cells_.size(); ++b)
    if (cells_[b]) m |= std::uint64_t{1} << b;
  return m;
}

namespace {

bool header_line(const std::string& line) {
  bool digit_seen = false;
  for (char ch : line) {
    if (ch >= '0' && ch <= '9')
      digit_seen = true;
    else if (ch != ' ' && ch != '\t')
      return false;
  }
  return digit_seen;
}

}  // namespace

CauchonDiagram CauchonDiagram::parse(const std::string& text, bool enforce) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw FormatError("empty diagram text");

  int rows = -1;
  int cols = -1;
  std::size_t first = 0;
  if (header_line(lines[0])) {
    std::istringstream hdr(lines[0]);
    if (!(hdr >> rows >> cols)) throw FormatError("header must be two integers: m n");
    std::string extra;
    if (hdr >> extra) throw FormatError("header must be two integers: m n");
    if (rows < 1 || cols < 1) throw FormatError("header dimensions must be positive");
    first = 1;
    if (lines.size() - first != static_cast<std::size_t>(rows))
      throw FormatError("row count does not match header");
  } else {
    rows = static_cast<int>(lines.size());
    cols = static_cast<int>(lines[0].size());
  }
  if (cols == 0) throw FormatError("empty diagram row");

  CauchonDiagram d(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string& row = lines[first + i];
    if (row.size() != static_cast<std::size_t>(cols))
      throw FormatError("ragged row " + std::to_string(i + 1));
    for (int j = 0; j < cols; ++j) {
      if (row[j] == 'X')
        d.cells_[static_cast<std::size_t>(i) * cols + j] = 1;
      else if (row[j] != '.')
        throw FormatError(std::string("illegal character '") + row[j] + "' in row " +
                          std::to_string(i + 1));
    }
  }
  if (enforce) {
    if (auto v = d.first_violation())
      throw ValidationError("square (" + std::to_string(v->row) + "," + std::to_string(v->col) +
                            ") violates the diagram condition");
  }
  return d;
}

std::string CauchonDiagram::serialize() const {
  std::string out;
  out.reserve(cells_.size() + rows_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) out.push_back(is_black(i, j) ? 'X' : '.');
    out.push_back('\n');
  }
  return out;
}

CauchonDiagram CauchonDiagram::without_last_row() const {
  if (rows_ < 2) throw std::invalid_argument("cannot drop the only row");
  CauchonDiagram d(rows_ - 1, cols_);
  d.cells_.assign(cells_.begin(), cells_.end() - cols_);
  return d;
}

void CauchonDiagram::enumerate(int rows, int cols,
                               const std::function<void(const CauchonDiagram&)>& emit) {
  CauchonDiagram d(rows, cols);
  const std::size_t total = d.cells_.size();
  // white tried before black at each square keeps row-major bitstring order
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == total) {
      emit(d);
      return;
    }
    int i = static_cast<int>(pos) / cols + 1;
    int j = static_cast<int>(pos) % cols + 1;
    d.cells_[pos] = 0;
    self(self, pos + 1);
    d.cells_[pos] = 1;
    if (d.black_square_ok(i, j)) self(self, pos + 1);
    d.cells_[pos] = 0;
  };
  rec(rec, 0);
}

std::vector<CauchonDiagram> CauchonDiagram::enumerate_all(int rows, int cols) {
  std::vector<CauchonDiagram> out;
  enumerate(rows, cols, [&](const CauchonDiagram& d) { out.push_back(d); });
  return out;
}

std::uint64_t CauchonDiagram::count(int rows, int cols) {
  std::uint64_t n = 0;
  enumerate(rows, cols, [&](const CauchonDiagram&) { ++n; });
  return n;
}

}  // namespace cauchon
