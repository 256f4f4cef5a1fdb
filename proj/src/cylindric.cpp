#include "posclass/cylindric.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "posclass/error.hpp"
#include "posclass/int_math.hpp"

namespace posclass {

namespace {

struct Walk {
  std::vector<Int> v_column;  // column of the V step in row R
  std::vector<Int> v_label;
  std::vector<Int> h_label;   // label of the H step over column start + c
};

Walk walk(const std::string& word, Int start_column) {
  Walk w;
  Int col = start_column;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Int label = static_cast<Int>(t) + 1;
    if (word[t] == 'V') {
      w.v_column.push_back(col);
      w.v_label.push_back(label);
    } else {
      w.h_label.push_back(label);
      ++col;
    }
  }
  return w;
}

std::string word_from_columns(const std::vector<Int>& cols, Int start, Int m) {
  std::string word;
  Int col = start;
  for (Int c : cols) {
    word.append(static_cast<std::size_t>(c - col), 'H');
    word += 'V';
    col = c;
  }
  word.append(static_cast<std::size_t>(start + m - col), 'H');
  return word;
}

}  // namespace

CylindricSkewShape CylindricSkewShape::from_words(std::string lower, std::string upper,
                                                  Int offset) {
  for (std::string* w : {&lower, &upper})
    for (char& c : *w) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (c != 'V' && c != 'H')
        throw Error(ErrorCode::ParseError, "path words use only V and H");
    }
  if (lower.size() != upper.size())
    throw Error(ErrorCode::InvalidArgument, "lower and upper words differ in length");
  const auto k = std::count(lower.begin(), lower.end(), 'V');
  if (std::count(upper.begin(), upper.end(), 'V') != k)
    throw Error(ErrorCode::InvalidArgument, "lower and upper words differ in V count");
  const int n = static_cast<int>(lower.size());
  if (k < 1 || k >= n)
    throw Error(ErrorCode::InvalidArgument, "paths need at least one V and one H step");

  CylindricSkewShape s;
  s.k_ = static_cast<int>(k);
  s.n_ = n;
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  s.offset_ = offset;
  s.a_ = walk(s.lower_, 0).v_column;
  s.b_ = walk(s.upper_, offset).v_column;
  for (int r = 0; r < s.k_; ++r)
    if (s.a_[static_cast<std::size_t>(r)] > s.b_[static_cast<std::size_t>(r)])
      throw Error(ErrorCode::InvalidArgument,
                  "paths cross in row " + std::to_string(r));
  return s;
}

CylindricSkewShape CylindricSkewShape::from_row_intervals(int k, int n, std::vector<Int> a,
                                                          std::vector<Int> b) {
  if (k < 1 || k >= n || static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
    throw Error(ErrorCode::InvalidArgument, "need k row intervals with 1 <= k < n");
  const Int m = n - k;
  for (const auto* v : {&a, &b}) {
    if (!std::is_sorted(v->begin(), v->end()) || v->back() > v->front() + m)
      throw Error(ErrorCode::InvalidArgument, "row boundaries must be periodic and monotone");
  }
  // Translate so the lower path starts with its row-0 V step at column 0.
  const Int shift = a.front();
  for (auto& x : a) x -= shift;
  for (auto& x : b) x -= shift;
  return from_words(word_from_columns(a, 0, m), word_from_columns(b, b.front(), m),
                    b.front());
}

CylindricSkewShape CylindricSkewShape::parse(std::string_view text) {
  std::string lower, upper;
  Int offset = 0;
  bool have_lower = false, have_upper = false;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "lower") {
      lower = value;
      have_lower = true;
    } else if (key == "upper") {
      upper = value;
      have_upper = true;
    } else if (key == "offset") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), offset);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
        throw Error(ErrorCode::ParseError, "bad offset '" + value + "'");
    } else {
      throw Error(ErrorCode::ParseError, "unknown shape key '" + key + "'");
    }
  }
  if (!have_lower || !have_upper)
    throw Error(ErrorCode::ParseError, "shape needs lower= and upper=");
  return from_words(std::move(lower), std::move(upper), offset);
}

Int CylindricSkewShape::size() const {
  Int total = 0;
  for (int r = 0; r < k_; ++r)
    total += b_[static_cast<std::size_t>(r)] - a_[static_cast<std::size_t>(r)];
  return total;
}

Diagram CylindricSkewShape::diagram() const {
  std::set<Cell> cells;
  for (int r = 0; r < k_; ++r)
    for (Int c = a_[static_cast<std::size_t>(r)]; c < b_[static_cast<std::size_t>(r)]; ++c)
      cells.insert({r + 1, c + 1});
  return Diagram::cylindric(k_, m(), cells);
}

bool CylindricSkewShape::is_toric() const {
  for (int r = 0; r < k_; ++r)
    if (b_[static_cast<std::size_t>(r)] - a_[static_cast<std::size_t>(r)] > m()) return false;
  return true;
}

Int CylindricSkewShape::lower_vertical_label(Int row) const {
  const Int p = floor_div(row, k_);
  return walk(lower_, 0).v_label[static_cast<std::size_t>(row - p * k_)] + p * n_;
}

Int CylindricSkewShape::upper_vertical_label(Int row) const {
  const Int p = floor_div(row, k_);
  return walk(upper_, offset_).v_label[static_cast<std::size_t>(row - p * k_)] + p * n_;
}

Int CylindricSkewShape::lower_horizontal_label(Int column) const {
  const Int p = floor_div(column, m());
  return walk(lower_, 0).h_label[static_cast<std::size_t>(column - p * m())] + p * n_;
}

Int CylindricSkewShape::upper_horizontal_label(Int column) const {
  const Int p = floor_div(column - offset_, m());
  return walk(upper_, offset_).h_label[static_cast<std::size_t>(column - offset_ - p * m())] +
         p * n_;
}

std::string format_shape(const CylindricSkewShape& shape) {
  return "lower=" + shape.lower() + " upper=" + shape.upper() +
         " offset=" + std::to_string(shape.offset());
}

}  // namespace posclass
