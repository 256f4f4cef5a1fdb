#include "posclass/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "posclass/error.hpp"

namespace posclass {

bool is_permutation(const Permutation& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

int permutation_length(const Permutation& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

Permutation permutation_inverse(const Permutation& w) {
  Permutation out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i + 1);
  return out;
}

Permutation swap_positions(Permutation w, int a, int b) {
  std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
  return w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation w = identity_permutation(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Diagram permutation_rothe_diagram(const Permutation& w) {
  std::set<Cell> cells;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) cells.insert({static_cast<Int>(i + 1), w[j]});
  return Diagram::planar(std::move(cells));
}

AffinePermutation to_affine(const Permutation& w) {
  return AffinePermutation::from_window(static_cast<int>(w.size()),
                                        std::vector<Int>(w.begin(), w.end()));
}

Permutation parse_permutation(std::string_view text) {
  const std::string original(text);
  Permutation w;
  if (text.find(',') == std::string_view::npos &&
      std::all_of(text.begin(), text.end(), [](char c) { return c >= '1' && c <= '9'; })) {
    for (char c : text) w.push_back(c - '0');
  } else {
    while (true) {
      const auto comma = text.find(',');
      std::string_view token = text.substr(0, comma);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorCode::ParseError, "bad permutation entry '" + std::string(token) + "'");
      w.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  if (w.empty() || !is_permutation(w))
    throw Error(ErrorCode::ParseError, "not a permutation of [n]: '" + original + "'");
  return w;
}

std::string format_permutation(const Permutation& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace posclass
