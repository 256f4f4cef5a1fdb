#include "posclass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "posclass/error.hpp"

namespace posclass {

namespace {

void strip_and_check(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::InvalidArgument,
                  "partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  strip_and_check(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::sorted(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative part");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int m) {
  if (k <= 0 || m <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(k), m));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 0; j < lambda[0]; ++j) {
    int column = 0;
    while (column < lambda.length() && lambda[column] > j) ++column;
    parts.push_back(column);
  }
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch,
                "dominance order compares partitions of equal size only");
  int partial_lambda = 0;
  int partial_mu = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    partial_lambda += lambda[i];
    partial_mu += mu[i];
    if (partial_lambda > partial_mu) return false;
  }
  return true;
}

bool fits_in_rect(const Partition& lambda, int k, int m) {
  return lambda.length() <= k && (lambda.empty() || lambda[0] <= m);
}

Partition complement(const Partition& lambda, int k, int m) {
  if (!fits_in_rect(lambda, k, m))
    throw Error(ErrorCode::RectangleOverflow,
                format_partition(lambda) + " does not fit in " +
                    std::to_string(k) + "x" + std::to_string(m));
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(m - lambda[k - 1 - i]);
  return Partition(std::move(parts));
}

BigInt syt_count(const Partition& lambda) {
  const Partition transposed = conjugate(lambda);
  BigInt numerator = 1;
  for (int i = 2; i <= lambda.size(); ++i) numerator *= i;
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j - 1) + (transposed[j] - i - 1) + 1;
  return numerator / hooks;
}

namespace {

// Partitions nu with lambda / nu a horizontal strip of the given size.
void horizontal_strips_below(const Partition& lambda, int strip,
                             std::vector<Partition>& out) {
  std::vector<int> nu(static_cast<std::size_t>(lambda.length()), 0);
  std::function<void(int, int)> fill = [&](int row, int remaining) {
    if (row == lambda.length()) {
      if (remaining == 0) out.push_back(Partition(nu));
      return;
    }
    const int hi = lambda[row];
    const int lo = lambda[row + 1];
    for (int value = hi; value >= lo; --value) {
      const int removed = hi - value;
      if (removed > remaining) break;
      nu[static_cast<std::size_t>(row)] = value;
      fill(row + 1, remaining - removed);
    }
  };
  fill(0, strip);
}

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, BigInt> kostka_cache;

BigInt kostka_recursive(const Partition& lambda, std::vector<int> content) {
  if (content.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard lock(kostka_mutex);
    auto it = kostka_cache.find({lambda, content});
    if (it != kostka_cache.end()) return it->second;
  }
  const int last = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  std::vector<Partition> smaller;
  horizontal_strips_below(lambda, last, smaller);
  BigInt total = 0;
  for (const auto& nu : smaller) total += kostka_recursive(nu, rest);
  std::lock_guard lock(kostka_mutex);
  kostka_cache.emplace(std::make_pair(lambda, std::move(content)), total);
  return total;
}

}  // namespace

BigInt kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch,
                "Kostka number needs |lambda| = |mu|");
  return kostka_recursive(lambda, mu.parts());
}

std::vector<Partition> partitions_of(int size, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition(current));
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) >= max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(size, max_part < 0 ? size : max_part);
  return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 0; i <= lambda.length(); ++i) {
    if (i == 0 || lambda[i] < lambda[i - 1]) {
      std::vector<int> parts = lambda.parts();
      if (i == lambda.length())
        parts.push_back(1);
      else
        ++parts[static_cast<std::size_t>(i)];
      out.push_back(Partition(std::move(parts)));
    }
  }
  return out;
}

std::string format_partition(const Partition& lambda) {
  std::string out = "[";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw Error(ErrorCode::ParseError, "unbalanced bracket in partition");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError,
                  "bad partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace posclass
