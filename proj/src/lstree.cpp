#include "posclass/lstree.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "posclass/error.hpp"
#include "posclass/int_math.hpp"
#include "posclass/json_io.hpp"

namespace posclass {

namespace {

std::string class_name(int k, int n) {
  return "Bound(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

void require_bounded(const AffinePermutation& f, int k) {
  if (bounded_class(f) != k)
    throw Error(ErrorCode::NotBounded, format_window(f) + " is not in " + class_name(k, f.n()));
}

void check_measure(const AffinePermutation& parent, const AffinePermutation& child) {
  const Int lp = window_inversions(parent);
  const Int lc = window_inversions(child);
  if (lc < lp || (lc == lp && child.window_vector() > parent.window_vector())) return;
  throw Error(ErrorCode::InvariantViolation,
              "child " + format_window(child) + " of " + format_window(parent) +
                  " does not decrease the termination measure");
}

struct Node {
  SchurVector value;
  Int subtree = 1;
  Int depth = 0;
  Int child_refs = 0;
};

class Expander {
 public:
  explicit Expander(int k, int n) : k_(k), n_(n) {}

  // Post-order over the tree below root with an explicit stack.
  void compute(const AffinePermutation& root) {
    struct Frame {
      AffinePermutation g;
      std::optional<LsChildren> children;
    };
    std::vector<Frame> stack;
    stack.push_back({root, std::nullopt});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (contains(top.g)) {
        stack.pop_back();
        continue;
      }
      if (!top.children) {
        if (is_zero_grassmannian(top.g)) {
          Node leaf{SchurVector::basis(k_, n_ - k_, grassmannian_shape(top.g, k_)), 1, 0, 0};
          insert(top.g, std::move(leaf));
          stack.pop_back();
          continue;
        }
        top.children = ls_children(top.g, k_);
        std::vector<AffinePermutation> pending;
        for (const auto* list : {&top.children->plus, &top.children->minus})
          for (const auto& c : *list)
            if (!contains(c)) pending.push_back(c);
        // Pushing invalidates `top`.
        for (auto& c : pending) stack.push_back({std::move(c), std::nullopt});
        continue;
      }
      Node node{SchurVector(k_, n_ - k_), 1, 0, 0};
      for (const auto& c : top.children->plus) absorb(node, c, true);
      for (const auto& c : top.children->minus) absorb(node, c, false);
      insert(top.g, std::move(node));
      stack.pop_back();
    }
  }

  Node get(const AffinePermutation& g) {
    std::lock_guard lock(mutex_);
    return memo_.at(g);
  }

  LsStats stats(const AffinePermutation& root) {
    std::lock_guard lock(mutex_);
    const Node& r = memo_.at(root);
    LsStats s;
    s.node_count = r.subtree;
    s.max_depth = r.depth;
    s.distinct_nodes = static_cast<std::int64_t>(memo_.size());
    Int refs = 0;
    for (const auto& [g, node] : memo_) refs += node.child_refs;
    s.memo_hits = refs - (s.distinct_nodes - 1);
    return s;
  }

 private:
  bool contains(const AffinePermutation& g) {
    std::lock_guard lock(mutex_);
    return memo_.count(g) != 0;
  }

  void insert(const AffinePermutation& g, Node node) {
    std::lock_guard lock(mutex_);
    memo_.try_emplace(g, std::move(node));
  }

  void absorb(Node& node, const AffinePermutation& child, bool plus) {
    const Node c = get(child);
    if (plus)
      node.value += c.value;
    else
      node.value -= c.value;
    node.subtree = checked_add(node.subtree, c.subtree);
    node.depth = std::max(node.depth, c.depth + 1);
    ++node.child_refs;
  }

  int k_;
  int n_;
  std::mutex mutex_;
  std::map<AffinePermutation, Node> memo_;
};

}  // namespace

LsChildren ls_children(const AffinePermutation& f, int k) {
  require_bounded(f, k);
  const auto inv = max_inversion(f);
  if (!inv)
    throw Error(ErrorCode::ZeroGrassmannianLeaf, format_window(f) + " is 0-Grassmannian");
  const auto [r, s] = *inv;
  const AffinePermutation h = right_multiply_t(f, r, s);
  LsChildren out;
  out.plus = phi_minus_bounded(h, r, k);
  out.minus = phi_plus_bounded(h, r, k);
  const auto self = std::find(out.minus.begin(), out.minus.end(), f);
  if (self == out.minus.end())
    throw Error(ErrorCode::InvariantViolation,
                format_window(f) + " missing from BPhi+(f t_rs, r)");
  out.minus.erase(self);
  for (const auto* list : {&out.plus, &out.minus})
    for (const auto& g : *list) check_measure(f, g);
  return out;
}

AffinePermutation normalize_to_class(const AffinePermutation& f, int k) {
  const Int shift = k - av(f);
  if (shift == 0) return f;
  return compose(tau_power(f.n(), shift), f);
}

LsExpansion expand(const AffinePermutation& f_in, int k, int n,
                   const ExpandOptions& options) {
  if (f_in.n() != n)
    throw Error(ErrorCode::PeriodMismatch,
                "window has period " + std::to_string(f_in.n()) + ", expected " +
                    std::to_string(n));
  if (k < 0 || k > n)
    throw Error(ErrorCode::InvalidArgument, "k must lie in [0, n]");
  const AffinePermutation f = normalize_to_class(f_in, k);
  require_bounded(f, k);

  Expander ex(k, n);
  const int threads = std::max(1, options.threads);
  if (threads > 1 && !is_zero_grassmannian(f)) {
    const LsChildren top = ls_children(f, k);
    std::vector<AffinePermutation> roots = top.plus;
    roots.insert(roots.end(), top.minus.begin(), top.minus.end());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = static_cast<std::size_t>(t); i < roots.size();
               i += static_cast<std::size_t>(threads))
            ex.compute(roots[i]);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  ex.compute(f);

  return LsExpansion{f, k, n, ex.get(f).value, ex.stats(f)};
}

std::string trace(const AffinePermutation& f_in, int k, int n) {
  if (f_in.n() != n)
    throw Error(ErrorCode::PeriodMismatch, "window period differs from n");
  const AffinePermutation f = normalize_to_class(f_in, k);
  require_bounded(f, k);

  std::map<AffinePermutation, LsChildren> children;
  struct Item {
    AffinePermutation g;
    char sign;
    int depth;
  };
  std::vector<Item> stack{{f, '+', 0}};
  std::string out;
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    out.append(static_cast<std::size_t>(2 * item.depth), ' ');
    out += item.sign;
    out += format_window(item.g);
    if (is_zero_grassmannian(item.g)) {
      out += " → leaf " + format_partition(grassmannian_shape(item.g, k)) + "\n";
      continue;
    }
    out += "\n";
    auto it = children.find(item.g);
    if (it == children.end()) it = children.emplace(item.g, ls_children(item.g, k)).first;
    const LsChildren& c = it->second;
    // Reverse push so plus children come out first, in window order.
    for (auto g = c.minus.rbegin(); g != c.minus.rend(); ++g)
      stack.push_back({*g, '-', item.depth + 1});
    for (auto g = c.plus.rbegin(); g != c.plus.rend(); ++g)
      stack.push_back({*g, '+', item.depth + 1});
  }
  return out;
}

nlohmann::json expansion_to_json(const LsExpansion& e) {
  nlohmann::json doc = schur_vector_to_json(e.result);
  doc["window"] = e.f.window_vector();
  doc["n"] = e.n;
  doc["k"] = e.k;
  doc["stats"] = {{"node_count", e.stats.node_count},
                  {"distinct_nodes", e.stats.distinct_nodes},
                  {"max_depth", e.stats.max_depth},
                  {"memo_hits", e.stats.memo_hits}};
  return doc;
}

}  // namespace posclass
