#pragma once

#include <map>
#include <string>
#include <string_view>

#include "posclass/bigint.hpp"
#include "posclass/partition.hpp"

namespace posclass {

/// An element of the truncated ring Lambda^m(k) in the Schur basis: a
/// finitely supported integer combination of s_lambda with lambda inside
/// the k x m rectangle. Terms outside the rectangle are dropped on insert
/// (the quotient map); zero coefficients are never stored.
class SchurVector {
 public:
  using Terms = std::map<Partition, BigInt>;

  SchurVector(int k, int m);
  /// s_lambda, or zero when lambda leaves the rectangle.
  static SchurVector basis(int k, int m, const Partition& lambda);

  int k() const noexcept { return k_; }
  int m() const noexcept { return m_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const Partition& lambda) const;
  /// Adds c * s_lambda (truncating).
  void add_term(const Partition& lambda, const BigInt& c);

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);

  friend bool operator==(const SchurVector&, const SchurVector&) = default;

 private:
  void require_same_ring(const SchurVector& other) const;

  int k_;
  int m_;
  Terms terms_;
};

SchurVector add(const SchurVector& f, const SchurVector& g);
SchurVector operator+(const SchurVector& f, const SchurVector& g);
SchurVector operator-(const SchurVector& f, const SchurVector& g);
SchurVector scale(const SchurVector& f, const BigInt& c);
bool is_schur_positive(const SchurVector& f);

/// Pieri rule for s_1 * F, truncated to the rectangle.
SchurVector multiply_by_s1(const SchurVector& f);
/// s_lambda -> s_{lambda^t}, from Lambda^m(k) to Lambda^k(m).
SchurVector omega_dual(const SchurVector& f);
/// Sum of coeff(lambda) * f^{complement of lambda}.
BigInt delta(const SchurVector& f);

/// Every stored term has this degree, or the vector is zero.
bool is_homogeneous_of_degree(const SchurVector& f, int degree);

/// Monomial coefficients (at partition exponents) to Schur coefficients in
/// k variables, by peeling dominance-maximal terms with Kostka numbers.
/// Throws NotSymmetric if a term with more than k parts remains.
std::map<Partition, BigInt> schur_expand_from_monomials(
    const std::map<Partition, BigInt>& table, int k);

/// Text: "1 * s[2,2] + 2 * s[2,1,1]", terms sorted by partition; "0" if zero.
std::string format_schur_text(const SchurVector& f);
std::string format_schur_text(const std::map<Partition, BigInt>& terms);
/// {"k":..,"m":..,"terms":[{"partition":[..],"coeff":..},..]}
std::string to_json_string(const SchurVector& f);
SchurVector schur_vector_from_json(std::string_view text);
SchurVector schur_vector_from_json(const std::string& text);
SchurVector schur_vector_from_json(const char* text);

}  // namespace posclass
