#include "posclass/schur_vector.hpp"

#include <sstream>

#include "posclass/error.hpp"
#include "posclass/json_io.hpp"

namespace posclass {

SchurVector::SchurVector(int k, int m) : k_(k), m_(m) {
  if (k < 0 || m < 0)
    throw Error(ErrorCode::InvalidArgument, "ring bounds must be nonnegative");
}

SchurVector SchurVector::basis(int k, int m, const Partition& lambda) {
  SchurVector out(k, m);
  out.add_term(lambda, 1);
  return out;
}

BigInt SchurVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurVector::add_term(const Partition& lambda, const BigInt& c) {
  if (c == 0 || !fits_in_rect(lambda, k_, m_)) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SchurVector::require_same_ring(const SchurVector& other) const {
  if (k_ != other.k_ || m_ != other.m_)
    throw Error(ErrorCode::RingMismatch,
                "Lambda^" + std::to_string(m_) + "(" + std::to_string(k_) + ") vs Lambda^" +
                    std::to_string(other.m_) + "(" + std::to_string(other.k_) + ")");
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  require_same_ring(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  require_same_ring(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SchurVector add(const SchurVector& f, const SchurVector& g) {
  SchurVector out = f;
  out += g;
  return out;
}

SchurVector operator+(const SchurVector& f, const SchurVector& g) { return add(f, g); }

SchurVector operator-(const SchurVector& f, const SchurVector& g) {
  SchurVector out = f;
  out -= g;
  return out;
}

SchurVector scale(const SchurVector& f, const BigInt& c) {
  SchurVector out(f.k(), f.m());
  for (const auto& [lambda, coeff] : f.terms()) out.add_term(lambda, coeff * c);
  return out;
}

bool is_schur_positive(const SchurVector& f) {
  for (const auto& [lambda, c] : f.terms())
    if (c < 0) return false;
  return true;
}

SchurVector multiply_by_s1(const SchurVector& f) {
  SchurVector out(f.k(), f.m());
  for (const auto& [lambda, c] : f.terms())
    for (const auto& bigger : add_one_box(lambda)) out.add_term(bigger, c);
  return out;
}

SchurVector omega_dual(const SchurVector& f) {
  SchurVector out(f.m(), f.k());
  for (const auto& [lambda, c] : f.terms()) out.add_term(conjugate(lambda), c);
  return out;
}

BigInt delta(const SchurVector& f) {
  BigInt total = 0;
  for (const auto& [lambda, c] : f.terms())
    total += c * syt_count(complement(lambda, f.k(), f.m()));
  return total;
}

bool is_homogeneous_of_degree(const SchurVector& f, int degree) {
  for (const auto& [lambda, c] : f.terms())
    if (lambda.size() != degree) return false;
  return true;
}

std::map<Partition, BigInt> schur_expand_from_monomials(
    const std::map<Partition, BigInt>& table, int k) {
  std::map<Partition, BigInt> residue;
  int degree = -1;
  for (const auto& [mu, c] : table) {
    if (c == 0) continue;
    if (degree >= 0 && mu.size() != degree)
      throw Error(ErrorCode::SizeMismatch, "monomial table mixes degrees");
    degree = mu.size();
    residue[mu] = c;
  }
  std::map<Partition, BigInt> out;
  while (!residue.empty()) {
    // Lexicographic order extends dominance, so the last key is maximal.
    const auto top = std::prev(residue.end());
    const Partition lambda = top->first;
    const BigInt c = top->second;
    if (lambda.length() > k)
      throw Error(ErrorCode::NotSymmetric,
                  "monomial m" + format_partition(lambda) +
                      " cannot be peeled in " + std::to_string(k) + " variables");
    out[lambda] = c;
    for (const auto& mu : partitions_of(lambda.size(), k)) {
      if (mu > lambda || !dominance_leq(mu, lambda)) continue;
      const BigInt kostka = kostka_number(lambda, mu);
      if (kostka == 0) continue;
      auto [it, inserted] = residue.try_emplace(mu, 0);
      it->second -= c * kostka;
      if (it->second == 0) residue.erase(it);
    }
  }
  return out;
}

std::string format_schur_text(const SchurVector& f) { return format_schur_text(f.terms()); }

std::string format_schur_text(const std::map<Partition, BigInt>& terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms) {
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    out << abs(c) << " * s" << format_partition(lambda);
  }
  return first ? "0" : out.str();
}

std::string to_json_string(const SchurVector& f) { return schur_vector_to_json(f).dump(); }

SchurVector schur_vector_from_json(std::string_view text) {
  return schur_vector_from_json(nlohmann::json::parse(text));
}

SchurVector schur_vector_from_json(const std::string& text) {
  return schur_vector_from_json(std::string_view(text));
}

SchurVector schur_vector_from_json(const char* text) {
  return schur_vector_from_json(std::string_view(text));
}

}  // namespace posclass
