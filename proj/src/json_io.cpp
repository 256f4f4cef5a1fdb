#include "posclass/json_io.hpp"

#include <limits>

#include "posclass/error.hpp"

namespace posclass {

nlohmann::json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

BigInt bigint_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer string in JSON");
    }
  }
  throw Error(ErrorCode::ParseError, "expected an integer in JSON");
}

nlohmann::json partition_to_json(const Partition& lambda) {
  return nlohmann::json(lambda.parts());
}

nlohmann::json terms_to_json(const std::map<Partition, BigInt>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, c] : terms)
    if (c != 0)
      out.push_back({{"partition", partition_to_json(lambda)}, {"coeff", bigint_to_json(c)}});
  return out;
}

std::map<Partition, BigInt> terms_from_json(const nlohmann::json& doc) {
  std::map<Partition, BigInt> out;
  try {
    for (const auto& term : doc)
      out[Partition::sorted(term.at("partition").get<std::vector<int>>())] +=
          bigint_from_json(term.at("coeff"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed terms JSON: ") + e.what());
  }
  return out;
}

nlohmann::json schur_vector_to_json(const SchurVector& f) {
  return {{"k", f.k()}, {"m", f.m()}, {"terms", terms_to_json(f.terms())}};
}

SchurVector schur_vector_from_json(const nlohmann::json& doc) {
  try {
    SchurVector out(doc.at("k").get<int>(), doc.at("m").get<int>());
    for (const auto& term : doc.at("terms"))
      out.add_term(Partition::sorted(term.at("partition").get<std::vector<int>>()),
                   bigint_from_json(term.at("coeff")));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed Schur vector JSON: ") + e.what());
  }
}

}  // namespace posclass
