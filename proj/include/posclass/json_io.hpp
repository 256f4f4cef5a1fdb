#pragma once

#include <json.hpp>

#include "posclass/bigint.hpp"
#include "posclass/partition.hpp"
#include "posclass/schur_vector.hpp"

namespace posclass {

/// Integers that fit in int64 become JSON numbers, larger ones strings.
nlohmann::json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const nlohmann::json& value);

nlohmann::json partition_to_json(const Partition& lambda);

/// [{"partition":[..],"coeff":..},..] sorted by partition, zeros skipped.
nlohmann::json terms_to_json(const std::map<Partition, BigInt>& terms);
std::map<Partition, BigInt> terms_from_json(const nlohmann::json& doc);

nlohmann::json schur_vector_to_json(const SchurVector& f);
SchurVector schur_vector_from_json(const nlohmann::json& doc);

}  // namespace posclass
