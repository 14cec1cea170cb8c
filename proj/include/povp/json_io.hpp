#pragma once

#include <string>

#include <json.hpp>

#include "povp/interlacing.hpp"
#include "povp/objects.hpp"
#include "povp/partition.hpp"
#include "povp/rsk.hpp"
#include "povp/series.hpp"

namespace povp {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const Overpartition& p);
Overpartition overpartition_from_json(const json& j);

json to_json(const PlanePartition& p);
PlanePartition plane_partition_from_json(const json& j);

json to_json(const PlaneOverpartition& p);
PlaneOverpartition pop_from_json(const json& j);

json to_json(const ReversePlaneOverpartition& p);
ReversePlaneOverpartition reverse_pop_from_json(const json& j);

json to_json(const BlockMatrix& m);
BlockMatrix block_matrix_from_json(const json& j);

json to_json(const InterlacingSequence& s);
InterlacingSequence interlacing_from_json(const json& j);

/* Canonical series JSON: {"trunc": N, "terms": [[qexp, [[aexp, texp,
 * "coeff"], ...]], ...]} with terms sorted by q, then a, then t. */
json to_json(const TruncSeries& s);

}  // namespace povp
