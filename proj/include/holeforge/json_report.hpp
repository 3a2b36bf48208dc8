#ifndef HOLEFORGE_JSON_REPORT_HPP
#define HOLEFORGE_JSON_REPORT_HPP

#include "holeforge/c5_structure.hpp"
#include "holeforge/color_pipeline.hpp"

#include <json.hpp>

namespace holeforge {

// JSON report bodies. Vertices are 1-indexed to match the DIMACS
// files the reports talk about. The CLI stamps `schema` on the
// top-level object.

nlohmann::json to_json(const Embedding& e);
nlohmann::json to_json(const ClassReport& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const HoleEmbedding& h);
nlohmann::json to_json(const C7Partition& p);
nlohmann::json to_json(const C5Partition& p);
nlohmann::json to_json(const NearUniformPartition& p);
nlohmann::json to_json(const Graph& g, const DecompTree& t);
nlohmann::json to_json(const Theorem8Outcome& o);
nlohmann::json to_json(const StructureTrace& t);

nlohmann::json vertices_json(const Bits& s);
nlohmann::json vertices_json(const std::vector<int>& s);

} // namespace holeforge

#endif
