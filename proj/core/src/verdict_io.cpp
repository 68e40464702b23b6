#include "gct/verdict_io.hpp"

#include <json.hpp>

namespace gct {

namespace {

using nlohmann::json;

json trace_json(const FinDist<LabelWord, double>& d, const std::vector<std::string>& labels) {
  json out = json::object();
  for (const auto& [w, p] : d.atoms()) out[label_word_str(w, labels)] = p;
  return out;
}

json blocks_json(const Partition& part, const std::vector<std::string>& states) {
  int nblocks = 0;
  for (int b : part) nblocks = std::max(nblocks, b + 1);
  json blocks = json::array();
  for (int b = 0; b < nblocks; ++b) {
    json blk = json::array();
    for (std::size_t i = 0; i < part.size(); ++i)
      if (part[i] == b) blk.push_back(i < states.size() ? states[i] : std::to_string(i));
    blocks.push_back(blk);
  }
  return blocks;
}

}  // namespace

std::string verdict_to_json(const Verdict& v, const std::vector<std::string>& labels) {
  json j;
  j["kind"] = verdict_kind_str(v.kind);
  j["bound"] = v.bound;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness_word) {
    j["witness_word"] = v.witness_word->str();
    j["gap"] = v.gap;
    j["trace_left"] = trace_json(v.trace_left, labels);
    j["trace_right"] = trace_json(v.trace_right, labels);
  } else {
    j["gap"] = v.gap;
  }
  if (!v.partition.empty()) {
    j["blocks"] = blocks_json(v.partition, v.partition_states);
    j["partition"] = v.partition;
  }
  return j.dump(2) + "\n";
}

std::string partition_to_json(const Partition& part, const std::vector<std::string>& states) {
  json j;
  j["blocks"] = blocks_json(part, states);
  j["partition"] = part;
  return j.dump(2) + "\n";
}

}  // namespace gct
