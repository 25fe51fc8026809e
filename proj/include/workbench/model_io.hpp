#ifndef WORKBENCH_MODEL_IO_HPP
#define WORKBENCH_MODEL_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "workbench/semantics.hpp"

namespace wb {

/// Shared model file format:
/// {"states": [labels], "rel": [[from,to],...], "valuation": {"p": [labels]}}
/// where the pair [x,y] encodes x <| y. "valuation" may be absent.
Model model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const Model& m);

Model load_model_file(const std::string& path);
void save_model_file(const Model& m, const std::string& path);

}  // namespace wb

#endif
