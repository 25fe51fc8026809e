#include "workbench/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wb {

Model model_from_json(const nlohmann::json& j) {
  std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
  Frame probe(states, std::vector<std::pair<int, int>>{});
  std::vector<std::pair<int, int>> rel;
  for (const auto& pair : j.at("rel")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("rel entries must be [from,to] pairs");
    int x = probe.index_of(pair[0].get<std::string>());
    int y = probe.index_of(pair[1].get<std::string>());
    if (x < 0 || y < 0) throw std::runtime_error("rel references unknown state label");
    rel.emplace_back(x, y);
  }
  Model m{Frame(states, rel), {}};
  if (j.contains("valuation")) {
    for (const auto& [var, members] : j.at("valuation").items()) {
      StateSet ext = 0;
      for (const auto& label : members) {
        int x = m.frame.index_of(label.get<std::string>());
        if (x < 0)
          throw std::runtime_error("valuation of '" + var + "' references unknown state label");
        ext |= StateSet{1} << x;
      }
      m.valuation[var] = ext;
    }
  }
  return m;
}

nlohmann::json model_to_json(const Model& m) {
  nlohmann::json j;
  j["states"] = m.frame.states();
  auto rel = nlohmann::json::array();
  for (auto [x, y] : m.frame.rel_pairs())
    rel.push_back({m.frame.label(x), m.frame.label(y)});
  j["rel"] = rel;
  auto val = nlohmann::json::object();
  for (const auto& [var, ext] : m.valuation) {
    auto members = nlohmann::json::array();
    for (int x : set_bits(ext)) members.push_back(m.frame.label(x));
    val[var] = members;
  }
  j["valuation"] = val;
  return j;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return model_from_json(j);
}

void save_model_file(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << model_to_json(m).dump(2) << "\n";
}

}  // namespace wb
