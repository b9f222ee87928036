#include <nlohmann/json.hpp>

#include "anumber/error.hpp"
#include "anumber/toric.hpp"

namespace anumber {

std::string report_to_json(const BettiReport& report) {
  nlohmann::json betti = nlohmann::json::array();
  for (const auto& b : report.betti) betti.push_back(to_string(b));
  nlohmann::json doc;
  doc["graph"] = encode_graph6(report.graph);
  doc["method"] = std::string(method_name(report.method));
  doc["betti"] = std::move(betti);
  doc["euler"] = to_string(report.euler);
  return doc.dump();
}

BettiReport report_from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    BettiReport report;
    report.graph = parse_graph6(doc.at("graph").get<std::string>());
    report.method = parse_method(doc.at("method").get<std::string>());
    for (const auto& b : doc.at("betti")) report.betti.push_back(parse_bigint(b.get<std::string>()));
    report.euler = parse_bigint(doc.at("euler").get<std::string>());
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid report JSON: ") + e.what());
  }
}

}  // namespace anumber
