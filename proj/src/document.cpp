#include "pea/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pea/errors.hpp"

namespace pea {

using nlohmann::json;

PartialAdditionTable parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InputError("document must be a JSON object");
    for (const char* key : {"elements", "zero", "add"})
      if (!doc.contains(key)) throw InputError(std::string("document lacks \"") + key + "\"");
    auto names = doc.at("elements").get<std::vector<std::string>>();
    const auto zero = doc.at("zero").get<std::string>();
    std::optional<std::string> one;
    if (doc.contains("one") && !doc.at("one").is_null()) one = doc.at("one").get<std::string>();
    std::vector<std::array<std::string, 3>> sums;
    for (const auto& triple : doc.at("add")) {
      if (!triple.is_array() || triple.size() != 3) throw InputError("each sum must be [a, b, a+b]");
      sums.push_back({triple[0].get<std::string>(), triple[1].get<std::string>(), triple[2].get<std::string>()});
    }
    return PartialAdditionTable::from_triples(std::move(names), zero, one, sums);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

PartialAdditionTable load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string write_document(const PartialAdditionTable& t) {
  auto q = [](const std::string& s) { return json(s).dump(); };
  std::string out = "{\n  \"elements\": [";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + q(t.names()[i]);
  out += "],\n  \"zero\": " + q(t.name(t.zero())) + ",\n";
  if (t.has_one()) out += "  \"one\": " + q(t.name(*t.one())) + ",\n";
  out += "  \"add\": [";
  bool first = true;
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (auto c = t.add(a, b)) {
        out += first ? "\n    " : ",\n    ";
        out += "[" + q(t.name(a)) + ", " + q(t.name(b)) + ", " + q(t.name(*c)) + "]";
        first = false;
      }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_document(const PartialAdditionTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << write_document(t);
}

std::string digest(const PartialAdditionTable& t) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : write_document(t)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pea
