#include "ucf/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ucf {

SetFamily parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid family JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets")) {
    throw std::invalid_argument("family JSON needs an object with \"n\" and \"sets\"");
  }
  if (!doc["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (!doc["sets"].is_array()) throw std::invalid_argument("\"sets\" must be an array");
  std::vector<std::vector<ElementId>> sets;
  for (const auto& s : doc["sets"]) {
    if (!s.is_array()) throw std::invalid_argument("each set must be an array of integers");
    std::vector<ElementId> members;
    for (const auto& e : s) {
      if (!e.is_number_integer()) throw std::invalid_argument("set elements must be integers");
      members.push_back(e.get<int>());
    }
    sets.push_back(std::move(members));
  }
  return SetFamily::from_lists(n, sets);
}

SetFamily parse_family_text(std::string_view text) {
  std::vector<std::vector<ElementId>> sets;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    std::vector<std::string> words;
    while (tokens >> tok) words.push_back(tok);
    if (words.empty() || words.front().front() == '#') continue;
    if (words.size() == 1 && words.front() == "-") {
      sets.emplace_back();
      continue;
    }
    std::vector<ElementId> members;
    for (const auto& w : words) {
      std::size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.size() || e < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad element '" + w + "'");
      }
      members.push_back(e);
      n = std::max(n, e);
    }
    sets.push_back(std::move(members));
  }
  return SetFamily::from_lists(n, sets);
}

nlohmann::json family_to_json(const SetFamily& family) {
  nlohmann::json sets = nlohmann::json::array();
  for (SubsetMask s : family) sets.push_back(s.elements());
  return {{"n", family.n()}, {"sets", sets}};
}

std::string format_family_json(const SetFamily& family) { return family_to_json(family).dump(); }

std::string format_family_text(const SetFamily& family) {
  std::ostringstream os;
  for (SubsetMask s : family) {
    if (s.empty()) {
      os << "-\n";
      continue;
    }
    const auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? " " : "") << elems[i];
    os << '\n';
  }
  return os.str();
}

SetFamily load_family(const std::string& path, FamilyFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (format == FamilyFormat::kAuto) {
    const bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = json_ext ? FamilyFormat::kJson : FamilyFormat::kText;
  }
  return format == FamilyFormat::kJson ? parse_family_json(buf.str()) : parse_family_text(buf.str());
}

}  // namespace ucf
