#include "sop/mode_spec_io.hpp"

#include <fstream>

#include "json.hpp"

namespace sop {

namespace {

using nlohmann::json;

Vector parse_vector(const json& doc, const char* name, int n) {
  Vector v = Vector::Zero(n);
  if (!doc.contains(name)) return v;
  const json& field = doc.at(name);
  if (field.is_array()) {
    if (static_cast<int>(field.size()) != n) {
      throw ParseError(std::string("field '") + name + "' must have length " +
                       std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      if (!field[static_cast<size_t>(i)].is_number()) {
        throw ParseError(std::string("field '") + name + "' has a non-numeric entry");
      }
      v(i) = field[static_cast<size_t>(i)].get<double>();
    }
    return v;
  }
  if (field.is_object()) {
    for (const auto& [key, value] : field.items()) {
      int site = 0;
      try {
        size_t consumed = 0;
        site = std::stoi(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(std::string("field '") + name + "': key '" + key +
                         "' is not a site index");
      }
      if (site < 1 || site > n) {
        throw ParseError(std::string("field '") + name + "': site index " + key +
                         " outside 1.." + std::to_string(n));
      }
      if (!value.is_number()) {
        throw ParseError(std::string("field '") + name + "' has a non-numeric entry");
      }
      v(site - 1) = value.get<double>();
    }
    return v;
  }
  throw ParseError(std::string("field '") + name +
                   "' must be a dense array or a sparse {index: value} object");
}

}  // namespace

ModeSpec parse_mode_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mode spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("mode spec must be a JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw ParseError("mode spec needs an integer field 'n'");
  }
  if (!doc.contains("eta") || !doc.at("eta").is_number()) {
    throw ParseError("mode spec needs a numeric field 'eta'");
  }
  const int n = doc.at("n").get<int>();
  const double eta = doc.at("eta").get<double>();
  if (n < 2) throw ParseError("'n' must be at least 2");
  if (!(eta >= 0.0)) throw ParseError("'eta' must be non-negative");

  ModeSpec out{LatticeSpec(n, eta),
               WindowFunctions(parse_vector(doc, "x", n), parse_vector(doc, "y", n),
                               parse_vector(doc, "z", n), parse_vector(doc, "w", n))};
  validate_window(out.window);
  return out;
}

ModeSpec load_mode_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mode spec file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_mode_spec(text);
}

}  // namespace sop
