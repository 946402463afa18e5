#include "pgn/system_io.hpp"

#include <json.hpp>

#include "pgn/errors.hpp"

namespace pgn {

namespace {

using OrderedJson = nlohmann::ordered_json;

Rational rational_field(const OrderedJson& value, const std::string& where) {
  if (!value.is_string()) {
    throw ParseError(where + ": rationals are encoded as strings");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& error) {
    throw ParseError(where + ": " + error.what());
  }
}

OrderedJson parse_document(const std::string& text) {
  try {
    return OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParseError(std::string("document is not valid JSON: ") + error.what());
  }
}

OrderedJson path_to_json(const PLPath& path) {
  OrderedJson doc;
  doc["n"] = path.dimension();
  OrderedJson breakpoints = OrderedJson::array();
  for (std::size_t i = 0; i < path.abscissae().size(); ++i) {
    OrderedJson record;
    record["q"] = to_string(path.abscissae()[i]);
    OrderedJson value = OrderedJson::array();
    for (Eigen::Index j = 0; j < path.dimension(); ++j) {
      value.push_back(to_string(path.values()[i](j)));
    }
    record["value"] = std::move(value);
    breakpoints.push_back(std::move(record));
  }
  doc["breakpoints"] = std::move(breakpoints);
  return doc;
}

}  // namespace

ParsedSystem parse_system(const std::string& text) {
  const OrderedJson doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("breakpoints")) {
    throw ParseError("system document needs fields 'n' and 'breakpoints'");
  }
  if (!doc["n"].is_number_integer()) {
    throw ParseError("field 'n' must be an integer");
  }
  const Eigen::Index n = doc["n"].get<Eigen::Index>();
  if (!doc["breakpoints"].is_array() || doc["breakpoints"].size() < 2) {
    throw ParseError("field 'breakpoints' must list at least two records");
  }
  std::vector<Rational> abscissae;
  std::vector<RationalVector> values;
  std::size_t index = 0;
  for (const OrderedJson& record : doc["breakpoints"]) {
    const std::string where = "breakpoints[" + std::to_string(index) + "]";
    if (!record.is_object() || !record.contains("q") ||
        !record.contains("value")) {
      throw ParseError(where + ": record needs fields 'q' and 'value'");
    }
    abscissae.push_back(rational_field(record["q"], where + ".q"));
    if (!record["value"].is_array() ||
        static_cast<Eigen::Index>(record["value"].size()) != n) {
      throw ParseError(where + ".value: expected " + std::to_string(n) +
                       " entries");
    }
    RationalVector v(n);
    Eigen::Index j = 0;
    for (const OrderedJson& entry : record["value"]) {
      v(j) = rational_field(entry, where + ".value[" + std::to_string(j) + "]");
      ++j;
    }
    values.push_back(std::move(v));
    ++index;
  }
  std::optional<Rational> ratio;
  if (doc.contains("self_similar_ratio")) {
    ratio = rational_field(doc["self_similar_ratio"], "self_similar_ratio");
  }
  try {
    return ParsedSystem{PLPath(n, std::move(abscissae), std::move(values)),
                        std::move(ratio)};
  } catch (const Error& error) {
    throw ParseError(std::string("breakpoints do not form a path: ") +
                     error.what());
  }
}

std::string emit_system(const PLPath& path) {
  return path_to_json(path).dump(2) + "\n";
}

std::string emit_system(const SelfSimilarSystem& system) {
  OrderedJson doc = path_to_json(system.base());
  doc["self_similar_ratio"] = to_string(system.ratio());
  return doc.dump(2) + "\n";
}

LinearMap parse_linear_map(const std::string& text) {
  const OrderedJson doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") ||
      !doc.contains("rows")) {
    throw ParseError("map document needs fields 'm', 'n' and 'rows'");
  }
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer()) {
    throw ParseError("fields 'm' and 'n' must be integers");
  }
  const Eigen::Index m = doc["m"].get<Eigen::Index>();
  const Eigen::Index n = doc["n"].get<Eigen::Index>();
  if (!doc["rows"].is_array() ||
      static_cast<Eigen::Index>(doc["rows"].size()) != m) {
    throw ParseError("field 'rows' must list exactly m rows");
  }
  RationalMatrix rows(m, n);
  Eigen::Index i = 0;
  for (const OrderedJson& row : doc["rows"]) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(where + ": expected " + std::to_string(n) + " entries");
    }
    Eigen::Index j = 0;
    for (const OrderedJson& entry : row) {
      rows(i, j) = rational_field(entry, where + "[" + std::to_string(j) + "]");
      ++j;
    }
    ++i;
  }
  try {
    return LinearMap(std::move(rows));
  } catch (const Error& error) {
    throw ParseError(std::string("rows do not form a linear map: ") +
                     error.what());
  }
}

std::string emit_linear_map(const LinearMap& map) {
  OrderedJson doc;
  doc["m"] = map.output_dimension();
  doc["n"] = map.input_dimension();
  OrderedJson rows = OrderedJson::array();
  for (Eigen::Index i = 0; i < map.output_dimension(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (Eigen::Index j = 0; j < map.input_dimension(); ++j) {
      row.push_back(to_string(map.rows()(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace pgn
