#include <json.hpp>

#include "repgrowth/character_table.hpp"
#include "repgrowth/error.hpp"

namespace repgrowth {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorCode::Schema, "table schema violation at " + where + ": " + what);
}

mpz_class parse_big_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? mpz_class(j.get<std::uint64_t>()) : mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) schema(where, "expected an integer string");
  const auto& s = j.get_ref<const std::string&>();
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) schema(where, "\"" + s + "\" is not an integer");
  return v;
}

mpq_class parse_rational(const std::string& s, const std::string& where) {
  mpq_class q;
  if (s.empty() || s.find_first_of(" \t") != std::string::npos || q.set_str(s, 10) != 0 || q.get_den() == 0)
    schema(where, "\"" + s + "\" is not a rational a/b");
  q.canonicalize();
  return q;
}

Cyclotomic parse_cyclotomic(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Cyclotomic(parse_big_int(j, where));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() < 3 || s.compare(0, 2, "q(") != 0 || s.back() != ')') schema(where, "rational strings look like \"q(a/b)\"");
    return Cyclotomic(parse_rational(s.substr(2, s.size() - 3), where));
  }
  if (!j.is_object()) schema(where, "expected an integer, \"q(a/b)\" or {\"conductor\", \"coeffs\"}");
  if (!j.contains("conductor") || !j.contains("coeffs")) schema(where, "cyclotomic object needs \"conductor\" and \"coeffs\"");
  for (const auto& [key, _] : j.items())
    if (key != "conductor" && key != "coeffs") schema(where, "unexpected key \"" + key + "\"");
  const json& n = j["conductor"];
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) schema(where + ".conductor", "expected a positive integer");
  if (n.get<std::int64_t>() > static_cast<std::int64_t>(kMaxConductor))
    fail(ErrorCode::Limit, where + ".conductor exceeds the supported maximum");
  const json& coeffs = j["coeffs"];
  if (!coeffs.is_object()) schema(where + ".coeffs", "expected an object");
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (const auto& [key, value] : coeffs.items()) {
    const std::string at = where + ".coeffs." + key;
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema(at, "exponent must be an integer");
    }
    if (value.is_number_integer())
      terms.emplace_back(k, mpq_class(parse_big_int(value, at)));
    else if (value.is_string())
      terms.emplace_back(k, parse_rational(value.get<std::string>(), at));
    else
      schema(at, "coefficient must be a string \"a/b\"");
  }
  return Cyclotomic::from_terms(static_cast<std::uint32_t>(n.get<std::int64_t>()), terms);
}

json emit_cyclotomic(const Cyclotomic& v) {
  if (v.is_rational()) {
    const mpq_class q = v.to_rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(static_cast<std::int64_t>(q.get_num().get_si()));
    return json("q(" + q.get_str() + ")");
  }
  json coeffs = json::object();
  for (const auto& [k, c] : v.coeffs()) coeffs[std::to_string(k)] = c.get_str();
  return json{{"conductor", v.conductor()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

CharacterTablePtr load_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  for (const char* key : {"group", "order", "classes", "characters"})
    if (!doc.contains(key)) schema("$", std::string("missing key \"") + key + "\"");
  if (!doc["group"].is_string()) schema("$.group", "expected a string");
  const mpz_class order = parse_big_int(doc["order"], "$.order");

  const json& cls = doc["classes"];
  if (!cls.is_array()) schema("$.classes", "expected an array");
  if (cls.empty()) schema("$.classes", "classes list is empty");
  std::vector<ConjugacyClass> classes;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const std::string at = "$.classes[" + std::to_string(c) + "]";
    if (!cls[c].is_object() || !cls[c].contains("size")) schema(at, "expected {\"size\", \"label\"}");
    std::string label = "C" + std::to_string(c);
    if (cls[c].contains("label")) {
      if (!cls[c]["label"].is_string()) schema(at + ".label", "expected a string");
      label = cls[c]["label"].get<std::string>();
    }
    classes.push_back({parse_big_int(cls[c]["size"], at + ".size"), std::move(label)});
  }

  const json& chars = doc["characters"];
  if (!chars.is_array()) schema("$.characters", "expected an array of rows");
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::string at = "$.characters[" + std::to_string(i) + "]";
    if (!chars[i].is_array()) schema(at, "expected an array");
    std::vector<Cyclotomic> row;
    for (std::size_t c = 0; c < chars[i].size(); ++c)
      row.push_back(parse_cyclotomic(chars[i][c], at + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return std::make_shared<const CharacterTable>(doc["group"].get<std::string>(), order, std::move(classes),
                                                std::move(rows));
}

std::string table_to_json(const CharacterTable& table) {
  json classes = json::array();
  for (const auto& c : table.classes()) classes.push_back({{"size", c.size.get_str()}, {"label", c.label}});
  json rows = json::array();
  for (const auto& row : table.values()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(emit_cyclotomic(v));
    rows.push_back(std::move(r));
  }
  json doc{{"group", table.name()}, {"order", table.order().get_str()}, {"classes", std::move(classes)},
           {"characters", std::move(rows)}};
  return doc.dump(1) + "\n";
}

}  // namespace repgrowth
