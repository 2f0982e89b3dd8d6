#include "csnorm/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csnorm/errors.hpp"

namespace csnorm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Collects structural problems so a bad document reports every field at once.
struct FieldErrors {
  std::vector<std::string> problems;

  void add(const std::string& where, const std::string& what) {
    problems.push_back(where + ": " + what);
  }
  void raise_if_any(const std::string& origin) const {
    if (problems.empty()) return;
    std::string message = "malformed model document " + origin + ":";
    for (const auto& p : problems) message += "\n  - " + p;
    throw InputError("parse_error", message);
  }
};

std::optional<Slope> read_slope(const json& value, const std::string& where, FieldErrors& errs) {
  if (!value.is_string()) {
    errs.add(where, "slopes must be strings like \"37/2\" or \"16\"");
    return std::nullopt;
  }
  try {
    return Slope::parse(value.get<std::string>());
  } catch (const InputError& e) {
    errs.add(where, e.what());
    return std::nullopt;
  }
}

std::optional<Rat> read_rational(const json& value, const std::string& where, FieldErrors& errs) {
  if (value.is_number_integer()) {
    return Rat(static_cast<long>(value.get<long long>()));
  }
  if (value.is_number_float()) {
    errs.add(where, "floating point is not allowed; write rationals as strings \"p/q\"");
    return std::nullopt;
  }
  if (!value.is_string()) {
    errs.add(where, "rationals must be strings \"p/q\" (or integers)");
    return std::nullopt;
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InputError& e) {
    errs.add(where, e.what());
    return std::nullopt;
  }
}

std::optional<Int> read_integer(const json& value, const std::string& where, FieldErrors& errs) {
  if (value.is_number_integer()) {
    return Int(static_cast<long>(value.get<long long>()));
  }
  if (value.is_string()) {
    try {
      return parse_int(value.get<std::string>());
    } catch (const InputError& e) {
      errs.add(where, e.what());
      return std::nullopt;
    }
  }
  errs.add(where, "expected an integer");
  return std::nullopt;
}

void reject_unknown_keys(const json& object, const std::string& where,
                         std::initializer_list<const char*> known, FieldErrors& errs) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) errs.add(where, "unknown field \"" + key + "\"");
  }
}

}  // namespace

NormModel load_model(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("parse_error", std::string("cannot parse ") + origin + ": " + e.what());
  }

  FieldErrors errs;
  if (!doc.is_object()) {
    errs.add("document", "top level must be a JSON object");
    errs.raise_if_any(origin);
  }
  reject_unknown_keys(doc, "document",
                      {"name", "hyperbolic", "h1_z2_is_z2", "ideal_slopes", "fibre_slopes",
                       "exceptional"},
                      errs);

  std::string name;
  if (!doc.contains("name") || !doc["name"].is_string()) {
    errs.add("name", "required string field");
  } else {
    name = doc["name"].get<std::string>();
  }

  bool hyperbolic = false, h1 = false;
  for (auto [key, target] : {std::pair<const char*, bool*>{"hyperbolic", &hyperbolic},
                             std::pair<const char*, bool*>{"h1_z2_is_z2", &h1}}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_boolean()) {
      errs.add(key, "must be a boolean");
    } else {
      *target = doc[key].get<bool>();
    }
  }

  std::vector<IdealSlopeDatum> ideal;
  if (!doc.contains("ideal_slopes") || !doc["ideal_slopes"].is_array()) {
    errs.add("ideal_slopes", "required array field");
  } else {
    std::size_t index = 0;
    for (const auto& entry : doc["ideal_slopes"]) {
      const std::string where = "ideal_slopes[" + std::to_string(index++) + "]";
      if (!entry.is_object()) {
        errs.add(where, "entries must be objects { \"slope\": ..., \"weight\": ... }");
        continue;
      }
      reject_unknown_keys(entry, where, {"slope", "weight"}, errs);
      if (!entry.contains("slope") || !entry.contains("weight")) {
        errs.add(where, "needs both \"slope\" and \"weight\"");
        continue;
      }
      auto slope = read_slope(entry["slope"], where + ".slope", errs);
      auto weight = read_rational(entry["weight"], where + ".weight", errs);
      if (slope && weight) ideal.push_back({*slope, *weight});
    }
  }

  std::vector<Slope> fibre;
  if (doc.contains("fibre_slopes")) {
    if (!doc["fibre_slopes"].is_array()) {
      errs.add("fibre_slopes", "must be an array of slope strings");
    } else {
      std::size_t index = 0;
      for (const auto& entry : doc["fibre_slopes"]) {
        auto slope = read_slope(entry, "fibre_slopes[" + std::to_string(index++) + "]", errs);
        if (slope) fibre.push_back(*slope);
      }
    }
  }

  std::vector<ExceptionalSlope> exceptional;
  if (doc.contains("exceptional")) {
    if (!doc["exceptional"].is_array()) {
      errs.add("exceptional", "must be an array");
    } else {
      std::size_t index = 0;
      for (const auto& entry : doc["exceptional"]) {
        const std::string where = "exceptional[" + std::to_string(index++) + "]";
        if (!entry.is_object()) {
          errs.add(where, "entries must be objects");
          continue;
        }
        reject_unknown_keys(entry, where, {"slope", "kind", "finite_type", "A", "strict"}, errs);
        if (!entry.contains("slope") || !entry.contains("kind") || !entry["kind"].is_string()) {
          errs.add(where, "needs \"slope\" and a string \"kind\"");
          continue;
        }
        auto slope = read_slope(entry["slope"], where + ".slope", errs);
        if (!slope) continue;
        bool strict = false;
        if (entry.contains("strict")) {
          if (!entry["strict"].is_boolean()) {
            errs.add(where + ".strict", "must be a boolean");
          } else {
            strict = entry["strict"].get<bool>();
          }
        }
        const std::string kind = entry["kind"].get<std::string>();
        if (kind == "cyclic") {
          exceptional.push_back(ExceptionalSlope::cyclic(*slope, strict));
        } else if (kind == "finite") {
          if (!entry.contains("finite_type") || !entry["finite_type"].is_string()) {
            errs.add(where, "finite kind needs a string \"finite_type\"");
            continue;
          }
          try {
            exceptional.push_back(ExceptionalSlope::finite(
                *slope, parse_finite_type(entry["finite_type"].get<std::string>()), strict));
          } catch (const InputError& e) {
            errs.add(where + ".finite_type", e.what());
          }
        } else if (kind == "seifert") {
          if (!entry.contains("A")) {
            errs.add(where, "seifert kind needs the character count \"A\"");
            continue;
          }
          auto count = read_integer(entry["A"], where + ".A", errs);
          if (count) exceptional.push_back(ExceptionalSlope::seifert(*slope, *count, strict));
        } else {
          errs.add(where + ".kind", "must be \"cyclic\", \"finite\" or \"seifert\"");
        }
      }
    }
  }

  errs.raise_if_any(origin);
  return NormModel(name, hyperbolic, h1, std::move(ideal), std::move(fibre),
                   std::move(exceptional));
}

NormModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("parse_error", "cannot open model file \"" + path + "\"");
  }
  return load_model(in, "\"" + path + "\"");
}

void save_model(const NormModel& model, std::ostream& out) {
  ordered_json doc;
  doc["name"] = model.name();
  doc["hyperbolic"] = model.hyperbolic();
  doc["h1_z2_is_z2"] = model.h1_z2_is_z2();
  doc["ideal_slopes"] = ordered_json::array();
  for (const auto& datum : model.ideal_slopes()) {
    doc["ideal_slopes"].push_back(
        {{"slope", datum.boundary_slope.str()}, {"weight", rational_str(datum.weight)}});
  }
  doc["fibre_slopes"] = ordered_json::array();
  for (const auto& slope : model.fibre_slopes()) doc["fibre_slopes"].push_back(slope.str());
  doc["exceptional"] = ordered_json::array();
  for (const auto& exc : model.exceptional_slopes()) {
    ordered_json entry{{"slope", exc.slope.str()}, {"kind", kind_str(exc.kind)}};
    if (exc.finite_type) entry["finite_type"] = finite_type_str(*exc.finite_type);
    if (exc.seifert_count) {
      if (exc.seifert_count->fits_slong_p()) {
        entry["A"] = exc.seifert_count->get_si();
      } else {
        entry["A"] = exc.seifert_count->get_str();
      }
    }
    entry["strict"] = exc.is_strict_boundary;
    doc["exceptional"].push_back(std::move(entry));
  }
  out << doc.dump(2) << "\n";
}

void save_model_file(const NormModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("parse_error", "cannot write model file \"" + path + "\"");
  }
  save_model(model, out);
}

std::string save_model_text(const NormModel& model) {
  std::ostringstream out;
  save_model(model, out);
  return out.str();
}

}  // namespace csnorm
