#include "fsa/module_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fsa/errors.hpp"

namespace fsa {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr const char* kSlots[4] = {"A", "B", "C", "D"};

ordered field_json(const Field& field) {
  if (field.is_rationals()) return "rationals";
  ordered out;
  out["prime"] = field.characteristic();
  return out;
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "rationals") return Field::rationals();
    throw Error(ErrorCode::ParseError, "unknown field \"" + s + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("prime") && j["prime"].is_number_unsigned()) {
    return Field::prime(j["prime"].get<std::uint64_t>());
  }
  throw Error(ErrorCode::ParseError, "field must be \"rationals\" or {\"prime\": p}");
}

ordered matrix_json(const ExactMatrix& a) {
  ordered entries = ordered::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a.at(i, j).to_string());
  }
  ordered out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(entries);
  return out;
}

std::size_t size_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, where + ": \"" + key + "\" must be a non-negative integer");
  }
  return j[key].get<std::size_t>();
}

ExactMatrix matrix_from_json(const json& j, const Field& field, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, where + " must be an object");
  const std::size_t rows = size_field(j, "rows", where);
  const std::size_t cols = size_field(j, "cols", where);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw Error(ErrorCode::ParseError, where + ": \"entries\" must be an array");
  }
  const json& entries = j["entries"];
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                where + ": expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries.size()));
  }
  ExactMatrix out(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!entries[k].is_string()) {
      throw Error(ErrorCode::ParseError, where + ": entries must be strings");
    }
    const FieldElement value = FieldElement::parse(field, entries[k].get<std::string>());
    if (!value.is_zero()) out.set(k / cols, k % cols, value);
  }
  return out;
}

ordered module_json(const LambdaModule& m) {
  ordered j;
  j["field"] = field_json(m.field());
  for (int i = 1; i <= 4; ++i) j[kSlots[i - 1]] = matrix_json(m.map(i));
  return j;
}

}  // namespace

std::string serialize_module(const LambdaModule& m) {
  std::ostringstream os;
  os << "{\n  \"field\": " << field_json(m.field()).dump() << ",\n";
  for (int i = 1; i <= 4; ++i) {
    os << "  \"" << kSlots[i - 1] << "\": " << matrix_json(m.map(i)).dump() << ",\n";
  }
  os << "  \"dim\": " << ordered(m.dim_vector().d).dump() << "\n}\n";
  return os.str();
}

std::string serialize_module_compact(const LambdaModule& m) { return module_json(m).dump(); }

LambdaModule parse_module(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "module must be a JSON object");
  if (!j.contains("field")) throw Error(ErrorCode::ParseError, "missing \"field\"");
  const Field field = field_from_json(j["field"]);
  std::array<ExactMatrix, 4> maps{ExactMatrix(field, 0, 0), ExactMatrix(field, 0, 0),
                                   ExactMatrix(field, 0, 0), ExactMatrix(field, 0, 0)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j.contains(kSlots[i])) {
      throw Error(ErrorCode::ParseError, std::string("missing matrix \"") + kSlots[i] + "\"");
    }
    maps[i] = matrix_from_json(j[kSlots[i]], field, kSlots[i]);
  }
  LambdaModule m(maps[0], maps[1], maps[2], maps[3]);
  if (j.contains("dim")) {
    const json& d = j["dim"];
    if (!d.is_array() || d.size() != 5) {
      throw Error(ErrorCode::ParseError, "\"dim\" must be an array of five integers");
    }
    DimVector declared;
    for (std::size_t v = 0; v < 5; ++v) {
      if (!d[v].is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "\"dim\" must be an array of five integers");
      }
      declared[v] = d[v].get<std::size_t>();
    }
    if (!(declared == m.dim_vector())) {
      throw Error(ErrorCode::DimensionMismatch, "\"dim\" is " + declared.to_string() +
                                                    " but the matrices give " +
                                                    m.dim_vector().to_string());
    }
  }
  return m;
}

LambdaModule read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_module(buffer.str());
}

}  // namespace fsa
