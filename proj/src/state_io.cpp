#include "qcorr/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw InputError(origin + ": " + message);
}

double number_at(const json& j, const std::string& origin, const std::string& field) {
  if (!j.is_number()) {
    fail(origin, "field " + field + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

StateFile parse_state_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!doc.is_object()) {
    fail(origin, "top level must be a JSON object");
  }
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (key != "bell_diagonal" && key != "matrix" && key != "label") {
      fail(origin, "unknown field \"" + key + "\"");
    }
  }
  const bool has_bell = doc.contains("bell_diagonal");
  const bool has_matrix = doc.contains("matrix");
  if (has_bell == has_matrix) {
    fail(origin, "exactly one of \"bell_diagonal\" or \"matrix\" must be present");
  }

  StateFile file;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      fail(origin, "field label must be a string");
    }
    file.label = doc["label"].get<std::string>();
  }

  if (has_bell) {
    const json& b = doc["bell_diagonal"];
    if (!b.is_array() || b.size() != 3) {
      fail(origin, "field bell_diagonal must be an array of 3 numbers");
    }
    file.bell_diagonal = BellVector{number_at(b[0], origin, "bell_diagonal[0]"),
                                    number_at(b[1], origin, "bell_diagonal[1]"),
                                    number_at(b[2], origin, "bell_diagonal[2]")};
    return file;
  }

  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) {
    fail(origin, "field matrix must be an array of 4 rows");
  }
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const json& row = rows[i];
    std::ostringstream where;
    where << "matrix[" << i << "]";
    if (!row.is_array() || row.size() != 4) {
      fail(origin, where.str() + " must be an array of 4 [re, im] pairs");
    }
    for (std::size_t j = 0; j < 4; ++j) {
      const json& entry = row[j];
      std::ostringstream cell;
      cell << "matrix[" << i << "][" << j << "]";
      if (!entry.is_array() || entry.size() != 2) {
        fail(origin, cell.str() + " must be a [re, im] pair");
      }
      m(i, j) = Complex(number_at(entry[0], origin, cell.str() + "[0]"),
                        number_at(entry[1], origin, cell.str() + "[1]"));
    }
  }
  file.matrix = m;
  return file;
}

StateFile load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str(), path);
}

TwoQubitState to_state(const StateFile& file) {
  if (file.bell_diagonal) {
    return build_bell_diagonal(*file.bell_diagonal);
  }
  if (file.matrix) {
    return TwoQubitState::from_matrix(*file.matrix);
  }
  throw InputError("state file carries neither a correlation vector nor a matrix");
}

}  // namespace qcorr
