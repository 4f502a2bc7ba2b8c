#include "mdk/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mdk {

namespace {

using json = nlohmann::json;

int parse_offset(const std::string& key) {
  int p = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, p);
  if (first == last || ec != std::errc{} || ptr != last) {
    throw ParseError("diagonal key '" + key + "' is not an integer offset");
  }
  return p;
}

std::size_t read_size(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const auto& v = doc.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + field + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

template <Field F>
MDMatrix<F> build(const json& doc, std::size_t n, std::size_t k) {
  typename MDMatrix<F>::Diagonals diags;
  const auto& body = doc.at("diagonals");
  if (!body.is_object()) throw ParseError("'diagonals' must be an object");
  for (const auto& [key, coords] : body.items()) {
    const int p = parse_offset(key);
    if (!coords.is_array()) throw ParseError("diagonal " + key + " must be an array");
    std::vector<F> values;
    values.reserve(coords.size());
    for (const auto& c : coords) {
      if (!c.is_string()) throw ParseError("diagonal " + key + " entries must be scalar strings");
      values.push_back(F::parse(c.template get<std::string>()));
    }
    if (!diags.emplace(p, DiagVec<F>(std::move(values))).second) {
      throw ParseError("diagonal offset " + std::to_string(p) + " given twice");
    }
  }
  try {
    return MDMatrix<F>(n, k, std::move(diags));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

AnyMatrix parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  const std::size_t n = read_size(doc, "n");
  const std::size_t k = read_size(doc, "k");
  if (!doc.contains("mode") || !doc.at("mode").is_string()) throw ParseError("missing field 'mode'");
  if (!doc.contains("diagonals")) throw ParseError("missing field 'diagonals'");

  const auto mode = doc.at("mode").get<std::string>();
  if (mode == ExactScalar::mode_name) return build<ExactScalar>(doc, n, k);
  if (mode == FloatScalar::mode_name) return build<FloatScalar>(doc, n, k);
  throw ParseError("unknown mode '" + mode + "'");
}

AnyMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

template <Field F>
std::string format_matrix(const MDMatrix<F>& m) {
  json diags = json::object();
  for (const auto& [p, v] : m.diagonals()) {
    json coords = json::array();
    for (const auto& x : v) coords.push_back(x.to_string());
    diags[std::to_string(p)] = std::move(coords);
  }
  json doc = {
      {"n", m.n()},
      {"k", m.k()},
      {"mode", std::string(F::mode_name)},
      {"diagonals", std::move(diags)},
  };
  return doc.dump(2) + "\n";
}

std::string format_matrix(const AnyMatrix& m) {
  return std::visit([](const auto& a) { return format_matrix(a); }, m);
}

void write_matrix(const std::filesystem::path& path, const AnyMatrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << format_matrix(m);
  if (!out) throw Error("failed writing " + path.string());
}

std::string_view mode_of(const AnyMatrix& m) {
  return std::visit([](const auto& a) -> std::string_view {
    return std::decay_t<decltype(a)>::scalar_type::mode_name;
  }, m);
}

template std::string format_matrix(const MDMatrix<ExactScalar>&);
template std::string format_matrix(const MDMatrix<FloatScalar>&);

}  // namespace mdk
