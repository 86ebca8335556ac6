#include "ulrich/document.hpp"

#include <array>
#include <sstream>

namespace ulrich {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 10> kKeys{"name", "basis", "gram", "K",    "h",
                                                 "pg",   "q",     "kind", "flags", "provenance"};
constexpr std::array<std::string_view, 4> kFlagKeys{"very_ample", "non_special",
                                                    "h0_2K_minus_h_zero", "h0_h_minus_K_zero"};

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::ValidationError, path + ": " + message, path);
}

Integer read_integer(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  invalid(path, "expected an integer");
}

std::vector<Integer> read_vector(const json& v, const std::string& path) {
  if (!v.is_array()) invalid(path, "expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(read_integer(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const json& require(const json& doc, std::string_view key) {
  auto it = doc.find(std::string(key));
  if (it == doc.end()) invalid(std::string(key), "missing required field");
  return *it;
}

std::string read_string(const json& doc, std::string_view key, std::string fallback) {
  auto it = doc.find(std::string(key));
  if (it == doc.end()) return fallback;
  if (!it->is_string()) invalid(std::string(key), "expected a string");
  return it->get<std::string>();
}

TriState read_flag(const json& flags, std::string_view key) {
  auto it = flags.find(std::string(key));
  if (it == flags.end()) return TriState::Unknown;
  const std::string path = "flags." + std::string(key);
  if (it->is_boolean()) return it->get<bool>() ? TriState::True : TriState::False;
  if (!it->is_string()) invalid(path, "expected \"true\", \"false\" or \"unknown\"");
  auto t = parse_tristate(it->get<std::string>());
  if (!t) invalid(path, "expected \"true\", \"false\" or \"unknown\"");
  return *t;
}

int read_small(const json& doc, std::string_view key) {
  const Integer v = read_integer(require(doc, key), std::string(key));
  if (v < 0 || v > 1'000'000) invalid(std::string(key), "expected a non-negative integer");
  return v.convert_to<int>();
}

std::string number_list(const DivisorClass& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += d[i].str();
  }
  return s + "]";
}

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

}  // namespace

PolarizedSurface surface_from_json(const json& doc) {
  if (!doc.is_object()) invalid("$", "expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (auto k : kKeys) known = known || it.key() == k;
    if (!known) invalid(it.key(), "unknown field");
  }

  const json& basis_json = require(doc, "basis");
  if (!basis_json.is_array()) invalid("basis", "expected an array of strings");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < basis_json.size(); ++i) {
    if (!basis_json[i].is_string()) invalid("basis[" + std::to_string(i) + "]", "expected a string");
    basis.push_back(basis_json[i].get<std::string>());
  }

  const json& gram_json = require(doc, "gram");
  if (!gram_json.is_array()) invalid("gram", "expected an array of rows");
  IntMatrix gram;
  for (std::size_t i = 0; i < gram_json.size(); ++i)
    gram.push_back(read_vector(gram_json[i], "gram[" + std::to_string(i) + "]"));

  DivisorClass K(read_vector(require(doc, "K"), "K"));
  DivisorClass h(read_vector(require(doc, "h"), "h"));
  const int pg = read_small(doc, "pg");
  const int q = read_small(doc, "q");

  SurfaceKind kind = kind::Abstract{};
  if (auto it = doc.find("kind"); it != doc.end()) {
    if (!it->is_string()) invalid("kind", "expected a string");
    try {
      kind = parse_kind(it->get<std::string>());
    } catch (const Error& e) {
      invalid("kind", e.what());
    }
  }

  SurfaceFlags flags;
  if (auto it = doc.find("flags"); it != doc.end()) {
    if (!it->is_object()) invalid("flags", "expected an object");
    for (auto f = it->begin(); f != it->end(); ++f) {
      bool known = false;
      for (auto k : kFlagKeys) known = known || f.key() == k;
      if (!known) invalid("flags." + f.key(), "unknown flag");
    }
    flags.very_ample = read_flag(*it, "very_ample");
    flags.non_special = read_flag(*it, "non_special");
    flags.h0_2K_minus_h_zero = read_flag(*it, "h0_2K_minus_h_zero");
    flags.h0_h_minus_K_zero = read_flag(*it, "h0_h_minus_K_zero");
  }

  try {
    auto lattice = make_lattice(std::move(gram), std::move(K), std::move(basis));
    return PolarizedSurface(std::move(lattice), std::move(h), pg, q, std::move(kind), flags,
                            read_string(doc, "name", ""), read_string(doc, "provenance", ""));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    const std::string path = e.path().empty() ? "$" : e.path();
    throw Error(ErrorCode::ValidationError,
                path + ": " + std::string(to_string(e.code())) + ": " + e.what(), path);
  }
}

PolarizedSurface parse_surface(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what(), "$");
  }
  return surface_from_json(doc);
}

ordered_json surface_to_json(const PolarizedSurface& s) {
  // Round-trip through the canonical text keeps one source of truth for the
  // number formatting.
  return ordered_json::parse(serialize_surface(s));
}

std::string serialize_surface(const PolarizedSurface& s) {
  const auto& lat = s.lattice();
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << quoted(s.name()) << ",\n";
  os << "  \"basis\": [";
  for (std::size_t i = 0; i < lat.rank(); ++i) os << (i ? ", " : "") << quoted(lat.labels()[i]);
  os << "],\n";
  os << "  \"gram\": [\n";
  for (std::size_t i = 0; i < lat.rank(); ++i)
    os << "    " << number_list(DivisorClass(lat.gram()[i])) << (i + 1 < lat.rank() ? "," : "")
       << "\n";
  os << "  ],\n";
  os << "  \"K\": " << number_list(lat.canonical()) << ",\n";
  os << "  \"h\": " << number_list(s.h()) << ",\n";
  os << "  \"pg\": " << s.pg() << ",\n";
  os << "  \"q\": " << s.q() << ",\n";
  os << "  \"kind\": " << quoted(to_string(s.kind())) << ",\n";
  const auto& f = s.flags();
  const std::array<TriState, 4> values{f.very_ample, f.non_special, f.h0_2K_minus_h_zero,
                                       f.h0_h_minus_K_zero};
  os << "  \"flags\": {";
  for (std::size_t i = 0; i < kFlagKeys.size(); ++i)
    os << (i ? ", " : "") << quoted(kFlagKeys[i]) << ": " << quoted(to_string(values[i]));
  os << "},\n";
  os << "  \"provenance\": " << quoted(s.provenance()) << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace ulrich
