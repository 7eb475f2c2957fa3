#ifndef SHAPEINV_IO_HPP
#define SHAPEINV_IO_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "errors.hpp"
#include "jump.hpp"
#include "minimal.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace shapeinv {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Text parsing

namespace detail {

inline bool is_separator(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',';
}

inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (is_separator(ch)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

inline std::string_view strip_brackets(std::string_view text, std::string_view open,
                                       std::string_view close) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (text.size() >= 2 && text.front() == open[i] && text.back() == close[i]) {
      return trim(text.substr(1, text.size() - 2));
    }
  }
  return text;
}

}  // namespace detail

// One-line notation: integers separated by spaces or commas, optionally in
// brackets. "3 1 2", "3,1,2", "[3, 1, 2]".
inline Permutation parse_permutation(std::string_view text) {
  const auto body = detail::strip_brackets(text, "[(", "])");
  std::vector<int> entries;
  for (const auto& token : detail::split_tokens(body)) {
    const auto v = detail::parse_int(token);
    if (!v) throw InvalidArgument("invalid permutation token '" + token + "'");
    entries.push_back(*v);
  }
  if (entries.empty()) throw InvalidArgument("empty permutation");
  return Permutation(std::move(entries));
}

inline constexpr std::string_view kShapeGrammar =
    "shape := [ '(' ] term { ',' term } [ ')' ]\n"
    "term  := part [ '^' count ]\n"
    "part, count := positive integer\n"
    "Parts must be weakly decreasing after expansion: \"4,3,1\", \"2^6\", \"(3^3,1)\".";

inline Partition parse_shape(std::string_view text) {
  const auto body = detail::strip_brackets(text, "(<[", ")>]");
  std::vector<int> parts;
  for (const auto& token : detail::split_tokens(body)) {
    const auto caret = token.find('^');
    const std::string_view head = std::string_view(token).substr(0, caret);
    const auto part = detail::parse_int(head);
    if (!part || *part <= 0) throw InvalidArgument("invalid shape token '" + token + "'");
    int times = 1;
    if (caret != std::string::npos) {
      const auto count = detail::parse_int(std::string_view(token).substr(caret + 1));
      if (!count || *count <= 0) throw InvalidArgument("invalid shape token '" + token + "'");
      times = *count;
    }
    parts.insert(parts.end(), static_cast<std::size_t>(times), *part);
  }
  if (parts.empty()) throw InvalidArgument("empty shape");
  return Partition(std::move(parts));
}

inline BlockComposition parse_composition(std::string_view text) {
  const auto body = detail::strip_brackets(text, "[(", "])");
  std::vector<int> blocks;
  for (const auto& token : detail::split_tokens(body)) {
    const auto v = detail::parse_int(token);
    if (!v || *v <= 0) throw InvalidArgument("invalid composition token '" + token + "'");
    blocks.push_back(*v);
  }
  if (blocks.empty()) throw InvalidArgument("empty composition");
  return BlockComposition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string format_shape(const Partition& p) {
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int v : p.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string format_tableau(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (int v : row) {
      if (!line.empty()) line += ' ';
      line += std::to_string(v);
    }
    out += line + '\n';
  }
  return out;
}

template <JumpSide Side>
std::string format_jump_side(const JumpSequence<Side>& seq) {
  std::string out = "(";
  bool first = true;
  for (const auto& mu : seq.components()) {
    if (!first) out += ", ";
    first = false;
    out += mu.empty() ? std::string("∅") : format_shape(mu);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// JSON

inline Json json_of(const Partition& p) { return Json(p.vec()); }
inline Json json_of(const Permutation& p) { return Json(p.vec()); }
inline Json json_of(const BlockComposition& c) { return Json(c.vec()); }
inline Json json_of(const Rows& rows) { return Json(rows); }

inline Json json_of(const RSPair& pair) {
  return {{"P", json_of(pair.insertion.rows())},
          {"Q", json_of(pair.recording.rows())},
          {"shape", json_of(pair.insertion.shape())}};
}

template <JumpSide Side>
Json json_of(const JumpSequence<Side>& seq) {
  Json out = Json::array();
  for (const auto& mu : seq.components()) out.push_back(json_of(mu));
  return out;
}

inline Json json_of(const JumpPartition& J) {
  return {{"composition", json_of(J.composition())},
          {"inner", json_of(J.inner())},
          {"outer", json_of(J.outer())},
          {"size", J.size()}};
}

inline JumpPartition jump_from_json(const Json& j) {
  try {
    const BlockComposition c(j.at("composition").get<std::vector<int>>());
    auto read_side = [&](const char* key) {
      std::vector<Partition> comps;
      if (!j.contains(key)) {
        comps.resize(static_cast<std::size_t>(c.count() > 0 ? c.count() - 1 : 0));
        return comps;
      }
      for (const auto& mu : j.at(key)) comps.emplace_back(mu.get<std::vector<int>>());
      return comps;
    };
    return {InnerJumpPartition(c, read_side("inner")), OuterJumpPartition(c, read_side("outer"))};
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed jump partition JSON: ") + e.what());
  }
}

inline JumpPartition parse_jump(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("jump partition is not valid JSON: ") + e.what());
  }
  return jump_from_json(j);
}

inline Json json_of(const ShapeTable& table) {
  Json counts = Json::array();
  for (const auto& [key, c] : table.canonical_entries()) {
    counts.push_back({{"shape", json_of(key.shape)}, {"delta", key.delta}, {"count", c.str()}});
  }
  return {{"n", table.n()},
          {"counts", std::move(counts)},
          {"meta",
           {{"workers", table.meta().workers},
            {"elapsed_seconds", table.meta().elapsed_seconds},
            {"version", table.meta().version}}}};
}

inline ShapeTable table_from_json(const Json& j) {
  try {
    ShapeTable table(j.at("n").get<int>());
    for (const auto& row : j.at("counts")) {
      table.add(Partition(row.at("shape").get<std::vector<int>>()), row.at("delta").get<long>(),
                BigInt(row.at("count").get<std::string>()));
    }
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      table.meta().workers = m.value("workers", 1);
      table.meta().elapsed_seconds = m.value("elapsed_seconds", 0.0);
      table.meta().version = m.value("version", std::string{});
    }
    return table;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed shape table JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw InvalidArgument(std::string("malformed shape table count: ") + e.what());
  }
}

inline std::string csv_of(const ShapeTable& table) {
  std::string out = "shape,delta,count\n";
  for (const auto& [key, c] : table.canonical_entries()) {
    out += partition_key(key.shape) + "," + std::to_string(key.delta) + "," + c.str() + "\n";
  }
  return out;
}

inline Json json_of(const CheckRow& row) {
  Json j{{"check", row.check},
         {"shape", json_of(row.shape)},
         {"delta", row.delta},
         {"formula", row.formula.str()},
         {"oracle", row.oracle.str()},
         {"status", std::string(to_string(row.status))}};
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

inline Json json_of(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(json_of(r));
  return {{"suite", report.suite},
          {"n", report.n},
          {"theorem_violations", report.theorem_violations()},
          {"conjecture_equal", report.count(CheckStatus::conjecture_equal)},
          {"conjecture_counterexamples", report.count(CheckStatus::conjecture_counterexample)},
          {"rows", std::move(rows)}};
}

inline std::string csv_of(const VerificationReport& report) {
  std::string out = "suite,check,shape,delta,formula,oracle,status\n";
  for (const auto& r : report.rows) {
    out += report.suite + "," + r.check + "," + partition_key(r.shape) + "," +
           std::to_string(r.delta) + "," + r.formula.str() + "," + r.oracle.str() + "," +
           std::string(to_string(r.status)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cache

inline std::filesystem::path table_cache_path(const std::filesystem::path& dir, int n) {
  return dir / ("shape_table_n" + std::to_string(n) + ".json");
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void save_table(const std::filesystem::path& dir, const ShapeTable& table) {
  write_file(table_cache_path(dir, table.n()), json_of(table).dump(2) + "\n");
}

// A cached table is reused only when n and the tool version both match and
// the file parses; anything else is treated as a miss.
inline std::optional<ShapeTable> load_cached_table(const std::filesystem::path& dir, int n) {
  const auto text = read_file(table_cache_path(dir, n));
  if (!text) return std::nullopt;
  try {
    auto table = table_from_json(Json::parse(*text));
    if (table.n() != n || table.meta().version != kVersion) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline ShapeTable load_or_sweep(const std::optional<std::filesystem::path>& dir, int n,
                                const SweepOptions& options, bool* reused = nullptr) {
  check_sweep_guard(n, options.allow_large_n);
  if (dir) {
    if (auto cached = load_cached_table(*dir, n)) {
      if (reused) *reused = true;
      return *cached;
    }
  }
  auto table = sweep(n, options);
  if (dir) save_table(*dir, table);
  if (reused) *reused = false;
  return table;
}

}  // namespace shapeinv

#endif  // SHAPEINV_IO_HPP
