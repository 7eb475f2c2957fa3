#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <shapeinv/shapeinv.hpp>

namespace fs = std::filesystem;
using namespace shapeinv;

namespace {

enum Exit : int { ok = 0, violation = 1, input_error = 2, refused = 3 };

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  std::vector<std::string> permutation;
  std::string shape;
  std::string composition;
  std::string jump;
  int n = 0;
  int delta = 0;
  std::optional<int> delta_max;
  std::string suite = "all";
  Format format = Format::text;
  std::string cache_dir;
  int workers = 1;
  bool allow_large_n = false;
  bool full_filter = false;
};

std::string joined(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

fs::path cache_root(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("SHAPEINV_CACHE_DIR"); env && *env) return env;
  return "shapeinv-cache";
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string format_blocks(const BlockComposition& c) {
  std::string out = "(";
  for (int b : c.blocks()) out += (out.size() > 1 ? "," : "") + std::to_string(b);
  return out + ")";
}

std::string shape_with_columns(const Partition& shape) {
  return format_shape(shape) + "  columns " + format_shape(conjugate(shape));
}

// ---------------------------------------------------------------------------

int cmd_rs(const RunConfig& cfg) {
  const auto p = parse_permutation(joined(cfg.permutation));
  const auto pair = rs(p);
  const auto shape = pair.insertion.shape();
  const auto inv = inversions(p);
  const auto base = min_inversions(shape);
  const long delta = static_cast<long>(inv) - static_cast<long>(base);
  const auto layered = is_minimal(p);
  switch (cfg.format) {
    case Format::json: {
      Json j = json_of(pair);
      j["permutation"] = json_of(p);
      j["inversions"] = inv;
      j["min_inversions"] = base;
      j["delta"] = delta;
      j["layered_blocks"] = layered ? json_of(*layered) : Json(nullptr);
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "permutation,shape,inversions,delta,layered_blocks\n"
                << format_permutation(p) << ',' << partition_key(shape) << ',' << inv << ','
                << delta << ",\"" << (layered ? format_blocks(*layered) : "") << "\"\n";
      break;
    case Format::text:
      std::cout << "permutation: " << format_permutation(p) << '\n'
                << "shape: " << format_shape(shape) << '\n'
                << "inversions: " << inv << '\n'
                << "delta: " << delta << '\n';
      if (layered) std::cout << "layered blocks: " << format_blocks(*layered) << '\n';
      std::cout << "P:\n" << format_tableau(pair.insertion.rows()) << "Q:\n"
                << format_tableau(pair.recording.rows());
      break;
  }
  return ok;
}

int cmd_minimal(const RunConfig& cfg) {
  const auto shape = parse_shape(cfg.shape);
  const auto all = all_minimal(shape);
  switch (cfg.format) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& m : all) {
        rows.push_back({{"composition", json_of(m.composition)}, {"permutation", json_of(m.permutation)}});
      }
      emit({{"shape", json_of(shape)},
            {"min_inversions", min_inversions(shape)},
            {"count", all.size()},
            {"minimal", std::move(rows)}});
      break;
    }
    case Format::csv:
      std::cout << "composition,permutation\n";
      for (const auto& m : all) {
        std::cout << '"' << format_blocks(m.composition) << "\"," << format_permutation(m.permutation) << '\n';
      }
      break;
    case Format::text:
      std::cout << "shape: " << shape_with_columns(shape) << '\n'
                << "min inversions: " << min_inversions(shape) << '\n'
                << "minimal permutations: " << all.size() << '\n';
      for (const auto& m : all) {
        std::cout << "  " << format_blocks(m.composition) << "  " << format_permutation(m.permutation) << '\n';
      }
      break;
  }
  return ok;
}

int cmd_jumps(const RunConfig& cfg) {
  const auto shape = parse_shape(cfg.shape);
  if (cfg.delta < 0) throw InvalidArgument("--delta must be nonnegative");
  const int lo = cfg.delta_max ? 0 : cfg.delta;
  const int hi = cfg.delta_max ? *cfg.delta_max : cfg.delta;
  const auto cols = conjugate(shape);
  const auto minimal = all_minimal(shape);
  const auto m_count = multinomial(frequency_form(cols).total_multiplicity(),
                                   frequency_form(cols).multiplicities());

  Json out = Json::array();
  if (cfg.format == Format::csv) std::cout << "delta,composition,inner,outer,permutation\n";
  for (int d = lo; d <= hi; ++d) {
    Json listing = Json::array();
    std::size_t total = 0;
    if (cfg.format == Format::text) std::cout << "Δ = " << d << '\n';
    for (const auto& m : minimal) {
      for (const auto& J : enumerate_jumps(m.composition, d)) {
        const auto sigma = apply(J, m.permutation);
        ++total;
        switch (cfg.format) {
          case Format::json: {
            Json j = json_of(J);
            j["permutation"] = json_of(sigma);
            listing.push_back(std::move(j));
            break;
          }
          case Format::csv:
            std::cout << d << ",\"" << format_blocks(m.composition) << "\",\"" << format_jump_side(J.inner()) << "\",\"" << format_jump_side(J.outer())
                      << "\"," << format_permutation(sigma) << '\n';
            break;
          case Format::text:
            std::cout << "  inner " << format_jump_side(J.inner()) << "  outer "
                      << format_jump_side(J.outer()) << "  ->  " << format_permutation(sigma) << '\n';
            break;
        }
      }
    }
    const bool in_regime = cols.length() >= 2 && d < cols.smallest();
    std::optional<BigInt> formula;
    if (in_regime) formula = colored_count(2 * (cols.length() - 1), d) * m_count;
    if (cfg.format == Format::json) {
      out.push_back({{"delta", d},
                     {"count", total},
                     {"formula", formula ? Json(formula->str()) : Json(nullptr)},
                     {"jumps", std::move(listing)}});
    } else if (cfg.format == Format::text) {
      std::cout << "  count: " << total;
      if (formula) std::cout << "  formula: " << *formula;
      std::cout << '\n';
    }
  }
  if (cfg.format == Format::json) emit({{"shape", json_of(shape)}, {"results", std::move(out)}});
  return ok;
}

int cmd_apply(const RunConfig& cfg) {
  auto J = parse_jump(cfg.jump);
  if (!cfg.composition.empty() && !(parse_composition(cfg.composition) == J.composition())) {
    throw InvalidArgument("--composition disagrees with the jump partition's composition");
  }
  const auto pi = minimal_from_composition(J.composition());
  const auto sigma = apply(J, pi);
  const auto shape = shape_of(sigma);
  const long delta = static_cast<long>(inversions(sigma)) - static_cast<long>(min_inversions(shape));
  const bool valid = shape == shape_of(pi);
  switch (cfg.format) {
    case Format::json: {
      Json j = json_of(J);
      j["minimal"] = json_of(pi);
      j["permutation"] = json_of(sigma);
      j["shape"] = json_of(shape);
      j["delta"] = delta;
      j["valid"] = valid;
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "minimal,permutation,shape,delta,valid\n"
                << format_permutation(pi) << ',' << format_permutation(sigma) << ','
                << partition_key(shape) << ',' << delta << ',' << (valid ? "true" : "false") << '\n';
      break;
    case Format::text:
      std::cout << "minimal: " << format_permutation(pi) << '\n'
                << "inner: " << format_jump_side(J.inner()) << '\n'
                << "outer: " << format_jump_side(J.outer()) << '\n'
                << "result: " << format_permutation(sigma) << '\n'
                << "shape: " << format_shape(shape) << '\n'
                << "delta: " << delta << '\n'
                << "valid: " << (valid ? "yes" : "no") << '\n';
      break;
  }
  return ok;
}

int cmd_decompose(const RunConfig& cfg) {
  const auto sigma = parse_permutation(joined(cfg.permutation));
  const auto d = decompose_two_column(sigma);
  switch (cfg.format) {
    case Format::json: {
      Json j = json_of(d.jumps);
      j["permutation"] = json_of(sigma);
      j["minimal"] = json_of(d.minimal);
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "permutation,minimal,inner,outer\n"
                << format_permutation(sigma) << ',' << format_permutation(d.minimal) << ",\""
                << format_jump_side(d.jumps.inner()) << "\",\"" << format_jump_side(d.jumps.outer()) << "\"\n";
      break;
    case Format::text:
      std::cout << "permutation: " << format_permutation(sigma) << '\n'
                << "minimal: " << format_permutation(d.minimal) << '\n'
                << "inner: " << format_jump_side(d.jumps.inner()) << '\n'
                << "outer: " << format_jump_side(d.jumps.outer()) << '\n'
                << "delta: " << d.jumps.size() << '\n';
      break;
  }
  return ok;
}

ShapeTable table_for(const RunConfig& cfg) {
  SweepOptions options{cfg.workers, cfg.allow_large_n};
  return load_or_sweep(cache_root(cfg), cfg.n, options);
}

int cmd_sweep(const RunConfig& cfg) {
  const auto table = table_for(cfg);
  switch (cfg.format) {
    case Format::json: emit(json_of(table)); break;
    case Format::csv: std::cout << csv_of(table); break;
    case Format::text:
      std::cout << "n = " << table.n() << "  total " << table.total() << "  fingerprint " << std::hex
                << table.fingerprint() << std::dec << '\n';
      for (const auto& [key, c] : table.canonical_entries()) {
        std::cout << "  " << format_shape(key.shape) << "  Δ=" << key.delta << "  " << c << '\n';
      }
      break;
  }
  return ok;
}

int cmd_verify(const RunConfig& cfg) {
  const auto& s = cfg.suite;
  const bool all = s == "all";
  std::vector<VerificationReport> reports;
  if (all || s == "structure") {
    check_sweep_guard(cfg.n, cfg.allow_large_n);
  }
  if (all || s != "structure") {
    const auto table = table_for(cfg);
    if (all || s == "minimal") reports.push_back(verify_minimal(table));
    if (all || s == "two_column") reports.push_back(verify_two_column(table));
    if (all || s == "conjecture") reports.push_back(verify_conjecture(table));
  }
  if (all || s == "structure") reports.push_back(structural_audit(cfg.n, cfg.allow_large_n));

  VerificationReport merged{s, cfg.n, {}};
  for (const auto& r : reports) merged.append(r);

  Json j = Json::array();
  for (const auto& r : reports) j.push_back(json_of(r));
  const Json doc{{"n", cfg.n},
                 {"suite", s},
                 {"version", std::string(kVersion)},
                 {"theorem_violations", merged.theorem_violations()},
                 {"reports", j}};
  const auto report_path = cache_root(cfg) / ("report_" + s + "_n" + std::to_string(cfg.n) + ".json");
  write_file(report_path, doc.dump(2) + "\n");

  switch (cfg.format) {
    case Format::json: emit(doc); break;
    case Format::csv:
      std::cout << "suite,check,shape,delta,formula,oracle,status\n";
      for (const auto& r : reports) {
        const auto body = csv_of(r);
        std::cout << body.substr(body.find('\n') + 1);
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        std::cout << "[" << r.suite << "] n = " << r.n << ": " << r.rows.size() << " checks, "
                  << r.theorem_violations() << " theorem violations";
        const auto eq = r.count(CheckStatus::conjecture_equal);
        const auto ce = r.count(CheckStatus::conjecture_counterexample);
        if (eq + ce > 0) std::cout << ", conjecture equal " << eq << ", counterexamples " << ce;
        std::cout << '\n';
        for (const auto& row : r.rows) {
          if (row.status == CheckStatus::pass) continue;
          std::cout << "  " << to_string(row.status) << "  " << row.check << "  " << format_shape(row.shape)
                    << "  Δ=" << row.delta << "  formula " << row.formula << "  oracle " << row.oracle;
          if (!row.note.empty()) std::cout << "  (" << row.note << ")";
          std::cout << '\n';
        }
      }
      std::cout << "report: " << report_path.string() << '\n';
      break;
  }
  return merged.theorem_violations() == 0 ? ok : violation;
}

int cmd_class(const RunConfig& cfg) {
  const auto shape = parse_shape(cfg.shape);
  const auto counts =
      shape_class_counts(shape, cfg.full_filter ? ClassMode::full_filter : ClassMode::knuth_closure);
  const auto cols = conjugate(shape);
  const auto m_count = multinomial(frequency_form(cols).total_multiplicity(),
                                   frequency_form(cols).multiplicities());
  auto formula = [&](long d) -> std::optional<BigInt> {
    if (cols.length() < 2 || d >= cols.smallest()) return std::nullopt;
    return colored_count(2 * (cols.length() - 1), static_cast<int>(d)) * m_count;
  };
  switch (cfg.format) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& [d, c] : counts) {
        if (cfg.delta_max && d > *cfg.delta_max) break;
        const auto f = formula(d);
        rows.push_back({{"delta", d}, {"count", c.str()}, {"formula", f ? Json(f->str()) : Json(nullptr)}});
      }
      emit({{"shape", json_of(shape)}, {"counts", std::move(rows)}});
      break;
    }
    case Format::csv:
      std::cout << "shape,delta,count\n";
      for (const auto& [d, c] : counts) {
        if (cfg.delta_max && d > *cfg.delta_max) break;
        std::cout << partition_key(shape) << ',' << d << ',' << c << '\n';
      }
      break;
    case Format::text:
      std::cout << "shape: " << shape_with_columns(shape) << '\n';
      for (const auto& [d, c] : counts) {
        if (cfg.delta_max && d > *cfg.delta_max) break;
        std::cout << "  Δ=" << d << "  " << c;
        if (const auto f = formula(d)) std::cout << "  formula " << *f;
        std::cout << '\n';
      }
      break;
  }
  return ok;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}},
          CLI::ignore_case));
  sub->add_option("--cache-dir", cfg.cache_dir, "Cache directory (default $SHAPEINV_CACHE_DIR)");
  sub->add_option("--workers", cfg.workers, "Sweep worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--allow-large-n", cfg.allow_large_n, "Permit a full sweep at n = 12");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Shapes, inversions and jump partitions of permutations"};
  app.require_subcommand(1, 1);
  app.footer(std::string("Shape grammar:\n") + std::string(kShapeGrammar) +
             "\n\nExit codes: 0 success, 1 theorem violation, 2 input error, 3 guard or regime refusal.");

  auto* rs_cmd = app.add_subcommand("rs", "RS tableaux, shape, inversions and Δ of a permutation");
  rs_cmd->add_option("permutation", cfg.permutation, "One-line notation")->required();
  add_common(rs_cmd, cfg);

  auto* min_cmd = app.add_subcommand("minimal", "All minimal (layered) permutations of a shape");
  min_cmd->add_option("shape,--shape", cfg.shape, "Shape")->required();
  add_common(min_cmd, cfg);

  auto* jumps_cmd = app.add_subcommand("jumps", "Jump partitions of size Δ and their images");
  jumps_cmd->add_option("shape,--shape", cfg.shape, "Shape")->required();
  jumps_cmd->add_option("delta,--delta", cfg.delta, "Δ")->check(CLI::NonNegativeNumber);
  jumps_cmd->add_option("--delta-max", cfg.delta_max, "List every Δ from 0 to this value")
      ->check(CLI::NonNegativeNumber);
  add_common(jumps_cmd, cfg);

  auto* apply_cmd = app.add_subcommand("apply", "Apply a jump partition to its minimal permutation");
  apply_cmd->add_option("jump,--jump", cfg.jump,
                        R"(JSON {"composition":[..],"inner":[[..],..],"outer":[[..],..]})")
      ->required();
  apply_cmd->add_option("--composition", cfg.composition, "Block composition, e.g. 6,6");
  add_common(apply_cmd, cfg);

  auto* dec_cmd = app.add_subcommand("decompose", "Minimal permutation and jump partition of a two-column σ");
  dec_cmd->add_option("permutation", cfg.permutation, "One-line notation")->required();
  add_common(dec_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Check the counting results against a full sweep");
  verify_cmd->add_option("n,--n", cfg.n, "n")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("suite,--suite", cfg.suite, "Suite")
      ->check(CLI::IsMember({"minimal", "two_column", "conjecture", "structure", "all"}));
  add_common(verify_cmd, cfg);

  auto* sweep_cmd = app.add_subcommand("sweep", "Count S_n by shape and Δ");
  sweep_cmd->add_option("n,--n", cfg.n, "n")->required()->check(CLI::PositiveNumber);
  add_common(sweep_cmd, cfg);

  auto* class_cmd = app.add_subcommand("class", "Counts by Δ within one shape class");
  class_cmd->add_option("shape,--shape", cfg.shape, "Shape")->required();
  class_cmd->add_option("--delta-max", cfg.delta_max, "Largest Δ to print")->check(CLI::NonNegativeNumber);
  class_cmd->add_flag("--full-filter", cfg.full_filter, "Walk S_n instead of the Knuth closure");
  add_common(class_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (rs_cmd->parsed()) return cmd_rs(cfg);
    if (min_cmd->parsed()) return cmd_minimal(cfg);
    if (jumps_cmd->parsed()) return cmd_jumps(cfg);
    if (apply_cmd->parsed()) return cmd_apply(cfg);
    if (dec_cmd->parsed()) return cmd_decompose(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg);
    if (class_cmd->parsed()) return cmd_class(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return refused;
  } catch (const RegimeError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return refused;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return violation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}
