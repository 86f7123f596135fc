#ifndef HYBRIDFIB_CLI_HPP
#define HYBRIDFIB_CLI_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hybrid/hybrid.hpp"
#include "hybrid/json_io.hpp"

namespace hybridfib {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct SeqOptions {
  std::string p = "1";
  std::string q = "1";
  std::string a = "0";
  std::string b = "1";
  std::int64_t from = 0;
  std::int64_t to = 10;
  std::string kind = "hybrid";
  std::string seq = "horadam";
  std::int64_t terms = 16;
};

struct CliConfig {
  std::string format = "json";
  SeqOptions seq;
  std::string z;
  std::string suite = "all";
  bool audit = false;
  std::string grid_path;
};

namespace detail {

using hybrid::io::Json;

inline hybrid::Integer parse_int_flag(const std::string& text, const char* flag) {
  try {
    const auto r = hybrid::Rational::parse(text);
    if (r.is_integer()) return r.numerator();
  } catch (const hybrid::ParseError&) {
  }
  throw hybrid::ParseError(std::string("--") + flag + " expects an integer, got '" + text + "'");
}

inline hybrid::HoradamParams params_from(const SeqOptions& o) {
  return {parse_int_flag(o.p, "p"), parse_int_flag(o.q, "q"), parse_int_flag(o.a, "a"), parse_int_flag(o.b, "b")};
}

inline hybrid::SeqKind seq_kind_from(const std::string& name) {
  if (name == "fib") return hybrid::SeqKind::fib;
  if (name == "lucas") return hybrid::SeqKind::lucas;
  return hybrid::SeqKind::horadam;
}

inline void csv_hybrid(std::ostream& out, const hybrid::HybridNumber<hybrid::Rational>& z) {
  out << z.scalar << ',' << z.i << ',' << z.eps << ',' << z.h;
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const auto table = hybrid::basis_table();
  if (cfg.format == "text") {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"×"});
    for (const auto col : hybrid::kBasis) cells[0].emplace_back(hybrid::basis_name(col));
    for (const auto row : hybrid::kBasis) {
      std::vector<std::string> line{std::string(hybrid::basis_name(row))};
      for (const auto col : hybrid::kBasis) {
        line.push_back(hybrid::format_unit_product(table[static_cast<int>(row)][static_cast<int>(col)]));
      }
      cells.push_back(std::move(line));
    }
    // Width in code points; ε and × are two-byte UTF-8.
    auto width = [](const std::string& s) {
      return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    };
    std::size_t col_width = 0;
    for (const auto& line : cells) {
      for (const auto& cell : line) col_width = std::max(col_width, width(cell));
    }
    for (const auto& line : cells) {
      std::string rendered;
      for (std::size_t c = 0; c < line.size(); ++c) {
        rendered += line[c];
        if (c + 1 < line.size()) rendered += std::string(col_width + 2 - width(line[c]), ' ');
      }
      out << rendered << '\n';
    }
    return kExitOk;
  }
  if (cfg.format == "csv") out << "row,col,cell,s,i,e,h\n";
  for (const auto row : hybrid::kBasis) {
    for (const auto col : hybrid::kBasis) {
      const auto& cell = table[static_cast<int>(row)][static_cast<int>(col)];
      const auto product = hybrid::transform(cell, [](const hybrid::Integer& v) { return hybrid::Rational(v); });
      const std::string text = hybrid::format_unit_product(cell);
      if (cfg.format == "csv") {
        out << hybrid::basis_name(row) << ',' << hybrid::basis_name(col) << ',' << text << ',';
        csv_hybrid(out, product);
        out << '\n';
      } else {
        Json j;
        j["row"] = std::string(hybrid::basis_name(row));
        j["col"] = std::string(hybrid::basis_name(col));
        j["cell"] = text;
        j["product"] = hybrid::io::to_json(product);
        out << j.dump() << '\n';
      }
    }
  }
  return kExitOk;
}

inline int cmd_seq(const CliConfig& cfg, bool binet, std::ostream& out, std::ostream& err) {
  const auto& o = cfg.seq;
  const auto params = params_from(o);
  params.validate();
  if (o.from > o.to) throw CLI::ValidationError("--from must not exceed --to");
  const auto kind = seq_kind_from(o.seq);
  const auto eff = hybrid::effective_params(params, kind);
  const bool scalar = o.kind == "scalar";

  hybrid::SeqCache cache(eff);
  std::optional<hybrid::BinetContext> ctx;
  if (binet) ctx = hybrid::make_context(eff);

  if (cfg.format == "csv") out << (scalar ? "n,value\n" : "n,s,i,e,h\n");
  bool diverged = false;
  for (std::int64_t n = o.from; n <= o.to; ++n) {
    const auto recurrence = cache.hybrid(n);
    hybrid::HybridNumber<hybrid::Rational> value = recurrence;
    if (binet) {
      try {
        value = hybrid::binet_horadam(*ctx, n);
      } catch (const hybrid::IrrationalResidue& e) {
        err << "binet: n=" << n << ": " << e.what() << '\n';
        diverged = true;
        continue;
      }
    }
    const bool agrees = value == recurrence;
    diverged = diverged || !agrees;
    if (cfg.format == "csv") {
      out << n << ',';
      if (scalar) {
        out << value.scalar;
      } else {
        csv_hybrid(out, value);
      }
      out << '\n';
      continue;
    }
    Json j;
    j["n"] = n;
    if (scalar) {
      j["value"] = hybrid::io::to_json(value.scalar);
    } else {
      j["hybrid"] = hybrid::io::to_json(value);
    }
    if (binet) {
      j["method"] = "binet";
      if (!agrees) j["recurrence"] = scalar ? Json(recurrence.scalar.to_string()) : hybrid::io::to_json(recurrence);
    }
    out << j.dump() << '\n';
  }
  if (diverged) {
    err << "binet: closed form disagrees with the recurrence\n";
    return kExitFailure;
  }
  return kExitOk;
}

inline hybrid::HybridNumber<hybrid::Rational> parse_hybrid_literal(const std::string& text) {
  std::vector<hybrid::Rational> parts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c) != 0; }), tok.end());
    parts.push_back(hybrid::Rational::parse(tok));
  }
  if (parts.size() != 4) {
    throw hybrid::ParseError("expected four comma-separated rationals, got '" + text + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

inline int cmd_char(const CliConfig& cfg, std::ostream& out) {
  const auto z = parse_hybrid_literal(cfg.z);
  const auto c = hybrid::character(z);
  const auto nrm = hybrid::norm(z);
  if (cfg.format == "csv") {
    out << "character,norm_value,norm_class\n" << c << ',' << Json(nrm.value).dump() << ',' << hybrid::to_string(nrm.kind)
        << '\n';
    return kExitOk;
  }
  Json j;
  j["character"] = hybrid::io::to_json(c);
  j["norm_value"] = nrm.value;
  j["norm_class"] = std::string(hybrid::to_string(nrm.kind));
  out << j.dump() << '\n';
  return kExitOk;
}

inline int cmd_expand(const CliConfig& cfg, std::ostream& out) {
  const auto params = hybrid::effective_params(params_from(cfg.seq), seq_kind_from(cfg.seq.seq));
  params.validate();
  if (cfg.seq.terms < 0) throw CLI::ValidationError("--terms must be >= 0");
  const auto report = hybrid::check_expansion(params, cfg.seq.terms);
  if (cfg.format == "csv") out << "r,s,i,e,h,matches_seq\n";
  for (const auto& e : report.entries) {
    if (cfg.format == "csv") {
      out << e.r << ',';
      csv_hybrid(out, e.coeff);
      out << ',' << (e.matches() ? "true" : "false") << '\n';
      continue;
    }
    Json j;
    j["r"] = e.r;
    j["coeff"] = hybrid::io::to_json(e.coeff);
    j["matches_seq"] = e.matches();
    out << j.dump() << '\n';
  }
  return report.all_match() ? kExitOk : kExitFailure;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const auto grid = cfg.grid_path.empty() ? hybrid::GridConfig{} : hybrid::GridConfig::load(cfg.grid_path);
  grid.validate();
  const auto suite = hybrid::run_suite(grid, cfg.suite);
  if (cfg.format == "csv") {
    out << "identity,p,q,a,b,indices,extended_domain,printed_pass,verdict,pass\n";
    for (const auto& r : suite.reports) {
      const auto& c = r.identity_case;
      std::string idx;
      for (const auto& [name, v] : c.indices) idx += (idx.empty() ? "" : ";") + name + "=" + std::to_string(v);
      out << c.name << ',' << c.params.p << ',' << c.params.q << ',' << c.params.a << ',' << c.params.b << ',' << idx
          << ',' << (c.extended_domain ? "true" : "false") << ',' << (r.printed_pass() ? "true" : "false") << ','
          << hybrid::to_string(r.verdict()) << ',' << (r.accepted() ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& r : suite.reports) out << hybrid::io::to_json(r, cfg.audit).dump() << '\n';
    out << hybrid::io::summary_json(suite).dump() << '\n';
  }
  return suite.success() ? kExitOk : kExitFailure;
}

inline void add_seq_flags(CLI::App* cmd, SeqOptions& o, bool range) {
  cmd->add_option("--p", o.p, "recurrence coefficient p")->capture_default_str();
  cmd->add_option("--q", o.q, "recurrence coefficient q (nonzero)")->capture_default_str();
  cmd->add_option("--a", o.a, "seed J_0")->capture_default_str();
  cmd->add_option("--b", o.b, "seed J_1")->capture_default_str();
  cmd->add_option("--seq", o.seq, "sequence family")
      ->check(CLI::IsMember({"fib", "lucas", "horadam"}))
      ->capture_default_str();
  if (range) {
    cmd->add_option("--from", o.from, "first index")->capture_default_str();
    cmd->add_option("--to", o.to, "last index")->capture_default_str();
    cmd->add_option("--kind", o.kind, "scalar terms or hybrid blocks")
        ->check(CLI::IsMember({"scalar", "hybrid"}))
        ->capture_default_str();
  }
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hybrid Fibonacci/Lucas/Horadam arithmetic and identity verification", "hybridfib"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* table = app.add_subcommand("table", "print the unit multiplication table");
  add_format(table, {"text", "json", "csv"});

  auto* seq = app.add_subcommand("seq", "sequence terms from the recurrence");
  detail::add_seq_flags(seq, cfg.seq, true);
  add_format(seq, {"json", "csv"});

  auto* binet = app.add_subcommand("binet", "hybrid terms from the closed form, checked against the recurrence");
  detail::add_seq_flags(binet, cfg.seq, true);
  add_format(binet, {"json", "csv"});

  auto* chr = app.add_subcommand("char", "character and norm of a hybrid number");
  chr->add_option("z", cfg.z, "components \"a,b,c,d\" (rationals)")->required();
  add_format(chr, {"json", "csv"});

  auto* expand = app.add_subcommand("expand", "generating-function coefficients vs the sequence");
  detail::add_seq_flags(expand, cfg.seq, false);
  expand->add_option("--terms", cfg.seq.terms, "highest power of t")->capture_default_str();
  add_format(expand, {"json", "csv"});

  auto* verify = app.add_subcommand("verify", "run the identity suite over a parameter grid");
  verify->add_option("--suite", cfg.suite, "identity name or 'all'")->capture_default_str();
  verify->add_flag("--audit", cfg.audit, "include right-hand-side variants");
  verify->add_option("--grid", cfg.grid_path, "grid file (key=value lines)");
  add_format(verify, {"json", "csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) {
      cfg.format = format.empty() ? "text" : format;
      return detail::cmd_table(cfg, out);
    }
    cfg.format = format.empty() ? "json" : format;
    if (*seq) return detail::cmd_seq(cfg, false, out, err);
    if (*binet) return detail::cmd_seq(cfg, true, out, err);
    if (*chr) return detail::cmd_char(cfg, out);
    if (*expand) return detail::cmd_expand(cfg, out);
    if (*verify) return detail::cmd_verify(cfg, out);
  } catch (const hybrid::InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hybrid::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hybrid::ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hybridfib

#endif  // HYBRIDFIB_CLI_HPP
