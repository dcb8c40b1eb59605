#pragma once

// Command surface of the `popkit` tool. Kept in a header so tests can drive it
// in-process with captured streams.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or notation error,
// 3 enumeration cap exceeded.

#include <popkit/egf.hpp>
#include <popkit/enumerator.hpp>
#include <popkit/notation.hpp>
#include <popkit/recurrences.hpp>
#include <popkit/wilf.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace popkit::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, resource = 3 };

inline constexpr const char* cap_env_var = "POPKIT_CAP";

using ordered_json = nlohmann::ordered_json;

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string join(const std::vector<BigInt>& values, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? sep : "") + values[i].str();
  return s;
}

inline ordered_json sequence_json(const CountSequence& seq) {
  ordered_json j;
  j["pattern"] = seq.pattern;
  j["source"] = to_string(seq.source);
  j["values"] = to_decimal(seq.values);
  return j;
}

inline void write_sequence(std::ostream& out, const CountSequence& seq, const std::string& format) {
  if (format == "json") {
    out << sequence_json(seq).dump() << '\n';
  } else if (format == "csv") {
    out << "n,value\r\n";
    for (std::size_t n = 0; n < seq.values.size(); ++n) out << n << ',' << seq.values[n] << "\r\n";
  } else {
    out << seq.pattern << " [" << to_string(seq.source) << "]\n";
    for (std::size_t n = 0; n < seq.values.size(); ++n) out << "a(" << n << ") = " << seq.values[n] << '\n';
  }
}

inline void write_report(std::ostream& out, const WilfReport& r, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["family"] = r.family;
    j["n_max"] = r.n_max;
    j["prefix_only"] = r.prefix_only;
    j["caveat"] = WilfReport::caveat;
    j["tie_break"] = WilfReport::tie_break;
    j["classes"] = ordered_json::array();
    for (const auto& c : r.classes) {
      ordered_json cj;
      cj["prefix"] = to_decimal(c.prefix);
      cj["size"] = c.members.size();
      cj["members"] = c.members;
      cj["representatives"] = c.representatives;
      j["classes"].push_back(std::move(cj));
    }
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "class,prefix,member\r\n";
    for (std::size_t i = 0; i < r.classes.size(); ++i)
      for (const auto& m : r.classes[i].members)
        out << i + 1 << ',' << csv_field(join(r.classes[i].prefix, " ")) << ',' << csv_field(m) << "\r\n";
  } else {
    out << "family " << r.family << ", a(0.." << r.n_max << "): " << r.classes.size() << " classes\n";
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const auto& c = r.classes[i];
      out << "class " << i + 1 << " (" << c.members.size() << " members): " << join(c.prefix) << '\n';
      out << "  members:";
      for (const auto& m : c.members) out << ' ' << m;
      out << "\n  orbit representatives:";
      for (const auto& m : c.representatives) out << ' ' << m;
      out << '\n';
    }
    out << "note: " << WilfReport::caveat << '\n';
  }
}

struct Options {
  std::string format = "table";
  std::string out_file;
  std::optional<unsigned> cap;
  std::string pattern;
  std::string theorem;
  std::string dc;
  std::string family = "npatterns";
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::optional<int> k;
  std::optional<int> j;
  unsigned order = default_egf_order;
  bool quasi = false;
};

inline EnumerationLimits resolve_limits(const Options& o) {
  EnumerationLimits limits;
  if (const char* env = std::getenv(cap_env_var); env && *env) {
    try {
      limits.cap = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw invalid_input(std::string(cap_env_var) + " must be a non-negative integer");
    }
  }
  if (o.cap) limits.cap = *o.cap;
  return limits;
}

inline int cmd_parse(const Options& o, std::ostream& out) {
  const PopSpec spec = parse_pop(o.pattern);
  const Poset p = build_pop(spec);
  if (o.format == "json") {
    ordered_json j;
    j["pattern"] = render_pop(spec);
    j["k"] = p.size();
    j["canonical"] = canonical_form(p);
    j["bipartite"] = is_bipartite(p);
    ordered_json covers = ordered_json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    j["covers"] = covers;
    out << j.dump() << '\n';
  } else {
    out << render_pop(spec) << '\n'
        << "k = " << p.size() << '\n'
        << "relations = " << canonical_form(p) << '\n'
        << "bipartite = " << (is_bipartite(p) ? "yes" : "no") << '\n';
  }
  return ok;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  const EnumerationLimits limits = resolve_limits(o);
  const PopSpec spec = parse_pop(o.pattern);
  const Poset p = build_pop(spec);
  const std::string name = render_pop(spec);
  if (o.n) {
    const BigInt v = o.quasi ? count_quasi_avoiders(p, *o.n, limits) : count_avoiders(p, *o.n, limits);
    if (o.format == "json") {
      ordered_json j;
      j["pattern"] = name;
      j["n"] = *o.n;
      j["quasi"] = o.quasi;
      j["count"] = v.str();
      out << j.dump() << '\n';
    } else if (o.format == "csv") {
      out << "pattern,n,quasi,count\r\n" << csv_field(name) << ',' << *o.n << ',' << (o.quasi ? 1 : 0) << ',' << v << "\r\n";
    } else {
      out << v << '\n';
    }
    return ok;
  }
  if (!o.n_max) throw invalid_input("count needs --n or --nmax");
  CountSequence seq;
  if (o.quasi) {
    limits.check(*o.n_max);
    seq = CountSequence{name + " (quasi)", SequenceSource::brute_force, {BigInt(0)}};
    for (unsigned n = 1; n <= *o.n_max; ++n) seq.values.push_back(count_quasi_avoiders(p, n, limits));
  } else {
    seq = avoidance_sequence(p, *o.n_max, limits, name);
  }
  write_sequence(out, seq, o.format);
  return ok;
}

inline TheoremId require_theorem(const std::string& name) {
  if (auto id = parse_theorem_id(name)) return *id;
  std::string known;
  for (const auto& t : theorem_table) known += (known.empty() ? "" : ", ") + std::string(t.name);
  throw invalid_input("unknown theorem '" + name + "' (known: " + known + ")");
}

inline int cmd_seq(const Options& o, std::ostream& out) {
  if (!o.n_max) throw invalid_input("seq needs --nmax");
  write_sequence(out, theorem_sequence(require_theorem(o.theorem), {o.k, o.j}, *o.n_max), o.format);
  return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.n_max) throw invalid_input("verify needs --nmax");
  const EnumerationLimits limits = resolve_limits(o);
  const TheoremId id = require_theorem(o.theorem);
  const PopSpec spec = parse_pop(o.pattern);
  const Poset p = build_pop(spec);
  TheoremParams params{o.k, o.j};
  if (!params.k) params.k = p.size();
  if (!params.j)
    if (const auto* cb = std::get_if<spec::CompleteBipartite>(&spec)) params.j = static_cast<int>(cb->top.size()) - 1;
  const CountSequence expected = theorem_sequence(id, params, *o.n_max);
  const CountSequence actual = avoidance_sequence(p, *o.n_max, limits, render_pop(spec));
  for (std::size_t n = 0; n < expected.values.size(); ++n) {
    if (expected.values[n] != actual.values[n]) {
      out << "MISMATCH at n=" << n << '\n'
          << "  " << expected.pattern << ": " << join(expected.values) << '\n'
          << "  " << actual.pattern << " (brute force): " << join(actual.values) << '\n';
      return mismatch;
    }
  }
  out << "ok: " << expected.pattern << " matches " << actual.pattern << " for n = 0.." << *o.n_max << '\n'
      << "  " << join(actual.values) << '\n';
  return ok;
}

inline int cmd_series(const Options& o, std::ostream& out) {
  const EnumerationLimits limits = resolve_limits(o);
  const PopSpec spec = parse_pop("dc:" + o.dc);
  const auto& dc = std::get<spec::DisjointChains>(spec);
  const TruncatedEgf egf = dc_series(dc.words, o.order, limits);
  write_sequence(out, CountSequence{render_pop(spec), SequenceSource::egf_expansion, egf.counts()}, o.format);
  return ok;
}

inline PatternFamily resolve_family(const std::string& name) {
  if (name == "npatterns") return n_pattern_family();
  unsigned k = 0, a = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "cb:%u:%u%c", &k, &a, &tail) == 2) return cb_family(static_cast<int>(k), static_cast<int>(a));
  throw invalid_input("unknown family '" + name + "' (use npatterns or cb:K:A_SIZE)");
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const EnumerationLimits limits = resolve_limits(o);
  write_report(out, classify(resolve_family(o.family), o.n_max.value_or(9), limits), o.format);
  return ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"popkit: partially ordered pattern avoidance toolkit", "popkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", o.out_file, "write output to FILE instead of stdout");
    sub->add_option("--cap", o.cap, std::string("enumeration cap (overrides ") + cap_env_var + ")");
  };

  auto* parse = app.add_subcommand("parse", "parse and canonicalize a pattern");
  parse->add_option("--pattern", o.pattern, "pattern notation")->required();
  common(parse);

  auto* count = app.add_subcommand("count", "brute-force avoidance counts");
  count->add_option("--pattern", o.pattern, "pattern notation")->required();
  auto* n_opt = count->add_option("--n", o.n, "single length");
  count->add_option("--nmax", o.n_max, "sequence a(0..N)")->excludes(n_opt);
  count->add_flag("--quasi", o.quasi, "count quasi-avoiders instead");
  common(count);

  auto* seq = app.add_subcommand("seq", "sequence from a named theorem");
  seq->add_option("--theorem", o.theorem, "theorem id")->required();
  seq->add_option("--k", o.k, "pattern length");
  seq->add_option("--j", o.j, "interval parameter for cb-interval");
  seq->add_option("--nmax", o.n_max, "largest n")->required();
  common(seq);

  auto* verify = app.add_subcommand("verify", "compare a theorem with brute force");
  verify->add_option("--theorem", o.theorem, "theorem id")->required();
  verify->add_option("--pattern", o.pattern, "pattern notation")->required();
  verify->add_option("--k", o.k, "pattern length (default: pattern size)");
  verify->add_option("--j", o.j, "interval parameter (default: |A|-1 for cb patterns)");
  verify->add_option("--nmax", o.n_max, "largest n")->required();
  common(verify);

  auto* series = app.add_subcommand("series", "avoidance counts of a DC POP from its e.g.f.");
  series->add_option("--dc", o.dc, "chains, e.g. \"[12|43|65]\"")->required();
  series->add_option("--order", o.order, "truncation order");
  common(series);

  auto* classify_cmd = app.add_subcommand("classify", "group a family into Wilf classes by prefix");
  classify_cmd->add_option("--family", o.family, "npatterns or cb:K:A_SIZE");
  classify_cmd->add_option("--nmax", o.n_max, "prefix length (default 9)");
  common(classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    if (parse->parsed()) code = cmd_parse(o, buffer);
    else if (count->parsed()) code = cmd_count(o, buffer);
    else if (seq->parsed()) code = cmd_seq(o, buffer);
    else if (verify->parsed()) code = cmd_verify(o, buffer);
    else if (series->parsed()) code = cmd_series(o, buffer);
    else if (classify_cmd->parsed()) code = cmd_classify(o, buffer);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const resource_limit& e) {
    err << "error: " << e.what() << '\n';
    return resource;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << o.out_file << '\n';
      return usage;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

} // namespace popkit::cli
