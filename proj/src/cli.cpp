#include "permutiple/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permutiple/enumeration.hpp"
#include "permutiple/io.hpp"
#include "permutiple/symmetry.hpp"

namespace permutiple::cli {

namespace {

struct Options {
  std::optional<int> multiplier;
  int base = 10;
  std::optional<std::size_t> length;
  bool allow_leading_zero = false;
  std::string format = "json";
  std::string output;
  std::uint64_t scan_limit = default_scan_limit;
  std::string seed;
  std::string equation;
  std::string sigma;
  std::string bfile;
  std::size_t max_length = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int need_multiplier(const Options& o) {
  if (!o.multiplier) throw UsageError("--multiplier is required");
  check_parameters(*o.multiplier, o.base);
  return *o.multiplier;
}

std::size_t need_length(const Options& o) {
  if (!o.length || *o.length == 0) throw UsageError("--length must be at least 1");
  return *o.length;
}

PermutipleRecord need_seed(const Options& o) {
  if (o.seed.empty()) throw UsageError("--seed is required");
  return io::verify_seed(io::parse_seed(o.seed));
}

std::string graph_name(const char* kind, int n, int b) {
  return std::string(kind) + "_" + std::to_string(n) + "_" + std::to_string(b);
}

void no_dot(const Options& o) {
  if (o.format == "dot") throw UsageError("dot output is only available for graphs");
}

void emit_record(std::ostream& out, const Options& o, const PermutipleRecord& r,
                 const io::Json& extra = io::Json::object()) {
  if (o.format == "text") {
    out << to_equation_string(r);
    if (extra.contains("relations")) {
      for (const auto& rel : extra["relations"]) out << ' ' << rel.get<std::string>();
    }
    out << '\n';
    return;
  }
  auto j = io::record_to_json(r);
  j.update(extra);
  out << j.dump() << '\n';
}

int cmd_mother_graph(const Options& o, std::ostream& out) {
  const int n = need_multiplier(o);
  const auto g = build_mother_graph(n, o.base);
  if (o.format == "dot") {
    out << io::digit_graph_dot(g, graph_name("mother", n, o.base));
  } else if (o.format == "text") {
    for (const auto& e : g.edges()) out << e.from << " -> " << e.to << '\n';
  } else {
    out << io::digit_graph_json(g, n).dump(2) << '\n';
  }
  return ok;
}

int cmd_hs_graph(const Options& o, std::ostream& out) {
  const int n = need_multiplier(o);
  const auto g = build_state_graph(n, o.base);
  if (o.format == "dot") {
    out << io::state_graph_dot(g, graph_name("hs", n, o.base));
  } else if (o.format == "text") {
    for (const auto& [key, labels] : g.edges()) {
      out << key.first << " -> " << key.second << " :";
      for (const auto& l : labels) out << ' ' << to_string(l);
      out << '\n';
    }
  } else {
    out << io::state_graph_json(g).dump(2) << '\n';
  }
  return ok;
}

int cmd_hs_multigraph(const Options& o, std::ostream& out) {
  const int n = need_multiplier(o);
  const auto g = build_state_multigraph(n, o.base);
  if (o.format == "dot") {
    out << io::state_multigraph_dot(g, graph_name("hs_multi", n, o.base));
  } else if (o.format == "text") {
    for (const auto& t : g.transitions()) {
      out << t.from << " -> " << t.to << " : " << to_string(t.label) << '\n';
    }
  } else {
    out << io::state_multigraph_json(g).dump(2) << '\n';
  }
  return ok;
}

int cmd_find(const Options& o, std::ostream& out) {
  no_dot(o);
  const int n = need_multiplier(o);
  for (const auto& r :
       find_permutiples(n, o.base, need_length(o), o.allow_leading_zero)) {
    emit_record(out, o, r.permutiple);
  }
  return ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  no_dot(o);
  const int n = need_multiplier(o);
  for (const auto& r : brute_force_oracle(n, o.base, need_length(o),
                                          o.allow_leading_zero, o.scan_limit)) {
    emit_record(out, o, r);
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  no_dot(o);
  std::optional<PermutipleRecord> rec;
  const auto& text = o.equation;
  if (text.find(':') != std::string::npos) {
    const auto eq = io::parse_seed(text);
    check_parameters(eq.multiplier, eq.digits.base());
    rec = verify_equation(eq.digits, eq.preimage, eq.multiplier);
  } else if (text.find('=') != std::string::npos) {
    const auto eq = io::parse_equation(text, o.base);
    check_parameters(eq.multiplier, o.base);
    rec = verify_equation(eq.digits, eq.preimage, eq.multiplier);
  } else {
    const int n = need_multiplier(o);
    const auto digits = io::parse_digits(text, o.base);
    if (o.sigma.empty()) {
      rec = verify_any_sigma(digits, n);
    } else {
      const auto sigma = io::parse_sigma(o.sigma);
      if (sigma.size() != digits.size()) {
        throw UsageError("--sigma has the wrong length");
      }
      rec = verify_permutiple(digits, sigma, n);
    }
  }
  if (!rec) {
    if (o.format == "text") {
      out << "FAIL " << text << '\n';
    } else {
      out << io::Json{{"ok", false}, {"input", text}}.dump() << '\n';
    }
    return failure;
  }
  if (o.format == "text") {
    out << "OK " << to_equation_string(*rec) << " carries";
    const auto& c = rec->carries();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) out << ' ' << *it;
    out << '\n';
  } else {
    auto j = io::record_to_json(*rec);
    j["ok"] = true;
    out << j.dump() << '\n';
  }
  return ok;
}

int cmd_siblings(const Options& o, std::ostream& out) {
  no_dot(o);
  const auto rec = need_seed(o);
  std::vector<std::pair<PermutipleRecord, std::vector<std::string>>> all;
  auto note = [&](const Sibling& s, const char* kind) {
    std::vector<std::string> rel;
    for (auto j : s.indices) rel.push_back(std::string(kind) + ":" + std::to_string(j));
    for (auto& [r, rels] : all) {
      if (same_product(r, s.record)) {
        rels.insert(rels.end(), rel.begin(), rel.end());
        return;
      }
    }
    all.emplace_back(s.record, rel);
  };
  for (const auto& s : rotational_siblings(rec)) note(s, "rotational");
  for (const auto& s : reflective_siblings(rec)) note(s, "reflective");
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return record_less(a.first, b.first); });
  for (const auto& [r, rels] : all) {
    emit_record(out, o, r, io::Json{{"relations", rels}});
  }
  return ok;
}

int cmd_class(const Options& o, std::ostream& out) {
  no_dot(o);
  const auto rec = need_seed(o);
  for (const auto& r : enumerate_class_members(rec, o.allow_leading_zero)) {
    emit_record(out, o, r);
  }
  return ok;
}

int cmd_symmetries(const Options& o, std::ostream& out) {
  no_dot(o);
  const auto rec = need_seed(o);
  for (const auto& phi : symmetries_fixing_sequence(rec)) {
    const auto r = apply_symmetry(rec, phi);
    if (o.format == "text") {
      out << to_string(phi) << ' ' << to_equation_string(*r) << '\n';
    } else {
      out << io::Json{{"phi", phi.map()}, {"record", io::record_to_json(*r)}}.dump()
          << '\n';
    }
  }
  return ok;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const auto rec = need_seed(o);
  const auto spec = ClassSpec::of(rec);
  if (!class_reflection_exists(spec)) {
    throw Failure("state " + std::to_string(rec.multiplier() - 1) +
                  " is not reached by the class; it has no reflection");
  }
  const auto closure = symmetric_closure(spec);
  if (o.format == "dot") {
    out << io::digit_graph_dot(closure.graph(), "closure");
    return ok;
  }
  auto edges = [](const DigitGraph& g) {
    io::Json a = io::Json::array();
    for (const auto& e : g.edges()) a.push_back({e.from, e.to});
    return a;
  };
  if (o.format == "text") {
    for (const auto& e : closure.graph().edges()) out << e.from << " -> " << e.to << '\n';
    return ok;
  }
  out << io::Json{{"class_edges", edges(spec.graph())},
                  {"reflected_edges", edges(reflect_class(spec).graph())},
                  {"closure_edges", edges(closure.graph())},
                  {"class_symmetric", is_symmetric_class(spec)},
                  {"closure_symmetric", is_symmetric_class(closure)}}
             .dump(2)
      << '\n';
  return ok;
}

int cmd_oeis_check(const Options& o, std::ostream& out) {
  no_dot(o);
  const int n = need_multiplier(o);
  std::ifstream in(o.bfile);
  if (!in) throw UsageError("cannot read " + o.bfile);
  const auto report = io::oeis_check(io::parse_bfile(in), n, o.base, o.max_length);
  if (o.format == "text") {
    out << "matches " << report.matches.size() << " misses "
        << report.misses.size() << " extras " << report.extras.size()
        << " skipped-zero " << report.skipped_zero << '\n';
  } else {
    out << io::oeis_report_json(report).dump(2) << '\n';
  }
  return report.ok() ? ok : failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Search for permutiples and explore their symmetries.", "permutiple"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.set_config("--config", "", "key=value file supplying option defaults");
  app.add_option("-n,--multiplier", o.multiplier, "Multiplier n, 1 < n < b");
  app.add_option("-b,--base", o.base, "Base b")->capture_default_str();
  app.add_option("-l,--length", o.length, "Number of digits");
  app.add_flag("--allow-leading-zero", o.allow_leading_zero,
               "Keep digit strings whose leading digit is 0");
  app.add_option("--format", o.format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", o.output, "Write to a file instead of stdout");
  app.add_option("--scan-limit", o.scan_limit, "Largest b^length the oracle scans")
      ->envname("PERMUTIPLE_SCAN_LIMIT")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Permutiple such as 4x10:87912=4*21978");
  app.add_option("--max-length", o.max_length, "Longest length for oeis-check")
      ->capture_default_str();

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("mother-graph", "Print the mother graph", cmd_mother_graph);
  add("hs-graph", "Print the labeled carry-state graph", cmd_hs_graph);
  add("hs-multigraph", "Print the carry-state multigraph", cmd_hs_multigraph);
  add("find", "Enumerate permutiples via cycle unions", cmd_find);
  add("oracle", "Enumerate permutiples by exhaustive scan", cmd_oracle);
  auto* verify = add("verify", "Verify one multiplication", cmd_verify);
  verify->add_option("equation", o.equation,
                     "\"87912 = 4 * 21978\", a seed, or bare digits with --multiplier")
      ->required();
  verify->add_option("--sigma", o.sigma, "sigma(0),...,sigma(k)");
  add("siblings", "Dihedral siblings of --seed", cmd_siblings);
  add("class", "Class members sharing the digits of --seed", cmd_class);
  add("symmetries", "Symmetries fixing the state sequence of --seed",
      cmd_symmetries);
  add("closure", "Symmetric closure of the class of --seed", cmd_closure);
  auto* oeis = add("oeis-check", "Compare a b-file against permutiples",
                   cmd_oeis_check);
  oeis->add_option("--bfile", o.bfile, "Local b-file")->required();

  std::vector<const char*> argv{"permutiple"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  Handler handler = nullptr;
  for (const auto& [sub, h] : commands) {
    if (sub->parsed()) handler = h;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    code = handler(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const ScanLimitError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const io::VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return failure;
  } catch (const Failure& e) {
    err << e.what() << '\n';
    return failure;
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n';
    return failure;
  } catch (const NoReflectionError& e) {
    err << e.what() << '\n';
    return failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return usage;
    }
  }
  return code;
}

}  // namespace permutiple::cli
