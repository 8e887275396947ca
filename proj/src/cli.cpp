#include "traag/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "traag/classifiers.hpp"
#include "traag/errors.hpp"
#include "traag/mixed_graph.hpp"
#include "traag/report.hpp"
#include "traag/transforms.hpp"
#include "traag/word.hpp"

namespace traag::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Usage problems detected after argument parsing (missing files and such).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MixedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// Inline word, or the contents of a word file when one is given.
Word load_word(const std::string& inline_text, const std::string& file, const MixedGraph& g) {
  return parse_word(file.empty() ? inline_text : read_file(file), g);
}

std::size_t oracle_cap() {
  const char* env = std::getenv("TRAAG_ORACLE_CAP");
  if (!env || !*env) return kDefaultOracleCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("TRAAG_ORACLE_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string kind_name(const Edge& e) { return e.directed ? ">" : "-"; }

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide properties of twisted right-angled Artin groups and compute with their words.", "traag"};
  app.require_subcommand(1);
  app.fallthrough();

  // Every command is deterministic; the seed is accepted so scripts can pin it.
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "random seed (default 0)");

  bool as_json = false;
  std::vector<std::string> graph_paths;
  std::string graph_path, word_text, word_file, word1, word2, word_file1, word_file2, apex, out_dir;
  std::size_t enum_size = 0, radius = 8;
  bool verify = false, delta_nf = false;

  auto add_graph = [&](CLI::App* sub) { sub->add_option("-f,--file", graph_path, "graph file (.tg)")->required(); };
  auto add_word = [&](CLI::App* sub) {
    auto* w = sub->add_option("-w,--word", word_text, "word, e.g. \"a b^-1 a^2\"");
    auto* wf = sub->add_option("--word-file", word_file, "file containing the word");
    w->excludes(wf);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "property report for one graph or a batch");
  analyze_cmd->add_option("-f,--file", graph_paths, "graph files or directories")->required();
  analyze_cmd->add_flag("--json", as_json, "JSON output");

  auto* nf_cmd = app.add_subcommand("nf", "shortlex normal form of a word");
  add_graph(nf_cmd);
  add_word(nf_cmd);
  nf_cmd->add_flag("--json", as_json, "JSON output");

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two words are equal (exit 10 if not)");
  add_graph(eq_cmd);
  eq_cmd->add_option("--w1", word1, "first word");
  eq_cmd->add_option("--w2", word2, "second word");
  eq_cmd->add_option("--word-file1", word_file1, "file containing the first word");
  eq_cmd->add_option("--word-file2", word_file2, "file containing the second word");
  eq_cmd->add_flag("--json", as_json, "JSON output");

  auto* sub_cmd = app.add_subcommand("subgroup", "index-2 subgroup graph at a universal vertex");
  add_graph(sub_cmd);
  sub_cmd->add_option("-x,--apex", apex, "universal vertex")->required();
  sub_cmd->add_flag("--verify", verify, "check every relator of the new presentation");
  sub_cmd->add_flag("--json", as_json, "JSON output");

  auto* rw_cmd = app.add_subcommand("rewrite", "rewrite a subgroup element over the new generators");
  add_graph(rw_cmd);
  rw_cmd->add_option("-x,--apex", apex, "universal vertex")->required();
  add_word(rw_cmd);
  rw_cmd->add_flag("--delta-nf", delta_nf, "normal form in the subgroup presentation");
  rw_cmd->add_flag("--json", as_json, "JSON output");

  auto* inr_cmd = app.add_subcommand("inr", "class R recognition with decomposition (exit 10 if not)");
  add_graph(inr_cmd);
  inr_cmd->add_flag("--json", as_json, "JSON output");

  auto* enum_cmd = app.add_subcommand("enum", "write every labeled mixed graph on n vertices");
  enum_cmd->add_option("-n", enum_size, "vertex count (1..5)")->required();
  enum_cmd->add_option("--out", out_dir, "output directory")->required();
  enum_cmd->add_flag("--json", as_json, "JSON output");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force rewriting neighbourhood of a word");
  add_graph(oracle_cmd);
  add_word(oracle_cmd);
  oracle_cmd->add_option("-r,--radius", radius, "maximum number of moves");
  oracle_cmd->add_flag("--json", as_json, "JSON output");

  // Single-dash multi-letter spellings of the eq options.
  std::vector<std::string> args;
  for (const auto& a : raw_args) args.push_back(a == "-w1" ? "--w1" : a == "-w2" ? "--w2" : a);
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      if (graph_paths.size() == 1 && !fs::is_directory(graph_paths.front())) {
        auto report = analyze(load_graph(graph_paths.front()));
        if (as_json)
          print_json(out, to_json(report));
        else
          out << render_text(report);
        return kOk;
      }
      auto batch = batch_analyze_paths(graph_paths);
      if (as_json)
        print_json(out, to_json(batch));
      else
        out << render_text(batch);
      return batch.summary.failures == 0 ? kOk : kParse;
    }

    if (*nf_cmd) {
      auto g = load_graph(graph_path);
      auto w = load_word(word_text, word_file, g);
      auto nf = normal_form(g, w);
      if (as_json)
        print_json(out, {{"word", serialize_word(w)}, {"normal_form", serialize_word(nf)}});
      else
        out << serialize_word(nf) << "\n";
      return kOk;
    }

    if (*eq_cmd) {
      if ((eq_cmd->count("--w1") == 0) == word_file1.empty() || (eq_cmd->count("--w2") == 0) == word_file2.empty())
        throw UsageError("eq needs exactly one of -w1/--word-file1 and one of -w2/--word-file2");
      auto g = load_graph(graph_path);
      auto a = load_word(word1, word_file1, g);
      auto b = load_word(word2, word_file2, g);
      auto na = normal_form(g, a), nb = normal_form(g, b);
      bool same = na == nb;
      if (as_json)
        print_json(out, {{"equal", same}, {"normal_forms", {serialize_word(na), serialize_word(nb)}}});
      else
        out << (same ? "equal" : "not equal") << "\n";
      return same ? kOk : kNegative;
    }

    if (*sub_cmd) {
      auto g = load_graph(graph_path);
      auto s = apex_subgroup_graph(g, apex);
      std::optional<PresentationCheck> check;
      if (verify) check = verify_subgroup_presentation(g, apex);
      if (as_json) {
        json gens = json::object(), conj = json::object();
        for (const auto& [v, w] : s.generator_map) gens[v] = serialize_word(w);
        for (const auto& [v, c] : s.conjugation_table) conj[v] = to_string(c);
        json j{{"apex", s.apex},
               {"new_generator", s.new_generator},
               {"delta", serialize_graph(s.delta)},
               {"generator_map", gens},
               {"conjugation_table", conj}};
        if (check) {
          json rows = json::array();
          for (const auto& c : check->relators)
            rows.push_back({{"edge", c.edge.first + " " + kind_name(c.edge) + " " + c.edge.second},
                            {"relator", serialize_word(c.relator)},
                            {"image", serialize_word(c.image)},
                            {"passed", c.passed}});
          j["verification"] = {{"relators", rows}, {"all_passed", check->all_passed()}};
        }
        print_json(out, j);
      } else {
        out << serialize_graph(s.delta) << "\n\n";
        for (const auto& v : s.delta.vertices())
          out << v << " = " << serialize_word(s.generator_map.at(v)) << "\n";
        for (const auto& [v, c] : s.conjugation_table) out << apex << " conjugates " << v << ": " << to_string(c) << "\n";
        if (check) {
          for (const auto& c : check->relators)
            out << (c.passed ? "pass " : "FAIL ") << c.edge.first << " " << kind_name(c.edge) << " " << c.edge.second
                << ": " << serialize_word(c.image) << "\n";
        }
      }
      return check && !check->all_passed() ? kNegative : kOk;
    }

    if (*rw_cmd) {
      auto g = load_graph(graph_path);
      auto w = load_word(word_text, word_file, g);
      auto r = rewrite_into_subgroup(g, apex, w, {delta_nf, false});
      if (as_json)
        print_json(out, {{"in_subgroup", r.has_value()}, {"rewritten", r ? json(serialize_word(*r)) : json(nullptr)}});
      else
        out << (r ? serialize_word(*r) : std::string("not in subgroup")) << "\n";
      return r ? kOk : kNegative;
    }

    if (*inr_cmd) {
      auto g = load_graph(graph_path);
      auto d = is_in_class_r(g);
      if (as_json)
        print_json(out, {{"in_class_r", d.has_value()}, {"decomposition", d ? to_json(*d) : json(nullptr)}});
      else
        out << (d ? "in class R\n" + render_decomposition(*d) : std::string("not in class R\n"));
      return d ? kOk : kNegative;
    }

    if (*enum_cmd) {
      if (enum_size < 1 || enum_size > 5) throw SizeLimit("enumeration supports 1 <= n <= 5");
      fs::create_directories(out_dir);
      const std::uint64_t total = mixed_graph_count(enum_size);
      const int digits = static_cast<int>(std::to_string(total - 1).size());
      for (std::uint64_t code = 0; code < total; ++code) {
        std::ostringstream name;
        name << "g" << enum_size << "_" << std::setw(digits) << std::setfill('0') << code << ".tg";
        std::ofstream f(fs::path(out_dir) / name.str());
        if (!f) throw UsageError("cannot write to '" + out_dir + "'");
        f << serialize_graph(mixed_graph_from_code(enum_size, code)) << "\n";
      }
      if (as_json)
        print_json(out, {{"n", enum_size}, {"graphs", total}, {"directory", out_dir}});
      else
        out << "wrote " << total << " graphs to " << out_dir << "\n";
      return kOk;
    }

    if (*oracle_cmd) {
      auto g = load_graph(graph_path);
      auto w = load_word(word_text, word_file, g);
      auto cls = bfs_equivalence_class(g, w, radius, oracle_cap());
      std::vector<Word> sorted(cls.begin(), cls.end());
      std::sort(sorted.begin(), sorted.end(), [&](const Word& a, const Word& b) { return shortlex_less(g, a, b); });
      if (as_json) {
        json words = json::array();
        for (const auto& v : sorted) words.push_back(serialize_word(v));
        print_json(out, {{"radius", radius}, {"size", sorted.size()}, {"words", words}});
      } else {
        for (const auto& v : sorted) out << serialize_word(v) << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace traag::cli
