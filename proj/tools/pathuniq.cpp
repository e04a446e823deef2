// Command-line front end: graph generation, constructions, uniqueness
// checks, bounds/table output, search, and the labeling channel.
//
// Exit codes: 0 success, 1 invalid input, 2 guard or budget exhaustion.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathuniq/bounds.hpp"
#include "pathuniq/constructions.hpp"
#include "pathuniq/core.hpp"
#include "pathuniq/io.hpp"
#include "pathuniq/labeling.hpp"
#include "pathuniq/path_unique.hpp"
#include "pathuniq/search.hpp"

namespace {

using namespace pathuniq;

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw SpecError("cannot open output file: " + out_path);
  f << content;
}

std::string slurp(const std::string& in_path) {
  if (in_path.empty() || in_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(in_path, std::ios::binary);
  if (!f) throw SpecError("cannot open input file: " + in_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string render_graph(const EdgeSet& g, const std::string& fmt, const DotOptions* dot) {
  if (fmt == "edgelist") return to_edge_list(g);
  if (fmt == "json") return edge_set_to_json(g).dump(2) + "\n";
  if (fmt == "dot") return to_dot(g, dot ? *dot : DotOptions{});
  throw SpecError("format '" + fmt + "' does not apply to graphs");
}

std::string render_outcome(const SearchOutcome& out, const std::string& fmt) {
  if (fmt == "json") return outcome_to_json(out).dump(2) + "\n";
  if (fmt == "edgelist") return to_edge_list(out.witness);
  throw SpecError("format '" + fmt + "' does not apply to search outcomes");
}

Word parse_word_arg(std::uint32_t q, const std::string& text, std::size_t line = 1) {
  Word w;
  if (text.find_first_of(", \t") != std::string::npos) {
    std::string norm = text;
    for (char& c : norm)
      if (c == ',') c = ' ';
    for (const std::string& tok : detail::split_ws(norm))
      w.push_back(static_cast<Symbol>(detail::parse_uint(tok, line)));
  } else {
    if (q > 10) throw ParseError(line, "alphabets beyond 10 symbols need separated digits");
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(line, std::string("bad symbol '") + c + "'");
      w.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  for (Symbol s : w)
    if (s >= q)
      throw ParseError(line, "symbol " + std::to_string(s) + " outside alphabet of size " +
                                 std::to_string(q));
  return w;
}

LabelSet parse_label_file(std::uint32_t q, const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<Word> words;
  std::optional<std::uint32_t> m;
  while (std::getline(in, raw)) {
    ++lineno;
    bool blank = raw.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    std::string trimmed = raw;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
    Word w = parse_word_arg(q, trimmed, lineno);
    if (w.empty()) throw ParseError(lineno, "empty label word");
    if (!m) m = static_cast<std::uint32_t>(w.size());
    if (w.size() != *m) throw ParseError(lineno, "label words must share one length");
    words.push_back(std::move(w));
  }
  if (!m) throw ParseError(lineno + 1, "label file holds no label words");
  try {
    return LabelSet::from_words(q, *m, std::move(words));
  } catch (const SpecError& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string format_rate_csv(const std::vector<RatePoint>& pts) {
  std::string out = "n,distinct,rate\n";
  char buf[64];
  for (const RatePoint& p : pts) {
    std::snprintf(buf, sizeof buf, "%.12g", p.rate);
    out += std::to_string(p.n) + "," + std::to_string(p.distinct) + "," + buf + "\n";
  }
  return out;
}

struct RowFilter {
  std::optional<std::uint32_t> q, d;

  static RowFilter parse(const std::string& text) {
    RowFilter f;
    if (text.empty()) return f;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw SpecError("row filter expects q=<n> or d=<n>");
      std::string key = tok.substr(0, eq);
      std::uint64_t val = detail::parse_uint(tok.substr(eq + 1), 1);
      if (key == "q")
        f.q = static_cast<std::uint32_t>(val);
      else if (key == "d")
        f.d = static_cast<std::uint32_t>(val);
      else
        throw SpecError("row filter keys are q and d");
    }
    return f;
  }

  bool admits(const GraphSpec& spec) const {
    return (!q || spec.q == *q) && (!d || spec.d == *d);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path-unique subgraphs of de Bruijn graphs: constructions, bounds, search, labeling"};
  app.require_subcommand(1);

  // shared option storage
  std::uint32_t q = 2, d = 2, k = 1, nmax = 8, restarts = 8;
  std::uint64_t seed = 1, iterations = 100000, budget = 0, guard = kDefaultEnumGuard;
  double t0 = 2.0, cooling = 0.9995;
  std::string out_path, in_path, word_text, labels_path, pattern_text, rows_text;
  bool with_search = false, symmetry = false, oracle = false;

  auto add_spec_opts = [&](CLI::App* cmd, bool with_d = true) {
    cmd->add_option("--q", q, "alphabet size")->required()->check(CLI::Range(2u, 1000000u));
    if (with_d) cmd->add_option("--d", d, "word length of vertices")->required();
  };
  auto add_out_opt = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };
  // each subcommand keeps its own format slot so the defaults stay separate
  std::list<std::string> format_slots;
  auto add_format_opt = [&](CLI::App* cmd, const std::string& def,
                            const std::vector<std::string>& allowed) -> std::string& {
    std::string& slot = format_slots.emplace_back(def);
    cmd->add_option("--format", slot, "output format")->check(CLI::IsMember(allowed));
    return slot;
  };

  auto* gen = app.add_subcommand("gen", "emit the full de Bruijn graph B_{q,d}");
  add_spec_opts(gen);
  std::string& gen_format = add_format_opt(gen, "edgelist", {"edgelist", "json", "dot"});
  add_out_opt(gen);
  gen->callback([&] {
    EdgeSet g = build_full_graph(GraphSpec(q, d));
    emit(out_path, render_graph(g, gen_format, nullptr));
  });

  auto* c1 = app.add_subcommand("construct1", "path-unique subgraph for any q, d");
  add_spec_opts(c1);
  std::string& c1_format = add_format_opt(c1, "edgelist", {"edgelist", "json", "dot"});
  add_out_opt(c1);
  c1->callback([&] {
    EdgeSet g = construction1(GraphSpec(q, d));
    emit(out_path, render_graph(g, c1_format, nullptr));
  });

  auto* c2 = app.add_subcommand("construct2", "block construction over B_{q,2}");
  add_spec_opts(c2, false);
  std::string& c2_format = add_format_opt(c2, "edgelist", {"edgelist", "json", "dot"});
  add_out_opt(c2);
  c2->callback([&] {
    Construction2Graph g = construction2(q);
    DotOptions dot = construction2_dot_options(g);
    emit(out_path, render_graph(g.edges, c2_format, &dot));
  });

  auto* chk = app.add_subcommand("check", "decide path uniqueness of an edge-list file");
  chk->add_option("--in", in_path, "edge-list file (default: stdin)");
  add_out_opt(chk);
  chk->callback([&] {
    EdgeSet g = parse_edge_list(slurp(in_path));
    PathUniqVerdict v = is_path_unique(g);
    std::string text;
    if (v.is_path_unique) {
      text = "path unique\n";
    } else {
      text = "not path unique\n";
      for (const Word* w : {&v.witness->first, &v.witness->second}) {
        text += "witness:";
        for (Symbol s : *w) text += " " + std::to_string(s);
        text += "\n";
      }
    }
    emit(out_path, text);
  });

  auto* bnd = app.add_subcommand("bounds", "lower/upper bounds for gamma(q,d)");
  add_spec_opts(bnd);
  std::string& bnd_format = add_format_opt(bnd, "csv", {"csv", "json"});
  bnd->add_flag("--with-search", with_search, "fill lb_comp by annealing (seeded)");
  bnd->add_option("--seed", seed, "search seed");
  bnd->add_option("--iterations", iterations, "annealing iterations per chain");
  bnd->add_option("--restarts", restarts, "annealing restart chains");
  add_out_opt(bnd);
  bnd->callback([&] {
    BoundsReport r = make_bounds_report(GraphSpec(q, d));
    if (with_search) {
      AnnealConfig cfg;
      cfg.seed = seed;
      cfg.iterations = iterations;
      cfg.restarts = restarts;
      r.lb_search = anneal_gamma(r.spec, cfg).best_count;
    }
    if (bnd_format == "json")
      emit(out_path, bounds_to_json(r).dump(2) + "\n");
    else
      emit(out_path, bounds_csv_header() + "\n" + bounds_csv_row(r) + "\n");
  });

  auto* eta = app.add_subcommand("eta", "count words spoiled by one extra edge");
  add_spec_opts(eta);
  eta->add_option("--k", k, "walk length")->required();
  eta->add_flag("--oracle", oracle, "also report the brute-force count");
  eta->add_option("--pattern", pattern_text, "pattern for the oracle (default: maximize)");
  eta->add_option("--guard", guard, "enumeration guard for the oracle");
  add_out_opt(eta);
  eta->callback([&] {
    std::string text = eta_closed_form(q, d, k).str() + "\n";
    if (oracle || !pattern_text.empty()) {
      std::uint64_t v = pattern_text.empty()
                            ? eta_oracle_max(q, d, k, guard)
                            : eta_oracle(q, d, k, parse_word_arg(q, pattern_text), guard);
      text += std::to_string(v) + "\n";
    }
    emit(out_path, text);
  });

  auto* sx = app.add_subcommand("search-exhaustive", "exact gamma by branch and bound");
  add_spec_opts(sx);
  sx->add_option("--budget", budget, "node-expansion cap (0 = unlimited)");
  sx->add_flag("--symmetry", symmetry, "prune the first branching level by alphabet symmetry");
  std::string& sx_format = add_format_opt(sx, "json", {"json", "edgelist"});
  add_out_opt(sx);
  sx->callback([&] {
    ExhaustiveOptions opt;
    opt.budget = budget;
    opt.symmetry_reduction = symmetry;
    SearchOutcome out = exhaustive_gamma(GraphSpec(q, d), opt);
    emit(out_path, render_outcome(out, sx_format));
    if (!out.exact) throw BudgetExhausted("node budget exhausted before completion");
  });

  auto* sa = app.add_subcommand("search-anneal", "simulated annealing over vertex orders");
  add_spec_opts(sa);
  sa->add_option("--seed", seed, "master seed");
  sa->add_option("--iterations", iterations, "iterations per chain");
  sa->add_option("--restarts", restarts, "independent chains");
  sa->add_option("--t0", t0, "initial temperature");
  sa->add_option("--cooling", cooling, "geometric cooling rate");
  std::string& sa_format = add_format_opt(sa, "json", {"json", "edgelist"});
  add_out_opt(sa);
  sa->callback([&] {
    AnnealConfig cfg;
    cfg.seed = seed;
    cfg.iterations = iterations;
    cfg.restarts = restarts;
    cfg.initial_temperature = t0;
    cfg.cooling_rate = cooling;
    SearchOutcome out = anneal_gamma(GraphSpec(q, d), cfg);
    emit(out_path, render_outcome(out, sa_format));
  });

  auto* lbl = app.add_subcommand("label", "label a word with window ranks");
  lbl->add_option("--q", q, "alphabet size")->required();
  lbl->add_option("--labels", labels_path, "label file, one label word per line")->required();
  lbl->add_option("--word", word_text, "input word")->required();
  add_out_opt(lbl);
  lbl->callback([&] {
    LabelSet a = parse_label_file(q, slurp(labels_path));
    Word x = parse_word_arg(q, word_text);
    std::string text;
    auto c = label_sequence(q, x, a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) text += " ";
      text += std::to_string(c[i]);
    }
    text += "\n";
    emit(out_path, text);
  });

  auto* rate = app.add_subcommand("rate", "empirical labeling rate series");
  rate->add_option("--q", q, "alphabet size")->required();
  rate->add_option("--labels", labels_path, "label file, one label word per line")->required();
  rate->add_option("--nmax", nmax, "largest word length")->required();
  rate->add_option("--guard", guard, "enumeration guard (default 2^26 states)");
  add_out_opt(rate);
  rate->callback([&] {
    LabelSet a = parse_label_file(q, slurp(labels_path));
    emit(out_path, format_rate_csv(empirical_rate(q, nmax, a, guard)));
  });

  auto* tbl = app.add_subcommand("table", "reference bound table");
  tbl->add_option("--rows", rows_text, "filter, e.g. q=2 or q=3,d=4");
  tbl->add_flag("--with-search", with_search, "fill lb_comp by annealing (seeded)");
  tbl->add_option("--seed", seed, "search seed");
  tbl->add_option("--iterations", iterations, "annealing iterations per chain");
  tbl->add_option("--restarts", restarts, "annealing restart chains");
  add_out_opt(tbl);
  tbl->callback([&] {
    RowFilter filter = RowFilter::parse(rows_text);
    std::string text = bounds_csv_header() + "\n";
    for (const GraphSpec& spec : table_rows()) {
      if (!filter.admits(spec)) continue;
      BoundsReport r = make_bounds_report(spec);
      if (with_search) {
        AnnealConfig cfg;
        cfg.seed = seed;
        cfg.iterations = iterations;
        cfg.restarts = restarts;
        r.lb_search = anneal_gamma(spec, cfg).best_count;
      }
      text += bounds_csv_row(r) + "\n";
    }
    emit(out_path, text);
  });

  auto* asym = app.add_subcommand("asymptotics", "density limits of the bounds, d = 2..9");
  add_out_opt(asym);
  asym->callback([&] {
    std::string text = "d,lb_thm3_limit,lb_thm4_limit,ub_limit\n";
    for (std::uint32_t dd = 2; dd <= 9; ++dd) {
      text += std::to_string(dd) + ",";
      text += format_rational_decimal(corollary2_fixed_d_limit(dd)) + ",";
      text += dd == 2 ? format_rational_decimal(BigRat(1, 3)) : std::string("-");
      text += "," + format_rational_decimal(corollary3_expressions(2, dd).asymptotic_cap) + "\n";
    }
    emit(out_path, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
