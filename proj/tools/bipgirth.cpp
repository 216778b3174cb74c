// bipgirth: command-line front end. Exit codes: 0 completed, 1 usage or input
// error, 2 counterexample found / fact or audit violated.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bipgirth/audit.hpp"
#include "bipgirth/auxiliary.hpp"
#include "bipgirth/compliance.hpp"
#include "bipgirth/constructions.hpp"
#include "bipgirth/frontier.hpp"
#include "bipgirth/girth.hpp"
#include "bipgirth/io.hpp"
#include "bipgirth/json.hpp"
#include "bipgirth/layers.hpp"
#include "bipgirth/lemma/applied.hpp"
#include "bipgirth/lemma/delta.hpp"
#include "bipgirth/lemma/facts.hpp"
#include "bipgirth/lemma/stress.hpp"
#include "bipgirth/search.hpp"

namespace {

using namespace bipgirth;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_found = 2;

/// Output stream for a path, with "-" meaning stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

AnyDigraph load(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

BipartiteDigraph load_bipartite(const std::string& path) {
  AnyDigraph g = load(path);
  if (auto* bg = std::get_if<BipartiteDigraph>(&g)) return *bg;
  throw Error(ErrorCode::ParseError, "'" + path + "' is not a bipartite edge list");
}

std::set<std::size_t> parse_offsets(const std::string& text) {
  std::set<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      if (item.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::ParseError, "bad offset '" + item + "'");
      out.insert(std::stoul(item));
    }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  auto s = parse_offsets(text);
  return {s.begin(), s.end()};
}

struct RationalFlag {
  std::string text;
  Rational value() const { return parse_rational(text); }
};

void add_rational(CLI::App* app, const std::string& name, RationalFlag& flag, const std::string& help,
                  bool required = true) {
  auto* opt = app->add_option(name, flag.text, help + " (p/q or integer; decimals are rejected)");
  if (required) opt->required();
}

// ---------------------------------------------------------------- construct

struct ConstructOpts {
  std::size_t k = 1, s = 1, t = 1, n = 1, na = 1, nb = 1;
  std::string out_offsets, in_offsets, input;
  RationalFlag alpha, beta;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "edges";
};

void add_output_flags(CLI::App* sub, ConstructOpts& o) {
  sub->add_option("--out", o.out, "output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", o.format, "edges or dot")->check(CLI::IsMember({"edges", "dot"}))->capture_default_str();
}

template <class Graph>
void emit(const Graph& g, const ConstructOpts& o) {
  Sink sink(o.out);
  if (o.format == "dot") write_dot(sink.stream(), g);
  else write_edge_list(sink.stream(), g);
}

// ------------------------------------------------------------------ helpers

std::string cycle_text(const std::vector<VertexRef>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
  return s;
}

std::string cycle_text(const std::vector<std::size_t>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string set_text(const SideSet& s) {
  std::string out;
  for (const auto& v : s.vertices()) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Girth, layers, frontier classification, search and inequality checks for bipartite digraphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all subcommand help");

  // construct
  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a digraph");
  construct->require_subcommand(1);
  auto* c_layered = construct->add_subcommand("layered", "2k+2 classes of size t joined cyclically");
  c_layered->add_option("--k", co.k)->required();
  c_layered->add_option("--t", co.t)->required();
  add_output_flags(c_layered, co);
  auto* c_circ = construct->add_subcommand("circulant", "circulant on n = k(s+t-1)+1 indices");
  c_circ->add_option("--k", co.k)->required();
  c_circ->add_option("--s", co.s)->required();
  c_circ->add_option("--t", co.t)->required();
  add_output_flags(c_circ, co);
  auto* c_off = construct->add_subcommand("offset", "circulant with explicit offset sets");
  c_off->add_option("--n", co.n)->required();
  c_off->add_option("--out-offsets", co.out_offsets, "comma-separated offsets for A->B")->required();
  c_off->add_option("--in-offsets", co.in_offsets, "comma-separated offsets for B->A")->required();
  add_output_flags(c_off, co);
  auto* c_ch = construct->add_subcommand("ch-reduce", "bipartite double of a general digraph");
  c_ch->add_option("input", co.input, "general digraph edge list ('-' for stdin)")->required();
  add_output_flags(c_ch, co);
  auto* c_rand = construct->add_subcommand("random", "random digraph with exact compliant out-degrees");
  c_rand->add_option("--na", co.na)->required();
  c_rand->add_option("--nb", co.nb)->required();
  add_rational(c_rand, "--alpha", co.alpha, "B-vertex out-degree ratio");
  add_rational(c_rand, "--beta", co.beta, "A-vertex out-degree ratio");
  c_rand->add_option("--seed", co.seed)->capture_default_str();
  add_output_flags(c_rand, co);

  // girth
  std::string girth_file;
  auto* girth_cmd = app.add_subcommand("girth", "print the girth and a shortest cycle, or 'acyclic'");
  girth_cmd->add_option("file", girth_file)->required();

  // layers
  std::string layers_file, layers_vertex;
  std::size_t layers_max = 8;
  bool layers_backward = false;
  auto* layers_cmd = app.add_subcommand("layers", "distance layers N_i (or M_i with --backward)");
  layers_cmd->add_option("file", layers_file)->required();
  layers_cmd->add_option("--vertex", layers_vertex, "source vertex, e.g. A3")->required();
  layers_cmd->add_option("--max", layers_max)->capture_default_str();
  layers_cmd->add_flag("--backward", layers_backward);

  // comply
  std::string comply_file;
  RationalFlag comply_alpha, comply_beta;
  auto* comply_cmd = app.add_subcommand("comply", "test (alpha,beta)-compliance");
  comply_cmd->add_option("file", comply_file)->required();
  add_rational(comply_cmd, "--alpha", comply_alpha, "B-side ratio");
  add_rational(comply_cmd, "--beta", comply_beta, "A-side ratio");

  // classify
  std::size_t classify_k = 1;
  RationalFlag classify_alpha, classify_beta;
  auto* classify_cmd = app.add_subcommand("classify", "GOOD / BAD / UNKNOWN for girth bound 2k");
  classify_cmd->add_option("--k", classify_k)->required();
  add_rational(classify_cmd, "--alpha", classify_alpha, "alpha");
  add_rational(classify_cmd, "--beta", classify_beta, "beta");

  // region
  std::size_t region_k = 1, region_res = 100;
  std::string region_format = "csv", region_file = "-";
  unsigned region_threads = default_thread_count();
  auto* region_cmd = app.add_subcommand(
      "region",
      "classify the grid (i/res, j/res). CSV columns: alpha,beta,status,provenance "
      "(alpha and beta as p/q; status GOOD|BAD|UNKNOWN; provenance has no commas)");
  region_cmd->add_option("--k", region_k)->required();
  region_cmd->add_option("--resolution", region_res)->capture_default_str();
  region_cmd->add_option("--out", region_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}))->capture_default_str();
  region_cmd->add_option("--file", region_file, "output path, '-' for stdout")->capture_default_str();
  region_cmd->add_option("--threads", region_threads)->capture_default_str();

  // search
  SearchConfig sc;
  RationalFlag search_alpha, search_beta;
  std::string search_mode = "exhaustive", witness_out;
  std::optional<std::uint64_t> node_limit;
  std::optional<unsigned> search_threads;
  bool search_all = false;
  auto* search_cmd = app.add_subcommand("search", "look for a compliant digraph of girth > 2k (JSON report)");
  search_cmd->add_option("--k", sc.k)->required();
  search_cmd->add_option("--na", sc.n_a)->required();
  search_cmd->add_option("--nb", sc.n_b)->required();
  add_rational(search_cmd, "--alpha", search_alpha, "B-vertex out-degree ratio");
  add_rational(search_cmd, "--beta", search_beta, "A-vertex out-degree ratio");
  search_cmd->add_flag("--eulerian", sc.eulerian, "require in-degree = out-degree at every vertex");
  search_cmd->add_option("--mode", search_mode)->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
  search_cmd->add_option("--seed", sc.seed)->capture_default_str();
  search_cmd->add_option("--node-limit", node_limit, "per work unit (default 10^9)");
  search_cmd->add_option("--threads", search_threads);
  search_cmd->add_flag("--all", search_all, "keep going after the first witness and count every class");
  search_cmd->add_option("--witness-out", witness_out, "also write the witness edge list here");

  // lemmas
  bool lemmas_all = false;
  std::string lemmas_fact, lemmas_stress;
  std::size_t lemmas_count = 100000;
  std::uint64_t lemmas_seed = 7;
  unsigned lemmas_threads = default_thread_count();
  auto* lemmas_cmd = app.add_subcommand("lemmas", "numeric fact scans and randomized inequality suites (JSON)");
  auto* opt_all = lemmas_cmd->add_flag("--all", lemmas_all, "scan every fact F1..F11");
  auto* opt_fact = lemmas_cmd->add_option("--fact", lemmas_fact, "one fact id, e.g. F5");
  auto* opt_stress = lemmas_cmd->add_option("--stress", lemmas_stress, "newineq, appliedineq or bells")
                         ->check(CLI::IsMember({"newineq", "appliedineq", "bells"}));
  opt_all->excludes(opt_fact)->excludes(opt_stress);
  opt_fact->excludes(opt_stress);
  lemmas_cmd->add_option("--count", lemmas_count)->capture_default_str();
  lemmas_cmd->add_option("--seed", lemmas_seed)->capture_default_str();
  lemmas_cmd->add_option("--threads", lemmas_threads)->capture_default_str();

  // audit
  auto* audit = app.add_subcommand("audit", "check proved layer statements on a digraph");
  audit->require_subcommand(1);
  std::string audit_file, audit_vertex = "A0";
  std::size_t audit_k = 1;
  std::optional<std::size_t> audit_horizon;
  RationalFlag audit_alpha, audit_beta, audit_delta;
  auto* a_bigset = audit->add_subcommand("bigset", "layer dichotomy with a CH-approximation constant delta");
  a_bigset->add_option("file", audit_file)->required();
  a_bigset->add_option("--k", audit_k)->required();
  add_rational(a_bigset, "--alpha", audit_alpha, "alpha");
  add_rational(a_bigset, "--beta", audit_beta, "beta");
  add_rational(a_bigset, "--delta", audit_delta, "delta; omit to use every table entry forcing girth <= k", false);
  a_bigset->add_option("--vertex", audit_vertex, "source vertex; 'all' for every vertex")->capture_default_str();
  a_bigset->add_option("--horizon", audit_horizon, "largest i (default 2k+2)");
  auto* a_bigindeg = audit->add_subcommand("bigindeg", "some B-vertex has |M1|+|M3| >= (alpha+beta)|A|");
  a_bigindeg->add_option("file", audit_file)->required();
  add_rational(a_bigindeg, "--alpha", audit_alpha, "alpha");
  add_rational(a_bigindeg, "--beta", audit_beta, "beta");
  RationalFlag bx, by, blambda, bbeta, bgamma, bmu;
  std::string bells_x, bells_y, bells_r = "all";
  auto* a_bells = audit->add_subcommand(
      "bells", "summation inequality on the digraph; R = S = all B->A edges unless --r-file is given. "
               "Without parameters they are measured (x=0, y=1, gamma=0, mu=beta)");
  a_bells->add_option("file", audit_file)->required();
  a_bells->add_option("--r-file", bells_r, "edge list whose B->A edges form R (default: all)");
  add_rational(a_bells, "--x", bx, "x", false);
  add_rational(a_bells, "--y", by, "y", false);
  add_rational(a_bells, "--lambda", blambda, "lambda", false);
  add_rational(a_bells, "--beta", bbeta, "beta", false);
  add_rational(a_bells, "--gamma", bgamma, "gamma", false);
  add_rational(a_bells, "--mu", bmu, "mu", false);
  a_bells->add_option("--X", bells_x, "comma-separated B indices");
  a_bells->add_option("--Y", bells_y, "comma-separated B indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (construct->parsed()) {
    if (c_layered->parsed()) emit(layered_cycle(co.k, co.t), co);
    else if (c_circ->parsed()) emit(circulant(co.k, co.s, co.t), co);
    else if (c_off->parsed()) emit(offset_circulant({co.n, parse_offsets(co.out_offsets), parse_offsets(co.in_offsets)}), co);
    else if (c_ch->parsed()) {
      AnyDigraph h = load(co.input);
      auto* gh = std::get_if<GeneralDigraph>(&h);
      if (!gh) throw Error(ErrorCode::ParseError, "ch-reduce expects a 'digraph' edge list");
      emit(ch_reduce(*gh), co);
    } else if (c_rand->parsed()) {
      emit(random_compliant(co.na, co.nb, co.alpha.value(), co.beta.value(), co.seed), co);
    }
    return exit_ok;
  }

  if (girth_cmd->parsed()) {
    AnyDigraph g = load(girth_file);
    std::visit(
        [](const auto& graph) {
          auto c = girth(graph);
          if (!c) {
            std::cout << "acyclic\n";
            return;
          }
          std::cout << "girth " << c->length << '\n' << "cycle " << cycle_text(c->vertices) << '\n';
        },
        g);
    return exit_ok;
  }

  if (layers_cmd->parsed()) {
    BipartiteDigraph g = load_bipartite(layers_file);
    VertexRef v = parse_vertex(layers_vertex);
    LayerProfile p = layers_backward ? backward_layers(g, v, layers_max) : forward_layers(g, v, layers_max);
    const char* name = layers_backward ? "M" : "N";
    for (std::size_t i = 0; i <= p.max_i; ++i)
      std::cout << name << i << ' ' << side_char(p[i].side) << ' ' << p[i].size() << " : " << set_text(p[i]) << '\n';
    return exit_ok;
  }

  if (comply_cmd->parsed()) {
    BipartiteDigraph g = load_bipartite(comply_file);
    const Rational al = comply_alpha.value(), be = comply_beta.value();
    bool ok = is_compliant(g, al, be);
    std::cout << (ok ? "compliant" : "not compliant") << " profile=" << to_string(compliance_profile(g)) << '\n';
    return exit_ok;
  }

  if (classify_cmd->parsed()) {
    std::cout << classify(classify_k, {classify_alpha.value(), classify_beta.value()}).describe() << '\n';
    return exit_ok;
  }

  if (region_cmd->parsed()) {
    auto rows = region_grid(region_k, region_res, region_threads);
    Sink sink(region_file);
    if (region_format == "csv") write_region_csv(sink.stream(), rows);
    else write_region_svg(sink.stream(), region_k, rows);
    return exit_ok;
  }

  if (search_cmd->parsed()) {
    sc.alpha = search_alpha.value();
    sc.beta = search_beta.value();
    sc.mode = search_mode == "random" ? SearchMode::randomized : SearchMode::exhaustive;
    sc.node_limit = node_limit;
    sc.thread_hint = search_threads;
    sc.stop_at_first = !search_all;
    SearchReport r = find_counterexample(sc);
    std::cout << to_json(r).dump(2) << '\n';
    if (r.witness && !witness_out.empty()) {
      Sink sink(witness_out);
      write_edge_list(sink.stream(), *r.witness);
    }
    return r.status == SearchStatus::FoundCounterexample ? exit_found : exit_ok;
  }

  if (lemmas_cmd->parsed()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool violated = false;
    if (!lemmas_stress.empty()) {
      if (lemmas_stress == "newineq") {
        for (auto c : {lemma::NewineqCase::a, lemma::NewineqCase::b, lemma::NewineqCase::c}) {
          auto r = lemma::run_newineq_stress(c, lemmas_count, lemmas_seed, lemmas_threads);
          violated = violated || r.violations > 0 || r.x_zero_mismatch > 0;
          out.push_back(lemma::to_json(r));
        }
      } else if (lemmas_stress == "appliedineq") {
        auto r = lemma::run_appliedineq_stress(lemmas_count, lemmas_seed, lemmas_threads);
        violated = r.violations > 0;
        out.push_back(lemma::to_json(r));
      } else {
        auto r = lemma::run_bells_corpus(lemma::construction_corpus(), lemmas_threads);
        violated = r.contradictions > 0;
        out.push_back(lemma::to_json(r));
      }
    } else {
      std::vector<std::string> ids = lemmas_fact.empty() ? lemma::fact_ids() : std::vector<std::string>{lemmas_fact};
      for (const auto& id : ids) {
        auto r = lemma::fact_scan(id);
        violated = violated || !r.holds_everywhere;
        out.push_back(lemma::to_json(r));
      }
    }
    std::cout << out.dump(2) << '\n';
    return violated ? exit_found : exit_ok;
  }

  if (audit->parsed()) {
    BipartiteDigraph g = load_bipartite(audit_file);
    if (a_bigset->parsed()) {
      const Rational al = audit_alpha.value(), be = audit_beta.value();
      std::vector<Rational> deltas;
      if (!audit_delta.text.empty()) deltas.push_back(audit_delta.value());
      else
        for (const auto& e : lemma::deltas_forcing_girth_at_most(audit_k)) deltas.push_back(e.delta);
      std::vector<VertexRef> sources;
      if (audit_vertex == "all") {
        for (std::size_t i = 0; i < g.a_size(); ++i) sources.push_back(a(i));
        for (std::size_t j = 0; j < g.b_size(); ++j) sources.push_back(b(j));
      } else {
        sources.push_back(parse_vertex(audit_vertex));
      }
      std::size_t violations = 0, rows = 0;
      for (const auto& d : deltas)
        for (const auto& v : sources) {
          auto rep = audit_bigset(g, audit_k, al, be, d, v, audit_horizon);
          violations += rep.violations;
          rows += rep.rows.size();
          for (const auto& row : rep.rows)
            if (!row.holds())
              std::cout << "violation delta=" << to_string(d) << " source=" << to_string(v) << " i=" << row.i
                        << " |N_i|=" << row.layer_size << " |N*_{i-1}|=" << row.star_size << '\n';
        }
      std::cout << "bigset rows=" << rows << " violations=" << violations << '\n';
      return violations ? exit_found : exit_ok;
    }
    if (a_bigindeg->parsed()) {
      auto rep = audit_bigindeg(g, audit_alpha.value(), audit_beta.value());
      std::cout << "bigindeg best=" << to_string(rep.best) << " sum=" << rep.best_sum
                << " bound=" << to_string(rep.bound) << ' ' << (rep.ok() ? "ok" : "VIOLATED") << '\n';
      return rep.ok() ? exit_ok : exit_found;
    }
    if (a_bells->parsed()) {
      const std::vector<Edge> s_edges = lemma::b_to_a_edges(g);
      std::vector<Edge> r_edges = s_edges;
      if (bells_r != "all") r_edges = lemma::b_to_a_edges(load_bipartite(bells_r));
      lemma::BellsInput in = lemma::measure_bells_params(g, r_edges, s_edges);
      const bool manual = !bx.text.empty() || !by.text.empty() || !blambda.text.empty() || !bbeta.text.empty() ||
                          !bgamma.text.empty() || !bmu.text.empty();
      if (manual) {
        if (bx.text.empty() || by.text.empty() || blambda.text.empty() || bbeta.text.empty() || bgamma.text.empty() ||
            bmu.text.empty())
          throw Error(ErrorCode::ParseError, "give all of --x --y --lambda --beta --gamma --mu, or none");
        in.params = {bx.value(), by.value(), bbeta.value(), bgamma.value(), blambda.value(), bmu.value()};
        in.x_set = parse_index_list(bells_x);
        in.y_set = parse_index_list(bells_y);
      }
      auto rep = lemma::bellsandwhistles_check(g, r_edges, s_edges, in.params, in.x_set, in.y_set);
      std::cout << "hypotheses " << (rep.hypotheses_held ? "held" : "failed: " + rep.failure) << '\n'
                << "conclusion " << to_string(rep.lhs) << " <= " << to_string(rep.rhs) << ' '
                << (rep.conclusion_held ? "holds" : "fails") << '\n';
      return rep.contradiction() ? exit_found : exit_ok;
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bipgirth::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
