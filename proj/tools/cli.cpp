#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sympow/sympow.hpp"

namespace sympow::cli {

namespace {

Graph parse_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument("bad graph spec '" + spec +
                          "' (expected cycle:N, complete:K, pendant:N:v or file:PATH)");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + s + "' in graph spec");
    }
  };
  if (kind == "cycle") return Graph::cycle(as_int(rest));
  if (kind == "complete") return Graph::complete(as_int(rest));
  if (kind == "pendant") {
    auto second = rest.find(':');
    if (second == std::string::npos)
      throw InvalidArgument("pendant spec needs pendant:N:v");
    return Graph::cycle_with_pendant(as_int(rest.substr(0, second)),
                                     as_int(rest.substr(second + 1)));
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw InvalidArgument("cannot open graph file '" + rest + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return Graph::from_edge_list(buf.str());
  }
  throw InvalidArgument("unknown graph kind '" + kind + "'");
}

// odd cycle parameter n with C_{2n+1} = the graph; errors otherwise
std::int64_t odd_cycle_n(const Graph& g, const std::string& what) {
  if (!g.is_odd_cycle())
    throw InvalidArgument(what + " requires an odd cycle graph");
  return (g.num_vertices() - 1) / 2;
}

std::uint64_t resolve_budget(std::int64_t flag_value) {
  if (flag_value >= 0) return static_cast<std::uint64_t>(flag_value);
  if (const char* env = std::getenv("SPT_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v >= 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("bad SPT_BUDGET value");
  }
  return kDefaultBudget;
}

struct Emitter {
  std::string command;
  nlohmann::json inputs;
  bool json = false;
  std::ostream* out = nullptr;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const nlohmann::json& output,
            const std::vector<std::pair<std::string, std::string>>& text) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (json) {
      nlohmann::json result{{"command", command},
                            {"inputs", inputs},
                            {"output", output},
                            {"elapsed_ms", elapsed}};
      *out << result.dump(2) << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : text) width = std::max(width, k.size());
    for (const auto& [k, v] : text)
      *out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
};

std::string join_monomials(const std::vector<Monomial>& ms, std::size_t limit = 20) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size() && i < limit; ++i) {
    if (i) os << ", ";
    os << ms[i].str();
  }
  if (ms.size() > limit) os << ", ... (" << ms.size() << " total)";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ordinary and symbolic powers of edge ideals of graphs"};
  app.require_subcommand(1);

  struct {
    std::string graph;
    std::string monomial;
    std::string mode = "closed";
    std::string kind = "symbolic";
    std::string power = "symbolic";
    std::int64_t t = 1;
    std::int64_t m = 1;
    std::int64_t r = 1;
    std::int64_t n = 1;
    std::int64_t witnesses = 4;
    std::int64_t budget = -1;
    bool json = false;
  } opt;

  auto add_common = [&](CLI::App* sub, bool with_graph = true) {
    if (with_graph)
      sub->add_option("--graph", opt.graph, "graph spec: cycle:N, complete:K, pendant:N:v, file:PATH")
          ->required();
    sub->add_flag("--json", opt.json, "emit the full CommandResult as JSON");
    sub->add_option("--budget", opt.budget, "enumeration budget (candidates); overrides SPT_BUDGET");
  };

  std::function<void(Emitter&)> action;

  auto* covers = app.add_subcommand("covers", "minimal vertex covers and the cover matrix");
  add_common(covers);
  covers->callback([&] {
    action = [&](Emitter& e) {
      Graph g = parse_graph(opt.graph);
      auto cs = minimal_vertex_covers(g);
      CoverMatrix matrix = cover_matrix(g);
      nlohmann::json output{{"covers", cs}, {"matrix", matrix}};
      std::vector<std::pair<std::string, std::string>> text;
      text.emplace_back("covers", std::to_string(cs.size()));
      for (const auto& c : cs) {
        std::ostringstream os;
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
          os << (i ? " " : "") << 'x' << c.vertices[i];
        text.emplace_back("  size " + std::to_string(c.vertices.size()), os.str());
      }
      e.emit(output, text);
    };
  });

  auto* factorize = app.add_subcommand("factorize", "optimal factorization and b(m)");
  add_common(factorize);
  factorize->add_option("--monomial,-m", opt.monomial, "monomial, e.g. x1^2*x2^2*x3 or 2,2,1,1,1")
      ->required();
  factorize->callback([&] {
    action = [&](Emitter& e) {
      Graph g = parse_graph(opt.graph);
      Monomial m = Monomial::parse(opt.monomial, g.num_vertices());
      Factorization f = optimal_factorization(g, m);
      nlohmann::json output;
      to_json(output, f);
      output["b"] = f.edge_count();
      output["monomial"] = m.exponents();
      e.emit(output, {{"monomial", m.str()},
                      {"b(m)", std::to_string(f.edge_count())},
                      {"optimal form", f.str()}});
    };
  });

  auto* member = app.add_subcommand("member", "power membership tests for a monomial");
  add_common(member);
  member->add_option("--monomial,-m", opt.monomial, "monomial to test")->required();
  member->add_option("--t", opt.t, "power")->required()->check(CLI::NonNegativeNumber);
  member->callback([&] {
    action = [&](Emitter& e) {
      EdgeIdeal ideal(parse_graph(opt.graph));
      Monomial m = Monomial::parse(opt.monomial, ideal.graph().num_vertices());
      const bool ordinary = in_ordinary_power(ideal, m, opt.t);
      const bool symbolic = in_symbolic_power(ideal, m, opt.t);
      nlohmann::json output{{"ordinary", ordinary},
                            {"symbolic", symbolic},
                            {"l", l_membership(ideal, m, opt.t)},
                            {"d", d_membership(ideal, m, opt.t)},
                            {"t", opt.t}};
      e.emit(output, {{"monomial", m.str()},
                      {"in I^t", ordinary ? "true" : "false"},
                      {"in I^(t)", symbolic ? "true" : "false"}});
    };
  });

  auto* gens = app.add_subcommand("gens", "minimal generators of a power");
  add_common(gens);
  gens->add_option("--t", opt.t, "power")->required()->check(CLI::NonNegativeNumber);
  gens->add_option("--kind", opt.kind, "symbolic | ordinary | d | l")
      ->check(CLI::IsMember({"symbolic", "ordinary", "d", "l"}));
  gens->callback([&] {
    action = [&](Emitter& e) {
      EdgeIdeal ideal(parse_graph(opt.graph));
      const std::uint64_t budget = resolve_budget(opt.budget);
      GeneratorSet set;
      if (opt.kind == "symbolic") set = symbolic_minimal_generators(ideal, opt.t, budget);
      else if (opt.kind == "ordinary") set = ordinary_power_generators(ideal, opt.t, budget);
      else if (opt.kind == "d") set = d_generators(ideal, opt.t, budget);
      else set = l_generators(ideal, opt.t, budget);
      nlohmann::json output{{"kind", opt.kind}, {"t", opt.t}, {"count", set.size()}};
      to_json(output["generators"], set);
      e.emit(output, {{"kind", opt.kind},
                      {"count", std::to_string(set.size())},
                      {"generators", join_monomials(set.monomials)}});
    };
  });

  auto* decomp = app.add_subcommand("check-decomp", "test the decomposition I^(t) = I^t + (D(t))");
  add_common(decomp);
  decomp->add_option("--t", opt.t, "power")->required()->check(CLI::NonNegativeNumber);
  decomp->callback([&] {
    action = [&](Emitter& e) {
      EdgeIdeal ideal(parse_graph(opt.graph));
      DecompositionReport report = check_decomposition(ideal, opt.t, resolve_budget(opt.budget));
      nlohmann::json output;
      to_json(output, report);
      output["t"] = opt.t;
      std::vector<std::pair<std::string, std::string>> text{
          {"holds", report.holds ? "true" : "false"}};
      if (report.witness) {
        text.emplace_back("witness", report.witness->str());
        text.emplace_back("witnesses", std::to_string(report.witnesses.size()));
        text.emplace_back("sum form holds", report.sum_holds ? "true" : "false");
      }
      e.emit(output, text);
    };
  });

  auto* alpha = app.add_subcommand("alpha", "minimal degree of the symbolic power");
  add_common(alpha);
  alpha->add_option("--t", opt.t, "power")->required()->check(CLI::PositiveNumber);
  alpha->add_option("--mode", opt.mode, "closed | lp | brute")
      ->check(CLI::IsMember({"closed", "lp", "brute"}));
  alpha->add_option("--power", opt.power, "brute mode target: symbolic | ordinary")
      ->check(CLI::IsMember({"symbolic", "ordinary"}));
  alpha->callback([&] {
    action = [&](Emitter& e) {
      Graph g = parse_graph(opt.graph);
      nlohmann::json output{{"mode", opt.mode}, {"t", opt.t}};
      std::vector<std::pair<std::string, std::string>> text;
      if (opt.mode == "closed") {
        const std::int64_t n = odd_cycle_n(g, "the alpha closed form");
        const std::int64_t value = alpha_symbolic_closed(n, opt.t);
        output["alpha"] = value;
        text.emplace_back("alpha(I^(t))", std::to_string(value));
      } else if (opt.mode == "lp") {
        CertifiedSolution cs = lp_solve_certified(alpha_program(g, opt.t));
        output["bound"] = cs.primal.value.str();  // a lower bound, not alpha itself
        output["dual_value"] = cs.dual.value.str();
        output["rows"] = alpha_program(g, opt.t).num_rows();
        if (g.is_odd_cycle()) {
          Rational sub = verify_subprogram_certificate(g, opt.t);
          output["subprogram_value"] = sub.str();
        }
        text.emplace_back("lp bound", cs.primal.value.str());
      } else {
        EdgeIdeal ideal(g);
        const std::int64_t value =
            alpha_bruteforce(ideal, opt.t, opt.power == "symbolic", resolve_budget(opt.budget));
        output["alpha"] = value;
        output["power"] = opt.power;
        text.emplace_back("alpha", std::to_string(value));
      }
      e.emit(output, text);
    };
  });

  auto* resurgence = app.add_subcommand("resurgence", "resurgence of an odd cycle edge ideal");
  add_common(resurgence, /*with_graph=*/false);
  resurgence->add_option("--n", opt.n, "odd cycle parameter: the graph is C_{2n+1}")->required()->check(CLI::PositiveNumber);
  resurgence->add_option("--witnesses", opt.witnesses, "how many witness terms to list")->check(CLI::NonNegativeNumber);
  resurgence->callback([&] {
    action = [&](Emitter& e) {
      const Rational rho = resurgence_closed(opt.n);
      nlohmann::json terms = nlohmann::json::array();
      std::vector<std::pair<std::string, std::string>> text{{"rho", rho.str()}};
      for (std::int64_t k = 0; k < opt.witnesses; ++k) {
        WitnessTerm w = witness_sequence(opt.n, k);
        nlohmann::json jw;
        to_json(jw, w);
        jw["in_T"] = in_T(opt.n, w.m, w.r);
        terms.push_back(std::move(jw));
        text.emplace_back("a_" + std::to_string(k),
                          std::to_string(w.m) + "/" + std::to_string(w.r));
      }
      e.emit(nlohmann::json{{"n", opt.n}, {"rho", rho.str()}, {"witnesses", terms}}, text);
    };
  });

  auto* sdefect = app.add_subcommand("sdefect", "symbolic defect of an odd cycle power");
  add_common(sdefect);
  sdefect->add_option("--t", opt.t, "power")->required()->check(CLI::PositiveNumber);
  sdefect->add_option("--mode", opt.mode, "closed | brute | both")
      ->check(CLI::IsMember({"closed", "brute", "both"}));
  sdefect->callback([&] {
    action = [&](Emitter& e) {
      Graph g = parse_graph(opt.graph);
      nlohmann::json output{{"mode", opt.mode}, {"t", opt.t}};
      std::vector<std::pair<std::string, std::string>> text;
      std::int64_t closed = -1, brute = -1;
      if (opt.mode != "brute") {
        closed = sdefect_closed(odd_cycle_n(g, "the sdefect closed form"), opt.t);
        output["closed"] = closed;
        text.emplace_back("closed", std::to_string(closed));
      }
      if (opt.mode != "closed") {
        EdgeIdeal ideal(g);
        brute = sdefect_bruteforce(ideal, opt.t, resolve_budget(opt.budget));
        output["brute"] = brute;
        text.emplace_back("brute", std::to_string(brute));
      }
      if (opt.mode == "both") {
        output["agree"] = closed == brute;
        text.emplace_back("agree", closed == brute ? "true" : "false");
      }
      e.emit(output, text);
    };
  });

  auto* contain = app.add_subcommand("contain", "does I^(m) lie inside I^r?");
  add_common(contain);
  contain->add_option("--m", opt.m, "symbolic power")->required()->check(CLI::PositiveNumber);
  contain->add_option("--r", opt.r, "ordinary power")->required()->check(CLI::PositiveNumber);
  contain->callback([&] {
    action = [&](Emitter& e) {
      EdgeIdeal ideal(parse_graph(opt.graph));
      ContainmentReport report =
          containment_check(ideal, opt.m, opt.r, resolve_budget(opt.budget));
      nlohmann::json output;
      to_json(output, report);
      if (ideal.graph().is_odd_cycle()) {
        const std::int64_t n = (ideal.graph().num_vertices() - 1) / 2;
        output["alpha_comparison"] = containment_by_alpha(n, opt.m, opt.r).contained;
      }
      e.emit(output, {{"contained", report.contained ? "true" : "false"},
                      {"method", to_string(report.method)}});
    };
  });

  std::vector<const char*> argv;
  argv.push_back("sympow");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Emitter emitter;
  emitter.command = app.get_subcommands().front()->get_name();
  emitter.json = opt.json;
  emitter.out = &out;
  for (const auto* o : app.get_subcommands().front()->get_options()) {
    if (o->count() == 0 || o->get_name() == "--json") continue;
    emitter.inputs[o->get_name().substr(2)] = o->results().front();
  }

  try {
    action(emitter);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const OutOfScope& e) {
    err << "out of scope: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace sympow::cli
