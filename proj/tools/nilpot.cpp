// nilpot: command line front end.
//
//   nilpot validate FILE
//   nilpot ar FILE [--format dot|json|text]
//   nilpot index FILE [--method auto] [--no-verify]
//   nilpot check FILE [--theorem all]
//
// Exit codes: 0 ok, 1 I/O, 2 invalid presentation, 3 limits exceeded,
// 4 method inapplicable, 5 internal inconsistency.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilpot/errors.hpp"
#include "nilpot/theorems.hpp"

using nlohmann::json;
using namespace nilpot;

namespace {

enum Exit { kOk = 0, kIo = 1, kInvalid = 2, kLimits = 3, kInapplicable = 4, kInconsistent = 5 };

struct RunConfig {
  std::string input;
  std::string method = "auto";
  std::string theorem = "all";
  std::string format = "json";
  std::string output;
  bool verify = false;
  EnumerationLimits limits;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + cfg.output + "'");
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cmd_validate(const RunConfig& cfg) {
  const auto pres = load_presentation(cfg.input);
  const auto rep = validate_admissible(pres);
  const auto cls = classify(pres);
  const auto& q = pres.quiver;
  if (cfg.format == "text") {
    std::ostringstream s;
    s << "vertices " << q.num_vertices() << ", arrows " << q.num_arrows() << ", relations " << pres.relations.size()
      << "\n";
    s << "dimension " << rep.dimension << ", longest path " << rep.longest_path << "\n";
    s << "monomial " << yes_no(cls.is_monomial) << ", toupie " << yes_no(cls.toupie.has_value()) << "\n";
    return s.str();
  }
  json j;
  j["vertices"] = q.num_vertices();
  j["arrows"] = q.num_arrows();
  j["relations"] = pres.relations.size();
  j["dimension"] = rep.dimension;
  j["longest_path"] = rep.longest_path;
  j["nilpotency_degree"] = rep.nilpotency_degree;
  j["monomial"] = cls.is_monomial;
  j["toupie"] = cls.toupie.has_value();
  if (cls.toupie && cls.toupie->pattern) {
    const auto& p = *cls.toupie->pattern;
    j["toupie_pattern"] = {{"n1", p.n1}, {"n2", p.n2}, {"n3", p.n3}, {"j", p.j}, {"t", p.t}};
  }
  return j.dump(2) + "\n";
}

std::string cmd_ar(const RunConfig& cfg) {
  const auto pres = load_presentation(cfg.input);
  const Analysis an(pres, cfg.limits);
  const auto& q = pres.quiver;
  const auto& ar = an.ar();
  if (cfg.format == "dot") return to_dot(q, ar);
  if (cfg.format == "text") {
    std::ostringstream s;
    for (std::size_t i = 0; i < ar.nodes.size(); ++i) {
      const auto& n = ar.nodes[i];
      s << i << "  " << n.label << "  " << dimension_vector_string(n.module);
      if (n.tau) s << "  tau=" << ar.nodes[*n.tau].label;
      s << "\n";
    }
    for (const auto& e : ar.arrows) s << ar.nodes[e.from].label << " -> " << ar.nodes[e.to].label << "\n";
    return s.str();
  }
  json nodes = json::array();
  for (const auto& n : ar.nodes) {
    json node;
    node["label"] = n.label;
    node["dimension_vector"] = n.module.dims();
    node["projective"] = n.projective;
    node["injective"] = n.injective;
    node["tau"] = n.tau ? json(*n.tau) : json(nullptr);
    node["module"] = to_json(q, n.module);
    nodes.push_back(std::move(node));
  }
  json arrows = json::array();
  for (const auto& e : ar.arrows) arrows.push_back({{"from", e.from}, {"to", e.to}, {"irr_dim", e.irr_dim}});
  return json{{"nodes", nodes}, {"arrows", arrows}}.dump(2) + "\n";
}

std::string cmd_index(const RunConfig& cfg) {
  const auto method = parse_method(cfg.method);
  if (!method) throw CLI::ValidationError("--method", "unknown method '" + cfg.method + "'");
  const auto pres = load_presentation(cfg.input);
  const Analysis an(pres, cfg.limits);
  const auto rep = nilpotency_index(an, *method, cfg.verify);
  if (cfg.format == "text") {
    std::ostringstream s;
    s << "r_A = " << rep.r_A << " (" << rep.method << ")\n";
    for (const auto& [v, r] : rep.per_vertex) s << "r_" << pres.quiver.vertex_name(v) << " = " << r << "\n";
    for (const auto& n : rep.notes) s << "note: " << n << "\n";
    return s.str();
  }
  return to_json(pres.quiver, rep).dump(2) + "\n";
}

template <typename T>
json json_list(const Quiver& q, const std::vector<T>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(q, x));
  return a;
}

std::string cmd_check(const RunConfig& cfg) {
  static const std::vector<std::string> kAll = {"corollary", "A", "membership", "B", "C", "D", "lemmas"};
  if (cfg.theorem != "all" && std::find(kAll.begin(), kAll.end(), cfg.theorem) == kAll.end())
    throw CLI::ValidationError("--theorem", "unknown theorem '" + cfg.theorem + "'");
  const auto pres = load_presentation(cfg.input);
  const Analysis an(pres, cfg.limits);
  const auto& q = pres.quiver;

  auto run = [&](const std::string& name) -> json {
    if (name == "corollary") return json_list(q, check_corollary(an));
    if (name == "A") return json_list(q, check_factorization(an));
    if (name == "membership") return json_list(q, check_zero_relation_membership(an));
    if (name == "B") return to_json(q, check_zero_relation_vertices(an));
    if (name == "C") return to_json(q, check_one_vertex_per_relation(an));
    if (name == "D") return {{"reduction", to_json(q, check_toupie(an))}, {"witnesses", json_list(q, build_toupie_witnesses(an))}};
    json j;
    j["composite_lengths"] = json_list(q, check_composite_lengths(an));
    j["through_simples"] = json_list(q, check_simple_factorization(an));
    try {
      j["local_endomorphisms"] = json_list(q, check_local_endomorphisms(an));
    } catch (const MethodInapplicable& e) {
      j["local_endomorphisms"] = {{"inapplicable", e.what()}};
    }
    return j;
  };

  json out;
  if (cfg.theorem == "all") {
    for (const auto& name : kAll) {
      try {
        out[name] = run(name);
      } catch (const MethodInapplicable& e) {
        out[name] = {{"inapplicable", e.what()}};
      }
    }
  } else {
    out[cfg.theorem] = run(cfg.theorem);
  }
  if (cfg.format == "text") {
    std::ostringstream s;
    for (const auto& [name, val] : out.items()) {
      s << "[" << name << "]\n";
      if (val.is_array()) {
        for (const auto& f : val)
          if (f.contains("conclusion"))
            s << "  " << f["arrow"][0].get<std::string>() << " -> " << f["arrow"][1].get<std::string>() << ": "
              << f["conclusion"].get<std::string>() << "\n";
      } else if (val.contains("inapplicable")) {
        s << "  inapplicable: " << val["inapplicable"].get<std::string>() << "\n";
      } else {
        s << "  " << val.dump() << "\n";
      }
    }
    return s.str();
  }
  return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotency index of the radical of mod A for bound quiver algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.verify = true;

  auto add_common = [&](CLI::App* sub, bool enumerate) {
    sub->add_option("file", cfg.input, "presentation file")->required();
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    if (enumerate) {
      sub->add_option("--max-modules", cfg.limits.max_modules, "give up after this many indecomposables")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-dim", cfg.limits.max_total_dim, "give up once the modules found exceed this total dimension")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-module-dim", cfg.limits.max_module_dim, "give up when one indecomposable is this large")
          ->check(CLI::PositiveNumber);
    }
  };
  auto* validate = app.add_subcommand("validate", "parse and check admissibility");
  add_common(validate, false);
  validate->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver");
  add_common(ar, true);
  ar->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "dot"}));

  auto* index = app.add_subcommand("index", "nilpotency index r_A");
  add_common(index, true);
  index->add_option("--method", cfg.method, "direct|v-set|zero-relations|one-per-relation|toupie|auto");
  index->add_flag("--verify,!--no-verify", cfg.verify, "compare with the direct computation (default on)");
  index->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check", "hypothesis checks of the reduction results");
  add_common(check, true);
  check->add_option("--theorem", cfg.theorem, "corollary|A|membership|B|C|D|lemmas|all");
  check->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::string text;
    if (validate->parsed()) text = cmd_validate(cfg);
    else if (ar->parsed()) text = cmd_ar(cfg);
    else if (index->parsed()) text = cmd_index(cfg);
    else text = cmd_check(cfg);
    emit(cfg, text);
    return kOk;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "invalid presentation: " << e.what() << "\n";
    return kInvalid;
  } catch (const NotAdmissible& e) {
    std::cerr << "not admissible: " << e.what() << "\n";
    return kInvalid;
  } catch (const LimitsExceeded& e) {
    std::cerr << "limits exceeded: " << e.what() << "\n";
    return kLimits;
  } catch (const MethodInapplicable& e) {
    std::cerr << "method inapplicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
}
