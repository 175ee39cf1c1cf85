// pmod: command-line front end for the presentation library.
//
// Exit codes: 0 answered (a "No" is an answer), 2 bad input, 3 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pmod/characterize.hpp"
#include "pmod/distance.hpp"
#include "pmod/onedim.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

struct Flags {
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  bool witness = false;
  bool json = false;
  std::string out;
  std::string eps;
};

pmod::SearchOptions search_options(const Flags& f) { return {f.budget, f.threads}; }

pmod::Epsilon read_eps(const std::string& text) {
  if (text.empty()) throw pmod::Error(pmod::ErrorKind::InvalidArgument, "--eps is required");
  if (text.find_first_of(".eE") != std::string::npos) {
    throw pmod::Error(pmod::ErrorKind::InvalidArgument, "--eps takes a rational such as 3/4, not a decimal");
  }
  return pmod::Epsilon::parse(text);
}

json matrix_json(const pmod::Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string witness_text(const pmod::InterleavingWitness& w) {
  return "A = " + w.a.entries().to_string() + "\nB = " + w.b.entries().to_string() + "\n";
}

void emit(const Flags& f, const std::string& text, const json& report) {
  std::string body = f.json ? report.dump(2) + "\n" : text;
  if (f.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(f.out);
  if (!file) throw pmod::Error(pmod::ErrorKind::InvalidArgument, "cannot write " + f.out);
  file << body;
}

int run_interleaved(const std::string& fm, const std::string& fn, const Flags& f) {
  pmod::InterleavingProblem prob(pmod::read_presentation_file(fm), pmod::read_presentation_file(fn), read_eps(f.eps));
  auto r = pmod::is_interleaved(prob, search_options(f));
  std::string text = std::string(pmod::to_string(r.decision)) + "\n";
  json report{{"decision", pmod::to_string(r.decision)},
              {"epsilon", prob.epsilon().to_string()},
              {"search_space", r.search_space},
              {"examined", r.examined}};
  if (r.witness) {
    report["A"] = matrix_json(r.witness->a.entries());
    report["B"] = matrix_json(r.witness->b.entries());
    if (f.witness) text += witness_text(*r.witness);
  }
  emit(f, text, report);
  return r.decision == pmod::Decision::BudgetExceeded ? kBudgetExceeded : 0;
}

int run_distance(const std::string& fm, const std::string& fn, const Flags& f) {
  auto pm = pmod::read_presentation_file(fm);
  auto pn = pmod::read_presentation_file(fn);
  if (pm.field().is_rational() && pn.field().is_rational() && pm.params() == 1 && pn.params() == 1) {
    // Over Q only the one-parameter case is computable, through barcodes.
    auto d = pmod::diagram_bottleneck(pmod::barcode(pm), pmod::barcode(pn));
    emit(f, "d_I = " + d.to_string() + "\n", json{{"status", "Exact"}, {"d_I", d.to_string()}, {"method", "barcode"}});
    return 0;
  }
  auto r = pmod::interleaving_distance(pm, pn, search_options(f));
  if (r.status == pmod::DistanceStatus::BudgetExceeded) {
    std::string lo = r.last_no ? r.last_no->to_string() : "-";
    std::string text = "BudgetExceeded at " + r.first_unknown.to_string() + ": d_I in (" + lo + ", " +
                       r.first_yes.to_string() + "]\n";
    emit(f, text,
         json{{"status", "BudgetExceeded"},
              {"last_no", r.last_no ? json(lo) : json(nullptr)},
              {"first_unknown", r.first_unknown.to_string()},
              {"first_yes", r.first_yes.to_string()},
              {"solver_calls", r.solver_calls}});
    return kBudgetExceeded;
  }
  std::string text = "d_I = " + r.value.to_string() + "\n";
  json report{{"status", "Exact"}, {"d_I", r.value.to_string()}, {"solver_calls", r.solver_calls}};
  if (r.witness) {
    report["A"] = matrix_json(r.witness->a.entries());
    report["B"] = matrix_json(r.witness->b.entries());
    if (f.witness) text += witness_text(*r.witness);
  }
  emit(f, text, report);
  return 0;
}

int run_candidates(const std::string& fm, const std::string& fn, const Flags& f) {
  auto u = pmod::candidate_set(pmod::read_presentation_file(fm), pmod::read_presentation_file(fn));
  std::string text = "U = {";
  json values = json::array();
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    if (i > 0) text += ", ";
    text += u.values[i].to_string();
    values.push_back(u.values[i].to_string());
  }
  emit(f, text + "}\n", json{{"candidates", values}});
  return 0;
}

json diagram_json(const pmod::PersistenceDiagram& d) {
  json out = json::array();
  for (const auto& [interval, m] : d.entries()) {
    out.push_back({{"birth", pmod::to_string(interval.birth)}, {"death", interval.death.to_string()}, {"multiplicity", m}});
  }
  return out;
}

int run_barcode(const std::string& file, const Flags& f) {
  auto d = pmod::barcode(pmod::read_presentation_file(file));
  emit(f, pmod::format_diagram(d), json{{"barcode", diagram_json(d)}});
  return 0;
}

int run_bottleneck(const std::string& fm, const std::string& fn, const Flags& f) {
  auto dm = pmod::barcode(pmod::read_presentation_file(fm));
  auto dn = pmod::barcode(pmod::read_presentation_file(fn));
  auto d = pmod::diagram_bottleneck(dm, dn);
  emit(f, "d_B = " + d.to_string() + "\n", json{{"d_B", d.to_string()}});
  return 0;
}

int run_minimize(const std::string& file, const Flags& f) {
  auto p = pmod::minimize(pmod::read_presentation_file(file));
  json gens = json::array();
  for (const auto& g : p.generators().generators()) gens.push_back({{"name", g.name}, {"grade", g.grade.to_string()}});
  json rels = json::array();
  for (const auto& r : p.relations()) rels.push_back({{"name", r.name}, {"grade", r.element.grade.to_string()}});
  emit(f, pmod::serialize(p), json{{"generators", gens}, {"relations", rels}});
  return 0;
}

int run_characterize(const std::string& fm, const std::string& fn, const Flags& f) {
  auto pm = pmod::read_presentation_file(fm);
  auto pn = pmod::read_presentation_file(fn);
  pmod::Epsilon e = read_eps(f.eps);
  auto r = pmod::is_interleaved(pmod::InterleavingProblem(pm, pn, e), search_options(f));
  if (r.decision != pmod::Decision::Yes) {
    emit(f, std::string(pmod::to_string(r.decision)) + "\n", json{{"decision", pmod::to_string(r.decision)}});
    return r.decision == pmod::Decision::BudgetExceeded ? kBudgetExceeded : 0;
  }
  auto c = pmod::compatible_presentations(pm, pn, *r.witness, e);
  std::string text = pmod::serialize(c.pair) + "\n" + pmod::serialize(c.induced_m) + "\n" + pmod::serialize(c.induced_n);
  if (f.witness) text = witness_text(*r.witness) + "\n" + text;
  pmod::GradedSet basis = c.pair.combined_basis();
  json y1 = json::array();
  json y2 = json::array();
  for (const auto& y : c.pair.y1) y1.push_back(pmod::format_element(y, basis));
  for (const auto& y : c.pair.y2) y2.push_back(pmod::format_element(y, basis));
  emit(f, text,
       json{{"decision", "Yes"},
            {"A", matrix_json(r.witness->a.entries())},
            {"B", matrix_json(r.witness->b.entries())},
            {"Y1", y1},
            {"Y2", y2},
            {"induced_M", pmod::serialize(c.induced_m)},
            {"induced_N", pmod::serialize(c.induced_n)}});
  return 0;
}

int run_isomorphic(const std::string& fm, const std::string& fn, const Flags& f) {
  auto r = pmod::is_isomorphic(pmod::read_presentation_file(fm), pmod::read_presentation_file(fn), search_options(f));
  std::string answer = !r ? "BudgetExceeded" : (*r ? "Yes" : "No");
  emit(f, answer + "\n", json{{"isomorphic", answer}});
  return r ? 0 : kBudgetExceeded;
}

int run_export(const std::string& fm, const std::string& fn, const Flags& f) {
  pmod::InterleavingProblem prob(pmod::read_presentation_file(fm), pmod::read_presentation_file(fn), read_eps(f.eps));
  auto sys = pmod::export_quadratic_system(prob);
  json eqs = json::array();
  for (const auto& eq : sys.equations) {
    json terms = json::array();
    for (const auto& t : eq) {
      json vars = json::array();
      for (std::size_t v : t.variables) vars.push_back(sys.variables[v]);
      terms.push_back({{"coefficient", t.coefficient.to_string()}, {"variables", vars}});
    }
    eqs.push_back(terms);
  }
  emit(f, sys.to_text(), json{{"field", sys.field.to_string()}, {"variables", sys.variables}, {"equations", eqs}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on finitely presented multiparameter persistence modules"};
  app.require_subcommand(1);
  Flags flags;
  std::string file_m;
  std::string file_n;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", flags.budget, "Largest number of lifts one search may enumerate")
        ->capture_default_str();
    sub->add_option("--threads", flags.threads, "Worker threads for the search")->check(CLI::PositiveNumber);
    sub->add_flag("--witness", flags.witness, "Print the A/B lift matrices");
    sub->add_flag("--json", flags.json, "Machine-readable report");
    sub->add_option("--out", flags.out, "Write the report to a file instead of stdout");
  };
  auto pair_cmd = [&](const char* name, const char* help, bool eps) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("M", file_m, "First presentation (.pmod)")->required()->check(CLI::ExistingFile);
    sub->add_option("N", file_n, "Second presentation (.pmod)")->required()->check(CLI::ExistingFile);
    if (eps) sub->add_option("--eps", flags.eps, "Nonnegative rational shift, e.g. 3/4")->required();
    add_common(sub);
    return sub;
  };
  auto single_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file_m, "Presentation (.pmod)")->required()->check(CLI::ExistingFile);
    add_common(sub);
    return sub;
  };

  auto* interleaved = pair_cmd("interleaved", "Decide whether M and N are eps-interleaved", true);
  auto* distance = pair_cmd("distance", "Interleaving distance", false);
  auto* candidates = pair_cmd("candidates", "Candidate values for the interleaving distance", false);
  auto* barcode = single_cmd("barcode", "Barcode of a one-parameter module");
  auto* bottleneck = pair_cmd("bottleneck", "Bottleneck distance of the two barcodes", false);
  auto* minimize = single_cmd("minimize", "Minimal presentation");
  auto* characterize = pair_cmd("characterize", "Compatible presentations from an eps-interleaving", true);
  auto* isomorphic = pair_cmd("isomorphic", "Decide isomorphism", false);
  auto* export_mq = pair_cmd("export-mq", "Quadratic system whose solutions are eps-interleavings", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (interleaved->parsed()) return run_interleaved(file_m, file_n, flags);
    if (distance->parsed()) return run_distance(file_m, file_n, flags);
    if (candidates->parsed()) return run_candidates(file_m, file_n, flags);
    if (barcode->parsed()) return run_barcode(file_m, flags);
    if (bottleneck->parsed()) return run_bottleneck(file_m, file_n, flags);
    if (minimize->parsed()) return run_minimize(file_m, flags);
    if (characterize->parsed()) return run_characterize(file_m, file_n, flags);
    if (isomorphic->parsed()) return run_isomorphic(file_m, file_n, flags);
    if (export_mq->parsed()) return run_export(file_m, file_n, flags);
  } catch (const pmod::SyntaxError& e) {
    std::cerr << "error: syntax: " << e.what() << "\n";
    return kInputError;
  } catch (const pmod::Error& e) {
    std::cerr << "error: " << pmod::to_string(e.kind()) << ": " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
