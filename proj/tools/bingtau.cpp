// Command line front end: expression/tree parsing, database loading,
// dispatch, and certificate emission.
//
// Exit codes: 0 computed (either verdict), 2 input or parse error,
// 3 unknown knot / missing invariant, 4 unsupported case.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bingtau/certificate.hpp"
#include "bingtau/collapse.hpp"
#include "bingtau/database_io.hpp"
#include "bingtau/errors.hpp"
#include "bingtau/parse.hpp"
#include "bingtau/pipelines.hpp"
#include "bingtau/quasipos.hpp"
#include "bingtau/tau.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnknownKnot = 3;
constexpr int kExitUnsupported = 4;

struct Options {
  std::vector<std::string> db_files;
  bool json = false;
  bool swap_roles = false;
  std::string strategy = "deepest-leftmost";
  bool trace = false;

  std::string expr_text;
  std::string tree_text;
  std::string tree2_text;
  std::string knot;
};

bingtau::KnotDatabase load_databases(const Options& opt) {
  bingtau::KnotDatabase db = bingtau::KnotDatabase::builtin();
  for (const std::string& file : opt.db_files)
    bingtau::load_database_file(db, file);
  return db;
}

bingtau::PipelineOptions pipeline_options(const Options& opt) {
  bingtau::PipelineOptions p;
  p.strategy = bingtau::CollapseStrategy::parse(opt.strategy);
  p.roles = opt.swap_roles ? bingtau::RoleAssignment::LeftIsQ
                           : bingtau::RoleAssignment::LeftIsP;
  return p;
}

void print_verdict_report(const bingtau::Certificate& cert) {
  std::cout << "verdict: " << bingtau::to_string(cert.verdict) << "\n";
  std::cout << "tau: " << cert.tau << "\n";
  std::cout << "final_knot: " << bingtau::to_text(cert.final_knot) << "\n";
  if (!cert.steps.empty())
    std::cout << "steps: " << cert.steps.size() << " collapse(s)\n";
  for (const std::string& line : cert.citations)
    std::cout << "  citation: " << line << "\n";
  for (const std::string& line : cert.notes)
    std::cout << "  note: " << line << "\n";
}

int run_tau(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::KnotExpr e = bingtau::parse_expr(opt.expr_text);
  if (opt.json) {
    std::cout << bingtau::certificate_to_json_text(
        bingtau::obstruct_expr(e, opt.expr_text, db));
  } else {
    std::cout << bingtau::tau(e, db) << "\n";
  }
  return kExitOk;
}

int run_normalize(const Options& opt) {
  const bingtau::KnotExpr e = bingtau::parse_expr(opt.expr_text);
  if (opt.json) {
    const bingtau::KnotDatabase db = load_databases(opt);
    std::cout << bingtau::certificate_to_json_text(
        bingtau::obstruct_expr(e, opt.expr_text, db));
  } else {
    std::cout << bingtau::print_expr(e) << "\n";
  }
  return kExitOk;
}

int run_sqp(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::KnotExpr e = bingtau::parse_expr(opt.expr_text);
  if (opt.json) {
    std::cout << bingtau::certificate_to_json_text(
        bingtau::sqp_certificate(e, opt.expr_text, db));
  } else {
    const bingtau::TriState state = bingtau::sqp(e, db);
    std::cout << bingtau::to_string(state.state) << "\n";
    for (const std::string& rule : state.rules)
      std::cout << "  rule: " << rule << "\n";
  }
  return kExitOk;
}

int run_obstruct_expr(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::KnotExpr e = bingtau::parse_expr(opt.expr_text);
  const bingtau::Certificate cert = bingtau::obstruct_expr(e, opt.expr_text, db);
  if (opt.json)
    std::cout << bingtau::certificate_to_json_text(cert);
  else
    print_verdict_report(cert);
  return kExitOk;
}

int run_obstruct_bing(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::TreeShape shape = bingtau::parse_tree(opt.tree_text);
  const bingtau::Certificate cert =
      bingtau::obstruct_bing_double(shape, opt.knot, db, pipeline_options(opt));
  if (opt.json)
    std::cout << bingtau::certificate_to_json_text(cert);
  else
    print_verdict_report(cert);
  return kExitOk;
}

int run_obstruct_hopf(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::TreeShape shape1 = bingtau::parse_tree(opt.tree_text);
  const bingtau::TreeShape shape2 = bingtau::parse_tree(opt.tree2_text);
  try {
    const bingtau::Certificate cert =
        bingtau::obstruct_hopf(shape1, shape2, db, pipeline_options(opt));
    if (opt.json)
      std::cout << bingtau::certificate_to_json_text(cert);
    else
      print_verdict_report(cert);
    return kExitOk;
  } catch (const bingtau::BothTreesTrivialError& e) {
    if (opt.json) {
      bingtau::Certificate cert;
      cert.input.kind = "hopf";
      cert.input.tree1 = shape1.text();
      cert.input.tree2 = shape2.text();
      cert.input.strategy = pipeline_options(opt).strategy.text();
      cert.input.swap_roles = opt.swap_roles;
      cert.input.databases = db.sources();
      cert.verdict = bingtau::CertVerdict::Unsupported;
      cert.notes = {e.what()};
      std::cout << bingtau::certificate_to_json_text(cert);
    } else {
      std::cout << "verdict: unsupported\n";
    }
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  }
}

int run_collapse(const Options& opt) {
  const bingtau::KnotDatabase db = load_databases(opt);
  const bingtau::TreeShape shape = bingtau::parse_tree(opt.tree_text);
  const bingtau::PipelineOptions p = pipeline_options(opt);
  const bingtau::LabeledTree tree = bingtau::wh_plus_bing_labeled(shape);
  const bingtau::CollapseResult result =
      bingtau::collapse_full(tree, p.strategy, p.roles, &db);

  if (opt.json) {
    std::cout << bingtau::collapse_trace_to_json_text(
        shape.text(), p.strategy, p.roles, db, result.records, result.chain);
    return kExitOk;
  }
  if (opt.trace) {
    std::size_t step = 1;
    for (const bingtau::CollapseRecord& rec : result.records) {
      std::cout << "step " << step++ << ": collapse node " << rec.node_id
                << " (P=leaf " << rec.p_leaf_id << ", Q=leaf " << rec.q_leaf_id
                << ", l=" << rec.l << ", R=" << bingtau::to_text(rec.r)
                << ", u=" << rec.u << ") -> " << bingtau::to_text(rec.new_label)
                << "\n";
    }
  }
  std::cout << "chain: " << bingtau::to_text(result.chain) << "\n";
  const bingtau::HeddenReport hedden = bingtau::hedden_condition(result.chain, db);
  std::cout << "hedden: " << (hedden.holds ? "satisfied" : "violated") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic tau-obstruction calculator for doubled satellite "
               "knots and iterated Bing doubles"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--db", opt.db_files,
                 "knot database JSON file (repeatable; later files override)");
  app.add_flag("--json", opt.json, "emit a JSON certificate");
  app.add_flag("--swap-roles", opt.swap_roles,
               "give the left sibling the Q role during collapses");
  app.add_option("--strategy", opt.strategy,
                 "collapse order: deepest-leftmost | custom:<id>,<id>,...");

  auto* tau_cmd = app.add_subcommand("tau", "evaluate tau of an expression");
  tau_cmd->fallthrough();
  tau_cmd->add_option("expr", opt.expr_text, "knot expression")->required();

  auto* norm_cmd = app.add_subcommand("normalize", "canonical form of an expression");
  norm_cmd->fallthrough();
  norm_cmd->add_option("expr", opt.expr_text, "knot expression")->required();

  auto* sqp_cmd =
      app.add_subcommand("sqp", "strong quasipositivity by rule closure");
  sqp_cmd->fallthrough();
  sqp_cmd->add_option("expr", opt.expr_text, "knot expression")->required();

  auto* obstruct = app.add_subcommand("obstruct", "smooth-sliceness obstructions");
  obstruct->require_subcommand(1);
  obstruct->fallthrough();

  auto* ob_expr = obstruct->add_subcommand("expr", "tau obstruction for an expression");
  ob_expr->fallthrough();
  ob_expr->add_option("expr", opt.expr_text, "knot expression")->required();

  auto* ob_bing = obstruct->add_subcommand(
      "bing", "Wh+ of an iterated Bing double of a named knot");
  ob_bing->fallthrough();
  ob_bing->add_option("--tree", opt.tree_text, "tree shape, e.g. \"((*,*),*)\"")
      ->required();
  ob_bing->add_option("--knot", opt.knot, "base knot name")->required();

  auto* ob_hopf = obstruct->add_subcommand(
      "hopf", "Wh+ of a partially iterated Bing double of the Hopf link");
  ob_hopf->fallthrough();
  ob_hopf->add_option("--tree1", opt.tree_text, "first component tree shape")
      ->required();
  ob_hopf->add_option("--tree2", opt.tree2_text, "second component tree shape")
      ->required();

  auto* collapse_cmd =
      app.add_subcommand("collapse", "collapse a Wh+-labeled tree to a chain");
  collapse_cmd->fallthrough();
  collapse_cmd->add_option("--tree", opt.tree_text, "tree shape")->required();
  collapse_cmd->add_flag("--trace", opt.trace, "print each collapse step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (tau_cmd->parsed()) return run_tau(opt);
    if (norm_cmd->parsed()) return run_normalize(opt);
    if (sqp_cmd->parsed()) return run_sqp(opt);
    if (obstruct->parsed()) {
      if (ob_expr->parsed()) return run_obstruct_expr(opt);
      if (ob_bing->parsed()) return run_obstruct_bing(opt);
      if (ob_hopf->parsed()) return run_obstruct_hopf(opt);
    }
    if (collapse_cmd->parsed()) return run_collapse(opt);
    std::cerr << "no command given\n";
    return kExitInput;
  } catch (const bingtau::UnknownKnotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownKnot;
  } catch (const bingtau::MissingInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownKnot;
  } catch (const bingtau::UnsupportedCaseError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const bingtau::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
