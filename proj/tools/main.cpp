// Command-line front end: builds the derivative matrices, solves the
// homogeneous, simultaneous, and right-hand-side problems, reports predicted
// vs computed kernel dimensions, and re-verifies emitted JSON documents.
//
// Exit codes: 0 success, 2 expression/document parse errors, 3 dimension or
// arity errors, 4 inconsistent forced-cap solve, 5 predicted/computed
// dimension mismatch, 6 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polypde/polypde.hpp"

namespace {

using namespace polypde;

// Symbol expressions often start with '-' ("-x^2-y^2"), which an option
// parser would read as a flag, so the subcommands take no declared
// positionals; leftover tokens are gathered here instead.
std::vector<std::string> collect_symbols(const CLI::App& sub, bool single) {
  std::vector<std::string> out;
  for (const std::string& tok : sub.remaining()) {
    if (tok.rfind("--", 0) == 0) throw error("unknown flag '" + tok + "'");
    out.push_back(tok);
  }
  if (out.empty()) throw error("missing symbol expression");
  if (single && out.size() != 1)
    throw error("expected exactly one symbol expression");
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int root_arity(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), ',')) + 1;
}

std::vector<std::string> pick_vars(const std::string& vars_csv, int d) {
  if (!vars_csv.empty()) {
    std::vector<std::string> v = split_csv(vars_csv);
    if (static_cast<int>(v.size()) != d)
      throw arity_mismatch(std::to_string(v.size()) +
                           " variable names for a root of arity " +
                           std::to_string(d));
    return v;
  }
  static const std::vector<std::string> pool = {"x", "y", "z", "w"};
  if (d > static_cast<int>(pool.size()))
    throw arity_mismatch("default variable names cover at most " +
                         std::to_string(pool.size()) +
                         " dimensions; pass --vars");
  return {pool.begin(), pool.begin() + d};
}

multi_poly parse_symbol_text(const std::string& text,
                             const std::vector<std::string>& vars,
                             bool operator_mode) {
  if (operator_mode)
    return parse_operator(
        text, parse_context(vars, parse_context::mode_t::operator_mode));
  return parse_poly(text, parse_context(vars));
}

std::string render_root(const point& root) {
  std::string out = "(";
  for (std::size_t j = 0; j < root.size(); ++j) {
    if (j) out += ", ";
    out += format_scalar(root[j]);
  }
  return out + ")";
}

void print_space(std::ostream& os, const solution_space& s,
                 const std::vector<std::string>& vars,
                 const std::vector<std::string>& notes, bool latex) {
  auto poly_text = [&](const multi_poly& p) {
    return latex ? to_latex(p, vars) : to_plain(p, vars);
  };
  os << "root: " << render_root(s.root) << "\n";
  os << "exponential factor: "
     << (latex ? exponential_latex(s.root, vars)
               : exponential_plain(s.root, vars))
     << "\n";
  os << "degree cap: " << s.degree_cap << "\n";
  os << "dimension: " << s.dimension() << "\n";
  if (!s.basis.empty()) {
    os << "basis:\n";
    for (const multi_poly& b : s.basis) os << "  " << poly_text(b) << "\n";
  }
  if (s.particular) os << "particular: " << poly_text(*s.particular) << "\n";
  for (const std::string& n : notes) os << "note: " << n << "\n";
}

void emit_space(const solution_space& s, const std::vector<std::string>& vars,
                const std::vector<std::string>& notes,
                const std::string& format) {
  if (format == "json")
    std::cout << space_to_json(s, vars, notes).dump(2) << "\n";
  else
    print_space(std::cout, s, vars, notes, format == "latex");
}

struct solve_args {
  std::vector<std::string> symbols;
  std::string root_text;
  int degree = 0;
  std::string rhs_text;
  std::string vars_csv;
  bool operator_mode = false;
  std::string format = "plain";
};

int run_solve(const solve_args& a) {
  int d = root_arity(a.root_text);
  std::vector<std::string> vars = pick_vars(a.vars_csv, d);
  point root = parse_point(a.root_text, d);
  std::vector<multi_poly> symbols;
  for (const std::string& t : a.symbols)
    symbols.push_back(parse_symbol_text(t, vars, a.operator_mode));
  solution_space s = symbols.size() == 1
                         ? homogeneous_solutions(symbols.front(), root, a.degree)
                         : system_solutions(symbols, root, a.degree);
  std::vector<std::string> notes;
  if (s.basis.empty()) notes.push_back("trivial space");
  std::string why;
  if (!verify(s, symbols, std::nullopt, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 6;
  }
  emit_space(s, vars, notes, a.format);
  return 0;
}

int run_solve_rhs(const solve_args& a, bool degree_given) {
  int d = root_arity(a.root_text);
  std::vector<std::string> vars = pick_vars(a.vars_csv, d);
  point root = parse_point(a.root_text, d);
  multi_poly symbol =
      parse_symbol_text(a.symbols.front(), vars, a.operator_mode);
  multi_poly f = parse_poly(a.rhs_text, parse_context(vars));
  std::optional<int> cap;
  if (degree_given) cap = a.degree;
  solution_space s = rhs_solve(symbol, f, root, cap);
  std::vector<std::string> notes;
  if (s.basis.empty()) notes.push_back("unique solution");
  std::string why;
  if (!verify(s, {symbol}, f, &why)) {
    std::cerr << "internal verification failed: " << why << "\n";
    return 6;
  }
  emit_space(s, vars, notes, a.format);
  return 0;
}

int run_matrix(const solve_args& a, const std::vector<int>& block) {
  int d = root_arity(a.root_text);
  std::vector<std::string> vars = pick_vars(a.vars_csv, d);
  point root = parse_point(a.root_text, d);
  multi_poly symbol =
      parse_symbol_text(a.symbols.front(), vars, a.operator_mode);
  derivative_matrix dm = build_full(symbol, root, a.degree);
  exact_matrix out = dm.mat;
  if (!block.empty()) {
    int k = block[0], K = block[1];
    if (k < 0 || K < 0 || k > a.degree || K > a.degree)
      throw not_in_set("block indices must lie in [0, " +
                       std::to_string(a.degree) + "]");
    out = dm.block(k, K);
  }
  if (a.format == "json")
    std::cout << matrix_to_json(out).dump(2) << "\n";
  else
    std::cout << matrix_to_csv(out);
  return 0;
}

int run_dim(const solve_args& a) {
  int d = root_arity(a.root_text);
  std::vector<std::string> vars = pick_vars(a.vars_csv, d);
  point root = parse_point(a.root_text, d);
  multi_poly symbol =
      parse_symbol_text(a.symbols.front(), vars, a.operator_mode);
  dimension_report r = predicted_dimension(symbol, root, a.degree);
  std::cout << "m=" << r.least_order << ", predicted=" << r.predicted
            << ", computed=" << r.computed << "\n";
  return r.predicted == r.computed ? 0 : 5;
}

int run_verify(const std::vector<std::string>& symbol_texts,
               const std::string& solution_path, const std::string& rhs_text,
               bool operator_mode) {
  std::string text;
  if (solution_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(solution_path);
    if (!in) throw error("cannot open '" + solution_path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  space_document doc = space_from_json(json::parse(text));

  std::vector<multi_poly> symbols;
  for (const std::string& t : symbol_texts)
    symbols.push_back(parse_symbol_text(t, doc.vars, operator_mode));
  std::optional<multi_poly> rhs;
  if (!rhs_text.empty()) {
    rhs = parse_poly(rhs_text, parse_context(doc.vars));
    if (!doc.space.particular) {
      std::cerr << "verification failed: a right-hand side was given but the "
                   "document has no particular part\n";
      return 6;
    }
  }
  std::string why;
  if (!verify(doc.space, symbols, rhs, &why)) {
    std::cerr << "verification failed: " << why << "\n";
    return 6;
  }
  std::cout << "ok\n";
  return 0;
}

int guarded(const std::function<int()>& f) {
  try {
    return f();
  } catch (const inconsistent_system& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const dimension_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const arity_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const not_in_set& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const degree_exceeds_cap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const length_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const zero_polynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const empty_list& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial-times-exponential solutions of constant-"
               "coefficient linear PDEs, exactly over Q(i)"};
  app.require_subcommand(1);

  solve_args sa, ra, ma, da;
  std::vector<int> block;
  std::string verify_solution = "-", verify_rhs;
  bool verify_operator = false;

  CLI::App* solve = app.add_subcommand(
      "solve",
      "Solution space of P u = 0; positional arguments are symbol or "
      "operator expressions (several: simultaneous system)");
  solve->allow_extras();
  solve->add_option("--root", sa.root_text, "Root point, e.g. \"(1,i)\"")
      ->required();
  solve->add_option("--degree", sa.degree, "Degree cap L")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--vars", sa.vars_csv,
                    "Comma-separated variable names (default x,y,z,w)");
  solve->add_flag("--operator", sa.operator_mode,
                  "Read expressions in operator form (Dx, Dy, ..., I)");
  solve->add_option("--format", sa.format, "plain, json, or latex")
      ->check(CLI::IsMember({"plain", "json", "latex"}));

  CLI::App* solve_rhs = app.add_subcommand(
      "solve-rhs",
      "Solutions of P u = e^{i x0.x} F; the positional argument is the "
      "symbol or operator expression");
  solve_rhs->allow_extras();
  solve_rhs->add_option("--rhs", ra.rhs_text, "Right-hand side polynomial F")
      ->required();
  solve_rhs->add_option("--root", ra.root_text, "Root point")->required();
  solve_rhs
      ->add_option("--degree", ra.degree,
                   "Degree cap (default: deg F plus the least order)")
      ->check(CLI::NonNegativeNumber);
  solve_rhs->add_option("--vars", ra.vars_csv, "Comma-separated names");
  solve_rhs->add_flag("--operator", ra.operator_mode, "Operator form");
  solve_rhs->add_option("--format", ra.format, "plain, json, or latex")
      ->check(CLI::IsMember({"plain", "json", "latex"}));

  CLI::App* matrix = app.add_subcommand(
      "matrix",
      "Dump the scaled-derivative matrix (or one block) of the symbol or "
      "operator expression given as the positional argument");
  matrix->allow_extras();
  matrix->add_option("--root", ma.root_text, "Root point")->required();
  matrix->add_option("--degree", ma.degree, "Degree cap L")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix->add_option("--block", block, "Block row and column levels k K")
      ->expected(2);
  matrix->add_option("--vars", ma.vars_csv, "Comma-separated names");
  matrix->add_flag("--operator", ma.operator_mode, "Operator form");
  ma.format = "csv";
  matrix->add_option("--format", ma.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* dim = app.add_subcommand(
      "dim",
      "Predicted vs computed kernel dimension at a point for the symbol or "
      "operator expression given as the positional argument");
  dim->allow_extras();
  dim->add_option("--root", da.root_text, "Root point")->required();
  dim->add_option("--degree", da.degree, "Degree cap L")
      ->required()
      ->check(CLI::NonNegativeNumber);
  dim->add_option("--vars", da.vars_csv, "Comma-separated names");
  dim->add_flag("--operator", da.operator_mode, "Operator form");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Re-check an emitted JSON solution document against the symbol or "
      "operator expressions given as positional arguments");
  verify_cmd->allow_extras();
  verify_cmd->add_option("--solution", verify_solution,
                         "Document path ('-' for stdin)");
  verify_cmd->add_option("--rhs", verify_rhs,
                         "Right-hand side the particular part must reproduce");
  verify_cmd->add_flag("--operator", verify_operator, "Operator form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve->parsed())
    return guarded([&] {
      sa.symbols = collect_symbols(*solve, false);
      return run_solve(sa);
    });
  if (solve_rhs->parsed())
    return guarded([&] {
      ra.symbols = collect_symbols(*solve_rhs, true);
      return run_solve_rhs(ra, solve_rhs->count("--degree") > 0);
    });
  if (matrix->parsed())
    return guarded([&] {
      ma.symbols = collect_symbols(*matrix, true);
      return run_matrix(ma, block);
    });
  if (dim->parsed())
    return guarded([&] {
      da.symbols = collect_symbols(*dim, true);
      return run_dim(da);
    });
  return guarded([&] {
    return run_verify(collect_symbols(*verify_cmd, false), verify_solution,
                      verify_rhs, verify_operator);
  });
}
