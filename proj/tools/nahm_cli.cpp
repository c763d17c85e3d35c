// Command-line front end: structural reports for Lie algebras and their Nahm
// algebras, exact products, derivation bases, idempotent search, flow
// integration with monitors, and the theorem-check suite.
//
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nahm/algebra_io.hpp"
#include "nahm/catalog.hpp"
#include "nahm/derivations.hpp"
#include "nahm/flow.hpp"
#include "nahm/special.hpp"
#include "nahm/structure.hpp"
#include "nahm/theorems.hpp"

using namespace nahm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;


std::string vec_str(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

std::string elem_str(const NahmElement& x) {
  return vec_str(x.x1) + " ; " + vec_str(x.x2) + " ; " + vec_str(x.x3);
}

/// Parses "a,b,c;d,e,f;g,h,i" with rational entries into a NahmElement.
NahmElement parse_element(const NahmAlgebra& a, const std::string& text) {
  std::vector<Vec> slots;
  std::istringstream is(text);
  std::string slot;
  while (std::getline(is, slot, ';')) {
    Vec v;
    std::istringstream ss(slot);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      v.push_back(Rat::parse(tok));
    }
    slots.push_back(std::move(v));
  }
  if (slots.size() != 3)
    throw std::invalid_argument("element must have three ';'-separated slots");
  for (const auto& s : slots)
    if (static_cast<int>(s.size()) != a.n())
      throw std::invalid_argument("each slot needs " + std::to_string(a.n()) +
                                  " comma-separated rationals");
  return {slots[0], slots[1], slots[2]};
}

std::string signature_str(const std::array<int, 3>& s) {
  return "(pos " + std::to_string(s[0]) + ", neg " + std::to_string(s[1]) + ", zero " +
         std::to_string(s[2]) + ")";
}

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json checks = json::array();
  bool any_check_failed = false;
  bool json_mode = false;
  std::ostringstream text;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) any_check_failed = true;
    text << (pass ? "PASS  " : "FAIL  ") << name << (detail.empty() ? "" : " -- ") << detail
         << "\n";
  }

  void kv(const std::string& key, const json& value) {
    results[key] = value;
    if (value.is_string())
      text << key << ": " << value.get<std::string>() << "\n";
    else
      text << key << ": " << value.dump() << "\n";
  }

  int finish() const {
    if (json_mode) {
      json env = {{"command", command}, {"inputs", inputs}, {"results", results},
                  {"checks", checks}};
      std::cout << env.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return any_check_failed ? kExitCheckFailure : kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nahm algebras: structure, special elements, derivations, and the Nahm flow"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a machine-readable JSON envelope");

  std::string input;
  std::string x_text, y_text, p_text, out_path, monitors_text;
  double t_end = 10.0, tol = 1e-10, rel_tol = 1e-9, abs_tol = 1e-12;
  std::uint64_t seed = 1;
  bool newton = false, check_decomposition = false;

  auto* c_validate = app.add_subcommand("validate", "validate an algebra document");
  c_validate->add_option("file", input, "JSON algebra document")->required();

  auto* c_info = app.add_subcommand("info", "structural report for a Lie algebra");
  c_info->add_option("algebra", input, "file or catalog:NAME")->required();

  auto* c_nahm = app.add_subcommand("nahm-info", "structural report for the Nahm algebra A(g)");
  c_nahm->add_option("algebra", input, "file or catalog:NAME")->required();

  auto* c_prod = app.add_subcommand("product", "exact Nahm product of two elements");
  c_prod->add_option("algebra", input)->required();
  c_prod->add_option("--x", x_text, "first element: slot;slot;slot")->required();
  c_prod->add_option("--y", y_text, "second element")->required();

  auto* c_der = app.add_subcommand("derivations", "exact basis of Der(A(g))");
  c_der->add_option("algebra", input)->required();
  c_der->add_flag("--check-decomposition", check_decomposition,
                  "verify Der = diag(ad g) (+) so(3) (simple base)");

  auto* c_idem = app.add_subcommand("idempotent", "exact or numeric idempotent of A(g)");
  c_idem->add_option("algebra", input)->required();
  c_idem->add_flag("--newton", newton, "Newton search from a seeded random start");
  c_idem->add_option("--seed", seed, "random seed for --newton");
  c_idem->add_option("--tol", tol, "residual tolerance for --newton");

  auto* c_int = app.add_subcommand("integrate", "integrate the Nahm flow");
  c_int->add_option("algebra", input)->required();
  c_int->add_option("--p", p_text, "initial element, or the word 'idempotent'")->required();
  c_int->add_option("--t-end", t_end, "integration horizon");
  c_int->add_option("--rel-tol", rel_tol, "relative tolerance");
  c_int->add_option("--abs-tol", abs_tol, "absolute tolerance");
  c_int->add_option("--monitors", monitors_text, "comma list: confinement,potential,gradient");
  c_int->add_option("--out", out_path, "CSV output path (default stdout)");

  auto* c_thm = app.add_subcommand("check-theorems", "run the full invariant suite");
  c_thm->add_option("algebra", input)->required();

  app.add_subcommand("catalog", "list built-in algebras");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.json_mode = json_mode;

  try {
    if (c_validate->parsed()) {
      rep.command = "validate";
      rep.inputs["file"] = input;
      // Structural errors (bad JSON, bad indices) exit 2; a Jacobi failure is
      // a reported check with exit 1.
      LieAlgebra g = parse_algebra_file_unchecked(input);
      const auto v = g.validate();
      rep.kv("name", g.name());
      rep.kv("dim", g.dim());
      rep.check("antisymmetry", v.antisymmetry_ok);
      std::string detail;
      if (!v.jacobi_ok) {
        const auto& q = v.jacobi_failures.front();
        detail = "first failing quadruple (" + std::to_string(q[0] + 1) + "," +
                 std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) + "," +
                 std::to_string(q[3] + 1) + ")";
      }
      rep.check("jacobi", v.jacobi_ok, detail);
      return rep.finish();
    }

    if (c_info->parsed()) {
      rep.command = "info";
      rep.inputs["algebra"] = input;
      const LieAlgebra g = load_algebra(input);
      rep.kv("name", g.name());
      rep.kv("dim", g.dim());
      rep.kv("solvable", g.is_solvable());
      rep.kv("semisimple", g.is_semisimple());
      rep.kv("simple", g.is_simple());
      rep.kv("radical_dim", g.radical().dim());
      rep.kv("killing_signature", signature_str(g.killing().signature()));
      return rep.finish();
    }

    if (c_nahm->parsed()) {
      rep.command = "nahm-info";
      rep.inputs["algebra"] = input;
      const LieAlgebra g = load_algebra(input);
      const NahmAlgebra a{g};
      rep.kv("base", g.name());
      rep.kv("dim", a.dim());
      rep.kv("standard_form_signature", signature_str(a.standard_form().signature()));
      rep.kv("semisimple", is_semisimple_nahm(a));
      rep.kv("simple", is_simple_nahm(a));
      rep.kv("radical_dim", radical_nahm(a).dim());
      rep.kv("compact", g.is_semisimple() ? (a.is_compact() ? "yes" : "no") : "n/a");
      rep.kv("derivation_dim", derivation_algebra(a).dim());
      rep.check("grading", a.grading_check().pass());
      const auto w = power_assoc_witness(a);
      rep.kv("power_assoc_witness", w ? elem_str(w->x) : "none");
      return rep.finish();
    }

    if (c_prod->parsed()) {
      rep.command = "product";
      rep.inputs = {{"algebra", input}, {"x", x_text}, {"y", y_text}};
      const NahmAlgebra a{load_algebra(input)};
      const NahmElement x = parse_element(a, x_text);
      const NahmElement y = parse_element(a, y_text);
      rep.kv("product", elem_str(a.product(x, y)));
      return rep.finish();
    }

    if (c_der->parsed()) {
      rep.command = "derivations";
      rep.inputs["algebra"] = input;
      const NahmAlgebra a{load_algebra(input)};
      const Subspace der = derivation_algebra(a);
      rep.kv("dim", der.dim());
      json basis = json::array();
      for (int r = 0; r < der.dim(); ++r) {
        const Mat t = Mat::from_vector(der.basis_vector(r), a.dim(), a.dim());
        std::string rows;
        for (int i = 0; i < t.rows(); ++i) {
          if (i) rows += " | ";
          rows += vec_str(t.row(i));
        }
        basis.push_back(rows);
        if (!json_mode) rep.text << "D" << r << ": " << rows << "\n";
      }
      rep.results["basis"] = basis;
      if (check_decomposition) {
        const auto dc = decomposition_check(a);
        rep.check("decomposition: Der = diag(ad g) (+) so(3)", dc.pass(),
                  "dim " + std::to_string(dc.der_dim) + " vs dim g + 3 = " +
                      std::to_string(dc.expected_dim));
      }
      return rep.finish();
    }

    if (c_idem->parsed()) {
      rep.command = "idempotent";
      rep.inputs = {{"algebra", input}, {"newton", newton}, {"seed", seed}, {"tol", tol}};
      const NahmAlgebra a{load_algebra(input)};
      if (!newton) {
        const LieAlgebra& g = a.base();
        if (g.dim() >= 3) {
          try {
            const auto t =
                make_so3_triple(g, g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
            rep.kv("idempotent", elem_str(idempotent_from_so3(a, t)));
            rep.kv("kind", "exact");
            return rep.finish();
          } catch (const std::invalid_argument&) {
            // fall through to the failure report
          }
        }
        rep.kv("idempotent", "none");
        rep.check("exact idempotent from leading so(3) triple", false,
                  "no triple among the leading basis vectors; try --newton");
        return rep.finish();
      }
      const auto res = find_idempotent_random(a, seed, tol, 200);
      rep.kv("converged", res.converged);
      rep.kv("iterations", res.iterations);
      rep.kv("residual", res.residual);
      if (!res.converged) {
        rep.check("newton", false, res.failure);
        return rep.finish();
      }
      std::string xs;
      for (size_t i = 0; i < res.x.size(); ++i) {
        char b[32];
        std::snprintf(b, sizeof b, "%.17g", res.x[i]);
        xs += (i ? "," : "");
        xs += b;
      }
      rep.kv("x", xs);
      const auto exact = exactify_idempotent(a, res.x);
      if (exact) {
        rep.kv("exact", elem_str(*exact));
        rep.kv("kind", "exact (rationalized and re-verified)");
      } else {
        rep.kv("kind", "approximate-only (no exact idempotent within denominator bound)");
      }
      return rep.finish();
    }

    if (c_int->parsed()) {
      rep.command = "integrate";
      rep.inputs = {{"algebra", input}, {"p", p_text}, {"t_end", t_end}};
      const NahmAlgebra a{load_algebra(input)};
      NahmElement p = a.zero_element();
      if (p_text == "idempotent") {
        const LieAlgebra& g = a.base();
        const auto t = make_so3_triple(g, g.basis_vector(0), g.basis_vector(1),
                                       g.basis_vector(2));  // throws without one
        p = idempotent_from_so3(a, t);
      } else {
        p = parse_element(a, p_text);
      }
      FlowOptions opts;
      opts.t_end = t_end;
      opts.rel_tol = rel_tol;
      opts.abs_tol = abs_tol;
      if (!monitors_text.empty()) {
        std::istringstream ms(monitors_text);
        std::string m;
        while (std::getline(ms, m, ',')) {
          if (m != "confinement" && m != "potential" && m != "gradient")
            throw std::invalid_argument("unknown monitor '" + m + "'");
          opts.monitors.insert(m);
        }
      }
      const Trajectory traj = integrate(a, p, opts);
      rep.kv("status", to_string(traj.status));
      if (traj.status == FlowStatus::blow_up) rep.kv("t_blow_up_estimate", traj.blow_up_estimate);
      rep.kv("samples", traj.times.size());
      rep.kv("t_final", traj.t_back());
      if (out_path.empty()) {
        // CSV owns stdout in text mode; the summary goes to stderr.
        std::ostringstream os;
        write_csv(os, a, traj);
        if (!json_mode) {
          std::cout << os.str();
          std::cerr << rep.text.str();
          return rep.any_check_failed ? kExitCheckFailure : kExitOk;
        }
        rep.results["csv"] = "(stdout)";
      } else {
        std::ofstream os(out_path);
        if (!os) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
        write_csv(os, a, traj);
        rep.kv("csv", out_path);
      }
      return rep.finish();
    }

    if (c_thm->parsed()) {
      rep.command = "check-theorems";
      rep.inputs["algebra"] = input;
      const LieAlgebra g = load_algebra(input);
      const auto checks = run_theorem_checks(g);
      int passed = 0, failed = 0, skipped = 0;
      for (const auto& c : checks) {
        if (c.skipped) {
          ++skipped;
          rep.checks.push_back(
              {{"name", c.name}, {"pass", nullptr}, {"detail", c.detail}, {"skipped", true}});
          rep.text << "SKIP  " << c.name << " -- " << c.statement
                   << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
          continue;
        }
        (c.pass ? passed : failed) += 1;
        if (!c.pass) rep.any_check_failed = true;
        rep.checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"statement", c.statement},
                              {"detail", c.detail}});
        rep.text << (c.pass ? "PASS  " : "FAIL  ") << c.name << " -- " << c.statement
                 << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      }
      rep.results["passed"] = passed;
      rep.results["failed"] = failed;
      rep.results["skipped"] = skipped;
      rep.text << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
      return rep.finish();
    }

    // catalog
    rep.command = "catalog";
    for (const auto& entry : catalog_entries()) {
      rep.results[entry.name] = entry.summary;
      rep.text << entry.name << "  --  " << entry.summary << "\n";
    }
    return rep.finish();
  } catch (const AlgebraIoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
