// SPDX-License-Identifier: MIT
//
// Command-line entry point: verification, composition, enumeration, frieze
// construction, and Chebyshev-polynomial checks over exact rationals.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "frz/chebyshev.hpp"
#include "frz/json_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitValidation = 2;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
};

// Reads an input argument: "-" is standard input, an existing file is read
// from disk, anything else is treated as an inline JSON literal.
std::string slurp(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

json load_json(const std::string& arg) { return frz::parse_json(slurp(arg)); }

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.format == "json")
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

int run_verify(const Options& opt, const std::string& input) {
  frz::QuidditySeq q = frz::sequence_from_json(load_json(input));
  frz::SquareMatrix m = frz::monodromy(q);
  frz::MonodromyClass c = frz::classify(m);
  emit(opt, json{{"class", frz::to_string(c)}, {"monodromy", frz::to_json(m)}},
       frz::to_string(c) + " " + frz::to_string(m));
  return c == frz::MonodromyClass::MinusId ? kExitOk : kExitMathFailure;
}

int run_compose(const Options& opt, const std::string& op, std::size_t index,
                const std::string& left, const std::string& right) {
  frz::QuidditySeq a = frz::sequence_from_json(load_json(left));
  frz::QuidditySeq b = frz::sequence_from_json(load_json(right));
  frz::QuidditySeq out;
  if (op == "circ")
    out = frz::circ(a, index, b);
  else if (op == "bullet")
    out = frz::bullet(a, index, b);
  else if (op == "boxplus")
    out = frz::boxplus(a, index, b);
  else
    out = frz::id_circ(a, index, b);
  emit(opt, frz::to_json(out), frz::to_string(out));
  return kExitOk;
}

int run_enumerate(const Options& opt, const std::string& kind, std::size_t n,
                  bool quiddity_only) {
  frz::DissectionKind k =
      kind == "tri" ? frz::DissectionKind::Triangulation : frz::DissectionKind::ThreeD;
  if (quiddity_only && k == frz::DissectionKind::Triangulation) {
    for (const auto& q : frz::quiddity_set(n)) emit(opt, frz::to_json(q), frz::to_string(q));
    return kExitOk;
  }
  for (const auto& d : frz::enumerate_dissections(k, n)) {
    if (quiddity_only) {
      emit(opt, frz::to_json(d.quiddity()), frz::to_string(d.quiddity()));
    } else {
      json j = frz::to_json(d);
      j["quiddity"] = frz::to_json(d.quiddity()).at("entries");
      emit(opt, j, frz::to_string(d.quiddity()));
    }
  }
  return kExitOk;
}

int run_mverify(const Options& opt, const std::string& input, const std::string& side) {
  frz::MonodromyClass c;
  json j = load_json(input);
  if (side == "bi") {
    c = frz::classify(frz::block_monodromy(frz::bisequence_from_json(j)));
  } else {
    frz::MatrixSeq s{frz::matrix_list_from_json(j),
                     side == "left" ? frz::Side::Left : frz::Side::Right};
    c = frz::classify(frz::block_monodromy(s));
  }
  emit(opt, json{{"class", frz::to_string(c)}}, frz::to_string(c));
  return c == frz::MonodromyClass::MinusId ? kExitOk : kExitMathFailure;
}

int run_mcompose(const Options& opt, const std::string& op, std::size_t index,
                 const std::string& left, const std::string& right) {
  frz::BiSequence a = frz::bisequence_from_json(load_json(left));
  frz::BiSequence out;
  if (op == "insert") {
    out = frz::bi_insert(a, index);
  } else {
    frz::BiSequence b = frz::bisequence_from_json(load_json(right));
    out = op == "circ" ? frz::bi_circ(a, index, b) : frz::bi_bullet(a, index, b);
  }
  emit(opt, frz::to_json(out), frz::to_json(out).dump());
  return kExitOk;
}

int run_gauss(const Options& opt, const std::string& a_in, const std::string& b_in,
              std::size_t iterate) {
  frz::SquareMatrix a = frz::matrix_from_json(load_json(a_in));
  frz::SquareMatrix b = frz::matrix_from_json(load_json(b_in));
  for (std::size_t k = 0; k < iterate; ++k) {
    auto next = frz::gauss_map(a, b);
    a = next.first;
    b = next.second;
  }
  emit(opt, json{{"A", frz::to_json(a)}, {"B", frz::to_json(b)}},
       frz::to_string(a) + " " + frz::to_string(b));
  return kExitOk;
}

int run_frieze(const Options& opt, const std::string& input, bool matrix,
               const std::string& render) {
  json j = load_json(input);
  if (matrix) {
    frz::MatrixFrieze f = frz::build_matrix_frieze(
        frz::MatrixSeq{frz::matrix_list_from_json(j), frz::Side::Left});
    if (render == "ascii") {
      std::cout << frz::render_ascii(f);
      return kExitOk;
    }
    emit(opt, frz::to_json(f), frz::render_ascii(f));
    return kExitOk;
  }
  frz::ScalarFrieze f = frz::build_scalar_frieze(frz::sequence_from_json(j));
  if (render == "ascii") {
    std::cout << frz::render_ascii(f);
    return kExitOk;
  }
  json out = frz::to_json(f);
  out["diamond"] = frz::check_scalar_diamond(f);
  emit(opt, out, frz::render_ascii(f));
  return kExitOk;
}

int run_cheb(const Options& opt, const std::string& coeffs_in, const std::string& pair_in,
             const std::string& check) {
  frz::MatrixList a = frz::matrix_list_from_json(load_json(coeffs_in));
  json out;
  frz::ChebResult r = cheb_left(a);
  json ps = json::array();
  for (long k = -1; k <= static_cast<long>(a.size()); ++k)
    ps.push_back(frz::to_json(r.at(k)).at("entries"));
  out["p"] = ps;
  if (!pair_in.empty()) {
    frz::ChebPair pr = frz::cheb_pair(a, frz::matrix_list_from_json(load_json(pair_in)));
    json qs = json::array();
    for (long k = -1; k <= static_cast<long>(a.size()); ++k)
      qs.push_back(frz::to_json(pr.q_at(k)).at("entries"));
    out["pair_q"] = qs;
  }
  json checks = json::object();
  if (check == "block" || check == "all") {
    frz::continuant_block(a);  // throws IdentityError on mismatch
    checks["block"] = "ok";
  }
  if (check == "det" || check == "all") {
    auto [dq, dp] = frz::det_identity(a);
    checks["det"] = dq.str();
  }
  if (check == "corner" || check == "all") {
    try {
      frz::corner_inverse(a);
      checks["corner"] = "ok";
    } catch (const frz::SingularError&) {
      checks["corner"] = "skipped-singular";
    }
  }
  out["checks"] = checks;
  emit(opt, out, out.dump());
  return kExitOk;
}

int run_axioms(const Options& opt, std::size_t max_n) {
  std::vector<frz::QuidditySeq> universe{{frz::GaussRational(0)},
                                         {frz::GaussRational(0), frz::GaussRational(0)}};
  for (std::size_t n = 3; n <= max_n; ++n)
    for (const auto& q : frz::quiddity_set(n)) universe.push_back(q);
  frz::AxiomReport rep = frz::check_operad_axioms(universe);
  json out{{"sequential_checked", rep.sequential_checked},
           {"parallel_checked", rep.parallel_checked},
           {"unit_checked", rep.unit_checked},
           {"exclusion_checked", rep.exclusion_checked},
           {"violations", rep.violations}};
  emit(opt, out, rep.ok() ? "all axioms hold" : "violations found");
  return rep.ok() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of quiddity sequences, friezes, and continuants"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized subroutines");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input, left, right, op, side = "left", kind = "tri", render = "json";
  std::string a_in, b_in, coeffs_in, pair_in, check = "all";
  std::size_t index = 1, n = 5, iterate = 5, max_n = 5;
  bool quiddity_only = false, matrix = false;

  auto* verify = app.add_subcommand("verify", "Classify the monodromy of a scalar sequence");
  verify->add_option("input", input, "Sequence JSON (path, literal, or -)")->required();

  auto* compose = app.add_subcommand("compose", "Compose two scalar sequences");
  compose->add_option("--op", op, "Product")
      ->required()
      ->check(CLI::IsMember({"circ", "bullet", "boxplus", "idcirc"}));
  compose->add_option("--index", index, "1-based composition index")->required();
  compose->add_option("left", left, "Left operand")->required();
  compose->add_option("right", right, "Right operand")->required();

  auto* boxplus = app.add_subcommand("boxplus", "Side-glueing product of two sequences");
  boxplus->add_option("--index", index, "1-based index")->required();
  boxplus->add_option("left", left, "Left operand")->required();
  boxplus->add_option("right", right, "Right operand")->required();

  auto* idcirc = app.add_subcommand("idcirc", "Product of identity-monodromy sequences");
  idcirc->add_option("--index", index, "1-based index")->required();
  idcirc->add_option("left", left, "Left operand")->required();
  idcirc->add_option("right", right, "Right operand")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate dissections of the n-gon");
  enumerate->add_option("--kind", kind, "Dissection kind")
      ->check(CLI::IsMember({"tri", "3d"}));
  enumerate->add_option("--n", n, "Number of vertices")->required();
  enumerate->add_flag("--quiddity-only", quiddity_only, "Emit quiddity sequences only");

  auto* mverify = app.add_subcommand("mverify", "Classify the block monodromy of a matrix sequence");
  mverify->add_option("input", input, "Matrix sequence or bi-sequence JSON")->required();
  mverify->add_option("--side", side, "Factorization side")
      ->check(CLI::IsMember({"left", "right", "bi"}));

  auto* mcompose = app.add_subcommand("mcompose", "Compose matrix bi-sequences");
  mcompose->add_option("--op", op, "Product")
      ->required()
      ->check(CLI::IsMember({"circ", "bullet", "insert"}));
  mcompose->add_option("--index", index, "1-based index")->required();
  mcompose->add_option("left", left, "First operand")->required();
  mcompose->add_option("right", right, "Second operand (unused for insert)");

  auto* gauss = app.add_subcommand("gauss", "Iterate the Gauss map on a commuting pair");
  gauss->add_option("--A", a_in, "First matrix JSON")->required();
  gauss->add_option("--B", b_in, "Second matrix JSON")->required();
  gauss->add_option("--iterate", iterate, "Number of iterations");

  auto* frieze = app.add_subcommand("frieze", "Frieze construction");
  auto* frieze_build = frieze->add_subcommand("build", "Build a frieze from a quiddity sequence");
  frieze_build->add_option("input", input, "Quiddity JSON")->required();
  frieze_build->add_flag("--matrix", matrix, "Input is a matrix sequence");
  frieze_build->add_option("--render", render, "Output form")
      ->check(CLI::IsMember({"ascii", "json"}));
  frieze->require_subcommand(1);

  auto* cheb = app.add_subcommand("cheb", "Signed Chebyshev polynomials and their identities");
  cheb->add_option("--coeffs", coeffs_in, "Coefficient matrix list JSON")->required();
  cheb->add_option("--pair", pair_in, "Second coefficient stream JSON");
  cheb->add_option("--check", check, "Identity checks to run")
      ->check(CLI::IsMember({"block", "det", "corner", "all"}));

  auto* axioms = app.add_subcommand("axioms", "Check the partial-composition axioms");
  axioms->add_option("--max-n", max_n, "Largest polygon size in the universe");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (verify->parsed()) return run_verify(opt, input);
    if (compose->parsed()) return run_compose(opt, op, index, left, right);
    if (boxplus->parsed()) return run_compose(opt, "boxplus", index, left, right);
    if (idcirc->parsed()) return run_compose(opt, "idcirc", index, left, right);
    if (enumerate->parsed()) return run_enumerate(opt, kind, n, quiddity_only);
    if (mverify->parsed()) return run_mverify(opt, input, side);
    if (mcompose->parsed()) {
      if (op != "insert" && right.empty())
        throw frz::ProductError("mcompose requires a second operand for this product");
      return run_mcompose(opt, op, index, left, right);
    }
    if (gauss->parsed()) return run_gauss(opt, a_in, b_in, iterate);
    if (frieze->parsed()) return run_frieze(opt, input, matrix, render);
    if (cheb->parsed()) return run_cheb(opt, coeffs_in, pair_in, check);
    if (axioms->parsed()) return run_axioms(opt, max_n);
  } catch (const frz::IdentityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const frz::FriezeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
