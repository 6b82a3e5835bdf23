// chalg command-line front end.  Exit codes: 0 success / identity holds,
// 1 identity fails, 2 usage error, 3 resource cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chalg/free_sigma.hpp"
#include "chalg/json_io.hpp"
#include "chalg/matrix_eval.hpp"
#include "chalg/norms.hpp"
#include "chalg/parser.hpp"
#include "chalg/sigma_ring.hpp"
#include "chalg/word.hpp"

namespace {

using namespace chalg;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Truncation truncation_from(uint32_t n) {
  return n == 0 ? Truncation::unbounded() : Truncation::level(n);
}

// "t1:a,t2:b,t3:ba" -> slots with the named parameters
std::vector<Slot> parse_slots(const std::string& text) {
  std::vector<Slot> slots;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string item = text.substr(start, end == std::string::npos ? end : end - start);
    if (item.empty()) throw std::invalid_argument("empty slot in --slots");
    std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0)
      throw std::invalid_argument("slot must look like t1:word; got \"" + item + "\"");
    std::string name = item.substr(0, colon);
    char family = name[0];
    if (family < 'a' || family > 'z' || name.size() < 2)
      throw std::invalid_argument("slot parameter must be a letter plus index; got \"" + name +
                                  "\"");
    uint32_t index = static_cast<uint32_t>(std::stoul(name.substr(1)));
    slots.push_back(Slot{{{Param{family, index}, 1}}, parse_word(item.substr(colon + 1))});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (slots.empty()) throw std::invalid_argument("--slots must name at least one slot");
  return slots;
}

std::vector<uint32_t> parse_multi_index(const std::string& text, std::size_t expect) {
  std::vector<uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    out.push_back(static_cast<uint32_t>(
        std::stoul(text.substr(start, end == std::string::npos ? end : end - start))));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.size() != expect)
    throw std::invalid_argument("--coeff must list one exponent per slot");
  return out;
}

std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    out.push_back(parse_word(text.substr(start, end == std::string::npos ? end : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

BlockShape parse_shape(const std::string& text) {
  std::vector<std::pair<uint32_t, uint32_t>> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string item = text.substr(start, end == std::string::npos ? end : end - start);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("shape block must look like m:a; got \"" + item + "\"");
    blocks.emplace_back(static_cast<uint32_t>(std::stoul(item.substr(0, colon))),
                        static_cast<uint32_t>(std::stoul(item.substr(colon + 1))));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return BlockShape(std::move(blocks));
}

int64_t draw(std::mt19937_64& rng, int64_t bound) {
  return int64_t(rng() % uint64_t(2 * bound + 1)) - bound;
}

// sigma-weight plus word length, maximized over terms; drives the default
// verify mode.
uint32_t total_degree(const NCPoly& f) {
  Int best = 0;
  for (auto& [w, c] : f.terms())
    for (auto& [key, q] : c.terms()) {
      Int d = Int(w.size()) + sigma_weight(key.gens);
      if (d > best) best = d;
    }
  return static_cast<uint32_t>(best);
}

struct NormCheckReport {
  uint32_t trials = 0;
  uint32_t mult_failures = 0;
  uint32_t hom_failures = 0;
  uint32_t ch_failures = 0;
  bool ok() const { return mult_failures + hom_failures + ch_failures == 0; }
};

NormCheckReport run_norm_checks(const BlockShape& shape, uint32_t trials, uint64_t seed,
                                int64_t bound) {
  NormCheckReport report;
  report.trials = trials;
  const uint32_t n = shape.degree();
  for (uint32_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (uint64_t(trial) + 1));
    auto random_element = [&]() {
      BlockElement r;
      for (auto& [m, a] : shape.blocks) {
        ExactMatrix<Rational> blk(m);
        for (uint32_t i = 0; i < m; ++i)
          for (uint32_t j = 0; j < m; ++j) blk.at(i, j) = draw(rng, bound);
        r.blocks.push_back(std::move(blk));
      }
      return r;
    };
    BlockElement r = random_element();
    BlockElement s = random_element();
    Rational lambda = draw(rng, 5);
    if (norm(shape, multiply(shape, r, s)) != norm(shape, r) * norm(shape, s))
      ++report.mult_failures;
    Rational scale_pow = 1;
    for (uint32_t k = 0; k < n; ++k) scale_pow *= lambda;
    if (norm(shape, scale(shape, lambda, r)) != scale_pow * norm(shape, r))
      ++report.hom_failures;
    if (!ch_check(shape, r)) ++report.ch_failures;
  }
  return report;
}

// ---- the n = 2 worked example ----------------------------------------

struct PaperExample {
  SigmaPoly first;   // sigma_{3;1,1,1}(a, b, ba) at level 2
  SigmaPoly second;  // sigma_{4;2,2}(a, b) at level 2
  SigmaPoly sum;
  SigmaPoly target;  // s2[ab] - s2[a] s2[b]
  bool first_ok, second_ok, sum_ok;
};

PaperExample run_paper_example() {
  Truncation two = Truncation::level(2);
  const Word a = parse_word("a"), b = parse_word("b"), ba = parse_word("ba"), ab =
      parse_word("ab");

  std::vector<Slot> slots3{Slot::plain('t', 1, a), Slot::plain('t', 2, b),
                           Slot::plain('t', 3, ba)};
  PaperExample ex;
  ex.first = polarize(3, slots3, two, std::vector<uint32_t>{1, 1, 1});

  std::vector<Slot> slots2{Slot::plain('t', 1, a), Slot::plain('t', 2, b)};
  ex.second = polarize(4, slots2, two, std::vector<uint32_t>{2, 2});

  ex.sum = ex.first + ex.second;
  ex.target = SigmaPoly::generator(2, ab) -
              SigmaPoly::generator(2, a) * SigmaPoly::generator(2, b);

  const std::string expected_first =
      "s1[a] s1[b] s1[ab] - s1[a] s1[abb] - s1[b] s1[aab] + s1[aabb] - 2 s2[ab]";
  const std::string expected_second =
      "-s1[a] s1[b] s1[ab] + s1[a] s1[abb] + s1[b] s1[aab] - s1[aabb] + s2[a] s2[b] + s2[ab]";
  ex.first_ok = to_string(ex.first) == expected_first;
  ex.second_ok = to_string(ex.second) == expected_second;
  ex.sum_ok = (ex.sum == ex.target) || (ex.sum == -ex.target);
  return ex;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for universal Cayley-Hamilton identities"};
  app.require_subcommand(1);

  bool json = false;
  bool unicode = false;
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_flag("--unicode", unicode, "render sigma generators with unicode");

  // lyndon
  auto* cmd_lyndon = app.add_subcommand("lyndon", "enumerate Lyndon words by length then lex");
  uint32_t alphabet = 2, max_len = 4;
  cmd_lyndon->add_option("--alphabet", alphabet, "alphabet size")->required();
  cmd_lyndon->add_option("--max-len", max_len, "maximum word length")->required();

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "normalize sI(word) to canonical generators");
  uint32_t reduce_n = 0;
  std::string reduce_expr;
  cmd_reduce->add_option("--n", reduce_n, "truncation level (0 = unbounded)")->required();
  cmd_reduce->add_option("expr", reduce_expr, "expression of the form sI(word)")->required();

  // amitsur
  auto* cmd_amitsur = app.add_subcommand("amitsur", "expand sigma_m of a slot combination");
  uint32_t am_m = 2, am_n = 0;
  std::string am_slots, am_coeff;
  cmd_amitsur->add_option("--m", am_m, "expansion degree")->required();
  cmd_amitsur->add_option("--n", am_n, "truncation level (0 = unbounded)")->required();
  cmd_amitsur->add_option("--slots", am_slots, "comma list t1:word")->required();
  cmd_amitsur->add_option("--coeff", am_coeff, "extract this parameter multi-index");

  // chpoly
  auto* cmd_chpoly = app.add_subcommand("chpoly", "formal Cayley-Hamilton polynomial");
  uint32_t ch_n = 2;
  std::string ch_expr;
  cmd_chpoly->add_option("--n", ch_n, "degree and truncation level")->required();
  cmd_chpoly->add_option("expr", ch_expr, "expression")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check that an expression vanishes identically");
  uint32_t ver_n = 2, ver_trials = 100;
  uint64_t ver_seed = 0;
  int64_t ver_bound = 10;
  bool ver_exact = false, ver_random = false;
  std::string ver_expr;
  cmd_verify->add_option("--n", ver_n, "matrix size")->required();
  cmd_verify->add_flag("--exact", ver_exact, "evaluate on generic matrices");
  cmd_verify->add_flag("--random", ver_random, "seeded random integer matrices");
  cmd_verify->add_option("--trials", ver_trials, "random trials");
  cmd_verify->add_option("--seed", ver_seed, "random seed");
  cmd_verify->add_option("--bound", ver_bound, "entry bound");
  cmd_verify->add_option("expr", ver_expr, "expression")->required();

  // kernel
  auto* cmd_kernel = app.add_subcommand("kernel", "kernel relations phi_{h,k}");
  uint32_t ker_n = 2;
  std::string ker_f, ker_g;
  cmd_kernel->add_option("--n", ker_n, "matrix size")->required();
  cmd_kernel->add_option("--f", ker_f, "comma list of monomials for f")->required();
  cmd_kernel->add_option("--g", ker_g, "comma list of monomials for g")->required();

  // norm-check
  auto* cmd_norm = app.add_subcommand("norm-check", "randomized suite for a block shape");
  std::string norm_shape;
  uint32_t norm_trials = 100;
  uint64_t norm_seed = 0;
  cmd_norm->add_option("--shape", norm_shape, "blocks as m:a,m:a")->required();
  cmd_norm->add_option("--trials", norm_trials, "trials");
  cmd_norm->add_option("--seed", norm_seed, "random seed");

  // repro-paper-example
  auto* cmd_repro =
      app.add_subcommand("repro-paper-example", "reproduce the n = 2 worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_lyndon) {
      auto words = lyndon_words(alphabet, max_len);
      if (json) {
        Json out = Json::array();
        for (auto& w : words) out.push_back(to_string(w));
        std::cout << out.dump() << "\n";
      } else {
        for (auto& w : words) std::cout << to_string(w) << "\n";
      }
      return kExitOk;
    }

    if (*cmd_reduce) {
      ast::Expr e = ast::parse(reduce_expr);
      if (e.terms.size() != 1 || e.terms[0].factors.size() != 1 || e.terms[0].negative ||
          e.terms[0].coeff || !std::holds_alternative<ast::SigmaOf>(e.terms[0].factors[0]))
        throw std::invalid_argument("reduce expects an expression of the form sI(word)");
      const auto& s = std::get<ast::SigmaOf>(e.terms[0].factors[0]);
      NCPoly inner = ast::to_ncpoly(*s.inner, truncation_from(reduce_n));
      if (inner.terms().size() != 1 || !inner.terms().begin()->second.as_constant() ||
          *inner.terms().begin()->second.as_constant() != 1)
        throw std::invalid_argument("reduce expects a plain word inside sI(...)");
      SigmaPoly result =
          normalize_sigma(s.index, inner.terms().begin()->first, truncation_from(reduce_n));
      std::cout << (json ? to_json(result).dump() : to_string(result, unicode)) << "\n";
      return kExitOk;
    }

    if (*cmd_amitsur) {
      std::vector<Slot> slots = parse_slots(am_slots);
      SigmaPoly result;
      if (!am_coeff.empty()) {
        result = polarize(am_m, slots, truncation_from(am_n),
                          parse_multi_index(am_coeff, slots.size()));
      } else {
        result = amitsur_expand(am_m, slots, truncation_from(am_n));
      }
      std::cout << (json ? to_json(result).dump() : to_string(result, unicode)) << "\n";
      return kExitOk;
    }

    if (*cmd_chpoly) {
      NCPoly f = ast::to_ncpoly(ast::parse(ch_expr), Truncation::level(ch_n));
      NCPoly result = ch_polynomial(ch_n, f);
      std::cout << (json ? to_json(result).dump() : to_string(result, unicode)) << "\n";
      return kExitOk;
    }

    if (*cmd_verify) {
      if (ver_exact && ver_random)
        throw std::invalid_argument("choose one of --exact and --random");
      NCPoly f = ast::to_ncpoly(ast::parse(ver_expr), Truncation::level(ver_n));
      VerifyOptions opts;
      opts.trials = ver_trials;
      opts.seed = ver_seed;
      opts.bound = ver_bound;
      if (ver_exact) {
        opts.mode = VerifyMode::exact_generic;
      } else if (ver_random) {
        opts.mode = VerifyMode::random;
      } else if (ver_n <= 2 && total_degree(f) <= 6) {
        opts.mode = VerifyMode::exact_generic;
      } else {
        opts.mode = VerifyMode::random;
        std::cerr << "note: defaulting to randomized mode (n = " << ver_n << ", degree "
                  << total_degree(f) << "); pass --exact to force generic matrices\n";
      }
      Verdict v = verify_identity(f, ver_n, opts);
      if (json) {
        std::cout << to_json(v).dump() << "\n";
      } else {
        std::cout << to_string(v.status);
        if (v.status == Verdict::Status::holds_randomized)
          std::cout << " (" << v.trials << " trials, seed " << v.seed << ")";
        std::cout << "\n";
        if (v.witness) {
          std::cout << "witness at trial " << v.witness->trial << ":\n";
          for (auto& [var, m] : v.witness->vars)
            std::cout << "  " << letter_name(var) << " = " << to_json(m).dump() << "\n";
          for (auto& [q, val] : v.witness->params)
            std::cout << "  " << q.name() << " = " << val << "\n";
        }
      }
      return v.holds() ? kExitOk : kExitIdentityFails;
    }

    if (*cmd_kernel) {
      auto rels = kernel_relations(ker_n, parse_word_list(ker_f), parse_word_list(ker_g));
      if (json) {
        std::cout << to_json(rels).dump() << "\n";
      } else {
        for (auto& rel : rels) {
          std::cout << "h=(";
          for (std::size_t i = 0; i < rel.f_exponents.size(); ++i)
            std::cout << (i ? "," : "") << rel.f_exponents[i];
          std::cout << ") k=(";
          for (std::size_t i = 0; i < rel.g_exponents.size(); ++i)
            std::cout << (i ? "," : "") << rel.g_exponents[i];
          std::cout << ") phi = " << to_string(rel.phi, unicode) << "\n";
        }
        if (rels.empty()) std::cout << "no nonzero relations\n";
      }
      return kExitOk;
    }

    if (*cmd_norm) {
      BlockShape shape = parse_shape(norm_shape);
      NormCheckReport report = run_norm_checks(shape, norm_trials, norm_seed, 10);
      if (json) {
        Json out{{"shape", to_json(shape)},
                 {"trials", report.trials},
                 {"multiplicativity_failures", report.mult_failures},
                 {"homogeneity_failures", report.hom_failures},
                 {"ch_failures", report.ch_failures},
                 {"ok", report.ok()}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "shape degree " << shape.degree() << ", " << report.trials
                  << " trials: multiplicativity " << (report.mult_failures ? "FAIL" : "ok")
                  << ", homogeneity " << (report.hom_failures ? "FAIL" : "ok") << ", ch "
                  << (report.ch_failures ? "FAIL" : "ok") << "\n";
      }
      return report.ok() ? kExitOk : kExitIdentityFails;
    }

    if (*cmd_repro) {
      PaperExample ex = run_paper_example();
      if (json) {
        Json out{{"sigma_3_111", to_json(ex.first)},
                 {"sigma_4_22", to_json(ex.second)},
                 {"sum", to_json(ex.sum)},
                 {"matches_displays", ex.first_ok && ex.second_ok},
                 {"sum_matches_up_to_sign", ex.sum_ok}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "sigma_{3;1,1,1}(a, b, ba) = " << to_string(ex.first, unicode) << "\n";
        std::cout << "sigma_{4;2,2}(a, b)      = " << to_string(ex.second, unicode) << "\n";
        std::cout << "sum                      = " << to_string(ex.sum, unicode) << "\n";
        std::cout << "displays match stored expectation: "
                  << (ex.first_ok && ex.second_ok ? "yes" : "NO") << "\n";
        std::cout << "sum equals "
                  << (ex.sum == ex.target ? "+" : (ex.sum == -ex.target ? "-" : "?"))
                  << "(s2[ab] - s2[a] s2[b])\n";
      }
      return (ex.first_ok && ex.second_ok && ex.sum_ok) ? kExitOk : kExitIdentityFails;
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
