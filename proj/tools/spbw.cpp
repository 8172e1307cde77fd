// Command-line front end for the skew PBW extension toolkit.
//
// Exit codes are a total function of the underlying verdicts:
//   0  pass / certified
//   1  file, expression, or usage parse error
//   2  presentation validation failure
//   3  refuted / check failed
//   4  inconclusive / disagreement
//   5  precondition violation (wrong mode or shape for the request)

#include "CLI11.hpp"

#include <spbw/jsonio.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace spbw;

void emit(const json& j, bool compact) {
  if (compact)
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

void print_report_text(const PresentationReport& rep) {
  for (const auto& e : rep.errors) std::cout << "error: " << e << "\n";
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
  if (rep.overlap) {
    std::cout << "overlap witness on variables";
    for (std::size_t i : rep.overlap->indices) std::cout << " " << i + 1;
    if (rep.overlap->with_base_generator)
      std::cout << " with base generator " << rep.overlap->base_generator + 1;
    std::cout << "\n  lhs: " << rep.overlap->lhs
              << "\n  rhs: " << rep.overlap->rhs << "\n";
  }
  if (rep.ok)
    std::cout << "ok (" << rep.spot_checks << " spot checks, seed "
              << rep.seed << ")\n";
}

ResolutionMode mode_from_name(const std::string& s) {
  if (s == "classical") return ResolutionMode::Classical;
  if (s == "generalized") return ResolutionMode::Generalized;
  return ResolutionMode::RAugmented;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Certified: return 0;
    case Verdict::Refuted: return 3;
    default: return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew PBW extension toolkit"};
  app.require_subcommand(1);

  bool json_out = false;
  std::uint64_t seed = 0x5b90;
  std::vector<unsigned> bounds;
  app.add_flag("--json", json_out, "compact JSON on stdout");
  app.add_option("--seed", seed, "seed for randomized spot checks");
  app.add_option("--bounds", bounds, "two window bounds, overriding positionals")
      ->expected(2);

  std::string file, expr_a, expr_b;
  std::string grading = "standard", mode_name = "classical";
  unsigned H = 4, D = 8;
  unsigned tH = 2, tJ = 4, tX = 3;
  bool right_side = false;

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    s->add_option("file", file, "presentation file")->required();
    return s;
  };

  CLI::App* c_validate = sub("validate", "parse and audit a presentation");
  CLI::App* c_classify = sub("classify", "report the classification flags");
  CLI::App* c_nf = sub("nf", "normal form of an expression");
  c_nf->add_option("expr", expr_a, "expression in the declared names")->required();
  CLI::App* c_mul = sub("mul", "normal form of a product");
  c_mul->add_option("left", expr_a)->required();
  c_mul->add_option("right", expr_b)->required();
  CLI::App* c_hilbert = sub("hilbert", "graded component dimensions");
  c_hilbert->add_option("grading", grading)
      ->check(CLI::IsMember({"standard", "base-induced", "x-degree"}));
  CLI::App* c_gr = sub("gr", "associated quasi-commutative presentation");
  CLI::App* c_aug = sub("aug", "standard-grading homogeneity audit");
  CLI::App* c_koszul = sub("koszul", "linear resolution certificate");
  c_koszul->add_option("mode", mode_name)
      ->check(CLI::IsMember({"classical", "generalized", "r-augmented"}));
  c_koszul->add_option("H", H, "homological steps");
  c_koszul->add_option("D", D, "internal degree window");
  CLI::App* c_tensor = sub("tensor-check", "base-resolution tensor exactness");
  c_tensor->add_option("H", tH, "homological steps");
  c_tensor->add_option("J", tJ, "base degree window");
  c_tensor->add_option("X", tX, "x-count window");
  c_tensor->add_flag("--right", right_side, "check the opposite presentation");
  CLI::App* c_abar = sub("abar", "radical quotient equivalence check");
  c_abar->add_option("H", H, "homological steps");
  c_abar->add_option("D", D, "internal degree window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  CLI::App* cmd = app.get_subcommands().front();

  try {
    Presentation p = parse_presentation_file(file);

    if (cmd == c_validate) {
      PresentationReport rep = validate_presentation(p, 64, seed);
      if (json_out)
        emit(json(rep), true);
      else
        print_report_text(rep);
      return rep.ok ? 0 : 2;
    }

    {
      PresentationReport rep = validate_presentation(p, 64, seed);
      if (!rep.ok) {
        for (const auto& e : rep.errors) std::cerr << "error: " << e << "\n";
        if (rep.overlap)
          std::cerr << "overlap: " << rep.overlap->lhs
                    << " != " << rep.overlap->rhs << "\n";
        if (json_out) emit(json(rep), true);
        return 2;
      }
    }

    if (cmd == c_classify) {
      emit(json(classify(p)), json_out);
      return 0;
    }
    if (cmd == c_nf) {
      SkewElement e = parse_element(p, expr_a);
      std::string s = e.to_string(p);
      if (json_out)
        emit(json{{"input", expr_a}, {"normal_form", s}}, true);
      else
        std::cout << s << "\n";
      return 0;
    }
    if (cmd == c_mul) {
      Rewriter rw(p);
      SkewElement prod = rw.mul(parse_element(p, expr_a), parse_element(p, expr_b));
      std::string s = prod.to_string(p);
      if (json_out)
        emit(json{{"left", expr_a}, {"right", expr_b}, {"product", s}}, true);
      else
        std::cout << s << "\n";
      return 0;
    }
    if (cmd == c_hilbert) {
      GradingKind g = *parse_grading(grading);
      unsigned a = 6, b = 6;
      if (bounds.size() == 2) { a = bounds[0]; b = bounds[1]; }
      emit(json(grading_dims(p, g, a, b)), json_out);
      return 0;
    }
    if (cmd == c_gr) {
      std::string text = format_presentation(associated_quasicommutative(p));
      if (json_out)
        emit(json{{"presentation", text}}, true);
      else
        std::cout << text;
      return 0;
    }
    if (cmd == c_aug) {
      emit(json(homogeneity_check(p, GradingKind::Standard)), json_out);
      return 0;
    }
    if (cmd == c_koszul) {
      if (bounds.size() == 2) { H = bounds[0]; D = bounds[1]; }
      KoszulCertificate cert =
          koszul_certificate(p, mode_from_name(mode_name), H, D);
      emit(json(cert), json_out);
      return verdict_exit(cert.verdict);
    }
    if (cmd == c_tensor) {
      if (bounds.size() == 2) { tJ = bounds[0]; tX = bounds[1]; }
      if (right_side) p = opposite_presentation(p);
      TensorCheckReport rep = tensor_resolution_check(p, tH, ADeg{tJ, tX});
      emit(json(rep), json_out);
      return rep.ok ? 0 : 3;
    }
    if (cmd == c_abar) {
      if (bounds.size() == 2) { H = bounds[0]; D = bounds[1]; }
      AbarReport rep = abar_equivalence_check(p, H, D);
      emit(json(rep), json_out);
      bool certified = rep.generalized.verdict == Verdict::Certified &&
                       rep.classical.verdict == Verdict::Certified;
      if (rep.agree && certified) return 0;
      if (rep.generalized.verdict == Verdict::Inconclusive ||
          rep.classical.verdict == Verdict::Inconclusive)
        return 4;
      return 3;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
