// fpcat: finitely presented modules over Z, Q and Z/n from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fpcat/commands.hpp"

namespace {

using namespace fpcat;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCapability = 3, kInvariant = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string ring;
  std::string output = "canonical";
};

void check_ring(const Options& o, const Ring& found) {
  if (!o.ring.empty()) require_same_ring(Ring::parse(o.ring), found);
}

Presentation load(const Options& o, const std::string& path) {
  Presentation p = parse_presentation(read_file(path));
  check_ring(o, p.ring);
  return p;
}

MorphismPresentation load_morphism(const Options& o, const std::string& path) {
  MorphismPresentation m = parse_morphism(read_file(path));
  check_ring(o, m.source.ring);
  return m;
}

void emit(const Options& o, const CanonicalForm& c, const Ring& ring) {
  if (o.output == "presentation")
    std::cout << render_presentation(canonical_presentation(c, ring));
  else if (o.output == "json")
    std::cout << render_json(c, ring) << "\n";
  else
    std::cout << render_canonical(c) << "\n";
}

int emit_report(const Report& r) {
  std::cout << r.to_string();
  return r.all_passed() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented modules: tensor, hom, kernels, cokernels and coherence checks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--ring", o.ring, "Expected ring of the inputs (Z, Q or Z/<n>)");
  app.add_option("--output", o.output, "Output format")
      ->check(CLI::IsMember({"canonical", "presentation", "json"}));

  std::string first, second;
  auto* canonical = app.add_subcommand("canonical", "Invariant factors of a presentation");
  canonical->add_option("module", first, "Presentation file")->required();
  auto* tensor = app.add_subcommand("tensor", "Tensor product of two presentations");
  tensor->add_option("left", first, "Presentation file")->required();
  tensor->add_option("right", second, "Presentation file")->required();
  auto* hom = app.add_subcommand("hom", "Internal hom Hom(left, right)");
  hom->add_option("left", first, "Presentation file")->required();
  hom->add_option("right", second, "Presentation file")->required();
  auto* kernel = app.add_subcommand("kernel", "Kernel of a morphism");
  kernel->add_option("morphism", first, "Morphism file")->required();
  auto* cokernel = app.add_subcommand("cokernel", "Cokernel of a morphism");
  cokernel->add_option("morphism", first, "Morphism file")->required();
  std::uint64_t seed = 1;
  std::size_t count = 20;
  auto* axioms = app.add_subcommand("check-axioms", "Coherence suite on seeded random modules");
  axioms->add_option("--seed", seed, "Random seed");
  axioms->add_option("--count", count, "Number of sample modules")->check(CLI::PositiveNumber);
  auto* demo = app.add_subcommand("free-abelian-demo", "Coherence report for the free abelian category on Rows_Z");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*canonical) {
      Presentation p = load(o, first);
      emit(o, cmd_canonical(p), p.ring);
    } else if (*tensor) {
      Presentation p = load(o, first), q = load(o, second);
      emit(o, cmd_tensor(p, q), p.ring);
    } else if (*hom) {
      Presentation p = load(o, first), q = load(o, second);
      emit(o, cmd_hom(p, q), p.ring);
    } else if (*kernel) {
      MorphismPresentation m = load_morphism(o, first);
      emit(o, cmd_kernel(m), m.source.ring);
    } else if (*cokernel) {
      MorphismPresentation m = load_morphism(o, first);
      emit(o, cmd_cokernel(m), m.source.ring);
    } else if (*axioms) {
      return emit_report(cmd_check_axioms(seed, count, o.ring.empty() ? Ring::integers() : Ring::parse(o.ring)));
    } else if (*demo) {
      return emit_report(cmd_free_abelian_demo());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const RingError& e) {
    std::cerr << "ring error: " << e.what() << "\n";
    return kCapability;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapability;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
