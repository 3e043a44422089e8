#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpcat/commands.hpp"
#include "oracles.hpp"

using namespace fpcat;

namespace {

const std::string kData = FPCAT_DATA;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Presentation load(const std::string& name) { return parse_presentation(slurp(kData + "/" + name)); }

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::filesystem::path out = std::filesystem::temp_directory_path() / "fpcat_cli_test.out";
  std::string cmd = std::string("\"") + FPCAT_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  int raw = std::system(cmd.c_str());
  Run r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out.string())};
  std::filesystem::remove(out);
  return r;
}

std::string data(const std::string& name) { return "\"" + kData + "/" + name + "\""; }

}  // namespace

TEST_CASE("presentation files parse") {
  Presentation p = load("z2_z3_z.txt");
  CHECK(p.ring == Ring::integers());
  CHECK(p.relations == Matrix::from_rows(Ring::integers(), {{2, 0, 0}, {0, 3, 0}}));
  CHECK(load("z.txt").relations.rows() == 0);
  CHECK(load("z.txt").relations.cols() == 1);
  Presentation q = load("q.txt");
  CHECK(q.relations(0, 0) == Scalar(1, 2));
  CHECK(load("mod4.txt").ring == Ring::integers_mod(4));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("ring Z\nmatrix 2 2\n1\n");
    FAIL("no error raised");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).rfind("3:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_presentation("ring Z\nmatrix 1 2\n1  2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("ring Z\nmatrix 1 1\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("matrix 1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("ring Z\nmatrix 1 1\n1/2\n"), RingError);
  CHECK_THROWS_AS(parse_presentation("ring Z/0\nmatrix 1 1\n1\n"), RingError);
  CHECK_THROWS_AS(parse_morphism("ring Z\nmatrix 1 1\n2\nmatrix 1 1\n4\nmap 2 1\n1\n1\n"), ParseError);
}

TEST_CASE("comments and CRLF line endings are accepted") {
  Presentation p = parse_presentation("# a comment\r\nring Z\r\nmatrix 1 2\r\n# inside\r\n3 6\r\n");
  CHECK(p.relations == Matrix::from_rows(Ring::integers(), {{3, 6}}));
}

TEST_CASE("rendering round trips") {
  for (const char* name : {"z2_z3_z.txt", "z.txt", "q.txt", "mod4.txt"}) {
    Presentation p = load(name);
    Presentation back = parse_presentation(render_presentation(p));
    CHECK(back.ring == p.ring);
    CHECK(back.relations == p.relations);
  }
}

TEST_CASE("canonical forms") {
  CHECK(render_canonical(cmd_canonical(load("z2_z3_z.txt"))) == "free 1; torsion 6");
  CHECK(render_canonical(cmd_canonical(load("z.txt"))) == "free 1; torsion");
  CHECK(render_canonical(cmd_canonical(load("q.txt"))) == "free 2; torsion");
  CHECK(render_canonical(cmd_canonical(load("mod4.txt"))) == "free 0; torsion 2");
  CanonicalForm c = cmd_canonical(load("z2_z3_z.txt"));
  CHECK(canonical_form(canonical_presentation(c, Ring::integers())) == c);
}

TEST_CASE("module commands agree with the cyclic oracle") {
  CHECK(cmd_tensor(load("z4.txt"), load("z6.txt")) == oracle::from_cyclic({2}));
  CHECK(cmd_tensor(load("z2.txt"), load("z2_z3_z.txt")) == oracle::from_cyclic({2, 2}));
  CHECK(cmd_hom(load("z2.txt"), load("z4.txt")) == oracle::from_cyclic({2}));
  CHECK(cmd_hom(load("z2.txt"), load("z.txt")) == oracle::from_cyclic({}));
  CHECK(cmd_hom(load("z.txt"), load("z2_z3_z.txt")) == oracle::from_cyclic({2, 3, 0}));
  MorphismPresentation m = parse_morphism(slurp(kData + "/times2_z4.txt"));
  CHECK(cmd_kernel(m) == oracle::from_cyclic({2}));
  CHECK(cmd_cokernel(m) == oracle::from_cyclic({2}));
  CHECK_THROWS_AS(cmd_tensor(load("z4.txt"), load("mod4.txt")), RingError);
}

TEST_CASE("json output") {
  CanonicalForm c = cmd_canonical(load("z2_z3_z.txt"));
  auto j = nlohmann::json::parse(render_json(c, Ring::integers()));
  CHECK(j["ring"] == "Z");
  CHECK(j["free_rank"] == 1);
  CHECK(j["torsion"] == nlohmann::json::array({6}));
  CHECK(j["presentation"]["rows"] == 1);
  CHECK(j["presentation"]["cols"] == 2);
  CHECK(j["presentation"]["matrix"] == nlohmann::json::parse("[[6, 0]]"));
}

TEST_CASE("coherence suite on seeded modules") {
  Report r = cmd_check_axioms(1, 20);
  CHECK_MESSAGE(r.all_passed(), r.to_string());
  CHECK(r.entries.size() > 20);
  CHECK(cmd_free_abelian_demo().all_passed());
}

TEST_CASE("binary exit codes") {
  Run ok = run("canonical " + data("z2_z3_z.txt"));
  CHECK(ok.status == 0);
  CHECK(ok.out == "free 1; torsion 6\n");
  Run tensor = run("tensor " + data("z4.txt") + " " + data("z6.txt"));
  CHECK(tensor.status == 0);
  CHECK(tensor.out == "free 0; torsion 2\n");
  Run pres = run("--output presentation canonical " + data("z2_z3_z.txt"));
  CHECK(pres.status == 0);
  CHECK(pres.out == "ring Z\nmatrix 1 2\n6 0\n");
  CHECK(run("kernel " + data("times2_z4.txt")).out == "free 0; torsion 2\n");
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("canonical " + data("missing.txt")).status == 1);
  Run parse = run("canonical " + data("bad_row.txt"));
  CHECK(parse.status == 2);
  CHECK(parse.out.find("3:") != std::string::npos);
  CHECK(run("canonical " + data("bad_ring.txt")).status == 3);
  CHECK(run("--ring Q canonical " + data("z4.txt")).status == 3);
  CHECK(run("check-axioms --seed 1 --count 5").status == 0);
}
