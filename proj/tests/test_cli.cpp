#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "pi/generators.hpp"
#include "pi/library.hpp"
#include "pi/rewrite.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result pi_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pi::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "pi_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

const std::string kData = PI_DATA_DIR;

}  // namespace

TEST_CASE("run") {
  auto r = pi_cli({"run", "-e", "toffoli", "(1b,(1b,0b))"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1b,(1b,1b))\n");
  r = pi_cli({"run", "--backward", "-e", "toffoli", "(1b,(1b,1b))"});
  CHECK(r.out == "(1b,(1b,0b))\n");
  r = pi_cli({"run", kData + "/library.pi", "(1b,(1b,0b))"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1b,(1b,1b))\n");
  r = pi_cli({"run", "-e", "swap+", "--type", "2 + 1", "inr ()"});
  CHECK(r.out == "inl ()\n");
  r = pi_cli({"run", "-e", "def f = cnot ; cnot\nf", "(1b,0b)"});
  CHECK(r.out == "(1b,0b)\n");
}

TEST_CASE("run: failures and exit codes") {
  auto r = pi_cli({"run", "-e", "id", "()"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Ambiguous") != std::string::npos);
  r = pi_cli({"run", "-e", "not", "(0b,0b)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ValueTypeMismatch") != std::string::npos);
  r = pi_cli({"run", "-e", "fold2 ; fold2", "0b"});
  CHECK(r.code == 1);
  CHECK(r.err.find("TypeMismatch") != std::string::npos);
  r = pi_cli({"run", "-e", "not ;", "0b"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1:6") != std::string::npos);
  r = pi_cli({"run", "-e", "not", "0"});
  CHECK(r.code == 2);
  r = pi_cli({"run", "-e", "nope", "0b"});
  CHECK(r.code == 2);
  r = pi_cli({"run", "/nonexistent/file.pi", "0b"});
  CHECK(r.code == 2);
  r = pi_cli({"run", "-e", "not"});
  CHECK(r.code == 2);
  CHECK(pi_cli({}).code == 2);
  CHECK(pi_cli({"frobnicate"}).code == 2);
  CHECK(pi_cli({"demo", "run"}).code == 2);
  CHECK(pi_cli({"--help"}).code == 0);
}

TEST_CASE("perm") {
  auto r = pi_cli({"perm", "-e", "cnot"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 * 2 <-> 2 * 2\n0 -> 0\n1 -> 1\n2 -> 3\n3 -> 2\ncycles: (0)(1)(2 3)\n");
  r = pi_cli({"perm", kData + "/library.pi"});
  CHECK(r.out.find("cycles: (0)(1)(2)(3)(4)(5)(6 7)") != std::string::npos);
  CHECK(pi_cli({"perm", "-e", "id"}).code == 1);
  CHECK(pi_cli({"perm", "-e", "id", "--type", "2"}).code == 0);
}

TEST_CASE("canon") {
  auto r = pi_cli({"canon", "-e", "not ; not"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ID\n(seq2 (par2 (id2 not) (id2 not)) (seq2 (par2 (inv2 inv-not) (id2 not)) "
        "(inv-left-unit not)))\nchecked: ok\n");
  r = pi_cli({"canon", "-e", "!not"});
  CHECK(r.out.rfind("NOT\n", 0) == 0);
  r = pi_cli({"canon", "-e", "id"});
  CHECK(r.out == "ID\n(id2 id)\nchecked: ok\n");
  r = pi_cli({"canon", "-e", "swap+"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotPi2") != std::string::npos);
  CHECK(pi_cli({"canon", "-e", "not3"}).code == 1);
}

TEST_CASE("equiv") {
  auto r = pi_cli({"equiv", "-e", "not ; not", "-e", "id"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("equal\nwitness: (seq2 ", 0) == 0);
  r = pi_cli({"equiv", "-e", "not", "-e", "id"});
  CHECK(r.code == 1);
  CHECK(r.out == "not equal\nno witness exists (classes differ)\n");
  r = pi_cli({"equiv", "-e", "not3", "-e", "not"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = pi_cli({"equiv", "-e", "cnot", "-e", "not"});
  CHECK(r.code == 1);
  CHECK(r.err.find("EndpointMismatch") != std::string::npos);
  CHECK(pi_cli({"equiv", "-e", "id"}).code == 2);
}

TEST_CASE("check") {
  auto r = pi_cli({"check", kData + "/notopt.pid"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: 11 steps replayed") != std::string::npos);

  std::string text = slurp(kData + "/notopt.pid");
  std::istringstream lines(text);
  std::string line, without_step5;
  for (int i = 0; std::getline(lines, line); ++i) {
    if (i != 5) without_step5 += line + "\n";
  }
  r = pi_cli({"check", scratch("broken.pid", without_step5).string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAILED at step 5") != std::string::npos);

  r = pi_cli({"check", scratch("bad.pid", "derivation x : id =>\n").string()});
  CHECK(r.code == 2);

  r = pi_cli({"check", "-e", "derivation d : id ; id => id\n  step idL at [] fwd"});
  CHECK(r.code == 1);
  r = pi_cli({"check", "--type", "2", "-e", "derivation d : id ; id => id\n  step idL at [] fwd"});
  CHECK(r.code == 0);
}

TEST_CASE("check: generated random derivation files") {
  pi::Rng rng(71);
  for (int i = 0; i < 10; ++i) {
    pi::FinType dom = pi::random_type(rng, 8);
    pi::TypedComb t = pi::random_typed_comb(rng, dom, 6);
    pi::Derivation d = pi::random_derivation(rng, t.comb, t.sig, 20);
    d.name = "random" + std::to_string(i);
    fs::path file = scratch(d.name + ".pid", pi::print_derivation(d));
    auto r = pi_cli({"check", "--type", pi::to_string(dom), file.string()});
    CAPTURE(r.out);
    CAPTURE(r.err);
    CHECK(r.code == 0);
  }
}

TEST_CASE("roundtrip") {
  auto r = pi_cli({"roundtrip", "--max-size", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all properties hold") != std::string::npos);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
  CHECK(pi_cli({"roundtrip", "--max-size", "x"}).code == 2);
}

TEST_CASE("demo matches the golden output and is deterministic") {
  auto first = pi_cli({"demo"});
  auto second = pi_cli({"demo"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == slurp(PI_GOLDEN_DIR "/demo.txt"));
}
