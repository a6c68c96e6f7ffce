#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "homform/cli.hpp"
#include "homform/formio.hpp"
#include "homform/gallery.hpp"
#include "homform/twist.hpp"
#include "support.hpp"

using namespace homform;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workdir {
 public:
  Workdir() : dir_(fs::temp_directory_path() / ("homform-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
    for (const auto& e : gallery()) write(e.name + ".json", canonical_dump(form_to_json(e.form)));
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

 private:
  fs::path dir_;
};

const Workdir& work() {
  static Workdir w;
  return w;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    Run r = cli({"analyze", work().path("yang-mills.json"), "--N", "3"});
    REQUIRE(r.code == kOk);
    Json j = r.json();
    CHECK(j["format"] == kReportFormat);
    CHECK(j["preregular"] == true);
    CHECK(j["three_regular"] == true);
    CHECK(j["iii_prime"] == true);
    CHECK(j["Q"] == Json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])"));
    CHECK(cli({"analyze", work().path("epsilon-4-N3.json"), "--N", "3"}).json()["iii_prime"] == false);
  }

  TEST_CASE("hilbert with prediction") {
    Run r = cli({"hilbert", work().path("yang-mills.json"), "--N", "3", "--max-degree", "4"});
    REQUIRE(r.code == kOk);
    CHECK(r.json()["dims"] == Json::parse("[1,3,9,24,64]"));
    CHECK(r.json()["comparison"] == "match");
    Run as = cli({"hilbert", work().path("as-counterexample.json"), "--N", "2", "--max-degree", "4"});
    CHECK(as.json()["comparison"] == "mismatch");  // 3-regular, yet dim A_4 = 17 != 15
    CHECK(cli({"hilbert", work().path("a-u.json"), "--N", "2", "--max-degree", "3"}).json()["comparison"] == "not applicable");
    Run b = cli({"hilbert", work().path("gl2-rk1.json"), "--N", "2", "--max-degree", "3"});
    CHECK(b.json()["predicted"] == Json::parse("[1,2,3,4]"));
  }

  TEST_CASE("koszul reports the failure location") {
    Run r = cli({"koszul", work().path("as-counterexample.json"), "--N", "2", "--max-degree", "7"});
    REQUIRE(r.code == kOk);
    Json j = r.json();
    CHECK(j["verdict"] == "fail");
    CHECK(j["failure"] == Json{{"degree", 4}, {"position", 2}});
    CHECK(j["nonzero_homology"][0] == Json{{"degree", 0}, {"dim", 1}, {"position", 0}});
    CHECK(j["nonzero_homology"][1] == Json{{"degree", 4}, {"dim", 2}, {"position", 2}});
    Run ok = cli({"koszul", work().path("epsilon-3-N2.json"), "--N", "2", "--max-degree", "5"});
    CHECK(ok.json()["verdict"] == "pass");
    CHECK(ok.json()["note"].get<std::string>().find("truncated evidence") != std::string::npos);
  }

  TEST_CASE("dual") {
    Run r = cli({"dual", work().path("epsilon-2-N2.json"), "--N", "2"});
    REQUIRE(r.code == kOk);
    CHECK(r.json()["dims"] == Json::parse("[1,2,1,0]"));
  }

  TEST_CASE("twist round trip") {
    Matrix L = support::diag({Scalar(3), Scalar(1, 3)});
    std::string mfile = work().write("L.json", canonical_dump(matrix_to_json(L)));
    std::string minv = work().write("Linv.json", canonical_dump(matrix_to_json(inverse(L))));
    Run r = cli({"twist", work().path("epsilon-2-N2.json"), "--matrix", mfile});
    REQUIRE(r.code == kOk);
    CHECK(parse_form(r.json()).form == twist_form(epsilon_form(2, 2).form, L));
    std::string twisted = work().write("twisted.json", r.out);
    Run back = cli({"twist", twisted, "--matrix", minv});
    REQUIRE(back.code == kOk);
    CHECK(back.out == canonical_dump(form_to_json(epsilon_form(2, 2).form)));

    std::string bad = work().write("bad.json", canonical_dump(matrix_to_json(support::diag({Scalar(2), Scalar(1)}))));
    CHECK(cli({"twist", work().path("epsilon-2-N2.json"), "--matrix", bad}).code == kPrecondition);
  }

  TEST_CASE("hopf") {
    Run r = cli({"hopf", work().path("gl2-rk2.json")});
    REQUIRE(r.code == kOk);
    CHECK(r.json()["antipode_identity"] == true);
    CHECK(r.json()["raw_relation_count"] == 8);
    CHECK(cli({"--guard-columns", "10", "hopf", work().path("gl2-rk2.json")}).code == kGuard);
  }

  TEST_CASE("gallery") {
    Run list = cli({"gallery", "--list"});
    REQUIRE(list.code == kOk);
    CHECK(list.json()["entries"].size() == 12);
    Run one = cli({"gallery", "yang-mills"});
    CHECK(parse_form(one.json()).form == yang_mills(Matrix::identity(3)).form);
    CHECK(cli({"gallery", "nope"}).code == kValidation);
  }

  TEST_CASE("exit codes") {
    std::string empty = work().write("empty.json", R"({"format":"homform-form/1","dimension":2,"arity":2,"entries":[]})");
    Run v = cli({"analyze", empty, "--N", "2"});
    CHECK(v.code == kValidation);
    CHECK(v.err.find("$.entries") != std::string::npos);
    CHECK(cli({"analyze", work().path("yang-mills.json"), "--N", "9"}).code == kValidation);
    CHECK(cli({"frobnicate"}).code == kValidation);
    CHECK(cli({"analyze", work().path("missing.json"), "--N", "2"}).code == kValidation);
    CHECK(cli({"--guard-columns", "20", "hilbert", work().path("yang-mills.json"), "--N", "3"}).code == kGuard);
    std::string degenerate = work().write(
        "degenerate.json", canonical_dump(form_to_json(bilinear_form(support::mat({{1, 1}, {1, 1}})))));
    CHECK(cli({"koszul", degenerate, "--N", "2", "--max-degree", "3"}).code == kOk);
    CHECK(cli({"hopf", degenerate}).code == kPrecondition);
  }

  TEST_CASE("field flag") {
    CHECK(cli({"--field", "gaussian", "analyze", work().path("a-u.json"), "--N", "2"}).code == kOk);
    CHECK(cli({"--field", "rational", "analyze", work().path("a-u.json"), "--N", "2"}).code == kValidation);
    CHECK(cli({"--field", "quadratic:-4,0", "analyze", work().path("a-u.json"), "--N", "2"}).code == kValidation);
    CHECK(cli({"--field", "quadratic:1,0", "analyze", work().path("a-u.json"), "--N", "2"}).code == kOk);
  }

  TEST_CASE("output is deterministic and can go to a file") {
    std::vector<std::string> args{"hilbert", work().path("epsilon-4-N3.json"), "--N", "3", "--max-degree", "4"};
    CHECK(cli(args).out == cli(args).out);
    std::vector<std::string> with_out{"--output", work().path("out.json")};
    with_out.insert(with_out.end(), args.begin(), args.end());
    Run r = cli(with_out);
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(work().path("out.json"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == cli(args).out);
  }
}
