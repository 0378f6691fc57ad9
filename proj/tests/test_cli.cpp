#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "spectral/json_io.hpp"

using spectral::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the binary with stderr discarded unless asked for.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SPECTRAL_CONE_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("spectral_cone_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::set<std::string> texts_of(const Json& system) {
  std::set<std::string> out;
  for (const auto& q : system["inequalities"]) out.insert(to_string(spectral::inequality_from_json(q)));
  return out;
}

}  // namespace

TEST_CASE("inequalities") {
  const auto r = run("inequalities --da 3 --db 2 --pruned");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["trace"] == true);
  CHECK(texts_of(j) == std::set<std::string>{"t1 <= 1+2", "t3 >= 5+6", "t3 <= 2+3", "t1 >= 4+5"});
  const auto text = run("inequalities --da 3 --db 3 --format text");
  CHECK(text.code == 0);
  CHECK(text.out == "t1 <= 1+2+3\nt3 >= 7+8+9\ntrace\n");
  const auto raw = run("inequalities --da 3 --db 2 --raw");
  REQUIRE(raw.code == 0);
  const auto jr = Json::parse(raw.out);
  bool found = false;
  for (const auto& item : jr["inequalities"]) {
    if (item["text"] == "t3 <= 2+3") {
      found = true;
      CHECK(item["origin"] == "candidate");
      CHECK(item.contains("nu"));
      CHECK(item.contains("pi"));
    }
  }
  CHECK(found);
  CHECK(run("inequalities --da 3 --db 2 --raw --pruned").code == 2);
}

TEST_CASE("phi-star") {
  const auto r = run("phi-star --da 3 --db 3 --k 1 --pi \"[2]\"");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["expansion"].dump() ==
        R"({"basis":"s","terms":[{"partition":[2],"num":6,"den":1},{"partition":[1,1],"num":3,"den":1}]})");
  CHECK(j["class"]["terms"].size() == 1);
  CHECK(run("phi-star --da 3 --db 3 --k 1 --pi \"[2,3]\"").code == 2);
  CHECK(run("phi-star --da 3 --db 2 --k 1 --pi \"[5]\"").code == 2);
}

TEST_CASE("horn") {
  const auto r = run("horn --n 3");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["count"] == 12);
  CHECK(run("horn --n 2 --format text").out == "g1 <= a1+b1\ng2 <= a1+b2\ng2 <= a2+b1\ntrace\n");
  const auto good = temp_file("horn_good.json", R"({"alpha":[1,0],"beta":[1,0],"gamma":[1.5,0.5]})");
  const auto bad = temp_file("horn_bad.json", R"({"alpha":[1,0],"beta":[1,0],"gamma":[2.5,-0.5]})");
  CHECK(run("horn --n 2 --check " + good).code == 0);
  const auto rb = run("horn --n 2 --check " + bad);
  CHECK(rb.code == 1);
  CHECK(Json::parse(rb.out)["violations"][0]["constraint"] == "g1 <= a1+b1");
  CHECK(run("horn --n 3 --check " + good).code == 2);
  CHECK(run("horn --n 4 --redundancy").code == 0);
}

TEST_CASE("check") {
  const auto witness = run("check --da 3 --db 2 --spectrum 1,0,0,0,0,0 --reduced 0.3333333333333333,0.3333333333333333,0.3333333333333334");
  CHECK(witness.code == 1);
  const auto j = Json::parse(witness.out);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["constraint"] == "t3 <= 2+3");
  const auto spec = temp_file("lambda.json", R"({"values":[0.25,0.25,0.25,0.25]})");
  const auto red = temp_file("lambda_t.json", "[0.5,0.5]");
  CHECK(run("check --da 2 --db 2 --spectrum " + spec + " --reduced " + red).code == 0);
  // Unsorted inline input is sorted with a warning.
  const auto warned = run("check --da 2 --db 2 --spectrum 0.1,0.4,0.3,0.2 --reduced 0.5,0.5", true);
  CHECK(warned.code == 0);
  CHECK(warned.out.find("warning") != std::string::npos);
  CHECK(run("check --da 2 --db 2 --spectrum 0.5,0.5 --reduced 0.5,0.5").code == 2);
  CHECK(run("check --da 2 --db 2 --spectrum 1,x,0,0 --reduced 0.5,0.5").code == 2);
  // An explicit system file.
  const auto sys = temp_file("sys.json", R"({"d_A":2,"d_B":2,"trace":true,"inequalities":[{"lhs":[1,0],"rhs":[0,1,1,0],"sense":"le"}]})");
  CHECK(run("check --da 2 --db 2 --system " + sys + " --spectrum 0.5,0.5,0,0 --reduced 1,0").code == 1);
  CHECK(run("check --da 3 --db 2 --system " + sys + " --spectrum 1,0,0,0,0,0 --reduced 1,0,0").code == 2);
}

TEST_CASE("verify") {
  const auto a = run("verify --da 2 --db 2 --trials 10 --seed 7");
  const auto b = run("verify --da 2 --db 2 --trials 10 --seed 7");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("verify --da 2 --db 2 --trials 10 --seed 8").out);
  std::size_t lines = 0;
  Json last;
  std::size_t pos = 0;
  while (pos < a.out.size()) {
    const auto nl = a.out.find('\n', pos);
    last = Json::parse(a.out.substr(pos, nl - pos));
    ++lines;
    pos = nl + 1;
  }
  CHECK(lines == 11);
  CHECK(last["summary"]["failing_trials"] == 0);
  // Worker count does not change the bytes.
  const auto threaded = run("verify --da 3 --db 2 --trials 20 --seed 3");
  const auto env = std::string("SPECTRAL_CONE_THREADS=4 ") + SPECTRAL_CONE_BIN + " verify --da 3 --db 2 --trials 20 --seed 3";
  FILE* pipe = popen(env.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out == threaded.out);
  // A false inequality in the system is reported with exit code 1.
  const auto forged = temp_file("forged.json", R"({"d_A":2,"d_B":2,"inequalities":[{"lhs":[1,0],"rhs":[0,1,1,0]}]})");
  CHECK(run("verify --da 2 --db 2 --trials 50 --seed 1 --system " + forged).code == 1);
}

TEST_CASE("dim2") {
  const auto r = run("dim2 --db 2 --spectrum 0.4,0.3,0.2,0.1 --target 0.6,0.4");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["feasible"] == true);
  CHECK(std::abs(j["reduced_spectrum"][0].get<double>() - 0.6) < 1e-9);
  const auto inf = run("dim2 --db 2 --spectrum 0.4,0.3,0.2,0.1 --target 0.8,0.2");
  CHECK(inf.code == 1);
  CHECK(Json::parse(inf.out)["feasible"] == false);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("inequalities --da 3").code == 2);
  CHECK(run("inequalities --da 3 --db 2 --bogus").code == 2);
  const auto help = run("frobnicate", true);
  CHECK(help.code == 2);
  CHECK(help.out.find("Subcommands") != std::string::npos);
  CHECK(run("check --da 2 --db 2 --spectrum /nonexistent.json --reduced 0.5,0.5").code == 2);
  CHECK(run("--help").code == 0);
}
