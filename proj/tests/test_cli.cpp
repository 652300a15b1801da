// Copyright 2026 The Dedekind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the dedekind binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char c : arg) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

Result run(const std::vector<std::string>& args) {
  std::string command = DEDEKIND_CLI;
  for (const auto& a : args) command += " " + quote(a);
  command += " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string line(const std::vector<std::string>& args) {
  Result r = run(args);
  EXPECT_EQ(r.status, 0) << args.front();
  if (!r.out.empty() && r.out.back() == '\n') r.out.pop_back();
  return r.out;
}

Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  EXPECT_EQ(r.status, 0) << args[1];
  return Json::parse(r.out);
}

const std::string kThird = R"({"base":2,"preamble":"","period":"01"})";
const std::string kZeros = R"({"base":2,"preamble":"","period":"0"})";
const std::string kSample = DEDEKIND_TEST_DATA_DIR "/prng_4096.txt";

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(line({"encode", "--value", "3/4", "--lo", "0", "--hi", "1", "--depth", "6"}), "101111");
  EXPECT_EQ(line({"value", "--spec", kThird}), "1/3");
  EXPECT_EQ(line({"hyper", "eval", "std((2+e)/(1+e))"}), "2");
}

TEST(Cli, HumanOutput) {
  EXPECT_EQ(line({"decode", "101111"}), "[47/64, 3/4]");
  EXPECT_EQ(line({"expand", "--value", "1/2", "--base", "2"}), "0(1) base 2");
  EXPECT_EQ(line({"convert", "--spec", kThird, "--to", "10"}), "(3) base 10");
  EXPECT_EQ(line({"value", "--digits", "12", "--base", "3"}), "5/9");
  EXPECT_EQ(line({"value", "--spec", kThird, "--lo", "2", "--hi", "5"}), "3");
  EXPECT_EQ(line({"hyper", "eval", "(1+2*e)/e^2"}), "(1 + 2*e) / (e^2)");
  EXPECT_EQ(line({"hyper", "classify", "1/e"}), "Unbounded");
  EXPECT_EQ(line({"hyper", "compare", "e", "0"}), ">");
  EXPECT_EQ(line({"hyper", "archimedean", "e", "1"}), "bounded_forever");
  EXPECT_EQ(line({"hyper", "archimedean", "1/3", "1"}), "eventually_exceeds at 4");
  EXPECT_EQ(line({"dedekind", "classify", "--lo", "0", "--hi", "1", "--spec", kThird}),
            "DistinctStdCase SameAsInfinitesimals std_limit=1/3");
  EXPECT_EQ(line({"dedekind", "classify", "--lo", "0", "--hi", "1", "--spec", kThird, "--field",
                  "rational"}),
            "RealCase Finite(1) std_limit=1/3");
  EXPECT_EQ(line({"dedekind", "member", "--point", "1/3+e^2", "--lo", "0", "--hi", "1", "--spec",
                  kThird}),
            "member");
  EXPECT_EQ(line({"rand", "measure", "0", "11"}), "3/4");
  EXPECT_EQ(line({"rand", "rationality", "--spec", kThird}), "rational 1/3");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"encode", "--value", "2"}).status, 1);
  EXPECT_EQ(run({"hyper", "eval", "std(1/e)"}).status, 1);
  EXPECT_EQ(run({"convert", "--spec", kThird, "--to", "11"}).status, 1);
  EXPECT_EQ(run({"rand", "battery", "--jobs", "2", kSample, "/nonexistent/sample"}).status, 2);
  EXPECT_EQ(run({"encode", "--value", "x"}).status, 2);
  EXPECT_EQ(run({"encode"}).status, 2);
  EXPECT_EQ(run({"encode", "--value", "1/2", "--unknown"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"hyper"}).status, 2);
  EXPECT_EQ(run({"--depth", "0", "encode", "--value", "1/2"}).status, 2);
  EXPECT_EQ(run({"dedekind", "classify", "--lo", "0", "--hi", "1", "--spec", kThird, "--field",
                 "complex"})
                .status,
            2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, JsonSchemas) {
  const Json enc = json_of({"encode", "--value", "1/3", "--depth", "8"});
  EXPECT_EQ(enc["bits"], "01010101");
  EXPECT_EQ(enc["depth"], 8);

  const Json chain = json_of({"decode", "10", "--lo", "e", "--hi", "1"});
  EXPECT_EQ(chain["bits"], "10");
  EXPECT_EQ(chain["steps"].size(), 2U);
  EXPECT_TRUE(chain["final"].is_array());
  EXPECT_EQ(chain["final"].size(), 2U);

  const Json value = json_of({"value", "--spec", kThird});
  EXPECT_EQ(value["value"], "1/3");
  EXPECT_EQ(value["spec"], Json::parse(kThird));

  const Json expanded = json_of({"expand", "--value", "1/3", "--base", "3"});
  EXPECT_EQ(expanded, Json::parse(R"({"base":3,"preamble":"0","period":"2"})"));

  const Json eval = json_of({"hyper", "eval", "1/e + 2"});
  EXPECT_EQ(eval["magnitude"], "Unbounded");
  EXPECT_EQ(eval["valuation"], -1);
  EXPECT_TRUE(eval["std"].is_null());

  const Json cls = json_of({"hyper", "classify", "3 + e"});
  EXPECT_EQ(cls["std"], "3");
  EXPECT_EQ(cls["valuation"], 0);

  const Json cmp = json_of({"hyper", "compare", "1", "1 + e"});
  EXPECT_EQ(cmp["order"], -1);
  EXPECT_EQ(cmp["infinitesimally_close"], true);
  EXPECT_EQ(cmp["finitely_distant"], true);

  const Json arch = json_of({"hyper", "archimedean", "e", "1", "--n-max", "1000000"});
  EXPECT_EQ(arch["exceeded_at"], "never");
  EXPECT_EQ(arch["symbolic_verdict"], "bounded_forever");

  const Json dec = json_of({"hyper", "decompose", "1/2 - e^3"});
  EXPECT_EQ(dec["std"], "1/2");

  const Json desc = json_of({"dedekind", "classify", "--lo", "0", "--hi", "1/e", "--spec", kZeros});
  EXPECT_EQ(desc["case"], "InfinitelySeparatedCase");
  EXPECT_EQ(desc["cardinality"], "SameAsInfinitesimals");
  EXPECT_TRUE(desc["std_limit"].is_null());
  EXPECT_EQ(desc["contains_all_reals"], true);

  const Json mem = json_of({"dedekind", "member", "--point", "1/2", "--lo", "0", "--hi", "1",
                            "--spec", kThird, "--depth", "16"});
  EXPECT_EQ(mem["member"], false);
  EXPECT_EQ(mem["depth"], 16);

  const Json rnd = json_of({"dedekind", "random", "--spec", kThird, "--eps", "e"});
  EXPECT_EQ(rnd["value"], "(1/3 + e) / (1)");

  const Json cover = json_of({"rand", "verify-cover", "--cover",
                              R"({"base":2,"levels":[["0"],["00"]],"bounds":["1/2","1/4"]})",
                              "--target", kZeros});
  EXPECT_EQ(cover["valid"], true);
  EXPECT_EQ(cover["level_measures"], Json::parse(R"(["1/2","1/4"])"));
  EXPECT_EQ(cover["covered_at"], Json::parse("[true,true]"));
  EXPECT_EQ(cover["target_exhibited_nonrandom"], true);

  const Json w = json_of({"rand", "witness", "--outer-lo", "0", "--outer-hi", "1", "--inner-lo",
                          "0", "--inner-hi", "1/2", "--spec", kThird});
  EXPECT_EQ(w["w"], "1/6");
  EXPECT_EQ(w["expansions_differ"], true);
  EXPECT_TRUE(w["expansion_in_outer"].is_object());

  const Json m = json_of({"rand", "measure", "--base", "3", "0", "00", "1"});
  EXPECT_EQ(m["measure"], "2/3");

  const Json bat = json_of({"rand", "battery", kSample});
  ASSERT_TRUE(bat.is_array());
  ASSERT_EQ(bat.size(), 1U);
  std::ifstream golden(DEDEKIND_TEST_DATA_DIR "/battery_golden_4096.json");
  EXPECT_EQ(bat[0]["report"], Json::parse(golden));
}

TEST(Cli, JsonFlagAfterSubcommand) {
  EXPECT_EQ(line({"value", "--spec", kThird, "--json"}), line({"--json", "value", "--spec", kThird}));
}

TEST(Cli, FileArguments) {
  const std::string path = testing::TempDir() + "dedekind_cli_spec.json";
  std::ofstream(path) << kThird;
  EXPECT_EQ(line({"value", "--spec", "@" + path}), "1/3");
}

TEST(Cli, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  std::uniform_int_distribution<int> depth(1, 40);
  for (int i = 0; i < 25; ++i) {
    const long lo_n = num(rng);
    const long lo_d = den(rng);
    const long width = den(rng);
    const long pos = std::uniform_int_distribution<long>(0, 1000)(rng);
    // lo = lo_n/lo_d, hi = lo + width, value = lo + width*pos/1000.
    const std::string lo = std::to_string(lo_n) + "/" + std::to_string(lo_d);
    const std::string hi = std::to_string(lo_n + width * lo_d) + "/" + std::to_string(lo_d);
    const std::string value =
        std::to_string(lo_n * 1000 + width * pos * lo_d) + "/" + std::to_string(lo_d * 1000);
    const std::string d = std::to_string(depth(rng));
    const std::string bits =
        line({"encode", "--value", value, "--lo", lo, "--hi", hi, "--depth", d});
    ASSERT_EQ(bits.size(), std::stoul(d));
    const Json chain = json_of({"decode", bits, "--lo", lo, "--hi", hi});
    const std::string f_lo = chain["final"][0];
    const std::string f_hi = chain["final"][1];
    EXPECT_EQ(line({"hyper", "compare", f_lo, value}).substr(0, 1) != ">", true) << value;
    EXPECT_EQ(line({"hyper", "compare", value, f_hi}).substr(0, 1) != ">", true) << value;
  }
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--json", "dedekind", "classify", "--lo", "-1/e",
                                         "--hi", "e", "--spec", kThird};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> serial = {"--json", "rand", "battery", kSample, kSample, kSample};
  std::vector<std::string> parallel = serial;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  const Result a = run(serial);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run(parallel).out);
}

}  // namespace
