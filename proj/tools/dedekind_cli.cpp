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


// Command-line front end. Talks to the library only through the C API.

#include <dedekind/dedekind.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// A failed library call or bad input, carrying the process exit code.
class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(ddk_status status) {
  if (status == DDK_OK) return;
  const int code =
      status == DDK_ERROR_PARSE || status == DDK_ERROR_INVALID_ARGUMENT ? kExitUsage : kExitDomain;
  throw Failure(code, std::string(ddk_status_name(status)) + ": " + ddk_last_error());
}

struct SequenceDeleter {
  void operator()(ddk_sequence* s) const { ddk_sequence_free(s); }
};
struct HyperrealDeleter {
  void operator()(ddk_hyperreal* x) const { ddk_hyperreal_free(x); }
};
using Sequence = std::unique_ptr<ddk_sequence, SequenceDeleter>;
using Hyperreal = std::unique_ptr<ddk_hyperreal, HyperrealDeleter>;

// Calls f(args..., &out) for a char** result and takes ownership of it.
template <typename F, typename... Args>
std::string text_call(F f, Args&&... args) {
  char* out = nullptr;
  check(f(std::forward<Args>(args)..., &out));
  std::string result(out);
  ddk_string_free(out);
  return result;
}

template <typename F, typename... Args>
Json json_call(F f, Args&&... args) {
  return Json::parse(text_call(f, std::forward<Args>(args)...));
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitUsage, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// JSON arguments may be given inline or as @path.
std::string json_argument(const std::string& arg) {
  return !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
}

Sequence sequence(const std::string& arg) {
  ddk_sequence* out = nullptr;
  check(ddk_sequence_from_json(json_argument(arg).c_str(), &out));
  return Sequence(out);
}

Json sequence_json(const ddk_sequence* s) { return json_call(ddk_sequence_to_json, s); }

// "10(01)" for preamble 10 and period 01.
std::string sequence_line(const ddk_sequence* s) {
  const Json j = sequence_json(s);
  return j["preamble"].get<std::string>() + "(" + j["period"].get<std::string>() + ") base " +
         std::to_string(j["base"].get<unsigned>());
}

Hyperreal hyperreal(const std::string& text) {
  ddk_hyperreal* out = nullptr;
  check(ddk_hyperreal_parse(text.c_str(), &out));
  return Hyperreal(out);
}

std::string to_text(const ddk_hyperreal* x) { return text_call(ddk_hyperreal_to_string, x); }

const char* magnitude_name(ddk_magnitude m) {
  switch (m) {
    case DDK_ZERO: return "Zero";
    case DDK_INFINITESIMAL: return "Infinitesimal";
    case DDK_APPRECIABLE: return "Appreciable";
    case DDK_UNBOUNDED: return "Unbounded";
  }
  return "?";
}

Json describe(const ddk_hyperreal* x) {
  ddk_magnitude m{};
  check(ddk_hyperreal_classify(x, &m));
  std::int64_t valuation = 0;
  int defined = 0;
  check(ddk_hyperreal_valuation(x, &valuation, &defined));
  Json out{{"value", to_text(x)}, {"magnitude", magnitude_name(m)}};
  out["valuation"] = defined != 0 ? Json(valuation) : Json(nullptr);
  out["std"] = m == DDK_UNBOUNDED ? Json(nullptr) : Json(text_call(ddk_hyperreal_std, x));
  return out;
}

struct Options {
  bool json = false;
  std::size_t depth = 64;
};

class Output {
 public:
  explicit Output(const Options& options) : options_(options) {}

  void emit(const Json& json, const std::string& line) const {
    if (options_.json) {
      std::cout << json.dump() << '\n';
    } else {
      std::cout << line << '\n';
    }
  }

 private:
  const Options& options_;
};

// Runs the battery on each file, up to `jobs` at a time, in input order.
std::vector<Json> run_batteries(const std::vector<std::string>& files, double alpha,
                                const std::vector<std::size_t>& block_sizes, unsigned jobs) {
  std::vector<std::string> samples;
  samples.reserve(files.size());
  for (const auto& f : files) samples.push_back(read_file(f));

  std::vector<Json> reports(files.size());
  std::vector<std::string> errors(files.size());
  std::vector<int> codes(files.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        reports[i] = json_call(ddk_battery, samples[i].c_str(), alpha, block_sizes.data(),
                               block_sizes.size());
      } catch (const Failure& e) {
        codes[i] = e.code();
        errors[i] = e.what();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (codes[i] != kExitOk) throw Failure(codes[i], files[i] + ": " + errors[i]);
  }
  return reports;
}

int run(int argc, char** argv) {
  Options options;
  CLI::App app{"Exact interval bisection, infinitesimal arithmetic and randomness tools"};
  app.set_version_flag("--version", std::string(ddk_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", options.json, "Emit JSON instead of one-line text");
  app.add_option("--depth", options.depth, "Bisection depth")->check(CLI::PositiveNumber);
  const Output out(options);

  // encode
  std::string value;
  std::string lo = "0";
  std::string hi = "1";
  auto* encode = app.add_subcommand("encode", "Encode a rational as halving bits over [lo, hi]");
  encode->add_option("--value", value, "Rational to encode")->required();
  encode->add_option("--lo", lo, "Lower endpoint")->capture_default_str();
  encode->add_option("--hi", hi, "Upper endpoint")->capture_default_str();
  encode->callback([&] {
    const std::string bits =
        text_call(ddk_encode, value.c_str(), lo.c_str(), hi.c_str(), options.depth);
    out.emit(Json{{"value", value}, {"lo", lo}, {"hi", hi}, {"depth", options.depth},
                  {"bits", bits}},
             bits);
  });

  // decode
  std::string bits;
  auto* decode = app.add_subcommand("decode", "Replay halving bits into an interval chain");
  decode->add_option("bits", bits, "Binary string")->required();
  decode->add_option("--lo", lo, "Lower endpoint (hyperreal expression)")->capture_default_str();
  decode->add_option("--hi", hi, "Upper endpoint (hyperreal expression)")->capture_default_str();
  decode->callback([&] {
    const Json chain = json_call(ddk_decode, lo.c_str(), hi.c_str(), bits.c_str());
    const Json& last = chain["final"];
    out.emit(chain, "[" + last[0].get<std::string>() + ", " + last[1].get<std::string>() + "]");
  });

  // value
  std::string spec;
  std::string digits;
  unsigned base = 2;
  auto* value_cmd = app.add_subcommand("value", "Exact value of a digit sequence");
  auto* spec_opt = value_cmd->add_option("--spec", spec, "Sequence JSON or @file");
  auto* digits_opt = value_cmd->add_option("--digits", digits, "Finite digit string");
  value_cmd->add_option("--base", base, "Base of --digits")->capture_default_str();
  auto* value_lo = value_cmd->add_option("--lo", lo, "Map into [lo, hi] by bisection");
  auto* value_hi = value_cmd->add_option("--hi", hi, "Upper endpoint for --lo");
  spec_opt->excludes(digits_opt);
  value_lo->needs(value_hi)->needs(spec_opt);
  value_hi->needs(value_lo);
  value_cmd->callback([&] {
    if (*digits_opt) {
      const std::string v = text_call(ddk_finite_value, base, digits.c_str());
      out.emit(Json{{"base", base}, {"digits", digits}, {"value", v}}, v);
      return;
    }
    if (!*spec_opt) throw Failure(kExitUsage, "value needs --spec or --digits");
    const Sequence s = sequence(spec);
    Json result{{"spec", sequence_json(s.get())}};
    std::string v;
    if (*value_lo) {
      v = text_call(ddk_dedekind_value, lo.c_str(), hi.c_str(), s.get());
      result["lo"] = lo;
      result["hi"] = hi;
    } else {
      v = text_call(ddk_sequence_value, s.get());
    }
    result["value"] = v;
    out.emit(result, v);
  });

  // expand
  auto* expand = app.add_subcommand("expand", "Nonterminating base-b expansion of a rational");
  expand->add_option("--value", value, "Rational in [0, 1]")->required();
  expand->add_option("--base", base, "Target base")->capture_default_str();
  expand->callback([&] {
    ddk_sequence* raw = nullptr;
    check(ddk_expand(value.c_str(), base, &raw));
    const Sequence s(raw);
    out.emit(sequence_json(s.get()), sequence_line(s.get()));
  });

  // convert
  unsigned target = 10;
  auto* convert = app.add_subcommand("convert", "Re-expand a sequence in another base");
  convert->add_option("--spec", spec, "Sequence JSON or @file")->required();
  convert->add_option("--to", target, "Target base")->required();
  convert->callback([&] {
    const Sequence s = sequence(spec);
    ddk_sequence* raw = nullptr;
    check(ddk_sequence_change_basis(s.get(), target, &raw));
    const Sequence t(raw);
    out.emit(sequence_json(t.get()), sequence_line(t.get()));
  });

  // hyper
  std::string x_text;
  std::string y_text;
  std::uint64_t n_max = 1000000;
  auto* hyper = app.add_subcommand("hyper", "Arithmetic with the infinitesimal e");
  hyper->require_subcommand(1);
  hyper->fallthrough();

  auto* eval = hyper->add_subcommand("eval", "Evaluate an expression; std(x) is allowed");
  eval->add_option("expr", x_text, "Expression")->required();
  eval->callback([&] {
    ddk_hyperreal* raw = nullptr;
    check(ddk_hyperreal_evaluate(x_text.c_str(), &raw));
    const Hyperreal x(raw);
    Json result = describe(x.get());
    const std::string line = result["value"];
    Json tagged{{"input", x_text}};
    tagged.update(result);
    out.emit(tagged, line);
  });

  auto* classify = hyper->add_subcommand("classify", "Zero, Infinitesimal, Appreciable or Unbounded");
  classify->add_option("expr", x_text, "Expression")->required();
  classify->callback([&] {
    const Hyperreal x = hyperreal(x_text);
    const Json result = describe(x.get());
    out.emit(result, result["magnitude"].get<std::string>());
  });

  auto* compare = hyper->add_subcommand("compare", "Order and closeness of two expressions");
  compare->add_option("x", x_text, "Left expression")->required();
  compare->add_option("y", y_text, "Right expression")->required();
  compare->callback([&] {
    const Hyperreal x = hyperreal(x_text);
    const Hyperreal y = hyperreal(y_text);
    int order = 0;
    int close = 0;
    int distant = 0;
    check(ddk_hyperreal_compare(x.get(), y.get(), &order));
    check(ddk_hyperreal_closeness(DDK_INFINITESIMALLY_CLOSE, x.get(), y.get(), &close));
    check(ddk_hyperreal_closeness(DDK_FINITELY_DISTANT, x.get(), y.get(), &distant));
    const char* symbol = order < 0 ? "<" : (order > 0 ? ">" : "=");
    out.emit(Json{{"x", to_text(x.get())},
                  {"y", to_text(y.get())},
                  {"order", order},
                  {"infinitesimally_close", close != 0},
                  {"finitely_distant", distant != 0}},
             symbol);
  });

  auto* archimedean = hyper->add_subcommand("archimedean", "Search n <= n-max with n*a > b");
  archimedean->add_option("a", x_text, "Multiplied expression")->required();
  archimedean->add_option("b", y_text, "Bound expression")->required();
  archimedean->add_option("--n-max", n_max, "Search limit")->capture_default_str();
  archimedean->callback([&] {
    const Hyperreal a = hyperreal(x_text);
    const Hyperreal b = hyperreal(y_text);
    const Json result = json_call(ddk_archimedean_check, a.get(), b.get(), n_max);
    const Json& at = result["exceeded_at"];
    out.emit(result, result["symbolic_verdict"].get<std::string>() +
                         (at.is_number() ? " at " + at.dump() : ""));
  });

  auto* decompose = hyper->add_subcommand("decompose", "Split a finite x into std(x) + infinitesimal");
  decompose->add_option("expr", x_text, "Expression")->required();
  decompose->callback([&] {
    const Hyperreal x = hyperreal(x_text);
    char* standard = nullptr;
    ddk_hyperreal* raw = nullptr;
    check(ddk_decompose(x.get(), &standard, &raw));
    const std::string s(standard);
    ddk_string_free(standard);
    const Hyperreal rest(raw);
    const std::string r = to_text(rest.get());
    out.emit(Json{{"std", s}, {"infinitesimal", r}}, s + " + " + r);
  });

  // dedekind
  std::string field = "hyperreal";
  std::string point;
  auto* dedekind = app.add_subcommand("dedekind", "Dedekind sets of bisection chains");
  dedekind->require_subcommand(1);
  dedekind->fallthrough();

  auto* dclassify = dedekind->add_subcommand("classify", "Case and cardinality of a Dedekind set");
  dclassify->add_option("--lo", lo, "Lower endpoint expression")->required();
  dclassify->add_option("--hi", hi, "Upper endpoint expression")->required();
  dclassify->add_option("--spec", spec, "Binary sequence JSON or @file")->required();
  dclassify->add_option("--field", field, "Ambient field")
      ->check(CLI::IsMember({"hyperreal", "rational"}))
      ->capture_default_str();
  dclassify->callback([&] {
    const Hyperreal a = hyperreal(lo);
    const Hyperreal b = hyperreal(hi);
    const Sequence s = sequence(spec);
    const Json d = json_call(ddk_dedekind_classify, a.get(), b.get(), s.get(),
                             field == "rational" ? DDK_AMBIENT_RATIONAL : DDK_AMBIENT_HYPERREAL);
    std::string line = d["case"].get<std::string>() + " " + d["cardinality"].get<std::string>();
    if (d["std_limit"].is_string()) line += " std_limit=" + d["std_limit"].get<std::string>();
    out.emit(d, line);
  });

  auto* member = dedekind->add_subcommand("member", "Is the point inside every interval to --depth");
  member->add_option("--point", point, "Point expression")->required();
  member->add_option("--lo", lo, "Lower endpoint expression")->required();
  member->add_option("--hi", hi, "Upper endpoint expression")->required();
  member->add_option("--spec", spec, "Binary sequence JSON or @file")->required();
  member->callback([&] {
    const Hyperreal d = hyperreal(point);
    const Hyperreal a = hyperreal(lo);
    const Hyperreal b = hyperreal(hi);
    const Sequence s = sequence(spec);
    int inside = 0;
    check(ddk_dedekind_member(d.get(), a.get(), b.get(), s.get(), options.depth, &inside));
    out.emit(Json{{"point", to_text(d.get())}, {"depth", options.depth}, {"member", inside != 0}},
             inside != 0 ? "member" : "not a member");
  });

  auto* random = dedekind->add_subcommand("random", "Random hyperreal value(spec) + eps");
  random->add_option("--spec", spec, "Sequence JSON or @file")->required();
  random->add_option("--eps", x_text, "Infinitesimal expression")->required();
  random->callback([&] {
    const Sequence s = sequence(spec);
    const Hyperreal eps = hyperreal(x_text);
    ddk_hyperreal* raw = nullptr;
    check(ddk_random_hyperreal(s.get(), eps.get(), &raw));
    const Hyperreal h(raw);
    const std::string v = to_text(h.get());
    out.emit(Json{{"value", v}}, v);
  });

  // rand
  std::vector<std::string> files;
  std::vector<std::string> strings;
  std::vector<std::size_t> block_sizes;
  double alpha = 0.01;
  unsigned jobs = 1;
  std::string cover;
  std::string target_spec;
  std::string outer_lo;
  std::string outer_hi;
  std::string inner_lo;
  std::string inner_hi;
  auto* rand = app.add_subcommand("rand", "Randomness tests, measures and null covers");
  rand->require_subcommand(1);
  rand->fallthrough();

  auto* battery = rand->add_subcommand("battery", "Statistical battery on bit-sample files");
  battery->add_option("files", files, "Sample files ('-' for stdin)")->required();
  battery->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  battery->add_option("--block-size", block_sizes, "Block frequency sizes (repeatable)");
  battery->add_option("--jobs", jobs, "Files processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  battery->callback([&] {
    const std::vector<Json> reports = run_batteries(files, alpha, block_sizes, jobs);
    if (options.json) {
      Json all = Json::array();
      for (std::size_t i = 0; i < files.size(); ++i) {
        all.push_back(Json{{"file", files[i]}, {"report", reports[i]}});
      }
      std::cout << all.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      std::cout << files[i] << ": " << reports[i]["verdict"].get<std::string>() << '\n';
      for (const auto& t : reports[i]["tests"]) {
        std::cout << "  " << t["name"].get<std::string>()
                  << " statistic=" << t["statistic"].get<std::string>()
                  << " p=" << t["p_value"].get<std::string>()
                  << (t["pass"].get<bool>() ? " pass" : " reject") << '\n';
      }
    }
  });

  auto* measure = rand->add_subcommand("measure", "Measure of the union of cylinders");
  measure->add_option("--base", base, "Alphabet size")->capture_default_str();
  measure->add_option("strings", strings, "Prefix strings ('' for the empty word)");
  measure->callback([&] {
    const Json set{{"base", base}, {"strings", strings}};
    const std::string m = text_call(ddk_cylinder_measure, set.dump().c_str());
    out.emit(Json{{"base", base}, {"strings", strings}, {"measure", m}}, m);
  });

  auto* verify = rand->add_subcommand("verify-cover", "Check a null cover, optionally against a target");
  verify->add_option("--cover", cover, "Null cover JSON or @file")->required();
  auto* target_opt = verify->add_option("--target", target_spec, "Sequence JSON or @file");
  verify->callback([&] {
    Sequence t;
    if (*target_opt) t = sequence(target_spec);
    const Json v = json_call(ddk_verify_null_cover, json_argument(cover).c_str(), t.get());
    std::string line = v["valid"].get<bool>() ? "valid" : "invalid";
    if (v.contains("target_exhibited_nonrandom")) {
      line += v["target_exhibited_nonrandom"].get<bool>() ? "; target covered at every level"
                                                          : "; target escapes some level";
    }
    out.emit(v, line);
  });

  auto* witness = rand->add_subcommand("witness", "Transport a sequence between nested intervals");
  witness->add_option("--outer-lo", outer_lo, "Outer lower endpoint")->required();
  witness->add_option("--outer-hi", outer_hi, "Outer upper endpoint")->required();
  witness->add_option("--inner-lo", inner_lo, "Inner lower endpoint")->required();
  witness->add_option("--inner-hi", inner_hi, "Inner upper endpoint")->required();
  witness->add_option("--spec", spec, "Binary sequence JSON or @file")->required();
  witness->callback([&] {
    const Sequence s = sequence(spec);
    const Json w = json_call(ddk_relative_random_witness, outer_lo.c_str(), outer_hi.c_str(),
                             inner_lo.c_str(), inner_hi.c_str(), s.get());
    const Json& e = w["expansion_in_outer"];
    out.emit(w, "w=" + w["w"].get<std::string>() + " outer=" + e["preamble"].get<std::string>() +
                    "(" + e["period"].get<std::string>() + ") " +
                    (w["expansions_differ"].get<bool>() ? "differs" : "same"));
  });

  auto* verdict = rand->add_subcommand("rationality", "Value of an eventually periodic sequence");
  verdict->add_option("--spec", spec, "Sequence JSON or @file")->required();
  verdict->callback([&] {
    const Sequence s = sequence(spec);
    const std::string v = text_call(ddk_rationality_verdict, s.get());
    out.emit(Json{{"verdict", "rational"}, {"value", v}}, "rational " + v);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
