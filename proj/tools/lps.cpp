// Command-line front end over the lps C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lps/lps.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kWitnessCap = 100;

struct InputError {
  std::string message;
};

struct ObjectDeleter {
  void operator()(lps_object* o) const { lps_object_free(o); }
};
using Object = std::unique_ptr<lps_object, ObjectDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { lps_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

void ok(lps_status s) {
  if (s != LPS_OK) throw InputError{lps_last_error()};
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"cannot write '" + path + "'"};
  out << text;
}

// Accepts a serialized document or a builder description.
Object load(const std::string& path) {
  lps_object* o = nullptr;
  ok(lps_object_build(read_file(path).c_str(), &o));
  return Object(o);
}

std::string to_json(const lps_object* o) {
  CString s;
  ok(lps_object_to_json(o, &s.p));
  return s.str();
}

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string mode = "fast";
  bool witness = false;
  unsigned long long seed = 1;
  std::string which = "all";
  std::string format = "json";
  std::string open = "global";
  std::string open2;
  std::string x;
  std::string y;
  std::string op;
  std::string args;
  std::string args_file;
  bool verify = false;
  int count = 200;
  int max_points = 4;
};

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw InputError{"exactly one --input is required"};
  return o.inputs.front();
}

int cmd_build(const Options& o) {
  Object obj = load(single_input(o));
  write_output(o.output, to_json(obj.get()));
  return kExitOk;
}

int cmd_check(const Options& o) {
  Object obj = load(single_input(o));
  int passed = 0;
  CString report;
  ok(lps_object_check(obj.get(), o.which.c_str(), o.mode == "exhaustive" ? LPS_MODE_EXHAUSTIVE : LPS_MODE_FAST, &passed,
                      &report.p));
  write_output(o.output, report.str());
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_query(const Options& o) {
  Object obj = load(single_input(o));
  if (o.x.empty() || o.y.empty()) throw InputError{"--x and --y are required"};
  int related = 0;
  CString witness;
  ok(lps_stream_query(obj.get(), o.open.c_str(), o.open2.empty() ? nullptr : o.open2.c_str(), o.x.c_str(), o.y.c_str(),
                      kWitnessCap, &related, o.witness ? &witness.p : nullptr));
  std::string text = related ? "related\n" : "not related\n";
  if (o.witness) text += witness.str();
  write_output(o.output, text);
  return kExitOk;
}

int cmd_combine(const Options& o) {
  if (o.op.empty()) throw InputError{"--op is required"};
  std::vector<Object> objects;
  std::vector<const lps_object*> raw;
  for (const auto& path : o.inputs) {
    objects.push_back(load(path));
    raw.push_back(objects.back().get());
  }
  std::string args = !o.args_file.empty() ? read_file(o.args_file) : o.args;
  int verified = 1;
  lps_object* out = nullptr;
  ok(lps_combine(o.op.c_str(), raw.data(), static_cast<int>(raw.size()), args.empty() ? nullptr : args.c_str(),
                 o.verify ? 1 : 0, &verified, &out));
  Object result(out);
  write_output(o.output, to_json(result.get()));
  if (o.verify) std::cerr << (verified ? "verify: passed\n" : "verify: FAILED\n");
  return verified ? kExitOk : kExitCheckFailed;
}

int cmd_export(const Options& o) {
  Object obj = load(single_input(o));
  if (o.format == "json") {
    write_output(o.output, to_json(obj.get()));
  } else if (o.format == "dot") {
    CString dot;
    ok(lps_object_to_dot(obj.get(), &dot.p));
    write_output(o.output, dot.str());
  } else {
    throw InputError{"unknown export format '" + o.format + "'"};
  }
  return kExitOk;
}

int cmd_selfcheck(const Options& o) {
  int passed = 0;
  CString report;
  ok(lps_selfcheck(o.seed, o.count, o.max_points, &passed, &report.p));
  write_output(o.output, report.str());
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, check and combine streams on finite spaces."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input,-i", o.inputs, "Input file ('-' for stdin); repeatable");
  app.add_option("--output,-o", o.output, "Output file (default stdout)");
  app.add_option("--mode", o.mode, "Cosheaf check mode")->check(CLI::IsMember({"fast", "exhaustive"}));
  app.add_flag("--witness", o.witness, "Print witnesses");
  app.add_option("--seed", o.seed, "Seed for randomized corpus commands");

  auto* build = app.add_subcommand("build", "Build a stream from a description");
  auto* check = app.add_subcommand("check", "Run checks on a stream or precirculation");
  check->add_option("--which", o.which, "all|circulation|intervals|antisymmetry|monotone")
      ->check(CLI::IsMember({"all", "circulation", "intervals", "antisymmetry", "monotone"}));
  auto* query = app.add_subcommand("query", "Test x <=_U y");
  query->add_option("--open", o.open, "'global' or comma-separated points of an open set");
  query->add_option("--open2", o.open2, "Second open; query on the union with an alternating witness");
  query->add_option("--x", o.x, "Source point")->required();
  query->add_option("--y", o.y, "Target point")->required();
  auto* combine = app.add_subcommand("combine", "Combine streams");
  combine->add_option("--op", o.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"product", "quotient", "substream", "colimit", "limit", "join", "pushforward",
                             "pullback-cosheafify", "cosheafify"}));
  combine->add_option("--args", o.args, "Operation arguments as JSON text");
  combine->add_option("--args-file", o.args_file, "Operation arguments as a JSON file");
  combine->add_flag("--verify", o.verify, "Spot-check the universal structure");
  auto* exp = app.add_subcommand("export", "Export a stream");
  exp->add_option("--format", o.format, "dot|json");
  auto* self = app.add_subcommand("selfcheck", "Randomized law checks");
  self->add_option("--count", o.count, "Number of generated streams");
  self->add_option("--max-points", o.max_points, "Largest generated space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*build) return cmd_build(o);
    if (*check) return cmd_check(o);
    if (*query) return cmd_query(o);
    if (*combine) return cmd_combine(o);
    if (*exp) return cmd_export(o);
    if (*self) return cmd_selfcheck(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
