#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degspec/request.hpp"

namespace fs = std::filesystem;
using namespace degspec;

namespace {

// Input failure already formatted as "<source>:<line>: <message>".
struct InputFailure {
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{path + ":0: cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_text(const std::string& source, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; turn it into a line.
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputFailure{source + ":" + std::to_string(line) + ": " + e.what()};
  }
}

// A flag value is inline JSON, a file, or (for models) a built-in name.
Json flag_document(const std::string& flag, const std::string& value) {
  if (!value.empty() && (value.front() == '{' || value.front() == '[')) return parse_text(flag, value);
  if (fs::is_regular_file(value)) return parse_text(value, read_file(value));
  return Json(value);
}

struct RunOptions {
  std::string file;
  std::string model, map, out, csv, check;
  std::optional<int> p;
  std::optional<unsigned> n_max;
  std::optional<double> tol;
  unsigned threads = 1;
};

struct LoadedRequest {
  std::string source, text;
  Json doc;
};

LoadedRequest load(const RunOptions& o) {
  LoadedRequest lr;
  if (!o.file.empty()) {
    lr.source = o.file;
    lr.text = read_file(o.file);
    lr.doc = parse_text(o.file, lr.text);
  } else {
    lr.source = "<flags>";
    lr.doc = Json::object();
  }
  if (!lr.doc.is_object()) throw InputFailure{lr.source + ":1: a request must be a JSON object"};
  if (!o.model.empty()) lr.doc["model"] = flag_document("--model", o.model);
  if (!o.map.empty()) lr.doc["map"] = flag_document("--map", o.map);
  if (!o.check.empty()) {
    Json list = Json::array();
    std::stringstream ss(o.check);
    for (std::string kind; std::getline(ss, kind, ',');)
      if (!kind.empty()) list.push_back({{"kind", kind}});
    lr.doc["analyses"] = std::move(list);
  }
  if (lr.doc.contains("analyses") && lr.doc["analyses"].is_array())
    for (auto& a : lr.doc["analyses"]) {
      if (!a.is_object()) continue;
      if (o.p) a["p"] = *o.p;
      if (o.n_max) a["n_max"] = *o.n_max;
      if (o.tol) a["tol"] = *o.tol;
    }
  return lr;
}

AnalysisRequest parse_loaded(const LoadedRequest& lr) {
  try {
    AnalysisRequest req = parse_request(lr.doc);
    validate_request(req);
    return req;
  } catch (const RequestError& e) {
    throw InputFailure{anchored_message(lr.source, lr.text, e.anchor_key, e.anchor_occurrence, e.what())};
  } catch (const Error& e) {
    throw InputFailure{anchored_message(lr.source, lr.text, "", 0, e.what())};
  }
}

int cmd_run(const RunOptions& o) {
  const LoadedRequest lr = load(o);
  const AnalysisRequest req = parse_loaded(lr);
  const RunResult result = run_request(req, o.threads);
  const std::string report = result.report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw InputFailure{o.out + ":0: cannot write file"};
    out << report;
  }
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv, std::ios::binary);
    if (!csv) throw InputFailure{o.csv + ":0: cannot write file"};
    for (std::size_t i = 0; i < result.sequences.size(); ++i) {
      if (i) csv << "\n";
      csv << "# " << result.sequences[i].label << "\n";
      write_csv(csv, result.sequences[i].sequence);
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical degree sequences and spectral checks for rational maps"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run = app.add_subcommand("run", "Run the analyses of a request file");
  run->add_option("file", ro.file, "Request JSON");
  run->add_option("--model", ro.model, "Model: built-in name, JSON file, or inline JSON");
  run->add_option("--map", ro.map, "Map: JSON file or inline JSON");
  run->add_option("--p", ro.p, "Codimension for every analysis");
  run->add_option("--nmax", ro.n_max, "Iterates for every analysis")->check(CLI::Range(1u, 10000u));
  run->add_option("--tol", ro.tol, "Numerical tolerance for every analysis");
  run->add_option("--out", ro.out, "Write the report here instead of stdout");
  run->add_option("--csv", ro.csv, "Write degree sequences as CSV");
  run->add_option("--check", ro.check, "Comma-separated analysis kinds, replacing the request's");
  run->add_option("--threads", ro.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* models = app.add_subcommand("models", "List built-in models");

  std::string vfile;
  auto* validate = app.add_subcommand("validate", "Check a request without running it");
  validate->add_option("file", vfile, "Request JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*run) {
      if (ro.file.empty() && ro.map.empty() && ro.model.empty()) {
        std::cerr << "run: give a request file or --map/--model with --check\n";
        return kExitInputError;
      }
      return cmd_run(ro);
    }
    if (*models) {
      for (const auto& name : builtin_model_specs()) std::cout << name << "\n";
      return kExitOk;
    }
    if (*validate) {
      RunOptions vo;
      vo.file = vfile;
      parse_loaded(load(vo));
      std::cout << "ok\n";
      return kExitOk;
    }
  } catch (const InputFailure& f) {
    std::cerr << f.text << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
