// Copyright 2026 the tdesign authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exit codes: 0 design / success, 1 not a design, 2 input error,
// 3 internal disagreement (always a bug), 4 fixture self-verification failure.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdesign/admissibility.hpp"
#include "tdesign/boolfn.hpp"
#include "tdesign/codes.hpp"
#include "tdesign/delsarte.hpp"
#include "tdesign/design.hpp"
#include "tdesign/errors.hpp"
#include "tdesign/exactmath.hpp"
#include "tdesign/fixtures.hpp"
#include "tdesign/io.hpp"
#include "tdesign/spectral.hpp"

using nlohmann::json;
using namespace tdesign;

namespace {

json json_int(const ExactInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();  // still plain decimal digits, just too wide for int64
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

struct SpectrumRow {
  int weight;
  ExactInt value;
  std::uint64_t multiplicity;
};

// Rows sorted by (weight, value); weights 0..t when t is given, all otherwise.
std::vector<SpectrumRow> spectrum_rows(const IncidenceStructure& D, std::optional<int> t) {
  std::vector<SpectrumRow> rows;
  BooleanFunction f = D.characteristic_function();
  int n = D.n();
  if (!t) {
    for (const auto& [h, values] : walsh_full(f).by_weight())
      for (const auto& [v, m] : values) rows.push_back({h, ExactInt(v), m});
    return rows;
  }
  if (*t < 0 || *t > n) throw std::invalid_argument("spectrum: need 0 <= t <= n");
  ExactInt work = 0;
  for (int h = 0; h <= *t; ++h) work += binomial(n, h) * D.block_count();
  if (work > 100'000'000) throw budget_error("spectrum: weight scan exceeds the budget");
  for (int h = 0; h <= *t; ++h) {
    std::map<ExactInt, std::uint64_t> tally;
    std::uint64_t count = binomial(n, h).convert_to<std::uint64_t>();
    std::uint64_t w = h == 0 ? 0 : (std::uint64_t{1} << h) - 1;
    for (std::uint64_t c = 0; c < count; ++c, w = h == 0 ? w : next_subset(w))
      ++tally[walsh_at(f, PointSet(n, w))];
    for (const auto& [v, m] : tally) rows.push_back({h, v, m});
  }
  return rows;
}

int run_verify(const std::string& design_path, int t, const std::string& method,
               const std::string& out_path) {
  IncidenceStructure D = load_design(design_path);
  int n = D.n(), k = D.k();

  // The block-scheme test lives below k = n/2; above it, test the
  // complement, which is a t-design exactly when D is (needs t <= n-k).
  auto johnson_applicable = [&] { return 2 * k <= n || (k < n && t <= n - k); };
  auto run_johnson = [&] {
    if (2 * k <= n) return johnson_design_check(D, t);
    return johnson_design_check(complement_design(D), t);
  };

  std::map<std::string, bool> verdicts;
  std::optional<SpectralViolation> witness;

  if (method == "bruteforce" || method == "all")
    verdicts["bruteforce"] = verify_bruteforce(D, t).has_value();
  if (method == "spectral" || method == "all") {
    SpectralVerdict v = verify_spectral(D, t);
    verdicts["spectral"] = v.is_design;
    witness = v.first_violation;
  }
  if (method == "johnson" || (method == "all" && johnson_applicable())) {
    if (!johnson_applicable())
      throw std::invalid_argument("verify: the johnson method needs k <= n/2 or t <= n-k");
    verdicts["johnson"] = run_johnson();
  }
  if (method == "relative" || method == "all") verdicts["relative"] = relative_design_check(D, t);

  bool agree = true;
  for (const auto& [name, v] : verdicts) agree = agree && v == verdicts.begin()->second;
  bool design = agree && verdicts.begin()->second;

  json doc;
  doc["design"] = agree ? json(design) : json(nullptr);
  doc["t"] = t;
  doc["n"] = n;
  doc["k"] = k;
  doc["b"] = json_int(ExactInt(D.block_count()));
  if (agree && design) {
    ExactRat lam = ExactRat(ExactInt(D.block_count()) * binomial(k, t), binomial(n, t));
    doc["lambda"] = json_int(numerator(lam));
  } else {
    doc["lambda"] = nullptr;
  }
  doc["methods"] = json::object();
  for (const auto& [name, v] : verdicts) doc["methods"][name] = v;
  doc["disagreement"] = !agree;
  if (witness && !design) {
    doc["witness"] = {{"weight", witness->w.weight()},
                      {"points", witness->w.indices()},
                      {"expected", witness->expected ? json_int(*witness->expected) : json(nullptr)},
                      {"actual", json_int(witness->actual)}};
  } else {
    doc["witness"] = nullptr;
  }
  emit(out_path, doc.dump() + "\n");
  if (!agree) return 3;
  return design ? 0 : 1;
}

int run_spectrum(const std::string& design_path, std::optional<int> t, const std::string& format,
                 const std::string& out_path) {
  IncidenceStructure D = load_design(design_path);
  std::vector<SpectrumRow> rows = spectrum_rows(D, t);
  std::ostringstream out;
  if (format == "csv") {
    out << "weight,value,multiplicity\n";
    for (const SpectrumRow& r : rows)
      out << r.weight << ',' << r.value.str() << ',' << r.multiplicity << '\n';
  } else {
    json doc = json::array();
    for (const SpectrumRow& r : rows)
      doc.push_back(
          {{"weight", r.weight}, {"value", json_int(r.value)}, {"multiplicity", r.multiplicity}});
    out << doc.dump() << '\n';
  }
  emit(out_path, out.str());
  return 0;
}

int run_anf(const std::string& design_path, const std::string& out_path) {
  IncidenceStructure D = load_design(design_path);
  AlgebraicNormalForm a = anf(D.characteristic_function());
  json doc;
  doc["n"] = a.n;
  doc["degree"] = a.degree();
  doc["terms"] = json::array();
  for (std::uint64_t term : a.terms) doc["terms"].push_back(PointSet(a.n, term).indices());
  doc["histogram"] = json::object();
  for (const auto& [deg, count] : a.degree_histogram())
    doc["histogram"][std::to_string(deg)] = count;
  emit(out_path, doc.dump() + "\n");
  return 0;
}

int run_krawtchouk(int n, std::optional<int> k, std::optional<int> x, const std::string& format,
                   const std::string& out_path) {
  if (n < 0 || n > 512) throw std::invalid_argument("krawtchouk: need 0 <= n <= 512");
  std::vector<std::array<ExactInt, 3>> rows;  // k, x, value
  for (int kk = k ? *k : 0; kk <= (k ? *k : n); ++kk)
    for (int xx = x ? *x : 0; xx <= (x ? *x : n); ++xx)
      rows.push_back({ExactInt(kk), ExactInt(xx), krawtchouk(n, kk, xx)});
  std::ostringstream out;
  if (format == "csv") {
    out << "n,k,x,value\n";
    for (const auto& r : rows)
      out << n << ',' << r[0].str() << ',' << r[1].str() << ',' << r[2].str() << '\n';
  } else {
    json doc = json::array();
    for (const auto& r : rows)
      doc.push_back({{"n", n},
                     {"k", r[0].convert_to<int>()},
                     {"x", r[1].convert_to<int>()},
                     {"value", json_int(r[2])}});
    out << doc.dump() << '\n';
  }
  emit(out_path, out.str());
  return 0;
}

int run_admissible(int min_n, int max_n, const std::string& out_path) {
  std::ostringstream out;
  for (const AdmissibilityReport& r : admissibility_scan(min_n, max_n)) {
    json doc;
    doc["n"] = r.n;
    doc["t"] = r.t;
    doc["k"] = r.k;
    doc["lambda"] = json_int(r.lambda);
    doc["passed"] = r.passed;
    doc["failed"] = json::array();
    for (const FilterResult& f : r.failed)
      doc["failed"].push_back({{"name", f.name}, {"detail", f.detail}});
    doc["admissible"] = r.admissible();
    out << doc.dump() << '\n';
  }
  emit(out_path, out.str());
  return 0;
}

int run_code(const std::string& design_path, const std::string& format,
             const std::string& out_path) {
  IncidenceStructure D = load_design(design_path);
  WeightDistribution d = code_weight_distribution(D.characteristic_function());
  std::ostringstream out;
  if (format == "csv") {
    out << "weight,count\n";
    for (const auto& [w, c] : d.counts) out << w.str() << ',' << c.str() << '\n';
  } else {
    json doc;
    doc["length"] = json_int(d.length);
    doc["dimension"] = d.dimension;
    doc["counts"] = json::array();
    for (const auto& [w, c] : d.counts)
      doc["counts"].push_back({{"weight", json_int(w)}, {"count", json_int(c)}});
    out << doc.dump() << '\n';
  }
  emit(out_path, out.str());
  return 0;
}

int run_oa(const std::string& array_path, bool rows_as_vectors, const std::string& out_path) {
  BooleanFunction C =
      rows_as_vectors ? load_vector_set(array_path) : load_design(array_path).characteristic_function();
  int t = oa_strength(C);
  ExactRat index(ExactInt(C.support().size()), ExactInt(1) << t);
  std::ostringstream out;
  out << "n: " << C.n() << '\n';
  out << "rows: " << C.support().size() << '\n';
  out << "strength: " << t << '\n';
  out << "index: "
      << (is_integral(index) ? numerator(index).str()
                             : numerator(index).str() + "/" + denominator(index).str())
      << '\n';
  emit(out_path, out.str());
  return 0;
}

int run_gen_fixtures(const std::string& out_dir) {
  struct Item {
    std::string file;
    IncidenceStructure structure;
    int t;
  };
  std::vector<Item> items{{"fano.design", fano(), 2},
                          {"s5612.design", generate_s5612(), 5}};
  for (const Item& item : items) {
    std::string path = out_dir.empty() ? item.file : out_dir + "/" + item.file;
    emit(path, render_design(item.structure));
    IncidenceStructure back = load_design(path);
    if (!(back == item.structure) || !verify_bruteforce(back, item.t))
      throw fixture_error("gen-fixtures: " + path + " failed its round-trip verification");
    auto p = verify_bruteforce(back, item.t);
    std::cout << "wrote " << path << ": " << p->t << "-(" << p->n << "," << p->k << ","
              << p->lambda.str() << ") design, " << back.block_count() << " blocks\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact t-design verification through Walsh spectra"};
  app.require_subcommand(1);

  std::string design_path, out_path, format = "csv", method = "all", out_dir;
  int t = 0, n = 0, kra_k = 0, kra_x = 0, min_n = 0, max_n = 0;
  bool rows_as_vectors = true;

  CLI::App* verify = app.add_subcommand("verify", "Decide the t-design property");
  verify->add_option("--design", design_path, "design file")->required();
  verify->add_option("--t", t, "strength to test")->required();
  verify->add_option("--method", method, "spectral|bruteforce|johnson|relative|all")
      ->check(CLI::IsMember({"spectral", "bruteforce", "johnson", "relative", "all"}));
  verify->add_option("--output", out_path, "write the verdict here instead of stdout");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Walsh spectrum as CSV");
  spectrum->add_option("--design", design_path, "design file")->required();
  CLI::Option* spectrum_t =
      spectrum->add_option("--t", t, "restrict to weights 0..t (default: all)");
  spectrum->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--output", out_path, "output file");

  CLI::App* anf_cmd = app.add_subcommand("anf", "Polynomial terms and degree histogram");
  anf_cmd->add_option("--design", design_path, "design file")->required();
  anf_cmd->add_option("--output", out_path, "output file");

  CLI::App* kra = app.add_subcommand("krawtchouk", "Krawtchouk value table");
  kra->add_option("n", n, "length parameter")->required();
  CLI::Option* kra_k_opt = kra->add_option("k", kra_k, "fixed degree (default: all)");
  CLI::Option* kra_x_opt = kra->add_option("x", kra_x, "fixed argument (default: all)");
  kra->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  kra->add_option("--output", out_path, "output file");

  CLI::App* adm = app.add_subcommand("admissible", "Existence filters over a range of n");
  adm->add_option("min,--min", min_n, "lowest n (even, >= 8)")->required();
  adm->add_option("max,--max", max_n, "highest n")->required();
  adm->add_option("--output", out_path, "output file");

  CLI::App* code = app.add_subcommand("code", "Weight distribution of the attached code");
  code->add_option("--design", design_path, "design file")->required();
  code->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  code->add_option("--output", out_path, "output file");

  CLI::App* oa = app.add_subcommand("oa", "Orthogonal-array strength of a vector set");
  oa->add_option("--design", design_path, "vector-set file")->required();
  oa->add_flag("--rows-as-vectors,!--rows-as-blocks", rows_as_vectors,
               "rows may have any weight (default)");
  oa->add_option("--output", out_path, "output file");

  CLI::App* gen = app.add_subcommand("gen-fixtures", "Regenerate and write the bundled designs");
  gen->add_option("--output", out_dir, "directory to write into (default: .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code_ = app.exit(e);
    return code_ == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(design_path, t, method, out_path);
    if (spectrum->parsed())
      return run_spectrum(design_path,
                          spectrum_t->count() ? std::optional<int>(t) : std::nullopt, format,
                          out_path);
    if (anf_cmd->parsed()) return run_anf(design_path, out_path);
    if (kra->parsed())
      return run_krawtchouk(n, kra_k_opt->count() ? std::optional<int>(kra_k) : std::nullopt,
                            kra_x_opt->count() ? std::optional<int>(kra_x) : std::nullopt, format,
                            out_path);
    if (adm->parsed()) return run_admissible(min_n, max_n, out_path);
    if (code->parsed()) return run_code(design_path, format, out_path);
    if (oa->parsed()) return run_oa(design_path, rows_as_vectors, out_path);
    if (gen->parsed()) return run_gen_fixtures(out_dir);
  } catch (const fixture_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const consistency_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
