// sdcodes: command-line front end.
//
//   sdcodes gmatrix   -p 3 --lambda 2 [--l 8] [--delta 4] [--show g|plus|minus|upsilon] [--j 3]
//   sdcodes count     -p 3 -m 1 -s 3
//   sdcodes enumerate -p 3 -m 1 -s 2 [--offset N] [--limit N] [--sample N --seed S]
//   sdcodes build     -p 3 -m 1 -s 2 --k 0 --params 1,2
//   sdcodes verify    -p 3 -m 1 -s 2 --all [--jobs 4] | --k K --params .. | --in FILE
//   sdcodes negacyclic -p 3 -m 1 -s 1 [--all | --k K --params ..] [--check]
//
// Every subcommand accepts --format text|json|csv and --out FILE.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sdcodes/chainring.hpp"
#include "sdcodes/enumerator.hpp"
#include "sdcodes/gmatrix.hpp"
#include "sdcodes/json_io.hpp"

using namespace sdcodes;
using nlohmann::json;

namespace {

enum class Format { text, json, csv };

struct Common {
  Format format = Format::text;
  std::string out_path;
};

struct FieldArgs {
  Residue p = 3;
  unsigned m = 1;
  unsigned s = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  // Color only for a terminal on stdout, and never with NO_COLOR set.
  bool color() const {
    if (file_.is_open()) return false;
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color && *no_color) return false;
    return isatty(fileno(stdout));
  }

 private:
  std::ofstream file_;
};

void add_common(CLI::App* cmd, Common& common) {
  const std::map<std::string, Format> names{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  cmd->add_option("--format", common.format, "Output format")->transform(CLI::CheckedTransformer(names));
  cmd->add_option("--out", common.out_path, "Write to FILE instead of stdout");
}

void add_field(CLI::App* cmd, FieldArgs& f, bool with_m = true, bool with_s = true) {
  cmd->add_option("-p", f.p, "Odd prime characteristic")->required();
  if (with_m) cmd->add_option("-m", f.m, "Extension degree of the residue field")->check(CLI::PositiveNumber);
  if (with_s) cmd->add_option("-s", f.s, "Code length is p^s")->required()->check(CLI::PositiveNumber);
}

void reject_csv(const Common& c, const char* what) {
  if (c.format == Format::csv) throw std::invalid_argument(std::string("csv output is only available for count, not ") + what);
}

std::string element_text(const FieldSpec& field, const FqElem& a) {
  bool prime_field = true;
  for (unsigned t = 1; t < field.m(); ++t) prime_field = prime_field && a.coeffs[t] == 0;
  if (prime_field) return std::to_string(a.coeffs[0]);
  std::string out;
  for (unsigned t = 0; t < field.m(); ++t) {
    if (a.coeffs[t] == 0) continue;
    if (!out.empty()) out += "+";
    if (t == 0 || a.coeffs[t] != 1) out += std::to_string(a.coeffs[t]);
    if (t >= 1) out += "w";
    if (t >= 2) out += "^" + std::to_string(t);
  }
  return "(" + out + ")";
}

// sum c_i x^i, or "0".
std::string poly_text(const FieldSpec& field, const std::vector<FqElem>& coeffs, const char* var = "x") {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (field.is_zero(coeffs[i])) continue;
    if (!out.empty()) out += " + ";
    const std::string c = element_text(field, coeffs[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string generator_text(const FieldSpec& field, const RVector& g) {
  std::vector<FqElem> a, b;
  for (const auto& e : g) {
    a.push_back(e.a);
    b.push_back(e.b);
  }
  const std::string sa = poly_text(field, a), sb = poly_text(field, b);
  if (sb == "0") return sa;
  const std::string ub = sb == "1" ? "u" : "u(" + sb + ")";
  return sa == "0" ? ub : sa + " + " + ub;
}

std::string params_text(const FieldSpec& field, const std::vector<FqElem>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += element_text(field, params[i]);
  }
  return out + ")";
}

std::string ideal_text(const FieldSpec& field, const RIdealGens& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    if (i) out += ", ";
    out += generator_text(field, gens.generators[i]);
  }
  return out + ">";
}

std::string code_text(const CodeSpec& code, const std::string& index) {
  std::ostringstream os;
  if (!index.empty()) os << '#' << index << ' ';
  os << "k=" << code.descriptor.k << ' ' << to_string(code.descriptor.sub) << " nu=" << code.descriptor.nu
     << " params=" << params_text(code.field, code.params) << "  " << ideal_text(code.field, code.generators);
  return os.str();
}

std::vector<FqElem> parse_params(const FieldSpec& field, const std::string& text) {
  std::vector<FqElem> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(',', pos);
    out.push_back(parse_element(field, std::string_view(text).substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

mpz_class parse_big(const std::string& text, const char* what) {
  mpz_class v;
  if (v.set_str(text, 10) != 0 || v < 0) throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return v;
}

// ---- gmatrix ----

struct GmatrixArgs {
  Residue p = 3;
  std::optional<unsigned> lambda;
  std::optional<std::size_t> l;
  std::size_t delta = 0;
  std::string show = "g";
  std::optional<std::size_t> j;
  bool signed_residues = false;
};

int run_gmatrix(const GmatrixArgs& a, const Common& c) {
  reject_csv(c, "gmatrix");
  if (!a.lambda && !a.l) throw std::invalid_argument("gmatrix needs --lambda or --l");
  if (a.p < 3 || a.p % 2 == 0 || !is_prime(a.p)) throw std::invalid_argument("p must be an odd prime");
  MatrixFp g = a.lambda ? build_g(a.p, *a.lambda) : g_truncated(a.p, *a.l);
  if (a.lambda && a.l) g = truncate_g(g, *a.l);
  const std::size_t n = g.rows();
  Output out(c.out_path);
  auto& os = out.stream();

  if (a.show == "upsilon") {
    const std::size_t lo = (a.delta + 1) / 2 + 1, hi = (n + 1) / 2;
    std::vector<UpsilonVec> vecs;
    if (a.j) {
      vecs.push_back(upsilon(g, *a.j, a.delta));
    } else {
      if (a.delta >= n) throw std::invalid_argument("--delta must be smaller than l");
      for (std::size_t j = lo; j <= hi; ++j) vecs.push_back(upsilon(g, j, a.delta));
    }
    if (c.format == Format::json) {
      json arr = json::array();
      for (const auto& v : vecs) arr.push_back({{"index", v.source_index}, {"values", v.values}});
      os << json{{"p", a.p}, {"l", n}, {"delta", a.delta}, {"upsilon", arr}}.dump() << '\n';
    } else {
      for (const auto& v : vecs) {
        os << "Upsilon_" << v.source_index << "[" << a.delta << ";" << n << ") =";
        for (auto e : v.values) os << ' ' << e;
        os << '\n';
      }
    }
    return 0;
  }

  MatrixFp shown = g;
  if (a.show == "plus") shown = g + MatrixFp::identity(a.p, n);
  else if (a.show == "minus") shown = g - MatrixFp::identity(a.p, n);
  else if (a.show != "g") throw std::invalid_argument("--show must be g, plus, minus or upsilon");

  if (c.format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) rows.push_back(std::vector<Residue>(shown.row(i).begin(), shown.row(i).end()));
    json doc{{"p", a.p}, {"size", n}, {"show", a.show}, {"rows", rows}, {"rank", rank_fp(shown)}};
    if (a.lambda) doc["lambda"] = *a.lambda;
    os << doc.dump() << '\n';
  } else {
    os << format_grid(shown, a.signed_residues);
  }
  return 0;
}

// ---- count ----

int run_count(const FieldArgs& f, const Common& c) {
  const mpz_class total = count_self_dual(f.p, f.m, f.s);
  const auto descriptors = classify_cases(f.p, f.s);
  const FieldSpec field = find_irreducible(f.p, f.m);
  Output out(c.out_path);
  auto& os = out.stream();
  switch (c.format) {
    case Format::text:
      os << total.get_str() << '\n';
      break;
    case Format::json: {
      json cases = json::array();
      for (const auto& d : descriptors) {
        json entry = descriptor_to_json(d);
        entry["count"] = descriptor_size(field, d).get_str();
        cases.push_back(std::move(entry));
      }
      os << json{{"p", f.p}, {"m", f.m}, {"s", f.s}, {"count", total.get_str()}, {"cases", cases}}.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "p,m,s,case,nu,k,count\n";
      for (const auto& d : descriptors) {
        os << f.p << ',' << f.m << ',' << f.s << ',' << to_string(d.sub) << ',' << d.nu << ',' << d.k << ','
           << descriptor_size(field, d).get_str() << '\n';
      }
      os << f.p << ',' << f.m << ',' << f.s << ",total,,," << total.get_str() << '\n';
      break;
  }
  return 0;
}

// ---- enumerate / build ----

struct WindowArgs {
  std::string offset = "0";
  std::string limit;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
};

void emit_code(std::ostream& os, const CodeSpec& code, const Common& c, const std::string& index) {
  if (c.format == Format::json) {
    json j = code_to_json(code);
    if (!index.empty()) j["index"] = index;
    os << j.dump() << '\n';
  } else {
    os << code_text(code, index) << '\n';
  }
}

int run_enumerate(const FieldArgs& f, const WindowArgs& w, const Common& c) {
  reject_csv(c, "enumerate");
  CodeEnumerator codes(find_irreducible(f.p, f.m), f.s);
  Output out(c.out_path);
  auto& os = out.stream();
  if (w.sample) {
    for (const auto& idx : sample_indices(codes.total(), *w.sample, w.seed)) {
      emit_code(os, codes.code_at(idx), c, idx.get_str());
    }
    return 0;
  }
  const mpz_class offset = parse_big(w.offset, "--offset");
  codes.set_window(offset, w.limit.empty() ? std::nullopt : std::optional<mpz_class>(parse_big(w.limit, "--limit")));
  mpz_class index = offset;
  while (auto code = codes.next()) {
    emit_code(os, *code, c, index.get_str());
    ++index;
  }
  return 0;
}

struct SingleArgs {
  std::optional<std::uint64_t> k;
  std::string params;
};

CodeSpec single_code(const FieldArgs& f, const SingleArgs& a) {
  if (!a.k) throw std::invalid_argument("--k is required");
  const FieldSpec field = find_irreducible(f.p, f.m);
  return build_code(field, f.s, descriptor_for_k(f.p, f.s, *a.k), parse_params(field, a.params));
}

int run_build(const FieldArgs& f, const SingleArgs& a, const Common& c) {
  reject_csv(c, "build");
  const CodeSpec code = single_code(f, a);
  Output out(c.out_path);
  emit_code(out.stream(), code, c, "");
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  bool all = false;
  std::string in_path;
  unsigned jobs = 1;
  bool distinct = false;
};

struct Verdict {
  bool self_orthogonal = false;
  std::size_t dimension = 0;
  bool self_dual = false;
};

Verdict verdict_of(const FieldSpec& field, const RIdealGens& gens) {
  const ChainRing ring(field);
  Verdict v;
  v.self_orthogonal = is_self_orthogonal(ring, gens);
  v.dimension = span_dimension(ring, gens);
  v.self_dual = v.self_orthogonal && v.dimension == gens.length();
  return v;
}

// Verifies a batch on up to `jobs` threads; results keep input order.
std::vector<Verdict> verify_batch(const std::vector<ImportedIdeal>& batch, unsigned jobs) {
  std::vector<Verdict> out(batch.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(batch.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = verdict_of(batch[i].field, batch[i].gens);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < batch.size(); i += jobs) out[i] = verdict_of(batch[i].field, batch[i].gens);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<ImportedIdeal> read_documents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<json> docs;
  // A single document, an array of documents, or JSON Lines.
  try {
    json whole = json::parse(text);
    if (whole.is_array()) docs.assign(whole.begin(), whole.end());
    else docs.push_back(std::move(whole));
  } catch (const json::parse_error&) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      docs.push_back(json::parse(line));
    }
  }
  std::vector<ImportedIdeal> out;
  for (const auto& d : docs) {
    // Code documents are rebuilt from their parameters and cross-checked.
    if (d.contains("params")) code_from_json(d);
    out.push_back(ideal_from_json(d));
  }
  return out;
}

struct Tally {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::set<CanonicalForm> forms;
  std::vector<std::string> failures;
};

void report(Output& out, const Common& c, const Tally& t, bool distinct, const char* label) {
  auto& os = out.stream();
  if (c.format == Format::json) {
    json doc{{"checked", t.total}, {"self_dual", t.passed}, {"failures", t.failures}};
    if (distinct) doc["distinct"] = t.forms.size();
    os << doc.dump() << '\n';
    return;
  }
  for (const auto& f : t.failures) os << "FAIL " << f << '\n';
  const bool ok = t.passed == t.total;
  const bool color = out.color();
  if (color) os << (ok ? "\033[32m" : "\033[31m");
  os << t.passed << '/' << t.total << ' ' << label;
  if (color) os << "\033[0m";
  os << '\n';
  if (distinct) os << t.forms.size() << " distinct\n";
}

void tally(Tally& t, const std::vector<ImportedIdeal>& batch, const std::vector<std::string>& names, unsigned jobs,
           bool distinct) {
  const auto verdicts = verify_batch(batch, jobs);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    ++t.total;
    if (verdicts[i].self_dual) {
      ++t.passed;
    } else {
      std::ostringstream os;
      os << names[i] << ": self-orthogonal=" << (verdicts[i].self_orthogonal ? "yes" : "no")
         << " dimension=" << verdicts[i].dimension << " (need " << batch[i].gens.length() << ")";
      t.failures.push_back(os.str());
    }
    if (distinct) t.forms.insert(canonical_form(ChainRing(batch[i].field), batch[i].gens));
  }
}

constexpr std::size_t kBatch = 256;

// Streams every code (or its negacyclic image) through the verifier.
Tally verify_family(const FieldArgs& f, const WindowArgs& w, unsigned jobs, bool distinct, bool negacyclic) {
  CodeEnumerator codes(find_irreducible(f.p, f.m), f.s);
  const mpz_class offset = parse_big(w.offset, "--offset");
  codes.set_window(offset, w.limit.empty() ? std::nullopt : std::optional<mpz_class>(parse_big(w.limit, "--limit")));
  Tally t;
  std::vector<ImportedIdeal> batch;
  std::vector<std::string> names;
  mpz_class index = offset;
  auto flush = [&] {
    tally(t, batch, names, jobs, distinct);
    batch.clear();
    names.clear();
  };
  while (auto code = codes.next()) {
    names.push_back("#" + index.get_str() + " " + code_text(*code, ""));
    batch.push_back({code->field, f.s, negacyclic ? to_negacyclic(*code) : code->generators});
    ++index;
    if (batch.size() == kBatch) flush();
  }
  flush();
  return t;
}

int run_verify(const FieldArgs& f, bool have_field, const SingleArgs& single, const WindowArgs& w,
               const VerifyArgs& v, const Common& c) {
  reject_csv(c, "verify");
  const int modes = int(v.all) + int(!v.in_path.empty()) + int(single.k.has_value());
  if (modes != 1) throw std::invalid_argument("verify needs exactly one of --all, --in FILE or --k");
  Tally t;
  if (v.all) {
    if (!have_field) throw std::invalid_argument("--all needs -p and -s");
    t = verify_family(f, w, v.jobs, v.distinct, false);
  } else if (!v.in_path.empty()) {
    const auto docs = read_documents(v.in_path);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < docs.size(); ++i) names.push_back("document " + std::to_string(i));
    tally(t, docs, names, v.jobs, v.distinct);
  } else {
    if (!have_field) throw std::invalid_argument("--k needs -p and -s");
    const CodeSpec code = single_code(f, single);
    tally(t, {{code.field, f.s, code.generators}}, {code_text(code, "")}, 1, v.distinct);
  }
  Output out(c.out_path);
  report(out, c, t, v.distinct, "self-dual");
  return t.passed == t.total ? 0 : 1;
}

// ---- negacyclic ----

int run_negacyclic(const FieldArgs& f, const SingleArgs& single, const WindowArgs& w, bool all, bool check,
                   unsigned jobs, const Common& c) {
  reject_csv(c, "negacyclic");
  if (all == single.k.has_value()) throw std::invalid_argument("negacyclic needs exactly one of --all or --k");
  Output out(c.out_path);
  auto& os = out.stream();
  if (check) {
    Tally t;
    if (all) {
      t = verify_family(f, w, jobs, true, true);
    } else {
      const CodeSpec code = single_code(f, single);
      tally(t, {{code.field, f.s, to_negacyclic(code)}}, {code_text(code, "")}, 1, true);
    }
    report(out, c, t, true, "self-dual negacyclic");
    return t.passed == t.total ? 0 : 1;
  }
  auto emit = [&](const CodeSpec& code) {
    const RIdealGens image = to_negacyclic(code);
    if (c.format == Format::json) {
      json j = ideal_to_json(code.field, f.s, image);
      j["source"] = {{"k", code.descriptor.k}, {"case", to_string(code.descriptor.sub)}, {"nu", code.descriptor.nu}};
      os << j.dump() << '\n';
    } else {
      os << "k=" << code.descriptor.k << " params=" << params_text(code.field, code.params) << "  "
         << ideal_text(code.field, image) << " mod x^" << code.length() << "+1\n";
    }
  };
  if (all) {
    CodeEnumerator codes(find_irreducible(f.p, f.m), f.s);
    const mpz_class offset = parse_big(w.offset, "--offset");
    codes.set_window(offset, w.limit.empty() ? std::nullopt : std::optional<mpz_class>(parse_big(w.limit, "--limit")));
    while (auto code = codes.next()) emit(*code);
  } else {
    emit(single_code(f, single));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual cyclic codes of length p^s over F_{p^m} + uF_{p^m}"};
  app.require_subcommand(1);
  Common common;
  FieldArgs field;
  GmatrixArgs gm;
  WindowArgs window;
  SingleArgs single;
  VerifyArgs verify;
  bool neg_all = false, neg_check = false;

  auto* gmatrix = app.add_subcommand("gmatrix", "Print G_{p^lambda}, its truncations and Upsilon vectors");
  gmatrix->add_option("-p", gm.p, "Odd prime")->required();
  gmatrix->add_option("--lambda", gm.lambda, "Level: the matrix has size p^lambda");
  gmatrix->add_option("--l", gm.l, "Truncate to the upper-left l x l block")->check(CLI::PositiveNumber);
  gmatrix->add_option("--delta", gm.delta, "Row offset for Upsilon vectors");
  gmatrix->add_option("--show", gm.show, "g, plus (G+I), minus (G-I) or upsilon")
      ->check(CLI::IsMember({"g", "plus", "minus", "upsilon"}));
  gmatrix->add_option("--j", gm.j, "Single Upsilon_{2j-1}");
  gmatrix->add_flag("--signed", gm.signed_residues, "Print p-1 as -1");
  add_common(gmatrix, common);

  auto* count = app.add_subcommand("count", "Number of self-dual cyclic codes");
  add_field(count, field);
  add_common(count, common);

  auto* enumerate = app.add_subcommand("enumerate", "List self-dual cyclic codes");
  add_field(enumerate, field);
  enumerate->add_option("--offset", window.offset, "Skip this many codes");
  enumerate->add_option("--limit", window.limit, "Emit at most this many codes");
  enumerate->add_option("--sample", window.sample, "Draw this many codes uniformly at random");
  enumerate->add_option("--seed", window.seed, "Seed for --sample");
  add_common(enumerate, common);

  auto* build = app.add_subcommand("build", "Build one code from its case and parameters");
  add_field(build, field);
  build->add_option("--k", single.k, "Torsion exponent k")->required();
  build->add_option("--params", single.params, "Comma-separated field elements c0:c1:..");
  add_common(build, common);

  auto* verify_cmd = app.add_subcommand("verify", "Check self-duality with the independent verifier");
  verify_cmd->add_option("-p", field.p, "Odd prime");
  verify_cmd->add_option("-m", field.m, "Extension degree")->check(CLI::PositiveNumber);
  auto* s_opt = verify_cmd->add_option("-s", field.s, "Code length is p^s")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--all", verify.all, "Every enumerated code");
  verify_cmd->add_option("--k", single.k, "Torsion exponent of a single code");
  verify_cmd->add_option("--params", single.params, "Parameters of a single code");
  verify_cmd->add_option("--in", verify.in_path, "JSON, JSON array or JSON Lines file");
  verify_cmd->add_option("--offset", window.offset, "With --all: skip this many codes");
  verify_cmd->add_option("--limit", window.limit, "With --all: verify at most this many codes");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--distinct", verify.distinct, "Also count distinct canonical forms");
  add_common(verify_cmd, common);

  auto* negacyclic = app.add_subcommand("negacyclic", "Map codes to self-dual negacyclic codes via x -> -x");
  add_field(negacyclic, field);
  negacyclic->add_flag("--all", neg_all, "Every enumerated code");
  negacyclic->add_option("--k", single.k, "Torsion exponent of a single code");
  negacyclic->add_option("--params", single.params, "Parameters of a single code");
  negacyclic->add_option("--offset", window.offset, "With --all: skip this many codes");
  negacyclic->add_option("--limit", window.limit, "With --all: at most this many codes");
  negacyclic->add_flag("--check", neg_check, "Verify the images instead of printing them");
  negacyclic->add_option("--jobs", verify.jobs, "Worker threads for --check")->check(CLI::PositiveNumber);
  add_common(negacyclic, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gmatrix) return run_gmatrix(gm, common);
    if (*count) return run_count(field, common);
    if (*enumerate) return run_enumerate(field, window, common);
    if (*build) return run_build(field, single, common);
    if (*verify_cmd) return run_verify(field, s_opt->count() > 0, single, window, verify, common);
    if (*negacyclic) return run_negacyclic(field, single, window, neg_all, neg_check, verify.jobs, common);
  } catch (const std::exception& e) {
    std::cerr << "sdcodes: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
