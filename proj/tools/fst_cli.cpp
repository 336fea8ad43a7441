#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fst/acceptance.hpp"
#include "fst/bounds.hpp"
#include "fst/certify.hpp"
#include "fst/descent.hpp"
#include "fst/groebner.hpp"
#include "fst/module.hpp"
#include "fst/parse.hpp"
#include "fst/report.hpp"
#include "fst/strength.hpp"

namespace {

using fst::report::ordered_json;

enum Exit { kOk = 0, kVerdictFail = 1, kBudget = 2, kParse = 3, kInvalid = 4 };

class VerdictFail : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::string gens;
  std::string form;
  std::string forms_file;
  std::string by;
  std::string with;
  std::string matrix_file;
  std::string theorem;
  std::string order = "grevlex";
  std::string policy = "maximal";
  std::string table;
  std::string delta;
  std::string thresholds;
  std::string format = "json";
  std::string verbose;
  std::size_t nvars = 0;
  long eta = 1;
  long k = 1;
  long n = 1;
  long m = 1;
  long i = 0;
  long h = 0;
  long d = 2;
  long threshold = 1;
  long max_k = -1;
  std::uint32_t characteristic = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::size_t max_pairs = 0;
  unsigned max_degree = 0;
  std::vector<int> only;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fst::PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FST_BUDGET="pairs=N,degree=D,enum=E"; command-line flags win.
fst::Budget resolve_budget(const Options& o) {
  fst::Budget b;
  if (const char* env = std::getenv("FST_BUDGET")) {
    for (const auto& item : fst::split_list(env, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw fst::PreconditionError("FST_BUDGET: expected key=value, got " + item);
      auto key = item.substr(0, eq);
      auto value = std::stoull(item.substr(eq + 1));
      if (value == 0) throw fst::PreconditionError("FST_BUDGET: budgets must be positive");
      if (key == "pairs") {
        b.max_pairs = value;
      } else if (key == "degree") {
        b.max_degree = static_cast<unsigned>(value);
      } else if (key == "enum") {
        b.max_enumeration = value;
      } else {
        throw fst::PreconditionError("FST_BUDGET: unknown key " + key);
      }
    }
  }
  if (o.budget) b.max_enumeration = o.budget;
  if (o.max_pairs) b.max_pairs = o.max_pairs;
  if (o.max_degree) b.max_degree = o.max_degree;
  return b;
}

fst::MonomialOrder resolve_order(const std::string& s) {
  if (s == "grevlex") return fst::MonomialOrder::grevlex();
  if (s == "lex") return fst::MonomialOrder::lex();
  if (s.rfind("elim:", 0) == 0) return fst::MonomialOrder::eliminate_first(std::stoul(s.substr(5)));
  throw fst::PreconditionError("unknown order " + s + " (grevlex, lex, elim:K)");
}

std::vector<std::string> input_texts(const Options& o) {
  std::vector<std::string> out;
  if (!o.form.empty()) out.push_back(o.form);
  for (auto& s : fst::split_list(o.gens, ';')) out.push_back(s);
  if (!o.forms_file.empty()) {
    for (auto& s : fst::split_lines(read_file(o.forms_file))) out.push_back(s);
  }
  return out;
}

std::size_t ring_size(const Options& o, const std::vector<std::string>& texts) {
  std::size_t n = 0;
  for (const auto& t : texts) n = std::max(n, fst::max_variable_index(t));
  if (o.nvars) {
    if (o.nvars < n) throw fst::PreconditionError("--nvars smaller than the largest variable index");
    n = o.nvars;
  }
  return std::max<std::size_t>(n, 1);
}

struct Context {
  const Options& opt;
  fst::Budget budget;
  std::string command;
  ordered_json input = ordered_json::object();
  bool budget_hit = false;
};

template <fst::CoefficientField F>
std::vector<fst::Polynomial<F>> parse_all(const F& k, std::size_t n, const std::vector<std::string>& texts) {
  return fst::parse_polynomials(texts, k, n);
}

template <fst::CoefficientField F>
std::vector<fst::Form<F>> to_forms(const std::vector<fst::Polynomial<F>>& ps) {
  std::vector<fst::Form<F>> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

template <fst::CoefficientField F>
ordered_json ideal_command(const F& k, Context& ctx) {
  const auto& o = ctx.opt;
  auto texts = input_texts(o);
  if (texts.empty()) throw fst::PreconditionError("no generators (use --gens or --forms-file)");
  std::vector<std::string> extra = fst::split_list(o.by.empty() ? o.with : o.by, ';');
  auto all = texts;
  all.insert(all.end(), extra.begin(), extra.end());
  std::size_t n = ring_size(o, all);
  auto gens = parse_all(k, n, texts);
  ctx.input["nvars"] = n;
  ctx.input["generators"] = fst::report::polys(gens);
  fst::Ideal<F> I(k, n, gens);
  auto order = resolve_order(o.order);
  const std::string& c = ctx.command;
  ordered_json result;
  if (c == "gb") {
    fst::GbStats stats;
    auto basis = fst::groebner_basis(gens, order, ctx.budget, &stats);
    result["order"] = order.key();
    result["basis"] = fst::report::polys(basis);
    result["size"] = basis.size();
    result["pairs_reduced"] = stats.pairs_reduced;
    return result;
  }
  if (c == "leading-ideal") {
    auto L = fst::leading_form_ideal(gens, ctx.budget);
    result["generators"] = fst::report::polys(L.basis(fst::MonomialOrder{}, ctx.budget));
    return result;
  }
  if (c == "pdim") {
    auto res = fst::free_resolution(fst::SubmoduleOfFree<F>::from_ideal(I), ctx.budget);
    result["pdim"] = res.length();
    result["upper_bound_only"] = !res.minimal;
    result["resolution"] = fst::report::resolution(res);
    return result;
  }
  if (extra.empty()) throw fst::PreconditionError(c + " needs " + (c == "intersect" ? "--with" : "--by"));
  auto other = parse_all(k, n, extra);
  ctx.input["second"] = fst::report::polys(other);
  fst::Ideal<F> out(k, n);
  if (c == "sat") {
    if (other.size() != 1) throw fst::PreconditionError("sat takes a single polynomial in --by");
    out = fst::saturation(I, other.front(), ctx.budget);
  } else if (c == "colon") {
    out = fst::colon_ideal(I, fst::Ideal<F>(k, n, other), ctx.budget);
  } else {
    out = fst::intersection(I, fst::Ideal<F>(k, n, other), ctx.budget);
  }
  result["generators"] = fst::report::polys(out.basis(fst::MonomialOrder{}, ctx.budget));
  return result;
}

template <fst::CoefficientField F>
ordered_json certify_command(const F& k, Context& ctx) {
  const auto& o = ctx.opt;
  if (o.theorem == "max-minors") {
    if (o.matrix_file.empty()) throw fst::PreconditionError("--theorem max-minors needs --matrix");
    auto doc = nlohmann::json::parse(read_file(o.matrix_file));
    std::vector<std::vector<std::string>> rows = doc.at("rows");
    std::vector<std::string> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    std::size_t n = doc.contains("nvars") ? doc["nvars"].get<std::size_t>() : ring_size(o, flat);
    std::vector<std::vector<fst::Polynomial<F>>> prow;
    for (const auto& r : rows) prow.push_back(parse_all(k, n, r));
    auto mat = fst::PolyMatrix<F>::from_rows(k, n, prow);
    ctx.input["nvars"] = n;
    ctx.input["matrix"] = fst::report::matrix(mat);
    auto rep = fst::minors_height_check(mat, ctx.budget);
    if (!rep.holds) throw VerdictFail(fst::report::minors(rep).dump());
    return fst::report::minors(rep);
  }
  if (!o.theorem.empty()) throw fst::PreconditionError("unknown theorem " + o.theorem + " (max-minors)");
  auto texts = input_texts(o);
  if (texts.empty()) throw fst::PreconditionError("no forms (use --forms-file or --gens)");
  std::size_t n = ring_size(o, texts);
  auto forms = to_forms(parse_all(k, n, texts));
  ctx.input["nvars"] = n;
  ctx.input["forms"] = fst::report::forms(forms);
  auto cert = fst::check_reta(forms, o.eta, ctx.budget);
  auto j = fst::report::reta(cert);
  if (!cert.pass) throw VerdictFail(j.dump());
  return j;
}

ordered_json strength_command(const fst::AnyField& field, Context& ctx) {
  const auto& o = ctx.opt;
  auto texts = input_texts(o);
  if (texts.size() != 1) throw fst::PreconditionError(ctx.command + " takes exactly one form (--form)");
  std::size_t n = ring_size(o, texts);
  ctx.input["nvars"] = n;
  ctx.input["form"] = texts.front();
  if (const auto* q = std::get_if<fst::RationalField>(&field)) {
    // No exhaustive search over Q: report the extension-stable bounds only.
    fst::Form<fst::RationalField> f(fst::parse_polynomial(texts.front(), *q, n));
    if (ctx.command == "collapse") throw fst::PreconditionError("collapse search needs a prime field");
    fst::StrengthReport r;
    r.jacobian_height = fst::jacobian_height(f, ctx.budget);
    r.jacobian_bound = fst::strength_lower_bound(f, ctx.budget);
    r.lower = r.jacobian_bound;
    r.upper = f.degree() == 1 ? fst::ExtendedInt::infinite() : fst::ExtendedInt(static_cast<long>(n) - 1);
    if (f.degree() == 1) r.exact = fst::ExtendedInt::infinite();
    r.complete = f.degree() == 1;
    return fst::report::strength(r);
  }
  const auto& k = std::get<fst::PrimeField>(field);
  fst::Form<fst::PrimeField> f(fst::parse_polynomial(texts.front(), k, n));
  if (ctx.command == "collapse") {
    if (o.k < 0) throw fst::PreconditionError("--k must be nonnegative");
    fst::CollapseSearchStats stats;
    auto w = fst::find_collapse(f, static_cast<std::size_t>(o.k), ctx.budget, &stats);
    ordered_json j;
    j["k"] = o.k;
    j["found"] = w.has_value();
    j["witness"] = w ? fst::report::witness(*w) : ordered_json(nullptr);
    j["candidates"] = stats.candidates;
    j["field_caveat"] = true;
    return j;
  }
  std::optional<std::size_t> max_k;
  if (o.max_k >= 0) max_k = static_cast<std::size_t>(o.max_k);
  auto r = fst::strength_exact(f, ctx.budget, max_k);
  ctx.budget_hit = r.budget_exceeded;
  auto j = fst::report::strength(r);
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

fst::bounds::BoundTable table_from(const Options& o) {
  if (o.thresholds.empty()) return fst::bounds::BoundTable::standard(static_cast<int>(o.eta), o.characteristic);
  std::map<unsigned, long> t;
  for (const auto& item : fst::split_list(o.thresholds, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw fst::PreconditionError("--thresholds expects degree:value pairs");
    t[static_cast<unsigned>(std::stoul(item.substr(0, colon)))] = std::stol(item.substr(colon + 1));
  }
  return fst::bounds::BoundTable::fixed_thresholds(std::move(t));
}

fst::DimensionSequence parse_delta(const std::string& s) {
  std::vector<long> e;
  for (const auto& x : fst::split_list(s, ',')) e.push_back(std::stol(x));
  if (e.empty()) throw fst::PreconditionError("--delta expects a comma-separated sequence");
  return fst::DimensionSequence(e);
}

ordered_json descend_command(const fst::AnyField& field, Context& ctx) {
  const auto& o = ctx.opt;
  const auto* k = std::get_if<fst::PrimeField>(&field);
  if (!k) throw fst::PreconditionError("descent searches collapses exhaustively and needs a prime field");
  auto texts = input_texts(o);
  if (texts.empty()) throw fst::PreconditionError("no forms (use --forms-file or --gens)");
  std::size_t n = ring_size(o, texts);
  auto gens = parse_all(*k, n, texts);
  fst::GradedSpace<fst::PrimeField> v(*k, n, gens);
  ctx.input["nvars"] = n;
  ctx.input["basis"] = fst::report::forms(v.basis());
  ctx.input["delta"] = v.dimension_sequence().entries();

  fst::ThresholdPolicy policy;
  if (o.policy == "maximal") {
    policy.kind = fst::ThresholdPolicy::Kind::maximal;
  } else if (o.policy == "constant") {
    policy = fst::ThresholdPolicy::constant(o.threshold);
  } else if (o.policy == "eta") {
    policy = fst::ThresholdPolicy::eta(table_from(o));
  } else {
    throw fst::PreconditionError("unknown policy " + o.policy + " (maximal, constant, eta)");
  }
  if (o.max_k >= 0) policy.max_k = o.max_k;
  fst::DescentOptions opt;
  opt.budget = ctx.budget;
  opt.seed = o.seed;
  auto trace = fst::small_subalgebra(v, policy, opt);
  ctx.budget_hit = !trace.complete;
  auto j = fst::report::descent(trace);
  if (trace.complete && !trace.all_members) throw VerdictFail(j.dump());
  return j;
}

ordered_json bounds_command(Context& ctx) {
  namespace b = fst::bounds;
  const auto& o = ctx.opt;
  ordered_json j;
  j["table"] = o.table;
  if (o.table == "quadric-B") {
    j["n"] = o.n;
    j["value"] = b::quadric_B(o.n);
    j["provenance"] = "2^(n+1)(n-2)+4 linear and quadratic generators for a space of n quadrics";
  } else if (o.table == "quadric-thresholds") {
    auto [reg, reta] = b::quadric_thresholds(o.n, o.eta);
    j["n"] = o.n;
    j["eta"] = o.eta;
    j["value"] = {reg, reta};
    j["provenance"] = "regular sequence: n-1; R_eta: n-1+ceil(eta/2)";
  } else if (o.table == "cubic") {
    auto delta = parse_delta(o.delta);
    if (delta.max_degree() > 3) throw fst::PreconditionError("cubic table takes (n1,n2,n3)");
    auto t = b::cubic_eta_A(delta.at_degree(1), delta.at_degree(2), delta.at_degree(3), o.eta, o.characteristic);
    j["delta"] = {delta.at_degree(1), delta.at_degree(2), delta.at_degree(3)};
    j["eta"] = o.eta;
    j["char"] = o.characteristic;
    j["value"] = t;
    j["provenance"] =
        "(0, ceil(b/2)+n1, R(b)+n1), b = 2(n2+n3)+eta (+1 if n2 != 0); R(b) = (2b+1)(b-1), doubled in char 2, "
        "2b^2-b in char 3";
  } else if (o.table == "eta-A") {
    auto delta = parse_delta(o.delta);
    auto t = table_from(o);
    j["delta"] = delta.entries();
    j["i"] = o.i;
    j["value"] = b::eta_A_i(delta, static_cast<unsigned>(o.i), t);
    j["provenance"] = t.provenance();
  } else if (o.table == "phi") {
    j["h"] = o.h;
    j["d"] = o.d;
    j["char"] = o.characteristic;
    if (auto e = b::phi_euler(o.h, static_cast<unsigned>(o.d), o.characteristic)) {
      j["value"] = *e;
      j["provenance"] = "Euler: char does not divide d, so F lies in the ideal of its partials";
    } else {
      j["value"] = b::phi(o.h, static_cast<unsigned>(o.d));
      j["provenance"] =
          "B3(h, d-1) + 1 with the default B3: h for linear spaces, max(h, 2^(h+1)(h-2)+4) for quadrics";
    }
  } else if (o.table == "B") {
    auto delta = parse_delta(o.delta);
    auto t = table_from(o);
    b::RecursionStats stats;
    j["delta"] = delta.entries();
    j["value"] = b::B_recursion(delta, t, ctx.budget, &stats);
    j["states"] = stats.nodes;
    j["provenance"] = t.provenance();
  } else if (o.table == "C") {
    auto t = table_from(o);
    b::RecursionStats stats;
    j["m"] = o.m;
    j["n"] = o.n;
    j["d"] = o.d;
    j["value"] = b::stillman_C(o.m, o.n, static_cast<unsigned>(o.d), t, ctx.budget, &stats);
    j["states"] = stats.nodes;
    j["provenance"] = "max of B over sequences of length <= d summing to mnd; " + t.provenance();
  } else {
    throw fst::PreconditionError("unknown table " + o.table +
                                 " (quadric-B, quadric-thresholds, cubic, eta-A, phi, B, C)");
  }
  return j;
}

// Flat key: value lines; arrays of strings one per line.
void print_text(const ordered_json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      print_text(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_string(); })) {
      out << indent << it.key() << ":\n";
      for (const auto& x : v) out << indent << "  " << x.template get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.template get<std::string>() : v.dump()) << "\n";
    }
  }
}

int emit(Context& ctx, const ordered_json& result, const std::string& field_spec) {
  const auto& o = ctx.opt;
  if (o.format == "text") {
    print_text(result, "", std::cout);
    return ctx.budget_hit ? kBudget : kOk;
  }
  ordered_json doc;
  doc["schema"] = fst::report::kSchemaVersion;
  doc["command"] = ctx.command;
  doc["config"] = {{"field", field_spec},
                   {"order", o.order},
                   {"budget",
                    {{"max_pairs", ctx.budget.max_pairs},
                     {"max_degree", ctx.budget.max_degree},
                     {"max_enumeration", ctx.budget.max_enumeration}}},
                   {"seed", o.seed},
                   {"format", o.format}};
  doc["input"] = ctx.input;
  doc["result"] = result;
  std::cout << doc.dump(2) << std::endl;
  return ctx.budget_hit ? kBudget : kOk;
}

int run(const std::string& command, const Options& o) {
  Context ctx{o, resolve_budget(o), command};
  if (o.verbose == "trace") fst::gb_trace_stream() = &std::cerr;
  if (command == "bounds") return emit(ctx, bounds_command(ctx), "");
  if (command == "selftest") {
    auto results = fst::acceptance::run_all(o.seed, std::cout, o.only);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
    return passed == results.size() ? kOk : kVerdictFail;
  }
  if (o.field.empty()) throw fst::PreconditionError("--field is required (p=<prime> or Q)");
  auto field = fst::parse_field_spec(o.field);
  std::string spec = std::visit([](const auto& k) { return k.spec(); }, field);
  ordered_json result;
  try {
    if (command == "strength" || command == "collapse") {
      result = strength_command(field, ctx);
    } else if (command == "descend") {
      result = descend_command(field, ctx);
    } else if (command == "certify") {
      result = std::visit([&](const auto& k) { return certify_command(k, ctx); }, field);
    } else {
      result = std::visit([&](const auto& k) { return ideal_command(k, ctx); }, field);
    }
  } catch (const VerdictFail& e) {
    emit(ctx, ordered_json::parse(e.what()), spec);
    return kVerdictFail;
  }
  return emit(ctx, result, spec);
}

void add_common(CLI::App* sub, Options& o, bool polys) {
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--budget", o.budget, "max candidates for exhaustive enumerations");
  sub->add_option("--max-pairs", o.max_pairs, "max Gröbner pairs");
  sub->add_option("--max-degree", o.max_degree, "max degree of Gröbner elements");
  sub->add_option("--verbose", o.verbose, "trace: log Gröbner pair processing to stderr");
  if (!polys) return;
  sub->add_option("--field", o.field, "p=<prime> or Q");
  sub->add_option("--gens", o.gens, "polynomials separated by ';'");
  sub->add_option("--forms-file", o.forms_file, "one polynomial per line, '#' comments");
  sub->add_option("--nvars", o.nvars, "number of variables (default: largest index used)");
  sub->add_option("--order", o.order, "grevlex, lex or elim:K");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strength, collapse search, subalgebra descent and ideal computations over F_p and Q"};
  app.require_subcommand(1);
  Options o;

  auto* strength = app.add_subcommand("strength", "exact strength over F_p with Jacobian lower bound");
  add_common(strength, o, true);
  strength->add_option("--form", o.form, "homogeneous form");
  strength->add_option("--max-k", o.max_k, "largest strength to search for");

  auto* collapse = app.add_subcommand("collapse", "search for a k-collapse");
  add_common(collapse, o, true);
  collapse->add_option("--form", o.form, "homogeneous form");
  collapse->add_option("--k", o.k, "number of pairs");

  auto* certify = app.add_subcommand("certify", "R_eta certificate, or the maximal minors height check");
  add_common(certify, o, true);
  certify->add_option("--eta", o.eta, "target eta");
  certify->add_option("--matrix", o.matrix_file, "JSON file {\"rows\": [[...], ...], \"nvars\": N}");
  certify->add_option("--theorem", o.theorem, "max-minors");

  auto* descend = app.add_subcommand("descend", "descend a graded space to a small subalgebra");
  add_common(descend, o, true);
  descend->add_option("--policy", o.policy, "maximal, constant or eta");
  descend->add_option("--threshold", o.threshold, "threshold for --policy constant");
  descend->add_option("--eta", o.eta, "eta for --policy eta");
  descend->add_option("--char", o.characteristic, "characteristic branch for --policy eta");
  descend->add_option("--thresholds", o.thresholds, "fixed per-degree thresholds, e.g. 1:0,2:1");
  descend->add_option("--max-k", o.max_k, "cap on every threshold");

  for (const char* name : {"gb", "pdim", "leading-ideal"}) add_common(app.add_subcommand(name), o, true);
  auto* sat = app.add_subcommand("sat", "saturation I : f^inf");
  add_common(sat, o, true);
  sat->add_option("--by", o.by, "polynomial f");
  auto* colon = app.add_subcommand("colon", "colon ideal I : J");
  add_common(colon, o, true);
  colon->add_option("--by", o.by, "generators of J separated by ';'");
  auto* intersect = app.add_subcommand("intersect", "intersection of ideals");
  add_common(intersect, o, true);
  intersect->add_option("--with", o.with, "generators of J separated by ';'");
  app.get_subcommand("gb")->description("reduced Gröbner basis");
  app.get_subcommand("pdim")->description("projective dimension of R/I with its free resolution");
  app.get_subcommand("leading-ideal")->description("ideal of leading forms via homogenization");

  auto* bounds = app.add_subcommand("bounds", "evaluate explicit bounds");
  add_common(bounds, o, false);
  bounds->add_option("--table", o.table, "quadric-B, quadric-thresholds, cubic, eta-A, phi, B, C")->required();
  bounds->add_option("--n", o.n, "n");
  bounds->add_option("--m", o.m, "m");
  bounds->add_option("--d", o.d, "degree");
  bounds->add_option("--height", o.h, "h for phi");
  bounds->add_option("--i", o.i, "degree i for eta-A");
  bounds->add_option("--eta", o.eta, "eta");
  bounds->add_option("--char", o.characteristic, "characteristic");
  bounds->add_option("--delta", o.delta, "dimension sequence, e.g. 0,0,1");
  bounds->add_option("--thresholds", o.thresholds, "fixed per-degree thresholds, e.g. 1:0,2:1");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", o.seed, "random seed")->default_val(20240601);
  selftest->add_option("--only", o.only, "criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const fst::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fst::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}
