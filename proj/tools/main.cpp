// Command line front end for the exchange-word toolkit.
//
// Exit codes: 0 success (and "true" verdicts), 1 false verdicts,
// 2 usage or literal parse errors, 3 domain errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "triet/triet.hpp"

namespace {

using nlohmann::ordered_json;
using namespace triet;

/** Collects one report and renders it as plain text or as a JSON object
    {command, inputs, result, witnesses}. */
struct Emitter {
  Emitter(std::string command, bool as_json) : as_json_(as_json) {
    j_["command"] = std::move(command);
    j_["inputs"] = ordered_json::object();
    j_["result"] = ordered_json::object();
    j_["witnesses"] = ordered_json::object();
  }

  void input(const std::string& key, const std::string& raw) { j_["inputs"][key] = raw; }

  void value(const std::string& key, const ordered_json& v, const std::string& line) {
    j_["result"][key] = v;
    lines_.push_back(line);
  }

  /** Word-like outputs print bare in text mode. */
  void bare(const std::string& key, const std::string& s) { value(key, s, s); }

  void quantity(const std::string& key, const Quadratic& q) {
    j_["result"][key] = q.str();
    j_["result"][key + "_approx"] = approx_str(q);
    lines_.push_back(key + " = " + q.str() + " (~ " + approx_str(q) + ")");
  }

  void witness(const std::string& name, const Quadratic& q) {
    j_["witnesses"][name] = {{"exact", q.str()}, {"approx", approx_str(q)}};
    lines_.push_back("  " + name + " = " + q.str() + " (~ " + approx_str(q) + ")");
  }

  void flush() {
    if (as_json_) {
      std::cout << j_.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines_) std::cout << l << "\n";
  }

  bool as_json_;
  ordered_json j_;
  std::vector<std::string> lines_;
};

int emit_certificate(Emitter& em, const Certificate& cert) {
  em.value("verdict", cert.verdict, std::string("verdict = ") + (cert.verdict ? "true" : "false"));
  if (cert.failed_clause)
    em.value("failed_clause", clause_name(*cert.failed_clause),
             std::string("failed_clause = ") + clause_name(*cert.failed_clause));
  else
    em.j_["result"]["failed_clause"] = nullptr;
  for (const auto& [name, q] : cert.witnesses) em.witness(name, q);
  em.flush();
  return cert.verdict ? 0 : 1;
}

/** Expands "@file" word arguments and strips all whitespace. */
std::string word_arg(const std::string& raw) {
  if (raw.empty() || raw[0] != '@') return raw;
  std::ifstream in(raw.substr(1), std::ios::binary);
  if (!in) throw triet::ParseError("cannot read file '" + raw.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  std::erase_if(s, [](unsigned char c) { return std::isspace(c) != 0; });
  return s;
}

bool uses_ternary_letters(const std::string& s) {
  bool bin = false, ter = false;
  for (char ch : s) {
    if (ch == '0' || ch == '1')
      bin = true;
    else if (ch == 'A' || ch == 'B' || ch == 'C')
      ter = true;
  }
  if (bin && ter) throw triet::ParseError("literal mixes binary and ternary letters");
  if (!bin && !ter) throw triet::ParseError("literal contains no letters");
  return ter;
}

std::string fmt;
std::string raw_eps, raw_l, raw_c, raw_alpha, raw_beta, raw_u, raw_v, raw_word;
std::string raw_phi, raw_psi, raw_eta, raw_morphism, raw_seed, raw_side = "ter";
long opt_from = -2000, opt_to = 2000;
std::size_t opt_nmax = 15, opt_len = 100, opt_sslen = 400;
bool opt_dump = false;

void add_format(CLI::App* sub) {
  sub->add_option("--format", fmt, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

bool json_mode() { return fmt == "json"; }

int run_gen3iet() {
  IetParams p(parse_quadratic(raw_eps), parse_quadratic(raw_l), parse_quadratic(raw_c));
  Emitter em("gen3iet", json_mode());
  em.input("eps", raw_eps);
  em.input("l", raw_l);
  em.input("c", raw_c);
  em.input("from", std::to_string(opt_from));
  em.input("to", std::to_string(opt_to));
  em.bare("window", p.code(opt_from, opt_to).str());
  em.flush();
  return 0;
}

int run_gensturm() {
  SturmianParams s(parse_quadratic(raw_alpha), parse_quadratic(raw_beta));
  Emitter em("gensturm", json_mode());
  em.input("alpha", raw_alpha);
  em.input("beta", raw_beta);
  em.input("from", std::to_string(opt_from));
  em.input("to", std::to_string(opt_to));
  em.bare("window", two_iet_code(s, opt_from, opt_to).str());
  em.flush();
  return 0;
}

int run_complexity() {
  std::string text = word_arg(raw_word);
  Emitter em("complexity", json_mode());
  em.input("word", raw_word);
  em.input("nmax", std::to_string(opt_nmax));
  std::vector<std::size_t> profile;
  if (uses_ternary_letters(text))
    profile = complexity_profile(BiWindow<Ternary>::from_string(text), opt_nmax);
  else
    profile = complexity_profile(BiWindow<Binary>::from_string(text), opt_nmax);
  std::string shown = "[";
  for (std::size_t i = 0; i < profile.size(); ++i)
    shown += (i ? "," : "") + std::to_string(profile[i]);
  shown += "]";
  em.value("profile", profile, "profile = " + shown);
  const char* cls = to_string(classify_profile(profile));
  em.value("classification", cls, std::string("classification = ") + cls);
  em.flush();
  return 0;
}

int run_amicable() {
  auto u = Word<Binary>::from_string(word_arg(raw_u));
  auto v = Word<Binary>::from_string(word_arg(raw_v));
  Emitter em("amicable", json_mode());
  em.input("u", raw_u);
  em.input("v", raw_v);
  bool ok = is_amicable(u, v);
  em.value("amicable", ok, std::string("amicable = ") + (ok ? "true" : "false"));
  if (ok) {
    std::string t = ternarize_words(u, v).str();
    em.value("ternarization", t, "ternarization = " + t);
  }
  em.flush();
  return ok ? 0 : 1;
}

int run_ternarize_words() {
  auto u = Word<Binary>::from_string(word_arg(raw_u));
  auto v = Word<Binary>::from_string(word_arg(raw_v));
  Emitter em("ternarize-words", json_mode());
  em.input("u", raw_u);
  em.input("v", raw_v);
  em.bare("word", ternarize_words(u, v).str());
  em.flush();
  return 0;
}

int run_ternarize_morph() {
  auto phi = BinaryMorphism::from_string(raw_phi);
  auto psi = BinaryMorphism::from_string(raw_psi);
  Emitter em("ternarize-morph", json_mode());
  em.input("phi", raw_phi);
  em.input("psi", raw_psi);
  em.bare("eta", ternarize_morphisms(phi, psi).str());
  em.flush();
  return 0;
}

template <class A>
std::string fixed_point_str(const std::string& literal) {
  auto m = Morphism<A, A>::from_string(literal);
  std::optional<Letter> seed;
  if (!raw_seed.empty()) {
    if (raw_seed.size() != 1 || letter_index<A>(raw_seed[0]) < 0)
      throw triet::ParseError("seed must be a single letter of the morphism's alphabet");
    seed = static_cast<Letter>(letter_index<A>(raw_seed[0]));
  }
  return fixed_point_prefix(m, opt_len, seed).str();
}

int run_fixedpoint() {
  Emitter em("fixedpoint", json_mode());
  em.input("morphism", raw_morphism);
  em.input("len", std::to_string(opt_len));
  if (!raw_seed.empty()) em.input("seed", raw_seed);
  em.bare("prefix", uses_ternary_letters(raw_morphism)
                        ? fixed_point_str<Ternary>(raw_morphism)
                        : fixed_point_str<Binary>(raw_morphism));
  em.flush();
  return 0;
}

int run_certify_sturm() {
  Emitter em("certify-sturm", json_mode());
  em.input("alpha", raw_alpha);
  em.input("beta", raw_beta);
  return emit_certificate(em, yasutomi_check(parse_quadratic(raw_alpha), parse_quadratic(raw_beta)));
}

int run_certify_3iet() {
  IetParams p(parse_quadratic(raw_eps), parse_quadratic(raw_l), parse_quadratic(raw_c));
  Emitter em("certify-3iet", json_mode());
  em.input("eps", raw_eps);
  em.input("l", raw_l);
  em.input("c", raw_c);
  return emit_certificate(em, invariance_3iet_check(p));
}

int run_matrix_check() {
  auto eta = TernaryMorphism::from_string(raw_eta);
  Emitter em("matrix-check", json_mode());
  em.input("eta", raw_eta);
  em.input("eps", raw_eps);
  return emit_certificate(em, matrix_necessary_check(eta, parse_quadratic(raw_eps)));
}

int run_decompose() {
  auto eta = TernaryMorphism::from_string(raw_eta);
  Emitter em("decompose", json_mode());
  em.input("eta", raw_eta);
  Decomposition d = decompose(eta);
  em.value("power", d.power, "power = " + std::to_string(d.power));
  em.value("phi", d.phi.str(), "phi = " + d.phi.str());
  em.value("psi", d.psi.str(), "psi = " + d.psi.str());
  em.value("lambda_conj_sign", d.lambda_conj_sign,
           std::string("lambda_conj_sign = ") + (d.lambda_conj_sign > 0 ? "+1" : "-1"));
  em.flush();
  return 0;
}

int run_infer_eps() {
  auto eta = TernaryMorphism::from_string(raw_eta);
  Emitter em("infer-eps", json_mode());
  em.input("eta", raw_eta);
  em.quantity("eps", infer_epsilon(eta));
  em.flush();
  return 0;
}

template <class A>
int selfsim_on(Emitter& em, const GeoRep<A>& rep, const Quadratic& factor,
               const Morphism<A, A>* expected) {
  auto patterns = check_selfsimilar(rep, factor);
  auto recovered = substitution_from_geometry(rep, factor);
  em.quantity("factor", factor);
  for (const auto& [letter, pattern] : patterns)
    em.value(std::string("pattern_") + A::names[letter], pattern.size(),
             std::string("pattern(") + A::names[letter] + ") = " +
                 std::to_string(pattern.size()) + " points");
  em.value("recovered", recovered.str(), "recovered = " + recovered.str());
  bool match = expected == nullptr || recovered == *expected;
  em.value("matches", match, std::string("matches = ") + (match ? "true" : "false"));
  if (opt_dump) {
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      pts.push_back({{"index", i},
                     {"exact", rep.points[i].str()},
                     {"approx", approx_str(rep.points[i])}});
      em.lines_.push_back(std::to_string(i) + "\t" + rep.points[i].str() + "\t" +
                          approx_str(rep.points[i]));
    }
    em.j_["result"]["points"] = std::move(pts);
  }
  em.flush();
  return match ? 0 : 1;
}

int run_selfsim() {
  auto eta = TernaryMorphism::from_string(raw_eta);
  Emitter em("selfsim", json_mode());
  em.input("eta", raw_eta);
  em.input("len", std::to_string(opt_sslen));
  em.input("side", raw_side);
  LengthAssignment<Ternary> lengths = lengths_from_perron(eta);
  Quadratic factor = perron(eta).lambda;
  GeoRep<Ternary> rep = build_rep(fixed_point_prefix(eta, opt_sslen), lengths);
  if (raw_side == "ter") return selfsim_on<Ternary>(em, rep, factor, &eta);
  SturmianReps reps = sturmian_insertions(rep);
  return selfsim_on<Binary>(em, raw_side == "01" ? reps.rep01 : reps.rep10, factor, nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for three interval exchange words, their Sturmian"
               " projections, and the substitutions fixing them"};
  app.require_subcommand(1);
  fmt = "text";

  int rc = 0;
  auto wire = [&](CLI::App* sub, int (*fn)()) {
    add_format(sub);
    sub->callback([&rc, fn] { rc = fn(); });
    return sub;
  };

  auto* gen3 = wire(app.add_subcommand("gen3iet", "Code the orbit of 0 under an exchange of three intervals"), run_gen3iet);
  gen3->add_option("--eps", raw_eps)->required();
  gen3->add_option("--l", raw_l)->required();
  gen3->add_option("--c", raw_c)->required();
  gen3->add_option("--from", opt_from, "First orbit index")->capture_default_str();
  gen3->add_option("--to", opt_to, "Last orbit index")->capture_default_str();

  auto* gens = wire(app.add_subcommand("gensturm", "Code the orbit of beta under an exchange of two intervals"), run_gensturm);
  gens->add_option("--alpha", raw_alpha)->required();
  gens->add_option("--beta", raw_beta)->required();
  gens->add_option("--from", opt_from, "First orbit index")->capture_default_str();
  gens->add_option("--to", opt_to, "Last orbit index")->capture_default_str();

  auto* cpx = wire(app.add_subcommand("complexity", "Factor counts and growth classification of a word"), run_complexity);
  cpx->add_option("--word", raw_word, "Word or window literal, @file to read from a file")->required();
  cpx->add_option("--nmax", opt_nmax, "Largest factor length")->capture_default_str();

  auto* ami = wire(app.add_subcommand("amicable", "Test whether two binary words parse as one ternary word"), run_amicable);
  ami->add_option("--u", raw_u)->required();
  ami->add_option("--v", raw_v)->required();

  auto* tw = wire(app.add_subcommand("ternarize-words", "Parse two binary words into their ternary reading"), run_ternarize_words);
  tw->add_option("--u", raw_u)->required();
  tw->add_option("--v", raw_v)->required();

  auto* tm = wire(app.add_subcommand("ternarize-morph", "Ternary morphism induced by an amicable pair"), run_ternarize_morph);
  tm->add_option("--phi", raw_phi)->required();
  tm->add_option("--psi", raw_psi)->required();

  auto* fx = wire(app.add_subcommand("fixedpoint", "Prefix of the fixed point of a primitive morphism"), run_fixedpoint);
  fx->add_option("--morphism", raw_morphism)->required();
  fx->add_option("--len", opt_len, "Prefix length")->capture_default_str();
  fx->add_option("--seed", raw_seed, "Seed letter (default: first growing letter)");

  auto* cs = wire(app.add_subcommand("certify-sturm", "Slope and intercept certificate for Sturmian fixed points"), run_certify_sturm);
  cs->add_option("--alpha", raw_alpha)->required();
  cs->add_option("--beta", raw_beta)->required();

  auto* c3 = wire(app.add_subcommand("certify-3iet", "Parameter certificate for exchange codings fixed by substitutions"), run_certify_3iet);
  c3->add_option("--eps", raw_eps)->required();
  c3->add_option("--l", raw_l)->required();
  c3->add_option("--c", raw_c)->required();

  auto* mc = wire(app.add_subcommand("matrix-check", "Spectral necessary conditions tying a morphism to a parameter"), run_matrix_check);
  mc->add_option("--eta", raw_eta)->required();
  mc->add_option("--eps", raw_eps)->required();

  auto* dec = wire(app.add_subcommand("decompose", "Split a ternary morphism through an amicable binary pair"), run_decompose);
  dec->add_option("--eta", raw_eta)->required();

  auto* inf = wire(app.add_subcommand("infer-eps", "Exchange parameter encoded in a morphism's spectrum"), run_infer_eps);
  inf->add_option("--eta", raw_eta)->required();

  auto* ss = wire(app.add_subcommand("selfsim", "Geometric self-similarity of a fixed point and its refinements"), run_selfsim);
  ss->add_option("--eta", raw_eta)->required();
  ss->add_option("--len", opt_sslen, "Letters of fixed point to draw")->capture_default_str();
  ss->add_option("--side", raw_side, "ter, 01 or 10")->check(CLI::IsMember({"ter", "01", "10"}))->capture_default_str();
  ss->add_flag("--dump", opt_dump, "Print every point as index, exact value, approximation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const triet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const triet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
