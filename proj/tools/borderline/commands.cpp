#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "borderline/apolarity.hpp"
#include "borderline/border_tools.hpp"
#include "borderline/groebner.hpp"
#include "borderline/hilbert.hpp"
#include "borderline/homological.hpp"
#include "borderline/ideal.hpp"
#include "borderline/report.hpp"

namespace borderline::cli {

namespace {

void check_threads_env() {
  const char* v = std::getenv("BORDERLINE_THREADS");
  if (!v) return;
  std::string s(v);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("BORDERLINE_THREADS must be a positive integer");
  try {
    if (std::stol(s) < 1)
      throw input_error("BORDERLINE_THREADS must be a positive integer");
  } catch (const std::out_of_range&) {
    throw input_error("BORDERLINE_THREADS is out of range");
  }
}

// Guess the forms ring from the largest x<k> appearing in the text.
RingPtr infer_forms_ring(const std::string& text) {
  int top = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) ||
                  text[i - 1] == '_'))
      continue;
    std::size_t j = i + 1;
    int v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      ++j;
      any = true;
    }
    if (any) top = std::max(top, v);
  }
  if (top < 0)
    throw input_error("cannot infer the ring from '" + text +
                      "'; pass --ring");
  return Ring::from_descriptor("P" + std::to_string(top), Ring::Side::forms);
}

// A form argument: inline polynomial text, inline tensor JSON, or
// @file.json with a dense tensor.
Polynomial parse_form_arg(const std::string& text,
                          const std::string& ring_desc) {
  if (!text.empty() && text[0] == '@')
    return tensor_from_json_file(text.substr(1));
  if (!text.empty() && text[0] == '{') return tensor_from_json(text);
  RingPtr T = ring_desc.empty()
                  ? infer_forms_ring(text)
                  : Ring::from_descriptor(ring_desc, Ring::Side::forms);
  return parse_polynomial(T, text);
}

Multidegree parse_degree(const RingPtr& R, std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  std::size_t rank = R->grading_rank();
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw input_error("bad degree: " + s);
    Multidegree u(rank, 0);
    std::istringstream is(s.substr(1, s.size() - 2));
    std::string tok;
    std::size_t i = 0;
    while (std::getline(is, tok, ',')) {
      if (i >= rank) throw input_error("degree has too many entries: " + s);
      u[i++] = std::stoi(tok);
    }
    if (i != rank) throw input_error("degree has too few entries: " + s);
    return u;
  }
  int d = 0;
  try {
    d = std::stoi(s);
  } catch (const std::exception&) {
    throw input_error("bad degree: " + s);
  }
  return Multidegree(rank, d);  // diagonal degree
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw input_error("range must look like a..b");
  try {
    int a = std::stoi(s.substr(0, dots));
    int b = std::stoi(s.substr(dots + 2));
    if (a < 0 || b < a) throw input_error("empty range: " + s);
    return {a, b};
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error("range must look like a..b");
  }
}

std::string ideal_text(const Ideal& I) {
  if (I.gens.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i) s += ", ";
    s += I.gens[i].str();
  }
  return s;
}

void emit(std::ostream& out, const Json& rep) {
  out << render_report(rep, true) << '\n';
}

int certificates_exit(const std::vector<std::pair<std::string, bool>>& cs) {
  for (const auto& [name, ok] : cs)
    if (!ok) return 2;
  return 0;
}

void print_vspbar_text(std::ostream& out, const VspBarReport& rep) {
  out << "procedure: " << rep.procedure << '\n';
  out << "shape: " << rep.shape << '\n';
  if (rep.dimension >= 0) out << "dimension: " << rep.dimension << '\n';
  if (rep.r >= 0) out << "r: " << rep.r << '\n';
  if (rep.ideal) out << "member: " << ideal_text(*rep.ideal) << '\n';
  if (!rep.space.empty()) {
    out << "spanning operators:";
    for (const Polynomial& p : rep.space) out << ' ' << p.str() << ';';
    out << '\n';
  }
  std::size_t passed = 0;
  for (const auto& [name, ok] : rep.certificates)
    if (ok) ++passed;
  out << "certificates: " << passed << '/' << rep.certificates.size()
      << " passed\n";
  for (const auto& [name, ok] : rep.certificates)
    if (!ok) out << "failed: " << name << '\n';
  out << "verdict: " << rep.verdict << '\n';
}

// ---------------------------------------------------------------------------
// corpus replay
// ---------------------------------------------------------------------------

int run_corpus(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw input_error("corpus directory not found: " + dir);
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  if (cases.empty()) throw input_error("no corpus cases in " + dir);

  int failures = 0;
  for (const fs::path& p : cases) {
    std::ifstream in(p);
    Json spec;
    try {
      spec = Json::parse(in);
    } catch (const std::exception& e) {
      throw input_error("bad corpus case " + p.string() + ": " + e.what());
    }
    if (!spec.contains("args") || !spec.contains("exit") ||
        !spec.contains("output"))
      throw input_error("corpus case " + p.string() +
                        " needs args/exit/output");
    std::vector<std::string> args;
    for (const auto& a : spec["args"]) {
      std::string s = a.get<std::string>();
      // Data files referenced with @relative live next to the cases.
      if (s.size() > 1 && s[0] == '@' && s[1] != '/')
        s = "@" + (fs::path(dir) / s.substr(1)).string();
      args.push_back(std::move(s));
    }
    std::ostringstream got, diag;
    int code = run_cli(args, got, diag);

    bool ok = code == spec["exit"].get<int>();
    std::string expected = spec["output"].get<std::string>();
    bool json_mode =
        std::find(args.begin(), args.end(), "--json") != args.end();
    if (ok) {
      if (json_mode) {
        try {
          Json a = strip_timings(Json::parse(got.str()));
          Json b = strip_timings(Json::parse(expected));
          ok = a.dump(2) == b.dump(2);
        } catch (const std::exception&) {
          ok = false;
        }
      } else {
        ok = got.str() == expected;
      }
    }
    if (ok) {
      out << "ok " << p.filename().string() << '\n';
    } else {
      ++failures;
      out << "FAIL " << p.filename().string() << '\n';
      out << "  expected exit " << spec["exit"].get<int>() << ", got " << code
          << '\n';
      out << "  expected output:\n" << expected;
      out << "  actual output:\n" << got.str();
    }
  }
  out << cases.size() - failures << '/' << cases.size() << " cases match\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact multigraded apolarity toolbox", "borderline"};
  app.require_subcommand(1);

  // --- ring ---------------------------------------------------------------
  std::string ring_desc;
  bool as_json = false;
  auto* c_ring = app.add_subcommand("ring", "describe a product-of-projective-spaces ring");
  c_ring->add_option("descriptor", ring_desc, "ring descriptor, e.g. P2 or P1xP1xP1")->required();
  c_ring->add_flag("--json", as_json, "JSON report");

  // --- ann ----------------------------------------------------------------
  std::string form_text, form_ring;
  auto* c_ann = app.add_subcommand("ann", "annihilator of a form or tensor");
  c_ann->add_option("form", form_text, "form, inline tensor JSON, or @file.json")->required();
  c_ann->add_option("--ring", form_ring, "forms ring descriptor");
  c_ann->add_flag("--json", as_json, "JSON report");

  // --- hf -----------------------------------------------------------------
  std::string hf_ring, hf_ideal, hf_range;
  std::vector<std::string> hf_degrees;
  auto* c_hf = app.add_subcommand("hf", "Hilbert function of a quotient");
  c_hf->add_option("--ring", hf_ring, "operator ring descriptor")->required();
  c_hf->add_option("--ideal", hf_ideal, "comma-separated generators")->required();
  c_hf->add_option("--range", hf_range, "total degrees a..b (diagonal for products)");
  c_hf->add_option("--degree", hf_degrees, "explicit degree, e.g. 3 or (1,1,1)");
  c_hf->add_flag("--json", as_json, "JSON report");

  // --- gb -----------------------------------------------------------------
  std::string gb_ring, gb_ideal, gb_order = "grevlex";
  auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis");
  c_gb->add_option("--ring", gb_ring, "operator ring descriptor")->required();
  c_gb->add_option("--ideal", gb_ideal, "comma-separated generators")->required();
  c_gb->add_option("--order", gb_order, "order descriptor (grevlex | lex:... | weight:[...])");
  c_gb->add_flag("--json", as_json, "JSON report");

  // --- sat ----------------------------------------------------------------
  std::string sat_ring, sat_ideal;
  auto* c_sat = app.add_subcommand("sat", "saturation by the irrelevant ideal");
  c_sat->add_option("--ring", sat_ring, "operator ring descriptor")->required();
  c_sat->add_option("--ideal", sat_ideal, "comma-separated generators")->required();
  c_sat->add_flag("--json", as_json, "JSON report");

  // --- hom0 ---------------------------------------------------------------
  std::string hom_ring, hom_ideal;
  auto* c_hom = app.add_subcommand("hom0", "dim Hom(I, S/I) in degree 0");
  c_hom->add_option("--ring", hom_ring, "operator ring descriptor")->required();
  c_hom->add_option("--ideal", hom_ideal, "comma-separated generators")->required();
  c_hom->add_flag("--json", as_json, "JSON report");

  // --- ext1 ---------------------------------------------------------------
  std::string ext_ring, ext_ideal, ext_sub;
  auto* c_ext = app.add_subcommand("ext1", "dim Ext^1(J/I, S/J) in degree 0");
  c_ext->add_option("--ring", ext_ring, "operator ring descriptor")->required();
  c_ext->add_option("--ideal", ext_ideal, "generators of J")->required();
  c_ext->add_option("--sub", ext_sub, "generators of I, contained in J")->required();
  c_ext->add_flag("--json", as_json, "JSON report");

  // --- enumerate ------------------------------------------------------------
  std::string en_ring, en_start, en_filter;
  long en_r = 0;
  int en_cap = -1, en_legacy = -1;
  long en_branch = 200000;
  auto* c_en = app.add_subcommand("enumerate", "guided monomial-ideal enumeration");
  c_en->add_option("--ring", en_ring, "operator ring descriptor");
  c_en->add_option("--start", en_start, "starting ideal generators");
  c_en->add_option("-r,--points", en_r, "number of points r")->required();
  c_en->add_option("--cap", en_cap, "largest degree for new generators");
  c_en->add_option("--legacy-cap", en_legacy, "scan degrees 0..N like the original scripts");
  c_en->add_option("--filter", en_filter, "form every added monomial must annihilate");
  c_en->add_option("--branch-limit", en_branch, "abort when live branches exceed this");
  c_en->add_flag("--json", as_json, "JSON report");

  // --- monomial-br ----------------------------------------------------------
  std::string br_form, br_ring;
  auto* c_br = app.add_subcommand("monomial-br", "border rank of a monomial");
  c_br->add_option("form", br_form, "a single monomial, e.g. x0*x1^2*x2^3")->required();
  c_br->add_option("--ring", br_ring, "forms ring descriptor");
  c_br->add_flag("--json", as_json, "JSON report");

  // --- wild3 ----------------------------------------------------------------
  std::string w_tensor, w_ring;
  long w_m = 0;
  auto* c_w = app.add_subcommand("wild3", "wildness of a concise 3-tensor");
  c_w->add_option("--m", w_m, "side length m (concise minimal border rank)")->required();
  c_w->add_option("--tensor", w_tensor, "@file.json, inline JSON, or a form (with --ring)")->required();
  c_w->add_option("--ring", w_ring, "forms ring descriptor for inline forms");
  c_w->add_flag("--json", as_json, "JSON report");

  // --- identifiable -----------------------------------------------------------
  std::string id_form, id_ring;
  long id_r = 0;
  auto* c_id = app.add_subcommand("identifiable", "identifiability via a catalecticant plateau");
  c_id->add_option("form", id_form, "form, inline tensor JSON, or @file.json")->required();
  c_id->add_option("-r,--rank", id_r, "border rank to certify")->required();
  c_id->add_option("--ring", id_ring, "forms ring descriptor");
  c_id->add_flag("--json", as_json, "JSON report");

  // --- vspbar ---------------------------------------------------------------
  std::string v_form, v_ring, v_ci, v_cw, v_monomial;
  int v_n = 0;
  auto* c_v = app.add_subcommand("vspbar", "shape of the minimal-scheme locus");
  c_v->add_option("form", v_form, "form, inline tensor JSON, or @file.json");
  c_v->add_option("--ring", v_ring, "forms ring descriptor");
  c_v->add_option("--ci", v_ci, "complete-intersection generators in the operator ring");
  c_v->add_option("--cw", v_cw, "cubic family kind: A, B, or C");
  c_v->add_option("--n", v_n, "number of extra variables for --cw (2..4)");
  c_v->add_option("--monomial", v_monomial, "exponents a,b,c for the plane-monomial report");
  c_v->add_flag("--json", as_json, "JSON report");

  // --- corpus ---------------------------------------------------------------
  std::string corpus_dir;
  auto* c_corpus = app.add_subcommand("corpus", "replay the golden corpus and diff");
  c_corpus->add_option("--dir", corpus_dir, "corpus directory (default: $BORDERLINE_CORPUS_DIR or ./corpus)");

  std::vector<std::string> full = args;
  full.insert(full.begin(), "borderline");
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& s : full) argv.push_back(s.data());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    check_threads_env();

    if (c_ring->parsed()) {
      RingPtr S = Ring::from_descriptor(ring_desc, Ring::Side::apolar);
      RingPtr T = S->dual();
      auto names = [](const RingPtr& R) {
        std::vector<std::string> out;
        for (int v = 0; v < R->nvars(); ++v) out.push_back(R->var_name(v));
        return out;
      };
      if (as_json) {
        Json rep = make_report("ring", Json{{"ring", ring_desc}});
        rep["blocks"] = S->blocks();
        rep["operators"] = names(S);
        rep["forms"] = names(T);
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        out << "descriptor: " << S->descriptor() << '\n';
        out << "blocks:";
        for (int b : S->blocks()) out << ' ' << b;
        out << '\n' << "operators:";
        for (const std::string& n : names(S)) out << ' ' << n;
        out << '\n' << "forms:";
        for (const std::string& n : names(T)) out << ' ' << n;
        out << '\n';
      }
      return 0;
    }

    if (c_ann->parsed()) {
      Stopwatch clock;
      Polynomial F = parse_form_arg(form_text, form_ring);
      Ideal A = annihilator(F);
      if (as_json) {
        Json rep = make_report(
            "ann", Json{{"form", F.str()},
                        {"ring", F.ring()->descriptor()}});
        rep["annihilator"] = ideal_json(A);
        set_verdict(rep, "ok");
        set_timing(rep, clock.elapsed_ms());
        emit(out, rep);
      } else {
        out << ideal_text(A) << '\n';
      }
      return 0;
    }

    if (c_hf->parsed()) {
      RingPtr S = Ring::from_descriptor(hf_ring, Ring::Side::apolar);
      Ideal I = parse_ideal(S, hf_ideal);
      std::vector<Multidegree> degs;
      if (!hf_range.empty()) {
        auto [a, b] = parse_range(hf_range);
        for (int d = a; d <= b; ++d)
          degs.push_back(Multidegree(S->grading_rank(), d));
      }
      for (const std::string& ds : hf_degrees)
        degs.push_back(parse_degree(S, ds));
      if (degs.empty())
        throw input_error("hf needs --range or --degree");
      GroebnerBasis gb = groebner(I);
      std::vector<long> values;
      for (const Multidegree& u : degs)
        values.push_back(hilbert_function(gb, u));
      if (as_json) {
        Json rep = make_report("hf", Json{{"ring", hf_ring},
                                          {"ideal", ideal_json(I)}});
        Json ds = Json::array();
        for (const Multidegree& u : degs) ds.push_back(multidegree_json(u));
        rep["degrees"] = std::move(ds);
        rep["values"] = values;
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        for (std::size_t i = 0; i < values.size(); ++i)
          out << (i ? " " : "") << values[i];
        out << '\n';
      }
      return 0;
    }

    if (c_gb->parsed()) {
      RingPtr S = Ring::from_descriptor(gb_ring, Ring::Side::apolar);
      Ideal I = parse_ideal(S, gb_ideal);
      MonomialOrder ord = MonomialOrder::from_descriptor(*S, gb_order);
      GroebnerBasis gb = groebner(I, ord);
      if (as_json) {
        Json rep = make_report("gb", Json{{"ring", gb_ring},
                                          {"ideal", ideal_json(I)},
                                          {"order", ord.descriptor(*S)}});
        Json basis = Json::array(), leads = Json::array();
        for (std::size_t i = 0; i < gb.g.size(); ++i) {
          basis.push_back(gb.g[i].str());
          leads.push_back(monomial_str(*S, gb.lead[i]));
        }
        rep["basis"] = std::move(basis);
        rep["leading_terms"] = std::move(leads);
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        for (const Polynomial& g : gb.g) out << g.str() << '\n';
      }
      return 0;
    }

    if (c_sat->parsed()) {
      RingPtr S = Ring::from_descriptor(sat_ring, Ring::Side::apolar);
      Ideal I = parse_ideal(S, sat_ideal);
      Ideal K = minimalize(saturate_irrelevant(I));
      if (as_json) {
        Json rep = make_report("sat", Json{{"ring", sat_ring},
                                           {"ideal", ideal_json(I)}});
        rep["saturation"] = ideal_json(K);
        rep["already_saturated"] = ideal_equal(I, K);
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        out << ideal_text(K) << '\n';
      }
      return 0;
    }

    if (c_hom->parsed()) {
      RingPtr S = Ring::from_descriptor(hom_ring, Ring::Side::apolar);
      Ideal I = parse_ideal(S, hom_ideal);
      long v = hom_degree0_dim(I);
      if (as_json) {
        Json rep = make_report("hom0", Json{{"ring", hom_ring},
                                            {"ideal", ideal_json(I)}});
        rep["value"] = v;
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        out << v << '\n';
      }
      return 0;
    }

    if (c_ext->parsed()) {
      RingPtr S = Ring::from_descriptor(ext_ring, Ring::Side::apolar);
      Ideal J = parse_ideal(S, ext_ideal);
      Ideal I = parse_ideal(S, ext_sub);
      long v = ext1_degree0_dim(J, I);
      if (as_json) {
        Json rep = make_report("ext1", Json{{"ring", ext_ring},
                                            {"ideal", ideal_json(J)},
                                            {"sub", ideal_json(I)}});
        rep["value"] = v;
        set_verdict(rep, "ok");
        emit(out, rep);
      } else {
        out << v << '\n';
      }
      return 0;
    }

    if (c_en->parsed()) {
      EnumerationConfig cfg;
      std::optional<Polynomial> filter;
      if (!en_filter.empty()) filter = parse_form_arg(en_filter, en_ring);
      RingPtr S;
      if (!en_ring.empty())
        S = Ring::from_descriptor(en_ring, Ring::Side::apolar);
      else if (filter)
        S = filter->ring()->dual();
      else
        throw input_error("enumerate needs --ring or --filter");
      cfg.J0 = en_start.empty() ? Ideal(S) : parse_ideal(S, en_start);
      cfg.r = en_r;
      cfg.filter = std::move(filter);
      cfg.branch_limit = en_branch;
      if (en_legacy >= 0)
        cfg.cap = en_legacy;
      else
        cfg.cap = en_cap;
      Stopwatch clock;
      std::vector<Ideal> found = enumerate_monomial_apolar_ideals(cfg);
      if (as_json) {
        Json rep = make_report(
            "enumerate",
            Json{{"ring", S->descriptor()},
                 {"start", ideal_json(cfg.J0)},
                 {"r", cfg.r},
                 {"cap", cfg.cap},
                 {"filter", cfg.filter ? Json(cfg.filter->str()) : Json()}});
        Json list = Json::array();
        for (const Ideal& I : found) list.push_back(ideal_json(I));
        rep["count"] = found.size();
        rep["ideals"] = std::move(list);
        set_verdict(rep, "ok");
        set_timing(rep, clock.elapsed_ms());
        emit(out, rep);
      } else {
        out << found.size() << '\n';
        for (const Ideal& I : found) out << ideal_text(I) << '\n';
      }
      return 0;
    }

    if (c_br->parsed()) {
      Polynomial F = parse_form_arg(br_form, br_ring);
      MonomialBorderRank rep = monomial_border_rank(F);
      if (as_json)
        emit(out, rep.to_json());
      else
        out << rep.value << '\n';
      return rep.certified ? 0 : 2;
    }

    if (c_w->parsed()) {
      Polynomial F = parse_form_arg(w_tensor, w_ring);
      WildnessReport rep = tensor_wildness(F, w_m);
      if (as_json)
        emit(out, rep.to_json());
      else
        out << (rep.wild ? "wild" : "not wild") << '\n';
      return 0;
    }

    if (c_id->parsed()) {
      Polynomial F = parse_form_arg(id_form, id_ring);
      PlateauReport rep = plateau_identifiability(F, id_r);
      if (as_json)
        emit(out, rep.to_json());
      else
        out << rep.verdict << '\n';
      return rep.verdict == PlateauReport::kIdentifiable ? 0 : 2;
    }

    if (c_v->parsed()) {
      if (!v_cw.empty()) {
        if (v_cw.size() != 1)
          throw input_error("--cw expects a single letter A, B, or C");
        VspBarReport rep = cw_cubic_vspbar(v_cw[0], v_n);
        if (as_json)
          emit(out, rep.to_json());
        else
          print_vspbar_text(out, rep);
        return rep.unresolved() ? 2 : certificates_exit(rep.certificates);
      }
      if (!v_monomial.empty()) {
        std::istringstream is(v_monomial);
        std::string tok;
        std::vector<int> abc;
        while (std::getline(is, tok, ',')) abc.push_back(std::stoi(tok));
        if (abc.size() != 3)
          throw input_error("--monomial expects three exponents a,b,c");
        MonomialVpsReport rep = monomial_vps_report(abc[0], abc[1], abc[2]);
        if (as_json) {
          emit(out, rep.to_json());
        } else {
          out << "procedure: monomial-vps\n";
          out << "regime: " << rep.regime << '\n';
          out << "shape: " << rep.vps_shape << '\n';
          out << "r: " << rep.r << '\n';
          out << "fiber type: " << (rep.fiber_type ? "yes" : "no") << '\n';
          out << "members: " << rep.members.size() << '\n';
          for (const Ideal& I : rep.members)
            out << "  " << ideal_text(I) << '\n';
          std::size_t passed = 0;
          for (const auto& [name, ok] : rep.certificates)
            if (ok) ++passed;
          out << "certificates: " << passed << '/' << rep.certificates.size()
              << " passed\n";
        }
        return certificates_exit(rep.certificates);
      }
      if (v_form.empty())
        throw input_error("vspbar needs a form, --cw, or --monomial");
      Polynomial F = parse_form_arg(v_form, v_ring);
      VspBarReport rep;
      if (!v_ci.empty()) {
        Ideal J = parse_ideal(F.ring()->dual(), v_ci);
        rep = ci_vspbar(F, J);
      } else if (F.ring()->nblocks() == 1 && F.ring()->nvars() == 2) {
        rep = sylvester_binary(F);
      } else if (F.ring()->nblocks() == 1 && F.ring()->nvars() == 3 &&
                 F.total_degree() == 3) {
        rep = ternary_cubic_vspbar(F);
      } else if (F.nterms() == 1 && F.ring()->nblocks() == 1 &&
                 F.ring()->nvars() == 3) {
        std::vector<int> e = F.leading_term().m.e;
        std::sort(e.begin(), e.end());
        if (e[0] < 1)
          throw input_error(
              "the plane-monomial report needs all three exponents positive");
        MonomialVpsReport mrep = monomial_vps_report(e[0], e[1], e[2]);
        if (as_json) {
          emit(out, mrep.to_json());
        } else {
          out << "procedure: monomial-vps\n";
          out << "regime: " << mrep.regime << '\n';
          out << "shape: " << mrep.vps_shape << '\n';
          out << "r: " << mrep.r << '\n';
        }
        return certificates_exit(mrep.certificates);
      } else {
        throw input_error(
            "no decision procedure applies to this input; supply --ci, "
            "--cw, or --monomial");
      }
      if (as_json)
        emit(out, rep.to_json());
      else
        print_vspbar_text(out, rep);
      return rep.unresolved() ? 2 : certificates_exit(rep.certificates);
    }

    if (c_corpus->parsed()) {
      std::string dir = corpus_dir;
      if (dir.empty()) {
        const char* env = std::getenv("BORDERLINE_CORPUS_DIR");
        dir = env ? env : "corpus";
      }
      return run_corpus(dir, out);
    }

    err << "error: no command\n";
    return 1;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const inconclusive_error& e) {
    err << "inconclusive: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace borderline::cli
