#include "pogorelov/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "pogorelov/belts.hpp"
#include "pogorelov/charfun.hpp"
#include "pogorelov/colouring.hpp"
#include "pogorelov/invariants.hpp"
#include "pogorelov/polytope.hpp"

namespace pogorelov {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::string format;  // empty: detect
  std::string report = "text";
  std::optional<int> k;
  std::string ring = "z";
  std::string mode = "s4";
  std::string reflections = "on";
  std::optional<std::int64_t> kparam;
  std::vector<std::string> colourings;
  std::vector<std::string> charfuns;
  std::string kind = "small_cover";
  std::string avoid;
  bool list = false;
};

struct Input {
  std::string label;
  Polytope polytope;
};

std::vector<std::uint8_t> read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path, std::istream& in) {
  const auto bytes = read_all(path, in);
  return std::string(bytes.begin(), bytes.end());
}

std::vector<Input> load_inputs(const Options& o, std::istream& in) {
  std::vector<std::string> paths = o.inputs;
  if (paths.empty()) paths.push_back("-");
  std::vector<Input> out;
  for (const auto& path : paths) {
    const auto bytes = read_all(path, in);
    Format format = detect_format(bytes);
    if (o.format == "planar_code") format = Format::planar_code;
    if (o.format == "face_list") format = Format::face_list;
    auto polys = load_polytopes(bytes, format);
    const std::string name = path == "-" ? "<stdin>" : path;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const std::string label = polys.size() > 1 ? name + "#" + std::to_string(i + 1) : name;
      out.push_back({label, std::move(polys[i])});
    }
  }
  return out;
}

// Colourings come inline ("1,2,3,...") or from a file holding one line.
Colouring colouring_arg(const std::string& arg, std::istream& in) {
  if (arg.find(',') != std::string::npos || (arg.size() == 1 && arg[0] >= '1' && arg[0] <= '4'))
    return Colouring::parse(arg);
  std::istringstream is(read_text(arg, in));
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') return Colouring::parse(line);
  throw std::runtime_error("no colouring in " + arg);
}

Colouring proper_colouring(const Polytope& p, const std::string& arg, std::istream& in) {
  Colouring chi = colouring_arg(arg, in);
  if (chi.size() != p.facet_count())
    throw UsageError("colouring has " + std::to_string(chi.size()) + " entries for " +
                     std::to_string(p.facet_count()) + " facets");
  if (!is_proper(p, chi)) throw UsageError("colouring is not proper");
  return chi;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<FacetId>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string triple_text(const ColourTriple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

std::string vec_text(const Vec3& v) {
  return std::to_string(v[0]) + " " + std::to_string(v[1]) + " " + std::to_string(v[2]);
}

// Key-value reports are "key=value"; text reports are "key: value".
class Report {
 public:
  Report(std::ostream& out, bool kv) : out_(out), kv_(kv) {}
  template <typename T>
  void field(const std::string& key, const T& value) {
    if (kv_) {
      std::string k = key;
      for (char& c : k)
        if (c == ' ') c = '_';
      out_ << k << '=' << value << '\n';
    } else {
      out_ << key << ": " << value << '\n';
    }
  }
  void section(const std::string& label, bool many) {
    if (!many) return;
    if (kv_)
      out_ << "[" << label << "]\n";
    else
      out_ << "== " << label << " ==\n";
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool kv_;
};

CharFun charfun_for(const Polytope& p, const Colouring& chi, const Options& o) {
  CharFun lambda = o.kparam ? lambda_chi_k(p, chi, *o.kparam) : lambda_chi(p, chi);
  return o.ring == "f2" ? reduce_mod2(lambda) : lambda;
}

CharFun charfun_file(const Polytope& p, const std::string& path, std::istream& in) {
  CharFun lambda = parse_charfun(read_text(path, in));
  if (lambda.size() != p.facet_count())
    throw UsageError("characteristic function has " + std::to_string(lambda.size()) +
                     " values for " + std::to_string(p.facet_count()) + " facets");
  if (!validate_charfun(p, lambda).ok) throw UsageError(path + " is not a characteristic function");
  return lambda;
}

int cmd_check(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  bool all = true;
  for (const auto& [label, p] : inputs) {
    r.section(label, inputs.size() > 1);
    const auto v = is_pogorelov(p);
    all = all && v.pogorelov;
    std::string verdict = yes_no(v.pogorelov);
    if (std::holds_alternative<TetrahedronWitness>(v.witness)) verdict += " (tetrahedron)";
    if (const auto* b = std::get_if<Belt>(&v.witness))
      verdict += " (" + std::to_string(b->size()) + "-belt " + join(b->facets) + ")";
    r.field("Pogorelov", verdict);
    const auto fs = fullerene_status(p);
    if (fs.fullerene)
      r.field("fullerene", std::string("yes (ipr ") + yes_no(fs.ipr) + ", adjacent pentagon pairs " +
                               std::to_string(fs.adjacent_pentagon_pairs) + ")");
    else
      r.field("fullerene", "no");
  }
  return all ? kExitOk : kExitNo;
}

int cmd_belts(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  const std::vector<int> ks = o.k ? std::vector<int>{*o.k} : std::vector<int>{3, 4};
  for (const auto& [label, p] : inputs) {
    r.section(label, inputs.size() > 1);
    for (int k : ks) {
      const auto belts = find_belts(p, k);
      r.field(std::to_string(k) + "-belts", belts.size());
      for (const auto& b : belts) r.field("belt", join(b.facets));
    }
  }
  return kExitOk;
}

int cmd_colourings(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  for (const auto& [label, p] : inputs) {
    r.section(label, inputs.size() > 1);
    if (o.list) {
      std::vector<std::string> lines;
      const auto n = for_each_colouring(p, [&](const Colouring& c) {
        lines.push_back(c.to_string());
        return true;
      });
      r.field("colourings", n);
      for (const auto& l : lines) r.field("colouring", l);
    } else {
      r.field("colourings", count_colourings(p));
    }
  }
  return kExitOk;
}

int cmd_complete(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  bool all = true;
  for (const auto& [label, p] : inputs) {
    r.section(label, inputs.size() > 1);
    if (!o.colourings.empty()) {
      const auto res = is_complete(p, proper_colouring(p, o.colourings.front(), in));
      std::string missing;
      for (const auto& t : res.missing) missing += (missing.empty() ? "" : " ") + triple_text(t);
      r.field("complete", yes_no(res.complete));
      if (!res.complete) r.field("missing", missing);
      all = all && res.complete;
    } else if (!o.avoid.empty()) {
      const Colouring t = Colouring::parse(o.avoid);
      if (t.size() != 3) throw UsageError("--avoid takes three colours");
      const auto chi = find_colouring_avoiding(p, {t[0], t[1], t[2]});
      r.field("found", yes_no(chi.has_value()));
      if (chi) r.field("colouring", chi->to_string());
      all = all && chi.has_value();
    } else {
      std::uint64_t complete = 0;
      const auto n = for_each_colouring(p, [&](const Colouring& c) {
        complete += is_complete(p, c).complete;
        return true;
      });
      r.field("colourings", n);
      r.field("complete", complete);
      r.field("non-complete", n - complete);
    }
  }
  return all ? kExitOk : kExitNo;
}

const Input& single_input(const std::vector<Input>& inputs) {
  if (inputs.size() != 1) throw UsageError("this subcommand takes exactly one polytope");
  return inputs.front();
}

int cmd_charfun(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  const auto& p = single_input(inputs).polytope;
  const auto chi = proper_colouring(p, o.colourings.front(), in);
  r.raw() << to_text(charfun_for(p, chi, o));
  return kExitOk;
}

int cmd_equiv(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  if (inputs.empty() || inputs.size() > 2) throw UsageError("equiv takes one or two polytopes");
  const Polytope& p = inputs.front().polytope;
  const Polytope& q = inputs.back().polytope;
  const bool reflections = o.reflections == "on";
  if (inputs.size() == 2 && o.mode == "s4")
    throw UsageError("--mode s4 compares colourings of one labelled polytope; use s4_x_aut");

  bool equivalent = true;
  if (o.charfuns.size() == 2) {
    const CharFun a = charfun_file(p, o.charfuns[0], in);
    const CharFun b = charfun_file(q, o.charfuns[1], in);
    if (a.ring != b.ring) throw UsageError("characteristic functions over different rings");
    if (inputs.size() == 1) {
      const auto t = charfuns_equivalent(p, a, b);
      r.field("charfuns equivalent", yes_no(t.has_value()));
      if (t)
        for (const auto& row : t->g) r.field("g", vec_text(row));
      equivalent = t.has_value();
    } else {
      const auto m = pairs_equivalent({&p, a}, {&q, b}, reflections);
      r.field("pairs equivalent", yes_no(m.has_value()));
      if (m) r.field("facet map", join(m->phi.image()));
      equivalent = m.has_value();
    }
    return equivalent ? kExitOk : kExitNo;
  }

  const Colouring a = proper_colouring(p, o.colourings[0], in);
  const Colouring b = proper_colouring(q, o.colourings[1], in);
  const auto mode = o.mode == "s4" ? EquivalenceMode::strict_s4 : EquivalenceMode::up_to_iso;
  const auto match = colourings_equivalent(p, a, q, b, mode, reflections);
  r.field("colourings equivalent", yes_no(match.has_value()));
  if (match) {
    const auto& s = match->sigma.image();
    r.field("sigma", std::to_string(s[0]) + " " + std::to_string(s[1]) + " " +
                         std::to_string(s[2]) + " " + std::to_string(s[3]));
    r.field("facet map", join(match->phi.image()));
  }
  Options first = o;
  first.kparam.reset();
  const CharFun la = charfun_for(p, a, first);
  const CharFun lb = charfun_for(q, b, o);
  std::optional<Transform> t;
  if (inputs.size() == 1 && mode == EquivalenceMode::strict_s4) {
    t = charfuns_equivalent(p, la, lb);
  } else if (auto m = pairs_equivalent({&p, la}, {&q, lb}, reflections)) {
    t = m->transform;
  }
  r.field("charfuns equivalent", yes_no(t.has_value()));
  equivalent = match.has_value() && t.has_value();
  return equivalent ? kExitOk : kExitNo;
}

int cmd_orient(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  const auto& p = single_input(inputs).polytope;
  CharFun lambda;
  if (!o.charfuns.empty()) {
    lambda = charfun_file(p, o.charfuns.front(), in);
  } else {
    lambda = charfun_for(p, proper_colouring(p, o.colourings.front(), in), o);
  }
  const auto v = is_orientable_small_cover(p, reduce_mod2(lambda));
  r.field("orientable", yes_no(v.orientable));
  if (v.witness) r.field("witness", vec_text(*v.witness));
  return v.orientable ? kExitOk : kExitNo;
}

int cmd_betti(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  const auto kind = o.kind == "quasitoric" ? ManifoldKind::quasitoric : ManifoldKind::small_cover;
  for (const auto& [label, p] : inputs) {
    r.section(label, inputs.size() > 1);
    std::string s;
    for (auto b : betti_z2(p, kind)) s += (s.empty() ? "" : " ") + std::to_string(b);
    r.field("betti", s);
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  std::vector<Polytope> polys;
  for (const auto& i : inputs) polys.push_back(i.polytope);
  const auto census = classify(polys, o.mode == "s4" ? CodeMode::s4 : CodeMode::s4_x_aut);
  r.raw() << (o.report == "kv" ? census_kv(census) : census_text(census));
  return kExitOk;
}

int cmd_iso(const Options& o, std::istream& in, Report& r) {
  const auto inputs = load_inputs(o, in);
  if (inputs.empty() || inputs.size() > 2) throw UsageError("iso takes one or two polytopes");
  const auto isos =
      isomorphisms(inputs.front().polytope, inputs.back().polytope, o.reflections == "on");
  r.field("isomorphisms", isos.size());
  if (o.list)
    for (const auto& phi : isos) r.field("map", join(phi.image()));
  return isos.empty() ? kExitNo : kExitOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pogorelov polytopes, 4-colourings and characteristic functions"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("inputs", o.inputs, "polytope files ('-' or none for stdin)");
    sub->add_option("--format", o.format, "input format (default: detect from header)")
        ->check(CLI::IsMember({"planar_code", "face_list"}));
    sub->add_option("--report", o.report)->check(CLI::IsMember({"text", "kv"}));
    return sub;
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring)->check(CLI::IsMember({"z", "f2"}));
  };
  auto add_kparam = [&](CLI::App* sub) {
    sub->add_option("--kparam", o.kparam, "use lambda_{chi,k} with this k");
  };
  auto add_reflections = [&](CLI::App* sub) {
    sub->add_option("--reflections", o.reflections)->check(CLI::IsMember({"on", "off"}));
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode)->check(CLI::IsMember({"s4", "s4_x_aut"}));
  };

  add_common(app.add_subcommand("check", "decide membership in the Pogorelov class"));
  auto* belts = add_common(app.add_subcommand("belts", "list k-belts of facets"));
  belts->add_option("--k", o.k, "belt length (default: 3 and 4)")->check(CLI::Range(3, 1 << 20));
  auto* cols = add_common(app.add_subcommand("colourings", "count proper 4-colourings"));
  cols->add_flag("--list", o.list, "print every colouring");
  auto* complete = add_common(app.add_subcommand("complete", "completeness of 4-colourings"));
  auto* complete_col = complete->add_option("--colouring", o.colourings, "colouring line or file")
                          ->allow_extra_args(false)->expected(1);
  complete->add_option("--avoid", o.avoid, "find a colouring with no vertex of these colours")
      ->excludes(complete_col);
  auto* charfun = add_common(app.add_subcommand("charfun", "print lambda_chi or lambda_{chi,k}"));
  charfun->add_option("--colouring", o.colourings)->required()->allow_extra_args(false)->expected(1);
  add_ring(charfun);
  add_kparam(charfun);
  auto* equiv = add_common(app.add_subcommand("equiv", "equivalence of colourings / charfuns"));
  auto* eq_col = equiv->add_option("--colouring", o.colourings)->allow_extra_args(false)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* eq_cf = equiv->add_option("--charfun", o.charfuns)->allow_extra_args(false)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->excludes(eq_col);
  eq_col->excludes(eq_cf);
  add_ring(equiv);
  add_kparam(equiv);
  add_mode(equiv);
  add_reflections(equiv);
  auto* orient = add_common(app.add_subcommand("orient", "orientability of the small cover"));
  auto* or_col = orient->add_option("--colouring", o.colourings)->allow_extra_args(false)->expected(1);
  auto* or_cf = orient->add_option("--charfun", o.charfuns)->allow_extra_args(false)->expected(1)->excludes(or_col);
  or_col->excludes(or_cf);
  add_kparam(orient);
  auto* betti = add_common(app.add_subcommand("betti", "Z2 Betti numbers"));
  betti->add_option("--kind", o.kind)->check(CLI::IsMember({"small_cover", "quasitoric"}));
  auto* cls = add_common(app.add_subcommand("classify", "census of colouring classes"));
  add_mode(cls);
  auto* iso = add_common(app.add_subcommand("iso", "combinatorial isomorphisms"));
  add_reflections(iso);
  iso->add_flag("--list", o.list, "print every facet bijection");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  std::ostringstream buffer;
  Report report(buffer, o.report == "kv");
  try {
    if (name == "equiv" && o.colourings.size() != 2 && o.charfuns.size() != 2)
      throw UsageError("equiv needs two --colouring or two --charfun arguments");
    if (name == "orient" && o.colourings.empty() && o.charfuns.empty())
      throw UsageError("orient needs --colouring or --charfun");
    if (name == "orient" && o.kparam && !o.charfuns.empty())
      throw UsageError("--kparam applies to --colouring only");
    if (name == "equiv" && o.kparam && !o.charfuns.empty())
      throw UsageError("--kparam applies to --colouring only");

    static const std::map<std::string, int (*)(const Options&, std::istream&, Report&)> commands{
        {"check", cmd_check},       {"belts", cmd_belts},     {"colourings", cmd_colourings},
        {"complete", cmd_complete}, {"charfun", cmd_charfun}, {"equiv", cmd_equiv},
        {"orient", cmd_orient},     {"betti", cmd_betti},     {"classify", cmd_classify},
        {"iso", cmd_iso}};
    const int code = commands.at(name)(o, in, report);
    out << buffer.str();
    return code;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << '\n';
    return kExitError;
  }
}

}  // namespace pogorelov
