#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "smallcover/charfunc.hpp"
#include "smallcover/classify.hpp"
#include "smallcover/coxeter.hpp"
#include "smallcover/error.hpp"
#include "smallcover/io.hpp"
#include "smallcover/zhomology.hpp"

namespace smallcover::cli {

namespace {

using io::Json;

constexpr int kAnalysisError = 1;
constexpr int kBadInput = 2;

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankDefect:
    case ErrorCode::TooLarge:
    case ErrorCode::Inconsistent:
      return false;
    default:
      return true;
  }
}

std::size_t cell_guard() {
  if (const char* env = std::getenv("SMALLCOVER_CELL_GUARD")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "SMALLCOVER_CELL_GUARD must be an integer");
    }
  }
  return kDefaultCellGuard;
}

// Accepts a file path or an inline JSON array/object.
Json load(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
  }
  return io::read_file(arg);
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_file(path, j);
  }
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> dims;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      dims.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "bad dimension list '" + s + "'");
    }
  }
  return dims;
}

struct Options {
  // shared
  std::string polytope;
  std::string output;
  std::string charfunc;
  int threads = 1;
  // construct
  std::string kind;
  int n = 0, m = 0, k = 0;
  std::string dims, left, right, bott, charfunc_out;
  // analyze / homology
  bool homology = false;
  std::string dump;
  // charfunc
  bool exists = false, enumerate = false, modulo_gl = false;
  std::string validate_path;
  // word
  std::string reduce, member, word;
};

int do_construct(const Options& o, std::ostream& out) {
  std::optional<SimplePolytope> p;
  std::optional<CharFunc> lambda;
  if (o.kind == "simplex") {
    p = simplex(o.n);
  } else if (o.kind == "cube") {
    p = cube(o.n);
  } else if (o.kind == "polygon") {
    p = polygon(o.m);
  } else if (o.kind == "dual_cyclic") {
    p = dual_cyclic(o.k, o.n);
  } else if (o.kind == "product") {
    p = product(io::polytope_from_json(load(o.left)), io::polytope_from_json(load(o.right)));
  } else if (o.kind == "simplices") {
    auto [poly, l] = generalized_bott_charfunc(parse_dims(o.dims));
    p = std::move(poly);
    lambda = std::move(l);
  } else if (o.kind == "bott") {
    auto [poly, l] = bott_charfunc(io::bott_from_json(load(o.bott)));
    p = std::move(poly);
    lambda = std::move(l);
  } else {
    throw Error(ErrorCode::BadParameter, "unknown kind '" + o.kind + "'");
  }
  emit(io::to_json(*p), o.output, out);
  if (!o.charfunc_out.empty()) {
    if (!lambda) throw Error(ErrorCode::BadParameter, "--charfunc-out needs --kind simplices or bott");
    io::write_file(o.charfunc_out, io::to_json(*lambda));
  }
  return 0;
}

std::optional<CharFunc> optional_charfunc(const Options& o) {
  if (o.charfunc.empty()) return std::nullopt;
  return io::charfunc_from_json(load(o.charfunc));
}

int do_analyze(const Options& o, std::ostream& out) {
  const SimplePolytope p = io::polytope_from_json(load(o.polytope));
  ClassifyOptions opts;
  opts.compute_homology = o.homology;
  opts.cell_guard = cell_guard();
  opts.threads = o.threads;
  emit(io::to_json(classify(p, optional_charfunc(o), opts)), o.output, out);
  return 0;
}

int do_homology(const Options& o, std::ostream& out) {
  const SimplePolytope p = io::polytope_from_json(load(o.polytope));
  const CharFunc lambda = o.charfunc.empty() ? lambda0(p) : *optional_charfunc(o);
  const QuotientComplex cx = build_complex(p, lambda, cell_guard());
  if (!o.dump.empty()) io::write_file(o.dump, io::to_json(cx));
  Json j = io::to_json(z2_betti(cx));
  j["cells"] = Json::array();
  for (int d = 0; d <= cx.dim(); ++d) j["cells"].push_back(cx.cell_count(d));
  emit(j, o.output, out);
  return 0;
}

int do_charfunc(const Options& o, std::ostream& out) {
  const SimplePolytope p = io::polytope_from_json(load(o.polytope));
  const int modes = int{o.exists} + int{o.enumerate} + int{!o.validate_path.empty()};
  if (modes != 1) throw Error(ErrorCode::BadParameter, "choose one of --exists, --enumerate, --validate");
  if (o.exists) {
    SearchOptions so;
    so.threads = o.threads;
    const SmallCoverSearch s = exists_small_cover(p, so);
    if (s.exists()) {
      out << "Exists\n";
      emit(io::to_json(*s.witness), o.output, out);
    } else if (s.reason == NoSmallCoverReason::Pigeonhole) {
      out << "NoneExists: pigeonhole (2-neighborly, r ≥ 2^n)\n";
    } else {
      out << "NoneExists: exhausted\n";
    }
    return 0;
  }
  if (o.enumerate) {
    EnumerationOptions eo;
    eo.threads = o.threads;
    const auto mode = o.modulo_gl ? EnumerationMode::ModuloGL : EnumerationMode::Raw;
    emit(io::to_json(enumerate_charfuncs(p, mode, eo), o.modulo_gl), o.output, out);
    return 0;
  }
  const CharFunc lambda = io::charfunc_from_json(load(o.validate_path));
  const CharFuncCheck check = validate_charfunc(p, lambda);
  if (check.valid()) {
    out << "Valid\n";
    return 0;
  }
  const auto v = static_cast<std::size_t>(*check.failing_vertex);
  out << "InvalidAt: vertex " << v << ' ' << Json(mask_indices(p.vertices()[v])).dump() << '\n';
  return kAnalysisError;
}

int do_word(const Options& o, std::ostream& out) {
  const SimplePolytope p = io::polytope_from_json(load(o.polytope));
  if (!o.reduce.empty()) {
    const Word w = io::word_from_json(load(o.reduce));
    emit(Json(normal_form(w, p)), o.output, out);
    return 0;
  }
  if (o.member.empty() || o.word.empty()) {
    throw Error(ErrorCode::BadParameter, "use --reduce w.json or --member rz|cover --word w.json");
  }
  const Word w = io::word_from_json(load(o.word));
  bool member = false;
  if (o.member == "rz") {
    member = pi1_membership(w, p, MomentAngleTarget{});
  } else if (o.member == "cover") {
    const auto lambda = optional_charfunc(o);
    if (!lambda) throw Error(ErrorCode::BadParameter, "--member cover needs --charfunc");
    member = pi1_membership(w, p, SmallCoverTarget{&*lambda});
  } else {
    throw Error(ErrorCode::BadParameter, "--member must be rz or cover");
  }
  Json j;
  j["member"] = member;
  j["abelianization"] = mask_indices(abelianization(w, p));
  emit(j, o.output, out);
  return 0;
}

int do_audit(const Options& o, std::ostream& out) {
  const SimplePolytope p = io::polytope_from_json(load(o.polytope));
  ClassifyOptions opts;
  opts.cell_guard = cell_guard();
  opts.threads = o.threads;
  const RealBottAudit audit = audit_real_bott(p, opts);
  emit(io::to_json(audit), o.output, out);
  return audit.agree() ? 0 : kAnalysisError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small covers and real moment-angle manifolds over simple polytopes"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build a polytope file");
  construct->add_option("--kind", o.kind, "simplex|cube|polygon|dual_cyclic|product|simplices|bott")
      ->required();
  construct->add_option("--n", o.n, "dimension");
  construct->add_option("--m", o.m, "polygon size");
  construct->add_option("--k", o.k, "dual_cyclic point count");
  construct->add_option("--dims", o.dims, "simplex dimensions for simplices, e.g. 2,1");
  construct->add_option("--left", o.left, "first factor for product");
  construct->add_option("--right", o.right, "second factor for product");
  construct->add_option("--bott", o.bott, "Bott matrix file for kind bott");
  construct->add_option("--charfunc-out", o.charfunc_out, "write the canonical charfunc here");
  construct->add_option("-o,--output", o.output);

  auto* analyze = app.add_subcommand("analyze", "classification report");
  analyze->add_option("polytope", o.polytope)->required();
  analyze->add_option("--charfunc", o.charfunc);
  analyze->add_flag("--homology", o.homology);
  analyze->add_option("-o,--output", o.output);
  analyze->add_option("--threads", o.threads);

  auto* homology = app.add_subcommand("homology", "Z2 Betti numbers of RZ_P or a small cover");
  homology->add_option("polytope", o.polytope)->required();
  homology->add_option("--charfunc", o.charfunc);
  homology->add_option("--dump", o.dump, "write the cell complex as JSON");
  homology->add_option("-o,--output", o.output);

  auto* charfunc = app.add_subcommand("charfunc", "characteristic functions");
  charfunc->add_option("polytope", o.polytope)->required();
  charfunc->add_flag("--exists", o.exists);
  charfunc->add_flag("--enumerate", o.enumerate);
  charfunc->add_flag("--modulo-gl", o.modulo_gl);
  charfunc->add_option("--validate", o.validate_path);
  charfunc->add_option("-o,--output", o.output);
  charfunc->add_option("--threads", o.threads);

  auto* word = app.add_subcommand("word", "right-angled Coxeter group words");
  word->add_option("polytope", o.polytope)->required();
  word->add_option("--reduce", o.reduce, "word to put in normal form");
  word->add_option("--member", o.member, "rz or cover");
  word->add_option("--word", o.word, "word for --member");
  word->add_option("--charfunc", o.charfunc);
  word->add_option("-o,--output", o.output);

  auto* audit = app.add_subcommand("audit", "real Bott equivalence audit");
  audit->add_option("polytope", o.polytope)->required();
  audit->add_option("-o,--output", o.output);
  audit->add_option("--threads", o.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (construct->parsed()) return do_construct(o, out);
    if (analyze->parsed()) return do_analyze(o, out);
    if (homology->parsed()) return do_homology(o, out);
    if (charfunc->parsed()) return do_charfunc(o, out);
    if (word->parsed()) return do_word(o, out);
    return do_audit(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_input_error(e.code()) ? kBadInput : kAnalysisError;
  }
}

}  // namespace smallcover::cli
