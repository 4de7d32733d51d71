#include "smallcover/io.hpp"

#include <fstream>
#include <sstream>

#include "smallcover/error.hpp"

namespace smallcover::io {

namespace {

void check_version(const Json& j) {
  if (j.is_object() && j.contains("v") && j.at("v") != kSchemaVersion) {
    throw Error(ErrorCode::Parse, "unsupported schema version " + j.at("v").dump());
  }
}

template <typename Fn>
auto parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

Json face_json(const Face& f) { return Json(mask_indices(f.facets)); }

}  // namespace

Json to_json(const SimplePolytope& p) {
  Json verts = Json::array();
  for (FacetMask v : p.vertices()) verts.push_back(mask_indices(v));
  Json j;
  j["v"] = kSchemaVersion;
  j["dim"] = p.dim();
  j["num_facets"] = p.num_facets();
  j["vertices"] = std::move(verts);
  return j;
}

SimplePolytope polytope_from_json(const Json& j) {
  check_version(j);
  return parsing("polytope", [&] {
    const int dim = j.at("dim").get<int>();
    const int r = j.contains("num_facets") ? j.at("num_facets").get<int>() : -1;
    const auto verts = j.at("vertices").get<std::vector<std::vector<int>>>();
    return validate(dim, verts, r);
  });
}

Json to_json(const CharFunc& lambda) {
  Json cols = Json::array();
  for (GF2Vector c : lambda.columns()) {
    Json bits = Json::array();
    for (int i = 0; i < lambda.target_rank(); ++i) bits.push_back(static_cast<int>(c >> i & 1U));
    cols.push_back(std::move(bits));
  }
  Json j;
  j["v"] = kSchemaVersion;
  j["t"] = lambda.target_rank();
  j["columns"] = std::move(cols);
  return j;
}

CharFunc charfunc_from_json(const Json& j) {
  check_version(j);
  return parsing("charfunc", [&] {
    const int t = j.at("t").get<int>();
    std::vector<GF2Vector> cols;
    for (const auto& col : j.at("columns")) {
      const auto bits = col.get<std::vector<int>>();
      if (static_cast<int>(bits.size()) != t) {
        throw Error(ErrorCode::WrongShape, "column with " + std::to_string(bits.size()) +
                                               " bits, expected " + std::to_string(t));
      }
      GF2Vector v = 0;
      for (int i = 0; i < t; ++i) {
        const int b = bits[static_cast<std::size_t>(i)];
        if (b != 0 && b != 1) throw Error(ErrorCode::Parse, "bits must be 0 or 1");
        if (b) v |= GF2Vector{1} << i;
      }
      cols.push_back(v);
    }
    return CharFunc(t, std::move(cols));
  });
}

BottMatrix bott_from_json(const Json& j) {
  check_version(j);
  return parsing("bott matrix", [&] {
    BottMatrix a;
    a.n = j.at("n").get<int>();
    a.entries = j.at("entries").get<std::vector<std::vector<int>>>();
    return a;
  });
}

Word word_from_json(const Json& j) {
  check_version(j);
  return parsing("word", [&] {
    if (j.is_object()) return j.at("word").get<Word>();
    return j.get<Word>();
  });
}

Json to_json(const BettiVector& b) {
  Json j;
  j["betti"] = b.b;
  j["euler"] = b.euler;
  return j;
}

namespace {

Json group_json(const GroupClass& g) {
  Json j;
  if (const auto* f = std::get_if<FiniteGroup>(&g)) {
    j["kind"] = "finite";
    j["k"] = f->k;
  } else if (const auto* v = std::get_if<VirtuallyNilpotentGroup>(&g)) {
    j["kind"] = "virtually_nilpotent";
    j["k"] = v->k;
    j["l"] = v->l;
  } else {
    j["kind"] = "contains_non_affine";
    j["witness"] = std::get<NonAffineGroup>(g).witness;
  }
  j["description"] = describe(g);
  return j;
}

Json pi1_json(const Pi1Description& d) {
  Json j;
  if (std::holds_alternative<Pi1Trivial>(d)) {
    j["kind"] = "trivial";
  } else if (const auto* f = std::get_if<Pi1FreeAbelian>(&d)) {
    j["kind"] = "free_abelian";
    j["l"] = f->l;
  } else {
    j["kind"] = "not_virtually_nilpotent";
  }
  return j;
}

const char* source_name(ClassificationReport::SmallCover::Source s) {
  switch (s) {
    case ClassificationReport::SmallCover::Source::Supplied: return "supplied";
    case ClassificationReport::SmallCover::Source::Found: return "found";
    case ClassificationReport::SmallCover::Source::None: return "none";
  }
  return "none";
}

const char* reason_name(NoSmallCoverReason r) {
  return r == NoSmallCoverReason::Pigeonhole ? "pigeonhole" : "exhausted";
}

}  // namespace

Json to_json(const ClassificationReport& rep) {
  Json j;
  j["v"] = kSchemaVersion;
  j["polytope"] = {{"n", rep.polytope.n},
                   {"r", rep.polytope.r},
                   {"f", rep.polytope.fh.f},
                   {"h", rep.polytope.fh.h}};
  j["flags"] = {{"is_flag", rep.flags.is_flag},
                {"is_two_neighborly", rep.flags.is_two_neighborly},
                {"is_cube", rep.flags.is_cube},
                {"is_simplex", rep.flags.is_simplex}};
  j["group"] = {{"coxeter_group", group_json(rep.group.coxeter_group)},
                {"gram", std::string(to_string(rep.group.gram))},
                {"pi1_rz", pi1_json(rep.group.pi1_rz)}};

  Json ma;
  ma["aspherical"] = rep.moment_angle.aspherical;
  ma["simply_connected"] = rep.moment_angle.simply_connected;
  ma["is_torus"] = rep.moment_angle.is_torus;
  ma["spherical_candidate"] = rep.moment_angle.spherical_candidate;
  ma["betti"] = rep.moment_angle.betti ? Json(rep.moment_angle.betti->b) : Json();
  if (!rep.moment_angle.homology_note.empty()) ma["homology_note"] = rep.moment_angle.homology_note;
  j["moment_angle"] = std::move(ma);

  const auto& sc = rep.small_cover;
  Json s;
  s["source"] = source_name(sc.source);
  if (sc.lambda) {
    s["charfunc"] = to_json(*sc.lambda);
    s["b1"] = sc.b1;
    s["pi1_finite"] = sc.pi1_finite;
    s["pi1"] = sc.pi1_z2_rank ? Json("(Z2)^" + std::to_string(*sc.pi1_z2_rank))
                              : Json("infinite");
    s["aspherical"] = sc.aspherical;
    s["is_real_bott"] = sc.is_real_bott;
    s["betti"] = sc.betti ? Json(sc.betti->b) : Json();
    if (!sc.homology_note.empty()) s["homology_note"] = sc.homology_note;
  } else {
    s["reason"] = reason_name(sc.none_reason);
  }
  j["small_cover"] = std::move(s);

  const auto& ob = rep.obstructions;
  Json offenders = Json::array();
  for (const auto& [face, gons] : ob.negative_curvature_offenders) {
    offenders.push_back({{"face", face_json(face)}, {"gons", gons}});
  }
  j["obstructions"] = {{"positive_ricci_obstructed", ob.positive_ricci_obstructed},
                       {"positive_ricci_reason", ob.positive_ricci_reason},
                       {"negative_curvature_offenders", std::move(offenders)},
                       {"nonneg_ricci_obstructed", ob.nonneg_ricci_obstructed},
                       {"nonneg_ricci_pi1_constraint", ob.nonneg_ricci_pi1_constraint}};
  return j;
}

Json to_json(const RealBottAudit& audit) {
  Json j;
  j["v"] = kSchemaVersion;
  j["flag_and_at_most_2n_facets"] = audit.flag_and_at_most_2n_facets;
  j["cube"] = audit.cube;
  j["aspherical_and_small_b1"] =
      audit.aspherical_and_small_b1 ? Json(*audit.aspherical_and_small_b1) : Json();
  j["b1"] = audit.b1 ? Json(*audit.b1) : Json();
  j["agree"] = audit.agree();
  return j;
}

Json to_json(const QuotientComplex& c) {
  Json dims = Json::array();
  for (int d = 0; d <= c.dim(); ++d) {
    Json cells = Json::array();
    for (const Cell& cell : c.cells(d)) {
      Json bits = Json::array();
      for (int i = 0; i < c.target_rank(); ++i) bits.push_back(static_cast<int>(cell.coset >> i & 1U));
      cells.push_back({{"face", mask_indices(cell.face)}, {"coset", std::move(bits)}});
    }
    Json entry;
    entry["dim"] = d;
    entry["cells"] = std::move(cells);
    entry["boundary"] = d == 0 ? Json::array() : Json(c.boundary(d));
    dims.push_back(std::move(entry));
  }
  Json j;
  j["v"] = kSchemaVersion;
  j["t"] = c.target_rank();
  j["dimensions"] = std::move(dims);
  return j;
}

Json to_json(const Enumeration& e, bool modulo_gl) {
  Json reps = Json::array();
  for (const CharFunc& l : e.representatives) reps.push_back(to_json(l)["columns"]);
  Json j;
  j["v"] = kSchemaVersion;
  j["mode"] = modulo_gl ? "modulo_gl" : "raw";
  j["count"] = e.count;
  j["representatives"] = std::move(reps);
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace smallcover::io
