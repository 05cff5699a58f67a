#include "cubechains/json_io.hpp"

#include <fstream>

namespace cubechains {

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const CubeMap& f) {
  Json table = Json::array();
  for (VertexMask x = 0; x < f.table.size(); ++x) {
    Json bits = Json::array();
    for (int i = 0; i < f.dst_dim; ++i) bits.push_back(int((f.table[x] >> i) & 1));
    table.push_back(std::move(bits));
  }
  return Json{{"src", f.src_dim}, {"dst", f.dst_dim}, {"table", std::move(table)}};
}

CubeMap cube_map_from_json(const Json& j) {
  CubeMap f;
  f.src_dim = j.at("src").get<int>();
  f.dst_dim = j.at("dst").get<int>();
  if (f.src_dim < 0 || f.dst_dim < 0 || f.src_dim > 20 || f.dst_dim > 20)
    throw std::invalid_argument("cube map: dimensions out of range");
  const Json& table = j.at("table");
  if (int(table.size()) != (1 << f.src_dim))
    throw std::invalid_argument("cube map: table must have 2^src entries");
  for (const Json& bits : table) {
    if (int(bits.size()) != f.dst_dim)
      throw std::invalid_argument("cube map: vertex has wrong length");
    VertexMask v = 0;
    for (int i = 0; i < f.dst_dim; ++i) {
      int b = bits[i].get<int>();
      if (b != 0 && b != 1) throw std::invalid_argument("cube map: bits must be 0/1");
      if (b) v |= VertexMask{1} << i;
    }
    f.table.push_back(v);
  }
  if (!is_strictly_increasing(f))
    throw std::invalid_argument("cube map: table is not strictly increasing");
  return f;
}

namespace {

std::string kind_name(CategoryKind k) {
  switch (k) {
    case CategoryKind::Generated: return "generated";
    case CategoryKind::AllCotransverse: return "all_cotransverse";
    case CategoryKind::HatSquare: return "hat_square";
  }
  return "generated";
}

}  // namespace

Json to_json(const CubeCategory& cat) {
  Json gens = Json::array();
  for (const CubeMap& g : cat.generators) gens.push_back(to_json(g));
  return Json{{"schema", kSchemaVersion},
              {"name", cat.name},
              {"kind", kind_name(cat.kind)},
              {"generators", std::move(gens)},
              {"max_dim", cat.max_dim}};
}

CubeCategory category_from_json(const Json& j) {
  std::string name = j.at("name").get<std::string>();
  int max_dim = j.at("max_dim").get<int>();
  std::string kind = j.value("kind", "generated");
  if (kind == "generated") {
    std::vector<CubeMap> gens;
    for (const Json& g : j.value("generators", Json::array()))
      gens.push_back(cube_map_from_json(g));
    return generate_category(name, gens, max_dim);
  }
  if (kind == "all_cotransverse")
    return predicate_category(name, CategoryKind::AllCotransverse, max_dim);
  if (kind == "hat_square")
    return predicate_category(name, CategoryKind::HatSquare, max_dim);
  throw std::invalid_argument("unknown category kind: " + kind);
}

CubeCategory resolve_category(const std::string& name_or_path, int max_dim) {
  if (is_builtin_category_name(name_or_path))
    return builtin_category(name_or_path, max_dim);
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("cannot open category spec: " + name_or_path);
  Json j;
  in >> j;
  return category_from_json(j);
}

Json to_json(const PrecubicalSet& K) {
  Json cells = Json::object();
  Json faces = Json::object();
  Json labels = Json::object();
  for (int n = 0; n <= K.dim(); ++n) {
    Json ids = Json::array();
    for (int c = 0; c < K.cell_count(n); ++c) ids.push_back(K.cell_id(n, c));
    cells[std::to_string(n)] = std::move(ids);
  }
  for (int n = 1; n <= K.dim(); ++n)
    for (int c = 0; c < K.cell_count(n); ++c) {
      Json f = Json::object();
      for (int i = 1; i <= n; ++i)
        for (int eps = 0; eps <= 1; ++eps)
          f[std::to_string(i) + "," + std::to_string(eps)] =
              K.cell_id(n - 1, K.face(n, c, i, eps));
      faces[K.cell_id(n, c)] = std::move(f);
    }
  for (int e = 0; e < K.cell_count(1); ++e)
    if (const std::string* l = K.label(e)) labels[K.cell_id(1, e)] = *l;
  Json out{{"schema", kSchemaVersion}, {"cells", std::move(cells)}};
  out["faces"] = std::move(faces);
  if (!labels.empty()) out["labels"] = std::move(labels);
  return out;
}

PrecubicalSet precubical_from_json(const Json& j) {
  PrecubicalSet K;
  const Json& cells = j.at("cells");
  std::map<std::string, int> dim_of;
  int top = -1;
  for (auto it = cells.begin(); it != cells.end(); ++it) top = std::max(top, std::stoi(it.key()));
  for (int n = 0; n <= top; ++n) {
    auto it = cells.find(std::to_string(n));
    if (it == cells.end()) continue;
    for (const Json& id : *it) {
      std::string s = id.get<std::string>();
      if (dim_of.count(s))
        throw std::invalid_argument("precubical set: duplicate cell id " + s);
      dim_of[s] = n;
      K.add_cell(n, s);
    }
  }
  const Json faces = j.value("faces", Json::object());
  for (auto it = faces.begin(); it != faces.end(); ++it) {
    auto d = dim_of.find(it.key());
    if (d == dim_of.end())
      throw std::invalid_argument("faces: unknown cell " + it.key());
    int n = d->second;
    int c = K.cell_index(n, it.key());
    for (auto f = it.value().begin(); f != it.value().end(); ++f) {
      auto comma = f.key().find(',');
      int i = std::stoi(f.key().substr(0, comma));
      int eps = std::stoi(f.key().substr(comma + 1));
      int fc = K.cell_index(n - 1, f.value().get<std::string>());
      if (fc < 0)
        throw std::invalid_argument("faces: unknown face cell " +
                                    f.value().get<std::string>());
      K.set_face(n, c, i, eps, fc);
    }
  }
  for (auto it = j.value("labels", Json::object()).begin();
       it != j.value("labels", Json::object()).end(); ++it) {
    int e = K.cell_index(1, it.key());
    if (e < 0) throw std::invalid_argument("labels: unknown edge " + it.key());
    K.set_label(e, it.value().get<std::string>());
  }
  K.freeze();
  return K;
}

Json to_json(const LabelledSkeleton& S) {
  Json verts = Json::array();
  for (const std::string& v : S.vertices) verts.push_back(v);
  Json edges = Json::array();
  for (const auto& e : S.edges) {
    Json je{{"src", S.vertices[e.src]}, {"dst", S.vertices[e.dst]}};
    if (!e.label.empty()) je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  return Json{{"schema", kSchemaVersion},
              {"vertices", std::move(verts)},
              {"edges", std::move(edges)}};
}

LabelledSkeleton skeleton_from_json(const Json& j) {
  LabelledSkeleton S;
  for (const Json& v : j.at("vertices")) S.vertices.push_back(v.get<std::string>());
  for (const Json& e : j.at("edges")) {
    LabelledSkeleton::Edge edge;
    edge.src = S.vertex_index(e.at("src").get<std::string>());
    edge.dst = S.vertex_index(e.at("dst").get<std::string>());
    if (edge.src < 0 || edge.dst < 0)
      throw std::invalid_argument("skeleton edge references unknown vertex");
    edge.label = e.value("label", "");
    S.edges.push_back(std::move(edge));
  }
  return S;
}

Json to_json(const HomologyResult& h) {
  Json H = Json::object();
  for (std::size_t k = 0; k < h.H.size(); ++k) {
    Json torsion = Json::array();
    for (const std::string& t : h.H[k].torsion) torsion.push_back(t);
    H[std::to_string(k)] = Json{{"betti", h.H[k].betti}, {"torsion", std::move(torsion)}};
  }
  Json counts = Json::array();
  for (long long c : h.simplex_counts) counts.push_back(c);
  return Json{{"pi0", h.pi0},
              {"H", std::move(H)},
              {"truncated_at", h.truncation},
              {"computed_through", h.computed_through},
              {"truncated_by_budget", h.truncated_by_budget},
              {"simplex_counts", std::move(counts)},
              {"note", "homology computed from the truncated nerve; "
                       "degrees above computed_through are not computed"}};
}

Json to_json(const ChainInvariants& inv) {
  Json per = Json::array();
  for (const auto& p : inv.per_n)
    per.push_back(Json{{"n", p.n},
                       {"objects", p.objects},
                       {"morphisms", p.morphisms},
                       {"homology", to_json(p.homology)}});
  return Json{{"pi0_total", inv.pi0_total}, {"per_n", std::move(per)}};
}

Json to_json(const ModelComparison& cmp) {
  Json out{{"schema", kSchemaVersion},
           {"left", cmp.left},
           {"right", cmp.right},
           {"synchronized", cmp.has_sync},
           {"coskeletal_model",
            Json{{"kind", "simplified labelled coskeleton"},
                 {"invariants", to_json(cmp.coskeletal)}}}};
  if (cmp.free_model) {
    out["free_model"] = to_json(*cmp.free_model);
    out["agree"] = cmp.agree;
    if (!cmp.agree) out["disagreement"] = cmp.disagreement;
  }
  return out;
}

std::unique_ptr<ASet> ASetEnvelope::build() {
  int cat_dim = max_dim;
  if (kind == "precubical") {
    category = std::make_shared<const CubeCategory>(builtin_category("box", cat_dim));
    return std::make_unique<PrecubicalASet>(base, category);
  }
  if (kind == "free") {
    category = std::make_shared<const CubeCategory>(
        resolve_category(category_name, cat_dim));
    return std::make_unique<FreeASet>(base, category);
  }
  if (kind == "coskeletal") {
    auto hatS = std::make_shared<const CubeCategory>(
        builtin_category("hat_box_s", cat_dim));
    category = hatS;
    return std::make_unique<CoskeletalASet>(cosk1_fill(skeleton, cat_dim, hatS));
  }
  throw std::invalid_argument("unknown A-set kind: " + kind);
}

int ASetEnvelope::state_index(const ASet& X, const std::string& name) const {
  if (kind == "coskeletal") {
    int v = skeleton.vertex_index(name);
    if (v < 0) throw std::invalid_argument("unknown vertex: " + name);
    return v;
  }
  int v = base.cell_index(0, name);
  if (v < 0) throw std::invalid_argument("unknown vertex: " + name);
  (void)X;
  return v;  // free A-sets have a unique dimension-0 endomorphism
}

Json envelope_to_json(const ASetEnvelope& env) {
  Json out{{"schema", kSchemaVersion}, {"kind", env.kind}, {"max_dim", env.max_dim}};
  if (env.kind == "coskeletal")
    out["skeleton"] = to_json(env.skeleton);
  else
    out["base"] = to_json(env.base);
  if (env.kind == "free") out["category"] = env.category_name;
  return out;
}

ASetEnvelope envelope_from_json(const Json& j) {
  ASetEnvelope env;
  env.kind = j.at("kind").get<std::string>();
  env.max_dim = j.at("max_dim").get<int>();
  if (env.kind == "coskeletal")
    env.skeleton = skeleton_from_json(j.at("skeleton"));
  else
    env.base = precubical_from_json(j.at("base"));
  if (env.kind == "free") env.category_name = j.at("category").get<std::string>();
  return env;
}

Json chain_category_to_json(const ChainCategory& C, std::size_t composition_table_limit) {
  Json objects = Json::array();
  for (const CubeChain& c : C.objects()) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < c.cells.size(); ++i)
      cells.push_back(C.aset().cell_name(c.comp.parts[i], c.cells[i]));
    objects.push_back(Json{{"composition", c.comp.parts}, {"cells", std::move(cells)}});
  }
  Json morphisms = Json::array();
  for (const ChainMorphism& m : C.morphisms()) {
    Json w = Json::array();
    for (const BlockChain& bc : m.witness) {
      Json block = Json::array();
      for (const CubeMap& h : bc) block.push_back(to_json(h));
      w.push_back(std::move(block));
    }
    morphisms.push_back(Json{{"src", m.src}, {"tgt", m.tgt}, {"witness", std::move(w)}});
  }
  Json out{{"schema", kSchemaVersion},
           {"alpha", C.aset().cell_name(0, C.alpha())},
           {"beta", C.aset().cell_name(0, C.beta())},
           {"n", C.total_dim()},
           {"objects", std::move(objects)},
           {"morphisms", std::move(morphisms)}};

  std::size_t pairs = 0;
  for (const ChainMorphism& m : C.morphisms()) pairs += C.morphisms_from(m.tgt).size();
  if (pairs <= composition_table_limit) {
    // triples [first, second, second-after-first]
    Json table = Json::array();
    for (std::size_t f = 0; f < C.morphisms().size(); ++f)
      for (int g : C.morphisms_from(C.morphisms()[f].tgt))
        table.push_back(Json::array({int(f), g, C.compose(g, int(f))}));
    out["composition"] = std::move(table);
  } else {
    out["composition"] = "recompute";
  }
  return out;
}

LoadedChainCategory::LoadedChainCategory(const Json& j) {
  for (const Json& o : j.at("objects")) {
    Composition c;
    c.parts = o.at("composition").get<std::vector<int>>();
    comps_.push_back(std::move(c));
  }
  for (const Json& m : j.at("morphisms")) {
    ChainMorphism cm;
    cm.src = m.at("src").get<int>();
    cm.tgt = m.at("tgt").get<int>();
    for (const Json& block : m.at("witness")) {
      BlockChain bc;
      for (const Json& h : block) bc.push_back(cube_map_from_json(h));
      cm.witness.push_back(std::move(bc));
    }
    morphisms_.push_back(std::move(cm));
  }
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    index_[{morphisms_[i].src, morphisms_[i].tgt, morphisms_[i].witness}] = int(i);
  identity_of_.assign(comps_.size(), -1);
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const ChainMorphism& m = morphisms_[i];
    if (m.src == m.tgt && m.witness == identity_witness(comps_[m.src]))
      identity_of_[m.src] = int(i);
  }
  for (int id : identity_of_)
    if (id < 0) throw std::invalid_argument("chain category file: missing identity");
}

int LoadedChainCategory::compose(int second, int first) const {
  const ChainMorphism& g = morphisms_[second];
  const ChainMorphism& f = morphisms_[first];
  Witness w = compose_witnesses(g.witness, comps_[g.src], f.witness, comps_[g.tgt]);
  auto it = index_.find({f.src, g.tgt, w});
  if (it == index_.end())
    throw std::invalid_argument("chain category file: composition not closed");
  return it->second;
}

SmallCategory LoadedChainCategory::as_small() const {
  SmallCategory S;
  S.objects = objects();
  for (const ChainMorphism& m : morphisms_) S.arrows.push_back({m.src, m.tgt});
  S.identity = identity_of_;
  S.compose = [this](int second, int first) { return compose(second, first); };
  return S;
}

}  // namespace cubechains
