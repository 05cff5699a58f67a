#include "cubechains/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace cubechains {

bool VerifyReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

PrecubicalSet grid_with_two_holes() {
  // 3x3 grid of squares on a 4x4 vertex lattice, squares (1,0) and (1,2)
  // removed: two holes between the left and right walls.
  PrecubicalSet K;
  auto vid = [](int x, int y) { return "v" + std::to_string(x) + std::to_string(y); };
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y) K.add_cell(0, vid(x, y));
  auto hid = [&](int x, int y) { return "h" + std::to_string(x) + std::to_string(y); };
  auto wid = [&](int x, int y) { return "w" + std::to_string(x) + std::to_string(y); };
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 3; ++y) {
      int e = K.add_cell(1, hid(x, y));
      K.set_face(1, e, 1, 0, K.cell_index(0, vid(x, y)));
      K.set_face(1, e, 1, 1, K.cell_index(0, vid(x + 1, y)));
    }
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 2; ++y) {
      int e = K.add_cell(1, wid(x, y));
      K.set_face(1, e, 1, 0, K.cell_index(0, vid(x, y)));
      K.set_face(1, e, 1, 1, K.cell_index(0, vid(x, y + 1)));
    }
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      if (x == 1 && (y == 0 || y == 2)) continue;  // the holes
      int s = K.add_cell(2, "s" + std::to_string(x) + std::to_string(y));
      K.set_face(2, s, 1, 0, K.cell_index(1, hid(x, y)));      // bottom
      K.set_face(2, s, 1, 1, K.cell_index(1, hid(x, y + 1)));  // top
      K.set_face(2, s, 2, 0, K.cell_index(1, wid(x, y)));      // left
      K.set_face(2, s, 2, 1, K.cell_index(1, wid(x + 1, y)));  // right
    }
  K.freeze();
  return K;
}

CubeCategory non_thick_fixture(int max_dim) {
  CubeMap gen = compose(CubeMap::coface(3, 3, 1), CubeMap::fold_max_min(2, 1));
  return generate_category("coface-plus-folded-face", {gen}, max_dim);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Harness {
  std::vector<CheckResult>& out;
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
      r.detail = body();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  }
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

// Independent oracle for criterion 1: every one of the 4^4 vertex tables,
// filtered by the two defining conditions written out directly.
std::vector<CubeMap> brute_force_cotransverse_2_2() {
  std::vector<CubeMap> out;
  for (int t0 = 0; t0 < 4; ++t0)
    for (int t1 = 0; t1 < 4; ++t1)
      for (int t2 = 0; t2 < 4; ++t2)
        for (int t3 = 0; t3 < 4; ++t3) {
          CubeMap f;
          f.src_dim = f.dst_dim = 2;
          f.table = {VertexMask(t0), VertexMask(t1), VertexMask(t2), VertexMask(t3)};
          bool ok = true;
          for (VertexMask x = 0; x < 4 && ok; ++x)
            for (VertexMask y = 0; y < 4 && ok; ++y) {
              bool le = (x & y) == x;
              if (le && x != y) {
                VertexMask fx = f.table[x], fy = f.table[y];
                if (!((fx & fy) == fx && fx != fy)) ok = false;  // strictly increasing
              }
              if (le && bit_count(x ^ y) == 1)
                if (!((f.table[x] & f.table[y]) == f.table[x] &&
                      bit_count(f.table[x] ^ f.table[y]) == 1))
                  ok = false;  // edges map to edges
            }
          if (ok) out.push_back(std::move(f));
        }
  std::sort(out.begin(), out.end());
  return out;
}

struct Corpus {
  std::string name;
  PrecubicalSet K;
  std::vector<std::pair<std::string, std::string>> state_pairs;  // empty = all pairs
};

std::vector<Corpus> equivalence_corpus() {
  std::vector<Corpus> out;
  out.push_back({"square", standard_cube(2), {{"00", "11"}}});
  out.push_back({"hollow-square", boundary(standard_cube(2), 2), {{"00", "11"}}});
  out.push_back({"cube", standard_cube(3), {{"000", "111"}}});
  PrecubicalSet interval = standard_cube(1);
  PrecubicalSet three = tensor(tensor(interval, interval), interval);
  out.push_back({"interval-tensor-cubed-truncated", boundary(three, 3),
                 {{"0|0|0", "1|1|1"}}});
  out.push_back({"grid-two-holes", grid_with_two_holes(), {}});
  return out;
}

std::string plural(std::size_t n, const char* s) { return std::to_string(n) + " " + s; }

}  // namespace

VerifyReport verify_paper(const VerifyConfig& cfg) {
  VerifyReport rep;
  rep.config = cfg;
  Harness h{rep.checks};
  NerveOptions nerve_opt{cfg.truncation, cfg.simplex_budget};

  std::vector<HomologyResult> all_homology;  // collected for the dd check

  // 1. Enumeration oracle at [2] -> [2].
  h.run("cotransverse-enumeration-oracle", [&] {
    std::vector<CubeMap> oracle = brute_force_cotransverse_2_2();
    expect(oracle.size() == 4, "oracle cardinality is " + std::to_string(oracle.size()));
    std::set<CubeMap> oset(oracle.begin(), oracle.end());
    expect(oset.count(CubeMap::identity(2)) == 1, "identity missing");
    expect(oset.count(CubeMap::symmetry(2, 1)) == 1, "symmetry missing");
    expect(oset.count(CubeMap::fold_max_min(2, 1)) == 1, "max/min fold missing");
    CubeMap min_max = compose(CubeMap::symmetry(2, 1),
                              compose(CubeMap::fold_max_min(2, 1), CubeMap::symmetry(2, 1)));
    expect(oset.count(min_max) == 1, "min/max companion missing");
    CubeCategory hatS = builtin_category("hat_box_s", 2);
    expect(hatS.hom(2, 2) == oracle, "generated hom-set differs from the oracle");
    expect(enumerate_cotransverse(2, 2) == oracle, "enumeration differs from the oracle");
    return "hom([2],[2]) has exactly 4 maps: id, swap, two folds";
  });

  // 2. Unique factorization, exhaustive pair search.
  h.run("factorization-uniqueness", [&] {
    long long checked = 0;
    for (int m = 0; m <= 3; ++m)
      for (int n = m; n <= 3; ++n) {
        std::vector<CubeMap> maps = enumerate_cotransverse(m, n);
        std::vector<CubeMap> endos = enumerate_cotransverse(m, m);
        std::vector<CubeMap> boxes = box_homset(m, n);
        for (const CubeMap& f : maps) {
          Factorization fac = factorize(f);
          expect(compose(fac.phi, fac.psi) == f, "factorize does not recompose");
          expect(is_box_map(fac.phi), "phi is not a box map");
          expect(is_cotransverse(fac.psi), "psi is not cotransverse");
          expect(fac.psi.table.front() == 0, "psi moves the bottom vertex");
          int count = 0;
          for (const CubeMap& psi : endos)
            for (const CubeMap& phi : boxes)
              if (compose(phi, psi) == f) {
                ++count;
                expect(psi == fac.psi && phi == fac.phi, "a second factorization exists");
              }
          expect(count == 1, "factorization count is " + std::to_string(count));
          ++checked;
        }
      }
    return plural(checked, "maps factor uniquely (dims <= 3)");
  });

  // 3. Thickness of the named categories; the composite-generator fixture fails.
  h.run("thickness", [&] {
    for (const char* name : {"box", "box_s", "hat_box", "bar_box", "hat_box_s"}) {
      CubeCategory cat = builtin_category(name, cfg.max_dim);
      ThicknessReport t = is_thick(cat);
      expect(t.thick, std::string(name) + " reported non-thick");
    }
    ThicknessReport t = is_thick(non_thick_fixture(cfg.max_dim));
    expect(!t.thick, "fixture category reported thick");
    expect(t.missing_psi == CubeMap::fold_max_min(2, 1),
           "fixture counterexample is not the expected fold");
    return "box, box_s, hat_box, bar_box, hat_box_s thick up to max_dim; fixture fails "
           "with the fold endomorphism";
  });

  // 4. Greatest thick category without symmetries.
  h.run("greatest-thick", [&] {
    expect(!in_hat_square(CubeMap::symmetry(2, 1)), "symmetry passes the hat-square test");
    CubeCategory hat = builtin_category("hat_box", cfg.max_dim);
    std::vector<CubeCategory> catalog;
    for (const char* name : {"box", "box_s", "hat_box", "bar_box", "hat_box_s"})
      catalog.push_back(builtin_category(name, cfg.max_dim));
    {
      std::vector<CubeMap> gens;
      for (int n = 2; n <= cfg.max_dim; ++n)
        for (int i = 1; i <= n - 1; ++i) gens.push_back(CubeMap::fold_max_min(n, i));
      catalog.push_back(generate_category("folds-only", gens, cfg.max_dim));
    }
    catalog.push_back(non_thick_fixture(cfg.max_dim));
    int tested = 0;
    for (const CubeCategory& cat : catalog) {
      if (!is_thick(cat).thick || contains_symmetry(cat)) continue;
      ++tested;
      for (const auto& [key, homset] : cat.homs)
        for (const CubeMap& f : homset)
          expect(hat.contains(f), cat.name + " escapes hat_box at " + to_string(f));
    }
    // hat-square hom-sets are composition-closed and predicate-consistent
    for (const auto& [key, homset] : hat.homs)
      for (const CubeMap& f : homset) expect(in_hat_square(f), "hat_box member fails test");
    for (int m = 0; m <= cfg.max_dim; ++m)
      for (int n = m; n <= cfg.max_dim; ++n)
        for (int p = n; p <= cfg.max_dim; ++p)
          for (const CubeMap& g : hat.hom(n, p))
            for (const CubeMap& f : hat.hom(m, n))
              expect(hat.contains(compose(g, f)), "hat_box not closed under composition");
    return plural(tested, "symmetry-free thick categories land inside hat_box");
  });

  // 5. Metric extension properties.
  h.run("metric-properties", [&] {
    MetricCheckReport m = run_metric_checks(cfg.max_dim, cfg.samples, cfg.seed);
    expect(m.ok(), m.first_violation);
    std::ostringstream os;
    os << m.vertex_checks << " vertex, " << m.functor_checks << " functoriality, "
       << m.nonexpansive_checks << " metric checks; max error " << m.max_error;
    return os.str();
  });

  auto box_cat = std::make_shared<const CubeCategory>(builtin_category("box", cfg.max_dim));

  // 6. Chain category shapes over the box category.
  h.run("chain-categories", [&] {
    PrecubicalASet square(standard_cube(2), box_cat);
    ChainCategory ch2(square, square.base().cell_index(0, "00"),
                      square.base().cell_index(0, "11"), 2);
    expect(ch2.objects().size() == 3, "square chain category has " +
                                          std::to_string(ch2.objects().size()) + " objects");
    int non_id = 0;
    for (std::size_t i = 0; i < ch2.morphisms().size(); ++i)
      if (!ch2.is_identity(int(i))) ++non_id;
    expect(non_id == 2, "square chain category has " + std::to_string(non_id) +
                            " non-identity morphisms");
    HomologyResult h2 = chain_category_homology(ch2, nerve_opt);
    all_homology.push_back(h2);
    expect(h2.pi0 == 1 && h2.computed_through >= 3, "square: wrong pi0 or truncation");
    expect(h2.H[0].betti == 1 && h2.H[0].torsion.empty(), "square: H_0 != Z");
    for (int k = 1; k <= 3; ++k)
      expect(h2.H[k].betti == 0 && h2.H[k].torsion.empty(), "square: H_k nonzero");

    PrecubicalASet hollow(boundary(standard_cube(2), 2), box_cat);
    ChainCategory chh(hollow, hollow.base().cell_index(0, "00"),
                      hollow.base().cell_index(0, "11"), 2);
    HomologyResult hh = chain_category_homology(chh, nerve_opt);
    all_homology.push_back(hh);
    expect(chh.objects().size() == 2 && hh.pi0 == 2, "hollow square: expected two components");

    PrecubicalASet cube(standard_cube(3), box_cat);
    ChainCategory ch3(cube, cube.base().cell_index(0, "000"),
                      cube.base().cell_index(0, "111"), 3);
    HomologyResult h3 = chain_category_homology(ch3, nerve_opt);
    all_homology.push_back(h3);
    expect(h3.pi0 == 1 && h3.computed_through >= 3, "cube: wrong pi0 or truncation");
    expect(h3.H[0].betti == 1 && h3.H[0].torsion.empty(), "cube: H_0 != Z");
    for (int k = 1; k <= 3; ++k)
      expect(h3.H[k].betti == 0 && h3.H[k].torsion.empty(), "cube: H_k nonzero");
    return "square: 3 objects / 2 arrows, point-like nerve; hollow square: pi0 = 2; "
           "cube: point-like nerve";
  });

  // 7. Free/precubical chain equivalence shadow plus comma initial objects.
  h.run("chain-equivalence-shadow", [&] {
    long long compared = 0, comma_checked = 0;
    for (const char* cat_name : {"hat_box", "hat_box_s"}) {
      auto A = std::make_shared<const CubeCategory>(
          builtin_category(cat_name, cfg.max_dim));
      for (const Corpus& corpus : equivalence_corpus()) {
        PrecubicalASet KA(corpus.K, box_cat);
        FreeASet LA(corpus.K, A);
        std::vector<std::pair<int, int>> pairs;
        if (!corpus.state_pairs.empty()) {
          for (const auto& [a, b] : corpus.state_pairs)
            pairs.emplace_back(corpus.K.cell_index(0, a), corpus.K.cell_index(0, b));
        } else {
          for (int a = 0; a < corpus.K.cell_count(0); ++a)
            for (int b = 0; b < corpus.K.cell_count(0); ++b) pairs.emplace_back(a, b);
        }
        for (auto [a, b] : pairs)
          for (int n = 0; n <= 3; ++n) {
            ChainCategory chK(KA, a, b, n);
            if (chK.objects().empty()) {
              ChainCategory chL_probe(LA, a, b, n);
              expect(chL_probe.objects().empty(),
                     "free model has chains the base lacks");
              continue;
            }
            ChainCategory chL(LA, a, b, n);
            HomologyResult hK = chain_category_homology(chK, nerve_opt);
            HomologyResult hL = chain_category_homology(chL, nerve_opt);
            all_homology.push_back(hK);
            all_homology.push_back(hL);
            expect(hK.agrees_with(hL),
                   corpus.name + std::string("/") + cat_name + ": homology differs at n=" +
                       std::to_string(n));
            ++compared;
            LiftFunctor F = lift_functor(chK, chL, LA);
            for (int c = 0; c < int(chL.objects().size()); ++c) {
              CommaReport cr = comma_initial(chK, chL, F, c);
              expect(cr.ok, corpus.name + ": " + cr.failure);
              ++comma_checked;
            }
          }
      }
    }
    return plural(compared, "chain categories agree; ") +
           plural(comma_checked, "comma categories have unique initial objects");
  });

  // 8. Over box every witness endomorphism is an identity.
  h.run("box-witness-endos", [&] {
    long long endos_seen = 0;
    for (const Corpus& corpus : equivalence_corpus()) {
      PrecubicalASet KA(corpus.K, box_cat);
      std::vector<std::pair<int, int>> pairs;
      if (!corpus.state_pairs.empty())
        for (const auto& [a, b] : corpus.state_pairs)
          pairs.emplace_back(corpus.K.cell_index(0, a), corpus.K.cell_index(0, b));
      else
        for (int a = 0; a < corpus.K.cell_count(0); ++a)
          for (int b = 0; b < corpus.K.cell_count(0); ++b) pairs.emplace_back(a, b);
      for (auto [a, b] : pairs)
        for (int n = 0; n <= 3; ++n) {
          ChainCategory ch(KA, a, b, n);
          for (std::size_t i = 0; i < ch.morphisms().size(); ++i) {
            const ChainMorphism& m = ch.morphisms()[i];
            if (m.src != m.tgt) continue;
            ++endos_seen;
            expect(ch.is_identity(int(i)), "non-identity endomorphism over box");
          }
        }
    }
    return plural(endos_seen, "endomorphisms, all identities");
  });

  // 9. Parallel composition with synchronization.
  h.run("parallel-composition", [&] {
    ModelComparison plain = compare_models({"a"}, {"b"}, SyncAlgebra{}, nerve_opt);
    expect(plain.free_model.has_value(), "free model missing");
    expect(plain.agree, "a || b: models disagree: " + plain.disagreement);
    expect(plain.coskeletal.pi0_total == 1, "a || b: pi0 != 1");
    for (const auto& p : plain.coskeletal.per_n) {
      all_homology.push_back(p.homology);
      expect(p.homology.H[0].betti == 1, "a || b: H_0 != Z");
      for (int k = 1; k <= p.homology.computed_through; ++k)
        expect(p.homology.H[k].betti == 0 && p.homology.H[k].torsion.empty(),
               "a || b: higher homology nonzero");
    }
    SyncAlgebra sync;
    sync.rules.push_back({"a", "abar", "tau"});
    ModelComparison synced = compare_models({"a"}, {"abar"}, sync, nerve_opt);
    expect(synced.coskeletal.pi0_total == 2,
           "a || abar: coskeletal pi0 is " + std::to_string(synced.coskeletal.pi0_total));
    for (const auto& p : synced.coskeletal.per_n) all_homology.push_back(p.homology);
    return "a || b matches the free model; a || abar splits into the synchronized "
           "and interleaving classes";
  });

  // 10. Infrastructure: boundary-squared, JSON stability, round trips.
  h.run("infrastructure", [&] {
    for (const HomologyResult& hr : all_homology)
      expect(hr.dd_zero, "a boundary pair fails d o d = 0");
    expect(!all_homology.empty(), "no homology results collected");

    PrecubicalSet K = grid_with_two_holes();
    Json j1 = to_json(K);
    PrecubicalSet K2 = precubical_from_json(j1);
    expect(dump_stable(to_json(K2)) == dump_stable(j1), "precubical round trip unstable");

    CubeCategory hatS = builtin_category("hat_box_s", 2);
    Json jc = to_json(hatS);
    expect(dump_stable(jc) == dump_stable(to_json(category_from_json(jc))),
           "category spec round trip unstable");

    PrecubicalASet square(standard_cube(2), box_cat);
    ChainCategory ch2(square, square.base().cell_index(0, "00"),
                      square.base().cell_index(0, "11"), 2);
    Json jcat = chain_category_to_json(ch2);
    LoadedChainCategory loaded(jcat);
    expect(loaded.objects() == 3, "reloaded chain category lost objects");
    HomologyResult hr = category_homology(loaded.as_small(), nerve_opt);
    expect(hr.pi0 == 1 && hr.H[0].betti == 1, "reloaded chain category changed homology");

    ModelComparison plain = compare_models({"a"}, {"b"}, SyncAlgebra{}, nerve_opt);
    Json jr = to_json(plain);
    expect(dump_stable(jr) == dump_stable(Json::parse(dump_stable(jr))),
           "report serialization unstable");
    return "d o d = 0 on every computed boundary pair; JSON emitters are byte-stable";
  });

  return rep;
}

Json to_json(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"millis", c.millis},
                          {"detail", c.detail}});
  return Json{{"schema", kSchemaVersion},
              {"max_dim", rep.config.max_dim},
              {"truncation", rep.config.truncation},
              {"seed", rep.config.seed},
              {"samples", rep.config.samples},
              {"all_pass", rep.all_pass()},
              {"note", "thickness verdicts are 'thick up to max_dim'; nerve homology "
                       "is compared in computed degrees"},
              {"checks", std::move(checks)}};
}

}  // namespace cubechains
