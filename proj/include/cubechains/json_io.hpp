#ifndef CUBECHAINS_JSON_IO_HPP
#define CUBECHAINS_JSON_IO_HPP

#include <json.hpp>
#include <memory>

#include "cubechains/cube_category.hpp"
#include "cubechains/hda.hpp"
#include "cubechains/nerve.hpp"
#include "cubechains/precubical.hpp"

namespace cubechains {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "cubechains/1";

Json to_json(const CubeMap& f);
CubeMap cube_map_from_json(const Json& j);  // validates strict monotonicity

// Category spec: {"name", "kind": "generated"|"all_cotransverse"|"hat_square",
// "generators": [...], "max_dim": N}.  Builtin names resolve directly.
Json to_json(const CubeCategory& cat);
CubeCategory category_from_json(const Json& j);
// Accepts a builtin name or a path to a spec file.
CubeCategory resolve_category(const std::string& name_or_path, int max_dim);

Json to_json(const PrecubicalSet& K);
PrecubicalSet precubical_from_json(const Json& j);

Json to_json(const LabelledSkeleton& S);
LabelledSkeleton skeleton_from_json(const Json& j);

Json to_json(const HomologyResult& h);
Json to_json(const ChainInvariants& inv);
Json to_json(const ModelComparison& cmp);

// A-set container: {"kind": "precubical"|"free"|"coskeletal", ...}.
struct ASetEnvelope {
  std::string kind;
  PrecubicalSet base;          // precubical / free
  LabelledSkeleton skeleton;   // coskeletal
  std::string category_name = "box";
  int max_dim = 3;

  std::shared_ptr<const CubeCategory> category;  // resolved on build
  std::unique_ptr<ASet> build();
  int state_index(const ASet& X, const std::string& name) const;
};
Json envelope_to_json(const ASetEnvelope& env);
ASetEnvelope envelope_from_json(const Json& j);

Json chain_category_to_json(const ChainCategory& C,
                            std::size_t composition_table_limit = 200000);

// A chain category reloaded from JSON: composition recomputed by witness
// substitution, which keeps the file self-contained.
class LoadedChainCategory {
 public:
  explicit LoadedChainCategory(const Json& j);
  int objects() const { return int(comps_.size()); }
  const std::vector<ChainMorphism>& morphisms() const { return morphisms_; }
  int compose(int second, int first) const;
  SmallCategory as_small() const;

 private:
  std::vector<Composition> comps_;
  std::vector<ChainMorphism> morphisms_;
  std::vector<int> identity_of_;
  std::map<std::tuple<int, int, Witness>, int> index_;
};

std::string dump_stable(const Json& j);  // 2-space indent, sorted keys, newline

}  // namespace cubechains

#endif
