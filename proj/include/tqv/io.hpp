#ifndef TQV_IO_HPP_
#define TQV_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tqv/corr_morphism.hpp"
#include "tqv/factor.hpp"
#include "tqv/morphism.hpp"
#include "tqv/pimsner.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

using json = nlohmann::json;

// Quiver file:
//   {"vertices": ["u", ...],
//    "edges": [{"id": "l", "src": "u", "rng": "u", "weight": "1/1"}, ...]}
// Weights are "p/q" strings with q > 0 and are parsed exactly. Structural
// problems (duplicates, dangling ids, non-positive weights) parse fine and
// are left to validate(); schema problems throw InputError naming the field.
json quiver_to_json(const FiniteQuiver& q);
QuiverPtr quiver_from_json(const json& j);

// Morphism file:
//   {"dom": <path or inline quiver>, "cod": <path or inline quiver>,
//    "vmap": {"a": "u", ...}, "emap": {"e1": "l", ...}}
// Relative paths resolve against base_dir (the morphism file's directory).
json morphism_to_json(const QuiverMorphism& m);
QuiverMorphism morphism_from_json(const json& j, const std::filesystem::path& base_dir);

json read_json_file(const std::filesystem::path& path);
QuiverPtr load_quiver(const std::filesystem::path& path);
QuiverMorphism load_morphism(const std::filesystem::path& path);

// Report serialization for the CLI's structured output.
json to_json(const ValidationReport& r);
json to_json(const VertexClassification& c);
json to_json(const SquareReport& r);
json to_json(const RegularityReport& r);
json to_json(const CovarianceReport& r);
json to_json(const FactorMapReport& r);
json to_json(const VerificationReport& r);
json to_json(const Presentation& p);
json to_json(const GeneratorMap& g);
/// {"id": "p/q+p/q·i", ...}
json to_json(const VertexFunction& f);
json to_json(const EdgeVector& xi);

}  // namespace tqv

#endif  // TQV_IO_HPP_
