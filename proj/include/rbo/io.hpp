#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rbo/group.hpp"
#include "rbo/rbo_algebra.hpp"

namespace rbo {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "rbo-lab/1";

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json algebra_to_json(const LieAlgebra& a);
LieAlgebra algebra_from_json(const json& j);

/// Accepts an inline algebra object or a string path (relative to base_dir).
LieAlgebra load_algebra_ref(const json& j, const std::filesystem::path& base_dir);

json rel_rbo_to_json(const RelRBO& o);
RelRBO rel_rbo_from_json(const json& j, const std::filesystem::path& base_dir = {});
RelRBO load_rel_rbo(const std::filesystem::path& path);

json modified_r_to_json(const ModifiedR& r);
ModifiedR modified_r_from_json(const json& j, const std::filesystem::path& base_dir = {});
ModifiedR load_modified_r(const std::filesystem::path& path);

json group_to_json(const MatrixGroup& g);
MatrixGroup group_from_json(const json& j);
MatrixGroup load_group(const std::filesystem::path& path);

/// Serializes with every number printed to 17 significant digits, so reports
/// are byte-stable across platforms.
std::string dump_json17(const json& j, int indent = 2);

json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rbo
