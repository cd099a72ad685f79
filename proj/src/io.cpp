#include "rbo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rbo {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix json: expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw Error("matrix json: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  }
  return m;
}

json algebra_to_json(const LieAlgebra& a) {
  json out;
  out["dim"] = a.dim();
  out["labels"] = a.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = i + 1; jj < a.dim(); ++jj) {
      Vec c = a.basis_bracket(i, jj);
      json entry = json::array();
      entry.push_back(i);
      entry.push_back(jj);
      bool any = false;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0.0) {
          entry.push_back(json::array({k, c[k]}));
          any = true;
        }
      if (any) brackets.push_back(std::move(entry));
    }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  LieAlgebra a(dim, std::move(labels));
  for (const json& entry : j.at("brackets")) {
    if (entry.size() < 2) throw Error("algebra json: bad bracket entry");
    const std::size_t i = entry[0].get<std::size_t>();
    const std::size_t jj = entry[1].get<std::size_t>();
    Vec c(dim, 0.0);
    for (std::size_t t = 2; t < entry.size(); ++t) {
      const std::size_t k = entry[t][0].get<std::size_t>();
      if (k >= dim) throw Error("algebra json: coefficient index out of range");
      c[k] = entry[t][1].get<double>();
    }
    a.set_bracket(i, jj, c);
  }
  return a;
}

LieAlgebra load_algebra_ref(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return algebra_from_json(load_json_file(base_dir / j.get<std::string>()));
  return algebra_from_json(j);
}

json rel_rbo_to_json(const RelRBO& o) {
  json out;
  out["schema"] = kSchemaTag;
  out["g"] = algebra_to_json(o.g);
  out["h"] = algebra_to_json(o.h);
  json action = json::array();
  for (const Matrix& m : o.phi_mats) action.push_back(matrix_to_json(m));
  out["action"] = std::move(action);
  out["B"] = matrix_to_json(o.B);
  return out;
}

RelRBO rel_rbo_from_json(const json& j, const std::filesystem::path& base_dir) {
  RelRBO o;
  o.g = load_algebra_ref(j.at("g"), base_dir);
  o.h = load_algebra_ref(j.at("h"), base_dir);
  for (const json& m : j.at("action")) o.phi_mats.push_back(matrix_from_json(m));
  if (o.phi_mats.size() != o.g.dim()) throw Error("rbo json: action size != dim g");
  o.B = matrix_from_json(j.at("B"));
  if (o.B.rows() != o.g.dim() || o.B.cols() != o.h.dim())
    throw Error("rbo json: B has wrong shape");
  return o;
}

RelRBO load_rel_rbo(const std::filesystem::path& path) {
  return rel_rbo_from_json(load_json_file(path), path.parent_path());
}

json modified_r_to_json(const ModifiedR& r) {
  json out;
  out["schema"] = kSchemaTag;
  out["algebra"] = algebra_to_json(r.g);
  out["R"] = matrix_to_json(r.R);
  return out;
}

ModifiedR modified_r_from_json(const json& j, const std::filesystem::path& base_dir) {
  ModifiedR r;
  r.g = load_algebra_ref(j.at("algebra"), base_dir);
  r.R = matrix_from_json(j.at("R"));
  return r;
}

ModifiedR load_modified_r(const std::filesystem::path& path) {
  return modified_r_from_json(load_json_file(path), path.parent_path());
}

json group_to_json(const MatrixGroup& g) {
  json out;
  out["name"] = g.name();
  out["ambient_dim"] = g.ambient_dim();
  json basis = json::array();
  for (const Matrix& b : g.basis()) basis.push_back(matrix_to_json(b));
  out["algebra_basis"] = std::move(basis);
  return out;
}

MatrixGroup group_from_json(const json& j) {
  std::vector<Matrix> basis;
  for (const json& b : j.at("algebra_basis")) basis.push_back(matrix_from_json(b));
  return MatrixGroup(j.at("name").get<std::string>(), j.at("ambient_dim").get<std::size_t>(),
                     std::move(basis));
}

MatrixGroup load_group(const std::filesystem::path& path) {
  return group_from_json(load_json_file(path));
}

namespace {

void dump17(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad1;
        out += json(it.key()).dump();
        out += ": ";
        dump17(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Flat arrays of numbers stay on one line.
      bool scalars = true;
      for (const json& e : j)
        if (e.is_structured()) scalars = false;
      if (scalars) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          dump17(j[i], out, indent, depth + 1);
          if (i + 1 < j.size()) out += ", ";
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad1;
        dump17(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad + "]";
      return;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json17(const json& j, int indent) {
  std::string out;
  dump17(j, out, indent, 0);
  out += '\n';
  return out;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("json parse error in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  out << text;
}

}  // namespace rbo
