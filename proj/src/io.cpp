#include "s4lie/io.hpp"

#include <fstream>
#include <map>

#include "s4lie/errors.hpp"

namespace s4lie {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

std::size_t index_in(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= bound)
    throw FormatError(std::string(what) + " index out of range");
  return v.get<std::size_t>();
}

Scalar scalar_from(const json& v, const Field& f) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
  if (v.is_number_integer()) return f.integer(v.get<long>());
  throw FormatError("scalars must be strings");
}

json flat(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c).to_string());
  return out;
}

// Flat row-major list or nested rows.
Matrix square_from(const json& j, std::size_t n, const Field& f) {
  if (!j.is_array()) throw FormatError("matrix must be an array");
  if (!j.empty() && j[0].is_array()) {
    Matrix m = matrix_from_json(j, f);
    if (m.rows() != n || m.cols() != n) throw ShapeError("matrix has the wrong shape");
    return m;
  }
  if (j.size() != n * n) throw ShapeError("flat matrix has the wrong length");
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n * n; ++i) {
    Scalar s = scalar_from(j[i], f);
    if (!s.is_zero()) m.set(i / n, i % n, s);
  }
  return m;
}

int grade_for_label(const std::string& label) {
  static const std::map<std::string, int> known = {
      {"t", 0},    {"iota0", 2}, {"iota1", 1}, {"iota2", 3}, {"v", 0},  {"A12", 2}, {"A23", 1},
      {"A31", 3},  {"K-2", -2},  {"K-1", -1},  {"K0", 0},    {"K1", 1}, {"K2", 2}};
  auto it = known.find(label);
  if (it == known.end()) throw FormatError("block " + label + " has no grade");
  return it->second;
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "Qsqrt"}, {"d", f.discriminant()}};
}

Field field_from_json(const json& j) {
  return guarded("field", [&] {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Qsqrt") return Field::quadratic(j.at("d").get<std::int64_t>());
    throw FormatError("unknown field kind " + kind);
  });
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j, const Field& f) {
  return guarded("matrix", [&] {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) throw ShapeError("ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) {
        Scalar s = scalar_from(j[r][c], f);
        if (!s.is_zero()) m.set(r, c, s);
      }
    }
    return m;
  });
}

json algebra_to_json(const Algebra& a) {
  json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  json mul = json::array();
  for (const auto& e : a.mul_entries()) mul.push_back({e.i, e.j, e.k, e.c.to_string()});
  j["mul"] = std::move(mul);
  if (a.has_involution()) j["involution"] = matrix_to_json(a.involution());
  if (a.has_form()) j["form"] = matrix_to_json(a.form());
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

Algebra algebra_from_json(const json& j) {
  return guarded("algebra", [&] {
    const Field f = field_from_json(j.at("field"));
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<MulEntry> mul;
    for (const auto& e : j.at("mul")) {
      if (!e.is_array() || e.size() != 4) throw FormatError("mul entries are [i,j,k,c]");
      mul.push_back({static_cast<Index>(index_in(e[0], n, "mul")), static_cast<Index>(index_in(e[1], n, "mul")),
                     static_cast<Index>(index_in(e[2], n, "mul")), scalar_from(e[3], f)});
    }
    std::optional<Matrix> b, q;
    if (j.contains("involution") && !j["involution"].is_null()) b = square_from(j["involution"], n, f);
    if (j.contains("form") && !j["form"].is_null()) q = square_from(j["form"], n, f);
    std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string();
    return Algebra(f, n, mul, std::move(b), std::move(q), std::move(name));
  });
}

json delta_to_json(const DeltaMap& d) {
  json j;
  j["field"] = field_to_json(d.field());
  j["dim"] = d.dim();
  json ts = json::array();
  const std::size_t n = d.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d.vanishes(a, b)) continue;
      const Triple& t = d.stored(a, b);
      ts.push_back({a, b, flat(t[0]), flat(t[1]), flat(t[2])});
    }
  j["triples"] = std::move(ts);
  return j;
}

DeltaMap delta_from_json(const json& j, const Field& f) {
  return guarded("delta", [&] {
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (j.contains("field") && field_from_json(j["field"]) != f) throw ContextError("delta field differs from algebra field");
    std::vector<Triple> values(n * (n - (n ? 1 : 0)) / 2, Triple::zero(n, f));
    std::vector<bool> seen(values.size(), false);
    for (const auto& e : j.at("triples")) {
      if (!e.is_array() || e.size() != 5) throw FormatError("triples entries are [a,b,d0,d1,d2]");
      const std::size_t a = index_in(e[0], n, "triple"), b = index_in(e[1], n, "triple");
      if (a >= b) throw FormatError("triples need a < b");
      const std::size_t p = DeltaMap::pair_index(a, b, n);
      if (seen[p]) throw FormatError("duplicate triple for a basis pair");
      seen[p] = true;
      values[p] = Triple(square_from(e[2], n, f), square_from(e[3], n, f), square_from(e[4], n, f));
    }
    return DeltaMap::unchecked(f, n, std::move(values));
  });
}

json lie_to_json(const LieAlgebra& l, const GroupAction* action) {
  json j;
  j["field"] = field_to_json(l.field());
  j["dim"] = l.dim();
  j["grading"] = l.grading() == GradingKind::klein ? "klein" : "integer";
  json blocks = json::array();
  for (const auto& b : l.blocks()) blocks.push_back({{"label", b.label}, {"dim", b.dim}, {"grade", b.grade}});
  j["blocks"] = std::move(blocks);
  json br = json::array();
  for (const auto& e : l.entries()) br.push_back({e.i, e.j, e.k, e.c.to_string()});
  j["bracket"] = std::move(br);
  if (action) {
    json gens = json::object();
    for (const auto& [name, m] : action->generators) gens[name] = matrix_to_json(m);
    j["action"] = {{"group", action->group}, {"generators", std::move(gens)}};
  }
  return j;
}

LieFile lie_from_json(const json& j) {
  return guarded("lie algebra", [&] {
    const Field f = field_from_json(j.at("field"));
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<Block> blocks;
    std::size_t total = 0;
    bool integer = false;
    for (const auto& b : j.at("blocks")) {
      Block blk;
      blk.label = b.at("label").get<std::string>();
      blk.dim = b.at("dim").get<std::size_t>();
      blk.grade = b.contains("grade") ? b["grade"].get<int>() : grade_for_label(blk.label);
      integer = integer || blk.label.starts_with("K");
      total += blk.dim;
      blocks.push_back(std::move(blk));
    }
    if (total != n) throw ShapeError("block dimensions do not add up to dim");
    GradingKind kind = integer ? GradingKind::integer : GradingKind::klein;
    if (j.contains("grading")) {
      const std::string g = j["grading"].get<std::string>();
      if (g != "klein" && g != "integer") throw FormatError("unknown grading " + g);
      kind = g == "klein" ? GradingKind::klein : GradingKind::integer;
    }
    std::vector<MulEntry> entries;
    for (const auto& e : j.at("bracket")) {
      if (!e.is_array() || e.size() != 4) throw FormatError("bracket entries are [i,j,k,c]");
      entries.push_back({static_cast<Index>(index_in(e[0], n, "bracket")), static_cast<Index>(index_in(e[1], n, "bracket")),
                         static_cast<Index>(index_in(e[2], n, "bracket")), scalar_from(e[3], f)});
    }
    LieFile out{LieAlgebra::from_entries(f, std::move(blocks), kind, entries), std::nullopt};
    if (j.contains("action") && !j["action"].is_null()) {
      GroupAction act;
      act.group = j["action"].at("group").get<std::string>();
      for (const auto& [name, m] : j["action"].at("generators").items()) {
        Matrix g = matrix_from_json(m, f);
        if (g.rows() != n || g.cols() != n) throw ShapeError("generator " + name + " has the wrong shape");
        act.generators.emplace_back(name, std::move(g));
      }
      out.action = std::move(act);
    }
    return out;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace s4lie
