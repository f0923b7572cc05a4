#include "liecc/document.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "liecc/errors.hpp"

namespace liecc {

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw InputError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Scalar scalar_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const InputError& e) {
      fail_at(path, e.what());
    }
  }
  fail_at(path, "coefficient must be a fraction string");
}

std::size_t index_at(const json& obj, const char* key, const std::string& path, std::size_t dim) {
  if (!obj.contains(key)) fail_at(path, std::string("missing \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail_at(path + "/" + key, "index must be an integer");
  long x = v.get<long>();
  if (x < 1 || static_cast<std::size_t>(x) > dim)
    fail_at(path + "/" + key, "index " + std::to_string(x) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(x - 1);
}

}  // namespace

LieAlgebra algebra_from_json(const std::string& text) { return algebra_from_json(parse_text(text)); }

LieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) fail_at("", "document must be an object");
  if (doc.contains("version")) {
    const json& v = doc["version"];
    if (!v.is_number_integer() || v.get<int>() != kDocumentVersion)
      fail_at("/version", "unsupported schema version (expected " + std::to_string(kDocumentVersion) + ")");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 0)
    fail_at("/dim", "dim must be a non-negative integer");
  const auto n = static_cast<std::size_t>(doc["dim"].get<long>());

  Field field = Field::real;
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) fail_at("/field", "field must be \"real\" or \"complex\"");
    try {
      field = parse_field(doc["field"].get<std::string>());
    } catch (const InputError& e) {
      fail_at("/field", e.what());
    }
  }

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) fail_at("/basis", "basis must list exactly dim names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) fail_at("/basis/" + std::to_string(i), "basis name must be a string");
      names.push_back(b[i].get<std::string>());
    }
  }

  std::vector<BracketTerm> terms;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_array()) fail_at("/brackets", "brackets must be an array");
    for (std::size_t b = 0; b < br.size(); ++b) {
      const std::string path = "/brackets/" + std::to_string(b);
      const json& entry = br[b];
      if (!entry.is_object()) fail_at(path, "bracket must be an object");
      std::size_t i = index_at(entry, "i", path, n);
      std::size_t j = index_at(entry, "j", path, n);
      if (i >= j) fail_at(path, "need i < j (the other brackets follow by antisymmetry)");
      auto [it, fresh] = seen.emplace(std::make_pair(i, j), b);
      if (!fresh) fail_at(path, "duplicate bracket [e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                    "], first given at /brackets/" + std::to_string(it->second));
      if (!entry.contains("terms") || !entry["terms"].is_array()) fail_at(path + "/terms", "terms must be an array");
      const json& ts = entry["terms"];
      for (std::size_t q = 0; q < ts.size(); ++q) {
        const std::string tpath = path + "/terms/" + std::to_string(q);
        if (!ts[q].is_object()) fail_at(tpath, "term must be an object");
        std::size_t k = index_at(ts[q], "k", tpath, n);
        if (!ts[q].contains("coeff")) fail_at(tpath, "missing \"coeff\"");
        Scalar c = scalar_at(ts[q]["coeff"], tpath + "/coeff");
        if (field == Field::real && !c.is_real()) fail_at(tpath + "/coeff", "Gaussian coefficient in a real document");
        terms.push_back({i, j, k, c});
      }
    }
  }
  return LieAlgebra(n, terms, field, std::move(names));
}

json algebra_to_json(const LieAlgebra& L) {
  json doc;
  doc["version"] = kDocumentVersion;
  doc["dim"] = L.dim();
  doc["field"] = to_string(L.field());
  doc["basis"] = L.basis_names();
  json brackets = json::array();
  std::vector<BracketTerm> terms = L.terms();
  for (std::size_t a = 0; a < terms.size();) {
    json b;
    b["i"] = terms[a].i + 1;
    b["j"] = terms[a].j + 1;
    json ts = json::array();
    std::size_t z = a;
    for (; z < terms.size() && terms[z].i == terms[a].i && terms[z].j == terms[a].j; ++z)
      ts.push_back({{"k", terms[z].k + 1}, {"coeff", terms[z].coeff.to_string()}});
    b["terms"] = std::move(ts);
    brackets.push_back(std::move(b));
    a = z;
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

Matrix matrix_from_json(const std::string& text) {
  json doc = parse_text(text);
  std::string base;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) fail_at("", "expected a row list or {\"matrix\": [...]}");
    doc = doc["matrix"];
    base = "/matrix";
  }
  if (!doc.is_array() || doc.empty()) fail_at(base, "matrix must be a non-empty row list");
  const std::size_t rows = doc.size();
  std::vector<Vector> rv;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string path = base + "/" + std::to_string(r);
    if (!doc[r].is_array()) fail_at(path, "row must be an array");
    if (doc[r].size() != rows)
      fail_at(path, "matrix is not square (row has " + std::to_string(doc[r].size()) + " entries, expected " +
                        std::to_string(rows) + ")");
    Vector row;
    for (std::size_t c = 0; c < rows; ++c) row.push_back(scalar_at(doc[r][c], path + "/" + std::to_string(c)));
    rv.push_back(std::move(row));
  }
  return Matrix::from_rows(rv, rows);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
  return {{"text", p.to_string()}, {"coefficients", std::move(coeffs)}};
}

json to_json(const CompletenessReport& r) {
  return {{"complete", r.complete},           {"dim", r.dim},
          {"center_dim", r.center_dim},       {"dim_der", r.dim_der},
          {"dim_ad", r.dim_ad},               {"summed_center_det", r.summed_center_det.to_string()}};
}

json to_json(const CocompletenessReport& r) {
  return {{"cocomplete", r.cocomplete}, {"dim_z2", r.dim_z2},
          {"dim_b2", r.dim_b2},         {"b2", r.b2},
          {"coboundaries_closed", r.coboundaries_closed}, {"betti", r.betti}};
}

json to_json(const CohomologyReport& r) {
  return {{"cochain_dims", r.cochain_dims},
          {"cocycle_dims", r.cocycle_dims},
          {"coboundary_dims", r.coboundary_dims},
          {"betti", r.betti}};
}

json to_json(const LieAlgebra& L, const CohomologyBasis& b) {
  auto forms = [&](const std::vector<Vector>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
      json coords = json::array();
      for (const auto& s : v) coords.push_back(s.to_string());
      out.push_back({{"form", format_form(L, b.monomials, v)}, {"coords", std::move(coords)}});
    }
    return out;
  };
  json monomials = json::array();
  for (const auto& m : b.monomials) monomials.push_back(format_form(L, {m}, Vector{Scalar(1)}));
  return {{"degree", b.degree},
          {"monomials", std::move(monomials)},
          {"cocycles", forms(b.cocycles)},
          {"coboundaries", forms(b.coboundaries)},
          {"representatives", forms(b.representatives)},
          {"betti", b.representatives.size()}};
}

json to_json(const EigenvalueReport& r) {
  return {{"cocomplete", r.cocomplete},
          {"invertible", r.invertible},
          {"eigen_pair_obstruction", r.eigen_pair_obstruction},
          {"char_poly", to_json(r.char_poly)},
          {"pair_gcd", to_json(r.pair_gcd)}};
}

json to_json(const ProportionalSimilarity& p) {
  json a = json::array(), b = json::array();
  for (const auto& q : p.invariants_first) a.push_back(q.to_string());
  for (const auto& q : p.invariants_scaled) b.push_back(q.to_string());
  return {{"alpha", p.alpha.to_string()}, {"invariants_first", std::move(a)}, {"invariants_scaled", std::move(b)}};
}

namespace {

json identifications(const std::vector<Identification>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back({{"first", id.first}, {"second", id.second}, {"alpha", id.alpha.to_string()}});
  return out;
}

json instances(const std::vector<ClassifiedInstance>& xs) {
  json out = json::array();
  for (const auto& x : xs)
    out.push_back({{"label", x.label}, {"parameter", x.parameter}, {"D", matrix_to_json(x.D)}, {"cocomplete", x.cocomplete}});
  return out;
}

}  // namespace

json to_json(const Classification3& c) {
  json fams = json::array();
  for (const auto& f : c.families)
    fams.push_back({{"name", f.name},
                    {"brackets", f.brackets},
                    {"constraint", f.constraint},
                    {"representative", f.representative},
                    {"samples", instances(f.samples)},
                    {"rejected", instances(f.rejected)},
                    {"identifications", identifications(f.identifications)}});
  return {{"field", to_string(c.field)},
          {"family_count", c.families.size()},
          {"families", std::move(fams)},
          {"sample_grid", c.sample_grid},
          {"cross_family", identifications(c.cross_family)},
          {"absorbed", identifications(c.absorbed)}};
}

json to_json(const CatalogEntry& e) {
  json out = {{"name", e.name},
              {"dim", e.dim},
              {"brackets", e.brackets},
              {"parameters", e.parameters},
              {"constraint", e.constraint},
              {"real_only", e.real_only},
              {"listed_complete", e.listed_complete},
              {"listed_cocomplete", e.listed_cocomplete},
              {"almost_abelian", e.almost_abelian},
              {"control", e.control},
              {"expect_complete", e.expect_complete},
              {"expect_cocomplete", e.expect_cocomplete}};
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

json to_json(const CatalogCheck& c) {
  json params = json::array();
  for (const auto& p : c.params) params.push_back(p.to_string());
  return {{"name", c.name},
          {"params", std::move(params)},
          {"field", to_string(c.field)},
          {"complete", c.complete},
          {"cocomplete", c.cocomplete},
          {"complete_ok", c.complete_ok},
          {"cocomplete_ok", c.cocomplete_ok}};
}

json to_json(const ExtensionWitness& w) {
  json el = json::array();
  for (const auto& s : w.element) el.push_back(s.to_string());
  json out = {{"kind", to_string(w.kind)}, {"element", std::move(el)}};
  if (w.basis_change.rows() > 0) out["basis_change"] = matrix_to_json(w.basis_change);
  return out;
}

}  // namespace liecc
