#include "liecc/catalog.hpp"

#include <cctype>

#include "liecc/cohomology.hpp"
#include "liecc/derivations.hpp"
#include "liecc/errors.hpp"

namespace liecc {

namespace {

using Params = std::vector<Scalar>;
using Maker = std::function<LieAlgebra(const Params&, Field)>;
using Admissible = std::function<bool(const Params&)>;

struct Row {
  CatalogEntry entry;
  Maker make;
  Admissible admissible;
};

// 1-based bracket term [e_i, e_j] += c e_k.
BracketTerm t(std::size_t i, std::size_t j, std::size_t k, Scalar c) { return {i - 1, j - 1, k - 1, std::move(c)}; }

bool nonzero(std::initializer_list<Scalar> xs) {
  for (const auto& x : xs)
    if (x.is_zero()) return false;
  return true;
}

Admissible any_params() {
  return [](const Params&) { return true; };
}

// Almost abelian row: [e0, e_j] = sum_k D(k, j) e_k with e0 stored last.
Maker from_d(std::function<Matrix(const Params&)> d) {
  return [d = std::move(d)](const Params& p, Field f) {
    Matrix D = d(p);
    return semidirect_1dim(LieAlgebra::abelian(D.rows(), f), D);
  };
}

Maker from_terms(std::size_t dim, std::function<std::vector<BracketTerm>(const Params&)> terms) {
  return [dim, terms = std::move(terms)](const Params& p, Field f) { return LieAlgebra(dim, terms(p), f); };
}

LieAlgebra sl2(Field f) { return LieAlgebra(3, {t(1, 2, 2, 1), t(1, 3, 3, -1), t(2, 3, 1, 1)}, f); }
LieAlgebra so3(Field f) { return LieAlgebra(3, {t(1, 2, 3, 1), t(1, 3, 2, -1), t(2, 3, 1, 1)}, f); }
LieAlgebra aff(Field f) { return LieAlgebra(2, {t(1, 2, 2, 1)}, f); }

CatalogEntry entry(std::string name, std::size_t dim, std::string brackets) {
  CatalogEntry e;
  e.name = std::move(name);
  e.dim = dim;
  e.brackets = std::move(brackets);
  return e;
}

std::vector<Row> build_rows() {
  std::vector<Row> rows;
  const Scalar one(1);

  auto add = [&rows](CatalogEntry e, Maker m, Admissible a) {
    rows.push_back({std::move(e), std::move(m), std::move(a)});
  };
  auto both = [](CatalogEntry e) {
    e.listed_complete = e.listed_cocomplete = true;
    e.expect_complete = e.expect_cocomplete = true;
    return e;
  };
  auto cocomplete_only = [](CatalogEntry e) {
    e.listed_cocomplete = e.expect_cocomplete = true;
    return e;
  };

  {
    auto e = both(entry("aff", 2, "[e1,e2] = e2"));
    e.almost_abelian = true;
    add(e, [](const Params&, Field f) { return aff(f); }, any_params());
  }
  add(both(entry("sl2", 3, "[e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = e1")),
      [](const Params&, Field f) { return sl2(f); }, any_params());
  {
    auto e = both(entry("so3", 3, "[e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1"));
    e.real_only = true;
    add(e, [](const Params&, Field f) { return so3(f); }, any_params());
  }
  {
    auto e = entry("aff+aff", 4, "[e1,e2] = e2, [e3,e4] = e4");
    e.listed_complete = e.expect_complete = true;
    add(e, [](const Params&, Field f) { return direct_sum(aff(f), aff(f)); }, any_params());
  }
  {
    auto e = entry("s_{4,12}", 4, "[e1,e3] = e1, [e1,e4] = -e2, [e2,e3] = e2, [e2,e4] = e1");
    e.listed_complete = e.expect_complete = true;
    add(e, from_terms(4, [](const Params&) {
          return std::vector<BracketTerm>{t(1, 3, 1, 1), t(1, 4, 2, -1), t(2, 3, 2, 1), t(2, 4, 1, 1)};
        }),
        any_params());
  }
  {
    auto e = both(entry("sl2+K", 4, "sl2 on e1,e2,e3; e4 central"));
    e.note = "Listed as complete, but e4 spans the center.";
    add(e, [](const Params&, Field f) { return direct_sum(sl2(f), LieAlgebra::abelian(1, f)); }, any_params());
  }
  {
    auto e = both(entry("so3+R", 4, "so3 on e1,e2,e3; e4 central"));
    e.real_only = true;
    e.note = "Listed as complete, but e4 spans the center.";
    add(e, [](const Params&, Field f) { return direct_sum(so3(f), LieAlgebra::abelian(1, f)); }, any_params());
  }

  {
    auto e = cocomplete_only(entry("s_{3,1}", 3, "[e1,e3] = e1, [e2,e3] = a e2"));
    e.parameters = {"a"};
    e.constraint = "a ≠ 0, -1";
    add(e, from_terms(3, [](const Params& p) { return std::vector<BracketTerm>{t(1, 3, 1, 1), t(2, 3, 2, p[0])}; }),
        [](const Params& p) { return nonzero({p[0], p[0] + 1}); });
  }
  add(cocomplete_only(entry("s_{3,2}", 3, "[e1,e3] = e1, [e2,e3] = e1 + e2")), from_terms(3, [](const Params&) {
        return std::vector<BracketTerm>{t(1, 3, 1, 1), t(2, 3, 1, 1), t(2, 3, 2, 1)};
      }),
      any_params());
  {
    auto e = cocomplete_only(entry("s_{3,3}", 3, "[e1,e3] = a e1 - e2, [e2,e3] = e1 + a e2"));
    e.parameters = {"a"};
    e.constraint = "a ≠ 0";
    e.real_only = true;
    add(e, from_terms(3, [](const Params& p) {
          return std::vector<BracketTerm>{t(1, 3, 1, p[0]), t(1, 3, 2, -1), t(2, 3, 1, 1), t(2, 3, 2, p[0])};
        }),
        [](const Params& p) { return nonzero({p[0]}); });
  }
  add(cocomplete_only(entry("s_{4,2}", 4, "[e1,e4] = e1, [e2,e4] = e1 + e2, [e3,e4] = e2 + e3")),
      from_terms(4, [](const Params&) {
        return std::vector<BracketTerm>{t(1, 4, 1, 1), t(2, 4, 1, 1), t(2, 4, 2, 1), t(3, 4, 2, 1), t(3, 4, 3, 1)};
      }),
      any_params());
  {
    auto e = cocomplete_only(entry("s_{4,3}", 4, "[e1,e4] = e1, [e2,e4] = a e2, [e3,e4] = b e3"));
    e.parameters = {"a", "b"};
    e.constraint = "a, b ≠ 0; 1 + a, 1 + b, a + b ≠ 0";
    add(e, from_terms(4, [](const Params& p) {
          return std::vector<BracketTerm>{t(1, 4, 1, 1), t(2, 4, 2, p[0]), t(3, 4, 3, p[1])};
        }),
        [one](const Params& p) { return nonzero({p[0], p[1], one + p[0], one + p[1], p[0] + p[1]}); });
  }
  {
    auto e = cocomplete_only(entry("s_{4,4}", 4, "[e1,e4] = e1, [e2,e4] = e1 + e2, [e3,e4] = a e3"));
    e.parameters = {"a"};
    e.constraint = "a ≠ 0, -1";
    add(e, from_terms(4, [](const Params& p) {
          return std::vector<BracketTerm>{t(1, 4, 1, 1), t(2, 4, 1, 1), t(2, 4, 2, 1), t(3, 4, 3, p[0])};
        }),
        [](const Params& p) { return nonzero({p[0], p[0] + 1}); });
  }
  {
    auto e = cocomplete_only(entry("s_{4,5}", 4, "[e1,e4] = a e1, [e2,e4] = b e2 - e3, [e3,e4] = e2 + b e3"));
    e.parameters = {"a", "b"};
    e.constraint = "a, b ≠ 0";
    e.real_only = true;
    add(e, from_terms(4, [](const Params& p) {
          return std::vector<BracketTerm>{t(1, 4, 1, p[0]), t(2, 4, 2, p[1]), t(2, 4, 3, -1), t(3, 4, 2, 1),
                                          t(3, 4, 3, p[1])};
        }),
        [](const Params& p) { return nonzero({p[0], p[1]}); });
  }
  {
    auto e = cocomplete_only(entry("s_{4,8}", 4, "[e1,e4] = (1 + a) e1, [e2,e4] = e2, [e3,e4] = a e3"));
    e.parameters = {"a"};
    e.constraint = "a ≠ 0, -1, -2, -1/2";
    e.note = "Exclusions are the values giving a zero eigenvalue or an opposite eigenvalue pair.";
    add(e, from_terms(4, [one](const Params& p) {
          return std::vector<BracketTerm>{t(1, 4, 1, one + p[0]), t(2, 4, 2, 1), t(3, 4, 3, p[0])};
        }),
        [one](const Params& p) { return nonzero({p[0], p[0] + one, p[0] + Scalar(2), Scalar(2) * p[0] + one}); });
  }
  {
    auto e = cocomplete_only(entry("s_{4,9}", 4, "[e1,e4] = 2a e1, [e2,e4] = a e2 - e3, [e3,e4] = e2 + a e3"));
    e.parameters = {"a"};
    e.constraint = "a ≠ 0";
    e.real_only = true;
    add(e, from_terms(4, [](const Params& p) {
          return std::vector<BracketTerm>{t(1, 4, 1, Scalar(2) * p[0]), t(2, 4, 2, p[0]), t(2, 4, 3, -1),
                                          t(3, 4, 2, 1), t(3, 4, 3, p[0])};
        }),
        [](const Params& p) { return nonzero({p[0]}); });
  }
  add(cocomplete_only(entry("s_{4,10}", 4, "[e1,e4] = 2 e1, [e2,e4] = e2, [e3,e4] = e2 + e3")),
      from_terms(4, [](const Params&) {
        return std::vector<BracketTerm>{t(1, 4, 1, 2), t(2, 4, 2, 1), t(3, 4, 2, 1), t(3, 4, 3, 1)};
      }),
      any_params());

  auto aa = [](std::string name, std::size_t dim, std::string brackets) {
    auto e = entry(std::move(name), dim, std::move(brackets));
    e.almost_abelian = true;
    e.expect_cocomplete = true;
    return e;
  };
  {
    auto e = aa("C_{3.1}", 3, "[e0,e1] = e1, [e0,e2] = λ e2");
    e.parameters = {"λ"};
    e.constraint = "λ ≠ 0, -1";
    add(e, from_d([](const Params& p) { return Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), p[0]}}; }),
        [](const Params& p) { return nonzero({p[0], p[0] + 1}); });
  }
  add(aa("C_{3.2}", 3, "[e0,e1] = e1, [e0,e2] = e1 + e2"),
      from_d([](const Params&) { return Matrix{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}}; }), any_params());
  {
    auto e = aa("R_{3.3}", 3, "[e0,e1] = λ e1 - e2, [e0,e2] = e1 + λ e2");
    e.parameters = {"λ"};
    e.constraint = "λ ≠ 0";
    e.real_only = true;
    add(e, from_d([](const Params& p) { return Matrix{{p[0], Scalar(1)}, {Scalar(-1), p[0]}}; }),
        [](const Params& p) { return nonzero({p[0]}); });
  }
  {
    auto e = aa("C_{4.1}", 4, "[e0,e1] = e1, [e0,e2] = λ e2, [e0,e3] = μ e3");
    e.parameters = {"λ", "μ"};
    e.constraint = "λ, μ ≠ 0, -1; λ + μ ≠ 0";
    add(e, from_d([](const Params& p) {
          const Scalar z(0);
          return Matrix{{Scalar(1), z, z}, {z, p[0], z}, {z, z, p[1]}};
        }),
        [](const Params& p) { return nonzero({p[0], p[1], p[0] + 1, p[1] + 1, p[0] + p[1]}); });
  }
  {
    auto e = aa("C_{4.2}", 4, "[e0,e1] = e1, [e0,e2] = λ e2, [e0,e3] = e2 + λ e3");
    e.parameters = {"λ"};
    e.constraint = "λ ≠ 0, -1";
    add(e, from_d([](const Params& p) {
          const Scalar z(0);
          return Matrix{{Scalar(1), z, z}, {z, p[0], Scalar(1)}, {z, z, p[0]}};
        }),
        [](const Params& p) { return nonzero({p[0], p[0] + 1}); });
  }
  {
    auto e = aa("R_{4.3}", 4, "[e0,e1] = λ e1, [e0,e2] = μ e2 - e3, [e0,e3] = e2 + μ e3");
    e.parameters = {"λ", "μ"};
    e.constraint = "λ, μ ≠ 0";
    e.real_only = true;
    add(e, from_d([](const Params& p) {
          const Scalar z(0);
          return Matrix{{p[0], z, z}, {z, p[1], Scalar(1)}, {z, Scalar(-1), p[1]}};
        }),
        [](const Params& p) { return nonzero({p[0], p[1]}); });
  }
  add(aa("C_{4.4}", 4, "[e0,e1] = e1, [e0,e2] = e1 + e2, [e0,e3] = e2 + e3"), from_d([](const Params&) {
        const Scalar z(0), o(1);
        return Matrix{{o, o, z}, {z, o, o}, {z, z, o}};
      }),
      any_params());

  auto control = [](std::string name, std::size_t dim, std::string brackets) {
    auto e = entry(std::move(name), dim, std::move(brackets));
    e.control = true;
    return e;
  };
  add(control("heisenberg", 3, "[e1,e2] = e3"), from_terms(3, [](const Params&) {
        return std::vector<BracketTerm>{t(1, 2, 3, 1)};
      }),
      any_params());
  add(control("abelian2", 2, "none"), [](const Params&, Field f) { return LieAlgebra::abelian(2, f); },
      any_params());
  add(control("filiform4", 4, "[e1,e2] = e3, [e1,e3] = e4"), from_terms(4, [](const Params&) {
        return std::vector<BracketTerm>{t(1, 2, 3, 1), t(1, 3, 4, 1)};
      }),
      any_params());
  (void)one;
  return rows;
}

const std::vector<Row>& rows() {
  static const std::vector<Row> r = build_rows();
  return r;
}

// "s_{4,12}", "s4,12" and "S412" all name the same entry.
std::string name_key(std::string_view name) {
  std::string key;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '+') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return key;
}

const Row& find_row(const std::string& name) {
  for (const auto& r : rows())
    if (r.entry.name == name) return r;
  const std::string key = name_key(name);
  for (const auto& r : rows())
    if (name_key(r.entry.name) == key) return r;
  throw InputError("unknown catalog entry '" + name + "'");
}

}  // namespace

const char* to_string(CatalogFilter f) {
  switch (f) {
    case CatalogFilter::all: return "all";
    case CatalogFilter::complete: return "complete";
    case CatalogFilter::cocomplete: return "cocomplete";
    case CatalogFilter::almost_abelian: return "almost_abelian";
  }
  return "?";
}

CatalogFilter parse_filter(std::string_view s) {
  if (s == "all") return CatalogFilter::all;
  if (s == "complete") return CatalogFilter::complete;
  if (s == "cocomplete") return CatalogFilter::cocomplete;
  if (s == "almost_abelian" || s == "almost-abelian") return CatalogFilter::almost_abelian;
  throw InputError("unknown filter '" + std::string(s) + "' (expected all, complete, cocomplete, almost_abelian)");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : rows()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

std::vector<CatalogEntry> list_entries(CatalogFilter filter) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries()) {
    bool keep = filter == CatalogFilter::all || (filter == CatalogFilter::complete && e.listed_complete) ||
                (filter == CatalogFilter::cocomplete && e.listed_cocomplete) ||
                (filter == CatalogFilter::almost_abelian && e.almost_abelian);
    if (keep) out.push_back(e);
  }
  return out;
}

const CatalogEntry& find_entry(const std::string& name) { return find_row(name).entry; }

bool parameters_admissible(const CatalogEntry& e, const std::vector<Scalar>& params) {
  return params.size() == e.parameters.size() && find_row(e.name).admissible(params);
}

LieAlgebra instantiate(const std::string& name, const std::vector<Scalar>& params, Field field) {
  const Row& r = find_row(name);
  const CatalogEntry& e = r.entry;
  if (e.real_only && field != Field::real) throw InputError(e.name + " is only defined over the reals");
  if (params.size() != e.parameters.size())
    throw InputError(e.name + " takes " + std::to_string(e.parameters.size()) + " parameter(s), got " +
                     std::to_string(params.size()));
  if (field == Field::real)
    for (const auto& p : params)
      if (!p.is_real()) throw InputError(e.name + ": Gaussian parameter in real mode");
  if (!r.admissible(params)) {
    std::string shown;
    for (std::size_t i = 0; i < params.size(); ++i)
      shown += (i ? ", " : "") + e.parameters[i] + " = " + params[i].to_string();
    throw InputError(e.name + ": parameters " + shown + " violate the constraint " + e.constraint);
  }
  return r.make(params, field);
}

std::vector<std::vector<Scalar>> sample_parameters(const CatalogEntry& e) {
  const std::vector<Scalar> grid{Scalar(-2), Scalar(1, 2), Scalar(2), Scalar(3)};
  const Row& r = find_row(e.name);
  std::vector<std::vector<Scalar>> out;
  if (e.parameters.empty()) return {{}};
  if (e.parameters.size() == 1) {
    for (const auto& a : grid)
      if (r.admissible({a})) out.push_back({a});
    return out;
  }
  for (const auto& a : grid)
    for (const auto& b : grid)
      if (r.admissible({a, b})) out.push_back({a, b});
  return out;
}

std::vector<CatalogCheck> verify_catalog() {
  std::vector<CatalogCheck> out;
  for (const auto& e : catalog_entries()) {
    std::vector<Field> fields{Field::real};
    if (!e.real_only) fields.push_back(Field::complex);
    for (Field f : fields)
      for (const auto& p : sample_parameters(e)) {
        LieAlgebra L = instantiate(e.name, p, f);
        CatalogCheck c;
        c.name = e.name;
        c.params = p;
        c.field = f;
        c.complete = is_complete(L).complete;
        c.cocomplete = is_cocomplete(L).cocomplete;
        c.complete_ok = c.complete == e.expect_complete;
        c.cocomplete_ok = c.cocomplete == e.expect_cocomplete;
        out.push_back(std::move(c));
      }
  }
  return out;
}

}  // namespace liecc
