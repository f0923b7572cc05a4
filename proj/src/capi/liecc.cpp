#include "liecc/liecc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "liecc/document.hpp"
#include "liecc/errors.hpp"

struct liecc_algebra {
  liecc::LieAlgebra value;
};

struct liecc_matrix {
  liecc::Matrix value;
};

namespace {

thread_local std::string last_error;

liecc::Field to_field(liecc_field f) { return f == LIECC_FIELD_COMPLEX ? liecc::Field::complex : liecc::Field::real; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body and maps exceptions onto status codes.
template <class F>
liecc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LIECC_OK;
  } catch (const liecc::InputError& e) {
    last_error = e.what();
    return LIECC_ERR_INPUT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return LIECC_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return LIECC_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error: unknown exception";
    return LIECC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw liecc::InputError(std::string(what) + " is null");
}

template <class Out>
void emit(const liecc::json& j, Out** out) {
  *out = dup_string(j.dump(2));
}

}  // namespace

extern "C" {

const char* liecc_version(void) { return "1.0.0"; }

const char* liecc_last_error(void) { return last_error.c_str(); }

void liecc_string_free(char* s) { std::free(s); }

liecc_status liecc_algebra_from_json(const char* json, liecc_algebra** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new liecc_algebra{liecc::algebra_from_json(std::string(json))};
  });
}

liecc_status liecc_algebra_to_json(const liecc_algebra* a, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    emit(liecc::algebra_to_json(a->value), out);
  });
}

liecc_status liecc_algebra_with_field(const liecc_algebra* a, liecc_field field, liecc_algebra** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = new liecc_algebra{a->value.with_field(to_field(field))};
  });
}

void liecc_algebra_free(liecc_algebra* a) { delete a; }

size_t liecc_algebra_dim(const liecc_algebra* a) { return a ? a->value.dim() : 0; }

liecc_field liecc_algebra_field(const liecc_algebra* a) {
  return a && a->value.field() == liecc::Field::complex ? LIECC_FIELD_COMPLEX : LIECC_FIELD_REAL;
}

liecc_status liecc_check_json(const liecc_algebra* a, const char* subject, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(subject, "subject");
    need(out, "out");
    const std::string s(subject);
    if (s != "complete" && s != "cocomplete" && s != "both")
      throw liecc::InputError("unknown subject '" + s + "' (expected complete, cocomplete, both)");
    liecc::json j;
    j["field"] = liecc::to_string(a->value.field());
    j["dim"] = a->value.dim();
    if (s != "cocomplete") j["complete"] = liecc::to_json(liecc::is_complete(a->value));
    if (s != "complete") j["cocomplete"] = liecc::to_json(liecc::is_cocomplete(a->value));
    j["betti"] = liecc::cohomology_report(a->value).betti;
    emit(j, out);
  });
}

liecc_status liecc_is_complete(const liecc_algebra* a, int* out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = liecc::is_complete(a->value).complete ? 1 : 0;
  });
}

liecc_status liecc_is_cocomplete(const liecc_algebra* a, int* out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = liecc::is_cocomplete(a->value).cocomplete ? 1 : 0;
  });
}

liecc_status liecc_betti(const liecc_algebra* a, size_t* out, size_t cap, size_t* count) {
  return guarded([&] {
    need(a, "algebra");
    need(count, "count");
    auto b = liecc::cohomology_report(a->value).betti;
    *count = b.size();
    if (cap < b.size()) throw liecc::InputError("betti: buffer holds " + std::to_string(cap) + ", need " +
                                                std::to_string(b.size()));
    need(out, "out");
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i];
  });
}

liecc_status liecc_betti_json(const liecc_algebra* a, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    liecc::json j = liecc::to_json(liecc::cohomology_report(a->value));
    j["field"] = liecc::to_string(a->value.field());
    emit(j, out);
  });
}

liecc_status liecc_cohomology_json(const liecc_algebra* a, size_t degree, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    liecc::json j = liecc::to_json(a->value, liecc::cohomology_basis(a->value, degree));
    j["field"] = liecc::to_string(a->value.field());
    emit(j, out);
  });
}

liecc_status liecc_central_extension_json(const liecc_algebra* a, const char* omega_json, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(omega_json, "omega_json");
    need(out, "out");
    liecc::json doc;
    try {
      doc = liecc::json::parse(omega_json);
    } catch (const liecc::json::parse_error&) {
      throw liecc::InputError("omega: JSON syntax error");
    }
    if (!doc.is_object() || !doc.contains("omega") || !doc["omega"].is_array())
      throw liecc::InputError("omega: expected {\"omega\": [{\"i\", \"j\", \"value\"}]}");
    std::vector<liecc::BracketTerm> values;
    for (const auto& v : doc["omega"]) {
      if (!v.is_object() || !v.contains("i") || !v.contains("j") || !v.contains("value") ||
          !v["i"].is_number_integer() || !v["j"].is_number_integer() || v["i"].get<long>() < 1 ||
          v["j"].get<long>() < 1)
        throw liecc::InputError("omega: entries need 1-based integer i, j and a value");
      liecc::Scalar s = v["value"].is_number_integer() ? liecc::Scalar(v["value"].get<long>())
                        : v["value"].is_string()        ? liecc::Scalar::parse(v["value"].get<std::string>())
                                                        : throw liecc::InputError("omega: value must be a fraction string");
      values.push_back({static_cast<std::size_t>(v["i"].get<long>() - 1), static_cast<std::size_t>(v["j"].get<long>() - 1),
                        0, s});
    }
    auto omega = liecc::TwoCocycle::from_values(a->value, values);
    liecc::LieAlgebra B = liecc::central_extension(omega);
    liecc::json j;
    j["extension"] = liecc::algebra_to_json(B);
    auto w = liecc::central_split_witness(omega);
    j["split"] = w.has_value();
    if (w) {
      j["witness"] = liecc::to_json(*w);
      j["verified"] = liecc::verify_witness(B, *w, liecc::direct_sum(a->value, liecc::LieAlgebra::abelian(1, a->value.field())));
    }
    emit(j, out);
  });
}

liecc_status liecc_matrix_from_json(const char* json, liecc_matrix** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new liecc_matrix{liecc::matrix_from_json(std::string(json))};
  });
}

void liecc_matrix_free(liecc_matrix* m) { delete m; }

size_t liecc_matrix_size(const liecc_matrix* m) { return m ? m->value.rows() : 0; }

liecc_status liecc_almost_abelian_json(const liecc_matrix* d, liecc_field field, char** out) {
  return guarded([&] {
    need(d, "matrix");
    need(out, "out");
    const liecc::Field f = to_field(field);
    if (f == liecc::Field::real && !d->value.is_real()) throw liecc::InputError("Gaussian entries in real mode");
    liecc::json j;
    j["field"] = liecc::to_string(f);
    j["n"] = d->value.rows();
    j["D"] = liecc::matrix_to_json(d->value);
    j["eigenvalue_test"] = liecc::to_json(liecc::eigenvalue_cocomplete(d->value));
    j["b2_via_wedge_action"] = liecc::h2_via_wedge_action(d->value);
    if (!d->value.is_zero()) {
      auto aa = liecc::make_almost_abelian(d->value, f);
      j["algebra"] = liecc::algebra_to_json(aa.algebra);
      j["cohomology"] = liecc::to_json(liecc::is_cocomplete(aa.algebra));
    }
    emit(j, out);
  });
}

liecc_status liecc_propsim_json(const liecc_matrix* d1, const liecc_matrix* d2, liecc_field field, char** out) {
  return guarded([&] {
    need(d1, "first matrix");
    need(d2, "second matrix");
    need(out, "out");
    const liecc::Field f = to_field(field);
    auto ps = liecc::proportionally_similar(d1->value, d2->value, f);
    liecc::json j;
    j["field"] = liecc::to_string(f);
    j["equivalent"] = ps.has_value();
    if (ps) j["witness"] = liecc::to_json(*ps);
    emit(j, out);
  });
}

liecc_status liecc_classify3_json(liecc_field field, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(liecc::to_json(liecc::classify_dim3(to_field(field))), out);
  });
}

liecc_status liecc_catalog_list(const char* filter, char** out) {
  return guarded([&] {
    need(out, "out");
    auto f = liecc::parse_filter(filter ? filter : "all");
    liecc::json entries = liecc::json::array();
    for (const auto& e : liecc::list_entries(f)) entries.push_back(liecc::to_json(e));
    emit(liecc::json{{"filter", liecc::to_string(f)}, {"entries", std::move(entries)}}, out);
  });
}

liecc_status liecc_catalog_instantiate(const char* name, const char* const* params, size_t n_params,
                                       liecc_field field, liecc_algebra** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    if (n_params) need(params, "params");
    std::vector<liecc::Scalar> ps;
    for (std::size_t i = 0; i < n_params; ++i) {
      need(params[i], "parameter");
      ps.push_back(liecc::Scalar::parse(params[i]));
    }
    *out = new liecc_algebra{liecc::instantiate(name, ps, to_field(field))};
  });
}

liecc_status liecc_catalog_describe(const char* name, char** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    const auto& e = liecc::find_entry(name);
    liecc::json j = liecc::to_json(e);
    liecc::json samples = liecc::json::array();
    for (const auto& p : liecc::sample_parameters(e)) {
      liecc::json row = liecc::json::array();
      for (const auto& s : p) row.push_back(s.to_string());
      samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    emit(j, out);
  });
}

liecc_status liecc_catalog_verify(char** out) {
  return guarded([&] {
    need(out, "out");
    liecc::json rows = liecc::json::array();
    std::size_t failures = 0;
    for (const auto& c : liecc::verify_catalog()) {
      if (!c.complete_ok || !c.cocomplete_ok) ++failures;
      rows.push_back(liecc::to_json(c));
    }
    emit(liecc::json{{"checks", std::move(rows)}, {"failures", failures}}, out);
  });
}

}  // extern "C"
