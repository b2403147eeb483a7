#include "s4lie.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <new>

#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"
#include "s4lie/io.hpp"
#include "s4lie/kantor.hpp"
#include "s4lie/parallel.hpp"

struct s4_algebra {
  s4lie::Algebra a;
};
struct s4_delta {
  s4lie::DeltaMap d;
};
struct s4_lie {
  s4lie::LieAlgebra l;
  std::optional<s4lie::GroupAction> action;
};
struct s4_report {
  s4lie::Report r;
};

namespace {

using namespace s4lie;

thread_local std::string last_error;

s4_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::format: return S4_ERR_FORMAT;
    case ErrorKind::context: return S4_ERR_CONTEXT;
    case ErrorKind::shape: return S4_ERR_SHAPE;
    case ErrorKind::invalid_involution: return S4_ERR_INVALID_INVOLUTION;
    case ErrorKind::invalid_form: return S4_ERR_INVALID_FORM;
    case ErrorKind::missing_structure: return S4_ERR_MISSING_STRUCTURE;
    case ErrorKind::axiom: return S4_ERR_AXIOM;
    case ErrorKind::construction: return S4_ERR_CONSTRUCTION;
    case ErrorKind::underdetermined: return S4_ERR_UNDERDETERMINED;
    case ErrorKind::not_a_triple: return S4_ERR_NOT_A_TRIPLE;
    case ErrorKind::containment: return S4_ERR_CONTAINMENT;
    case ErrorKind::field_capability: return S4_ERR_FIELD_CAPABILITY;
    case ErrorKind::action_structure: return S4_ERR_ACTION_STRUCTURE;
    case ErrorKind::grading: return S4_ERR_GRADING;
    case ErrorKind::unknown_name: return S4_ERR_UNKNOWN_NAME;
    case ErrorKind::precondition: return S4_ERR_PRECONDITION;
  }
  return S4_ERR_INTERNAL;
}

template <class F>
s4_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return S4_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return S4_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return S4_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return S4_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return S4_ERR_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
  return *p;
}

const char* need(const char* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
  return p;
}

template <class T>
T*& out_slot(T** p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
  *p = nullptr;
  return *p;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

CheckOptions options(const s4_check_options* opt) {
  CheckOptions o;
  if (!opt) return o;
  o.force_exhaustive = opt->mode == S4_MODE_FULL;
  o.force_sampled = opt->mode == S4_MODE_SAMPLE;
  if (opt->count) o.samples = opt->count;
  o.seed = opt->seed;
  return o;
}

void emit(s4_report** out, Report r) {
  if (out) *out = new s4_report{std::move(r)};
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = catalog_names();
  return n;
}

}  // namespace

#define S4_CALL(...) return guard([&] { __VA_ARGS__; })

extern "C" {

const char* s4_last_error(void) { return last_error.c_str(); }

const char* s4_status_name(s4_status s) {
  switch (s) {
    case S4_OK: return "ok";
    case S4_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case S4_ERR_INTERNAL: return "internal";
    default: break;
  }
  for (int k = 0; k <= static_cast<int>(ErrorKind::precondition); ++k)
    if (status_of(static_cast<ErrorKind>(k)) == s) return error_kind_name(static_cast<ErrorKind>(k));
  return "unknown";
}

void s4_string_free(char* s) { std::free(s); }

s4_status s4_set_threads(unsigned n) { S4_CALL(set_thread_count(n)); }

size_t s4_catalog_count(void) { return names().size(); }

const char* s4_catalog_name(size_t i) { return i < names().size() ? names()[i].c_str() : nullptr; }

s4_status s4_catalog_build(const char* name, s4_algebra** algebra, s4_delta** delta, s4_kind* kind) {
  S4_CALL({
    auto& a = out_slot(algebra, "algebra");
    if (delta) *delta = nullptr;
    CatalogEntry e = catalog_entry(need(name, "name"));
    a = new s4_algebra{e.datum.algebra};
    if (delta && (e.kind == EntryKind::sta || e.kind == EntryKind::lrta)) *delta = new s4_delta{e.datum.delta};
    if (kind) *kind = static_cast<s4_kind>(e.kind);
  });
}

s4_status s4_catalog_check(const char* name, const s4_check_options* opt, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    emit(out, check_entry(catalog_entry(need(name, "name")), options(opt)));
  });
}

s4_status s4_algebra_from_json(const char* text, s4_algebra** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    json j;
    try {
      j = json::parse(need(text, "text"));
    } catch (const json::exception& e) {
      throw FormatError(e.what());
    }
    slot = new s4_algebra{algebra_from_json(j)};
  });
}

s4_status s4_algebra_to_json(const s4_algebra* a, char** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    slot = copy_string(algebra_to_json(need(a, "algebra").a).dump());
  });
}

size_t s4_algebra_dim(const s4_algebra* a) { return a ? a->a.dim() : 0; }

s4_status s4_algebra_validate(const s4_algebra* a) { S4_CALL(validate(need(a, "algebra").a)); }

s4_status s4_algebra_extend(const s4_algebra* a, const char* field, s4_algebra** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    slot = new s4_algebra{extend_scalars(need(a, "algebra").a, Field::parse(need(field, "field")))};
  });
}

void s4_algebra_free(s4_algebra* a) { delete a; }

s4_status s4_delta_from_json(const char* text, const s4_algebra* a, s4_delta** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    json j;
    try {
      j = json::parse(need(text, "text"));
    } catch (const json::exception& e) {
      throw FormatError(e.what());
    }
    const Algebra& alg = need(a, "algebra").a;
    DeltaMap d = delta_from_json(j, alg.field());
    if (d.dim() != alg.dim()) throw ShapeError("delta dimension differs from algebra dimension");
    slot = new s4_delta{std::move(d)};
  });
}

s4_status s4_delta_to_json(const s4_delta* d, char** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    slot = copy_string(delta_to_json(need(d, "delta").d).dump());
  });
}

void s4_delta_free(s4_delta* d) { delete d; }

s4_status s4_check_sta(const s4_algebra* a, const s4_delta* d, const s4_check_options* opt, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    emit(out, check_sta(need(a, "algebra").a, need(d, "delta").d, options(opt)));
  });
}

s4_status s4_check_lrta(const s4_algebra* a, const s4_delta* d, const s4_check_options* opt, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    emit(out, check_lrta(need(a, "algebra").a, need(d, "delta").d, options(opt)));
  });
}

s4_status s4_check_composition(const s4_algebra* a, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    const Algebra& alg = need(a, "algebra").a;
    const bool unital = alg.has_involution() && unit_element(alg).has_value();
    emit(out, unital ? check_hurwitz(alg) : check_symmetric_composition(alg));
  });
}

s4_status s4_check_degree5(const s4_algebra* a, size_t count, uint64_t seed, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    emit(out, check_degree5(need(a, "algebra").a, count, seed));
  });
}

int s4_report_passed(const s4_report* r) { return r && r->r.passed() ? 1 : 0; }

s4_status s4_report_to_json(const s4_report* r, char** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    const Report& rep = need(r, "report").r;
    json j = {{"title", rep.title()}, {"status", rep.passed() ? "pass" : "fail"}, {"checks", rep.to_json()}};
    slot = copy_string(j.dump());
  });
}

s4_status s4_report_to_text(const s4_report* r, char** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    slot = copy_string(need(r, "report").r.to_text());
  });
}

void s4_report_free(s4_report* r) { delete r; }

s4_status s4_lie_construct(const s4_algebra* a, const s4_delta* d, int lrta, int force, s4_lie** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    BuildOptions opt;
    opt.force = force != 0;
    const Algebra& alg = need(a, "algebra").a;
    const DeltaMap& del = need(d, "delta").d;
    Construction g = lrta ? construct_g_lrta(alg, del, opt) : construct_g_sta(alg, del, opt);
    slot = new s4_lie{std::move(g.lie), std::move(g.action)};
  });
}

s4_status s4_lie_from_json(const char* text, s4_lie** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    json j;
    try {
      j = json::parse(need(text, "text"));
    } catch (const json::exception& e) {
      throw FormatError(e.what());
    }
    LieFile f = lie_from_json(j);
    slot = new s4_lie{std::move(f.lie), std::move(f.action)};
  });
}

s4_status s4_lie_to_json(const s4_lie* l, char** out) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    const s4_lie& lie = need(l, "lie");
    slot = copy_string(lie_to_json(lie.l, lie.action ? &*lie.action : nullptr).dump());
  });
}

size_t s4_lie_dim(const s4_lie* l) { return l ? l->l.dim() : 0; }

void s4_lie_free(s4_lie* l) { delete l; }

s4_status s4_lie_verify(const s4_lie* l, s4_mode jacobi, size_t count, uint64_t seed, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    const s4_lie& lie = need(l, "lie");
    JacobiMode mode = JacobiMode::automatic(lie.l.dim(), seed);
    if (jacobi == S4_MODE_FULL) mode = JacobiMode{};
    if (jacobi == S4_MODE_SAMPLE) mode = JacobiMode::sampled(20000, seed);
    if (count && !mode.full) mode.samples = count;
    Report r("Lie algebra checks");
    r.merge(verify_jacobi(lie.l, mode));
    r.merge(verify_grading(lie.l));
    if (lie.action) r.merge(verify_group_action(lie.l, *lie.action));
    emit(out, std::move(r));
  });
}

s4_status s4_lie_extract(const s4_lie* l, s4_algebra** algebra, s4_delta** delta, int* lrta) {
  S4_CALL({
    auto& sa = out_slot(algebra, "algebra");
    auto& sd = out_slot(delta, "delta");
    const s4_lie& lie = need(l, "lie");
    if (!lie.action) throw Error(ErrorKind::action_structure, "Lie algebra has no group action");
    Extracted e = extract_coordinate_algebra(lie.l, *lie.action);
    sa = new s4_algebra{std::move(e.algebra)};
    sd = new s4_delta{std::move(e.delta)};
    if (lrta) *lrta = e.lrta ? 1 : 0;
  });
}

s4_status s4_lie_simple(const s4_lie* l, uint64_t seed, s4_verdict* verdict, s4_report** out) {
  S4_CALL({
    const s4_lie& lie = need(l, "lie");
    if (!lie.action) throw Error(ErrorKind::action_structure, "Lie algebra has no group action");
    SimplicityResult res = is_simple_with_action(lie.l, *lie.action, seed);
    if (verdict) *verdict = static_cast<s4_verdict>(res.verdict);
    Report r("simplicity with action");
    json w = nullptr;
    if (res.verdict == SimpleVerdict::invariant_ideal) w = {{"ideal_dim", res.ideal.dim()}};
    r.expect(res.verdict == SimpleVerdict::simple, std::string("verdict ") + verdict_name(res.verdict), w, res.detail);
    emit(out, std::move(r));
  });
}

s4_status s4_magic_square_dim(size_t ds, size_t dt, size_t* dim) {
  S4_CALL({
    auto ok = [](size_t d) { return d == 1 || d == 2 || d == 4 || d == 8; };
    if (!ok(ds) || !ok(dt)) throw Error(ErrorKind::precondition, "dimensions must be 1, 2, 4 or 8");
    if (!dim) throw std::invalid_argument("dim is NULL");
    BuildOptions opt;
    opt.force = true;
    *dim = magic_square(ds, dt, opt).lie.dim();
  });
}

s4_status s4_kantor_build(const s4_algebra* a, s4_derivations der, const char* alpha, s4_lie** out,
                          s4_report** report) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    if (report) *report = nullptr;
    const Algebra& alg = need(a, "algebra").a;
    KantorAlgebra k = kantor_build(alg, der == S4_DER_FULL ? DerivationChoice::full : DerivationChoice::inner,
                                   Scalar::parse(need(alpha, "alpha"), alg.field()));
    if (report) {
      Report r("Kantor construction");
      r.merge(kantor_verify(k));
      r.merge(lemma41(alg, k.d), "lrt decomposition: ");
      r.merge(psi_check(k), "psi: ");
      emit(report, std::move(r));
    }
    slot = new s4_lie{k.lie, k.action()};
  });
}

s4_status s4_kantor_psi_check(const s4_algebra* a, s4_derivations der, const char* alpha, s4_report** out) {
  S4_CALL({
    out_slot(out, "out");
    const Algebra& alg = need(a, "algebra").a;
    const Subspace d = derivation_choice(alg, der == S4_DER_FULL ? DerivationChoice::full : DerivationChoice::inner);
    const Scalar al = Scalar::parse(need(alpha, "alpha"), alg.field());
    Report r("psi");
    r.merge(psi_check(kantor_build(alg, d, al)));
    r.merge(psi_iso_check(alg, d, al), "Psi: ");
    emit(out, std::move(r));
  });
}

s4_status s4_kantor_af(const s4_algebra* a, s4_derivations der, const char* const gamma[3], s4_lie** out,
                       s4_report** report) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    if (report) *report = nullptr;
    if (!gamma) throw std::invalid_argument("gamma is NULL");
    const Algebra& alg = need(a, "algebra").a;
    std::array<Scalar, 3> g;
    for (int i = 0; i < 3; ++i) g[i] = Scalar::parse(need(gamma[i], "gamma"), alg.field());
    AFAlgebra af = af_build(alg, g, der == S4_DER_FULL ? DerivationChoice::full : DerivationChoice::inner);
    GroupAction act = klein_action(af.lie);
    if (report) {
      Report r("Allison-Faulkner algebra");
      r.merge(verify_jacobi(af.lie, JacobiMode::automatic(af.lie.dim())));
      r.merge(verify_grading(af.lie));
      r.merge(verify_group_action(af.lie, act));
      emit(report, std::move(r));
    }
    slot = new s4_lie{std::move(af.lie), std::move(act)};
  });
}

s4_status s4_kantor_s4(const s4_algebra* a, s4_derivations der, s4_lie** out, s4_report** report) {
  S4_CALL({
    auto& slot = out_slot(out, "out");
    if (report) *report = nullptr;
    Algebra alg = need(a, "algebra").a;
    if (alg.field().is_rational()) alg = extend_scalars(alg, Field::quadratic(-1));
    KantorS4 s = kantor_s4(alg, der == S4_DER_FULL ? DerivationChoice::full : DerivationChoice::inner);
    if (report) {
      Report r("S4 on the Kantor algebra");
      r.merge(kantor_s4_check(s));
      r.merge(kantor_s4_af_check(s), "AF: ");
      Extracted e = extract_coordinate_algebra(s.lie, s.action);
      r.merge(check_lrta(e.algebra, e.delta), "extracted: ");
      r.expect(e.algebra.with_name(alg.name()) == alg.with_form(std::nullopt), "extracted algebra equals A");
      r.expect(e.delta == delta_structurable_map(alg), "extracted delta is the structurable delta");
      emit(report, std::move(r));
    }
    slot = new s4_lie{std::move(s.lie), std::move(s.action)};
  });
}

}  // extern "C"
