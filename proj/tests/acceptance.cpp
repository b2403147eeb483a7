// One line per acceptance criterion; exit status 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"
#include "s4lie/kantor.hpp"
#include "s4lie/liebuild.hpp"

using namespace s4lie;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note = what;
    pass = false;
  }
  void require(const Report& r, const std::string& what) {
    if (r.passed()) return;
    std::string first;
    for (const auto& c : r.checks())
      if (!c.pass) {
        first = c.condition;
        break;
      }
    require(false, what + ": " + first);
  }
};

const std::size_t kDims[] = {1, 2, 4, 8};

// Constructions shared between criteria.
struct Cache {
  std::map<std::pair<std::size_t, std::size_t>, Construction> square;
  std::vector<std::pair<std::string, Construction>> catalog;

  const Construction& magic(std::size_t ds, std::size_t dt) {
    auto key = std::make_pair(ds, dt);
    auto it = square.find(key);
    if (it == square.end()) {
      BuildOptions opt;
      opt.force = true;  // axioms are criterion 4
      it = square.emplace(key, magic_square(ds, dt, opt)).first;
    }
    return it->second;
  }

  void build_catalog() {
    if (!catalog.empty()) return;
    for (const auto& name : catalog_names()) {
      CatalogEntry e = catalog_entry(name);
      if (e.kind != EntryKind::sta && e.kind != EntryKind::lrta) continue;
      BuildOptions opt;
      opt.force = true;
      Construction g = e.kind == EntryKind::sta ? construct_g_sta(e.datum.algebra, e.datum.delta, opt)
                                                : construct_g_lrta(e.datum.algebra, e.datum.delta, opt);
      catalog.emplace_back(name, std::move(g));
    }
  }

  template <class F>
  void each(F&& f) {
    for (std::size_t ds : kDims)
      for (std::size_t dt : kDims) f("square " + std::to_string(ds) + "x" + std::to_string(dt), magic(ds, dt));
    build_catalog();
    for (const auto& [name, g] : catalog) f(name, g);
  }
};

Outcome criterion1(Cache& c) {
  Outcome o;
  const std::size_t expected[4][4] = {{3, 8, 21, 52}, {8, 16, 35, 78}, {21, 35, 66, 133}, {52, 78, 133, 248}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const std::size_t got = c.magic(kDims[i], kDims[j]).lie.dim();
      o.require(got == expected[i][j], "dim g(" + std::to_string(kDims[i]) + "," + std::to_string(kDims[j]) +
                                           ") = " + std::to_string(got));
    }
  return o;
}

Outcome criterion2(Cache& c, bool full_e8) {
  Outcome o;
  std::size_t full = 0, sampled = 0;
  c.each([&](const std::string& name, const Construction& g) {
    const std::size_t n = g.lie.dim();
    JacobiMode mode = n <= 80 || (full_e8 && n == 248) ? JacobiMode{} : JacobiMode::sampled(20000, 1);
    (mode.full ? full : sampled)++;
    o.require(verify_jacobi(g.lie, mode), name);
  });
  o.note = o.pass ? std::to_string(full) + " full sweeps, " + std::to_string(sampled) + " sampled" : o.note;
  return o;
}

Outcome criterion3(Cache& c) {
  Outcome o;
  std::size_t count = 0;
  c.each([&](const std::string& name, const Construction& g) {
    ++count;
    o.require(verify_group_action(g.lie, g.action), name);
  });
  if (o.pass) o.note = std::to_string(count) + " algebras";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::pair<std::string, Datum>> stas;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      stas.emplace_back("para" + std::to_string(kDims[i]) + "(x)para" + std::to_string(kDims[j]),
                        tensor_sta(para(hurwitz_by_dim(kDims[i])), para(hurwitz_by_dim(kDims[j]))));
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (e.kind == EntryKind::sta) stas.emplace_back(name, e.datum);
  }
  std::uint64_t seed = 1;
  for (const auto& [name, d] : stas) {
    CheckOptions opt;
    if (d.algebra.dim() <= 16) {
      opt.force_exhaustive = true;
    } else {
      opt.force_sampled = true;
      opt.samples = 2000;
      opt.seed = seed;
    }
    o.require(check_sta(d.algebra, d.delta, opt), name);
    o.require(check_degree5(d.algebra, 1000, seed), name + " degree 5");
    ++seed;
  }
  CheckOptions full;
  full.force_exhaustive = true;
  for (const char* name : {"structurable:octonion", "sym2", "sym3", "lie:sl2", "lts:sl2"}) {
    Datum d = catalog_entry(name).datum;
    o.require(check_lrta(d.algebra, d.delta, full), name);
  }
  return o;
}

Outcome criterion5(Cache& c) {
  Outcome o;
  c.build_catalog();
  std::size_t count = 0;
  for (const auto& [name, g] : c.catalog) {
    Extracted e = extract_coordinate_algebra(g.lie, g.action);
    const Algebra want = g.algebra.with_form(std::nullopt).with_name("");
    o.require(e.lrta == g.lrta, name + " kind");
    o.require(e.algebra.with_name("") == want, name + " algebra");
    if (g.lrta) o.require(e.algebra.involution() == g.algebra.involution(), name + " involution");
    o.require(e.delta == g.delta, name + " delta");
    ++count;
  }
  if (o.pass) o.note = std::to_string(count) + " catalog data";
  return o;
}

Outcome criterion6(Cache& c) {
  Outcome o;
  auto simple = [&](const std::string& name, const Construction& g) {
    SimplicityResult s = is_simple_with_action(g.lie, g.action, 1);
    o.require(s.verdict == SimpleVerdict::simple, name + " verdict " + verdict_name(s.verdict));
  };
  simple("para-O (x) para-O", c.magic(8, 8));
  c.build_catalog();
  for (const auto& [name, g] : c.catalog)
    if (name == "sym3" || name == "lts:sl2") simple(name, g);
  for (const auto& [name, g] : c.catalog)
    if (name == "sum:sym1+sym2") {
      SimplicityResult s = is_simple_with_action(g.lie, g.action, 1);
      o.require(s.verdict == SimpleVerdict::invariant_ideal, name + " verdict " + verdict_name(s.verdict));
      o.require(s.ideal.dim() > 0 && s.ideal.dim() < g.lie.dim(), name + " ideal size");
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Algebra oct = hurwitz_by_dim(8);
  Algebra sym3 = jordan_sym(3).algebra;
  Algebra q = hurwitz_by_dim(1);
  for (const auto& [name, a] : {std::pair<const char*, Algebra>{"octonion", oct}, {"sym3", sym3}}) {
    o.require(lemma41(a, derivation_choice(a, DerivationChoice::inner)), std::string("lrt decomposition ") + name);
  }
  o.require(lrt_space(oct).dim() == 28 && ts_space(oct).dim() == 14 &&
                derivation_choice(oct, DerivationChoice::full).dim() == 14,
            "octonion 28 = 14 + 14");
  const Field f;
  for (long alpha : {1L, 2L, -3L}) {
    KantorAlgebra k = kantor_build(oct, DerivationChoice::inner, f.integer(alpha));
    o.require(epsilon_table_check(k), "eps table alpha " + std::to_string(alpha));
    for (const auto& [name, a] :
         {std::pair<const char*, Algebra>{"Q", q}, {"sym3", sym3}, {"octonion", oct}})
      o.require(psi_iso_check(a, derivation_choice(a, DerivationChoice::inner), f.integer(alpha)),
                std::string("psi iso ") + name + " alpha " + std::to_string(alpha));
  }
  const Field qi = Field::quadratic(-1);
  Algebra oi = extend_scalars(oct, qi);
  KantorS4 s = kantor_s4(oi, DerivationChoice::inner);
  o.require(verify_group_action(s.lie, s.action), "S4 action");
  o.require(kantor_s4_check(s), "iota table");
  Extracted e = extract_coordinate_algebra(s.lie, s.action);
  o.require(e.lrta, "extraction kind");
  o.require(check_lrta(e.algebra, e.delta), "extracted LRTA");
  o.require(e.algebra.with_name("") == oi.with_form(std::nullopt).with_name(""), "extracted algebra");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (e.kind == EntryKind::composition) o.require(check_symmetric_composition(e.datum.algebra), name);
  }
  o.require(derivation_algebra(catalog_entry("octonion").datum.algebra, false).dim() == 14, "der octonion");
  o.require(stri_solve(catalog_entry("para-octonion").datum.algebra).size() == 28, "stri para-octonion");
  o.require(derivation_algebra(catalog_entry("okubo").datum.algebra, false).dim() == 8, "der okubo");
  o.require(stri_solve(catalog_entry("okubo").datum.algebra).size() == 28, "stri okubo");
  return o;
}

Outcome criterion9() {
  Outcome o;
  Datum s = lie_as_sta(lie_so3());
  Datum t = twist_by_automorphism(s, so3_rotation());
  const Algebra& a = t.algebra;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    o.require(a.basis_product(i, j) == -a.basis(k), "e_i e_{i+1}");
    o.require(a.basis_product(j, i).empty(), "e_{i+1} e_i");
    o.require(a.basis_product(i, i) == a.basis(i), "e_i e_i");
  }
  o.require(twist_isomorphism_check(s, t, so3_rotation()), "twist:so3");
  Datum po = tensor_sta(para(hurwitz_by_dim(8)), para(hurwitz_by_dim(1)));
  o.require(twist_isomorphism_check(po, twist_by_automorphism(po, octonion_rotation()), octonion_rotation()),
            "twist:para-octonion");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool full_e8 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full-e8") == 0) {
      full_e8 = true;
    } else {
      std::fprintf(stderr, "usage: %s [--full-e8]\n", argv[0]);
      return 2;
    }
  }
  Cache cache;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"magic square dimensions", [&] { return criterion1(cache); }},
      {"Jacobi", [&] { return criterion2(cache, full_e8); }},
      {"group actions", [&] { return criterion3(cache); }},
      {"axiom systems and degree 5", [] { return criterion4(); }},
      {"extraction round trip", [&] { return criterion5(cache); }},
      {"simplicity", [&] { return criterion6(cache); }},
      {"Kantor and Allison-Faulkner suite", [] { return criterion7(); }},
      {"catalog self-checks", [] { return criterion8(); }},
      {"twists", [] { return criterion9(); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.1fs)%s%s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", secs,
                o.note.empty() ? "" : " ", o.note.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
