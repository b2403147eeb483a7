#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "s4lie.h"

using nlohmann::json;

namespace {

// Exit codes: 0 pass, 1 a verification failed, 2 input or usage error.
struct Exit {
  int code;
  std::string message;
};

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using AlgebraPtr = std::unique_ptr<s4_algebra, Deleter<s4_algebra, s4_algebra_free>>;
using DeltaPtr = std::unique_ptr<s4_delta, Deleter<s4_delta, s4_delta_free>>;
using LiePtr = std::unique_ptr<s4_lie, Deleter<s4_lie, s4_lie_free>>;
using ReportPtr = std::unique_ptr<s4_report, Deleter<s4_report, s4_report_free>>;

void check(s4_status s) {
  if (s == S4_OK) return;
  std::string msg = std::string(s4_status_name(s)) + ": " + s4_last_error();
  throw Exit{s == S4_ERR_AXIOM ? 1 : 2, msg};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  s4_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{2, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Exit{2, path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Exit{2, "cannot write " + path};
  out << j.dump(1) << '\n';
}

struct Globals {
  bool json_out = false;
  unsigned threads = 0;
  std::string field;
};
Globals g;

json algebra_json(const s4_algebra* a) {
  char* s = nullptr;
  check(s4_algebra_to_json(a, &s));
  return json::parse(take(s));
}

json delta_json(const s4_delta* d) {
  char* s = nullptr;
  check(s4_delta_to_json(d, &s));
  return json::parse(take(s));
}

json lie_json(const s4_lie* l) {
  char* s = nullptr;
  check(s4_lie_to_json(l, &s));
  return json::parse(take(s));
}

AlgebraPtr load_algebra(const json& j) {
  s4_algebra* a = nullptr;
  check(s4_algebra_from_json(j.dump().c_str(), &a));
  return AlgebraPtr(a);
}

AlgebraPtr apply_field(AlgebraPtr a) {
  if (g.field.empty()) return a;
  s4_algebra* out = nullptr;
  check(s4_algebra_extend(a.get(), g.field.c_str(), &out));
  return AlgebraPtr(out);
}

// Algebra file, with an optional embedded "delta" unless a delta file is given.
std::pair<AlgebraPtr, DeltaPtr> load_pair(const std::string& algebra_path, const std::string& delta_path, bool need_delta) {
  json j = parse_file(algebra_path);
  AlgebraPtr a = load_algebra(j);
  DeltaPtr d;
  std::optional<json> dj;
  if (!delta_path.empty())
    dj = parse_file(delta_path);
  else if (j.contains("delta"))
    dj = j["delta"];
  if (dj) {
    s4_delta* raw = nullptr;
    check(s4_delta_from_json(dj->dump().c_str(), a.get(), &raw));
    d.reset(raw);
  } else if (need_delta) {
    throw Exit{2, "no delta map: pass --delta or embed one in the algebra file"};
  }
  return {std::move(a), std::move(d)};
}

LiePtr load_lie(const std::string& path) {
  s4_lie* l = nullptr;
  check(s4_lie_from_json(read_file(path).c_str(), &l));
  return LiePtr(l);
}

// Prints the report and returns its exit code.
int finish(const s4_report* r) {
  char* s = nullptr;
  if (g.json_out) {
    check(s4_report_to_json(r, &s));
    std::cout << json::parse(take(s)).dump(1) << '\n';
  } else {
    check(s4_report_to_text(r, &s));
    std::cout << take(s);
  }
  return s4_report_passed(r) ? 0 : 1;
}

s4_mode parse_mode(const std::string& m) {
  if (m == "full") return S4_MODE_FULL;
  if (m == "sample") return S4_MODE_SAMPLE;
  return S4_MODE_AUTO;
}

// 2 alpha for rational alpha "p" or "p/q"; anything else needs an explicit --gamma.
std::string twice(const std::string& alpha) {
  const auto slash = alpha.find('/');
  try {
    std::size_t used = 0;
    const long long p = std::stoll(alpha.substr(0, slash), &used);
    if (used != alpha.substr(0, slash).size()) throw std::invalid_argument(alpha);
    return std::to_string(2 * p) + (slash == std::string::npos ? "" : alpha.substr(slash));
  } catch (const std::exception&) {
    throw Exit{2, "cannot form 2 alpha from " + alpha + "; pass --gamma"};
  }
}

s4_derivations parse_der(const std::string& d) { return d == "full" ? S4_DER_FULL : S4_DER_INNER; }

struct KantorInput {
  std::string algebra, name, derivations = "inner", alpha = "2", out;
};

AlgebraPtr kantor_algebra(const KantorInput& in) {
  if (in.algebra.empty() == in.name.empty()) throw Exit{2, "give exactly one of --algebra and --name"};
  if (!in.algebra.empty()) return apply_field(load_algebra(parse_file(in.algebra)));
  s4_algebra* a = nullptr;
  check(s4_catalog_build(in.name.c_str(), &a, nullptr, nullptr));
  return apply_field(AlgebraPtr(a));
}

void add_kantor_input(CLI::App* c, KantorInput& in, bool alpha) {
  c->add_option("--algebra", in.algebra, "structurable algebra JSON");
  c->add_option("--name", in.name, "catalog name of a structurable algebra");
  c->add_option("--derivations", in.derivations, "inner or full")->check(CLI::IsMember({"inner", "full"}));
  if (alpha) c->add_option("--alpha", in.alpha, "nonzero scalar");
  c->add_option("--out", in.out, "write the Lie algebra JSON here");
}

int run(int argc, char** argv) {
  CLI::App app{"Lie algebras with A4/S4 actions from triality algebras"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json_out, "JSON report on standard output");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
  app.add_option("--field", g.field, "field context for created data: Q, Qsqrt:-1, Qsqrt:-3");

  int code = 0;

  auto* cat = app.add_subcommand("catalog", "catalog entries")->require_subcommand(1);
  cat->add_subcommand("list", "list entry names")->callback([&] {
    json names = json::array();
    for (std::size_t i = 0; i < s4_catalog_count(); ++i) names.push_back(s4_catalog_name(i));
    if (g.json_out)
      std::cout << names.dump(1) << '\n';
    else
      for (const auto& n : names) std::cout << n.get<std::string>() << '\n';
  });
  std::string build_name, build_out;
  auto* build = cat->add_subcommand("build", "build an entry");
  build->add_option("name", build_name)->required();
  build->add_option("--out", build_out, "output file (standard output otherwise)");
  build->callback([&] {
    s4_algebra* a = nullptr;
    s4_delta* d = nullptr;
    s4_kind kind{};
    check(s4_catalog_build(build_name.c_str(), &a, &d, &kind));
    AlgebraPtr ap(a);
    DeltaPtr dp(d);
    if (!g.field.empty()) {
      if (dp) throw Exit{2, "--field only applies to entries without a delta map"};
      ap = apply_field(std::move(ap));
    }
    json j = algebra_json(ap.get());
    const char* kinds[] = {"hurwitz", "composition", "sta", "lrta"};
    j["kind"] = kinds[kind];
    if (dp) j["delta"] = delta_json(dp.get());
    if (build_out.empty())
      std::cout << j.dump(1) << '\n';
    else
      write_file(build_out, j);
    if (!g.json_out && !build_out.empty())
      std::cout << build_name << ": dim " << s4_algebra_dim(ap.get()) << ", " << kinds[kind] << " -> " << build_out << '\n';
  });

  std::string v_alg, v_delta, v_mode = "auto";
  std::size_t v_count = 0;
  std::uint64_t v_seed = 0;
  auto* ver = app.add_subcommand("verify", "run an axiom checker")->require_subcommand(1);
  auto verify_opts = [&](CLI::App* c, bool delta) {
    c->add_option("--algebra", v_alg, "algebra JSON")->required();
    if (delta) {
      c->add_option("--delta", v_delta, "delta map JSON (else the one embedded in the algebra file)");
      c->add_option("--mode", v_mode, "auto, full or sample")->check(CLI::IsMember({"auto", "full", "sample"}));
    }
    c->add_option("--count", v_count, "samples");
    c->add_option("--seed", v_seed, "seed for sampled checks");
  };
  for (const char* which : {"sta", "lrta"}) {
    auto* c = ver->add_subcommand(which, std::string("normal ") + which + " conditions");
    verify_opts(c, true);
    const bool lrta = std::string(which) == "lrta";
    c->callback([&, lrta] {
      auto [a, d] = load_pair(v_alg, v_delta, true);
      s4_check_options o{parse_mode(v_mode), v_count, v_seed};
      s4_report* r = nullptr;
      check(lrta ? s4_check_lrta(a.get(), d.get(), &o, &r) : s4_check_sta(a.get(), d.get(), &o, &r));
      code = finish(ReportPtr(r).get());
    });
  }
  auto* comp = ver->add_subcommand("composition", "symmetric composition axioms");
  verify_opts(comp, false);
  comp->callback([&] {
    AlgebraPtr a = load_algebra(parse_file(v_alg));
    s4_report* r = nullptr;
    check(s4_check_composition(a.get(), &r));
    code = finish(ReportPtr(r).get());
  });
  auto* d5 = ver->add_subcommand("degree5", "degree five identity");
  verify_opts(d5, false);
  d5->callback([&] {
    AlgebraPtr a = load_algebra(parse_file(v_alg));
    s4_report* r = nullptr;
    check(s4_check_degree5(a.get(), v_count ? v_count : 1000, v_seed, &r));
    code = finish(ReportPtr(r).get());
  });

  auto* lie = app.add_subcommand("lie", "graded Lie algebras")->require_subcommand(1);
  std::string l_alg, l_delta, l_action = "a4", l_out, l_in, l_jacobi = "auto";
  bool l_force = false;
  std::size_t l_count = 0;
  std::uint64_t l_seed = 0;
  auto* cons = lie->add_subcommand("construct", "build g(A) with its action");
  cons->add_option("--algebra", l_alg)->required();
  cons->add_option("--delta", l_delta);
  cons->add_option("--action", l_action, "a4 or s4")->check(CLI::IsMember({"a4", "s4"}));
  cons->add_option("--out", l_out);
  cons->add_flag("--force", l_force, "skip the axiom check");
  cons->callback([&] {
    auto [a, d] = load_pair(l_alg, l_delta, true);
    s4_lie* l = nullptr;
    check(s4_lie_construct(a.get(), d.get(), l_action == "s4", l_force, &l));
    LiePtr lp(l);
    json j = lie_json(lp.get());
    if (l_out.empty())
      std::cout << j.dump(1) << '\n';
    else
      write_file(l_out, j);
    if (!g.json_out && !l_out.empty()) std::cout << "dim " << s4_lie_dim(lp.get()) << " -> " << l_out << '\n';
  });
  auto* lver = lie->add_subcommand("verify", "Jacobi, grading and group action");
  lver->add_option("--lie", l_in)->required();
  lver->add_option("--jacobi", l_jacobi, "auto, full or sample")->check(CLI::IsMember({"auto", "full", "sample"}));
  lver->add_option("--count", l_count);
  lver->add_option("--seed", l_seed);
  lver->callback([&] {
    LiePtr l = load_lie(l_in);
    s4_report* r = nullptr;
    check(s4_lie_verify(l.get(), parse_mode(l_jacobi), l_count, l_seed, &r));
    code = finish(ReportPtr(r).get());
  });
  auto* ext = lie->add_subcommand("extract", "recover the coordinate algebra and delta");
  ext->add_option("--lie", l_in)->required();
  ext->add_option("--out", l_out, "algebra JSON with the delta map embedded");
  ext->callback([&] {
    LiePtr l = load_lie(l_in);
    s4_algebra* a = nullptr;
    s4_delta* d = nullptr;
    int lrta = 0;
    check(s4_lie_extract(l.get(), &a, &d, &lrta));
    AlgebraPtr ap(a);
    DeltaPtr dp(d);
    json j = algebra_json(ap.get());
    j["kind"] = lrta ? "lrta" : "sta";
    j["delta"] = delta_json(dp.get());
    if (l_out.empty())
      std::cout << j.dump(1) << '\n';
    else
      write_file(l_out, j);
    if (!g.json_out && !l_out.empty())
      std::cout << (lrta ? "LRTA" : "STA") << " of dim " << s4_algebra_dim(ap.get()) << " -> " << l_out << '\n';
  });
  auto* simp = lie->add_subcommand("simple", "simplicity with the group action");
  simp->add_option("--lie", l_in)->required();
  simp->add_option("--seed", l_seed);
  simp->callback([&] {
    LiePtr l = load_lie(l_in);
    s4_verdict v{};
    s4_report* r = nullptr;
    check(s4_lie_simple(l.get(), l_seed, &v, &r));
    code = finish(ReportPtr(r).get());
  });

  auto* kan = app.add_subcommand("kantor", "Kantor and Allison-Faulkner constructions")->require_subcommand(1);
  KantorInput kin;
  std::string gamma;
  auto write_lie = [&](s4_lie* l) {
    LiePtr lp(l);
    if (!kin.out.empty()) write_file(kin.out, lie_json(lp.get()));
  };
  auto* kb = kan->add_subcommand("build", "5-graded K(A, d) with chi, sigma, psi checks");
  add_kantor_input(kb, kin, true);
  kb->callback([&] {
    AlgebraPtr a = kantor_algebra(kin);
    s4_lie* l = nullptr;
    s4_report* r = nullptr;
    check(s4_kantor_build(a.get(), parse_der(kin.derivations), kin.alpha.c_str(), &l, &r));
    ReportPtr rp(r);
    write_lie(l);
    code = finish(rp.get());
  });
  auto* kp = kan->add_subcommand("psi-check", "psi and the isomorphism onto K(A, gamma, l)");
  add_kantor_input(kp, kin, true);
  kp->callback([&] {
    AlgebraPtr a = kantor_algebra(kin);
    s4_report* r = nullptr;
    check(s4_kantor_psi_check(a.get(), parse_der(kin.derivations), kin.alpha.c_str(), &r));
    code = finish(ReportPtr(r).get());
  });
  auto* kaf = kan->add_subcommand("af", "Allison-Faulkner algebra K(A, gamma, l(A, d))");
  add_kantor_input(kaf, kin, true);
  kaf->add_option("--gamma", gamma, "g1,g2,g3 (default 1,-1,2 alpha)");
  kaf->callback([&] {
    AlgebraPtr a = kantor_algebra(kin);
    std::vector<std::string> parts;
    if (gamma.empty()) {
      parts = {"1", "-1", twice(kin.alpha)};
    } else {
      std::stringstream ss(gamma);
      std::string p;
      while (std::getline(ss, p, ',')) parts.push_back(p);
      if (parts.size() != 3) throw Exit{2, "--gamma needs three comma-separated scalars"};
    }
    const char* gs[3] = {parts[0].c_str(), parts[1].c_str(), parts[2].c_str()};
    s4_lie* l = nullptr;
    s4_report* r = nullptr;
    check(s4_kantor_af(a.get(), parse_der(kin.derivations), gs, &l, &r));
    ReportPtr rp(r);
    if (!g.json_out) std::cout << "dim " << s4_lie_dim(l) << '\n';
    write_lie(l);
    code = finish(rp.get());
  });
  auto* ks4 = kan->add_subcommand("s4", "S4 action on K(A, d) over a field with sqrt(-1)");
  add_kantor_input(ks4, kin, false);
  ks4->callback([&] {
    AlgebraPtr a = kantor_algebra(kin);
    s4_lie* l = nullptr;
    s4_report* r = nullptr;
    check(s4_kantor_s4(a.get(), parse_der(kin.derivations), &l, &r));
    ReportPtr rp(r);
    write_lie(l);
    code = finish(rp.get());
  });

  auto* rep = app.add_subcommand("report", "tables")->require_subcommand(1);
  std::size_t max_dim = 8;
  auto* ms = rep->add_subcommand("magic-square", "dim g(para C (x) para C') for C, C' of dims 1, 2, 4, 8");
  ms->add_option("--max-dim", max_dim)->check(CLI::IsMember({1, 2, 4, 8}));
  ms->callback([&] {
    json rows = json::array();
    for (std::size_t ds : {1, 2, 4, 8})
      for (std::size_t dt : {1, 2, 4, 8}) {
        if (ds > dt || dt > max_dim) continue;
        std::size_t dim = 0;
        check(s4_magic_square_dim(ds, dt, &dim));
        rows.push_back({{"ds", ds}, {"dt", dt}, {"dim", dim}});
        if (!g.json_out) std::cout << ds << "×" << dt << " → " << dim << std::endl;
      }
    if (g.json_out) std::cout << rows.dump(1) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    // Threads must be set before any work; the option is parsed with everything else,
    // so peek at it first.
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string(argv[i]) == "--threads") check(s4_set_threads(static_cast<unsigned>(std::stoul(argv[i + 1]))));
    return run(argc, argv);
  } catch (const Exit& e) {
    std::cerr << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
