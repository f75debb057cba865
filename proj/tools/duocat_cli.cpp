#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "duocat/io.hpp"

using namespace duocat;
using io::json;

namespace {

// Deterministic draws: raw engine output reduced by modulus, so reports are
// reproducible for a fixed seed regardless of platform.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(
                                   hi - lo + 1));
}

GradedObject random_object(std::mt19937_64& rng, int truncation, int max_dim,
                           bool positive) {
  std::vector<int> dims(truncation + 1);
  for (int n = 0; n <= truncation; ++n)
    dims[n] = (positive && n == 0) ? 0 : draw(rng, 0, max_dim);
  return GradedObject(truncation, std::move(dims));
}

GradedMap random_map(std::mt19937_64& rng, const GradedObject& src,
                     const GradedObject& dst) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.truncation; ++n) {
    Matrix m(dst.dim(n), src.dim(n));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = draw(rng, -2, 2);
    comps.push_back(std::move(m));
  }
  return GradedMap(src, dst, std::move(comps));
}

std::vector<DuoidalSample> random_duoidal_samples(PairTag t,
                                                  std::mt19937_64& rng,
                                                  int count, int truncation) {
  bool sub = pair_outer(t) == ProductKind::Substitution ||
             pair_inner(t) == ProductKind::Substitution;
  int N = truncation > 0 ? truncation : (sub ? 3 : 4);
  std::vector<DuoidalSample> out;
  for (int i = 0; i < count; ++i) {
    DuoidalSample s;
    s.a = random_object(rng, N, 2, sub);
    s.b = random_object(rng, N, 2, sub);
    s.c = random_object(rng, N, sub ? 1 : 2, sub);
    s.d = random_object(rng, N, sub ? 1 : 2, sub);
    s.f = random_map(rng, s.a, random_object(rng, N, 2, sub));
    s.g = random_map(rng, s.b, random_object(rng, N, 2, sub));
    s.h = random_map(rng, s.c, random_object(rng, N, sub ? 1 : 2, sub));
    s.l = random_map(rng, s.d, random_object(rng, N, sub ? 1 : 2, sub));
    out.push_back(std::move(s));
  }
  return out;
}

GradedObject pad(const GradedObject& v, int truncation) {
  std::vector<int> dims(truncation + 1, 0);
  for (int n = 0; n <= v.truncation && n <= truncation; ++n)
    dims[n] = v.dim(n);
  return GradedObject(truncation, std::move(dims));
}

SymmetricSequence pad(const SymmetricSequence& s, int truncation) {
  GradedObject ob = pad(s.ob, truncation);
  std::vector<std::vector<Matrix>> gens = s.gens;
  while (static_cast<int>(gens.size()) <= truncation) {
    int n = static_cast<int>(gens.size());
    gens.emplace_back(std::max(n - 1, 0), Matrix(0, 0));
  }
  return SymmetricSequence(std::move(ob), std::move(gens));
}

// Exact common truncation for a binary product: degrees of the Hadamard
// product vanish beyond either input, Cauchy degrees combine additively,
// and substitution keeps the outer bound.
int product_truncation(ProductKind k, int na, int nb) {
  switch (k) {
    case ProductKind::Hadamard: return std::max(na, nb);
    case ProductKind::Cauchy: return na + nb;
    default: return std::max(na, nb);
  }
}

int emit_report(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << io::canonical_dump(io::to_json(rep));
  else
    std::cout << rep.summary() << "\n";
  return rep.ok() ? 0 : 1;
}

void write_out(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << io::canonical_dump(j);
  else
    io::save_document(j, out);
}

Structured load_structured(const std::string& path) {
  return io::structured_from_json(io::load_document(path));
}

GradedObject load_object_or_carrier(const std::string& path,
                                    SymmetricSequence* species_out = nullptr) {
  json j = io::load_document(path);
  std::string kind = io::document_kind(j);
  if (kind == "graded-object") return io::graded_object_from_json(j);
  if (kind == "species") {
    SymmetricSequence s = io::species_from_json(j);
    if (species_out) *species_out = s;
    return s.ob;
  }
  throw Error("expected a graded-object or species document");
}

int run_selftest(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };

  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy,
        PairTag::SubOverHadamard, PairTag::HadamardOverSubPositive})
    line("duoidal " + pair_name(t),
         check_duoidal(t, random_duoidal_samples(t, rng, 2, 0)).ok());

  for (const auto& name : example_library_names())
    line("structure " + name,
         check_structure(example_library(name, name == "end2" ? 2 : 3)).ok());

  int N = 3;
  Structured c = example_library("grouplike2", N);
  Structured a = example_library("poly3-deg0", N);
  GradedObject ca = hadamard(c.carrier, a.carrier);
  std::vector<Matrix> pc;
  for (int n = 0; n <= N; ++n) {
    Matrix m(a.carrier.dim(n), ca.dim(n));
    if (n == 0)
      for (int j = 0; j < 3; ++j) {
        m(j, j) = 1;
        m(j, 3 + j) = (j == 1 ? -1 : 1);
      }
    pc.push_back(std::move(m));
  }
  MeasuringCandidate mc{PairTag::HadamardOverCauchy, c, a, a,
                        GradedMap(ca, a.carrier, pc)};
  line("measuring grouplike2 over poly3", check_measuring(mc).ok());
  Structured h = convolution_monoid(PairTag::HadamardOverCauchy, c, a);
  line("transpose monoid map",
       check_monoid_map(measuring_transpose(mc), a, h).ok());
  line("convolution structure", check_structure(h).ok());
  line("braided convolution q=-1",
       check_structure(cauchy_convolution_monoid(
                           example_library("divided-power", N),
                           example_library("poly", N), -1))
           .ok());

  Structured ass = example_library("ass", 4);
  line("ass dims factorial",
       ass.carrier.dims == std::vector<int>{0, 1, 2, 6, 24});
  GradedObject v = random_object(rng, 5, 2, false);
  GradedObject w = random_object(rng, 5, 2, false);
  std::vector<Rational> hl = hilbert(cauchy(v, w));
  std::vector<Rational> hv = hilbert(v), hw = hilbert(w);
  bool conv_ok = true;
  for (int n = 0; n <= 5; ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += hv[k] * hw[n - k];
    conv_ok = conv_ok && sum == hl[n];
  }
  line("hilbert multiplicativity", conv_ok);

  std::cout << (all_ok ? "selftest: all checks passed"
                       : "selftest: FAILURES present")
            << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded/species monoidal calculus"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string kind_name_arg = "cauchy", file_a, file_b, out_path;
  auto* product_cmd = app.add_subcommand("product", "product of two objects");
  product_cmd->add_option("--kind", kind_name_arg, "hadamard|cauchy|substitution")
      ->check(CLI::IsMember({"hadamard", "cauchy", "substitution"}));
  product_cmd->add_option("a", file_a)->required();
  product_cmd->add_option("b", file_b)->required();
  product_cmd->add_option("--out", out_path);

  std::string cs_file;
  auto* check_cmd = app.add_subcommand("check-structure", "axiom suite");
  check_cmd->add_option("file", cs_file)->required();

  std::string pair_arg = "cauchy-over-hadamard";
  int samples = 5, truncation = 0;
  unsigned long long seed = 1;
  auto* duo_cmd = app.add_subcommand("check-duoidal", "interchange axioms");
  duo_cmd->add_option("--pair", pair_arg)->required();
  duo_cmd->add_option("--samples", samples);
  duo_cmd->add_option("--seed", seed);
  duo_cmd->add_option("--truncation", truncation);

  std::string meas_file;
  auto* meas_cmd = app.add_subcommand("check-measuring", "measuring squares");
  meas_cmd->add_option("file", meas_file)->required();

  std::string conv_pair = "braided-cauchy", conv_z, conv_v, q_arg = "1";
  auto* conv_cmd = app.add_subcommand("convolve", "convolution structure");
  conv_cmd->add_option("--pair", conv_pair)->required();
  conv_cmd->add_option("z", conv_z)->required();
  conv_cmd->add_option("v", conv_v)->required();
  conv_cmd->add_option("--q", q_arg, "braiding parameter");
  conv_cmd->add_option("--out", out_path);

  std::string dual_file;
  auto* dual_cmd = app.add_subcommand("dual", "transpose duality");
  dual_cmd->add_option("file", dual_file)->required();
  dual_cmd->add_option("--out", out_path);

  std::string series_file;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "dimension series");
  hilbert_cmd->add_option("file", series_file)->required();
  auto* egf_cmd = app.add_subcommand("egf", "exponential series");
  egf_cmd->add_option("file", series_file)->required();

  std::string fc_univ, fc_psi, fc_g, fc_g2;
  auto* fc_cmd = app.add_subcommand("factor-check", "universal factorization");
  fc_cmd->add_option("universal", fc_univ)->required();
  fc_cmd->add_option("psi", fc_psi)->required();
  fc_cmd->add_option("g", fc_g)->required();
  fc_cmd->add_option("g2", fc_g2);

  auto* self_cmd = app.add_subcommand("selftest", "deterministic suite");
  self_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (product_cmd->parsed()) {
      ProductKind k = kind_name_arg == "hadamard" ? ProductKind::Hadamard
                      : kind_name_arg == "cauchy" ? ProductKind::Cauchy
                                                  : ProductKind::Substitution;
      SymmetricSequence sa, sb;
      bool species_a = false, species_b = false;
      json ja = io::load_document(file_a), jb = io::load_document(file_b);
      if (io::document_kind(ja) == "species") {
        sa = io::species_from_json(ja);
        species_a = true;
      }
      if (io::document_kind(jb) == "species") {
        sb = io::species_from_json(jb);
        species_b = true;
      }
      if (species_a != species_b)
        throw Error("product arguments must both be graded or both species");
      if (species_a) {
        int N = product_truncation(k, sa.truncation(), sb.truncation());
        SymmetricSequence pa = pad(sa, N), pb = pad(sb, N);
        SymmetricSequence r =
            k == ProductKind::Hadamard ? species_hadamard(pa, pb)
            : k == ProductKind::Cauchy
                ? species_cauchy(pa, pb)
                : species_substitution(pa, pb).result;
        write_out(io::to_json(r), out_path);
      } else {
        GradedObject a = io::graded_object_from_json(ja);
        GradedObject b = io::graded_object_from_json(jb);
        int N = product_truncation(k, a.truncation, b.truncation);
        GradedObject r = product(k, pad(a, N), pad(b, N));
        write_out(io::to_json(r), out_path);
      }
      return 0;
    }
    if (check_cmd->parsed())
      return emit_report(check_structure(load_structured(cs_file)), format);
    if (duo_cmd->parsed()) {
      PairTag t = pair_from_name(pair_arg);
      std::mt19937_64 rng(seed);
      return emit_report(
          check_duoidal(t,
                        random_duoidal_samples(t, rng, samples, truncation)),
          format);
    }
    if (meas_cmd->parsed())
      return emit_report(
          check_measuring(io::measuring_from_json(io::load_document(meas_file))),
          format);
    if (conv_cmd->parsed()) {
      Structured z = load_structured(conv_z), v = load_structured(conv_v);
      Structured r = conv_pair == "braided-cauchy"
                         ? cauchy_convolution_monoid(z, v,
                                                     parse_rational(q_arg))
                         : convolution_monoid(pair_from_name(conv_pair), z, v);
      write_out(io::to_json(r), out_path);
      return 0;
    }
    if (dual_cmd->parsed()) {
      write_out(io::to_json(structure_dual(load_structured(dual_file))),
                out_path);
      return 0;
    }
    if (hilbert_cmd->parsed() || egf_cmd->parsed()) {
      GradedObject v = load_object_or_carrier(series_file);
      std::vector<Rational> s =
          hilbert_cmd->parsed() ? hilbert(v) : egf(v);
      json j = json::array();
      for (const auto& x : s) j.push_back(to_string(x));
      std::cout << io::canonical_dump(j);
      return 0;
    }
    if (fc_cmd->parsed()) {
      MeasuringCandidate univ =
          io::measuring_from_json(io::load_document(fc_univ));
      MeasuringCandidate psi =
          io::measuring_from_json(io::load_document(fc_psi));
      GradedMap g = io::graded_map_from_json(io::load_document(fc_g));
      std::optional<GradedMap> g2;
      if (!fc_g2.empty())
        g2 = io::graded_map_from_json(io::load_document(fc_g2));
      FactorizationResult r = universal_factorization_check(univ, psi, g, g2);
      json j;
      j["comonoid-map"] = r.comonoid_map;
      j["factors"] = r.factors;
      if (r.unique) j["unique"] = *r.unique;
      if (!r.detail.empty()) j["detail"] = r.detail;
      std::cout << io::canonical_dump(j);
      return (r.comonoid_map && r.factors) ? 0 : 1;
    }
    if (self_cmd->parsed()) return run_selftest(seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
