#include "duocat/structures.hpp"

#include <numeric>
#include <sstream>

namespace duocat {

std::string Report::summary() const {
  int fails = 0;
  for (const auto& i : items)
    if (!i.pass) ++fails;
  std::ostringstream os;
  os << items.size() << " axiom instance(s), " << fails << " failure(s)";
  for (const auto& i : items) {
    if (i.pass) continue;
    os << "\n  FAIL " << i.axiom << " @ (";
    for (size_t k = 0; k < i.indices.size(); ++k)
      os << (k ? "," : "") << i.indices[k];
    os << ") " << i.detail;
  }
  return os.str();
}

bool kind_is_comonoid(StructureKind k) {
  switch (k) {
    case StructureKind::GradedComonoid:
    case StructureKind::HadamardComonoid:
    case StructureKind::Cooperad:
    case StructureKind::TwistedComonoid:
    case StructureKind::SymmetricCooperad:
      return true;
    default:
      return false;
  }
}

bool kind_is_species(StructureKind k) {
  switch (k) {
    case StructureKind::TwistedMonoid:
    case StructureKind::TwistedComonoid:
    case StructureKind::SymmetricOperad:
    case StructureKind::SymmetricCooperad:
      return true;
    default:
      return false;
  }
}

ProductKind kind_product(StructureKind k) {
  switch (k) {
    case StructureKind::GradedMonoid:
    case StructureKind::GradedComonoid:
    case StructureKind::TwistedMonoid:
    case StructureKind::TwistedComonoid:
      return ProductKind::Cauchy;
    case StructureKind::HadamardMonoid:
    case StructureKind::HadamardComonoid:
      return ProductKind::Hadamard;
    default:
      return ProductKind::Substitution;
  }
}

StructureKind kind_dual(StructureKind k) {
  switch (k) {
    case StructureKind::GradedMonoid: return StructureKind::GradedComonoid;
    case StructureKind::GradedComonoid: return StructureKind::GradedMonoid;
    case StructureKind::HadamardMonoid: return StructureKind::HadamardComonoid;
    case StructureKind::HadamardComonoid: return StructureKind::HadamardMonoid;
    case StructureKind::Operad: return StructureKind::Cooperad;
    case StructureKind::Cooperad: return StructureKind::Operad;
    case StructureKind::TwistedMonoid: return StructureKind::TwistedComonoid;
    case StructureKind::TwistedComonoid: return StructureKind::TwistedMonoid;
    case StructureKind::SymmetricOperad:
      return StructureKind::SymmetricCooperad;
    case StructureKind::SymmetricCooperad:
      return StructureKind::SymmetricOperad;
  }
  throw Error("unknown kind");
}

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::GradedMonoid: return "graded-monoid";
    case StructureKind::GradedComonoid: return "graded-comonoid";
    case StructureKind::HadamardMonoid: return "hadamard-monoid";
    case StructureKind::HadamardComonoid: return "hadamard-comonoid";
    case StructureKind::Operad: return "operad";
    case StructureKind::Cooperad: return "cooperad";
    case StructureKind::TwistedMonoid: return "twisted-monoid";
    case StructureKind::TwistedComonoid: return "twisted-comonoid";
    case StructureKind::SymmetricOperad: return "symmetric-operad";
    case StructureKind::SymmetricCooperad: return "symmetric-cooperad";
  }
  throw Error("unknown kind");
}

StructureKind kind_from_name(const std::string& s) {
  for (StructureKind k :
       {StructureKind::GradedMonoid, StructureKind::GradedComonoid,
        StructureKind::HadamardMonoid, StructureKind::HadamardComonoid,
        StructureKind::Operad, StructureKind::Cooperad,
        StructureKind::TwistedMonoid, StructureKind::TwistedComonoid,
        StructureKind::SymmetricOperad, StructureKind::SymmetricCooperad})
    if (kind_name(k) == s) return k;
  throw Error("unknown structure kind: " + s);
}

const Matrix& Structured::at(const std::vector<int>& key) const {
  auto it = comps.find(key);
  if (it == comps.end()) throw Error("missing structure component");
  return it->second;
}

std::vector<std::vector<int>> structure_keys(StructureKind k, int N) {
  std::vector<std::vector<int>> keys;
  switch (kind_product(k)) {
    case ProductKind::Cauchy:
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) keys.push_back({a, b});
      break;
    case ProductKind::Hadamard:
      for (int n = 0; n <= N; ++n) keys.push_back({n});
      break;
    case ProductKind::Substitution:
      for (int n = 0; n <= N; ++n)
        for (const auto& blk : substitution_blocks(N, n, false)) {
          std::vector<int> key{blk.m};
          key.insert(key.end(), blk.comp.begin(), blk.comp.end());
          keys.push_back(std::move(key));
        }
      break;
  }
  return keys;
}

namespace {

// Shape of a component in the monoid orientation (rows = codomain).
std::pair<int, int> comp_shape(StructureKind k, const GradedObject& v,
                               const std::vector<int>& key) {
  switch (kind_product(k)) {
    case ProductKind::Cauchy:
      return {v.dim(key[0] + key[1]), v.dim(key[0]) * v.dim(key[1])};
    case ProductKind::Hadamard:
      return {v.dim(key[0]), v.dim(key[0]) * v.dim(key[0])};
    case ProductKind::Substitution: {
      int m = key[0], n = 0, cols = v.dim(m);
      for (size_t i = 1; i < key.size(); ++i) {
        n += key[i];
        cols *= v.dim(key[i]);
      }
      return {v.dim(n), cols};
    }
  }
  throw Error("unknown kind");
}

void check_eq(Report& rep, const std::string& axiom, std::vector<int> idx,
              const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    rep.add(axiom, std::move(idx), false, "shape mismatch");
    return;
  }
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): " << to_string(a(i, j))
           << " vs " << to_string(b(i, j));
        rep.add(axiom, std::move(idx), false, os.str());
        return;
      }
  rep.add(axiom, std::move(idx), true);
}

// All checks are written for the monoid orientation; comonoids are checked
// through their transposed data (exactly equivalent identities).
Structured transpose_all(const Structured& s) {
  Structured t = s;
  t.kind = kind_dual(s.kind);
  for (auto& [k, m] : t.comps) m = m.transpose();
  for (auto& m : t.unit) m = m.transpose();
  if (t.sym) {
    for (auto& degree : t.sym->gens)
      for (auto& g : degree) g = g.transpose();
  }
  return t;
}

std::vector<int> key_of(int m, const std::vector<int>& comp) {
  std::vector<int> key{m};
  key.insert(key.end(), comp.begin(), comp.end());
  return key;
}

void check_cauchy_monoid(const Structured& s, Report& rep, bool co) {
  const GradedObject& v = s.carrier;
  int N = v.truncation;
  std::string A = co ? "coassociativity" : "associativity";
  std::string U = co ? "counit" : "unit";
  for (int k = 0; k <= N; ++k)
    for (int m = 0; k + m <= N; ++m)
      for (int l = 0; k + m + l <= N; ++l) {
        if (v.dim(k) * v.dim(m) * v.dim(l) == 0) continue;
        Matrix lhs = s.at({k + m, l}) *
                     kron(s.at({k, m}), Matrix::identity(v.dim(l)));
        Matrix rhs = s.at({k, m + l}) *
                     kron(Matrix::identity(v.dim(k)), s.at({m, l}));
        check_eq(rep, A, {k, m, l}, lhs, rhs);
      }
  for (int n = 0; n <= N; ++n) {
    if (v.dim(n) == 0) continue;
    Matrix id = Matrix::identity(v.dim(n));
    check_eq(rep, U + "-left", {n},
             s.at({0, n}) * kron(s.unit[0], id), id);
    check_eq(rep, U + "-right", {n},
             s.at({n, 0}) * kron(id, s.unit[0]), id);
  }
  if (s.sym) {
    const SymmetricSequence& r = *s.sym;
    std::string E = "equivariance";
    for (int k = 0; k <= N; ++k)
      for (int m = 0; k + m <= N; ++m) {
        if (v.dim(k) * v.dim(m) == 0) continue;
        int n = k + m;
        for (int i = 0; i + 2 <= k; ++i)
          check_eq(rep, E + "-left", {k, m, i},
                   s.at({k, m}) * kron(r.gens[k][i],
                                       Matrix::identity(v.dim(m))),
                   r.gens[n][i] * s.at({k, m}));
        for (int i = 0; i + 2 <= m; ++i)
          check_eq(rep, E + "-right", {k, m, i},
                   s.at({k, m}) * kron(Matrix::identity(v.dim(k)),
                                       r.gens[m][i]),
                   r.gens[n][k + i] * s.at({k, m}));
      }
  }
}

void check_hadamard_monoid(const Structured& s, Report& rep, bool co) {
  const GradedObject& v = s.carrier;
  std::string A = co ? "coassociativity" : "associativity";
  std::string U = co ? "counit" : "unit";
  for (int n = 0; n <= v.truncation; ++n) {
    int d = v.dim(n);
    if (d == 0) continue;
    Matrix id = Matrix::identity(d);
    const Matrix& mu = s.at({n});
    check_eq(rep, A, {n}, mu * kron(mu, id), mu * kron(id, mu));
    check_eq(rep, U + "-left", {n}, mu * kron(s.unit[n], id), id);
    check_eq(rep, U + "-right", {n}, mu * kron(id, s.unit[n]), id);
    if (s.sym)
      for (int i = 0; i + 2 <= n; ++i) {
        const Matrix& g = s.sym->gens[n][i];
        check_eq(rep, "equivariance", {n, i}, mu * kron(g, g), g * mu);
      }
  }
}

void check_operad(const Structured& s, Report& rep, bool co) {
  const GradedObject& v = s.carrier;
  int N = v.truncation;
  std::string A = co ? "coassociativity" : "associativity";
  std::string U = co ? "counit" : "unit";
  // mu_{0;} is forced to be the identity.
  check_eq(rep, (co ? "codegeneracy" : "degeneracy"), {0}, s.at({0}),
           Matrix::identity(v.dim(0)));
  // two-level associativity
  for (int m = 0; m <= N; ++m) {
    if (v.dim(m) == 0) continue;
    for (int r = 0; r <= N; ++r)
      for (const auto& ks : compositions(r, m)) {
        long dk = 1;
        for (int x : ks) dk *= v.dim(x);
        if (dk == 0) continue;
        for (int n = 0; n <= N; ++n)
          for (const auto& ns : compositions(n, r)) {
            long dn = 1;
            for (int x : ns) dn *= v.dim(x);
            if (dn == 0) continue;
            // factor dims in source order: V_m, V_{k_1..k_m}, V_{n_1..n_r}
            std::vector<int> fdims{v.dim(m)};
            for (int x : ks) fdims.push_back(v.dim(x));
            for (int x : ns) fdims.push_back(v.dim(x));
            Matrix lhs =
                s.at(key_of(r, ns)) *
                kron({s.at(key_of(m, ks)),
                      Matrix::identity(static_cast<int>(dn))});
            // regroup ns by ks
            std::vector<std::vector<int>> groups(m);
            std::vector<int> delta(m, 0);
            {
              int pos = 0;
              for (int j = 0; j < m; ++j)
                for (int t = 0; t < ks[j]; ++t) {
                  groups[j].push_back(ns[pos]);
                  delta[j] += ns[pos];
                  ++pos;
                }
            }
            std::vector<int> tau{0};
            {
              int base = 1 + m;
              std::vector<int> off(m, 0);
              for (int j = 1; j < m; ++j) off[j] = off[j - 1] + ks[j - 1];
              for (int j = 0; j < m; ++j) {
                tau.push_back(1 + j);
                for (int t = 0; t < ks[j]; ++t)
                  tau.push_back(base + off[j] + t);
              }
            }
            std::vector<Matrix> inners{Matrix::identity(v.dim(m))};
            for (int j = 0; j < m; ++j)
              inners.push_back(s.at(key_of(ks[j], groups[j])));
            Matrix rhs = s.at(key_of(m, delta)) * kron(inners) *
                         factor_reorder(fdims, tau);
            std::vector<int> idx{m};
            idx.insert(idx.end(), ks.begin(), ks.end());
            idx.insert(idx.end(), ns.begin(), ns.end());
            check_eq(rep, A, idx, lhs, rhs);
          }
      }
  }
  // units
  for (int n = 0; n <= N; ++n) {
    if (v.dim(n) == 0) continue;
    Matrix id = Matrix::identity(v.dim(n));
    check_eq(rep, U + "-outer", {n},
             s.at({1, n}) * kron(s.unit[0], id), id);
  }
  for (int m = 0; m <= N; ++m) {
    if (v.dim(m) == 0 || m > N) continue;
    Matrix id = Matrix::identity(v.dim(m));
    std::vector<Matrix> units{id};
    for (int j = 0; j < m; ++j) units.push_back(s.unit[0]);
    check_eq(rep, U + "-inner", {m},
             s.at(key_of(m, std::vector<int>(m, 1))) * kron(units), id);
  }
  // equivariance
  if (s.sym) {
    const SymmetricSequence& rho = *s.sym;
    for (int m = 0; m <= N; ++m) {
      if (v.dim(m) == 0) continue;
      for (int n = 0; n <= N; ++n)
        for (const auto& ns : compositions(n, m)) {
          long dn = 1;
          for (int x : ns) dn *= v.dim(x);
          if (dn == 0) continue;
          const Matrix& mu = s.at(key_of(m, ns));
          // inner slots
          std::vector<int> off(m, 0);
          for (int j = 1; j < m; ++j) off[j] = off[j - 1] + ns[j - 1];
          for (int j = 0; j < m; ++j)
            for (int i = 0; i + 2 <= ns[j]; ++i) {
              std::vector<Matrix> fs{Matrix::identity(v.dim(m))};
              for (int t = 0; t < m; ++t)
                fs.push_back(t == j ? rho.gens[ns[j]][i]
                                    : Matrix::identity(v.dim(ns[t])));
              std::vector<int> idx{m};
              idx.insert(idx.end(), ns.begin(), ns.end());
              idx.push_back(j);
              idx.push_back(i);
              check_eq(rep, "equivariance-inner", idx, mu * kron(fs),
                       rho.gens[n][off[j] + i] * mu);
            }
          // outer slots
          for (int j = 0; j + 2 <= m; ++j) {
            std::vector<int> ns2 = ns;
            std::swap(ns2[j], ns2[j + 1]);
            std::vector<int> fdims;
            for (int x : ns) fdims.push_back(v.dim(x));
            std::vector<int> tau(m);
            std::iota(tau.begin(), tau.end(), 0);
            std::swap(tau[j], tau[j + 1]);
            Matrix lhs = s.at(key_of(m, ns2)) *
                         kron(rho.gens[m][j], factor_reorder(fdims, tau));
            Perm pi =
                block_permutation(adjacent_transposition(m, j), ns);
            Matrix rhs = species_action(rho, n, pi) * mu;
            std::vector<int> idx{m};
            idx.insert(idx.end(), ns.begin(), ns.end());
            idx.push_back(j);
            check_eq(rep, "equivariance-outer", idx, lhs, rhs);
          }
        }
    }
  }
}

void validate_shapes(const Structured& s, Report& rep) {
  int N = s.carrier.truncation;
  for (const auto& key : structure_keys(s.kind, N)) {
    auto it = s.comps.find(key);
    if (it == s.comps.end()) {
      rep.add("component-present", key, false, "missing");
      continue;
    }
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    if (kind_is_comonoid(s.kind)) std::swap(r, c);
    if (it->second.rows() != r || it->second.cols() != c)
      rep.add("component-shape", key, false, "wrong shape");
  }
  size_t want_units =
      kind_product(s.kind) == ProductKind::Hadamard ? N + 1 : 1;
  if (s.unit.size() != want_units)
    rep.add("unit-present", {}, false, "wrong count");
  if (kind_is_species(s.kind)) {
    if (!s.sym || !(s.sym->ob == s.carrier))
      rep.add("actions-present", {}, false, "missing or mismatched actions");
    else if (!coxeter_check(*s.sym))
      rep.add("coxeter", {}, false, "generator relations fail");
  }
}

}  // namespace

Report check_structure(const Structured& s) {
  Report rep;
  validate_shapes(s, rep);
  if (!rep.ok()) return rep;
  bool co = kind_is_comonoid(s.kind);
  const Structured& m = co ? transpose_all(s) : s;
  const Structured& use = co ? m : s;
  switch (kind_product(s.kind)) {
    case ProductKind::Cauchy:
      check_cauchy_monoid(use, rep, co);
      break;
    case ProductKind::Hadamard:
      check_hadamard_monoid(use, rep, co);
      break;
    case ProductKind::Substitution:
      check_operad(use, rep, co);
      break;
  }
  return rep;
}

GradedMap assemble_mult(const Structured& s) {
  if (kind_is_comonoid(s.kind)) throw Error("mult needs a monoid kind");
  if (kind_is_species(s.kind))
    throw Error("assembly implemented for graded kinds only");
  const GradedObject& v = s.carrier;
  int N = v.truncation;
  std::vector<Matrix> comps;
  GradedObject src(N, std::vector<int>(N + 1, 0));
  switch (kind_product(s.kind)) {
    case ProductKind::Cauchy: {
      src = cauchy(v, v);
      for (int n = 0; n <= N; ++n) {
        std::vector<Matrix> cols;
        for (int k = 0; k <= n; ++k) cols.push_back(s.at({k, n - k}));
        comps.push_back(hcat(cols));
      }
      break;
    }
    case ProductKind::Hadamard: {
      src = hadamard(v, v);
      for (int n = 0; n <= N; ++n) comps.push_back(s.at({n}));
      break;
    }
    case ProductKind::Substitution: {
      src = substitution_truncated(v, v);
      for (int n = 0; n <= N; ++n) {
        std::vector<Matrix> cols;
        for (const auto& blk : substitution_blocks(N, n, false))
          cols.push_back(s.at(key_of(blk.m, blk.comp)));
        comps.push_back(hcat(cols));
      }
      break;
    }
  }
  return GradedMap(src, v, std::move(comps));
}

GradedMap assemble_comult(const Structured& s) {
  if (!kind_is_comonoid(s.kind)) throw Error("comult needs a comonoid kind");
  Structured t = transpose_all(s);
  GradedMap m = assemble_mult(t);
  std::vector<Matrix> comps;
  for (const auto& c : m.components) comps.push_back(c.transpose());
  return GradedMap(m.target, m.source, std::move(comps));
}

GradedMap assemble_unit(const Structured& s) {
  if (kind_is_comonoid(s.kind)) throw Error("unit needs a monoid kind");
  const GradedObject& v = s.carrier;
  int N = v.truncation;
  std::vector<Matrix> comps(N + 1);
  GradedObject src(N, std::vector<int>(N + 1, 0));
  switch (kind_product(s.kind)) {
    case ProductKind::Cauchy:
      src = cauchy_unit(N);
      comps[0] = s.unit[0];
      for (int n = 1; n <= N; ++n) comps[n] = Matrix(v.dim(n), 0);
      break;
    case ProductKind::Hadamard:
      src = hadamard_unit(N);
      for (int n = 0; n <= N; ++n) comps[n] = s.unit[n];
      break;
    case ProductKind::Substitution:
      src = substitution_unit(N);
      for (int n = 0; n <= N; ++n)
        comps[n] = n == 1 ? s.unit[0] : Matrix(v.dim(n), 0);
      break;
  }
  return GradedMap(src, v, std::move(comps));
}

GradedMap assemble_counit(const Structured& s) {
  Structured t = transpose_all(s);
  GradedMap m = assemble_unit(t);
  std::vector<Matrix> comps;
  for (const auto& c : m.components) comps.push_back(c.transpose());
  return GradedMap(m.target, m.source, std::move(comps));
}

Structured structure_from_maps(StructureKind kind, const GradedObject& carrier,
                               const GradedMap& op, const GradedMap& unit_map) {
  if (kind_is_species(kind))
    throw Error("assembly implemented for graded kinds only");
  bool co = kind_is_comonoid(kind);
  int N = carrier.truncation;
  ProductKind p = kind_product(kind);
  GradedObject pv = product(p, carrier, carrier);
  GradedObject u = product_unit_object(p, N);
  if ((co ? op.source : op.target) != carrier ||
      (co ? op.target : op.source) != pv ||
      (co ? unit_map.source : unit_map.target) != carrier ||
      (co ? unit_map.target : unit_map.source) != u)
    throw Error("shape mismatch");
  Structured s;
  s.kind = kind;
  s.carrier = carrier;
  auto slice = [&](int n, int off, int w) {
    return co ? op.at(n).block(off, 0, w, carrier.dim(n))
              : op.at(n).block(0, off, carrier.dim(n), w);
  };
  switch (p) {
    case ProductKind::Cauchy:
      for (const auto& key : structure_keys(kind, N))
        s.comps[key] =
            slice(key[0] + key[1],
                  cauchy_block_offset(carrier, carrier, key[0] + key[1],
                                      key[0]),
                  carrier.dim(key[0]) * carrier.dim(key[1]));
      s.unit = {unit_map.at(0)};
      break;
    case ProductKind::Hadamard:
      for (int n = 0; n <= N; ++n) {
        s.comps[{n}] = slice(n, 0, carrier.dim(n) * carrier.dim(n));
        s.unit.push_back(unit_map.at(n));
      }
      break;
    case ProductKind::Substitution:
      for (int n = 0; n <= N; ++n) {
        int off = 0;
        for (const auto& blk : substitution_blocks(N, n, false)) {
          int w = carrier.dim(blk.m);
          for (int part : blk.comp) w *= carrier.dim(part);
          s.comps[key_of(blk.m, blk.comp)] = slice(n, off, w);
          off += w;
        }
      }
      s.unit = {unit_map.at(1)};
      break;
  }
  return s;
}

Structured structure_dual(const Structured& s) { return transpose_all(s); }

Structured operad_dual(const Structured& s) {
  if (kind_product(s.kind) != ProductKind::Substitution)
    throw Error("operad dual needs a substitution kind");
  if (!positive_check(s.carrier)) throw Error("non-positive carrier");
  return transpose_all(s);
}

Structured hadamard_of_monoids(const Structured& a, const Structured& b) {
  if (a.kind != b.kind) throw Error("kind mismatch");
  if (kind_is_comonoid(a.kind))
    return structure_dual(
        hadamard_of_monoids(structure_dual(a), structure_dual(b)));
  if (a.carrier.truncation != b.carrier.truncation)
    throw Error("truncation mismatch");
  int N = a.carrier.truncation;
  Structured h;
  h.kind = a.kind;
  h.carrier = hadamard(a.carrier, b.carrier);
  if (kind_is_species(a.kind)) h.sym = species_hadamard(*a.sym, *b.sym);
  for (const auto& key : structure_keys(a.kind, N)) {
    const Matrix& ma = a.at(key);
    const Matrix& mb = b.at(key);
    // interleaved source factors (A_x, B_x) per slot -> grouped (A..., B...)
    std::vector<int> slots;
    switch (kind_product(a.kind)) {
      case ProductKind::Cauchy:
        slots = {key[0], key[1]};
        break;
      case ProductKind::Hadamard:
        slots = {key[0], key[0]};
        break;
      case ProductKind::Substitution:
        slots = key;  // m, n_1..n_m
        break;
    }
    int f = static_cast<int>(slots.size());
    std::vector<int> fdims;
    std::vector<int> tau;
    for (int t = 0; t < f; ++t) {
      fdims.push_back(a.carrier.dim(slots[t]));
      fdims.push_back(b.carrier.dim(slots[t]));
    }
    for (int t = 0; t < f; ++t) tau.push_back(2 * t);
    for (int t = 0; t < f; ++t) tau.push_back(2 * t + 1);
    h.comps[key] = kron(ma, mb) * factor_reorder(fdims, tau);
  }
  for (size_t i = 0; i < a.unit.size(); ++i)
    h.unit.push_back(kron(a.unit[i], b.unit[i]));
  return h;
}

Structured unit_monoid(ProductKind p, int truncation) {
  int N = truncation;
  Structured s;
  switch (p) {
    case ProductKind::Cauchy: {
      s.kind = StructureKind::GradedMonoid;
      s.carrier = cauchy_unit(N);
      break;
    }
    case ProductKind::Hadamard: {
      s.kind = StructureKind::HadamardMonoid;
      s.carrier = hadamard_unit(N);
      break;
    }
    case ProductKind::Substitution: {
      s.kind = StructureKind::Operad;
      s.carrier = substitution_unit(N);
      break;
    }
  }
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix m(r, c);
    if (r == 1 && c == 1) m(0, 0) = 1;
    s.comps[key] = std::move(m);
  }
  if (p == ProductKind::Hadamard)
    s.unit.assign(N + 1, Matrix::scalar(1));
  else
    s.unit.push_back(Matrix::scalar(1));
  return s;
}

Structured unit_comonoid(ProductKind p, int truncation) {
  return structure_dual(unit_monoid(p, truncation));
}

namespace {

Structured make_poly(int N) {
  Structured s;
  s.kind = StructureKind::GradedMonoid;
  s.carrier = hadamard_unit(N);  // dims all 1
  for (const auto& key : structure_keys(s.kind, N))
    s.comps[key] = Matrix::scalar(1);
  s.unit.push_back(Matrix::scalar(1));
  return s;
}

Structured make_poly3_deg0(int N) {
  Structured s;
  s.kind = StructureKind::GradedMonoid;
  std::vector<int> d(N + 1, 0);
  d[0] = 3;
  s.carrier = GradedObject(N, d);
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix m(r, c);
    if (key[0] == 0 && key[1] == 0)
      // basis 1, x, x^2 with x^3 = 0
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i + j < 3) m(i + j, i * 3 + j) = 1;
    s.comps[key] = std::move(m);
  }
  Matrix eta(3, 1);
  eta(0, 0) = 1;
  s.unit.push_back(std::move(eta));
  return s;
}

Structured make_grouplike2(int N) {
  Structured s;
  s.kind = StructureKind::GradedComonoid;
  std::vector<int> d(N + 1, 0);
  d[0] = 2;
  s.carrier = GradedObject(N, d);
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix m(c, r);  // comonoid orientation
    if (key[0] == 0 && key[1] == 0) {
      m(0, 0) = 1;  // e -> e(x)e
      m(3, 1) = 1;  // g -> g(x)g
    }
    s.comps[key] = std::move(m);
  }
  Matrix eps(1, 2);
  eps(0, 0) = 1;
  eps(0, 1) = 1;
  s.unit.push_back(std::move(eps));
  return s;
}

Structured make_com(int N) {
  Structured s;
  s.kind = StructureKind::SymmetricOperad;
  std::vector<int> d(N + 1, 1);
  d[0] = 0;
  s.carrier = GradedObject(N, d);
  s.sym = trivial_species(s.carrier);
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix m(r, c);
    if (r == 1 && c == 1) m(0, 0) = 1;
    s.comps[key] = std::move(m);
  }
  s.unit.push_back(Matrix::scalar(1));
  return s;
}

int perm_index(const std::vector<Perm>& group, const Perm& p) {
  for (size_t i = 0; i < group.size(); ++i)
    if (group[i] == p) return static_cast<int>(i);
  throw Error("permutation not found");
}

Structured make_ass(int N) {
  Structured s;
  s.kind = StructureKind::SymmetricOperad;
  std::vector<int> d(N + 1);
  d[0] = 0;
  std::vector<std::vector<Perm>> sn(N + 1);
  for (int n = 1; n <= N; ++n) {
    sn[n] = symmetric_group(n);
    d[n] = static_cast<int>(sn[n].size());
  }
  s.carrier = GradedObject(N, d);
  std::vector<std::vector<Matrix>> gens(N + 1);
  for (int n = 2; n <= N; ++n)
    for (int i = 0; i + 2 <= n; ++i) {
      std::vector<int> p(d[n]);
      for (int a = 0; a < d[n]; ++a)
        p[a] = perm_index(
            sn[n], perm_compose(sn[n][a], adjacent_transposition(n, i)));
      gens[n].push_back(Matrix::permutation(p));
    }
  s.sym = SymmetricSequence(s.carrier, std::move(gens));
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix mat(r, c);
    int m = key[0];
    std::vector<int> parts(key.begin() + 1, key.end());
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    bool live = m >= 1 && n >= 1;
    for (int x : parts) live = live && x >= 1;
    if (live && c > 0) {
      // column = (sigma, tau_1..tau_m); result = blockperm(sigma) o (sum tau)
      std::vector<int> col_idx(m + 1, 0);
      std::vector<int> radii{d[m]};
      for (int x : parts) radii.push_back(d[x]);
      long total = 1;
      for (int x : radii) total *= x;
      std::vector<int> off(m, 0);
      for (int j = 1; j < m; ++j) off[j] = off[j - 1] + parts[j - 1];
      for (long colv = 0; colv < total; ++colv) {
        const Perm& sigma = sn[m][col_idx[0]];
        Perm tsum(n);
        for (int j = 0; j < m; ++j) {
          const Perm& t = sn[parts[j]][col_idx[1 + j]];
          for (int i = 0; i < parts[j]; ++i) tsum[off[j] + i] = off[j] + t[i];
        }
        Perm pi = perm_compose(block_permutation(sigma, parts), tsum);
        long col = 0;
        for (int t = 0; t <= m; ++t) col = col * radii[t] + col_idx[t];
        mat(perm_index(sn[n], pi), static_cast<int>(col)) = 1;
        for (int t = m; t >= 0; --t) {
          if (++col_idx[t] < radii[t]) break;
          col_idx[t] = 0;
        }
      }
    }
    if (m == 0 && parts.empty()) mat = Matrix::identity(d[0]);
    s.comps[key] = std::move(mat);
  }
  Matrix eta(1, 1);
  eta(0, 0) = 1;
  s.unit.push_back(std::move(eta));
  return s;
}

Structured make_end2(int N) {
  // endomorphism operad of a 2-dimensional space: degree n is the maps
  // V^(x)n -> V, composition is substitution of multilinear maps.
  const int dv = 2;
  Structured s;
  s.kind = StructureKind::Operad;
  std::vector<int> d(N + 1);
  for (int n = 0; n <= N; ++n) d[n] = dv * (1 << n);  // dv^{n+1} with dv=2
  s.carrier = GradedObject(N, d);
  // basis of degree n: h = j*dv + i where j indexes V^(x)n and i the target
  auto digits = [&](long j, int n) {
    std::vector<int> out(n);
    for (int t = n - 1; t >= 0; --t) {
      out[t] = static_cast<int>(j % dv);
      j /= dv;
    }
    return out;
  };
  for (const auto& key : structure_keys(s.kind, N)) {
    auto [r, c] = comp_shape(s.kind, s.carrier, key);
    Matrix mat(r, c);
    int m = key[0];
    std::vector<int> parts(key.begin() + 1, key.end());
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    // column = (f, g_1..g_m): f = (i, j-digits over m), g_t = (i_t, digits)
    std::vector<long> radii{d[m]};
    for (int x : parts) radii.push_back(d[x]);
    long total = 1;
    for (long x : radii) total *= x;
    std::vector<long> idx(m + 1, 0);
    for (long colv = 0; colv < total; ++colv) {
      long fi = idx[0] % dv, fj = idx[0] / dv;
      auto fdig = digits(fj, m);
      bool match = true;
      std::vector<int> concat;
      for (int t = 0; t < m && match; ++t) {
        long gi = idx[1 + t] % dv, gj = idx[1 + t] / dv;
        if (gi != fdig[t]) match = false;
        auto gd = digits(gj, parts[t]);
        concat.insert(concat.end(), gd.begin(), gd.end());
      }
      if (match) {
        long row_j = 0;
        for (int x : concat) row_j = row_j * dv + x;
        long row = row_j * dv + fi;
        long col = 0;
        for (int t = 0; t <= m; ++t) col = col * radii[t] + idx[t];
        mat(static_cast<int>(row), static_cast<int>(col)) = 1;
      }
      for (int t = m; t >= 0; --t) {
        if (++idx[t] < radii[t]) break;
        idx[t] = 0;
      }
    }
    s.comps[key] = std::move(mat);
  }
  // unit: the identity map of V inside degree 1
  Matrix eta(d[1], 1);
  for (int i = 0; i < dv; ++i) eta(i * dv + i, 0) = 1;
  s.unit.push_back(std::move(eta));
  return s;
}

}  // namespace

Structured example_library(const std::string& name, int truncation) {
  if (name == "poly") return make_poly(truncation);
  if (name == "divided-power") return structure_dual(make_poly(truncation));
  if (name == "poly3-deg0") return make_poly3_deg0(truncation);
  if (name == "grouplike2") return make_grouplike2(truncation);
  if (name == "com") return make_com(truncation);
  if (name == "ass") return make_ass(truncation);
  if (name == "end2") return make_end2(truncation);
  if (name == "had-unit") return unit_monoid(ProductKind::Hadamard, truncation);
  throw Error("unknown example: " + name);
}

std::vector<std::string> example_library_names() {
  return {"poly", "divided-power", "poly3-deg0", "grouplike2",
          "com",  "ass",           "end2",       "had-unit"};
}

}  // namespace duocat
