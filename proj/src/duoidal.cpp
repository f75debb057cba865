#include "duocat/duoidal.hpp"

#include <numeric>
#include <sstream>

namespace duocat {

ProductKind pair_outer(PairTag t) {
  switch (t) {
    case PairTag::CauchyOverHadamard: return ProductKind::Cauchy;
    case PairTag::HadamardOverCauchy: return ProductKind::Hadamard;
    case PairTag::SubOverHadamard: return ProductKind::Substitution;
    case PairTag::HadamardOverSubPositive: return ProductKind::Hadamard;
  }
  throw Error("unknown pair");
}

ProductKind pair_inner(PairTag t) {
  switch (t) {
    case PairTag::CauchyOverHadamard: return ProductKind::Hadamard;
    case PairTag::HadamardOverCauchy: return ProductKind::Cauchy;
    case PairTag::SubOverHadamard: return ProductKind::Hadamard;
    case PairTag::HadamardOverSubPositive: return ProductKind::Substitution;
  }
  throw Error("unknown pair");
}

std::string pair_name(PairTag t) {
  switch (t) {
    case PairTag::CauchyOverHadamard: return "cauchy-over-hadamard";
    case PairTag::HadamardOverCauchy: return "hadamard-over-cauchy";
    case PairTag::SubOverHadamard: return "sub-over-hadamard";
    case PairTag::HadamardOverSubPositive:
      return "hadamard-over-sub-positive";
  }
  throw Error("unknown pair");
}

PairTag pair_from_name(const std::string& s) {
  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy,
        PairTag::SubOverHadamard, PairTag::HadamardOverSubPositive})
    if (pair_name(t) == s) return t;
  throw Error("unknown pair: " + s);
}

namespace {

// mixed-radix helpers, most significant digit first
long mix(const std::vector<int>& dig, const std::vector<int>& dims) {
  long v = 0;
  for (size_t i = 0; i < dims.size(); ++i) v = v * dims[i] + dig[i];
  return v;
}

bool advance(std::vector<int>& dig, const std::vector<int>& dims) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    if (++dig[i] < dims[i]) return true;
    dig[i] = 0;
  }
  return false;
}

long dim_product(const std::vector<int>& dims) {
  long v = 1;
  for (int d : dims) v *= d;
  return v;
}

GradedMap inter_cauchy_over_had(const GradedObject& a, const GradedObject& b,
                                const GradedObject& c, const GradedObject& d) {
  int N = a.truncation;
  GradedObject ab = hadamard(a, b), cd = hadamard(c, d);
  GradedObject src = cauchy(ab, cd);
  GradedObject ac = cauchy(a, c), bd = cauchy(b, d);
  GradedObject tgt = hadamard(ac, bd);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    for (int k = 0; k <= n; ++k) {
      int m = n - k;
      int da = a.dim(k), db = b.dim(k), dc = c.dim(m), dd = d.dim(m);
      if (da * db * dc * dd == 0) continue;
      int so = cauchy_block_offset(ab, cd, n, k);
      int oac = cauchy_block_offset(a, c, n, k);
      int obd = cauchy_block_offset(b, d, n, k);
      std::vector<int> dims{da, db, dc, dd}, g(4, 0);
      do {
        long col = so + mix(g, dims);
        long row = (oac + g[0] * dc + g[2]) * static_cast<long>(bd.dim(n)) +
                   obd + g[1] * dd + g[3];
        z(static_cast<int>(row), static_cast<int>(col)) = 1;
      } while (advance(g, dims));
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

GradedMap inter_had_over_cauchy(const GradedObject& a, const GradedObject& b,
                                const GradedObject& c, const GradedObject& d) {
  int N = a.truncation;
  GradedObject sab = cauchy(a, b), scd = cauchy(c, d);
  GradedObject src = hadamard(sab, scd);
  GradedObject tac = hadamard(a, c), tbd = hadamard(b, d);
  GradedObject tgt = cauchy(tac, tbd);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    for (int k = 0; k <= n; ++k) {
      int m = n - k;
      int da = a.dim(k), db = b.dim(m), dc = c.dim(k), dd = d.dim(m);
      if (da * db * dc * dd == 0) continue;
      int oab = cauchy_block_offset(a, b, n, k);
      int ocd = cauchy_block_offset(c, d, n, k);
      int ot = cauchy_block_offset(tac, tbd, n, k);
      std::vector<int> dims{da, db, dc, dd}, g(4, 0);
      do {
        long col = (oab + g[0] * db + g[1]) * static_cast<long>(scd.dim(n)) +
                   ocd + g[2] * dd + g[3];
        long row = ot + ((g[0] * dc + g[2]) * static_cast<long>(db * dd) +
                         g[1] * dd + g[3]);
        z(static_cast<int>(row), static_cast<int>(col)) = 1;
      } while (advance(g, dims));
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

GradedMap inter_sub_over_had(const GradedObject& a, const GradedObject& b,
                             const GradedObject& c, const GradedObject& d) {
  int N = a.truncation;
  GradedObject ab = hadamard(a, b), cd = hadamard(c, d);
  GradedObject src = substitution_truncated(ab, cd);
  GradedObject ac = substitution_truncated(a, c);
  GradedObject bd = substitution_truncated(b, d);
  GradedObject tgt = hadamard(ac, bd);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    long soff = 0, oac = 0, obd = 0;
    for (const auto& blk : substitution_blocks(N, n, false)) {
      int m = blk.m;
      std::vector<int> fdims{a.dim(m), b.dim(m)};
      std::vector<int> acdims{a.dim(m)}, bddims{b.dim(m)};
      for (int x : blk.comp) {
        fdims.push_back(c.dim(x));
        fdims.push_back(d.dim(x));
        acdims.push_back(c.dim(x));
        bddims.push_back(d.dim(x));
      }
      long sdim = dim_product(fdims);
      long acdim = dim_product(acdims), bddim = dim_product(bddims);
      if (sdim > 0) {
        int r = static_cast<int>(blk.comp.size());
        std::vector<int> g(fdims.size(), 0);
        do {
          std::vector<int> ga{g[0]}, gb{g[1]};
          for (int i = 0; i < r; ++i) {
            ga.push_back(g[2 + 2 * i]);
            gb.push_back(g[3 + 2 * i]);
          }
          long col = soff + mix(g, fdims);
          long row = (oac + mix(ga, acdims)) * static_cast<long>(bd.dim(n)) +
                     obd + mix(gb, bddims);
          z(static_cast<int>(row), static_cast<int>(col)) = 1;
        } while (advance(g, fdims));
      }
      soff += sdim;
      oac += acdim;
      obd += bddim;
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

GradedMap inter_had_over_sub(const GradedObject& a, const GradedObject& b,
                             const GradedObject& c, const GradedObject& d) {
  for (const GradedObject* v : {&a, &b, &c, &d})
    if (!positive_check(*v)) throw Error("requires positive objects");
  int N = a.truncation;
  GradedObject sab = substitution_truncated(a, b);
  GradedObject scd = substitution_truncated(c, d);
  GradedObject src = hadamard(sab, scd);
  GradedObject tgt =
      substitution_truncated(hadamard(a, c), hadamard(b, d));
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    long oab = 0, ocd = 0, ot = 0;
    for (const auto& blk : substitution_blocks(N, n, false)) {
      int m = blk.m;
      std::vector<int> abdims{a.dim(m)}, cddims{c.dim(m)};
      std::vector<int> tdims;
      tdims.push_back(a.dim(m));
      tdims.push_back(c.dim(m));
      for (int x : blk.comp) {
        abdims.push_back(b.dim(x));
        cddims.push_back(d.dim(x));
        tdims.push_back(b.dim(x));
        tdims.push_back(d.dim(x));
      }
      long abdim = dim_product(abdims), cddim = dim_product(cddims);
      if (abdim * cddim > 0) {
        int r = static_cast<int>(blk.comp.size());
        std::vector<int> gab(abdims.size(), 0);
        do {
          std::vector<int> gcd(cddims.size(), 0);
          do {
            std::vector<int> gt{gab[0], gcd[0]};
            for (int i = 0; i < r; ++i) {
              gt.push_back(gab[1 + i]);
              gt.push_back(gcd[1 + i]);
            }
            long col = (oab + mix(gab, abdims)) *
                           static_cast<long>(scd.dim(n)) +
                       ocd + mix(gcd, cddims);
            long row = ot + mix(gt, tdims);
            z(static_cast<int>(row), static_cast<int>(col)) = 1;
          } while (advance(gcd, cddims));
        } while (advance(gab, abdims));
      }
      oab += abdim;
      ocd += cddim;
      ot += abdim * cddim;
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

}  // namespace

GradedMap interchange(PairTag t, const GradedObject& a, const GradedObject& b,
                      const GradedObject& c, const GradedObject& d) {
  if (a.truncation != b.truncation || a.truncation != c.truncation ||
      a.truncation != d.truncation)
    throw Error("truncation mismatch");
  switch (t) {
    case PairTag::CauchyOverHadamard: return inter_cauchy_over_had(a, b, c, d);
    case PairTag::HadamardOverCauchy: return inter_had_over_cauchy(a, b, c, d);
    case PairTag::SubOverHadamard: return inter_sub_over_had(a, b, c, d);
    case PairTag::HadamardOverSubPositive:
      return inter_had_over_sub(a, b, c, d);
  }
  throw Error("unknown pair");
}

namespace {

GradedMap sp_inter_cauchy_over_had(const SymmetricSequence& a,
                                   const SymmetricSequence& b,
                                   const SymmetricSequence& c,
                                   const SymmetricSequence& d) {
  int N = a.ob.truncation;
  GradedObject ga = a.ob, gb = b.ob, gc = c.ob, gd = d.ob;
  GradedObject ab = hadamard(ga, gb), cd = hadamard(gc, gd);
  GradedObject src = forget_to_graded(
      species_cauchy(species_hadamard(a, b), species_hadamard(c, d)));
  GradedObject ac = forget_to_graded(species_cauchy(a, c));
  GradedObject bd = forget_to_graded(species_cauchy(b, d));
  GradedObject tgt = hadamard(ac, bd);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    auto sblk = species_cauchy_blocks(ab, cd, n);
    auto acblk = species_cauchy_blocks(ga, gc, n);
    auto bdblk = species_cauchy_blocks(gb, gd, n);
    for (size_t i = 0; i < sblk.size(); ++i) {
      int k = sblk[i].k, m = n - k;
      int da = ga.dim(k), db = gb.dim(k), dc = gc.dim(m), dd = gd.dim(m);
      if (da * db * dc * dd == 0) continue;
      std::vector<int> dims{da, db, dc, dd}, g(4, 0);
      do {
        long col = sblk[i].offset + mix(g, dims);
        long row = (acblk[i].offset + g[0] * dc + g[2]) *
                       static_cast<long>(bd.dim(n)) +
                   bdblk[i].offset + g[1] * dd + g[3];
        z(static_cast<int>(row), static_cast<int>(col)) = 1;
      } while (advance(g, dims));
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

GradedMap sp_inter_had_over_cauchy(const SymmetricSequence& a,
                                   const SymmetricSequence& b,
                                   const SymmetricSequence& c,
                                   const SymmetricSequence& d) {
  int N = a.ob.truncation;
  GradedObject ga = a.ob, gb = b.ob, gc = c.ob, gd = d.ob;
  GradedObject sab = forget_to_graded(species_cauchy(a, b));
  GradedObject scd = forget_to_graded(species_cauchy(c, d));
  GradedObject src = hadamard(sab, scd);
  GradedObject tgt = forget_to_graded(
      species_cauchy(species_hadamard(a, c), species_hadamard(b, d)));
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix z(tgt.dim(n), src.dim(n));
    auto abblk = species_cauchy_blocks(ga, gb, n);
    auto cdblk = species_cauchy_blocks(gc, gd, n);
    auto tblk =
        species_cauchy_blocks(hadamard(ga, gc), hadamard(gb, gd), n);
    for (size_t i = 0; i < abblk.size(); ++i) {
      int k = abblk[i].k, m = n - k;
      int da = ga.dim(k), db = gb.dim(m), dc = gc.dim(k), dd = gd.dim(m);
      if (da * db * dc * dd == 0) continue;
      std::vector<int> dims{da, db, dc, dd}, g(4, 0);
      do {
        long col = (abblk[i].offset + g[0] * db + g[1]) *
                       static_cast<long>(scd.dim(n)) +
                   cdblk[i].offset + g[2] * dd + g[3];
        long row = tblk[i].offset +
                   ((g[0] * dc + g[2]) * static_cast<long>(db * dd) +
                    g[1] * dd + g[3]);
        z(static_cast<int>(row), static_cast<int>(col)) = 1;
      } while (advance(g, dims));
    }
    comps.push_back(std::move(z));
  }
  return GradedMap(src, tgt, std::move(comps));
}

// routing on the un-quotiented spaces of one m-block:
// (A(x)B)_m (x) ((C(x)D)^{.m})_n -> [A_m (x) (C^{.m})_n] (x) [B_m (x)
// (D^{.m})_n], diagonal on (composition, shuffle) blocks.
Matrix sub_pre_route(const GradedObject& a, const GradedObject& b,
                     const GradedObject& c, const GradedObject& d, int m,
                     int n) {
  GradedObject cd = hadamard(c, d);
  auto sblk = species_m_fold_blocks(cd, m, n);
  auto cblk = species_m_fold_blocks(c, m, n);
  auto dblk = species_m_fold_blocks(d, m, n);
  long cfold = 0, dfold = 0, cdfold = 0;
  for (size_t i = 0; i < sblk.size(); ++i) {
    cdfold += sblk[i].dim;
    cfold += cblk[i].dim;
    dfold += dblk[i].dim;
  }
  long preab = static_cast<long>(a.dim(m)) * b.dim(m) * cdfold;
  long preac = a.dim(m) * cfold, prebd = b.dim(m) * dfold;
  Matrix z(static_cast<int>(preac * prebd), static_cast<int>(preab));
  int da = a.dim(m), db = b.dim(m);
  if (da * db == 0) return z;
  for (size_t i = 0; i < sblk.size(); ++i) {
    if (sblk[i].dim == 0) continue;
    std::vector<int> fdims{da, db};
    std::vector<int> cdims{da}, ddims{db};
    for (int x : sblk[i].comp) {
      fdims.push_back(c.dim(x));
      fdims.push_back(d.dim(x));
      cdims.push_back(c.dim(x));
      ddims.push_back(d.dim(x));
    }
    int r = static_cast<int>(sblk[i].comp.size());
    std::vector<int> g(fdims.size(), 0);
    do {
      std::vector<int> ga{g[0]}, gb{g[1]};
      for (int t = 0; t < r; ++t) {
        ga.push_back(g[2 + 2 * t]);
        gb.push_back(g[3 + 2 * t]);
      }
      // index of A_m (x) (C^{.m})_n with the C-block at its offset
      long u = g[0] * cfold + cblk[i].offset +
               mix(std::vector<int>(ga.begin() + 1, ga.end()),
                   std::vector<int>(cdims.begin() + 1, cdims.end()));
      long v = g[1] * dfold + dblk[i].offset +
               mix(std::vector<int>(gb.begin() + 1, gb.end()),
                   std::vector<int>(ddims.begin() + 1, ddims.end()));
      long col = (static_cast<long>(g[0]) * db + g[1]) * cdfold +
                 sblk[i].offset +
                 mix(std::vector<int>(g.begin() + 2, g.end()),
                     std::vector<int>(fdims.begin() + 2, fdims.end()));
      z(static_cast<int>(u * prebd + v), static_cast<int>(col)) = 1;
    } while (advance(g, fdims));
  }
  return z;
}

GradedMap sp_inter_sub_over_had(const SymmetricSequence& a,
                                const SymmetricSequence& b,
                                const SymmetricSequence& c,
                                const SymmetricSequence& d) {
  int N = a.ob.truncation;
  SpeciesSubstitution x =
      species_substitution(species_hadamard(a, b), species_hadamard(c, d));
  SpeciesSubstitution xac = species_substitution(a, c);
  SpeciesSubstitution xbd = species_substitution(b, d);
  GradedObject src = forget_to_graded(x.result);
  GradedObject gac = forget_to_graded(xac.result);
  GradedObject gbd = forget_to_graded(xbd.result);
  GradedObject tgt = hadamard(gac, gbd);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> cols;
    long offac = 0, offbd = 0;
    std::vector<long> oac(N + 1), obd(N + 1);
    for (int m = 0; m <= N; ++m) {
      oac[m] = offac;
      obd[m] = offbd;
      offac += xac.quotient[n][m].rows();
      offbd += xbd.quotient[n][m].rows();
    }
    for (int m = 0; m <= N; ++m) {
      const Matrix& inc = x.inclusion[n][m];
      Matrix pre = sub_pre_route(a.ob, b.ob, c.ob, d.ob, m, n);
      // pad quotients into the full coinvariant sums
      const Matrix& qac = xac.quotient[n][m];
      const Matrix& qbd = xbd.quotient[n][m];
      Matrix pac(gac.dim(n), qac.cols());
      pac.set_block(static_cast<int>(oac[m]), 0, qac);
      Matrix pbd(gbd.dim(n), qbd.cols());
      pbd.set_block(static_cast<int>(obd[m]), 0, qbd);
      cols.push_back(kron(pac, pbd) * pre * inc);
    }
    comps.push_back(hcat(cols));
  }
  return GradedMap(src, tgt, std::move(comps));
}

GradedMap sp_inter_had_over_sub(const SymmetricSequence& a,
                                const SymmetricSequence& b,
                                const SymmetricSequence& c,
                                const SymmetricSequence& d) {
  for (const SymmetricSequence* s : {&a, &b, &c, &d})
    if (!positive_check(s->ob)) throw Error("requires positive objects");
  int N = a.ob.truncation;
  SpeciesSubstitution xab = species_substitution(a, b);
  SpeciesSubstitution xcd = species_substitution(c, d);
  SpeciesSubstitution t =
      species_substitution(species_hadamard(a, c), species_hadamard(b, d));
  GradedObject gab = forget_to_graded(xab.result);
  GradedObject gcd = forget_to_graded(xcd.result);
  GradedObject src = hadamard(gab, gcd);
  GradedObject tgt = forget_to_graded(t.result);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> rows;
    long offab = 0, offcd = 0;
    std::vector<long> oab(N + 1), ocd(N + 1);
    for (int m = 0; m <= N; ++m) {
      oab[m] = offab;
      ocd[m] = offcd;
      offab += xab.quotient[n][m].rows();
      offcd += xcd.quotient[n][m].rows();
    }
    for (int m = 0; m <= N; ++m) {
      // from (A o B)_n (x) (C o D)_n select the diagonal m-parts, lift to
      // the pre-spaces, interleave, then pass to target coinvariants
      const Matrix& iab = xab.inclusion[n][m];
      const Matrix& icd = xcd.inclusion[n][m];
      Matrix sab(iab.rows(), gab.dim(n));
      sab.set_block(0, static_cast<int>(oab[m]), iab);
      Matrix scd(icd.rows(), gcd.dim(n));
      scd.set_block(0, static_cast<int>(ocd[m]), icd);
      // the interleave routing, transposed relative to sub_pre_route:
      // [A_m (x) (B^{.m})_n] (x) [C_m (x) (D^{.m})_n] ->
      // (A(x)C)_m (x) ((B(x)D)^{.m})_n
      Matrix pre = sub_pre_route(a.ob, c.ob, b.ob, d.ob, m, n).transpose();
      rows.push_back(t.quotient[n][m] * pre * kron(sab, scd));
    }
    comps.push_back(vcat(rows));
  }
  return GradedMap(src, tgt, std::move(comps));
}

}  // namespace

GradedMap species_interchange(PairTag t, const SymmetricSequence& a,
                              const SymmetricSequence& b,
                              const SymmetricSequence& c,
                              const SymmetricSequence& d) {
  switch (t) {
    case PairTag::CauchyOverHadamard:
      return sp_inter_cauchy_over_had(a, b, c, d);
    case PairTag::HadamardOverCauchy:
      return sp_inter_had_over_cauchy(a, b, c, d);
    case PairTag::SubOverHadamard: return sp_inter_sub_over_had(a, b, c, d);
    case PairTag::HadamardOverSubPositive:
      return sp_inter_had_over_sub(a, b, c, d);
  }
  throw Error("unknown pair");
}

namespace {

Matrix ones(int r, int c) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = 1;
  return m;
}

StructureMaps make_structure_maps(PairTag t, int N, bool species) {
  switch (t) {
    case PairTag::CauchyOverHadamard: {
      GradedObject one = cauchy_unit(N), eye = hadamard_unit(N);
      std::vector<Matrix> dc, mc, ic;
      GradedObject jj =
          species ? forget_to_graded(species_cauchy(species_hadamard_unit(N),
                                                    species_hadamard_unit(N)))
                  : cauchy(eye, eye);
      for (int n = 0; n <= N; ++n) {
        dc.push_back(n == 0 ? Matrix::scalar(1) : Matrix(0, 0));
        mc.push_back(ones(1, jj.dim(n)));
        ic.push_back(n == 0 ? Matrix::scalar(1) : Matrix(1, 0));
      }
      return {GradedMap(one, hadamard(one, one), std::move(dc)),
              GradedMap(jj, eye, std::move(mc)),
              GradedMap(one, eye, std::move(ic))};
    }
    case PairTag::HadamardOverCauchy: {
      GradedObject one = cauchy_unit(N), eye = hadamard_unit(N);
      std::vector<Matrix> dc, mc, ic;
      GradedObject ii =
          species ? forget_to_graded(species_cauchy(species_hadamard_unit(N),
                                                    species_hadamard_unit(N)))
                  : cauchy(eye, eye);
      for (int n = 0; n <= N; ++n) {
        dc.push_back(ones(ii.dim(n), 1));
        mc.push_back(n == 0 ? Matrix::scalar(1) : Matrix(0, 0));
        ic.push_back(n == 0 ? Matrix::scalar(1) : Matrix(0, 1));
      }
      return {GradedMap(eye, ii, std::move(dc)),
              GradedMap(hadamard(one, one), one, std::move(mc)),
              GradedMap(eye, one, std::move(ic))};
    }
    case PairTag::SubOverHadamard: {
      GradedObject ex = substitution_unit(N), eye = hadamard_unit(N);
      GradedObject jj = substitution_truncated(eye, eye);
      std::vector<Matrix> dc, mc, ic;
      for (int n = 0; n <= N; ++n) {
        dc.push_back(n == 1 ? Matrix::scalar(1) : Matrix(0, 0));
        mc.push_back(ones(1, jj.dim(n)));
        ic.push_back(n == 1 ? Matrix::scalar(1) : Matrix(1, 0));
      }
      return {GradedMap(ex, hadamard(ex, ex), std::move(dc)),
              GradedMap(jj, eye, std::move(mc)),
              GradedMap(ex, eye, std::move(ic))};
    }
    case PairTag::HadamardOverSubPositive: {
      GradedObject ip = positive_truncate(hadamard_unit(N));
      GradedObject ex = substitution_unit(N);
      GradedObject ii = substitution_truncated(ip, ip);
      std::vector<Matrix> dc, mc, ic;
      for (int n = 0; n <= N; ++n) {
        dc.push_back(ones(ii.dim(n), ip.dim(n)));
        mc.push_back(n == 1 ? Matrix::scalar(1) : Matrix(0, 0));
        ic.push_back(n == 1 ? Matrix::scalar(1) : Matrix(0, ip.dim(n)));
      }
      return {GradedMap(ip, ii, std::move(dc)),
              GradedMap(hadamard(ex, ex), ex, std::move(mc)),
              GradedMap(ip, ex, std::move(ic))};
    }
  }
  throw Error("unknown pair");
}

}  // namespace

StructureMaps structure_maps(PairTag t, int truncation) {
  return make_structure_maps(t, truncation, false);
}

StructureMaps structure_maps(PairTag t, const GradedObject& context) {
  if (t == PairTag::HadamardOverSubPositive && !positive_check(context))
    throw Error("requires positive objects");
  return structure_maps(t, context.truncation);
}

StructureMaps species_structure_maps(PairTag t, int truncation) {
  if (t == PairTag::SubOverHadamard || t == PairTag::HadamardOverSubPositive)
    throw Error("species structure maps supported for the Cauchy/pointwise "
                "pairs only");
  return make_structure_maps(t, truncation, true);
}

namespace {

// one side of a pair, abstracting the monoidal structure in use
struct Ops {
  ProductKind pk;
  GradedObject unit;
  bool positive = false;  // pair-4 pointwise side: unit is I+, unitors are
                          // identities on positive objects

  GradedObject obj(const GradedObject& x, const GradedObject& y) const {
    switch (pk) {
      case ProductKind::Hadamard: return hadamard(x, y);
      case ProductKind::Cauchy: return cauchy(x, y);
      case ProductKind::Substitution: return substitution_truncated(x, y);
    }
    throw Error("unknown product");
  }
  GradedMap map(const GradedMap& f, const GradedMap& g) const {
    switch (pk) {
      case ProductKind::Hadamard: return hadamard(f, g);
      case ProductKind::Cauchy: return cauchy(f, g);
      case ProductKind::Substitution: return substitution_truncated(f, g);
    }
    throw Error("unknown product");
  }
  GradedMap assoc(const GradedObject& x, const GradedObject& y,
                  const GradedObject& z) const {
    switch (pk) {
      case ProductKind::Hadamard: return hadamard_associator(x, y, z);
      case ProductKind::Cauchy: return cauchy_associator(x, y, z);
      case ProductKind::Substitution:
        return substitution_associator(x, y, z);
    }
    throw Error("unknown product");
  }
  GradedMap lunit(const GradedObject& x) const {
    if (positive) {
      std::vector<Matrix> comps;
      for (int n = 0; n <= x.truncation; ++n)
        comps.push_back(Matrix::identity(x.dim(n)));
      return GradedMap(hadamard(unit, x), x, std::move(comps));
    }
    switch (pk) {
      case ProductKind::Hadamard: return hadamard_lunitor(x);
      case ProductKind::Cauchy: return cauchy_lunitor(x);
      case ProductKind::Substitution: return substitution_lunitor(x);
    }
    throw Error("unknown product");
  }
  GradedMap runit(const GradedObject& x) const {
    if (positive) {
      std::vector<Matrix> comps;
      for (int n = 0; n <= x.truncation; ++n)
        comps.push_back(Matrix::identity(x.dim(n)));
      return GradedMap(hadamard(x, unit), x, std::move(comps));
    }
    switch (pk) {
      case ProductKind::Hadamard: return hadamard_runitor(x);
      case ProductKind::Cauchy: return cauchy_runitor(x);
      case ProductKind::Substitution: return substitution_runitor(x);
    }
    throw Error("unknown product");
  }
};

Ops outer_ops(PairTag t, int N) {
  switch (t) {
    case PairTag::CauchyOverHadamard:
      return {ProductKind::Cauchy, cauchy_unit(N)};
    case PairTag::HadamardOverCauchy:
      return {ProductKind::Hadamard, hadamard_unit(N)};
    case PairTag::SubOverHadamard:
      return {ProductKind::Substitution, substitution_unit(N)};
    case PairTag::HadamardOverSubPositive:
      return {ProductKind::Hadamard, positive_truncate(hadamard_unit(N)),
              true};
  }
  throw Error("unknown pair");
}

Ops inner_ops(PairTag t, int N) {
  switch (t) {
    case PairTag::CauchyOverHadamard:
      return {ProductKind::Hadamard, hadamard_unit(N)};
    case PairTag::HadamardOverCauchy:
      return {ProductKind::Cauchy, cauchy_unit(N)};
    case PairTag::SubOverHadamard:
      return {ProductKind::Hadamard, hadamard_unit(N)};
    case PairTag::HadamardOverSubPositive:
      return {ProductKind::Substitution, substitution_unit(N)};
  }
  throw Error("unknown pair");
}

GradedMap map_inverse(const GradedMap& f) {
  std::vector<Matrix> comps;
  for (const auto& c : f.components) comps.push_back(inverse(c));
  return GradedMap(f.target, f.source, std::move(comps));
}

void add_map_eq(Report& rep, const std::string& axiom, std::vector<int> idx,
                const GradedMap& f, const GradedMap& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) {
    rep.add(axiom, std::move(idx), false, "object mismatch");
    return;
  }
  for (size_t n = 0; n < f.components.size(); ++n) {
    const Matrix &x = f.components[n], &y = g.components[n];
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        if (x(i, j) != y(i, j)) {
          std::ostringstream os;
          os << "degree " << n << " entry (" << i << "," << j
             << "): " << to_string(x(i, j)) << " vs " << to_string(y(i, j));
          rep.add(axiom, std::move(idx), false, os.str());
          return;
        }
  }
  rep.add(axiom, std::move(idx), true);
}

// zeta entries are 0/1; inclusion columns (resp. projection rows) are
// orthonormal
void check_routing(Report& rep, std::vector<int> idx, const GradedMap& z,
                   bool inclusion) {
  for (size_t n = 0; n < z.components.size(); ++n) {
    const Matrix& m = z.components[n];
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0 && m(i, j) != 1) {
          rep.add("routing", std::move(idx), false, "non 0/1 entry");
          return;
        }
    Matrix gram = inclusion ? m.transpose() * m : m * m.transpose();
    if (!gram.is_identity()) {
      rep.add("routing", std::move(idx), false,
              "columns/rows not orthonormal");
      return;
    }
  }
  rep.add("routing", std::move(idx), true);
}

// the unit-object identities: i a *-comonoid with counit iota, j a
// o-monoid with unit iota, and the compatibility square for delta on i o i
void check_unit_objects(PairTag t, const Ops& O, const Ops& S,
                        const StructureMaps& sm, Report& rep) {
  const GradedObject &i = O.unit, &j = S.unit;
  const GradedMap &delta = sm.delta_i, &mu = sm.mu_j, &iota = sm.iota;
  GradedMap idi = graded_identity(i), idj = graded_identity(j);
  add_map_eq(rep, "i-coassoc", {},
             compose(S.assoc(i, i, i), compose(S.map(delta, idi), delta)),
             compose(S.map(idi, delta), delta));
  add_map_eq(rep, "i-counit-left", {},
             compose(S.lunit(i), compose(S.map(iota, idi), delta)), idi);
  add_map_eq(rep, "i-counit-right", {},
             compose(S.runit(i), compose(S.map(idi, iota), delta)), idi);
  add_map_eq(rep, "j-assoc", {}, compose(mu, O.map(mu, idj)),
             compose(mu, compose(O.map(idj, mu), O.assoc(j, j, j))));
  add_map_eq(rep, "j-unit-left", {}, compose(mu, O.map(iota, idj)),
             O.lunit(j));
  add_map_eq(rep, "j-unit-right", {}, compose(mu, O.map(idj, iota)),
             O.runit(j));
  GradedMap li = O.lunit(i);
  add_map_eq(rep, "unit-compat", {},
             compose(interchange(t, i, i, i, i), O.map(delta, delta)),
             compose(S.map(map_inverse(li), map_inverse(li)),
                     compose(delta, li)));
}

}  // namespace

Report check_duoidal(PairTag t, const std::vector<DuoidalSample>& samples) {
  Report rep;
  if (samples.empty()) return rep;
  int N = samples[0].a.truncation;
  Ops O = outer_ops(t, N), S = inner_ops(t, N);
  StructureMaps sm = structure_maps(t, N);
  bool inclusion = t == PairTag::CauchyOverHadamard ||
                   t == PairTag::SubOverHadamard;
  check_unit_objects(t, O, S, sm, rep);
  int si = 0;
  for (const auto& s : samples) {
    const GradedObject &a = s.a, &b = s.b, &c = s.c, &d = s.d;
    GradedMap z = interchange(t, a, b, c, d);
    check_routing(rep, {si}, z, inclusion);
    if (s.f && s.g && s.h && s.l) {
      const GradedMap &f = *s.f, &g = *s.g, &h = *s.h, &l = *s.l;
      GradedMap z2 =
          interchange(t, f.target, g.target, h.target, l.target);
      add_map_eq(rep, "naturality", {si},
                 compose(z2, O.map(S.map(f, g), S.map(h, l))),
                 compose(S.map(O.map(f, h), O.map(g, l)), z));
    }
    // hexagon in the outer product, with (e,f') = (d,c)
    {
      const GradedObject &e = d, &f2 = c;
      GradedMap lhs = compose(
          interchange(t, a, b, O.obj(c, e), O.obj(d, f2)),
          compose(O.map(graded_identity(S.obj(a, b)), interchange(t, c, d, e, f2)),
                  O.assoc(S.obj(a, b), S.obj(c, d), S.obj(e, f2))));
      GradedMap rhs = compose(
          S.map(O.assoc(a, c, e), O.assoc(b, d, f2)),
          compose(interchange(t, O.obj(a, c), O.obj(b, d), e, f2),
                  O.map(z, graded_identity(S.obj(e, f2)))));
      add_map_eq(rep, "hexagon-outer", {si}, lhs, rhs);
    }
    // hexagon in the inner product, with (e,f') = (b,a)
    {
      const GradedObject &e = b, &f2 = a;
      GradedMap lhs = compose(
          S.map(graded_identity(O.obj(a, d)), interchange(t, b, c, e, f2)),
          compose(interchange(t, a, S.obj(b, c), d, S.obj(e, f2)),
                  O.map(S.assoc(a, b, c), S.assoc(d, e, f2))));
      GradedMap rhs = compose(
          S.assoc(O.obj(a, d), O.obj(b, e), O.obj(c, f2)),
          compose(S.map(interchange(t, a, b, d, e),
                        graded_identity(O.obj(c, f2))),
                  interchange(t, S.obj(a, b), c, S.obj(d, e), f2)));
      add_map_eq(rep, "hexagon-inner", {si}, lhs, rhs);
    }
    // four unit squares
    {
      const GradedObject& i = O.unit;
      const GradedObject& j = S.unit;
      GradedMap idcd = graded_identity(S.obj(c, d));
      add_map_eq(rep, "unit-square-delta-left", {si},
                 compose(S.map(O.lunit(c), O.lunit(d)),
                         compose(interchange(t, i, i, c, d),
                                 O.map(sm.delta_i, idcd))),
                 O.lunit(S.obj(c, d)));
      add_map_eq(rep, "unit-square-delta-right", {si},
                 compose(S.map(O.runit(c), O.runit(d)),
                         compose(interchange(t, c, d, i, i),
                                 O.map(idcd, sm.delta_i))),
                 O.runit(S.obj(c, d)));
      GradedMap idocd = graded_identity(O.obj(c, d));
      add_map_eq(rep, "unit-square-mu-left", {si},
                 compose(S.lunit(O.obj(c, d)),
                         compose(S.map(sm.mu_j, idocd),
                                 interchange(t, j, c, j, d))),
                 O.map(S.lunit(c), S.lunit(d)));
      add_map_eq(rep, "unit-square-mu-right", {si},
                 compose(S.runit(O.obj(c, d)),
                         compose(S.map(idocd, sm.mu_j),
                                 interchange(t, c, j, d, j))),
                 O.map(S.runit(c), S.runit(d)));
    }
    ++si;
  }
  return rep;
}

namespace {

// species counterpart of Ops, for the Cauchy / pointwise products
struct SpOps {
  ProductKind pk;
  SymmetricSequence unit;

  SymmetricSequence obj(const SymmetricSequence& x,
                        const SymmetricSequence& y) const {
    return pk == ProductKind::Hadamard ? species_hadamard(x, y)
                                       : species_cauchy(x, y);
  }
  GradedMap map(const GradedMap& f, const GradedMap& g) const {
    return pk == ProductKind::Hadamard ? hadamard(f, g)
                                       : species_cauchy_map(f, g);
  }
  GradedMap assoc(const SymmetricSequence& x, const SymmetricSequence& y,
                  const SymmetricSequence& z) const {
    return pk == ProductKind::Hadamard
               ? hadamard_associator(x.ob, y.ob, z.ob)
               : species_cauchy_associator(x, y, z);
  }
  GradedMap lunit(const SymmetricSequence& x) const {
    return pk == ProductKind::Hadamard ? hadamard_lunitor(x.ob)
                                       : species_cauchy_lunitor(x);
  }
  GradedMap runit(const SymmetricSequence& x) const {
    return pk == ProductKind::Hadamard ? hadamard_runitor(x.ob)
                                       : species_cauchy_runitor(x);
  }
};

}  // namespace

Report check_duoidal_species(PairTag t,
                             const std::vector<SpeciesDuoidalSample>& samples) {
  if (t == PairTag::SubOverHadamard || t == PairTag::HadamardOverSubPositive)
    throw Error("species axiom checks supported for the Cauchy/pointwise "
                "pairs only");
  Report rep;
  if (samples.empty()) return rep;
  int N = samples[0].a.ob.truncation;
  bool couh = t == PairTag::CauchyOverHadamard;
  SpOps O{couh ? ProductKind::Cauchy : ProductKind::Hadamard,
          couh ? species_cauchy_unit(N) : species_hadamard_unit(N)};
  SpOps S{couh ? ProductKind::Hadamard : ProductKind::Cauchy,
          couh ? species_hadamard_unit(N) : species_cauchy_unit(N)};
  StructureMaps sm = species_structure_maps(t, N);
  auto zeta = [&](const SymmetricSequence& a, const SymmetricSequence& b,
                  const SymmetricSequence& c, const SymmetricSequence& d) {
    return species_interchange(t, a, b, c, d);
  };
  // unit-object identities
  {
    const SymmetricSequence &i = O.unit, &j = S.unit;
    GradedMap idi = graded_identity(i.ob), idj = graded_identity(j.ob);
    add_map_eq(rep, "i-coassoc", {},
               compose(S.assoc(i, i, i),
                       compose(S.map(sm.delta_i, idi), sm.delta_i)),
               compose(S.map(idi, sm.delta_i), sm.delta_i));
    add_map_eq(rep, "i-counit-left", {},
               compose(S.lunit(i), compose(S.map(sm.iota, idi), sm.delta_i)),
               idi);
    add_map_eq(rep, "i-counit-right", {},
               compose(S.runit(i), compose(S.map(idi, sm.iota), sm.delta_i)),
               idi);
    add_map_eq(rep, "j-assoc", {}, compose(sm.mu_j, O.map(sm.mu_j, idj)),
               compose(sm.mu_j,
                       compose(O.map(idj, sm.mu_j), O.assoc(j, j, j))));
    add_map_eq(rep, "j-unit-left", {}, compose(sm.mu_j, O.map(sm.iota, idj)),
               O.lunit(j));
    add_map_eq(rep, "j-unit-right", {}, compose(sm.mu_j, O.map(idj, sm.iota)),
               O.runit(j));
  }
  int si = 0;
  for (const auto& s : samples) {
    const SymmetricSequence &a = s.a, &b = s.b, &c = s.c, &d = s.d;
    GradedMap z = zeta(a, b, c, d);
    check_routing(rep, {si}, z, couh);
    bool eq = equivariance_check(z, O.obj(S.obj(a, b), S.obj(c, d)),
                                 S.obj(O.obj(a, c), O.obj(b, d)));
    rep.add("equivariance", {si}, eq, eq ? "" : "zeta not equivariant");
    {
      const SymmetricSequence &e = d, &f2 = c;
      GradedMap lhs = compose(
          zeta(a, b, O.obj(c, e), O.obj(d, f2)),
          compose(O.map(graded_identity(S.obj(a, b).ob), zeta(c, d, e, f2)),
                  O.assoc(S.obj(a, b), S.obj(c, d), S.obj(e, f2))));
      GradedMap rhs = compose(
          S.map(O.assoc(a, c, e), O.assoc(b, d, f2)),
          compose(zeta(O.obj(a, c), O.obj(b, d), e, f2),
                  O.map(z, graded_identity(S.obj(e, f2).ob))));
      add_map_eq(rep, "hexagon-outer", {si}, lhs, rhs);
    }
    {
      const SymmetricSequence &e = b, &f2 = a;
      GradedMap lhs = compose(
          S.map(graded_identity(O.obj(a, d).ob), zeta(b, c, e, f2)),
          compose(zeta(a, S.obj(b, c), d, S.obj(e, f2)),
                  O.map(S.assoc(a, b, c), S.assoc(d, e, f2))));
      GradedMap rhs = compose(
          S.assoc(O.obj(a, d), O.obj(b, e), O.obj(c, f2)),
          compose(S.map(zeta(a, b, d, e),
                        graded_identity(O.obj(c, f2).ob)),
                  zeta(S.obj(a, b), c, S.obj(d, e), f2)));
      add_map_eq(rep, "hexagon-inner", {si}, lhs, rhs);
    }
    {
      const SymmetricSequence &i = O.unit, &j = S.unit;
      GradedMap idcd = graded_identity(S.obj(c, d).ob);
      add_map_eq(rep, "unit-square-delta-left", {si},
                 compose(S.map(O.lunit(c), O.lunit(d)),
                         compose(zeta(i, i, c, d), O.map(sm.delta_i, idcd))),
                 O.lunit(S.obj(c, d)));
      add_map_eq(rep, "unit-square-delta-right", {si},
                 compose(S.map(O.runit(c), O.runit(d)),
                         compose(zeta(c, d, i, i), O.map(idcd, sm.delta_i))),
                 O.runit(S.obj(c, d)));
      GradedMap idocd = graded_identity(O.obj(c, d).ob);
      add_map_eq(rep, "unit-square-mu-left", {si},
                 compose(S.lunit(O.obj(c, d)),
                         compose(S.map(sm.mu_j, idocd), zeta(j, c, j, d))),
                 O.map(S.lunit(c), S.lunit(d)));
      add_map_eq(rep, "unit-square-mu-right", {si},
                 compose(S.runit(O.obj(c, d)),
                         compose(S.map(idocd, sm.mu_j), zeta(c, j, d, j))),
                 O.map(S.runit(c), S.runit(d)));
    }
    ++si;
  }
  return rep;
}

}  // namespace duocat
