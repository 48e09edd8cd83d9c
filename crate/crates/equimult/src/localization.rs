//! Fixed-point localization on partial flag varieties: localized classes,
//! correspondence classes for the cotangent and Grothendieck families,
//! convolution, and the assembled Chevalley block operators.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};

use crate::groebner::{self, Budget, PolyIdeal, TermOrder};
use crate::poly::{euler_class, MultiPoly, RatFunc, TorusWeight, WeightMultiset};
use crate::symgrp::{Composition, Perm};
use crate::{Error, Result};

/// Which family of ambient spaces a class lives on: the cotangent family
/// (nilradical fibers) or the Grothendieck family (parabolic fibers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Nilp,
    Groth,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpaceTag {
    pub comp: Composition,
    pub family: Family,
}

/// Matrix positions `(i, j)` (0-based) of the nilradical attached to a
/// composition: row block strictly before column block.
fn nilrad_positions(c: &Composition) -> BTreeSet<(usize, usize)> {
    let d = c.size();
    let mut out = BTreeSet::new();
    for i in 0..d {
        for j in 0..d {
            if c.block_of(i) < c.block_of(j) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Positions of the parabolic: row block at most column block, including the
/// full diagonal.
fn parab_positions(c: &Composition) -> BTreeSet<(usize, usize)> {
    let d = c.size();
    let mut out = BTreeSet::new();
    for i in 0..d {
        for j in 0..d {
            if c.block_of(i) <= c.block_of(j) {
                out.insert((i, j));
            }
        }
    }
    out
}

fn weights_of_positions(d: usize, pos: &BTreeSet<(usize, usize)>) -> WeightMultiset {
    WeightMultiset::new(
        pos.iter()
            .map(|&(i, j)| {
                if i == j {
                    TorusWeight::zero(d)
                } else {
                    TorusWeight::root(d, i + 1, j + 1)
                }
            })
            .collect(),
    )
}

fn transpose_positions(pos: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    pos.iter().map(|&(i, j)| (j, i)).collect()
}

pub fn nilrad_weights(c: &Composition) -> WeightMultiset {
    weights_of_positions(c.size(), &nilrad_positions(c))
}

pub fn nilrad_minus_weights(c: &Composition) -> WeightMultiset {
    weights_of_positions(c.size(), &transpose_positions(&nilrad_positions(c)))
}

pub fn parab_weights(c: &Composition) -> WeightMultiset {
    weights_of_positions(c.size(), &parab_positions(c))
}

/// The common refinement of two compositions of the same `d`: its Young
/// subgroup is the intersection of the two Young subgroups.
pub fn refinement(c1: &Composition, c2: &Composition) -> Composition {
    assert_eq!(c1.size(), c2.size());
    let mut cuts: BTreeSet<usize> = BTreeSet::new();
    for c in [c1, c2] {
        let mut acc = 0;
        for &p in &c.parts {
            acc += p;
            cuts.insert(acc);
        }
    }
    let mut parts = Vec::new();
    let mut prev = 0;
    for cut in cuts {
        parts.push(cut - prev);
        prev = cut;
    }
    Composition::new(parts)
}

/// Euler class of the ambient tangent space at the base fixed point:
/// `eu(u^-_c) * eu(fiber ⊗ C_h)` with fiber `u_c` or `p_c`.
pub fn ambient_euler(tag: &SpaceTag) -> MultiPoly {
    let d = tag.comp.size();
    let um = nilrad_minus_weights(&tag.comp);
    let fiber = match tag.family {
        Family::Nilp => nilrad_weights(&tag.comp),
        Family::Groth => parab_weights(&tag.comp),
    };
    eu_or_one(d, &um, false).mul(&eu_or_one(d, &fiber, true))
}

fn eu_or_one(d: usize, m: &WeightMultiset, h_shift: bool) -> MultiPoly {
    if m.is_empty() {
        MultiPoly::one(d + 1)
    } else {
        euler_class(m, h_shift).expect("only shifted multisets may contain zero weights")
    }
}

/// A localized class on one ambient space: finitely many coefficients indexed
/// by minimal-length coset representatives.
#[derive(Debug, Clone)]
pub struct FixedPointClass {
    pub tag: SpaceTag,
    pub coeffs: BTreeMap<Perm, RatFunc>,
}

impl FixedPointClass {
    pub fn zero(tag: SpaceTag) -> Self {
        FixedPointClass { tag, coeffs: BTreeMap::new() }
    }

    /// The fundamental class of the fixed point `w S_c`.
    pub fn point(tag: SpaceTag, w: &Perm) -> Self {
        let d = tag.comp.size();
        let mut out = Self::zero(tag);
        let rep = out.tag.comp.coset_rep(w);
        out.coeffs.insert(rep, RatFunc::one(d + 1));
        out
    }

    pub fn add_coeff(&mut self, w: &Perm, f: RatFunc) {
        let rep = self.tag.comp.coset_rep(w);
        let entry = self
            .coeffs
            .remove(&rep)
            .unwrap_or_else(|| RatFunc::zero(self.tag.comp.size() + 1));
        let sum = entry.add(&f);
        if !sum.is_zero() {
            self.coeffs.insert(rep, sum);
        }
    }

    pub fn add(&self, other: &FixedPointClass) -> Result<FixedPointClass> {
        if self.tag != other.tag {
            return Err(Error::Composition("adding classes on different spaces".into()));
        }
        let mut out = self.clone();
        for (w, f) in &other.coeffs {
            out.add_coeff(w, f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FixedPointClass) -> Result<FixedPointClass> {
        self.add(&other.scale_all(&RatFunc::from_constant(
            self.tag.comp.size() + 1,
            -num::rational::BigRational::one(),
        )))
    }

    pub fn scale_all(&self, f: &RatFunc) -> FixedPointClass {
        FixedPointClass {
            tag: self.tag.clone(),
            coeffs: self.coeffs.iter().map(|(w, g)| (w.clone(), g.mul(f))).collect(),
        }
    }

    pub fn subst_h0(&self) -> Result<FixedPointClass> {
        let mut coeffs = BTreeMap::new();
        for (w, f) in &self.coeffs {
            coeffs.insert(w.clone(), f.subst_h0()?);
        }
        Ok(FixedPointClass { tag: self.tag.clone(), coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|f| f.is_zero())
    }
}

impl PartialEq for FixedPointClass {
    fn eq(&self, other: &Self) -> bool {
        if self.tag != other.tag {
            return false;
        }
        let keys: BTreeSet<&Perm> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        let zero = RatFunc::zero(self.tag.comp.size() + 1);
        keys.into_iter().all(|k| {
            self.coeffs.get(k).unwrap_or(&zero) == other.coeffs.get(k).unwrap_or(&zero)
        })
    }
}

/// A localized correspondence class: coefficients on pairs of cosets sharing
/// a representative.
#[derive(Debug, Clone)]
pub struct CorrClass {
    pub target: SpaceTag,
    pub source: SpaceTag,
    pub coeffs: BTreeMap<(Perm, Perm), RatFunc>,
}

/// The correspondence class between the partial flag spaces of `source` and
/// `target` in the given family: one term per coset of the intersection
/// Young subgroup, coefficient the reciprocal Euler class of the
/// correspondence tangent space, translated by the representative.
pub fn corr(family: Family, target: &Composition, source: &Composition) -> Result<CorrClass> {
    let d = target.size();
    if d != source.size() {
        return Err(Error::Composition("compositions of different sizes".into()));
    }
    let u_t = nilrad_positions(target);
    let u_s = nilrad_positions(source);
    let um_union: BTreeSet<(usize, usize)> = transpose_positions(&u_t)
        .union(&transpose_positions(&u_s))
        .copied()
        .collect();
    let fiber_int: BTreeSet<(usize, usize)> = match family {
        Family::Nilp => u_t.intersection(&u_s).copied().collect(),
        Family::Groth => {
            parab_positions(target).intersection(&parab_positions(source)).copied().collect()
        }
    };
    let mut factors: Vec<MultiPoly> = Vec::new();
    for w in &weights_of_positions(d, &um_union).entries {
        factors.push(w.to_poly());
    }
    for w in &weights_of_positions(d, &fiber_int).entries {
        factors.push(w.to_poly_plus_h());
    }
    let base = RatFunc::new(MultiPoly::one(d + 1), factors);
    let mut coeffs = BTreeMap::new();
    for x in refinement(target, source).min_coset_reps() {
        let key = (target.coset_rep(&x), source.coset_rep(&x));
        let val = base.weyl_act(&x.images)?;
        let prev = coeffs.insert(key, val);
        assert!(prev.is_none(), "cosets of the intersection subgroup inject into pairs");
    }
    Ok(CorrClass {
        target: SpaceTag { comp: target.clone(), family },
        source: SpaceTag { comp: source.clone(), family },
        coeffs,
    })
}

/// Convolution of two correspondence classes over the shared middle space.
pub fn convolve(a: &CorrClass, b: &CorrClass) -> Result<CorrClass> {
    if a.source != b.target {
        return Err(Error::Composition(format!(
            "middle tags differ: {:?} vs {:?}",
            a.source, b.target
        )));
    }
    let mid = &a.source;
    let mut coeffs: BTreeMap<(Perm, Perm), RatFunc> = BTreeMap::new();
    for ((p, q1), f) in &a.coeffs {
        for ((q2, r), g) in &b.coeffs {
            if q1 != q2 {
                continue;
            }
            let eu = RatFunc::from_poly(ambient_euler(mid)).weyl_act(&q1.images)?;
            let term = f.mul(g).mul(&eu);
            let entry = coeffs
                .remove(&(p.clone(), r.clone()))
                .unwrap_or_else(|| RatFunc::zero(term.nvars()));
            let sum = entry.add(&term);
            if !sum.is_zero() {
                coeffs.insert((p.clone(), r.clone()), sum);
            }
        }
    }
    Ok(CorrClass { target: a.target.clone(), source: b.source.clone(), coeffs })
}

/// Apply a correspondence class to a localized class on its source space.
pub fn apply(a: &CorrClass, c: &FixedPointClass) -> Result<FixedPointClass> {
    if a.source != c.tag {
        return Err(Error::Composition(format!(
            "source tag {:?} does not match class tag {:?}",
            a.source, c.tag
        )));
    }
    let mut out = FixedPointClass::zero(a.target.clone());
    for ((p, q), f) in &a.coeffs {
        if let Some(g) = c.coeffs.get(q) {
            let eu = RatFunc::from_poly(ambient_euler(&c.tag)).weyl_act(&q.images)?;
            out.add_coeff(p, f.mul(g).mul(&eu));
        }
    }
    Ok(out)
}

/// The global fixed-point basis of the direct sum over all compositions of
/// `d` into `n` parts.
#[derive(Debug, Clone)]
pub struct BlockBasis {
    pub n: usize,
    pub d: usize,
    pub family: Family,
    pub elements: Vec<(Composition, Perm)>,
    index: BTreeMap<(Composition, Perm), usize>,
}

impl BlockBasis {
    pub fn new(n: usize, d: usize, family: Family) -> Self {
        let mut elements = Vec::new();
        for c in Composition::all(d, n) {
            for w in c.min_coset_reps() {
                elements.push((c.clone(), w));
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        BlockBasis { n, d, family, elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, c: &Composition, w: &Perm) -> usize {
        self.index[&(c.clone(), c.coset_rep(w))]
    }
}

/// A sparse matrix over the fraction field, acting on a block basis.
#[derive(Debug, Clone)]
pub struct RfMat {
    pub dim: usize,
    pub nvars: usize,
    pub entries: BTreeMap<(usize, usize), RatFunc>,
}

impl RfMat {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        RfMat { dim, nvars, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let mut m = Self::zero(dim, nvars);
        for i in 0..dim {
            m.entries.insert((i, i), RatFunc::one(nvars));
        }
        m
    }

    pub fn add_entry(&mut self, i: usize, j: usize, f: RatFunc) {
        let entry =
            self.entries.remove(&(i, j)).unwrap_or_else(|| RatFunc::zero(self.nvars));
        let sum = entry.add(&f);
        if !sum.is_zero() {
            self.entries.insert((i, j), sum);
        }
    }

    pub fn mul(&self, other: &RfMat) -> RfMat {
        assert_eq!(self.dim, other.dim);
        let mut out = RfMat::zero(self.dim, self.nvars);
        for ((i, k), f) in &self.entries {
            for ((k2, j), g) in &other.entries {
                if k == k2 {
                    out.add_entry(*i, *j, f.mul(g));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RfMat) -> RfMat {
        let mut out = self.clone();
        for (&(i, j), f) in &other.entries {
            out.add_entry(i, j, f.clone());
        }
        out
    }

    pub fn sub(&self, other: &RfMat) -> RfMat {
        let minus = RatFunc::from_constant(self.nvars, -num::rational::BigRational::one());
        let mut out = self.clone();
        for (&(i, j), f) in &other.entries {
            out.add_entry(i, j, f.mul(&minus));
        }
        out
    }

    pub fn commutator(&self, other: &RfMat) -> RfMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|f| f.is_zero())
    }

    pub fn subst_h0(&self) -> Result<RfMat> {
        let mut out = RfMat::zero(self.dim, self.nvars);
        for (&(i, j), f) in &self.entries {
            let g = f.subst_h0()?;
            if !g.is_zero() {
                out.entries.insert((i, j), g);
            }
        }
        Ok(out)
    }

    /// Extract a constant rational matrix; errors when an entry is not a
    /// constant.
    pub fn to_qmat(&self) -> Result<crate::qmat::QMat> {
        let mut m = crate::qmat::QMat::zeros(self.dim, self.dim);
        for (&(i, j), f) in &self.entries {
            let mut g = f.clone();
            g.reduce();
            let p = g
                .as_poly()
                .ok_or_else(|| Error::Domain("matrix entry is not polynomial".into()))?;
            let c = p
                .as_constant()
                .ok_or_else(|| Error::Domain("matrix entry is not constant".into()))?;
            m[(i, j)] = c;
        }
        Ok(m)
    }
}

impl PartialEq for RfMat {
    fn eq(&self, other: &Self) -> bool {
        let keys: BTreeSet<&(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).collect();
        let zero = RatFunc::zero(self.nvars);
        keys.into_iter().all(|k| {
            self.entries.get(k).unwrap_or(&zero) == other.entries.get(k).unwrap_or(&zero)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chevalley {
    E,
    F,
}

/// Sign attached to a cotangent-family correspondence: parity of the
/// codimension of the conormal fiber inside the source nilradical,
/// `dim u_source - dim(u_target \cap u_source)`.
pub fn corr_sign(target: &Composition, source: &Composition) -> i64 {
    let u_t = nilrad_positions(target);
    let u_s = nilrad_positions(source);
    let exp = u_s.len() - u_t.intersection(&u_s).count();
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The block Chevalley operator as a matrix on the global fixed-point basis.
/// Cotangent-family correspondences carry the fiber-codimension sign; the
/// Grothendieck family has none.
pub fn block_operator(basis: &BlockBasis, a: usize, which: Chevalley) -> Result<RfMat> {
    let nvars = basis.d + 1;
    let mut m = RfMat::zero(basis.len(), nvars);
    for c in Composition::all(basis.d, basis.n) {
        let target = match which {
            Chevalley::E => c.raise(a),
            Chevalley::F => c.lower(a),
        };
        let Some(target) = target else { continue };
        let corr = corr(basis.family, &target, &c)?;
        let sign = match basis.family {
            Family::Nilp => corr_sign(&target, &c),
            Family::Groth => 1,
        };
        for ((p, q), f) in &corr.coeffs {
            let eu = RatFunc::from_poly(ambient_euler(&corr.source)).weyl_act(&q.images)?;
            let mut entry = f.mul(&eu);
            if sign < 0 {
                entry = entry.scale(&-num::rational::BigRational::one());
            }
            let row = basis.index_of(&target, p);
            let col = basis.index_of(&c, q);
            m.add_entry(row, col, entry);
        }
    }
    Ok(m)
}

/// The Cartan operator: `d_a - d_{a+1}` on each composition block.
pub fn cartan_operator(basis: &BlockBasis, a: usize) -> RfMat {
    let nvars = basis.d + 1;
    let mut m = RfMat::zero(basis.len(), nvars);
    for (i, (c, _)) in basis.elements.iter().enumerate() {
        let h = c.parts[a - 1] as i64 - c.parts[a] as i64;
        if h != 0 {
            m.entries.insert((i, i), RatFunc::from_constant(nvars, crate::poly::qint(h)));
        }
    }
    m
}

/// Right multiplication by `s_a` on the cosets of the `1^d` block, as a
/// matrix on that block's fixed-point basis (identity block ordering of
/// `Perm::all` is not used; the basis is the block's own coset list).
pub fn right_sa_matrix(d: usize, a: usize) -> crate::qmat::QMat {
    let perms = Composition::new(vec![1; d]).min_coset_reps();
    let index: BTreeMap<Perm, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let sa = Perm::adjacent(d, a);
    let mut m = crate::qmat::QMat::zeros(perms.len(), perms.len());
    for (j, w) in perms.iter().enumerate() {
        let ws = w.compose(&sa);
        m[(index[&ws], j)] = num::rational::BigRational::one();
    }
    m
}

/// The composite correspondence whose action on the `1^d` block realizes the
/// product of the raising and lowering moves through the adjacent
/// composition, as used for the weight-zero operators.
pub fn weight_zero_composite(family: Family, d: usize, a: usize) -> Result<CorrClass> {
    let full = Composition::new(vec![1; d]);
    let mid = match family {
        Family::Nilp => full.lower(a).unwrap(),
        Family::Groth => full.raise(a).unwrap(),
    };
    let up = corr(family, &full, &mid)?;
    let down = corr(family, &mid, &full)?;
    convolve(&up, &down)
}

/// The convolution identity on the `1^d` block: the composite applied to a
/// fixed point `[u]` equals `(s_a - 1 + h d_a)[u]` in the cotangent family
/// and `(s_a + 1 + h d_a)[u]` in the Grothendieck family, with `d_a` the
/// fixed-point divided-difference operator.
pub fn convolution_identity_holds(family: Family, d: usize, a: usize) -> Result<bool> {
    let composite = weight_zero_composite(family, d, a)?;
    let tag = composite.source.clone();
    let nvars = d + 1;
    let alpha = crate::poly::simple_root(d, a);
    let sa = Perm::adjacent(d, a);
    for u in Perm::all(d) {
        let cls = FixedPointClass::point(tag.clone(), &u);
        let got = apply(&composite, &cls)?;
        // expected: (s_a ± 1)[u] + (h / u(alpha_a)) ([u s_a] - [u])
        let ualpha = alpha.weyl_act(&u.images)?;
        let h_over = RatFunc::new(MultiPoly::h_var(d), vec![ualpha]);
        let one = RatFunc::one(nvars);
        let mut expect = FixedPointClass::zero(tag.clone());
        let us = u.compose(&sa);
        expect.add_coeff(&us, one.add(&h_over));
        let diag = match family {
            Family::Nilp => one.neg().sub(&h_over),
            Family::Groth => one.sub(&h_over),
        };
        expect.add_coeff(&u, diag);
        if got != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The weight-zero reflection operator `1 - E_a F_a` on the `1^d` block at
/// `h = 0`, as a rational matrix in the block's coset basis.
pub fn weight_zero_t_matrix(family: Family, d: usize, a: usize) -> Result<crate::qmat::QMat> {
    let composite = weight_zero_composite(family, d, a)?;
    let perms = Composition::new(vec![1; d]).min_coset_reps();
    let index: BTreeMap<Perm, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = perms.len();
    let mut ef = RfMat::zero(n, d + 1);
    for (j, u) in perms.iter().enumerate() {
        let cls = FixedPointClass::point(composite.source.clone(), u);
        let got = apply(&composite, &cls)?;
        for (w, f) in &got.coeffs {
            ef.add_entry(index[w], j, f.clone());
        }
    }
    // the cotangent-family composite carries sign -1 on the 1^d block
    let sign = match family {
        Family::Nilp => {
            let full = Composition::new(vec![1; d]);
            let mid = full.lower(a).unwrap();
            corr_sign(&full, &mid) * corr_sign(&mid, &full)
        }
        Family::Groth => 1,
    };
    let mut t = RfMat::identity(n, d + 1);
    if sign < 0 {
        t = t.add(&ef);
    } else {
        t = t.sub(&ef);
    }
    t.subst_h0()?.to_qmat()
}

/// Exact check of the defining relations of the block operators at `h = 0`
/// for the given family: commutators with the Cartan eigenvalues, vanishing
/// mixed commutators, and the degree-3 straightening relations between
/// adjacent raising (and lowering) operators.
pub fn relations_hold(family: Family, n: usize, d: usize) -> Result<bool> {
    let basis = BlockBasis::new(n, d, family);
    let mut es = Vec::new();
    let mut fs = Vec::new();
    for a in 1..n {
        es.push(block_operator(&basis, a, Chevalley::E)?.subst_h0()?);
        fs.push(block_operator(&basis, a, Chevalley::F)?.subst_h0()?);
    }
    for a in 1..n {
        for b in 1..n {
            let comm = es[a - 1].commutator(&fs[b - 1]);
            if a == b {
                if comm != cartan_operator(&basis, a) {
                    return Ok(false);
                }
            } else if !comm.is_zero() {
                return Ok(false);
            }
        }
    }
    for ops in [&es, &fs] {
        for a in 1..n {
            for b in 1..n {
                if a == b {
                    continue;
                }
                if (a as i64 - b as i64).abs() >= 2 {
                    if !ops[a - 1].commutator(&ops[b - 1]).is_zero() {
                        return Ok(false);
                    }
                } else {
                    let x = &ops[a - 1];
                    let y = &ops[b - 1];
                    let serre = x
                        .mul(x)
                        .mul(y)
                        .sub(&x.mul(y).mul(x).add(&x.mul(y).mul(x)))
                        .add(&y.mul(x).mul(x));
                    if !serre.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The Grothendieck-family raising operator at `h = 0` sends a fixed point
/// `[w S_c]` to the sum of `[w y S_{c'}]` with unit coefficients, one per
/// coset of the intersection subgroup inside the Young subgroup of `c`.
pub fn bg_pushforward_check(n: usize, d: usize) -> Result<bool> {
    let basis = BlockBasis::new(n, d, Family::Groth);
    for a in 1..n {
        let e0 = block_operator(&basis, a, Chevalley::E)?.subst_h0()?.to_qmat()?;
        for (j, (c, w)) in basis.elements.iter().enumerate() {
            let Some(cp) = c.raise(a) else {
                for i in 0..basis.len() {
                    if !e0[(i, j)].is_zero() {
                        return Ok(false);
                    }
                }
                continue;
            };
            // expected column: ones at the cosets w y S_{c'}, y over the
            // Young subgroup of c modulo the intersection
            let mut expect = vec![num::rational::BigRational::from_integer(0.into()); basis.len()];
            let inter = refinement(&cp, c).young_order();
            for y in c.young_subgroup() {
                let i = basis.index_of(&cp, &w.compose(&y));
                expect[i] += num::rational::BigRational::new(1.into(), (inter as i64).into());
            }
            for i in 0..basis.len() {
                if e0[(i, j)] != expect[i] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Check the localization formula on a coordinate subspace of the strictly
/// upper triangular space: the reciprocal Euler class of the subspace equals
/// its multidegree divided by the Euler class of the ambient space.
pub fn localization_check(d: usize, zero_vars: &[usize]) -> Result<bool> {
    let ring = groebner::upper_triangular_ring(d, TermOrder::DegRevLex);
    let nv = ring.nvars();
    assert!(zero_vars.iter().all(|&i| i < nv));
    let gens = zero_vars.iter().map(|&i| ring.var(i)).collect();
    let md = groebner::multidegree(&PolyIdeal::new(ring.clone(), gens), &Budget::default())?;
    let ambient: Vec<MultiPoly> = ring.weights.iter().map(|w| w.to_poly()).collect();
    let lhs = RatFunc::new(md, ambient);
    let free: Vec<MultiPoly> = (0..nv)
        .filter(|i| !zero_vars.contains(i))
        .map(|i| ring.weights[i].to_poly())
        .collect();
    let rhs = RatFunc::new(MultiPoly::one(d + 1), free);
    Ok(lhs == rhs)
}
