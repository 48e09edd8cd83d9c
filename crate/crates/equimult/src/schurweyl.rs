//! Symmetrization operators on towers of Young-subgroup invariants,
//! realizing the Chevalley generators, their duals, and the weight-zero
//! reflection operators, all by explicit averaging in an S_d-module.

use num::One;

use crate::poly::{qfrac, qint, Q};
use crate::qmat::QMat;
use crate::symgrp::{Composition, Partition, Perm, SpechtModule};
use crate::{Error, Result};

/// An S_d-module given by explicit generator matrices for the adjacent
/// transpositions.
#[derive(Debug, Clone)]
pub struct SdModuleModel {
    pub d: usize,
    pub gens: Vec<QMat>,
}

impl SdModuleModel {
    /// The regular representation on the basis indexed by the minimal coset
    /// representatives of the trivial Young subgroup (all of S_d), with
    /// `s_a` sending the basis vector of `w` to that of `w s_a`.
    pub fn regular(d: usize) -> Self {
        let perms = Composition::new(vec![1; d]).min_coset_reps();
        let index: std::collections::BTreeMap<Perm, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut gens = Vec::new();
        for a in 1..d {
            let sa = Perm::adjacent(d, a);
            let mut m = QMat::zeros(perms.len(), perms.len());
            for (j, w) in perms.iter().enumerate() {
                m[(index[&w.compose(&sa)], j)] = Q::one();
            }
            gens.push(m);
        }
        SdModuleModel { d, gens }
    }

    pub fn specht(shape: &Partition) -> Self {
        let d = shape.size();
        let module = SpechtModule::new(shape);
        let gens =
            (1..d).map(|a| module.action(&Perm::adjacent(d, a))).collect();
        SdModuleModel { d, gens }
    }

    pub fn dim(&self) -> usize {
        if self.gens.is_empty() {
            1
        } else {
            self.gens[0].rows
        }
    }

    /// The action matrix of an arbitrary permutation, via a reduced word.
    pub fn act(&self, w: &Perm) -> QMat {
        let mut m = QMat::identity(self.dim());
        for a in w.reduced_word() {
            m = m.mul(&self.gens[a - 1]);
        }
        m
    }

    pub fn coxeter_relations_hold(&self) -> bool {
        let n = self.dim();
        let id = QMat::identity(n);
        for (i, g) in self.gens.iter().enumerate() {
            if g.mul(g) != id {
                return false;
            }
            for (j, h) in self.gens.iter().enumerate().skip(i + 1) {
                let gh = g.mul(h);
                let ok = if j == i + 1 {
                    gh.mul(&gh).mul(&gh) == id
                } else {
                    gh == h.mul(g)
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// The averaging projector onto the invariants of the Young subgroup.
    pub fn averaging_projector(&self, c: &Composition) -> QMat {
        let group = c.young_subgroup();
        let mut p = QMat::zeros(self.dim(), self.dim());
        for g in &group {
            p = p.add(&self.act(g));
        }
        p.scale(&qfrac(1, group.len() as i64))
    }
}

/// Explicit bases of the invariant spaces for every composition of `d` into
/// `n` parts, with the averaging projectors.
#[derive(Debug, Clone)]
pub struct InvariantTower {
    pub model: SdModuleModel,
    pub n: usize,
    pub comps: Vec<Composition>,
    pub projectors: Vec<QMat>,
    pub bases: Vec<QMat>,
}

impl InvariantTower {
    pub fn new(model: SdModuleModel, n: usize) -> Self {
        let comps = Composition::all(model.d, n);
        let mut projectors = Vec::new();
        let mut bases = Vec::new();
        for c in &comps {
            let p = model.averaging_projector(c);
            let pivots = p.clone().rref();
            bases.push(p.select_columns(&pivots));
            projectors.push(p);
        }
        InvariantTower { model, n, comps, projectors, bases }
    }

    /// The regular-representation tower with the invariant basis indexed by
    /// minimal coset representatives: the basis vector of `w S_c` is the
    /// normalized orbit sum `(1/#S_c) sum over the coset`. This is the basis
    /// matching the fixed-point classes of the localization calculus.
    pub fn regular(n: usize, d: usize) -> Self {
        let model = SdModuleModel::regular(d);
        let full = Composition::new(vec![1; d]);
        let perms = full.min_coset_reps();
        let index: std::collections::BTreeMap<Perm, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let comps = Composition::all(d, n);
        let mut projectors = Vec::new();
        let mut bases = Vec::new();
        for c in &comps {
            let p = model.averaging_projector(c);
            let cols: Vec<usize> =
                c.min_coset_reps().iter().map(|w| index[w]).collect();
            bases.push(p.select_columns(&cols));
            projectors.push(p);
        }
        InvariantTower { model, n, comps, projectors, bases }
    }

    fn comp_index(&self, c: &Composition) -> usize {
        self.comps.iter().position(|x| x == c).expect("composition in tower")
    }

    /// Average a vector into the invariants of the target composition.
    pub fn psi(&self, target: &Composition, v: &[Q]) -> Vec<Q> {
        self.projectors[self.comp_index(target)].mul_vec(v)
    }

    /// The raising generator as a matrix between invariant bases:
    /// `d_{a+1}` times the averaging map into the raised composition.
    pub fn chev_e(&self, a: usize, c: &Composition) -> Result<QMat> {
        let target =
            c.raise(a).ok_or_else(|| Error::Domain("raising a ghost".into()))?;
        self.symmetrization(c, &target, qint(c.parts[a] as i64))
    }

    /// The lowering generator: `d_a` times the averaging map into the
    /// lowered composition.
    pub fn chev_f(&self, a: usize, c: &Composition) -> Result<QMat> {
        let target =
            c.lower(a).ok_or_else(|| Error::Domain("lowering a ghost".into()))?;
        self.symmetrization(c, &target, qint(c.parts[a - 1] as i64))
    }

    fn symmetrization(
        &self,
        source: &Composition,
        target: &Composition,
        coef: Q,
    ) -> Result<QMat> {
        let si = self.comp_index(source);
        let ti = self.comp_index(target);
        let sb = &self.bases[si];
        let tb = &self.bases[ti];
        let proj = &self.projectors[ti];
        let mut cols = Vec::new();
        for j in 0..sb.cols {
            let v = proj.mul_vec(&sb.col(j));
            let v: Vec<Q> = v.iter().map(|x| x * &coef).collect();
            let x = tb
                .solve(&v)
                .ok_or_else(|| Error::Domain("image outside invariant basis".into()))?;
            cols.push(x);
        }
        Ok(QMat::from_columns(tb.cols, &cols))
    }

    /// Dual Chevalley generator on the dual invariant spaces: the adjoint of
    /// the rescaled opposite generator.
    pub fn dual_chev(&self, a: usize, c: &Composition, raise: bool) -> Result<QMat> {
        if raise {
            let target =
                c.raise(a).ok_or_else(|| Error::Domain("raising a ghost".into()))?;
            let f = self.chev_f(a, &target)?;
            let coef = qfrac(c.parts[a] as i64, c.parts[a - 1] as i64 + 1);
            Ok(f.transpose().scale(&coef))
        } else {
            let target =
                c.lower(a).ok_or_else(|| Error::Domain("lowering a ghost".into()))?;
            let e = self.chev_e(a, &target)?;
            let coef = qfrac(c.parts[a - 1] as i64, c.parts[a] as i64 + 1);
            Ok(e.transpose().scale(&coef))
        }
    }

    fn offsets(&self) -> (Vec<usize>, usize) {
        let mut offsets = Vec::new();
        let mut total = 0;
        for b in &self.bases {
            offsets.push(total);
            total += b.cols;
        }
        (offsets, total)
    }

    /// The block matrix of a generator (or its dual) on the direct sum of
    /// all invariant spaces.
    pub fn block_operator(&self, a: usize, raise: bool, dual: bool) -> QMat {
        let (offsets, total) = self.offsets();
        let mut m = QMat::zeros(total, total);
        for (ci, c) in self.comps.iter().enumerate() {
            let target = if raise { c.raise(a) } else { c.lower(a) };
            let Some(target) = target else { continue };
            let block = if dual {
                self.dual_chev(a, c, raise)
            } else if raise {
                self.chev_e(a, c)
            } else {
                self.chev_f(a, c)
            }
            .expect("non-ghost target");
            let ti = self.comp_index(&target);
            for i in 0..block.rows {
                for j in 0..block.cols {
                    m[(offsets[ti] + i, offsets[ci] + j)] = block[(i, j)].clone();
                }
            }
        }
        m
    }

    pub fn cartan_block(&self, a: usize) -> QMat {
        let (offsets, total) = self.offsets();
        let mut m = QMat::zeros(total, total);
        for (ci, c) in self.comps.iter().enumerate() {
            let h = qint(c.parts[a - 1] as i64 - c.parts[a] as i64);
            for j in 0..self.bases[ci].cols {
                m[(offsets[ci] + j, offsets[ci] + j)] = h.clone();
            }
        }
        m
    }

    /// The defining relations of the assembled generators, as exact matrix
    /// identities: Cartan brackets, vanishing mixed brackets, and the
    /// degree-3 relations between adjacent generators.
    pub fn relations_hold(&self, dual: bool) -> bool {
        let n = self.n;
        let es: Vec<QMat> =
            (1..n).map(|a| self.block_operator(a, true, dual)).collect();
        let fs: Vec<QMat> =
            (1..n).map(|a| self.block_operator(a, false, dual)).collect();
        for a in 1..n {
            for b in 1..n {
                let comm = es[a - 1].mul(&fs[b - 1]).sub(&fs[b - 1].mul(&es[a - 1]));
                if a == b {
                    if comm != self.cartan_block(a) {
                        return false;
                    }
                } else if !comm.is_zero() {
                    return false;
                }
            }
        }
        for ops in [&es, &fs] {
            for a in 1..n {
                for b in 1..n {
                    if a == b {
                        continue;
                    }
                    let x = &ops[a - 1];
                    let y = &ops[b - 1];
                    if (a as i64 - b as i64).abs() >= 2 {
                        if x.mul(y) != y.mul(x) {
                            return false;
                        }
                    } else {
                        let serre = x
                            .mul(x)
                            .mul(y)
                            .sub(&x.mul(y).mul(x).scale(&qint(2)))
                            .add(&y.mul(x).mul(x));
                        if !serre.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The weight-zero reflection operator `1 - E_a F_a` on the `1^d`
    /// invariant space (the tower must have `n = d`).
    pub fn weight_zero_t(&self, a: usize) -> Result<QMat> {
        assert_eq!(self.n, self.model.d, "weight zero needs n = d");
        let full = Composition::new(vec![1; self.model.d]);
        let down = full.lower(a).unwrap();
        let f = self.chev_f(a, &full)?;
        let e = self.chev_e(a, &down)?;
        let k = self.bases[self.comp_index(&full)].cols;
        Ok(QMat::identity(k).sub(&e.mul(&f)))
    }

    /// The same operator through the unabbreviated triple-exponential
    /// expansion `1 - E_aF_a - F_aE_a + (1/2) E_aF_a^2E_a`; agrees with
    /// `weight_zero_t` on small towers.
    pub fn weight_zero_t_full(&self, a: usize) -> Result<QMat> {
        assert_eq!(self.n, self.model.d, "weight zero needs n = d");
        let full = Composition::new(vec![1; self.model.d]);
        let down = full.lower(a).unwrap();
        let up = full.raise(a).unwrap();
        let f = self.chev_f(a, &full)?;
        let e_back = self.chev_e(a, &down)?;
        let e = self.chev_e(a, &full)?;
        let f_back = self.chev_f(a, &up)?;
        let k = self.bases[self.comp_index(&full)].cols;
        let ef = e_back.mul(&f);
        let fe = f_back.mul(&e);
        // F_a^2 from the top of the string: lower twice from the raised
        // composition
        let f_top = self.chev_f(a, &up)?;
        let f_mid = self.chev_f(a, &full)?;
        let eff = e_back.mul(&f_mid).mul(&f_top).mul(&e).scale(&qfrac(1, 2));
        Ok(QMat::identity(k).sub(&ef).sub(&fe).add(&eff))
    }
}

/// The weight-zero operators of the Specht-module tower for `lambda`: the
/// matrices `1 - E_a F_a` on the `1^d` component, one per `a`.
pub fn specht_weight_zero(shape: &Partition) -> Result<Vec<QMat>> {
    let d = shape.size();
    let tower = InvariantTower::new(SdModuleModel::specht(shape), d);
    (1..d).map(|a| tower.weight_zero_t(a)).collect()
}

/// Compare the regular-representation Chevalley matrices with the
/// Grothendieck-family fixed-point operators at `h = 0`: with the orbit-sum
/// normalization they must coincide entry by entry.
pub fn matches_fixed_point_operators(n: usize, d: usize) -> Result<bool> {
    use crate::localization::{block_operator, BlockBasis, Chevalley, Family};
    let tower = InvariantTower::regular(n, d);
    let basis = BlockBasis::new(n, d, Family::Groth);
    // both orderings enumerate compositions then minimal coset reps, so the
    // global indexings agree
    for (i, (c, w)) in basis.elements.iter().enumerate() {
        let (offsets, _) = tower.offsets();
        let ci = tower.comp_index(c);
        let pos = c.min_coset_reps().iter().position(|x| x == w).unwrap();
        assert_eq!(i, offsets[ci] + pos);
    }
    for a in 1..n {
        let e_geom = block_operator(&basis, a, Chevalley::E)?.subst_h0()?.to_qmat()?;
        let f_geom = block_operator(&basis, a, Chevalley::F)?.subst_h0()?.to_qmat()?;
        if tower.block_operator(a, true, false) != e_geom {
            return Ok(false);
        }
        if tower.block_operator(a, false, false) != f_geom {
            return Ok(false);
        }
    }
    Ok(true)
}
