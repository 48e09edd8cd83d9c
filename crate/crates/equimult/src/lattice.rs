//! The lattice model: embed a strictly upper triangular nilpotent as a
//! Laurent polynomial matrix and read off its elementary-divisor type,
//! which recovers the Jordan type.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::poly::Q;
use crate::qmat::QMat;
use crate::symgrp::Partition;
use crate::{Error, Result};

/// Finite Laurent polynomial in t with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    /// exponent -> coefficient, zero coefficients never stored
    pub coeffs: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn term(exp: i64, c: Q) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn t_pow(exp: i64) -> Self {
        Self::term(exp, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                let entry = coeffs.entry(e1 + e2).or_insert_with(Q::zero);
                *entry += &(c1 * c2);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{}", c),
                1 => format!("{}*t", c),
                _ => format!("{}*t^{}", c, e),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Square matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub d: usize,
    pub entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(d: usize) -> Self {
        LaurentMatrix { d, entries: vec![LaurentPoly::zero(); d * d] }
    }

    pub fn scalar(d: usize, p: &LaurentPoly) -> Self {
        let mut m = Self::zeros(d);
        for i in 0..d {
            m[(i, i)] = p.clone();
        }
        m
    }

    pub fn identity(d: usize) -> Self {
        Self::scalar(d, &LaurentPoly::t_pow(0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let mut out = Self::zeros(self.d);
        for i in 0..self.d {
            for j in 0..self.d {
                let mut s = LaurentPoly::zero();
                for k in 0..self.d {
                    if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                        s = s.add(&self[(i, k)].mul(&other[(k, j)]));
                    }
                }
                out[(i, j)] = s;
            }
        }
        out
    }

    /// Determinant by cofactor expansion on the listed rows and columns.
    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        if rows.is_empty() {
            return LaurentPoly::t_pow(0);
        }
        let mut det = LaurentPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            if self[(rows[0], c)].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &x)| x)
                .collect();
            let term = self[(rows[0], c)].mul(&self.minor_det(&rows[1..], &sub_cols));
            det = if k % 2 == 0 { det.add(&term) } else { det.sub(&term) };
        }
        det
    }

    pub fn det(&self) -> LaurentPoly {
        let all: Vec<usize> = (0..self.d).collect();
        self.minor_det(&all, &all)
    }

    pub fn render(&self) -> String {
        (0..self.d)
            .map(|i| {
                (0..self.d)
                    .map(|j| self[(i, j)].render())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.entries[i * self.d + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[i * self.d + j]
    }
}

/// Elementary-divisor exponents, sorted decreasingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeType {
    pub exps: Vec<i64>,
}

/// The matrix t^{-1}(1 - x t^{-1})^{-1} = sum over k < d of x^k t^{-k-1}.
/// Nilpotency makes the geometric series finite.
pub fn lusztig_embed(x: &QMat) -> Result<LaurentMatrix> {
    let d = x.rows;
    if x.cols != d {
        return Err(Error::Domain("lusztig_embed needs a square matrix".into()));
    }
    for i in 0..d {
        for j in 0..=i {
            if !x[(i, j)].is_zero() {
                return Err(Error::Domain(
                    "lusztig_embed needs a strictly upper triangular matrix".into(),
                ));
            }
        }
    }
    let mut out = LaurentMatrix::zeros(d);
    let mut power = QMat::identity(d);
    for k in 0..d as i64 {
        for i in 0..d {
            for j in 0..d {
                if !power[(i, j)].is_zero() {
                    out[(i, j)] = out[(i, j)]
                        .add(&LaurentPoly::term(-k - 1, power[(i, j)].clone()));
                }
            }
        }
        power = power.mul(x);
    }
    Ok(out)
}

/// t-adic valuations of the invariant factors over the power series ring,
/// sorted decreasingly. The valuation of the k-th determinantal divisor is
/// the minimum valuation over k-by-k minors, since the t-adic valuation of
/// a polynomial gcd is the minimum of the valuations.
pub fn smith_type(m: &LaurentMatrix) -> Result<LatticeType> {
    use itertools::Itertools;
    let d = m.d;
    let mut divisor_vals = vec![0i64; d + 1];
    for k in 1..=d {
        let mut best: Option<i64> = None;
        for rows in (0..d).combinations(k) {
            for cols in (0..d).combinations(k) {
                if let Some(v) = m.minor_det(&rows, &cols).valuation() {
                    best = Some(best.map_or(v, |b: i64| b.min(v)));
                }
            }
        }
        match best {
            Some(v) => divisor_vals[k] = v,
            None => {
                return Err(Error::Domain("smith_type: singular matrix".into()))
            }
        }
    }
    let mut exps: Vec<i64> =
        (1..=d).map(|k| divisor_vals[k] - divisor_vals[k - 1]).collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    Ok(LatticeType { exps })
}

/// Lattice type of the embedded nilpotent, reported as a dominant
/// partition: the determinant shift t^{-d} is absorbed by negating the
/// elementary-divisor exponents.
pub fn mv_type(x: &QMat) -> Result<Partition> {
    let ty = smith_type(&lusztig_embed(x)?)?;
    let mut parts = Vec::new();
    for e in ty.exps {
        let p = -e;
        if p < 0 {
            return Err(Error::Domain(format!(
                "embedded lattice does not contain the standard one: exponent {}",
                e
            )));
        }
        if p > 0 {
            parts.push(p as usize);
        }
    }
    Ok(Partition::new(parts))
}

#[derive(Debug, Clone)]
pub struct MvTypeReport {
    pub lambda: Partition,
    pub samples: usize,
    /// boundary strata checked inside the closure, with their sample counts
    pub boundary: Vec<(Partition, usize)>,
    pub pass: bool,
    /// on failure, the offending point and its computed type
    pub witness: Option<(QMat, Partition)>,
}

/// Sample points of the orbit inside the strictly upper triangular space
/// and check that the lattice type of the embedding recovers the Jordan
/// type; boundary strata of the closure must give dominated types.
pub fn mv_type_check(
    lambda: &Partition,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<MvTypeReport> {
    for x in [
        crate::orbital::jordan_matrix(lambda),
        crate::orbital::sample_orbit_point(lambda, rng),
    ] {
        // cheap preflight so a convention bug fails fast
        let ty = mv_type(&x)?;
        if &ty != lambda {
            return Ok(MvTypeReport {
                lambda: lambda.clone(),
                samples: 0,
                boundary: Vec::new(),
                pass: false,
                witness: Some((x, ty)),
            });
        }
    }
    for _ in 0..samples {
        let x = crate::orbital::sample_orbit_point(lambda, rng);
        let ty = mv_type(&x)?;
        if &ty != lambda {
            return Ok(MvTypeReport {
                lambda: lambda.clone(),
                samples,
                boundary: Vec::new(),
                pass: false,
                witness: Some((x, ty)),
            });
        }
    }
    let mut boundary = Vec::new();
    for mu in Partition::all(lambda.size()) {
        if &mu == lambda || !mu.dominated_by(lambda) {
            continue;
        }
        let n = (samples / 10).max(1);
        for _ in 0..n {
            let x = crate::orbital::sample_orbit_point(&mu, rng);
            let ty = mv_type(&x)?;
            if ty != mu || !ty.dominated_by(lambda) {
                return Ok(MvTypeReport {
                    lambda: lambda.clone(),
                    samples,
                    boundary,
                    pass: false,
                    witness: Some((x, ty)),
                });
            }
        }
        boundary.push((mu, n));
    }
    Ok(MvTypeReport {
        lambda: lambda.clone(),
        samples,
        boundary,
        pass: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qint;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn unimodular(d: usize, rng: &mut impl Rng) -> LaurentMatrix {
        // product of elementary row operations over the polynomial ring
        let mut m = LaurentMatrix::identity(d);
        for _ in 0..6 {
            let i = rng.gen_range(0..d);
            let mut j = rng.gen_range(0..d);
            while j == i {
                j = rng.gen_range(0..d);
            }
            let mut e = LaurentMatrix::identity(d);
            match rng.gen_range(0..3) {
                0 => {
                    e[(i, j)] = LaurentPoly::term(
                        rng.gen_range(0..3),
                        qint(rng.gen_range(-3..=3)),
                    );
                }
                1 => {
                    // swap rows i and j
                    e[(i, i)] = LaurentPoly::zero();
                    e[(j, j)] = LaurentPoly::zero();
                    e[(i, j)] = LaurentPoly::t_pow(0);
                    e[(j, i)] = LaurentPoly::t_pow(0);
                }
                _ => {
                    e[(i, i)] = LaurentPoly::term(0, qint(-1));
                }
            }
            m = m.mul(&e);
        }
        m
    }

    #[test]
    fn laurent_arithmetic() {
        let a = LaurentPoly::t_pow(-1).add(&LaurentPoly::t_pow(2));
        let b = LaurentPoly::t_pow(1);
        assert_eq!(
            a.mul(&b),
            LaurentPoly::t_pow(0).add(&LaurentPoly::t_pow(3))
        );
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.valuation(), Some(-1));
        assert_eq!(LaurentPoly::zero().valuation(), None);
    }

    #[test]
    fn embed_zero_and_single_jordan_block() {
        let z = lusztig_embed(&QMat::zeros(3, 3)).unwrap();
        assert_eq!(z, LaurentMatrix::scalar(3, &LaurentPoly::t_pow(-1)));

        let mut e12 = QMat::zeros(2, 2);
        e12[(0, 1)] = Q::one();
        let m = lusztig_embed(&e12).unwrap();
        assert_eq!(m[(0, 0)], LaurentPoly::t_pow(-1));
        assert_eq!(m[(0, 1)], LaurentPoly::t_pow(-2));
        assert_eq!(m[(1, 0)], LaurentPoly::zero());
        assert_eq!(m[(1, 1)], LaurentPoly::t_pow(-1));

        let mut lower = QMat::zeros(2, 2);
        lower[(1, 0)] = Q::one();
        assert!(matches!(lusztig_embed(&lower), Err(Error::Domain(_))));
    }

    #[test]
    fn determinant_valuation_is_minus_d() {
        let mut rng = StdRng::seed_from_u64(2);
        for parts in [vec![3], vec![2, 1], vec![2, 2], vec![3, 1]] {
            let l = Partition::new(parts);
            let x = crate::orbital::sample_orbit_point(&l, &mut rng);
            let m = lusztig_embed(&x).unwrap();
            assert_eq!(m.det().valuation(), Some(-(l.size() as i64)));
            let ty = smith_type(&m).unwrap();
            assert_eq!(ty.exps.iter().sum::<i64>(), -(l.size() as i64));
        }
    }

    #[test]
    fn smith_type_examples() {
        let m = LaurentMatrix::scalar(3, &LaurentPoly::t_pow(-1));
        assert_eq!(smith_type(&m).unwrap().exps, vec![-1, -1, -1]);

        let mut diag = LaurentMatrix::zeros(3);
        for (i, a) in [2i64, 0, 5].into_iter().enumerate() {
            diag[(i, i)] = LaurentPoly::t_pow(a);
        }
        assert_eq!(smith_type(&diag).unwrap().exps, vec![5, 2, 0]);

        let reg = lusztig_embed(&jordan_like(&[3])).unwrap();
        assert_eq!(smith_type(&reg).unwrap().exps, vec![0, 0, -3]);
        assert_eq!(
            mv_type(&jordan_like(&[3])).unwrap(),
            Partition::new(vec![3])
        );

        assert!(matches!(
            smith_type(&LaurentMatrix::zeros(2)),
            Err(Error::Domain(_))
        ));
    }

    fn jordan_like(parts: &[usize]) -> QMat {
        crate::orbital::jordan_matrix(&Partition::new(parts.to_vec()))
    }

    #[test]
    fn type_depends_only_on_jordan_type() {
        let mut rng = StdRng::seed_from_u64(5);
        for d in 2..=4usize {
            for l in Partition::all(d) {
                for _ in 0..50 {
                    let x = crate::orbital::sample_orbit_point(&l, &mut rng);
                    assert_eq!(mv_type(&x).unwrap(), l, "{}", l.render());
                }
            }
        }
    }

    #[test]
    fn unimodular_invariance() {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..20 {
            let l = Partition::new(vec![2, 1]);
            let x = crate::orbital::sample_orbit_point(&l, &mut rng);
            let m = lusztig_embed(&x).unwrap();
            let ty = smith_type(&m).unwrap();
            let u = unimodular(3, &mut rng);
            let v = unimodular(3, &mut rng);
            assert_eq!(u.det().valuation(), Some(0));
            assert_eq!(smith_type(&u.mul(&m).mul(&v)).unwrap(), ty);
        }
    }

    #[test]
    fn type_check_with_boundary() {
        let mut rng = StdRng::seed_from_u64(13);
        let rep =
            mv_type_check(&Partition::new(vec![3]), 20, &mut rng).unwrap();
        assert!(rep.pass, "{:?}", rep.witness);
        assert!(rep
            .boundary
            .iter()
            .any(|(mu, _)| mu == &Partition::new(vec![2, 1])));
        let rep =
            mv_type_check(&Partition::new(vec![1, 1, 1]), 5, &mut rng).unwrap();
        assert!(rep.pass);
        assert!(rep.boundary.is_empty());
    }
}
