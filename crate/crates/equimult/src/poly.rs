//! Exact multivariate polynomials and rational functions over the rationals,
//! graded by torus weights.
//!
//! The ambient variable set for one computation context of rank `d` is
//! `e1, ..., ed, h` where the `ei` are the diagonal torus characters and `h`
//! is the loop-rotation parameter. Exponent vectors are stored densely with
//! length `d + 1`; the `h` exponent always sits in the last slot.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub fn qint(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An integer character of the torus `T x Gm`: coefficients of
/// `(e1, ..., ed, h)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusWeight {
    pub coeffs: Vec<i64>,
}

impl TorusWeight {
    /// Weight `ei - ej` (1-based indices), in a context of rank `d`.
    pub fn root(d: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= d && j <= d && i != j);
        let mut coeffs = vec![0i64; d + 1];
        coeffs[i - 1] = 1;
        coeffs[j - 1] = -1;
        TorusWeight { coeffs }
    }

    pub fn zero(d: usize) -> Self {
        TorusWeight { coeffs: vec![0; d + 1] }
    }

    pub fn h(d: usize) -> Self {
        let mut coeffs = vec![0i64; d + 1];
        coeffs[d] = 1;
        TorusWeight { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn neg(&self) -> Self {
        TorusWeight { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    /// The weight as a degree-one polynomial.
    pub fn to_poly(&self) -> MultiPoly {
        let n = self.coeffs.len();
        let mut p = MultiPoly::zero(n);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let mut exp = vec![0u32; n];
                exp[i] = 1;
                p.add_term(exp, qint(c));
            }
        }
        p
    }

    /// Weight plus `h`, as a polynomial.
    pub fn to_poly_plus_h(&self) -> MultiPoly {
        let n = self.coeffs.len();
        let mut p = self.to_poly();
        let mut exp = vec![0u32; n];
        exp[n - 1] = 1;
        p.add_term(exp, Q::one());
        p
    }
}

/// A finite multiset of torus weights, e.g. the weights of `u`, `u^-`, or `p`
/// for a parabolic attached to a composition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    pub entries: Vec<TorusWeight>,
}

impl WeightMultiset {
    pub fn new(mut entries: Vec<TorusWeight>) -> Self {
        entries.sort();
        WeightMultiset { entries }
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        WeightMultiset::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Product of the weights in `m` (with `+h` added to every entry when
/// `h_shift` is set). A zero weight without the shift is a degenerate fixed
/// point and is rejected.
pub fn euler_class(m: &WeightMultiset, h_shift: bool) -> Result<MultiPoly> {
    let n = match m.entries.first() {
        Some(w) => w.coeffs.len(),
        None => return Ok(MultiPoly::one(1)),
    };
    let mut out = MultiPoly::one(n);
    for w in &m.entries {
        if !h_shift && w.is_zero() {
            return Err(Error::SingularEulerClass);
        }
        let f = if h_shift { w.to_poly_plus_h() } else { w.to_poly() };
        out = out.mul(&f);
    }
    Ok(out)
}

/// Sparse-by-monomial polynomial in canonical form: no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The `i`-th variable (0-based; index `nvars - 1` is `h`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0u32; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exp, Q::one());
        p
    }

    /// `ei` in a rank-`d` context (1-based).
    pub fn eps(d: usize, i: usize) -> Self {
        Self::var(d + 1, i - 1)
    }

    /// The loop-rotation variable in a rank-`d` context.
    pub fn h_var(d: usize) -> Self {
        Self::var(d + 1, d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            Some(Q::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Q) {
        assert_eq!(exp.len(), self.nvars, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    /// The homogeneous component of total degree `k`.
    pub fn homogeneous_component(&self, k: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The lowest-degree homogeneous component.
    pub fn lowest_component(&self) -> MultiPoly {
        match self.min_degree() {
            Some(k) => self.homogeneous_component(k),
            None => MultiPoly::zero(self.nvars),
        }
    }

    /// Leading term under graded lexicographic order on the stored exponents.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Q)> {
        self.terms
            .iter()
            .max_by(|(e1, _), (e2, _)| {
                let d1: u32 = e1.iter().sum();
                let d2: u32 = e2.iter().sum();
                d1.cmp(&d2).then_with(|| e1.cmp(e2))
            })
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, other.nvars, "arity mismatch");
        assert!(!other.is_zero(), "division by zero polynomial");
        let (lt_e, lt_c) = other.leading().unwrap();
        let lt_e = lt_e.clone();
        let lt_c = lt_c.clone();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            if re.iter().zip(&lt_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            let qc = rc / &lt_c;
            let mut mono = MultiPoly::zero(self.nvars);
            mono.terms.insert(qe, qc);
            rem = rem.sub(&mono.mul(other));
            quo = quo.add(&mono);
        }
        Some(quo)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Apply the Weyl group element `w` (0-based images on the first `d`
    /// variables); `h` is fixed. Ring homomorphism `ei -> e_{w(i)}`.
    pub fn weyl_act(&self, w: &[usize]) -> Result<MultiPoly> {
        let d = self.nvars - 1;
        if w.len() != d {
            return Err(Error::Context(format!(
                "permutation of length {} applied in rank-{} context",
                w.len(),
                d
            )));
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exp = vec![0u32; self.nvars];
            for i in 0..d {
                exp[w[i]] += e[i];
            }
            exp[d] = e[d];
            out.add_term(exp, c.clone());
        }
        Ok(out)
    }

    /// Substitute `h = 0`.
    pub fn subst_h0(&self) -> MultiPoly {
        let d = self.nvars - 1;
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[d] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Evaluate at a rational point (length `nvars`).
    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m *= &point[i];
                }
            }
            acc += m;
        }
        acc
    }

    /// Extract the largest monomial dividing every term, together with the
    /// rational content. Returns `(content, exponent, primitive part)`.
    pub fn monomial_content(&self) -> (Q, Vec<u32>, MultiPoly) {
        if self.is_zero() {
            return (Q::zero(), vec![0; self.nvars], self.clone());
        }
        let mut gcd_exp = self.terms.keys().next().unwrap().clone();
        for e in self.terms.keys() {
            for (g, &x) in gcd_exp.iter_mut().zip(e) {
                *g = (*g).min(x);
            }
        }
        // rational content: gcd of numerators over lcm of denominators,
        // signed by the leading coefficient
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut content = Q::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let mut prim = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let exp: Vec<u32> = e.iter().zip(&gcd_exp).map(|(a, b)| a - b).collect();
            prim.terms.insert(exp, c / &content);
        }
        (content, gcd_exp, prim)
    }

    /// Render with variables `e1..ed, h`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let d = self.nvars - 1;
        let mut parts: Vec<(Vec<u32>, Q)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        // highest degree first, then lexicographic
        parts.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        let mut out = String::new();
        for (idx, (e, c)) in parts.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if i == d { "h".to_string() } else { format!("e{}", i + 1) };
                if k == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{}^{}", name, k));
                }
            }
            let coef_abs = c.abs();
            let mono = factors.join("*");
            let body = if mono.is_empty() {
                format!("{}", coef_abs)
            } else if coef_abs.is_one() {
                mono
            } else {
                format!("{}*{}", coef_abs, mono)
            };
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A rational function `num / prod(factor^mult)`. Denominator factors are
/// kept factored (they arise as products of linear Euler-class weights), each
/// normalized to primitive integer coefficients with positive leading
/// coefficient; the normalizing scalar is folded into the numerator.
/// Cancellation is by exact trial division of the numerator by each factor.
#[derive(Debug, Clone)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: BTreeMap<MultiPoly, u32>,
}

impl RatFunc {
    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: MultiPoly::zero(nvars), den: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: MultiPoly::one(nvars), den: BTreeMap::new() }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: BTreeMap::new() }
    }

    pub fn from_constant(nvars: usize, c: Q) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    /// `num / prod(factors)`; every factor must be nonzero.
    pub fn new(num: MultiPoly, factors: Vec<MultiPoly>) -> Self {
        let mut rf = RatFunc { num, den: BTreeMap::new() };
        for f in factors {
            rf.push_den_factor(f, 1);
        }
        rf.reduce();
        rf
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    fn push_den_factor(&mut self, f: MultiPoly, mult: u32) {
        assert!(!f.is_zero(), "zero denominator factor");
        if let Some(c) = f.as_constant() {
            self.num = self.num.scale(&(Q::one() / c.pow(mult as i32)));
            return;
        }
        let (content, mexp, prim) = f.monomial_content();
        // the monomial part splits into individual variable factors
        self.num = self.num.scale(&(Q::one() / content.pow(mult as i32)));
        for (i, &k) in mexp.iter().enumerate() {
            if k > 0 {
                let v = MultiPoly::var(f.nvars, i);
                *self.den.entry(v).or_insert(0) += k * mult;
            }
        }
        if !prim.is_constant() {
            *self.den.entry(prim).or_insert(0) += mult;
        }
    }

    /// Cancel denominator factors into the numerator where exact division
    /// succeeds.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<MultiPoly> = self.den.keys().cloned().collect();
        for f in factors {
            while *self.den.get(&f).unwrap_or(&0) > 0 {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    /// Expanded denominator polynomial.
    pub fn den_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::one(self.nvars());
        for (f, &m) in &self.den {
            p = p.mul(&f.pow(m));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        assert_eq!(self.nvars(), other.nvars(), "arity mismatch");
        // lcm of the factored denominators
        let mut lcm: BTreeMap<MultiPoly, u32> = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let mut n1 = self.num.clone();
        let mut n2 = other.num.clone();
        for (f, &m) in &lcm {
            let m1 = *self.den.get(f).unwrap_or(&0);
            let m2 = *other.den.get(f).unwrap_or(&0);
            if m > m1 {
                n1 = n1.mul(&f.pow(m - m1));
            }
            if m > m2 {
                n2 = n2.mul(&f.pow(m - m2));
            }
        }
        let mut out = RatFunc { num: n1.add(&n2), den: lcm };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        assert_eq!(self.nvars(), other.nvars(), "arity mismatch");
        let mut out = RatFunc { num: self.num.mul(&other.num), den: self.den.clone() };
        for (f, &m) in &other.den {
            *out.den.entry(f.clone()).or_insert(0) += m;
        }
        out.reduce();
        out
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Reciprocal; the numerator becomes a single denominator factor.
    pub fn inverse(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let mut out = RatFunc { num: self.den_poly(), den: BTreeMap::new() };
        out.push_den_factor(self.num.clone(), 1);
        out.reduce();
        Ok(out)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn weyl_act(&self, w: &[usize]) -> Result<RatFunc> {
        let mut out = RatFunc { num: self.num.weyl_act(w)?, den: BTreeMap::new() };
        for (f, &m) in &self.den {
            out.push_den_factor(f.weyl_act(w)?, m);
        }
        out.reduce();
        Ok(out)
    }

    /// Specialize `h = 0`. Legal only when the reduced denominator does not
    /// vanish at `h = 0`.
    pub fn subst_h0(&self) -> Result<RatFunc> {
        let mut out = RatFunc { num: self.num.subst_h0(), den: BTreeMap::new() };
        for (f, &m) in &self.den {
            let f0 = f.subst_h0();
            if f0.is_zero() {
                return Err(Error::NotHRegular);
            }
            out.push_den_factor(f0, m);
        }
        out.reduce();
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.den.is_empty() {
            return self.num.render();
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, &m)| {
                if m == 1 {
                    format!("({})", f.render())
                } else {
                    format!("({})^{}", f.render(), m)
                }
            })
            .collect();
        format!("({}) / {}", self.num.render(), den.join("*"))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplication avoids relying on canonical reduction
        self.num.mul(&other.den_poly()) == other.num.mul(&self.den_poly())
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The simple root `alpha_a = e_a - e_{a+1}` as a polynomial (1-based `a`).
pub fn simple_root(d: usize, a: usize) -> MultiPoly {
    assert!(a >= 1 && a < d);
    TorusWeight::root(d, a, a + 1).to_poly()
}

/// The adjacent transposition `s_a` as 0-based images (1-based `a`).
pub fn adjacent_transposition(d: usize, a: usize) -> Vec<usize> {
    assert!(a >= 1 && a < d);
    let mut w: Vec<usize> = (0..d).collect();
    w.swap(a - 1, a);
    w
}

/// The divided-difference operator `(f - s_a f) / alpha_a`. The difference is
/// always divisible by `alpha_a`, so division is exact.
pub fn bgg_delta(a: usize, f: &MultiPoly) -> MultiPoly {
    let d = f.nvars - 1;
    let s = adjacent_transposition(d, a);
    let diff = f.sub(&f.weyl_act(&s).expect("same context"));
    diff.div_exact(&simple_root(d, a))
        .expect("f - s_a f is divisible by alpha_a")
}
