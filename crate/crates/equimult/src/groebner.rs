//! Small exact Groebner engine: Buchberger over the rationals, dimension,
//! multigraded K-polynomials and multidegrees, saturation, splitting-based
//! minimal primes, and vanishing-ideal interpolation. Everything is budgeted
//! and desk-scale (at most ~10 variables).

use std::cmp::Ordering;

use itertools::Itertools;
use num::One;

use crate::poly::{MultiPoly, Q, TorusWeight};
use crate::qmat::QMat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    /// Degree-reverse-lexicographic over the listed variable order.
    DegRevLex,
    /// Pure lexicographic, first listed variable largest.
    Lex,
    /// Eliminate the first variable: its exponent is compared first, then
    /// degrevlex on the rest.
    ElimFirst,
}

impl TermOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::ElimFirst => a[0].cmp(&b[0]).then_with(|| degrevlex(&a[1..], &b[1..])),
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the rightmost differing slot wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// A polynomial ring with named, torus-weighted variables and a term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordRing {
    pub names: Vec<String>,
    /// Torus weight of each variable, over a rank-`d` torus context.
    pub weights: Vec<TorusWeight>,
    pub order: TermOrder,
}

impl CoordRing {
    pub fn new(names: Vec<String>, weights: Vec<TorusWeight>, order: TermOrder) -> Self {
        assert_eq!(names.len(), weights.len());
        CoordRing { names, weights, order }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.nvars(), i)
    }

    pub fn with_order(&self, order: TermOrder) -> CoordRing {
        CoordRing { order, ..self.clone() }
    }

    /// The same ring with an elimination variable `t` prepended.
    fn with_elim_var(&self) -> CoordRing {
        let mut names = vec!["t".to_string()];
        names.extend(self.names.iter().cloned());
        let d = self.weights.first().map_or(0, |w| w.rank());
        let mut weights = vec![TorusWeight::zero(d)];
        weights.extend(self.weights.iter().cloned());
        CoordRing { names, weights, order: TermOrder::ElimFirst }
    }

    pub fn render(&self, f: &MultiPoly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        use num::Signed;
        let mut parts: Vec<(Vec<u32>, Q)> =
            f.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        parts.sort_by(|(e1, _), (e2, _)| self.order.cmp(e2, e1));
        let mut out = String::new();
        for (idx, (e, c)) in parts.iter().enumerate() {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    factors.push(self.names[i].clone());
                } else if k > 1 {
                    factors.push(format!("{}^{}", self.names[i], k));
                }
            }
            let coef = c.abs();
            let mono = factors.join("*");
            let body = if mono.is_empty() {
                format!("{}", coef)
            } else if coef.is_one() {
                mono
            } else {
                format!("{}*{}", coef, mono)
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

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub pair_cap: usize,
    pub monomial_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { pair_cap: 20_000, monomial_cap: 200_000 }
    }
}

#[derive(Debug, Clone)]
pub struct PolyIdeal {
    pub ring: CoordRing,
    pub gens: Vec<MultiPoly>,
}

impl PolyIdeal {
    pub fn new(ring: CoordRing, gens: Vec<MultiPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        PolyIdeal { ring, gens }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }
}

fn leading<'a>(f: &'a MultiPoly, order: TermOrder) -> (&'a Vec<u32>, &'a Q) {
    f.terms
        .iter()
        .max_by(|(e1, _), (e2, _)| order.cmp(e1, e2))
        .expect("leading term of nonzero polynomial")
}

fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_times(f: &MultiPoly, exp: &[u32], c: &Q) -> MultiPoly {
    let mut out = MultiPoly::zero(f.nvars);
    for (e, k) in &f.terms {
        let ne: Vec<u32> = e.iter().zip(exp).map(|(a, b)| a + b).collect();
        out.terms.insert(ne, k * c);
    }
    out
}

/// Remainder of `f` on division by `gs` (full reduction of every term).
pub fn normal_form(f: &MultiPoly, gs: &[MultiPoly], order: TermOrder) -> MultiPoly {
    let mut p = f.clone();
    let mut r = MultiPoly::zero(f.nvars);
    let lts: Vec<(Vec<u32>, Q)> =
        gs.iter().map(|g| { let (e, c) = leading(g, order); (e.clone(), c.clone()) }).collect();
    while !p.is_zero() {
        let (pe, pc) = {
            let (e, c) = leading(&p, order);
            (e.clone(), c.clone())
        };
        let mut reduced = false;
        for (g, (ge, gc)) in gs.iter().zip(&lts) {
            if exp_divides(ge, &pe) {
                let qe: Vec<u32> = pe.iter().zip(ge).map(|(a, b)| a - b).collect();
                let qc = &pc / gc;
                p = p.sub(&mono_times(g, &qe, &qc));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let mut mono = MultiPoly::zero(p.nvars);
            mono.terms.insert(pe.clone(), pc.clone());
            r = r.add(&mono);
            p = p.sub(&mono);
        }
    }
    r
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, order: TermOrder) -> MultiPoly {
    let (fe, fc) = leading(f, order);
    let (ge, gc) = leading(g, order);
    let l = exp_lcm(fe, ge);
    let fq: Vec<u32> = l.iter().zip(fe).map(|(a, b)| a - b).collect();
    let gq: Vec<u32> = l.iter().zip(ge).map(|(a, b)| a - b).collect();
    mono_times(f, &fq, &(Q::one() / fc)).sub(&mono_times(g, &gq, &(Q::one() / gc)))
}

/// Reduced Groebner basis of the ideal, with monic generators.
pub fn buchberger(ideal: &PolyIdeal, budget: &Budget) -> Result<Vec<MultiPoly>> {
    let order = ideal.ring.order;
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in &ideal.gens {
        let r = normal_form(g, &basis, order);
        if !r.is_zero() {
            basis.push(r);
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).tuple_combinations().collect();
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > budget.pair_cap {
            return Err(Error::Budget(format!("S-pair cap {} exceeded", budget.pair_cap)));
        }
        let (ei, _) = leading(&basis[i], order);
        let (ej, _) = leading(&basis[j], order);
        // coprime leading monomials reduce to zero
        if ei.iter().zip(ej.iter()).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for i in 0..k {
                pairs.push((i, k));
            }
            let monomials: usize = basis.iter().map(|b| b.terms.len()).sum();
            if monomials > budget.monomial_cap {
                return Err(Error::Budget(format!(
                    "monomial cap {} exceeded",
                    budget.monomial_cap
                )));
            }
        }
    }
    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let (ei, _) = leading(&basis[i], order);
                let (ej, _) = leading(&basis[j], order);
                if exp_divides(ej, ei) && !(ei == ej && j > i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<MultiPoly> =
        basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(b, _)| b).collect();
    // fully reduce each element against the others and make monic
    let mut reduced = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        if !r.is_zero() {
            let (_, c) = leading(&r, order);
            let c = c.clone();
            reduced.push(r.scale(&(Q::one() / c)));
        }
    }
    reduced.sort_by(|a, b| order.cmp(leading(a, order).0, leading(b, order).0));
    Ok(reduced)
}

pub fn is_unit_ideal(gb: &[MultiPoly]) -> bool {
    gb.iter().any(|g| g.is_constant() && !g.is_zero())
}

/// Minimal monomial generators of an ideal generated by monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, mut gens: Vec<Vec<u32>>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && exp_divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn initial_ideal(gb: &[MultiPoly], order: TermOrder, nvars: usize) -> Self {
        MonomialIdeal::new(nvars, gb.iter().map(|g| leading(g, order).0.clone()).collect())
    }

    pub fn contains_monomial(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| exp_divides(g, e))
    }
}

/// Krull dimension of the quotient by `I`: the largest independent variable
/// set modulo the initial ideal. Returns -1 for the unit ideal.
pub fn dimension(ideal: &PolyIdeal, budget: &Budget) -> Result<i64> {
    let gb = buchberger(ideal, budget)?;
    dimension_from_gb(&gb, ideal.ring.order, ideal.ring.nvars())
}

pub fn dimension_from_gb(gb: &[MultiPoly], order: TermOrder, nvars: usize) -> Result<i64> {
    if is_unit_ideal(gb) {
        return Ok(-1);
    }
    if nvars > 16 {
        return Err(Error::Budget("dimension supports at most 16 variables".into()));
    }
    let init = MonomialIdeal::initial_ideal(gb, order, nvars);
    let mut best = 0i64;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        // the set is independent when no generator is supported inside it
        let independent = !init
            .gens
            .iter()
            .any(|g| g.iter().enumerate().all(|(i, &e)| e == 0 || (mask >> i) & 1 == 1));
        if independent {
            best = size;
        }
    }
    Ok(best)
}

/// Multigraded K-polynomial of the quotient by the monomial ideal, as a
/// polynomial in the torus variables: each monomial class `[x^e]` contributes
/// `prod_i (1 - w_i)^{e_i}` with `w_i` the variable weights. Computed by the
/// colon recursion K(I + (m)) = K(I) - [m] K(I : m).
pub fn k_polynomial(m: &MonomialIdeal, ring: &CoordRing, budget: &Budget) -> Result<MultiPoly> {
    let d = ring.weights.first().map(|w| w.rank()).unwrap_or(0);
    let ctx = d + 1;
    // K-class of each single variable: 1 - w_i
    let classes: Vec<MultiPoly> = ring
        .weights
        .iter()
        .map(|w| MultiPoly::one(ctx).sub(&w.to_poly()))
        .collect();
    let mut nodes = 0usize;
    k_rec(&m.gens, m.nvars, &classes, ctx, &mut nodes, budget)
}

fn k_rec(
    gens: &[Vec<u32>],
    nvars: usize,
    classes: &[MultiPoly],
    ctx: usize,
    nodes: &mut usize,
    budget: &Budget,
) -> Result<MultiPoly> {
    *nodes += 1;
    if *nodes > budget.pair_cap {
        return Err(Error::Budget("K-polynomial recursion budget exceeded".into()));
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(MultiPoly::zero(ctx)); // unit ideal
    }
    let Some(m) = gens.last() else {
        return Ok(MultiPoly::one(ctx));
    };
    let rest = &gens[..gens.len() - 1];
    let without = k_rec(rest, nvars, classes, ctx, nodes, budget)?;
    // (rest) : m, minimalized
    let colon = MonomialIdeal::new(
        nvars,
        rest.iter()
            .map(|g| g.iter().zip(m).map(|(&a, &b)| a.saturating_sub(b)).collect())
            .collect(),
    );
    let quot = k_rec(&colon.gens, nvars, classes, ctx, nodes, budget)?;
    let mut mcls = MultiPoly::one(ctx);
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            mcls = mcls.mul(&classes[i].pow(e));
        }
    }
    Ok(without.sub(&mcls.mul(&quot)))
}

/// Multidegree of the quotient by `I`: lowest homogeneous component of the
/// K-polynomial of the initial ideal, which must sit in degree = codimension.
pub fn multidegree(ideal: &PolyIdeal, budget: &Budget) -> Result<MultiPoly> {
    let gb = buchberger(ideal, budget)?;
    let nvars = ideal.ring.nvars();
    let dim = dimension_from_gb(&gb, ideal.ring.order, nvars)?;
    if dim < 0 {
        return Ok(MultiPoly::zero(
            ideal.ring.weights.first().map(|w| w.rank()).unwrap_or(0) + 1,
        ));
    }
    let codim = nvars as i64 - dim;
    let init = MonomialIdeal::initial_ideal(&gb, ideal.ring.order, nvars);
    let k = k_polynomial(&init, &ideal.ring, budget)?;
    let low = k.lowest_component();
    if low.is_zero() {
        return Err(Error::Certification("K-polynomial vanished unexpectedly".into()));
    }
    if low.min_degree() != Some(codim as u32) {
        return Err(Error::Certification(format!(
            "multidegree degree {} does not match codimension {}",
            low.min_degree().unwrap(),
            codim
        )));
    }
    Ok(low)
}

/// Saturation `(I : f^inf)` by the extra-variable trick: eliminate `t` from
/// `I + (t*f - 1)`.
pub fn saturation(ideal: &PolyIdeal, f: &MultiPoly, budget: &Budget) -> Result<PolyIdeal> {
    assert!(!f.is_zero());
    let ring_t = ideal.ring.with_elim_var();
    let lift = |p: &MultiPoly| -> MultiPoly {
        let mut out = MultiPoly::zero(p.nvars + 1);
        for (e, c) in &p.terms {
            let mut ne = vec![0u32];
            ne.extend(e.iter().copied());
            out.terms.insert(ne, c.clone());
        }
        out
    };
    let mut gens: Vec<MultiPoly> = ideal.gens.iter().map(lift).collect();
    let t = MultiPoly::var(ideal.ring.nvars() + 1, 0);
    gens.push(t.mul(&lift(f)).sub(&MultiPoly::one(ideal.ring.nvars() + 1)));
    let gb = buchberger(&PolyIdeal::new(ring_t, gens), budget)?;
    let contracted: Vec<MultiPoly> = gb
        .iter()
        .filter(|g| g.terms.keys().all(|e| e[0] == 0))
        .map(|g| {
            let mut out = MultiPoly::zero(ideal.ring.nvars());
            for (e, c) in &g.terms {
                out.terms.insert(e[1..].to_vec(), c.clone());
            }
            out
        })
        .collect();
    Ok(PolyIdeal::new(ideal.ring.clone(), contracted))
}

/// `I subseteq J`, decided by reducing generators of `I` against a Groebner
/// basis of `J`.
pub fn contained_in(i: &PolyIdeal, j: &PolyIdeal, budget: &Budget) -> Result<bool> {
    let gb = buchberger(j, budget)?;
    Ok(i.gens.iter().all(|g| normal_form(g, &gb, j.ring.order).is_zero()))
}

/// Outcome of the splitting decomposition.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub components: Vec<PolyIdeal>,
    pub complete: bool,
}

/// Minimal primes by iterated splitting on found factors: monomial content of
/// a basis element, a variable factor, or one Groebner element exactly
/// dividing another. Leaves with no visible factor are reported as candidate
/// primes; completeness is certified by the caller.
pub fn minimal_primes_desk(ideal: &PolyIdeal, budget: &Budget) -> Result<Decomposition> {
    let mut complete = true;
    let mut leaves: Vec<PolyIdeal> = Vec::new();
    let mut stack = vec![ideal.clone()];
    let mut visited = 0usize;
    while let Some(i) = stack.pop() {
        visited += 1;
        if visited > 200 {
            complete = false;
            leaves.push(i);
            continue;
        }
        let gb = buchberger(&i, budget)?;
        if is_unit_ideal(&gb) {
            continue;
        }
        if gb.is_empty() {
            leaves.push(PolyIdeal::new(i.ring.clone(), vec![]));
            continue;
        }
        match splitting_factor(&gb) {
            Some(f) => {
                let sat = saturation(&PolyIdeal::new(i.ring.clone(), gb.clone()), &f, budget)?;
                let mut plus_gens = gb.clone();
                plus_gens.push(f);
                stack.push(sat);
                stack.push(PolyIdeal::new(i.ring.clone(), plus_gens));
            }
            None => leaves.push(PolyIdeal::new(i.ring.clone(), gb)),
        }
    }
    // discard components containing another component
    let mut keep = vec![true; leaves.len()];
    for a in 0..leaves.len() {
        for b in 0..leaves.len() {
            if a != b && keep[a] && keep[b] && contained_in(&leaves[b], &leaves[a], budget)? {
                if contained_in(&leaves[a], &leaves[b], budget)? {
                    // equal ideals: keep the earlier one
                    if a > b {
                        keep[a] = false;
                    }
                } else {
                    keep[a] = false;
                }
            }
        }
    }
    let components =
        leaves.into_iter().zip(keep).filter(|(_, k)| *k).map(|(l, _)| l).collect();
    Ok(Decomposition { components, complete })
}

fn splitting_factor(gb: &[MultiPoly]) -> Option<MultiPoly> {
    for g in gb {
        if g.is_constant() {
            continue;
        }
        let (_, mexp, prim) = g.monomial_content();
        if mexp.iter().any(|&e| e > 0) && !prim.is_constant() {
            // split on one variable of the monomial content
            let i = mexp.iter().position(|&e| e > 0).unwrap();
            return Some(MultiPoly::var(g.nvars, i));
        }
        if mexp.iter().map(|&e| e as usize).sum::<usize>() > 1
            || (mexp.iter().any(|&e| e > 0) && g.terms.len() > 1)
        {
            let i = mexp.iter().position(|&e| e > 0).unwrap();
            return Some(MultiPoly::var(g.nvars, i));
        }
        // monomial generator in several variables: split on its first variable
        if g.terms.len() == 1 {
            let e = g.terms.keys().next().unwrap();
            let support: Vec<usize> =
                e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect();
            if support.len() > 1 {
                return Some(MultiPoly::var(g.nvars, support[0]));
            }
            continue;
        }
        // one basis element exactly divisible by another
        for h in gb {
            if h == g || h.is_constant() {
                continue;
            }
            if let Some(q) = g.div_exact(h) {
                if !q.is_constant() {
                    return Some(h.clone());
                }
            }
        }
    }
    None
}

/// All exponent vectors of total degree at most `deg`.
pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(nvars: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == nvars {
            out.push(acc.clone());
            return;
        }
        for k in 0..=left {
            acc.push(k);
            rec(nvars, left - k, acc, out);
            acc.pop();
        }
    }
    rec(nvars, deg, &mut Vec::new(), &mut out);
    out
}

/// Basis of the space of polynomials of degree at most `degree_bound`
/// vanishing on all points, by exact nullspace computation.
pub fn vanishing_ideal_interpolate(
    points: &[Vec<Q>],
    degree_bound: u32,
    ring: &CoordRing,
) -> PolyIdeal {
    let monos = monomials_up_to(ring.nvars(), degree_bound);
    let eval = QMat::from_fn(points.len(), monos.len(), |i, j| {
        let mut v = Q::one();
        for (k, &e) in monos[j].iter().enumerate() {
            for _ in 0..e {
                v *= &points[i][k];
            }
        }
        v
    });
    let kernel = eval.kernel_basis();
    let gens = kernel
        .into_iter()
        .map(|coeffs| {
            let mut p = MultiPoly::zero(ring.nvars());
            for (j, c) in coeffs.into_iter().enumerate() {
                p.add_term(monos[j].clone(), c);
            }
            p
        })
        .collect();
    PolyIdeal::new(ring.clone(), gens)
}

/// The coordinate ring of strictly upper triangular d x d matrices:
/// variables x_{ij} for i < j ordered column by column, weight of x_{ij} is
/// `e_i - e_j`.
pub fn upper_triangular_ring(d: usize, order: TermOrder) -> CoordRing {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for j in 2..=d {
        for i in 1..j {
            names.push(format!("x{}{}", i, j));
            weights.push(TorusWeight::root(d, i, j));
        }
    }
    CoordRing::new(names, weights, order)
}

/// Index of `x_{ij}` in the upper triangular ring.
pub fn ut_var_index(d: usize, i: usize, j: usize) -> usize {
    assert!(1 <= i && i < j && j <= d);
    // columns 2..j fully precede, then row position within column j
    (j - 2) * (j - 1) / 2 + (i - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use crate::poly::qint;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ring(n: usize) -> CoordRing {
        let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
        let weights = (0..n)
            .map(|i| {
                // generic nonzero weights over a rank-(n+1) torus
                TorusWeight::root(n + 1, i + 1, i + 2)
            })
            .collect();
        CoordRing::new(names, weights, TermOrder::DegRevLex)
    }

    #[test]
    fn monomial_order_axioms() {
        let mut rng = StdRng::seed_from_u64(3);
        for order in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::ElimFirst] {
            let one = vec![0u32; 4];
            for _ in 0..200 {
                let a: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
                let b: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
                let c: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
                // 1 is minimal
                if a != one {
                    assert_eq!(order.cmp(&a, &one), Ordering::Greater);
                }
                // compatible with multiplication
                let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
                let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
                assert_eq!(order.cmp(&a, &b), order.cmp(&ac, &bc));
            }
        }
    }

    #[test]
    fn buchberger_basics() {
        let r = ring(3);
        let b = Budget::default();
        let x = r.var(0);
        let y = r.var(1);
        let z = r.var(2);
        // principal monomial ideal
        let gb = buchberger(&PolyIdeal::new(r.clone(), vec![x.clone()]), &b).unwrap();
        assert_eq!(gb, vec![x.clone()]);
        // already a GB: all S-pairs reduce to zero
        let gens = vec![x.mul(&y), x.mul(&z)];
        let gb = buchberger(&PolyIdeal::new(r.clone(), gens.clone()), &b).unwrap();
        assert_eq!(gb.len(), 2);
        for g in &gens {
            assert!(normal_form(g, &gb, r.order).is_zero());
        }
    }

    #[test]
    fn normal_form_idempotent() {
        let r = ring(3);
        let b = Budget::default();
        let mut rng = StdRng::seed_from_u64(5);
        let x = r.var(0);
        let y = r.var(1);
        let gens = vec![x.mul(&x).sub(&y), x.mul(&y).sub(&r.var(2))];
        let gb = buchberger(&PolyIdeal::new(r.clone(), gens), &b).unwrap();
        for _ in 0..50 {
            let mut f = MultiPoly::zero(3);
            for _ in 0..5 {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                f.add_term(e, qint(rng.gen_range(-4..=4)));
            }
            let n1 = normal_form(&f, &gb, r.order);
            assert_eq!(normal_form(&n1, &gb, r.order), n1);
        }
    }

    #[test]
    fn dimension_examples() {
        let r = ring(3);
        let b = Budget::default();
        assert_eq!(dimension(&PolyIdeal::new(r.clone(), vec![]), &b).unwrap(), 3);
        assert_eq!(
            dimension(&PolyIdeal::new(r.clone(), vec![r.var(0), r.var(2)]), &b).unwrap(),
            1
        );
        assert_eq!(
            dimension(&PolyIdeal::new(r.clone(), vec![MultiPoly::one(3)]), &b).unwrap(),
            -1
        );
    }

    #[test]
    fn k_polynomial_inclusion_exclusion() {
        let r = ring(3);
        let b = Budget::default();
        // (xy, xz): 1 - [xy] - [xz] + [xyz]
        let m = MonomialIdeal::new(3, vec![vec![1, 1, 0], vec![1, 0, 1]]);
        let k = k_polynomial(&m, &r, &b).unwrap();
        let cls = |e: &[u32]| -> MultiPoly {
            let mut p = MultiPoly::one(5);
            for (i, &k) in e.iter().enumerate() {
                let c = MultiPoly::one(5).sub(&r.weights[i].to_poly());
                p = p.mul(&c.pow(k));
            }
            p
        };
        let expect = MultiPoly::one(5)
            .sub(&cls(&[1, 1, 0]))
            .sub(&cls(&[1, 0, 1]))
            .add(&cls(&[1, 1, 1]));
        assert_eq!(k, expect);
        // zero ideal
        let m0 = MonomialIdeal::new(3, vec![]);
        assert_eq!(k_polynomial(&m0, &r, &b).unwrap(), MultiPoly::one(5));
    }

    #[test]
    fn multidegree_coordinate_subspace() {
        let r = ring(3);
        let b = Budget::default();
        let i = PolyIdeal::new(r.clone(), vec![r.var(0), r.var(1)]);
        let md = multidegree(&i, &b).unwrap();
        let expect = r.weights[0].to_poly().mul(&r.weights[1].to_poly());
        assert_eq!(md, expect);
    }

    #[test]
    fn multidegree_order_independent() {
        let d = 3;
        let r = upper_triangular_ring(d, TermOrder::DegRevLex);
        let b = Budget::default();
        // the product x12 * x23 cuts out two hyperplanes
        let x12 = r.var(ut_var_index(d, 1, 2));
        let x23 = r.var(ut_var_index(d, 2, 3));
        let gens = vec![x12.mul(&x23)];
        let md1 = multidegree(&PolyIdeal::new(r.clone(), gens.clone()), &b).unwrap();
        let r_lex = r.with_order(TermOrder::Lex);
        let md2 = multidegree(&PolyIdeal::new(r_lex, gens), &b).unwrap();
        assert_eq!(md1, md2);
        let expect = TorusWeight::root(d, 1, 2).to_poly().add(&TorusWeight::root(d, 2, 3).to_poly());
        assert_eq!(md1, expect);
    }

    #[test]
    fn saturation_splits_products() {
        let r = ring(3);
        let b = Budget::default();
        let x = r.var(0);
        let y = r.var(1);
        let i = PolyIdeal::new(r.clone(), vec![x.mul(&y)]);
        let sat = saturation(&i, &x, &b).unwrap();
        let gb = buchberger(&sat, &b).unwrap();
        assert_eq!(gb, vec![y.clone()]);
    }

    #[test]
    fn minimal_primes_monomial_cases() {
        let r = ring(3);
        let b = Budget::default();
        let x = r.var(0);
        let y = r.var(1);
        // (x*y) -> {(x), (y)}
        let dec =
            minimal_primes_desk(&PolyIdeal::new(r.clone(), vec![x.mul(&y)]), &b).unwrap();
        assert!(dec.complete);
        assert_eq!(dec.components.len(), 2);
        // (x^2) -> {(x)}
        let dec =
            minimal_primes_desk(&PolyIdeal::new(r.clone(), vec![x.mul(&x)]), &b).unwrap();
        assert_eq!(dec.components.len(), 1);
        let gb = buchberger(&dec.components[0], &b).unwrap();
        assert_eq!(gb, vec![x.clone()]);
    }

    #[test]
    fn minimal_primes_subspace_arrangements() {
        // random coordinate-subspace arrangements: intersection of linear
        // ideals multiplied out pairwise
        let mut rng = StdRng::seed_from_u64(11);
        let r = ring(4);
        let b = Budget::default();
        for _ in 0..10 {
            // two random coordinate subspaces given by disjoint-ish supports
            let s1: Vec<usize> = (0..4).filter(|_| rng.gen_bool(0.5)).collect();
            let s2: Vec<usize> = (0..4).filter(|_| rng.gen_bool(0.5)).collect();
            if s1.is_empty() || s2.is_empty() || s1 == s2 {
                continue;
            }
            // product ideal: generators x_i * x_j for i in s1, j in s2
            let mut gens = Vec::new();
            for &i in &s1 {
                for &j in &s2 {
                    gens.push(r.var(i).mul(&r.var(j)));
                }
            }
            let dec = minimal_primes_desk(&PolyIdeal::new(r.clone(), gens), &b).unwrap();
            assert!(dec.complete);
            // expected components: the two subspaces, minus containment
            let i1 = PolyIdeal::new(r.clone(), s1.iter().map(|&i| r.var(i)).collect());
            let i2 = PolyIdeal::new(r.clone(), s2.iter().map(|&i| r.var(i)).collect());
            let expect = if contained_in(&i1, &i2, &b).unwrap()
                || contained_in(&i2, &i1, &b).unwrap()
            {
                1
            } else {
                2
            };
            assert_eq!(dec.components.len(), expect);
        }
    }

    #[test]
    fn interpolation_recovers_hyperplane() {
        let mut rng = StdRng::seed_from_u64(13);
        let r = ring(2);
        // points on {x1 = 0}
        let points: Vec<Vec<Q>> =
            (0..20).map(|_| vec![Q::zero(), qint(rng.gen_range(-9..=9))]).collect();
        let ideal = vanishing_ideal_interpolate(&points, 1, &r);
        let b = Budget::default();
        let gb = buchberger(&ideal, &b).unwrap();
        assert_eq!(gb, vec![r.var(0)]);
        // no points: everything of degree <= 1 vanishes
        let all = vanishing_ideal_interpolate(&[], 1, &r);
        assert_eq!(all.gens.len(), 3);
    }

    #[test]
    fn ut_ring_layout() {
        let r = upper_triangular_ring(3, TermOrder::DegRevLex);
        assert_eq!(r.names, vec!["x12", "x13", "x23"]);
        assert_eq!(ut_var_index(3, 1, 2), 0);
        assert_eq!(ut_var_index(3, 1, 3), 1);
        assert_eq!(ut_var_index(3, 2, 3), 2);
        let r4 = upper_triangular_ring(4, TermOrder::DegRevLex);
        assert_eq!(r4.names, vec!["x12", "x13", "x23", "x14", "x24", "x34"]);
        assert_eq!(ut_var_index(4, 2, 4), 4);
    }

    #[test]
    fn render_in_ring_names() {
        let r = ring(2);
        let f = r.var(0).mul(&r.var(0)).sub(&r.var(1));
        assert_eq!(r.render(&f), "x1^2 - x2");
    }
}
