//! Nilpotent orbit closures intersected with the strictly upper triangular
//! space: defining ideals, component decomposition with tableau labels,
//! Joseph polynomials, equivariant multiplicities, the reflection action on
//! their span, and the equivariance check against the Specht-model
//! weight-zero operators.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::groebner::{
    self, upper_triangular_ring, ut_var_index, Budget, PolyIdeal, TermOrder,
};
use crate::poly::{qint, MultiPoly, Q, RatFunc};
use crate::qmat::QMat;
use crate::symgrp::{
    corner_type_tableau, jordan_type, mn_character, Partition, Perm, StandardTableau,
};
use crate::{Error, Result};

/// Rank threshold for the closure: maximal rank of the k-th power on the
/// orbit of `lambda`.
pub fn rank_threshold(lambda: &Partition, k: usize) -> usize {
    lambda.parts.iter().map(|&p| p.saturating_sub(k)).sum()
}

/// Half the orbit dimension: the dimension of every component of the
/// intersection with the upper triangular space.
pub fn expected_dim(lambda: &Partition) -> i64 {
    let d = lambda.size() as i64;
    let sq: i64 =
        lambda.transpose().parts.iter().map(|&p| (p * p) as i64).sum();
    (d * d - sq) / 2
}

fn symbolic_matrix(d: usize) -> Vec<Vec<MultiPoly>> {
    let ring = upper_triangular_ring(d, TermOrder::DegRevLex);
    let nv = ring.nvars();
    let mut m = vec![vec![MultiPoly::zero(nv); d]; d];
    for i in 1..=d {
        for j in (i + 1)..=d {
            m[i - 1][j - 1] = ring.var(ut_var_index(d, i, j));
        }
    }
    m
}

fn poly_mat_mul(a: &[Vec<MultiPoly>], b: &[Vec<MultiPoly>]) -> Vec<Vec<MultiPoly>> {
    let n = a.len();
    let nv = a[0][0].nvars;
    let mut out = vec![vec![MultiPoly::zero(nv); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

fn poly_det(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> MultiPoly {
    let nv = m[0][0].nvars;
    if rows.is_empty() {
        return MultiPoly::one(nv);
    }
    let mut det = MultiPoly::zero(nv);
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        if m[rows[0]][c].is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
        let minor = poly_det(m, sub_rows, &sub_cols);
        let term = m[rows[0]][c].mul(&minor);
        det = if k % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

#[derive(Debug, Clone)]
pub struct OrbitClosureIdeal {
    pub lambda: Partition,
    pub ideal: PolyIdeal,
}

/// The ideal of all minors of symbolic powers exceeding the rank
/// thresholds of `lambda`.
pub fn orbit_ideal(lambda: &Partition) -> OrbitClosureIdeal {
    let d = lambda.size();
    let ring = upper_triangular_ring(d, TermOrder::DegRevLex);
    let x = symbolic_matrix(d);
    let mut gens: Vec<MultiPoly> = Vec::new();
    let mut power = x.clone();
    for k in 1..d {
        if k > 1 {
            power = poly_mat_mul(&power, &x);
        }
        let r = rank_threshold(lambda, k);
        // the k-th power of a strictly upper triangular matrix has rank at
        // most d - k, so only smaller thresholds cut anything
        if r + k >= d {
            continue;
        }
        let indices: Vec<usize> = (0..d).collect();
        for rows in combinations(&indices, r + 1) {
            for cols in combinations(&indices, r + 1) {
                let minor = poly_det(&power, &rows, &cols);
                if !minor.is_zero() && !gens.contains(&minor) {
                    gens.push(minor);
                }
            }
        }
    }
    OrbitClosureIdeal { lambda: lambda.clone(), ideal: PolyIdeal::new(ring, gens) }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    items.iter().copied().combinations(k).collect()
}

/// The nilpotent matrix with Jordan blocks of sizes given by `lambda`.
pub fn jordan_matrix(lambda: &Partition) -> QMat {
    let d = lambda.size();
    let mut m = QMat::zeros(d, d);
    let mut start = 0;
    for &p in &lambda.parts {
        for i in 0..p.saturating_sub(1) {
            m[(start + i, start + i + 1)] = Q::one();
        }
        start += p;
    }
    m
}

fn random_q(rng: &mut impl Rng) -> Q {
    qint(rng.gen_range(-5..=5))
}

fn random_invertible(d: usize, rng: &mut impl Rng) -> QMat {
    loop {
        let m = QMat::from_fn(d, d, |_, _| random_q(rng));
        if m.rank() == d {
            return m;
        }
    }
}

/// A generic element of the orbit of `lambda` (arbitrary basis).
pub fn random_orbit_rep(lambda: &Partition, rng: &mut impl Rng) -> QMat {
    let g = random_invertible(lambda.size(), rng);
    g.mul(&jordan_matrix(lambda)).mul(&g.inverse().unwrap())
}

/// Intersection of two column spans, as a list of vectors.
fn span_intersection(a: &QMat, b: &QMat) -> Vec<Vec<Q>> {
    if a.cols == 0 || b.cols == 0 {
        return Vec::new();
    }
    let mut stacked = QMat::zeros(a.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            stacked[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            stacked[(i, a.cols + j)] = -b[(i, j)].clone();
        }
    }
    stacked
        .kernel_basis()
        .into_iter()
        .map(|v| a.mul_vec(&v[..a.cols]))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}

/// A random point of the orbit of `lambda` inside the strictly upper
/// triangular space. A stabilized complete flag is built vector by vector,
/// with the kernel vector drawn from the image of a random power to reach
/// every component of the intersection.
pub fn sample_orbit_point(lambda: &Partition, rng: &mut impl Rng) -> QMat {
    let d = lambda.size();
    if d == 1 {
        return QMat::zeros(1, 1);
    }
    'outer: loop {
        let x = random_orbit_rep(lambda, rng);
        // lifts of the current quotient basis to ambient vectors
        let mut lifts: Vec<Vec<Q>> =
            (0..d).map(|i| QMat::identity(d).col(i)).collect();
        let mut y = x.clone();
        let mut flag: Vec<Vec<Q>> = Vec::new();
        for _ in 0..d {
            let m = y.rows;
            let kernel = y.kernel_basis();
            let kmat = QMat::from_columns(m, &kernel);
            let maxp = jordan_type(&y).parts.first().copied().unwrap_or(1);
            let j = rng.gen_range(0..maxp);
            let candidates = if j == 0 {
                kernel.clone()
            } else {
                let mut p = QMat::identity(m);
                for _ in 0..j {
                    p = y.mul(&p);
                }
                let inter = span_intersection(&kmat, &p);
                if inter.is_empty() {
                    kernel.clone()
                } else {
                    inter
                }
            };
            let cmat = QMat::from_columns(m, &candidates);
            let v = loop {
                let coeffs: Vec<Q> =
                    (0..cmat.cols).map(|_| random_q(rng)).collect();
                let v = cmat.mul_vec(&coeffs);
                if v.iter().any(|c| !c.is_zero()) {
                    break v;
                }
            };
            // ambient representative of the chosen quotient vector
            let mut u = vec![Q::zero(); d];
            for (i, c) in v.iter().enumerate() {
                for (row, l) in lifts[i].iter().enumerate() {
                    u[row] += c * l;
                }
            }
            flag.push(u);
            if m == 1 {
                break;
            }
            // quotient by v: drop the pivot coordinate
            let p = v.iter().position(|c| !c.is_zero()).unwrap();
            let keep: Vec<usize> = (0..m).filter(|&i| i != p).collect();
            let mut ny = QMat::zeros(m - 1, m - 1);
            for (jj, &cj) in keep.iter().enumerate() {
                let mut w = y.col(cj);
                let factor = &w[p] / &v[p];
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi -= &factor * &v[i];
                }
                for (ii, &ci) in keep.iter().enumerate() {
                    ny[(ii, jj)] = w[ci].clone();
                }
            }
            y = ny;
            lifts = keep.iter().map(|&i| lifts[i].clone()).collect();
        }
        let p = QMat::from_columns(d, &flag);
        let Some(pinv) = p.inverse() else { continue 'outer };
        let xt = pinv.mul(&x).mul(&p);
        for i in 0..d {
            for j in 0..=i {
                assert!(xt[(i, j)].is_zero(), "flag not stabilized");
            }
        }
        if jordan_type(&xt) == *lambda {
            return xt;
        }
    }
}

/// Coordinates of an upper triangular matrix in the variable order of the
/// coordinate ring.
pub fn point_coords(x: &QMat) -> Vec<Q> {
    let d = x.rows;
    let mut out = vec![Q::zero(); d * (d - 1) / 2];
    for i in 1..=d {
        for j in (i + 1)..=d {
            out[ut_var_index(d, i, j)] = x[(i - 1, j - 1)].clone();
        }
    }
    out
}

/// Sample points of the intersection, bucketed by the tableau of corner
/// types.
pub fn sample_buckets(
    lambda: &Partition,
    samples: usize,
    rng: &mut impl Rng,
) -> BTreeMap<StandardTableau, Vec<Vec<Q>>> {
    let mut buckets: BTreeMap<StandardTableau, Vec<Vec<Q>>> = BTreeMap::new();
    for _ in 0..samples {
        let x = sample_orbit_point(lambda, rng);
        let t = corner_type_tableau(&x);
        buckets.entry(t).or_default().push(point_coords(&x));
    }
    buckets
}

#[derive(Debug, Clone)]
pub struct OrbitalComponent {
    pub ideal: PolyIdeal,
    pub tableau: StandardTableau,
    pub joseph: MultiPoly,
    pub equiv_mult: RatFunc,
}

fn vanishes_at(p: &MultiPoly, point: &[Q]) -> bool {
    p.eval(point).is_zero()
}

fn ideal_contains_points(ideal: &PolyIdeal, points: &[Vec<Q>]) -> bool {
    ideal.gens.iter().all(|g| points.iter().all(|pt| vanishes_at(g, pt)))
}

/// Euler class of the upper triangular space as a product of root
/// polynomials.
pub fn upper_triangular_euler(d: usize) -> Vec<MultiPoly> {
    let ring = upper_triangular_ring(d, TermOrder::DegRevLex);
    ring.weights.iter().map(|w| w.to_poly()).collect()
}

/// Decompose the intersection into its components, label each by the
/// tableau of its sampled points, and attach Joseph polynomial and
/// equivariant multiplicity. The count is certified against the number of
/// standard tableaux and the multidegrees against additivity.
pub fn decompose(
    lambda: &Partition,
    budget: &Budget,
    rng: &mut impl Rng,
) -> Result<Vec<OrbitalComponent>> {
    let d = lambda.size();
    let oi = orbit_ideal(lambda);
    if d == 1 {
        // the ambient space is a point; one component with trivial class
        return Ok(vec![OrbitalComponent {
            ideal: oi.ideal,
            tableau: StandardTableau::all(lambda).remove(0),
            joseph: MultiPoly::one(d + 1),
            equiv_mult: RatFunc::one(d + 1),
        }]);
    }
    let nsyt = lambda.num_standard_tableaux();
    let dim = expected_dim(lambda);

    let mut buckets = sample_buckets(lambda, 200, rng);
    let mut extra = 0;
    while buckets.len() < nsyt && extra < 10 {
        for (t, pts) in sample_buckets(lambda, 200, rng) {
            buckets.entry(t).or_default().extend(pts);
        }
        extra += 1;
    }
    if buckets.len() != nsyt {
        return Err(Error::Certification(format!(
            "found {} tableau buckets for {}, expected {}",
            buckets.len(),
            lambda.render(),
            nsyt
        )));
    }
    // sampling oracle: every sampled point satisfies the closure equations
    for pts in buckets.values() {
        if !ideal_contains_points(&oi.ideal, pts) {
            return Err(Error::Certification(
                "sampled orbit point violates the closure ideal".into(),
            ));
        }
    }

    let mut ideals: Vec<PolyIdeal> = Vec::new();
    let desk = groebner::minimal_primes_desk(&oi.ideal, budget);
    let mut have_desk = false;
    if let Ok(dec) = desk {
        if dec.complete {
            let mut top = Vec::new();
            for c in dec.components {
                if groebner::dimension(&c, budget)? == dim {
                    top.push(c);
                }
            }
            if top.len() == nsyt {
                ideals = top;
                have_desk = true;
            }
        }
    }
    if !have_desk {
        // interpolation fallback: recover each component from its bucket
        for pts in buckets.values_mut() {
            while pts.len() < 60 {
                let x = sample_orbit_point(lambda, rng);
                let t = corner_type_tableau(&x);
                let coords = point_coords(&x);
                if pts.iter().any(|p| *p == coords) {
                    continue;
                }
                let _ = t;
                pts.push(coords);
            }
        }
        let ring = oi.ideal.ring.clone();
        for pts in buckets.values() {
            let mut found = None;
            for bound in 1..=4u32 {
                let cand = groebner::vanishing_ideal_interpolate(pts, bound, &ring);
                if cand.gens.is_empty() {
                    continue;
                }
                if groebner::dimension(&cand, budget)? == dim {
                    found = Some(cand);
                    break;
                }
            }
            let Some(cand) = found else {
                return Err(Error::Certification(
                    "interpolation failed to certify a component".into(),
                ));
            };
            ideals.push(cand);
        }
    }

    // match ideals to buckets: the points of a bucket must lie on exactly
    // one component
    let mut out = Vec::new();
    let mut used = vec![false; ideals.len()];
    let eu = upper_triangular_euler(d);
    for (t, pts) in &buckets {
        let matches: Vec<usize> = (0..ideals.len())
            .filter(|&i| ideal_contains_points(&ideals[i], pts))
            .collect();
        if matches.len() != 1 || used[matches[0]] {
            return Err(Error::Certification(format!(
                "bucket for tableau\n{}\nlies on {} components",
                t.render(),
                matches.len()
            )));
        }
        used[matches[0]] = true;
        let ideal = ideals[matches[0]].clone();
        let joseph = groebner::multidegree(&ideal, budget)?;
        if joseph.is_zero() {
            return Err(Error::Certification("zero multidegree".into()));
        }
        let equiv_mult = RatFunc::new(joseph.clone(), eu.clone());
        out.push(OrbitalComponent { ideal, tableau: t.clone(), joseph, equiv_mult });
    }

    // additivity certificate: the top-dimensional multidegrees add up
    let total = groebner::multidegree(&oi.ideal, budget)?;
    let mut sum = MultiPoly::zero(d + 1);
    for c in &out {
        sum = sum.add(&c.joseph);
    }
    if sum != total {
        return Err(Error::Certification(
            "component multidegrees do not add up to the closure multidegree".into(),
        ));
    }
    Ok(out)
}

/// The matrix of the simple reflection `s_a` on the span of the Joseph
/// polynomials (or of the equivariant multiplicities). The inconsistency
/// error is the falsification signal for stability of the span.
pub fn weyl_matrix_on_span(
    comps: &[OrbitalComponent],
    d: usize,
    a: usize,
    e_basis: bool,
) -> Result<QMat> {
    let sa = Perm::adjacent(d, a);
    let polys: Vec<&MultiPoly> = comps.iter().map(|c| &c.joseph).collect();
    let mut acted = Vec::new();
    for p in &polys {
        acted.push(p.weyl_act(&sa.images)?);
    }
    // coefficient matrix over the union of monomials
    let mut monos: Vec<Vec<u32>> = Vec::new();
    for p in polys.iter().map(|p| *p).chain(acted.iter()) {
        for e in p.terms.keys() {
            if !monos.contains(e) {
                monos.push(e.clone());
            }
        }
    }
    monos.sort();
    let coeffs = |p: &MultiPoly| -> Vec<Q> {
        monos.iter().map(|e| p.terms.get(e).cloned().unwrap_or_else(Q::zero)).collect()
    };
    let basis = QMat::from_columns(
        monos.len(),
        &polys.iter().map(|p| coeffs(p)).collect::<Vec<_>>(),
    );
    let mut cols = Vec::new();
    for s in &acted {
        let x = basis.solve(&coeffs(s)).ok_or_else(|| Error::NotInSpan("reflected polynomial outside the span".into()))?;
        cols.push(x);
    }
    let jmat = QMat::from_columns(comps.len(), &cols);
    if e_basis {
        // the Euler class of the upper triangular space is alternating, so
        // the multiplicity basis picks up a sign; verified, not assumed
        let eu = upper_triangular_euler(d)
            .into_iter()
            .fold(MultiPoly::one(d + 1), |acc, f| acc.mul(&f));
        if eu.weyl_act(&sa.images)? != eu.neg() {
            return Err(Error::Certification(
                "euler class not alternating under the reflection".into(),
            ));
        }
        Ok(jmat.neg())
    } else {
        Ok(jmat)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharMatch {
    Shape,
    Transpose,
    Both,
    Neither,
}

#[derive(Debug, Clone)]
pub struct HottaReport {
    pub lambda: Partition,
    pub injective: bool,
    pub stable: bool,
    pub coxeter: bool,
    pub j_characters: Vec<(Partition, Q)>,
    pub e_characters: Vec<(Partition, Q)>,
    pub j_char_match: CharMatch,
    pub e_char_match: CharMatch,
    pub pass: bool,
}

fn rep_matrix(gens: &[QMat], w: &Perm) -> QMat {
    let k = gens.first().map_or(1, |g| g.rows);
    let mut m = QMat::identity(k);
    for a in w.reduced_word() {
        m = m.mul(&gens[a - 1]);
    }
    m
}

fn coxeter_hold(gens: &[QMat]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let k = gens[0].rows;
    let id = QMat::identity(k);
    for (i, g) in gens.iter().enumerate() {
        if g.mul(g) != id {
            return false;
        }
        for (j, h) in gens.iter().enumerate().skip(i + 1) {
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

fn char_match(lambda: &Partition, chars: &[(Partition, Q)]) -> CharMatch {
    let lt = lambda.transpose();
    let straight = chars
        .iter()
        .all(|(mu, c)| *c == qint(mn_character(lambda, mu)));
    let twisted =
        chars.iter().all(|(mu, c)| *c == qint(mn_character(&lt, mu)));
    match (straight, twisted) {
        (true, true) => CharMatch::Both,
        (true, false) => CharMatch::Shape,
        (false, true) => CharMatch::Transpose,
        (false, false) => CharMatch::Neither,
    }
}

/// Verify injectivity, span stability, Coxeter relations, and the character
/// identification of the reflection representation on the Joseph and
/// multiplicity bases.
pub fn hotta_check(lambda: &Partition, comps: &[OrbitalComponent]) -> Result<HottaReport> {
    let d = lambda.size();
    // injectivity: the Joseph polynomials are linearly independent
    let mut monos: Vec<Vec<u32>> = Vec::new();
    for c in comps {
        for e in c.joseph.terms.keys() {
            if !monos.contains(e) {
                monos.push(e.clone());
            }
        }
    }
    monos.sort();
    let coeff_mat = QMat::from_fn(monos.len(), comps.len(), |i, j| {
        comps[j].joseph.terms.get(&monos[i]).cloned().unwrap_or_else(Q::zero)
    });
    let injective = coeff_mat.rank() == comps.len();

    let mut jmats = Vec::new();
    let mut emats = Vec::new();
    let mut stable = true;
    for a in 1..d {
        match weyl_matrix_on_span(comps, d, a, false) {
            Ok(m) => {
                emats.push(weyl_matrix_on_span(comps, d, a, true)?);
                jmats.push(m);
            }
            Err(Error::NotInSpan(_)) => {
                stable = false;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if !stable {
        return Ok(HottaReport {
            lambda: lambda.clone(),
            injective,
            stable,
            coxeter: false,
            j_characters: Vec::new(),
            e_characters: Vec::new(),
            j_char_match: CharMatch::Neither,
            e_char_match: CharMatch::Neither,
            pass: false,
        });
    }
    let coxeter = coxeter_hold(&jmats) && coxeter_hold(&emats);
    let mut j_characters = Vec::new();
    let mut e_characters = Vec::new();
    for mu in Partition::all(d) {
        let w = Perm::class_rep(&mu);
        j_characters.push((mu.clone(), rep_matrix(&jmats, &w).trace()));
        e_characters.push((mu.clone(), rep_matrix(&emats, &w).trace()));
    }
    let j_char_match = char_match(lambda, &j_characters);
    let e_char_match = char_match(lambda, &e_characters);
    let pass = injective
        && stable
        && coxeter
        && j_char_match != CharMatch::Neither
        && e_char_match != CharMatch::Neither;
    Ok(HottaReport {
        lambda: lambda.clone(),
        injective,
        stable,
        coxeter,
        j_characters,
        e_characters,
        j_char_match,
        e_char_match,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    PassProjective,
    Fail,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub lambda: Partition,
    pub hotta: HottaReport,
    pub verdict: Verdict,
    /// index permutation matching component order to Specht basis order
    pub permutation: Vec<usize>,
    /// per-vector scalars carried by the intertwiner, first entry normalized
    pub diag: Vec<Q>,
    /// whether the matching Specht model was built on the transposed shape
    pub transposed_model: bool,
}

fn all_perms(k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..k).permutations(k).collect()
}

/// Shape occupied by the entries `1..=k` of a standard tableau.
fn prefix_shape(t: &StandardTableau, k: usize) -> Partition {
    Partition::new(
        t.rows.iter().map(|r| r.iter().filter(|&&x| x <= k).count()).collect(),
    )
}

/// Dominance order on standard tableaux: every prefix shape of `s` is
/// dominated by the corresponding prefix shape of `t`.
fn tableau_le(s: &StandardTableau, t: &StandardTableau) -> bool {
    let d = s.size();
    (1..=d).all(|k| prefix_shape(s, k).dominated_by(&prefix_shape(t, k)))
}

/// Solve `U * t_a = e_a * U` for all generator pairs simultaneously.
/// Returns the kernel of the combined linear system, each element reshaped
/// as a k-by-k matrix (row-major unknowns).
fn intertwiners(ts: &[QMat], emats: &[QMat]) -> Vec<QMat> {
    let k = ts[0].rows;
    let mut sys = QMat::zeros(ts.len() * k * k, k * k);
    for (a, (t, e)) in ts.iter().zip(emats).enumerate() {
        for i in 0..k {
            for j in 0..k {
                let row = (a * k + i) * k + j;
                for l in 0..k {
                    // coefficient of U[i,l] from U*t, of U[l,j] from -e*U
                    sys[(row, i * k + l)] += &t[(l, j)];
                    sys[(row, l * k + j)] -= &e[(i, l)];
                }
            }
        }
    }
    sys.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut u = QMat::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    u[(i, j)] = v[i * k + j].clone();
                }
            }
            u
        })
        .collect()
}

/// The equivariance check: the reflection action on the multiplicity basis
/// must be intertwined with the Specht-model weight-zero action by a map
/// that is triangular for the dominance order on standard tableaux, under
/// one global matching permutation.  Constant diagonal gives an exact
/// basis match; otherwise the per-vector scalars are reported.
pub fn conjecture_check(
    lambda: &Partition,
    budget: &Budget,
    rng: &mut impl Rng,
) -> Result<ConjectureReport> {
    let d = lambda.size();
    let comps = decompose(lambda, budget, rng)?;
    let hotta = hotta_check(lambda, &comps)?;
    if !hotta.pass {
        return Ok(ConjectureReport {
            lambda: lambda.clone(),
            hotta,
            verdict: Verdict::Fail,
            permutation: Vec::new(),
            diag: Vec::new(),
            transposed_model: false,
        });
    }
    if d == 1 {
        return Ok(ConjectureReport {
            lambda: lambda.clone(),
            hotta,
            verdict: Verdict::Pass,
            permutation: vec![0],
            diag: vec![Q::one()],
            transposed_model: false,
        });
    }
    let emats: Vec<QMat> = (1..d)
        .map(|a| weyl_matrix_on_span(&comps, d, a, true))
        .collect::<Result<_>>()?;
    let k = comps.len();
    for (transposed, shape) in [(false, lambda.clone()), (true, lambda.transpose())] {
        let ts = crate::schurweyl::specht_weight_zero(&shape)?;
        if ts[0].rows != k {
            continue;
        }
        let kernel = intertwiners(&ts, &emats);
        // an irreducible module leaves exactly one intertwiner up to scale
        if kernel.len() != 1 || kernel[0].rank() != k {
            continue;
        }
        let u = &kernel[0];
        let tabs = StandardTableau::all(&shape);
        let mut best: Option<(Vec<usize>, Vec<Q>)> = None;
        'outer: for flip in [false, true] {
            for sigma in all_perms(k) {
                let triangular = (0..k).all(|i| {
                    !u[(i, sigma[i])].is_zero()
                        && (0..k).all(|j| {
                            u[(i, j)].is_zero()
                                || if flip {
                                    tableau_le(&tabs[sigma[i]], &tabs[j])
                                } else {
                                    tableau_le(&tabs[j], &tabs[sigma[i]])
                                }
                        })
                });
                if !triangular {
                    continue;
                }
                let scale = u[(0, sigma[0])].clone();
                let diag: Vec<Q> =
                    (0..k).map(|i| &u[(i, sigma[i])] / &scale).collect();
                let constant = diag.iter().all(|q| q == &Q::one());
                if constant {
                    best = Some((sigma, diag));
                    break 'outer;
                }
                if best.is_none() {
                    best = Some((sigma, diag));
                }
            }
        }
        if let Some((sigma, diag)) = best {
            let verdict = if diag.iter().all(|q| q == &Q::one()) {
                Verdict::Pass
            } else {
                Verdict::PassProjective
            };
            return Ok(ConjectureReport {
                lambda: lambda.clone(),
                hotta,
                verdict,
                permutation: sigma,
                diag,
                transposed_model: transposed,
            });
        }
    }
    Ok(ConjectureReport {
        lambda: lambda.clone(),
        hotta,
        verdict: Verdict::Fail,
        permutation: Vec::new(),
        diag: Vec::new(),
        transposed_model: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn rank_thresholds_and_dimension() {
        let l = Partition::new(vec![2, 1]);
        assert_eq!(rank_threshold(&l, 1), 1);
        assert_eq!(rank_threshold(&l, 2), 0);
        assert_eq!(expected_dim(&l), 2);
        assert_eq!(expected_dim(&Partition::new(vec![1, 1, 1])), 0);
        assert_eq!(expected_dim(&Partition::new(vec![3])), 3);
    }

    #[test]
    fn orbit_ideal_extremes() {
        let column = orbit_ideal(&Partition::new(vec![1, 1, 1]));
        // only the origin: the reduced basis is the three coordinates
        let gb = groebner::buchberger(&column.ideal, &Budget::default()).unwrap();
        assert_eq!(gb.len(), 3);
        assert!(gb.iter().all(|g| g.total_degree() == Some(1)));
        let row = orbit_ideal(&Partition::new(vec![3]));
        assert!(row.ideal.gens.is_empty());
    }

    #[test]
    fn orbit_ideal_hook() {
        // the single rank condition for (2,1) is the corner of the square
        let oi = orbit_ideal(&Partition::new(vec![2, 1]));
        let gb = groebner::buchberger(&oi.ideal, &Budget::default()).unwrap();
        assert_eq!(gb.len(), 1);
        let d = 3;
        let ring = upper_triangular_ring(d, TermOrder::DegRevLex);
        let expect = ring
            .var(ut_var_index(d, 1, 2))
            .mul(&ring.var(ut_var_index(d, 2, 3)));
        assert_eq!(gb[0], expect);
    }

    #[test]
    fn sampled_points_have_the_right_type() {
        let mut rng = StdRng::seed_from_u64(7);
        for parts in [vec![2, 1], vec![3], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
            let l = Partition::new(parts);
            for _ in 0..5 {
                let x = sample_orbit_point(&l, &mut rng);
                assert_eq!(jordan_type(&x), l);
                for i in 0..x.rows {
                    for j in 0..=i {
                        assert!(x[(i, j)].is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn buckets_cover_all_tableaux() {
        let mut rng = StdRng::seed_from_u64(11);
        let l = Partition::new(vec![2, 1]);
        let buckets = sample_buckets(&l, 60, &mut rng);
        assert_eq!(buckets.len(), 2);
    }

    #[test]
    fn decompose_hook_three() {
        let mut rng = StdRng::seed_from_u64(3);
        let comps =
            decompose(&Partition::new(vec![2, 1]), &Budget::default(), &mut rng)
                .unwrap();
        assert_eq!(comps.len(), 2);
        // the two components are coordinate hyperplanes with root
        // multidegrees
        let d = 3;
        let w12 = crate::poly::TorusWeight::root(d, 1, 2).to_poly();
        let w23 = crate::poly::TorusWeight::root(d, 2, 3).to_poly();
        let joes: Vec<&MultiPoly> = comps.iter().map(|c| &c.joseph).collect();
        assert!(joes.contains(&&w12) && joes.contains(&&w23));
    }

    #[test]
    fn weyl_matrix_hook_three() {
        let mut rng = StdRng::seed_from_u64(5);
        let comps =
            decompose(&Partition::new(vec![2, 1]), &Budget::default(), &mut rng)
                .unwrap();
        let d = 3;
        for a in 1..d {
            let j = weyl_matrix_on_span(&comps, d, a, false).unwrap();
            let e = weyl_matrix_on_span(&comps, d, a, true).unwrap();
            assert_eq!(e, j.neg());
            assert_eq!(j.mul(&j), QMat::identity(2));
        }
    }

    #[test]
    fn one_dimensional_spans() {
        let mut rng = StdRng::seed_from_u64(9);
        // full row: J = 1, matrix (1); full column: J = product of roots,
        // matrix (-1)
        let row = decompose(&Partition::new(vec![3]), &Budget::default(), &mut rng)
            .unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].joseph, MultiPoly::one(4));
        assert_eq!(
            weyl_matrix_on_span(&row, 3, 1, false).unwrap(),
            QMat::identity(1)
        );
        let col =
            decompose(&Partition::new(vec![1, 1, 1]), &Budget::default(), &mut rng)
                .unwrap();
        assert_eq!(
            weyl_matrix_on_span(&col, 3, 1, false).unwrap(),
            QMat::identity(1).neg()
        );
        assert_eq!(
            weyl_matrix_on_span(&col, 3, 1, true).unwrap(),
            QMat::identity(1)
        );
    }

    #[test]
    fn hotta_hook_three() {
        let mut rng = StdRng::seed_from_u64(13);
        let l = Partition::new(vec![2, 1]);
        let comps = decompose(&l, &Budget::default(), &mut rng).unwrap();
        let rep = hotta_check(&l, &comps).unwrap();
        assert!(rep.pass, "{:?}", rep);
        // self-conjugate shape: the multiplicity character is (2, 0, -1)
        let chars: BTreeMap<Partition, Q> =
            rep.e_characters.iter().cloned().collect();
        assert_eq!(chars[&Partition::new(vec![1, 1, 1])], qint(2));
        assert_eq!(chars[&Partition::new(vec![2, 1])], qint(0));
        assert_eq!(chars[&Partition::new(vec![3])], qint(-1));
    }

    #[test]
    fn conjecture_d4() {
        let mut rng = StdRng::seed_from_u64(23);
        let mut total_components = 0usize;
        for l in Partition::all(4) {
            let rep = conjecture_check(&l, &Budget::default(), &mut rng).unwrap();
            assert!(rep.hotta.pass, "{}", l.render());
            assert_ne!(rep.verdict, Verdict::Fail, "{} {:?}", l.render(), rep);
            total_components += l.num_standard_tableaux();
        }
        assert_eq!(total_components, 10);
    }

    #[test]
    fn conjecture_d3() {
        let mut rng = StdRng::seed_from_u64(17);
        for parts in [vec![3], vec![2, 1], vec![1, 1, 1]] {
            let l = Partition::new(parts);
            let rep = conjecture_check(&l, &Budget::default(), &mut rng).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "{}", l.render());
        }
    }
}
