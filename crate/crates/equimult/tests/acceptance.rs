//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line. Run with `--nocapture` to see the lines directly;
//! the per-test ok/FAILED summary carries the same information.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use equimult::groebner::{self, Budget, PolyIdeal, TermOrder};
use equimult::lattice;
use equimult::localization::{self, Family};
use equimult::orbital::{self, Verdict};
use equimult::poly::{
    bgg_delta, euler_class, qint, MultiPoly, RatFunc, TorusWeight, WeightMultiset, Q,
};
use equimult::schurweyl::{self, InvariantTower, SdModuleModel};
use equimult::symgrp::{
    corner_type_tableau, jordan_type, mn_character, Composition, Partition, Perm,
};

fn gate(n: usize, name: &str, ok: bool) {
    println!("criterion {:>2} ({}): {}", n, name, if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {} ({}) failed", n, name);
}

#[test]
fn criterion_01_cotangent_convolution_identity() {
    let mut ok = true;
    for d in 2..=4 {
        for a in 1..d {
            ok &= localization::convolution_identity_holds(Family::Nilp, d, a).unwrap();
        }
    }
    gate(1, "cotangent convolution identity, d <= 4", ok);
}

#[test]
fn criterion_02_grothendieck_convolution_identity() {
    let mut ok = true;
    for d in 2..=4 {
        for a in 1..d {
            ok &= localization::convolution_identity_holds(Family::Groth, d, a).unwrap();
        }
    }
    gate(2, "grothendieck convolution identity, d <= 4", ok);
}

#[test]
fn criterion_03_weight_zero_specialization() {
    let mut ok = true;
    for d in 2..=4 {
        for a in 1..d {
            let sa = localization::right_sa_matrix(d, a);
            let tz = localization::weight_zero_t_matrix(Family::Nilp, d, a).unwrap();
            let tx = localization::weight_zero_t_matrix(Family::Groth, d, a).unwrap();
            ok &= tz == sa && tx == sa.neg();
        }
    }
    gate(3, "weight-zero operators are +/- s_a", ok);
}

#[test]
fn criterion_04_lie_algebra_relations() {
    let mut ok = true;
    for d in 2..=3 {
        ok &= localization::relations_hold(Family::Nilp, d, d).unwrap();
        ok &= localization::relations_hold(Family::Groth, d, d).unwrap();
    }
    for d in 2..=4 {
        for l in Partition::all(d) {
            let tower = InvariantTower::new(SdModuleModel::specht(&l), d);
            ok &= tower.relations_hold(false) && tower.relations_hold(true);
        }
    }
    gate(4, "gl_n relations for both families and Specht towers", ok);
}

#[test]
fn criterion_05_schur_weyl_geometry_match() {
    let mut ok = true;
    for d in 2..=3 {
        ok &= schurweyl::matches_fixed_point_operators(d, d).unwrap();
    }
    gate(5, "fixed-point operators match Schur-Weyl matrices", ok);
}

#[test]
fn criterion_06_orbital_decomposition_certificate() {
    let budget = Budget::default();
    let mut ok = true;
    let mut total_d4 = 0usize;
    for d in 1..=4 {
        for l in Partition::all(d) {
            let mut rng = StdRng::seed_from_u64(600 + d as u64);
            let comps = orbital::decompose(&l, &budget, &mut rng).unwrap();
            // hook-length oracle for the component count
            ok &= comps.len() == l.num_standard_tableaux();
            if d == 4 {
                total_d4 += comps.len();
            }
            if d == 1 {
                continue; // the ambient space is a point
            }
            // additivity: the component multidegrees sum to the multidegree
            // of the full closure ideal
            let whole =
                groebner::multidegree(&orbital::orbit_ideal(&l).ideal, &budget).unwrap();
            let mut sum = MultiPoly::zero(whole.nvars);
            for c in &comps {
                sum = sum.add(&c.joseph);
            }
            ok &= sum == whole;
        }
    }
    ok &= total_d4 == 10;
    gate(6, "component count = #SYT and multidegree additivity", ok);
}

#[test]
fn criterion_07_hotta_construction() {
    let budget = Budget::default();
    let mut ok = true;
    for d in 1..=4 {
        for l in Partition::all(d) {
            let mut rng = StdRng::seed_from_u64(700 + d as u64);
            let comps = orbital::decompose(&l, &budget, &mut rng).unwrap();
            let report = orbital::hotta_check(&l, &comps).unwrap();
            ok &= report.pass;
        }
    }
    gate(7, "injectivity, stability, Coxeter, characters", ok);
}

#[test]
fn criterion_08_equivariance_conjecture() {
    let budget = Budget::default();
    let mut ok = true;
    for d in 1..=4 {
        for l in Partition::all(d) {
            let mut rng = StdRng::seed_from_u64(800 + d as u64);
            let report = orbital::conjecture_check(&l, &budget, &mut rng).unwrap();
            ok &= report.verdict != Verdict::Fail;
        }
    }
    gate(8, "multiplicity map intertwines the reflection actions", ok);
}

#[test]
fn criterion_09_lattice_types() {
    let mut ok = true;
    for d in 1..=4 {
        for l in Partition::all(d) {
            let mut rng = StdRng::seed_from_u64(900 + d as u64);
            let report = lattice::mv_type_check(&l, 100, &mut rng).unwrap();
            ok &= report.pass;
        }
    }
    gate(9, "embedded lattice types recover Jordan types", ok);
}

const TRIALS: usize = 1000;

fn random_poly(rng: &mut StdRng, nvars: usize, maxdeg: u32, terms: usize) -> MultiPoly {
    let mut f = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let exp: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=maxdeg)).collect();
        f.add_term(exp, qint(rng.gen_range(-4..=4)));
    }
    f
}

fn random_perm_images(rng: &mut StdRng, d: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..d).collect();
    for i in (1..d).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    v
}

fn weyl_action_suite(rng: &mut StdRng) -> bool {
    let d = 3;
    for _ in 0..TRIALS {
        let f = random_poly(rng, d + 1, 3, 4);
        let v = random_perm_images(rng, d);
        let w = random_perm_images(rng, d);
        let vw: Vec<usize> = (0..d).map(|i| v[w[i]]).collect();
        let lhs = f.weyl_act(&w).unwrap().weyl_act(&v).unwrap();
        if lhs != f.weyl_act(&vw).unwrap() {
            return false;
        }
    }
    true
}

fn divided_difference_suite(rng: &mut StdRng) -> bool {
    let d = 3;
    for _ in 0..TRIALS {
        let f = random_poly(rng, d + 1, 3, 4);
        let a = rng.gen_range(1..d);
        if !bgg_delta(a, &bgg_delta(a, &f)).is_zero() {
            return false;
        }
        // adjacent braid relation at a = 1, 2
        let lhs = bgg_delta(1, &bgg_delta(2, &bgg_delta(1, &f)));
        let rhs = bgg_delta(2, &bgg_delta(1, &bgg_delta(2, &f)));
        if lhs != rhs {
            return false;
        }
        let sa = Perm::adjacent(d, a);
        let saf = f.weyl_act(&sa.images).unwrap();
        if bgg_delta(a, &saf) != bgg_delta(a, &f).neg() {
            return false;
        }
    }
    true
}

fn euler_class_suite(rng: &mut StdRng) -> bool {
    let d = 4;
    let random_roots = |rng: &mut StdRng| {
        let k = rng.gen_range(1..=3);
        WeightMultiset::new(
            (0..k)
                .map(|_| {
                    let i = rng.gen_range(1..d);
                    let j = rng.gen_range(i + 1..=d);
                    TorusWeight::root(d, i, j)
                })
                .collect(),
        )
    };
    for _ in 0..TRIALS {
        let m1 = random_roots(rng);
        let m2 = random_roots(rng);
        let lhs = euler_class(&m1.union(&m2), false).unwrap();
        let rhs = euler_class(&m1, false).unwrap().mul(&euler_class(&m2, false).unwrap());
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn fraction_field_suite(rng: &mut StdRng) -> bool {
    for _ in 0..TRIALS {
        let mut f = random_poly(rng, 4, 2, 3);
        let mut g = random_poly(rng, 4, 2, 3);
        if f.is_zero() {
            f = MultiPoly::one(4);
        }
        if g.is_zero() {
            g = MultiPoly::one(4);
        }
        let a = RatFunc::new(f.clone(), vec![g.clone()]);
        let b = RatFunc::new(g, vec![f]);
        if a.mul(&b) != RatFunc::one(4) {
            return false;
        }
    }
    true
}

fn normal_form_suite(rng: &mut StdRng) -> bool {
    let budget = Budget::default();
    let ring = groebner::upper_triangular_ring(3, TermOrder::DegRevLex);
    for _ in 0..TRIALS {
        let gens: Vec<MultiPoly> =
            (0..2).map(|_| random_poly(rng, ring.nvars(), 2, 2)).collect();
        let gens: Vec<MultiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            continue;
        }
        let gb = groebner::buchberger(&PolyIdeal::new(ring.clone(), gens), &budget).unwrap();
        let f = random_poly(rng, ring.nvars(), 3, 4);
        let once = groebner::normal_form(&f, &gb, TermOrder::DegRevLex);
        if groebner::normal_form(&once, &gb, TermOrder::DegRevLex) != once {
            return false;
        }
    }
    true
}

fn random_subset(rng: &mut StdRng, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() && s.len() < n {
            return s;
        }
    }
}

fn codimension_suite(rng: &mut StdRng) -> bool {
    let budget = Budget::default();
    let ring = groebner::upper_triangular_ring(3, TermOrder::DegRevLex);
    let nv = ring.nvars() as i64;
    for _ in 0..TRIALS {
        let vars = random_subset(rng, ring.nvars());
        let ideal =
            PolyIdeal::new(ring.clone(), vars.iter().map(|&i| ring.var(i)).collect());
        let dim = groebner::dimension(&ideal, &budget).unwrap();
        let md = groebner::multidegree(&ideal, &budget).unwrap();
        if dim + md.total_degree().unwrap() as i64 != nv {
            return false;
        }
    }
    true
}

fn order_invariance_suite(rng: &mut StdRng) -> bool {
    let budget = Budget::default();
    let ring = groebner::upper_triangular_ring(3, TermOrder::DegRevLex);
    for _ in 0..TRIALS {
        let a = random_subset(rng, ring.nvars());
        let b = random_subset(rng, ring.nvars());
        let mut gens = Vec::new();
        for &i in &a {
            for &j in &b {
                let p = ring.var(i).mul(&ring.var(j));
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        let i1 = PolyIdeal::new(ring.clone(), gens.clone());
        let i2 = PolyIdeal::new(ring.with_order(TermOrder::Lex), gens);
        let m1 = groebner::multidegree(&i1, &budget).unwrap();
        let m2 = groebner::multidegree(&i2, &budget).unwrap();
        if m1 != m2 {
            return false;
        }
    }
    true
}

fn arrangement_primes_suite(rng: &mut StdRng) -> bool {
    let budget = Budget::default();
    let ring = groebner::upper_triangular_ring(3, TermOrder::DegRevLex);
    for _ in 0..TRIALS {
        // two incomparable coordinate subspaces
        let (a, b) = loop {
            let a = random_subset(rng, ring.nvars());
            let b = random_subset(rng, ring.nvars());
            let a_in_b = a.iter().all(|x| b.contains(x));
            let b_in_a = b.iter().all(|x| a.contains(x));
            if !a_in_b && !b_in_a {
                break (a, b);
            }
        };
        let mut gens = Vec::new();
        for &i in &a {
            for &j in &b {
                let p = ring.var(i).mul(&ring.var(j));
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        let dec = groebner::minimal_primes_desk(&PolyIdeal::new(ring.clone(), gens), &budget)
            .unwrap();
        if !dec.complete || dec.components.len() != 2 {
            return false;
        }
        for vars in [&a, &b] {
            let expect = PolyIdeal::new(
                ring.clone(),
                vars.iter().map(|&i| ring.var(i)).collect(),
            );
            let hit = dec.components.iter().any(|c| {
                groebner::contained_in(c, &expect, &budget).unwrap()
                    && groebner::contained_in(&expect, c, &budget).unwrap()
            });
            if !hit {
                return false;
            }
        }
    }
    true
}

fn spaltenstein_suite(rng: &mut StdRng) -> bool {
    for _ in 0..TRIALS {
        let d = rng.gen_range(2..=4);
        let shapes = Partition::all(d);
        let l = shapes[rng.gen_range(0..shapes.len())].clone();
        let x = orbital::sample_orbit_point(&l, rng);
        if jordan_type(&x) != l {
            return false;
        }
        let t = corner_type_tableau(&x);
        if !t.is_standard() || t.shape() != l {
            return false;
        }
    }
    true
}

fn crystal_moves_suite(rng: &mut StdRng) -> bool {
    for _ in 0..TRIALS {
        let d = rng.gen_range(1..=6);
        let n = rng.gen_range(2..=4);
        let all = Composition::all(d, n);
        let c = all[rng.gen_range(0..all.len())].clone();
        let a = rng.gen_range(1..n);
        if let Some(up) = c.raise(a) {
            if up.lower(a) != Some(c.clone()) {
                return false;
            }
        }
        if let Some(down) = c.lower(a) {
            if down.raise(a) != Some(c) {
                return false;
            }
        }
    }
    true
}

fn specht_character_suite() -> bool {
    for d in 1..=5 {
        for l in Partition::all(d) {
            let model = SdModuleModel::specht(&l);
            if !model.coxeter_relations_hold() {
                return false;
            }
            for mu in Partition::all(d) {
                let tr = model.act(&Perm::class_rep(&mu)).trace();
                if tr != Q::from_integer(mn_character(&l, &mu).into()) {
                    return false;
                }
            }
        }
    }
    true
}

fn weight_zero_coxeter_suite() -> bool {
    for d in 2..=4 {
        for l in Partition::all(d) {
            let tower = InvariantTower::new(SdModuleModel::specht(&l), d);
            let ts: Vec<_> =
                (1..d).map(|a| tower.weight_zero_t(a).unwrap()).collect();
            let k = ts[0].rows;
            let id = equimult::qmat::QMat::identity(k);
            for (i, s) in ts.iter().enumerate() {
                if s.mul(s) != id {
                    return false;
                }
                for (j, t) in ts.iter().enumerate().skip(i + 1) {
                    let st = s.mul(t);
                    let ok = if j == i + 1 {
                        st.mul(&st).mul(&st) == id
                    } else {
                        st.mul(&t.mul(s)) == id
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn convolution_associativity_suite(rng: &mut StdRng) -> bool {
    let d = 3;
    let all = Composition::all(d, 3);
    let random_move = |rng: &mut StdRng, c: &Composition| loop {
        let a = rng.gen_range(1..3);
        let next = if rng.gen_bool(0.5) { c.raise(a) } else { c.lower(a) };
        if let Some(n) = next {
            return n;
        }
    };
    for _ in 0..TRIALS {
        let family = if rng.gen_bool(0.5) { Family::Nilp } else { Family::Groth };
        let c2 = all[rng.gen_range(0..all.len())].clone();
        let c1 = random_move(rng, &c2);
        let c3 = random_move(rng, &c2);
        let ab = localization::corr(family, &c1, &c2).unwrap();
        let bc = localization::corr(family, &c2, &c3).unwrap();
        let cd = localization::corr(family, &c3, &c3).unwrap();
        let lhs = localization::convolve(&localization::convolve(&ab, &bc).unwrap(), &cd)
            .unwrap();
        let rhs = localization::convolve(&ab, &localization::convolve(&bc, &cd).unwrap())
            .unwrap();
        if lhs.coeffs != rhs.coeffs {
            return false;
        }
    }
    true
}

fn lattice_suite(rng: &mut StdRng) -> bool {
    for _ in 0..TRIALS {
        let d = rng.gen_range(2..=4);
        let shapes = Partition::all(d);
        let l = shapes[rng.gen_range(0..shapes.len())].clone();
        let x = orbital::sample_orbit_point(&l, rng);
        let m = lattice::lusztig_embed(&x).unwrap();
        let det = m.det();
        if det.valuation() != Some(-(d as i64)) {
            return false;
        }
        if lattice::mv_type(&x).unwrap() != l {
            return false;
        }
        // unimodular row and column operations preserve the type
        let mut u = lattice::LaurentMatrix::identity(d);
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d);
        while j == i {
            j = rng.gen_range(0..d);
        }
        u[(i, j)] = lattice::LaurentPoly::term(rng.gen_range(0..3), qint(rng.gen_range(1..4)));
        let base = lattice::smith_type(&m).unwrap();
        if lattice::smith_type(&u.mul(&m)).unwrap() != base
            || lattice::smith_type(&m.mul(&u)).unwrap() != base
        {
            return false;
        }
    }
    true
}

#[test]
fn criterion_10_property_suites() {
    let mut ok = true;
    let suites: Vec<(&str, bool)> = vec![
        ("weyl action", weyl_action_suite(&mut StdRng::seed_from_u64(1001))),
        ("divided differences", divided_difference_suite(&mut StdRng::seed_from_u64(1002))),
        ("euler classes", euler_class_suite(&mut StdRng::seed_from_u64(1003))),
        ("fraction field", fraction_field_suite(&mut StdRng::seed_from_u64(1004))),
        ("normal form", normal_form_suite(&mut StdRng::seed_from_u64(1005))),
        ("codimension", codimension_suite(&mut StdRng::seed_from_u64(1006))),
        ("order invariance", order_invariance_suite(&mut StdRng::seed_from_u64(1007))),
        ("arrangement primes", arrangement_primes_suite(&mut StdRng::seed_from_u64(1008))),
        ("spaltenstein tableaux", spaltenstein_suite(&mut StdRng::seed_from_u64(1009))),
        ("crystal moves", crystal_moves_suite(&mut StdRng::seed_from_u64(1010))),
        ("specht characters", specht_character_suite()),
        ("weight-zero coxeter", weight_zero_coxeter_suite()),
        (
            "convolution associativity",
            convolution_associativity_suite(&mut StdRng::seed_from_u64(1011)),
        ),
        ("lattice types", lattice_suite(&mut StdRng::seed_from_u64(1012))),
    ];
    for (name, pass) in suites {
        println!("  property suite [{}]: {}", name, if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    }
    gate(10, "randomized property suites, 1000 trials each", ok);
}
