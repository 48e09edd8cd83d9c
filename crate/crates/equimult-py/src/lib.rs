//! Python bindings for the exact verification library: combinatorics,
//! orbital decompositions, lattice types, and the full report pipeline.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use equimult::groebner::Budget;
use equimult::localization::{self, Family};
use equimult::orbital::{self, Verdict};
use equimult::poly::{qint, Q};
use equimult::qmat::QMat;
use equimult::report::{self, Check, RunConfig};
use equimult::symgrp::{self, Partition, StandardTableau};

fn lib_err(e: equimult::Error) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(PyValueError::new_err("partition parts must be positive"));
    }
    Ok(Partition::new(parts))
}

fn qmat(rows: Vec<Vec<i64>>) -> PyResult<QMat> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(PyValueError::new_err("matrix must be square"));
    }
    Ok(QMat::from_rows(
        rows.into_iter().map(|r| r.into_iter().map(qint).collect()).collect(),
    ))
}

fn tableau_rows(t: &StandardTableau) -> Vec<Vec<usize>> {
    t.rows.clone()
}

fn family(name: &str) -> PyResult<Family> {
    match name {
        "cotangent" => Ok(Family::Nilp),
        "grothendieck" => Ok(Family::Groth),
        _ => Err(PyValueError::new_err(
            "family must be 'cotangent' or 'grothendieck'",
        )),
    }
}

/// All partitions of d, largest part first.
#[pyfunction]
fn partitions(d: usize) -> Vec<Vec<usize>> {
    Partition::all(d).into_iter().map(|p| p.parts).collect()
}

/// Standard Young tableaux of the given shape, as row lists.
#[pyfunction]
fn standard_tableaux(parts: Vec<usize>) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let l = partition(parts)?;
    Ok(StandardTableau::all(&l).iter().map(tableau_rows).collect())
}

/// Number of standard tableaux by the hook length formula.
#[pyfunction]
fn num_standard_tableaux(parts: Vec<usize>) -> PyResult<usize> {
    Ok(partition(parts)?.num_standard_tableaux())
}

/// Irreducible symmetric group character value chi^lambda(mu).
#[pyfunction]
fn character(lambda: Vec<usize>, mu: Vec<usize>) -> PyResult<i64> {
    let l = partition(lambda)?;
    let m = partition(mu)?;
    if l.size() != m.size() {
        return Err(PyValueError::new_err("partitions must have equal size"));
    }
    Ok(symgrp::mn_character(&l, &m))
}

/// Jordan type of a square integer matrix (must be nilpotent).
#[pyfunction]
fn jordan_type(rows: Vec<Vec<i64>>) -> PyResult<Vec<usize>> {
    Ok(symgrp::jordan_type(&qmat(rows)?).parts)
}

/// Lattice type of the embedded strictly upper triangular nilpotent.
#[pyfunction]
fn lattice_type(rows: Vec<Vec<i64>>) -> PyResult<Vec<usize>> {
    equimult::lattice::mv_type(&qmat(rows)?).map(|p| p.parts).map_err(lib_err)
}

/// Components of the orbital variety of a partition: (tableau, multidegree,
/// equivariant multiplicity) triples with polynomials rendered as text.
#[pyfunction]
#[pyo3(signature = (parts, seed = 1))]
fn components(parts: Vec<usize>, seed: u64) -> PyResult<Vec<(Vec<Vec<usize>>, String, String)>> {
    let l = partition(parts)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let comps = orbital::decompose(&l, &Budget::default(), &mut rng).map_err(lib_err)?;
    Ok(comps
        .iter()
        .map(|c| (tableau_rows(&c.tableau), c.joseph.render(), c.equiv_mult.render()))
        .collect())
}

/// Equivariance verdict for a partition: (verdict, permutation, scalars,
/// transposed_model).
#[pyfunction]
#[pyo3(signature = (parts, seed = 1))]
fn conjecture(
    parts: Vec<usize>,
    seed: u64,
) -> PyResult<(String, Vec<usize>, Vec<String>, bool)> {
    let l = partition(parts)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let r = orbital::conjecture_check(&l, &Budget::default(), &mut rng).map_err(lib_err)?;
    let verdict = match r.verdict {
        Verdict::Pass => "PASS",
        Verdict::PassProjective => "PASS-PROJECTIVE",
        Verdict::Fail => "FAIL",
    };
    let diag: Vec<String> = r.diag.iter().map(Q::to_string).collect();
    Ok((verdict.into(), r.permutation, diag, r.transposed_model))
}

/// Exact check of the gl_n commutator, Cartan, and Serre relations at h = 0.
#[pyfunction]
fn relations_hold(family_name: &str, n: usize, d: usize) -> PyResult<bool> {
    localization::relations_hold(family(family_name)?, n, d).map_err(lib_err)
}

/// Exact convolution identity on the regular-weight block.
#[pyfunction]
fn convolution_identity_holds(family_name: &str, d: usize, a: usize) -> PyResult<bool> {
    if !(1..d).contains(&a) {
        return Err(PyValueError::new_err("need 1 <= a < d"));
    }
    localization::convolution_identity_holds(family(family_name)?, d, a).map_err(lib_err)
}

/// Run the full verification pipeline and return the JSON report as text.
#[pyfunction]
#[pyo3(signature = (d, seed = 1, checks = None, samples = 100, jobs = None))]
fn verify_all(
    d: usize,
    seed: u64,
    checks: Option<Vec<String>>,
    samples: usize,
    jobs: Option<usize>,
) -> PyResult<String> {
    let checks = match checks {
        None => Check::all(),
        Some(names) => names
            .iter()
            .map(|s| Check::parse(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(lib_err)?,
    };
    let config = RunConfig {
        d,
        lambdas: Vec::new(),
        checks,
        seed,
        budget: Budget::default(),
        lattice_samples: samples,
        jobs,
    };
    let report = report::run(&config).map_err(lib_err)?;
    serde_json::to_string_pretty(&report)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
fn equimult_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(num_standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_type, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_type, m)?)?;
    m.add_function(wrap_pyfunction!(components, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(relations_hold, m)?)?;
    m.add_function(wrap_pyfunction!(convolution_identity_holds, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
