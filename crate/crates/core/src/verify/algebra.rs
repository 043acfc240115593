//! Suites on `U` itself and its finite-dimensional modules.

use super::{Outcome, Suite, SuiteConfig, VerifyError};
use crate::cartan::{CartanDatum, RootSum, Weight, WeylWord};
use crate::linalg::Mat;
use crate::rmatrix::{hexagon_check, is_module_map, r_check, r_inverse, r_matrix as r_full, Pairing};
use crate::scalars::exp_t_coefficient;
use crate::uqg::{QuantumGroup, DEFAULT_MAX_HEIGHT};
use crate::wmod::{braid_operator, braid_word_operator, check_relations, simple, tensor, verma, WeightModule};

/// Simples of the larger rank-2 types reach past the default height cap.
const SIMPLE_CAP: usize = 24;

/// Dominant weights with coordinate sum `<= max`.
pub(super) fn dominant_up_to(rank: usize, max: i32) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for i in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                let used: i32 = w.coords().iter().sum();
                (0..=max - used).map(move |c| {
                    let mut x = w;
                    x[i] = c;
                    x
                })
            })
            .collect();
    }
    out.sort_by_key(|w| (w.coords().iter().sum::<i32>(), *w));
    out
}

fn module_relations(suite: Suite, instance: String, m: &WeightModule) -> Outcome {
    let r = check_relations(m);
    let why = || match r.failures.first() {
        Some(f) => f.clone(),
        None => "no relation could be evaluated".into(),
    };
    Outcome::check(suite, instance, r.ok() && r.checked > 0, why)
}

/// Verma modules to depth 4 in every simple root and the simples with coordinate sum `<= max` (default 6 for rank
/// 1, 4 otherwise).
pub(super) fn presentation(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), SIMPLE_CAP);
    let d = uq.datum();
    let rank = cfg.rank();
    let depth = cfg.depth.unwrap_or_else(|| RootSum::new(&vec![4; rank]));
    let mut out = Vec::new();
    let mut lambdas = vec![Weight::zero(rank), d.rho(), -d.rho(), cfg.uniform(-2)];
    lambdas.extend((0..rank).map(|i| d.fundamental(i)));
    lambdas.sort();
    lambdas.dedup();
    for lam in &lambdas {
        let m = verma(&uq, lam, &depth)?;
        out.push(module_relations(Suite::Presentation, format!("verma {lam} depth {depth}"), &m));
    }
    let max = cfg.max.unwrap_or(if rank == 1 { 6 } else { 4 }) as i32;
    for lam in dominant_up_to(rank, max) {
        let m = simple(&uq, &lam)?;
        out.push(module_relations(Suite::Presentation, format!("simple {lam}"), &m));
    }
    Ok(out)
}

/// `dim U^+_gamma` against the Kostant partition function for every
/// `gamma` of height `<= max` (default 6 for A2, 4 otherwise).
pub(super) fn pbw(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let max = cfg.max.unwrap_or(if cfg.label() == "A2" { 6 } else { 4 });
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), max.max(DEFAULT_MAX_HEIGHT));
    let d = uq.datum();
    let mut out = Vec::new();
    for h in 1..=max {
        let top = RootSum::new(&vec![h as i32; rank]);
        let mut bad = None;
        for gamma in top.box_below().into_iter().filter(|g| g.height() as usize == h) {
            let dim = uq.basis(&gamma)?.dim() as u64;
            let expect = d.kostant_dim(&gamma);
            if dim != expect && bad.is_none() {
                bad = Some(format!("{gamma}: basis has {dim} elements, partition count {expect}"));
            }
        }
        out.push(Outcome::new(Suite::Pbw, format!("height {h}"), bad));
    }
    Ok(out)
}

/// Characters of the simples with coordinate sum `<= max` (default 6 for
/// rank 1, 3 for A2, 2 otherwise) against the Weyl character formula.
pub(super) fn weyl_character(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), SIMPLE_CAP);
    let d = uq.datum();
    let rank = cfg.rank();
    let max = match (rank, cfg.label()) {
        (1, _) => 6,
        (_, "A2") => 3,
        _ => 2,
    };
    let max = cfg.max.unwrap_or(max) as i32;
    let mut out = Vec::new();
    for lam in dominant_up_to(rank, max) {
        let got = simple(&uq, &lam)?.character();
        let expect = d.weyl_character(&lam)?;
        let why = || {
            let w = expect
                .iter()
                .map(|(w, _)| *w)
                .chain(got.iter().map(|(w, _)| *w))
                .find(|w| got.get(w) != expect.get(w))
                .expect("characters differ somewhere");
            format!("weight {w}: module has {}, formula gives {}", got.get(&w), expect.get(&w))
        };
        out.push(Outcome::check(Suite::WeylCharacter, format!("simple {lam}"), got == expect, why));
    }
    Ok(out)
}

fn mismatch(a: &Mat, b: &Mat) -> String {
    match a.first_difference(b) {
        Some((r, c)) => format!("entry ({r}, {c}): {} vs {}", a[(r, c)], b[(r, c)]),
        None => "shapes differ".into(),
    }
}

/// Pairing nondegeneracy up to height `max` (default 4), `R R^{-1} = 1`
/// and `R^vee` intertwining on pairs of fundamental modules, and the
/// hexagon identity on `V(w_1) (x) V(w_1) (x) V(w_r)`.
pub(super) fn r_matrix(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let d = uq.datum();
    let rank = cfg.rank();
    let pairing = Pairing::new(&uq);
    let mut out = Vec::new();

    let max = cfg.max.unwrap_or(4);
    let top = RootSum::new(&vec![max as i32; rank]);
    for gamma in top.box_below().into_iter().filter(|g| g.height() as usize <= max) {
        let res = pairing.canonical(&uq, &gamma);
        out.push(Outcome::new(
            Suite::RMatrix,
            format!("pairing nondegenerate at {gamma}"),
            res.err().map(|e| e.to_string()),
        ));
    }

    let mut pairs: Vec<(Weight, Weight)> = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            pairs.push((d.fundamental(i), d.fundamental(j)));
        }
    }
    pairs.push((d.rho(), d.fundamental(0)));
    pairs.dedup();
    for (a, b) in pairs {
        let (v, w) = (simple(&uq, &a)?, simple(&uq, &b)?);
        let r = r_full(&uq, &pairing, &v, &w)?;
        let inv = r_inverse(&uq, &pairing, &v, &w)?;
        let id = Mat::identity(v.dim() * w.dim());
        let prod = r.mul(&inv);
        out.push(Outcome::check(Suite::RMatrix, format!("R R^-1 = 1 on {a} (x) {b}"), prod == id, || {
            mismatch(&prod, &id)
        }));
        let rc = r_check(&uq, &pairing, &v, &w)?;
        let ok = is_module_map(&rc, &tensor(&v, &w)?, &tensor(&w, &v)?);
        out.push(Outcome::check(Suite::RMatrix, format!("R^vee intertwines {a} (x) {b}"), ok, || {
            "R^vee does not commute with some generator".into()
        }));
    }

    let first = simple(&uq, &d.fundamental(0))?;
    let last_w = d.fundamental(rank - 1);
    let last = simple(&uq, &last_w)?;
    let h = hexagon_check(&uq, &pairing, &first, &first, &last)?;
    let why = || format!("first mismatch at {:?}", h.mismatch);
    out.push(Outcome::check(
        Suite::RMatrix,
        format!("hexagon on {} (x) {} (x) {last_w}", d.fundamental(0), d.fundamental(0)),
        h.ok,
        why,
    ));
    Ok(out)
}

/// Order of `s_i s_j`.
fn braid_length(d: &CartanDatum, i: usize, j: usize) -> usize {
    match d.cartan_entry(i, j) * d.cartan_entry(j, i) {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

fn alternating(i: usize, j: usize, len: usize) -> WeylWord {
    WeylWord((0..len).map(|k| if k % 2 == 0 { i as u8 } else { j as u8 }).collect())
}

/// `sum_n c_n x^n` with `c_n` the coefficients of `exp_{q_i}`, for
/// nilpotent `x`.
fn exp_series(x: &Mat, d: i64, l0: u32) -> Mat {
    let mut out = Mat::identity(x.rows());
    let mut p = Mat::identity(x.rows());
    for n in 1.. {
        p = p.mul(x);
        if p.is_zero() {
            break;
        }
        out = out.add(&p.scale(&exp_t_coefficient(n, d, false, l0)));
    }
    out
}

/// Braid relations on simples, `T_w V_lambda = V_{w lambda}`, the tensor
/// factorisation of `T_1` on `V(w_1) (x) V(w_1)` and independence of the
/// braid automorphism of `U` from the reduced word.
pub(super) fn braid(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let d = uq.datum();
    let rank = cfg.rank();
    let mut out = Vec::new();
    let mut lambdas: Vec<Weight> = (0..rank).map(|i| d.fundamental(i)).collect();
    lambdas.push(d.rho());
    lambdas.dedup();

    for lam in &lambdas {
        let v = simple(&uq, lam)?;
        for i in 0..rank {
            for j in i + 1..rank {
                let m = braid_length(d, i, j);
                let a = braid_word_operator(&v, &alternating(i, j, m))?;
                let b = braid_word_operator(&v, &alternating(j, i, m))?;
                out.push(Outcome::check(
                    Suite::Braid,
                    format!("braid relation ({}, {}) on simple {lam}", i + 1, j + 1),
                    a == b,
                    || mismatch(&a, &b),
                ));
            }
        }
        let mut bad = None;
        for w in d.weyl_group() {
            let t = braid_word_operator(&v, &w)?;
            for col in 0..v.dim() {
                let target = d.weyl_act(&w, &v.weights[col]);
                if let Some(row) = (0..v.dim()).find(|&r| !t[(r, col)].is_zero() && v.weights[r] != target) {
                    bad.get_or_insert_with(|| {
                        format!("T_{w} sends a vector of weight {} to weight {}", v.weights[col], v.weights[row])
                    });
                }
            }
        }
        out.push(Outcome::new(Suite::Braid, format!("T_w maps weight spaces of simple {lam}"), bad));
    }

    // T_1 on V (x) V through either exponential factorisation
    let l0 = d.l0();
    let di = i64::from(d.symmetrizer(0));
    let v = simple(&uq, &d.fundamental(0))?;
    let vv = tensor(&v, &v)?;
    let t = braid_operator(&vv, 0)?;
    let t1 = braid_operator(&v, 0)?;
    let tt = t1.kron(&t1);
    let qi = d.q_i(0);
    let qi_inv = qi.inv().expect("q_i is a unit");
    let diff = &qi - &qi_inv;
    let a = d.simple_root(0);
    let left = v.e[0].mul(&v.k_matrix(&-a)).kron(&v.f[0].mul(&v.k_matrix(&a)));
    let first = exp_series(&left.scale(&(&(&qi_inv * &qi_inv) * &diff)), di, l0).mul(&tt);
    let right = v.f[0].kron(&v.e[0]);
    let second = tt.mul(&exp_series(&right.scale(&diff), di, l0));
    let ok = t == first && t == second;
    out.push(Outcome::check(Suite::Braid, format!("tensor factorisation of T_1 on {}^2", d.fundamental(0)), ok, || {
        if t != first {
            format!("left form: {}", mismatch(&t, &first))
        } else {
            format!("right form: {}", mismatch(&t, &second))
        }
    }));

    if rank == 2 {
        let m = braid_length(d, 0, 1);
        let (wa, wb) = (alternating(0, 1, m), alternating(1, 0, m));
        for j in 0..rank {
            for g in [uq.e(j), uq.f(j), uq.k(d.fundamental(j))] {
                let x = uq.braid_word(&wa, &g)?;
                let y = uq.braid_word(&wb, &g)?;
                out.push(Outcome::check(Suite::Braid, format!("T_{wa}({g}) = T_{wb}({g})"), x == y, || {
                    format!("{x} vs {y}")
                }));
            }
        }
    }
    Ok(out)
}
