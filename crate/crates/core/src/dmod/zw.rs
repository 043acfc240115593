//! Conjugation `Z_{s_i}(d) = T_i^{-1} d T_i` by the braid operators on `A`.

use super::{DOperator, DWindow, DmodError};
use crate::cartan::{WeylWord, Weight};
use crate::coord::CoordElement;
use crate::linalg::Mat;
use crate::scalars::{exp_t_coefficient, QScalar};
use crate::uqg::UElement;
use crate::wmod::braid_operator;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct ZwCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZwReport {
    pub index: usize,
    pub checks: Vec<ZwCheck>,
    pub pass: bool,
}

struct Braids {
    forward: BTreeMap<Weight, Mat>,
    inverse: BTreeMap<Weight, Mat>,
}

impl Braids {
    fn new(win: &DWindow, i: usize) -> Result<Self, DmodError> {
        let mut forward = BTreeMap::new();
        let mut inverse = BTreeMap::new();
        for xi in &win.grades {
            let t = braid_operator(&win.algebra().grade(xi)?.module, i)?;
            inverse.insert(*xi, t.inverse().expect("braid operators are invertible"));
            forward.insert(*xi, t);
        }
        Ok(Braids { forward, inverse })
    }

    fn conjugate(&self, d: &DOperator) -> DOperator {
        let blocks = d
            .blocks
            .iter()
            .map(|(xi, m)| {
                let target = *xi + d.grade;
                (*xi, self.inverse[&target].mul(m).mul(&self.forward[xi]))
            })
            .collect();
        DOperator { grade: d.grade, blocks }
    }

    fn inverse_on(&self, win: &DWindow, phi: &CoordElement) -> Result<CoordElement, DmodError> {
        Ok(win.algebra().element(&phi.grade, self.inverse[&phi.grade].apply(&phi.vector))?)
    }
}

/// `sum_n l_{b_n(T_i^{-1} phi)} d_{a_n}` with
/// `exp_{q_i^{-1}}(-(q_i - q_i^{-1}) f_i (x) e_i) = sum_n b_n (x) a_n`.
fn left_expansion(win: &DWindow, braids: &Braids, i: usize, phi: &CoordElement) -> Result<DOperator, DmodError> {
    let alg = win.algebra();
    let uq = win.uq();
    let d = uq.datum();
    let di = i64::from(d.symmetrizer(i));
    let qi = d.q_i(i);
    let step = -(&qi - &qi.inv().expect("q_i is a unit"));
    let mut out = win.zero(&phi.grade)?;
    let mut lowered = braids.inverse_on(win, phi)?;
    let mut step_pow = QScalar::one();
    let mut n = 0i64;
    while !lowered.is_zero() {
        let c = exp_t_coefficient(n, -di, false, d.l0()) * step_pow.clone();
        let a = uq.pow(&uq.e(i), n as usize)?;
        let term = win.left(&lowered.scale(&c))?.then(&win.partial(&a)?);
        out = out.add(&term)?;
        lowered = alg.act(&uq.f(i), &lowered)?;
        step_pow = &step_pow * &step;
        n += 1;
    }
    Ok(out)
}

/// `(-1)^{<beta, alpha_i^vee>}` for a homogeneous element of degree `beta`:
/// the module braid operator intertwines the algebra automorphism only up
/// to this sign.
fn braid_sign(win: &DWindow, i: usize, u: &UElement) -> QScalar {
    let uq = win.uq();
    let (m, _) = u.iter().next().expect("nonzero element");
    let p = uq.datum().coroot_pairing(i, &m.weight());
    if p % 2 == 0 {
        QScalar::one()
    } else {
        -QScalar::one()
    }
}

pub fn z_w_check(win: &DWindow, i: usize) -> Result<ZwReport, DmodError> {
    let alg = win.algebra();
    let uq = win.uq();
    let d = uq.datum();
    let braids = Braids::new(win, i)?;
    let mut checks = Vec::new();
    let mut push = |name: String, ok: bool| checks.push(ZwCheck { name, ok });

    for j in 0..d.rank() {
        let s = win.sigma(&d.fundamental(j))?;
        push(format!("Z(sigma_w{})", j + 1), braids.conjugate(&s) == s);
        for u in [uq.e(j), uq.f(j), uq.k(d.fundamental(j))] {
            let lhs = braids.conjugate(&win.partial(&u)?);
            let image = uq.braid_inverse(i, &u)?.scale(&braid_sign(win, i, &u));
            push(format!("Z(d_{u})"), lhs.agrees(&win.partial(&image)?) == Some(true));
        }
    }

    for g in win.grades.iter().filter(|g| !g.is_zero()) {
        for (a, phi) in alg.basis(g)?.iter().enumerate() {
            let lhs = braids.conjugate(&win.left(phi)?);
            let rhs = left_expansion(win, &braids, i, phi)?;
            push(format!("Z(l) expansion, grade {g} #{a}"), lhs.agrees(&rhs) == Some(true));
        }
    }

    // extremal elements of S_w go to those of S_{w s_i} when w(alpha_i) > 0
    let alpha = d.simple_root(i);
    for w in d.weyl_group() {
        let positive = d
            .weight_to_root(&d.weyl_act(&w, &alpha))
            .is_ok_and(|r| r.is_nonnegative());
        if !positive {
            continue;
        }
        let mut ws = w.0.clone();
        ws.push(i as u8);
        let ws = WeylWord(ws);
        for g in win.grades.iter().filter(|g| !g.is_zero()) {
            let c = alg.extremal(&w, g)?;
            let lhs = braids.conjugate(&win.left(&c.element)?);
            let moved = braids.inverse_on(win, &c.element)?;
            let target = alg.extremal(&ws, g)?;
            let proportional = proportional(&moved.vector, &target.element.vector);
            let ok = proportional && lhs.agrees(&win.left(&moved)?) == Some(true);
            push(format!("Z(l_c) for w = {w}, grade {g}"), ok);
        }
    }

    let pass = checks.iter().all(|c| c.ok);
    Ok(ZwReport { index: i, checks, pass })
}

fn proportional(a: &[QScalar], b: &[QScalar]) -> bool {
    let Some(k) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let r = &a[k] / &b[k];
    !r.is_zero() && a.iter().zip(b).all(|(x, y)| *x == &r * y)
}
