//! q-differential operators on `A`, realised by their action on the grades
//! of a cutoff window, together with the Z_w conjugations, the
//! Theta-representation on `U^+` and the center of `U`.

mod center;
mod theta;
mod zw;

pub use center::{acts_through_sigma, annihilator_check, center_solve, linkage_scan, AnnihilatorReport, CenterElement, CenterSearch, LinkageRow};
pub use theta::{theta_build, theta_faithfulness, FaithfulnessReport, ThetaBuild, ThetaCheck, ThetaGen, ThetaRep};
pub use zw::{z_w_check, ZwReport};

use crate::cartan::{CartanError, RootSum, Weight};
use crate::coord::{dominant_below, CoordAlgebra, CoordElement, CoordError};
use crate::linalg::Mat;
use crate::rmatrix::{Pairing, RmatrixError};
use crate::scalars::QScalar;
use crate::uqg::{QuantumGroup, UElement, UqError};
use crate::wmod::{full_depth, WmodError};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DmodError {
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Algebra(#[from] UqError),
    #[error(transparent)]
    Module(#[from] WmodError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("operators of grades {0} and {1} cannot be added")]
    GradeMismatch(Weight, Weight),
    #[error("operator of grade {0} does not act anywhere inside the window")]
    EmptyDomain(Weight),
    #[error("element is not homogeneous in weight")]
    NotHomogeneous,
}

/// An operator on `A` of grade `grade`, stored as one matrix
/// `A(xi) -> A(xi + grade)` per source grade of the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DOperator {
    pub grade: Weight,
    blocks: BTreeMap<Weight, Mat>,
}

impl DOperator {
    pub fn block(&self, xi: &Weight) -> Option<&Mat> {
        self.blocks.get(xi)
    }

    pub fn domain(&self) -> impl Iterator<Item = &Weight> {
        self.blocks.keys()
    }

    /// `self o other`, on the grades where both steps stay in the window.
    pub fn then(&self, other: &DOperator) -> DOperator {
        let blocks = other
            .blocks
            .iter()
            .filter_map(|(xi, m)| {
                let mid = *xi + other.grade;
                self.blocks.get(&mid).map(|n| (*xi, n.mul(m)))
            })
            .collect();
        DOperator {
            grade: self.grade + other.grade,
            blocks,
        }
    }

    /// Sum on the common domain.
    pub fn add(&self, other: &DOperator) -> Result<DOperator, DmodError> {
        if self.grade != other.grade {
            return Err(DmodError::GradeMismatch(self.grade, other.grade));
        }
        let blocks = self
            .blocks
            .iter()
            .filter_map(|(xi, m)| other.blocks.get(xi).map(|n| (*xi, m.add(n))))
            .collect();
        Ok(DOperator {
            grade: self.grade,
            blocks,
        })
    }

    pub fn scale(&self, c: &QScalar) -> DOperator {
        DOperator {
            grade: self.grade,
            blocks: self.blocks.iter().map(|(xi, m)| (*xi, m.scale(c))).collect(),
        }
    }

    /// Equality on every grade where both are realised; `None` when there is
    /// no such grade.
    pub fn agrees(&self, other: &DOperator) -> Option<bool> {
        if self.grade != other.grade {
            return Some(false);
        }
        let mut seen = false;
        for (xi, m) in &self.blocks {
            if let Some(n) = other.blocks.get(xi) {
                seen = true;
                if m != n {
                    return Some(false);
                }
            }
        }
        seen.then_some(true)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Mat::is_zero)
    }

    /// The first input basis vector on which the two operators differ.
    pub fn first_difference(&self, other: &DOperator) -> Option<String> {
        if self.grade != other.grade {
            return Some(format!("grades {} and {}", self.grade, other.grade));
        }
        self.blocks.iter().find_map(|(xi, m)| {
            let n = other.blocks.get(xi)?;
            let (r, c) = m.first_difference(n)?;
            Some(format!(
                "on basis vector #{c} of A({xi}), entry {r}: {} vs {}",
                m[(r, c)],
                n[(r, c)]
            ))
        })
    }
}

/// The grades `A(xi)` with `xi <= cutoff` on which operators are realised.
pub struct DWindow<'b, 'a> {
    alg: &'b CoordAlgebra<'a>,
    pub grades: Vec<Weight>,
    fault: bool,
}

impl<'b, 'a> DWindow<'b, 'a> {
    pub fn new(alg: &'b CoordAlgebra<'a>) -> Self {
        DWindow {
            alg,
            grades: dominant_below(&alg.cutoff()),
            fault: false,
        }
    }

    /// Negative control: every `sigma_lambda` with `lambda != 0` picks up a
    /// spurious factor `q`, which the relation checks must catch.
    pub fn with_fault(mut self) -> Self {
        self.fault = true;
        self
    }

    pub fn algebra(&self) -> &'b CoordAlgebra<'a> {
        self.alg
    }

    pub fn uq(&self) -> &'a QuantumGroup {
        self.alg.uq()
    }

    fn build(&self, grade: Weight, mut block: impl FnMut(&Weight) -> Result<Mat, DmodError>) -> Result<DOperator, DmodError> {
        let cutoff = self.alg.cutoff();
        let mut blocks = BTreeMap::new();
        for xi in &self.grades {
            if (*xi + grade).le_componentwise(&cutoff) {
                blocks.insert(*xi, block(xi)?);
            }
        }
        if blocks.is_empty() {
            return Err(DmodError::EmptyDomain(grade));
        }
        Ok(DOperator { grade, blocks })
    }

    fn multiplication(&self, phi: &CoordElement, left: bool) -> Result<DOperator, DmodError> {
        self.build(phi.grade, |xi| {
            let cols = self
                .alg
                .basis(xi)?
                .iter()
                .map(|psi| {
                    let p = if left { self.alg.mul(phi, psi) } else { self.alg.mul(psi, phi) };
                    Ok(p?.vector)
                })
                .collect::<Result<Vec<_>, DmodError>>()?;
            Ok(Mat::from_columns(self.alg.dim(&(*xi + phi.grade))?, &cols))
        })
    }

    /// `l_phi(psi) = phi psi`.
    pub fn left(&self, phi: &CoordElement) -> Result<DOperator, DmodError> {
        self.multiplication(phi, true)
    }

    /// `r_phi(psi) = psi phi`.
    pub fn right(&self, phi: &CoordElement) -> Result<DOperator, DmodError> {
        self.multiplication(phi, false)
    }

    /// `d_u(psi) = u psi`.
    pub fn partial(&self, u: &UElement) -> Result<DOperator, DmodError> {
        let zero = Weight::zero(self.uq().rank());
        self.build(zero, |xi| Ok(self.alg.grade(xi)?.module.act_matrix(u)))
    }

    /// `sigma_lambda = q^{(lambda, xi)}` on `A(xi)`.
    pub fn sigma(&self, lambda: &Weight) -> Result<DOperator, DmodError> {
        let zero = Weight::zero(self.uq().rank());
        let d = self.uq().datum();
        let mut c = QScalar::one();
        if self.fault && !lambda.is_zero() {
            c = d.q_pow(1);
        }
        self.build(zero, |xi| {
            let n = self.alg.dim(xi)?;
            Ok(Mat::identity(n).scale(&(&c * &d.q_form(lambda, xi))))
        })
    }

    pub fn identity(&self) -> Result<DOperator, DmodError> {
        self.sigma(&Weight::zero(self.uq().rank()))
    }

    pub fn zero(&self, grade: &Weight) -> Result<DOperator, DmodError> {
        self.build(*grade, |xi| Ok(Mat::zeros(self.alg.dim(&(*xi + *grade))?, self.alg.dim(xi)?)))
    }

    /// Homogeneous basis elements of every nonzero grade of the window.
    fn test_elements(&self) -> Result<Vec<CoordElement>, DmodError> {
        let mut out = Vec::new();
        for g in self.grades.iter().filter(|g| !g.is_zero()) {
            out.extend(self.alg.basis(g)?);
        }
        Ok(out)
    }

    /// `e_i`, `f_i` and `k` of the fundamental weights.
    fn test_generators(&self) -> Vec<(String, UElement)> {
        let uq = self.uq();
        let d = uq.datum();
        let mut out = Vec::new();
        for i in 0..d.rank() {
            out.push((format!("e{}", i + 1), uq.e(i)));
            out.push((format!("f{}", i + 1), uq.f(i)));
            out.push((format!("k(w{})", i + 1), uq.k(d.fundamental(i))));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationsReport {
    pub grades: Vec<Weight>,
    pub relations: Vec<RelationCheck>,
    pub pass: bool,
}

struct Tally {
    check: RelationCheck,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            check: RelationCheck {
                name: name.into(),
                instances: 0,
                failures: Vec::new(),
            },
        }
    }

    fn record(&mut self, lhs: &DOperator, rhs: &DOperator, label: impl FnOnce() -> String) {
        if lhs.agrees(rhs).is_none() {
            return;
        }
        self.check.instances += 1;
        if let Some(witness) = lhs.first_difference(rhs) {
            if self.check.failures.len() < 5 {
                self.check.failures.push(format!("{}: {witness}", label()));
            }
        }
    }
}

/// `sum d_{u_(0)} (x) d_{u_(1)}`-style expansions need the coproduct as a
/// list of element pairs.
fn coproduct_pairs(uq: &QuantumGroup, u: &UElement) -> Result<Vec<(UElement, UElement)>, DmodError> {
    Ok(uq
        .coproduct(u)?
        .iter()
        .map(|(ms, c)| {
            (
                UElement::from_monomial(ms[0].clone(), c.clone()),
                UElement::from_monomial(ms[1].clone(), QScalar::one()),
            )
        })
        .collect())
}

/// The six commutation relations and the `l d = sum d l` exchange rule, on
/// every basis element and generator that fits the window.
pub fn relations_check(win: &DWindow) -> Result<RelationsReport, DmodError> {
    let alg = win.algebra();
    let uq = win.uq();
    let d = uq.datum();
    let phis = win.test_elements()?;
    let gens = win.test_generators();
    let lambdas: Vec<Weight> = (0..d.rank())
        .flat_map(|i| [d.fundamental(i), d.simple_root(i)])
        .collect();
    let cutoff = alg.cutoff();

    let mut c1 = Tally::new("l_phi l_psi = l_{phi psi}");
    let left: Vec<DOperator> = phis.iter().map(|p| win.left(p)).collect::<Result<_, _>>()?;
    for (a, phi) in phis.iter().enumerate() {
        for (b, psi) in phis.iter().enumerate() {
            if !(phi.grade + psi.grade).le_componentwise(&cutoff) {
                continue;
            }
            let rhs = win.left(&alg.mul(phi, psi)?)?;
            c1.record(&left[a].then(&left[b]), &rhs, || format!("phi#{a} psi#{b}"));
        }
    }

    let mut c2 = Tally::new("sigma_lambda sigma_mu = sigma_{lambda+mu}");
    let mut c4 = Tally::new("sigma_lambda l_phi = q^(lambda,mu) l_phi sigma_lambda");
    let mut c5 = Tally::new("sigma_lambda d_u = d_u sigma_lambda");
    for lam in &lambdas {
        let s = win.sigma(lam)?;
        for mu in &lambdas {
            c2.record(&s.then(&win.sigma(mu)?), &win.sigma(&(*lam + *mu))?, || format!("{lam} {mu}"));
        }
        for (a, phi) in phis.iter().enumerate() {
            let rhs = left[a].then(&s).scale(&d.q_form(lam, &phi.grade));
            c4.record(&s.then(&left[a]), &rhs, || format!("{lam} phi#{a}"));
        }
        for (name, u) in &gens {
            let du = win.partial(u)?;
            c5.record(&s.then(&du), &du.then(&s), || format!("{lam} {name}"));
        }
    }

    let mut c3 = Tally::new("d_u d_u' = d_{uu'}");
    for (n1, u1) in &gens {
        for (n2, u2) in &gens {
            let lhs = win.partial(u1)?.then(&win.partial(u2)?);
            c3.record(&lhs, &win.partial(&uq.mul(u1, u2)?)?, || format!("{n1} {n2}"));
        }
    }

    let mut c6 = Tally::new("d_u l_phi = sum l_{u0 phi} d_{u1}");
    let mut c7 = Tally::new("l_phi d_u = sum d_{u1} l_{S^-1(u0) phi}");
    for (name, u) in &gens {
        let du = win.partial(u)?;
        let pairs = coproduct_pairs(uq, u)?;
        for (a, phi) in phis.iter().enumerate() {
            let mut rhs6 = win.zero(&phi.grade)?;
            let mut rhs7 = win.zero(&phi.grade)?;
            for (u0, u1) in &pairs {
                let d1 = win.partial(u1)?;
                rhs6 = rhs6.add(&win.left(&alg.act(u0, phi)?)?.then(&d1))?;
                let s0 = uq.antipode_inverse(u0)?;
                rhs7 = rhs7.add(&d1.then(&win.left(&alg.act(&s0, phi)?)?))?;
            }
            c6.record(&du.then(&left[a]), &rhs6, || format!("{name} phi#{a}"));
            c7.record(&left[a].then(&du), &rhs7, || format!("{name} phi#{a}"));
        }
    }

    let relations: Vec<RelationCheck> = [c1, c2, c3, c4, c5, c6, c7].into_iter().map(|t| t.check).collect();
    let pass = relations.iter().all(|r| r.failures.is_empty() && r.instances > 0);
    Ok(RelationsReport {
        grades: win.grades.clone(),
        relations,
        pass,
    })
}

/// `sum_beta q^{(beta,beta)} (1 (x) k_beta)(S (x) id)(Xi_beta)` for
/// `beta <= bound`, as `(x_a, y_a)` with the `y`-side already summed.
fn inverse_r_terms(
    uq: &QuantumGroup,
    pairing: &Pairing,
    bound: &RootSum,
) -> Result<Vec<(UElement, UElement)>, DmodError> {
    let d = uq.datum();
    let mut out = Vec::new();
    for beta in bound.box_below() {
        let xi = pairing.canonical(uq, &beta)?;
        let scale = d.q_pow(d.root_form(&beta, &beta));
        let kb = uq.k(d.root_to_weight(&beta));
        let ys = xi
            .words()
            .iter()
            .map(|y| uq.mul(&kb, &uq.word_element(true, y)?))
            .collect::<Result<Vec<_>, UqError>>()?;
        for (a, x) in xi.words().iter().enumerate() {
            let sx = uq.antipode(&uq.word_element(false, x)?)?.scale(&scale);
            let mut y = UElement::zero();
            for (b, yb) in ys.iter().enumerate() {
                let c = &xi.coefficients[(a, b)];
                if !c.is_zero() {
                    y.add_scaled(yb, c);
                }
            }
            out.push((sx, y));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaRlReport {
    pub grade: Weight,
    pub weight: Weight,
    /// `r_psi` through left multiplications.
    pub right_via_left: bool,
    /// `l_psi` through right multiplications.
    pub left_via_right: bool,
    pub terms: usize,
}

impl LemmaRlReport {
    pub fn pass(&self) -> bool {
        self.right_via_left && self.left_via_right
    }
}

/// `r_psi = sum l_{x_p psi} d_{y_p k_eta} sigma_{-mu}` and
/// `l_psi = sum r_{y_p psi} d_{x_p k_eta} sigma_{-mu}` for `psi` in
/// `A(mu)_eta`.
pub fn lemma_rl_check(win: &DWindow, pairing: &Pairing, psi: &CoordElement) -> Result<LemmaRlReport, DmodError> {
    let alg = win.algebra();
    let uq = win.uq();
    let mu = psi.grade;
    let eta = psi.weight.ok_or(DmodError::NotHomogeneous)?;
    let terms = inverse_r_terms(uq, pairing, &full_depth(uq, &mu)?)?;
    let k_eta = uq.k(eta);
    let sigma = win.sigma(&-mu)?;

    let mut via_left = win.zero(&mu)?;
    let mut via_right = win.zero(&mu)?;
    let mut used = 0;
    for (x, y) in &terms {
        let xpsi = alg.act(x, psi)?;
        if !xpsi.is_zero() {
            used += 1;
            let du = win.partial(&uq.mul(y, &k_eta)?)?;
            via_left = via_left.add(&win.left(&xpsi)?.then(&du).then(&sigma))?;
        }
        let ypsi = alg.act(y, psi)?;
        if !ypsi.is_zero() {
            used += 1;
            let du = win.partial(&uq.mul(x, &k_eta)?)?;
            via_right = via_right.add(&win.right(&ypsi)?.then(&du).then(&sigma))?;
        }
    }
    Ok(LemmaRlReport {
        grade: mu,
        weight: eta,
        right_via_left: via_left.agrees(&win.right(psi)?) == Some(true),
        left_via_right: via_right.agrees(&win.left(psi)?) == Some(true),
        terms: used,
    })
}

#[cfg(test)]
mod tests;
