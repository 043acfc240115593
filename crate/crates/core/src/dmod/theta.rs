//! The representation `Theta_xi` of degree-zero operators on `U^+`, built
//! from right multiplication `M_x`, the conjugations `N_mu` and the maps
//! `P_phi`, `Q_phi`, and compared with the right Verma module `T_r(xi)`.

use super::DmodError;
use crate::cartan::{RootSum, Weight};
use crate::linalg::Mat;
use crate::rmatrix::Pairing;
use crate::scalars::QScalar;
use crate::uqg::{word_degree, Monomial, QuantumGroup, UElement, Word};
use crate::wmod::{verma_right_with_words, WeightModule};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Generators of `D(0)` seen through `Theta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ThetaGen {
    /// `d_{e_i}`
    E(usize),
    /// `d_{f_i}`
    F(usize),
    /// `d_{k_mu}`
    K(Weight),
    Sigma(Weight),
}

impl fmt::Display for ThetaGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaGen::E(i) => write!(f, "d(e{})", i + 1),
            ThetaGen::F(i) => write!(f, "d(f{})", i + 1),
            ThetaGen::K(mu) => write!(f, "d(k{mu})"),
            ThetaGen::Sigma(mu) => write!(f, "sigma{mu}"),
        }
    }
}

pub struct ThetaRep<'a> {
    uq: &'a QuantumGroup,
    pairing: Pairing,
}

fn root_weight(uq: &QuantumGroup, m: &Monomial) -> Weight {
    uq.datum().root_to_weight(&word_degree(&m.e, uq.rank()))
}

impl<'a> ThetaRep<'a> {
    pub fn new(uq: &'a QuantumGroup) -> Self {
        ThetaRep {
            uq,
            pairing: Pairing::new(uq),
        }
    }

    /// Standard basis of `U^+` in degrees of height `<= depth`.
    pub fn basis(&self, depth: usize) -> Result<Vec<UElement>, DmodError> {
        let mut out = Vec::new();
        let top = RootSum::new(&vec![depth as i32; self.uq.rank()]);
        for gamma in top.box_below().into_iter().filter(|g| g.height() as usize <= depth) {
            for w in &self.uq.basis(&gamma)?.standard {
                out.push(self.uq.word_element(false, w)?);
            }
        }
        Ok(out)
    }

    /// `M_x(u) = u x`.
    pub fn m(&self, x: &UElement, u: &UElement) -> Result<UElement, DmodError> {
        Ok(self.uq.mul(u, x)?)
    }

    /// `N_mu(u) = k_mu u k_mu^{-1}`.
    pub fn n(&self, mu: &Weight, u: &UElement) -> UElement {
        let d = self.uq.datum();
        let mut out = UElement::zero();
        for (m, c) in u.iter() {
            out.add_term(m.clone(), c * &d.q_form(mu, &root_weight(self.uq, m)));
        }
        out
    }

    /// `P_{phi_i}(u) = sum <phi_i, u_(0)> u_(1)`.
    pub fn p(&self, i: usize, u: &UElement) -> Result<UElement, DmodError> {
        let mut out = UElement::zero();
        for (ms, c) in self.uq.coproduct(u)?.iter() {
            if ms[0].e.len() == 1 && ms[0].e[0] as usize == i && ms[0].f.is_empty() {
                let val = self.pairing.words(self.uq, &ms[0].e, &[i as u8]);
                out.add_term(ms[1].clone(), c * &val);
            }
        }
        Ok(out)
    }

    /// `Q_{phi_i}(u) = sum <phi_i, u_(1)> k_i^{-1} u_(0)`.
    pub fn q(&self, i: usize, u: &UElement) -> Result<UElement, DmodError> {
        let alpha = self.uq.datum().simple_root(i);
        let mut out = UElement::zero();
        for (ms, c) in self.uq.coproduct(u)?.iter() {
            if ms[1].e.len() == 1 && ms[1].e[0] as usize == i && ms[1].f.is_empty() {
                let val = self.pairing.words(self.uq, &ms[1].e, &[i as u8]);
                let m = Monomial {
                    f: Word::new(),
                    k: ms[0].k - alpha,
                    e: ms[0].e.clone(),
                };
                debug_assert!(m.k.is_zero(), "coproduct of U^+ has k_gamma on the left");
                out.add_term(m, c * &val);
            }
        }
        Ok(out)
    }

    /// `Theta_xi(g)(u)` from the formulas in `M`, `N`, `P`, `Q`.
    pub fn apply(&self, xi: &Weight, g: &ThetaGen, u: &UElement) -> Result<UElement, DmodError> {
        let d = self.uq.datum();
        Ok(match g {
            ThetaGen::E(i) => self.m(&self.uq.e(*i), u)?,
            ThetaGen::K(mu) => self.n(&-*mu, u).scale(&d.q_form(mu, xi)),
            ThetaGen::Sigma(mu) => u.scale(&d.q_form(mu, xi)),
            ThetaGen::F(i) => {
                let alpha = d.simple_root(*i);
                let lowered = self
                    .p(*i, &self.n(&alpha, u))?
                    .scale(&(d.q_form(&alpha, &alpha) * d.q_form(&alpha, xi)).inv().expect("power of q"));
                lowered.sub(&self.q(*i, u)?.scale(&d.q_form(&alpha, xi)))
            }
        })
    }

    /// `Theta_xi(g_1 ... g_n) = Theta_xi(g_n) o ... o Theta_xi(g_1)`.
    pub fn apply_word(&self, xi: &Weight, word: &[ThetaGen], u: &UElement) -> Result<UElement, DmodError> {
        word.iter().try_fold(u.clone(), |acc, g| self.apply(xi, g, &acc))
    }
}

/// `T_r(xi)` with basis `n_xi x` for standard e-words `x`.
struct RightVerma {
    module: WeightModule,
    index: HashMap<Word, usize>,
}

impl RightVerma {
    fn new(uq: &QuantumGroup, xi: &Weight, depth: &RootSum) -> Result<Self, DmodError> {
        let (module, words) = verma_right_with_words(uq, xi, depth)?;
        let index = words.into_iter().enumerate().map(|(k, w)| (w, k)).collect();
        Ok(RightVerma { module, index })
    }

    fn vector(&self, u: &UElement) -> Option<Vec<QScalar>> {
        let mut v = self.module.zero_vec();
        for (m, c) in u.iter() {
            if !m.f.is_empty() || !m.k.is_zero() {
                return None;
            }
            v[*self.index.get(&m.e)?] += c;
        }
        Some(v)
    }

    fn act(&self, uq: &QuantumGroup, g: &ThetaGen, v: &[QScalar]) -> Vec<QScalar> {
        match g {
            ThetaGen::E(i) => self.module.act(&uq.e(*i), v),
            ThetaGen::F(i) => self.module.act(&uq.f(*i), v),
            ThetaGen::K(mu) => self.module.act(&uq.k(*mu), v),
            ThetaGen::Sigma(mu) => {
                let s = uq.datum().q_form(mu, &self.module.window.as_ref().expect("truncated").top);
                v.iter().map(|x| x * &s).collect()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaCheck {
    pub xi: Weight,
    pub generator: String,
    pub compared: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaBuild {
    pub depth: usize,
    pub probes: Vec<Weight>,
    pub checks: Vec<ThetaCheck>,
    pub pass: bool,
}

fn generators(uq: &QuantumGroup) -> Vec<ThetaGen> {
    let d = uq.datum();
    let mut out = Vec::new();
    for i in 0..d.rank() {
        out.push(ThetaGen::E(i));
        out.push(ThetaGen::F(i));
        out.push(ThetaGen::K(d.fundamental(i)));
        out.push(ThetaGen::K(d.simple_root(i)));
        out.push(ThetaGen::Sigma(d.fundamental(i)));
    }
    out
}

/// Formula-built `Theta_xi` against the right Verma module, on every standard
/// basis element of `U^+` up to `depth`, for single generators and for
/// ordered pairs (which also tests that `Theta` reverses products).
pub fn theta_build(rep: &ThetaRep, depth: usize, probes: &[Weight]) -> Result<ThetaBuild, DmodError> {
    let uq = rep.uq;
    let gens = generators(uq);
    let room = RootSum::new(&vec![depth as i32 + 2; uq.rank()]);
    let sources = rep.basis(depth)?;
    let mut checks = Vec::new();
    for xi in probes {
        let verma = RightVerma::new(uq, xi, &room)?;
        let mut words: Vec<Vec<ThetaGen>> = gens.iter().map(|g| vec![g.clone()]).collect();
        for a in &gens {
            for b in &gens {
                if !matches!((a, b), (ThetaGen::Sigma(_), _) | (_, ThetaGen::Sigma(_))) {
                    words.push(vec![a.clone(), b.clone()]);
                }
            }
        }
        for word in words {
            let mut ok = true;
            for u in &sources {
                let formula = rep.apply_word(xi, &word, u)?;
                let start = verma.vector(u).expect("source lies in the window");
                let direct = word.iter().fold(start, |v, g| verma.act(uq, g, &v));
                ok &= verma.vector(&formula).as_ref() == Some(&direct);
            }
            checks.push(ThetaCheck {
                xi: *xi,
                generator: word.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                compared: sources.len(),
                ok,
            });
        }
    }
    let pass = checks.iter().all(|c| c.ok);
    Ok(ThetaBuild {
        depth,
        probes: probes.to_vec(),
        checks,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FaithfulnessReport {
    pub probes: Vec<Weight>,
    pub depth: usize,
    pub span: Vec<String>,
    pub rank: usize,
    /// Only a certificate on this window: independence here implies
    /// independence in `D`, not the converse.
    pub independent: bool,
}

/// Rank of the joint matrix of `Theta_xi(d)` over the probes, for the given
/// degree-zero words (the empty word is the identity).
pub fn theta_faithfulness(
    rep: &ThetaRep,
    depth: usize,
    probes: &[Weight],
    span: &[Vec<ThetaGen>],
) -> Result<FaithfulnessReport, DmodError> {
    let sources = rep.basis(depth)?;
    let mut rows: Vec<BTreeMap<(usize, usize, Monomial), QScalar>> = Vec::new();
    for word in span {
        let mut row = BTreeMap::new();
        for (p, xi) in probes.iter().enumerate() {
            for (s, u) in sources.iter().enumerate() {
                for (m, c) in rep.apply_word(xi, word, u)?.iter() {
                    row.insert((p, s, m.clone()), c.clone());
                }
            }
        }
        rows.push(row);
    }
    let mut keys: Vec<&(usize, usize, Monomial)> = rows.iter().flat_map(|r| r.keys()).collect();
    keys.sort();
    keys.dedup();
    let mat = Mat::from_rows(
        rows.iter()
            .map(|r| keys.iter().map(|k| r.get(*k).cloned().unwrap_or_else(QScalar::zero)).collect())
            .collect(),
    );
    let rank = if keys.is_empty() { 0 } else { mat.rank() };
    Ok(FaithfulnessReport {
        probes: probes.to_vec(),
        depth,
        span: span
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "id".to_string()
                } else {
                    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                }
            })
            .collect(),
        rank,
        independent: rank == span.len(),
    })
}
