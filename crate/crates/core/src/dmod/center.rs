//! Central elements of `U` of bounded height, their Harish-Chandra images
//! and the central characters `zeta_lambda`.

use super::{DWindow, DmodError};
use crate::cartan::{RootSum, Weight};
use crate::linalg::Mat;
use crate::scalars::QScalar;
use crate::uqg::{Monomial, QuantumGroup, UElement};
use crate::wmod::verma;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct CenterElement {
    pub element: UElement,
    /// `zeta(z)` as coefficients of `e(mu)`.
    pub hc_image: BTreeMap<Weight, QScalar>,
}

impl CenterElement {
    /// `zeta_lambda(z) = sum c_mu q^{(lambda, mu)}`.
    pub fn zeta_at(&self, uq: &QuantumGroup, lambda: &Weight) -> QScalar {
        let d = uq.datum();
        self.hc_image
            .iter()
            .fold(QScalar::zero(), |acc, (mu, c)| acc + c * &d.q_form(lambda, mu))
    }

    /// Invariance under `s_i o e(mu) = q^{(s_i mu - mu, rho)} e(s_i mu)`.
    pub fn is_dot_invariant(&self, uq: &QuantumGroup) -> bool {
        let d = uq.datum();
        let rho = d.rho();
        (0..d.rank()).all(|i| {
            let mut moved = BTreeMap::new();
            for (mu, c) in &self.hc_image {
                let image = d.reflect(i, mu);
                moved.insert(image, c * &d.q_form(&(image - *mu), &rho));
            }
            moved == self.hc_image
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CenterSearch {
    pub max_height: usize,
    /// Bound on the coordinates of the `k_mu` allowed in the ansatz.
    pub k_bound: i32,
    pub unknowns: usize,
    pub dimension: usize,
    #[serde(skip)]
    pub elements: Vec<CenterElement>,
    pub hc_images: Vec<BTreeMap<String, String>>,
    pub invariant: bool,
}

fn k_box(rank: usize, bound: i32) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for i in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (-bound..=bound).map(move |c| {
                    let mut x = w;
                    x[i] = c;
                    x
                })
            })
            .collect();
    }
    out
}

/// Solves `[z, e_i] = [z, f_i] = 0` for `z` a combination of the weight-zero
/// normal monomials `y k_mu x` with `ht(x) = ht(y) <= max_height` and
/// `|mu_i| <= k_bound`. Completeness is only claimed inside this ansatz.
pub fn center_solve(uq: &QuantumGroup, max_height: usize, k_bound: i32) -> Result<CenterSearch, DmodError> {
    let d = uq.datum();
    let rank = d.rank();
    let ks = k_box(rank, k_bound);
    let mut unknowns = Vec::new();
    let top = RootSum::new(&vec![max_height as i32; rank]);
    for gamma in top.box_below() {
        if gamma.height() as usize > max_height {
            continue;
        }
        let words = uq.basis(&gamma)?.standard.clone();
        for y in &words {
            for x in &words {
                for k in &ks {
                    unknowns.push(Monomial {
                        f: y.clone(),
                        k: *k,
                        e: x.clone(),
                    });
                }
            }
        }
    }
    let mut rows: BTreeMap<(usize, Monomial), Vec<QScalar>> = BTreeMap::new();
    let n = unknowns.len();
    for (col, m) in unknowns.iter().enumerate() {
        let z = UElement::from_monomial(m.clone(), QScalar::one());
        for i in 0..rank {
            for (g, gen) in [uq.e(i), uq.f(i)].iter().enumerate() {
                for (out, c) in uq.commutator(&z, gen)?.iter() {
                    let row = rows
                        .entry((2 * i + g, out.clone()))
                        .or_insert_with(|| vec![QScalar::zero(); n]);
                    row[col] += c;
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|j| (0..n).map(|k| if j == k { QScalar::one() } else { QScalar::zero() }).collect())
            .collect()
    } else {
        Mat::from_rows(rows.into_values().collect()).kernel()
    };
    let elements: Vec<CenterElement> = kernel
        .into_iter()
        .map(|v| {
            let mut element = UElement::zero();
            let mut hc_image = BTreeMap::new();
            for (m, c) in unknowns.iter().zip(v) {
                if c.is_zero() {
                    continue;
                }
                if m.f.is_empty() && m.e.is_empty() {
                    hc_image.insert(m.k, c.clone());
                }
                element.add_term(m.clone(), c);
            }
            CenterElement { element, hc_image }
        })
        .collect();
    let invariant = elements.iter().all(|z| z.is_dot_invariant(uq));
    let hc_images = elements
        .iter()
        .map(|z| z.hc_image.iter().map(|(k, c)| (k.to_string(), c.to_string())).collect())
        .collect();
    Ok(CenterSearch {
        max_height,
        k_bound,
        unknowns: n,
        dimension: elements.len(),
        elements,
        hc_images,
        invariant,
    })
}

/// `d_z = sigma(zeta(z))` on every grade of the window.
pub fn acts_through_sigma(win: &DWindow, z: &CenterElement) -> Result<bool, DmodError> {
    let mut rhs = win.zero(&Weight::zero(win.uq().rank()))?;
    for (mu, c) in &z.hc_image {
        rhs = rhs.add(&win.sigma(mu)?.scale(c))?;
    }
    Ok(win.partial(&z.element)?.agrees(&rhs) == Some(true))
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkageRow {
    pub first: Weight,
    pub second: Weight,
    pub equal_characters: bool,
    pub linked: bool,
}

/// Compares `zeta_{l1} = zeta_{l2}` on the given central elements with
/// `l2 in W o l1`, for all pairs of the listed weights.
pub fn linkage_scan(uq: &QuantumGroup, elements: &[CenterElement], weights: &[Weight]) -> Vec<LinkageRow> {
    let d = uq.datum();
    let mut out = Vec::new();
    for a in weights {
        for b in weights {
            let equal_characters = elements.iter().all(|z| z.zeta_at(uq, a) == z.zeta_at(uq, b));
            out.push(LinkageRow {
                first: *a,
                second: *b,
                equal_characters,
                linked: d.linked(a, b).is_some(),
            });
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AnnihilatorReport {
    pub lambda: Weight,
    /// Weight whose character was subtracted.
    pub character_of: Weight,
    pub depth: RootSum,
    pub annihilates: bool,
}

/// Whether `z - zeta_nu(z)` kills the truncated Verma module `T(lambda)`.
/// Normal monomials apply their raising part first, so the truncation is
/// exact on every basis vector.
pub fn annihilator_check(
    uq: &QuantumGroup,
    z: &CenterElement,
    lambda: &Weight,
    character_of: &Weight,
    depth: &RootSum,
) -> Result<AnnihilatorReport, DmodError> {
    let t = verma(uq, lambda, depth)?;
    let shifted = z.element.sub(&uq.scalar(z.zeta_at(uq, character_of)));
    let annihilates = (0..t.dim()).all(|k| t.act(&shifted, &t.unit(k)).iter().all(QScalar::is_zero));
    Ok(AnnihilatorReport {
        lambda: *lambda,
        character_of: *character_of,
        depth: *depth,
        annihilates,
    })
}
