//! The Drinfeld pairing between U^{>=0} and U^{<=0} and the canonical
//! elements of `U^+_beta (x) U^-_{-beta}`.

use super::RmatrixError;
use crate::cartan::{RootSum, Weight};
use crate::linalg::Mat;
use crate::scalars::QScalar;
use crate::uqg::{word_degree, QuantumGroup, UElement, Word};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Memoised pairing of free words `(e_x, f_y)`, tied to one Cartan datum.
#[derive(Debug)]
pub struct Pairing {
    cartan: Vec<Vec<i32>>,
    words: RwLock<HashMap<(Word, Word), QScalar>>,
    tables: RwLock<HashMap<RootSum, Arc<CanonicalElement>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingTable {
    pub degree: RootSum,
    /// Standard words indexing both rows (e-words) and columns (f-words).
    pub words: Vec<String>,
    /// Entry `(a, b)` is `(x_a, y_b)`.
    #[serde(serialize_with = "ser_mat")]
    pub matrix: Mat,
}

/// `Xi_beta = sum_{a,b} C_ab x_a (x) y_b` with `C` the inverse transpose of
/// the pairing matrix.
#[derive(Debug, Clone, Serialize)]
pub struct CanonicalElement {
    pub degree: RootSum,
    pub table: PairingTable,
    #[serde(serialize_with = "ser_mat")]
    pub coefficients: Mat,
    #[serde(skip)]
    pub(crate) standard: Vec<Word>,
}

fn ser_mat<S: serde::Serializer>(m: &Mat, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

impl Pairing {
    pub fn new(uq: &QuantumGroup) -> Self {
        Pairing {
            cartan: uq.datum().cartan_matrix().to_vec(),
            words: RwLock::default(),
            tables: RwLock::default(),
        }
    }

    fn check_owner(&self, uq: &QuantumGroup) {
        assert_eq!(self.cartan, uq.datum().cartan_matrix(), "pairing used with a different Cartan datum");
    }

    /// `(e_{x_1} ... e_{x_n}, f_{y_1} ... f_{y_m})` on free words.
    pub fn words(&self, uq: &QuantumGroup, x: &[u8], y: &[u8]) -> QScalar {
        let rank = uq.rank();
        if x.len() != y.len() || word_degree(x, rank) != word_degree(y, rank) {
            return QScalar::zero();
        }
        if x.is_empty() {
            return QScalar::one();
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(v) = self.words.read().expect("pairing memo poisoned").get(&key) {
            return v.clone();
        }
        let d = uq.datum();
        let j = y[0] as usize;
        let aj = d.simple_root(j);
        let qj = d.q_i(j);
        let base = (&qj.inv().expect("unit") - &qj).inv().expect("q_j is not 1");
        let mut before = Weight::zero(rank);
        let mut acc = QScalar::zero();
        for (p, &letter) in x.iter().enumerate() {
            if letter as usize == j {
                let rest: Word = x[..p].iter().chain(&x[p + 1..]).copied().collect();
                let sub = self.words(uq, &rest, &y[1..]);
                if !sub.is_zero() {
                    acc += &(sub * d.q_form(&before, &aj));
                }
            }
            before = before + d.simple_root(letter as usize);
        }
        let value = acc * base;
        self.words
            .write()
            .expect("pairing memo poisoned")
            .insert(key, value.clone());
        value
    }

    /// Pairing of arbitrary elements of U^{>=0} and U^{<=0}, using
    /// `(k_lambda x, y k_mu) = q^{(lambda, gamma) - (lambda, mu)} (x, y)`.
    pub fn pair(&self, uq: &QuantumGroup, x: &UElement, y: &UElement) -> Result<QScalar, RmatrixError> {
        self.check_owner(uq);
        let d = uq.datum();
        let rank = uq.rank();
        let mut out = QScalar::zero();
        for (mx, cx) in x.iter() {
            if !mx.f.is_empty() {
                return Err(RmatrixError::NotInBorel);
            }
            for (my, cy) in y.iter() {
                if !my.e.is_empty() {
                    return Err(RmatrixError::NotInBorel);
                }
                let gamma = d.root_to_weight(&word_degree(&mx.e, rank));
                let v = self.words(uq, &mx.e, &my.f);
                if v.is_zero() {
                    continue;
                }
                let shift = d.form_t(&mx.k, &gamma) - d.form_t(&mx.k, &my.k);
                out += &(v * QScalar::t_pow(d.l0(), shift) * cx * cy);
            }
        }
        Ok(out)
    }

    pub fn table(&self, uq: &QuantumGroup, beta: &RootSum) -> Result<PairingTable, RmatrixError> {
        self.check_owner(uq);
        let b = uq.basis(beta)?;
        let rows: Vec<Vec<QScalar>> = b
            .standard
            .iter()
            .map(|x| b.standard.iter().map(|y| self.words(uq, x, y)).collect())
            .collect();
        Ok(PairingTable {
            degree: *beta,
            words: b.standard.iter().map(|w| word_string(w)).collect(),
            matrix: if rows.is_empty() { Mat::zeros(0, 0) } else { Mat::from_rows(rows) },
        })
    }

    pub fn canonical(&self, uq: &QuantumGroup, beta: &RootSum) -> Result<Arc<CanonicalElement>, RmatrixError> {
        if let Some(c) = self.tables.read().expect("table memo poisoned").get(beta) {
            return Ok(c.clone());
        }
        let table = self.table(uq, beta)?;
        let coefficients = table
            .matrix
            .transpose()
            .inverse()
            .ok_or(RmatrixError::SingularPairing(*beta))?;
        let standard = uq.basis(beta)?.standard.clone();
        let c = Arc::new(CanonicalElement {
            degree: *beta,
            table,
            coefficients,
            standard,
        });
        self.tables
            .write()
            .expect("table memo poisoned")
            .insert(*beta, c.clone());
        Ok(c)
    }
}

pub(crate) fn word_string(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

impl CanonicalElement {
    /// The standard e-words `x_a` (equivalently f-words `y_b`).
    pub fn words(&self) -> &[Word] {
        &self.standard
    }

    /// Terms `(a, b, C_ab)` with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &QScalar)> + '_ {
        let n = self.standard.len();
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b))).filter_map(move |(a, b)| {
            let c = &self.coefficients[(a, b)];
            (!c.is_zero()).then_some((a, b, c))
        })
    }
}
