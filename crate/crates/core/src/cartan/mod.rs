//! Root data: Cartan matrices, weights, the Weyl group and characters.

mod character;
mod weight;
mod weyl;

pub use character::CharacterPoly;
pub use weight::{RootSum, Weight, MAX_RANK};
pub use weyl::WeylWord;

use crate::scalars::QScalar;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("rank {0} is not supported (1..={MAX_RANK})")]
    Rank(usize),
    #[error("not a Cartan matrix: {0}")]
    NotCartan(String),
    #[error("Cartan matrix is not of finite type")]
    NotFinite,
    #[error("{0} is not in the root lattice")]
    NotInRootLattice(Weight),
    #[error("Weyl character division left a nonzero remainder")]
    NonzeroRemainder,
}

/// A finite-type Cartan datum with its symmetrisation.
///
/// `(alpha_i, alpha_j) = d_i a_ij`, normalised so the shortest roots have
/// squared length 2.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    name: String,
    a: Vec<Vec<i32>>,
    d: Vec<i32>,
    l0: u32,
    /// `(varpi_i, varpi_j)`.
    gram: Vec<Vec<Rational64>>,
    positive_roots: Vec<RootSum>,
}

impl PartialEq for CartanDatum {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a
    }
}

impl Eq for CartanDatum {}

fn type_matrix(name: &str) -> Result<Vec<Vec<i32>>, CartanError> {
    let (family, n) = name.split_at(1);
    let n: usize = n
        .parse()
        .map_err(|_| CartanError::UnknownType(name.into()))?;
    if n == 0 || n > MAX_RANK {
        return Err(CartanError::Rank(n));
    }
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match (family, n) {
        ("A", _) => {}
        ("B", n) if n >= 2 => a[n - 1][n - 2] = -2,
        ("C", n) if n >= 2 => a[n - 2][n - 1] = -2,
        ("D", 4) => {
            a = vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ];
        }
        ("G", 2) => a = vec![vec![2, -3], vec![-1, 2]],
        ("F", 4) => a[1][2] = -2,
        _ => return Err(CartanError::UnknownType(name.into())),
    }
    Ok(a)
}

fn rational_inverse(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c];
                let pivot = aug[c].clone();
                for (x, y) in aug[i].iter_mut().zip(pivot) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn leading_minors_positive(b: &[Vec<Rational64>]) -> bool {
    let n = b.len();
    (1..=n).all(|k| {
        // determinant of the leading k x k block by elimination
        let mut m: Vec<Vec<Rational64>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
        let mut det = Rational64::one();
        for c in 0..k {
            let Some(p) = (c..k).find(|&i| !m[i][c].is_zero()) else {
                return false;
            };
            if p != c {
                m.swap(c, p);
                det = -det;
            }
            det *= m[c][c];
            for i in c + 1..k {
                let f = m[i][c] / m[c][c];
                let pivot = m[c].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x -= f * y;
                }
            }
        }
        det.is_positive()
    })
}

impl CartanDatum {
    /// Preset by type name: `A1`..`A4`, `B2`..`B4`, `C2`..`C4`, `D4`, `F4`, `G2`.
    pub fn preset(name: &str) -> Result<Self, CartanError> {
        let mut d = Self::from_matrix(type_matrix(name)?)?;
        d.name = name.to_string();
        Ok(d)
    }

    pub fn from_matrix(a: Vec<Vec<i32>>) -> Result<Self, CartanError> {
        let n = a.len();
        if n == 0 || n > MAX_RANK {
            return Err(CartanError::Rank(n));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(CartanError::NotCartan("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(CartanError::NotCartan("diagonal entries must be 2".into()));
            }
            for j in 0..n {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(CartanError::NotCartan(format!("bad entry at ({i},{j})")));
                }
            }
        }
        let d = symmetrizers(&a)?;
        let b: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| Rational64::from(i64::from(d[i] * a[i][j]))).collect())
            .collect();
        if !leading_minors_positive(&b) {
            return Err(CartanError::NotFinite);
        }
        // (A^T G) = diag(d)  =>  G = A^{-T} diag(d)
        let at: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| Rational64::from(i64::from(a[j][i]))).collect())
            .collect();
        let at_inv = rational_inverse(&at).ok_or(CartanError::NotFinite)?;
        let gram: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| at_inv[i][j] * Rational64::from(i64::from(d[j])))
                    .collect()
            })
            .collect();
        let l0 = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, x| acc.lcm(x.denom())) as u32;
        let mut datum = CartanDatum {
            name: format!("{a:?}"),
            a,
            d,
            l0,
            gram,
            positive_roots: Vec::new(),
        };
        datum.positive_roots = datum.compute_positive_roots();
        Ok(datum)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.a[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.a
    }

    /// `d_i`, so that `q_i = q^{d_i}`.
    pub fn symmetrizer(&self, i: usize) -> i32 {
        self.d[i]
    }

    pub fn symmetrizers(&self) -> &[i32] {
        &self.d
    }

    /// Minimal `l0` with `l0 (Lambda, Lambda)` integral.
    pub fn l0(&self) -> u32 {
        self.l0
    }

    pub fn rho(&self) -> Weight {
        Weight::new(&vec![1; self.rank()])
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::unit(self.rank(), i)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.root_to_weight(&RootSum::unit(self.rank(), i))
    }

    pub fn root_to_weight(&self, g: &RootSum) -> Weight {
        let n = self.rank();
        let mut w = Weight::zero(n);
        for k in 0..n {
            w[k] = (0..n).map(|i| self.a[k][i] * g[i]).sum();
        }
        w
    }

    pub fn weight_to_root(&self, w: &Weight) -> Result<RootSum, CartanError> {
        let n = self.rank();
        let a: Vec<Vec<Rational64>> = (0..n)
            .map(|k| (0..n).map(|i| Rational64::from(i64::from(self.a[k][i]))).collect())
            .collect();
        let inv = rational_inverse(&a).expect("Cartan matrix is invertible");
        let mut g = RootSum::zero(n);
        for i in 0..n {
            let x: Rational64 = (0..n).map(|k| inv[i][k] * Rational64::from(i64::from(w[k]))).sum();
            if !x.is_integer() {
                return Err(CartanError::NotInRootLattice(*w));
            }
            g[i] = x.to_integer() as i32;
        }
        Ok(g)
    }

    /// Symmetric form `(lambda, mu)`.
    pub fn form(&self, x: &Weight, y: &Weight) -> Rational64 {
        let n = self.rank();
        let mut s = Rational64::zero();
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] != 0 {
                    s += self.gram[i][j] * Rational64::from(i64::from(x[i] * y[j]));
                }
            }
        }
        s
    }

    /// `l0 * (x, y)`, an integer.
    pub fn form_t(&self, x: &Weight, y: &Weight) -> i64 {
        let v = self.form(x, y) * Rational64::from(i64::from(self.l0));
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    pub fn root_form(&self, x: &RootSum, y: &RootSum) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += i64::from(x[i] * y[j] * self.d[i] * self.a[i][j]);
            }
        }
        s
    }

    /// `q^{(x, y)}`.
    pub fn q_form(&self, x: &Weight, y: &Weight) -> QScalar {
        QScalar::t_pow(self.l0, self.form_t(x, y))
    }

    /// `q^n` in this datum's field.
    pub fn q_pow(&self, n: i64) -> QScalar {
        QScalar::q_pow(self.l0, n)
    }

    /// `q_i = q^{d_i}`.
    pub fn q_i(&self, i: usize) -> QScalar {
        self.q_pow(i64::from(self.d[i]))
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let k = w[i];
        let mut out = *w;
        for j in 0..self.rank() {
            out[j] -= k * self.a[j][i];
        }
        out
    }

    pub fn reflect_root(&self, i: usize, g: &RootSum) -> RootSum {
        let pairing: i32 = (0..self.rank()).map(|j| g[j] * self.a[i][j]).sum();
        let mut out = *g;
        out[i] -= pairing;
        out
    }

    /// `(lambda, alpha_i^vee)` for a root-lattice element.
    pub fn coroot_pairing(&self, i: usize, g: &RootSum) -> i32 {
        (0..self.rank()).map(|j| g[j] * self.a[i][j]).sum()
    }

    fn compute_positive_roots(&self) -> Vec<RootSum> {
        let n = self.rank();
        let mut roots: Vec<RootSum> = (0..n).map(|i| RootSum::unit(n, i)).collect();
        let mut k = 0;
        while k < roots.len() {
            let r = roots[k];
            for i in 0..n {
                let s = self.reflect_root(i, &r);
                if s.is_nonnegative() && !s.is_zero() && !roots.contains(&s) {
                    roots.push(s);
                }
            }
            k += 1;
        }
        roots.sort_by_key(|r| (r.height(), *r));
        roots
    }

    pub fn positive_roots(&self) -> &[RootSum] {
        &self.positive_roots
    }

    /// Number of ways to write `gamma` as a sum of positive roots.
    pub fn kostant_dim(&self, gamma: &RootSum) -> u64 {
        let mut memo = BTreeMap::new();
        self.kostant_rec(*gamma, 0, &mut memo)
    }

    fn kostant_rec(&self, g: RootSum, idx: usize, memo: &mut BTreeMap<(RootSum, usize), u64>) -> u64 {
        if g.is_zero() {
            return 1;
        }
        if idx == self.positive_roots.len() || !g.is_nonnegative() {
            return 0;
        }
        if let Some(&v) = memo.get(&(g, idx)) {
            return v;
        }
        let beta = self.positive_roots[idx];
        let mut total = 0;
        let mut rest = g;
        while rest.is_nonnegative() {
            total += self.kostant_rec(rest, idx + 1, memo);
            rest = rest - beta;
        }
        memo.insert((g, idx), total);
        total
    }

    /// `(lambda + rho, beta^vee) > 0` for all positive roots.
    pub fn is_rho_dominant(&self, w: &Weight) -> bool {
        (*w + self.rho()).is_dominant()
    }

    /// Pairing `<lambda + rho, rho^vee>`-style height used to order weights.
    pub fn height_key(&self, w: &Weight) -> Rational64 {
        self.form(w, &self.rho())
    }

    pub fn summary(&self) -> CartanSummary {
        CartanSummary {
            name: self.name.clone(),
            rank: self.rank(),
            cartan_matrix: self.a.clone(),
            symmetrizers: self.d.clone(),
            l0: self.l0,
            positive_roots: self.positive_roots.clone(),
            fundamental_form: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            weyl_order: self.weyl_group().len(),
        }
    }
}

fn symmetrizers(a: &[Vec<i32>]) -> Result<Vec<i32>, CartanError> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational64::one());
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 {
                    let dj = d[i].unwrap() * Rational64::from(i64::from(a[i][j]))
                        / Rational64::from(i64::from(a[j][i]));
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            comp.push(j);
                            stack.push(j);
                        }
                        Some(x) if x != dj => {
                            return Err(CartanError::NotCartan("not symmetrizable".into()))
                        }
                        _ => {}
                    }
                }
            }
        }
        // scale the component so its smallest entry is 1
        let den = comp.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let ints: Vec<i64> = comp.iter().map(|&i| (d[i].unwrap() * Rational64::from(den)).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
        let min = ints.iter().min().copied().unwrap() / g;
        for (k, &i) in comp.iter().enumerate() {
            let v = ints[k] / g;
            if v % min != 0 {
                return Err(CartanError::NotCartan("symmetrizers are not integral".into()));
            }
            d[i] = Some(Rational64::from(v / min));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer() as i32).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct CartanSummary {
    pub name: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i32>>,
    pub symmetrizers: Vec<i32>,
    pub l0: u32,
    pub positive_roots: Vec<RootSum>,
    pub fundamental_form: Vec<Vec<String>>,
    pub weyl_order: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l0_values() {
        assert_eq!(CartanDatum::preset("A1").unwrap().l0(), 2);
        assert_eq!(CartanDatum::preset("A2").unwrap().l0(), 3);
        assert_eq!(CartanDatum::preset("B2").unwrap().l0(), 1);
        assert_eq!(CartanDatum::preset("G2").unwrap().l0(), 1);
    }

    #[test]
    fn fundamental_form() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let w = a1.fundamental(0);
        assert_eq!(a1.form(&w, &w), Rational64::new(1, 2));
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.form(&a2.fundamental(0), &a2.fundamental(1)), Rational64::new(1, 3));
        // (alpha_i, varpi_j) = d_i delta_ij
        let g2 = CartanDatum::preset("G2").unwrap();
        assert_eq!(g2.form(&g2.simple_root(1), &g2.fundamental(1)), Rational64::from(3));
        assert_eq!(g2.form(&g2.simple_root(0), &g2.simple_root(0)), Rational64::from(2));
    }

    #[test]
    fn root_counts() {
        for (name, count) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6)] {
            assert_eq!(CartanDatum::preset(name).unwrap().positive_roots().len(), count);
        }
    }

    #[test]
    fn kostant_small() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.kostant_dim(&RootSum::new(&[1, 1])), 2);
        assert_eq!(a2.kostant_dim(&RootSum::new(&[2, 1])), 2);
        assert_eq!(a2.kostant_dim(&RootSum::new(&[2, 2])), 3);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(CartanDatum::from_matrix(vec![vec![2, -2], vec![-2, 2]]).is_err());
        assert!(CartanDatum::from_matrix(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanDatum::preset("E9").is_err());
    }

    #[test]
    fn weight_root_conversion() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let g = RootSum::new(&[1, 1]);
        let w = a2.root_to_weight(&g);
        assert_eq!(w, Weight::new(&[1, 1]));
        assert_eq!(a2.weight_to_root(&w).unwrap(), g);
        assert!(a2.weight_to_root(&a2.fundamental(0)).is_err());
    }
}
