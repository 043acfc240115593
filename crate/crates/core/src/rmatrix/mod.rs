//! Drinfeld pairing, canonical elements and R-operators.

mod operator;
mod pairing;

pub use operator::{
    hexagon_check, is_module_map, kappa, r_check, r_inverse, r_matrix, tau, xi_operator, HexagonReport,
};
pub use pairing::{CanonicalElement, Pairing, PairingTable};
pub(crate) use pairing::word_string;

use crate::cartan::{CartanError, RootSum};
use crate::uqg::UqError;
use crate::wmod::WmodError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RmatrixError {
    #[error(transparent)]
    Algebra(#[from] UqError),
    #[error(transparent)]
    Module(#[from] WmodError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("element is outside the Borel part the pairing expects")]
    NotInBorel,
    #[error("pairing matrix in degree {0} is singular")]
    SingularPairing(RootSum),
    #[error("R-operators need finite-dimensional left modules")]
    NotFinite,
    #[error("the inverse formula does not invert R")]
    InverseMismatch,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, Weight};
    use crate::linalg::Mat;
    use crate::scalars::QScalar;
    use crate::uqg::QuantumGroup;
    use crate::wmod::{simple, tensor};

    fn uq(name: &str) -> QuantumGroup {
        QuantumGroup::new(CartanDatum::preset(name).unwrap())
    }

    fn w(c: &[i32]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn pairing_axioms() {
        let u = uq("B2");
        let d = u.datum();
        let p = Pairing::new(&u);
        for i in 0..2 {
            for j in 0..2 {
                let v = p.pair(&u, &u.e(i), &u.f(j)).unwrap();
                let qi = d.q_i(i);
                let expect = if i == j {
                    (&qi.inv().unwrap() - &qi).inv().unwrap()
                } else {
                    QScalar::zero()
                };
                assert_eq!(v, expect);
            }
        }
        let (a, b) = (w(&[1, 0]), w(&[1, -1]));
        assert_eq!(p.pair(&u, &u.k(a), &u.k(b)).unwrap(), d.q_form(&a, &b).inv().unwrap());
        assert_eq!(p.pair(&u, &u.k(a), &u.f(0)).unwrap(), QScalar::zero());
        assert!(matches!(p.pair(&u, &u.f(0), &u.f(0)), Err(RmatrixError::NotInBorel)));
    }

    #[test]
    fn pairing_respects_products() {
        // (x, y1 y2) = (Delta x, y1 (x) y2) and (x1 x2, y) = (x2 (x) x1, Delta y)
        let u = uq("A2");
        let p = Pairing::new(&u);
        let x = u.product(&[u.e(0), u.e(1), u.e(0)]).unwrap();
        let y1 = u.f(0);
        let y2 = u.mul(&u.f(1), &u.f(0)).unwrap();
        let lhs = p.pair(&u, &x, &u.mul(&y1, &y2).unwrap()).unwrap();
        let mut rhs = QScalar::zero();
        for (ms, c) in u.coproduct(&x).unwrap().iter() {
            let a = crate::uqg::UElement::from_monomial(ms[0].clone(), QScalar::one());
            let b = crate::uqg::UElement::from_monomial(ms[1].clone(), QScalar::one());
            rhs += &(c * &p.pair(&u, &a, &y1).unwrap() * p.pair(&u, &b, &y2).unwrap());
        }
        assert_eq!(lhs, rhs);
        let x1 = u.mul(&u.k(w(&[1, 0])), &u.e(1)).unwrap();
        let x2 = u.mul(&u.e(0), &u.e(1)).unwrap();
        let y = u.product(&[u.f(1), u.f(0), u.f(1), u.k(w(&[0, 1]))]).unwrap();
        let lhs = p.pair(&u, &u.mul(&x1, &x2).unwrap(), &y).unwrap();
        let mut rhs = QScalar::zero();
        for (ms, c) in u.coproduct(&y).unwrap().iter() {
            let a = crate::uqg::UElement::from_monomial(ms[0].clone(), QScalar::one());
            let b = crate::uqg::UElement::from_monomial(ms[1].clone(), QScalar::one());
            rhs += &(c * &p.pair(&u, &x2, &a).unwrap() * p.pair(&u, &x1, &b).unwrap());
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_nondegenerate() {
        let u = uq("A1");
        let p = Pairing::new(&u);
        for n in 0..=4 {
            p.canonical(&u, &RootSum::new(&[n])).unwrap();
        }
        let u2 = uq("A2");
        let p2 = Pairing::new(&u2);
        for g in RootSum::new(&[4, 4]).box_below() {
            if g.height() <= 4 {
                p2.canonical(&u2, &g).unwrap();
            }
        }
    }

    #[test]
    fn canonical_element_a1_and_property() {
        let u = uq("A1");
        let d = u.datum();
        let p = Pairing::new(&u);
        let c = p.canonical(&u, &RootSum::new(&[1])).unwrap();
        let q = d.q_pow(1);
        assert_eq!(c.coefficients[(0, 0)], &q.inv().unwrap() - &q);
        let u2 = uq("A2");
        let p = Pairing::new(&u2);
        let c = p.canonical(&u2, &RootSum::new(&[1, 1])).unwrap();
        let n = c.words().len();
        assert_eq!(n, 2);
        // sum_{a,b} C_ab (x_c, y_b) x_a = x_c
        let prod = c.coefficients.mul(&c.table.matrix.transpose());
        assert_eq!(prod, Mat::identity(n));
        assert_eq!(p.canonical(&u2, &RootSum::zero(2)).unwrap().coefficients, Mat::identity(1));
    }

    #[test]
    fn r_matrix_a1_fundamental() {
        let u = uq("A1");
        let d = u.datum();
        let p = Pairing::new(&u);
        let v = simple(&u, &w(&[1])).unwrap();
        let r = r_matrix(&u, &p, &v, &v).unwrap();
        // only one entry outside the diagonal, coming from Xi_alpha
        let off: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && !r[(i, j)].is_zero())
            .collect();
        assert_eq!(off.len(), 1);
        let vv = tensor(&v, &v).unwrap();
        let rc = r_check(&u, &p, &v, &v).unwrap();
        assert!(is_module_map(&rc, &vv, &vv));
        // independent check: the commutant of V (x) V is two-dimensional and
        // R^vee acts on the highest line by q^{-(w, w)}
        let top = vv.highest.unwrap();
        assert_eq!(rc[(top, top)], d.q_form(&w(&[1]), &w(&[1])).inv().unwrap());
        let inv = r_inverse(&u, &p, &v, &v).unwrap();
        assert_eq!(inv.mul(&r), Mat::identity(4));
    }

    #[test]
    fn r_check_trivial_factor() {
        let u = uq("A2");
        let p = Pairing::new(&u);
        let triv = simple(&u, &w(&[0, 0])).unwrap();
        let v = simple(&u, &w(&[1, 1])).unwrap();
        assert_eq!(r_check(&u, &p, &triv, &v).unwrap(), Mat::identity(v.dim()));
        assert_eq!(r_check(&u, &p, &v, &triv).unwrap(), Mat::identity(v.dim()));
    }

    #[test]
    fn r_check_is_module_map() {
        for (name, a, b) in [
            ("A2", w(&[1, 0]), w(&[0, 1])),
            ("A2", w(&[1, 0]), w(&[1, 1])),
            ("B2", w(&[1, 0]), w(&[0, 1])),
            ("G2", w(&[1, 0]), w(&[1, 0])),
        ] {
            let u = uq(name);
            let p = Pairing::new(&u);
            let v = simple(&u, &a).unwrap();
            let v2 = simple(&u, &b).unwrap();
            let rc = r_check(&u, &p, &v, &v2).unwrap();
            assert!(is_module_map(&rc, &tensor(&v, &v2).unwrap(), &tensor(&v2, &v).unwrap()), "{name}");
            r_inverse(&u, &p, &v, &v2).unwrap();
        }
    }

    #[test]
    fn hexagon() {
        let u = uq("A1");
        let p = Pairing::new(&u);
        let v = simple(&u, &w(&[1])).unwrap();
        assert!(hexagon_check(&u, &p, &v, &v, &v).unwrap().ok);
        let u2 = uq("A2");
        let p2 = Pairing::new(&u2);
        let a = simple(&u2, &w(&[1, 0])).unwrap();
        let b = simple(&u2, &w(&[0, 1])).unwrap();
        assert!(hexagon_check(&u2, &p2, &a, &a, &b).unwrap().ok);
        let triv = simple(&u2, &w(&[0, 0])).unwrap();
        assert!(hexagon_check(&u2, &p2, &triv, &a, &b).unwrap().ok);
    }
}
