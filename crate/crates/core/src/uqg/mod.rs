//! The quantized enveloping algebra U_q(g): normal forms, Hopf structure and
//! braid automorphisms.

mod algebra;
pub(crate) mod basis;
mod braid;
mod element;
mod hopf;
mod parse;

pub use algebra::{Generator, QuantumGroup, DEFAULT_MAX_HEIGHT};
pub use basis::GradedBasis;
pub use element::{word_degree, Monomial, UElement, Word};
pub use hopf::UTensor;
pub use parse::parse_element;
#[allow(unused_imports)]
pub(crate) use braid::solve_combination;

use crate::cartan::{RootSum, Weight};
use crate::scalars::QScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UqError {
    #[error("word height {height} exceeds the degree cap {cap}")]
    DegreeCap { height: usize, cap: usize },
    #[error("negative degree {0}")]
    NegativeDegree(RootSum),
    #[error("basis in degree {degree} has dimension {found}, Kostant count is {expected}")]
    BasisDimension {
        degree: RootSum,
        found: usize,
        expected: usize,
    },
    #[error("element is not in the expected Borel part")]
    NotInBorel,
    #[error("could not invert T_{0} on a generator")]
    BraidInverse(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl QuantumGroup {
    /// `chi^+_lambda` on U^{>=0}: `k_mu -> q^{(lambda, mu)}`, `e_i -> 0`.
    pub fn chi_plus(&self, lambda: &Weight, u: &UElement) -> Result<QScalar, UqError> {
        self.chi(lambda, u, false)
    }

    /// `chi^-_lambda` on U^{<=0}.
    pub fn chi_minus(&self, lambda: &Weight, u: &UElement) -> Result<QScalar, UqError> {
        self.chi(lambda, u, true)
    }

    fn chi(&self, lambda: &Weight, u: &UElement, minus: bool) -> Result<QScalar, UqError> {
        let mut s = QScalar::zero();
        for (m, c) in u.iter() {
            let wrong = if minus { &m.e } else { &m.f };
            if !wrong.is_empty() {
                return Err(UqError::NotInBorel);
            }
            if m.e.is_empty() && m.f.is_empty() {
                s += &(c * &self.datum().q_form(lambda, &m.k));
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, WeylWord};

    fn uq(name: &str) -> QuantumGroup {
        QuantumGroup::new(CartanDatum::preset(name).unwrap())
    }

    #[test]
    fn commutator_a1() {
        let u = uq("A1");
        let d = u.datum();
        let c = u.commutator(&u.e(0), &u.f(0)).unwrap();
        let k = u.k_i(0);
        let kinv = u.k(-d.simple_root(0));
        let qd = d.q_pow(1) - d.q_pow(-1);
        let expect = k.sub(&kinv).scale(&qd.inv().unwrap());
        assert_eq!(c, expect);
    }

    #[test]
    fn k_conjugation() {
        let u = uq("A2");
        let d = u.datum();
        let lam = Weight::new(&[1, 0]);
        let lhs = u.product(&[u.k(lam), u.e(0), u.k(-lam)]).unwrap();
        assert_eq!(lhs, u.e(0).scale(&d.q_form(&lam, &d.simple_root(0))));
        let lhs = u.product(&[u.k(lam), u.f(1), u.k(-lam)]).unwrap();
        assert_eq!(lhs, u.f(1).scale(&d.q_form(&lam, &d.simple_root(1)).inv().unwrap()));
    }

    #[test]
    fn serre_relation_vanishes() {
        for name in ["A2", "B2", "G2"] {
            let u = uq(name);
            let d = u.datum();
            for (i, j) in [(0, 1), (1, 0)] {
                for minus in [false, true] {
                    let m = (1 - d.cartan_entry(i, j)) as usize;
                    let mut s = UElement::zero();
                    for n in 0..=m {
                        let g = if minus { u.f(j) } else { u.e(j) };
                        let t = u
                            .product(&[
                                u.divided_power(minus, i, m - n).unwrap(),
                                g,
                                u.divided_power(minus, i, n).unwrap(),
                            ])
                            .unwrap();
                        let sign = if n % 2 == 0 { QScalar::one() } else { -QScalar::one() };
                        s.add_scaled(&t, &sign);
                    }
                    assert!(s.is_zero(), "{name} serre ({i},{j}) minus={minus}: {s}");
                }
            }
        }
    }

    #[test]
    fn braid_example_a2() {
        let u = uq("A2");
        let t = u.braid(0, &u.e(1)).unwrap();
        let q = u.datum().q_pow(-1);
        let expect = u
            .mul(&u.e(0), &u.e(1))
            .unwrap()
            .sub(&u.mul(&u.e(1), &u.e(0)).unwrap().scale(&q));
        assert_eq!(t, expect);
    }

    #[test]
    fn braid_inverse_roundtrip() {
        let u = uq("A2");
        for i in 0..2 {
            for g in [u.e(0), u.e(1), u.f(0), u.f(1), u.k(Weight::new(&[1, 0]))] {
                let back = u.braid(i, &u.braid_inverse(i, &g).unwrap()).unwrap();
                assert_eq!(back, g);
            }
        }
    }

    #[test]
    fn braid_relation_a2() {
        let u = uq("A2");
        let w1 = WeylWord(vec![0, 1, 0]);
        let w2 = WeylWord(vec![1, 0, 1]);
        for g in [u.e(0), u.e(1), u.f(0), u.f(1)] {
            assert_eq!(u.braid_word(&w1, &g).unwrap(), u.braid_word(&w2, &g).unwrap());
        }
    }

    #[test]
    fn antipode_axiom() {
        let u = uq("A2");
        let x = u.product(&[u.f(0), u.e(1), u.e(0)]).unwrap();
        let delta = u.coproduct(&x).unwrap();
        let lhs = u.contract(&delta, |a| u.antipode(a)).unwrap();
        assert_eq!(lhs, u.scalar(u.counit(&x)));
        let y = u.antipode_inverse(&u.antipode(&x).unwrap()).unwrap();
        assert_eq!(y, x);
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let u = uq("A2");
        let a = u.mul(&u.e(0), &u.f(1)).unwrap();
        let b = u.mul(&u.f(0), &u.e(0)).unwrap();
        let lhs = u.coproduct(&u.mul(&a, &b).unwrap()).unwrap();
        let rhs = u
            .tensor_mul(&u.coproduct(&a).unwrap(), &u.coproduct(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coassociative() {
        let u = uq("B2");
        let x = u.product(&[u.f(1), u.k(Weight::new(&[1, 0])), u.e(0), u.e(1)]).unwrap();
        let d = u.coproduct(&x).unwrap();
        assert_eq!(u.coproduct_at(&d, 0).unwrap(), u.coproduct_at(&d, 1).unwrap());
    }

    #[test]
    fn degree_cap_is_an_error() {
        let u = QuantumGroup::with_max_height(CartanDatum::preset("A1").unwrap(), 2);
        assert!(matches!(u.pow(&u.e(0), 3), Err(UqError::DegreeCap { .. })));
    }

    #[test]
    fn parse_roundtrip() {
        let u = uq("A2");
        let x = parse_element(&u, "e[1]*f[2] - q^-1*k[1,0] + (q - q^-1)*f[1]^2").unwrap();
        let again = parse_element(&u, &x.to_string()).unwrap_or_else(|e| panic!("{x} {e}"));
        assert_eq!(x, again);
    }

    mod props {
        use super::*;
        use crate::cartan::CartanDatum;
        use proptest::prelude::*;

        /// Product of up to three generators of the algebra of the given rank.
        fn monomial(rank: usize) -> impl Strategy<Value = Vec<Generator>> {
            let gen = (0..3u8, 0..rank, -1i32..=1, -1i32..=1).prop_map(move |(kind, i, a, b)| match kind {
                0 => Generator::E(i),
                1 => Generator::F(i),
                _ => Generator::K(Weight::new(&[a, b][..rank])),
            });
            prop::collection::vec(gen, 0..=3)
        }

        fn build(u: &QuantumGroup, gens: &[Generator]) -> UElement {
            u.product(&gens.iter().map(|g| u.generator(g)).collect::<Vec<_>>()).unwrap()
        }

        fn cases() -> impl Strategy<Value = (&'static str, Vec<Generator>, Vec<Generator>, Vec<Generator>)> {
            prop_oneof![Just(("A1", 1usize)), Just(("A2", 2usize)), Just(("B2", 2usize))]
                .prop_flat_map(|(name, r)| (Just(name), monomial(r), monomial(r), monomial(r)))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn multiplication_is_associative((name, a, b, c) in cases()) {
                let u = QuantumGroup::new(CartanDatum::preset(name).unwrap());
                let (a, b, c) = (build(&u, &a), build(&u, &b), build(&u, &c));
                let left = u.mul(&u.mul(&a, &b).unwrap(), &c).unwrap();
                let right = u.mul(&a, &u.mul(&b, &c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn coproduct_and_braid_respect_products((name, a, b, _c) in cases()) {
                // braid images of B2 root vectors need room
                let u = QuantumGroup::with_max_height(CartanDatum::preset(name).unwrap(), 16);
                let (a, b) = (build(&u, &a), build(&u, &b));
                let ab = u.mul(&a, &b).unwrap();
                let lhs = u.coproduct(&ab).unwrap();
                let rhs = u.tensor_mul(&u.coproduct(&a).unwrap(), &u.coproduct(&b).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                for i in 0..u.rank() {
                    let t = u.mul(&u.braid(i, &a).unwrap(), &u.braid(i, &b).unwrap()).unwrap();
                    prop_assert_eq!(u.braid(i, &ab).unwrap(), t);
                }
            }
        }
    }
}
