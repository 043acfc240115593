use super::*;
use crate::cartan::CartanDatum;
use crate::uqg::QuantumGroup;

fn uq(name: &str, cap: usize) -> QuantumGroup {
    QuantumGroup::with_max_height(CartanDatum::preset(name).unwrap(), cap)
}

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

#[test]
fn trivial_mu_is_the_algebra() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[3]));
    let e = EBimodule::new(&a, &w(&[0])).unwrap();
    assert_eq!(e.layers.len(), 1);
    for x in a.basis(&w(&[1])).unwrap() {
        for y in a.basis(&w(&[2])).unwrap() {
            let ey = e.pure(&[QScalar::one()], &y);
            assert_eq!(e.left_mul(&x, &ey).unwrap().vector, a.mul(&x, &y).unwrap().vector);
        }
    }
}

#[test]
fn bimodule_a1() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[5]));
    for mu in [1, 2] {
        let e = EBimodule::new(&a, &w(&[mu])).unwrap();
        let r = e.check_bimodule(&[w(&[0]), w(&[1]), w(&[2])]).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        for (lam, xi) in [(0, 1), (1, 1), (1, 2)] {
            assert!(e.flag_is_stable(&w(&[lam]), &w(&[xi])).unwrap());
        }
    }
}

#[test]
fn left_action_mixes_tensor_factors() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[2]));
    let e = EBimodule::new(&a, &w(&[1])).unwrap();
    // highest vector of V(1) against the lowest element of A(1)
    let high = e.embed(&e.vmu.unit(0)).unwrap();
    let psi = &a.basis(&w(&[1])).unwrap()[1];
    let out = e.left_mul(psi, &high).unwrap();
    let support: Vec<usize> = (0..out.vector.len()).filter(|&i| !out.vector[i].is_zero()).collect();
    assert!(support.iter().any(|&i| i / 2 == 1), "{support:?}");
    assert!(support.iter().any(|&i| i / 2 == 0), "{support:?}");
}

#[test]
fn bimodule_a2() {
    let u = uq("A2", 8);
    let a = CoordAlgebra::new(&u, w(&[2, 1]));
    let e = EBimodule::new(&a, &w(&[1, 0])).unwrap();
    let r = e.check_bimodule(&[w(&[0, 0]), w(&[1, 0]), w(&[0, 1])]).unwrap();
    assert!(r.ok(), "{:?}", r.failures);
    assert!(e.flag_is_stable(&w(&[1, 0]), &w(&[0, 1])).unwrap());
}

#[test]
fn layers_and_commutation() {
    let u = uq("A1", 8);
    let d = u.datum();
    let a = CoordAlgebra::new(&u, w(&[4]));
    let e = EBimodule::new(&a, &w(&[2])).unwrap();
    let nus: Vec<Weight> = e.layers.iter().map(|l| l.weight).collect();
    assert_eq!(nus, vec![w(&[-2]), w(&[0]), w(&[2])]);
    assert_eq!(e.lambda0, w(&[2]));
    for (i, x) in nus.iter().enumerate() {
        for (j, y) in nus.iter().enumerate() {
            if (*x - *y).is_dominant() {
                assert!(i >= j);
            }
        }
    }
    for g in [w(&[1]), w(&[2])] {
        for phi in a.basis(&g).unwrap() {
            let xi = phi.weight.unwrap();
            for k in 0..3 {
                let s = e.commutation_scalar(k, &phi).unwrap();
                assert_eq!(s, d.q_form(&nus[k], &xi).inv().unwrap());
            }
        }
    }
    let e1 = EBimodule::new(&a, &w(&[1])).unwrap();
    let phi = &a.basis(&w(&[1])).unwrap()[0];
    // (w, w) = 1/2 in A1
    assert_eq!(e1.commutation_scalar(1, phi).unwrap(), QScalar::t_pow(2, -1));
    let mid = e.commutation_scalar(1, phi).unwrap();
    assert!(mid.is_one());
}

#[test]
fn commutation_a2() {
    let u = uq("A2", 8);
    let d = u.datum();
    let a = CoordAlgebra::new(&u, w(&[1, 1]));
    let e = EBimodule::new(&a, &w(&[1, 0])).unwrap();
    for phi in a.basis(&w(&[0, 1])).unwrap() {
        for (k, layer) in e.layers.iter().enumerate() {
            let s = e.commutation_scalar(k, &phi).unwrap();
            assert_eq!(s, d.q_form(&layer.weight, &phi.weight.unwrap()).inv().unwrap());
        }
    }
}

#[test]
fn layer_characters() {
    let u = uq("A1", 8);
    let d = u.datum();
    let a = CoordAlgebra::new(&u, w(&[4]));
    let e = EBimodule::new(&a, &w(&[2])).unwrap();
    let lam = w(&[2]);
    for (k, top) in [0, 2, 4].into_iter().enumerate() {
        assert_eq!(e.layer_character(k, &lam).unwrap(), d.weyl_character(&w(&[top])).unwrap());
    }
    assert!(e.layer_characters_add_up(&lam).unwrap());
    assert!(matches!(e.layer_character(0, &w(&[1])), Err(EmodError::OutsideCone { .. })));
    assert_eq!(e.highest_weight_multiplicities(&lam).unwrap(), vec![1, 1, 1]);

    let u2 = uq("A2", 8);
    let a2 = CoordAlgebra::new(&u2, w(&[2, 1]));
    let e2 = EBimodule::new(&a2, &w(&[1, 0])).unwrap();
    assert_eq!(e2.lambda0, w(&[1, 1]));
    assert!(e2.layer_characters_add_up(&w(&[1, 1])).unwrap());
}

#[test]
fn key_lemma_instances() {
    let a1 = CartanDatum::preset("A1").unwrap();
    let r = key_lemma(&a1, &w(&[0]), &w(&[2])).unwrap();
    assert!(r.lowest.applicable && r.lowest.holds);
    let linked: Vec<bool> = r.lowest.layers.iter().map(|l| l.linked).collect();
    assert_eq!(linked, vec![true, false, false]);
    assert!(r.pass());

    let a2 = CartanDatum::preset("A2").unwrap();
    let r = key_lemma(&a2, &w(&[1, 0]), &w(&[1, 1])).unwrap();
    assert!(r.highest.applicable && r.highest.holds);
    assert!(r.highest.layers.last().unwrap().linked);
    assert_eq!(r.highest.layers.iter().filter(|l| l.linked).count(), 1);

    // lambda + rho is not dominant: the lowest-layer check is only reported
    let r = key_lemma(&a1, &w(&[-3]), &w(&[2])).unwrap();
    assert!(!r.lowest.applicable);
    assert!(!r.lowest.holds);
    assert!(r.pass());

    let r = key_lemma(&a2, &w(&[2, 3]), &w(&[0, 0])).unwrap();
    assert!(r.lowest.holds && r.highest.holds);
}
