use super::*;
use crate::cartan::{CartanDatum, CharacterPoly, WeylWord};
use crate::linalg::Mat;
use crate::scalars::{exp_t_coefficient, QScalar};
use crate::uqg::QuantumGroup;

fn uq(name: &str) -> QuantumGroup {
    QuantumGroup::new(CartanDatum::preset(name).unwrap())
}

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

#[test]
fn verma_character_and_relations() {
    let u = uq("A2");
    let lam = w(&[1, -1]);
    let depth = RootSum::new(&[2, 2]);
    for m in [
        verma(&u, &lam, &depth).unwrap(),
        verma_right(&u, &lam, &depth).unwrap(),
        dual_verma(&u, &lam, &depth).unwrap(),
        dual_verma_right(&u, &lam, &depth).unwrap(),
    ] {
        assert_eq!(m.character(), u.datum().verma_character(&lam, &depth));
        let r = check_relations(&m);
        assert!(r.ok(), "{:?}", r.failures);
        assert!(r.checked > 0);
    }
}

#[test]
fn verma_a1_zero_weight() {
    let u = uq("A1");
    let t = verma(&u, &w(&[0]), &RootSum::new(&[3])).unwrap();
    let fv = t.f[0].apply(&t.unit(0));
    assert!(crate::linalg::is_zero_vec(&t.e[0].apply(&fv)));
    let t0 = verma(&u, &w(&[5]), &RootSum::new(&[0])).unwrap();
    assert_eq!(t0.dim(), 1);
}

#[test]
fn double_dual_is_identity() {
    let u = uq("B2");
    let t = verma(&u, &w(&[1, 1]), &RootSum::new(&[2, 1])).unwrap();
    let back = t.restricted_dual().restricted_dual();
    assert_eq!(back.e, t.e);
    assert_eq!(back.f, t.f);
    assert_eq!(back.side, t.side);
}

#[test]
fn simple_dimensions() {
    let u = uq("A1");
    for n in 0..=6 {
        let v = simple(&u, &w(&[n])).unwrap();
        assert_eq!(v.dim(), n as usize + 1);
        assert!(v.character().iter().all(|(_, &m)| m == 1));
    }
    let u2 = uq("A2");
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (3, 0), (1, 2)] {
        let lam = w(&[a, b]);
        let v = simple(&u2, &lam).unwrap();
        assert_eq!(v.character(), u2.datum().weyl_character(&lam).unwrap());
        assert!(check_relations(&v).ok());
        for i in 0..2 {
            assert!(crate::linalg::is_zero_vec(&v.e[i].apply(&v.unit(0))));
        }
    }
    assert_eq!(simple(&u2, &w(&[1, 1])).unwrap().dim(), 8);
    assert_eq!(simple(&uq("B2"), &w(&[1, 1])).unwrap().dim(), 16);
    assert_eq!(simple(&uq("G2"), &w(&[1, 0])).unwrap().dim(), 7);
    assert!(matches!(simple(&u2, &w(&[1, -1])), Err(WmodError::NotDominant(_))));
}

#[test]
fn truncated_simple_keeps_top() {
    let u = uq("A2");
    let lam = w(&[2, 1]);
    let full = simple(&u, &lam).unwrap();
    let top = simple_truncated(&u, &lam, &RootSum::new(&[1, 1])).unwrap();
    assert!(top.is_truncated());
    let ch = top.character();
    for (wt, &m) in ch.iter() {
        assert_eq!(full.character().get(wt), m);
    }
    assert!(check_relations(&top).ok());
}

#[test]
fn tensor_character() {
    let u = uq("A1");
    let v1 = simple(&u, &w(&[1])).unwrap();
    let t = tensor(&v1, &v1).unwrap();
    let d = u.datum();
    let expect = d.weyl_character(&w(&[2])).unwrap().add(&d.weyl_character(&w(&[0])).unwrap());
    assert_eq!(t.character(), expect);
    assert!(check_relations(&t).ok());
    assert_eq!(t.weights[t.highest.unwrap()], w(&[2]));
    let triv = simple(&u, &w(&[0])).unwrap();
    let t0 = tensor(&triv, &v1).unwrap();
    assert_eq!(t0.e, v1.e);
    assert_eq!(t0.f, v1.f);
    let u2 = uq("A2");
    let a = simple(&u2, &w(&[1, 0])).unwrap();
    let b = simple(&u2, &w(&[0, 1])).unwrap();
    let ab = tensor(&a, &b).unwrap();
    assert!(check_relations(&ab).ok());
    assert_eq!(ab.character(), a.character().mul(&b.character()));
}

#[test]
fn braid_on_trivial_and_fundamental() {
    let u = uq("A1");
    let triv = simple(&u, &w(&[0])).unwrap();
    assert_eq!(braid_operator(&triv, 0).unwrap(), Mat::identity(1));
    let v = simple(&u, &w(&[1])).unwrap();
    let t = braid_operator(&v, 0).unwrap();
    let image = t.apply(&v.unit(0));
    let fv = v.f[0].apply(&v.unit(0));
    // image is a nonzero multiple of f v
    let k = fv.iter().position(|x| !x.is_zero()).unwrap();
    let c = &image[k] / &fv[k];
    assert!(!c.is_zero());
    let scaled: Vec<QScalar> = fv.iter().map(|x| x * &c).collect();
    assert_eq!(image, scaled);
}

#[test]
fn braid_maps_weight_spaces() {
    let u = uq("A2");
    let d = u.datum();
    let v = simple(&u, &w(&[1, 1])).unwrap();
    for word in d.weyl_group() {
        let t = braid_word_operator(&v, &word).unwrap();
        for col in 0..v.dim() {
            let target = d.weyl_act(&word, &v.weights[col]);
            for row in 0..v.dim() {
                if !t[(row, col)].is_zero() {
                    assert_eq!(v.weights[row], target);
                }
            }
        }
    }
}

#[test]
fn braid_relation_on_modules() {
    let u = uq("A2");
    for lam in [w(&[1, 0]), w(&[1, 1])] {
        let v = simple(&u, &lam).unwrap();
        let a = braid_word_operator(&v, &WeylWord(vec![0, 1, 0])).unwrap();
        let b = braid_word_operator(&v, &WeylWord(vec![1, 0, 1])).unwrap();
        assert_eq!(a, b);
    }
    let ub = uq("B2");
    let v = simple(&ub, &w(&[1, 0])).unwrap();
    let a = braid_word_operator(&v, &WeylWord(vec![0, 1, 0, 1])).unwrap();
    let b = braid_word_operator(&v, &WeylWord(vec![1, 0, 1, 0])).unwrap();
    assert_eq!(a, b);
}

#[test]
fn braid_intertwines_algebra_automorphism() {
    // T_i(u v) = (-1)^{<beta, alpha_i^vee>} T_i(u) T_i(v) for u of degree beta;
    // the sign is a property of the displayed operator, not of the algebra map
    for (name, lam) in [("A2", w(&[1, 1])), ("B2", w(&[1, 1])), ("G2", w(&[1, 0]))] {
        let u = uq(name);
        let d = u.datum();
        let v = simple(&u, &lam).unwrap();
        for i in 0..2 {
            let t = braid_operator(&v, i).unwrap();
            for j in 0..2 {
                let sign = if d.cartan_entry(i, j) % 2 == 0 { QScalar::one() } else { -QScalar::one() };
                for g in [u.e(j), u.f(j)] {
                    let lhs = t.mul(&v.act_matrix(&g));
                    let rhs = v.act_matrix(&u.braid(i, &g).unwrap()).mul(&t).scale(&sign);
                    assert!(lhs == rhs, "{name}: T_{} on {}", i + 1, g);
                }
            }
            let k = u.k(w(&[1, 0]));
            assert_eq!(t.mul(&v.act_matrix(&k)), v.act_matrix(&u.braid(i, &k).unwrap()).mul(&t));
        }
    }
}

#[test]
fn tensor_braid_lemma_a1() {
    let u = uq("A1");
    let d = u.datum();
    let l0 = d.l0();
    let v = simple(&u, &w(&[1])).unwrap();
    let vv = tensor(&v, &v).unwrap();
    let t = braid_operator(&vv, 0).unwrap();
    let t1 = braid_operator(&v, 0).unwrap();
    let tt = t1.kron(&t1);
    let qi = d.q_i(0);
    let qi_inv = qi.inv().unwrap();
    let a = d.simple_root(0);
    let diff = &qi - &qi_inv;
    let exp = |x: &Mat| {
        let mut out = Mat::identity(x.rows());
        let mut p = Mat::identity(x.rows());
        for n in 1..=4 {
            p = p.mul(x);
            out = out.add(&p.scale(&exp_t_coefficient(n, 1, false, l0)));
        }
        out
    };
    let left = v.e[0].mul(&v.k_matrix(&-a)).kron(&v.f[0].mul(&v.k_matrix(&a)));
    let first = exp(&left.scale(&(&(&qi_inv * &qi_inv) * &diff))).mul(&tt);
    assert_eq!(t, first);
    let right = v.f[0].kron(&v.e[0]);
    let second = tt.mul(&exp(&right.scale(&diff)));
    assert_eq!(t, second);
}

#[test]
fn braid_inverse_on_highest_tensor() {
    // T_w^{-1}(l (x) v) = T_w^{-1}(l) (x) T_w^{-1}(v) for l a highest vector
    for (name, lam, mu) in [("A1", w(&[2]), w(&[1])), ("A2", w(&[1, 0]), w(&[1, 1]))] {
        let u = uq(name);
        let d = u.datum();
        let a = simple(&u, &lam).unwrap();
        let b = simple(&u, &mu).unwrap();
        let ab = tensor(&a, &b).unwrap();
        for word in d.weyl_group() {
            let inv = |m: &WeightModule| braid_word_operator(m, &word).unwrap().inverse().unwrap();
            let (ta, tb, tab) = (inv(&a), inv(&b), inv(&ab));
            let l = a.unit(0);
            for k in 0..b.dim() {
                let lhs = tab.apply(&ab.unit(k));
                let la = ta.apply(&l);
                let vb = tb.apply(&b.unit(k));
                let mut rhs = ab.zero_vec();
                for (x, cx) in la.iter().enumerate() {
                    for (y, cy) in vb.iter().enumerate() {
                        rhs[x * b.dim() + y] = cx * cy;
                    }
                }
                assert_eq!(lhs, rhs, "{name} {word}");
            }
        }
    }
}

#[test]
fn transpose_braid_is_invertible() {
    let u = uq("A2");
    let vs = dual_simple(&u, &w(&[1, 1])).unwrap();
    let word = u.datum().longest_element();
    let t = transpose_braid(&vs, &word).unwrap();
    let inv = t.inverse().unwrap();
    assert_eq!(t.mul(&inv), Mat::identity(vs.dim()));
    assert!(matches!(braid_operator(&vs, 0), Err(WmodError::SideMismatch)));
    let tr = verma(&u, &w(&[1, 0]), &RootSum::new(&[1, 1])).unwrap();
    assert!(matches!(braid_operator(&tr, 0), Err(WmodError::Truncated)));
}

#[test]
fn lowering_map_is_bijective_for_large_weights() {
    let u = uq("A2");
    let lam = w(&[2, 2]);
    let v = simple(&u, &lam).unwrap();
    for g in RootSum::new(&[2, 2]).box_below() {
        let b = u.basis(&g).unwrap();
        let images: Vec<Vec<QScalar>> = b
            .standard
            .iter()
            .map(|word| v.act(&u.word_element(true, word).unwrap(), &v.unit(0)))
            .collect();
        let m = Mat::from_columns(v.dim(), &images);
        assert_eq!(m.rank(), b.dim());
        let target = lam - u.datum().root_to_weight(&g);
        assert_eq!(v.character().get(&target) as usize, b.dim());
    }
}

#[test]
fn export_is_json() {
    let u = uq("A1");
    let v = simple(&u, &w(&[2])).unwrap();
    let s = serde_json::to_string(&v.export()).unwrap();
    assert!(s.contains("\"dim\":3"));
    let _ = CharacterPoly::new();
}
