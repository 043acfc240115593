use super::*;
use crate::cartan::CartanDatum;

fn uq(name: &str, cap: usize) -> QuantumGroup {
    QuantumGroup::with_max_height(CartanDatum::preset(name).unwrap(), cap)
}

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

fn rs(c: &[i32]) -> RootSum {
    RootSum::new(c)
}

#[test]
fn relations_a1() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[2]));
    let win = DWindow::new(&a);
    let r = relations_check(&win).unwrap();
    for rel in &r.relations {
        assert!(rel.failures.is_empty(), "{}: {:?}", rel.name, rel.failures);
    }
    assert!(r.pass);
}

#[test]
fn relations_a2() {
    let u = uq("A2", 8);
    let a = CoordAlgebra::new(&u, w(&[1, 1]));
    let r = relations_check(&DWindow::new(&a)).unwrap();
    for rel in &r.relations {
        assert!(rel.failures.is_empty(), "{}: {:?}", rel.name, rel.failures);
    }
}

#[test]
fn right_through_left_a1() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[3]));
    let win = DWindow::new(&a);
    let pairing = Pairing::new(&u);
    for g in [w(&[1]), w(&[2])] {
        for psi in a.basis(&g).unwrap() {
            let r = lemma_rl_check(&win, &pairing, &psi).unwrap();
            assert!(r.pass(), "{r:?}");
        }
    }
}

#[test]
fn right_through_left_a2() {
    let u = uq("A2", 8);
    let a = CoordAlgebra::new(&u, w(&[2, 1]));
    let win = DWindow::new(&a);
    let pairing = Pairing::new(&u);
    for psi in a.basis(&w(&[1, 0])).unwrap() {
        let r = lemma_rl_check(&win, &pairing, &psi).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}

#[test]
fn braid_conjugation_a1() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[3]));
    let r = z_w_check(&DWindow::new(&a), 0).unwrap();
    let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).map(|c| &c.name).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn braid_conjugation_a2() {
    let u = uq("A2", 8);
    let a = CoordAlgebra::new(&u, w(&[1, 1]));
    let win = DWindow::new(&a);
    for i in 0..2 {
        let r = z_w_check(&win, i).unwrap();
        let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).map(|c| &c.name).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}

#[test]
fn theta_matches_right_verma_a1() {
    let u = uq("A1", 10);
    let rep = ThetaRep::new(&u);
    let probes = [w(&[0]), w(&[1]), w(&[2]), w(&[-1])];
    let r = theta_build(&rep, 4, &probes).unwrap();
    let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn theta_matches_right_verma_a2() {
    let u = uq("A2", 10);
    let rep = ThetaRep::new(&u);
    let probes = [w(&[0, 0]), w(&[1, 0]), w(&[0, 1]), w(&[2, 0]), w(&[0, 2]), w(&[1, 1])];
    let r = theta_build(&rep, 3, &probes).unwrap();
    let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn theta_faithfulness_on_a_window() {
    let u = uq("A1", 8);
    let rep = ThetaRep::new(&u);
    let probes = [w(&[0]), w(&[1]), w(&[2])];
    let span = vec![
        vec![ThetaGen::E(0), ThetaGen::F(0)],
        vec![ThetaGen::F(0), ThetaGen::E(0)],
        vec![ThetaGen::K(w(&[1]))],
        vec![],
    ];
    let r = theta_faithfulness(&rep, 3, &probes, &span).unwrap();
    assert_eq!(r.rank, 4);
    assert!(r.independent);

    let mut dup = span.clone();
    dup.push(vec![ThetaGen::K(w(&[1]))]);
    let r = theta_faithfulness(&rep, 3, &probes, &dup).unwrap();
    assert_eq!(r.rank, 4);
    assert!(!r.independent);
}

#[test]
fn casimir_a1() {
    let u = uq("A1", 8);
    let c = center_solve(&u, 1, 2).unwrap();
    assert!(c.invariant);
    // the unit and one quadratic element
    assert_eq!(c.dimension, 2);
    let weights: Vec<Weight> = (-3..=3).map(|k| w(&[k])).collect();
    for row in linkage_scan(&u, &c.elements, &weights) {
        assert_eq!(row.equal_characters, row.linked, "{row:?}");
    }
    let casimir = c
        .elements
        .iter()
        .find(|z| z.hc_image.len() > 1)
        .expect("a non-scalar central element");
    let a = CoordAlgebra::new(&u, w(&[3]));
    assert!(acts_through_sigma(&DWindow::new(&a), casimir).unwrap());

    let zero = w(&[0]);
    let ok = annihilator_check(&u, casimir, &zero, &zero, &rs(&[4])).unwrap();
    assert!(ok.annihilates);
    let wrong = annihilator_check(&u, casimir, &w(&[2]), &zero, &rs(&[4])).unwrap();
    assert!(!wrong.annihilates);
    // 2w and -4w are linked
    let linked = annihilator_check(&u, casimir, &w(&[-4]), &w(&[2]), &rs(&[4])).unwrap();
    assert!(linked.annihilates);
}

#[test]
fn window_growth_keeps_answers() {
    let u = uq("A1", 8);
    let small = CoordAlgebra::new(&u, w(&[2]));
    let large = CoordAlgebra::new(&u, w(&[4]));
    let (ws, wl) = (DWindow::new(&small), DWindow::new(&large));
    let e = u.e(0);
    let (ps, pl) = (ws.partial(&e).unwrap(), wl.partial(&e).unwrap());
    assert_eq!(ps.agrees(&pl), Some(true));
    assert!(pl.domain().count() > ps.domain().count());
    assert!(relations_check(&wl).unwrap().pass);
}

#[test]
fn composition_outside_the_window_is_empty() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[1]));
    let win = DWindow::new(&a);
    let phi = &a.basis(&w(&[1])).unwrap()[0];
    let l = win.left(phi).unwrap();
    let ll = l.then(&l);
    assert_eq!(ll.domain().count(), 0);
    assert_eq!(ll.agrees(&ll), None);
    assert!(matches!(win.zero(&w(&[2])), Err(DmodError::EmptyDomain(_))));
}


#[test]
fn corrupted_sigma_is_caught() {
    let u = uq("A1", 8);
    let a = CoordAlgebra::new(&u, w(&[2]));
    let r = relations_check(&DWindow::new(&a).with_fault()).unwrap();
    assert!(!r.pass);
    let bad = r.relations.iter().find(|c| !c.failures.is_empty()).unwrap();
    assert!(bad.failures[0].contains("basis vector"), "{:?}", bad.failures);
}
