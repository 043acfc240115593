//! Suites on the coordinate ring `A`, its localisations and the bimodules
//! `E^mu`.

use super::{Outcome, Suite, SuiteConfig, VerifyError};
use crate::cartan::{RootSum, Weight, WeylWord};
use crate::coord::{dominant_below, CoordAlgebra, CoordElement, OreSide};
use crate::emod::{key_lemma as key_lemma_report, EBimodule};
use crate::scalars::QScalar;
use crate::uqg::QuantumGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(a: &CoordAlgebra, grades: &[Weight], rng: &mut ChaCha8Rng) -> Result<CoordElement, VerifyError> {
    let g = grades[rng.gen_range(0..grades.len())];
    let n = a.dim(&g)?;
    let v = (0..n).map(|_| QScalar::from_int(rng.gen_range(-2..=2))).collect();
    Ok(a.element(&g, v)?)
}

fn show_vector(x: &CoordElement) -> String {
    let parts: Vec<String> = x.vector.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Associativity on every basis triple of grades `<= w_1 + ... + w_r`
/// (rank 1: `<= 3w`), sampled associativity and the domain property on
/// random combinations, and the rank conditions of multiplication
/// `A(l) (x) A(m) -> A(l+m)` and of the chart cover.
pub(super) fn coord(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let small = if rank == 1 { Weight::new(&[3]) } else { cfg.uniform(1) };
    let cutoff = cfg.cutoff.unwrap_or(small + small + small);
    let cap = 2 * cutoff.coords().iter().sum::<i32>() as usize;
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), cap.max(8));
    let d = uq.datum();
    let a = CoordAlgebra::new(&uq, cutoff);
    let mut out = Vec::new();

    let grades = dominant_below(&small);
    let elems: Vec<CoordElement> = grades
        .iter()
        .map(|g| a.basis(g))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut bad = None;
    let mut count = 0usize;
    'outer: for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let xy = a.mul(x, y)?;
            for (k, z) in elems.iter().enumerate() {
                count += 1;
                if a.mul(&xy, z)? != a.mul(x, &a.mul(y, z)?)? {
                    bad = Some(format!("basis elements #{i}, #{j}, #{k} (grades {}, {}, {})", x.grade, y.grade, z.grade));
                    break 'outer;
                }
            }
        }
    }
    out.push(Outcome::new(Suite::Coord, format!("associative on {count} basis triples"), bad));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let nonzero: Vec<Weight> = grades.iter().copied().filter(|g| !g.is_zero()).collect();
    for n in 0..5 {
        let x = random_element(&a, &nonzero, &mut rng)?;
        let y = random_element(&a, &nonzero, &mut rng)?;
        let z = random_element(&a, &nonzero, &mut rng)?;
        let xy = a.mul(&x, &y)?;
        let ok = a.mul(&xy, &z)? == a.mul(&x, &a.mul(&y, &z)?)?;
        let tag = format!("grades {}, {}, {}", x.grade, y.grade, z.grade);
        out.push(Outcome::check(Suite::Coord, format!("sampled associativity #{n}: {tag}"), ok, || tag.clone()));
        let domain = x.is_zero() || y.is_zero() || !xy.is_zero();
        let show = format!("x = {} in A({}), y = {} in A({})", show_vector(&x), x.grade, show_vector(&y), y.grade);
        out.push(Outcome::check(Suite::Coord, format!("sampled domain check #{n}"), domain, || show));
    }

    let mut pairs = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            pairs.push((d.fundamental(i), d.fundamental(j)));
        }
        pairs.push((small, d.fundamental(i)));
    }
    for (l, m) in &pairs {
        if !(*l + *m).le_componentwise(&cutoff) {
            continue;
        }
        let (r, n) = a.product_rank(l, m)?;
        out.push(Outcome::check(Suite::Coord, format!("A({l}) A({m}) = A({})", *l + *m), r == n, || {
            format!("rank {r} of {n}")
        }));
        let (r, n) = a.chart_cover_rank(l, m)?;
        out.push(Outcome::check(Suite::Coord, format!("charts cover A({})", *l + *m), r == n, || {
            format!("sum over w of A({l}) c^w_{m} has rank {r} of {n}")
        }));
    }
    Ok(out)
}

/// Left and right Ore witnesses for every basis element of `A(w_1)` and
/// every extremal `c^w_{w_i}`, re-verified by multiplication.
pub(super) fn ore(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let cutoff = cfg.cutoff.unwrap_or(cfg.uniform(if rank == 1 { 4 } else { 2 }));
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), 12);
    let d = uq.datum();
    let a = CoordAlgebra::new(&uq, cutoff);
    let phis = a.basis(&d.fundamental(0))?;
    let mut out = Vec::new();
    for w in d.weyl_group() {
        for i in 0..rank {
            let s = a.extremal(&w, &d.fundamental(i))?;
            for side in [OreSide::Left, OreSide::Right] {
                let mut bad = None;
                for (k, phi) in phis.iter().enumerate() {
                    let wit = match a.ore_witness(phi, &s, side) {
                        Ok(wit) => wit,
                        Err(e) => {
                            bad.get_or_insert_with(|| format!("basis element #{k}: {e}"));
                            continue;
                        }
                    };
                    let (l, r) = match side {
                        OreSide::Left => (a.mul(&wit.t.element, phi)?, a.mul(&wit.psi, &s.element)?),
                        OreSide::Right => (a.mul(phi, &wit.t.element)?, a.mul(&s.element, &wit.psi)?),
                    };
                    if l != r {
                        bad.get_or_insert_with(|| format!("basis element #{k}: witness in A({}) fails", wit.aux_grade));
                    }
                }
                let name = format!("{side:?} witnesses for A({}) against c^{w}_{}", d.fundamental(0), d.fundamental(i))
                    .to_lowercase();
                out.push(Outcome::new(Suite::Ore, name, bad));
            }
        }
    }
    Ok(out)
}

/// Characters of the degree-`lambda` part of the localisation at the
/// identity chart against the dual Verma character `ch T*(lambda)`.
pub(super) fn localization(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let mut out = Vec::new();
    let (uq, depth, cutoff, lambdas) = if rank == 1 {
        let depth = cfg.depth.unwrap_or(RootSum::new(&[3]));
        let lambdas: Vec<Weight> = [0, 1, -1, 2].iter().map(|&c| Weight::new(&[c])).collect();
        (QuantumGroup::with_max_height(cfg.datum.clone(), 9), depth, Weight::new(&[9]), lambdas)
    } else {
        let depth = cfg.depth.unwrap_or(RootSum::new(&vec![3; rank]));
        let d = &cfg.datum;
        let lambdas = vec![Weight::zero(rank), -d.fundamental(0)];
        (QuantumGroup::with_max_height(cfg.datum.clone(), 8), depth, cfg.uniform(4), lambdas)
    };
    let d = uq.datum();
    let a = if rank == 1 {
        CoordAlgebra::new(&uq, cutoff)
    } else {
        CoordAlgebra::with_depth(&uq, cutoff, depth)
    };
    for lam in lambdas {
        let got = a.localized_character(&WeylWord::identity(), &lam, &depth)?;
        let expect = d.verma_character(&lam, &depth);
        let why = || format!("localised {got} vs dual Verma {expect}");
        out.push(Outcome::check(Suite::Localization, format!("degree {lam} to depth {depth}"), got == expect, why));
    }
    Ok(out)
}

/// Bimodule axiom, layer commutation scalars and layer characters of
/// `E^mu` for `mu = w, 2w` (rank 1) or `mu = w_1` (otherwise).
pub(super) fn bimodule(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let uq = QuantumGroup::new(cfg.datum.clone());
    let d = uq.datum();
    let (cutoff, mus, grades) = if rank == 1 {
        let g = (0..3).map(|c| Weight::new(&[c])).collect::<Vec<_>>();
        (Weight::new(&[5]), vec![Weight::new(&[1]), Weight::new(&[2])], g)
    } else {
        let mut g = vec![Weight::zero(rank)];
        g.extend((0..rank).map(|i| d.fundamental(i)));
        let mut cutoff = cfg.uniform(1);
        cutoff[0] = 2;
        (cutoff, vec![d.fundamental(0)], g)
    };
    let cutoff = cfg.cutoff.unwrap_or(cutoff);
    let a = CoordAlgebra::new(&uq, cutoff);
    let mut out = Vec::new();
    for mu in &mus {
        let e = EBimodule::new(&a, mu)?;
        let r = e.check_bimodule(&grades)?;
        let why = || {
            r.failures
                .first()
                .cloned()
                .unwrap_or_else(|| format!("unit {} embedding {}", r.unit_ok, r.embedding_ok))
        };
        out.push(Outcome::check(Suite::Bimodule, format!("E^{mu} bimodule axiom"), r.ok(), why));

        let mut bad = None;
        for g in grades.iter().filter(|g| !g.is_zero()) {
            for phi in a.basis(g)? {
                let xi = phi.weight.expect("basis elements are weight vectors");
                for (k, layer) in e.layers.iter().enumerate() {
                    let s = e.commutation_scalar(k, &phi)?;
                    let expect = d.q_form(&layer.weight, &xi).inv().expect("powers of q are units");
                    if s != expect {
                        bad.get_or_insert_with(|| format!("layer {k}, element of weight {xi}: {s} vs {expect}"));
                    }
                }
            }
        }
        out.push(Outcome::new(Suite::Bimodule, format!("E^{mu} layer commutation scalars"), bad));

        let lam = e.lambda0;
        if lam.le_componentwise(&cutoff) {
            let ok = e.layer_characters_add_up(&lam)?;
            out.push(Outcome::check(Suite::Bimodule, format!("E^{mu} layer characters at {lam}"), ok, || {
                "layer characters do not sum to ch V(mu) ch V(lambda)".into()
            }));
        }
    }
    Ok(out)
}

/// The linkage criteria for the lowest and highest layers. Where `lambda`
/// is outside the stated range the report is kept but not asserted.
pub(super) fn key_lemma(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let d = &cfg.datum;
    let w = |c: &[i32]| Weight::new(c);
    let instances: Vec<(Weight, Weight)> = if cfg.rank() == 1 {
        vec![(w(&[0]), w(&[2])), (w(&[1]), w(&[1])), (w(&[2]), w(&[2])), (w(&[-3]), w(&[2]))]
    } else {
        let (f1, f2) = (d.fundamental(0), d.fundamental(1));
        vec![(f1, d.rho()), (Weight::zero(2), f1), (f1 + f2 + f2, f2), (-f1 - f1 - f1, f1)]
    };
    let mut out = Vec::new();
    for (lam, mu) in instances {
        let r = key_lemma_report(d, &lam, &mu)?;
        for (which, check) in [("lowest", &r.lowest), ("highest", &r.highest)] {
            let linked: Vec<String> = check.layers.iter().map(|l| format!("{}:{}", l.nu, l.linked)).collect();
            let mut name = format!("lambda {lam} mu {mu} {which} layer");
            if !check.applicable {
                name.push_str(&format!(" (outside range, reported: holds = {})", check.holds));
            }
            let ok = !check.applicable || check.holds;
            out.push(Outcome::check(Suite::KeyLemma, name, ok, || linked.join(" ")));
        }
    }
    Ok(out)
}
