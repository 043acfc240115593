//! Suites on the ring of q-differential operators.

use super::{Outcome, Suite, SuiteConfig, VerifyError};
use crate::cartan::{RootSum, Weight};
use crate::coord::CoordAlgebra;
use crate::dmod::{
    acts_through_sigma, annihilator_check, center_solve, lemma_rl_check, linkage_scan, relations_check, theta_build,
    theta_faithfulness, z_w_check, CenterElement, DWindow, ThetaGen, ThetaRep,
};
use crate::rmatrix::Pairing;
use crate::uqg::QuantumGroup;

/// `2 w_1`: the smallest window in which `l_phi l_psi` can be compared for
/// `phi, psi` in `A(w_1)`.
fn default_window(cfg: &SuiteConfig) -> Weight {
    cfg.cutoff.unwrap_or_else(|| {
        let w = cfg.datum.fundamental(0);
        w + w
    })
}

pub(super) fn relations(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let cutoff = default_window(cfg);
    let a = CoordAlgebra::new(&uq, cutoff);
    let mut win = DWindow::new(&a);
    if cfg.fault {
        win = win.with_fault();
    }
    let r = relations_check(&win)?;
    Ok(r.relations
        .into_iter()
        .map(|rel| {
            let ok = rel.failures.is_empty() && rel.instances > 0;
            let why = || {
                rel.failures
                    .first()
                    .cloned()
                    .unwrap_or_else(|| "no instance fits the window".into())
            };
            Outcome::check(Suite::Relations, format!("cutoff {cutoff}: {}", rel.name), ok, why)
        })
        .collect())
}

/// Both forms for every basis element of `A(w_i)` inside the window.
pub(super) fn lemma_rl(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let d = uq.datum();
    let cutoff = default_window(cfg);
    let a = CoordAlgebra::new(&uq, cutoff);
    let win = DWindow::new(&a);
    let pairing = Pairing::new(&uq);
    let mut out = Vec::new();
    for i in 0..cfg.rank() {
        let g = d.fundamental(i);
        if !g.le_componentwise(&cutoff) {
            continue;
        }
        for (k, psi) in a.basis(&g)?.iter().enumerate() {
            let r = lemma_rl_check(&win, &pairing, psi)?;
            let why = || format!("r via l: {}, l via r: {}", r.right_via_left, r.left_via_right);
            out.push(Outcome::check(Suite::LemmaRl, format!("cutoff {cutoff}: A({g}) #{k}"), r.pass(), why));
        }
    }
    Ok(out)
}

pub(super) fn zw(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let cutoff = default_window(cfg);
    let a = CoordAlgebra::new(&uq, cutoff);
    let win = DWindow::new(&a);
    let mut out = Vec::new();
    for i in 0..cfg.rank() {
        for c in z_w_check(&win, i)?.checks {
            out.push(Outcome::check(Suite::Zw, format!("cutoff {cutoff}: s{} {}", i + 1, c.name), c.ok, || {
                "operators differ on the window".into()
            }));
        }
    }
    Ok(out)
}

/// Formula-built Theta against the right Verma module on `U^+` of height
/// `<= max` (default 4 for rank 1, 3 otherwise) at probes
/// `{0, w_i, 2w_i, rho}`, and the rank certificate of
/// `{d_e d_f, d_f d_e, d_k, 1}`.
pub(super) fn theta(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let rank = cfg.rank();
    let depth = cfg.max.unwrap_or(if rank == 1 { 4 } else { 3 });
    let uq = QuantumGroup::with_max_height(cfg.datum.clone(), (rank * (depth + 2)).max(8));
    let d = uq.datum();
    let mut probes = vec![Weight::zero(rank), d.rho()];
    for i in 0..rank {
        probes.push(d.fundamental(i));
        probes.push(d.fundamental(i) + d.fundamental(i));
    }
    probes.sort();
    probes.dedup();
    let rep = ThetaRep::new(&uq);
    let build = theta_build(&rep, depth, &probes)?;
    let mut out: Vec<Outcome> = build
        .checks
        .iter()
        .map(|c| {
            Outcome::check(Suite::Theta, format!("xi {} depth {depth}: {}", c.xi, c.generator), c.ok, || {
                format!("formula and right Verma module differ on some of {} basis elements", c.compared)
            })
        })
        .collect();

    let span = vec![
        vec![ThetaGen::E(0), ThetaGen::F(0)],
        vec![ThetaGen::F(0), ThetaGen::E(0)],
        vec![ThetaGen::K(d.fundamental(0))],
        vec![],
    ];
    let f = theta_faithfulness(&rep, 3.min(depth), &probes, &span)?;
    out.push(Outcome::check(
        Suite::Theta,
        format!("rank certificate of {{{}}}", f.span.join(", ")),
        f.independent,
        || format!("rank {} of {}", f.rank, f.span.len()),
    ));
    Ok(out)
}

fn casimir(search: &[CenterElement]) -> Option<&CenterElement> {
    search.iter().find(|z| z.hc_image.len() > 1)
}

/// Weights `k w` for `|k| <= 3` (rank 1) or the box `[-1, 1]^r`.
fn scan_weights(cfg: &SuiteConfig) -> Vec<Weight> {
    let rank = cfg.rank();
    let r = if rank == 1 { 3 } else { 1 };
    let mut out = vec![Weight::zero(rank)];
    for i in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (-r..=r).map(move |c| {
                    let mut x = w;
                    x[i] = c;
                    x
                })
            })
            .collect();
    }
    out
}

/// Center of height `<= max` (default 2) with `|mu_i| <= 2`: a non-scalar
/// element, W-dot invariance of its image, `d_z = sigma(zeta(z))` on the
/// window `3w_1`, and the central-character scan against linkage.
pub(super) fn center(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let h = cfg.max.unwrap_or(2);
    let search = center_solve(&uq, h, 2)?;
    let mut out = Vec::new();
    let z = casimir(&search.elements);
    out.push(Outcome::check(Suite::Center, format!("height {h}: non-scalar central element"), z.is_some(), || {
        format!("only {} independent solutions, all scalar", search.dimension)
    }));
    out.push(Outcome::check(Suite::Center, format!("height {h}: image is W-dot invariant"), search.invariant, || {
        format!("{:?}", search.hc_images)
    }));
    let Some(z) = z else {
        return Ok(out);
    };
    let cutoff = cfg.cutoff.unwrap_or(cfg.uniform(if cfg.rank() == 1 { 3 } else { 1 }));
    let a = CoordAlgebra::new(&uq, cutoff);
    let ok = acts_through_sigma(&DWindow::new(&a), z)?;
    out.push(Outcome::check(Suite::Center, format!("d_z = sigma(zeta(z)) on cutoff {cutoff}"), ok, || {
        "operators differ on the window".into()
    }));
    let rows = linkage_scan(&uq, &search.elements, &scan_weights(cfg));
    let bad = rows.iter().find(|r| r.equal_characters != r.linked).map(|r| {
        format!(
            "{} and {}: equal characters {}, linked {}",
            r.first, r.second, r.equal_characters, r.linked
        )
    });
    let unlinked = rows.iter().filter(|r| !r.linked).count();
    out.push(Outcome::new(
        Suite::Center,
        format!("central characters match linkage on {} pairs ({unlinked} unlinked)", rows.len()),
        bad,
    ));
    Ok(out)
}

/// `z - zeta_lambda(z)` kills `T(lambda)` to depth 4 while
/// `z - zeta_{lambda + w_1}(z)` does not, for each scanned `lambda`.
pub(super) fn annihilator(cfg: &SuiteConfig) -> Result<Vec<Outcome>, VerifyError> {
    let uq = QuantumGroup::new(cfg.datum.clone());
    let d = uq.datum();
    let h = cfg.max.unwrap_or(if cfg.rank() == 1 { 1 } else { 2 });
    let search = center_solve(&uq, h, 2)?;
    let Some(z) = casimir(&search.elements) else {
        return Err(VerifyError::Unsupported(format!("no non-scalar central element of height {h}")));
    };
    let depth = cfg.depth.unwrap_or(RootSum::new(&vec![4 / cfg.rank() as i32; cfg.rank()]));
    let mut out = Vec::new();
    for lam in scan_weights(cfg) {
        let own = annihilator_check(&uq, z, &lam, &lam, &depth)?;
        let other = lam + d.fundamental(0);
        let control = annihilator_check(&uq, z, &lam, &other, &depth)?;
        let linked = d.linked(&lam, &other).is_some();
        let ok = own.annihilates && control.annihilates == linked;
        let why = || {
            format!(
                "own character annihilates: {}, character of {other} annihilates: {}",
                own.annihilates, control.annihilates
            )
        };
        out.push(Outcome::check(Suite::Annihilator, format!("T({lam}) to depth {depth}"), ok, why));
    }
    Ok(out)
}
