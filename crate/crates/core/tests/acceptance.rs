//! The ten acceptance criteria, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use leibniz::algebra::trivial_algebra;
use leibniz::bimodule::{
    antisymmetric, antisymmetric_kernel, check_bimodule, m_zero_subspace, right_invariants, symmetric, Kind,
    OneDimBimodule,
};
use leibniz::cli;
use leibniz::cohomology::{ce_cohomology, leibniz_cohomology, leibniz_complex, trivial_algebra_closed_form};
use leibniz::ext::{
    certify_collapse, e2_first, ext1_hemi_closed, ext_hemi_spectral, ext_simple_closed, ext_trivial_closed,
    ext_trivial_spectral, hemi_algebra, nhat, one_dim, CollapseCertificate, E2Page, HemiSimple,
};
use leibniz::linear::{image_basis, rank};
use leibniz::quiver::{quiver_hemi, Quiver};
use leibniz::repsl2::{clebsch_gordan, decompose, hom_dim, simple_module, sl2, tensor, SL2Module, WeightMultiset};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn trivial_quiver_loops() -> Check {
    let out = cli::run(["leibniz", "quiver", "trivial", "--lambdas", "1", "--format", "json"]);
    ensure!(out.code == 0, "exit {}: {}", out.code, out.stderr);
    let q = Quiver::from_json(out.stdout.trim()).map_err(err)?;
    let labels: Vec<&str> = q.vertices.iter().map(|v| v.label.as_str()).collect();
    ensure!(labels == ["K", "M^a_1", "M^s_1"], "vertices {labels:?}");
    let loops: Vec<usize> = labels.iter().map(|l| q.multiplicity(l, l)).collect();
    ensure!(loops == [2, 1, 1], "loops {loops:?}");
    ensure!(q.arrow_count() == 4, "{} arrows in total", q.arrow_count());
    Ok(())
}

fn trivial_ext_table() -> Check {
    let mut simples = vec![OneDimBimodule::trivial()];
    for lambda in [1, 2] {
        simples.push(one_dim(Kind::Antisymmetric, lambda).map_err(err)?);
        simples.push(one_dim(Kind::Symmetric, lambda).map_err(err)?);
    }
    for a in &simples {
        for b in &simples {
            let expected = if a.kind() == Kind::Trivial && b.kind() == Kind::Trivial {
                vec![1, 2, 2, 2, 2]
            } else if a == b {
                vec![1, 1, 0, 0, 0]
            } else {
                vec![0; 5]
            };
            let closed = ext_trivial_closed(a, b, 4);
            let spectral = ext_trivial_spectral(a, b, 4).map_err(err)?;
            ensure!(closed == expected, "closed Ext({a}, {b}) = {closed:?}, expected {expected:?}");
            ensure!(spectral.dims == expected, "spectral Ext({a}, {b}) = {:?}", spectral.dims);
            ensure!(spectral.certificate.is_certified(), "Ext({a}, {b}) not certified");
        }
    }
    Ok(())
}

fn one_dim_closed_forms() -> Check {
    let h = trivial_algebra();
    let cases = [
        (OneDimBimodule::trivial(), vec![1; 7]),
        (one_dim(Kind::Symmetric, 1).map_err(err)?, vec![0; 7]),
        (one_dim(Kind::Antisymmetric, 1).map_err(err)?, vec![1, 0, 0, 0, 0, 0, 0]),
    ];
    for (m, expected) in cases {
        let b = m.to_bimodule();
        let brute = leibniz_cohomology(&h, &b, 6).map_err(err)?.dims();
        let closed = trivial_algebra_closed_form(&b, 6).map_err(err)?;
        ensure!(brute == closed, "HL({m}): brute {brute:?}, closed {closed:?}");
        ensure!(brute == expected, "HL({m}) = {brute:?}, expected {expected:?}");
    }
    Ok(())
}

fn parity() -> Check {
    let h = trivial_algebra();
    let mut rng = common::rng(0x1e1b);
    for trial in 0..20 {
        let m = common::random_trivial_bimodule(&mut rng, 5);
        let m_zero = m_zero_subspace(&m).map_err(err)?;
        let m_h = image_basis(m.right(0));
        let invariants = right_invariants(&m);
        let kernel = antisymmetric_kernel(&m);
        ensure!(m_zero.contains_subspace(&m_h), "trial {trial}: M·h ⊄ M^0");
        ensure!(invariants.contains_subspace(&kernel), "trial {trial}: M_0 ⊄ M^h");
        let odd = m_zero.dim() - rank(m.right(0));
        let even = invariants.dim() - kernel.dim();
        ensure!(odd == even, "trial {trial}: dim M^0/(M·h) = {odd}, dim M^h/M_0 = {even}");
        let brute = leibniz_cohomology(&h, &m, 5).map_err(err)?.dims();
        let closed = trivial_algebra_closed_form(&m, 5).map_err(err)?;
        ensure!(brute == closed, "trial {trial}: brute {brute:?}, closed {closed:?}\n{}", m.to_json());
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for n in 1..=2 {
        let h = hemi_algebra(n).map_err(err)?;
        for m in 0..=6 {
            let hat = nhat(&h, simple_module(m).module()).map_err(err)?;
            let hat = decompose(&SL2Module::new(hat).map_err(err)?).map_err(err)?;
            for p in 0..=8 {
                let source: WeightMultiset = [(p, 1)].into_iter().collect();
                let oracle = hom_dim(&source, &hat);
                let closed = ext1_hemi_closed(n, p, m);
                ensure!(oracle == closed, "n={n} p={p} m={m}: closed {closed}, N̂ gives {oracle} (N̂ = {hat})");
            }
        }
    }
    Ok(())
}

/// Arrows into `target` allowed by the description of each quiver, as
/// `(source weight, count)`; weight 0 stands for the trivial bimodule.
fn expected_in_arrows(n: usize, m: usize) -> Vec<(usize, usize)> {
    match (n, m) {
        (1, 0) => vec![(1, 1), (2, 1)],
        (1, 1) => vec![(0, 1), (2, 1), (3, 1)],
        (1, m) => vec![(m + 1, 1), (m - 1, 1), (m + 2, 1), (m - 2, 1)],
        (2, 0) => vec![(2, 2)],
        (2, 1) => vec![(3, 2), (1, 1)],
        (2, m) => vec![(m + 2, 2), (m - 2, 2), (m, 1)],
        _ => unreachable!(),
    }
}

fn hemi_quivers() -> Check {
    let window = 4;
    for n in 1..=2 {
        let q = quiver_hemi(n, window, false).map_err(err)?;
        let label = |w: usize, kind: &str| if w == 0 { "V0".to_string() } else { format!("V{w}^{kind}") };
        let mut expected = std::collections::BTreeMap::new();
        for m in 0..=window {
            for (p, count) in expected_in_arrows(n, m) {
                if p <= window {
                    *expected.entry((label(p, "s"), label(m, "a"))).or_insert(0) += count;
                }
            }
        }
        let found = q.edge_map();
        ensure!(found == expected, "n={n}: quiver edges {found:?}, expected {expected:?}");
        let v0_in: usize = found.iter().filter(|((_, d), _)| d == "V0").map(|(_, c)| c).sum();
        ensure!(v0_in == 2, "n={n}: V0 receives {v0_in} arrows");
    }
    Ok(())
}

fn ext2_anomaly() -> Check {
    let two = ext_simple_closed(2, HemiSimple::symmetric(2), HemiSimple::antisymmetric(2), 2).map_err(err)?;
    ensure!(two == 4, "n=2: Ext^2(V2^s, V2^a) = {two}");
    let spectral = ext_hemi_spectral(2, HemiSimple::symmetric(2), HemiSimple::antisymmetric(2), 2).map_err(err)?;
    ensure!(spectral.dims[2] == 4, "n=2 spectral Ext^2 = {}", spectral.dims[2]);
    for p in [1, 2] {
        for m in [1, 2] {
            let (src, dst) = (HemiSimple::symmetric(p), HemiSimple::antisymmetric(m));
            let closed = ext_simple_closed(1, src, dst, 2).map_err(err)?;
            let spectral = ext_hemi_spectral(1, src, dst, 2).map_err(err)?.dims[2];
            ensure!(closed == 1 && spectral == 1, "n=1: Ext^2({src}, {dst}) closed {closed}, spectral {spectral}");
        }
    }
    Ok(())
}

fn whitehead_weyl() -> Check {
    let g = sl2();
    for m in 0..=6 {
        let dims = ce_cohomology(&g, simple_module(m).module(), 3).map_err(err)?.dims();
        ensure!(dims[1] == 0 && dims[2] == 0, "H^1, H^2 of V{m}: {dims:?}");
        if m == 0 {
            ensure!(dims == [1, 0, 0, 1], "H*(sl2, K) = {dims:?}");
        } else {
            ensure!(dims == [0, 0, 0, 0], "H*(sl2, V{m}) = {dims:?}");
        }
    }
    Ok(())
}

fn clebsch_gordan_rule() -> Check {
    for m in 0..=8 {
        for n in 0..=8 {
            let found = decompose(&tensor(&simple_module(m), &simple_module(n))).map_err(err)?;
            let expected = clebsch_gordan(m, n);
            ensure!(found == expected, "V{m} ⊗ V{n} = {found}, expected {expected}");
        }
    }
    Ok(())
}

fn d_squared(complex: &leibniz::cohomology::CochainComplex) -> Check {
    for n in 1..complex.dims().len().saturating_sub(1) {
        let dd = complex.differential(n) * complex.differential(n - 1);
        ensure!(dd.is_zero(), "d∘d ≠ 0 in degree {n}");
    }
    Ok(())
}

fn structural() -> Check {
    let trivial = trivial_algebra();
    for m in [
        OneDimBimodule::trivial(),
        one_dim(Kind::Symmetric, 2).map_err(err)?,
        one_dim(Kind::Antisymmetric, -1).map_err(err)?,
    ] {
        d_squared(&leibniz_complex(&trivial, &m.to_bimodule(), 4).map_err(err)?)?;
    }
    for n in 1..=2 {
        let h = hemi_algebra(n).map_err(err)?;
        for w in 0..=3 {
            let v = simple_module(w);
            let s = symmetric(&h, v.module()).map_err(err)?;
            let a = antisymmetric(&h, v.module()).map_err(err)?;
            ensure!(check_bimodule(&s) && check_bimodule(&a), "n={n}: axioms fail for V{w}");
            ensure!(s.is_symmetric() && a.is_antisymmetric(), "n={n}: wrong kind for V{w}");
        }
        let adjoint_sym = symmetric(&h, simple_module(n).module()).map_err(err)?;
        d_squared(&leibniz_complex(&h, &adjoint_sym, 2).map_err(err)?)?;
        let page = e2_first(&h, simple_module(0).module(), &adjoint_sym, 3, 1).map_err(err)?;
        ensure!(certify_collapse(&page).is_certified(), "n={n}: first spectral sequence page not certified");
        for (src, dst) in [
            (HemiSimple::Trivial, HemiSimple::antisymmetric(n)),
            (HemiSimple::symmetric(2), HemiSimple::antisymmetric(2)),
        ] {
            let r = ext_hemi_spectral(n, src, dst, 2).map_err(err)?;
            ensure!(r.certificate.is_certified(), "n={n}: Ext({src}, {dst}) not certified");
        }
    }
    let bad = E2Page::from_dims(vec![vec![0, 1], vec![0, 0], vec![1, 0]]);
    let verdict = certify_collapse(&bad);
    ensure!(verdict == CollapseCertificate::NotCertified { r: 2, p: 0, q: 1 }, "synthetic page: {verdict:?}");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("trivial quiver", trivial_quiver_loops, Some(Duration::from_secs(1))),
        ("trivial Ext table", trivial_ext_table, Some(Duration::from_secs(5))),
        ("closed forms for K, M^s, M^a", one_dim_closed_forms, Some(Duration::from_secs(1))),
        ("parity on random bimodules", parity, None),
        ("Ext^1 closed form vs N̂", oracle_equivalence, Some(Duration::from_secs(30))),
        ("hemi-semidirect quivers", hemi_quivers, None),
        ("Ext^2 anomaly", ext2_anomaly, None),
        ("Whitehead and Weyl", whitehead_weyl, Some(Duration::from_secs(5))),
        ("Clebsch-Gordan", clebsch_gordan_rule, None),
        ("structural properties", structural, None),
    ];
    let mut failures = Vec::new();
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
