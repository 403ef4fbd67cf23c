//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.
//!
//! Run with `cargo test -p planecurve-core --test acceptance -- --nocapture`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use planecurve::alexander::{
    alexander_polynomial, cover_h1_charpoly, evaluation_matrix, superabundance,
};
use planecurve::algebra::float::embedded_rank;
use planecurve::belyi::{adjunction_count, deck_charpoly, eigen_multiplicity, genus, BelyiCover};
use planecurve::fixtures::{
    cm_fiber, cusp_sextic, cyclic_cusp_curve, general_position_cusps, hirano_alexander,
    two_pair_germs,
};
use planecurve::mordell_weil::rank_report;
use planecurve::resolution::{acampo_charpoly, resolution_tree};
use planecurve::singularity::{
    charpoly_one_pair, charpoly_puiseux, spectrum_one_pair, PuiseuxCharacteristic,
};
use planecurve::{rank, CyclotomicProduct, IntPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Check) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match &outcome {
        Ok(detail) => println!("PASS  [{id}] {name}: {detail}"),
        Err(detail) => println!("FAIL  [{id}] {name}: {detail}"),
    }
    outcome.is_ok()
}

fn pc(pairs: &[(u64, u64)]) -> PuiseuxCharacteristic {
    PuiseuxCharacteristic::new(pairs.to_vec()).unwrap()
}

fn binom(m: usize) -> IntPolynomial {
    IntPolynomial::binomial(m)
}

fn criterion_1() -> Check {
    let rt = resolution_tree(&pc(&[(5, 2)]));
    let ruptures = rt.rupture_ids();
    ensure(ruptures.len() == 1, || format!("expected one rupture, got {ruptures:?}"))?;
    let r = ruptures[0];
    let mut neigh: Vec<u64> = rt.neighbors(r).iter().map(|x| rt.multiplicity(*x)).collect();
    neigh.sort_unstable();
    ensure(rt.multiplicity(r) == 10 && neigh == vec![1, 4, 5], || {
        format!("rupture multiplicity {} with neighbors {neigh:?}", rt.multiplicity(r))
    })?;
    Ok("rupture of multiplicity 10 meeting multiplicities {1, 4, 5}".into())
}

fn criterion_2() -> Check {
    let expected = {
        let head = IntPolynomial::from_i64(&[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1]);
        let num = &binom(180) * &binom(1);
        let den = &binom(36) * &binom(5);
        &head * &num.exact_div(&den).ok_or("quotient is not exact")?
    };
    let got = charpoly_puiseux(&pc(&[(3, 2), (6, 5)])).map_err(|e| e.to_string())?;
    ensure(got.expand() == expected, || format!("((3,2),(6,5)) gave {got}"))?;

    let got2 = charpoly_puiseux(&pc(&[(3, 2), (1, 2)])).map_err(|e| e.to_string())?;
    let phi = &planecurve::cyclotomic(26) * &planecurve::cyclotomic(12);
    ensure(got2.expand() == phi, || format!("((3,2),(1,2)) gave {got2}"))?;
    Ok(format!(
        "degree {} identity and Φ_26·Φ_12",
        expected.degree().unwrap_or(0)
    ))
}

fn criterion_3() -> Check {
    let mut germs: Vec<PuiseuxCharacteristic> = common::coprime_pairs(2, 12)
        .into_iter()
        .filter(|(p, q)| q > p)
        .map(|(p, q)| pc(&[(q, p)]))
        .collect();
    germs.extend(two_pair_germs());
    for g in &germs {
        let a = acampo_charpoly(&resolution_tree(g)).map_err(|e| e.to_string())?;
        let b = charpoly_puiseux(g).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{:?}: A'Campo {a} vs Puiseux {b}", g.pairs()))?;
    }
    Ok(format!("{} germs agree", germs.len()))
}

fn criterion_4() -> Check {
    let b = BelyiCover::new(4, 1, 5, 10).map_err(|e| e.to_string())?;
    ensure(genus(&b) == 2, || format!("genus(4,1,5,10) = {}", genus(&b)))?;
    let covers = common::belyi_covers(60);
    for c in &covers {
        let mut sum = 0u64;
        for j in 1..c.d {
            let m = eigen_multiplicity(c, j).map_err(|e| e.to_string())?;
            ensure(m <= 1, || format!("{c}: multiplicity {m} at j = {j}"))?;
            sum += m as u64;
        }
        ensure(sum == genus(c), || format!("{c}: Σ = {sum}, genus {}", genus(c)))?;
        let deg = deck_charpoly(c).map_err(|e| e.to_string())?.degree() as u64;
        ensure(deg == 2 * genus(c), || format!("{c}: deck degree {deg}"))?;
    }
    for d in 2..=40 {
        for l in 2..=40 {
            let closed = adjunction_count(d, l).map_err(|e| e.to_string())?;
            let brute = common::lattice_count(d, l);
            ensure(closed == brute, || format!("adjunction({d},{l}) {closed} vs {brute}"))?;
        }
    }
    Ok(format!("{} covers with d ≤ 60, 39² adjunction counts", covers.len()))
}

fn criterion_5() -> Check {
    let six = cusp_sextic();
    let pts: Vec<_> = six.points.iter().collect();
    let m = evaluation_matrix(&pts, 2).map_err(|e| e.to_string())?;
    let r = rank(&m).map_err(|e| e.to_string())?;
    ensure(m.conductor().ok() == Some(12), || "sextic points not over ℚ(ζ_12)".into())?;
    ensure(r == 5, || format!("rank {r}"))?;
    let rep = alexander_polynomial(&six, 2, 3).map_err(|e| e.to_string())?;
    ensure(
        rep.superabundance == Some(1) && rep.polynomial == Some(CyclotomicProduct::cyclotomic(6)),
        || format!("sextic: s = {:?}, Δ = {:?}", rep.superabundance, rep.polynomial),
    )?;

    let ten = cyclic_cusp_curve(5);
    let pts: Vec<_> = ten.points.iter().collect();
    let m = evaluation_matrix(&pts, 4).map_err(|e| e.to_string())?;
    ensure(m.conductor().ok() == Some(20), || "points not over ℚ(ζ_20)".into())?;
    let rep = alexander_polynomial(&ten, 2, 5).map_err(|e| e.to_string())?;
    ensure(
        rep.superabundance == Some(1) && rep.polynomial == Some(CyclotomicProduct::cyclotomic(10)),
        || format!("C_5,2: s = {:?}, Δ = {:?}", rep.superabundance, rep.polynomial),
    )?;
    Ok("sextic rank 5, s = 1, Φ_6; ten points s = 1, Φ_10".into())
}

fn criterion_6() -> Check {
    let alex = alexander_polynomial(&cyclic_cusp_curve(5), 2, 5)
        .map_err(|e| e.to_string())?
        .polynomial
        .ok_or("no polynomial")?;
    let r = rank_report(&alex, 10, cm_fiber(10), true).map_err(|e| e.to_string())?;
    ensure((r.bound, r.exact) == (4, Some(4)), || format!("C_5,2: {r:?}"))?;
    for p in [3u64, 5, 7] {
        let r = rank_report(&hirano_alexander(p), 2 * p, cm_fiber(2 * p), true)
            .map_err(|e| e.to_string())?;
        ensure(r.exact == Some(3 * (p - 1)), || format!("Hirano p = {p}: {r:?}"))?;
    }
    let sextic = alexander_polynomial(&cusp_sextic(), 2, 3)
        .map_err(|e| e.to_string())?
        .polynomial
        .ok_or("no polynomial")?;
    for (alex, d) in [
        (sextic, 10u64),
        (CyclotomicProduct::one(), 6),
        (hirano_alexander(5), 6),
    ] {
        for known in [false, true] {
            let r = rank_report(&alex, d, cm_fiber(d), known).map_err(|e| e.to_string())?;
            ensure(r.exact == Some(0), || format!("{alex} with d = {d}: {r:?}"))?;
        }
    }
    Ok("C_5,2 rank 4; Hirano 6, 12, 18; no Φ_d gives 0".into())
}

fn criterion_7() -> Check {
    // Alexander results divide local bounds and are fully cyclotomic.
    let mut cfgs = vec![
        (cusp_sextic(), 2, 3),
        (cyclic_cusp_curve(5), 2, 5),
        (cyclic_cusp_curve(7), 2, 7),
    ];
    for seed in 0..6 {
        cfgs.push((general_position_cusps(6, 6, seed), 2, 3));
        cfgs.push((general_position_cusps(6, 3, seed), 2, 3));
    }
    for (cfg, p, q) in &cfgs {
        let rep = alexander_polynomial(cfg, *p, *q).map_err(|e| e.to_string())?;
        let poly = rep.polynomial.clone().ok_or("no polynomial")?;
        ensure(poly.is_cyclotomic(), || format!("non-cyclotomic {poly}"))?;
        let q_exact = rep.local_bound.expand().exact_div(&poly.expand());
        ensure(q_exact.is_some(), || format!("{poly} does not divide {}", rep.local_bound))?;

        // superabundance agrees with the floating-point estimate
        let m = planecurve::alexander::adjoint_degree(cfg.degree, *p, *q).unwrap();
        let pts: Vec<_> = cfg.points.iter().collect();
        let mat = evaluation_matrix(&pts, m as usize).map_err(|e| e.to_string())?;
        let float_s = pts.len() - embedded_rank::<f64>(&mat, 1e-8);
        let exact_s = superabundance(cfg, *p, *q).map_err(|e| e.to_string())?;
        ensure(float_s == exact_s, || format!("float s {float_s} vs exact {exact_s}"))?;
    }

    // exact rank equals the floating estimate on random matrices
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut matrices = 0;
    for _ in 0..200 {
        let n = common::CONDUCTORS[rng.gen_range(0..common::CONDUCTORS.len())];
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let deficient = rng.gen_bool(0.5);
        let m = common::random_matrix(&mut rng, n, r, c, deficient);
        let exact = rank(&m).map_err(|e| e.to_string())?;
        let float = embedded_rank::<f64>(&m, 1e-8);
        ensure(exact == float, || format!("exact {exact} vs float {float} over ℚ(ζ_{n})"))?;
        matrices += 1;
    }

    // cover characteristic polynomials are monotone in N
    let lambdas: Vec<IntPolynomial> = [6u64, 10, 12, 30]
        .iter()
        .map(|n| planecurve::cyclotomic(*n))
        .chain([charpoly_puiseux(&pc(&[(3, 2), (6, 5)])).unwrap().expand()])
        .collect();
    for n in 2..=15u64 {
        for k in 1..=4u64 {
            let small = cover_h1_charpoly(&lambdas, n).map_err(|e| e.to_string())?;
            let big = cover_h1_charpoly(&lambdas, k * n).map_err(|e| e.to_string())?;
            ensure(small.divides(&big), || format!("N = {n}, k = {k}: {small} ∤ {big}"))?;
        }
    }

    // spectrum sizes
    for (p, q) in common::coprime_pairs(2, 30) {
        let s = spectrum_one_pair(p, q).map_err(|e| e.to_string())?;
        ensure(s.len() as u64 == (p - 1) * (q - 1) / 2, || format!("spectrum({p},{q}) has {}", s.len()))?;
        let deg = charpoly_one_pair(p, q).map_err(|e| e.to_string())?.degree() as u64;
        ensure(deg == (p - 1) * (q - 1), || format!("deg Δ_{p},{q} = {deg}"))?;
    }
    Ok(format!(
        "{} configurations, {matrices} random matrices, N | kN for N ≤ 15, spectra for p, q ≤ 30",
        cfgs.len()
    ))
}

#[test]
fn acceptance() {
    let results = [
        run(1, "resolution fixture", criterion_1),
        run(2, "monodromy fixture", criterion_2),
        run(3, "A'Campo oracle equivalence", criterion_3),
        run(4, "Belyi suite", criterion_4),
        run(5, "superabundance fixture", criterion_5),
        run(6, "Mordell-Weil fixtures", criterion_6),
        run(7, "property suites", criterion_7),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("{passed}/{} acceptance criteria passed", results.len());
    assert_eq!(passed, results.len());
}
