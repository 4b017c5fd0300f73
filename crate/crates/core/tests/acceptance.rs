//! Acceptance gate. Each test prints one `PASS`/`FAIL` line per criterion;
//! run with `cargo test -p flagcy-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use flagcy_core::bundle::{lambda_kt, BalancedDatum, GauduchonDatum};
use flagcy_core::picard::{is_primitive, primitive_basis, LineBundleClass};
use flagcy_core::potential_lab::{check_eigenvalue_formula, PotentialSpec, DEFAULT_STEP};
use flagcy_core::rational::{int, rat, Rational};
use flagcy_core::{Family, InvariantClass, LieType, ParabolicFlag, RootDatum, Weight};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(id: u32, name: &str, ok: bool, detail: &str, elapsed: Duration) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {id}] {verdict} {name} ({:.3}s) {detail}", elapsed.as_secs_f64());
}

fn flag(family: Family, rank: usize, parabolic: &[usize]) -> ParabolicFlag {
    let d = RootDatum::new(LieType::new(family, rank).unwrap());
    ParabolicFlag::new(d, parabolic).unwrap()
}

/// Every flag of the given types with rank ≤ 4 and Picard number ≥ 2.
fn grid(families: &[Family]) -> Vec<ParabolicFlag> {
    let mut out = Vec::new();
    for &family in families {
        for rank in 1..=4 {
            let Ok(t) = LieType::new(family, rank) else { continue };
            let d = RootDatum::new(t);
            for mask in 0u32..(1 << rank) {
                let set: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
                if rank - set.len() >= 2 {
                    out.push(ParabolicFlag::new(d.clone(), &set).unwrap());
                }
            }
        }
    }
    out
}

fn classical_grid() -> Vec<ParabolicFlag> {
    grid(&[Family::A, Family::B, Family::C, Family::D])
}

fn describe(f: &ParabolicFlag) -> String {
    let set: Vec<String> = f.parabolic_set().iter().map(|i| (i + 1).to_string()).collect();
    format!("{} I={{{}}}", f.datum().lie_type(), set.join(","))
}

fn sum_bundles(bundles: &[LineBundleClass]) -> LineBundleClass {
    bundles[1..].iter().fold(bundles[0].clone(), |acc, b| acc.tensor(b))
}

/// Odd-length list of degree-zero bundles drawn from the primitive basis.
fn gauduchon_bundles(f: &ParabolicFlag) -> Vec<LineBundleClass> {
    let basis = primitive_basis(f, &f.anticanonical_class(), None).unwrap().basis;
    let mut out = basis.clone();
    if out.len().is_multiple_of(2) {
        out.push(sum_bundles(&basis));
    }
    out
}

/// Even-length list of degree-zero bundles drawn from the primitive basis.
fn balanced_bundles(f: &ParabolicFlag) -> Vec<LineBundleClass> {
    let basis = primitive_basis(f, &f.anticanonical_class(), None).unwrap().basis;
    let mut out = basis.clone();
    if out.len() % 2 == 1 {
        out.push(basis[0].power(&BigInt::from(2)));
    }
    out
}

const KS: [i64; 4] = [-2, -1, 1, 2];

fn ts() -> [Rational; 3] {
    [int(-1), int(0), rat(1, 2)]
}

#[test]
fn criterion_1_projectivized_tangent_bundle_fixture() {
    let start = Instant::now();
    let f = flag(Family::A, 2, &[]);
    let theta = f.anticanonical_class();
    let mut failures = Vec::new();

    if f.fano_index() != BigInt::from(2) {
        failures.push("Fano index".to_string());
    }
    if f.delta_p() != Weight::from_integers(&[2, 2]) {
        failures.push("δ_B".to_string());
    }
    for slot in 0..2 {
        let c = f
            .lefschetz_contraction(&theta, &InvariantClass::generator(2, slot))
            .unwrap();
        if c.value != rat(3, 4) || c.two_pi_power != 0 {
            failures.push(format!("contraction of Ω_{}", slot + 1));
        }
    }
    let basis = primitive_basis(&f, &theta, None).unwrap();
    if basis.basis != vec![LineBundleClass::from_i64(&[-1, 1])] {
        failures.push(format!("primitive basis {:?}", basis.basis));
    }
    for k in [1, -1, 2, -2] {
        for t in ts() {
            let expected = rat(3, 8) * (int(1) - &t) * int(k * k);
            if lambda_kt(&f, k, &t).unwrap() != expected {
                failures.push(format!("λ({k},{t})"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(1);
    report(1, "P(T_P2) fixture, exact", ok, &failures.join("; "), elapsed);
    assert!(ok, "{failures:?} in {elapsed:?}");
}

#[test]
fn criterion_2_ricci_flat_vanishing() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for f in classical_grid() {
        let bundles = gauduchon_bundles(&f);
        for k in KS {
            for t in ts() {
                let d = GauduchonDatum::build(&f, k, &t, &bundles).unwrap();
                let residual = d.verify_ricci_flat();
                checked += 1;
                if !residual.is_zero() {
                    failures.push(format!("{} k={k} t={t}: {:?}", describe(&f), residual));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(30);
    report(2, "t-Gauduchon Ricci residual is zero", ok, &format!("{checked} data"), elapsed);
    assert!(ok, "{failures:?} in {elapsed:?}");
}

#[test]
fn criterion_3_balanced_coclosed() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for f in classical_grid() {
        let d = BalancedDatum::build(&f, &f.anticanonical_class(), &balanced_bundles(&f)).unwrap();
        let coclosed = d.verify_coclosed();
        let lee = d.lee_form().unwrap();
        checked += 1;
        if !coclosed.iter().chain(&lee).all(Zero::is_zero) {
            failures.push(describe(&f));
        }
        // the same bundles stay balanced for the Gauduchon scale λ(k,t)·ρ₀
        let omega = f.ricci_class().scale(&lambda_kt(&f, 1, &int(-1)).unwrap());
        let d = BalancedDatum::build(&f, &omega, &balanced_bundles(&f)).unwrap();
        if !d.verify_coclosed().iter().all(Zero::is_zero) {
            failures.push(format!("{} at λρ₀", describe(&f)));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty();
    report(3, "balanced data are co-closed with zero Lee form", ok, &format!("{checked} flags"), elapsed);
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_4_c1_triviality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for f in classical_grid() {
        let bundles = gauduchon_bundles(&f);
        for k in KS {
            for t in ts() {
                let d = GauduchonDatum::build(&f, k, &t, &bundles).unwrap();
                let expected = Rational::new(f.fano_index(), BigInt::from(k));
                match d.verify_c1_trivial() {
                    Ok(c) if c == expected => {}
                    other => failures.push(format!("{} k={k} t={t}: {other:?}", describe(&f))),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty();
    report(4, "ρ₀ = (I/k) ψ₁ across the grid", ok, "", elapsed);
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_5_numeric_eigenvalues() {
    let start = Instant::now();
    let cases: [(usize, &[i64]); 5] = [
        (2, &[1, 0]),
        (2, &[0, 1]),
        (2, &[-1, 1]),
        (3, &[1, 0, 0]),
        (3, &[-1, 1, 0]),
    ];
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (rank, psi) in cases {
        let f = flag(Family::A, rank, &[]);
        let omega = PotentialSpec::from_class(&f.anticanonical_class());
        let psi = PotentialSpec::new(psi.iter().map(|&c| int(c)).collect());
        let r = check_eigenvalue_formula(&f, &omega, &psi, DEFAULT_STEP, 1e-5).unwrap();
        worst = worst.max(r.max_deviation);
        if !r.passed() {
            failures.push(format!("SL{} ψ={:?}: {:e}", rank + 1, psi.coeffs, r.max_deviation));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(10);
    report(
        5,
        "finite-difference eigenvalues match pairing ratios",
        ok,
        &format!("max deviation {worst:e}"),
        elapsed,
    );
    assert!(ok, "{failures:?} in {elapsed:?}");
}

#[test]
fn criterion_6_degree_zero_lattice() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_f1a6);
    let flags = grid(&[Family::A, Family::B, Family::C, Family::D, Family::F, Family::G]);
    let mut counterexamples = Vec::new();
    let mut degree_zero_seen = 0;
    for f in &flags {
        let theta = f.anticanonical_class();
        let basis = primitive_basis(f, &theta, None).unwrap();
        // degree is linear in the class: precompute deg(Ω_α)
        let generator_degrees: Vec<Rational> = (0..f.picard_rank())
            .map(|slot| {
                f.degree(&InvariantClass::generator(f.picard_rank(), slot), &theta)
                    .unwrap()
                    .value
            })
            .collect();
        for sample in 0..200 {
            let coeffs: Vec<i64> = (0..f.picard_rank()).map(|_| rng.gen_range(-5..=5)).collect();
            let class = LineBundleClass::from_i64(&coeffs);
            let degree: Rational = coeffs
                .iter()
                .zip(&generator_degrees)
                .map(|(&x, d)| int(x) * d)
                .sum();
            let degree_zero = degree.is_zero();
            if sample < 5 {
                assert_eq!(degree_zero, is_primitive(f, &class.first_chern_class(), &theta).unwrap());
            }
            degree_zero_seen += usize::from(degree_zero);
            let in_span = basis.express(&class).is_some();
            if degree_zero != in_span {
                counterexamples.push(format!(
                    "{} q={:?} class={coeffs:?}",
                    describe(f),
                    basis.q.iter().map(ToString::to_string).collect::<Vec<_>>()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = counterexamples.is_empty();
    let detail = format!(
        "{} flags, {degree_zero_seen} degree-zero samples, {} counterexamples{}",
        flags.len(),
        counterexamples.len(),
        counterexamples.first().map(|c| format!(", e.g. {c}")).unwrap_or_default()
    );
    report(6, "degree zero iff integer combination of ξ_α", ok, &detail, elapsed);
    assert!(ok, "{counterexamples:#?}");
}

#[test]
fn criterion_7_volume_sanity() {
    let start = Instant::now();
    let p1 = flag(Family::A, 1, &[]);
    let f = flag(Family::A, 2, &[]);
    let mut failures = Vec::new();
    if p1.volume(&p1.anticanonical_class()).unwrap().value != int(2) {
        failures.push("Vol(P1)".to_string());
    }
    if f.volume(&f.anticanonical_class()).unwrap().value != int(8) {
        failures.push("Vol(P(T_P2))".to_string());
    }
    for g in classical_grid().iter().chain([&p1, &f]) {
        let omega = g.anticanonical_class();
        let base = g.volume(&omega).unwrap().value;
        for s in [int(2), rat(1, 3)] {
            let scaled = g.volume(&omega.scale(&s)).unwrap().value;
            if scaled != &base * num_traits::pow(s.clone(), g.dim()) {
                failures.push(format!("homogeneity {} s={s}", describe(g)));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty();
    report(7, "volume values and homogeneity", ok, "", elapsed);
    assert!(ok, "{failures:?}");
}
