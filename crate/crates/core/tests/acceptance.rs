//! End-to-end acceptance checks, one line per criterion. Runs as a plain
//! binary so the report is printed even when every check passes.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{pc, random_element};
use kaplansky_core::{
    ansatz_search, canonical_element, char3_unit, check_f_system, check_reduced,
    check_reduction_chain, check_xy_symmetry, family_f_table, family_unit, gardam_unit, is_trivial,
    mul_oracle, qr_variant, search_units, variant_table, verify_unit, Char3Variant, FamilyParams,
    GroupRingElem, SearchBox, SearchConfig, SearchReport, Strategy, UnitStatus,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn is_nontrivial_unit(u: &GroupRingElem) -> bool {
    verify_unit(u).is_verified() && !is_trivial(u)
}

fn family_grid() -> Vec<FamilyParams> {
    let mut grid = Vec::new();
    for d in [2, 3, 5, 7, 11, 13] {
        for t in -2..=3 {
            for w in -2..=2 {
                grid.push(FamilyParams::new(pc(d), t, w).unwrap());
            }
        }
    }
    grid
}

fn canonical_set<'a>(us: impl IntoIterator<Item = &'a GroupRingElem>) -> BTreeSet<GroupRingElem> {
    us.into_iter().map(canonical_element).collect()
}

fn char2_search(threads: usize) -> (SearchReport, Duration) {
    let bx = SearchBox::unit_cube(pc(2), Strategy::Full);
    let config = SearchConfig {
        threads: Some(threads),
        ..SearchConfig::default()
    };
    let (report, took) = timed(|| search_units(&bx, &config));
    (report.expect("char-2 unit cube is feasible"), took)
}

fn char2_unit_verifies() -> Outcome {
    let u = gardam_unit();
    let (verdict, took) = timed(|| verify_unit(&u));
    outcome(
        verdict.is_verified() && !is_trivial(&u) && took < Duration::from_millis(100),
        format!("two-sided inverse found in {took:?}"),
    )
}

fn variant_table_verifies() -> Outcome {
    let table = variant_table(&gardam_unit());
    let good = table.iter().filter(|v| is_nontrivial_unit(v)).count();
    let distinct = canonical_set(&table).len();
    outcome(
        table.len() == 18 && good == 18 && distinct == 18,
        format!("{good}/{} verified, {distinct} distinct", table.len()),
    )
}

fn char3_units_verify() -> Outcome {
    let both = [Char3Variant::Base, Char3Variant::XYFlipped].map(char3_unit);
    let ok = both
        .iter()
        .all(|u| u.characteristic().get() == 3 && is_nontrivial_unit(u));
    outcome(ok, "base and xy-flipped")
}

fn family_grid_verifies() -> Outcome {
    let grid = family_grid();
    let (failures, took) = timed(|| {
        grid.iter()
            .filter(|&&p| {
                let u = family_unit(p);
                !(is_nontrivial_unit(&u) && check_xy_symmetry(&u) && check_reduced(&u))
            })
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
    });
    outcome(
        grid.len() == 180 && failures.is_empty() && took < Duration::from_secs(60),
        format!("{} cases in {took:?}, failures {failures:?}", grid.len()),
    )
}

fn derivation_checks_hold() -> Outcome {
    let grid = family_grid();
    let mut failures = Vec::new();
    let mut checked = 0;
    for &p in &grid {
        let sys = check_f_system(&family_f_table(p));
        let chain = check_reduction_chain(p);
        checked += sys.residuals.len() + chain.residuals.len() + chain.monomials.len();
        for label in sys.failures().into_iter().chain(chain.failures()) {
            failures.push(format!("{p}: {label}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} identities over {} cases, failures {failures:?}",
            grid.len()
        ),
    )
}

fn char2_search_reproduces(report: &SearchReport, took: Duration) -> Outcome {
    let found: BTreeSet<GroupRingElem> = report.hits.iter().map(|h| h.element.clone()).collect();
    let expected = canonical_set(&variant_table(&gardam_unit()));
    let surplus: Vec<String> = found.difference(&expected).map(|u| u.to_json()).collect();
    let missing = expected.difference(&found).count();
    if !surplus.is_empty() {
        println!("  surplus verified units:");
        for s in &surplus {
            println!("    {s}");
        }
    }
    outcome(
        surplus.is_empty() && missing == 0 && took < Duration::from_secs(300),
        format!(
            "{} hits ({} raw, {} trivial discarded), {missing} missing, {} surplus, 1 thread {took:?}",
            report.hits.len(),
            report.raw_matches,
            report.trivial_discarded,
            surplus.len()
        ),
    )
}

fn char3_search_reproduces() -> Outcome {
    let bx = SearchBox::unit_cube(pc(3), Strategy::Ansatz);
    let (report, took) = timed(|| ansatz_search(&bx, &SearchConfig::default()));
    let report = match report {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let hits: BTreeSet<GroupRingElem> = report.hits.iter().map(|h| h.element.clone()).collect();
    let base = canonical_element(&char3_unit(Char3Variant::Base));
    let flipped = char3_unit(Char3Variant::XYFlipped);
    let contains_base = hits.contains(&base);
    let flip_reached = report.hits.iter().any(|h| {
        let v = qr_variant(&h.element, 2).unwrap();
        v == flipped || canonical_element(&v) == canonical_element(&flipped)
    });
    outcome(
        contains_base && flip_reached && took < Duration::from_secs(120),
        format!(
            "{} hits, base present {contains_base}, flipped reached {flip_reached}, {took:?}",
            hits.len()
        ),
    )
}

fn oracle_agrees() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut disagreements = 0;
    let mut pairs = 0;
    for d in [2, 3, 5] {
        let d = pc(d);
        for _ in 0..1000 {
            let u = random_element(&mut rng, d, 5, 2);
            let v = random_element(&mut rng, d, 5, 2);
            pairs += 1;
            if u.mul(&v).unwrap() != mul_oracle(&u, &v).unwrap() {
                disagreements += 1;
            }
        }
    }
    let mut non_assoc = 0;
    for n in 0..300 {
        let d = pc([2, 3, 5][n % 3]);
        let [u, v, w] = std::array::from_fn(|_| random_element(&mut rng, d, 5, 2));
        if &(&u * &v) * &w != &u * &(&v * &w) {
            non_assoc += 1;
        }
    }
    let identity_ok = [2, 3, 5].into_iter().all(|d| {
        let d = pc(d);
        let one = GroupRingElem::one(d);
        (0..50).all(|_| {
            let u = random_element(&mut rng, d, 5, 2);
            &one * &u == u && &u * &one == u
        })
    });
    outcome(
        disagreements == 0 && non_assoc == 0 && identity_ok,
        format!(
            "{pairs} pairs, {disagreements} disagree; 300 triples, {non_assoc} non-associative; identity {identity_ok}"
        ),
    )
}

/// The adjoint of `a` is `−x⁻¹a`, whose product with `a` is `−1`; so `a` is
/// rejected exactly when `−1 ≠ 1`, i.e. away from characteristic 2.
fn verifier_rejects_non_units() -> Outcome {
    let rejected = |u: &GroupRingElem| {
        let v = verify_unit(u);
        v.status == UnitStatus::NotVerifiedByAdjoint
            && v.left_residual.as_ref().is_some_and(|r| !r.is_zero())
            && v.right_residual.as_ref().is_some_and(|r| !r.is_zero())
    };
    let one = [2, 3, 5]
        .into_iter()
        .all(|d| rejected(&GroupRingElem::one(pc(d))));
    let a = [3, 5]
        .into_iter()
        .all(|d| rejected(&GroupRingElem::a(pc(d))));
    let a_char2 = verify_unit(&GroupRingElem::a(pc(2))).is_verified();
    outcome(
        one && a,
        format!(
            "one rejected over F_2,F_3,F_5 {one}; a rejected over F_3,F_5 {a}; \
             over F_2 the adjoint inverts a {a_char2}"
        ),
    )
}

fn search_is_deterministic(serial: &SearchReport) -> Outcome {
    let threads = std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .max(2);
    let (parallel, took) = char2_search(threads);
    let same = serial.to_json() == parallel.to_json();
    outcome(
        same,
        format!("serial vs {threads} threads byte-identical {same} ({took:?})"),
    )
}

fn main() -> ExitCode {
    let (serial, serial_took) = char2_search(1);
    type Check<'a> = Box<dyn FnOnce() -> Outcome + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("char-2 unit verifies", Box::new(char2_unit_verifies)),
        ("18 variants verify", Box::new(variant_table_verifies)),
        ("char-3 units verify", Box::new(char3_units_verify)),
        (
            "family grid of 180 verifies",
            Box::new(family_grid_verifies),
        ),
        (
            "derivation identities hold",
            Box::new(derivation_checks_hold),
        ),
        (
            "char-2 search finds exactly the 18",
            Box::new(|| char2_search_reproduces(&serial, serial_took)),
        ),
        ("char-3 ansatz search", Box::new(char3_search_reproduces)),
        ("table product equals oracle", Box::new(oracle_agrees)),
        (
            "verifier rejects non-units",
            Box::new(verifier_rejects_non_units),
        ),
        (
            "search output deterministic",
            Box::new(|| search_is_deterministic(&serial)),
        ),
    ];

    let mut failed = 0;
    for (n, (name, check)) in criteria.into_iter().enumerate() {
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", n + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
