//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toriclogk::ehrhart::{fit_expansions, sample_series};
use toriclogk::p1conic::{existence_check, futaki_sum, mean_scalar};
use toriclogk::rational::{int, parse_rat_list, rat};
use toriclogk::{
    builtins, classify, critical_beta, log_futaki_algebraic, log_futaki_toric, r_invariant, sweep,
    ConeData, LatticePolytope, PolytopeFile, Rat, RatVec, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn v(x: &[i64]) -> RatVec {
    RatVec::from_ints(x)
}

fn r_exact() -> Outcome {
    let table = [
        ("bl1p2", rat(6, 7)),
        ("bl2p2", rat(21, 25)),
        ("p2", int(1)),
        ("p1xp1", int(1)),
    ];
    for (name, want) in &table {
        let got = r_invariant(&builtins::by_name(name).unwrap()).map_err(|e| e.to_string())?;
        ensure(&got == want, || format!("{name}: R = {got}, expected {want}"))?;
    }
    Ok("R = 6/7, 21/25, 1, 1".into())
}

/// `(polytope, lambda, slope at beta, constant at 1 - beta)`.
fn linear_forms() -> Vec<(LatticePolytope, RatVec, Rat, Rat)> {
    vec![
        (builtins::bl1p2(), v(&[-1, -1]), rat(2, 3), int(-4)),
        (builtins::bl2p2(), v(&[1, 1]), rat(2, 3), rat(-7, 2)),
        (builtins::bl2p2(), v(&[-1, 2]), rat(1, 3), rat(-21, 2)),
    ]
}

fn betas() -> [Rat; 4] {
    [int(0), rat(1, 4), rat(1, 2), rat(3, 4)]
}

fn futaki_forms() -> Outcome {
    let mut checked = 0;
    for (p, lambda, a, b) in linear_forms() {
        for beta in betas() {
            let got = log_futaki_toric(&p, &lambda, &beta).map_err(|e| e.to_string())?.value;
            let want = &a * &beta + &b * (Rat::one() - &beta);
            ensure(got == want, || format!("lambda {lambda}, beta {beta}: {got} != {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} exact evaluations"))
}

fn critical_angles() -> Outcome {
    let want = [rat(6, 7), rat(21, 25), rat(63, 65)];
    for ((p, lambda, _, _), w) in linear_forms().into_iter().zip(&want) {
        let got = critical_beta(&p, &lambda).map_err(|e| e.to_string())?;
        ensure(got.as_ref() == Some(w), || format!("lambda {lambda}: {got:?}, expected {w}"))?;
    }
    Ok("6/7, 21/25, 63/65".into())
}

fn trichotomy() -> Outcome {
    let mut checked = 0;
    for name in builtins::NAMES {
        let p = builtins::by_name(name).unwrap();
        let r = r_invariant(&p).map_err(|e| e.to_string())?;
        for i in 1..=50 {
            let beta = rat(i, 51);
            let s = classify(&p, &beta).map_err(|e| e.to_string())?;
            let expected = if beta < r {
                Verdict::Stable
            } else if beta == r {
                Verdict::Semistable
            } else {
                Verdict::Unstable
            };
            ensure(s.verdict == expected, || {
                format!("{name} at {beta}: {:?}, expected {expected:?}", s.verdict)
            })?;
            match (&s.witness, expected) {
                (None, Verdict::Stable) => {}
                (Some(w), Verdict::Semistable | Verdict::Unstable) => {
                    let f = log_futaki_toric(&p, &RatVec::from_bigints(w), &beta)
                        .map_err(|e| e.to_string())?
                        .value;
                    let ok = if expected == Verdict::Semistable { f.is_zero() } else { f.is_positive() };
                    ensure(ok, || format!("{name} at {beta}: witness F = {f}"))?;
                }
                _ => return Err(format!("{name} at {beta}: witness {:?} with {expected:?}", s.witness)),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} verdicts on the grid i/51"))
}

fn oracle_equivalence() -> Outcome {
    let extra = [rat(1, 3), rat(21, 25), rat(9, 10), rat(1, 7)];
    let mut normals = 0;
    for p in [builtins::bl1p2(), builtins::bl2p2()] {
        let n = Rat::from_integer(p.dim().into());
        let vol = p.volume().clone();
        for f in p.facets() {
            let lambda = f.normal_vec();
            let series = sample_series(&p, &lambda, 6).map_err(|e| e.to_string())?;
            let c = fit_expansions(&series, &p).map_err(|e| e.to_string())?;
            let pairing = p.barycenter().dot(&lambda);
            let w = p.support(&lambda).map_err(|e| e.to_string())?;
            let df = c.donaldson_futaki().map_err(|e| e.to_string())?;
            let identities = [
                ("b0", c.b0 == vol),
                ("a0", c.a0 == -(&vol * &pairing)),
                ("a0~", c.a0_tilde == (&n + Rat::one()) * &c.a0 + &w * &c.b0),
                ("b0~", c.b0_tilde == &n * &c.b0),
                ("DF", df == -(&vol * &pairing)),
            ];
            for (name, ok) in identities {
                ensure(ok, || format!("lambda {lambda}: identity {name} fails"))?;
            }
            for beta in &extra {
                let alg = log_futaki_algebraic(&c, beta).map_err(|e| e.to_string())?;
                let tor = log_futaki_toric(&p, &lambda, beta).map_err(|e| e.to_string())?.value;
                ensure(alg == tor, || format!("lambda {lambda}, beta {beta}: {alg} != {tor}"))?;
            }
            normals += 1;
        }
    }
    Ok(format!("{normals} facet normals, 4 values of beta each"))
}

fn segment_expansion() -> Outcome {
    let seg = LatticePolytope::build(&[v(&[0]), v(&[1])]).map_err(|e| e.to_string())?;
    let series = sample_series(&seg, &v(&[1]), 6).map_err(|e| e.to_string())?;
    for s in series.samples() {
        let k = s.k as i64;
        ensure(s.w == rat(-k * (k + 1), 2), || format!("w_{k} = {}", s.w))?;
    }
    let c = fit_expansions(&series, &seg).map_err(|e| e.to_string())?;
    ensure(c.a0 == rat(-1, 2) && c.a1 == rat(-1, 2), || {
        format!("a0 = {}, a1 = {}", c.a0, c.a1)
    })?;
    Ok("w_k = -k(k+1)/2 for k = 1..6, a0 = a1 = -1/2".into())
}

fn random_reflexive(seed: u64, count: usize) -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<[i64; 2]> = (-2..=2).flat_map(|x| (-2..=2).map(move |y| [x, y])).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(3..=6);
        let pts: Vec<RatVec> = grid.choose_multiple(&mut rng, k).map(|p| v(p)).collect();
        let Ok(p) = LatticePolytope::build(&pts) else { continue };
        if !p.is_reflexive() {
            continue;
        }
        let mut key = p.vertices().to_vec();
        key.sort();
        if seen.insert(key) {
            out.push(p);
        }
    }
    out
}

fn sweep_matches_r() -> Outcome {
    let polys = random_reflexive(2024, 10);
    for p in &polys {
        let r = r_invariant(p).map_err(|e| e.to_string())?;
        // an independent minimum over the facet normals
        let mut best = Rat::one();
        for f in p.facets() {
            if let Some(c) = critical_beta(p, &f.normal_vec()).map_err(|e| e.to_string())? {
                best = best.min(c);
            }
        }
        let report = sweep(p).map_err(|e| e.to_string())?;
        ensure(best == r && report.r == r, || {
            format!("vertices {:?}: min critical {best}, R {r}", p.vertices())
        })?;
    }
    Ok(format!("{} distinct polygons in [-2, 2]^2", polys.len()))
}

struct ConeCase {
    alphas: &'static str,
    exists: bool,
    sign: i8,
    failed: &'static [&'static str],
}

fn conic_criteria() -> Outcome {
    let table = [
        ConeCase { alphas: "1/2,1/2,1/2", exists: true, sign: 1, failed: &[] },
        ConeCase { alphas: "1/3,1/3,1/3", exists: true, sign: 1, failed: &[] },
        ConeCase { alphas: "", exists: true, sign: 1, failed: &[] },
        ConeCase { alphas: "1/2,1/4", exists: false, sign: 1, failed: &["(b,1)"] },
        ConeCase { alphas: "1/2,1/2", exists: false, sign: 1, failed: &["(b,1)", "(b,2)"] },
        ConeCase { alphas: "1/3", exists: false, sign: 1, failed: &["(b,1)"] },
        ConeCase { alphas: "1/10,1/10,9/10", exists: false, sign: 1, failed: &["(b,3)"] },
        ConeCase { alphas: "1/2,1/3,1/6", exists: false, sign: 1, failed: &["(b,1)"] },
        ConeCase { alphas: "2/3,2/3,2/3", exists: true, sign: 0, failed: &[] },
        ConeCase { alphas: "1/2,1/2,1/2,1/2", exists: true, sign: 0, failed: &[] },
        ConeCase { alphas: "9/10,9/10,9/10", exists: true, sign: -1, failed: &[] },
        ConeCase { alphas: "3/4,3/4,3/4,3/4", exists: true, sign: -1, failed: &[] },
    ];
    for case in &table {
        let alphas = parse_rat_list(case.alphas).map_err(|e| e.to_string())?;
        let c = ConeData::new(alphas.clone()).map_err(|e| e.to_string())?;
        let e = existence_check(&c);
        ensure(
            e.exists == case.exists && e.curvature_sign == case.sign && e.failed_conditions == case.failed,
            || format!("[{}]: {e:?}", case.alphas),
        )?;
        let total: Rat = alphas.iter().sum();
        ensure(mean_scalar(&c) == int(2) - &total, || format!("[{}]: mean scalar", case.alphas))?;
        let r = int(alphas.len() as i64);
        ensure(futaki_sum(&c) == (r - int(2)) * &total, || {
            format!("[{}]: sum of F_i", case.alphas)
        })?;
    }
    Ok(format!("{} weight vectors", table.len()))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_toriclogk"))
        .args(args)
        .env("TORICLOGK_COLOR", "never")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited with {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("toriclogk-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("bl2p2.json");
    std::fs::write(&file, PolytopeFile::from_polytope("bl2p2", &builtins::bl2p2()).to_json())
        .map_err(|e| e.to_string())?;
    let path = file.to_str().unwrap();
    let runs: [&[&str]; 4] = [
        &["sweep", "--input", path],
        &["classify", "--input", path, "--beta", "21/25"],
        &["sweep", "--builtin", "bl1p2"],
        &["classify", "--builtin", "bl1p2", "--beta", "9/10"],
    ];
    let mut result = Ok(());
    for args in runs {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        if first != second || serde_json::from_slice::<serde_json::Value>(&first).is_err() {
            result = Err(format!("{args:?} differs between runs"));
            break;
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    result.map(|()| "sweep and classify byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("R-invariant exact values", r_exact),
        ("log-Futaki linear forms", futaki_forms),
        ("critical angles", critical_angles),
        ("stability trichotomy", trichotomy),
        ("lattice-point oracle equivalence", oracle_equivalence),
        ("segment weight expansion", segment_expansion),
        ("sweep minimum equals R", sweep_matches_r),
        ("conic metrics on the projective line", conic_criteria),
        ("CLI determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
