use std::fmt::Write as _;

use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};
use toriclogk::ehrhart::{fit_expansions, orbifold_a1, sample_series};
use toriclogk::invariants::exit_point;
use toriclogk::p1conic;
use toriclogk::rational::{fmt_rat, Rat};
use toriclogk::stability::NOTE_SIGN;
use toriclogk::{
    classical_futaki, classify, critical_beta, log_futaki_toric, r_invariant, sweep, ConeData,
    LatticePolytope, PolytopeFile, RatVec, Verdict,
};

use crate::{load_polytope, svg, CliError, Command, Format, RunConfig};

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

fn rats(v: &RatVec) -> Value {
    serde_json::to_value(v).expect("vector serializes")
}

fn ints(v: &[num_bigint::BigInt]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| match i64::try_from(x) {
                Ok(i) => json!(i),
                Err(_) => json!(x.to_string()),
            })
            .collect(),
    )
}

fn paint(s: &str, verdict: Verdict, color: bool) -> String {
    if !color {
        return s.to_string();
    }
    let code = match verdict {
        Verdict::Stable => "32",
        Verdict::Semistable => "33",
        Verdict::Unstable => "31",
    };
    format!("\x1b[{code}m{s}\x1b[0m")
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

pub(crate) fn render(cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.command == Command::P1conic {
        return p1(cfg);
    }
    let input = cfg.input.as_ref().expect("validated");
    let (name, p) = load_polytope(input)?;
    match cfg.command {
        Command::Check => check(cfg, &name, &p),
        Command::R => r(cfg, &p),
        Command::Futaki => futaki(cfg, &p),
        Command::Classify => classify_cmd(cfg, &p),
        Command::Sweep => sweep_cmd(cfg, &p),
        Command::Oracle => oracle(cfg, &p),
        Command::Plot => Ok(svg::render_svg(&p, cfg.beta.as_ref())?),
        Command::P1conic => unreachable!(),
    }
}

fn lambda_of(cfg: &RunConfig) -> RatVec {
    RatVec::new(cfg.lambda.clone().expect("validated"))
}

fn check(cfg: &RunConfig, name: &str, p: &LatticePolytope) -> Result<String, CliError> {
    let file = PolytopeFile::from_polytope(name, p);
    if cfg.format == Format::Text {
        let mut s = String::new();
        writeln!(s, "{name}: dimension {}, {} vertices, {} facets", p.dim(), p.vertices().len(), p.facets().len()).unwrap();
        for v in p.vertices() {
            writeln!(s, "  vertex {v}").unwrap();
        }
        for f in p.facets() {
            writeln!(s, "  facet  {} . x <= {}", RatVec::from_bigints(f.normal()), f.offset()).unwrap();
        }
        writeln!(s, "reflexive: {}", p.is_reflexive()).unwrap();
        writeln!(s, "volume: {}", p.volume()).unwrap();
        writeln!(s, "barycenter: {}", p.barycenter()).unwrap();
        return Ok(s);
    }
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .map(|f| json!({ "normal": ints(f.normal()), "offset": fmt_rat(f.offset()) }))
        .collect();
    let mut out = serde_json::to_value(&file).expect("polytope serializes");
    let obj = out.as_object_mut().unwrap();
    obj.insert("facets".into(), Value::Array(facets));
    obj.insert("reflexive".into(), json!(p.is_reflexive()));
    obj.insert("volume".into(), json!(fmt_rat(p.volume())));
    obj.insert("barycenter".into(), rats(p.barycenter()));
    Ok(to_json(&out))
}

fn r(cfg: &RunConfig, p: &LatticePolytope) -> Result<String, CliError> {
    let r = r_invariant(p)?;
    let q = exit_point(p)?;
    if cfg.format == Format::Text {
        let mut s = format!("R = {r}\nbarycenter = {}\n", p.barycenter());
        if let Some(q) = &q {
            writeln!(s, "Q = {q}").unwrap();
        }
        return Ok(s);
    }
    Ok(to_json(&json!({
        "R": fmt_rat(&r),
        "barycenter": rats(p.barycenter()),
        "q": q.as_ref().map(rats),
    })))
}

fn futaki(cfg: &RunConfig, p: &LatticePolytope) -> Result<String, CliError> {
    let lambda = lambda_of(cfg);
    let classical = classical_futaki(p, &lambda)?;
    let critical = critical_beta(p, &lambda)?;
    let log = cfg
        .beta
        .as_ref()
        .map(|b| log_futaki_toric(p, &lambda, b))
        .transpose()?;
    let support = p.support(&lambda)?;
    if cfg.format == Format::Text {
        let mut s = String::new();
        writeln!(s, "lambda = {lambda}").unwrap();
        writeln!(s, "W(lambda) = {support}").unwrap();
        writeln!(s, "<P_c, lambda> = {}", p.barycenter().dot(&lambda)).unwrap();
        writeln!(s, "classical Futaki = {classical}").unwrap();
        match &critical {
            Some(c) => writeln!(s, "critical beta = {c}").unwrap(),
            None => writeln!(s, "critical beta = none in (0, 1)").unwrap(),
        }
        if let Some(l) = &log {
            writeln!(s, "log-Futaki at beta = {}: {}", l.beta, l.value).unwrap();
        }
        return Ok(s);
    }
    Ok(to_json(&json!({
        "lambda": rats(&lambda),
        "one_parameter_subgroup": lambda.is_integral(),
        "W": fmt_rat(&support),
        "pairing": fmt_rat(&p.barycenter().dot(&lambda)),
        "vol": fmt_rat(p.volume()),
        "classical_futaki": fmt_rat(&classical),
        "critical_beta": critical.as_ref().map(fmt_rat),
        "log_futaki": log,
        "notes": [NOTE_SIGN],
    })))
}

fn classify_cmd(cfg: &RunConfig, p: &LatticePolytope) -> Result<String, CliError> {
    let v = classify(p, cfg.beta.as_ref().expect("validated"))?;
    if cfg.format == Format::Text {
        let mut s = String::new();
        writeln!(s, "beta = {}, R = {}", v.beta, v.r).unwrap();
        writeln!(s, "verdict: {}", paint(v.verdict.as_str(), v.verdict, cfg.color)).unwrap();
        if let Some(w) = &v.witness {
            writeln!(s, "witness: {}", RatVec::from_bigints(w)).unwrap();
        }
        if let Some(q) = &v.q_beta {
            writeln!(s, "Q_beta = {q}").unwrap();
        }
        for n in &v.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        return Ok(s);
    }
    Ok(to_json(&v))
}

fn sweep_cmd(cfg: &RunConfig, p: &LatticePolytope) -> Result<String, CliError> {
    let s = sweep(p)?;
    if cfg.format == Format::Text {
        let mut out = format!("R = {}\n", s.r);
        for f in &s.per_facet {
            let c = f.critical_beta.as_ref().map_or("none".to_string(), fmt_rat);
            writeln!(out, "  facet {}: critical beta {c}", RatVec::from_bigints(&f.normal)).unwrap();
        }
        return Ok(out);
    }
    Ok(to_json(&s))
}

fn oracle(cfg: &RunConfig, p: &LatticePolytope) -> Result<String, CliError> {
    let lambda = lambda_of(cfg);
    let n = p.dim();
    let kmax = cfg.kmax.unwrap_or(n as u64 + 4);
    let series = sample_series(p, &lambda, kmax)?;
    let coeffs = fit_expansions(&series, p)?;
    let support = p.support(&lambda)?;
    let section = series.section_samples(&support)?;
    let vol = p.volume();
    let pairing = p.barycenter().dot(&lambda);
    let nn = Rat::from_integer(n.into());

    let checks = [
        ("b0 = Vol", coeffs.b0 == *vol),
        ("a0 = -Vol <P_c, lambda>", coeffs.a0 == -(vol * &pairing)),
        (
            "a0~ = (n+1) a0 + W b0",
            coeffs.a0_tilde == (&nn + Rat::one()) * &coeffs.a0 + &support * &coeffs.b0,
        ),
        ("b0~ = n b0", coeffs.b0_tilde == &nn * &coeffs.b0),
        (
            "2 (a1 b0 - a0 b1) / b0 = -Vol <P_c, lambda>",
            coeffs.donaldson_futaki()? == -(vol * &pairing),
        ),
    ];

    if cfg.format == Format::Text {
        let mut s = String::new();
        writeln!(s, "lambda = {lambda}, W = {support}").unwrap();
        writeln!(s, "{:>4} {:>10} {:>14} {:>10} {:>14}", "k", "d_k", "w_k", "d~_k", "w~_k").unwrap();
        for (a, b) in series.samples().iter().zip(&section) {
            writeln!(s, "{:>4} {:>10} {:>14} {:>10} {:>14}", a.k, a.d, a.w, b.d_tilde, b.w_tilde).unwrap();
        }
        for (name, v) in [
            ("a0", &coeffs.a0),
            ("a1", &coeffs.a1),
            ("b0", &coeffs.b0),
            ("b1", &coeffs.b1),
            ("a0~", &coeffs.a0_tilde),
            ("b0~", &coeffs.b0_tilde),
        ] {
            writeln!(s, "{name} = {v}").unwrap();
        }
        writeln!(s, "orbifold a1 = {}", orbifold_a1(&coeffs)).unwrap();
        for (name, ok) in checks {
            writeln!(s, "{}: {name}", pass(ok)).unwrap();
        }
        return Ok(s);
    }

    let samples: Vec<Value> = series
        .samples()
        .iter()
        .zip(&section)
        .map(|(a, b)| {
            json!({
                "k": a.k,
                "d": a.d.to_string(),
                "w": fmt_rat(&a.w),
                "d_tilde": b.d_tilde.to_string(),
                "w_tilde": fmt_rat(&b.w_tilde),
            })
        })
        .collect();
    let check_map: serde_json::Map<String, Value> = checks
        .iter()
        .map(|(name, ok)| (name.to_string(), json!(pass(*ok))))
        .collect();
    Ok(to_json(&json!({
        "lambda": rats(&lambda),
        "W": fmt_rat(&support),
        "k_max": kmax,
        "samples": samples,
        "coefficients": coeffs,
        "orbifold_a1": fmt_rat(&orbifold_a1(&coeffs)),
        "checks": Value::Object(check_map),
    })))
}

fn p1(cfg: &RunConfig) -> Result<String, CliError> {
    let c = ConeData::new(cfg.alphas.clone().expect("validated"))?;
    let rep = p1conic::report(&c);
    if cfg.format == Format::Text {
        let mut s = String::new();
        writeln!(s, "2 - sum alpha = {} (curvature sign {})", rep.mean_scalar, rep.curvature_sign).unwrap();
        let vals: Vec<String> = rep.futaki_values.iter().map(fmt_rat).collect();
        writeln!(s, "log-Futaki values: {}", vals.join(", ")).unwrap();
        writeln!(s, "stable along all marked points: {}", rep.stable_all).unwrap();
        writeln!(s, "conic metric exists: {}", rep.exists).unwrap();
        if !rep.failed_conditions.is_empty() {
            writeln!(s, "failed: {}", rep.failed_conditions.join(" ")).unwrap();
        }
        return Ok(s);
    }
    Ok(to_json(&rep))
}
