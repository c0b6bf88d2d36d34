//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;

use mtcodes::cli::commands::Limits;
use mtcodes::cli::probe::{probe, revalidate, ProbeConfig};
use mtcodes::cli::verify::{self, VerifyConfig, VerifySummary};
use mtcodes::corpus::{self, CodeSampler, CorpusConfig};
use mtcodes::decomp;
use mtcodes::lcd::constacyclic_is_lcd;
use mtcodes::mtcode::DEFAULT_MAX_ENUM;
use mtcodes::{ConstituentCode, Distance, Field, MTCode, MTShape, Poly, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).min(8)
}

fn summary_for(seed: u64) -> Result<(VerifySummary, Duration)> {
    let config = VerifyConfig {
        corpus: CorpusConfig { seed, ..CorpusConfig::default() },
        workers: workers(),
        ..VerifyConfig::default()
    };
    let t = Instant::now();
    let s = verify::run(&config, &Limits::default())?;
    Ok((s, t.elapsed()))
}

fn counts(s: &VerifySummary, name: &str) -> (usize, usize, usize) {
    let p = s.property(name).expect("known property");
    (p.pass, p.fail, p.skip)
}

fn criterion1(s: &VerifySummary, elapsed: Duration) -> Outcome {
    let (pass, fail, skip) = counts(s, "dimension_agree");
    let ok = s.instances == 500 && pass == 500 && fail == 0 && skip == 0 && s.repeated_root > 0;
    let ok = ok && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "{pass}/{} agree (rank = minors = hnf), {} with gcd(m_i, q) != 1, {:.1}s",
            s.instances,
            s.repeated_root,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion2(s: &VerifySummary) -> Outcome {
    let (ds, ds_fail, _) = counts(s, "direct_sum");
    let (dd, dd_fail, _) = counts(s, "dual_direct_sum");
    let (cont, cont_fail, _) = counts(s, "containment");
    let ok = s.decomposable >= 100
        && ds == s.decomposable
        && dd == s.decomposable
        && ds_fail + dd_fail + cont_fail == 0
        && cont == s.instances;
    outcome(ok, format!("{} decomposable: direct sum {ds}, dual direct sum {dd}; containment {cont}/{}", s.decomposable, s.instances))
}

/// Recomputed directly rather than read from the summary.
fn criterion3() -> Result<Outcome> {
    let entries = corpus::generate(&CorpusConfig::default())?;
    let (mut checked, mut bad) = (0, 0);
    for e in &entries {
        if !decomp::is_decomposable(&e.code)?.decomposable {
            continue;
        }
        let size = e.code.expand().size();
        if !matches!(size, Some(s) if s <= 1 << 16) {
            continue;
        }
        checked += 1;
        let r = decomp::distance_min_rule(&e.code, 1 << 16)?;
        if !r.rule_holds {
            bad += 1;
        }
    }
    Ok(outcome(bad == 0 && checked > 0, format!("{checked} decomposable instances with q^k <= 2^16, {bad} violations")))
}

/// Every monic polynomial of degree <= m that divides x^m - lambda.
fn monic_divisors(f: &Field, m: usize, lambda: u32) -> Result<Vec<Poly>> {
    let modulus = Poly::twist_modulus(f, m, f.element(lambda)?);
    let q = f.order() as u64;
    let mut out = Vec::new();
    for d in 0..=m {
        for idx in 0..q.pow(d as u32) {
            let mut codes: Vec<u32> = (0..d).map(|j| ((idx / q.pow(j as u32)) % q) as u32).collect();
            codes.push(1);
            let g = Poly::from_codes(f, &codes)?;
            if g.divides(&modulus)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

fn criterion4(s: &VerifySummary) -> Result<Outcome> {
    let mut cases = 0;
    let mut mismatches = 0;
    let mut branch_b_non_lcd = 0;
    for (q, max_m) in [(2u32, 8usize), (3, 6)] {
        let f = Field::prime(q)?;
        for m in 1..=max_m {
            for g in monic_divisors(&f, m, 1)? {
                let rule = constacyclic_is_lcd(&g, m, f.one())?;
                let hull = ConstituentCode::new(&f, 0, f.one(), m, g)?.expand().is_lcd();
                cases += 1;
                mismatches += usize::from(rule != hull);
            }
        }
    }
    let a = format!("(a) {cases} cyclic codes, {mismatches} mismatches");
    let a_ok = mismatches == 0;

    let f5 = Field::prime(5)?;
    let (mut b_cases, mut b_mis) = (0, 0);
    for lambda in [2, 3] {
        for m in 1..=4 {
            for g in monic_divisors(&f5, m, lambda)? {
                let l = f5.element(lambda)?;
                let rule = constacyclic_is_lcd(&g, m, l)?;
                let hull = ConstituentCode::new(&f5, 0, l, m, g)?.expand().is_lcd();
                b_cases += 1;
                b_mis += usize::from(rule != hull);
                branch_b_non_lcd += usize::from(!hull);
            }
        }
    }
    let b_ok = b_mis == 0 && branch_b_non_lcd == 0;
    let b = format!("(b) {b_cases} twisted codes over F_5, {b_mis} mismatches, {branch_b_non_lcd} non-LCD");

    let (pass, fail, _) = counts(s, "block_lcd_rule");
    let c_ok = fail == 0 && pass == s.decomposable;
    let c = format!("(c) criterion = hull on {pass}/{} decomposable", s.decomposable);
    Ok(outcome(a_ok && b_ok && c_ok, format!("{a}; {b}; {c}")))
}

fn f5_nonsquare_twists(code: &MTCode) -> bool {
    code.field().order() == 5 && code.shape().lambdas().iter().all(|l| matches!(l.code(), 2 | 3))
}

/// Corpus instances plus a targeted sample, so the check is never vacuous.
fn criterion5() -> Result<Outcome> {
    let entries = corpus::generate(&CorpusConfig::default())?;
    let (mut corpus_n, mut extra_n, mut bad) = (0, 0, 0);
    for e in &entries {
        if f5_nonsquare_twists(&e.code) && decomp::is_decomposable(&e.code)?.decomposable {
            corpus_n += 1;
            bad += usize::from(!e.code.expand().is_lcd());
        }
    }
    let f5 = Field::prime(5)?;
    let mut sampler = CodeSampler::new(42);
    for _ in 0..300 {
        let ell = sampler.rng().gen_range(1..=3);
        let lambdas: Vec<u32> = (0..ell).map(|_| if sampler.rng().gen_bool(0.5) { 2 } else { 3 }).collect();
        let ms: Vec<usize> = (0..ell).map(|_| sampler.rng().gen_range(1..=6)).collect();
        let rho = sampler.rng().gen_range(1..=3);
        let code = sampler.code(MTShape::from_codes(&f5, &lambdas, &ms)?, rho);
        if decomp::is_decomposable(&code)?.decomposable {
            extra_n += 1;
            bad += usize::from(!code.expand().is_lcd());
        }
    }
    Ok(outcome(bad == 0 && corpus_n + extra_n > 0, format!("{corpus_n} corpus + {extra_n} targeted decomposable codes over F_5 with twists in {{2, 3}}, {bad} non-LCD")))
}

fn criterion6(s: &VerifySummary) -> Outcome {
    let (pass, fail, _) = counts(s, "thresholds");
    outcome(fail == 0 && pass > 0, format!("S = min S_i on {pass} decomposable LCD instances, {fail} exceptions"))
}

fn criterion7() -> Result<Outcome> {
    let t = Instant::now();
    let f2 = Field::prime(2)?;
    let cyclic = |g: &[u32]| -> Result<MTCode> {
        MTCode::from_codes(MTShape::from_codes(&f2, &[1], &[7])?, &[vec![g.to_vec()]])
    };
    let ham = cyclic(&[1, 1, 0, 1])?.expand();
    let rep = cyclic(&[1; 7])?.expand();
    let hd = ham.min_distance(DEFAULT_MAX_ENUM)?;
    let rd = rep.min_distance(DEFAULT_MAX_ENUM)?;
    let ok = ham.dimension() == 4
        && hd == Distance::Finite(3)
        && !ham.is_lcd()
        && rep.dimension() == 1
        && rd == Distance::Finite(7)
        && rep.is_lcd()
        && t.elapsed() < Duration::from_secs(1);
    Ok(outcome(
        ok,
        format!(
            "Hamming [7,{},{hd}] LCD={}, repetition [7,{},{rd}] LCD={}",
            ham.dimension(),
            ham.is_lcd(),
            rep.dimension(),
            rep.is_lcd()
        ),
    ))
}

fn criterion8() -> Result<Outcome> {
    let t = Instant::now();
    let limits = Limits::default();
    let cfg = |seed| ProbeConfig { q: 2, modulus: None, lambda: vec![1, 1], m: vec![2, 2], rho: 1, budget: 1 << 20, seed };
    let a = probe(&cfg(1), &limits)?;
    let b = probe(&cfg(2), &limits)?;
    let valid = revalidate(&a, &limits)?;
    let total: u64 = a.buckets.values().map(|b| b.count).sum();
    let ok = a.exhaustive && a.examined == 16 && total == 16 && valid && a == b && t.elapsed() < Duration::from_secs(10);
    Ok(outcome(
        ok,
        format!("exhaustive={} examined={} buckets={} witnesses valid={valid} seed-independent={}", a.exhaustive, a.examined, a.buckets.len(), a == b),
    ))
}

fn criterion9() -> Outcome {
    let run = |workers: usize| {
        Command::new(env!("CARGO_BIN_EXE_mtcodes"))
            .args(["--seed", "42", "--machine", "verify", "--workers", &workers.to_string()])
            .output()
            .expect("run mtcodes")
    };
    let a = run(1);
    let b = run(1);
    let c = run(workers().max(2));
    let ok = a.status.success() && a.stdout == b.stdout && a.stdout == c.stdout && !a.stdout.is_empty();
    outcome(ok, format!("{} bytes, identical across runs and 1 vs {} workers: {}", a.stdout.len(), workers().max(2), ok))
}

fn main() -> ExitCode {
    let (summary, elapsed) = summary_for(42).expect("corpus verification runs");
    let results: Vec<(u32, Result<Outcome>)> = vec![
        (1, Ok(criterion1(&summary, elapsed))),
        (2, Ok(criterion2(&summary))),
        (3, criterion3()),
        (4, criterion4(&summary)),
        (5, criterion5()),
        (6, Ok(criterion6(&summary))),
        (7, criterion7()),
        (8, criterion8()),
        (9, Ok(criterion9())),
    ];
    let mut all = true;
    for (n, r) in results {
        let o = r.unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        all &= o.pass;
        println!("criterion {n}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
