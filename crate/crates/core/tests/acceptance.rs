//! One line per acceptance criterion: status, wall time and the limit it is held to.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use silt_core::harness::{
    closure_fuzz, reduction_consistency, silting_properties, verify_paper, Config, CorpusSpec, VerificationReport,
};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(&Config) -> silt_core::Result<VerificationReport>,
}

fn paper(only: &'static [&'static str]) -> impl Fn(&Config) -> silt_core::Result<VerificationReport> {
    move |cfg| {
        let mut r = VerificationReport::default();
        for o in only {
            r.merge(verify_paper(cfg, Some(o))?);
        }
        Ok(r)
    }
}

fn c1(cfg: &Config) -> silt_core::Result<VerificationReport> {
    paper(&["gl_dim"])(cfg)
}

fn c2(cfg: &Config) -> silt_core::Result<VerificationReport> {
    paper(&["endo_tilting"])(cfg)
}

fn c3(cfg: &Config) -> silt_core::Result<VerificationReport> {
    paper(&["classification"])(cfg)
}

fn c4(cfg: &Config) -> silt_core::Result<VerificationReport> {
    paper(&["example_quasitilted", "example_shod"])(cfg)
}

fn c5(cfg: &Config) -> silt_core::Result<VerificationReport> {
    closure_fuzz(cfg, &CorpusSpec::default())
}

fn c6(cfg: &Config) -> silt_core::Result<VerificationReport> {
    silting_properties(cfg, 4, 25, 0, 3)
}

fn c7(cfg: &Config) -> silt_core::Result<VerificationReport> {
    reduction_consistency(cfg, 25, 0, 3)
}

fn c8(cfg: &Config) -> silt_core::Result<VerificationReport> {
    paper(&["knitting_vs_intervals", "support_tau_count", "presentation_round_trip"])(cfg)
}

const CRITERIA: [Criterion; 8] = [
    Criterion { id: 1, title: "gl.dim A(n,k) = k-1 for 2 <= k <= n <= 7", limit: Some(Duration::from_secs(10)), run: c1 },
    Criterion {
        id: 2,
        title: "T rigid, Hom(T, τT) = 0, End(T) ≅ A(n,k+1) for 2 <= k < n <= 7",
        limit: Some(Duration::from_secs(60)),
        run: c2,
    },
    Criterion { id: 3, title: "classification of A(n,k), n <= 7", limit: None, run: c3 },
    Criterion { id: 4, title: "Bongartz completion over A(4,3); End(U_I(5)) over A(5,4)", limit: None, run: c4 },
    Criterion {
        id: 5,
        title: "closure under quotients, corners and τ-reduction (A(n,k) n <= 6, 50 random A_6)",
        limit: Some(Duration::from_secs(600)),
        run: c5,
    },
    Criterion { id: 6, title: "silting mutation, cardinality and completion over kA_n, n <= 4, window ±3", limit: None, run: c6 },
    Criterion { id: 7, title: "silting reduction on 25 instances; matched τ-tilting reduction", limit: None, run: c7 },
    Criterion {
        id: 8,
        title: "knitting = intervals; kA_2 has 5 support τ-tilting modules; presentation round trip",
        limit: None,
        run: c8,
    },
];

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let res = (c.run)(&cfg);
        let took = start.elapsed();
        let in_time = c.limit.is_none_or(|l| took <= l);
        let (ok, note) = match &res {
            Ok(r) if r.checks.is_empty() => (false, "no checks ran".to_string()),
            Ok(r) => {
                let n: usize = r.checks.iter().map(|k| k.instances).sum();
                (r.passed(), format!("{} checks, {n} instances", r.checks.len()))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let limit = c.limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        let tag = if ok && in_time { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {} ({note}; {:.2} s{limit})", c.id, c.title, took.as_secs_f64());
        if !(ok && in_time) {
            failed += 1;
            if let Ok(r) = &res {
                for line in r.render_text().lines().filter(|l| !l.starts_with("PASS")) {
                    println!("    {line}");
                }
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
