//! One line per acceptance criterion. Runs without the test harness so the
//! lines always show; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use w22::verify::{self, CheckResult};
use w22::{sample, Result, Truncation};

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<Vec<CheckResult>>,
}

fn w(n: u32, h: u32, k: u32) -> Truncation {
    Truncation::new(n, h, k)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "Lie axioms on generators with indices in [-6,6]",
            limit: Duration::from_secs(10),
            run: || Ok(verify::lie_axioms(6)),
        },
        Criterion {
            number: 2,
            title: "PBW straightening: associativity on 200 triples, normal forms fixed",
            limit: Duration::from_secs(60),
            run: || Ok(verify::straightening(&mut sample::rng(2), 200)),
        },
        Criterion {
            number: 3,
            title: "height lemmas: reordering powers, [W_m, L_lambda], commutator height drop",
            limit: Duration::from_secs(120),
            run: || verify::heights(&mut sample::rng(3), 200),
        },
        Criterion {
            number: 4,
            title: "Whittaker vectors of M_phi are S(z)w at windows (4,3,2) and (5,4,3)",
            limit: Duration::from_secs(240),
            run: || {
                let mut rng = sample::rng(4);
                let mut out = verify::whittaker_universal(&mut rng, &w(4, 3, 2), 3)?;
                out.extend(verify::whittaker_universal(&mut rng, &w(5, 4, 3), 3)?);
                Ok(out)
            },
        },
        Criterion {
            number: 5,
            title: "Whittaker vectors of M_phi/pM_phi have dimension deg p, p of degree 1, 2, 3",
            limit: Duration::from_secs(120),
            run: || verify::whittaker_quotient(&mut sample::rng(5), &w(4, 3, 2)),
        },
        Criterion {
            number: 6,
            title: "descent: 100 random vectors per module reach S(z)w with a strictly dropping measure",
            limit: Duration::from_secs(120),
            run: || verify::descent(&mut sample::rng(6), &w(4, 3, 2), 100),
        },
        Criterion {
            number: 7,
            title: "decomposition: Bezout identity, projectors on 25 vectors, invertibility off the component",
            limit: Duration::from_secs(60),
            run: || verify::decomposition(&mut sample::rng(7), &w(4, 3, 2), 25),
        },
        Criterion {
            number: 8,
            title: "composition series of M/(z-xi)^a M for a = 1, 2, 3",
            limit: Duration::from_secs(120),
            run: || verify::composition(&mut sample::rng(8), &w(4, 3, 2)),
        },
        Criterion {
            number: 9,
            title: "simplicity at window (4,3): L_phi,xi simple; M/(z-xi)^2 and M_phi give witnesses",
            limit: Duration::from_secs(180),
            run: || verify::simplicity(&mut sample::rng(9), &w(4, 3, 2)),
        },
        Criterion {
            number: 10,
            title: "module axiom on 100 triples; annihilator of w accepts 20 ideal elements, rejects L0, W0, L-1",
            limit: Duration::from_secs(60),
            run: || verify::module_annihilator(&mut sample::rng(10), &w(4, 3, 2), 100, 20),
        },
    ]
}

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, note) = match &outcome {
            Ok(checks) => {
                let bad: Vec<String> = checks
                    .iter()
                    .filter(|r| !r.passed)
                    .map(|r| format!("{}/{}: {}", r.suite, r.check, r.detail))
                    .collect();
                (bad.is_empty() && elapsed <= c.limit, bad.join("; "))
            }
            Err(e) => (false, e.to_string()),
        };
        println!(
            "criterion {:>2}: {} {} [{:.2}s of {}s]{}",
            c.number,
            if ok { "pass" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if note.is_empty() {
                String::new()
            } else {
                format!(" {note}")
            }
        );
        if !ok {
            failed.push(c.number);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
