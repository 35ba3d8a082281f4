//! Acceptance criteria, one line of output per criterion.

mod common;

use std::time::{Duration, Instant};

use bkl4::circuits::{all_rigid, DEFAULT_SC_CAP};
use bkl4::classical::{bkl_to_artin, classical_is_trivial};
use bkl4::families::{beta_normal_form, beta_sc_size, beta_word, e_family};
use bkl4::simple::{self_check, ALL, ATOMS};
use bkl4::sliding::{cyclic_sliding, is_rigid};
use bkl4::{
    compute_sc, minimal_arrows, orbit_partition, quotient_graph, solve_conjugacy,
    verify_certificate, DualSimple, GarsideBraid, SolverDecision,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sc(x: &GarsideBraid) -> bkl4::SCGraph {
    compute_sc(x, DEFAULT_SC_CAP).expect("default cap is ample")
}

fn beta_family() -> Outcome {
    for k in 1..=5u32 {
        let x = beta_word(k).normalize();
        ensure(x == beta_normal_form(k), || format!("k={k}: normal form {x}"))?;
        ensure(is_rigid(&x) && x.inf() == 0, || format!("k={k}: not rigid with inf 0"))?;
        let l = x.canonical_length();
        ensure(l == 3 * k as usize + 5, || format!("k={k}: ℓ={l}"))?;
        let g = sc(&x);
        ensure(g.len() == beta_sc_size(k), || format!("k={k}: #SC={}", g.len()))?;
        let q = quotient_graph(&g);
        ensure(q.len() == 3 * k as usize + 2 && q.is_path(), || {
            format!("k={k}: quotient has {} vertices, path={}", q.len(), q.is_path())
        })?;
    }
    Ok("#SC = 160, 352, 616, 952, 1360; quotients are paths".into())
}

fn atom_powers() -> Outcome {
    for &a in &ATOMS {
        for m in 1..=3usize {
            let x = GarsideBraid::from_product(0, &vec![a; m]);
            let mut got = sc(&x).vertices().to_vec();
            got.sort();
            let mut want: Vec<GarsideBraid> = ATOMS
                .iter()
                .map(|&b| GarsideBraid::from_product(0, &vec![b; m]))
                .collect();
            want.sort();
            ensure(got == want, || format!("{a}^{m}: {} vertices", got.len()))?;
        }
    }
    Ok("18 sets of six atom powers".into())
}

fn table_checks() -> Outcome {
    self_check().map_err(|e| format!("{e:?}"))?;
    for s in ALL {
        ensure(s.complement().complement() == s.tau(), || format!("∂² ≠ τ at {s}"))?;
        ensure(s.tau_pow(4) == s, || format!("τ⁴ ≠ id at {s}"))?;
        ensure(s.weight() + s.complement().weight() == 3, || format!("weights at {s}"))?;
        ensure(s.compose(s.complement()) == Some(DualSimple::Delta), || {
            format!("s·∂s ≠ δ at {s}")
        })?;
    }
    let mut pairs = 0;
    for a in ALL.into_iter().filter(|a| a.weight() == 2) {
        for b in ALL.into_iter().filter(|b| b.is_proper()) {
            // a·b is a normal form exactly when δ does not divide a·b
            let delta_divides = a.complement().divides(b);
            ensure(a.left_weighted(b) == !delta_divides, || format!("pair {a}.{b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("all identities hold; {pairs} weight-2 pairs checked over 14×14"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = common::rng(4);
    let mut trivial = 0;
    for i in 0..10_000 {
        let w1 = common::random_word(&mut rng, 40);
        let w2 = if i % 2 == 0 {
            common::rewrite(&mut rng, &w1, 8)
        } else {
            common::random_word(&mut rng, 40)
        };
        let mut q = w1.clone();
        q.append(&w2.inverse());
        let dual = q.normalize().is_identity();
        let classical = classical_is_trivial(&bkl_to_artin(&q));
        ensure(dual == classical, || format!("disagreement on {q:?}"))?;
        trivial += dual as usize;
    }
    Ok(format!("10000/10000 agree ({trivial} trivial)"))
}

fn sliding_bound() -> Outcome {
    let mut rng = common::rng(5);
    for _ in 0..10_000 {
        let mut x = common::random_normal_form(&mut rng, 30);
        for _ in 0..3 * x.canonical_length() {
            x = cyclic_sliding(&x).after;
        }
        let settled = (x.inf(), x.sup());
        for _ in 0..10 {
            x = cyclic_sliding(&x).after;
            ensure((x.inf(), x.sup()) == settled, || format!("moved after 3ℓ: {x}"))?;
        }
    }
    Ok("10000 braids stable after 3ℓ slidings".into())
}

/// Circuit sets shared by criteria 6 and 7.
fn sample_sc_sets() -> Vec<(GarsideBraid, bkl4::SCGraph)> {
    let mut rng = common::rng(6);
    let mut out = Vec::new();
    for k in 0..3 {
        let x = beta_normal_form(k);
        out.push((x.clone(), sc(&x)));
    }
    while out.len() < 200 {
        let x = if out.len() % 4 == 0 {
            common::rigid_mixed(&mut rng, 8)
        } else {
            common::random_braid(&mut rng, 6)
        };
        out.push((x.clone(), sc(&x)));
    }
    out
}

fn sss_invariance(sets: &[(GarsideBraid, bkl4::SCGraph)]) -> Outcome {
    let key = |y: &GarsideBraid| {
        let i = y.invariants();
        (i.inf, i.sup, i.canonical_length, i.k1, i.k2)
    };
    let mut vertices = 0;
    for (x, g) in sets {
        let want = key(g.base());
        for v in g.vertices() {
            ensure(key(v) == want, || format!("SC({x}) mixes {want:?} and {:?}", key(v)))?;
        }
        vertices += g.len();
    }
    Ok(format!("{} sets, {vertices} vertices", sets.len()))
}

fn orbit_bound(sets: &[(GarsideBraid, bkl4::SCGraph)]) -> Outcome {
    let mut rigid_sets = 0;
    let mut orbits = 0;
    for (x, g) in sets {
        if g.base().is_delta_power() || !all_rigid(g) {
            continue;
        }
        rigid_sets += 1;
        let l = g.base().canonical_length();
        for o in orbit_partition(g) {
            ensure(o.len() <= 4 * l, || format!("SC({x}): orbit of {} > 4·{l}", o.len()))?;
            orbits += 1;
        }
    }
    Ok(format!("{rigid_sets} rigid sets, {orbits} orbits"))
}

fn mixed_weight_rigid() -> Outcome {
    let mut rng = common::rng(8);
    for i in 0..120 {
        let y = if i % 3 == 0 {
            common::rigid_mixed_seeded(&mut rng)
        } else {
            common::rigid_mixed(&mut rng, 10)
        };
        let g = sc(&y);
        let n = orbit_partition(&g).len();
        ensure(n == 1, || format!("{y}: {n} orbits"))?;
        ensure(g.len() <= 4 * y.canonical_length(), || format!("{y}: #SC={}", g.len()))?;
    }
    Ok("120 braids, each SC a single orbit".into())
}

fn e_case() -> Outcome {
    let mut rng = common::rng(9);
    let rs = [1usize, 4, 8, 12, 16, 20, 24];
    let mut count = 0;
    for round in 0..9 {
        for &r in &rs {
            let y = e_family(&common::e_exponents(&mut rng, r, 1 + round % 4));
            ensure(is_rigid(&y), || format!("{y} not rigid"))?;
            let g = sc(&y);
            let q = quotient_graph(&g);
            let l = y.canonical_length();
            ensure(q.len() <= 6, || format!("{y}: quotient of {}", q.len()))?;
            ensure(g.len() <= 24 * l, || format!("{y}: #SC={} > 24·{l}", g.len()))?;
            if r > 1 {
                let complement = y.factors().last().unwrap().complement();
                let strict = minimal_arrows(&y)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .filter(|&s| s.divides(complement) && s != complement)
                    .count();
                ensure((strict > 0) == (r % 3 == 0), || {
                    format!("r={r}: {strict} strict-prefix arrows")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} instances, r in {rs:?}"))
}

fn solver_round_trip() -> Outcome {
    let mut rng = common::rng(10);
    for _ in 0..500 {
        let x = common::random_normal_form(&mut rng, 15);
        let w = common::random_word(&mut rng, 10).normalize();
        let y = x.conjugate(&w);
        match solve_conjugacy(&x, &y, false) {
            SolverDecision::Conjugate(c) => {
                ensure(verify_certificate(&c), || format!("bad certificate for {x}"))?
            }
            other => return Err(format!("{x} vs {y}: {other:?}")),
        }
    }
    for _ in 0..500 {
        let x = common::random_normal_form(&mut rng, 15);
        let w = common::random_word(&mut rng, 10).normalize();
        let y = x.conjugate(&w).multiply_simple(ATOMS[0]);
        let d = solve_conjugacy(&x, &y, false);
        ensure(matches!(d, SolverDecision::NotConjugate(_)), || format!("{x}: {d:?}"))?;
    }
    Ok("500 conjugate pairs certified, 500 λ-mismatched pairs rejected".into())
}

fn median_time(mut f: impl FnMut()) -> Duration {
    let mut times: Vec<Duration> = (0..7)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[3]
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let cov: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    cov / var
}

fn cubic_scaling() -> Outcome {
    let mut rng = common::rng(11);
    let mut points = Vec::new();
    for k in 1..=8 {
        let x = beta_normal_form(k);
        let w = common::random_word(&mut rng, 10).normalize();
        let y = x.conjugate(&w);
        let t = median_time(|| {
            let d = solve_conjugacy(&x, &y, false);
            assert!(d.is_conjugate());
        });
        points.push(((x.canonical_length() as f64).ln(), t.as_secs_f64().ln()));
    }
    let s = slope(&points);
    ensure(s <= 3.5, || format!("slope {s:.2}"))?;
    Ok(format!("log-log slope {s:.2}"))
}

fn quadratic_bound() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 1..=8 {
        let x = beta_normal_form(k);
        let l = x.canonical_length() as f64;
        let n = sc(&x).len();
        ensure(n == beta_sc_size(k), || format!("k={k}: #SC={n}"))?;
        worst = worst.max(n as f64 / (l * l));
    }
    ensure(worst <= 4.5, || format!("ratio {worst:.3}"))?;
    Ok(format!("max #SC/ℓ² = {worst:.3}"))
}

fn main() {
    let start = Instant::now();
    let sets = sample_sc_sets();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("β_k sliding circuits", Box::new(beta_family)),
        ("atom powers", Box::new(atom_powers)),
        ("table self-checks", Box::new(table_checks)),
        ("classical oracle agreement", Box::new(oracle_equivalence)),
        ("sliding reaches SSS in 3ℓ steps", Box::new(sliding_bound)),
        ("SSS invariants", Box::new(|| sss_invariance(&sets))),
        ("orbit bound", Box::new(|| orbit_bound(&sets))),
        ("mixed-weight rigid braids", Box::new(mixed_weight_rigid)),
        ("𝓔-case", Box::new(e_case)),
        ("solver round trip", Box::new(solver_round_trip)),
        ("cubic scaling", Box::new(cubic_scaling)),
        ("quadratic SC bound", Box::new(quadratic_bound)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} ({elapsed:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail} ({elapsed:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
