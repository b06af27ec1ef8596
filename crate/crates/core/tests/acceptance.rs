//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runtime bounds are pinned below; the suite fails if any check fails or
//! overruns.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use orderfix::engine::{decide_dim3, non_fixed_by_extreme_lemma};
use orderfix::equivalence::{
    all_linear_configurations, canonical_form, canonical_key, class_keys, count_classes,
    count_classes_by_burnside,
};
use orderfix::landmark::{scan, PointCloud};
use orderfix::sign::{fadd, fmul, fmul_config, formal_det_sign_3x3};
use orderfix::{ConfigSign, Configuration, DetSign, Engine, EngineOptions, FormalSign, Status};

const SAMPLES: usize = 1000;
const SYNTHETIC: &str = include_str!("../data/landmarks_synthetic.csv");

type Outcome = Result<String, String>;

struct Report {
    failures: Vec<String>,
}

impl Report {
    fn run(&mut self, id: u32, title: &str, bound: Option<Duration>, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let timing = match bound {
            Some(b) => format!("{:.2?} (bound {:.0?})", elapsed, b),
            None => format!("{:.2?}", elapsed),
        };
        let (ok, detail) = match outcome {
            Ok(d) if bound.is_none_or(|b| elapsed <= b) => (true, d),
            Ok(d) => (false, format!("{d}; exceeded runtime bound")),
            Err(d) => (false, d),
        };
        let line = format!("{} [{id}] {title}: {detail} [{timing}]", if ok { "PASS" } else { "FAIL" });
        // Written to the raw handle so the report shows without --nocapture.
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{line}");
        let _ = out.flush();
        if !ok {
            self.failures.push(line);
        }
    }
}

fn engine() -> Engine {
    Engine::new(EngineOptions::default())
}

fn cfg(text: &str) -> Configuration {
    text.parse().expect("valid configuration")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A fixed sign must be the only one seen in independent sampling.
fn sampling_agrees(c: &Configuration, sign: ConfigSign, seed: u64) -> Result<(), String> {
    let (pos, neg, zero) = common::sampled_signs(c, seed, SAMPLES);
    let expected = match sign {
        ConfigSign::Plus => (SAMPLES, 0, 0),
        ConfigSign::Minus => (0, SAMPLES, 0),
        ConfigSign::Both => return Err(format!("fixed verdict with sign +-\n{c}")),
    };
    ensure((pos, neg, zero) == expected, || {
        format!("fixed {sign} but sampled +{pos} -{neg} 0:{zero}\n{c}")
    })
}

fn witness_verifies(e: &Engine, c: &Configuration) -> Result<(), String> {
    let (_, pair) = e.witness(c).map_err(|err| format!("{err}\n{c}"))?;
    let pair = pair.ok_or_else(|| format!("no witness for a non-fixed verdict\n{c}"))?;
    for (p, want) in [(&pair.plus, DetSign::Pos), (&pair.minus, DetSign::Neg)] {
        ensure(p.satisfies(c).map_err(|e| e.to_string())?, || format!("witness violates\n{c}"))?;
        let got = p.det_sign().map_err(|e| e.to_string())?;
        ensure(got == want, || format!("witness has sign {got:?}, wanted {want:?}\n{c}"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let e = engine();
    let configs: Vec<Configuration> = all_linear_configurations(3).collect();
    ensure(configs.len() == 36, || format!("{} configurations", configs.len()))?;
    let mut non_fixed = 0;
    for (i, c) in configs.iter().enumerate() {
        let v = e.decide(c).map_err(|err| err.to_string())?;
        let chains = c.chains().unwrap();
        let mut rev = chains[1].clone();
        rev.reverse();
        let conformal = chains[0] == chains[1] || chains[0] == rev;
        // Brute-force oracle: both signs appear iff not fixed.
        let (pos, neg, _) = common::sampled_signs(c, 100 + i as u64, SAMPLES);
        let sampled_both = pos > 0 && neg > 0;
        ensure(conformal == sampled_both, || format!("sampling oracle disagrees with conformality\n{c}"))?;
        match v {
            orderfix::FixityVerdict::NonFixed { .. } => {
                ensure(conformal, || format!("non-conformal decided non-fixed\n{c}"))?;
                non_fixed += 1;
            }
            orderfix::FixityVerdict::Fixed { sign, .. } => {
                ensure(!conformal, || format!("conformal decided fixed\n{c}"))?;
                sampling_agrees(c, sign, 100 + i as u64)?;
            }
            other => return Err(format!("unexpected {}\n{c}", other.summary())),
        }
    }
    ensure(non_fixed == 12, || format!("{non_fixed} non-fixed, expected 12"))?;
    Ok(format!("36 configurations, 24 fixed, 12 non-fixed, {SAMPLES} samples each"))
}

const PAPER_FIXED: [&str; 4] = [
    "x: B<C<A<D\ny: C<A<B<D\nz: A<B<C<D",
    "x: B<C<D<A\ny: C<A<B<D\nz: A<B<C<D",
    "x: B<D<C<A\ny: C<A<B<D\nz: A<B<C<D",
    "x: B<C<D<A\ny: C<D<A<B\nz: A<B<C<D",
];

fn criterion_2() -> Outcome {
    let e = engine();
    let mut classes: BTreeMap<_, Vec<(Status, Option<ConfigSign>)>> = BTreeMap::new();
    let mut total = 0;
    for c in all_linear_configurations(4) {
        let v = e.decide(&c).map_err(|err| err.to_string())?;
        let (_, g) = canonical_form(&c).map_err(|err| err.to_string())?;
        let key = canonical_key(&c).map_err(|err| err.to_string())?;
        // Report the sign transported back to the canonical representative.
        let transported = v.sign().map(|s| match s {
            ConfigSign::Both => ConfigSign::Both,
            s => s.times(g.sign_parity()),
        });
        classes.entry(key).or_default().push((v.status(), transported));
        total += 1;
    }
    ensure(total == 13824, || format!("{total} configurations"))?;
    ensure(classes.len() == 21, || format!("{} classes", classes.len()))?;
    let mut fixed_keys = BTreeSet::new();
    for (key, members) in &classes {
        ensure(members.iter().all(|m| *m == members[0]), || format!("class {key} mixes verdicts"))?;
        if members[0].0 == Status::Fixed {
            fixed_keys.insert(key.clone());
        }
    }
    ensure(fixed_keys.len() == 4, || format!("{} fixed classes", fixed_keys.len()))?;
    let paper_keys: BTreeSet<_> = PAPER_FIXED
        .iter()
        .map(|t| canonical_key(&cfg(&format!("labels = A, B, C, D\n{t}"))).unwrap())
        .collect();
    ensure(paper_keys == fixed_keys, || "fixed classes differ from the listed configurations".into())?;
    for t in PAPER_FIXED {
        let c = cfg(&format!("labels = A, B, C, D\n{t}"));
        let v = e.decide(&c).map_err(|err| err.to_string())?;
        ensure(v.is_fixed(), || format!("listed configuration not fixed\n{c}"))?;
        sampling_agrees(&c, v.sign().unwrap(), 7)?;
    }
    Ok("13824 configurations, 21 classes, 4 fixed, matching the listed four".into())
}

fn criterion_3() -> Outcome {
    let checked = Engine::new(EngineOptions {
        debug_crosscheck: true,
        ..Default::default()
    });
    let plain = engine();
    let mut counts = [0usize; 3];
    for c in all_linear_configurations(4) {
        let v = checked.decide(&c).map_err(|err| err.to_string())?;
        let direct = decide_dim3(&c).map_err(|err| err.to_string())?;
        let expansion = plain.formally_fixed_by_expansion(&c).map_err(|err| err.to_string())?;
        let lemma = non_fixed_by_extreme_lemma(&c).map_err(|err| err.to_string())?;
        let fixed = v.is_fixed();
        ensure(direct.status() == v.status(), || format!("direct decider disagrees\n{c}"))?;
        ensure(expansion.is_fixed() == fixed, || format!("expansion disagrees\n{c}"))?;
        ensure((lemma.status() == Status::NonFixed) == !fixed, || format!("lemma disagrees\n{c}"))?;
        if fixed {
            ensure(expansion.sign() == v.sign(), || format!("expansion sign differs\n{c}"))?;
        }
        counts[if fixed { 0 } else { 1 }] += 1;
        counts[2] += 1;
    }
    Ok(format!(
        "{} configurations, {} fixed, {} non-fixed, 0 disagreements",
        counts[2], counts[0], counts[1]
    ))
}

fn criterion_4() -> Outcome {
    let expected = [1u64, 2, 21, 5097];
    for (n, want) in (2..=5).zip(expected) {
        let got = count_classes(n).map_err(|err| err.to_string())?;
        ensure(got == want.into(), || format!("n = {n}: {got}, expected {want}"))?;
    }
    let enumerated = class_keys(5, true).map_err(|err| err.to_string())?.len();
    ensure(enumerated == 5097, || format!("n = 5 enumeration gives {enumerated}"))?;
    Ok("1, 2, 21, 5097 for n = 2..5 (n = 5 also by enumeration)".into())
}

fn criterion_4_long() -> Outcome {
    let got = count_classes(6).map_err(|err| err.to_string())?;
    ensure(got == 71_965_235u64.into(), || format!("n = 6: {got}"))?;
    ensure(count_classes_by_burnside(6) == got, || "count paths disagree".into())?;
    Ok("71965235 for n = 6".into())
}

fn criterion_5() -> Outcome {
    let e = engine();
    let mut witnesses = 0;
    for n in 2..=4 {
        for c in all_linear_configurations(n) {
            if e.decide(&c).map_err(|err| err.to_string())?.status() == Status::NonFixed {
                witness_verifies(&e, &c)?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} witness pairs verified, 0 failures"))
}

const PARTIAL: [(&str, Status); 4] = [
    ("labels = A, B, C\nx: A<B<C\ny: B<A, B<C", Status::Fixed),
    ("labels = A, B, C\nx: A<B<C\ny: B<A, C<A", Status::NonFixed),
    ("labels = A, B, C\nx: A<B<C\ny:", Status::NonFixed),
    ("labels = A, B, C\nx: A<C, B<C\ny: B<A, C<A", Status::NonFixed),
];

fn criterion_6() -> Outcome {
    let e = engine();
    let cloud = PointCloud::from_csv(SYNTHETIC).map_err(|err| err.to_string())?;
    let report = scan(&cloud, &e).map_err(|err| err.to_string())?;
    ensure(report.summary.total == 210, || format!("{} subsets", report.summary.total))?;
    for (set, want) in [
        (["1", "5", "9", "10"], Status::Fixed),
        (["2", "5", "8", "9"], Status::Fixed),
        (["1", "3", "7", "10"], Status::NonFixed),
    ] {
        let entry = report.entry(&set).ok_or_else(|| format!("{set:?} missing"))?;
        ensure(entry.verdict.status() == want, || {
            format!("{set:?}: {} expected {want}", entry.verdict.summary())
        })?;
    }
    for (text, want) in PARTIAL {
        let c = cfg(text);
        let v = e.decide(&c).map_err(|err| err.to_string())?;
        ensure(v.status() == want, || format!("{} expected {want}\n{c}", v.summary()))?;
        match v.sign() {
            Some(s) if s.is_definite() => sampling_agrees(&c, s, 11)?,
            _ => witness_verifies(&e, &c)?,
        }
    }
    Ok(format!(
        "landmark subsets as labelled, partial triples fixed/non-fixed/non-fixed/non-fixed; scan: {} fixed of 210",
        report.summary.fixed
    ))
}

fn criterion_7() -> Outcome {
    let e = engine();
    let mut rng = common::rng(2024);
    let mut tally = BTreeMap::new();
    for n in [3, 4] {
        for i in 0..200 {
            let c = common::random_linear(n, &mut rng);
            let v = e.decide(&c).map_err(|err| err.to_string())?;
            match v.status() {
                Status::Fixed => sampling_agrees(&c, v.sign().unwrap(), 1000 * n as u64 + i)?,
                Status::NonFixed => witness_verifies(&e, &c)?,
                Status::Unknown => return Err(format!("unknown verdict\n{c}")),
            }
            *tally.entry((n, v.status())).or_insert(0) += 1;
        }
    }
    Ok(format!("400 random configurations, outcomes {tally:?}"))
}

fn criterion_8() -> Outcome {
    use FormalSign::{Minus as M, Plus as P, Unknown as U};
    let mul = [[P, M, U], [M, P, U], [U, U, U]];
    let add = [[P, U, U], [U, M, U], [U, U, U]];
    for (i, a) in FormalSign::ALL.into_iter().enumerate() {
        for (j, b) in FormalSign::ALL.into_iter().enumerate() {
            ensure(fmul(a, b) == mul[i][j], || format!("{a} * {b}"))?;
            ensure(fadd(a, b) == add[i][j], || format!("{a} + {b}"))?;
        }
        let cfg_row = [
            (ConfigSign::Plus, mul[i][0]),
            (ConfigSign::Minus, mul[i][1]),
            (ConfigSign::Both, U),
        ];
        for (b, want) in cfg_row {
            ensure(fmul_config(a, b) == want, || format!("{a} * {b}"))?;
        }
    }
    let mut definite = 0;
    for mask in 0u32..512 {
        let mut grid = [[P; 3]; 3];
        for (k, cell) in grid.iter_mut().flatten().enumerate() {
            if mask & (1 << k) != 0 {
                *cell = M;
            }
        }
        if formal_det_sign_3x3(&grid) != U {
            definite += 1;
        }
    }
    ensure(definite == 0, || format!("{definite} of 512 grids gave a definite sign"))?;
    Ok("product, sum and mixed tables match; 512 of 512 grids give ?".into())
}

#[test]
fn acceptance() {
    let mut report = Report { failures: Vec::new() };
    let _ = writeln!(std::io::stdout().lock());
    let secs = Duration::from_secs;
    report.run(1, "dimension-2 exactness", Some(secs(1)), criterion_1);
    report.run(2, "dimension-3 exactness and classes", Some(secs(10)), criterion_2);
    report.run(3, "characterization crosscheck", Some(secs(120)), criterion_3);
    report.run(4, "class counts", Some(secs(60)), criterion_4);
    report.run(4, "class count n = 6", Some(secs(3600)), criterion_4_long);
    report.run(5, "witness soundness", Some(secs(60)), criterion_5);
    report.run(6, "worked examples", None, criterion_6);
    report.run(7, "sampling agreement", None, criterion_7);
    report.run(8, "sign algebra", Some(secs(1)), criterion_8);
    assert!(report.failures.is_empty(), "{} criteria failed", report.failures.len());
}
