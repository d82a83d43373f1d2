//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reactopo::corpus::bundled_corpus;
use reactopo::propagator_file::bundled_propagators;
use reactopo::registry_file::bundled_registry;
use reactopo_core::handle::{parse_presentation, surgery, Dim};
use reactopo_core::numbers::{gmn_check, Law};
use reactopo_core::observables::{
    apparent_time, classify_interaction, regge, spin_classify, Spectrum, SpinClass, DECADES,
};
use reactopo_core::particle::{derive_flavor, hypercharge_closed_form, Category};
use reactopo_core::rational::{int, ratio, Rational};
use reactopo_core::reaction::{
    check, crossing_closure, parse, render, Classification, Interaction,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            summary
        } else {
            failures.join("; ")
        },
    }
}

fn registry_identities() -> Outcome {
    let start = Instant::now();
    let registry = bundled_registry();
    let mut failures = Vec::new();
    for p in registry.iter() {
        let n = &p.numbers;
        if gmn_check(n) != int(0) {
            failures.push(format!("{}: GMN residual {}", p.id, gmn_check(n)));
        }
        if n.hypercharge != n.hypercharge_from_flavor() {
            failures.push(format!(
                "{}: Y {} vs flavour sum {}",
                p.id,
                n.hypercharge,
                n.hypercharge_from_flavor()
            ));
        }
        if let Some(q) = &p.quarks {
            if hypercharge_closed_form(q) != n.hypercharge_from_flavor() {
                failures.push(format!(
                    "{}: closed-form Y {}",
                    p.id,
                    hypercharge_closed_form(q)
                ));
            }
        }
    }
    let quarks = registry
        .iter()
        .filter(|p| p.category == Category::Quark)
        .count();
    if registry.len() < 20 || quarks != 6 {
        failures.push(format!("{} particles, {quarks} quarks", registry.len()));
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(
        failures,
        format!(
            "{} particles ({quarks} quarks) in {elapsed:?}",
            registry.len()
        ),
    )
}

fn quark_charges() -> Outcome {
    let registry = bundled_registry();
    let expected = [
        ("u", ratio(2, 3)),
        ("d", ratio(-1, 3)),
        ("s", ratio(-1, 3)),
        ("c", ratio(2, 3)),
        ("b", ratio(-1, 3)),
        ("t", ratio(2, 3)),
    ];
    let mut failures = Vec::new();
    let mut shown = Vec::new();
    for (id, q) in expected {
        let p = registry.get(id).expect("quark registered");
        let derived = derive_flavor(p.quarks.as_ref().expect("quark content")).charge;
        if derived != q || p.numbers.charge != q {
            failures.push(format!(
                "{id}: derived {derived}, stored {}",
                p.numbers.charge
            ));
        }
        shown.push(format!("{id}={derived}"));
    }
    outcome(failures, shown.join(" "))
}

const CHAIN_GROUPS: &[&str] = &[
    "pp-I-1",
    "pp-I-2",
    "pp-I-3",
    "pp-II-1",
    "pp-II-2",
    "pp-II-3",
    "pp-III-2",
    "pp-III-3",
    "pp-III-4",
    "pp-IV",
    "pp-V",
    "charge-exchange",
    "elastic",
    "elastic-swapped",
    "neutron-decay",
    "neutrino-detection",
    "pion-e",
    "pion-mu",
    "muon",
    "tau-e",
    "tau-mu",
    "tau-hadronic",
    "WW-ZZ",
    "W+-decay",
    "W--decay",
    "wino-zino",
];

fn conservation_corpus() -> Outcome {
    let registry = bundled_registry();
    let corpus = bundled_corpus(&registry);
    let mut failures = Vec::new();
    for label in CHAIN_GROUPS {
        let Some(entry) = corpus.iter().find(|e| e.label == *label) else {
            failures.push(format!("{label}: missing"));
            continue;
        };
        let report = check(&entry.reaction);
        if report.classification != entry.expected {
            failures.push(format!(
                "{label}: {} vs recorded {}",
                report.classification, entry.expected
            ));
        }
        for law in [Law::Charge, Law::Baryon, Law::Lepton] {
            if report.delta(law) != int(0) {
                failures.push(format!(
                    "{label}: d{} = {}",
                    law.symbol(),
                    report.delta(law)
                ));
            }
        }
    }
    let exotic = check(&parse("e- -> gamma + nu_e", &registry).unwrap());
    if exotic.classification != Classification::QExotic || exotic.lost_charge != int(-1) {
        failures.push(format!(
            "e- -> gamma + nu_e: {} lost {}",
            exotic.classification, exotic.lost_charge
        ));
    }
    outcome(
        failures,
        format!(
            "{} reactions as recorded; e- -> gamma + nu_e Q-exotic, lost charge -1",
            CHAIN_GROUPS.len()
        ),
    )
}

fn crossing() -> Outcome {
    let registry = bundled_registry();
    let mut failures = Vec::new();
    let targets = [
        ("n -> p + e- + anti:nu_e", "p + anti:nu_e -> n + e+"),
        ("gamma + e- -> e- + gamma", "e+ + e- -> 2 gamma"),
    ];
    let mut sizes = Vec::new();
    for (source, target) in targets {
        let r = parse(source, &registry).unwrap();
        let want = parse(target, &registry).unwrap().key();
        let closure = crossing_closure(&r, &registry, 2);
        sizes.push(closure.len());
        if !closure.iter().any(|m| m.key() == want) {
            failures.push(format!("{target} not reached from {source}"));
        }
    }
    for source in [
        "n -> p + e- + anti:nu_e",
        "gamma + e- -> e- + gamma",
        "e- -> gamma + nu_e",
        "n -> p + nu_e + anti:nu_e",
    ] {
        let r = parse(source, &registry).unwrap();
        let exotic = check(&r).classification == Classification::QExotic;
        for m in crossing_closure(&r, &registry, 2) {
            if (check(&m).classification == Classification::QExotic) != exotic {
                failures.push(format!(
                    "{} changes Q-exotic status of {source}",
                    render(&m)
                ));
            }
        }
    }
    outcome(
        failures,
        format!("targets reached; closure sizes {sizes:?}; Q-exotic status invariant"),
    )
}

fn handle_table() -> Outcome {
    let mut failures = Vec::new();
    for m in 1..=8u32 {
        let chi = parse_presentation(&format!("h(0|0) + h({m}|{m})"))
            .unwrap()
            .euler_characteristic();
        if chi != 1 + (-1i64).pow(m) {
            failures.push(format!("sphere m={m}: chi {chi}"));
        }
    }
    let rows = [
        ("dim(4|4) + h(0|0)", 1),
        ("h(0|0) + h(1|1) + h(1|1) + h(2|2)", 0),
        ("base(collar:S1|1) + h(1|1)", -1),
    ];
    for (lit, want) in rows {
        let chi = parse_presentation(lit).unwrap().euler_characteristic();
        if chi != want {
            failures.push(format!("{lit}: chi {chi}, want {want}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let classic = rng.gen_bool(0.25);
        let m = rng.gen_range(1..16);
        let n = if classic { 0 } else { rng.gen_range(1..16) };
        let index = Dim::new(
            rng.gen_range(0..m),
            if classic { 0 } else { rng.gen_range(0..n) },
        );
        let ambient = Dim::new(m, n);
        let locus = Dim::new(m - 1, n.saturating_sub(1));
        match surgery(ambient, index) {
            Ok(rec) => {
                if rec.removed.dim() != Some(ambient)
                    || rec.glued.dim() != Some(ambient)
                    || rec.glue_locus.dim() != Some(locus)
                {
                    failures.push(format!("surgery {index} on {ambient}: {rec:?}"));
                }
            }
            Err(e) => failures.push(format!("surgery {index} on {ambient}: {e}")),
        }
    }
    outcome(
        failures,
        "sphere 1+(-1)^m for m=1..8, disk 1, torus 0, punctured Moebius -1; 1000 surgeries".into(),
    )
}

fn propagator_corpus() -> Outcome {
    let registry = bundled_registry();
    let entries = bundled_propagators(&registry);
    let mut failures = Vec::new();
    let find = |name: &str| {
        entries
            .iter()
            .find(|e| e.presentation.name == name)
            .map(|e| &e.presentation)
    };
    for name in ["pp-I-1", "pp-I-2"] {
        match find(name) {
            Some(p) if p.is_valid() && p.steps.len() == 3 => {}
            Some(p) => failures.push(format!(
                "{name}: {} steps, {:?}",
                p.steps.len(),
                p.validate()
            )),
            None => failures.push(format!("{name}: missing")),
        }
    }
    match find("majorana") {
        Some(p) if !p.is_elementary() && p.shape() == "disk with two handles" => {}
        Some(p) => failures.push(format!(
            "majorana: elementary {}, shape {:?}",
            p.is_elementary(),
            p.shape()
        )),
        None => failures.push("majorana: missing".into()),
    }
    for e in &entries {
        for law in Law::ALWAYS {
            let r = e.presentation.pairing_residual(law);
            if r != Rational::from_integer(0) {
                failures.push(format!(
                    "{}: {} residual {r}",
                    e.presentation.name,
                    law.symbol()
                ));
            }
        }
    }
    let mut counter = find("majorana").cloned().expect("majorana present");
    let m1 = &mut counter.intermediates[0];
    m1.charge_gap = true;
    m1.connected_simply_connected = true;
    let name = m1.name.clone();
    match counter.goldstone_crossing() {
        Err(e) if e.name() == "NeutralTrivialTopologyInChargeGapRegion" => {}
        other => failures.push(format!("counterexample at {name} not rejected: {other:?}")),
    }
    outcome(
        failures,
        format!(
            "{} propagators; pairing residuals zero; counterexample rejected",
            entries.len()
        ),
    )
}

/// Central differences of `ln Z` evaluated as ratios of sums centred on the
/// mean energy.
fn finite_differences(levels: &[(f64, f64)], beta: f64, h: f64) -> (f64, f64) {
    let floor = levels.iter().map(|l| l.0).fold(f64::INFINITY, f64::min);
    let raw: Vec<f64> = levels
        .iter()
        .map(|&(e, n)| n * (-beta * (e - floor)).exp())
        .collect();
    let z: f64 = raw.iter().sum();
    let q: Vec<f64> = raw.iter().map(|w| w / z).collect();
    let c: f64 = q.iter().zip(levels).map(|(q, l)| q * l.0).sum();
    let a = |s: f64| -> f64 {
        q.iter()
            .zip(levels)
            .map(|(q, l)| q * (-s * (l.0 - c)).exp_m1())
            .sum()
    };
    let first = c - (a(h).ln_1p() - a(-h).ln_1p()) / (2.0 * h);
    let even: f64 = q
        .iter()
        .zip(levels)
        .map(|(q, l)| {
            let s = (0.5 * h * (l.0 - c)).sinh();
            4.0 * q * s * s
        })
        .sum();
    (
        first,
        (even - 0.5 * (a(h).powi(2) + a(-h).powi(2))) / (h * h),
    )
}

fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(scale)
}

fn thermodynamics() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    let mut worst = [0.0f64; 5];
    for case in 0..100 {
        let count = rng.gen_range(1..=10);
        let levels: Vec<(f64, f64)> = (0..count)
            .map(|_| {
                (
                    rng.gen_range(-10.0..=10.0),
                    f64::from(rng.gen_range(1..=6u8)),
                )
            })
            .collect();
        let beta = rng.gen_range(0.01..=10.0);
        let k_b = rng.gen_range(0.5..=2.0);
        let s = Spectrum::new(levels.clone()).unwrap();
        let (fd_e, fd_var) = finite_differences(&levels, beta, 1e-5);
        let e = s.avg_energy(beta);
        let var = s.fluctuation(beta);
        let ln_z = s.ln_partition(beta);
        let entropy = s.entropy(beta, k_b);
        let theta = 1.0 / (k_b * beta);
        let f = s.free_energy(theta, k_b).unwrap();
        let errors = [
            rel(e, fd_e, 0.0),
            rel(var, fd_var, f64::MIN_POSITIVE),
            rel(
                entropy,
                k_b * (ln_z + beta * e),
                k_b * ln_z.abs().max((beta * e).abs()),
            ),
            rel(f, e - theta * entropy, e.abs().max((theta * entropy).abs())),
            rel(s.partition(beta).unwrap(), (-beta * f).exp(), 0.0),
        ];
        let limits = [1e-6, 1e-5, 1e-10, 1e-10, 1e-10];
        for (k, (err, lim)) in errors.iter().zip(limits).enumerate() {
            worst[k] = worst[k].max(*err);
            if *err > lim {
                failures.push(format!("spectrum {case} check {k}: {err:.2e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(
        failures,
        format!(
            "100 spectra in {elapsed:?}; worst e {:.1e}, var {:.1e}, s {:.1e}, f {:.1e}, Z {:.1e}",
            worst[0], worst[1], worst[2], worst[3], worst[4]
        ),
    )
}

fn apparent_times() -> Outcome {
    let rows = [
        (182.0, 3.61e-27, 0.01),
        (0.6, 1.097e-24, 0.005),
        (1.02e-3, 6.582e-22, 0.03),
    ];
    let mut failures = Vec::new();
    let mut shown = Vec::new();
    for (de, want, tol) in rows {
        let t = apparent_time(de).unwrap();
        let err = rel(t, want, 0.0);
        shown.push(format!("{de} GeV -> {t:.4e} s ({:.2}%)", 100.0 * err));
        if err > tol {
            failures.push(format!("{de} GeV: {t:e} vs {want:e}"));
        }
    }
    let table = [
        (1e-10, Interaction::Weak),
        (1e-16, Interaction::Electromagnetic),
        (1e-23, Interaction::Strong),
    ];
    for (t, want) in table {
        if classify_interaction(t).unwrap() != want || !DECADES.contains(&(t, want)) {
            failures.push(format!("{t:e} s not {}", want.as_str()));
        }
    }
    outcome(failures, shown.join("; "))
}

fn regge_and_spin() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let m: f64 = rng.gen_range(0.0..1000.0);
        let residual = m * m - regge(m) / 4.0;
        if residual != 0.0 {
            failures.push(format!("M={m}: residual {residual:e}"));
        }
    }
    let cases: [(&[f64], SpinClass); 3] = [
        (&[0.0, 2.0, 6.0, 12.0], SpinClass::Bosonic),
        (&[0.75, 3.75], SpinClass::Fermionic),
        (&[1.0], SpinClass::Unpolarized),
    ];
    for (values, want) in cases {
        let got = spin_classify(values, 1.0).unwrap();
        if got != want {
            failures.push(format!("{values:?}: {} vs {}", got.as_str(), want.as_str()));
        }
    }
    outcome(
        failures,
        "1000 masses exact; bosonic, fermionic, unpolarized".into(),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("registry identities", registry_identities),
        ("quark charges", quark_charges),
        ("conservation corpus", conservation_corpus),
        ("crossing closure", crossing),
        ("handle table and surgery", handle_table),
        ("propagator corpus", propagator_corpus),
        ("thermodynamics", thermodynamics),
        ("apparent time", apparent_times),
        ("Regge and spin", regge_and_spin),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
