//! The twelve acceptance criteria. Each prints one line; the test fails if
//! any criterion fails.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use se_revise::prop::PropOperator;
use se_revise::revision::{expand, LpOperator, PartedAssignment, SelectionFunction};
use se_revise::semantics::{answer_sets, classical_models, reduct, se_models, strong_equiv};
use se_revise::synth::synthesize;
use se_revise::verify::{
    brave_suite, check_ra, class_preservation_suite, compliant_from_parted, enumerate_se_sets,
    extract_assignment, inconsistent_pairs, lattice_suite, random_selection, skeptical_suite,
    CompliantPreorder, Mode, Placement,
};
use se_revise::{
    parse_formula, parse_program, Alphabet, Interpretation, ModelSet, Program, ProgramClass,
    SePair, SeSet,
};

type Outcome = Result<(), String>;

fn alphabet(atoms: &[&str]) -> Arc<Alphabet> {
    Arc::new(Alphabet::new(atoms.iter().copied()).unwrap())
}

fn prog(text: &str, a: &Arc<Alphabet>) -> Program {
    parse_program(text, Some(a)).unwrap()
}

fn interp(a: &Alphabet, s: &str) -> Interpretation {
    a.parse_interpretation(s).unwrap()
}

fn models(a: &Alphabet, items: &[&str]) -> ModelSet {
    ModelSet::from_iter(a.len(), items.iter().map(|s| interp(a, s)))
}

fn se(a: &Alphabet, pairs: &[(&str, &str)]) -> SeSet {
    SeSet::from_pairs(
        a.len(),
        pairs
            .iter()
            .map(|(x, y)| SePair::new(interp(a, x), interp(a, y)).unwrap()),
    )
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn ensure(what: &str, ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn c1_pipeline() -> Outcome {
    let t = Instant::now();
    let a = alphabet(&["p", "q"]);
    let p = prog("p :- not q. false :- p, q.", &a);
    expect("mod(P)", classical_models(&p), models(&a, &["p", "q"]))?;
    expect(
        "P^∅",
        reduct(&p, Interpretation::EMPTY).to_string(),
        "p.\nfalse :- p, q.".into(),
    )?;
    expect(
        "P^q",
        reduct(&p, interp(&a, "q")).to_string(),
        "false :- p, q.".into(),
    )?;
    expect(
        "P^p = P^∅",
        reduct(&p, interp(&a, "p")),
        reduct(&p, Interpretation::EMPTY),
    )?;
    expect(
        "P^pq = P^q",
        reduct(&p, interp(&a, "p,q")),
        reduct(&p, interp(&a, "q")),
    )?;
    expect("AS(P)", answer_sets(&p), models(&a, &["p"]))?;
    expect(
        "SE(P)",
        se_models(&p),
        se(&a, &[("p", "p"), ("", "q"), ("q", "q")]),
    )?;
    ensure("under one second", t.elapsed().as_secs_f64() < 1.0)
}

fn show_se(a: &Alphabet, s: &SeSet) -> Vec<String> {
    s.pairs()
        .iter()
        .map(|p| format!("({}, {})", a.render(p.here()), a.render(p.there())))
        .collect()
}

fn show_models(a: &Alphabet, m: &ModelSet) -> Vec<String> {
    m.iter().map(|i| a.render(i)).collect()
}

fn c2_se_listings() -> Outcome {
    let a = alphabet(&["p", "q"]);
    let p = prog("p :- not q. false :- p, q.", &a);
    let p1 = prog("p :- not q.", &a);
    let p2 = prog("p :- not q. p ; q.", &a);
    let mut failures = Vec::new();
    let mut record = |r: Outcome| {
        if let Err(e) = r {
            failures.push(e);
        }
    };
    record(expect(
        "SE(P₁)",
        show_se(&a, &se_models(&p1)),
        show_se(
            &a,
            &se(
                &a,
                &[
                    ("p", "p"),
                    ("", "q"),
                    ("q", "q"),
                    ("", "p,q"),
                    ("p", "p,q"),
                    ("q", "p,q"),
                    ("p,q", "p,q"),
                ],
            ),
        ),
    ));
    record(expect(
        "SE(P₂)",
        show_se(&a, &se_models(&p2)),
        show_se(
            &a,
            &se(
                &a,
                &[("p", "p"), ("p", "p,q"), ("q", "p,q"), ("p,q", "p,q")],
            ),
        ),
    ));
    let want = show_models(&a, &models(&a, &["p"]));
    record(expect(
        "AS(P)",
        show_models(&a, &answer_sets(&p)),
        want.clone(),
    ));
    record(expect(
        "AS(P₁)",
        show_models(&a, &answer_sets(&p1)),
        want.clone(),
    ));
    record(expect("AS(P₂)", show_models(&a, &answer_sets(&p2)), want));
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn c3_expansion() -> Outcome {
    let a = alphabet(&["p", "q"]);
    let p = prog("p :- not q. false :- p, q.", &a);
    let q = prog("q.", &a);
    expect(
        "SE(Q)",
        se_models(&q),
        se(&a, &[("q", "q"), ("q", "p,q"), ("p,q", "p,q")]),
    )?;
    let e = expand(&p, &q).map_err(|e| e.to_string())?;
    expect("SE(P + Q)", se_models(&e), se(&a, &[("q", "q")]))?;
    ensure(
        "P + Q ≡s {q ←, ⊥ ← p}",
        strong_equiv(&e, &prog("q. false :- p.", &a)).unwrap(),
    )
}

fn c4_propositional() -> Outcome {
    let a = alphabet(&["p", "q", "r"]);
    let phi = parse_formula("p & q & ~r", &a).unwrap();
    let psi = parse_formula("r", &a).unwrap();
    expect(
        "drastic",
        PropOperator::Drastic.revise(&phi, &psi).unwrap(),
        psi.clone(),
    )?;
    expect(
        "Dalal",
        PropOperator::Dalal.revise(&phi, &psi).unwrap(),
        models(&a, &["p,q,r"]),
    )
}

fn two_atoms(a: &Alphabet) -> PartedAssignment {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/programs/two_atoms.json"
    ))
    .unwrap();
    PartedAssignment::from_json(&text, a).unwrap()
}

fn c5_parted() -> Outcome {
    let a = alphabet(&["p", "q"]);
    let op = LpOperator::parted(two_atoms(&a));
    let p = prog("p :- not q. false :- p, q.", &a);
    let q1 = prog("q :- not p.", &a);
    let q2 = prog(
        "false :- p, not q. false :- q, not p. p ; not p. q ; not q.",
        &a,
    );
    expect(
        "SE(Q₁)",
        se_models(&q1),
        se(
            &a,
            &[
                ("", "p"),
                ("p", "p"),
                ("q", "q"),
                ("", "p,q"),
                ("p", "p,q"),
                ("q", "p,q"),
                ("p,q", "p,q"),
            ],
        ),
    )?;
    expect(
        "SE(Q₂)",
        se_models(&q2),
        se(&a, &[("", ""), ("p,q", "p,q")]),
    )?;
    let r1 = op.revise(&p, &q1).map_err(|e| e.to_string())?;
    let r2 = op.revise(&p, &q2).map_err(|e| e.to_string())?;
    expect(
        "SE(P ⋆ Q₁)",
        se_models(&r1),
        se(&a, &[("p", "p"), ("q", "q")]),
    )?;
    expect("SE(P ⋆ Q₂)", se_models(&r2), se(&a, &[("p,q", "p,q")]))?;
    ensure(
        "P ⋆ Q₁ ≡s R₁",
        strong_equiv(&r1, &prog("p :- not q. q :- not p. false :- p, q.", &a)).unwrap(),
    )?;
    ensure(
        "P ⋆ Q₂ ≡s R₂",
        strong_equiv(&r2, &prog("p. q.", &a)).unwrap(),
    )
}

fn c6_skeptical_brave() -> Outcome {
    let a = alphabet(&["p", "q", "r"]);
    let p = prog("p. q. false :- r.", &a);
    let q = prog("false :- p, q, not r.", &a);
    expect("AS(P)", answer_sets(&p), models(&a, &["p,q"]))?;
    expect("AS(Q)", answer_sets(&q), models(&a, &[""]))?;
    let s = LpOperator::skeptical(PropOperator::Drastic)
        .revise(&p, &q)
        .map_err(|e| e.to_string())?;
    let b = LpOperator::brave(PropOperator::Drastic)
        .revise(&p, &q)
        .map_err(|e| e.to_string())?;
    expect("skeptical", answer_sets(&s), models(&a, &[""]))?;
    expect(
        "brave",
        answer_sets(&b),
        models(&a, &["", "p", "q", "r", "p,r", "q,r", "p,q,r"]),
    )
}

fn c7_brave_not_dlp() -> Outcome {
    let a = alphabet(&["p", "q"]);
    let p = prog(
        "false :- not p, not q. false :- q, not p. false :- p, q.",
        &a,
    );
    let q = prog("q.", &a);
    expect("SE(P)", se_models(&p), se(&a, &[("", "p"), ("p", "p")]))?;
    let out = LpOperator::brave(PropOperator::Drastic).apply(&se_models(&p), &se_models(&q));
    expect(
        "SE(P ⋆ Q)",
        out.clone(),
        se(&a, &[("q", "q"), ("p,q", "p,q")]),
    )?;
    expect("complete", out.is_complete(), false)
}

fn shipped() -> Vec<LpOperator> {
    vec![
        LpOperator::DrasticLp,
        LpOperator::Cardinality,
        LpOperator::skeptical(PropOperator::Drastic),
        LpOperator::skeptical(PropOperator::Dalal),
        LpOperator::brave(PropOperator::Drastic),
        LpOperator::brave(PropOperator::Dalal),
    ]
}

fn all_pass(op: &LpOperator, a: &Arc<Alphabet>, mode: Mode) -> Outcome {
    let reports = check_ra(op, a, mode).map_err(|e| e.to_string())?;
    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} fails {}: {:?}",
            op.name(),
            r.postulate,
            r.witness
        )),
    }
}

fn c8_postulates() -> Outcome {
    let t = Instant::now();
    let a2 = alphabet(&["p", "q"]);
    for op in shipped() {
        all_pass(&op, &a2, Mode::Exhaustive)?;
    }
    let exhaustive = t.elapsed().as_secs_f64();
    let a3 = alphabet(&["p", "q", "r"]);
    let t = Instant::now();
    for op in shipped() {
        all_pass(
            &op,
            &a3,
            Mode::Seeded {
                seed: 2024,
                count: 10_000,
            },
        )?;
    }
    let seeded = t.elapsed().as_secs_f64();
    ensure("exhaustive under ten minutes", exhaustive < 600.0)?;
    ensure("seeded under five minutes", seeded < 300.0)
}

fn c9_round_trips() -> Outcome {
    let a = alphabet(&["p", "q"]);
    for (class, label) in [
        (ProgramClass::Glp, "GLP"),
        (ProgramClass::Dlp, "DLP"),
        (ProgramClass::Nlp, "NLP"),
    ] {
        let sets = enumerate_se_sets(2, class);
        if class == ProgramClass::Glp {
            expect("well-defined sets", sets.len(), 162)?;
        }
        for s in &sets {
            let p = synthesize(s, &a, class).map_err(|e| e.to_string())?;
            if se_models(&p) != *s || p.class() > class {
                return Err(format!("{label} synthesis of {s:?} gives\n{p}"));
            }
        }
    }
    let sets = enumerate_se_sets(2, ProgramClass::Glp);
    for op in shipped() {
        let extracted = Arc::new(extract_assignment(&op, &a).map_err(|e| e.to_string())?);
        for s in &sets {
            extracted
                .validate(s)
                .map_err(|e| format!("{}: {e}", op.name()))?;
        }
        let parted = LpOperator::Parted(extracted);
        for p in &sets {
            for q in &sets {
                if parted.apply(p, q) != op.apply(p, q) {
                    return Err(format!("{} round trip differs at {p:?}, {q:?}", op.name()));
                }
            }
        }
    }
    Ok(())
}

/// Minimum Hamming distance, computed by brute force.
fn dalal_oracle(phi: &ModelSet, psi: &ModelSet) -> ModelSet {
    let dist = |y: Interpretation| {
        phi.iter()
            .map(|m| (m.bits() ^ y.bits()).count_ones())
            .min()
            .unwrap_or(0)
    };
    let best = psi.iter().map(dist).min();
    ModelSet::from_iter(psi.width(), psi.iter().filter(|&y| Some(dist(y)) == best))
}

fn c10_dalal() -> Outcome {
    for n in 0..=3usize {
        let k = 1u32 << n;
        let all: Vec<ModelSet> = (0u32..1 << k)
            .map(|bits| {
                ModelSet::from_iter(
                    n,
                    Interpretation::all(n).filter(|y| bits >> y.index() & 1 == 1),
                )
            })
            .collect();
        for phi in &all {
            for psi in &all {
                let got = PropOperator::Dalal.revise(phi, psi).unwrap();
                if got != dalal_oracle(phi, psi) {
                    return Err(format!("n={n}: {phi:?} ∘ {psi:?}"));
                }
            }
        }
    }
    Ok(())
}

fn c11_lattice() -> Outcome {
    let fs = SelectionFunction::enumerate_all(2);
    let cases = inconsistent_pairs(2, Mode::Exhaustive);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(5);
    let mut fs3 = vec![SelectionFunction::Skeptical, SelectionFunction::Brave];
    for i in 0..4 {
        fs3.push(random_selection(&mut rng, 3, &format!("g{i}")));
    }
    let cases3 = inconsistent_pairs(
        3,
        Mode::Seeded {
            seed: 77,
            count: 1000,
        },
    );
    for circ in [PropOperator::Drastic, PropOperator::Dalal] {
        for (fs, cases, n) in [(&fs, &cases, 2), (&fs3, &cases3, 3)] {
            for r in [
                lattice_suite(&circ, fs, cases, n),
                skeptical_suite(&circ, fs, cases, n),
                brave_suite(&circ, fs, cases, n),
            ] {
                ensure(
                    &format!("{} at n={n} with {}: {:?}", r.name, circ.name(), r.detail),
                    r.passed,
                )?;
            }
        }
    }
    for op in [
        LpOperator::DrasticLp,
        LpOperator::skeptical(PropOperator::Drastic),
        LpOperator::skeptical(PropOperator::Dalal),
    ] {
        for class in [ProgramClass::Dlp, ProgramClass::Nlp] {
            let r = class_preservation_suite(&op, class, 2);
            ensure(&format!("{}: {:?}", r.name, r.detail), r.passed)?;
        }
    }
    Ok(())
}

fn preorder_of_levels(a: &Alphabet, levels: &[&[(&str, &str)]]) -> CompliantPreorder {
    let mut ranks = BTreeMap::new();
    for (r, level) in levels.iter().enumerate() {
        for (x, y) in level.iter() {
            ranks.insert(SePair::new(interp(a, x), interp(a, y)).unwrap(), r as u32);
        }
    }
    CompliantPreorder::from_ranks(a.len(), ranks).unwrap()
}

fn c12_non_injectivity() -> Outcome {
    let a = alphabet(&["p", "q"]);
    let assignment = two_atoms(&a);
    let p_se = se_models(&prog("p :- not q. false :- p, q.", &a));
    let base: &[(&str, &str)] = &[("p", "p"), ("", "q"), ("q", "q")];
    let listed = [
        preorder_of_levels(
            &a,
            &[
                base,
                &[("", "p"), ("p", "p,q"), ("p,q", "p,q")],
                &[("", "p,q"), ("q", "p,q"), ("", "")],
            ],
        ),
        preorder_of_levels(
            &a,
            &[
                base,
                &[("p", "p,q"), ("p,q", "p,q")],
                &[("", "p,q"), ("", "")],
                &[("", "p"), ("q", "p,q")],
            ],
        ),
        preorder_of_levels(
            &a,
            &[
                base,
                &[("", "p")],
                &[("p", "p,q"), ("p,q", "p,q")],
                &[("q", "p,q"), ("", "")],
                &[("", "p,q")],
            ],
        ),
    ];
    let built: Vec<CompliantPreorder> =
        [Placement::Top, Placement::JustAbove, Placement::NextLevel]
            .iter()
            .map(|&pl| compliant_from_parted(&assignment, &p_se, pl))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
    let qs = enumerate_se_sets(2, ProgramClass::Glp);
    for (label, group) in [("listed", &listed[..]), ("built", &built[..])] {
        for (i, c) in group.iter().enumerate() {
            if let Some(v) = c
                .compliance_violation(&p_se)
                .or_else(|| c.sigma_violation(&assignment, &p_se))
            {
                return Err(format!("{label} preorder {}: {v}", i + 1));
            }
            if let Some(q) = c.first_min_mismatch(&assignment, &p_se, &qs) {
                return Err(format!("{label} preorder {} differs on {q:?}", i + 1));
            }
        }
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                ensure(
                    &format!("{label} preorders {} and {} coincide", i + 1, j + 1),
                    group[i] != group[j],
                )?;
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("end-to-end pipeline", c1_pipeline),
        ("SE listings of P, P1, P2", c2_se_listings),
        ("expansion example", c3_expansion),
        ("drastic and Dalal example", c4_propositional),
        ("parted assignment example", c5_parted),
        ("skeptical and brave answer sets", c6_skeptical_brave),
        ("brave output is not complete", c7_brave_not_dlp),
        ("RA1-RA6 exhaustive n=2 and seeded n=3", c8_postulates),
        ("synthesis and extraction round trips", c9_round_trips),
        ("Dalal against brute force", c10_dalal),
        ("lattice, skeptical, brave, class suites", c11_lattice),
        (
            "non-injectivity of compliant preorders",
            c12_non_injectivity,
        ),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f64();
        match &r {
            Ok(()) => writeln!(out, "criterion {:>2} PASS  {name} ({secs:.2}s)", i + 1).unwrap(),
            Err(e) => {
                writeln!(out, "criterion {:>2} FAIL  {name} ({secs:.2}s): {e}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
