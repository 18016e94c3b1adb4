use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ptsep_core::automata::random::random_nfa;
use ptsep_core::automata::{
    cycle_over_alphabet, is_empty_language, is_minimal, minimize, parse_automaton, product_intersection,
    subset_construction, trim, Dfa,
};
use ptsep_core::mcvp::{
    build_a_minimal, build_a_prime, build_b, evaluate, parse_circuit, proof_gamma, random_circuit, Circuit,
    ReductionOutput, SINK,
};
use ptsep_core::oracles::{dual_deepening, pt_bounded, subsequence, verify_separator, Budget, KptSeparator};
use ptsep_core::piecewise::{is_pt_dfa, is_pt_nfa, PtWitness};
use ptsep_core::separability::{
    decide_separability, decide_separability_with, towers_from_pattern, PatternWitness, SeparabilityOptions, Side,
    Tower,
};
use ptsep_core::{LetterSet, Nfa, Word};

const SAMPLE: &str = "1 = 0\n2 = 1\n3 = AND 1 2\n4 = OR 3 3\n";
const TOWER_HEIGHTS: usize = 8;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    check(start.elapsed() < limit, || {
        format!("took {:.2?}, limit {limit:?}", start.elapsed())
    })
}

fn words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w: &Word| (0..letters).map(move |a| [w.as_slice(), &[a]].concat()))
            .collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

fn visible(d: &Dfa) -> BTreeSet<String> {
    d.transitions()
        .filter(|&(_, _, q)| d.state_name(q) != SINK)
        .map(|(p, a, q)| format!("{} {} {}", d.state_name(p), d.alphabet().symbol(a), d.state_name(q)))
        .collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Chain of subsequences with membership alternating from the start side,
/// checked without going through `Tower::validate`.
fn tower_is_valid(t: &Tower, a: &Nfa, b: &Nfa) -> bool {
    let chained = t.words.windows(2).all(|p| subsequence(&p[0], &p[1]));
    let alternating = t.words.iter().enumerate().all(|(i, w)| {
        let side = if i % 2 == 0 { t.start_side } else { t.start_side.other() };
        match side {
            Side::A => a.accepts(w),
            Side::B => b.accepts(w),
        }
    });
    chained && alternating
}

fn towers_hold(w: &PatternWitness, a: &Nfa, b: &Nfa) -> Result<(), String> {
    for h in 1..=TOWER_HEIGHTS {
        let t = towers_from_pattern(w, h).map_err(|e| e.to_string())?;
        check(t.height() == h && tower_is_valid(&t, a, b), || {
            format!("invalid tower of height {h}")
        })?;
    }
    Ok(())
}

/// `s` accepts every word of `a` and no word of `b` up to length 6.
fn separates_on_samples(s: &KptSeparator, a: &Nfa, b: &Nfa) -> bool {
    words(a.alphabet().len(), 6)
        .iter()
        .all(|w| (!a.accepts(w) || s.accepts(w)) && (!b.accepts(w) || !s.accepts(w)))
}

fn circuit_corpus() -> Vec<Circuit> {
    let mut corpus = vec![parse_circuit(SAMPLE).unwrap()];
    corpus.extend((0..200u64).map(|seed| random_circuit(1 + seed as usize % 12, seed)));
    corpus
}

fn random_pairs() -> Vec<(Nfa, Nfa)> {
    (0..300u64)
        .map(|i| {
            let (n1, n2, m) = (1 + i % 5, 1 + (i / 5) % 5, 1 + (i / 25) % 3);
            let density = 0.2 + 0.05 * (i % 6) as f64;
            let a = random_nfa(n1 as usize, m as usize, density, 2 * i + 1000);
            let b = random_nfa(n2 as usize, m as usize, density, 2 * i + 1001);
            (a, b)
        })
        .collect()
}

fn sample_circuit() -> Outcome {
    let start = Instant::now();
    let c = parse_circuit(SAMPLE).map_err(|e| e.to_string())?;
    let out = ReductionOutput::build(&c).map_err(|e| e.to_string())?;
    let a_prime = set(&[
        "s x 4", "4 a4 3", "4 b4 3", "3 a3 1", "3 b3 2", "1 a1 F", "1 b1 F", "2 a2 T", "2 b2 T", "T y s",
    ]);
    let b = set(&[
        "q x t", "t y q", "t a2 t", "t b2 t", "t a4 t", "t b4 t", "t a3 3", "3 b3 t",
    ]);
    let fresh = set(&[
        "s f1 1", "s f2 2", "s f3 3", "1 f4 F", "2 f5 F", "3 f6 F", "4 f7 F", "F f8 T",
    ]);
    check(visible(&out.a_prime) == a_prime, || "A′ transitions differ".into())?;
    check(visible(&out.b) == b, || "B transitions differ".into())?;
    let min_fresh: BTreeSet<String> = visible(&out.a_minimal)
        .into_iter()
        .filter(|t| t.contains(" f"))
        .collect();
    check(min_fresh == fresh, || "fresh transitions of A differ".into())?;
    let verdict = decide_separability(&out.a_minimal, &out.b_joint(&c)).map_err(|e| e.to_string())?;
    let value = evaluate(&c);
    check(!value && verdict.separable, || {
        format!("eval={} separable={}", u8::from(value), verdict.separable)
    })?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("eval=0 separable=true in {:.2?}", start.elapsed()))
}

fn reduction_end_to_end(towers: &mut Vec<(PatternWitness, Nfa, Nfa)>) -> Outcome {
    let start = Instant::now();
    let corpus = circuit_corpus();
    let (mut ones, mut zeros) = (0, 0);
    for (i, c) in corpus.iter().enumerate() {
        let value = evaluate(c);
        let a = build_a_minimal(c).map_err(|e| e.to_string())?;
        let b = ReductionOutput::build(c).map_err(|e| e.to_string())?.b_joint(c);
        let verdict = decide_separability(&a, &b).map_err(|e| e.to_string())?;
        check(verdict.separable != value, || {
            format!("circuit {i}: eval={} separable={}", u8::from(value), verdict.separable)
        })?;
        if let Some(w) = verdict.witness {
            towers.push((w, a.into_nfa(), b.into_nfa()));
        }
        if value {
            ones += 1;
        } else {
            zeros += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} circuits ({ones} true, {zeros} false), 0 mismatches in {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn proof_reenactment() -> Outcome {
    let start = Instant::now();
    let corpus = circuit_corpus();
    let mut cycles = 0;
    for (i, c) in corpus.iter().enumerate() {
        let a_prime = build_a_prime(c);
        let b = build_b(c);
        if evaluate(c) {
            let gamma = proof_gamma(c);
            check(cycle_over_alphabet(&a_prime, &gamma, true).is_some(), || {
                format!("circuit {i}: no proof cycle in A′")
            })?;
            check(cycle_over_alphabet(&b, &gamma, true).is_some(), || {
                format!("circuit {i}: no proof cycle in B")
            })?;
            cycles += 1;
        }
        let product = product_intersection(&a_prime, &b).map_err(|e| e.to_string())?;
        check(is_empty_language(&product), || {
            format!("circuit {i}: L(A′) ∩ L(B) nonempty")
        })?;
        check(is_minimal(&b), || format!("circuit {i}: B not minimal"))?;
        let a_min = build_a_minimal(c).map_err(|e| e.to_string())?;
        check(is_minimal(&a_min), || format!("circuit {i}: A not minimal"))?;
    }
    Ok(format!(
        "{} circuits, {cycles} proof cycle pairs in {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn pt_consistency() -> Outcome {
    let start = Instant::now();
    let budget = Budget::default();
    let (mut pt, mut conclusive) = (0, 0);
    for seed in 0..1000u64 {
        let n = 1 + seed as usize % 6;
        let m = 1 + (seed as usize / 6) % 3;
        let nfa = random_nfa(n, m, 0.15 + 0.05 * (seed % 5) as f64, seed);
        let direct = is_pt_nfa(&nfa);
        let via_dfa = is_pt_dfa(&minimize(&subset_construction(&nfa))).map_err(|e| e.to_string())?;
        check(direct.is_pt == via_dfa.is_pt, || {
            format!("seed {seed}: verdicts differ")
        })?;
        for v in [&direct, &via_dfa] {
            check(v.is_pt == v.witness.is_none(), || {
                format!("seed {seed}: witness presence")
            })?;
            if let Some(w) = &v.witness {
                w.validate(&v.minimal_dfa)
                    .map_err(|e| format!("seed {seed}: witness does not replay: {e}"))?;
            }
        }
        if let Some(b) = pt_bounded(&direct.minimal_dfa, 4, &budget).is_pt() {
            conclusive += 1;
            check(b == direct.is_pt, || format!("seed {seed}: pt_bounded disagrees"))?;
        }
        pt += usize::from(direct.is_pt);
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "1000 NFAs ({pt} PT), {conclusive} oracle-conclusive, 0 disagreements in {:.2?}",
        start.elapsed()
    ))
}

fn canonical_examples() -> Outcome {
    let parse = |t: &str| parse_automaton(t).map_err(|e| e.to_string());
    let dfa = |t: &str| -> Result<Dfa, String> { Dfa::try_from(parse(t)?.into_nfa()).map_err(|e| e.to_string()) };

    let sigma_star = dfa("states: u\nalphabet: a b\ninitial: u\nfinal: u\ntrans: u a u\ntrans: u b u\n")?;
    let v = is_pt_dfa(&sigma_star).map_err(|e| e.to_string())?;
    check(v.is_pt, || "Σ* not PT".into())?;

    let even = dfa("states: e o\nalphabet: a\ninitial: e\nfinal: e\ntrans: e a o\ntrans: o a e\n")?;
    let v = is_pt_dfa(&even).map_err(|e| e.to_string())?;
    let expected = PtWitness::NontrivialCycle {
        states: vec![0, 1],
        word: vec![0, 0],
    };
    check(v.witness == Some(expected), || format!("(aa)*: {:?}", v.witness))?;

    let first_a = dfa("states: p q r\nalphabet: a b\ninitial: p\nfinal: q\n\
         trans: p a q\ntrans: p b r\ntrans: q a q\ntrans: q b q\ntrans: r a r\ntrans: r b r\n")?;
    let v = is_pt_dfa(&first_a).map_err(|e| e.to_string())?;
    let expected = PtWitness::Triple {
        p: 0,
        q: 1,
        q_prime: 2,
        w: vec![0],
        w_prime: vec![1],
        gamma: LetterSet::full(2),
    };
    check(v.witness == Some(expected), || format!("a(a+b)*: {:?}", v.witness))?;

    let contains_a = dfa("states: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\n\
         trans: 0 a 1\ntrans: 0 b 0\ntrans: 1 a 1\ntrans: 1 b 1\n")?;
    check(is_pt_dfa(&contains_a).map_err(|e| e.to_string())?.is_pt, || {
        "Σ*aΣ* not PT".into()
    })?;

    let nfa = parse(
        "states: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\n\
         trans: 0 a 0\ntrans: 0 b 0\ntrans: 0 a 1\ntrans: 1 a 1\ntrans: 1 b 1\n",
    )?;
    check(is_pt_nfa(nfa.as_nfa()).is_pt, || "NFA for Σ*aΣ* not PT".into())?;
    let two = parse("states: x y\nalphabet: a b\ninitial: x y\nfinal: x y\ntrans: x a x\ntrans: y b y\n")?;
    check(is_pt_nfa(two.as_nfa()).is_pt, || "a* ∪ b* not PT".into())?;
    Ok("Σ*, (aa)*, a(a+b)*, Σ*aΣ*, a* ∪ b*".into())
}

fn separability_concordance(
    towers: &mut Vec<(PatternWitness, Nfa, Nfa)>,
    separators: &mut Vec<(KptSeparator, Nfa, Nfa)>,
) -> Outcome {
    let start = Instant::now();
    let budget = Budget::default();
    let options = SeparabilityOptions {
        attach_separator: true,
        ..Default::default()
    };
    let (mut separable, mut conclusive) = (0, 0);
    for (i, (a, b)) in random_pairs().into_iter().enumerate() {
        let verdict = decide_separability_with(&a, &b, &options).map_err(|e| e.to_string())?;
        let mirrored = decide_separability(&b, &a).map_err(|e| e.to_string())?;
        check(verdict.separable == mirrored.separable, || {
            format!("pair {i}: asymmetric")
        })?;
        let meet = !is_empty_language(&product_intersection(&a, &b).map_err(|e| e.to_string())?);
        check(!(meet && verdict.separable), || {
            format!("pair {i}: intersecting but separable")
        })?;
        let oracle = dual_deepening(&a, &b, 6, 5, &budget).map_err(|e| e.to_string())?;
        if let Some(o) = oracle.separable() {
            conclusive += 1;
            check(o == verdict.separable, || format!("pair {i}: oracle says separable"))?;
        }
        separable += usize::from(verdict.separable);
        if let Some(w) = verdict.witness {
            towers.push((w, a.clone(), b.clone()));
        }
        if let Some(s) = verdict.separator {
            separators.push((s, a, b));
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "300 pairs ({separable} separable), {conclusive} oracle-conclusive, 0 contradictions in {:.2?}",
        start.elapsed()
    ))
}

fn tower_soundness(towers: &[(PatternWitness, Nfa, Nfa)]) -> Outcome {
    let start = Instant::now();
    for (i, (w, a, b)) in towers.iter().enumerate() {
        towers_hold(w, a, b).map_err(|e| format!("verdict {i}: {e}"))?;
    }
    Ok(format!(
        "{} inseparable verdicts, heights 1..={TOWER_HEIGHTS} valid in {:.2?}",
        towers.len(),
        start.elapsed()
    ))
}

fn separator_soundness(separators: &mut Vec<(KptSeparator, Nfa, Nfa)>) -> Outcome {
    let parse = |t: &str| parse_automaton(t).map(|p| p.into_nfa()).map_err(|e| e.to_string());
    let k = parse("states: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 a 1\n")?;
    let l = parse("states: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\ntrans: 0 b 1\ntrans: 1 b 1\n")?;
    let options = SeparabilityOptions {
        attach_separator: true,
        ..Default::default()
    };
    let verdict = decide_separability_with(&k, &l, &options).map_err(|e| e.to_string())?;
    let s = verdict.separator.ok_or("no separator for aa*, bb*")?;
    check(s.k == 1, || format!("aa*, bb* separated at k = {}", s.k))?;
    separators.push((s, k, l));

    let budget = Budget::default();
    for (i, (s, a, b)) in separators.iter().enumerate() {
        check(verify_separator(s, a, b, &budget).map_err(|e| e.to_string())?, || {
            format!("separator {i} fails verification")
        })?;
        check(separates_on_samples(s, a, b), || {
            format!("separator {i} misclassifies a short word")
        })?;
    }
    Ok(format!("{} separators verified, aa* vs bb* at k = 1", separators.len()))
}

fn round_trip_and_preservation() -> Outcome {
    let start = Instant::now();
    for seed in 0..500u64 {
        let nfa = random_nfa(1 + seed as usize % 6, 1 + (seed as usize / 6) % 3, 0.25, 10_000 + seed);
        let parsed = parse_automaton(&nfa.to_text()).map_err(|e| e.to_string())?;
        check(parsed.as_nfa() == &nfa, || format!("seed {seed}: NFA text round trip"))?;
        let dfa = subset_construction(&nfa);
        let reparsed = parse_automaton(&dfa.to_text()).map_err(|e| e.to_string())?;
        check(reparsed.as_nfa() == dfa.as_nfa(), || {
            format!("seed {seed}: DFA text round trip")
        })?;
        let min = minimize(&dfa);
        let trimmed = trim(&nfa);
        for w in words(nfa.alphabet().len(), 6) {
            let x = nfa.accepts(&w);
            check(
                dfa.accepts(&w) == x && min.accepts(&w) == x && trimmed.accepts(&w) == x,
                || format!("seed {seed}: membership of {w:?} changed"),
            )?;
        }
    }
    Ok(format!("500 automata in {:.2?}", start.elapsed()))
}

fn main() -> ExitCode {
    let mut towers = Vec::new();
    let mut separators = Vec::new();
    let results = [
        ("1 sample circuit reduction", sample_circuit()),
        ("2 reduction end to end", reduction_end_to_end(&mut towers)),
        ("3 proof re-enactment", proof_reenactment()),
        ("4 PT consistency", pt_consistency()),
        ("5 canonical examples", canonical_examples()),
        (
            "6 separability concordance",
            separability_concordance(&mut towers, &mut separators),
        ),
        ("7 tower soundness", tower_soundness(&towers)),
        ("8 separator soundness", separator_soundness(&mut separators)),
        ("9 round trip and preservation", round_trip_and_preservation()),
    ];
    let mut failed = false;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed = true;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
