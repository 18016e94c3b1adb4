use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, ensure, Context};
use serde::Serialize;
use serde_json::Value;

use ptsep_core::automata::{
    is_empty_language, is_minimal, minimize as minimize_dfa, parse_automaton, product_intersection,
    subset_construction, ParsedAutomaton,
};
use ptsep_core::mcvp::{evaluate, parse_circuit, Circuit, ReductionOutput};
use ptsep_core::oracles::{
    bounded_tower_exists, dual_deepening, pt_bounded, reachable_profiles, separable_by_kpt, verify_separator, Budget,
    DualVerdict, PtBounded,
};
use ptsep_core::piecewise::{is_pt_dfa, is_pt_nfa, Condition};
use ptsep_core::report::{OracleCheck, Report, Timings, TowerReport, WitnessReport};
use ptsep_core::separability::{decide_separability_with, towers_from_pattern, SeparabilityOptions};
use ptsep_core::Nfa;

use crate::{render, Global};

/// Height of the sample tower printed for inseparable inputs.
const SAMPLE_HEIGHT: usize = 4;

pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

fn command_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn finish<V: Serialize>(
    g: Global,
    mut report: Report<V>,
    start: Instant,
    decision_ms: f64,
    oracle_ms: Option<f64>,
) -> Value {
    if g.timings {
        report.timings = Some(Timings {
            total_ms: ms(start),
            decision_ms,
            oracle_ms,
        });
    }
    serde_json::to_value(report).expect("serializable report")
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_automaton(path: &Path) -> anyhow::Result<ParsedAutomaton> {
    parse_automaton(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn read_nfa(path: &Path) -> anyhow::Result<Nfa> {
    Ok(read_automaton(path)?.into_nfa())
}

fn read_circuit(path: &Path) -> anyhow::Result<Circuit> {
    parse_circuit(&read(path)?).with_context(|| format!("in {}", path.display()))
}

#[derive(Serialize)]
struct PtVerdictJson {
    is_pt: bool,
    condition: Option<Condition>,
    minimal_states: usize,
}

pub fn pt_check(g: Global, path: &Path, kmax: usize, oracle: bool) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let parsed = read_automaton(path)?;
    let verdict = match &parsed {
        ParsedAutomaton::Dfa(d) if is_minimal(d) => is_pt_dfa(d)?,
        other => is_pt_nfa(other.as_nfa()),
    };
    let decision_ms = ms(start);
    let dfa = &verdict.minimal_dfa;
    let mut text = String::new();
    let mut report = Report::new(
        command_echo(),
        PtVerdictJson {
            is_pt: verdict.is_pt,
            condition: verdict.condition(),
            minimal_states: dfa.num_states(),
        },
    );
    if let Some(w) = &verdict.witness {
        w.validate(dfa).context("witness failed to replay")?;
        text.push_str("not piecewise testable\n");
        text.push_str(&render::pt_witness(w, dfa));
        text.push('\n');
        report.witness = Some(WitnessReport::pt(w, dfa));
    } else {
        text.push_str("piecewise testable\n");
    }
    let mut oracle_ms = None;
    if oracle {
        let t = Instant::now();
        let check = pt_bounded(dfa, kmax, &Budget { max_nodes: g.max_nodes });
        oracle_ms = Some(ms(t));
        let detail = match &check {
            PtBounded::Pt { k } => format!("membership is determined by {k}-profiles"),
            PtBounded::NotPt { .. } => format!("profiles conflict for every k ≤ {kmax}"),
            PtBounded::Inconclusive => format!("inconclusive up to k = {kmax}"),
        };
        report.oracle_check = OracleCheck::ran(check.is_pt().map(|o| o == verdict.is_pt), detail);
    }
    let code = if verdict.is_pt { 0 } else { 1 };
    Ok(Outcome {
        code,
        text,
        json: finish(g, report, start, decision_ms, oracle_ms),
    })
}

#[derive(Serialize)]
struct SepVerdictJson {
    separable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    separator_omitted: Option<bool>,
}

/// Cross-check with the brute-force oracle and the intersection rule.
fn separability_oracle(
    a: &Nfa,
    b: &Nfa,
    separable: bool,
    kmax: usize,
    hmax: usize,
    budget: &Budget,
) -> anyhow::Result<OracleCheck> {
    if !is_empty_language(&product_intersection(a, b)?) {
        return Ok(OracleCheck::ran(Some(!separable), "languages intersect"));
    }
    Ok(match dual_deepening(a, b, kmax, hmax, budget)? {
        DualVerdict::Separator(s) => OracleCheck::ran(Some(separable), format!("{}-PT separator found", s.k)),
        DualVerdict::NoTower { height, .. } => {
            OracleCheck::ran(Some(separable), format!("no tower of height {height}"))
        }
        DualVerdict::Inconclusive => OracleCheck::ran(None, format!("inconclusive up to k = {kmax}, h = {hmax}")),
    })
}

pub fn separability(
    g: Global,
    a: &Path,
    b: &Path,
    separator: bool,
    kmax: usize,
    hmax: usize,
    oracle: bool,
) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let (na, nb) = (read_nfa(a)?, read_nfa(b)?);
    let budget = Budget { max_nodes: g.max_nodes };
    let options = SeparabilityOptions {
        attach_separator: separator,
        kmax,
        budget,
    };
    let verdict = decide_separability_with(&na, &nb, &options)?;
    let decision_ms = ms(start);
    let sigma = na.alphabet();
    let mut report = Report::new(
        command_echo(),
        SepVerdictJson {
            separable: verdict.separable,
            separator_omitted: separator.then_some(verdict.separator_omitted),
        },
    );
    let mut text = String::new();
    if let Some(w) = &verdict.witness {
        w.validate(&na, &nb).context("pattern witness failed to replay")?;
        let tower = towers_from_pattern(w, SAMPLE_HEIGHT)?;
        tower.validate(&na, &nb).context("sample tower is invalid")?;
        text.push_str("not separable\n");
        text.push_str(&render::pattern(w, &na, &nb));
        text.push_str(&render::tower(&tower, sigma));
        report.witness = Some(WitnessReport::pattern(w, &na, &nb, Some(&tower)));
    } else {
        text.push_str("separable\n");
        if let Some(s) = &verdict.separator {
            ensure!(verify_separator(s, &na, &nb, &budget)?, "separator failed verification");
            text.push_str(&render::separator(s, sigma));
            report.witness = Some(WitnessReport::separator(s, sigma));
        } else if verdict.separator_omitted {
            text.push_str(&format!("separator omitted: none found with k ≤ {kmax}\n"));
        }
    }
    let mut oracle_ms = None;
    if oracle {
        let t = Instant::now();
        report.oracle_check = separability_oracle(&na, &nb, verdict.separable, kmax, hmax, &budget)?;
        oracle_ms = Some(ms(t));
    }
    Ok(Outcome {
        code: if verdict.separable { 0 } else { 1 },
        text,
        json: finish(g, report, start, decision_ms, oracle_ms),
    })
}

#[derive(Serialize)]
struct TowerVerdictJson {
    found: bool,
    height: usize,
}

pub fn tower(g: Global, a: &Path, b: &Path, height: usize) -> anyhow::Result<Outcome> {
    ensure!(height >= 1, "height must be at least 1");
    let start = Instant::now();
    let (na, nb) = (read_nfa(a)?, read_nfa(b)?);
    let found = bounded_tower_exists(&na, &nb, height, &Budget { max_nodes: g.max_nodes })?;
    let decision_ms = ms(start);
    let mut report = Report::new(
        command_echo(),
        TowerVerdictJson {
            found: found.is_some(),
            height,
        },
    );
    let text = match &found {
        Some(t) => {
            t.validate(&na, &nb).context("tower failed to validate")?;
            report.witness = Some(WitnessReport::Tower(TowerReport::new(t, na.alphabet())));
            render::tower(t, na.alphabet())
        }
        None => format!("no tower of height {height}\n"),
    };
    Ok(Outcome {
        code: if found.is_some() { 0 } else { 1 },
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}

fn automaton_outcome(text: String) -> Outcome {
    Outcome {
        code: 0,
        json: Value::String(text.clone()),
        text,
    }
}

pub fn minimize(path: &Path) -> anyhow::Result<Outcome> {
    let dfa = match read_automaton(path)? {
        ParsedAutomaton::Dfa(d) => d,
        ParsedAutomaton::Nfa(n) => subset_construction(&n),
    };
    Ok(automaton_outcome(minimize_dfa(&dfa).to_text()))
}

pub fn determinize(path: &Path) -> anyhow::Result<Outcome> {
    Ok(automaton_outcome(subset_construction(&read_nfa(path)?).to_text()))
}

#[derive(Serialize)]
struct BuildJson {
    files: Vec<String>,
    gates: usize,
    fresh: Vec<String>,
}

pub fn mcvp_build(g: Global, circuit: &Path, out_dir: &Path) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let c = read_circuit(circuit)?;
    let out = ReductionOutput::build(&c)?;
    fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
    let mut files = Vec::new();
    for (name, text) in [
        ("A_prime.aut", out.a_prime.to_text()),
        ("A_min.aut", out.a_minimal.to_text()),
        ("B.aut", out.b_joint(&c).to_text()),
    ] {
        let path = out_dir.join(name);
        fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        files.push(path.display().to_string());
    }
    let text = files.iter().map(|f| format!("wrote {f}\n")).collect();
    let report = Report::new(
        command_echo(),
        BuildJson {
            files,
            gates: c.len(),
            fresh: out.fresh.clone(),
        },
    );
    let decision_ms = ms(start);
    Ok(Outcome {
        code: 0,
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}

#[derive(Serialize)]
struct EvalJson {
    value: u8,
}

pub fn mcvp_eval(g: Global, circuit: &Path) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let value = u8::from(evaluate(&read_circuit(circuit)?));
    let report = Report::new(command_echo(), EvalJson { value });
    let decision_ms = ms(start);
    Ok(Outcome {
        code: 0,
        text: format!("{value}\n"),
        json: finish(g, report, start, decision_ms, None),
    })
}

#[derive(Serialize)]
struct EndToEndJson {
    eval: u8,
    separable: bool,
    agree: bool,
}

pub fn mcvp_endtoend(g: Global, circuit: &Path) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let c = read_circuit(circuit)?;
    let value = evaluate(&c);
    let out = ReductionOutput::build(&c)?;
    let b = out.b_joint(&c);
    let verdict = decide_separability_with(&out.a_minimal, &b, &SeparabilityOptions::default())?;
    let decision_ms = ms(start);
    let agree = verdict.separable != value;
    let mut report = Report::new(
        command_echo(),
        EndToEndJson {
            eval: u8::from(value),
            separable: verdict.separable,
            agree,
        },
    );
    if let Some(w) = &verdict.witness {
        w.validate(&out.a_minimal, &b)
            .context("pattern witness failed to replay")?;
        let tower = towers_from_pattern(w, SAMPLE_HEIGHT)?;
        tower.validate(&out.a_minimal, &b).context("sample tower is invalid")?;
        report.witness = Some(WitnessReport::pattern(w, &out.a_minimal, &b, Some(&tower)));
    }
    report.oracle_check = OracleCheck::ran(Some(agree), "circuit evaluation");
    let mut text = format!("eval={} separable={}\n", u8::from(value), verdict.separable);
    if !agree {
        text.push_str("mismatch between evaluation and separability\n");
    }
    Ok(Outcome {
        code: if agree { 0 } else { 1 },
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}

#[derive(Serialize)]
struct ProfilesJson {
    k: usize,
    profiles: Vec<Vec<String>>,
}

pub fn oracle_profiles(g: Global, path: &Path, k: usize) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let nfa = read_nfa(path)?;
    let sigma = nfa.alphabet();
    let profiles = reachable_profiles(&nfa, k, &Budget { max_nodes: g.max_nodes })?;
    let rendered: Vec<Vec<String>> = profiles
        .iter()
        .map(|p| p.pieces().iter().map(|w| sigma.render(w)).collect())
        .collect();
    let mut text = format!("{} {k}-profile(s)\n", rendered.len());
    for p in &rendered {
        text.push_str(&format!("  {{{}}}\n", p.join(", ")));
    }
    let decision_ms = ms(start);
    let report = Report::new(command_echo(), ProfilesJson { k, profiles: rendered });
    Ok(Outcome {
        code: 0,
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}

#[derive(Serialize)]
struct TowersJson {
    hmax: usize,
    /// Largest height `≤ hmax` with a tower.
    max_height: usize,
}

pub fn oracle_towers(g: Global, a: &Path, b: &Path, hmax: usize) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let (na, nb) = (read_nfa(a)?, read_nfa(b)?);
    let budget = Budget { max_nodes: g.max_nodes };
    let mut best = None;
    for h in 1..=hmax {
        match bounded_tower_exists(&na, &nb, h, &budget)? {
            Some(t) => {
                t.validate(&na, &nb).context("tower failed to validate")?;
                best = Some(t);
            }
            None => break,
        }
    }
    let max_height = best.as_ref().map_or(0, |t| t.height());
    let mut report = Report::new(command_echo(), TowersJson { hmax, max_height });
    let text = match &best {
        Some(t) => {
            report.witness = Some(WitnessReport::Tower(TowerReport::new(t, na.alphabet())));
            render::tower(t, na.alphabet())
        }
        None => "no tower\n".to_string(),
    };
    let decision_ms = ms(start);
    Ok(Outcome {
        code: if max_height == hmax { 0 } else { 1 },
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}

#[derive(Serialize)]
struct SeparatorJson {
    found: bool,
    kmax: usize,
}

pub fn oracle_separator(g: Global, a: &Path, b: &Path, kmax: usize) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let (na, nb) = (read_nfa(a)?, read_nfa(b)?);
    let budget = Budget { max_nodes: g.max_nodes };
    let mut found = None;
    for k in 1..=kmax {
        if let Some(s) = separable_by_kpt(&na, &nb, k, &budget)? {
            if !verify_separator(&s, &na, &nb, &budget)? {
                bail!("separator failed verification");
            }
            found = Some(s);
            break;
        }
    }
    let mut report = Report::new(
        command_echo(),
        SeparatorJson {
            found: found.is_some(),
            kmax,
        },
    );
    let text = match &found {
        Some(s) => {
            report.witness = Some(WitnessReport::separator(s, na.alphabet()));
            render::separator(s, na.alphabet())
        }
        None => format!("no separator with k ≤ {kmax}\n"),
    };
    let decision_ms = ms(start);
    Ok(Outcome {
        code: if found.is_some() { 0 } else { 1 },
        text,
        json: finish(g, report, start, decision_ms, None),
    })
}
