//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secdom::enumeration::{enumerate_connected, enumerate_outerplanar};
use secdom::extremal::{
    build_extremal, detect_extremal_structural, spanning_subgraph_oracle, ExtremalWitness,
};
use secdom::outerplanar::is_outerplanar;
use secdom::random::random_connected_outerplanar;
use secdom::secure::{epn, is_secure_dominating};
use secdom::solver::{gamma_s, gamma_s_bruteforce, gamma_s_with, lower_bound, SolveOptions};
use secdom::sweep::{
    verify_lemma1, verify_lower_bound, verify_thm2_equivalence, verify_thm2_random, SweepOptions,
    SweepReport,
};
use secdom::{Graph, VertexSet};

type Outcome = Result<String, String>;

const UNSEEDED: SolveOptions = SolveOptions {
    use_outerplanar_bound: false,
};

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_violations(r: &SweepReport) -> String {
    r.violations
        .iter()
        .take(3)
        .map(|v| format!("{} [{}] {}", v.graph6, v.check, v.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

fn c1_lower_bound_sweep(report: &SweepReport) -> Outcome {
    ensure(report.is_clean(), || {
        format!("{} violations: {}", report.violations.len(), first_violations(report))
    })?;
    let checked: u64 = report.per_n.iter().filter(|s| s.n >= 4).map(|s| s.checked).sum();
    Ok(format!("{checked} connected outerplanar graphs with 4 <= n <= 9, 0 violations"))
}

fn c2_tightness() -> Outcome {
    let mut parts = Vec::new();
    for k in 2..=4 {
        let (g, w) = build_extremal(k).map_err(|e| e.to_string())?;
        let r = gamma_s_with(&g, UNSEEDED).map_err(|e| e.to_string())?;
        ensure(r.value == k + 1, || format!("k = {k}: gamma_s = {}, expected {}", r.value, k + 1))?;
        ensure(r.set == w.secure_set(), || {
            format!("k = {k}: optimum {{{}}} is not {{hub, spokes}} = {{{}}}", r.set, w.secure_set())
        })?;
        let cert = is_secure_dominating(&g, w.secure_set())
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("k = {k}: {{hub, spokes}} is not secure dominating"))?;
        ensure(cert.verify(&g) && r.certificate.as_ref().is_some_and(|c| c.verify(&g)), || {
            format!("k = {k}: certificate failed re-validation")
        })?;
        parts.push(format!("n = {}: {}", g.n(), r.value));
    }
    Ok(format!("gamma_s(G_k) = k + 1 with {{hub, spokes}} ({})", parts.join(", ")))
}

fn c3_k3_exception(report: &SweepReport) -> Outcome {
    let k3 = Graph::complete(3);
    let r = gamma_s(&k3).map_err(|e| e.to_string())?;
    ensure(r.value == 1, || format!("gamma_s(K3) = {}", r.value))?;
    let g6 = k3.to_graph6();
    ensure(report.exceptions.iter().any(|e| e.graph6 == g6), || "K3 missing from exceptions".into())?;
    ensure(report.violations.iter().all(|v| v.graph6 != g6), || "K3 reported as a violation".into())?;
    let listed: Vec<&str> = report.exceptions.iter().map(|e| e.graph6.as_str()).collect();
    Ok(format!("gamma_s(K3) = 1 < 2, classified as n < 4 exception (exceptions: {})", listed.join(", ")))
}

fn c4_defense_equivalence() -> Outcome {
    let exhaustive = verify_thm2_equivalence(6, SweepOptions::default()).map_err(|e| e.to_string())?;
    let random = verify_thm2_random(10, 10_000, 20_240_601).map_err(|e| e.to_string())?;
    let summary = format!(
        "exhaustive n <= 6: {} disagreements in {} pairs ({} on secure sets); random n = 10: {} in {} ({} on secure sets)",
        exhaustive.violations.len(),
        exhaustive.checked(),
        exhaustive.violations_of("thm2"),
        random.violations.len(),
        random.checked(),
        random.violations_of("thm2"),
    );
    ensure(random.checked() == 10_000, || format!("ran {} random instances", random.checked()))?;
    if exhaustive.is_clean() && random.is_clean() {
        Ok(summary)
    } else {
        let sample = exhaustive.violations.first().or(random.violations.first()).unwrap();
        Err(format!("{summary}; e.g. {} {}", sample.graph6, sample.detail))
    }
}

fn c5_lemma1() -> Outcome {
    let r = verify_lemma1(9, SweepOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.is_clean() && r.exceptions.is_empty(), || {
        format!("{} violations: {}", r.violations.len(), first_violations(&r))
    })?;
    Ok(format!("{} side assignments meeting the hypothesis, n <= 9, 0 exceptions", r.checked()))
}

fn random_relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

struct CharacterizationTally {
    instances: usize,
    positives: usize,
    witnesses: Vec<(Graph, ExtremalWitness)>,
}

fn characterization_instance(g: &Graph, tally: &mut CharacterizationTally) -> Result<(), String> {
    let r = gamma_s_with(g, UNSEEDED).map_err(|e| e.to_string())?;
    let det = detect_extremal_structural(g).map_err(|e| e.to_string())?;
    let ora = spanning_subgraph_oracle(g, 2).map_err(|e| e.to_string())?;
    let g6 = g.to_graph6();
    ensure((r.value == 3) == det.is_some(), || {
        format!("{g6}: gamma_s = {} but detector found {}", r.value, if det.is_some() { "a witness" } else { "none" })
    })?;
    ensure(det.is_some() == ora.is_some(), || format!("{g6}: detector and oracle disagree"))?;
    tally.instances += 1;
    if let (Some(d), Some(o)) = (det, ora) {
        ensure(d.verify(g) && o.verify(g), || format!("{g6}: witness failed re-validation"))?;
        tally.positives += 1;
        tally.witnesses.push((g.clone(), d));
        tally.witnesses.push((g.clone(), o));
    }
    Ok(())
}

fn c6_extremal_characterization(tally: &mut CharacterizationTally) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (g2, _) = build_extremal(2).map_err(|e| e.to_string())?;
    let non_edges: Vec<(usize, usize)> = (0..11)
        .flat_map(|u| (u + 1..11).map(move |v| (u, v)))
        .filter(|&(u, v)| !g2.has_edge(u, v))
        .collect();
    let mut constructed = vec![g2.clone()];
    for (i, &(a, b)) in non_edges.iter().enumerate() {
        let one = g2.with_edge(a, b);
        if !is_outerplanar(&one) {
            continue;
        }
        constructed.push(one.clone());
        for &(c, d) in &non_edges[i + 1..] {
            let two = one.with_edge(c, d);
            if is_outerplanar(&two) {
                constructed.push(two);
            }
        }
    }
    let n_constructed = constructed.len();
    for g in &constructed {
        characterization_instance(g, tally)?;
        characterization_instance(&random_relabel(g, &mut rng), tally)?;
    }
    ensure(tally.positives == tally.instances, || {
        format!("only {} of {} supergraphs of G_2 reach gamma_s = 3", tally.positives, tally.instances)
    })?;
    let before = tally.instances;
    let mut random_hits = 0;
    for _ in 0..1000 {
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected_outerplanar(&mut rng, 11, p);
        let pos = tally.positives;
        characterization_instance(&g, tally)?;
        random_hits += tally.positives - pos;
    }
    Ok(format!(
        "{} outerplanar supergraphs of G_2 (x2 with relabeling) all positive; {} random graphs, {} positive; detector = oracle on all {} instances",
        n_constructed,
        tally.instances - before,
        random_hits,
        tally.instances
    ))
}

fn c7_solver_vs_bruteforce() -> Outcome {
    let mut total = 0;
    for n in 1..=8 {
        for g in enumerate_connected(n).map_err(|e| e.to_string())? {
            let fast = gamma_s_with(&g, UNSEEDED).map_err(|e| e.to_string())?;
            let seeded = gamma_s(&g).map_err(|e| e.to_string())?;
            let slow = gamma_s_bruteforce(&g).map_err(|e| e.to_string())?;
            ensure(fast.value == slow.value && fast.set == slow.set && seeded.set == slow.set, || {
                format!(
                    "{}: solver {} {{{}}}, brute force {} {{{}}}",
                    g.to_graph6(),
                    fast.value,
                    fast.set,
                    slow.value,
                    slow.set
                )
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} connected graphs with n <= 8: identical value and lexicographically least set"))
}

fn c8_enumeration_counts() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=7 {
        let oracle = common::brute_connected_classes(n);
        let generated: Vec<Graph> = enumerate_connected(n).map_err(|e| e.to_string())?.collect();
        ensure(generated.len() == oracle.len(), || {
            format!("n = {n}: generator {} classes, brute force {}", generated.len(), oracle.len())
        })?;
        // each generated graph matches exactly one oracle class
        let mut by_size: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, h) in oracle.iter().enumerate() {
            by_size.entry(h.m()).or_default().push(i);
        }
        let mut hit = vec![false; oracle.len()];
        for g in &generated {
            let matches: Vec<usize> = by_size
                .get(&g.m())
                .into_iter()
                .flatten()
                .copied()
                .filter(|&i| common::isomorphic(g, &oracle[i]))
                .collect();
            ensure(matches.len() == 1 && !hit[matches[0]], || {
                format!("n = {n}: {} does not match a unique unused class", g.to_graph6())
            })?;
            hit[matches[0]] = true;
        }
        counts.push(oracle.len().to_string());
    }
    Ok(format!("connected classes for n = 1..7: {}", counts.join(", ")))
}

fn c9_properties(tally: &CharacterizationTally) -> Outcome {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=9 {
        graphs.extend(enumerate_outerplanar(n).map_err(|e| e.to_string())?);
    }
    let values: Vec<usize> = graphs
        .iter()
        .map(|g| gamma_s_with(g, UNSEEDED).map(|r| r.value))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;

    // edge monotonicity
    let mut edge_checks = 0u64;
    for (g, &v) in graphs.iter().zip(&values) {
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if g.has_edge(a, b) {
                    continue;
                }
                let plus = gamma_s(&g.with_edge(a, b)).map_err(|e| e.to_string())?.value;
                ensure(plus <= v, || format!("{} + {a}{b}: {plus} > {v}", g.to_graph6()))?;
                edge_checks += 1;
            }
        }
    }

    // component additivity, pairing each graph with a deterministic partner
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (i, g) in graphs.iter().enumerate() {
        let j = rng.gen_range(0..graphs.len());
        let u = g.disjoint_union(&graphs[j]).map_err(|e| e.to_string())?;
        let r = gamma_s(&u).map_err(|e| e.to_string())?;
        ensure(r.value == values[i] + values[j], || {
            format!("{} + {}: {} != {} + {}", g.to_graph6(), graphs[j].to_graph6(), r.value, values[i], values[j])
        })?;
        ensure(r.certificate.as_ref().is_some_and(|c| c.verify(&u)), || "union certificate".into())?;
    }

    // |epn| <= 2 for every secure dominating set, and certificate re-validation
    let mut secure_sets = 0u64;
    for (g, &v) in graphs.iter().zip(&values) {
        let r = gamma_s(g).map_err(|e| e.to_string())?;
        ensure(r.value == v && r.certificate.as_ref().is_some_and(|c| c.verify(g)), || {
            format!("{}: solver certificate failed", g.to_graph6())
        })?;
        for bits in 0..1u64 << g.n() {
            let s = VertexSet::from_bits(bits);
            let Some(cert) = is_secure_dominating(g, s).map_err(|e| e.to_string())? else {
                continue;
            };
            secure_sets += 1;
            ensure(cert.verify(g), || format!("{}: certificate for {{{s}}}", g.to_graph6()))?;
            ensure(common::secure_by_definition(g, bits), || {
                format!("{}: {{{s}}} accepted but not secure by definition", g.to_graph6())
            })?;
            for x in s {
                let size = epn(g, x, s).map_err(|e| e.to_string())?.len();
                ensure(size <= 2, || format!("{}: |epn({x}, {{{s}}})| = {size}", g.to_graph6()))?;
            }
        }
    }

    // extremal witnesses
    let mut witnesses = 0;
    for k in 2..=12 {
        let (g, w) = build_extremal(k).map_err(|e| e.to_string())?;
        ensure(w.verify(&g), || format!("G_{k} labeling failed"))?;
        ensure(is_secure_dominating(&g, w.secure_set()).map_err(|e| e.to_string())?.is_some(), || {
            format!("G_{k}: {{hub, spokes}} not secure")
        })?;
        ensure(lower_bound(g.n()) == k + 1, || format!("G_{k}: bound mismatch"))?;
        witnesses += 1;
    }
    for k in 2..=4 {
        let (g, _) = build_extremal(k).map_err(|e| e.to_string())?;
        let w = detect_extremal_structural(&g)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no witness on G_{k}"))?;
        ensure(w.verify(&g), || format!("detected witness on G_{k} failed"))?;
        witnesses += 1;
    }
    for (g, w) in &tally.witnesses {
        ensure(w.verify(g), || format!("{}: witness failed", g.to_graph6()))?;
        witnesses += 1;
    }
    Ok(format!(
        "{} outerplanar graphs (n <= 9): {edge_checks} edge additions, {} unions, {secure_sets} secure sets with |epn| <= 2, {witnesses} G_k witnesses re-validated",
        graphs.len(),
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let mut timed = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        let (tag, detail) = match &r {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!("criterion {id} [{tag}] {name} ({secs:.1}s): {detail}");
        results.push((id, name, r, secs));
    };

    let sweep = verify_lower_bound(9, SweepOptions::default());
    let sweep = match sweep {
        Ok(r) => r,
        Err(e) => {
            println!("criterion 1 [FAIL] lower bound sweep: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut tally = CharacterizationTally {
        instances: 0,
        positives: 0,
        witnesses: Vec::new(),
    };
    timed(1, "lower bound sweep", &mut || c1_lower_bound_sweep(&sweep));
    timed(2, "tightness on G_2, G_3, G_4", &mut c2_tightness);
    timed(3, "K3 exception", &mut || c3_k3_exception(&sweep));
    timed(4, "swap vs private-neighbor defense", &mut c4_defense_equivalence);
    timed(5, "bipartite outerplanar bound", &mut c5_lemma1);
    timed(6, "G_2 characterization", &mut || c6_extremal_characterization(&mut tally));
    timed(7, "solver vs brute force", &mut c7_solver_vs_bruteforce);
    timed(8, "enumeration counts", &mut c8_enumeration_counts);
    timed(9, "property suite", &mut || c9_properties(&tally));

    let failed: Vec<usize> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
