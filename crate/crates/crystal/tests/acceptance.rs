//! The acceptance suite: twelve end-to-end criteria, each reported on its own
//! `criterion N: PASS|FAIL` line. Runs without the libtest harness so the
//! report is always reference; exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use crystal::axioms::{check_01_components, check_02_components, check_queer_regular, check_stembridge, Mode};
use crystal::graph::{
    character, isomorphism, shifted_crystal, standard_crystal, type_a_colors, young_crystal, CrystalGraph,
    DEFAULT_MAX_VERTICES,
};
use crystal::poly::SparsePolynomial;
use crystal::queer::{queer_highest_weights, tensor};
use crystal::shifted::{e_shifted, enumerate_yamanouchi, f_shifted, phi_eps_shifted};
use crystal::symfunc::{
    is_staircase, product_expand, schur, schur_p, schur_p_sum, schur_p_to_schur, schur_sum, staircase_check,
};
use crystal::tableau::{enumerate_ssht, enumerate_ssyt, Partition, StrictPartition};
use crystal::young::{e_young, f_young, phi_eps_young};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

/// A shape, a number of variables, and the expected Schur terms.
type ExpansionCase<'a> = (&'a [usize], usize, Vec<&'a [usize]>);

type Criterion = (&'static str, fn() -> Outcome);

fn strict(v: &[usize]) -> StrictPartition {
    StrictPartition::new(v.to_vec()).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn strict_up_to(size: usize) -> Vec<StrictPartition> {
    (1..=size).flat_map(StrictPartition::all_of_size).collect()
}

fn partitions_up_to(size: usize) -> Vec<Partition> {
    (1..=size).flat_map(Partition::all_of_size).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn padded(parts: &[usize], n: usize) -> Vec<i64> {
    let mut w: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
    w.resize(n, 0);
    w
}

fn schur_expansion_fidelity() -> Outcome {
    let got = schur(&part(&[3, 1]), 3);
    let want = polynomial(&SCHUR_31_TERMS);
    ensure(got == want, || format!("s(3,1) = {got}, expected {want}"))?;
    Ok(format!("{} monomials match", got.len()))
}

fn schur_p_fidelity() -> Outcome {
    let got = schur_p(&strict(&[3, 1]), 3);
    let want = polynomial(&SCHUR_P_31_TERMS);
    ensure(got == want, || format!("P(3,1) = {got}, expected {want}"))?;
    let listed: BTreeSet<String> = enumerate_ssht(&strict(&[3, 1]), 3).iter().map(|t| t.to_string()).collect();
    let reference: BTreeSet<String> = SSHT_31.iter().map(|s| s.to_string()).collect();
    ensure(listed == reference, || format!("tableaux differ: {:?}", listed.symmetric_difference(&reference)))?;
    Ok(format!("{} monomials and {} tableaux match", got.len(), listed.len()))
}

fn p_to_schur() -> Outcome {
    let cases: [ExpansionCase; 3] = [
        (&[3, 1], 3, vec![&[3, 1], &[2, 2], &[2, 1, 1]]),
        (&[3, 1], 4, vec![&[3, 1], &[2, 2], &[2, 1, 1]]),
        (&[4, 3, 1], 4, vec![&[4, 3, 1], &[4, 2, 2], &[3, 3, 2], &[4, 2, 1, 1], &[3, 3, 1, 1], &[3, 2, 2, 1]]),
    ];
    for (gamma, n, lambdas) in cases {
        let gamma = strict(gamma);
        let got = schur_p_to_schur(&gamma, n).map_err(|e| e.to_string())?;
        let want: BTreeMap<Partition, u64> = lambdas.iter().map(|l| (part(l), 1)).collect();
        ensure(got == want, || format!("P{gamma} in {n} variables expands as {got:?}"))?;
        ensure(schur_sum(&got, n) == schur_p(&gamma, n), || format!("P{gamma} reconstruction differs"))?;
    }
    Ok("(3,1) in 3 and 4 variables, (4,3,1) in 4 variables".into())
}

fn yamanouchi() -> Outcome {
    let got: BTreeSet<String> = enumerate_yamanouchi(&strict(&[4, 3, 1]), 4).iter().map(|t| t.to_string()).collect();
    let want: BTreeSet<String> = YAMANOUCHI_431.iter().map(|s| s.to_string()).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("6 tableaux match".into())
}

fn stembridge_regularity() -> Outcome {
    let mut graphs = 0;
    let mut vertices = 0;
    for gamma in strict_up_to(8) {
        for n in gamma.len().max(1)..=5 {
            let g = shifted_crystal(&gamma, n, false, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
            let v = check_stembridge(&g, Mode::Exhaustive);
            ensure(v.ok, || format!("shifted {gamma}, n = {n}: {:?}", v.axioms()))?;
            graphs += 1;
            vertices += g.len();
        }
    }
    for lambda in partitions_up_to(6) {
        for n in lambda.len().max(1)..=4 {
            let g = young_crystal(&lambda, n, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
            let v = check_stembridge(&g, Mode::Exhaustive);
            ensure(v.ok, || format!("young {lambda}, n = {n}: {:?}", v.axioms()))?;
            graphs += 1;
            vertices += g.len();
        }
    }
    Ok(format!("{graphs} graphs, {vertices} vertices, no violations"))
}

/// Walks the `i`-string through `t` with the operators themselves and checks
/// that its length on each side agrees with the free-letter counts, and that
/// each step is undone by the opposite operator.
fn check_strings<T: PartialEq + std::fmt::Display>(
    t: &T,
    i: u32,
    f: impl Fn(&T, u32) -> Option<T>,
    e: impl Fn(&T, u32) -> Option<T>,
    free: (usize, usize),
) -> Result<(), String> {
    let walk = |op: &dyn Fn(&T, u32) -> Option<T>, inverse: &dyn Fn(&T, u32) -> Option<T>| {
        let mut steps = 0;
        let mut cur = op(t, i);
        let mut prev_text = t.to_string();
        while let Some(u) = cur {
            let back = inverse(&u, i).map(|b| b.to_string());
            if back.as_deref() != Some(prev_text.as_str()) {
                return Err(format!("operator {i} step from {prev_text} to {u} is not inverted"));
            }
            steps += 1;
            prev_text = u.to_string();
            cur = op(&u, i);
        }
        Ok(steps)
    };
    let phi = walk(&f, &e)?;
    let eps = walk(&e, &f)?;
    ensure((phi, eps) == free, || format!("{t}, i = {i}: strings ({phi},{eps}), free counts {free:?}"))
}

fn inverse_and_oracle() -> Outcome {
    let mut checked = 0;
    for gamma in strict_up_to(8) {
        for n in gamma.len().max(1)..=5 {
            for t in enumerate_ssht(&gamma, n) {
                for i in 1..n as u32 {
                    check_strings(
                        &t,
                        i,
                        |x, i| f_shifted(x, i).map(|p| p.0),
                        |x, i| e_shifted(x, i).map(|p| p.0),
                        phi_eps_shifted(&t, i),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    for lambda in partitions_up_to(6) {
        for n in lambda.len().max(1)..=4 {
            for t in enumerate_ssyt(&lambda, n) {
                for i in 1..n as u32 {
                    check_strings(&t, i, f_young, e_young, phi_eps_young(&t, i))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (tableau, i) pairs"))
}

fn queer_regularity() -> Outcome {
    let mut graphs = 0;
    for gamma in strict_up_to(7) {
        for n in gamma.len().max(1)..=5 {
            let g = shifted_crystal(&gamma, n, true, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
            let label = format!("{gamma}, n = {n}");
            ensure(g.component_sets().len() == 1, || format!("{label}: not connected"))?;
            for verdict in [check_queer_regular(&g, Mode::Exhaustive), check_01_components(&g), check_02_components(&g)]
            {
                ensure(verdict.ok, || format!("{label}: {:?}", verdict.axioms()))?;
            }
            let hw = queer_highest_weights(&g).map_err(|e| e.to_string())?;
            ensure(hw.len() == 1, || format!("{label}: {} queer highest weights", hw.len()))?;
            ensure(g.weight(hw[0]) == padded(gamma.parts(), n).as_slice(), || {
                format!("{label}: highest weight {:?}", g.weight(hw[0]))
            })?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} queer crystals"))
}

fn random_crystal(rng: &mut StdRng, n: usize, queer: bool) -> CrystalGraph {
    let choice = rng.gen_range(0..if queer { 2 } else { 3 });
    let shapes: Vec<StrictPartition> = strict_up_to(3).into_iter().filter(|g| g.len() <= n).collect();
    match choice {
        0 => standard_crystal(n, queer),
        1 => shifted_crystal(&shapes[rng.gen_range(0..shapes.len())], n, queer, DEFAULT_MAX_VERTICES).unwrap(),
        _ => {
            let shapes: Vec<Partition> = partitions_up_to(3).into_iter().filter(|l| l.len() <= n).collect();
            young_crystal(&shapes[rng.gen_range(0..shapes.len())], n, DEFAULT_MAX_VERTICES).unwrap()
        }
    }
}

fn tensor_decompositions() -> Outcome {
    let b3 = standard_crystal(3, false);
    let bb = tensor(&b3, &b3, false).map_err(|e| e.to_string())?;
    let tops: BTreeSet<Vec<i64>> =
        bb.highest_weights(&type_a_colors(3)).into_iter().map(|v| bb.weight(v).to_vec()).collect();
    ensure(tops == BTreeSet::from([vec![2, 0, 0], vec![1, 1, 0]]), || format!("B(3)⊗B(3) tops {tops:?}"))?;
    ensure(bb.component_sets().len() == 2, || "B(3)⊗B(3) does not have 2 components".into())?;

    let q3 = standard_crystal(3, true);
    let qq = tensor(&q3, &q3, true).map_err(|e| e.to_string())?;
    ensure(qq.len() == 9 && qq.component_sets().len() == 1, || "Q(3)⊗Q(3) is not one 9-vertex component".into())?;
    let hw = queer_highest_weights(&qq).map_err(|e| e.to_string())?;
    ensure(hw.len() == 1 && qq.weight(hw[0]) == [2, 0, 0], || format!("Q(3)⊗Q(3) queer highest weights {hw:?}"))?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..10 {
        let n = rng.gen_range(2..=3);
        let queer = rng.gen_bool(0.5);
        let a = random_crystal(&mut rng, n, queer);
        let b = random_crystal(&mut rng, n, queer);
        let ab = tensor(&a, &b, queer).map_err(|e| e.to_string())?;
        let lhs = character(&ab).map_err(|e| e.to_string())?;
        let rhs = &character(&a).map_err(|e| e.to_string())? * &character(&b).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("trial {trial}: ch(A⊗B) ≠ ch(A)·ch(B)"))?;
    }
    Ok("B(3)⊗B(3), Q(3)⊗Q(3) and 10 random characters".into())
}

/// Independent expansion of a symmetric polynomial in Schur P-polynomials:
/// repeatedly subtract `c·P_ε` for the lexicographically largest exponent
/// `ε` present, which must be a strict partition with positive coefficient.
fn greedy_p_expansion(p: &SparsePolynomial, n: usize) -> Result<BTreeMap<StrictPartition, u64>, String> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((exps, c)) = rest.leading_lex() {
        let w: Vec<i64> = exps.iter().map(|&x| x as i64).collect();
        let eps = StrictPartition::from_weight(&w).ok_or_else(|| format!("leading exponent {w:?} is not strict"))?;
        ensure(c > 0, || format!("coefficient {c} of P{eps} is not positive"))?;
        rest = &rest - &schur_p(&eps, n).scale(c);
        out.insert(eps, c as u64);
    }
    Ok(out)
}

fn product_expansion() -> Outcome {
    let shapes = strict_up_to(5);
    let mut pairs = 0;
    for gamma in &shapes {
        for delta in &shapes {
            let n = gamma.size() + delta.size();
            if n > 6 {
                continue;
            }
            let got = product_expand(gamma, delta, n).map_err(|e| format!("{gamma}·{delta}: {e}"))?;
            ensure(got.values().all(|&c| c > 0), || format!("{gamma}·{delta}: zero coefficient"))?;
            let product = &schur_p(gamma, n) * &schur_p(delta, n);
            ensure(schur_p_sum(&got, n) == product, || format!("{gamma}·{delta}: reconstruction differs"))?;
            let oracle = greedy_p_expansion(&product, n)?;
            ensure(got == oracle, || format!("{gamma}·{delta}: crystal {got:?}, oracle {oracle:?}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn staircase() -> Outcome {
    for n in 1..=5 {
        for k in [3, 4] {
            ensure(staircase_check(k, n), || format!("P ≠ s for the staircase of order {k}, n = {n}"))?;
        }
    }
    let mut others = 0;
    for gamma in strict_up_to(7) {
        let count = enumerate_yamanouchi(&gamma, gamma.size()).len();
        if is_staircase(&gamma) {
            ensure(count == 1, || format!("staircase {gamma} has {count} Yamanouchi tableaux"))?;
        } else {
            ensure(count >= 2, || format!("{gamma} has {count} Yamanouchi tableaux"))?;
            others += 1;
        }
    }
    Ok(format!("(2,1) and (3,2,1) for n ≤ 5; {others} other shapes have ≥ 2 terms"))
}

fn degree_three_normality() -> Outcome {
    let named: Vec<(&str, [i64; 3])> = QUEER_21_VERTICES.iter().map(|(k, _, w)| (*k, *w)).collect();
    let cases = [
        ("(2,1)", assemble(&named, &QUEER_21_EDGES), strict(&[2, 1])),
        ("(3)", assemble(&QUEER_3_VERTICES, &QUEER_3_EDGES), strict(&[3])),
    ];
    for (label, reference, gamma) in cases {
        let built = shifted_crystal(&gamma, 3, true, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
        let map = isomorphism(&reference, &built).map_err(|e| e.to_string())?;
        let map = map.ok_or_else(|| format!("{label}: not isomorphic"))?;
        ensure(map.iter().enumerate().all(|(v, &w)| reference.weight(v) == built.weight(w)), || {
            format!("{label}: weights differ under the isomorphism")
        })?;
    }
    Ok("both assembled graphs are isomorphic, weights preserved".into())
}

fn mutations_detected(g: &CrystalGraph, check: impl Fn(&CrystalGraph) -> bool, label: &str) -> Result<usize, String> {
    ensure(check(g), || format!("{label}: the unmutated graph fails"))?;
    let mut mutants = 0;
    for k in 0..g.edges().len() {
        ensure(!check(&g.without_edge(k)), || format!("{label}: deleting edge {k} is not detected"))?;
        mutants += 1;
    }
    for v in 0..g.len() {
        for j in 0..g.n() {
            for delta in [-1, 1] {
                let mut w = g.weight(v).to_vec();
                w[j] += delta;
                ensure(!check(&g.with_weight(v, w)), || format!("{label}: weight change at v{v} is not detected"))?;
                mutants += 1;
            }
        }
    }
    Ok(mutants)
}

fn mutation_sensitivity() -> Outcome {
    let shifted = shifted_crystal(&strict(&[3, 1]), 3, false, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
    let a = mutations_detected(&shifted, |g| check_stembridge(g, Mode::Fast).ok, "shifted (3,1)")?;
    let queer = shifted_crystal(&strict(&[3, 1]), 3, true, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
    let b = mutations_detected(&queer, |g| check_queer_regular(g, Mode::Fast).ok, "queer (3,1)")?;
    Ok(format!("{a} + {b} mutants all rejected"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Schur expansion fidelity", schur_expansion_fidelity),
        ("Schur-P fidelity", schur_p_fidelity),
        ("P-to-Schur expansion", p_to_schur),
        ("Yamanouchi tableaux", yamanouchi),
        ("Stembridge regularity", stembridge_regularity),
        ("inverse operators and string lengths", inverse_and_oracle),
        ("queer regularity and connectivity", queer_regularity),
        ("tensor decompositions", tensor_decompositions),
        ("product expansion", product_expansion),
        ("staircase shapes", staircase),
        ("degree-3 normality", degree_three_normality),
        ("mutation sensitivity", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
