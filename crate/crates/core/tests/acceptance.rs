//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bfsp::deadline::Deadline;
use bfsp::fpt::{compute_fes, solve_fes_with, solve_fvs};
use bfsp::graph::validate_solution;
use bfsp::kernel::{kernel_nd, kernel_ph_free, ph_size_bound};
use bfsp::matroid::{build_partition_matroid, representative_family, ColoredSetFamily};
use bfsp::random::{random_instance, RandomParams, Shape};
use bfsp::reduction::*;
use bfsp::solver::{solve_dp, solve_oracle};
use bfsp::{ColoredInstance, PathSolution};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn witness(sol: Option<PathSolution>) -> Option<Vec<usize>> {
    sol.map(|s| s.vertices)
}

fn oracle_answer(inst: &ColoredInstance) -> Result<bool, String> {
    solve_oracle(inst).map(|s| s.is_some()).map_err(|e| e.to_string())
}

fn fig1_reproduction() -> Outcome {
    let inst = fig1();
    for (name, w) in [
        ("dp", witness(solve_dp(&inst))),
        ("fes", witness(solve_fes_with(&inst, &Deadline::none()).unwrap().solution)),
        ("fvs", witness(solve_fvs(&inst))),
        ("oracle", witness(solve_oracle(&inst).unwrap())),
    ] {
        let Some(w) = w else { return fail(format!("{name} answered no")) };
        if w.len() != 9 || histogram(&inst, &w) != [3, 3, 3] || !is_fair_shortest_path(&inst, &w) {
            return fail(format!("{name} returned {w:?}"));
        }
    }
    pass("yes, 9 vertices, histogram [3,3,3] under dp/fes/fvs/oracle")
}

/// Seeded instances whose feedback edge number keeps the fes solver's
/// `2^k` enumeration affordable.
fn random_corpus(count: usize, max_n: usize, max_k: usize, seed: u64) -> (Vec<ColoredInstance>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let params = RandomParams::draw(&mut rng, max_n, 4);
        let inst = random_instance(params, rng.gen());
        if compute_fes(&inst).k() <= max_k {
            out.push(inst);
        } else {
            rejected += 1;
        }
    }
    (out, rejected)
}

fn solver_equivalence() -> Outcome {
    let (corpus, rejected) = random_corpus(10_000, 12, 12, 0xB0F5);
    let bad: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, inst)| {
            let fes = solve_fes_with(inst, &Deadline::none()).unwrap();
            let Ok(oracle) = solve_oracle(inst) else {
                return Some(format!("instance {i}: oracle gave up"));
            };
            let ws = [
                witness(solve_dp(inst)),
                witness(fes.solution),
                witness(solve_fvs(inst)),
                witness(oracle),
            ];
            let agree = ws.iter().all(|w| w == &ws[0]);
            let valid = ws
                .iter()
                .flatten()
                .all(|w| validate_solution(inst, &PathSolution::from_vertices(inst, w.clone())).is_ok());
            (!agree || !valid).then(|| format!("instance {i}"))
        })
        .collect();
    let yes = corpus.iter().filter(|i| solve_dp(i).is_some()).count();
    let detail = format!("{} instances ({yes} yes), {rejected} redrawn for fes k > 12", corpus.len());
    if bad.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; disagreement on {}", bad.join(", ")))
    }
}

fn kernel_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4E4B);
    let cases: Vec<(ColoredInstance, u64)> = (0..2_000)
        .map(|_| {
            let shape = [Shape::Sparse, Shape::Layered, Shape::Twins][rng.gen_range(0..3)];
            let params = RandomParams {
                n: rng.gen_range(2..=12),
                num_colors: rng.gen_range(1..=4),
                extra_edges: rng.gen_range(0..=8),
                shape,
            };
            (random_instance(params, rng.gen()), rng.gen())
        })
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, (inst, seed))| {
            let want = naive_fair_path(inst).is_some();
            let (nd, nd_rep) = kernel_nd(inst);
            let k = nd_rep.parameter;
            if naive_fair_path(&nd).is_some() != want || nd.n() > (k * k).max(2) {
                return Some(format!("nd on instance {i}"));
            }
            let Ok((ph, ph_rep)) = kernel_ph_free(inst, 4, *seed) else {
                return Some(format!("ph rejected instance {i}"));
            };
            let bound = ph_size_bound(ph_rep.parameter, 4);
            if naive_fair_path(&ph).is_some() != want || ph.n() as u128 > bound || ph_rep.size_bound != bound {
                return Some(format!("ph on instance {i}"));
            }
            None
        })
        .collect();
    if bad.is_empty() {
        pass(format!("{} instances, answers preserved, sizes within bounds", cases.len()))
    } else {
        fail(bad.join(", "))
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn rainbow(colors: &[usize], set: &[usize]) -> bool {
    let mut seen: Vec<usize> = set.iter().map(|&v| colors[v]).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn representative_families() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4D41);
    let mut checked = 0;
    for case in 0..500 {
        let p = rng.gen_range(1..=4);
        let q = rng.gen_range(0..=5 - p);
        let c = p + q + rng.gen_range(0..=3);
        let ground = rng.gen_range(p + q..=10);
        let colors: Vec<usize> = (0..ground).map(|v| if v < p + q { v } else { rng.gen_range(0..c) }).collect();
        let all: Vec<Vec<usize>> = subsets(ground, p)
            .into_iter()
            .filter(|s| rainbow(&colors, s) && rng.gen_bool(0.7))
            .collect();
        let mat = build_partition_matroid(&colors, c, p + q, rng.gen());
        let fam = ColoredSetFamily::new(all.clone(), &colors, c);
        let out = match representative_family(&mat, &fam, q) {
            Ok(out) => out,
            Err(e) => return fail(format!("case {case}: {e}")),
        };
        if out.len() > binomial(p + q, p) || out.sets.iter().any(|s| !all.contains(s)) {
            return fail(format!("case {case}: {} sets", out.len()));
        }
        let fits = |a: &Vec<usize>, b: &Vec<usize>| {
            a.iter().all(|x| !b.contains(x)) && rainbow(&colors, &[a.as_slice(), b.as_slice()].concat())
        };
        for b in subsets(ground, q) {
            if all.iter().any(|a| fits(a, &b)) && !out.sets.iter().any(|a| fits(a, &b)) {
                return fail(format!("case {case}: extension {b:?} lost"));
            }
        }
        checked += 1;
    }
    pass(format!("{checked} families, every q-subset checked"))
}

/// Multisets of `m` nonempty subsets of a `u`-element universe.
fn set_multisets(u: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(masks: u32, m: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for mask in from..masks {
            cur.push(mask);
            rec(masks, m, mask, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(1 << u, m, 1, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|ms| ms.into_iter().map(|mask| (0..u).filter(|x| mask >> x & 1 == 1).collect()).collect())
        .collect()
}

fn brute_exact_cover(u: usize, sets: &[Vec<usize>]) -> bool {
    (0u32..1 << sets.len()).any(|pick| {
        let mut hit = vec![0; u];
        sets.iter().enumerate().filter(|(j, _)| pick >> j & 1 == 1).for_each(|(_, s)| s.iter().for_each(|&x| hit[x] += 1));
        hit.iter().all(|&h| h == 1)
    })
}

fn brute_exact_hitting_set(u: usize, sets: &[Vec<usize>]) -> bool {
    (0u32..1 << u).any(|pick| sets.iter().all(|s| s.iter().filter(|&&x| pick >> x & 1 == 1).count() == 1))
}

fn brute_vertex_cover(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    (0u32..1 << n).any(|pick| pick.count_ones() as usize <= k && edges.iter().all(|&(a, b)| pick >> a & 1 == 1 || pick >> b & 1 == 1))
}

/// Drops elements that occur in no set; hitting sets are unaffected.
fn compact(u: usize, sets: &[Vec<usize>]) -> (usize, Vec<Vec<usize>>) {
    let used: Vec<usize> = (0..u).filter(|x| sets.iter().any(|s| s.contains(x))).collect();
    let remap = |x: &usize| used.iter().position(|y| y == x).unwrap();
    (used.len(), sets.iter().map(|s| s.iter().map(remap).collect()).collect())
}

#[derive(Default)]
struct ReductionTally {
    instances: usize,
    yes: usize,
    wrong: Vec<String>,
    certificates: usize,
    bad_certificates: Vec<String>,
}

impl ReductionTally {
    fn merge(mut self, other: Self) -> Self {
        self.instances += other.instances;
        self.yes += other.yes;
        self.wrong.extend(other.wrong);
        self.certificates += other.certificates;
        self.bad_certificates.extend(other.bad_certificates);
        self
    }

    fn record(&mut self, label: String, want: bool, got: Result<bool, String>) {
        self.instances += 1;
        self.yes += want as usize;
        match got {
            Ok(got) if got == want => {}
            Ok(got) => self.wrong.push(format!("{label}: expected {want}, got {got}")),
            Err(e) => self.wrong.push(format!("{label}: {e}")),
        }
    }

    fn certify(&mut self, label: String, ok: bool) {
        self.certificates += 1;
        if !ok {
            self.bad_certificates.push(label);
        }
    }
}

fn set_system_reductions() -> ReductionTally {
    let families: Vec<(usize, Vec<Vec<usize>>)> = (1..=5)
        .flat_map(|u| (1..=4).flat_map(move |m| set_multisets(u, m).into_iter().map(move |f| (u, f))))
        .collect();
    families
        .par_iter()
        .map(|(u, sets)| {
            let mut t = ReductionTally::default();
            let label = format!("U={u} F={sets:?}");
            let sys = SetSystem::new(*u, sets.clone()).unwrap();
            let want = brute_exact_cover(*u, sets);
            let lib_source = exact_cover_oracle(&sys).map(|w| w.is_some()).map_err(|e| e.to_string());
            t.record(format!("exact cover source oracle {label}"), want, lib_source);
            match gen_exact_cover(&sys) {
                Ok((inst, report)) => {
                    t.record(format!("exact cover {label}"), want, oracle_answer(&inst));
                    let stretch_two = report
                        .certificates
                        .iter()
                        .any(|c| matches!(c, Certificate::Bandwidth { max_stretch: 2, .. }));
                    let ok = is_bipartite(&inst)
                        && is_cactus(&inst)
                        && stretch_two
                        && report.certificates.iter().all(|c| verify_certificate(&inst, c));
                    t.certify(format!("exact cover {label}"), ok);
                }
                Err(e) => t.wrong.push(format!("exact cover {label}: {e}")),
            }

            let want = brute_exact_hitting_set(*u, sets);
            let (cu, csets) = compact(*u, sets);
            let sys = SetSystem::new(cu, csets).unwrap();
            match gen_exact_hitting_set(&sys) {
                Ok((inst, report)) => {
                    t.record(format!("exact hitting set {label}"), want, oracle_answer(&inst));
                    let ok = report.certificates.iter().all(|c| match c {
                        Certificate::EdgePathPartition { paths, .. } => {
                            paths.len() <= 2 * cu + 1 && verify_certificate(&inst, c)
                        }
                        _ => false,
                    }) && !report.certificates.is_empty();
                    t.certify(format!("exact hitting set {label}"), ok);
                }
                Err(e) => t.wrong.push(format!("exact hitting set {label}: {e}")),
            }
            t
        })
        .reduce(ReductionTally::default, ReductionTally::merge)
}

fn vertex_cover_reductions() -> ReductionTally {
    let mut cases = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            for k in 1..=n {
                cases.push((n, edges.clone(), k));
            }
        }
    }
    cases
        .par_iter()
        .map(|(n, edges, k)| {
            let mut t = ReductionTally::default();
            let label = format!("n={n} E={edges:?} k={k}");
            let want = brute_vertex_cover(*n, edges, *k);
            let vc = VcInstance::new(*n, edges.clone(), *k).unwrap();
            let lib_source = vertex_cover_oracle(&vc).map(|w| w.is_some()).map_err(|e| e.to_string());
            t.record(format!("vertex cover source oracle {label}"), want, lib_source);
            match gen_vertex_cover(&vc) {
                Ok((inst, report)) => {
                    t.record(format!("vertex cover {label}"), want, oracle_answer(&inst));
                    let ok = report.certificates.iter().any(|c| matches!(c, Certificate::IntervalModel(_)))
                        && report.certificates.iter().all(|c| verify_certificate(&inst, c));
                    t.certify(format!("vertex cover {label}"), ok);
                }
                Err(e) => t.wrong.push(format!("vertex cover {label}: {e}")),
            }
            t
        })
        .reduce(ReductionTally::default, ReductionTally::merge)
}

fn summarize(what: &str, count: usize, problems: &[String]) -> Outcome {
    if problems.is_empty() {
        pass(format!("{count} {what}"))
    } else {
        fail(format!("{} of {count} {what} failed, first: {}", problems.len(), problems[0]))
    }
}

/// A tiny instance: a short s-t path with a few chords, colored at random.
fn tiny_member(rng: &mut ChaCha8Rng, c: usize, len: usize) -> ColoredInstance {
    let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
    // a parallel branch of the same length between two path vertices
    let n = if len >= 3 && rng.gen_bool(0.5) {
        let a = rng.gen_range(0..len - 2);
        edges.push((a, len));
        edges.push((len, a + 2));
        len + 1
    } else {
        len
    };
    let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..c)).collect();
    ColoredInstance::new(colors, c, &edges, 0, len - 1).unwrap()
}

fn composition_semantics(certified: &mut ReductionTally) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0C0);
    let mut problems = Vec::new();
    for b in 0..200 {
        let c = rng.gen_range(1..=3);
        let len = rng.gen_range(2..=6);
        let size = rng.gen_range(1..=4);
        let batch: Vec<ColoredInstance> = (0..size).map(|_| tiny_member(&mut rng, c, len)).collect();
        let want = batch.iter().any(|m| naive_fair_path(m).is_some());
        for (name, composed) in [("treedepth", cross_compose_treedepth(&batch)), ("clique cover", cross_compose_clique_cover(&batch))] {
            match composed {
                Ok((inst, report)) => {
                    match oracle_answer(&inst) {
                        Ok(got) if got == want => {}
                        Ok(got) => problems.push(format!("{name} batch {b}: expected {want}, got {got}")),
                        Err(e) => problems.push(format!("{name} batch {b}: {e}")),
                    }
                    if name == "clique cover" {
                        let ok = distance_levels_are_cliques(&inst)
                            && report.certificates.iter().any(|c| matches!(c, Certificate::DistanceLevels(_)))
                            && report.certificates.iter().all(|c| verify_certificate(&inst, c));
                        certified.certify(format!("clique cover batch {b}"), ok);
                    }
                }
                Err(e) => problems.push(format!("{name} batch {b}: {e}")),
            }
        }
    }
    summarize("batches, both compositions", 200, &problems)
}

fn average_distance_transform() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA7D);
    let mut problems = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let params = RandomParams::draw(&mut rng, 10, 4);
        let inst = random_instance(params, rng.gen());
        let (out, _) = gen_avg_distance(&inst);
        if naive_fair_path(&out).is_some() != naive_fair_path(&inst).is_some() {
            problems.push(format!("instance {i}: answer changed"));
        }
        if inst.n() >= 5 {
            let avg = average_intra_component_distance(&out);
            worst = worst.max(avg);
            if avg > 3.0 {
                problems.push(format!("instance {i}: average distance {avg:.3}"));
            }
        }
    }
    summarize(&format!("instances, largest average distance {worst:.3}"), 200, &problems)
}

fn fes_guess_count() -> Outcome {
    let (corpus, _) = random_corpus(2_000, 12, 12, 0xFE5);
    let mut corpus = corpus;
    corpus.push(fig1());
    for (i, inst) in corpus.iter().enumerate() {
        let run = solve_fes_with(inst, &Deadline::none()).unwrap();
        if run.guesses != 1u128 << run.feedback.k() {
            return fail(format!("instance {i}: {} guesses for k = {}", run.guesses, run.feedback.k()));
        }
    }
    pass(format!("{} runs, guesses = 2^k on each", corpus.len()))
}

fn report(name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let ok = out.ok && took <= budget;
    let timing = if took > budget { format!(", over the {budget:?} budget") } else { String::new() };
    println!(
        "{} {name}: {} ({:.2}s{timing})",
        if ok { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64()
    );
    ok
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report("example instance reproduction", Duration::from_secs(1), fig1_reproduction);
    ok &= report("solver equivalence", Duration::from_secs(300), solver_equivalence);
    ok &= report("kernel soundness and size", Duration::from_secs(600), kernel_soundness);
    ok &= report("representative family definition", Duration::from_secs(120), representative_families);

    let mut tally = ReductionTally::default();
    ok &= report("reduction iff-correctness", Duration::from_secs(600), || {
        tally = set_system_reductions().merge(vertex_cover_reductions());
        let mut out = summarize("answers checked", tally.instances, &tally.wrong);
        out.detail = format!("{} ({} yes)", out.detail, tally.yes);
        out
    });
    ok &= report("OR-composition semantics", Duration::from_secs(120), || composition_semantics(&mut tally));
    ok &= report("structural certificates", Duration::from_secs(120), || {
        summarize("certified outputs", tally.certificates, &tally.bad_certificates)
    });
    ok &= report("average distance transform", Duration::from_secs(60), average_distance_transform);
    ok &= report("fes guess count", Duration::from_secs(300), fes_guess_count);

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
