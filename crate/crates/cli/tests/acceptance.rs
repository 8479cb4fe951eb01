//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use antiramsey_core::formulas::cross_checks;
use antiramsey_core::graph::enumerate_embeddings;
use antiramsey_core::search::Search;
use antiramsey_core::{catalog, count_rainbow, find_rainbow, lookup, Construction, EdgeColoring, EdgeIndex, PatternGraph, SearchBudget};

/// Allowed difference between a computed and an expected value.
const VALUE_TOLERANCE: usize = 0;
/// Wall-time target for the full table run at n <= 6.
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(15 * 60);
/// Per-instance budget for the n = 7 stretch instances.
const STRETCH_BUDGET: Duration = Duration::from_secs(60 * 60);
/// Minimum number of randomized cases per property suite.
const PROPERTY_CASES: usize = 10_000;
/// Largest host order for the randomized stars bound.
const STARS_RANDOM_MAX_N: usize = 9;
const SEED: u64 = 20_261_016;

type Outcome = Result<String, String>;

fn antiramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey"))
        .args(args)
        .env_remove("ANTIRAMSEY_MAX_NODES")
        .env_remove("ANTIRAMSEY_MAX_SECONDS")
        .env_remove("ANTIRAMSEY_THREADS")
        .output()
        .expect("binary runs")
}

fn parse(out: &Output) -> Result<Value, String> {
    serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON on stdout: {e}"))
}

#[allow(clippy::absurd_extreme_comparisons)]
fn exact(found: usize, expected: usize) -> bool {
    found.abs_diff(expected) <= VALUE_TOLERANCE
}

fn table_reproduction() -> Outcome {
    const LISTED: &[(&str, usize, usize)] = &[
        ("2P2", 4, 4),
        ("2P2", 5, 2),
        ("P4", 4, 4),
        ("P4", 5, 3),
        ("P3+P2", 5, 3),
        ("K13", 4, 4),
        ("K13", 6, 5),
        ("Y", 5, 5),
        ("Y", 6, 5),
        ("K13+P2", 6, 6),
        ("C3", 4, 4),
        ("C3", 5, 5),
        ("C3", 6, 6),
        ("Q", 4, 4),
        ("Q", 5, 5),
        ("Q", 6, 6),
        ("3P2", 6, 7),
        ("C3+P2", 5, 7),
        ("C3+P2", 6, 7),
        ("P4+P2", 6, 7),
        ("P5", 5, 6),
        ("P5", 6, 7),
        ("2P3", 6, 8),
        ("K14", 5, 7),
        ("K14", 6, 8),
        ("C4", 4, 5),
        ("C4", 5, 6),
        ("C4", 6, 8),
    ];
    let start = Instant::now();
    let out = antiramsey(&["verify-table", "--n-max", "6"]);
    let elapsed = start.elapsed();
    let report = parse(&out)?;
    let entries = report["entries"].as_array().ok_or("report has no entries")?;
    let mut problems = Vec::new();
    for e in entries {
        let status = e["status"].as_str().unwrap_or("?");
        if status != "match" && status != "unsupported-domain" {
            problems.push(format!(
                "{}@{} is {status} (table {}, search {})",
                e["pattern"].as_str().unwrap_or("?"),
                e["n"],
                e["formula_value"],
                e["search_value"]
            ));
        }
    }
    for &(pattern, n, expected) in LISTED {
        let entry = entries.iter().find(|e| e["pattern"] == pattern && e["n"] == n);
        match entry.and_then(|e| e["search_value"].as_u64()) {
            Some(v) if exact(v as usize, expected) => {}
            Some(v) => problems.push(format!("AR({n},{pattern}) expected {expected}, search gives {v}")),
            None => problems.push(format!("AR({n},{pattern}) missing from report")),
        }
    }
    if elapsed > TABLE_TIME_LIMIT {
        problems.push(format!("took {elapsed:?}, limit {TABLE_TIME_LIMIT:?}"));
    }
    let code = out.status.code();
    if problems.is_empty() && code == Some(0) {
        Ok(format!(
            "{} entries match, {} listed values exact, {:.1}s",
            entries.len(),
            LISTED.len(),
            elapsed.as_secs_f64()
        ))
    } else {
        problems.dedup();
        Err(format!("exit {code:?}; {}", problems.join("; ")))
    }
}

fn stretch_instances() -> Outcome {
    let budget = SearchBudget::unlimited().with_max_time(STRETCH_BUDGET);
    let mut lines = Vec::new();
    let mut failed = false;
    for (name, expected) in [("2P3", 8), ("C3+P2", 8), ("P3+2P2", 8), ("3P2", 8)] {
        let result = Search::new(lookup(name).unwrap(), 7)
            .and_then(|s| s.budget(budget.clone()).max_colors())
            .map_err(|e| e.to_string())?;
        let ar = result.anti_ramsey();
        if !result.is_complete() {
            failed = true;
            lines.push(format!("{name}: budget exhausted, candidate {ar}"));
        } else if !exact(ar, expected) {
            failed = true;
            lines.push(format!("{name}: {ar}, expected {expected}"));
        } else {
            lines.push(format!("{name}={ar} ({:.2}s)", result.elapsed.as_secs_f64()));
        }
    }
    if failed {
        Err(lines.join(", "))
    } else {
        Ok(lines.join(", "))
    }
}

fn certificate_suite(dir: &Path) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 5..=9 {
        for construction in Construction::all_for(n) {
            let targets: Vec<&PatternGraph> = construction.targets().into_iter().filter(|p| p.num_vertices() <= n).collect();
            if targets.is_empty() {
                continue;
            }
            let name = construction.to_string();
            let path = dir.join(format!("{}-{n}.json", name.replace([':', '+'], "_")));
            let path = path.to_str().unwrap();
            let out = antiramsey(&["construct", "--name", &name, "--n", &n.to_string(), "--out", path]);
            if !out.status.success() {
                failures.push(format!("construct {name} n={n} failed"));
                continue;
            }
            let claimed = construction.documented_colors(n).to_string();
            for pattern in targets {
                let out = antiramsey(&["check", "--coloring", path, "--graph", pattern.name(), "--claimed", &claimed]);
                checked += 1;
                if !out.status.success() {
                    failures.push(format!("{name} n={n} vs {}", pattern.name()));
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} certificate checks pass"))
    } else {
        Err(failures.join("; "))
    }
}

fn formula_cross_checks() -> Outcome {
    let report = cross_checks();
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
        .collect();
    if failed.is_empty() {
        Ok(format!("{} identities hold", report.checks.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn random_coloring(rng: &mut StdRng, n: usize, max_colors: u32) -> EdgeColoring {
    let m = EdgeIndex::new(n).num_edges();
    let k = rng.gen_range(1..=max_colors);
    EdgeColoring::from_colors(n, (0..m).map(|_| rng.gen_range(0..k)).collect()).unwrap()
}

/// A random rainbow-free coloring: merge the colors of rainbow copies until
/// none is left. Needs a pattern with at least two edges.
fn random_rainbow_free(rng: &mut StdRng, pattern: &PatternGraph, n: usize) -> EdgeColoring {
    let mut c = random_coloring(rng, n, 10);
    while let Some(w) = find_rainbow(&c, pattern).unwrap() {
        let (a, b) = loop {
            let a = *w.colors.choose(rng).unwrap();
            let b = *w.colors.choose(rng).unwrap();
            if a != b {
                break (a.min(b), a.max(b));
            }
        };
        c = c.merge_colors(a, b).unwrap();
    }
    c
}

fn merge_monotonicity(rng: &mut StdRng) -> Result<String, String> {
    // a single edge is rainbow under every coloring
    let patterns: Vec<&PatternGraph> = catalog().iter().filter(|p| p.num_vertices() <= 6 && p.num_edges() > 1).collect();
    let mut merges = 0usize;
    for case in 0..PROPERTY_CASES {
        let n = if case % 2 == 0 { 5 } else { 6 };
        let pattern = *patterns
            .iter()
            .filter(|p| p.num_vertices() <= n)
            .collect::<Vec<_>>()
            .choose(rng)
            .unwrap();
        let c = random_rainbow_free(rng, pattern, n);
        let k = c.num_colors() as u32;
        for a in 0..k {
            for b in a + 1..k {
                let merged = c.merge_colors(a, b).map_err(|e| e.to_string())?;
                merges += 1;
                if find_rainbow(&merged, pattern).unwrap().is_some() {
                    return Err(format!("merging {a},{b} in {:?} creates a rainbow {}", c.colors(), pattern.name()));
                }
            }
        }
    }
    Ok(format!("merge monotonicity: {PROPERTY_CASES} colorings, {merges} merges"))
}

fn relabel_invariance(rng: &mut StdRng) -> Result<String, String> {
    for _ in 0..PROPERTY_CASES {
        let n = rng.gen_range(4..=7);
        let candidates: Vec<&PatternGraph> = catalog().iter().filter(|p| p.num_vertices() <= n).collect();
        let pattern = *candidates.choose(rng).unwrap();
        let c = random_coloring(rng, n, 6);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut rename: Vec<u32> = (0..c.num_colors() as u32).collect();
        rename.shuffle(rng);
        let relabeled = c.permute_vertices(&perm).unwrap();
        let renamed = EdgeColoring::from_colors(n, c.renamed_colors(&rename)).unwrap();
        let base = count_rainbow(&c, pattern).unwrap();
        let a = count_rainbow(&relabeled, pattern).unwrap();
        let b = count_rainbow(&renamed, pattern).unwrap();
        if a != base || b != base {
            return Err(format!(
                "{} on {:?}: {base} vs relabeled {a} vs renamed {b}",
                pattern.name(),
                c.colors()
            ));
        }
    }
    Ok(format!("relabel/rename invariance: {PROPERTY_CASES} cases"))
}

fn stars_bound(n: usize) -> usize {
    (n / 2 + 1).max(3)
}

fn max_color_degree(c: &EdgeColoring) -> usize {
    (0..c.n()).map(|v| c.color_degree(v).unwrap()).max().unwrap_or(0)
}

/// Every coloring of `K_n` with color degree at most 2 everywhere, as RGS.
fn exhaustive_low_degree(n: usize, mut visit: impl FnMut(&[u32])) {
    let index = EdgeIndex::new(n);
    let pairs = index.pairs();
    let mut colors = vec![0u32; pairs.len()];
    let mut at: Vec<Vec<u32>> = vec![Vec::new(); n];

    fn go(e: usize, used: u32, pairs: &[(usize, usize)], colors: &mut Vec<u32>, at: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&[u32])) {
        if e == pairs.len() {
            visit(colors);
            return;
        }
        let (u, v) = pairs[e];
        for c in 0..=used {
            let mut added = Vec::new();
            let mut ok = true;
            for w in [u, v] {
                if !at[w].contains(&c) {
                    if at[w].len() == 2 {
                        ok = false;
                        break;
                    }
                    at[w].push(c);
                    added.push(w);
                }
            }
            if ok {
                colors[e] = c;
                go(e + 1, used.max(c + 1), pairs, colors, at, visit);
            }
            for w in added {
                at[w].pop();
            }
        }
    }
    go(0, 0, &pairs, &mut colors, &mut at, &mut visit);
}

fn random_low_degree(rng: &mut StdRng, n: usize) -> EdgeColoring {
    let pairs = EdgeIndex::new(n).pairs();
    'attempt: loop {
        let mut colors = vec![0u32; pairs.len()];
        let mut at: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut used = 0u32;
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.shuffle(rng);
        for e in order {
            let (u, v) = pairs[e];
            let fits = |c: u32, w: usize| at[w].contains(&c) || at[w].len() < 2;
            let mut options: Vec<u32> = (0..=used).filter(|&c| fits(c, u) && fits(c, v)).collect();
            if options.is_empty() {
                continue 'attempt;
            }
            // lean towards fresh colors to stress the bound
            let c = if options.last() == Some(&used) && rng.gen_bool(0.5) {
                used
            } else {
                options.shuffle(rng);
                options[0]
            };
            for w in [u, v] {
                if !at[w].contains(&c) {
                    at[w].push(c);
                }
            }
            colors[e] = c;
            used = used.max(c + 1);
        }
        return EdgeColoring::from_colors(n, colors).unwrap();
    }
}

fn color_degree_two_bound(rng: &mut StdRng) -> Result<String, String> {
    let mut exhaustive = 0usize;
    let mut error = None;
    for n in 2..=5 {
        exhaustive_low_degree(n, |colors| {
            exhaustive += 1;
            let c = EdgeColoring::from_colors(n, colors.to_vec()).unwrap();
            if error.is_none() && (max_color_degree(&c) > 2 || c.num_colors() > stars_bound(n)) {
                error = Some(format!("n={n}: {colors:?}"));
            }
        });
    }
    if let Some(e) = error {
        return Err(format!("stars bound fails: {e}"));
    }
    let mut tightest = BTreeMap::new();
    for case in 0..PROPERTY_CASES {
        let n = 6 + case % (STARS_RANDOM_MAX_N - 5);
        let c = random_low_degree(rng, n);
        if max_color_degree(&c) > 2 || c.num_colors() > stars_bound(n) {
            return Err(format!("stars bound fails at n={n}: {:?}", c.colors()));
        }
        let best = tightest.entry(n).or_insert(0);
        *best = c.num_colors().max(*best);
    }
    Ok(format!(
        "stars bound: {exhaustive} exhaustive (n<=5), {PROPERTY_CASES} random, max colors seen {tightest:?}"
    ))
}

fn falling(n: usize, k: usize) -> usize {
    (0..k).map(|i| n - i).product()
}

fn embedding_identity() -> Result<String, String> {
    let mut cases = 0;
    for p in catalog() {
        for n in p.num_vertices()..=8 {
            let count = enumerate_embeddings(p, n).map_err(|e| e.to_string())?.len();
            if count * p.aut_count() as usize != falling(n, p.num_vertices()) {
                return Err(format!("{} on K_{n}: {count} embeddings, aut {}", p.name(), p.aut_count()));
            }
            cases += 1;
        }
    }
    Ok(format!("embedding identity: {cases} (pattern, n) pairs"))
}

fn symmetry_equality() -> Result<String, String> {
    let mut cases = 0;
    for p in catalog() {
        for n in p.num_vertices()..=5 {
            let run = |k: usize| {
                Search::new(p, n)
                    .and_then(|s| s.budget(SearchBudget::unlimited()).symmetry_vertices(k).max_colors())
                    .map_err(|e| e.to_string())
            };
            let off = run(0)?;
            for k in 1..=n {
                let on = run(k)?;
                if on.max_colors != off.max_colors {
                    return Err(format!(
                        "{} on K_{n}: symmetry {k} gives {}, off gives {}",
                        p.name(),
                        on.max_colors,
                        off.max_colors
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("symmetry on/off: {cases} runs"))
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let parts = [
        merge_monotonicity(&mut rng),
        relabel_invariance(&mut rng),
        color_degree_two_bound(&mut rng),
        embedding_identity(),
        symmetry_equality(),
    ];
    let failed: Vec<&String> = parts.iter().filter_map(|p| p.as_ref().err()).collect();
    if failed.is_empty() {
        Ok(parts.into_iter().map(Result::unwrap).collect::<Vec<_>>().join("; "))
    } else {
        Err(failed.into_iter().cloned().collect::<Vec<_>>().join("; "))
    }
}

fn determinism() -> Outcome {
    let first = antiramsey(&["verify-table", "--n-max", "5"]);
    let second = antiramsey(&["verify-table", "--n-max", "5"]);
    if first.stdout.is_empty() || first.stdout != second.stdout {
        return Err("sequential verify-table outputs differ".into());
    }
    let parallel = antiramsey(&["verify-table", "--n-max", "5", "--threads", "4", "--parallel-depth", "4"]);
    let key = |out: &Output| -> Result<Vec<(Value, Value, Value, Value)>, String> {
        let v = parse(out)?;
        Ok(v["entries"]
            .as_array()
            .ok_or("no entries")?
            .iter()
            .map(|e| (e["pattern"].clone(), e["n"].clone(), e["search_value"].clone(), e["status"].clone()))
            .collect())
    };
    let seq = key(&first)?;
    if seq != key(&parallel)? {
        return Err("parallel run disagrees on maxColors or status".into());
    }
    Ok(format!(
        "{} bytes identical across runs, {} entries agree with --threads 4",
        first.stdout.len(),
        seq.len()
    ))
}

fn main() {
    let dir = std::env::temp_dir().join(format!("antiramsey-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let criteria: [(&str, &dyn Fn() -> Outcome); 6] = [
        ("table reproduction, n <= 6", &table_reproduction),
        ("stretch instances, n = 7", &stretch_instances),
        ("certificate suite, 5 <= n <= 9", &|| certificate_suite(&dir)),
        ("formula cross-checks, 4 <= n <= 200", &formula_cross_checks),
        ("property suites", &property_suites),
        ("determinism", &determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
