//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons,
//! wall-clock limits enforced. Runs without the libtest harness so the
//! lines are always printed.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pmcover::bounds;
use pmcover::cli;
use pmcover::cover::{greedy_cover, BoundLevel, CoverOptions};
use pmcover::cuts::{min_odd_cut, min_odd_cut_brute_force};
use pmcover::exact::ExactAnalyzer;
use pmcover::fractional::{self, bf_double_cover, DoubleCover};
use pmcover::generators;
use pmcover::matching::{enumerate_perfect_matchings, max_weight_perfect_matching, DEFAULT_PM_CAP};
use pmcover::numeric::{fmt_rational, ratio};
use pmcover::{Multigraph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

/// `(name, graph, r)` for the named desk-scale graphs plus 20 random
/// r-graphs with r in {3,4,5} and n <= 16.
fn corpus() -> Vec<(String, Multigraph, u32)> {
    let mut out = vec![
        ("petersen".to_string(), generators::petersen(), 3),
        ("k4".to_string(), generators::k4(), 3),
        ("k33".to_string(), generators::k33(), 3),
    ];
    for r in 3..=6 {
        out.push((
            format!("dipole:{r}"),
            generators::dipole(r).unwrap(),
            r as u32,
        ));
    }
    for n in 3..=7 {
        out.push((format!("prism:{n}"), generators::prism(n).unwrap(), 3));
    }
    let sizes = [8, 10, 12, 14, 16];
    for i in 0..20u64 {
        let r = [3, 4, 5][i as usize % 3];
        let n = sizes[i as usize % sizes.len()];
        let g = generators::random_regular(n, r, 1000 + i).unwrap();
        out.push((format!("random_regular:{n},{r},{}", 1000 + i), g, r));
    }
    out
}

fn random_weights(rng: &mut ChaCha8Rng, m: usize) -> Vec<Rational> {
    (0..m)
        .map(|_| ratio(rng.gen_range(0..20), rng.gen_range(1..7)))
        .collect()
}

/// Perfect matchings by a different search than the library's: include or
/// skip each edge in id order.
fn oracle_perfect_matchings(g: &Multigraph) -> Vec<Vec<usize>> {
    fn go(
        g: &Multigraph,
        e: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() * 2 == g.vertex_count() {
            out.push(cur.clone());
            return;
        }
        if e == g.edge_count() {
            return;
        }
        let (u, v) = g.endpoints(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            cur.push(e);
            go(g, e + 1, used, cur, out);
            cur.pop();
            used[u] = false;
            used[v] = false;
        }
        go(g, e + 1, used, cur, out);
    }
    let mut out = Vec::new();
    go(
        g,
        0,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// Best union of `k` sets by trying every k-multiset.
fn oracle_best_union(sets: &[Vec<usize>], k: usize, m: usize) -> usize {
    fn go(sets: &[Vec<usize>], start: usize, left: usize, cover: &mut Vec<u32>, best: &mut usize) {
        if left == 0 {
            *best = (*best).max(cover.iter().filter(|&&c| c > 0).count());
            return;
        }
        for i in start..sets.len() {
            for &e in &sets[i] {
                cover[e] += 1;
            }
            go(sets, i, left - 1, cover, best);
            for &e in &sets[i] {
                cover[e] -= 1;
            }
        }
    }
    let mut best = 0;
    go(sets, 0, k, &mut vec![0; m], &mut best);
    best
}

/// `1 - prod` computed over plain i128 fractions, independent of the crate.
fn oracle_product_bound(r: i128, k: i128) -> (i128, i128) {
    let gcd = |mut a: i128, mut b: i128| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    };
    let (mut pn, mut pd) = (1i128, 1i128);
    for i in 1..=k {
        let (n, d) = if r % 2 == 0 {
            (
                (r * r - 3 * r + 1) * i - (r * r - 5 * r + 3),
                (r * r - 2 * r - 1) * i - (r * r - 4 * r - 1),
            )
        } else {
            (
                (r * r - 2 * r - 1) * i - (r * r - 4 * r + 1),
                (r * r - r - 2) * i - (r * r - 3 * r - 2),
            )
        };
        pn *= n;
        pd *= d;
        let g = gcd(pn, pd);
        pn /= g;
        pd /= g;
    }
    (pd - pn, pd)
}

fn criterion_1() -> Outcome {
    // (k, r, numerator/denominator, printed decimal)
    let printed = [
        (2, 3, "3/5", "0.6"),
        (2, 4, "9/20", "0.45"),
        (2, 5, "13/35", "0.3714"),
        (3, 3, "27/35", "0.7714"),
        (3, 4, "3/5", "0.6"),
        (3, 5, "409/805", "0.5081"),
        (4, 3, "55/63", "0.873"),
        (4, 4, "103/145", "0.7103"),
        (4, 5, "793/1288", "0.6157"),
        (5, 3, "215/231", "0.9307"),
        (5, 4, "344/435", "0.7908"),
        (5, 5, "4621/6601", "0.7"),
        (6, 3, "413/429", "0.9627"),
        (6, 4, "15884/18705", "0.8492"),
        (6, 5, "25283/33005", "0.766"),
        (7, 3, "6307/6435", "0.9801"),
        (7, 4, "138949/155875", "0.8914"),
        (7, 5, "69221/84665", "0.8176"),
        (8, 3, "12027/12155", "0.9895"),
        (8, 4, "2730303/2961625", "0.9219"),
        (8, 5, "1234672/1439305", "0.8578"),
        (9, 3, "45933/46189", "0.9945"),
        (9, 4, "44725797/47386000", "0.9439"),
        (9, 5, "1791791/2015027", "0.8892"),
    ];
    let mut out = Vec::new();
    let code = cli::run(
        ["pmcover", "bounds", "--table1"],
        &mut out,
        &mut std::io::sink(),
    );
    let text = String::from_utf8(out).unwrap_or_default();
    if code != 0 {
        return fail(format!("bounds --table1 exited {code}"));
    }
    let cells = bounds::table();
    if cells.len() != 24 {
        return fail(format!("{} cells", cells.len()));
    }
    for (k, r, frac, dec) in printed {
        let Some(cell) = cells.iter().find(|c| c.k == k && c.r == r) else {
            return fail(format!("missing cell k={k} r={r}"));
        };
        let got = fmt_rational(&cell.value);
        if got != frac || cell.decimal(4) != dec {
            return fail(format!(
                "k={k} r={r}: {got} ≈ {} vs {frac} ≈ {dec}",
                cell.decimal(4)
            ));
        }
        let (n, d) = oracle_product_bound(r as i128, k as i128);
        if format!("{n}/{d}") != frac {
            return fail(format!("k={k} r={r}: independent product gives {n}/{d}"));
        }
        if !text.contains(&format!("{frac} ≈ {dec}")) {
            return fail(format!("CLI output lacks `{frac} ≈ {dec}`"));
        }
    }
    pass("24/24 cells exact, decimals match")
}

fn criterion_2() -> Outcome {
    for k in 1..=12u32 {
        let mut product = Rational::one();
        for i in 1..=k as i64 {
            product *= ratio(i + 1, 2 * i + 1);
        }
        let expected = Rational::one() - product;
        let got = bounds::bound_improved(3, k).unwrap().value;
        if got != expected {
            return fail(format!(
                "k={k}: {} vs {}",
                fmt_rational(&got),
                fmt_rational(&expected)
            ));
        }
    }
    pass("k = 1..12 equal")
}

fn criterion_3() -> Outcome {
    let g = generators::petersen();
    let oracle = oracle_perfect_matchings(&g);
    let analyzer = match ExactAnalyzer::new(&g, DEFAULT_PM_CAP) {
        Ok(a) => a,
        Err(e) => return fail(e.to_string()),
    };
    let found: Vec<Vec<usize>> = analyzer
        .matchings()
        .iter()
        .map(|m| m.edges().ids().to_vec())
        .collect();
    if found.len() != 6 || found != oracle {
        return fail(format!(
            "{} perfect matchings, oracle {}",
            found.len(),
            oracle.len()
        ));
    }
    let expected = [
        ratio(1, 3),
        ratio(3, 5),
        ratio(4, 5),
        ratio(14, 15),
        ratio(1, 1),
    ];
    for (k, want) in (1..=5).zip(&expected) {
        let got = analyzer.m_exact(k).unwrap();
        let brute = Rational::new(oracle_best_union(&oracle, k, 15).into(), 15.into());
        if &got.fraction != want || brute != *want {
            return fail(format!(
                "k={k}: {} (brute force {})",
                fmt_rational(&got.fraction),
                fmt_rational(&brute)
            ));
        }
    }
    match analyzer.excessive_index() {
        Ok(ix) if ix.value == 5 => {}
        other => return fail(format!("excessive index {other:?}")),
    }
    match bf_double_cover(&g, 3, DEFAULT_PM_CAP) {
        Ok(DoubleCover::Found(ms)) => {
            let ids: Vec<Vec<usize>> = ms.iter().map(|m| m.edges().ids().to_vec()).collect();
            if ids != oracle {
                return fail("double cover is not the 6 perfect matchings");
            }
        }
        other => return fail(format!("double cover {other:?}")),
    }
    pass("6 PMs; 1/3, 3/5, 4/5, 14/15, 1; index 5; double cover = all 6")
}

fn criterion_4() -> Outcome {
    let corpus = corpus();
    let mut runs = 0;
    for (name, g, r) in &corpus {
        for k in 1..=6 {
            let rep = match greedy_cover(g, *r, k, CoverOptions::exact()) {
                Ok(rep) => rep,
                Err(e) => return fail(format!("{name} k={k}: {e}")),
            };
            let bound = bounds::bound_improved(*r, k as u32).unwrap().value;
            if rep.fraction < bound {
                return fail(format!(
                    "{name} k={k}: {} < {}",
                    fmt_rational(&rep.fraction),
                    fmt_rational(&bound)
                ));
            }
            for c in &rep.certificates {
                if c.level != BoundLevel::L1 {
                    return fail(format!("{name} k={k} step {}: level {:?}", c.step, c.level));
                }
                if c.cut_audit.all_satisfied() != Some(true) {
                    return fail(format!(
                        "{name} k={k} step {}: audit {:?}",
                        c.step, c.cut_audit
                    ));
                }
            }
            runs += 1;
        }
    }
    pass(format!(
        "{} graphs, {runs} runs, all L1, audits clean",
        corpus.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut steps = 0;
    for seed in 0..10 {
        let g = match generators::random_regular(30, 4, seed) {
            Ok(g) => g,
            Err(e) => return fail(format!("seed {seed}: {e}")),
        };
        for k in [8] {
            let rep = match greedy_cover(&g, 4, k, CoverOptions::default()) {
                Ok(rep) => rep,
                Err(e) => return fail(format!("seed {seed}: {e}")),
            };
            for c in &rep.certificates {
                let floor = Rational::new(c.uncovered_before.into(), 4.into());
                if Rational::from_integer(c.actual_gain.into()) < floor {
                    return fail(format!(
                        "seed {seed} step {}: {} < {}",
                        c.step,
                        c.actual_gain,
                        fmt_rational(&floor)
                    ));
                }
                steps += 1;
            }
        }
    }
    pass(format!(
        "{steps} steps on 10 graphs, every gain >= uncovered/4"
    ))
}

fn criterion_6() -> Outcome {
    let mut petersen_p = None;
    let corpus = corpus();
    for (name, g, r) in &corpus {
        let w = fractional::uniform(g, *r).unwrap();
        let d = match fractional::decompose(g, &w, DEFAULT_PM_CAP) {
            Ok(d) => d,
            Err(e) => return fail(format!("{name}: {e}")),
        };
        let mut sum = vec![Rational::zero(); g.edge_count()];
        let mut total = Rational::zero();
        for (m, c) in &d.terms {
            if *c <= Rational::zero() {
                return fail(format!("{name}: nonpositive coefficient"));
            }
            total += c;
            for e in m.edges().iter() {
                sum[e] += c;
            }
        }
        if sum != w.values() || !total.is_one() {
            return fail(format!("{name}: reconstruction differs"));
        }
        let mc = match fractional::multicoloring(g, *r, DEFAULT_PM_CAP) {
            Ok(mc) => mc,
            Err(e) => return fail(format!("{name}: {e}")),
        };
        let mut uses = vec![0u64; g.edge_count()];
        for m in &mc.matchings {
            for e in m.edges().iter() {
                uses[e] += 1;
            }
        }
        if mc.matchings.len() as u64 != *r as u64 * mc.p || uses.iter().any(|&u| u != mc.p) {
            return fail(format!(
                "{name}: multicoloring uses {uses:?} with p = {}",
                mc.p
            ));
        }
        if name == "petersen" {
            petersen_p = Some(mc.p);
        }
    }
    match petersen_p {
        Some(2) => pass(format!(
            "{} graphs decomposed exactly; Petersen p = 2",
            corpus.len()
        )),
        other => fail(format!("Petersen p = {other:?}")),
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut small: Vec<(String, Multigraph)> = vec![
        ("petersen".into(), generators::petersen()),
        ("k4".into(), generators::k4()),
        ("k33".into(), generators::k33()),
        ("bridge_pair".into(), generators::bridge_pair()),
    ];
    for n in 3..=6 {
        small.push((format!("prism:{n}"), generators::prism(n).unwrap()));
    }
    for r in 3..=5 {
        small.push((format!("dipole:{r}"), generators::dipole(r).unwrap()));
    }
    for (i, (n, r)) in [
        (8, 3),
        (10, 3),
        (12, 3),
        (8, 4),
        (10, 4),
        (12, 4),
        (10, 5),
        (12, 5),
    ]
    .into_iter()
    .enumerate()
    {
        small.push((
            format!("random_regular:{n},{r},{i}"),
            generators::random_regular(n, r, i as u64).unwrap(),
        ));
    }
    let mut blossom_checks = 0;
    for (name, g) in &small {
        let pms = enumerate_perfect_matchings(g, DEFAULT_PM_CAP).unwrap();
        for _ in 0..100 {
            let w = random_weights(&mut rng, g.edge_count());
            let got = max_weight_perfect_matching(g, &w).unwrap();
            let best = pms.iter().map(|m| m.weight(&w)).max().unwrap();
            let first_best = pms.iter().find(|m| m.weight(&w) == best).unwrap();
            if got.weight(&w) != best || &got != first_best {
                return fail(format!(
                    "{name}: blossom {} vs enumeration {}",
                    fmt_rational(&got.weight(&w)),
                    fmt_rational(&best)
                ));
            }
            blossom_checks += 1;
        }
    }
    let mut cut_graphs = small.clone();
    for (i, (n, r)) in [(14, 3), (16, 3), (14, 4), (16, 4), (14, 5), (16, 5)]
        .into_iter()
        .enumerate()
    {
        cut_graphs.push((
            format!("random_regular:{n},{r},{}", 50 + i),
            generators::random_regular(n, r, 50 + i as u64).unwrap(),
        ));
    }
    let mut cut_checks = 0;
    for (name, g) in &cut_graphs {
        for round in 0..50 {
            let w = random_weights(&mut rng, g.edge_count());
            let fast = min_odd_cut(g, &w).unwrap();
            let slow = min_odd_cut_brute_force(g, &w, 20).unwrap();
            let direct = g
                .boundary(&fast.witness)
                .unwrap()
                .iter()
                .fold(Rational::zero(), |acc, e| acc + &w[e]);
            if fast.value != slow.value
                || direct != fast.value
                || fast.witness.len().is_multiple_of(2)
            {
                return fail(format!(
                    "{name} round {round}: tree {} vs brute force {}",
                    fmt_rational(&fast.value),
                    fmt_rational(&slow.value)
                ));
            }
            cut_checks += 1;
        }
    }
    pass(format!(
        "{blossom_checks} matching and {cut_checks} odd-cut comparisons, 0 discrepancies"
    ))
}

fn criterion_8() -> Outcome {
    let mut assignments = 0u64;
    let mut sum_failures = Vec::new();
    let mut range_failures = Vec::new();
    for r in 3..=6u32 {
        let lower = if r % 2 == 0 {
            ratio(1, r as i64 + 3)
        } else {
            ratio(1, r as i64 + 4)
        };
        for k in 2..=10u32 {
            // Independent evaluation of the step formula.
            let entry = |count: i64| -> Rational {
                let (r, k) = (r as i64, k as i64);
                let (num, den) = if r % 2 == 0 {
                    (
                        (r - 2) * k - (r - 4) - count,
                        (r * r - 2 * r - 1) * k - (r * r - 4 * r - 1),
                    )
                } else {
                    (
                        (r - 1) * k - (r - 3) - 2 * count,
                        (r * r - r - 2) * k - (r * r - 3 * r - 2),
                    )
                };
                Rational::new(BigInt::from(num), BigInt::from(den))
            };
            for count in 0..k {
                let got = fractional::step_weight(r, k, count).unwrap();
                if got != entry(count as i64) {
                    return fail(format!(
                        "r={r} k={k} n={count}: {} disagrees with the formula",
                        fmt_rational(&got)
                    ));
                }
                if got <= lower || got >= Rational::one() {
                    range_failures.push(format!("r={r},k={k},n={count}:{}", fmt_rational(&got)));
                }
            }
            // Every way to split k-1 among the r edges at a vertex.
            let mut counts = vec![0u32; r as usize];
            loop {
                if counts.iter().sum::<u32>() == k - 1 {
                    let total = counts.iter().fold(Rational::zero(), |acc, &c| {
                        acc + fractional::step_weight(r, k, c).unwrap()
                    });
                    if !total.is_one() {
                        sum_failures.push(format!("r={r} k={k} {counts:?}"));
                    }
                    assignments += 1;
                }
                let mut i = 0;
                while i < counts.len() && counts[i] == k - 1 {
                    counts[i] = 0;
                    i += 1;
                }
                if i == counts.len() {
                    break;
                }
                counts[i] += 1;
            }
        }
    }
    let detail = format!(
        "{assignments} vertex assignments, {} sum violations; {} range violations{}",
        sum_failures.len(),
        range_failures.len(),
        if range_failures.is_empty() {
            String::new()
        } else {
            format!(
                " (lower bound 1/(r+4) reached or crossed at {})",
                range_failures.join(" ")
            )
        }
    );
    if sum_failures.is_empty() && range_failures.is_empty() {
        pass(detail)
    } else {
        fail(detail)
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "table reproduction", criterion_1, Duration::from_secs(1)),
        (
            2,
            "cubic specialization",
            criterion_2,
            Duration::from_secs(1),
        ),
        (
            3,
            "Petersen oracle chain",
            criterion_3,
            Duration::from_secs(5),
        ),
        (
            4,
            "per-graph bound, exact-lemma mode",
            criterion_4,
            Duration::from_secs(120),
        ),
        (
            5,
            "unconditional per-step gain, fast mode",
            criterion_5,
            Duration::from_secs(30),
        ),
        (
            6,
            "polytope decomposition and multicoloring",
            criterion_6,
            Duration::from_secs(30),
        ),
        (
            7,
            "oracle equivalences",
            criterion_7,
            Duration::from_secs(600),
        ),
        (
            8,
            "step-vector identities",
            criterion_8,
            Duration::from_secs(600),
        ),
    ];
    let mut failures = 0;
    for (id, title, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.ok && elapsed > limit {
            outcome = fail(format!(
                "{} but took {:.2?} (limit {limit:?})",
                outcome.detail, elapsed
            ));
        }
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {id} ({title}): {} [{elapsed:.2?}]",
            outcome.detail
        );
        failures += usize::from(!outcome.ok);
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
