//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use catalan_poset::census::{count_by_descent_set_bruteforce, count_by_descent_set_lemma};
use catalan_poset::numbers::{binomial, narayana_row};
use catalan_poset::poset::antichain::{
    dilworth, longest_chain, max_k_antichain_union, top_rank_sum,
};
use catalan_poset::poset::coarsening::{antichain_transfer_violations, check_coarsening};
use catalan_poset::poset::duality::{construct_antiautomorphism, order_reversal_violations};
use catalan_poset::poset::export::{to_dot, Family};
use catalan_poset::poset::{is_palindromic, is_unimodal};
use catalan_poset::{
    build_poset_p, build_poset_q, catalan, enumerate_av132, enumerate_ncp, ncp_to_perm,
    perm_to_ncp, verify_lemma, DescentSet, NoncrossingPartition, Permutation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bijection_golden() -> Outcome {
    let q: NoncrossingPartition = "{1,4,6}/{2,3}/{5}/{7,8}"
        .parse()
        .map_err(|e| format!("{e}"))?;
    let p = ncp_to_perm(&q);
    ensure(p.to_string() == "64573812", || format!("f gave {p}"))?;
    let back = perm_to_ncp(&p).map_err(|e| e.to_string())?;
    ensure(back == q, || format!("inverse gave {back}"))?;
    for n in 1..=12 {
        let one = NoncrossingPartition::single_block(n).unwrap();
        let all = NoncrossingPartition::singletons(n).unwrap();
        let id = Permutation::identity(n).unwrap();
        let rev = Permutation::decreasing(n).unwrap();
        ensure(ncp_to_perm(&one) == id, || format!("single block, n={n}"))?;
        ensure(ncp_to_perm(&all) == rev, || format!("singletons, n={n}"))?;
        ensure(perm_to_ncp(&id).unwrap() == one, || {
            format!("identity, n={n}")
        })?;
        ensure(perm_to_ncp(&rev).unwrap() == all, || {
            format!("reversal, n={n}")
        })?;
    }
    Ok("64573812 <-> {1,4,6}/{2,3}/{5}/{7,8}; extremes n<=12".into())
}

fn catalan_counts() -> Outcome {
    for n in 1..=12usize {
        let c = catalan(n as u64).unwrap();
        let a = enumerate_av132(n).unwrap().count() as u128;
        let q = enumerate_ncp(n).unwrap().count() as u128;
        ensure(a == c && q == c, || {
            format!("n={n}: av132={a} ncp={q} catalan={c}")
        })?;
    }
    let c12 = catalan(12).unwrap();
    ensure(c12 == 208_012, || format!("catalan(12) = {c12}"))?;
    Ok("n<=12, catalan(12)=208012".into())
}

fn block_minima_descents() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=10 {
        for q in enumerate_ncp(n).unwrap() {
            let expected = DescentSet::from_positions(
                n,
                q.block_minima()
                    .into_iter()
                    .filter(|&m| m > 1)
                    .map(|m| m - 1),
            )
            .unwrap();
            let got = ncp_to_perm(&q).descent_set();
            ensure(got == expected, || {
                format!("{q}: D = {got}, minima give {expected}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions, n<=10, 0 violations"))
}

const P4_LABELS: [&str; 14] = [
    "1234", "2134", "2314", "2341", "3124", "3214", "3241", "3412", "3421", "4123", "4213", "4231",
    "4312", "4321",
];

fn p4_golden() -> Outcome {
    let p = build_poset_p(4).unwrap();
    ensure(p.len() == 14, || format!("{} elements", p.len()))?;
    ensure(p.rank_sizes() == [1, 6, 6, 1], || {
        format!("rank sizes {:?}", p.rank_sizes())
    })?;
    let label = |i: usize| p.elements()[i].to_string();
    let mins: Vec<String> = p.minimal_elements().into_iter().map(label).collect();
    let maxs: Vec<String> = p.maximal_elements().into_iter().map(label).collect();
    ensure(mins == ["1234"], || format!("minimal elements {mins:?}"))?;
    ensure(maxs == ["4321"], || format!("maximal elements {maxs:?}"))?;

    let dot = to_dot(4, Family::P, &p);
    let nodes: BTreeSet<&str> = dot
        .split("label=\"")
        .skip(1)
        .filter_map(|s| s.split('"').next())
        .collect();
    let expected: BTreeSet<&str> = P4_LABELS.into_iter().collect();
    ensure(nodes == expected, || format!("DOT labels {nodes:?}"))?;
    Ok("14 elements, ranks [1,6,6,1], 1234..4321, DOT labels match".into())
}

fn rank_statistics() -> Outcome {
    for n in 1..=9 {
        let p = build_poset_p(n).unwrap();
        let q = build_poset_q(n).unwrap();
        let row: Vec<usize> = narayana_row(n as u64)
            .unwrap()
            .into_iter()
            .map(|x| x as usize)
            .collect();
        let (sp, sq) = (p.rank_sizes(), q.rank_sizes());
        ensure(sp == row, || format!("n={n}: P {sp:?} vs Narayana {row:?}"))?;
        ensure(sq == sp, || format!("n={n}: Q {sq:?} vs P {sp:?}"))?;
        ensure(is_palindromic(&sp) && is_unimodal(&sp), || {
            format!("n={n}: {sp:?} not symmetric unimodal")
        })?;
    }
    Ok("n<=9, P = Q = Narayana row, symmetric, unimodal".into())
}

fn coarsening() -> Outcome {
    let (mut scanned, mut strict) = (0u128, 0u128);
    for n in 1..=8u64 {
        let r = check_coarsening(n as usize).unwrap();
        ensure(r.passed(), || {
            format!("n={n}: {} counterexamples", r.counterexamples.len())
        })?;
        // Intervals of the noncrossing partition lattice number
        // binom(3n, n) / (2n + 1); the strict ones exclude the C_n singletons.
        let c = catalan(n).unwrap();
        let intervals = binomial(3 * n, n).unwrap() / (2 * n as u128 + 1);
        ensure(r.pairs_checked as u128 == intervals - c, || {
            format!(
                "n={n}: {} strict pairs, expected {}",
                r.pairs_checked,
                intervals - c
            )
        })?;
        scanned += c * c;
        strict += r.pairs_checked as u128;
    }
    Ok(format!(
        "{scanned} ordered pairs scanned, {strict} strict (interval count), n<=8, 0 violations"
    ))
}

fn lemma() -> Outcome {
    let mut subsets = 0;
    for n in 1..=12 {
        let r = verify_lemma(n).unwrap();
        ensure(r.passed(), || {
            format!("n={n}: {} violations", r.violations.len())
        })?;
        subsets += r.subsets_checked;
    }
    let mut compared = 0;
    for n in 1..=9 {
        for s in DescentSet::all(n).unwrap() {
            let fast = count_by_descent_set_lemma(n, &s).unwrap();
            let slow = count_by_descent_set_bruteforce(n, &s).unwrap();
            ensure(fast == slow, || {
                format!("n={n} S={s}: recursive {fast}, census {slow}")
            })?;
            compared += 1;
        }
    }
    Ok(format!(
        "{subsets} subsets symmetric (n<=12); recursive = census on {compared} (n<=9)"
    ))
}

fn self_duality() -> Outcome {
    let mut pairs = 0u64;
    for n in 1..=7 {
        let p = build_poset_p(n).unwrap();
        let m = construct_antiautomorphism(&p).unwrap();
        let bad = order_reversal_violations(&p, &m);
        ensure(bad == Some(0), || format!("n={n}: {bad:?}"))?;
        pairs += (p.len() * p.len()) as u64;
    }
    Ok(format!("{pairs} ordered pairs reversed, n<=7"))
}

fn sperner() -> Outcome {
    for n in 1..=8 {
        let p = build_poset_p(n).unwrap();
        let width = dilworth(&p).unwrap().width();
        let largest = narayana_row(n as u64).unwrap().into_iter().max().unwrap() as usize;
        ensure(width == largest, || {
            format!("n={n}: width {width}, largest rank {largest}")
        })?;
        if n <= 6 {
            for k in 1..=longest_chain(&p) {
                let d = max_k_antichain_union(&p, k).unwrap();
                let t = top_rank_sum(&p, k);
                ensure(d == t, || format!("n={n}: d_{k} = {d}, top ranks {t}"))?;
            }
        }
        if n <= 7 {
            let (_, bad) = antichain_transfer_violations(&p).unwrap();
            ensure(bad.is_empty(), || {
                format!("n={n}: {} comparable preimages", bad.len())
            })?;
        }
    }
    Ok("width n<=8; d_k all k n<=6; antichain transfer n<=7".into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n);
            out.push(p);
        }
    }
    out
}

fn oracle_cross_checks() -> Outcome {
    let mut scanned = 0;
    for n in 1..=7 {
        for entries in permutations(n) {
            let p = Permutation::new(entries).unwrap();
            ensure(p.is_132_avoiding() == p.is_132_avoiding_naive(), || {
                format!("scan and definition disagree on {p}")
            })?;
            scanned += 1;
        }
    }
    let mut trips = 0;
    for n in 1..=10 {
        for q in enumerate_ncp(n).unwrap() {
            ensure(perm_to_ncp(&ncp_to_perm(&q)).unwrap() == q, || {
                format!("f^-1 f {q}")
            })?;
            trips += 1;
        }
        for p in enumerate_av132(n).unwrap() {
            ensure(ncp_to_perm(&perm_to_ncp(&p).unwrap()) == p, || {
                format!("f f^-1 {p}")
            })?;
            trips += 1;
        }
    }
    Ok(format!(
        "{scanned} permutations scanned (n<=7); {trips} round trips (n<=10)"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("bijection golden values", bijection_golden),
        ("catalan counts", catalan_counts),
        ("descents are shifted block minima", block_minima_descents),
        ("P_4 structure and DOT labels", p4_golden),
        ("narayana rank statistics", rank_statistics),
        ("refinement coarsens to descent order", coarsening),
        ("reverse-complement symmetry", lemma),
        ("self-duality of P_n", self_duality),
        ("sperner properties", sperner),
        ("oracle cross-checks", oracle_cross_checks),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[{:>2}] PASS {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[{:>2}] FAIL {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
