//! One PASS/FAIL line per acceptance criterion.
//!
//! Some criteria fail for mathematical reasons on known instances. Each of
//! those carries an independent rule naming the instances expected to fail;
//! the line still reads FAIL, and the process only exits non-zero when the
//! observed failures differ from that rule or a criterion without such a rule
//! fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rccloop::analysis::{
    check_group_orders, check_rcc, check_rip, compute_subsets, inner_mapping, inner_mapping_closed_form, simplicity_verdict,
};
use rccloop::iso::{
    classification_crosscheck, count_table, frobenius_orbits, predicted_count, ClassifyOptions, RowKind,
    DEFAULT_SEARCH_BUDGET,
};
use rccloop::loops::{enumerate_normal_subloops, verify_loop, Loop, DEFAULT_CLOSURE_CAP};
use rccloop::{Elem, FiniteField, RccLoop};

const EXAMPLE_TEXT: &str = "order 8 identity 1
1 2 3 4 5 6 7 8
2 1 6 8 7 3 5 4
3 6 4 1 8 5 2 7
4 8 7 5 1 2 6 3
5 7 1 6 3 8 4 2
6 3 8 2 4 7 1 5
7 5 2 3 6 4 8 1
8 4 5 7 2 1 3 6
";

const SWEEP: &[(u32, u32)] = &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

/// An instance named by field order and the codes of r and s.
type Tag = (u32, u32, u32);

struct Outcome {
    passed: bool,
    detail: String,
    /// `Some(expected failures)` when the failures are a known defect.
    expected: Option<Vec<Tag>>,
    failures: Vec<Tag>,
}

impl Outcome {
    fn plain(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into(), expected: None, failures: Vec::new() }
    }

    fn against(mut failures: Vec<Tag>, mut expected: Vec<Tag>, detail: impl Into<String>) -> Self {
        failures.sort_unstable();
        expected.sort_unstable();
        Outcome { passed: failures.is_empty(), detail: detail.into(), expected: Some(expected), failures }
    }

    /// Whether the result is what the suite predicts.
    fn as_predicted(&self) -> bool {
        match &self.expected {
            Some(exp) => &self.failures == exp,
            None => self.passed,
        }
    }
}

fn sweep_loops() -> Vec<RccLoop> {
    let mut out = Vec::new();
    for &(p, n) in SWEEP {
        let field = FiniteField::new(p, n).unwrap();
        for f in field.irreducible_quadratics() {
            out.push(RccLoop::build(&field, f).unwrap());
        }
    }
    out
}

fn tag(lp: &RccLoop) -> Tag {
    let f = lp.quadratic();
    (lp.field().q(), f.r.code(), f.s.code())
}

fn build(p: u32, n: u32, r: u64, s: u64) -> RccLoop {
    let field = FiniteField::new(p, n).unwrap();
    let f = field.quadratic(field.elem(r).unwrap(), field.elem(s).unwrap()).unwrap();
    RccLoop::build(&field, f).unwrap()
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    out.detail = format!("{}; {:.2?} (limit {:?})", out.detail, took, limit);
    if took > limit {
        out.passed = false;
        out.expected = None;
    }
    out
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), || {
        let out = Command::new(env!("CARGO_BIN_EXE_rccloop"))
            .args(["build", "-p", "3", "-n", "1", "-r", "1", "-s", "2"])
            .output()
            .unwrap();
        let exact = out.status.success() && out.stdout == EXAMPLE_TEXT.as_bytes();
        Outcome::plain(exact, "order-8 table from the binary, byte for byte")
    })
}

fn criterion_2() -> Outcome {
    let lp = build(3, 1, 1, 2);
    let two = lp.field().elem(2).unwrap();
    let idx = lp.index_of((two, two)).unwrap();
    let cycle = lp.as_loop().right_translation(idx).to_string();
    Outcome::plain(cycle == "(1,8,6,5,2,4,3,7)", format!("R at [2,2] is {cycle}"))
}

/// RIP needs every section inverse to be a section matrix, which happens
/// only for s = 1; s is the constant term, so this is read off the code.
fn criterion_3(loops: &[RccLoop]) -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut failures = Vec::new();
        let mut broken = 0;
        for lp in loops {
            let is_loop = verify_loop(lp.table()).is_loop();
            let rcc = check_rcc(lp.as_loop()).is_rcc();
            if !is_loop || !rcc {
                broken += 1;
            }
            if !is_loop || !rcc || !check_rip(lp.as_loop()) {
                failures.push(tag(lp));
            }
        }
        let expected = loops.iter().filter(|lp| lp.quadratic().s != Elem::ONE).map(tag).collect();
        Outcome::against(
            failures,
            expected,
            format!("{} loops, {broken} not RCC loops; RIP expected only where s = 1", loops.len()),
        )
    })
}

fn structure_ok(lp: &RccLoop) -> bool {
    let field = lp.field();
    let q = field.q() as usize;
    let subsets = compute_subsets(lp.as_loop());
    let zero_row: Vec<usize> = (0..lp.order()).filter(|&i| lp.pair(i).0.is_zero()).collect();
    let commutant = subsets.commutant == zero_row && zero_row.len() == q - 1;
    let nuclei = subsets.middle_nucleus == subsets.right_nucleus;
    let contained = subsets.commutant.iter().all(|a| subsets.left_nucleus.contains(a));
    let equal = subsets.commutant == subsets.left_nucleus;
    let strict_expected = q == 3 && lp.quadratic().r.is_zero();
    let left = contained && (equal != strict_expected);
    let pm_one: Vec<usize> = [Elem::ONE, field.neg(Elem::ONE)]
        .iter()
        .map(|&b| lp.index_of((Elem::ZERO, b)).unwrap())
        .collect();
    let allowed = |members: &[usize]| {
        members.len() == 1
            || members.len() == lp.order()
            || members == zero_row.as_slice()
            || (members.len() == pm_one.len() && pm_one.iter().all(|x| members.contains(x)))
    };
    let normals = enumerate_normal_subloops(lp.as_loop()).iter().all(|s| allowed(s.members()));
    commutant && nuclei && left && normals
}

/// Over F_2 the loop is Z_3, so everything commutes; for x^2 + 1 over F_3 it
/// is the quaternion group with three extra normal subgroups of order 4.
fn criterion_4(loops: &[RccLoop]) -> Outcome {
    let failures = loops.iter().filter(|lp| !structure_ok(lp)).map(tag).collect();
    let expected = loops
        .iter()
        .filter(|lp| lp.field().q() == 2 || (lp.field().q() == 3 && lp.quadratic().r.is_zero()))
        .map(tag)
        .collect();
    Outcome::against(failures, expected, "commutant, nuclei and normal subloops")
}

/// The quaternion case again: its central quotient is the Klein four-group.
fn criterion_5(loops: &[RccLoop]) -> Outcome {
    let failures = loops.iter().filter(|lp| !simplicity_verdict(lp).unwrap().matches).map(tag).collect();
    let expected = loops.iter().filter(|lp| lp.field().q() == 3 && lp.quadratic().r.is_zero()).map(tag).collect();
    Outcome::against(failures, expected, "enumerated verdicts against the r-based prediction, quotients included")
}

/// All section determinants are squares times s, so for odd q with s a
/// square the right translations generate only the square-determinant half
/// of GL(2,q). Over F_2 the loop is Z_3 and its group has order 3.
fn criterion_6() -> Outcome {
    timed(Duration::from_secs(120), || {
        let mut failures = Vec::new();
        let mut expected = Vec::new();
        let mut seen = Vec::new();
        for &(p, n) in &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
            let field = FiniteField::new(p, n).unwrap();
            let q = field.q() as u64;
            for f in field.irreducible_quadratics() {
                let lp = RccLoop::build(&field, f).unwrap();
                let c = check_group_orders(&lp, DEFAULT_CLOSURE_CAP).unwrap();
                let gl = (q * q - 1) * (q * q - q);
                let ok = c.mlt_order as u64 == gl && c.mlt_order as u64 / c.loop_order as u64 == q * (q - 1);
                if !ok {
                    failures.push(tag(&lp));
                }
                let square = field.pow(f.s, (q - 1) / 2) == Elem::ONE;
                if q == 2 || (q % 2 == 1 && square) {
                    expected.push(tag(&lp));
                }
                seen.push(format!("{q}:{}", c.mlt_order));
            }
        }
        seen.sort();
        seen.dedup();
        Outcome::against(failures, expected, format!("closure orders seen (q:order) {}", seen.join(" ")))
    })
}

fn criterion_7() -> Outcome {
    let want = [((3, 1), 3), ((2, 2), 3), ((5, 1), 10), ((7, 1), 21), ((2, 3), 10), ((3, 2), 18), ((2, 4), 30)];
    let mut got = Vec::new();
    let mut ok = true;
    for ((p, n), count) in want {
        let field = FiniteField::new(p, n).unwrap();
        let orbits = frobenius_orbits(&field).len() as u64;
        ok &= orbits == count && predicted_count(p, n) == count;
        got.push(orbits.to_string());
    }
    Outcome::plain(ok, format!("orbit counts {}", got.join(", ")))
}

fn criterion_8() -> Outcome {
    timed(Duration::from_secs(600), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (p, n) in [(3, 1), (2, 2), (5, 1)] {
            let field = FiniteField::new(p, n).unwrap();
            let r = classification_crosscheck(&field, ClassifyOptions::default(), true, DEFAULT_SEARCH_BUDGET).unwrap();
            let agree = r.oracle.as_ref().is_some_and(|o| o.partition_matches) && r.ok();
            ok &= agree;
            parts.push(format!("q={} {}", field.q(), if agree { "agrees" } else { "differs" }));
        }
        Outcome::plain(ok, parts.join(", "))
    })
}

fn criterion_9() -> Outcome {
    let table = count_table(&[(5, 1), (7, 1)], ClassifyOptions { enumerate_simplicity: true }).unwrap();
    let quotients = |q: u32| {
        table.rows.iter().find(|r| r.q == q && r.kind == RowKind::Quotient).map(|r| (r.non_isomorphic, r.simple))
    };
    let merged = |order: usize| table.merged.iter().find(|r| r.order == order).map(|r| (r.non_isomorphic, r.simple));
    let ok = quotients(5) == Some((2, 2)) && merged(12) == Some((2, 2)) && merged(24) == Some((13, 11));
    Outcome::plain(
        ok,
        format!("order 12 {:?}, order 24 {:?} (non-isomorphic, simple)", merged(12), merged(24)),
    )
}

/// Counted by marking the reducible pairs (-(a+b), ab) over all roots a, b,
/// which is independent of the root search used by the library.
fn criterion_10() -> Outcome {
    let mut checked = 0;
    let mut ok = true;
    for q in 2u32..=1024 {
        let Some((p, n)) = rccloop_cli::prime_power(q) else { continue };
        let field = FiniteField::new(p, n).unwrap();
        let q = q as usize;
        let mut reducible = vec![false; q * q];
        for a in field.elements() {
            for b in field.elements() {
                let r = field.add(a, b);
                let s = field.mul(a, b);
                reducible[r.code() as usize * q + s.code() as usize] = true;
            }
        }
        let count = reducible.iter().filter(|&&x| !x).count();
        ok &= count == (q * q - q) / 2;
        if q <= 256 {
            ok &= field.irreducible_quadratics().len() == count;
        }
        checked += 1;
    }
    Outcome::plain(ok, format!("{checked} prime powers up to 1024"))
}

fn criterion_11() -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut mismatches = 0;
        let mut pairs = 0;
        for &(p, n) in &[(3, 1), (2, 2), (5, 1), (2, 3)] {
            let field = FiniteField::new(p, n).unwrap();
            for f in field.irreducible_quadratics() {
                let lp = RccLoop::build(&field, f).unwrap();
                let rcc = check_rcc(lp.as_loop());
                if !rcc.agree() {
                    mismatches += 1;
                }
                for &u in lp.elements() {
                    for &v in lp.elements() {
                        let m = inner_mapping(&lp, u, v).unwrap();
                        pairs += 1;
                        if !m.is_affine_form() {
                            mismatches += 1;
                        }
                        if let Some(cf) = inner_mapping_closed_form(&field, &f, u, v) {
                            if cf != m {
                                mismatches += 1;
                            }
                        }
                    }
                }
            }
        }
        let base = build(3, 1, 1, 2).table().clone();
        let m = base.order();
        let mut missed = 0;
        let mut mutations = 0;
        for x in 0..m {
            for y in 0..m {
                for v in 0..m {
                    if v == base.mul(x, y) {
                        continue;
                    }
                    let mut t = base.clone();
                    t.set(x, y, v).unwrap();
                    mutations += 1;
                    let caught =
                        !verify_loop(&t).is_loop() || Loop::new(t).map_or(true, |lp| !check_rcc(&lp).is_rcc());
                    if !caught {
                        missed += 1;
                    }
                }
            }
        }
        Outcome::plain(
            mismatches == 0 && missed == 0,
            format!("{pairs} inner mappings, {mismatches} mismatches; {mutations} mutations, {missed} missed"),
        )
    })
}

type Criterion<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

fn main() -> ExitCode {
    let loops = sweep_loops();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("example table", Box::new(criterion_1)),
        ("example permutation", Box::new(criterion_2)),
        ("construction sweep", Box::new(|| criterion_3(&loops))),
        ("structure sweep", Box::new(|| criterion_4(&loops))),
        ("simplicity", Box::new(|| criterion_5(&loops))),
        ("multiplication group order", Box::new(criterion_6)),
        ("classification counts", Box::new(criterion_7)),
        ("isomorphism oracle", Box::new(criterion_8)),
        ("quotient rows", Box::new(criterion_9)),
        ("irreducible counts", Box::new(criterion_10)),
        ("property suite", Box::new(criterion_11)),
    ];
    let mut surprises = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let out = run();
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2} {name}: {}", i + 1, out.detail);
        if let Some(exp) = &out.expected {
            if out.failures.len() > 12 && &out.failures == exp {
                println!("     {} failing instances, exactly the known defect set", exp.len());
            } else if !out.failures.is_empty() || !exp.is_empty() {
                println!("     failing (q, r, s): {:?}", out.failures);
                println!("     known defect set:  {:?}", exp);
            }
        }
        if !out.as_predicted() {
            println!("     UNEXPECTED");
            surprises += 1;
        }
    }
    if surprises == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{surprises} criteria differ from their expected outcome");
        ExitCode::FAILURE
    }
}
