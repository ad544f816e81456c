//! Structural verification of loops: RCC and RIP, the nuclei, normal
//! subloops, and consistency checks specific to the matrix construction.

pub mod inner;
pub mod properties;
pub mod simplicity;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::RccLoop;
use crate::field::Elem;
use crate::loops::{enumerate_normal_subloops, is_normal, verify_loop, Loop, LoopVerdict, Subloop};
use crate::matrix::Mat2;

pub use inner::{
    check_conjecture, check_group_orders, decompose, inner_mapping, inner_mapping_closed_form, ConjectureReport,
    GroupOrderReport,
};
pub use properties::{central_right_translations, check_rcc, check_rip, compute_subsets, RccVerdict, Subsets};
pub use simplicity::{is_simple, simplicity_verdict, SimplicityVerdict};

pub const SCHEMA_VERSION: u32 = 1;

/// A set of elements by 1-based index and, when the table is labelled, by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementSet {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ElementSet {
    fn new(lp: &Loop, members: &[usize]) -> Self {
        ElementSet {
            indices: members.iter().map(|&x| x + 1).collect(),
            labels: lp.table().labels().map(|l| members.iter().map(|&x| l[x].clone()).collect()),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &str, witness: Option<String>) -> Self {
        Check { name: name.to_string(), passed: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub r: u32,
    pub s: u32,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub schema: u32,
    pub order: usize,
    /// 1-based.
    pub identity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    pub loop_axioms: LoopVerdict,
    pub rcc: bool,
    pub rcc_tests: RccVerdict,
    pub rip: bool,
    pub associative: bool,
    pub commutative: bool,
    pub commutant: ElementSet,
    pub left_nucleus: ElementSet,
    pub middle_nucleus: ElementSet,
    pub right_nucleus: ElementSet,
    pub nucleus: ElementSet,
    pub center: ElementSet,
    pub normal_subloops: Vec<ElementSet>,
    pub simple: bool,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn first_failure<T: Send>(
    range: impl IntoParallelIterator<Item = T>,
    probe: impl Fn(T) -> Option<String> + Sync + Send,
) -> Option<String> {
    range.into_par_iter().find_map_first(probe)
}

fn set_witness(name: &str, got: &[usize], want: &[usize]) -> Option<String> {
    (got != want).then(|| {
        let one = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        format!("{name} is {{{}}}, expected {{{}}}", one(got), one(want))
    })
}

/// Checks valid for every loop, with the RCC-specific ones applied when the
/// loop is RCC.
fn generic_checks(lp: &Loop, rcc: &RccVerdict, subsets: &Subsets, normals: &[Subloop]) -> Vec<Check> {
    let mut checks = vec![Check::new(
        "rcc_tests_agree",
        (!rcc.agree()).then(|| format!("first form {}, second form {}", rcc.rcc1, rcc.rcc2)),
    )];
    let center = Subloop::from_members(lp, &subsets.center);
    checks.push(Check::new(
        "center_is_normal",
        (!center.as_ref().is_some_and(|z| is_normal(lp, z))).then(|| "center is not a normal subloop".to_string()),
    ));
    checks.push(Check::new(
        "normal_subloops_contain_identity",
        normals.iter().find(|n| !n.contains(lp.identity())).map(|n| format!("{:?}", n.members())),
    ));
    if rcc.is_rcc() {
        checks.push(Check::new(
            "middle_nucleus_equals_right_nucleus",
            set_witness("middle nucleus", &subsets.middle_nucleus, &subsets.right_nucleus),
        ));
        checks.push(Check::new(
            "commutant_within_left_nucleus",
            subsets
                .commutant
                .iter()
                .find(|a| subsets.left_nucleus.binary_search(a).is_err())
                .map(|a| format!("{} is in the commutant only", a + 1)),
        ));
        let meet: Vec<usize> =
            subsets.commutant.iter().copied().filter(|a| subsets.left_nucleus.binary_search(a).is_ok()).collect();
        checks.push(Check::new(
            "central_right_translations",
            set_witness("commutant meet left nucleus", &meet, &central_right_translations(lp)),
        ));
    }
    checks
}

fn construction_checks(rcc_loop: &RccLoop, subsets: &Subsets, normals: &[Subloop], rcc: bool, rip: bool) -> Vec<Check> {
    let field = rcc_loop.field();
    let f = rcc_loop.quadratic();
    let lp = rcc_loop.as_loop();
    let q = field.q();
    let m = lp.order();
    let sections = rcc_loop.right_section();
    let mut checks = Vec::new();

    checks.push(Check::new("is_rcc", (!rcc).then(|| "right conjugacy closure fails".to_string())));
    checks.push(Check::new(
        "has_right_inverse_property",
        if rip { None } else { properties::rip_failure(lp).map(|(x, why)| format!("{}: {why}", rcc_loop.label(x))) },
    ));

    checks.push(Check::new(
        "sections_match_translations",
        (0..m).find(|&i| rcc_loop.matrix_permutation(&sections[i]).ok() != Some(lp.right_translation(i))).map(|i| {
            format!("section matrix of {} differs from its right translation", rcc_loop.label(i))
        }),
    ));

    // Sharply transitive: M_u M_v^{-1} never has eigenvalue 1 for u != v.
    checks.push(Check::new(
        "section_fixed_point_free",
        first_failure(0..m, |i| {
            (0..m).filter(|&j| j != i).find_map(|j| {
                let quot = sections[i].mul(field, &sections[j].inv(field).ok()?);
                let shifted = Mat2([
                    [field.sub(quot.entry(0, 0), Elem::ONE), quot.entry(0, 1)],
                    [quot.entry(1, 0), field.sub(quot.entry(1, 1), Elem::ONE)],
                ]);
                let singular = shifted.det(field).is_zero();
                let trace_says = quot.det(field) == Elem::ONE && quot.trace(field) == field.from_int(2);
                (singular || trace_says).then(|| format!("{} and {}", rcc_loop.label(i), rcc_loop.label(j)))
            })
        }),
    ));

    let section_set: HashSet<Mat2> = sections.iter().copied().collect();
    checks.push(Check::new(
        "section_closed_under_conjugation",
        first_failure(0..m, |i| {
            let inv = sections[i].inv(field).ok()?;
            (0..m).find_map(|j| {
                let conj = inv.mul(field, &sections[j]).mul(field, &sections[i]);
                (!section_set.contains(&conj)).then(|| format!("{} by {}", rcc_loop.label(j), rcc_loop.label(i)))
            })
        }),
    ));

    let x_set = inner::conjectured_x_set(field, f.s);
    let mut affine = None;
    let mut closed = None;
    let mut top_left = None;
    let sweep: Vec<(Option<String>, Option<String>, Option<String>)> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut out = (None, None, None);
            for j in 0..m {
                let ij = lp.mul(i, j);
                let Ok(inv) = sections[ij].inv(field) else {
                    out.0.get_or_insert_with(|| "singular section".to_string());
                    continue;
                };
                let mat = sections[i].mul(field, &sections[j]).mul(field, &inv);
                let tag = || format!("R_{{{},{}}} = {mat}", rcc_loop.label(i), rcc_loop.label(j));
                if out.0.is_none() && !mat.is_affine_form() {
                    out.0 = Some(tag());
                }
                if out.1.is_none() {
                    if let Some(cf) = inner_mapping_closed_form(field, &f, rcc_loop.pair(i), rcc_loop.pair(j)) {
                        if cf != mat {
                            out.1 = Some(format!("{}, closed form {cf}", tag()));
                        }
                    }
                }
                if out.2.is_none() && !x_set.contains(&mat.entry(0, 0)) {
                    out.2 = Some(tag());
                }
            }
            out
        })
        .collect();
    for (a, c, t) in sweep {
        affine = affine.or(a);
        closed = closed.or(c);
        top_left = top_left.or(t);
    }
    checks.push(Check::new("inner_mappings_affine", affine));
    checks.push(Check::new("inner_mapping_closed_forms", closed));
    checks.push(Check::new("inner_mapping_top_left_entries", top_left));

    let zero_row: Vec<usize> = (0..m).filter(|&i| rcc_loop.pair(i).0.is_zero()).collect();
    checks.push(Check::new("commutant_is_zero_row", set_witness("commutant", &subsets.commutant, &zero_row)));

    let strict_expected = q == 3 && f.r.is_zero();
    let equal = subsets.commutant == subsets.left_nucleus;
    let within = properties::is_subset(&subsets.commutant, &subsets.left_nucleus);
    checks.push(Check::new(
        "commutant_vs_left_nucleus",
        (!within || equal == strict_expected).then(|| {
            format!(
                "|commutant| = {}, |left nucleus| = {}, expected {}",
                subsets.commutant.len(),
                subsets.left_nucleus.len(),
                if strict_expected { "strict containment" } else { "equality" }
            )
        }),
    ));

    let mut z_pm = vec![0, rcc_loop.index_of((Elem::ZERO, field.neg(Elem::ONE))).unwrap_or(0)];
    z_pm.sort_unstable();
    z_pm.dedup();
    checks.push(Check::new(
        "normal_subloops_bounded",
        normals
            .iter()
            .find(|n| !(n.is_trivial() || n.len() == m || n.members() == z_pm.as_slice() || n.members() == zero_row.as_slice()))
            .map(|n| format!("unexpected normal subloop {}", ElementSet::new(lp, n.members()).indices.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))),
    ));

    match simplicity_verdict(rcc_loop) {
        Ok(v) => checks.push(Check::new(
            "simplicity_matches_prediction",
            (!v.matches).then(|| {
                format!(
                    "simple = {}, r = 0: {}, normal subloop sizes {:?}, quotient {:?}",
                    v.simple,
                    v.r_is_zero,
                    v.normal_subloop_sizes,
                    v.quotient.map(|q| (q.order, q.simple))
                )
            }),
        )),
        Err(e) => checks.push(Check::new("simplicity_matches_prediction", Some(e.to_string()))),
    }
    checks
}

/// Full report for an arbitrary loop.
pub fn analyze_loop(lp: &Loop) -> StructureReport {
    build_report(lp, None)
}

/// Full report for a constructed loop, including construction-specific checks.
pub fn analyze_rcc(rcc_loop: &RccLoop) -> StructureReport {
    build_report(rcc_loop.as_loop(), Some(rcc_loop))
}

fn build_report(lp: &Loop, construction: Option<&RccLoop>) -> StructureReport {
    let rcc = check_rcc(lp);
    let rip = check_rip(lp);
    let subsets = compute_subsets(lp);
    let normals = enumerate_normal_subloops(lp);
    let mut checks = generic_checks(lp, &rcc, &subsets, &normals);
    if let Some(c) = construction {
        checks.extend(construction_checks(c, &subsets, &normals, rcc.is_rcc(), rip));
    }
    let set = |v: &[usize]| ElementSet::new(lp, v);
    StructureReport {
        schema: SCHEMA_VERSION,
        order: lp.order(),
        identity: lp.identity() + 1,
        construction: construction.map(|c| {
            let field = c.field();
            let f = c.quadratic();
            Construction {
                p: field.p(),
                n: field.n(),
                q: field.q(),
                r: f.r.code(),
                s: f.s.code(),
                polynomial: f.describe(field),
            }
        }),
        loop_axioms: verify_loop(lp.table()),
        rcc: rcc.is_rcc(),
        rcc_tests: rcc,
        rip,
        associative: lp.is_associative(),
        commutative: lp.is_commutative(),
        commutant: set(&subsets.commutant),
        left_nucleus: set(&subsets.left_nucleus),
        middle_nucleus: set(&subsets.middle_nucleus),
        right_nucleus: set(&subsets.right_nucleus),
        nucleus: set(&subsets.nucleus),
        center: set(&subsets.center),
        simple: lp.order() > 1 && normals.len() == 2,
        normal_subloops: normals.iter().map(|n| set(n.members())).collect(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Quadratic};
    use crate::loops::cyclic_group;

    #[test]
    fn example_report() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let lp = RccLoop::build(&f3, Quadratic::new(Elem::ONE, f3.elem(2).unwrap())).unwrap();
        let report = analyze_rcc(&lp);
        assert!(report.rcc && report.simple);
        assert_eq!(report.commutant.labels.as_deref(), Some(&["[0,1]".to_string(), "[0,2]".to_string()][..]));
        // [1,0] has right inverse [1,2] but left inverse [1,1]; only s = 1 gives RIP
        assert!(!report.rip);
        let failed: Vec<&str> = report.failed_checks().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["has_right_inverse_property"]);
        assert_eq!(report.identity, 1);
    }

    #[test]
    fn cyclic_group_report() {
        let report = analyze_loop(&Loop::new(cyclic_group(8)).unwrap());
        assert!(report.rcc && report.rip && !report.simple);
        assert_eq!(report.normal_subloops.len(), 4);
        assert!(report.consistent());
    }
}
