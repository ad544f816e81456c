//! Isomorphism classes of the constructed loops: Frobenius orbits of the
//! defining quadratics, the closed-form class count, a brute-force
//! isomorphism search, and the reconstructed table of loop counts.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{compute_subsets, is_simple, simplicity_verdict};
use crate::construct::RccLoop;
use crate::error::{Error, Result};
use crate::field::{FiniteField, Quadratic};
use crate::loops::{enumerate_normal_subloops, subloop_generated, Loop};

pub const SCHEMA_VERSION: u32 = 1;

/// Default number of candidate assignments the isomorphism search may try.
pub const DEFAULT_SEARCH_BUDGET: u64 = 5_000_000;

/// Orbits of the irreducible quadratics under `(r, s) -> (r^{p^i}, s^{p^i})`,
/// each sorted with its least member first, ordered by that member.
pub fn frobenius_orbits(field: &FiniteField) -> Vec<Vec<Quadratic>> {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for f in field.irreducible_quadratics() {
        if seen.contains(&f) {
            continue;
        }
        let orbit: BTreeSet<Quadratic> = (0..field.n()).map(|i| f.frobenius(field, i)).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    orbits
}

/// `floor((q^2 - q) / 2n) + ((q^2 - q) / 2 mod n)`, evaluated literally.
pub fn predicted_count(p: u32, n: u32) -> u64 {
    let q = (p as u64).pow(n);
    let half = (q * q - q) / 2;
    (q * q - q) / (2 * n as u64) + half % n as u64
}

/// Number of monic irreducible quadratics, `(q^2 - q) / 2`.
pub fn irreducible_quadratic_count(q: u64) -> u64 {
    (q * q - q) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticCodes {
    pub r: u32,
    pub s: u32,
}

impl From<Quadratic> for QuadraticCodes {
    fn from(f: Quadratic) -> Self {
        QuadraticCodes { r: f.r.code(), s: f.s.code() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitSummary {
    pub representative: QuadraticCodes,
    pub polynomial: String,
    pub members: Vec<QuadraticCodes>,
    pub r_is_zero: bool,
    pub associative: bool,
    /// From normal-subloop enumeration when requested, else predicted from `r`.
    pub simple: bool,
    /// Simplicity of the quotient by the center, for `r = 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_simple: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoClassReport {
    pub schema: u32,
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub quadratics: usize,
    pub expected_quadratics: u64,
    pub orbits: Vec<OrbitSummary>,
    pub class_count: usize,
    pub formula_count: u64,
    pub counts_match: bool,
    pub simplicity_enumerated: bool,
    pub simple_loops: usize,
    pub r_zero_orbits: usize,
    pub simple_quotients: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Decide simplicity of each representative by enumerating normal
    /// subloops rather than from `r`.
    pub enumerate_simplicity: bool,
}

pub fn frobenius_classify(field: &FiniteField, opts: ClassifyOptions) -> Result<IsoClassReport> {
    let orbits = frobenius_orbits(field);
    let summaries = orbits
        .par_iter()
        .map(|orbit| {
            let rep = orbit[0];
            let lp = RccLoop::build(field, rep)?;
            let r_is_zero = rep.r.is_zero();
            let simple = if opts.enumerate_simplicity { is_simple(lp.as_loop()) } else { !r_is_zero };
            let quotient_simple = if r_is_zero {
                Some(simplicity_verdict(&lp)?.quotient.is_some_and(|q| q.simple))
            } else {
                None
            };
            Ok(OrbitSummary {
                representative: rep.into(),
                polynomial: rep.describe(field),
                members: orbit.iter().map(|&f| f.into()).collect(),
                r_is_zero,
                associative: lp.as_loop().is_associative(),
                simple,
                quotient_simple,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let formula_count = predicted_count(field.p(), field.n());
    Ok(IsoClassReport {
        schema: SCHEMA_VERSION,
        p: field.p(),
        n: field.n(),
        q: field.q(),
        quadratics: orbits.iter().map(Vec::len).sum(),
        expected_quadratics: irreducible_quadratic_count(field.q() as u64),
        class_count: summaries.len(),
        formula_count,
        counts_match: summaries.len() as u64 == formula_count,
        simplicity_enumerated: opts.enumerate_simplicity,
        simple_loops: summaries.iter().filter(|o| o.simple).count(),
        r_zero_orbits: summaries.iter().filter(|o| o.r_is_zero).count(),
        simple_quotients: summaries.iter().filter(|o| o.quotient_simple == Some(true)).count(),
        orbits: summaries,
    })
}

/// The map `[a,b] -> [a^{p^i}, b^{p^i}]` from `source` to `target` as an
/// index bijection, checked to be a homomorphism on the full table.
pub fn build_iso(i: u32, source: &RccLoop, target: &RccLoop) -> Result<Vec<usize>> {
    let field = source.field();
    if field != target.field() {
        return Err(Error::FieldMismatch);
    }
    if source.quadratic().frobenius(field, i) != target.quadratic() {
        return Err(Error::OrbitMismatch);
    }
    let map = source
        .elements()
        .iter()
        .map(|&(a, b)| target.index_of((field.frobenius(a, i), field.frobenius(b, i))))
        .collect::<Result<Vec<_>>>()?;
    check_homomorphism(source.as_loop(), target.as_loop(), &map)?;
    Ok(map)
}

/// Checks that `map` is a bijective homomorphism from `a` to `b`.
pub fn check_homomorphism(a: &Loop, b: &Loop, map: &[usize]) -> Result<()> {
    let m = a.order();
    if b.order() != m || map.len() != m {
        return Err(Error::DomainMismatch(m, b.order()));
    }
    let mut hit = vec![false; m];
    for &y in map {
        if y >= m || std::mem::replace(&mut hit[y], true) {
            return Err(Error::NotBijection);
        }
    }
    match (0..m).into_par_iter().find_map_any(|x| {
        (0..m).find(|&y| map[a.mul(x, y)] != b.mul(map[x], map[y])).map(|y| (x, y))
    }) {
        Some((x, y)) => Err(Error::NotHomomorphism(x, y)),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `witness[x]` is the image of element `x`.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
    BudgetExceeded,
}

/// Isomorphism-invariant fingerprint of each element.
fn fingerprints(lp: &Loop) -> Vec<Vec<usize>> {
    let m = lp.order();
    (0..m)
        .map(|x| {
            let central = (0..m).all(|y| lp.mul(x, y) == lp.mul(y, x));
            let mut key = lp.right_translation(x).cycle_type();
            key.push(usize::MAX);
            key.extend(lp.left_translation(x).cycle_type());
            key.push(usize::MAX);
            // orders under right and left powers
            key.push(power_order(lp.identity(), |w| lp.mul(w, x)));
            key.push(power_order(lp.identity(), |w| lp.mul(x, w)));
            key.push(usize::from(central));
            key
        })
        .collect()
}

fn power_order(start: usize, step: impl Fn(usize) -> usize) -> usize {
    let mut w = step(start);
    let mut k = 1;
    while w != start {
        w = step(w);
        k += 1;
    }
    k
}

struct Search<'a> {
    a: &'a Loop,
    b: &'a Loop,
    key_a: Vec<usize>,
    key_b: Vec<usize>,
    phi: Vec<Option<usize>>,
    used: Vec<bool>,
    domain: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match self.phi[x] {
            Some(z) => z == y,
            None => {
                if self.used[y] || self.key_a[x] != self.key_b[y] {
                    return false;
                }
                self.phi[x] = Some(y);
                self.used[y] = true;
                self.domain.push(x);
                true
            }
        }
    }

    fn undo(&mut self, len: usize) {
        while self.domain.len() > len {
            let x = self.domain.pop().expect("nonempty");
            let y = self.phi[x].take().expect("assigned");
            self.used[y] = false;
        }
    }

    /// Extends the map to the subloop generated by its domain.
    fn propagate(&mut self, from: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let mut t = from;
        while t < self.domain.len() {
            let x = self.domain[t];
            for u in 0..=t {
                let y = self.domain[u];
                let (fx, fy) = (self.phi[x].expect("in domain"), self.phi[y].expect("in domain"));
                let pairs = [
                    (a.mul(x, y), b.mul(fx, fy)),
                    (a.mul(y, x), b.mul(fy, fx)),
                    (a.ldiv(x, y), b.ldiv(fx, fy)),
                    (a.ldiv(y, x), b.ldiv(fy, fx)),
                    (a.rdiv(x, y), b.rdiv(fx, fy)),
                    (a.rdiv(y, x), b.rdiv(fy, fx)),
                ];
                if !pairs.iter().all(|&(s, d)| self.assign(s, d)) {
                    return false;
                }
            }
            t += 1;
        }
        true
    }

    fn run(&mut self, gens: &[usize]) -> Option<IsoOutcome> {
        let Some((&g, rest)) = gens.split_first() else {
            return Some(IsoOutcome::Isomorphic(self.phi.iter().map(|y| y.expect("generated")).collect()));
        };
        let start = self.domain.len();
        for cand in 0..self.b.order() {
            if self.used[cand] || self.key_a[g] != self.key_b[cand] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Some(IsoOutcome::BudgetExceeded);
            }
            if self.assign(g, cand) && self.propagate(start) {
                if let Some(out) = self.run(rest) {
                    return Some(out);
                }
            }
            self.undo(start);
        }
        None
    }
}

/// Backtracking search for an isomorphism `a -> b`. Images are chosen for a
/// greedy generating set of `a`, rarest fingerprint first, and extended to
/// the generated subloop after each choice.
pub fn iso_oracle(a: &Loop, b: &Loop, budget: u64) -> IsoOutcome {
    let m = a.order();
    if b.order() != m {
        return IsoOutcome::NotIsomorphic;
    }
    let (fa, fb) = (fingerprints(a), fingerprints(b));
    let mut ids: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
    for key in fa.iter().chain(&fb) {
        let next = ids.len();
        ids.entry(key).or_insert(next);
    }
    let key_a: Vec<usize> = fa.iter().map(|k| ids[k]).collect();
    let key_b: Vec<usize> = fb.iter().map(|k| ids[k]).collect();
    let mut hist_a = key_a.clone();
    let mut hist_b = key_b.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return IsoOutcome::NotIsomorphic;
    }

    let mut class_size = vec![0usize; ids.len()];
    for &k in &key_a {
        class_size[k] += 1;
    }
    let mut by_rarity: Vec<usize> = (0..m).collect();
    by_rarity.sort_by_key(|&x| (class_size[key_a[x]], x));
    let mut gens = Vec::new();
    let mut span = subloop_generated(a, &[]);
    for x in by_rarity {
        if span.len() == m {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = subloop_generated(a, &gens);
        }
    }

    let mut search = Search {
        a,
        b,
        key_a,
        key_b,
        phi: vec![None; m],
        used: vec![false; m],
        domain: Vec::new(),
        nodes: 0,
        budget,
    };
    if !search.assign(a.identity(), b.identity()) || !search.propagate(0) {
        return IsoOutcome::NotIsomorphic;
    }
    match search.run(&gens) {
        Some(IsoOutcome::Isomorphic(map)) => match check_homomorphism(a, b, &map) {
            Ok(()) => IsoOutcome::Isomorphic(map),
            Err(_) => unreachable!("search produced a non-homomorphism"),
        },
        Some(other) => other,
        None => IsoOutcome::NotIsomorphic,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub loops: usize,
    pub pairs: usize,
    pub isomorphic_pairs: usize,
    pub budget_exceeded: usize,
    /// The oracle partition equals the Frobenius-orbit partition.
    pub partition_matches: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub schema: u32,
    pub classes: IsoClassReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    pub explicit_maps_checked: usize,
    pub explicit_map_failures: Vec<String>,
    /// Orbits whose members disagree on simplicity, `|C|`, `|N_lambda|` or
    /// the number of normal subloops.
    pub invariant_mismatches: Vec<String>,
}

impl CrosscheckReport {
    pub fn ok(&self) -> bool {
        self.classes.counts_match
            && self.oracle.as_ref().is_none_or(|o| o.partition_matches)
            && self.explicit_map_failures.is_empty()
            && self.invariant_mismatches.is_empty()
    }
}

/// Largest field for which the pairwise oracle runs by default.
pub const ORACLE_MAX_Q: u32 = 5;

pub fn classification_crosscheck(
    field: &FiniteField,
    opts: ClassifyOptions,
    run_oracle: bool,
    budget: u64,
) -> Result<CrosscheckReport> {
    let classes = frobenius_classify(field, opts)?;
    let orbits = frobenius_orbits(field);
    let mut orbit_of = BTreeMap::new();
    for (k, orbit) in orbits.iter().enumerate() {
        for &f in orbit {
            orbit_of.insert(f, k);
        }
    }
    let quads: Vec<Quadratic> = orbit_of.keys().copied().collect();
    let loops = quads.par_iter().map(|&f| RccLoop::build(field, f)).collect::<Result<Vec<_>>>()?;
    let index_of: BTreeMap<Quadratic, usize> = quads.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    let mut checked = 0;
    let mut failures = Vec::new();
    for orbit in &orbits {
        let rep = &loops[index_of[&orbit[0]]];
        for &g in orbit {
            let target = &loops[index_of[&g]];
            let i = (0..field.n()).find(|&i| orbit[0].frobenius(field, i) == g).expect("orbit member");
            checked += 1;
            if let Err(e) = build_iso(i, rep, target) {
                failures.push(format!("{} -> {}: {e}", orbit[0].describe(field), g.describe(field)));
            }
        }
    }

    let mut invariant_mismatches = Vec::new();
    let oracle = if run_oracle {
        let profiles: Vec<(bool, usize, usize, usize)> = loops
            .par_iter()
            .map(|lp| {
                let s = compute_subsets(lp.as_loop());
                let normals = enumerate_normal_subloops(lp.as_loop()).len();
                (lp.order() > 1 && normals == 2, s.commutant.len(), s.left_nucleus.len(), normals)
            })
            .collect();
        for orbit in &orbits {
            let first = profiles[index_of[&orbit[0]]];
            for g in &orbit[1..] {
                if profiles[index_of[g]] != first {
                    invariant_mismatches.push(format!("{} vs {}", orbit[0].describe(field), g.describe(field)));
                }
            }
        }

        let pairs: Vec<(usize, usize)> =
            (0..loops.len()).flat_map(|i| (i + 1..loops.len()).map(move |j| (i, j))).collect();
        let outcomes: Vec<IsoOutcome> =
            pairs.par_iter().map(|&(i, j)| iso_oracle(loops[i].as_loop(), loops[j].as_loop(), budget)).collect();
        let mut mismatches = Vec::new();
        let mut isomorphic_pairs = 0;
        let mut budget_exceeded = 0;
        for (&(i, j), outcome) in pairs.iter().zip(&outcomes) {
            let same = orbit_of[&quads[i]] == orbit_of[&quads[j]];
            let found = match outcome {
                IsoOutcome::Isomorphic(_) => true,
                IsoOutcome::NotIsomorphic => false,
                IsoOutcome::BudgetExceeded => {
                    budget_exceeded += 1;
                    continue;
                }
            };
            isomorphic_pairs += usize::from(found);
            if found != same {
                mismatches.push(format!(
                    "{} and {}: oracle says {}, orbits say {}",
                    quads[i].describe(field),
                    quads[j].describe(field),
                    if found { "isomorphic" } else { "not isomorphic" },
                    if same { "same class" } else { "different classes" },
                ));
            }
        }
        Some(OracleSummary {
            loops: loops.len(),
            pairs: pairs.len(),
            isomorphic_pairs,
            budget_exceeded,
            partition_matches: mismatches.is_empty() && budget_exceeded == 0,
            mismatches,
        })
    } else {
        None
    };

    Ok(CrosscheckReport {
        schema: SCHEMA_VERSION,
        classes,
        oracle,
        explicit_maps_checked: checked,
        explicit_map_failures: failures,
        invariant_mismatches,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    /// The loop of order `q^2 - 1`.
    Loop,
    /// The quotient of an `r = 0` loop by its center, order `(q^2 - 1) / 2`.
    Quotient,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub q: u32,
    pub order: usize,
    pub kind: RowKind,
    /// Defining quadratics (all of them, not orbits).
    pub polynomials: usize,
    pub non_isomorphic: usize,
    pub nonassociative: usize,
    pub simple: usize,
}

/// Rows of equal order combined across fields.
#[derive(Clone, Debug, Serialize)]
pub struct MergedRow {
    pub order: usize,
    pub q: Vec<u32>,
    pub polynomials: Vec<usize>,
    pub non_isomorphic: usize,
    pub simple: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountTable {
    pub schema: u32,
    pub simplicity_enumerated: bool,
    pub rows: Vec<CountRow>,
    pub merged: Vec<MergedRow>,
    pub notes: Vec<String>,
}

/// The table of loop counts for the given fields `(p, n)`. Quotient rows
/// count `r = 0` classes; quotients from different classes are taken to be
/// non-isomorphic.
pub fn count_table(fields: &[(u32, u32)], opts: ClassifyOptions) -> Result<CountTable> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for &(p, n) in fields {
        let field = FiniteField::new(p, n)?;
        let q = field.q();
        let report = frobenius_classify(&field, opts)?;
        let m = (q as usize).pow(2) - 1;
        let assoc = report.orbits.iter().filter(|o| o.associative).count();
        if assoc > 0 {
            notes.push(format!("q = {q}: {assoc} of the {} classes of order {m} are groups", report.class_count));
        }
        rows.push(CountRow {
            q,
            order: m,
            kind: RowKind::Loop,
            polynomials: report.quadratics,
            non_isomorphic: report.class_count,
            nonassociative: report.class_count - assoc,
            simple: report.simple_loops,
        });
        if p == 2 {
            continue;
        }
        let r_zero: Vec<&OrbitSummary> = report.orbits.iter().filter(|o| o.r_is_zero).collect();
        let raw: usize = r_zero.iter().map(|o| o.members.len()).sum();
        if raw != r_zero.len() {
            notes.push(format!("q = {q}: {raw} quadratics with r = 0 fall into {} classes", r_zero.len()));
        }
        rows.push(CountRow {
            q,
            order: m / 2,
            kind: RowKind::Quotient,
            polynomials: raw,
            non_isomorphic: r_zero.len(),
            nonassociative: r_zero.len(),
            simple: report.simple_quotients,
        });
    }
    rows.sort_by_key(|r| (r.order, r.q));
    let merged = merge_rows(&rows);
    Ok(CountTable { schema: SCHEMA_VERSION, simplicity_enumerated: opts.enumerate_simplicity, rows, merged, notes })
}

/// Combines consecutive rows of equal order; `rows` should be sorted by order.
pub fn merge_rows(rows: &[CountRow]) -> Vec<MergedRow> {
    let mut merged: Vec<MergedRow> = Vec::new();
    for row in rows {
        match merged.last_mut() {
            Some(last) if last.order == row.order => {
                last.q.push(row.q);
                last.polynomials.push(row.polynomials);
                last.non_isomorphic += row.non_isomorphic;
                last.simple += row.simple;
            }
            _ => merged.push(MergedRow {
                order: row.order,
                q: vec![row.q],
                polynomials: vec![row.polynomials],
                non_isomorphic: row.non_isomorphic,
                simple: row.simple,
            }),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Elem;

    fn quad(field: &FiniteField, r: u64, s: u64) -> Quadratic {
        field.quadratic(field.elem(r).unwrap(), field.elem(s).unwrap()).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(predicted_count(3, 1), 3);
        assert_eq!(predicted_count(2, 3), 10);
        assert_eq!(predicted_count(2, 4), 30);
        assert_eq!(predicted_count(2, 2), 3);
    }

    #[test]
    fn f8_orbit_shapes() {
        let f8 = FiniteField::new(2, 3).unwrap();
        let orbits = frobenius_orbits(&f8);
        assert_eq!(orbits.len(), 10);
        let singletons: Vec<_> = orbits.iter().filter(|o| o.len() == 1).collect();
        assert_eq!(singletons, [&vec![Quadratic::new(Elem::ONE, Elem::ONE)]]);
        assert!(orbits.iter().all(|o| o.len() == 1 || o.len() == 3));
    }

    #[test]
    fn oracle_identity_and_absence() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let a = RccLoop::build(&f3, quad(&f3, 1, 2)).unwrap();
        let b = RccLoop::build(&f3, quad(&f3, 2, 2)).unwrap();
        match iso_oracle(a.as_loop(), a.as_loop(), DEFAULT_SEARCH_BUDGET) {
            IsoOutcome::Isomorphic(map) => check_homomorphism(a.as_loop(), a.as_loop(), &map).unwrap(),
            other => panic!("{other:?}"),
        }
        assert_eq!(iso_oracle(a.as_loop(), b.as_loop(), DEFAULT_SEARCH_BUDGET), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn f4_frobenius_pair() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let f = f4.irreducible_quadratics()[0];
        let g = f.frobenius(&f4, 1);
        assert_ne!(f, g);
        let (a, b) = (RccLoop::build(&f4, f).unwrap(), RccLoop::build(&f4, g).unwrap());
        let map = build_iso(1, &a, &b).unwrap();
        assert_eq!(map.len(), 15);
        assert!(matches!(iso_oracle(a.as_loop(), b.as_loop(), DEFAULT_SEARCH_BUDGET), IsoOutcome::Isomorphic(_)));
        assert_eq!(build_iso(0, &a, &b), Err(Error::OrbitMismatch));
    }

    #[test]
    fn budget_is_reported() {
        let f5 = FiniteField::new(5, 1).unwrap();
        let a = RccLoop::build(&f5, quad(&f5, 1, 2)).unwrap();
        assert_eq!(iso_oracle(a.as_loop(), a.as_loop(), 0), IsoOutcome::BudgetExceeded);
    }

    #[test]
    fn count_table_small() {
        let t = count_table(&[(3, 1), (2, 2), (5, 1)], ClassifyOptions { enumerate_simplicity: true }).unwrap();
        let row = |order: usize| t.merged.iter().find(|r| r.order == order).unwrap();
        assert_eq!((row(8).non_isomorphic, row(8).simple), (3, 2));
        assert_eq!((row(15).non_isomorphic, row(15).simple), (3, 3));
        assert_eq!((row(12).polynomials.clone(), row(12).non_isomorphic, row(12).simple), (vec![2], 2, 2));
    }
}
