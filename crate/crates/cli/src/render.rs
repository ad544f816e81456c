use std::fmt::Write as _;

use rccloop::analysis::{ElementSet, StructureReport};
use rccloop::iso::{CountTable, CrosscheckReport, IsoClassReport, RowKind};
use rccloop::{FiniteField, RccLoop};

use crate::{Failure, GroupReport};

type Csv = csv::Writer<Vec<u8>>;

fn csv_writer() -> Csv {
    csv::WriterBuilder::new().flexible(true).from_writer(Vec::new())
}

fn finish(w: Csv) -> Result<String, Failure> {
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::usage(e.to_string()))
}

/// `c0 + c1 t + ... + t^n` written highest degree first.
pub fn modulus_poly(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| {
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    terms.join("+")
}

pub fn table_csv(lp: &RccLoop) -> Result<String, Failure> {
    let mut w = csv_writer();
    let labels: Vec<String> = (0..lp.order()).map(|i| lp.label(i)).collect();
    w.write_record(std::iter::once("*".to_string()).chain(labels.iter().cloned()))?;
    for (x, label) in labels.iter().enumerate() {
        let row = lp.table().row(x).iter().map(|&v| (v + 1).to_string());
        w.write_record(std::iter::once(label.clone()).chain(row))?;
    }
    finish(w)
}

fn set_text(set: &ElementSet) -> String {
    let idx: Vec<String> = set.indices.iter().map(ToString::to_string).collect();
    match &set.labels {
        Some(labels) => format!("{{{}}} = {{{}}}", idx.join(","), labels.join(",")),
        None => format!("{{{}}}", idx.join(",")),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn structure_text(r: &StructureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "loop of order {} with identity {}", r.order, r.identity);
    if let Some(c) = &r.construction {
        let _ = writeln!(out, "built over F_{} (p = {}, n = {}) from f = {} (r = {}, s = {})", c.q, c.p, c.n, c.polynomial, c.r, c.s);
    }
    let _ = writeln!(out, "loop axioms        {}", yes(r.loop_axioms.is_loop()));
    let _ = writeln!(out, "rcc                {}", yes(r.rcc));
    let _ = writeln!(out, "rip                {}", yes(r.rip));
    let _ = writeln!(out, "associative        {}", yes(r.associative));
    let _ = writeln!(out, "commutative        {}", yes(r.commutative));
    let _ = writeln!(out, "simple             {}", yes(r.simple));
    for (name, set) in [
        ("commutant", &r.commutant),
        ("left nucleus", &r.left_nucleus),
        ("middle nucleus", &r.middle_nucleus),
        ("right nucleus", &r.right_nucleus),
        ("nucleus", &r.nucleus),
        ("center", &r.center),
    ] {
        let _ = writeln!(out, "{name:<18} |{}| {}", set.len(), set_text(set));
    }
    let _ = writeln!(out, "normal subloops    {}", r.normal_subloops.len());
    for n in &r.normal_subloops {
        let _ = writeln!(out, "  |{}| {}", n.len(), set_text(n));
    }
    let _ = writeln!(out, "checks");
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        match &c.witness {
            Some(w) => {
                let _ = writeln!(out, "  {status} {}: {w}", c.name);
            }
            None => {
                let _ = writeln!(out, "  {status} {}", c.name);
            }
        }
    }
    out
}

pub fn checks_csv(reports: &[StructureReport]) -> Result<String, Failure> {
    let mut w = csv_writer();
    w.write_record(["q", "r", "s", "check", "passed", "witness"])?;
    for r in reports {
        let (q, rr, s) = match &r.construction {
            Some(c) => (c.q.to_string(), c.r.to_string(), c.s.to_string()),
            None => Default::default(),
        };
        for c in &r.checks {
            w.write_record([
                q.as_str(),
                rr.as_str(),
                s.as_str(),
                c.name.as_str(),
                if c.passed { "true" } else { "false" },
                c.witness.as_deref().unwrap_or(""),
            ])?;
        }
    }
    finish(w)
}

pub fn classify_text(field: &FiniteField, report: &CrosscheckReport) -> String {
    let c = &report.classes;
    let mut out = String::new();
    let _ = writeln!(out, "F_{} (p = {}, n = {}), modulus {}", c.q, c.p, c.n, modulus_poly(field.modulus()));
    let _ = writeln!(out, "irreducible quadratics  {} (expected {})", c.quadratics, c.expected_quadratics);
    let _ = writeln!(out, "isomorphism classes     {} (formula {}){}", c.class_count, c.formula_count, if c.counts_match { "" } else { "  MISMATCH" });
    let _ = writeln!(
        out,
        "simple loops            {} ({})",
        c.simple_loops,
        if c.simplicity_enumerated { "by normal-subloop enumeration" } else { "predicted from r" }
    );
    let _ = writeln!(out, "classes with r = 0      {} ({} with simple central quotient)", c.r_zero_orbits, c.simple_quotients);
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>5}  {:<16} {:>4} {:>4} {:>6}  {:>7}  members", "class", "representative", "r", "s", "simple", "quotient");
    for (k, o) in c.orbits.iter().enumerate() {
        let quotient = match o.quotient_simple {
            Some(true) => "simple",
            Some(false) => "not",
            None => "-",
        };
        let members: Vec<String> = o.members.iter().map(|m| format!("({},{})", m.r, m.s)).collect();
        let _ = writeln!(
            out,
            "{:>5}  {:<16} {:>4} {:>4} {:>6}  {:>7}  {}",
            k + 1,
            o.polynomial,
            o.representative.r,
            o.representative.s,
            yes(o.simple),
            quotient,
            members.join(" ")
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "explicit Frobenius maps checked: {} ({} failures)",
        report.explicit_maps_checked,
        report.explicit_map_failures.len()
    );
    for f in &report.explicit_map_failures {
        let _ = writeln!(out, "  {f}");
    }
    if let Some(o) = &report.oracle {
        let _ = writeln!(
            out,
            "isomorphism search: {} loops, {} pairs, {} isomorphic, {} over budget; partition {}",
            o.loops,
            o.pairs,
            o.isomorphic_pairs,
            o.budget_exceeded,
            if o.partition_matches { "matches the orbits" } else { "DIFFERS from the orbits" }
        );
        for m in &o.mismatches {
            let _ = writeln!(out, "  {m}");
        }
        for m in &report.invariant_mismatches {
            let _ = writeln!(out, "  invariants differ within a class: {m}");
        }
    }
    out
}

pub fn orbits_csv(c: &IsoClassReport) -> Result<String, Failure> {
    let mut w = csv_writer();
    w.write_record(["q", "class", "r", "s", "polynomial", "size", "r_is_zero", "associative", "simple", "quotient_simple"])?;
    for (k, o) in c.orbits.iter().enumerate() {
        w.write_record([
            c.q.to_string(),
            (k + 1).to_string(),
            o.representative.r.to_string(),
            o.representative.s.to_string(),
            o.polynomial.clone(),
            o.members.len().to_string(),
            o.r_is_zero.to_string(),
            o.associative.to_string(),
            o.simple.to_string(),
            o.quotient_simple.map(|b| b.to_string()).unwrap_or_default(),
        ])?;
    }
    finish(w)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn count_table_text(t: &CountTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>6} | {:>6} | {:>11} | {:>14} | {:>6}", "q", "order", "polynomials", "non-isomorphic", "simple");
    let _ = writeln!(out, "{}", "-".repeat(57));
    for r in &t.merged {
        let _ = writeln!(
            out,
            "{:>6} | {:>6} | {:>11} | {:>14} | {:>6}",
            join(&r.q),
            r.order,
            join(&r.polynomials),
            r.non_isomorphic,
            r.simple
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>4} {:>6} {:<9} {:>11} {:>14} {:>14} {:>6}", "q", "order", "kind", "polynomials", "non-isomorphic", "nonassociative", "simple");
    for r in &t.rows {
        let kind = match r.kind {
            RowKind::Loop => "loop",
            RowKind::Quotient => "quotient",
        };
        let _ = writeln!(
            out,
            "{:>4} {:>6} {:<9} {:>11} {:>14} {:>14} {:>6}",
            r.q, r.order, kind, r.polynomials, r.non_isomorphic, r.nonassociative, r.simple
        );
    }
    let _ = writeln!(
        out,
        "\nsimplicity {}",
        if t.simplicity_enumerated { "by normal-subloop enumeration" } else { "of full loops predicted from r for larger q" }
    );
    for n in &t.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn count_table_csv(t: &CountTable) -> Result<String, Failure> {
    let mut w = csv_writer();
    w.write_record(["q", "order", "kind", "polynomials", "non_isomorphic", "nonassociative", "simple"])?;
    for r in &t.rows {
        let kind = match r.kind {
            RowKind::Loop => "loop",
            RowKind::Quotient => "quotient",
        };
        w.write_record([
            r.q.to_string(),
            r.order.to_string(),
            kind.to_string(),
            r.polynomials.to_string(),
            r.non_isomorphic.to_string(),
            r.nonassociative.to_string(),
            r.simple.to_string(),
        ])?;
    }
    finish(w)
}

pub fn group_text(g: &GroupReport) -> String {
    let c = &g.factorization_counts;
    let i = &g.inner_mappings;
    let f = &i.factorization;
    let mut out = String::new();
    let _ = writeln!(out, "F_{} (p = {}, n = {}), f = {} (r = {}, s = {})", c.q, g.p, g.n, g.polynomial, g.r, g.s);
    let _ = writeln!(out, "|Q| = {}, |Mlt| = {}, |Inn| = {}, |GL(2,{})| = {}", c.loop_order, c.mlt_order, c.inn_order, c.q, c.gl_order);
    let _ = writeln!(out, "|Mlt| = |Q||Inn|: {}", yes(c.orbit_stabilizer));
    let _ = writeln!(out, "|Mlt| = |GL(2,q)|: {}", yes(c.mlt_is_gl));
    let _ = writeln!(
        out,
        "A = BC decompositions: {} checked, {} failed",
        c.decompositions_checked,
        c.decomposition_failures.len()
    );
    let _ = writeln!(out, "generators used: {}", i.mlt_generators.join(" "));
    let _ = writeln!(out, "inner mappings of the form [[x,y],[0,1]]: {} ({} not induced by a matrix)", yes(i.all_affine), i.non_linear);
    let _ = writeln!(out, "observed x:        {{{}}}", join(&i.observed_x));
    let _ = writeln!(out, "{{a^2 s^m}}:         {{{}}}", join(&i.conjectured_x));
    let _ = writeln!(out, "sets equal: {}", yes(i.x_sets_equal));
    for fib in &i.fibers {
        let _ = writeln!(out, "  x = {:>3}: {} values of y{}", fib.x, fib.ys.len(), if fib.full { " (all)" } else { "" });
    }
    let _ = writeln!(
        out,
        "section x affine group: {} x {} = {} (|GL| = {}), intersection trivial {}, products cover GL {}",
        f.section_size,
        f.h_size,
        f.section_size * f.h_size,
        f.gl_order,
        yes(f.intersection_is_identity),
        yes(f.products_cover_gl)
    );
    out
}

pub fn fibers_csv(reports: &[GroupReport]) -> Result<String, Failure> {
    let mut w = csv_writer();
    w.write_record(["q", "r", "s", "x", "y_count", "full", "ys"])?;
    for g in reports {
        for fib in &g.inner_mappings.fibers {
            w.write_record([
                g.factorization_counts.q.to_string(),
                g.r.to_string(),
                g.s.to_string(),
                fib.x.to_string(),
                fib.ys.len().to_string(),
                fib.full.to_string(),
                join(&fib.ys),
            ])?;
        }
    }
    finish(w)
}
