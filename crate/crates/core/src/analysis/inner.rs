//! Right inner mappings in matrix form, the `GL(2,q) = R_Q H` factorization,
//! and empirical probes of the structure of `Inn_rho`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::construct::{Pair, RccLoop};
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField, Quadratic};
use crate::loops::{perm_closure, PermGroup};
use crate::matrix::{self, Mat2};

/// `R_{u,v} = M_u M_v M_{u o v}^{-1}`.
pub fn inner_mapping(lp: &RccLoop, u: Pair, v: Pair) -> Result<Mat2> {
    let field = lp.field();
    let uv = lp.circ(u, v)?;
    let prod = lp.section(u)?.mul(field, &lp.section(v)?);
    Ok(prod.mul(field, &lp.section(uv)?.inv(field)?))
}

/// Closed forms for `R_{[a,b],[c,d]}`; `None` where the
/// formula's denominator vanishes.
pub fn inner_mapping_closed_form(field: &FiniteField, f: &Quadratic, u: Pair, v: Pair) -> Option<Mat2> {
    let ((a, b), (c, d)) = (u, v);
    let (r, s) = (f.r, f.s);
    let k = |n: i64| field.from_int(n);
    let mul = |xs: &[Elem]| xs.iter().fold(Elem::ONE, |acc, &x| field.mul(acc, x));
    let upper = |x: Elem, y: Elem| Some(Mat2([[x, y], [Elem::ZERO, Elem::ONE]]));
    match (a.is_zero(), c.is_zero()) {
        (true, true) => Some(Mat2::identity()),
        (false, true) => {
            // [[d^2, (d - 1)(b - r + bd) / a], [0, 1]]
            let top = field.mul(field.sub(d, Elem::ONE), field.add(field.sub(b, r), field.mul(b, d)));
            upper(field.square(d), field.div(top, a).ok()?)
        }
        (true, false) => {
            // [[b^2, (b - 1)(d - r + bd) / c], [0, 1]]
            let top = field.mul(field.sub(b, Elem::ONE), field.add(field.sub(d, r), field.mul(b, d)));
            upper(field.square(b), field.div(top, c).ok()?)
        }
        (false, false) => {
            let terms = [
                mul(&[a, a, s, f.eval(field, d)]),
                field.neg(mul(&[a, b, c, d, s])),
                field.neg(mul(&[a, b, c, d])),
                mul(&[a, b, c, r]),
                mul(&[a, c, d, r]),
                field.neg(mul(&[a, c, r, r])),
                mul(&[a, c, r, s]),
                mul(&[c, c, f.eval(field, b)]),
            ];
            let numer = terms.iter().fold(Elem::ZERO, |acc, &t| field.add(acc, t));
            let inner = field.add(field.sub(field.mul(b, c), field.mul(a, d)), field.mul(a, r));
            let denom = mul(&[a, c, inner]);
            let entry = field.mul(k(-1), field.div(numer, denom).ok()?);
            upper(s, entry)
        }
    }
}

/// Splits an invertible `A` as `B C` with `B` in the right section of the
/// loop built from `f` and `C = [[x, y], [0, 1]]`, using explicit formulas.
pub fn decompose(field: &FiniteField, f: &Quadratic, mat: &Mat2) -> Result<(Mat2, Mat2)> {
    let [[a, b], [c, d]] = mat.0;
    let det = mat.det(field);
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let (r, s) = (f.r, f.s);
    let m = |x: Elem, y: Elem| field.mul(x, y);
    if c.is_zero() {
        let b_mat = Mat2::scalar(d);
        let c_mat = Mat2([[field.div(a, d)?, field.div(b, d)?], [Elem::ZERO, Elem::ONE]]);
        return Ok((b_mat, c_mat));
    }
    let two = field.from_int(2);
    let sum = |xs: &[Elem]| xs.iter().fold(Elem::ZERO, |acc, &x| field.add(acc, x));
    let b12_num = sum(&[
        m(m(a, a), m(d, d)),
        field.neg(m(r, m(m(a, a), d))),
        m(s, m(a, a)),
        field.neg(m(two, m(m(a, b), m(c, d)))),
        m(r, m(m(a, b), c)),
        m(m(b, b), m(c, c)),
    ]);
    let b12_den = field.sub(m(b, m(c, c)), m(m(a, c), d));
    let b22_num = sum(&[m(a, s), field.neg(m(m(a, d), r)), m(m(b, c), r)]);
    let b_mat = Mat2([
        [field.div(m(a, s), det)?, field.div(b12_num, b12_den)?],
        [field.div(m(c, s), det)?, field.neg(field.div(b22_num, det)?)],
    ]);
    let c12_num = sum(&[m(a, m(d, d)), m(a, s), field.neg(m(m(b, c), d)), field.neg(m(m(a, d), r)), m(m(b, c), r)]);
    let c_mat = Mat2([[field.div(det, s)?, field.div(c12_num, m(c, s))?], [Elem::ZERO, Elem::ONE]]);
    Ok((b_mat, c_mat))
}

/// Is `mat` one of the right-section matrices for `f`?
pub fn in_section(field: &FiniteField, f: &Quadratic, mat: &Mat2) -> bool {
    (mat.is_scalar() && !mat.entry(0, 0).is_zero()) || mat.char_poly(field) == *f
}

/// The right multiplication group, closed from the right section.
pub fn right_multiplication_group(lp: &RccLoop, cap: usize) -> Result<PermGroup> {
    let sections = lp.as_loop().right_section();
    perm_closure(lp.order(), &sections, cap)
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupOrderReport {
    pub q: u32,
    pub loop_order: usize,
    pub mlt_order: usize,
    pub inn_order: usize,
    pub gl_order: u64,
    pub generators_used: usize,
    /// `|Mlt| = |Q| |Inn|`.
    pub orbit_stabilizer: bool,
    /// `|Mlt| = |GL(2,q)|`.
    pub mlt_is_gl: bool,
    pub decompositions_checked: usize,
    pub decomposition_failures: Vec<String>,
}

impl GroupOrderReport {
    pub fn holds(&self) -> bool {
        self.orbit_stabilizer && self.mlt_is_gl && self.decomposition_failures.is_empty()
    }
}

pub fn check_group_orders(lp: &RccLoop, cap: usize) -> Result<GroupOrderReport> {
    let field = lp.field();
    let f = lp.quadratic();
    let group = right_multiplication_group(lp, cap)?;
    let inn_order = group.stabilizer(lp.as_loop().identity()).len();
    let q = field.q();
    let gl_order = matrix::gl2_order(q as u64);

    let mut failures = Vec::new();
    let gl = matrix::general_linear_group(field);
    for a in &gl {
        let ok = match decompose(field, &f, a) {
            Ok((b, c)) => b.mul(field, &c) == *a && in_section(field, &f, &b) && c.is_affine_form(),
            Err(_) => false,
        };
        if !ok {
            failures.push(a.to_string());
        }
    }
    Ok(GroupOrderReport {
        q,
        loop_order: lp.order(),
        mlt_order: group.order(),
        inn_order,
        gl_order,
        generators_used: group.generators().len(),
        orbit_stabilizer: group.order() == lp.order() * inn_order,
        mlt_is_gl: group.order() as u64 == gl_order,
        decompositions_checked: gl.len(),
        decomposition_failures: failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Fiber {
    pub x: u32,
    pub ys: Vec<u32>,
    pub full: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationCheck {
    pub section_size: usize,
    pub h_size: usize,
    pub gl_order: u64,
    pub sizes_multiply: bool,
    pub intersection_is_identity: bool,
    pub products_cover_gl: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub q: u32,
    pub mlt_order: usize,
    pub inn_order: usize,
    pub mlt_generators: Vec<String>,
    /// Inner mappings whose permutation is not induced by a matrix.
    pub non_linear: usize,
    /// Every inner mapping matrix is `[[x, y], [0, 1]]`.
    pub all_affine: bool,
    pub inn_matrices: Vec<String>,
    pub observed_x: Vec<u32>,
    /// `{a^2 s^m : a != 0, m in Z}`.
    pub conjectured_x: Vec<u32>,
    pub x_sets_equal: bool,
    pub fibers: Vec<Fiber>,
    pub factorization: FactorizationCheck,
}

/// The set `{a^2 s^m}` of admissible top-left inner-mapping entries.
pub fn conjectured_x_set(field: &FiniteField, s: Elem) -> BTreeSet<Elem> {
    let squares: BTreeSet<Elem> = field.nonzero_elements().map(|a| field.square(a)).collect();
    let powers: Vec<Elem> = (0..field.q()).map(|m| field.pow(s, m as u64)).collect();
    squares.iter().flat_map(|&sq| powers.iter().map(move |&pw| (sq, pw))).map(|(sq, pw)| field.mul(sq, pw)).collect()
}

pub fn check_conjecture(lp: &RccLoop, cap: usize) -> Result<ConjectureReport> {
    let field = lp.field();
    let f = lp.quadratic();
    let q = field.q();
    let group = right_multiplication_group(lp, cap)?;
    let inn = group.stabilizer(lp.as_loop().identity());

    let mut matrices = BTreeSet::new();
    let mut non_linear = 0;
    for g in &inn {
        match lp.permutation_matrix(g) {
            Some(mat) => {
                matrices.insert(mat);
            }
            None => non_linear += 1,
        }
    }
    let all_affine = non_linear == 0 && matrices.iter().all(Mat2::is_affine_form);
    let mut fibers: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for mat in matrices.iter().filter(|m| m.is_affine_form()) {
        fibers.entry(mat.entry(0, 0).code()).or_default().insert(mat.entry(0, 1).code());
    }
    let observed_x: Vec<u32> = fibers.keys().copied().collect();
    let conjectured_x: Vec<u32> = conjectured_x_set(field, f.s).into_iter().map(Elem::code).collect();

    let section: HashSet<Mat2> = lp.right_section().iter().copied().collect();
    let h: Vec<Mat2> = field
        .nonzero_elements()
        .flat_map(|x| field.elements().map(move |y| Mat2([[x, y], [Elem::ZERO, Elem::ONE]])))
        .collect();
    let intersection: Vec<&Mat2> = h.iter().filter(|m| section.contains(m)).collect();
    let mut products = HashSet::new();
    for r in lp.right_section() {
        for hm in &h {
            products.insert(r.mul(field, hm));
        }
    }
    let gl_order = matrix::gl2_order(q as u64);
    let factorization = FactorizationCheck {
        section_size: section.len(),
        h_size: h.len(),
        gl_order,
        sizes_multiply: (section.len() * h.len()) as u64 == gl_order,
        intersection_is_identity: intersection == [&Mat2::identity()],
        products_cover_gl: products.len() as u64 == gl_order,
    };

    Ok(ConjectureReport {
        q,
        mlt_order: group.order(),
        inn_order: inn.len(),
        mlt_generators: group.generators().iter().map(ToString::to_string).collect(),
        non_linear,
        all_affine,
        inn_matrices: matrices.iter().map(ToString::to_string).collect(),
        x_sets_equal: observed_x == conjectured_x,
        observed_x,
        conjectured_x,
        fibers: fibers
            .into_iter()
            .map(|(x, ys)| Fiber { x, full: ys.len() == q as usize, ys: ys.into_iter().collect() })
            .collect(),
        factorization,
    })
}
