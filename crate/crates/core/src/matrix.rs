//! 2x2 matrices over a finite field and the `M_(a,b)` family realizing the
//! right translations of the constructed loops.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField, Quadratic};

/// A row-major 2x2 matrix; `Mat2([[e11, e12], [e21, e22]])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2(pub [[Elem; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2::scalar(Elem::ONE)
    }

    pub fn scalar(b: Elem) -> Self {
        Mat2([[b, Elem::ZERO], [Elem::ZERO, b]])
    }

    pub fn from_codes(field: &FiniteField, rows: [[u64; 2]; 2]) -> Result<Self> {
        let mut out = [[Elem::ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = field.elem(rows[i][j])?;
            }
        }
        Ok(Mat2(out))
    }

    pub fn entry(&self, i: usize, j: usize) -> Elem {
        self.0[i][j]
    }

    pub fn is_scalar(&self) -> bool {
        let [[a, b], [c, d]] = self.0;
        a == d && b.is_zero() && c.is_zero()
    }

    pub fn det(&self, field: &FiniteField) -> Elem {
        let [[a, b], [c, d]] = self.0;
        field.sub(field.mul(a, d), field.mul(b, c))
    }

    pub fn trace(&self, field: &FiniteField) -> Elem {
        field.add(self.0[0][0], self.0[1][1])
    }

    /// `x^2 - Tr(A) x + Det(A)`.
    pub fn char_poly(&self, field: &FiniteField) -> Quadratic {
        Quadratic::new(self.trace(field), self.det(field))
    }

    pub fn mul(&self, field: &FiniteField, other: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &other.0;
        let mut out = [[Elem::ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = field.add(field.mul(a[i][0], b[0][j]), field.mul(a[i][1], b[1][j]));
            }
        }
        Mat2(out)
    }

    pub fn scale(&self, field: &FiniteField, k: Elem) -> Mat2 {
        Mat2(self.0.map(|row| row.map(|x| field.mul(k, x))))
    }

    pub fn inv(&self, field: &FiniteField) -> Result<Mat2> {
        let det = self.det(field);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let k = field.inv(det)?;
        let [[a, b], [c, d]] = self.0;
        Ok(Mat2([[d, field.neg(b)], [field.neg(c), a]]).scale(field, k))
    }

    /// Row vector times matrix: `[x, y] A`.
    pub fn row_apply(&self, field: &FiniteField, v: (Elem, Elem)) -> (Elem, Elem) {
        let [[a, b], [c, d]] = self.0;
        let (x, y) = v;
        (
            field.add(field.mul(x, a), field.mul(y, c)),
            field.add(field.mul(x, b), field.mul(y, d)),
        )
    }

    /// Upper triangular with bottom row `(0, 1)`.
    pub fn is_affine_form(&self) -> bool {
        self.0[1][0].is_zero() && self.0[1][1] == Elem::ONE
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// `M_(a,b)`: the scalar matrix `bI` when `a = 0`, otherwise
/// `[[r - b, f(b) / (-a)], [a, b]]`, which has trace `r` and determinant `s`.
pub fn m_ab(field: &FiniteField, f: &Quadratic, a: Elem, b: Elem) -> Result<Mat2> {
    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::ZeroPair);
        }
        return Ok(Mat2::scalar(b));
    }
    let upper = field.div(f.eval(field, b), field.neg(a))?;
    Ok(Mat2([[field.sub(f.r, b), upper], [a, b]]))
}

/// The `GL(2,q)` conjugacy class of matrices whose characteristic polynomial
/// is the irreducible `f`, in `(a, b)` order.
pub fn conjugacy_class_of_f(field: &FiniteField, f: &Quadratic) -> Result<Vec<Mat2>> {
    if let Some(root) = f.find_root(field) {
        return Err(Error::Reducible { r: f.r.code(), s: f.s.code(), root: root.code() });
    }
    let mut class = Vec::with_capacity((field.q() as usize).pow(2));
    for a in field.nonzero_elements() {
        for b in field.elements() {
            class.push(m_ab(field, f, a, b)?);
        }
    }
    Ok(class)
}

/// Every invertible 2x2 matrix, in entry-code order. Intended for small `q`.
pub fn general_linear_group(field: &FiniteField) -> Vec<Mat2> {
    let els: Vec<Elem> = field.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    let m = Mat2([[a, b], [c, d]]);
                    if !m.det(field).is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

pub fn gl2_order(q: u64) -> u64 {
    (q * q - 1) * (q * q - q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn f3() -> FiniteField {
        FiniteField::new(3, 1).unwrap()
    }

    fn m(field: &FiniteField, rows: [[u64; 2]; 2]) -> Mat2 {
        Mat2::from_codes(field, rows).unwrap()
    }

    #[test]
    fn det_trace_of_example_matrix() {
        let f = f3();
        let a = m(&f, [[2, 1], [2, 2]]);
        assert_eq!(a.det(&f), f.elem(2).unwrap());
        assert_eq!(a.trace(&f), Elem::ONE);
        assert_eq!(Mat2::identity().inv(&f).unwrap(), Mat2::identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let f = f3();
        assert_eq!(m(&f, [[1, 2], [2, 1]]).inv(&f), Err(Error::SingularMatrix));
    }

    #[test]
    fn m_ab_examples() {
        let f = f3();
        let quad = f.quadratic(Elem::ONE, f.elem(2).unwrap()).unwrap();
        let e = |k| f.elem(k).unwrap();
        assert_eq!(m_ab(&f, &quad, e(1), e(0)).unwrap(), m(&f, [[1, 1], [1, 0]]));
        assert_eq!(m_ab(&f, &quad, e(2), e(2)).unwrap(), m(&f, [[2, 1], [2, 2]]));
        assert_eq!(m_ab(&f, &quad, e(0), e(1)).unwrap(), Mat2::identity());
        assert_eq!(m_ab(&f, &quad, e(0), e(0)), Err(Error::ZeroPair));
    }

    #[test]
    fn row_apply_examples() {
        let f = f3();
        let a = m(&f, [[2, 1], [2, 2]]);
        let e = |k| f.elem(k).unwrap();
        assert_eq!(Mat2::identity().row_apply(&f, (e(0), e(1))), (e(0), e(1)));
        assert_eq!(a.row_apply(&f, (e(1), e(2))), (e(0), e(2)));
        assert_eq!(a.row_apply(&f, (e(0), e(1))), (e(2), e(2)));
    }

    #[test]
    fn example_conjugacy_class() {
        let f = f3();
        let quad = f.quadratic(Elem::ONE, f.elem(2).unwrap()).unwrap();
        let class: BTreeSet<Mat2> = conjugacy_class_of_f(&f, &quad).unwrap().into_iter().collect();
        let expected: BTreeSet<Mat2> = [
            [[1, 1], [1, 0]],
            [[0, 1], [1, 1]],
            [[2, 2], [1, 2]],
            [[1, 2], [2, 0]],
            [[0, 2], [2, 1]],
            [[2, 1], [2, 2]],
        ]
        .into_iter()
        .map(|rows| m(&f, rows))
        .collect();
        assert_eq!(class, expected);
    }

    #[test]
    fn class_of_reducible_is_rejected() {
        let f = f3();
        let g = Quadratic::new(Elem::ZERO, f.elem(2).unwrap());
        assert!(matches!(conjugacy_class_of_f(&f, &g), Err(Error::Reducible { .. })));
    }

    #[test]
    fn class_matches_brute_force_scan() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let field = FiniteField::new(p, n).unwrap();
            let gl = general_linear_group(&field);
            let q = field.q() as u64;
            assert_eq!(gl.len() as u64, gl2_order(q));
            for quad in field.irreducible_quadratics() {
                let scanned: BTreeSet<Mat2> =
                    gl.iter().copied().filter(|a| a.char_poly(&field) == quad).collect();
                let class: BTreeSet<Mat2> =
                    conjugacy_class_of_f(&field, &quad).unwrap().into_iter().collect();
                assert_eq!(class.len() as u64, q * q - q);
                assert_eq!(scanned, class, "q = {q}, f = {quad:?}");
            }
        }
    }

    #[test]
    fn inverse_closed_forms() {
        for (p, n) in [(3, 1), (2, 2), (5, 1), (3, 2)] {
            let fld = FiniteField::new(p, n).unwrap();
            for quad in fld.irreducible_quadratics() {
                let s_inv = fld.inv(quad.s).unwrap();
                for a in fld.elements() {
                    for b in fld.elements() {
                        if a.is_zero() && b.is_zero() {
                            continue;
                        }
                        let mat = m_ab(&fld, &quad, a, b).unwrap();
                        let inv = mat.inv(&fld).unwrap();
                        if a.is_zero() {
                            assert_eq!(inv, Mat2::scalar(fld.inv(b).unwrap()));
                            continue;
                        }
                        assert_eq!(mat.det(&fld), quad.s);
                        assert_eq!(mat.trace(&fld), quad.r);
                        let upper = fld.div(quad.eval(&fld, b), a).unwrap();
                        let expected = Mat2([[b, upper], [fld.neg(a), fld.sub(quad.r, b)]]);
                        assert_eq!(inv, expected.scale(&fld, s_inv));
                    }
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let f = f3();
        assert_eq!(m(&f, [[2, 1], [2, 2]]).to_string(), "[[2,1],[2,2]]");
    }
}
