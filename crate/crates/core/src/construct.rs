//! The loop `(Q, o_f)` on `F_q^2 \ {[0,0]}` with `[a,b] o_f [c,d] = [a,b] M_(c,d)`.
//!
//! Elements are ordered lexicographically by the integer codes of `(a, b)`,
//! so the pair `[a, b]` has 0-based index `a q + b - 1` and `[0,1]` is
//! element 0 (printed as 1).

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField, Quadratic};
use crate::loops::{Loop, LoopTable, Perm};
use crate::matrix::{self, Mat2};

pub type Pair = (Elem, Elem);

#[derive(Clone, Debug)]
pub struct RccLoop {
    field: FiniteField,
    f: Quadratic,
    elements: Vec<Pair>,
    sections: Vec<Mat2>,
    lp: Loop,
}

impl RccLoop {
    /// Builds the full Cayley table, one column (one section matrix) at a time.
    pub fn build(field: &FiniteField, f: Quadratic) -> Result<Self> {
        let f = field.quadratic(f.r, f.s)?;
        let q = field.q() as usize;
        let m = q * q - 1;
        let elements: Vec<Pair> = (1..q * q)
            .map(|k| (Elem::from_code((k / q) as u32), Elem::from_code((k % q) as u32)))
            .collect();
        let sections = elements
            .iter()
            .map(|&(a, b)| matrix::m_ab(field, &f, a, b))
            .collect::<Result<Vec<_>>>()?;

        let mut cells = vec![0u32; m * m];
        for (col, mat) in sections.iter().enumerate() {
            for (row, &u) in elements.iter().enumerate() {
                let (x, y) = mat.row_apply(field, u);
                let idx = pair_index(q, (x, y)).ok_or(Error::ZeroPair)?;
                cells[row * m + col] = idx as u32;
            }
        }
        let labels = elements.iter().map(|&(a, b)| format!("[{a},{b}]")).collect();
        let table = LoopTable::new(m, 0, cells)?.with_labels(labels)?;
        let lp = Loop::new(table)?;
        Ok(RccLoop { field: field.clone(), f, elements, sections, lp })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn quadratic(&self) -> Quadratic {
        self.f
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn as_loop(&self) -> &Loop {
        &self.lp
    }

    pub fn table(&self) -> &LoopTable {
        self.lp.table()
    }

    pub fn elements(&self) -> &[Pair] {
        &self.elements
    }

    pub fn pair(&self, index: usize) -> Pair {
        self.elements[index]
    }

    /// 0-based index of a nonzero pair.
    pub fn index_of(&self, v: Pair) -> Result<usize> {
        let q = self.field.q();
        if v.0.code() >= q || v.1.code() >= q {
            return Err(Error::ElementOutOfRange { code: v.0.code().max(v.1.code()) as u64, q });
        }
        pair_index(q as usize, v).ok_or(Error::ZeroPair)
    }

    /// `u o_f v` computed from the matrix form.
    pub fn circ(&self, u: Pair, v: Pair) -> Result<Pair> {
        self.index_of(u)?;
        let j = self.index_of(v)?;
        Ok(self.sections[j].row_apply(&self.field, u))
    }

    /// `M_(a,b)` for every element, in element order.
    pub fn right_section(&self) -> &[Mat2] {
        &self.sections
    }

    pub fn section(&self, v: Pair) -> Result<Mat2> {
        Ok(self.sections[self.index_of(v)?])
    }

    /// The permutation of element indices induced by `w -> w M`.
    pub fn matrix_permutation(&self, mat: &Mat2) -> Result<Perm> {
        let q = self.field.q() as usize;
        let images = self
            .elements
            .iter()
            .map(|&w| pair_index(q, mat.row_apply(&self.field, w)).map(|i| i as u32).ok_or(Error::SingularMatrix))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }

    /// The right translation by `v`, obtained from its section matrix.
    pub fn section_permutation(&self, v: Pair) -> Result<Perm> {
        self.matrix_permutation(&self.section(v)?)
    }

    /// Reads back the matrix of a permutation that fixes the identity `[0,1]`
    /// and is induced by some matrix: the rows are the images of `[1,0]` and
    /// `[0,1]`. Returns `None` when the permutation is not linear.
    pub fn permutation_matrix(&self, g: &Perm) -> Option<Mat2> {
        let q = self.field.q() as usize;
        let e1 = pair_index(q, (Elem::ONE, Elem::ZERO))?;
        let e2 = pair_index(q, (Elem::ZERO, Elem::ONE))?;
        let (a, b) = self.elements[g.apply(e1)];
        let (c, d) = self.elements[g.apply(e2)];
        let mat = Mat2([[a, b], [c, d]]);
        match self.matrix_permutation(&mat) {
            Ok(p) if &p == g => Some(mat),
            _ => None,
        }
    }

    pub fn label(&self, index: usize) -> String {
        let (a, b) = self.elements[index];
        format!("[{a},{b}]")
    }
}

fn pair_index(q: usize, (a, b): Pair) -> Option<usize> {
    let k = a.code() as usize * q + b.code() as usize;
    k.checked_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> RccLoop {
        let f3 = FiniteField::new(3, 1).unwrap();
        RccLoop::build(&f3, Quadratic::new(Elem::ONE, f3.elem(2).unwrap())).unwrap()
    }

    fn pair(field: &FiniteField, a: u64, b: u64) -> Pair {
        (field.elem(a).unwrap(), field.elem(b).unwrap())
    }

    #[test]
    fn labels_follow_pair_order() {
        let lp = example();
        let labels: Vec<String> = (0..8).map(|i| lp.label(i)).collect();
        assert_eq!(labels, ["[0,1]", "[0,2]", "[1,0]", "[1,1]", "[1,2]", "[2,0]", "[2,1]", "[2,2]"]);
        assert_eq!(lp.as_loop().identity(), 0);
    }

    #[test]
    fn circ_examples() {
        let lp = example();
        let f = lp.field().clone();
        assert_eq!(lp.circ(pair(&f, 1, 0), pair(&f, 1, 0)).unwrap(), pair(&f, 1, 1));
        assert_eq!(lp.circ(pair(&f, 1, 2), pair(&f, 2, 2)).unwrap(), pair(&f, 0, 2));
        assert_eq!(lp.circ(pair(&f, 2, 0), pair(&f, 0, 2)).unwrap(), pair(&f, 1, 0));
        assert_eq!(lp.circ(pair(&f, 0, 0), pair(&f, 1, 0)), Err(Error::ZeroPair));
    }

    #[test]
    fn reducible_quadratic_is_rejected() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let err = RccLoop::build(&f3, Quadratic::new(Elem::ZERO, f3.elem(2).unwrap())).unwrap_err();
        assert_eq!(err, Error::Reducible { r: 0, s: 2, root: 1 });
    }

    #[test]
    fn section_permutation_matches_table() {
        let lp = example();
        let f = lp.field().clone();
        let p = lp.section_permutation(pair(&f, 2, 2)).unwrap();
        assert_eq!(p.to_string(), "(1,8,6,5,2,4,3,7)");
        assert!(lp.section_permutation(pair(&f, 0, 1)).unwrap().is_identity());
        for i in 0..lp.order() {
            assert_eq!(lp.section_permutation(lp.pair(i)).unwrap(), lp.as_loop().right_translation(i));
        }
    }

    #[test]
    fn permutation_matrix_inverts_matrix_permutation() {
        let lp = example();
        for mat in lp.right_section() {
            let g = lp.matrix_permutation(mat).unwrap();
            assert_eq!(lp.permutation_matrix(&g), Some(*mat));
        }
    }

    #[test]
    fn order_two_field_gives_cyclic_group() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let lp = RccLoop::build(&f2, Quadratic::new(Elem::ONE, Elem::ONE)).unwrap();
        assert_eq!(lp.order(), 3);
        assert!(lp.as_loop().is_associative() && lp.as_loop().is_commutative());
    }
}
