//! Finite loops given by Cayley tables.
//!
//! Elements are indexed `0..order` in the API; the text format and all
//! printed permutations use 1-based indices.

mod perm;
mod subloop;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub use perm::{perm_closure, Perm, PermGroup, DEFAULT_CLOSURE_CAP};
pub use subloop::{
    enumerate_normal_subloops, is_normal, normal_closure, quotient_loop, subloop_generated,
    Quotient, Subloop,
};

/// A square operation table with a designated identity candidate. Only the
/// shape is validated here; see [`verify_loop`] for the loop axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopTable {
    order: usize,
    identity: usize,
    cells: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl LoopTable {
    pub fn new(order: usize, identity: usize, cells: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Malformed("order must be positive".into()));
        }
        if cells.len() != order * order {
            return Err(Error::Malformed(format!(
                "expected {} cells for order {order}, found {}",
                order * order,
                cells.len()
            )));
        }
        if identity >= order {
            return Err(Error::Malformed(format!("identity {} out of range", identity + 1)));
        }
        if let Some(&bad) = cells.iter().find(|&&c| c as usize >= order) {
            return Err(Error::Malformed(format!("entry {} out of range", bad + 1)));
        }
        Ok(LoopTable { order, identity, cells, labels: None })
    }

    /// From 0-based rows.
    pub fn from_rows(identity: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Malformed("table is not square".into()));
        }
        let cells = rows.iter().flatten().map(|&x| x as u32).collect();
        LoopTable::new(order, identity, cells)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Malformed("label count differs from order".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.cells[x * self.order..(x + 1) * self.order]
    }

    /// Replaces one cell (0-based) in place, keeping the shape valid.
    pub fn set(&mut self, x: usize, y: usize, value: usize) -> Result<()> {
        if x >= self.order || y >= self.order || value >= self.order {
            return Err(Error::IndexOutOfRange { index: x.max(y).max(value), order: self.order });
        }
        self.cells[x * self.order + y] = value as u32;
        Ok(())
    }

    /// Cayley-table text form: a header line `order m identity e` followed by
    /// `m` rows of space-separated 1-based indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "order {} identity {}", self.order, self.identity + 1).unwrap();
        for x in 0..self.order {
            let row: Vec<String> = self.row(x).iter().map(|c| (c + 1).to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Malformed("empty input".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (order, identity) = match words.as_slice() {
            ["order", m, "identity", e] => {
                let m = m.parse::<usize>().map_err(|_| Error::Malformed(format!("bad order {m:?}")))?;
                let e = e
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad identity {e:?}")))?;
                (m, e)
            }
            _ => return Err(Error::Malformed(format!("bad header {header:?}"))),
        };
        if identity == 0 {
            return Err(Error::Malformed("identity index is 1-based".into()));
        }
        let mut cells = Vec::with_capacity(order * order);
        let mut rows = 0;
        for line in lines {
            rows += 1;
            let before = cells.len();
            for word in line.split_whitespace() {
                let v = word
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad entry {word:?}")))?;
                if v == 0 || v > order {
                    return Err(Error::Malformed(format!("entry {v} out of range")));
                }
                cells.push((v - 1) as u32);
            }
            if cells.len() - before != order {
                return Err(Error::Malformed(format!("row {rows} has {} entries", cells.len() - before)));
            }
        }
        if rows != order {
            return Err(Error::Malformed(format!("expected {order} rows, found {rows}")));
        }
        LoopTable::new(order, identity - 1, cells)
    }
}

/// Outcome of the two independent loop tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LoopVerdict {
    pub latin: bool,
    pub identity: bool,
    /// Every `R_x` is a permutation and `R_x R_y^{-1}` is fixed-point free
    /// for all `x != y`.
    pub section_fixed_point_free: bool,
}

impl LoopVerdict {
    pub fn is_loop(&self) -> bool {
        self.latin && self.identity
    }

    pub fn routes_agree(&self) -> bool {
        self.is_loop() == (self.identity && self.section_fixed_point_free)
    }
}

fn is_permutation(m: usize, vals: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; m];
    let mut count = 0;
    for v in vals {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
        count += 1;
    }
    count == m
}

pub fn verify_loop(table: &LoopTable) -> LoopVerdict {
    let m = table.order();
    let e = table.identity();
    let rows_ok = (0..m).all(|x| is_permutation(m, (0..m).map(|y| table.mul(x, y))));
    let cols_ok = (0..m).all(|y| is_permutation(m, (0..m).map(|x| table.mul(x, y))));
    let identity = (0..m).all(|x| table.mul(e, x) == x && table.mul(x, e) == x);

    // z R_x R_y^{-1} = z  <=>  z x = z y
    let section_fixed_point_free = cols_ok && {
        let rs: Vec<Perm> = (0..m)
            .map(|x| Perm::from_images_unchecked((0..m).map(|z| table.mul(z, x) as u32).collect()))
            .collect();
        let inv: Vec<Perm> = rs.iter().map(Perm::inverse).collect();
        (0..m).all(|x| (0..m).filter(|&y| y != x).all(|y| (0..m).all(|z| inv[y].apply(rs[x].apply(z)) != z)))
    };

    LoopVerdict { latin: rows_ok && cols_ok, identity, section_fixed_point_free }
}

/// A verified loop with precomputed division tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loop {
    table: LoopTable,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
}

impl Loop {
    pub fn new(table: LoopTable) -> Result<Self> {
        let verdict = verify_loop(&table);
        if !verdict.is_loop() {
            let why = if !verdict.latin { "not a Latin square" } else { "identity fails" };
            return Err(Error::Malformed(format!("not a loop: {why}")));
        }
        Ok(Self::from_verified(table))
    }

    /// Skips verification; the table must be a loop.
    pub(crate) fn from_verified(table: LoopTable) -> Self {
        let m = table.order();
        let mut ldiv = vec![0u32; m * m];
        let mut rdiv = vec![0u32; m * m];
        for x in 0..m {
            for y in 0..m {
                let z = table.mul(x, y);
                // x \ z = y and z / y = x
                ldiv[x * m + z] = y as u32;
                rdiv[z * m + y] = x as u32;
            }
        }
        Loop { table, ldiv, rdiv }
    }

    pub fn table(&self) -> &LoopTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    pub fn identity(&self) -> usize {
        self.table.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.mul(x, y)
    }

    /// `x \ y`, the unique `z` with `x z = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.order() + y] as usize
    }

    /// `y / x`, the unique `z` with `z x = y`.
    #[inline]
    pub fn rdiv(&self, y: usize, x: usize) -> usize {
        self.rdiv[y * self.order() + x] as usize
    }

    pub fn check_index(&self, x: usize) -> Result<usize> {
        if x < self.order() {
            Ok(x)
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.order() })
        }
    }

    /// `R_x: y -> y x`.
    pub fn right_translation(&self, x: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order()).map(|y| self.mul(y, x) as u32).collect())
    }

    /// `L_x: y -> x y`.
    pub fn left_translation(&self, x: usize) -> Perm {
        Perm::from_images_unchecked(self.table.row(x).to_vec())
    }

    pub fn right_section(&self) -> Vec<Perm> {
        (0..self.order()).map(|x| self.right_translation(x)).collect()
    }

    pub fn is_associative(&self) -> bool {
        let m = self.order();
        (0..m).all(|x| (0..m).all(|y| (0..m).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.order();
        (0..m).all(|x| (x + 1..m).all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

/// Addition table of `Z_m`, identity 0.
pub fn cyclic_group(m: usize) -> LoopTable {
    let cells = (0..m).flat_map(|x| (0..m).map(move |y| ((x + y) % m) as u32)).collect();
    LoopTable::new(m, 0, cells).expect("valid shape")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_are_loops() {
        for m in 1..8 {
            let v = verify_loop(&cyclic_group(m));
            assert!(v.is_loop() && v.routes_agree());
        }
    }

    #[test]
    fn text_round_trip() {
        let t = cyclic_group(4);
        let text = t.to_text();
        assert!(text.starts_with("order 4 identity 1\n1 2 3 4\n"));
        assert_eq!(LoopTable::parse_text(&text).unwrap(), t);
    }

    #[test]
    fn malformed_inputs() {
        assert!(LoopTable::parse_text("").is_err());
        assert!(LoopTable::parse_text("order 2 identity 1\n1 2\n2").is_err());
        assert!(LoopTable::parse_text("order 2 identity 1\n1 2\n2 3").is_err());
        assert!(LoopTable::parse_text("order 2 identity 0\n1 2\n2 1").is_err());
        assert!(LoopTable::parse_text("order 2 identity 1\n1 2\n2 1\n1 2").is_err());
        assert!(LoopTable::from_rows(0, &[vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn translations_and_divisions() {
        let z5 = Loop::new(cyclic_group(5)).unwrap();
        assert!(z5.right_translation(0).is_identity());
        assert!(z5.left_translation(0).is_identity());
        assert_eq!(z5.right_translation(3).apply(0), 3);
        assert_eq!(z5.ldiv(2, 1), 4);
        assert_eq!(z5.rdiv(1, 2), 4);
        assert!(z5.is_associative() && z5.is_commutative());
    }

    #[test]
    fn identity_free_latin_square_is_rejected() {
        // Z_3 with identity declared at 1 instead of 0
        let t = LoopTable::new(3, 1, cyclic_group(3).row(0).iter().chain(cyclic_group(3).row(1)).chain(cyclic_group(3).row(2)).copied().collect()).unwrap();
        let v = verify_loop(&t);
        assert!(v.latin && !v.identity && !v.is_loop());
        assert!(v.routes_agree());
    }

    /// A table that has an identity, bijective right translations, and
    /// fixed-point-free `R_x R_y^{-1}` for every pair of distinct
    /// non-identity `x, y`, yet has a repeated entry in a row. Restricting
    /// the fixed-point test to non-identity pairs is therefore not enough.
    #[test]
    fn fixed_point_test_must_include_the_identity() {
        let rows = [
            vec![1, 2, 3, 4],
            vec![2, 1, 2, 3],
            vec![3, 4, 1, 2],
            vec![4, 3, 4, 1],
        ];
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|x| x - 1).collect()).collect();
        let t = LoopTable::from_rows(0, &rows).unwrap();
        let m = t.order();
        let restricted = (1..m).all(|x| (1..m).filter(|&y| y != x).all(|y| (0..m).all(|z| t.mul(z, x) != t.mul(z, y))));
        assert!(restricted);
        let v = verify_loop(&t);
        assert!(v.identity && !v.latin && !v.section_fixed_point_free);
        assert!(v.routes_agree());
    }
}
