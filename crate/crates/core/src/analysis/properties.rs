use rayon::prelude::*;
use serde::Serialize;

use crate::loops::Loop;

/// The two independent right-conjugacy-closure tests. A counterexample is
/// recorded as 0-based element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RccVerdict {
    /// `R_x^{-1} R_y R_x = R_{x \ yx}` for all `x, y`.
    pub rcc1: bool,
    /// `(xy)z = (xz)(z \ yz)` for all `x, y, z`.
    pub rcc2: bool,
    pub rcc1_witness: Option<(usize, usize)>,
    pub rcc2_witness: Option<(usize, usize, usize)>,
}

impl RccVerdict {
    pub fn is_rcc(&self) -> bool {
        self.rcc1 && self.rcc2
    }

    pub fn agree(&self) -> bool {
        self.rcc1 == self.rcc2
    }
}

pub fn check_rcc(lp: &Loop) -> RccVerdict {
    let m = lp.order();
    let rcc1_witness = (0..m)
        .into_par_iter()
        .find_map_first(|x| {
            (0..m).find_map(|y| {
                let target = lp.ldiv(x, lp.mul(y, x));
                // w R_x^{-1} R_y R_x = ((w / x) y) x
                let ok = (0..m).all(|w| lp.mul(lp.mul(lp.rdiv(w, x), y), x) == lp.mul(w, target));
                (!ok).then_some((x, y))
            })
        });
    let rcc2_witness = (0..m)
        .into_par_iter()
        .find_map_first(|x| {
            (0..m).find_map(|y| {
                (0..m).find_map(|z| {
                    let lhs = lp.mul(lp.mul(x, y), z);
                    let rhs = lp.mul(lp.mul(x, z), lp.ldiv(z, lp.mul(y, z)));
                    (lhs != rhs).then_some((x, y, z))
                })
            })
        });
    RccVerdict {
        rcc1: rcc1_witness.is_none(),
        rcc2: rcc2_witness.is_none(),
        rcc1_witness,
        rcc2_witness,
    }
}

/// Two-sided inverses exist and `(y x) x^{-1} = y` for all `x, y`.
pub fn check_rip(lp: &Loop) -> bool {
    rip_failure(lp).is_none()
}

/// First element (0-based) violating the right inverse property, with a
/// description of how it fails.
pub fn rip_failure(lp: &Loop) -> Option<(usize, String)> {
    let m = lp.order();
    let e = lp.identity();
    (0..m).into_par_iter().find_map_first(|x| {
        // y x = e and x y = e respectively
        let (left, right) = (lp.rdiv(e, x), lp.ldiv(x, e));
        if left != right {
            return Some((x, format!("{} has left inverse {} but right inverse {}", x + 1, left + 1, right + 1)));
        }
        (0..m)
            .find(|&y| lp.mul(lp.mul(y, x), left) != y)
            .map(|y| (x, format!("({} {}) {} != {}", y + 1, x + 1, left + 1, y + 1)))
    })
}

/// Commutant, nuclei and center as sorted 0-based index lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subsets {
    pub commutant: Vec<usize>,
    pub left_nucleus: Vec<usize>,
    pub middle_nucleus: Vec<usize>,
    pub right_nucleus: Vec<usize>,
    pub nucleus: Vec<usize>,
    pub center: Vec<usize>,
}

fn sweep(lp: &Loop, pred: impl Fn(usize) -> bool + Sync) -> Vec<usize> {
    (0..lp.order()).into_par_iter().filter(|&a| pred(a)).collect()
}

pub fn compute_subsets(lp: &Loop) -> Subsets {
    let m = lp.order();
    let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..m).all(|x| (0..m).all(|y| f(x, y)));
    let commutant = sweep(lp, |a| (0..m).all(|x| lp.mul(a, x) == lp.mul(x, a)));
    let left_nucleus = sweep(lp, |a| all_pairs(&|x, y| lp.mul(a, lp.mul(x, y)) == lp.mul(lp.mul(a, x), y)));
    let middle_nucleus = sweep(lp, |a| all_pairs(&|x, y| lp.mul(x, lp.mul(a, y)) == lp.mul(lp.mul(x, a), y)));
    let right_nucleus = sweep(lp, |a| all_pairs(&|x, y| lp.mul(x, lp.mul(y, a)) == lp.mul(lp.mul(x, y), a)));
    let nucleus: Vec<usize> = left_nucleus
        .iter()
        .copied()
        .filter(|a| middle_nucleus.binary_search(a).is_ok() && right_nucleus.binary_search(a).is_ok())
        .collect();
    let center = nucleus.iter().copied().filter(|a| commutant.binary_search(a).is_ok()).collect();
    Subsets { commutant, left_nucleus, middle_nucleus, right_nucleus, nucleus, center }
}

/// Elements whose right translation commutes with every right translation,
/// i.e. lies in the center of the right multiplication group.
pub fn central_right_translations(lp: &Loop) -> Vec<usize> {
    let m = lp.order();
    sweep(lp, |a| (0..m).all(|x| (0..m).all(|w| lp.mul(lp.mul(w, a), x) == lp.mul(lp.mul(w, x), a))))
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{cyclic_group, LoopTable};

    #[test]
    fn groups_are_rcc_and_rip() {
        let z6 = Loop::new(cyclic_group(6)).unwrap();
        let v = check_rcc(&z6);
        assert!(v.is_rcc() && v.agree());
        assert!(check_rip(&z6));
        let s = compute_subsets(&z6);
        assert_eq!(s.center.len(), 6);
        assert_eq!(central_right_translations(&z6).len(), 6);
    }

    /// Loops of order 5 that fail the right inverse property, found by
    /// exhaustive search over normalized Latin squares.
    #[test]
    fn order_five_search_finds_non_rip_loop() {
        let mut witness = None;
        let mut count = 0;
        search_order5(&mut vec![vec![usize::MAX; 5]; 5], 0, &mut |rows| {
            count += 1;
            let lp = Loop::new(LoopTable::from_rows(0, rows).unwrap()).unwrap();
            if witness.is_none() && !check_rip(&lp) {
                witness = Some(lp);
            }
        });
        // 56 normalized Latin squares of order 5
        assert_eq!(count, 56);
        let lp = witness.expect("a non-RIP loop of order 5 exists");
        assert!(!check_rip(&lp));
        assert!(!check_rcc(&lp).is_rcc() || !lp.is_associative());
    }

    fn search_order5(rows: &mut Vec<Vec<usize>>, cell: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        let m = 5;
        if cell == m * m {
            visit(rows);
            return;
        }
        let (x, y) = (cell / m, cell % m);
        if x == 0 || y == 0 {
            rows[x][y] = x.max(y);
            search_order5(rows, cell + 1, visit);
            return;
        }
        for v in 0..m {
            let used = (0..y).any(|j| rows[x][j] == v) || (0..x).any(|i| rows[i][y] == v);
            if !used {
                rows[x][y] = v;
                search_order5(rows, cell + 1, visit);
            }
        }
        rows[x][y] = usize::MAX;
    }
}
