use std::collections::BTreeSet;

use serde::Serialize;

use super::{Loop, LoopTable};
use crate::error::{Error, Result};

/// A subset of loop elements closed under multiplication and both
/// divisions. Members are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subloop {
    members: Vec<usize>,
}

impl Subloop {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// `Some` when `members` is exactly a subloop of `lp`.
    pub fn from_members(lp: &Loop, members: &[usize]) -> Option<Self> {
        let generated = subloop_generated(lp, members);
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        (generated.members == sorted).then_some(generated)
    }

    fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    fn from_mask(mask: &[bool]) -> Self {
        Subloop { members: (0..mask.len()).filter(|&x| mask[x]).collect() }
    }
}

/// The smallest subloop containing `seeds` (and the identity).
pub fn subloop_generated(lp: &Loop, seeds: &[usize]) -> Subloop {
    let mut mask = vec![false; lp.order()];
    mask[lp.identity()] = true;
    let mut members = vec![lp.identity()];
    for &s in seeds {
        if !mask[s] {
            mask[s] = true;
            members.push(s);
        }
    }
    // every new element is combined with every member, in both orders
    let mut done = 0;
    while done < members.len() {
        let x = members[done];
        let mut k = 0;
        while k <= done {
            let y = members[k];
            for z in [lp.mul(x, y), lp.mul(y, x), lp.ldiv(x, y), lp.ldiv(y, x), lp.rdiv(x, y), lp.rdiv(y, x)] {
                if !mask[z] {
                    mask[z] = true;
                    members.push(z);
                }
            }
            k += 1;
        }
        done += 1;
    }
    Subloop::from_mask(&mask)
}

/// Checks `xN = Nx`, `x(yN) = (xy)N`, `(Nx)y = N(xy)` and `x(Ny) = (xN)y`
/// for all `x, y`.
pub fn is_normal(lp: &Loop, sub: &Subloop) -> bool {
    let m = lp.order();
    if sub.len() == m || sub.is_trivial() {
        return sub.contains(lp.identity());
    }
    let n = sub.members();
    let mut set = vec![false; m];
    let fill = |set: &mut Vec<bool>, it: &mut dyn Iterator<Item = usize>| {
        set.iter_mut().for_each(|b| *b = false);
        it.for_each(|z| set[z] = true);
    };
    for x in 0..m {
        fill(&mut set, &mut n.iter().map(|&a| lp.mul(x, a)));
        if !n.iter().all(|&a| set[lp.mul(a, x)]) {
            return false;
        }
    }
    for x in 0..m {
        for y in 0..m {
            let xy = lp.mul(x, y);
            // (xy)N and N(xy)
            fill(&mut set, &mut n.iter().map(|&a| lp.mul(xy, a)));
            if !n.iter().all(|&a| set[lp.mul(x, lp.mul(y, a))]) {
                return false;
            }
            fill(&mut set, &mut n.iter().map(|&a| lp.mul(a, xy)));
            if !n.iter().all(|&a| set[lp.mul(lp.mul(a, x), y)]) {
                return false;
            }
            // (xN)y and x(Ny)
            fill(&mut set, &mut n.iter().map(|&a| lp.mul(lp.mul(x, a), y)));
            if !n.iter().all(|&a| set[lp.mul(x, lp.mul(a, y))]) {
                return false;
            }
        }
    }
    true
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orbits of the group generated by the conjugations `T_x: a -> x \ (a x)`.
/// Every normal subloop is a union of these orbits.
fn conjugation_orbits(lp: &Loop) -> Vec<Vec<usize>> {
    let m = lp.order();
    let mut uf = UnionFind((0..m).collect());
    for x in 0..m {
        for a in 0..m {
            uf.union(a, lp.ldiv(x, lp.mul(a, x)));
        }
    }
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); m];
    for a in 0..m {
        let r = uf.find(a);
        orbits[r].push(a);
    }
    orbits.retain(|o| !o.is_empty());
    orbits
}

/// Closure of `start` under the generators `T_x`, `R_{x,y}` and `L_{x,y}`
/// of the inner mapping group, together with the subloop operations.
fn inner_closure(lp: &Loop, start: &Subloop) -> Subloop {
    let m = lp.order();
    let mut mask = start.mask(m);
    loop {
        let mut grew = false;
        let current = Subloop::from_mask(&mask);
        for &a in current.members() {
            for x in 0..m {
                let images = std::iter::once(lp.ldiv(x, lp.mul(a, x))).chain((0..m).flat_map(|y| {
                    let r = lp.rdiv(lp.mul(lp.mul(a, x), y), lp.mul(x, y));
                    let l = lp.ldiv(lp.mul(y, x), lp.mul(y, lp.mul(x, a)));
                    [r, l]
                }));
                for z in images {
                    if !mask[z] {
                        mask[z] = true;
                        grew = true;
                    }
                }
            }
        }
        let closed = subloop_generated(lp, &Subloop::from_mask(&mask).members);
        grew |= closed.len() != mask.iter().filter(|&&b| b).count();
        mask = closed.mask(m);
        if !grew {
            return closed;
        }
    }
}

/// The smallest normal subloop containing `seeds`.
pub fn normal_closure(lp: &Loop, seeds: &[usize]) -> Subloop {
    let orbits = conjugation_orbits(lp);
    normal_closure_with(lp, seeds, &orbits)
}

fn normal_closure_with(lp: &Loop, seeds: &[usize], orbits: &[Vec<usize>]) -> Subloop {
    let m = lp.order();
    let mut orbit_of = vec![0usize; m];
    for (k, o) in orbits.iter().enumerate() {
        for &a in o {
            orbit_of[a] = k;
        }
    }
    let mut current = subloop_generated(lp, seeds);
    loop {
        let ids: BTreeSet<usize> = current.members().iter().map(|&a| orbit_of[a]).collect();
        let union: Vec<usize> = ids.iter().flat_map(|&k| orbits[k].iter().copied()).collect();
        let next = subloop_generated(lp, &union);
        if next == current {
            break;
        }
        current = next;
    }
    if is_normal(lp, &current) {
        current
    } else {
        let full = inner_closure(lp, &current);
        debug_assert!(is_normal(lp, &full));
        full
    }
}

/// All normal subloops, sorted by size and then by members.
///
/// Every normal subloop is the join of the normal closures of its elements,
/// so the lattice is generated from single-element closures by joins.
pub fn enumerate_normal_subloops(lp: &Loop) -> Vec<Subloop> {
    let orbits = conjugation_orbits(lp);
    let mut found: BTreeSet<Subloop> = BTreeSet::new();
    found.insert(subloop_generated(lp, &[]));
    found.insert(Subloop { members: (0..lp.order()).collect() });
    for orbit in &orbits {
        found.insert(normal_closure_with(lp, &orbit[..1], &orbits));
    }
    loop {
        let current: Vec<Subloop> = found.iter().cloned().collect();
        let mut added = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let union: Vec<usize> = a.members().iter().chain(b.members()).copied().collect();
                let join = subloop_generated(lp, &union);
                if found.insert(join) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<Subloop> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    out
}

/// A quotient loop together with the coset of each original element.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: LoopTable,
    /// Coset index of each element of the original loop.
    pub coset_of: Vec<usize>,
    /// Cosets in index order; each is represented by its smallest element.
    pub cosets: Vec<Vec<usize>>,
}

impl Quotient {
    pub fn as_loop(&self) -> Loop {
        Loop::from_verified(self.table.clone())
    }
}

pub fn quotient_loop(lp: &Loop, sub: &Subloop) -> Result<Quotient> {
    if !sub.contains(lp.identity()) || !is_normal(lp, sub) {
        return Err(Error::NotNormal);
    }
    let m = lp.order();
    let mut coset_of = vec![usize::MAX; m];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..m {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = sub.members().iter().map(|&a| lp.mul(x, a)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_of[y] = cosets.len();
        }
        cosets.push(coset);
    }
    let k = cosets.len();
    let mut cells = vec![u32::MAX; k * k];
    for x in 0..m {
        for y in 0..m {
            let (cx, cy) = (coset_of[x], coset_of[y]);
            let cz = coset_of[lp.mul(x, y)] as u32;
            let slot = &mut cells[cx * k + cy];
            if *slot == u32::MAX {
                *slot = cz;
            } else if *slot != cz {
                return Err(Error::IllDefinedQuotient(cx, cy));
            }
        }
    }
    let labels = cosets
        .iter()
        .map(|c| {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("{{{}}}", body.join(","))
        })
        .collect();
    let table = LoopTable::new(k, coset_of[lp.identity()], cells)?.with_labels(labels)?;
    Ok(Quotient { table, coset_of, cosets })
}
