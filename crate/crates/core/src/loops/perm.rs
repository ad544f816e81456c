use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// A permutation of `0..len`, acting on the right: `x * (a.then(b)) = (x * a) * b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(len: usize) -> Self {
        Perm { images: (0..len as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize).ok_or(Error::NotBijection)?;
            if *slot {
                return Err(Error::NotBijection);
            }
            *slot = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based cycle notation such as `[[1, 8, 6], [2, 4]]`.
    pub fn from_cycles(len: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..len as u32).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > len || y == 0 || y > len {
                    return Err(Error::NotBijection);
                }
                images[x - 1] = (y - 1) as u32;
            }
        }
        Perm::from_images(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(x, &y)| x as u32 == y).count()
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.extend(std::iter::repeat_n(1, self.fixed_points()));
        lens.sort_unstable();
        lens
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// A finite permutation group obtained by closure, with elements in
/// breadth-first discovery order starting from the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    elements: Vec<Perm>,
    members: HashSet<Perm>,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.members.contains(g)
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// The irredundant subset of the input generators actually used.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements fixing `point`.
    pub fn stabilizer(&self, point: usize) -> Vec<&Perm> {
        self.elements.iter().filter(|g| g.apply(point) == point).collect()
    }
}

/// Breadth-first closure of `generators` under composition; for a finite
/// domain this is the generated group. Generators already contained in the
/// group built so far are skipped, so the closure is recomputed at most
/// `log2(order)` times. Fails once more than `cap` elements have been found.
pub fn perm_closure(degree: usize, generators: &[Perm], cap: usize) -> Result<PermGroup> {
    for g in generators {
        if g.len() != degree {
            return Err(Error::DomainMismatch(degree, g.len()));
        }
    }
    let mut group = bfs(degree, &[], cap)?;
    let mut used: Vec<&Perm> = Vec::new();
    for g in generators {
        if !group.contains(g) {
            used.push(g);
            group = bfs(degree, &used, cap)?;
        }
    }
    group.generators = used.into_iter().cloned().collect();
    Ok(group)
}

fn bfs(degree: usize, gens: &[&Perm], cap: usize) -> Result<PermGroup> {
    let id = Perm::identity(degree);
    let mut members = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        for g in gens {
            let k = elements[next].then(g);
            if !members.contains(&k) {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                members.insert(k.clone());
                elements.push(k);
            }
        }
        next += 1;
    }
    Ok(PermGroup { elements, members, generators: Vec::new() })
}
