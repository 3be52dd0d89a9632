//! Backtracking search for homomorphisms defined by generator images.
//!
//! A map is grown breadth-first over the Cayley graph of the subgroup
//! generated by the generators fixed so far. A map that agrees with every
//! edge `x -> x·g` is a homomorphism on that subgroup, so a complete
//! assignment that survives all edge checks is a homomorphism.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub(crate) const UNSET: u32 = u32::MAX;

/// Largest order accepted by [`is_isomorphic_small`].
pub const ISOMORPHISM_CAP: usize = 64;

/// Greedy generating sequence: each step adjoins the element that enlarges
/// the generated subgroup the most (least id on ties).
pub fn small_generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut seq: Vec<usize> = Vec::new();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut current = 1;
    while current < n {
        let mut best = (0, 0);
        let mut trial = seq.clone();
        trial.push(0);
        for (x, _) in inside.iter().enumerate().filter(|(_, &seen)| !seen) {
            *trial.last_mut().unwrap() = x;
            let size = g.closure_members(&trial).len();
            if size > best.1 {
                best = (x, size);
                if size == n {
                    break;
                }
            }
        }
        seq.push(best.0);
        for m in g.closure_members(&seq) {
            inside[m] = true;
        }
        current = best.1;
    }
    seq
}

/// Per-element invariant preserved by isomorphisms: element order,
/// conjugacy class size, and class size of the square.
pub(crate) fn fingerprints(g: &FiniteGroup) -> Vec<(usize, usize, usize)> {
    let classes = g.conjugacy_classes();
    let mut size = vec![0; g.order()];
    for class in &classes {
        for &x in class {
            size[x] = class.len();
        }
    }
    g.elements()
        .map(|x| (g.element_order(x), size[x], size[g.mul(x, x)]))
        .collect()
}

/// Scratch state for extending generator images to a homomorphism.
pub(crate) struct Extender<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    injective: bool,
    pub(crate) map: Vec<u32>,
    pub(crate) domain: Vec<usize>,
    used: Vec<u32>,
    stamp: u32,
}

impl<'a> Extender<'a> {
    pub(crate) fn new(source: &'a FiniteGroup, target: &'a FiniteGroup, injective: bool) -> Self {
        Extender {
            source,
            target,
            injective,
            map: vec![UNSET; source.order()],
            domain: Vec::with_capacity(source.order()),
            used: vec![0; target.order()],
            stamp: 0,
        }
    }

    /// Extends `gens[i] -> images[i]` over the subgroup they generate.
    /// Returns false on any inconsistency (or collision when injective).
    pub(crate) fn extend(&mut self, gens: &[usize], images: &[usize]) -> bool {
        for &x in &self.domain {
            self.map[x] = UNSET;
        }
        self.domain.clear();
        self.stamp += 1;
        self.map[0] = 0;
        self.domain.push(0);
        self.used[0] = self.stamp;
        let mut next = 0;
        while next < self.domain.len() {
            let x = self.domain[next];
            let fx = self.map[x] as usize;
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.source.mul(x, g);
                let v = self.target.mul(fx, img) as u32;
                let fy = self.map[y];
                if fy == UNSET {
                    if self.injective {
                        if self.used[v as usize] == self.stamp {
                            return false;
                        }
                        self.used[v as usize] = self.stamp;
                    }
                    self.map[y] = v;
                    self.domain.push(y);
                } else if fy != v {
                    return false;
                }
            }
            next += 1;
        }
        true
    }
}

/// Visits every homomorphism `source -> target` sending `gens[j]` into
/// `candidates[j]`. `gens` must generate `source`.
pub(crate) fn for_each_hom(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    injective: bool,
    visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
) {
    let mut ext = Extender::new(source, target, injective);
    if gens.is_empty() {
        ext.extend(&[], &[]);
        let _ = visit(&ext.map);
        return;
    }
    let mut images = Vec::with_capacity(gens.len());
    let _ = descend(&mut ext, gens, candidates, &mut images, visit);
}

fn descend(
    ext: &mut Extender<'_>,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let level = images.len();
    for &c in &candidates[level] {
        images.push(c);
        if ext.extend(&gens[..=level], images) {
            if level + 1 == gens.len() {
                visit(&ext.map)?;
            } else {
                descend(ext, gens, candidates, images, visit)?;
            }
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// An isomorphism `a -> b` as an image array, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return None;
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    let mut ha = fa.clone();
    let mut hb = fb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    let gens = small_generating_sequence(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| b.elements().filter(|&y| fb[y] == fa[g]).collect())
        .collect();
    let mut found = None;
    for_each_hom(a, b, &gens, &candidates, true, &mut |map| {
        found = Some(map.iter().map(|&v| v as usize).collect());
        ControlFlow::Break(())
    });
    found
}

/// An injective homomorphism `a -> b`, if one exists.
pub fn find_embedding(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if !b.order().is_multiple_of(a.order()) {
        return None;
    }
    let gens = small_generating_sequence(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = a.element_order(g);
            b.elements().filter(|&y| b.element_order(y) == k).collect()
        })
        .collect();
    let mut found = None;
    for_each_hom(a, b, &gens, &candidates, true, &mut |map| {
        found = Some(map.iter().map(|&v| v as usize).collect());
        ControlFlow::Break(())
    });
    found
}

/// Isomorphism test for groups of order at most 64.
pub fn is_isomorphic_small(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    if a.order().max(b.order()) > ISOMORPHISM_CAP {
        return Err(Error::CapExceeded {
            cap: ISOMORPHISM_CAP,
        });
    }
    Ok(find_isomorphism(a, b).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::close_generators;
    use crate::perm::Perm;

    fn cyc(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        close_generators(&[Perm::from_cycles(n, &[&c]).unwrap()]).unwrap()
    }

    #[test]
    fn generating_sequence_generates() {
        let s4 = close_generators(&[
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ])
        .unwrap();
        let seq = small_generating_sequence(&s4);
        assert_eq!(s4.closure_members(&seq).len(), 24);
        assert_eq!(seq.len(), 2);
        assert!(small_generating_sequence(&FiniteGroup::trivial()).is_empty());
    }

    #[test]
    fn cyclic_groups_of_same_order_are_isomorphic() {
        let relabeled = cyc(6).relabel(&[0, 3, 5, 1, 2, 4]).unwrap();
        assert!(is_isomorphic_small(&cyc(6), &relabeled).unwrap());
        assert!(!is_isomorphic_small(&cyc(4), &cyc(6)).unwrap());
    }

    #[test]
    fn isomorphism_cap() {
        assert_eq!(
            is_isomorphic_small(&cyc(65), &cyc(65)).unwrap_err(),
            Error::CapExceeded { cap: 64 }
        );
    }

    #[test]
    fn embedding_of_c3_into_c6() {
        let map = find_embedding(&cyc(3), &cyc(6)).unwrap();
        assert_eq!(map[0], 0);
        assert!(find_embedding(&cyc(4), &cyc(6)).is_none());
    }
}
