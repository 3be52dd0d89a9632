//! Automorphism groups and involutive actions.
//!
//! An involutive automorphism `φ` of `H` is the same thing as a
//! homomorphism from the order-2 Galois group into `Aut(H)`; it is the
//! action against which cocycles are twisted.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, DEFAULT_CLOSURE_CAP};
use crate::search::{fingerprints, for_each_hom, small_generating_sequence, Extender};

/// Largest group whose automorphism group is computed.
pub const AUTOMORPHISM_INPUT_CAP: usize = 1500;

/// An automorphism `φ` of a group with `φ∘φ = id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvolutiveAction {
    images: Vec<u32>,
}

impl InvolutiveAction {
    /// Validates bijectivity, the homomorphism property and `φ² = id`.
    pub fn new(h: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != h.order() {
            return Err(Error::NotInvolution("image array has the wrong length".into()));
        }
        let images: Vec<u32> = images.into_iter().map(|x| x as u32).collect();
        if !is_automorphism(h, &images) {
            return Err(Error::NotInvolution("map is not an automorphism".into()));
        }
        if images.iter().enumerate().any(|(x, &y)| images[y as usize] as usize != x) {
            return Err(Error::NotInvolution("map does not square to the identity".into()));
        }
        Ok(InvolutiveAction { images })
    }

    pub(crate) fn from_trusted(images: Vec<u32>) -> Self {
        InvolutiveAction { images }
    }

    pub fn identity(h: &FiniteGroup) -> Self {
        InvolutiveAction {
            images: (0..h.order() as u32).collect(),
        }
    }

    /// `x ↦ x⁻¹`, an automorphism only for abelian groups.
    pub fn inversion(h: &FiniteGroup) -> Result<Self> {
        if !h.is_abelian() {
            return Err(Error::NotAbelian);
        }
        Ok(InvolutiveAction {
            images: h.elements().map(|x| h.inv(x) as u32).collect(),
        })
    }

    /// Conjugation by an element of order at most 2.
    pub fn conjugation(h: &FiniteGroup, g: usize) -> Result<Self> {
        if h.element_order(g) > 2 {
            return Err(Error::NotInvolution(format!("element {g} has order above 2")));
        }
        Ok(InvolutiveAction {
            images: h.elements().map(|x| h.conj(g, x) as u32).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// True if `φ(h) = h⁻¹` for every `h`.
    pub fn is_inversion(&self, h: &FiniteGroup) -> bool {
        h.elements().all(|x| self.apply(x) == h.inv(x))
    }
}

/// Checks bijectivity and the homomorphism property on generator edges.
pub(crate) fn is_automorphism(h: &FiniteGroup, images: &[u32]) -> bool {
    if images.len() != h.order() || images[0] != 0 {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &v in images {
        if v as usize >= h.order() || std::mem::replace(&mut seen[v as usize], true) {
            return false;
        }
    }
    h.elements().all(|x| {
        h.generators()
            .iter()
            .all(|&g| images[h.mul(x, g)] as usize == h.mul(images[x] as usize, images[g] as usize))
    })
}

/// `Aut(H)` as a finite group under composition.
///
/// Automorphisms are sorted lexicographically by image array, so the
/// identity map is id 0. Multiplication is composition: `a·b = a∘b`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    group: FiniteGroup,
    maps: Vec<Vec<u32>>,
    inner: Subgroup,
    base_order: usize,
}

/// One Aut(H)-conjugacy class of elements of order at most 2.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    /// Position in `involution_class_reps` output; 0 is the identity.
    pub index: usize,
    /// Least automorphism id in the class.
    pub aut_id: usize,
    pub class_size: usize,
    pub action: InvolutiveAction,
}

/// Computes `Aut(H)` by backtracking over images of a small generating
/// sequence, pruned by element order and conjugacy-class fingerprints.
pub fn automorphism_group(h: &FiniteGroup) -> Result<AutGroup> {
    if h.order() > AUTOMORPHISM_INPUT_CAP {
        return Err(Error::CapExceeded {
            cap: AUTOMORPHISM_INPUT_CAP,
        });
    }
    let gens = small_generating_sequence(h);
    let fp = fingerprints(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| h.elements().filter(|&y| fp[y] == fp[g]).collect())
        .collect();
    let mut maps = Vec::new();
    let mut overflow = false;
    for_each_hom(h, h, &gens, &candidates, true, &mut |map| {
        if maps.len() == DEFAULT_CLOSURE_CAP {
            overflow = true;
            return ControlFlow::Break(());
        }
        maps.push(map.to_vec());
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::CapExceeded {
            cap: DEFAULT_CLOSURE_CAP,
        });
    }
    AutGroup::assemble(h, maps, &gens)
}

impl AutGroup {
    /// Rebuilds `Aut(H)` from a stored list of automorphisms, verifying each
    /// map and closure under composition.
    pub fn from_maps(h: &FiniteGroup, maps: Vec<Vec<u32>>) -> Result<Self> {
        if h.order() > AUTOMORPHISM_INPUT_CAP || maps.len() > DEFAULT_CLOSURE_CAP {
            return Err(Error::CapExceeded {
                cap: DEFAULT_CLOSURE_CAP,
            });
        }
        for m in &maps {
            if !is_automorphism(h, m) {
                return Err(Error::Mismatch("stored map is not an automorphism".into()));
            }
        }
        let gens = small_generating_sequence(h);
        AutGroup::assemble(h, maps, &gens)
    }

    fn assemble(h: &FiniteGroup, mut maps: Vec<Vec<u32>>, gens: &[usize]) -> Result<Self> {
        maps.sort_unstable();
        maps.dedup();
        let n = maps.len();
        let key = |m: &[u32]| -> Vec<u32> { gens.iter().map(|&g| m[g]).collect() };
        let index: HashMap<Vec<u32>, usize> = maps.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
        if index.len() != n || n == 0 || maps[0].iter().enumerate().any(|(x, &y)| x as u32 != y) {
            return Err(Error::Mismatch("automorphism list is malformed".into()));
        }
        let mut table = vec![0u32; n * n];
        let mut composite = vec![0u32; gens.len()];
        for (i, a) in maps.iter().enumerate() {
            for (j, b) in maps.iter().enumerate() {
                for (slot, &g) in composite.iter_mut().zip(gens) {
                    *slot = a[b[g] as usize];
                }
                let k = *index
                    .get(&composite)
                    .ok_or_else(|| Error::Mismatch("automorphisms are not closed under composition".into()))?;
                table[i * n + j] = k as u32;
            }
        }
        let label = format!("Aut({})", h.label());
        let group = FiniteGroup::from_table(n, table, label)?;
        let mut inner: Vec<usize> = h
            .elements()
            .map(|x| {
                let conj: Vec<u32> = gens.iter().map(|&g| h.conj(x, g) as u32).collect();
                index[&conj]
            })
            .collect();
        inner.sort_unstable();
        inner.dedup();
        let inner = Subgroup::new(&group, &inner)?;
        Ok(AutGroup {
            group,
            maps,
            inner,
            base_order: h.order(),
        })
    }

    /// The automorphisms under composition, as an abstract group.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Image array of automorphism `id`.
    pub fn map(&self, id: usize) -> &[u32] {
        &self.maps[id]
    }

    pub fn maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn inner(&self) -> &Subgroup {
        &self.inner
    }

    /// Id of an automorphism given by its image array.
    pub fn find(&self, images: &[u32]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(images)).ok()
    }

    pub fn action(&self, id: usize) -> Result<InvolutiveAction> {
        if self.group.element_order(id) > 2 {
            return Err(Error::NotInvolution(format!("automorphism {id} has order above 2")));
        }
        Ok(InvolutiveAction::from_trusted(self.maps[id].clone()))
    }
}

/// Inner automorphisms of `H` inside `A = Aut(H)`.
pub fn inner_automorphisms(h: &FiniteGroup, a: &AutGroup) -> Result<Subgroup> {
    if a.base_order != h.order() {
        return Err(Error::Mismatch("automorphism group belongs to another group".into()));
    }
    Ok(a.inner.clone())
}

/// One representative per conjugacy class of elements of order ≤ 2 in
/// `Aut(H)`: identity first, then by least automorphism id.
pub fn involution_class_reps(a: &AutGroup) -> Vec<InvolutionClass> {
    a.group
        .conjugacy_classes()
        .into_iter()
        .filter(|class| a.group.element_order(class[0]) <= 2)
        .enumerate()
        .map(|(index, class)| InvolutionClass {
            index,
            aut_id: class[0],
            class_size: class.len(),
            action: InvolutiveAction::from_trusted(a.maps[class[0]].clone()),
        })
        .collect()
}

/// Restricts `φ` to a `φ`-stable subgroup, re-indexed as in
/// [`FiniteGroup::subgroup_as_group`].
pub fn restrict_action(
    h: &FiniteGroup,
    phi: &InvolutiveAction,
    s: &Subgroup,
) -> Result<(FiniteGroup, InvolutiveAction)> {
    if s.parent_order() != h.order() || phi.images.len() != h.order() {
        return Err(Error::Mismatch("action, subgroup and group disagree".into()));
    }
    if s.members().iter().any(|&x| !s.contains(phi.apply(x))) {
        return Err(Error::NotStable);
    }
    let sub = h.subgroup_as_group(s);
    let images = s
        .members()
        .iter()
        .map(|&x| s.members().binary_search(&phi.apply(x)).unwrap() as u32)
        .collect();
    Ok((sub, InvolutiveAction::from_trusted(images)))
}

/// Visits every involutive automorphism of `h` (the identity included)
/// without building `Aut(H)`.
///
/// Each step takes the least element `x` outside the current domain and
/// pairs it with an image `v` outside the domain, forcing `φ(v) = x`.
pub fn for_each_involutive_automorphism(h: &FiniteGroup, visit: &mut dyn FnMut(&InvolutiveAction)) {
    let fp = fingerprints(h);
    let mut ext = Extender::new(h, h, true);
    let mut gens = Vec::new();
    let mut images = Vec::new();
    involution_step(h, &fp, &mut ext, &mut gens, &mut images, visit);
}

fn involution_step(
    h: &FiniteGroup,
    fp: &[(usize, usize, usize)],
    ext: &mut Extender<'_>,
    gens: &mut Vec<usize>,
    images: &mut Vec<usize>,
    visit: &mut dyn FnMut(&InvolutiveAction),
) {
    let ok = ext.extend(gens, images);
    debug_assert!(ok);
    let mut inside = vec![false; h.order()];
    for &x in &ext.domain {
        inside[x] = true;
    }
    let Some(x) = inside.iter().position(|&b| !b) else {
        visit(&InvolutiveAction::from_trusted(ext.map.clone()));
        return;
    };
    for v in h.elements() {
        if inside[v] || fp[v] != fp[x] {
            continue;
        }
        let pushed = if v == x { 1 } else { 2 };
        gens.push(x);
        images.push(v);
        if v != x {
            gens.push(v);
            images.push(x);
        }
        if ext.extend(gens, images) {
            involution_step(h, fp, ext, gens, images, visit);
        }
        for _ in 0..pushed {
            gens.pop();
            images.pop();
        }
    }
}

/// Largest group accepted by [`brute_force_automorphisms`].
pub const BRUTE_FORCE_CAP: usize = 64;

/// Reference enumeration of `Aut(H)`: every tuple of images of the stored
/// generators, kept when it extends to a bijective homomorphism. Sorted.
pub fn brute_force_automorphisms(h: &FiniteGroup) -> Result<Vec<Vec<u32>>> {
    if h.order() > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded { cap: BRUTE_FORCE_CAP });
    }
    let gens = h.generators();
    let n = h.order();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; gens.len()];
    'tuples: loop {
        let mut map = vec![u32::MAX; n];
        map[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut consistent = true;
        while let Some(x) = queue.pop_front() {
            for (&s, &t) in gens.iter().zip(&tuple) {
                let y = h.mul(x, s);
                let v = h.mul(map[x] as usize, t) as u32;
                if map[y] == u32::MAX {
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    consistent = false;
                }
            }
        }
        let full = consistent
            && !map.contains(&u32::MAX)
            && is_automorphism(h, &map)
            && h.elements()
                .all(|a| h.elements().all(|b| map[h.mul(a, b)] as usize == h.mul(map[a] as usize, map[b] as usize)));
        if full {
            out.push(map);
        }
        for slot in tuple.iter_mut() {
            *slot += 1;
            if *slot < n {
                continue 'tuples;
            }
            *slot = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_alternating, build_cyclic, build_quaternion, direct_product};
    use crate::perm::Perm;

    #[test]
    fn brute_force_matches_search() {
        let q8 = build_quaternion(3).unwrap();
        let a = automorphism_group(&q8).unwrap();
        assert_eq!(brute_force_automorphisms(&q8).unwrap(), a.maps().to_vec());
        let big = build_cyclic(65).unwrap();
        assert!(brute_force_automorphisms(&big).is_err());
    }

    #[test]
    fn trivial_and_cyclic() {
        let a = automorphism_group(&FiniteGroup::trivial()).unwrap();
        assert_eq!(a.order(), 1);
        let c3 = build_cyclic(3).unwrap();
        let a3 = automorphism_group(&c3).unwrap();
        assert_eq!(a3.order(), 2);
        let reps = involution_class_reps(&a3);
        assert_eq!(reps.len(), 2);
        assert!(reps[0].action.is_identity());
        assert!(reps[1].action.is_inversion(&c3));
        assert!(inner_automorphisms(&c3, &a3).unwrap().is_trivial());
    }

    #[test]
    fn quaternion_automorphisms() {
        let q8 = build_quaternion(3).unwrap();
        let a = automorphism_group(&q8).unwrap();
        assert_eq!(a.order(), 24);
        assert!(!a.group().is_abelian());
        assert_eq!(inner_automorphisms(&q8, &a).unwrap().order(), 4);
    }

    #[test]
    fn elementary_abelian_automorphisms_match_gl() {
        let c2 = build_cyclic(2).unwrap();
        let v2 = direct_product(&c2, &c2).unwrap();
        let v3 = direct_product(&v2, &c2).unwrap();
        assert_eq!(automorphism_group(&c2).unwrap().order(), 1);
        assert_eq!(automorphism_group(&v2).unwrap().order(), 6);
        assert_eq!(automorphism_group(&v3).unwrap().order(), 168);
    }

    #[test]
    fn restriction_in_a5() {
        let a5 = build_alternating(5).unwrap();
        let p = |cycles: &[&[usize]]| a5.find_perm(&Perm::from_cycles(5, cycles).unwrap()).unwrap();
        let t = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
        let perms = a5.perms().unwrap();
        // conjugation by the odd permutation (12), written on 0-based points
        let images: Vec<usize> = perms
            .iter()
            .map(|x| a5.find_perm(&t.compose(x).compose(&t)).unwrap())
            .collect();
        let phi = InvolutiveAction::new(&a5, images).unwrap();
        let klein = Subgroup::new(&a5, &[0, p(&[&[0, 1], &[2, 3]]), p(&[&[0, 2], &[1, 3]]), p(&[&[0, 3], &[1, 2]])]).unwrap();
        let (sub, res) = restrict_action(&a5, &phi, &klein).unwrap();
        let sub_id = |x: usize| klein.members().binary_search(&x).unwrap();
        let a = sub_id(p(&[&[0, 1], &[2, 3]]));
        let b = sub_id(p(&[&[0, 2], &[1, 3]]));
        let c = sub_id(p(&[&[0, 3], &[1, 2]]));
        assert_eq!(sub.order(), 4);
        assert_eq!(res.apply(a), a);
        assert_eq!(res.apply(b), c);
        assert_eq!(res.apply(c), b);

        let id_res = restrict_action(&a5, &InvolutiveAction::identity(&a5), &klein).unwrap().1;
        assert!(id_res.is_identity());

        let three = a5.subgroup_closure(&[p(&[&[0, 2, 3]])]);
        assert_eq!(restrict_action(&a5, &phi, &three).unwrap_err(), Error::NotStable);
    }

    #[test]
    fn involution_enumeration_matches_aut_count() {
        for g in [build_quaternion(3).unwrap(), build_cyclic(12).unwrap(), build_alternating(4).unwrap()] {
            let a = automorphism_group(&g).unwrap();
            let expected = a.group().elements().filter(|&x| a.group().element_order(x) <= 2).count();
            let mut count = 0;
            for_each_involutive_automorphism(&g, &mut |_| count += 1);
            assert_eq!(count, expected, "{}", g.label());
        }
    }

    #[test]
    fn invalid_involutions_rejected() {
        let c4 = build_cyclic(4).unwrap();
        assert!(InvolutiveAction::new(&c4, vec![0, 2, 1, 3]).is_err());
        assert!(InvolutiveAction::new(&c4, vec![0, 3, 2, 1]).is_ok());
        let q8 = build_quaternion(3).unwrap();
        assert!(InvolutiveAction::inversion(&q8).is_err());
    }
}
