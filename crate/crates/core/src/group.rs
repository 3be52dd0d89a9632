//! Finite groups given by a full Cayley table.
//!
//! Elements are ids `0..n` with `0` the identity. Groups are immutable once
//! built; every operation here is a pure function of its inputs.

use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Hard cap on the number of elements produced by a generator closure.
pub const DEFAULT_CLOSURE_CAP: usize = 5000;
/// Largest group for which `normal_subgroups` runs.
pub const NORMAL_SUBGROUP_CAP: usize = 500;

const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;
const ASSOCIATIVITY_SAMPLES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    label: String,
    perms: Option<Vec<Perm>>,
}

/// A subgroup of some ambient group, stored as its sorted member ids.
///
/// The ambient group is not borrowed; operations take it alongside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    parent_order: usize,
}

/// A homomorphism between two groups, stored as an image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source_order: usize,
    target_order: usize,
    image: Vec<usize>,
}

/// Builds the group generated by `gens` under composition.
///
/// Element ids follow breadth-first discovery order: each discovered element
/// is right-multiplied by the generators in list order.
pub fn close_generators(gens: &[Perm]) -> Result<FiniteGroup> {
    close_generators_capped(gens, DEFAULT_CLOSURE_CAP)
}

pub fn close_generators_capped(gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.first().map_or(0, Perm::degree);
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DomainMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let mut elements = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        for g in gens {
            let y = x.compose(g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        next += 1;
    }
    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            mul[i * n + j] = index[&a.compose(b)] as u32;
        }
    }
    let mut generators = Vec::new();
    for g in gens {
        let id = index[g];
        if id != 0 && !generators.contains(&id) {
            generators.push(id);
        }
    }
    let mut group = FiniteGroup::from_table(n, mul, "")?;
    group.generators = generators;
    group.perms = Some(elements);
    Ok(group)
}

impl FiniteGroup {
    /// Validates a Cayley table and wraps it as a group.
    ///
    /// Identity and inverses are checked exhaustively; associativity
    /// exhaustively up to 256 elements and by seeded sampling above.
    pub fn from_table(order: usize, mul: Vec<u32>, label: impl Into<String>) -> Result<Self> {
        let mut group = Self::from_table_unchecked(order, mul, label)?;
        group.check_associative()?;
        group.generators = group.default_generators();
        Ok(group)
    }

    fn from_table_unchecked(order: usize, mul: Vec<u32>, label: impl Into<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable(format!("0 is not an identity at {x}")));
            }
        }
        let mut inv = vec![u32::MAX; order];
        let mut seen = vec![0usize; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            for &v in row {
                if seen[v as usize] == a + 1 {
                    return Err(Error::InvalidTable(format!("row {a} repeats an entry")));
                }
                seen[v as usize] = a + 1;
            }
            let b = row.iter().position(|&v| v == 0).unwrap();
            if mul[b * order + a] != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = b as u32;
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            generators: Vec::new(),
            label: label.into(),
            perms: None,
        })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 1..n {
                for b in 1..n {
                    let ab = self.mul(a, b);
                    for c in 1..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0fa5_50c0);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(())
    }

    /// Least-id generating set: repeatedly adjoin the least element outside
    /// the current closure.
    fn default_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut count = 1;
        while count < self.order {
            let x = inside.iter().position(|&b| !b).unwrap();
            gens.push(x);
            let members = self.closure_members(&gens);
            count = members.len();
            for m in members {
                inside[m] = true;
            }
        }
        gens
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_table(1, vec![0], "C1").unwrap()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Replaces the generating list after checking it generates the group.
    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self> {
        if generators.iter().any(|&g| g >= self.order) {
            return Err(Error::OutOfRange("generator id".into()));
        }
        if self.closure_members(&generators).len() != self.order {
            return Err(Error::InvalidTable("generators do not generate the group".into()));
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Raw Cayley table, row-major.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    /// Permutation realizing each element, for permutation-built groups.
    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn find_perm(&self, p: &Perm) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Subgroup {
        let members = self
            .elements()
            .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::from_sorted(members, self.order)
    }

    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in self.elements() {
                let y = self.conj(g, x);
                if !assigned[y] {
                    assigned[y] = true;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// For each element, the index of its class in `conjugacy_classes` order.
    pub fn class_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.order];
        for (i, class) in self.conjugacy_classes().iter().enumerate() {
            for &x in class {
                index[x] = i;
            }
        }
        index
    }

    /// Members of the subgroup generated by `gens`, in discovery order.
    pub(crate) fn closure_members(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            next += 1;
        }
        members
    }

    /// Least subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        for &s in seed {
            if inside[s] {
                continue;
            }
            gens.push(s);
            for m in self.closure_members(&gens) {
                inside[m] = true;
            }
        }
        let members = self.elements().filter(|&x| inside[x]).collect();
        Subgroup::from_sorted(members, self.order)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&g| s.members.iter().all(|&x| s.contains(self.conj(g, x))))
    }

    /// Every normal subgroup, sorted by order then members.
    ///
    /// Grows the lattice from the trivial subgroup by closing with one
    /// conjugacy class at a time.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.order > NORMAL_SUBGROUP_CAP {
            return Err(Error::CapExceeded {
                cap: NORMAL_SUBGROUP_CAP,
            });
        }
        let classes = self.conjugacy_classes();
        let trivial = Subgroup::from_sorted(vec![0], self.order);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(trivial.members.clone());
        let mut found = vec![trivial];
        let mut next = 0;
        while next < found.len() {
            let n = found[next].clone();
            for class in &classes[1..] {
                if n.contains(class[0]) {
                    continue;
                }
                let seed: Vec<usize> = n.members.iter().chain(class.iter()).copied().collect();
                let bigger = self.subgroup_closure(&seed);
                if seen.insert(bigger.members.clone()) {
                    found.push(bigger);
                }
            }
            next += 1;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(found)
    }

    /// `{g : g S g⁻¹ = S}`
    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let members = self
            .elements()
            .filter(|&g| s.members.iter().all(|&x| s.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(members, self.order)
    }

    /// Quotient by a normal subgroup; cosets are numbered by least member.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if n.parent_order != self.order {
            return Err(Error::Mismatch("subgroup belongs to another group".into()));
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &m in &n.members {
                coset_of[self.mul(x, m)] = reps.len();
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut mul = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = coset_of[self.mul(a, b)] as u32;
            }
        }
        let label = format!("{}/N{}", self.label, n.order());
        let quotient = FiniteGroup::from_table(q, mul, label)?;
        let projection = GroupHom {
            source_order: self.order,
            target_order: q,
            image: coset_of,
        };
        Ok((quotient, projection))
    }

    /// The subgroup as a group in its own right; new id `i` is `members[i]`.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> FiniteGroup {
        let m = s.order();
        let mut pos = vec![u32::MAX; self.order];
        for (i, &x) in s.members.iter().enumerate() {
            pos[x] = i as u32;
        }
        let mut mul = vec![0u32; m * m];
        for (i, &a) in s.members.iter().enumerate() {
            for (j, &b) in s.members.iter().enumerate() {
                mul[i * m + j] = pos[self.mul(a, b)];
            }
        }
        let mut group = FiniteGroup::from_table_unchecked(m, mul, format!("{}<{}>", self.label, m))
            .expect("subgroup tables are valid");
        group.generators = group.default_generators();
        if let Some(perms) = &self.perms {
            group.perms = Some(s.members.iter().map(|&x| perms[x].clone()).collect());
        }
        group
    }

    /// Relabels elements: old id `x` becomes `relabel[x]`. The identity must
    /// stay at 0.
    pub fn relabel(&self, relabel: &[usize]) -> Result<FiniteGroup> {
        if relabel.len() != self.order || relabel[0] != 0 {
            return Err(Error::OutOfRange("relabeling must fix the identity".into()));
        }
        Perm::from_images(relabel.to_vec())?;
        let n = self.order;
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel[a] * n + relabel[b]] = relabel[self.mul(a, b)] as u32;
            }
        }
        let mut group = FiniteGroup::from_table_unchecked(n, mul, self.label.clone())?;
        group.generators = self.generators.iter().map(|&g| relabel[g]).collect();
        Ok(group)
    }
}

impl Subgroup {
    /// Validates that `ids` form a subgroup of `parent`.
    pub fn new(parent: &FiniteGroup, ids: &[usize]) -> Result<Self> {
        let mut members = ids.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= parent.order()) {
            return Err(Error::OutOfRange("subgroup member id".into()));
        }
        let s = Subgroup::from_sorted(members, parent.order());
        let closed = s.members.first() == Some(&0)
            && s.members.iter().all(|&a| {
                s.contains(parent.inv(a)) && s.members.iter().all(|&b| s.contains(parent.mul(a, b)))
            });
        if !closed {
            return Err(Error::InvalidTable("ids are not closed under the group law".into()));
        }
        Ok(s)
    }

    pub(crate) fn from_sorted(members: Vec<usize>, parent_order: usize) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            members,
            parent_order,
        }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup::from_sorted(parent.elements().collect(), parent.order())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

impl GroupHom {
    /// Checks the homomorphism property exhaustively.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() || image.iter().any(|&y| y >= target.order()) {
            return Err(Error::Mismatch("image array does not fit the groups".into()));
        }
        let ok = image[0] == 0
            && source.elements().all(|a| {
                source
                    .elements()
                    .all(|b| image[source.mul(a, b)] == target.mul(image[a], image[b]))
            });
        if !ok {
            return Err(Error::Mismatch("map is not a homomorphism".into()));
        }
        Ok(GroupHom {
            source_order: source.order(),
            target_order: target.order(),
            image,
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// Ids mapped to the identity.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source_order).filter(|&x| self.image[x] == 0).collect()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn two_part(n: usize) -> usize {
    n & n.wrapping_neg()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        close_generators(&[
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ])
        .unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let cycle: Vec<usize> = (0..n).collect();
        close_generators(&[Perm::from_cycles(n, &[&cycle]).unwrap()]).unwrap()
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = close_generators(&[]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn cyclic_closure_orders_by_powers() {
        let c3 = cyclic(3);
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.mul(1, 1), 2);
        assert_eq!(c3.element_order(1), 3);
        let c6 = cyclic(6);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(0), 1);
    }

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn domain_mismatch_and_cap() {
        let err = close_generators(&[Perm::identity(3), Perm::identity(4)]).unwrap_err();
        assert_eq!(err, Error::DomainMismatch { expected: 3, found: 4 });
        let big = [
            Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
        ];
        assert_eq!(close_generators_capped(&big, 100).unwrap_err(), Error::CapExceeded { cap: 100 });
    }

    #[test]
    fn closure_is_deterministic() {
        assert_eq!(s3(), s3());
    }

    #[test]
    fn normalizer_of_transposition_in_s3() {
        let g = s3();
        let t = g.find_perm(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let s = g.subgroup_closure(&[t]);
        assert_eq!(g.normalizer(&s).order(), 2);
        assert_eq!(g.normalizer(&Subgroup::whole(&g)).order(), 6);
    }

    #[test]
    fn normal_subgroups_of_cyclic_six() {
        let orders: Vec<usize> = cyclic(6).normal_subgroups().unwrap().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s3();
        let (q, proj) = g.quotient(&Subgroup::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(proj.kernel().len(), 6);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let t = g.find_perm(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let s = g.subgroup_closure(&[t]);
        assert_eq!(g.quotient(&s).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn table_validation_rejects_garbage() {
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], "bad").is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 0], "C2").is_ok());
        // Latin square with identity that is not associative (order 5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(FiniteGroup::from_table(5, loop5, "loop").is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = s3();
        let relabeled = g.relabel(&[0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(relabeled.order(), 6);
        assert_eq!(relabeled.mul(5, 5), [0, 5, 4, 3, 2, 1][g.mul(1, 1)]);
    }
}
