//! Concrete groups: cyclic, dihedral, quaternion, symmetric, alternating,
//! PSL(2,q), the Hessian group, products, and the Fermat / X_d automorphism
//! groups with their complex-conjugation involutions.
//!
//! Labels follow the order convention used by the group-expression parser:
//! `D8` is dihedral of order 8 and `Q16` generalized quaternion of order 16.

use crate::aut::InvolutiveAction;
use crate::error::{Error, Result};
use crate::group::{close_generators, FiniteGroup};
use crate::perm::Perm;
use crate::search::find_isomorphism;

/// Largest `s` accepted by [`build_quaternion`] (order 2^s within the closure cap).
pub const MAX_QUATERNION_EXPONENT: u32 = 12;

pub fn build_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclic group needs n ≥ 1".into()));
    }
    let cycle: Vec<usize> = (0..n).collect();
    let gens = if n == 1 {
        vec![]
    } else {
        vec![Perm::from_cycles(n, &[&cycle])?]
    };
    Ok(close_generators(&gens)?.with_label(format!("C{n}")))
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn build_dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::OutOfRange("dihedral group needs n ≥ 3".into()));
    }
    let rotation = Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    let reflection = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(close_generators(&[rotation, reflection])?.with_label(format!("D{}", 2 * n)))
}

/// Generalized quaternion group of order `2^s` in its left regular action.
///
/// Point `i + j·2^{s-1}` stands for `a^i b^j`; the relations are
/// `a^{2^{s-1}} = 1`, `b² = a^{2^{s-2}}`, `bab⁻¹ = a⁻¹`.
pub fn build_quaternion(s: u32) -> Result<FiniteGroup> {
    if !(3..=MAX_QUATERNION_EXPONENT).contains(&s) {
        return Err(Error::OutOfRange(format!(
            "quaternion group needs 3 ≤ s ≤ {MAX_QUATERNION_EXPONENT}"
        )));
    }
    let half = 1usize << (s - 1);
    let quarter = half / 2;
    let a = Perm::from_images(
        (0..2 * half)
            .map(|p| {
                let (i, j) = (p % half, p / half);
                (i + 1) % half + j * half
            })
            .collect(),
    )?;
    let b = Perm::from_images(
        (0..2 * half)
            .map(|p| {
                let (i, j) = (p % half, p / half);
                let neg = (half - i) % half;
                if j == 0 {
                    neg + half
                } else {
                    (neg + quarter) % half
                }
            })
            .collect(),
    )?;
    Ok(close_generators(&[a, b])?.with_label(format!("Q{}", 2 * half)))
}

pub fn build_symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::OutOfRange("symmetric group needs 1 ≤ n ≤ 6".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Perm::from_cycles(n, &[&cycle])?);
    }
    Ok(close_generators(&gens)?.with_label(format!("S{n}")))
}

pub fn build_alternating(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::OutOfRange("alternating group needs 1 ≤ n ≤ 6".into()));
    }
    let gens = (0..n.saturating_sub(2))
        .map(|i| Perm::from_cycles(n, &[&[i, i + 1, i + 2]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(close_generators(&gens)?.with_label(format!("A{n}")))
}

/// Arithmetic in F_7 or F_9 = F_3[w]/(w² + 1), elements as ids `0..q`.
struct SmallField {
    q: usize,
}

impl SmallField {
    fn decompose(&self, x: usize) -> (usize, usize) {
        if self.q == 9 {
            (x % 3, x / 3)
        } else {
            (x, 0)
        }
    }

    fn compose(&self, (a, b): (usize, usize)) -> usize {
        if self.q == 9 {
            a + 3 * b
        } else {
            a
        }
    }

    fn p(&self) -> usize {
        if self.q == 9 {
            3
        } else {
            self.q
        }
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let p = self.p();
        let ((a, b), (c, d)) = (self.decompose(x), self.decompose(y));
        self.compose(((a + c) % p, (b + d) % p))
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let p = self.p();
        let ((a, b), (c, d)) = (self.decompose(x), self.decompose(y));
        // (a + bw)(c + dw) with w² = -1
        let re = (a * c + p * p - (b * d) % p) % p;
        let im = (a * d + b * c) % p;
        self.compose((re, im))
    }

    fn neg(&self, x: usize) -> usize {
        let p = self.p();
        let (a, b) = self.decompose(x);
        self.compose(((p - a) % p, (p - b) % p))
    }

    fn inv(&self, x: usize) -> usize {
        (1..self.q).find(|&y| self.mul(x, y) == 1).expect("nonzero element")
    }
}

/// PSL(2, q) for q ∈ {7, 9} acting on the projective line; point `q` is ∞.
pub fn build_psl2(q: usize) -> Result<FiniteGroup> {
    if q != 7 && q != 9 {
        return Err(Error::OutOfRange(format!("PSL(2,{q}) is not supported; q must be 7 or 9")));
    }
    let f = SmallField { q };
    let infinity = q;
    let mobius = |a: usize, b: usize, c: usize, d: usize| -> Result<Perm> {
        let images = (0..=q)
            .map(|z| {
                if z == infinity {
                    if c == 0 {
                        infinity
                    } else {
                        f.mul(a, f.inv(c))
                    }
                } else {
                    let den = f.add(f.mul(c, z), d);
                    if den == 0 {
                        infinity
                    } else {
                        f.mul(f.add(f.mul(a, z), b), f.inv(den))
                    }
                }
            })
            .collect();
        Perm::from_images(images)
    };
    let minus_one = f.neg(1);
    let mut gens = vec![mobius(1, 1, 0, 1)?, mobius(0, minus_one, 1, 0)?];
    if q == 9 {
        gens.push(mobius(1, 3, 0, 1)?);
    }
    Ok(close_generators(&gens)?.with_label(format!("PSL(2,{q})")))
}

/// The Hessian group (F₃)² ⋊ SL(2,3) acting on the nine points of the
/// affine plane over F₃; point `3x + y` is `(x, y)`.
pub fn build_hessian216() -> Result<FiniteGroup> {
    let affine = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        Perm::from_images(
            (0..9)
                .map(|p| {
                    let (x, y) = f(p / 3, p % 3);
                    3 * (x % 3) + y % 3
                })
                .collect(),
        )
    };
    let gens = [
        affine(&|x, y| (x + 1, y))?,
        affine(&|x, y| (x, y + 1))?,
        affine(&|x, y| (x + y, y))?,
        affine(&|x, y| (x, x + y))?,
    ];
    Ok(close_generators(&gens)?.with_label("Hess216"))
}

/// Direct product; `(a, b)` has id `a·|G2| + b`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (a1, b1) = (x / n2, x % n2);
        for y in 0..n {
            let (a2, b2) = (y / n2, y % n2);
            mul[x * n + y] = (g1.mul(a1, a2) * n2 + g2.mul(b1, b2)) as u32;
        }
    }
    let gens = g1
        .generators()
        .iter()
        .map(|&a| a * n2)
        .chain(g2.generators().iter().copied())
        .collect();
    FiniteGroup::from_table(n, mul, format!("{} x {}", g1.label(), g2.label()))?.with_generators(gens)
}

/// A named homomorphism `K -> Aut(N)`, stored as one automorphism of `N`
/// (an image array) per element of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub name: String,
    pub description: String,
    realization: Vec<Vec<u32>>,
}

/// Names accepted by [`ActionSpec::named`].
pub const ACTION_NAMES: [&str; 4] = ["inversion", "coordperm", "gl23_rot", "sl23_q8"];

impl ActionSpec {
    /// Extends automorphisms given on the generators of `k` to all of `k`,
    /// checking that the result is a homomorphism into `Aut(n)`.
    pub fn from_generator_images(
        name: &str,
        description: &str,
        n: &FiniteGroup,
        k: &FiniteGroup,
        images: &[Vec<u32>],
    ) -> Result<Self> {
        if images.len() != k.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{name}: expected {} generator images, got {}",
                k.generators().len(),
                images.len()
            )));
        }
        for img in images {
            check_automorphism(n, img).map_err(|e| Error::InvalidAction(format!("{name}: {e}")))?;
        }
        let mut realization: Vec<Option<Vec<u32>>> = vec![None; k.order()];
        realization[0] = Some((0..n.order() as u32).collect());
        let mut queue = vec![0usize];
        let mut next = 0;
        while next < queue.len() {
            let x = queue[next];
            let ax = realization[x].clone().unwrap();
            for (&g, img) in k.generators().iter().zip(images) {
                let y = k.mul(x, g);
                let composed: Vec<u32> = img.iter().map(|&v| ax[v as usize]).collect();
                match &realization[y] {
                    None => {
                        realization[y] = Some(composed);
                        queue.push(y);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(format!(
                            "{name}: generator images do not define a homomorphism"
                        )));
                    }
                    Some(_) => {}
                }
            }
            next += 1;
        }
        Ok(ActionSpec {
            name: name.to_string(),
            description: description.to_string(),
            realization: realization.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Resolves a registry name against concrete `n` and `k`.
    ///
    /// `n` and `k` must be isomorphic to the groups the action is defined
    /// on; when their tables differ from the canonical models the action is
    /// transported along an isomorphism.
    pub fn named(name: &str, n: &FiniteGroup, k: &FiniteGroup) -> Result<Self> {
        match name {
            "inversion" => {
                if !n.is_abelian() {
                    return Err(Error::InvalidAction("inversion needs an abelian group".into()));
                }
                if k.order() != 2 {
                    return Err(Error::InvalidAction("inversion is an action of C2".into()));
                }
                let inv: Vec<u32> = n.elements().map(|x| n.inv(x) as u32).collect();
                Self::from_generator_images(name, "generator acts by x -> x^-1", n, k, &[inv])
            }
            "coordperm" => {
                let d = (n.order() as f64).sqrt().round() as usize;
                if d * d != n.order() || d < 2 {
                    return Err(Error::InvalidAction("coordperm needs N = (Z/d)^2".into()));
                }
                let model_n = cyclic_square(d)?;
                let model_k = build_symmetric(3)?;
                let perms = model_k.perms().expect("permutation built").to_vec();
                let images: Vec<Vec<u32>> = model_k
                    .generators()
                    .iter()
                    .map(|&g| coordinate_permutation(d, &perms[g]))
                    .collect();
                let model = Self::from_generator_images(
                    name,
                    "S3 permutes the coordinates of (Z/d)^3 modulo the diagonal",
                    &model_n,
                    &model_k,
                    &images,
                )?;
                model.transport(&model_n, &model_k, n, k)
            }
            "gl23_rot" => {
                let model_n = cyclic_square(3)?;
                let model_k = build_cyclic(4)?;
                let rot = linear_map(3, [[0, 2], [1, 0]]);
                let model = Self::from_generator_images(
                    name,
                    "generator of C4 acts on F3^2 by (x,y) -> (-y,x)",
                    &model_n,
                    &model_k,
                    &[rot],
                )?;
                model.transport(&model_n, &model_k, n, k)
            }
            "sl23_q8" => {
                let model_n = cyclic_square(3)?;
                let model_k = build_quaternion(3)?;
                let (a, b) = sl23_quaternion_pair();
                let images = [linear_map(3, a), linear_map(3, b)];
                let model = Self::from_generator_images(
                    name,
                    "Q8 acts on F3^2 as the quaternion subgroup of SL(2,3)",
                    &model_n,
                    &model_k,
                    &images,
                )?;
                model.transport(&model_n, &model_k, n, k)
            }
            other => Err(Error::InvalidAction(format!(
                "unknown action `{other}`; known actions: {}",
                ACTION_NAMES.join(", ")
            ))),
        }
    }

    fn transport(
        self,
        model_n: &FiniteGroup,
        model_k: &FiniteGroup,
        n: &FiniteGroup,
        k: &FiniteGroup,
    ) -> Result<Self> {
        if model_n.table() == n.table() && model_k.table() == k.table() {
            return Ok(self);
        }
        let unsupported = || {
            Error::InvalidAction(format!(
                "{} is defined on {} and {}, which do not match the given groups",
                self.name,
                model_n.label(),
                model_k.label()
            ))
        };
        let to_model_n = find_isomorphism(n, model_n).ok_or_else(unsupported)?;
        let to_model_k = find_isomorphism(k, model_k).ok_or_else(unsupported)?;
        let mut from_model_n = vec![0usize; n.order()];
        for (x, &y) in to_model_n.iter().enumerate() {
            from_model_n[y] = x;
        }
        let realization = k
            .elements()
            .map(|kk| {
                let model_aut = &self.realization[to_model_k[kk]];
                n.elements()
                    .map(|x| from_model_n[model_aut[to_model_n[x]] as usize] as u32)
                    .collect()
            })
            .collect();
        Ok(ActionSpec {
            realization,
            ..self
        })
    }

    /// The automorphism of `N` attached to element `k`.
    pub fn automorphism(&self, k: usize) -> &[u32] {
        &self.realization[k]
    }

    pub fn acting_order(&self) -> usize {
        self.realization.len()
    }
}

fn check_automorphism(n: &FiniteGroup, img: &[u32]) -> Result<()> {
    if img.len() != n.order() || img[0] != 0 {
        return Err(Error::InvalidAction("image array has the wrong shape".into()));
    }
    let mut seen = vec![false; n.order()];
    for &v in img {
        if v as usize >= n.order() || std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::InvalidAction("map is not a bijection".into()));
        }
    }
    for x in n.elements() {
        for &g in n.generators() {
            if img[n.mul(x, g)] as usize != n.mul(img[x] as usize, img[g] as usize) {
                return Err(Error::InvalidAction("map is not a homomorphism".into()));
            }
        }
    }
    Ok(())
}

/// `N ⋊ K`; `(n, k)` has id `n·|K| + k` and
/// `(n1, k1)(n2, k2) = (n1·k1(n2), k1k2)`.
pub fn semidirect(n: &FiniteGroup, k: &FiniteGroup, action: &ActionSpec) -> Result<FiniteGroup> {
    if action.acting_order() != k.order() || action.realization.iter().any(|a| a.len() != n.order()) {
        return Err(Error::InvalidAction(format!(
            "{} does not act from a group of order {} on a group of order {}",
            action.name,
            k.order(),
            n.order()
        )));
    }
    for kk in k.elements() {
        check_automorphism(n, action.automorphism(kk))?;
    }
    for &a in k.generators() {
        for b in k.elements() {
            let ab = action.automorphism(k.mul(a, b));
            let (fa, fb) = (action.automorphism(a), action.automorphism(b));
            if n.elements().any(|x| ab[x] != fa[fb[x] as usize]) {
                return Err(Error::InvalidAction(format!("{} is not a homomorphism", action.name)));
            }
        }
    }
    let (nn, nk) = (n.order(), k.order());
    let total = nn * nk;
    let mut mul = vec![0u32; total * total];
    for x in 0..total {
        let (n1, k1) = (x / nk, x % nk);
        let twist = action.automorphism(k1);
        for y in 0..total {
            let (n2, k2) = (y / nk, y % nk);
            mul[x * total + y] = (n.mul(n1, twist[n2] as usize) * nk + k.mul(k1, k2)) as u32;
        }
    }
    let gens = n
        .generators()
        .iter()
        .map(|&a| a * nk)
        .chain(k.generators().iter().copied())
        .collect();
    let label = format!("{}:{}@{}", n.label(), k.label(), action.name);
    FiniteGroup::from_table(total, mul, label)?.with_generators(gens)
}

fn cyclic_square(d: usize) -> Result<FiniteGroup> {
    let c = build_cyclic(d)?;
    Ok(direct_product(&c, &c)?.with_label(format!("C{d}^2")))
}

/// Automorphism of the model `(Z/m)²` (id `a·m + b`) given by a matrix.
fn linear_map(m: usize, mat: [[usize; 2]; 2]) -> Vec<u32> {
    (0..m * m)
        .map(|id| {
            let (a, b) = (id / m, id % m);
            let x = (mat[0][0] * a + mat[0][1] * b) % m;
            let y = (mat[1][0] * a + mat[1][1] * b) % m;
            (x * m + y) as u32
        })
        .collect()
}

/// Action of a coordinate permutation on `(Z/d)³ / diagonal ≅ (Z/d)²`,
/// where `(a, b)` stands for the class of `(a, b, 0)`.
fn coordinate_permutation(d: usize, pi: &Perm) -> Vec<u32> {
    (0..d * d)
        .map(|id| {
            let v = [id / d, id % d, 0];
            let mut w = [0usize; 3];
            for (i, &vi) in v.iter().enumerate() {
                w[pi.apply(i)] = vi;
            }
            let a = (w[0] + d - w[2]) % d;
            let b = (w[1] + d - w[2]) % d;
            (a * d + b) as u32
        })
        .collect()
}

type Mat3 = [[usize; 2]; 2];

fn mat_mul3(x: Mat3, y: Mat3) -> Mat3 {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % 3;
        }
    }
    z
}

/// Matrices `A, B ∈ SL(2,3)` with `A⁴ = 1`, `B² = A²`, `BAB⁻¹ = A⁻¹`;
/// they generate the quaternion subgroup.
fn sl23_quaternion_pair() -> (Mat3, Mat3) {
    let a: Mat3 = [[0, 2], [1, 0]];
    let a2 = mat_mul3(a, a);
    let a_inv = mat_mul3(a2, a);
    for e in 0..81 {
        let b: Mat3 = [[e % 3, (e / 3) % 3], [(e / 9) % 3, e / 27]];
        let det = (b[0][0] * b[1][1] + 9 - (b[0][1] * b[1][0]) % 3) % 3;
        if det != 1 || mat_mul3(b, b) != a2 {
            continue;
        }
        // B A = A⁻¹ B
        if mat_mul3(b, a) == mat_mul3(a_inv, b) && b != a && b != a_inv {
            return (a, b);
        }
    }
    unreachable!("SL(2,3) contains a quaternion subgroup")
}

/// Aut(F_d) ≅ (Z/d)² ⋊ S₃.
pub fn build_fermat_aut(d: usize) -> Result<FiniteGroup> {
    if d < 3 {
        return Err(Error::OutOfRange("Fermat curves need d ≥ 3".into()));
    }
    let n = cyclic_square(d)?;
    let k = build_symmetric(3)?;
    let action = ActionSpec::named("coordperm", &n, &k)?;
    Ok(semidirect(&n, &k, &action)?.with_label(format!("Fermat{d}")))
}

/// Complex conjugation on Aut(F_d): `(a, b; π) ↦ (−a, −b; π)`.
pub fn fermat_conjugation_involution(d: usize) -> Result<InvolutiveAction> {
    let g = build_fermat_aut(d)?;
    let nk = 6;
    let n = cyclic_square(d)?;
    let images = g
        .elements()
        .map(|x| n.inv(x / nk) * nk + x % nk)
        .collect();
    InvolutiveAction::new(&g, images)
}

/// Aut(X_d) ≅ C_d × C₂ with complex conjugation acting by inversion.
pub fn xd_group(d: usize) -> Result<(FiniteGroup, InvolutiveAction)> {
    if d < 4 || d % 2 == 1 {
        return Err(Error::OutOfRange("X_d needs an even d ≥ 4".into()));
    }
    let g = direct_product(&build_cyclic(d)?, &build_cyclic(2)?)?.with_label(format!("Xd{d}"));
    let phi = InvolutiveAction::inversion(&g)?;
    Ok((g, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Subgroup;

    fn involution_classes(g: &FiniteGroup) -> usize {
        g.conjugacy_classes()
            .iter()
            .filter(|c| g.element_order(c[0]) <= 2)
            .count()
    }

    #[test]
    fn small_builders() {
        assert_eq!(build_cyclic(1).unwrap().order(), 1);
        assert!(build_cyclic(0).is_err());
        assert!(build_dihedral(2).is_err());
        assert_eq!(build_symmetric(4).unwrap().order(), 24);
        assert_eq!(build_alternating(5).unwrap().order(), 60);
        assert_eq!(build_alternating(6).unwrap().order(), 360);
        assert_eq!(build_symmetric(1).unwrap().order(), 1);
        assert!(build_symmetric(7).is_err());
    }

    #[test]
    fn quaternion_has_a_unique_involution() {
        let q8 = build_quaternion(3).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.elements().filter(|&x| q8.element_order(x) == 2).count(), 1);
        let q32 = build_quaternion(5).unwrap();
        assert_eq!(q32.order(), 32);
        assert_eq!(q32.elements().filter(|&x| q32.element_order(x) == 2).count(), 1);
        assert!(build_quaternion(2).is_err());
    }

    #[test]
    fn dihedral_involution_classes() {
        for n in 3..=12 {
            let expected = if n % 2 == 1 { 2 } else { 4 };
            assert_eq!(involution_classes(&build_dihedral(n).unwrap()), expected, "n = {n}");
        }
    }

    #[test]
    fn psl2_orders() {
        let g7 = build_psl2(7).unwrap();
        assert_eq!(g7.order(), (7 * 7 * 7 - 7) / 2);
        assert_eq!(build_psl2(9).unwrap().order(), 360);
        assert!(build_psl2(5).is_err());
        assert_eq!(g7.normal_subgroups().unwrap().len(), 2);
    }

    #[test]
    fn hessian_group() {
        let h = build_hessian216().unwrap();
        assert_eq!(h.order(), 216);
        let translations: Vec<usize> = h
            .elements()
            .filter(|&x| {
                let p = &h.perms().unwrap()[x];
                // translations move every point by the same vector
                let (dx, dy) = ((p.apply(0) / 3), p.apply(0) % 3);
                (0..9).all(|q| p.apply(q) == 3 * ((q / 3 + dx) % 3) + (q % 3 + dy) % 3)
            })
            .collect();
        let t = Subgroup::new(&h, &translations).unwrap();
        assert_eq!(t.order(), 9);
        assert!(h.is_normal(&t));
        // exhaustive center scan
        let center: Vec<usize> = h
            .elements()
            .filter(|&z| h.elements().all(|g| h.mul(z, g) == h.mul(g, z)))
            .collect();
        assert_eq!(h.center().members(), center.as_slice());
        assert_eq!(center.len(), 1);
    }

    #[test]
    fn semidirect_products_of_case_c() {
        let n = cyclic_square(3).unwrap();
        let c4 = build_cyclic(4).unwrap();
        let q8 = build_quaternion(3).unwrap();
        let rot = ActionSpec::named("gl23_rot", &n, &c4).unwrap();
        let g36 = semidirect(&n, &c4, &rot).unwrap();
        assert_eq!(g36.order(), 36);
        let q = ActionSpec::named("sl23_q8", &n, &q8).unwrap();
        let g72 = semidirect(&n, &q8, &q).unwrap();
        assert_eq!(g72.order(), 72);
        let base: Vec<usize> = (0..9).map(|x| x * 8).collect();
        assert!(g72.is_normal(&Subgroup::new(&g72, &base).unwrap()));
    }

    #[test]
    fn product_with_trivial_group() {
        let c5 = build_cyclic(5).unwrap();
        let p = direct_product(&c5, &FiniteGroup::trivial()).unwrap();
        assert_eq!(p.table(), c5.table());
    }

    #[test]
    fn unknown_or_mismatched_actions_are_rejected() {
        let n = cyclic_square(3).unwrap();
        let c4 = build_cyclic(4).unwrap();
        assert!(matches!(ActionSpec::named("twist", &n, &c4), Err(Error::InvalidAction(_))));
        let c2 = build_cyclic(2).unwrap();
        assert!(ActionSpec::named("gl23_rot", &n, &c2).is_err());
        assert!(ActionSpec::named("inversion", &build_symmetric(3).unwrap(), &c2).is_err());
    }

    #[test]
    fn coordinate_permutation_respects_s3_relations() {
        for d in 3..=6 {
            let k = build_symmetric(3).unwrap();
            let perms = k.perms().unwrap();
            let t = coordinate_permutation(d, &perms[k.generators()[0]]);
            let r = coordinate_permutation(d, &perms[k.generators()[1]]);
            let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { b.iter().map(|&x| a[x as usize]).collect() };
            let id: Vec<u32> = (0..(d * d) as u32).collect();
            assert_eq!(compose(&t, &t), id);
            assert_eq!(compose(&r, &compose(&r, &r)), id);
            let tr = compose(&t, &r);
            assert_eq!(compose(&tr, &tr), id);
        }
    }

    #[test]
    fn fermat_orders_and_involution() {
        assert_eq!(build_fermat_aut(3).unwrap().order(), 54);
        assert_eq!(build_fermat_aut(5).unwrap().order(), 150);
        assert!(build_fermat_aut(2).is_err());
        let phi = fermat_conjugation_involution(3).unwrap();
        // ((1,0); id) has id (1·3 + 0)·6 = 18 and maps to ((2,0); id)
        assert_eq!(phi.apply(18), 36);
        for d in 3..=10 {
            assert!(fermat_conjugation_involution(d).is_ok(), "d = {d}");
        }
    }

    #[test]
    fn xd_inversion_fixes_exactly_the_involutions() {
        let (g, phi) = xd_group(6).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
        for x in g.elements() {
            assert_eq!(phi.apply(x) == x, g.element_order(x) <= 2);
        }
        assert!(xd_group(5).is_err());
        assert!(xd_group(2).is_err());
    }
}
