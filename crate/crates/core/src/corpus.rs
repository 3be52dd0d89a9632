//! Fixed collections of groups used by the audits.

use crate::builders::{
    build_alternating, build_cyclic, build_dihedral, build_fermat_aut, build_hessian216, build_psl2,
    build_quaternion, build_symmetric, direct_product, semidirect, xd_group, ActionSpec,
};
use crate::cyclo::cyc_mat;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::search::find_embedding;

/// Largest group order in [`corpus`].
pub const CORPUS_MAX_ORDER: usize = 432;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// Group expression that rebuilds the entry.
    pub spec: String,
    pub group: FiniteGroup,
}

fn entry(spec: impl Into<String>, group: FiniteGroup) -> CorpusEntry {
    CorpusEntry {
        spec: spec.into(),
        group,
    }
}

pub fn c3_squared() -> Result<FiniteGroup> {
    let c3 = build_cyclic(3)?;
    direct_product(&c3, &c3)
}

/// `(Z/3)² ⋊ C4` with a generator acting as `(x, y) ↦ (−y, x)`.
pub fn c3sq_c4() -> Result<FiniteGroup> {
    let n = c3_squared()?;
    let k = build_cyclic(4)?;
    semidirect(&n, &k, &ActionSpec::named("gl23_rot", &n, &k)?)
}

/// `(Z/3)² ⋊ Q8` with `Q8 ⊂ SL(2, 3)` acting linearly.
pub fn c3sq_q8() -> Result<FiniteGroup> {
    let n = c3_squared()?;
    let k = build_quaternion(3)?;
    semidirect(&n, &k, &ActionSpec::named("sl23_q8", &n, &k)?)
}

/// The groups of the main theorem's last case.
pub fn case_c_groups() -> Result<Vec<CorpusEntry>> {
    Ok(vec![
        entry("A5", build_alternating(5)?),
        entry("PSL(2,7)", build_psl2(7)?),
        entry("A6", build_alternating(6)?),
        entry("Hess216", build_hessian216()?),
        entry("C3^2:C4@gl23_rot", c3sq_c4()?),
        entry("C3^2:Q8@sl23_q8", c3sq_q8()?),
    ])
}

/// Whether the two semidirect products of case (c) embed into the
/// Hessian group, in the order `C3^2:C4`, `C3^2:Q8`.
pub fn hessian_embeddings() -> Result<[bool; 2]> {
    let hess = build_hessian216()?;
    Ok([
        find_embedding(&c3sq_c4()?, &hess).is_some(),
        find_embedding(&c3sq_q8()?, &hess).is_some(),
    ])
}

/// Every builder family, all of order at most [`CORPUS_MAX_ORDER`].
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(entry(format!("C{n}"), build_cyclic(n)?));
    }
    out.push(entry("C15", build_cyclic(15)?));
    let c2 = build_cyclic(2)?;
    let c4 = build_cyclic(4)?;
    out.push(entry("C2 x C2", direct_product(&c2, &c2)?));
    out.push(entry("C2 x C4", direct_product(&c2, &c4)?));
    out.push(entry("C4 x C4", direct_product(&c4, &c4)?));
    out.push(entry("C2 x C2 x C2", direct_product(&direct_product(&c2, &c2)?, &c2)?));
    out.push(entry("C3^2", c3_squared()?));
    for n in 3..=8 {
        out.push(entry(format!("D{}", 2 * n), build_dihedral(n)?));
    }
    for s in 3..=5 {
        out.push(entry(format!("Q{}", 1 << s), build_quaternion(s)?));
    }
    for n in 3..=5 {
        out.push(entry(format!("S{n}"), build_symmetric(n)?));
    }
    for n in 4..=6 {
        out.push(entry(format!("A{n}"), build_alternating(n)?));
    }
    out.push(entry("PSL(2,7)", build_psl2(7)?));
    out.push(entry("PSL(2,9)", build_psl2(9)?));
    out.push(entry("Hess216", build_hessian216()?));
    out.push(entry("C3^2:C4@gl23_rot", c3sq_c4()?));
    out.push(entry("C3^2:Q8@sl23_q8", c3sq_q8()?));
    out.push(entry("S3 x C2", direct_product(&build_symmetric(3)?, &c2)?));
    for d in 3..=8 {
        out.push(entry(format!("Fermat {d}"), build_fermat_aut(d)?));
    }
    for d in (4..=10).step_by(2) {
        out.push(entry(format!("Xd {d}"), xd_group(d)?.0));
    }
    for s in 3..=5 {
        for t in 1..=3 {
            if t == 1 && s == 3 {
                continue;
            }
            out.push(entry(format!("CycMat({s},{t})"), cyc_mat(s, t)?.group().clone()));
        }
    }
    debug_assert!(out.iter().all(|e| e.group.order() <= CORPUS_MAX_ORDER));
    Ok(out)
}

/// Invariant-factor lists `d₁ | d₂ | … | d_r` (all `dᵢ > 1`) of the
/// abelian groups of order `n`; the trivial group gets the empty list.
pub fn abelian_invariant_factors(n: usize) -> Vec<Vec<usize>> {
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
        p += 1;
    }
    let mut out = vec![Vec::new()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for part in partitions(e, e) {
            for base in &out {
                next.push(merge_factors(base, p, &part));
            }
        }
        out = next;
    }
    out
}

/// Partitions of `n` into parts `≤ max`, largest part first.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Folds the `p`-primary cyclic factors `p^k` (k from `part`) into the
/// invariant factors of `base`, aligned from the largest factor down.
fn merge_factors(base: &[usize], p: usize, part: &[u32]) -> Vec<usize> {
    let len = base.len().max(part.len());
    let mut out = vec![1usize; len];
    for (i, &d) in base.iter().rev().enumerate() {
        out[len - 1 - i] *= d;
    }
    for (i, &k) in part.iter().enumerate() {
        out[len - 1 - i] *= p.pow(k);
    }
    out
}

pub fn abelian_group(factors: &[usize]) -> Result<FiniteGroup> {
    let mut g = build_cyclic(1)?;
    for &d in factors {
        g = direct_product(&g, &build_cyclic(d)?)?;
    }
    let label = if factors.is_empty() {
        "C1".to_string()
    } else {
        factors.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x ")
    };
    Ok(g.with_label(label))
}

/// One group per isomorphism type of abelian group of order `≤ max`.
pub fn abelian_groups_up_to(max: usize) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for n in 1..=max {
        for f in abelian_invariant_factors(n) {
            out.push(abelian_group(&f)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_counts() {
        assert_eq!(abelian_invariant_factors(1), vec![Vec::<usize>::new()]);
        assert_eq!(abelian_invariant_factors(8).len(), 3);
        assert_eq!(abelian_invariant_factors(72).len(), 6);
        assert!(abelian_invariant_factors(72).contains(&vec![6, 12]));
        assert_eq!(abelian_invariant_factors(64).len(), 11);
        for f in abelian_invariant_factors(48) {
            assert!(f.windows(2).all(|w| w[1] % w[0] == 0), "{f:?}");
        }
    }

    #[test]
    fn abelian_group_orders() {
        let g = abelian_group(&[2, 6]).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
        assert_eq!(g.label(), "C2 x C6");
    }

    #[test]
    fn case_c_orders() {
        let orders: Vec<usize> = case_c_groups().unwrap().iter().map(|e| e.group.order()).collect();
        assert_eq!(orders, vec![60, 168, 360, 216, 36, 72]);
    }
}
