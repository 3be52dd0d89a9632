//! The invariant `m(H)` and the bounds built on it.

use serde::{Deserialize, Serialize};

use crate::aut::{automorphism_group, for_each_involutive_automorphism, involution_class_reps, AutGroup};
use crate::builders::{build_cyclic, build_dihedral, build_quaternion, direct_product};
use crate::cohomology::{h1, h1_size_abelian};
use crate::cyclo::{cyc_mat, projective_quotient};
use crate::error::{Error, Result};
use crate::group::{two_part, FiniteGroup, Subgroup};
use crate::search::is_isomorphic_small;
use crate::sylow::{frattini_rank_2group, sylow2_containing};

/// Largest `n` for which [`dihedral_m`] also enumerates.
pub const DIHEDRAL_ENUMERATION_LIMIT: usize = 16;

/// Printed next to every [`gl2_sample_audit`] result.
pub const SAMPLED_EVIDENCE: &str = "sampled evidence, not a proof";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MEntry {
    pub class_index: usize,
    pub aut_id: usize,
    pub class_size: usize,
    pub h1_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MReport {
    pub label: String,
    pub group_order: usize,
    pub aut_order: usize,
    pub entries: Vec<MEntry>,
    pub m_value: usize,
    /// Class index of the first maximizer.
    pub witness: usize,
    pub trivial_count: usize,
}

pub fn m_invariant(h: &FiniteGroup) -> Result<MReport> {
    let a = automorphism_group(h)?;
    m_invariant_with_aut(h, &a)
}

pub fn m_invariant_with_aut(h: &FiniteGroup, a: &AutGroup) -> Result<MReport> {
    if a.base_order() != h.order() {
        return Err(Error::Mismatch("automorphism group belongs to another group".into()));
    }
    let entries: Vec<MEntry> = involution_class_reps(a)
        .into_iter()
        .map(|c| MEntry {
            class_index: c.index,
            aut_id: c.aut_id,
            class_size: c.class_size,
            h1_size: h1(h, &c.action).h1_size,
        })
        .collect();
    let (witness, m_value) = entries
        .iter()
        .map(|e| (e.class_index, e.h1_size))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    let trivial_count = trivial_action_h1_count(h);
    debug_assert_eq!(entries[0].h1_size, trivial_count);
    Ok(MReport {
        label: h.label().to_string(),
        group_order: h.order(),
        aut_order: a.order(),
        entries,
        m_value,
        witness,
        trivial_count,
    })
}

/// `m(H)` by visiting every involutive automorphism, without `Aut(H)`.
/// Abelian groups use the quotient formula for each `|H¹|`.
pub fn m_by_enumeration(h: &FiniteGroup) -> usize {
    let abelian = h.is_abelian();
    let mut best = 0;
    for_each_involutive_automorphism(h, &mut |phi| {
        let size = if abelian {
            h1_size_abelian(h, phi).expect("abelian")
        } else {
            h1(h, phi).h1_size
        };
        best = best.max(size);
    });
    best
}

/// Number of conjugacy classes whose elements have order at most 2.
pub fn trivial_action_h1_count(h: &FiniteGroup) -> usize {
    h.conjugacy_classes()
        .iter()
        .filter(|c| h.element_order(c[0]) <= 2)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianCheck {
    pub label: String,
    pub m_value: usize,
    pub sylow_rank: u32,
    pub predicted: usize,
    pub agree: bool,
}

pub fn m_abelian_check(h: &FiniteGroup) -> Result<AbelianCheck> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let m_value = m_by_enumeration(h);
    let sylow = sylow2_containing(h, 0)?;
    debug_assert_eq!(sylow.order(), two_part(h.order()));
    let sylow_rank = frattini_rank_2group(&h.subgroup_as_group(&sylow))?;
    let predicted = 1 << sylow_rank;
    Ok(AbelianCheck {
        label: h.label().to_string(),
        m_value,
        sylow_rank,
        predicted,
        agree: m_value == predicted,
    })
}

pub fn is_characteristic(a: &AutGroup, k: &Subgroup) -> bool {
    let gens = a.group().generators();
    gens.iter()
        .all(|&g| k.members().iter().all(|&x| k.contains(a.map(g)[x] as usize)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharsubReport {
    pub is_characteristic: bool,
    pub m_group: usize,
    pub m_sub: usize,
    pub m_quotient: usize,
    pub holds: bool,
}

pub fn charsub_inequality(h: &FiniteGroup, k: &Subgroup) -> Result<CharsubReport> {
    if k.parent_order() != h.order() {
        return Err(Error::Mismatch("subgroup of another group".into()));
    }
    if !h.is_normal(k) {
        return Err(Error::NotNormal);
    }
    let a = automorphism_group(h)?;
    if !is_characteristic(&a, k) {
        return Err(Error::NotCharacteristic);
    }
    let m_group = m_invariant_with_aut(h, &a)?.m_value;
    let m_sub = m_invariant(&h.subgroup_as_group(k))?.m_value;
    let m_quotient = m_invariant(&h.quotient(k)?.0)?.m_value;
    Ok(CharsubReport {
        is_characteristic: true,
        m_group,
        m_sub,
        m_quotient,
        holds: m_group <= m_sub * m_quotient,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralCheck {
    pub n: usize,
    pub closed_form: usize,
    pub enumerated: Option<usize>,
}

impl DihedralCheck {
    pub fn agrees(&self) -> bool {
        self.enumerated.is_none_or(|m| m == self.closed_form)
    }
}

/// `m(D_{2n})`: 2 for odd `n`, 4 for even `n`, enumerated for `n ≤ 16`.
pub fn dihedral_m(n: usize) -> Result<DihedralCheck> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("dihedral index {n} < 3")));
    }
    let closed_form = if n % 2 == 1 { 2 } else { 4 };
    let enumerated = if n <= DIHEDRAL_ENUMERATION_LIMIT {
        Some(m_invariant(&build_dihedral(n)?)?.m_value)
    } else {
        None
    };
    Ok(DihedralCheck {
        n,
        closed_form,
        enumerated,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeResidue {
    Odd,
    TwoModFour,
    ZeroModFour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveBoundResult {
    pub degree: usize,
    pub bound: usize,
    pub residue: DegreeResidue,
}

/// Upper bound on the number of real forms of a smooth plane curve of
/// degree `d ≥ 4`.
pub fn plane_curve_bound(d: usize) -> Result<CurveBoundResult> {
    if d < 4 {
        return Err(Error::OutOfRange(format!("degree {d} < 4")));
    }
    let (bound, residue) = match d % 4 {
        1 | 3 => (2, DegreeResidue::Odd),
        2 => (4, DegreeResidue::TwoModFour),
        _ => (8, DegreeResidue::ZeroModFour),
    };
    Ok(CurveBoundResult {
        degree: d,
        bound,
        residue,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyAudit {
    pub s: u32,
    pub t: u32,
    pub order: usize,
    pub quotient_order: usize,
    pub quotient_dihedral: bool,
    /// Cyclic subgroups of order `2^{s-1}`.
    pub cyclic_count: usize,
    pub cyclic_characteristic: bool,
    /// The order-8 case is settled by classification, so uniqueness is
    /// only required for `s ≥ 4`.
    pub uniqueness_required: bool,
    pub m_value: usize,
}

impl FamilyAudit {
    pub fn passed(&self) -> bool {
        let half = 1usize << (self.s - 1);
        self.order == 1 << self.s
            && self.quotient_order == half
            && self.quotient_dihedral
            && self.cyclic_count >= 1
            && (!self.uniqueness_required || (self.cyclic_count == 1 && self.cyclic_characteristic))
            && self.m_value <= 4
    }
}

/// Dihedral group of order `2^k` with the Klein four group for `k = 2`.
fn dihedral_model(order: usize) -> Result<FiniteGroup> {
    if order == 4 {
        let c2 = build_cyclic(2)?;
        direct_product(&c2, &c2)
    } else {
        build_dihedral(order / 2)
    }
}

pub fn lemma47_audit(s: u32) -> Result<Vec<FamilyAudit>> {
    if !(3..=6).contains(&s) {
        return Err(Error::OutOfRange(format!("audit defined for 3 ≤ s ≤ 6, got {s}")));
    }
    let first = if s == 3 { 2 } else { 1 };
    (first..=3).map(|t| audit_family(s, t)).collect()
}

fn audit_family(s: u32, t: u32) -> Result<FamilyAudit> {
    let m = cyc_mat(s, t)?;
    let h = m.group();
    let (q, _) = projective_quotient(&m)?;
    let half = 1usize << (s - 1);
    let quotient_dihedral = q.order() == half && is_isomorphic_small(&q, &dihedral_model(half)?)?;
    let cyclic: Vec<Subgroup> = {
        let mut found: Vec<Subgroup> = Vec::new();
        for x in h.elements().filter(|&x| h.element_order(x) == half) {
            let c = h.subgroup_closure(&[x]);
            if !found.contains(&c) {
                found.push(c);
            }
        }
        found
    };
    let a = automorphism_group(h)?;
    let cyclic_characteristic = cyclic.len() == 1 && is_characteristic(&a, &cyclic[0]);
    Ok(FamilyAudit {
        s,
        t,
        order: h.order(),
        quotient_order: q.order(),
        quotient_dihedral,
        cyclic_count: cyclic.len(),
        cyclic_characteristic,
        uniqueness_required: s >= 4,
        m_value: m_invariant_with_aut(h, &a)?.m_value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleEntry {
    pub label: String,
    pub m_value: usize,
    pub holds: bool,
}

pub const GL2_SAMPLE_BOUND: usize = 8;

/// Finite subgroups of GL(2, C) used by [`gl2_sample_audit`].
pub fn gl2_samples() -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for n in [1, 2, 3, 4, 6, 8, 12] {
        out.push(build_cyclic(n)?);
    }
    for (a, b) in [(2, 2), (2, 4), (4, 4), (2, 6), (3, 6), (4, 8)] {
        out.push(direct_product(&build_cyclic(a)?, &build_cyclic(b)?)?);
    }
    for s in 3..=5 {
        out.push(build_quaternion(s)?);
    }
    for s in 3..=5 {
        for t in 1..=3 {
            if t == 1 && s == 3 {
                continue;
            }
            out.push(cyc_mat(s, t)?.group().clone());
        }
    }
    Ok(out)
}

/// Checks `m ≤ 8` on [`gl2_samples`]. The result is [`SAMPLED_EVIDENCE`].
pub fn gl2_sample_audit() -> Result<Vec<SampleEntry>> {
    gl2_samples()?
        .iter()
        .map(|g| {
            let m_value = m_invariant(g)?.m_value;
            Ok(SampleEntry {
                label: g.label().to_string(),
                m_value,
                holds: m_value <= GL2_SAMPLE_BOUND,
            })
        })
        .collect()
}

/// Groups among `groups` whose `m` exceeds `threshold`, with their values.
/// Groups whose automorphism group is out of reach are skipped.
pub fn explore_m_above(groups: &[FiniteGroup], threshold: usize) -> Vec<(String, usize)> {
    groups
        .iter()
        .filter_map(|g| m_invariant(g).ok().map(|r| (g.label().to_string(), r.m_value)))
        .filter(|&(_, m)| m > threshold)
        .collect()
}
