//! First cohomology of the order-2 group `G = {1, c}` with coefficients in
//! a finite group `H` on which `c` acts by an involutive automorphism `φ`.
//!
//! * `Z¹ = {f ∈ H : f·φ(f) = 1}`
//! * `H` acts on the right of `Z¹` by `f·h = h⁻¹ f φ(h)`; the orbits are
//!   the classes of `H¹`, and the stabilizer of `f` plays the role of the
//!   automorphism group of the corresponding real form.
//! * Counting orbits gives the mass identity `Σ 1/|Stab(f)| = |Z¹|/|H| ≤ 1`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::aut::{restrict_action, InvolutiveAction};
use crate::builders::{semidirect, ActionSpec};
use crate::builders::build_cyclic;
use crate::error::{Error, Result};
use crate::group::{two_part, FiniteGroup, Subgroup};
use crate::sylow::sylow2_containing;

/// Exact rational used for all mass quantities.
pub type Mass = Ratio<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSet {
    members: Vec<usize>,
}

impl CocycleSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: usize) -> bool {
        self.members.binary_search(&f).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyClass {
    /// Least cocycle in the orbit.
    pub representative: usize,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Summary {
    pub group_order: usize,
    pub classes: Vec<CohomologyClass>,
    pub z1_size: usize,
    pub h1_size: usize,
    /// `|Z¹| / |H|` in lowest terms.
    pub mass: Mass,
    /// Class index of each cocycle, `None` off `Z¹`.
    #[serde(skip)]
    class_of: Vec<Option<u32>>,
}

impl H1Summary {
    /// Index into `classes` of the class containing cocycle `f`.
    pub fn class_of(&self, f: usize) -> Option<usize> {
        self.class_of.get(f).copied().flatten().map(|c| c as usize)
    }
}

pub fn cocycle_set(h: &FiniteGroup, phi: &InvolutiveAction) -> CocycleSet {
    CocycleSet {
        members: h.elements().filter(|&f| h.mul(f, phi.apply(f)) == 0).collect(),
    }
}

/// `h⁻¹ f φ(h)`
#[inline]
pub fn twist(h: &FiniteGroup, phi: &InvolutiveAction, f: usize, x: usize) -> usize {
    h.mul(h.mul(h.inv(x), f), phi.apply(x))
}

/// Orbit decomposition of `Z¹` under the twisted action, with stabilizers
/// found by exhaustive scan.
pub fn h1(h: &FiniteGroup, phi: &InvolutiveAction) -> H1Summary {
    let z1 = cocycle_set(h, phi);
    let mut class_of: Vec<Option<u32>> = vec![None; h.order()];
    let mut classes = Vec::new();
    for &f in z1.members() {
        if class_of[f].is_some() {
            continue;
        }
        let index = classes.len() as u32;
        let mut orbit_size = 0;
        let mut stabilizer_order = 0;
        for x in h.elements() {
            let g = twist(h, phi, f, x);
            if g == f {
                stabilizer_order += 1;
            }
            if class_of[g].is_none() {
                class_of[g] = Some(index);
                orbit_size += 1;
            }
        }
        debug_assert_eq!(orbit_size * stabilizer_order, h.order());
        classes.push(CohomologyClass {
            representative: f,
            orbit_size,
            stabilizer_order,
        });
    }
    H1Summary {
        group_order: h.order(),
        h1_size: classes.len(),
        classes,
        z1_size: z1.len(),
        mass: Mass::new(z1.len() as u64, h.order() as u64),
        class_of,
    }
}

/// `|H¹|` for abelian `H` as `|Z¹| / |K|` with `K = {φ(h)h⁻¹}`.
pub fn h1_size_abelian(h: &FiniteGroup, phi: &InvolutiveAction) -> Result<usize> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let z1 = cocycle_set(h, phi).len();
    let mut boundary = vec![false; h.order()];
    for x in h.elements() {
        boundary[h.mul(phi.apply(x), h.inv(x))] = true;
    }
    let k = boundary.into_iter().filter(|&b| b).count();
    Ok(z1 / k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MassReport {
    /// `Σ 1/|Stab|` over the classes.
    pub sum: Mass,
    /// `|Z¹| / |H|`
    pub ratio: Mass,
    pub identity_holds: bool,
    pub equality_case: bool,
    /// `H` abelian and `φ` is inversion.
    pub abelian_inversion: bool,
    /// `equality_case ⇔ abelian_inversion`
    pub characterization_holds: bool,
}

pub fn mass_report(h: &FiniteGroup, phi: &InvolutiveAction) -> MassReport {
    mass_from_summary(&h1(h, phi), h, phi)
}

pub(crate) fn mass_from_summary(summary: &H1Summary, h: &FiniteGroup, phi: &InvolutiveAction) -> MassReport {
    let sum = summary
        .classes
        .iter()
        .fold(Mass::from_integer(0), |acc, c| acc + Mass::new(1, c.stabilizer_order as u64));
    let ratio = summary.mass;
    let equality_case = ratio == Mass::from_integer(1);
    let abelian_inversion = h.is_abelian() && phi.is_inversion(h);
    MassReport {
        sum,
        ratio,
        identity_holds: sum == ratio && ratio <= Mass::from_integer(1),
        equality_case,
        abelian_inversion,
        characterization_holds: equality_case == abelian_inversion,
    }
}

/// `K = H ⋊ ⟨σ₀⟩` where conjugation by `σ₀` restricts to `φ` on `H`.
#[derive(Clone, Debug)]
pub struct ExtensionGroup {
    pub group: FiniteGroup,
    /// Id in `K` of each element of `H`.
    pub embedding: Vec<usize>,
    pub sigma0: usize,
}

pub fn extension(h: &FiniteGroup, phi: &InvolutiveAction) -> Result<ExtensionGroup> {
    let c2 = build_cyclic(2)?;
    let action = ActionSpec::from_generator_images(
        "galois",
        "complex conjugation acting through the involution",
        h,
        &c2,
        &[phi.images().to_vec()],
    )?;
    let group = semidirect(h, &c2, &action)?.with_label(format!("{} : <s0>", h.label()));
    Ok(ExtensionGroup {
        embedding: h.elements().map(|x| 2 * x).collect(),
        sigma0: 1,
        group,
    })
}

/// A `φ`-stable Sylow 2-subgroup `H₂` with the restricted action and its
/// cohomology.
#[derive(Clone, Debug)]
pub struct SylowReduction {
    pub sylow: Subgroup,
    /// `H₂` as a group; id `i` is `sylow.members()[i]`.
    pub group: FiniteGroup,
    pub action: InvolutiveAction,
    pub summary: H1Summary,
}

/// Builds `K = H ⋊ ⟨σ₀⟩`, takes a Sylow 2-subgroup `S` of `K` containing
/// `σ₀`, and sets `H₂ = S ∩ H`.
pub fn stable_sylow2(h: &FiniteGroup, phi: &InvolutiveAction) -> Result<SylowReduction> {
    let ext = extension(h, phi)?;
    let s = sylow2_containing(&ext.group, ext.sigma0)?;
    let members: Vec<usize> = h.elements().filter(|&x| s.contains(ext.embedding[x])).collect();
    let sylow = Subgroup::new(h, &members)?;
    assert_eq!(sylow.order(), two_part(h.order()), "S ∩ H must be a Sylow 2-subgroup of H");
    let (group, action) = restrict_action(h, phi, &sylow)
        .expect("S ∩ H is normalized by σ₀, hence stable under the action");
    let summary = h1(&group, &action);
    Ok(SylowReduction {
        sylow,
        group,
        action,
        summary,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonMap {
    /// Target class in `H¹(G, H)` of each class of `H¹(G, H₂)`.
    pub map: Vec<usize>,
    pub surjective: bool,
    /// Number of `H¹(G, H₂)` classes over each class of `H¹(G, H)`.
    pub fibres: Vec<usize>,
    pub bound_holds: bool,
}

/// The natural map `H¹(G, H₂) → H¹(G, H)` sending `[f]` to the class of
/// `f` viewed as a cocycle of `H`.
pub fn comparison_map(h: &FiniteGroup, phi: &InvolutiveAction, red: &SylowReduction) -> Result<ComparisonMap> {
    if red.sylow.parent_order() != h.order() {
        return Err(Error::Mismatch("reduction was built for another group".into()));
    }
    if red.sylow.members().iter().any(|&x| !red.sylow.contains(phi.apply(x))) {
        return Err(Error::Mismatch("reduction was built for another action".into()));
    }
    let full = h1(h, phi);
    let map: Vec<usize> = red
        .summary
        .classes
        .iter()
        .map(|c| {
            let f = red.sylow.members()[c.representative];
            full.class_of(f).expect("cocycles of H₂ are cocycles of H")
        })
        .collect();
    let mut fibres = vec![0; full.h1_size];
    for &t in &map {
        fibres[t] += 1;
    }
    Ok(ComparisonMap {
        surjective: fibres.iter().all(|&n| n > 0),
        bound_holds: full.h1_size <= red.summary.h1_size,
        map,
        fibres,
    })
}

/// The mass identity computed inside `H₂` with stabilizers in `H₂`.
pub fn sylow_mass_report(red: &SylowReduction) -> MassReport {
    mass_from_summary(&red.summary, &red.group, &red.action)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Implication {
    pub premise: bool,
    pub conclusion: bool,
    pub holds: bool,
    /// Class index witnessing the premise, if any.
    pub witness: Option<usize>,
}

impl Implication {
    fn new(witness: Option<usize>, premise: bool, conclusion: bool) -> Self {
        Implication {
            premise,
            conclusion,
            holds: !premise || conclusion,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryAudit {
    /// Some stabilizer is trivial ⇒ `H` abelian and one class.
    pub trivial_stabilizer: Implication,
    /// Some stabilizer has odd order ⇒ `|H|` odd and one class.
    pub odd_stabilizer: Implication,
    /// `|H|` odd ⇒ one class.
    pub odd_order: Implication,
}

impl CorollaryAudit {
    pub fn passed(&self) -> bool {
        self.trivial_stabilizer.holds && self.odd_stabilizer.holds && self.odd_order.holds
    }
}

pub fn corollary_audit(h: &FiniteGroup, phi: &InvolutiveAction) -> CorollaryAudit {
    let summary = h1(h, phi);
    let single = summary.h1_size == 1;
    let trivial = summary.classes.iter().position(|c| c.stabilizer_order == 1);
    let odd = summary.classes.iter().position(|c| c.stabilizer_order % 2 == 1);
    let odd_order = h.order() % 2 == 1;
    CorollaryAudit {
        trivial_stabilizer: Implication::new(trivial, trivial.is_some(), h.is_abelian() && single),
        odd_stabilizer: Implication::new(odd, odd.is_some(), odd_order && single),
        odd_order: Implication::new(None, odd_order, single),
    }
}
