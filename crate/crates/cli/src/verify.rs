//! Reproduction runner: every published value, recomputed.

use rayon::prelude::*;
use realforms_core::aut::{brute_force_automorphisms, restrict_action, AutGroup};
use realforms_core::builders::{
    build_alternating, build_dihedral, build_fermat_aut, build_psl2, build_quaternion, build_symmetric,
    fermat_conjugation_involution, xd_group,
};
use realforms_core::cohomology::{
    comparison_map, corollary_audit, h1, h1_size_abelian, mass_report, stable_sylow2, sylow_mass_report,
};
use realforms_core::corpus::{abelian_groups_up_to, case_c_groups, corpus, hessian_embeddings};
use realforms_core::invariants::{
    dihedral_m, gl2_sample_audit, lemma47_audit, m_abelian_check, m_invariant_with_aut, plane_curve_bound,
    SAMPLED_EVIDENCE,
};
use realforms_core::sylow::sylow2_containing;
use realforms_core::{involution_class_reps, is_isomorphic_small, InvolutiveAction, Perm, Subgroup};
use serde::{Deserialize, Serialize};

use crate::commands::{CliError, Context};

pub const CASES: [&str; 14] = [
    "a5", "abelian", "case-c", "corollary", "curve", "dihedral", "fermat", "gl2", "mass", "oracle", "psl27", "q8",
    "sylow", "xd",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub case: String,
    pub check: String,
    pub expected: String,
    pub computed: String,
    /// The statement being reproduced.
    pub claim: String,
    pub pass: bool,
}

struct Sink {
    case: &'static str,
    claim: &'static str,
    out: Vec<Check>,
}

impl Sink {
    fn new(case: &'static str, claim: &'static str) -> Self {
        Sink {
            case,
            claim,
            out: Vec::new(),
        }
    }

    fn push(&mut self, check: impl Into<String>, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.out.push(Check {
            case: self.case.into(),
            check: check.into(),
            pass: expected == computed,
            expected,
            computed,
            claim: self.claim.into(),
        });
    }

    fn claim(mut self, claim: &'static str) -> Self {
        self.claim = claim;
        self
    }
}

type CaseResult = Result<Vec<Check>, CliError>;

pub fn run_case(ctx: &Context, name: &str) -> CaseResult {
    match name {
        "a5" => a5(),
        "abelian" => abelian(),
        "case-c" => case_c(ctx),
        "corollary" => corpus_pairs(ctx, "corollary"),
        "curve" => curve(),
        "dihedral" => dihedral(),
        "fermat" => fermat(),
        "gl2" => gl2(),
        "mass" => corpus_pairs(ctx, "mass"),
        "oracle" => oracle(ctx),
        "psl27" => psl27(ctx),
        "q8" => q8(ctx),
        "sylow" => corpus_pairs(ctx, "sylow"),
        "xd" => xd(),
        other => Err(CliError::Usage(format!("unknown case {other:?}"))),
    }
}

/// Runs the selected cases concurrently; output is ordered by case name.
pub fn verify_paper(ctx: &Context, filter: Option<&str>) -> Result<Vec<Check>, CliError> {
    let names: Vec<&str> = match filter {
        Some(f) if CASES.contains(&f) => vec![f],
        Some(f) => {
            return Err(CliError::Usage(format!(
                "unknown case {f:?}; expected one of {}",
                CASES.join(", ")
            )))
        }
        None => CASES.to_vec(),
    };
    let per_case: Vec<CaseResult> = names.par_iter().map(|n| run_case(ctx, n)).collect();
    let mut out = Vec::new();
    for r in per_case {
        out.extend(r?);
    }
    Ok(out)
}

fn class_of(a: &AutGroup, images: &[u32]) -> Option<usize> {
    let id = a.find(images)?;
    let cls = a.group().class_index();
    involution_class_reps(a).iter().position(|c| cls[c.aut_id] == cls[id])
}

fn q8(ctx: &Context) -> CaseResult {
    let mut s = Sink::new("q8", "quaternion example: three actions with 2, 3, 1 real forms");
    let g = build_quaternion(3)?;
    let a = ctx.aut(&g)?;
    let reps = involution_class_reps(&a);
    let (i, j) = (g.generators()[0], g.generators()[1]);
    let minus_one = g.mul(i, i);
    // i ↦ i, j ↦ −j   and   i ↦ j, j ↦ i
    let fixtures = [
        ("phi1 identity", vec![i, j]),
        ("phi2 i->i, j->-j", vec![i, g.mul(minus_one, j)]),
        ("phi3 i->j, j->i", vec![j, i]),
    ];
    for ((label, images), expected) in fixtures.iter().zip([2, 3, 1]) {
        let computed = extend(&g, &[i, j], images)
            .and_then(|m| class_of(&a, &m))
            .map(|k| h1(&g, &reps[k].action).h1_size.to_string())
            .unwrap_or_else(|| "not an automorphism".into());
        s.push(format!("#H1 {label}"), expected, computed);
    }
    s.push("m(Q8)", 3, m_invariant_with_aut(&g, &a)?.m_value);
    s.push("|Aut(Q8)|", 24, a.order());
    s.push("Aut(Q8) isomorphic to S4", true, is_isomorphic_small(a.group(), &build_symmetric(4)?)?);
    s.push("involution classes in Aut(Q8)", 3, reps.len());
    Ok(s.out)
}

/// Extends generator images to an automorphism, as image array.
fn extend(g: &realforms_core::FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; g.order()];
    map[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = g.mul(map[x] as usize, t) as u32;
            if map[y] == u32::MAX {
                map[y] = v;
                queue.push_back(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    InvolutiveAction::new(g, map.iter().map(|&x| x as usize).collect()).ok()?;
    Some(map)
}

fn dihedral() -> CaseResult {
    let mut s = Sink::new("dihedral", "m(D_2n) = 2 for odd n, 4 for even n");
    for n in 3..=16 {
        let d = dihedral_m(n)?;
        let expected = if n % 2 == 1 { 2 } else { 4 };
        s.push(format!("closed form n={n}"), expected, d.closed_form);
        s.push(
            format!("enumerated n={n}"),
            expected,
            d.enumerated.map_or("-".into(), |m| m.to_string()),
        );
    }
    Ok(s.out)
}

fn abelian() -> CaseResult {
    let mut s = Sink::new("abelian", "m(H) = 2^l(H2) for abelian H");
    for g in abelian_groups_up_to(100)? {
        let c = m_abelian_check(&g)?;
        s.push(format!("m({})", c.label), c.predicted, c.m_value);
    }
    Ok(s.out)
}

/// Mass, Sylow and corollary checks, one line per corpus group.
fn corpus_pairs(ctx: &Context, which: &'static str) -> CaseResult {
    let claim = match which {
        "mass" => "sum of 1/|Stab| equals |Z1|/|H| <= 1, equality iff abelian with inversion",
        "sylow" => "comparison map onto H1(G,H) from a stable Sylow 2-subgroup; Sylow mass identity",
        _ => "trivial stabilizer, odd stabilizer and odd order corollaries",
    };
    let mut s = Sink::new(which, claim);
    for e in corpus()? {
        let g = &e.group;
        let a = ctx.aut(g)?;
        let classes = involution_class_reps(&a);
        let mut passed = 0;
        for c in &classes {
            let phi = &c.action;
            let ok = match which {
                "mass" => {
                    let r = mass_report(g, phi);
                    r.identity_holds && r.characterization_holds
                }
                "sylow" => {
                    let red = stable_sylow2(g, phi)?;
                    let cm = comparison_map(g, phi, &red)?;
                    let sm = sylow_mass_report(&red);
                    let strict = red.group.is_abelian() || sm.ratio < realforms_core::cohomology::Mass::from_integer(1);
                    cm.surjective && cm.bound_holds && sm.identity_holds && strict
                }
                _ => corollary_audit(g, phi).passed(),
            };
            passed += ok as usize;
        }
        s.push(
            format!("{} ({} actions)", e.spec, classes.len()),
            format!("{} ok", classes.len()),
            format!("{passed} ok"),
        );
    }
    Ok(s.out)
}

fn case_c(ctx: &Context) -> CaseResult {
    let mut s = Sink::new("case-c", "m(H) = 2 for the groups of the last case of the curve theorem");
    let groups = case_c_groups()?;
    let stated_counts = [Some(3), Some(3), Some(4), Some(3), None, Some(3)];
    let mut aut_orders = Vec::new();
    for (e, count) in groups.iter().zip(stated_counts) {
        let a = ctx.aut(&e.group)?;
        let r = m_invariant_with_aut(&e.group, &a)?;
        s.push(format!("m({})", e.spec), 2, r.m_value);
        if let Some(count) = count {
            s.push(format!("involution classes in Aut({})", e.spec), count, r.entries.len());
        }
        aut_orders.push(a.order());
    }
    let mut s = s.claim("automorphism groups of the Hessian-related groups");
    s.push("|Aut(Hess216)|", 432, aut_orders[3]);
    s.push("|Aut(C3^2:Q8)|", 432, aut_orders[5]);
    let [c4, q8] = hessian_embeddings()?;
    let mut s = s.claim("both semidirect products are subgroups of the Hessian group");
    s.push("C3^2:C4 embeds in Hess216", true, c4);
    s.push("C3^2:Q8 embeds in Hess216", true, q8);
    Ok(s.out)
}

fn a5() -> CaseResult {
    let mut s = Sink::new("a5", "Z1 of the Klein four Sylow subgroup under conjugation by a transposition");
    let g = build_alternating(5)?;
    let p = |cycles: &[&[usize]]| Perm::from_cycles(5, cycles).expect("valid cycles");
    let t = p(&[&[0, 1]]);
    let perms = g.perms().expect("permutation group");
    let images = perms.iter().map(|x| g.find_perm(&t.compose(x).compose(&t)).unwrap()).collect();
    let phi = InvolutiveAction::new(&g, images)?;
    let klein: Vec<usize> = [p(&[]), p(&[&[0, 1], &[2, 3]]), p(&[&[0, 2], &[1, 3]]), p(&[&[0, 3], &[1, 2]])]
        .iter()
        .map(|x| g.find_perm(x).unwrap())
        .collect();
    let k = Subgroup::new(&g, &klein)?;
    let (sub, res) = restrict_action(&g, &phi, &k)?;
    let subperms = sub.perms().expect("permutation group");
    let z1: Vec<String> = sub
        .elements()
        .filter(|&f| sub.mul(f, res.apply(f)) == 0)
        .map(|f| subperms[f].to_string())
        .collect();
    s.push("Z1 on points 0..4", "(), (0 1)(2 3)", z1.join(", "));
    s.push("#H1 bounded by Sylow", true, h1(&g, &phi).h1_size <= h1(&sub, &res).h1_size);
    Ok(s.out)
}

fn gl2() -> CaseResult {
    let mut s = Sink::new("gl2", "2-subgroups of GL(2,C) with dihedral image in PGL(2,C) have m <= 4");
    for order in 3..=6 {
        for f in lemma47_audit(order)? {
            let tag = format!("s={} t={}", f.s, f.t);
            s.push(format!("{tag} order"), 1usize << f.s, f.order);
            s.push(format!("{tag} projective image dihedral of order"), 1usize << (f.s - 1), if f.quotient_dihedral { f.quotient_order } else { 0 });
            if f.uniqueness_required {
                s.push(format!("{tag} unique characteristic cyclic subgroup"), true, f.cyclic_count == 1 && f.cyclic_characteristic);
            }
            s.push(format!("{tag} m <= 4"), true, f.m_value <= 4);
        }
    }
    let mut s = s.claim(SAMPLED_EVIDENCE);
    for e in gl2_sample_audit()? {
        s.push(format!("m({}) = {} <= 8", e.label, e.m_value), true, e.holds);
    }
    Ok(s.out)
}

fn psl27(ctx: &Context) -> CaseResult {
    let mut s = Sink::new("psl27", "PSL(2,7): dihedral Sylow 2-subgroup and m = 2");
    let g = build_psl2(7)?;
    let inv = g.elements().find(|&x| g.element_order(x) == 2).expect("even order");
    let p = sylow2_containing(&g, inv)?;
    s.push("Sylow 2-subgroup isomorphic to D8", true, is_isomorphic_small(&g.subgroup_as_group(&p), &build_dihedral(4)?)?);
    s.push("m(PSL(2,7))", 2, m_invariant_with_aut(&g, &ctx.aut(&g)?)?.m_value);
    Ok(s.out)
}

fn fermat() -> CaseResult {
    let mut s = Sink::new("fermat", "Fermat curves have 2 real forms for odd d and 3 for even d");
    for d in 4..=10 {
        let g = build_fermat_aut(d)?;
        let phi = fermat_conjugation_involution(d)?;
        s.push(format!("#H1 Fermat {d}"), if d % 2 == 1 { 2 } else { 3 }, h1(&g, &phi).h1_size);
    }
    Ok(s.out)
}

fn xd() -> CaseResult {
    let mut s = Sink::new("xd", "the curves X_d have four real forms");
    for d in (4..=10).step_by(2) {
        let (g, phi) = xd_group(d)?;
        s.push(format!("#H1 Xd {d}"), 4, h1(&g, &phi).h1_size);
    }
    Ok(s.out)
}

fn curve() -> CaseResult {
    let mut s = Sink::new("curve", "real forms of smooth plane curves: 2 / 4 / 8 by degree mod 4");
    for d in 4..=13 {
        let expected = match d % 4 {
            1 | 3 => 2,
            2 => 4,
            _ => 8,
        };
        s.push(format!("bound d={d}"), expected, plane_curve_bound(d)?.bound);
    }
    Ok(s.out)
}

fn oracle(ctx: &Context) -> CaseResult {
    let mut s = Sink::new("oracle", "reference computations agree with the fast ones");
    for e in corpus()? {
        let g = &e.group;
        let a = ctx.aut(g)?;
        if g.order() <= 24 {
            s.push(format!("Aut({}) equals brute force", e.spec), true, brute_force_automorphisms(g)? == a.maps());
        }
        if g.is_abelian() {
            let classes = involution_class_reps(&a);
            let mut agree = true;
            for c in &classes {
                agree &= h1(g, &c.action).h1_size == h1_size_abelian(g, &c.action)?;
            }
            s.push(format!("{} orbit count equals quotient formula", e.spec), true, agree);
        }
    }
    Ok(s.out)
}
