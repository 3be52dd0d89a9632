use std::sync::atomic::{AtomicUsize, Ordering};

use realforms_core::aut::inner_automorphisms;
use realforms_core::cohomology::{comparison_map, h1, mass_report, stable_sylow2, sylow_mass_report, Mass, MassReport};
use realforms_core::invariants::{m_invariant_with_aut, plane_curve_bound, trivial_action_h1_count};
use realforms_core::sylow::sylow2_containing;
use realforms_core::{automorphism_group, involution_class_reps, AutGroup, FiniteGroup, InvolutionClass};
use serde_json::{json, Value};

use crate::cache::AutCache;
use crate::expr::{parse_group_spec, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] realforms_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

/// Shared state for one invocation.
#[derive(Debug, Default)]
pub struct Context {
    cache: Option<AutCache>,
    hits: AtomicUsize,
}

impl Context {
    pub fn new(cache: Option<AutCache>) -> Self {
        Context {
            cache,
            hits: AtomicUsize::new(0),
        }
    }

    pub fn cache_hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn aut(&self, g: &FiniteGroup) -> realforms_core::Result<AutGroup> {
        match &self.cache {
            None => automorphism_group(g),
            Some(c) => {
                let (a, hit) = c.get_or_compute(g)?;
                if hit {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                }
                Ok(a)
            }
        }
    }
}

/// Command output plus whether every verification in it passed.
pub struct Outcome {
    pub results: Value,
    pub ok: bool,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome { results, ok: true }
    }
}

pub fn ratio(m: &Mass) -> String {
    if *m.denom() == 1 {
        m.numer().to_string()
    } else {
        format!("{}/{}", m.numer(), m.denom())
    }
}

pub fn build(spec: &str) -> Result<FiniteGroup, CliError> {
    let e = parse_group_spec(spec)?;
    e.build().map_err(|err| match err {
        realforms_core::Error::OutOfRange(msg) => CliError::Usage(msg),
        other => CliError::Compute(other),
    })
}

fn select(classes: &[InvolutionClass], index: usize) -> Result<&InvolutionClass, CliError> {
    classes.get(index).ok_or_else(|| {
        CliError::Usage(format!(
            "involution class {index} out of range; this group has {} classes (0..{})",
            classes.len(),
            classes.len() - 1
        ))
    })
}

pub fn info(spec: &str) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let sylow = sylow2_containing(&g, 0)?;
    Ok(Outcome::ok(json!({
        "label": g.label(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center_order": g.center().order(),
        "exponent": g.exponent(),
        "conjugacy_classes": g.conjugacy_classes().len(),
        "classes_of_order_at_most_2": trivial_action_h1_count(&g),
        "sylow2_order": sylow.order(),
    })))
}

pub fn aut(ctx: &Context, spec: &str) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let a = ctx.aut(&g)?;
    let inner = inner_automorphisms(&g, &a)?;
    let classes: Vec<Value> = involution_class_reps(&a)
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "aut_id": c.aut_id,
                "class_size": c.class_size,
                "inner": inner.contains(c.aut_id),
                "inversion": c.action.is_inversion(&g),
            })
        })
        .collect();
    Ok(Outcome::ok(json!({
        "label": g.label(),
        "order": g.order(),
        "aut_order": a.order(),
        "inner_order": inner.order(),
        "involution_classes": classes,
    })))
}

fn h1_json(g: &FiniteGroup, c: &InvolutionClass) -> Value {
    let s = h1(g, &c.action);
    json!({
        "involution": c.index,
        "z1_size": s.z1_size,
        "h1_size": s.h1_size,
        "mass": ratio(&s.mass),
        "classes": s.classes.iter().map(|k| json!({
            "representative": k.representative,
            "orbit_size": k.orbit_size,
            "stabilizer_order": k.stabilizer_order,
        })).collect::<Vec<_>>(),
    })
}

pub fn h1_cmd(ctx: &Context, spec: &str, involution: Option<usize>) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let a = ctx.aut(&g)?;
    let classes = involution_class_reps(&a);
    let chosen: Vec<&InvolutionClass> = match involution {
        None => classes.iter().collect(),
        Some(i) => vec![select(&classes, i)?],
    };
    Ok(Outcome::ok(json!({
        "label": g.label(),
        "order": g.order(),
        "actions": chosen.iter().map(|c| h1_json(&g, c)).collect::<Vec<_>>(),
    })))
}

pub fn m(ctx: &Context, spec: &str) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let a = ctx.aut(&g)?;
    let r = m_invariant_with_aut(&g, &a)?;
    Ok(Outcome::ok(json!({
        "label": r.label,
        "order": r.group_order,
        "aut_order": r.aut_order,
        "m_value": r.m_value,
        "witness": r.witness,
        "trivial_count": r.trivial_count,
        "entries": r.entries.iter().map(|e| json!({
            "involution": e.class_index,
            "aut_id": e.aut_id,
            "class_size": e.class_size,
            "h1_size": e.h1_size,
        })).collect::<Vec<_>>(),
    })))
}

fn mass_json(r: &MassReport) -> Value {
    json!({
        "sum": ratio(&r.sum),
        "ratio": ratio(&r.ratio),
        "identity_holds": r.identity_holds,
        "equality_case": r.equality_case,
        "abelian_inversion": r.abelian_inversion,
        "characterization_holds": r.characterization_holds,
    })
}

pub fn mass(ctx: &Context, spec: &str, involution: usize) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let a = ctx.aut(&g)?;
    let classes = involution_class_reps(&a);
    let c = select(&classes, involution)?;
    let r = mass_report(&g, &c.action);
    let mut results = json!({"label": g.label(), "order": g.order(), "involution": involution});
    merge(&mut results, mass_json(&r));
    Ok(Outcome {
        results,
        ok: r.identity_holds && r.characterization_holds,
    })
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

pub fn sylow_reduce(ctx: &Context, spec: &str, involution: usize) -> Result<Outcome, CliError> {
    let g = build(spec)?;
    let a = ctx.aut(&g)?;
    let classes = involution_class_reps(&a);
    let c = select(&classes, involution)?;
    let red = stable_sylow2(&g, &c.action)?;
    let cm = comparison_map(&g, &c.action, &red)?;
    let sm = sylow_mass_report(&red);
    let ok = cm.surjective && cm.bound_holds && sm.identity_holds;
    Ok(Outcome {
        results: json!({
            "label": g.label(),
            "order": g.order(),
            "involution": involution,
            "sylow_order": red.sylow.order(),
            "sylow_members": red.sylow.members(),
            "sylow_abelian": red.group.is_abelian(),
            "h1_group": cm.fibres.len(),
            "h1_sylow": red.summary.h1_size,
            "comparison": {
                "map": cm.map,
                "fibres": cm.fibres,
                "surjective": cm.surjective,
                "bound_holds": cm.bound_holds,
            },
            "sylow_mass": mass_json(&sm),
        }),
        ok,
    })
}

pub fn curve_bound(d: usize) -> Result<Outcome, CliError> {
    let r = plane_curve_bound(d).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Outcome::ok(serde_json::to_value(r).expect("serializable")))
}
