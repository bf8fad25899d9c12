//! One function per subcommand. Each returns the JSON document to print and whether
//! every mathematical check it performed passed.

use std::sync::Arc;

use hopfkit::cleft::{
    analyze_cleft, build_crossed_product, canonical_map_check, is_trivial_extension,
};
use hopfkit::exact_seq::five_term;
use hopfkit::galois::{
    extension_report, find_coalgebra_section, grouplike_invariants, h2_direct, h2_group, pi1,
    H2Backend,
};
use hopfkit::groups::{schur_multiplier, CentralExtensionModel};
use hopfkit::morphism::{hopf_kernel, kernel_pair};
use hopfkit::subquot::{abelianization, center, huq_commutator, quotient_by_normal};
use hopfkit::{
    zoo, CoalgebraMap, Field, FinGroup, FinHopfAlgebra, GroupHom, HopfMorphism, HopfSubalgebra,
    Scalar, Subspace,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::workspace::Workspace;

pub type Outcome = Result<(Value, bool), CliError>;

pub fn scalar_json(s: &Scalar) -> Value {
    match s.field() {
        Field::Rational => Value::String(s.to_string()),
        Field::Prime(_) => Value::from(s.to_i64().expect("residue fits in i64")),
    }
}

/// `{label: coefficient}` over the nonzero coordinates of `v`.
fn element_json(a: &FinHopfAlgebra, v: &[Scalar]) -> Value {
    let map: Map<String, Value> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (a.label(i), scalar_json(c)))
        .collect();
    Value::Object(map)
}

/// A basis label when `v` is a basis vector, otherwise the coordinate map.
fn basis_or_element(a: &FinHopfAlgebra, v: &[Scalar]) -> Value {
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nonzero.as_slice() {
        [i] if v[*i].is_one() => Value::String(a.label(*i)),
        _ => element_json(a, v),
    }
}

fn grouplike_basis(sub: &HopfSubalgebra) -> Value {
    json!(sub.grouplike_labels())
}

fn span_in(parent: &Arc<FinHopfAlgebra>, inclusion: &HopfMorphism) -> HopfSubalgebra {
    let m = inclusion.matrix();
    let span = Subspace::span(
        parent.field(),
        parent.dim(),
        (0..m.cols()).map(|c| m.column(c)),
    );
    HopfSubalgebra::from_subspace(parent.clone(), span)
}

fn invariants_json(a: &FinHopfAlgebra) -> Value {
    match grouplike_invariants(a) {
        Some((_, factors)) => json!(factors),
        None => Value::Null,
    }
}

pub fn check(ws: &Workspace, alg: &str) -> Outcome {
    let a = ws.algebra(alg)?;
    let report = a.verify_axioms();
    let ok = report.is_hopf();
    Ok((
        json!({
            "algebra": alg,
            "field": a.field().to_string(),
            "dim": a.dim(),
            "axioms": report,
            "hopf": ok,
        }),
        ok,
    ))
}

pub fn kernel(ws: &Workspace, mor: &str) -> Outcome {
    let m = ws.morphism(mor)?;
    let k = hopf_kernel(&m.hopf);
    Ok((
        json!({
            "morphism": mor,
            "dim": k.dim(),
            "grouplike_basis": grouplike_basis(&k),
            "flags": k.flags(),
        }),
        true,
    ))
}

pub fn eqpair(ws: &Workspace, mor: &str) -> Outcome {
    let m = ws.morphism(mor)?;
    let kp = kernel_pair(&m.hopf)?;
    let alg = kp.algebra();
    Ok((
        json!({
            "morphism": mor,
            "dim": alg.dim(),
            "grouplikes": alg.grouplikes().len(),
            "hopf": alg.verify_axioms().is_hopf(),
        }),
        true,
    ))
}

pub fn commutator(ws: &Workspace, x: &str, y: &str) -> Outcome {
    let (x, y) = (ws.subalgebra(x)?, ws.subalgebra(y)?);
    let c = huq_commutator(&x, &y)?;
    Ok((
        json!({ "dim": c.dim(), "grouplike_basis": grouplike_basis(&c) }),
        true,
    ))
}

pub fn center_cmd(ws: &Workspace, alg: &str) -> Outcome {
    let z = center(&ws.algebra(alg)?);
    Ok((
        json!({
            "dim": z.dim(),
            "grouplike_basis": grouplike_basis(&z),
            "flags": z.flags(),
        }),
        true,
    ))
}

pub fn quotient(ws: &Workspace, alg: &str, sub: &str) -> Outcome {
    let a = ws.algebra(alg)?;
    let k = ws.subalgebra(sub)?;
    if **k.parent() != *a {
        return Err(CliError::invalid(
            "subalgebra",
            sub,
            format!("not a subalgebra of {alg}"),
        ));
    }
    let q = quotient_by_normal(&k)?;
    Ok((
        json!({
            "dim": q.algebra.dim(),
            "ideal_dim": q.ideal.dim(),
            "representatives": q.representatives.iter().map(|&i| a.label(i)).collect::<Vec<_>>(),
            "grouplike_invariants": invariants_json(&q.algebra),
        }),
        true,
    ))
}

pub fn abelianize(ws: &Workspace, alg: &str) -> Outcome {
    let q = abelianization(&ws.algebra(alg)?)?;
    Ok((
        json!({
            "dim": q.algebra.dim(),
            "invariant_factors": invariants_json(&q.algebra),
        }),
        true,
    ))
}

fn grouplike_group(a: &FinHopfAlgebra) -> Value {
    match FinGroup::from_grouplikes(a) {
        Some((g, _)) => json!({
            "order": g.order(),
            "abelian": g.is_abelian(),
            "max_element_order": (0..g.order()).map(|x| g.element_order(x)).max(),
            "invariant_factors": g.abelian_invariants().map(|i| i.invariant_factors),
        }),
        None => Value::Null,
    }
}

pub fn crossed(ws: &Workspace, action: &str, cocycle: &str) -> Outcome {
    let (act, sig) = (ws.action(action)?, ws.cocycle(cocycle)?);
    let cp = build_crossed_product(&act, &sig)?;
    let report = cp.algebra.verify_axioms();
    let ok = report.is_hopf();
    Ok((
        json!({
            "dim": cp.algebra.dim(),
            "axioms": report,
            "grouplikes": cp.algebra.grouplikes().len(),
            "grouplike_group": grouplike_group(&cp.algebra),
            "commutative": report.commutative,
        }),
        ok,
    ))
}

pub fn cleft_analyze(ws: &Workspace, mor: &str, section: &str) -> Outcome {
    let m = ws.morphism(mor)?;
    let s = ws.section(section)?;
    let d = analyze_cleft(&m.hopf, &s.map)?;
    let (a, h) = (m.hopf.dom().clone(), m.hopf.cod().clone());
    let n = h.dim();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let value = d.cocycle.apply(&h.basis(x), &h.basis(y));
            let in_a = d.b.inclusion.apply(&value);
            table.push(json!({
                "g": h.label(x),
                "h": h.label(y),
                "sigma": basis_or_element(&a, &in_a),
            }));
        }
    }
    let can = canonical_map_check(&d);
    let iso = d.psi.is_isomorphism();
    let ok = iso && can.passed();
    Ok((
        json!({
            "morphism": mor,
            "section": section,
            "kernel_dim": d.kernel.dim(),
            "kernel_grouplike_basis": grouplike_basis(&d.kernel),
            "is_trivial": is_trivial_extension(&d),
            "action_is_trivial": d.action.matrix() == hopfkit::cleft::MeasuringAction::trivial(h.clone(), d.b.algebra.clone()).matrix(),
            "psi_isomorphism": iso,
            "crossed_dim": d.crossed.algebra.dim(),
            "canonical_map": can,
            "sigma": table,
        }),
        ok,
    ))
}

fn section_for(
    ws: &Workspace,
    mor: &str,
    section: Option<&str>,
) -> Result<Option<CoalgebraMap>, CliError> {
    match section {
        Some(s) => {
            let sec = ws.section(s)?;
            if sec.morphism != mor {
                return Err(CliError::invalid(
                    "section",
                    s,
                    format!("belongs to {}, not {mor}", sec.morphism),
                ));
            }
            Ok(Some(sec.map))
        }
        None => Ok(None),
    }
}

pub fn extension_report_cmd(ws: &Workspace, mor: &str, section: Option<&str>) -> Outcome {
    let m = ws.morphism(mor)?;
    let s = section_for(ws, mor, section)?;
    let r = extension_report(&m.hopf, s.as_ref())?;
    Ok((serde_json::to_value(&r).expect("serializable"), true))
}

pub fn pi1_cmd(ws: &Workspace, mor: &str, section: Option<&str>) -> Outcome {
    let m = ws.morphism(mor)?;
    let s = match section_for(ws, mor, section)? {
        Some(s) => s,
        None => find_coalgebra_section(&m.hopf)?,
    };
    let r = pi1(&m.hopf, Some(&s))?;
    let sub = span_in(m.hopf.dom(), &r.inclusion);
    Ok((
        json!({
            "dim": r.algebra.dim(),
            "grouplike_basis": grouplike_basis(&sub),
            "invariant_factors": invariants_json(&r.algebra),
        }),
        true,
    ))
}

/// Stem presentation of `q` among the standard extensions, preferring the largest domain;
/// the identity presentation when none is larger.
pub fn stem_presentation(q: &Arc<FinGroup>) -> (String, GroupHom) {
    let mut best = ("id".to_string(), GroupHom::identity(q));
    for (name, phi) in zoo::extensions() {
        if **phi.cod() != **q || phi.dom().order() <= best.1.dom().order() {
            continue;
        }
        if CentralExtensionModel::new(phi.clone()).is_ok_and(|e| e.is_stem()) {
            best = (name.to_string(), phi);
        }
    }
    best
}

fn h2_json(backend: H2Backend, presentation: Option<&str>, a: &FinHopfAlgebra) -> Value {
    json!({
        "backend": backend,
        "presentation": presentation,
        "dim": a.dim(),
        "invariant_factors": invariants_json(a),
    })
}

pub fn h2(ws: &Workspace, target: &str, backend: H2Backend, max_order: usize) -> Outcome {
    // a morphism target is used as the presentation; a group target gets a stem one
    let (name, phi, hopf) = match ws.morphism(target) {
        Ok(m) => (target.to_string(), m.group, Some(m.hopf)),
        Err(CliError::UnknownReference { .. }) => {
            let q = ws.group(target)?;
            let (name, phi) = stem_presentation(&q);
            (name, Some(phi), None)
        }
        Err(e) => return Err(e),
    };
    match backend {
        H2Backend::Group => {
            let phi = phi.ok_or_else(|| {
                CliError::Usage(format!(
                    "group backend needs a group target; {target} is a plain matrix"
                ))
            })?;
            let (alg, _) = h2_group(phi.cod(), ws.field, max_order)?;
            Ok((h2_json(backend, None, &alg), true))
        }
        H2Backend::Direct => {
            let f = match hopf {
                Some(f) => f,
                None => {
                    let phi = phi.expect("group target");
                    let dom = Arc::new(hopfkit::group_algebra(phi.dom(), ws.field));
                    let cod = Arc::new(hopfkit::group_algebra(phi.cod(), ws.field));
                    phi.linearize(&dom, &cod)?
                }
            };
            let s = find_coalgebra_section(&f)?;
            let formula = h2_direct(&f, Some(&s))?;
            Ok((h2_json(backend, Some(&name), formula.algebra()), true))
        }
    }
}

pub fn schur(ws: &Workspace, group: &str, max_order: usize) -> Outcome {
    let g = ws.group(group)?;
    let m = schur_multiplier(&g, max_order)?;
    let ok = m.boundary_squared_zero;
    Ok((
        json!({ "invariant_factors": m.invariants.invariant_factors }),
        ok,
    ))
}

pub fn fiveterm(ws: &Workspace, mor: &str, max_order: usize) -> Outcome {
    let m = ws.morphism(mor)?;
    let phi = m.group.ok_or_else(|| {
        CliError::Usage(format!(
            "fiveterm needs a group homomorphism; {mor} is a plain matrix"
        ))
    })?;
    let ft = five_term(&phi, ws.field, max_order)?;
    let report = ft.sequence.check_exactness();
    let ok = report.is_complex() && report.all_exact();
    let dims: Vec<usize> = (0..ft.sequence.names().len())
        .map(|i| ft.sequence.node(i).dim())
        .collect();
    Ok((
        json!({
            "morphism": mor,
            "names": ft.sequence.names(),
            "dims": dims,
            "exactness": report,
            "complex": report.is_complex(),
            "exact": report.all_exact(),
        }),
        ok,
    ))
}
